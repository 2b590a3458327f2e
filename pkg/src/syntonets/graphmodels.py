"""Reference network ensembles used as anchors in the projection space.

Five classical models (ER, WS, BA, GEO, SBM), each parameterized so that the
sampled mean degree matches a target.  WS grows from a 2D toroidal lattice
and GEO from a jittered 2D lattice; BA uses preferential attachment with a
fractional extra edge so non-even target degrees remain reachable.  All
generation is deterministic given the spec's seed.
"""

import random
from dataclasses import dataclass, replace

import networkx as nx
import numpy as np

MODEL_KINDS = ("er", "ws", "ba", "geo", "sbm")

#: Default rewiring probabilities of the two small-world anchors (WS1, WS2).
WS_REWIRING = (0.01, 0.1)

#: SBM intra/inter connection probability ratio.
SBM_RATIO = 4.0

# Toroidal lattice neighborhoods: squared Euclidean offset radius -> degree.
_LATTICE_NEIGHBORHOODS = ((1, 4), (2, 8), (4, 12), (5, 20), (8, 24))

_GEO_TRIAL_DRAWS = 20
_GEO_TOLERANCE = 0.02


@dataclass(frozen=True)
class ModelSpec:
    """Fully determined recipe for one sample of one model kind."""

    kind: str
    n: int
    target_mean_degree: float
    seed: int = 0
    # er: edge probability; ws: rewiring probability
    p: float | None = None
    # ba: attachments per arriving node, plus one extra with probability extra_edge_p
    m: int | None = None
    extra_edge_p: float = 0.0
    # ws/geo lattice dimensions
    rows: int | None = None
    cols: int | None = None
    # ws: squared neighborhood radius on the torus; edge count to trim to
    neighbor_sq: int | None = None
    edge_target: int | None = None
    # geo: Euclidean connection radius
    radius: float | None = None
    # sbm: two block sizes and the connection probabilities
    block_sizes: tuple[int, int] | None = None
    p_in: float | None = None
    p_out: float | None = None

    def __post_init__(self):
        if self.kind not in MODEL_KINDS:
            raise ValueError(f"kind must be one of {MODEL_KINDS}, got {self.kind!r}")
        if self.n < 4:
            raise ValueError(f"need at least 4 nodes, got {self.n}")
        if not 0 < self.target_mean_degree < self.n - 1:
            raise ValueError(
                f"target mean degree {self.target_mean_degree} out of range for n={self.n}"
            )
        for name in ("p", "p_in", "p_out", "extra_edge_p"):
            value = getattr(self, name)
            if value is not None and not 0.0 <= value <= 1.0:
                raise ValueError(f"{name} must be a probability, got {value}")


def near_square_dims(n: int) -> tuple[int, int]:
    """Factor n into rows x cols with rows <= cols, as close to square as possible."""
    rows = int(np.sqrt(n))
    while n % rows != 0:
        rows -= 1
    return rows, n // rows


def fit_to_degree(
    kind: str,
    n: int,
    target_mean_degree: float,
    seed: int = 0,
    rewiring_p: float = 0.1,
) -> ModelSpec:
    """Choose model parameters so samples match the target mean degree."""
    spec = ModelSpec(kind=kind, n=n, target_mean_degree=target_mean_degree, seed=seed)
    edge_target = round(target_mean_degree * n / 2.0)
    if kind == "er":
        return replace(spec, p=target_mean_degree / (n - 1))
    if kind == "ba":
        m = round(target_mean_degree / 2.0)
        if m < 1 or m >= n - 1:
            raise ValueError(f"BA attachment count {m} infeasible for n={n}")
        # Growth alone yields m + (n-m-1)*m edges; spread the remainder as a
        # per-arrival extra edge so the expected edge count hits the target.
        base_edges = m + (n - m - 1) * m
        extra = (edge_target - base_edges) / (n - m - 1)
        if not 0.0 <= extra < 1.0:
            raise ValueError(
                f"BA cannot reach mean degree {target_mean_degree} at n={n} "
                f"(extra edge probability {extra:.3f} out of [0, 1))"
            )
        return replace(spec, m=m, extra_edge_p=extra)
    if kind == "ws":
        rows, cols = near_square_dims(n)
        for neighbor_sq, degree in _LATTICE_NEIGHBORHOODS:
            if degree >= target_mean_degree:
                break
        else:
            raise ValueError(
                f"target mean degree {target_mean_degree} exceeds the largest "
                f"lattice neighborhood ({_LATTICE_NEIGHBORHOODS[-1][1]})"
            )
        _check_lattice_dims(rows, cols, neighbor_sq)
        return replace(
            spec, p=rewiring_p, rows=rows, cols=cols,
            neighbor_sq=neighbor_sq, edge_target=edge_target,
        )
    if kind == "geo":
        rows, cols = near_square_dims(n)
        radius = _fit_geo_radius(n, rows, cols, target_mean_degree, seed)
        return replace(spec, rows=rows, cols=cols, radius=radius)
    if kind == "sbm":
        half = n // 2
        sizes = (half, n - half)
        p_out = target_mean_degree / (SBM_RATIO * (n / 2.0 - 1.0) + n / 2.0)
        p_in = SBM_RATIO * p_out
        if p_in > 1.0:
            raise ValueError(f"SBM intra-block probability {p_in:.3f} exceeds 1")
        return replace(spec, block_sizes=sizes, p_in=p_in, p_out=p_out)
    raise ValueError(f"unknown model kind {kind!r}")


def generate(spec: ModelSpec) -> nx.Graph:
    """Draw one simple undirected graph from the spec's ensemble."""
    if spec.kind == "er":
        _require(spec.p is not None, "ER needs an edge probability p")
        g = nx.gnp_random_graph(spec.n, spec.p, seed=spec.seed)
    elif spec.kind == "ba":
        g = _generate_ba(spec)
    elif spec.kind == "ws":
        g = _generate_ws(spec)
    elif spec.kind == "geo":
        g = _generate_geo(spec)
    else:
        _require(
            spec.block_sizes is not None and spec.p_in is not None and spec.p_out is not None,
            "SBM needs block sizes and p_in/p_out",
        )
        probs = [[spec.p_in, spec.p_out], [spec.p_out, spec.p_in]]
        g = nx.stochastic_block_model(list(spec.block_sizes), probs, seed=spec.seed)
        g.graph.pop("partition", None)
    g.graph["model"] = spec.kind
    return g


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ValueError(message)


def _generate_ba(spec: ModelSpec) -> nx.Graph:
    _require(spec.m is not None, "BA needs an attachment count m")
    m = spec.m
    _require(1 <= m < spec.n, f"BA attachment count {m} infeasible for n={spec.n}")
    rng = random.Random(spec.seed)
    g = nx.star_graph(m)
    # Preferential attachment: sample targets from a list holding each node
    # once per incident edge.
    repeated = [node for edge in g.edges() for node in edge]
    for new in range(m + 1, spec.n):
        k = m + (1 if spec.extra_edge_p > 0 and rng.random() < spec.extra_edge_p else 0)
        k = min(k, new)
        targets = set()
        while len(targets) < k:
            targets.add(repeated[rng.randrange(len(repeated))])
        for t in sorted(targets):
            g.add_edge(new, t)
            repeated.extend((new, t))
    return g


def _check_lattice_dims(rows: int, cols: int, neighbor_sq: int) -> None:
    reach = int(np.sqrt(neighbor_sq))
    if min(rows, cols) < 2 * reach + 1:
        raise ValueError(
            f"lattice {rows}x{cols} too small for neighborhood radius^2={neighbor_sq}; "
            f"both dimensions must be >= {2 * reach + 1}"
        )


def _lattice_edges(rows: int, cols: int, neighbor_sq: int) -> list[tuple[int, int]]:
    reach = int(np.sqrt(neighbor_sq))
    offsets = [
        (dr, dc)
        for dr in range(-reach, reach + 1)
        for dc in range(-reach, reach + 1)
        if (dr, dc) != (0, 0) and dr * dr + dc * dc <= neighbor_sq
    ]
    edges = set()
    for r in range(rows):
        for c in range(cols):
            u = r * cols + c
            for dr, dc in offsets:
                v = ((r + dr) % rows) * cols + (c + dc) % cols
                if u != v:
                    edges.add((min(u, v), max(u, v)))
    return sorted(edges)


def _generate_ws(spec: ModelSpec) -> nx.Graph:
    _require(
        spec.rows is not None and spec.cols is not None and spec.neighbor_sq is not None,
        "WS needs lattice dimensions and a neighborhood radius",
    )
    _require(spec.p is not None, "WS needs a rewiring probability p")
    _require(spec.rows * spec.cols == spec.n, "lattice dimensions must multiply to n")
    _check_lattice_dims(spec.rows, spec.cols, spec.neighbor_sq)
    rng = random.Random(spec.seed)
    edges = _lattice_edges(spec.rows, spec.cols, spec.neighbor_sq)
    if spec.edge_target is not None:
        _require(
            spec.edge_target <= len(edges),
            f"edge target {spec.edge_target} exceeds lattice edge count {len(edges)}",
        )
        drop = set(rng.sample(range(len(edges)), len(edges) - spec.edge_target))
        edges = [e for i, e in enumerate(edges) if i not in drop]
    g = nx.Graph()
    g.add_nodes_from(range(spec.n))
    g.add_edges_from(edges)
    # Watts-Strogatz rewiring: each surviving edge keeps one endpoint and,
    # with probability p, gets a fresh partner (no self-loops or duplicates).
    for u, v in edges:
        if rng.random() >= spec.p:
            continue
        if g.degree(u) >= spec.n - 1:
            continue
        w = rng.randrange(spec.n)
        while w == u or g.has_edge(u, w):
            w = rng.randrange(spec.n)
        g.remove_edge(u, v)
        g.add_edge(u, w)
    return g


def _jittered_positions(rows: int, cols: int, rng: np.random.Generator) -> np.ndarray:
    grid = np.array([(r, c) for r in range(rows) for c in range(cols)], dtype=np.float64)
    return grid + rng.random((rows * cols, 2))


def _generate_geo(spec: ModelSpec) -> nx.Graph:
    _require(
        spec.rows is not None and spec.cols is not None and spec.radius is not None,
        "GEO needs lattice dimensions and a connection radius",
    )
    _require(spec.rows * spec.cols == spec.n, "lattice dimensions must multiply to n")
    rng = np.random.default_rng(spec.seed)
    pos = _jittered_positions(spec.rows, spec.cols, rng)
    g = nx.Graph()
    for i in range(spec.n):
        g.add_node(i, pos=(float(pos[i, 0]), float(pos[i, 1])))
    diff = pos[:, None, :] - pos[None, :, :]
    dist = np.sqrt((diff**2).sum(axis=2))
    iu, ju = np.triu_indices(spec.n, k=1)
    close = dist[iu, ju] <= spec.radius
    g.add_edges_from(zip(iu[close].tolist(), ju[close].tolist()))
    return g


def _fit_geo_radius(n, rows, cols, target_mean_degree, seed):
    """Bisect the connection radius until trial draws match the target degree."""
    rng = np.random.default_rng(seed)
    iu, ju = np.triu_indices(n, k=1)
    trial_dists = []
    for _ in range(_GEO_TRIAL_DRAWS):
        pos = _jittered_positions(rows, cols, rng)
        diff = pos[iu] - pos[ju]
        trial_dists.append(np.sqrt((diff**2).sum(axis=1)))

    def mean_degree(radius: float) -> float:
        edges = sum(int(np.count_nonzero(d <= radius)) for d in trial_dists)
        return 2.0 * edges / (n * _GEO_TRIAL_DRAWS)

    lo, hi = 0.0, float(np.hypot(rows, cols))
    if mean_degree(hi) < target_mean_degree:
        raise ValueError(f"GEO cannot reach mean degree {target_mean_degree} at n={n}")
    for _ in range(200):
        mid = (lo + hi) / 2.0
        k = mean_degree(mid)
        if abs(k - target_mean_degree) <= _GEO_TOLERANCE * target_mean_degree:
            return mid
        if k < target_mean_degree:
            lo = mid
        else:
            hi = mid
    raise ValueError("GEO radius bisection did not converge")
