"""Pairwise consonance/dissonance between note spectra and the resulting networks.

Two partials closer than delta_min/2 Hz are heard as one (consonant); pairs
between delta_min/2 and delta_max/2 beat against each other (dissonant).
Each qualifying partial pair contributes the product of its amplitudes; the
note-pair level is the sum over all qualifying pairs.  Sums use exactly
rounded summation (math.fsum) so that symmetry and oracle comparisons hold
bit-for-bit regardless of enumeration order.
"""

import math
from dataclasses import dataclass, field

import networkx as nx
import numpy as np

from .scale import Scale
from .spectrum import AUDIBLE_CUTOFF, AnharmonicityLaw, PartialSpectrum, scale_spectra

#: Mean degree the thresholded networks are matched to.
TARGET_MEAN_DEGREE = 10.37

SYNTONY_KINDS = ("consonance", "dissonance")


@dataclass(frozen=True)
class SyntonyWindows:
    """Consonance (delta_min) and dissonance (delta_max) windows in Hz."""

    delta_min: float = 10.0
    delta_max: float = 80.0

    def __post_init__(self):
        if not 0 < self.delta_min < self.delta_max:
            raise ValueError(
                f"windows must satisfy 0 < delta_min < delta_max, "
                f"got {self.delta_min}, {self.delta_max}"
            )


def _check_spectra(x: PartialSpectrum, y: PartialSpectrum) -> None:
    if len(x) == 0 or len(y) == 0:
        raise ValueError("consonance/dissonance is undefined for an empty spectrum")


def _run_bounds(xf: np.ndarray, yf: np.ndarray, half_width: float):
    """Index ranges [lo, hi) of y-partials strictly within half_width of each x-partial."""
    lo = np.searchsorted(yf, xf - half_width, side="right")
    hi = np.searchsorted(yf, xf + half_width, side="left")
    return lo, hi


def _expand_products(xa: np.ndarray, ya: np.ndarray, lo: np.ndarray, hi: np.ndarray) -> np.ndarray:
    """Amplitude products A(x_i)*A(y_j) over all index runs lo[i]..hi[i]."""
    widths = hi - lo
    rows = np.nonzero(widths > 0)[0]
    if len(rows) == 0:
        return np.empty(0, dtype=np.float64)
    widths = widths[rows]
    # Flatten the per-row ranges lo[r]..hi[r] into one index vector.
    offsets = np.repeat(hi[rows] - np.cumsum(widths), widths)
    cols = offsets + np.arange(widths.sum())
    return np.repeat(xa[rows], widths) * ya[cols]


def pair_consonance(x: PartialSpectrum, y: PartialSpectrum, windows: SyntonyWindows) -> float:
    """Total consonance: sum of A(x_i)A(y_j) over pairs with |x_i - y_j| < delta_min/2."""
    _check_spectra(x, y)
    lo, hi = _run_bounds(x.frequencies, y.frequencies, windows.delta_min / 2.0)
    return math.fsum(_expand_products(x.amplitudes, y.amplitudes, lo, hi))


def pair_dissonance(x: PartialSpectrum, y: PartialSpectrum, windows: SyntonyWindows) -> float:
    """Total dissonance: as consonance but over delta_min/2 <= |x_i - y_j| < delta_max/2."""
    _check_spectra(x, y)
    lo_out, hi_out = _run_bounds(x.frequencies, y.frequencies, windows.delta_max / 2.0)
    lo_in, hi_in = _run_bounds(x.frequencies, y.frequencies, windows.delta_min / 2.0)
    # Qualifying y-partials form two runs per x-partial: inside the outer
    # window but left or right of the inner one.
    left = _expand_products(x.amplitudes, y.amplitudes, lo_out, lo_in)
    right = _expand_products(x.amplitudes, y.amplitudes, hi_in, hi_out)
    return math.fsum(np.concatenate([left, right]))


@dataclass(frozen=True)
class SyntonyMatrix:
    """Symmetric note-pair weights of one kind (consonance or dissonance)."""

    kind: str
    weights: np.ndarray = field(repr=False)
    labels: tuple[str, ...]

    def __post_init__(self):
        if self.kind not in SYNTONY_KINDS:
            raise ValueError(f"kind must be one of {SYNTONY_KINDS}, got {self.kind!r}")
        n = self.weights.shape[0]
        if self.weights.shape != (n, n) or n != len(self.labels):
            raise ValueError("weights must be square and match the label count")
        if np.any(np.diag(self.weights) != 0.0):
            raise ValueError("diagonal must be zero")
        if not np.array_equal(self.weights, self.weights.T):
            raise ValueError("weights must be exactly symmetric")
        self.weights.setflags(write=False)

    @property
    def n(self) -> int:
        return self.weights.shape[0]

    def nonzero_pair_count(self) -> int:
        return int(np.count_nonzero(np.triu(self.weights, k=1)))


def build_syntony_matrix(
    scale: Scale,
    law: AnharmonicityLaw,
    windows: SyntonyWindows,
    kind: str,
    cutoff: float = AUDIBLE_CUTOFF,
) -> SyntonyMatrix:
    """Pairwise consonance (or dissonance) matrix over all notes of the scale."""
    if kind not in SYNTONY_KINDS:
        raise ValueError(f"kind must be one of {SYNTONY_KINDS}, got {kind!r}")
    if len(scale) < 2:
        raise ValueError("need at least two notes to build a syntony matrix")
    spectra = scale_spectra(scale, law, cutoff)
    pair_level = pair_consonance if kind == "consonance" else pair_dissonance
    n = len(spectra)
    weights = np.zeros((n, n), dtype=np.float64)
    for i in range(n):
        for j in range(i + 1, n):
            w = pair_level(spectra[i], spectra[j], windows)
            weights[i, j] = weights[j, i] = w
    return SyntonyMatrix(kind=kind, weights=weights, labels=tuple(scale.labels()))


def default_edge_target(n_nodes: int, mean_degree: float = TARGET_MEAN_DEGREE) -> int:
    """Edge count giving the requested mean degree: round(k * n / 2)."""
    return round(mean_degree * n_nodes / 2.0)


def threshold_graph(matrix: SyntonyMatrix, target_edges: int) -> nx.Graph:
    """Unweighted graph keeping exactly the `target_edges` heaviest note pairs.

    Ties are broken toward the lexicographically smallest (i, j).  Every note
    remains a node; notes whose edges were all dropped become isolated.
    """
    if target_edges < 1:
        raise ValueError(f"target edge count must be positive, got {target_edges}")
    iu, ju = np.triu_indices(matrix.n, k=1)
    w = matrix.weights[iu, ju]
    nz = w > 0
    available = int(np.count_nonzero(nz))
    if target_edges > available:
        raise ValueError(
            f"cannot keep {target_edges} edges: only {available} nonzero pairs "
            f"(short by {target_edges - available})"
        )
    ranked = sorted(
        zip(w[nz].tolist(), iu[nz].tolist(), ju[nz].tolist()),
        key=lambda t: (-t[0], t[1], t[2]),
    )
    g = nx.Graph(weighted=False, kind=matrix.kind)
    for i, label in enumerate(matrix.labels):
        g.add_node(i, label=label)
    for _, i, j in ranked[:target_edges]:
        g.add_edge(i, j, weight=1.0)
    return g


def weighted_graph(matrix: SyntonyMatrix) -> nx.Graph:
    """Weighted graph over all nonzero note pairs (no thresholding)."""
    g = nx.Graph(weighted=True, kind=matrix.kind)
    for i, label in enumerate(matrix.labels):
        g.add_node(i, label=label)
    iu, ju = np.triu_indices(matrix.n, k=1)
    for i, j in zip(iu.tolist(), ju.tolist()):
        w = matrix.weights[i, j]
        if w > 0:
            g.add_edge(i, j, weight=float(w))
    return g


def largest_component(g: nx.Graph) -> nx.Graph:
    """Subgraph on the largest connected component, relabeled to 0..m-1.

    Size ties go to the component containing the smallest original node id.
    Original ids are kept in the node attribute ``source_id``.
    """
    if g.number_of_nodes() == 0:
        raise ValueError("graph has no nodes")
    components = list(nx.connected_components(g))
    best = sorted(max(components, key=lambda c: (len(c), -min(c))))
    sub = g.subgraph(best)
    mapping = {node: idx for idx, node in enumerate(best)}
    out = nx.Graph(**g.graph)
    for node in best:
        out.add_node(mapping[node], source_id=node, **g.nodes[node])
    for u, v, data in sub.edges(data=True):
        out.add_edge(mapping[u], mapping[v], **data)
    return out
