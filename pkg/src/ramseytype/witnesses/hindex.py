"""Extraction for the h-index theorems.

The pipelines pick the vertices of large parameter value, give each one
a fan of n (up to 3n) neighbours kept apart from the other fans, then
color an auxiliary complete graph on the chosen vertices by how two
vertices and their fans see each other. A monochromatic clique decides
which family member appears.
"""

import logging
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Type

from ..config.settings import Settings
from ..engines.coloring import ColoredClique, find_mono_clique
from ..engines.refinement import BICLIQUE, multipartite_refine
from ..errors import unknown_theorem_error
from ..generators import GraphName
from ..graph import Graph, VertexSet, component_masks, mask_of
from ..params import ParamKind, max_clique, max_stable_set, nontrivial_vertices
from .pipeline import Pipeline, Shortage
from .report import Found, Outcome, WitnessReport
from .thresholds import RamseyTable

logger = logging.getLogger(__name__)

Fan = Tuple[int, List[int]]
ColorFn = Callable[[Fan, Fan], int]


def _name(tag: str, *params: int) -> GraphName:
    return GraphName(tag, params)


class HIndexPipeline(Pipeline):
    """Fan selection and the monochromatic clique step."""

    fan_size = 1

    def high_vertices(self) -> List[int]:
        threshold = self.plan.param_threshold if self.plan is not None else self.n
        return nontrivial_vertices(self.G, self.kind, threshold, self.limits).to_list()

    def candidates(self, v: int, avail: int) -> List[int]:
        """Pairwise nonadjacent neighbours of v inside avail."""
        raise NotImplementedError

    def gather_fans(self, high: List[int]) -> List[Fan]:
        """Fans on distinct vertices, never on a selected center.

        A fan prefers vertices outside the pending high vertices and takes
        pending ones only when it is short; those then stop being centers.
        """
        size = self.fan_size * self.n
        pending = mask_of(high)
        used = 0
        fans: List[Fan] = []
        for v in high:
            if not pending >> v & 1:
                continue
            pending &= ~(1 << v)
            avail = self.G.rows[v] & ~used
            fan = self.candidates(v, self.capped(avail & ~pending))[:size]
            if len(fan) < self.n:
                fan = self.candidates(v, self.capped(avail))[:size]
            if len(fan) < self.n:
                continue
            fans.append((v, fan))
            used |= mask_of(fan) | (1 << v)
            pending &= ~used
        self.note("fans", [len(high), len(fans)], f"{self.fan_size * self.n} per center at most")
        return fans

    def clique_size(self, available: int) -> int:
        if self.settings.witness.mode == "best-effort" and available < 2 * self.n:
            return self.n
        return 2 * self.n

    def mono_clique(self, fans: List[Fan], colors: int,
                    color_of: ColorFn) -> Tuple[int, List[Fan]]:
        q = self.clique_size(len(fans))
        if len(fans) < q:
            raise Shortage("fans", f"{len(fans)} fan(s), need {q}")
        coloring = ColoredClique.from_function(
            len(fans), colors, lambda i, j: color_of(fans[i], fans[j])
        )
        mono = find_mono_clique(coloring, q, self.limits)
        if mono is None:
            raise Shortage("coloring", f"no monochromatic K_{q} among {len(fans)} centers")
        color, indices = mono
        self.note("coloring", [len(fans), q], f"color {color:b}")
        return color, [fans[i] for i in indices]

    def first_certified(self, candidates: Sequence[Tuple[GraphName, List[int]]],
                        step: str) -> Found:
        for name, vertices in candidates:
            found = self.certify(name, vertices)
            if found is not None:
                return found
        raise Shortage(step, "the monochromatic pattern resolves nothing")


class HDegreePipeline(HIndexPipeline):
    """Many vertices of large degree: K_n, K_{n,n} or nK_{1,n}."""

    kind = ParamKind.DEGREE

    def candidates(self, v: int, avail: int) -> List[int]:
        return max_stable_set(self.G, avail, self.limits).to_list()

    def extract(self) -> Outcome:
        n = self.n
        high = self.high_vertices()
        for v in high:
            # a neighbourhood without n stable vertices holds K_n
            clique = max_clique(self.G, self.capped(self.G.rows[v]), self.limits).to_list()
            if len(clique) >= n:
                self.note("clique", [len(clique)], f"inside N({v})")
                found = self.certify(_name("K", n), clique[:n])
                if found is not None:
                    return found
        fans = self.gather_fans(high)
        if len(fans) < self.clique_size(len(fans)):
            found = self._shared_fan(high)
            if found is not None:
                return found
        fans = [(v, fan[:n]) for v, fan in fans]
        color, picked = self.mono_clique(fans, 2 ** (n * n + 2 * n + 1), self._color)
        return self.first_certified(self._resolve(color, picked), "coloring")

    def _shared_fan(self, high: List[int]) -> Optional[Found]:
        # n stable centers that all see one stable fan span K_{n,n}
        n = self.n
        centers = mask_of(high)
        for v in high:
            fan = self.candidates(v, self.capped(self.G.rows[v]))[:n]
            if len(fan) < n:
                continue
            common = centers
            for f in fan:
                common &= self.G.rows[f]
            stable = max_stable_set(self.G, self.capped(common), self.limits).to_list()
            if len(stable) < n:
                continue
            self.note("shared-fan", [len(fan), len(stable)], f"fan of {v}")
            found = self.certify(_name("K_st", n, n), stable[:n] + fan)
            if found is not None:
                return found
        return None

    def _color(self, a: Fan, b: Fan) -> int:
        n = self.n
        adjacent = self.G.adjacent
        (u, fan_u), (w, fan_w) = a, b
        flags = [adjacent(u, w)]
        flags += [adjacent(u, f) for f in fan_w]
        flags += [adjacent(w, f) for f in fan_u]
        flags += [adjacent(fan_u[j], fan_w[k]) for j in range(n) for k in range(n)]
        return sum(1 << i for i, flag in enumerate(flags) if flag)

    def _resolve(self, color: int, picked: List[Fan]) -> List[Tuple[GraphName, List[int]]]:
        n = self.n
        big = len(picked) >= 2 * n
        head, tail = picked[:n], picked[n:2 * n]

        def bit(k: int) -> bool:
            return bool(color >> k & 1)

        def fan_bit(j: int, k: int) -> bool:
            return bit(1 + 2 * n + j * n + k)

        kn = _name("K", n)
        knn = _name("K_st", n, n)
        out: List[Tuple[GraphName, List[int]]] = []
        if bit(0):
            out.append((kn, [v for v, _ in head]))
        for j in range(n):
            if fan_bit(j, j):
                out.append((kn, [fan[j] for _, fan in head]))
        if big:
            for j in range(n):
                for k in range(n):
                    if j != k and fan_bit(j, k):
                        out.append((knn, [f[j] for _, f in head] + [f[k] for _, f in tail]))
                if bit(1 + j):
                    out.append((knn, [v for v, _ in head] + [f[j] for _, f in tail]))
                if bit(1 + n + j):
                    out.append((knn, [v for v, _ in tail] + [f[j] for _, f in head]))
        if color == 0:
            vertices = []
            for v, fan in head:
                vertices += [v] + fan[:n]
            out.append((_name("nK1n", n), vertices))
        return out


class HLocalPipeline(HIndexPipeline):
    """Many vertices of large alpha(N(v)), or of large c(N(v))."""

    kind = ParamKind.LOCAL_INDEPENDENCE
    fan_size = 3

    def candidates(self, v: int, avail: int) -> List[int]:
        if self.kind is ParamKind.LOCAL_COMPONENTS:
            # one vertex per component of N(v) is a stable set
            return [(c & -c).bit_length() - 1 for c in component_masks(self.G, avail)]
        return max_stable_set(self.G, avail, self.limits).to_list()

    def extract(self) -> Outcome:
        n = self.n
        fans = self.gather_fans(self.high_vertices())
        if len(fans) < 2:
            raise Shortage("fans", f"{len(fans)} fan(s), need at least 2")
        q = min(len(fan) for _, fan in fans)
        parts = [VertexSet.of(fan) for _, fan in fans]
        refined = multipartite_refine(self.G, parts, q, self.limits)
        if refined is None:
            raise Shortage("refinement", f"no homogeneous {q}-subsets across {len(fans)} fans")
        self.note("refinement", [len(fans), q])
        fans = [(v, subset.to_list()) for (v, _), subset in zip(fans, refined.subsets)]
        for (i, j), pattern in sorted(refined.patterns.items()):
            if pattern == BICLIQUE:
                found = self.certify(_name("K_st", n, n), fans[i][1][:n] + fans[j][1][:n])
                if found is not None:
                    return found

        color, picked = self.mono_clique(fans, 2 ** (2 * q + 1), self._color)
        return self.first_certified(self._resolve(color, picked, q), "coloring")

    def _color(self, a: Fan, b: Fan) -> int:
        adjacent = self.G.adjacent
        (u, fan_u), (w, fan_w) = a, b
        flags = [adjacent(u, w)]
        flags += [adjacent(u, f) for f in fan_w]
        flags += [adjacent(w, f) for f in fan_u]
        return sum(1 << i for i, flag in enumerate(flags) if flag)

    def _resolve(self, color: int, picked: List[Fan],
                 q: int) -> List[Tuple[GraphName, List[int]]]:
        n = self.n
        head = picked[:n]
        tail = picked[n:2 * n]
        big = len(picked) >= 2 * n

        def bit(k: int) -> bool:
            return bool(color >> k & 1)

        forward = [j for j in range(q) if bit(1 + j)]
        backward = [j for j in range(q) if bit(1 + q + j)]
        out: List[Tuple[GraphName, List[int]]] = []
        if not bit(0):
            if color == 0:
                vertices = []
                for v, fan in head:
                    vertices += [v] + fan[:n]
                out.append((_name("nK1n", n), vertices))
            if big:
                knn = _name("K_st", n, n)
                for j in forward:
                    out.append((knn, [v for v, _ in head] + [f[j] for _, f in tail]))
                for j in backward:
                    out.append((knn, [v for v, _ in tail] + [f[j] for _, f in head]))
            return out

        ke = _name("K_plus_E", n)
        if len(forward) >= n and len(picked) > n:
            fan_next = picked[n][1]
            out.append((ke, [v for v, _ in head] + [fan_next[j] for j in forward[:n]]))
        if len(backward) >= n and len(picked) > n:
            first_fan = picked[0][1]
            out.append((ke, [v for v, _ in picked[1:n + 1]] + [first_fan[j] for j in backward[:n]]))
        # leaves no other chosen center sees
        private = [j for j in range(q) if j not in forward and j not in backward]
        self.note("pigeonhole", [len(forward), len(backward), len(private)])
        if len(private) >= n:
            vertices = []
            for v, fan in head:
                vertices += [v] + [fan[j] for j in private[:n]]
            out.append((_name("Kn_n", n), vertices))
        return out


class HComponentsPipeline(HLocalPipeline):
    kind = ParamKind.LOCAL_COMPONENTS


class HAdhesionPipeline(HIndexPipeline):
    """Many vertices of large adhesion: nK_{1,n} or K_n^n."""

    kind = ParamKind.ADHESION

    def candidates(self, v: int, avail: int) -> List[int]:
        reps = []
        for component in component_masks(self.G, self.G.full_mask & ~(1 << v)):
            touching = self.G.rows[v] & component & avail
            if touching:
                reps.append((touching & -touching).bit_length() - 1)
        return reps

    def extract(self) -> Outcome:
        n = self.n
        high = self.high_vertices()
        centers = mask_of(high)
        raw: Dict[int, List[int]] = {
            v: self.candidates(v, self.G.full_mask & ~centers) for v in high
        }
        blocks = {v: mask_of(fan) | (1 << v) for v, fan in raw.items()}
        # a fan vertex touching another block is dropped; at most one per other block goes
        kept: Dict[int, List[int]] = {}
        for v, fan in raw.items():
            others = 0
            for w, block in blocks.items():
                if w != v:
                    others |= block
            kept[v] = [u for u in fan if not (self.G.rows[u] | 1 << u) & others]
        self.note(
            "fans",
            [len(high), sum(len(f) for f in raw.values()), sum(len(f) for f in kept.values())],
            "set difference against the other blocks",
        )
        ready = [v for v in high if len(kept[v]) >= n]
        if len(ready) < n:
            raise Shortage(
                "fans", f"{len(ready)} center(s) keep {n} separated neighbours, need {n}"
            )
        mask = self.capped(mask_of(ready))
        clique = max_clique(self.G, mask, self.limits).to_list()
        stable = max_stable_set(self.G, mask, self.limits).to_list()
        self.note("ramsey-split", [mask.bit_count(), len(clique), len(stable)], "centers")
        out: List[Tuple[GraphName, List[int]]] = []
        for name, group in ((_name("Kn_n", n), clique), (_name("nK1n", n), stable)):
            if len(group) >= n:
                vertices = []
                for v in group[:n]:
                    vertices += [v] + kept[v][:n]
                out.append((name, vertices))
        if not out:
            raise Shortage(
                "ramsey-split", f"{len(ready)} center(s) hold neither K_{n} nor E_{n}"
            )
        return self.first_certified(out, "ramsey-split")


HINDEX_PIPELINES: Dict[str, Type[HIndexPipeline]] = {
    "h-deg": HDegreePipeline,
    "h-alpha": HLocalPipeline,
    "h-c": HComponentsPipeline,
    "h-adh": HAdhesionPipeline,
}


def extract_hindex_witness(G: Graph, theorem_id: str, n: int,
                           settings: Optional[Settings] = None,
                           table: Optional[RamseyTable] = None) -> WitnessReport:
    """Run the extraction pipeline of an h-index theorem.

    Args:
        G: Graph to search, connected or not
        theorem_id: h-deg, h-alpha, h-c or h-adh
        n: Family parameter, n >= 2

    Returns:
        WitnessReport; Found outcomes are verified embeddings
    """
    pipeline_cls = HINDEX_PIPELINES.get(theorem_id)
    if pipeline_cls is None:
        raise unknown_theorem_error(theorem_id, ", ".join(HINDEX_PIPELINES))
    logger.debug("witness %s:%d on %d vertices", theorem_id, n, G.order)
    return pipeline_cls(G, theorem_id, n, settings, table).report(connected=False)
