"""Extraction for the connected theorems and their corollaries.

Each pipeline follows its proof: prune the trivial vertices, find a long
induced path, a large clique or a large star in what is left, and grow
the clique or star into a family member through second neighbours, the
induced matching lemma and a Ramsey split. The local-components pipeline
pivots on a minimum dominating set instead, and the adhesion pipeline on
a minimum connected dominating set.

With connected=False the corollary families apply: nP_3 (and nK_3 for
degree) are collected across components before the pipeline recurses
into the component with the most nontrivial vertices.
"""

import logging
from collections import Counter
from typing import Dict, List, Optional, Sequence, Tuple, Type

from ..config.settings import Settings
from ..engines.coloring import ColoredClique, find_mono_clique
from ..engines.matching import BipartiteView, is_bipartite_induced_matching, private_matching
from ..engines.pruning import prune
from ..engines.trichotomy import CLIQUE, PATH, STAR, path_clique_star
from ..errors import ErrorCode, make_error, unknown_theorem_error
from ..generators import GraphName, named_graph
from ..graph import Graph, VertexSet, bits, component_count, component_masks, induced, mask_of
from ..isomorphism import find_induced
from ..params import (
    ParamKind,
    cut_vertices,
    domination,
    max_clique,
    max_stable_set,
    nontrivial_vertices,
)
from .pipeline import Pipeline, Shortage
from .report import Found, Outcome, StepFailed, WitnessReport
from .thresholds import RamseyTable

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]
Triple = Tuple[int, int, int]


def _name(tag: str, *params: int) -> GraphName:
    return GraphName(tag, params)


def _low(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


class ConnectedPipeline(Pipeline):
    """Steps shared by the four connected pipelines."""

    def core(self, rule: str) -> Tuple[Graph, Sequence[int]]:
        result = prune(self.G, rule)
        self.note("prune", [self.G.order, result.graph.order], rule)
        if result.graph.order == 0:
            self.note("widen", [self.G.order], "empty core, searching the whole graph")
            return self.G, tuple(range(self.G.order))
        return result.graph, result.kept

    def shapes(self, W: Graph, kept: Sequence[int]) -> Tuple[List[int], List[int], List[int]]:
        """Largest clique, induced path and star of W, in host labels.

        The star list is the center followed by its leaves.
        """
        result = path_clique_star(W, self.limits)
        clique, path, star = (
            [kept[v] for v in result.candidates[shape][1].mapping]
            for shape in (CLIQUE, PATH, STAR)
        )
        note = result.shape if result.exact else f"{result.shape}, path length is a lower bound"
        self.note("trichotomy", [len(clique), len(path), max(len(star) - 1, 0)], note)
        return clique, path, star

    def path_member(self, path: List[int]) -> Optional[Found]:
        if len(path) < self.n:
            return None
        return self.certify(_name("P", self.n), path[:self.n])

    def hub_pigeonhole(self, s: int, second: Dict[int, int]) -> Optional[Found]:
        """A second neighbour seeing n leaves gives K_{2,n} or K_2+nK_1."""
        leaves = mask_of(second)
        for y in sorted(set(second.values())):
            hit = self.G.rows[y] & leaves
            if hit.bit_count() >= self.n:
                if self.G.adjacent(s, y):
                    name = _name("K2_plus_nK1", self.n)
                else:
                    name = _name("K_st", 2, self.n)
                self.note("pigeonhole", [hit.bit_count()], f"y = {y} sees {hit.bit_count()} leaves")
                return self.certify(name, [s, y] + list(bits(hit))[:self.n])
        return None

    def matched_pairs(self, second: Dict[int, int]) -> List[Pair]:
        """Induced matching between leaves and their second neighbours."""
        view = BipartiteView(self.G, VertexSet.of(second), VertexSet.of(second.values()))
        pairs = private_matching(view)
        if not is_bipartite_induced_matching(view, pairs):
            raise make_error(ErrorCode.E004, what="witness", details="matching failed to verify")
        self.note("matching", [len(view.X), len(view.Y), len(pairs)])
        if not pairs:
            raise Shortage("matching", "no leaf has a second neighbour")
        return pairs

    def ramsey_split(self, pairs: List[Pair]) -> Tuple[List[Pair], List[Pair]]:
        """Pairs whose second vertices form a maximum clique, and a maximum stable set."""
        partner = {y: x for x, y in pairs}
        ys = self.capped(mask_of(partner))
        clique = max_clique(self.G, ys, self.limits).to_list()
        stable = max_stable_set(self.G, ys, self.limits).to_list()
        self.note("ramsey-split", [ys.bit_count(), len(clique), len(stable)])
        return [(partner[y], y) for y in clique], [(partner[y], y) for y in stable]

    def pairs_member(self, name: GraphName, pairs: List[Pair],
                     extra: Sequence[int] = ()) -> Optional[Found]:
        if len(pairs) < self.n:
            return None
        vertices = list(extra)
        for x, y in pairs[:self.n]:
            vertices += [x, y]
        return self.certify(name, vertices)

    def split_short(self, size: int) -> Shortage:
        return Shortage(
            "ramsey-split", f"{size} matched pair(s) hold neither K_{self.n} nor E_{self.n}"
        )


class DegreePipeline(ConnectedPipeline):
    """Vertices of degree at least 2."""

    kind = ParamKind.DEGREE

    def extract(self) -> Outcome:
        W, kept = self.core("degree1")
        clique, path, star = self.shapes(W, kept)
        n = self.n
        return self.first_of([
            lambda: self.certify(_name("K", n), clique[:n]) if len(clique) >= n else None,
            lambda: self.path_member(path),
            lambda: self._star_case(star),
        ])

    def _star_case(self, star: List[int]) -> Optional[Found]:
        if len(star) < 2:
            raise Shortage("trichotomy", "no star with a leaf")
        s, leaves = star[0], star[1:]
        second: Dict[int, int] = {}
        for x in leaves:
            others = self.G.rows[x] & ~(1 << s)
            if others:
                second[x] = _low(others)
        self.note("second-neighbours", [len(leaves), len(second)], f"s = {s}")
        if not second:
            raise Shortage("second-neighbours", f"no leaf of the star at {s} has degree 2")
        found = self.hub_pigeonhole(s, second)
        if found is not None:
            return found

        pairs = self.matched_pairs(second)
        clique, stable = self.ramsey_split(pairs)
        if len(clique) >= self.n:
            return self.certify(_name("K", self.n), [y for _, y in clique[:self.n]])
        inside = [(x, y) for x, y in stable if self.G.adjacent(s, y)]
        outside = [(x, y) for x, y in stable if not self.G.adjacent(s, y)]
        self.note("pigeonhole", [len(inside), len(outside)], f"around s = {s}")
        if len(inside) >= self.n:
            return self.pairs_member(_name("K1_plus_nK2", self.n), inside, [s])
        if len(outside) >= self.n:
            return self.pairs_member(_name("K1n_star", self.n), outside, [s])
        raise Shortage(
            "pigeonhole",
            f"stable set of {len(stable)} splits {len(inside)}/{len(outside)} around s = {s}",
        )


# bit k of a triple-pair color, for i < j
_TRIPLE_BITS = (
    (0, 1), (0, 2), (1, 0), (2, 0),  # x_i~y_j, x_i~z_j, y_i~x_j, z_i~x_j
    (1, 1), (2, 2), (1, 2), (2, 1),  # y_i~y_j, z_i~z_j, y_i~z_j, z_i~y_j
)


class LocalIndependencePipeline(ConnectedPipeline):
    """Vertices with alpha(N(v)) >= 2."""

    kind = ParamKind.LOCAL_INDEPENDENCE

    def extract(self) -> Outcome:
        W, kept = self.core("alpha1")
        clique, path, star = self.shapes(W, kept)
        return self.first_of([
            lambda: self.path_member(path),
            lambda: self._clique_case(clique),
            lambda: self._star_case(star),
        ])

    def _clique_case(self, clique: List[int]) -> Optional[Found]:
        n = self.n
        if len(clique) < n:
            raise Shortage("trichotomy", f"largest clique has {len(clique)} < {n} vertices")
        X = mask_of(clique)
        e2_kn = _name("E2_plus_K", n)
        second: Dict[int, int] = {}
        for x in clique:
            outside = self.G.rows[x] & ~X
            loose = [y for y in bits(outside) if self.G.rows[y] & X != X]
            if loose:
                second[x] = loose[0]
                continue
            # everything x sees outside the clique is complete to it
            pair = max_stable_set(self.G, self.capped(outside), self.limits).to_list()
            if len(pair) >= 2:
                self.note("second-neighbours", [len(pair)], f"x = {x} has a stable pair on X")
                return self.certify(e2_kn, pair[:2] + clique[:n])
        self.note("second-neighbours", [len(clique), len(second)], "clique")
        if not second:
            raise Shortage("second-neighbours", "no clique vertex has a loose neighbour")

        for y in sorted(set(second.values())):
            hit = self.G.rows[y] & X
            if hit.bit_count() >= n:
                miss = _low(X & ~hit)
                self.note("pigeonhole", [hit.bit_count()], f"y = {y}")
                return self.certify(e2_kn, [y, miss] + list(bits(hit))[:n])

        pairs = self.matched_pairs(second)
        clique_pairs, stable_pairs = self.ramsey_split(pairs)
        if len(clique_pairs) >= n:
            return self.pairs_member(_name("CK", n), clique_pairs)
        if len(stable_pairs) >= n:
            return self.pairs_member(_name("Kn_star", n), stable_pairs)
        raise self.split_short(len(pairs))

    def _star_case(self, star: List[int]) -> Optional[Found]:
        if len(star) < 2:
            raise Shortage("trichotomy", "no star with a leaf")
        s, leaves = star[0], star[1:]
        away: Dict[int, int] = {}
        common: Dict[int, Tuple[int, int]] = {}
        for x in leaves:
            outside = self.G.rows[x] & ~self.G.rows[s] & ~(1 << s)
            if outside:
                away[x] = _low(outside)
                continue
            shared = self.G.rows[x] & self.G.rows[s]
            pair = max_stable_set(self.G, self.capped(shared), self.limits).to_list()
            if len(pair) >= 2:
                common[x] = (pair[0], pair[1])
        self.note("split", [len(leaves), len(away), len(common)], f"s = {s}")
        cases = [lambda: self._away_case(s, away), lambda: self._common_case(s, common)]
        if len(common) > len(away):
            cases.reverse()
        outcome = self.first_of(cases)
        if isinstance(outcome, StepFailed):
            raise Shortage(outcome.step, outcome.diagnostic)
        return outcome if isinstance(outcome, Found) else None

    def _away_case(self, s: int, second: Dict[int, int]) -> Optional[Found]:
        if not second:
            raise Shortage("second-neighbours", f"no leaf has a neighbour away from s = {s}")
        found = self.hub_pigeonhole(s, second)
        if found is not None:
            return found
        pairs = self.matched_pairs(second)
        clique_pairs, stable_pairs = self.ramsey_split(pairs)
        if len(clique_pairs) >= self.n:
            return self.pairs_member(_name("Kn_star", self.n), clique_pairs)
        if len(stable_pairs) >= self.n:
            return self.pairs_member(_name("K1n_star", self.n), stable_pairs, [s])
        raise self.split_short(len(pairs))

    def _replacement_bound(self) -> int:
        if self.settings.witness.mode == "paper":
            return self.n * self.table.value(2, self.n)
        return self.n

    def _common_case(self, s: int, common: Dict[int, Tuple[int, int]]) -> Optional[Found]:
        n = self.n
        if not common:
            raise Shortage("triples", f"no leaf has a stable pair inside N(s), s = {s}")
        triples = [(x, y, z) for x, (y, z) in sorted(common.items())]
        chosen: List[Triple] = []
        used = 0
        for x, y, z in triples:
            pair = (1 << y) | (1 << z)
            if not pair & used:
                chosen.append((x, y, z))
                used |= pair
        self.note("distinct-triples", [len(triples), len(chosen)])

        if len(chosen) < n + 2:
            counts = Counter(v for _, y, z in triples for v in (y, z))
            top = max(counts.values())
            if top >= self._replacement_bound():
                # ties go to the smallest label
                center = min(v for v, c in counts.items() if c == top)
                second = {
                    x: (z if y == center else y) for x, y, z in triples if center in (y, z)
                }
                self.note("replace-center", [top], f"s = {s} -> {center}")
                return self._away_case(center, second)

        q = n + 2 if len(chosen) >= n + 2 else n
        if len(chosen) < q:
            raise Shortage("triples", f"{len(chosen)} distinct triple(s), need {q}")
        coloring = ColoredClique.from_function(
            len(chosen), 2 ** 8, lambda i, j: self._triple_color(chosen[i], chosen[j])
        )
        mono = find_mono_clique(coloring, q, self.limits)
        if mono is None:
            raise Shortage("coloring", f"no monochromatic K_{q} among {len(chosen)} triples")
        color, indices = mono
        picked = [chosen[i] for i in indices]
        self.note("coloring", [len(chosen), q], f"color {color:08b}")
        return self._resolve_triples(s, picked, color)

    def _triple_color(self, a: Triple, b: Triple) -> int:
        color = 0
        for k, (p, r) in enumerate(_TRIPLE_BITS):
            if self.G.adjacent(a[p], b[r]):
                color |= 1 << k
        return color

    def _resolve_triples(self, s: int, picked: List[Triple], color: int) -> Optional[Found]:
        n = self.n
        X = [t[0] for t in picked]
        Y = [t[1] for t in picked]
        Z = [t[2] for t in picked]
        big = len(picked) >= n + 2
        e2_kn = _name("E2_plus_K", n)
        k2n = _name("K_st", 2, n)

        def bit(k: int) -> bool:
            return bool(color >> k & 1)

        candidates: List[Tuple[GraphName, List[int]]] = []
        for clique_bit, side, fwd, back in ((4, Y, 0, 2), (5, Z, 1, 3)):
            if not bit(clique_bit):
                continue
            if big and bit(fwd):
                candidates.append((e2_kn, [X[0], X[1]] + side[2:n + 2]))
            if big and bit(back):
                candidates.append((e2_kn, [X[n], X[n + 1]] + side[:n]))
            if not bit(fwd) and not bit(back):
                candidates.append((_name("Kn_star", n), X[:n] + side[:n]))
        if not bit(4) and not bit(5) and big:
            spreads = (
                (0, X, Y), (1, X, Z), (6, Y, Z), (7, Z, Y),
            )
            for k, heads, tails in spreads:
                if bit(k):
                    candidates.append((k2n, [heads[0], heads[1]] + tails[2:n + 2]))
            for k, heads, tails in ((2, X, Y), (3, X, Z)):
                if bit(k):
                    candidates.append((k2n, [heads[n], heads[n + 1]] + tails[:n]))
        if color == 0:
            candidates.append((_name("K1_plus_nP3", n), [s] + X[:n] + Y[:n] + Z[:n]))

        for name, vertices in candidates:
            found = self.certify(name, vertices)
            if found is not None:
                return found
        raise Shortage("coloring", f"color {color:08b} on {len(picked)} triples resolves nothing")


class LocalComponentsPipeline(ConnectedPipeline):
    """Vertices with c(N(v)) >= 2, pivoting on a minimum dominating set."""

    kind = ParamKind.LOCAL_COMPONENTS

    def extract(self) -> Outcome:
        nontrivial = nontrivial_vertices(self.G, self.kind, 2, self.limits)
        gamma, dominating = domination(self.G, limits=self.limits)
        self.note("domination", [gamma, len(nontrivial)])
        best, pivot = -1, -1
        for d in dominating:
            reach = (self.G.rows[d] & nontrivial.mask).bit_count()
            if reach > best:
                best, pivot = reach, d
        hits = self.G.rows[pivot] & nontrivial.mask if pivot >= 0 else 0
        self.note("pivot", [hits.bit_count()], f"d = {pivot}")
        if not hits:
            raise Shortage("pivot", "no dominating vertex sees a nontrivial vertex")
        hits = self.capped(hits)
        clique = max_clique(self.G, hits, self.limits).to_list()
        stable = max_stable_set(self.G, hits, self.limits).to_list()
        self.note("ramsey-split", [hits.bit_count(), len(clique), len(stable)], "pivot neighbours")
        return self.first_of([
            lambda: self._clique_case(clique),
            lambda: self._star_case(pivot, stable),
            lambda: self._path_case(),
        ])

    def _path_case(self) -> Optional[Found]:
        # a large domination number forces P_n when no star or corona grew
        _, path, _ = self.shapes(self.G, tuple(range(self.G.order)))
        if len(path) < self.n:
            raise Shortage("path", f"longest induced path has {len(path)} < {self.n} vertices")
        return self.path_member(path)

    def _separated(self, x: int, avoid: int) -> Optional[int]:
        """Smallest neighbour of x in a component of N(x) that misses avoid."""
        for component in component_masks(self.G, self.G.rows[x]):
            if not component & avoid:
                return _low(component)
        return None

    def _clique_case(self, clique: List[int]) -> Optional[Found]:
        n = self.n
        if len(clique) < n:
            raise Shortage("pivot", f"clique of {len(clique)} < {n} among the pivot's neighbours")
        K = mask_of(clique)
        pairs: List[Pair] = []
        for x in clique:
            y = self._separated(x, K & ~(1 << x))
            if y is not None:
                pairs.append((x, y))
        self.note("second-neighbours", [len(clique), len(pairs)], "clique")
        partner = {y: x for x, y in pairs}
        ys = self.capped(mask_of(partner))
        y_clique = max_clique(self.G, ys, self.limits).to_list()
        y_stable = max_stable_set(self.G, ys, self.limits).to_list()
        self.note("ramsey-split", [ys.bit_count(), len(y_clique), len(y_stable)])
        if len(y_clique) >= n:
            return self.pairs_member(_name("CK", n), [(partner[y], y) for y in y_clique])
        if len(y_stable) >= n:
            return self.pairs_member(_name("Kn_star", n), [(partner[y], y) for y in y_stable])
        raise self.split_short(len(pairs))

    def _star_case(self, s: int, leaves: List[int]) -> Optional[Found]:
        if not leaves:
            raise Shortage("pivot", "no stable neighbours")
        second: Dict[int, int] = {}
        for x in leaves:
            y = self._separated(x, 1 << s)
            if y is not None:
                second[x] = y
        self.note("second-neighbours", [len(leaves), len(second)], f"s = {s}")
        if not second:
            raise Shortage("second-neighbours", f"no leaf of the star at {s} qualifies")
        found = self.hub_pigeonhole(s, second)
        if found is not None:
            return found
        pairs = self.matched_pairs(second)
        clique_pairs, stable_pairs = self.ramsey_split(pairs)
        # a clique among the second neighbours carries pendant leaves
        if len(clique_pairs) >= self.n:
            return self.pairs_member(_name("Kn_star", self.n), clique_pairs)
        if len(stable_pairs) >= self.n:
            return self.pairs_member(_name("K1n_star", self.n), stable_pairs, [s])
        raise self.split_short(len(pairs))


class AdhesionPipeline(ConnectedPipeline):
    """Cut vertices, through a minimum connected dominating set."""

    kind = ParamKind.ADHESION

    def extract(self) -> Outcome:
        cuts = cut_vertices(self.G)
        gamma_c, dominating = domination(self.G, connected=True, limits=self.limits)
        self.note("connected-domination", [len(cuts), gamma_c])
        if not cuts.issubset(dominating):
            raise make_error(
                ErrorCode.E004,
                what="witness adh",
                details=f"cut vertices {(cuts - dominating).to_list()} escape the dominating set",
            )
        W, kept = induced(self.G, dominating)
        clique, path, star = self.shapes(W, kept)
        return self.first_of([
            lambda: self.path_member(path),
            lambda: self._clique_case(clique, dominating.mask),
            lambda: self._star_case(star, dominating.mask),
        ])

    def _clique_case(self, clique: List[int], D: int) -> Optional[Found]:
        n = self.n
        if len(clique) < n:
            raise Shortage("trichotomy", f"largest clique has {len(clique)} < {n} vertices")
        K = mask_of(clique)
        pairs: List[Pair] = []
        for x in clique:
            private = [y for y in bits(self.G.rows[x] & ~D) if self.G.rows[y] & K == 1 << x]
            if private:
                pairs.append((x, private[0]))
        self.note("private-neighbours", [len(clique), len(pairs)])
        _, stable_pairs = self.ramsey_split(pairs) if pairs else ([], [])
        if len(stable_pairs) >= n:
            return self.pairs_member(_name("Kn_star", n), stable_pairs)
        raise Shortage("private-neighbours", f"{len(pairs)} private pendant(s), need {n} stable")

    def _star_case(self, star: List[int], D: int) -> Optional[Found]:
        if len(star) < 2:
            raise Shortage("trichotomy", "no star with a leaf")
        s, leaves = star[0], star[1:]
        second: Dict[int, int] = {}
        for x in leaves:
            away = self.G.rows[x] & ~self.G.rows[s] & ~(1 << s)
            if away:
                second[x] = _low(away)
        self.note("second-neighbours", [len(leaves), len(second)], f"s = {s}")
        if not second:
            raise Shortage("second-neighbours", f"no leaf of the star at {s} reaches away from it")
        pairs = self.matched_pairs(second)
        clique_pairs, stable_pairs = self.ramsey_split(pairs)
        if len(clique_pairs) >= self.n:
            return self.pairs_member(_name("Kn_star", self.n), clique_pairs)
        if len(stable_pairs) >= self.n:
            return self.pairs_member(_name("K1n_star", self.n), stable_pairs, [s])
        raise self.split_short(len(pairs))


CONNECTED_PIPELINES: Dict[str, Type[ConnectedPipeline]] = {
    "deg": DegreePipeline,
    "alpha": LocalIndependencePipeline,
    "c": LocalComponentsPipeline,
    "adh": AdhesionPipeline,
}


class ComponentPipeline(Pipeline):
    """Corollary variant: the graph need not be connected."""

    def __init__(self, G: Graph, base_id: str, n: int,
                 settings: Optional[Settings] = None,
                 table: Optional[RamseyTable] = None):
        super().__init__(G, f"cor-{base_id}", n, settings, table)
        self.base_id = base_id
        self.kind = CONNECTED_PIPELINES[base_id].kind

    def extract(self) -> Outcome:
        n = self.n
        nontrivial = nontrivial_vertices(self.G, self.kind, 2, self.limits).mask
        all_components = component_masks(self.G)
        busy = [c for c in all_components if c & nontrivial]
        self.note("components", [len(all_components), len(busy)])

        shapes = [("nP3", named_graph(_name("P", 3)))]
        if self.base_id == "deg":
            shapes.append(("nK3", named_graph(_name("K", 3))))
        for tag, small in shapes:
            copies: List[int] = []
            for component in busy:
                sub, mapping = induced(self.G, component)
                embedding = find_induced(sub, small, self.limits)
                if embedding is not None:
                    copies += [mapping[v] for v in embedding.mapping]
            self.note("pigeonhole", [len(copies) // 3, n], tag)
            if len(copies) >= 3 * n:
                found = self.certify(_name(tag, n), copies[:3 * n])
                if found is not None:
                    return found

        if not busy:
            return self.first_of([lambda: self._no_component()])
        component = max(busy, key=lambda c: ((c & nontrivial).bit_count(), -_low(c)))
        return self.first_of([lambda: self._recurse(component)])

    def _no_component(self) -> Optional[Found]:
        raise Shortage("components", "no component holds a nontrivial vertex")

    def _recurse(self, component: int) -> Optional[Found]:
        # members at scale 4n hold nP3; at scale n only the shared members convert
        try:
            return self._recurse_at(component, 4 * self.n)
        except Shortage as e:
            self.note(e.step, [], e.diagnostic)
        return self._recurse_at(component, self.n)

    def _recurse_at(self, component: int, scale: int) -> Found:
        sub, mapping = induced(self.G, component)
        pipeline_cls = CONNECTED_PIPELINES[self.base_id]
        inner = pipeline_cls(sub, self.base_id, scale, self.settings, self.table)
        self.note("recurse", [sub.order, scale], f"component at {mapping[0]}")
        try:
            outcome = inner.extract()
        except Shortage as e:
            raise Shortage(f"component/{e.step}", e.diagnostic)
        finally:
            for step in inner.trace:
                self.note(f"component/{step.step}", step.sizes, step.note)
        if isinstance(outcome, StepFailed):
            raise Shortage(f"component/{outcome.step}", outcome.diagnostic)
        if not isinstance(outcome, Found):
            raise Shortage("recurse", "component pipeline was not triggered")
        image = [mapping[v] for v in outcome.embedding.mapping]
        for member in self.family.members:
            found = self.certify(member.name, image)
            if found is not None:
                return found
        raise Shortage("convert", f"{outcome.member} holds no member of {self.family.theorem_id}")


def extract_witness(G: Graph, theorem_id: str, n: int, connected: bool = True,
                    settings: Optional[Settings] = None,
                    table: Optional[RamseyTable] = None) -> WitnessReport:
    """Run the extraction pipeline of a connected theorem.

    Args:
        G: Graph to search
        theorem_id: deg, alpha, c or adh
        n: Family parameter, n >= 2
        connected: False selects the corollary family and the
            component-splitting pipeline
        settings: Limits and witness mode
        table: Ramsey values for paper mode

    Returns:
        WitnessReport; Found outcomes are verified embeddings

    Raises:
        ProofStepError: E302 for an unknown theorem id
        GraphError: E004 for n < 2
        SearchLimitError: E203 when connected is set and G is not
    """
    if theorem_id not in CONNECTED_PIPELINES:
        raise unknown_theorem_error(theorem_id, ", ".join(CONNECTED_PIPELINES))
    logger.debug("witness %s:%d on %d vertices, connected=%s", theorem_id, n, G.order, connected)
    if not connected:
        return ComponentPipeline(G, theorem_id, n, settings, table).report(connected=False)
    pipeline = CONNECTED_PIPELINES[theorem_id](G, theorem_id, n, settings, table)
    count = component_count(G)
    if count > 1:
        raise make_error(ErrorCode.E203, what=f"witness {theorem_id}", components=count)
    return pipeline.report()
