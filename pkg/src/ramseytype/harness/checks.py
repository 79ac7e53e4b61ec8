"""Invariant Checks Registry.

Each check takes a graph and returns a list of violation messages; an
empty list means the graph passed. Checks on connected-only statements
pass vacuously on disconnected graphs.
"""

import logging
import random
from functools import lru_cache
from itertools import combinations
from typing import Any, Callable, Dict, List, Optional, Tuple

from ..config.settings import SearchLimits
from ..engines.pruning import RULES, prune
from ..engines.trichotomy import CLIQUE, PATH, STAR, path_clique_star
from ..errors import ErrorCode, make_error, order_cap_error
from ..generators import THEOREM_IDS, complete_graph, path_graph, star_graph, theorem_family
from ..graph import Graph, bits, component_count, is_connected
from ..isomorphism import family_le, is_family_free, verify_embedding
from ..params import (
    CHAIN,
    cut_vertices,
    domination,
    h_index_of,
    induced_matching_number,
    is_induced_matching,
    parameter_table,
)

logger = logging.getLogger(__name__)

Check = Callable[[Graph, SearchLimits], List[str]]

SUBSET_SWEEP_CAP = 16
CONFLUENCE_ORDERS = 5
FAMILY_LE_N = 3


def check_chain(G: Graph, limits: SearchLimits) -> List[str]:
    """deg(v) >= alpha(N(v)) >= c(N(v)) >= adh(v) at every vertex."""
    tables = [parameter_table(G, kind, limits) for kind in CHAIN]
    violations = []
    for v in range(G.order):
        values = [table[v] for table in tables]
        if any(a < b for a, b in zip(values, values[1:])):
            violations.append(f"vertex {v}: deg/alpha/c/adh = {values} is not non-increasing")
    return violations


def check_cut_adhesion(G: Graph, limits: SearchLimits) -> List[str]:
    """adh(v) >= 2 exactly at the articulation points."""
    cut = cut_vertices(G)
    table = parameter_table(G, CHAIN[-1], limits)
    return [
        f"vertex {v}: adh = {value} but cut vertex = {v in cut}"
        for v, value in enumerate(table)
        if (value >= 2) != (v in cut)
    ]


def check_cds_cut(G: Graph, limits: SearchLimits) -> List[str]:
    """A minimum connected dominating set contains every cut vertex."""
    if G.order == 0 or not is_connected(G):
        return []
    _, dominating = domination(G, connected=True, limits=limits)
    missing = cut_vertices(G) - dominating
    if missing:
        return [f"minimum connected dominating set {dominating} misses cut vertices {missing}"]
    return []


def check_cds_subsets(G: Graph, limits: SearchLimits) -> List[str]:
    """No connected dominating set at all omits a cut vertex."""
    if G.order == 0 or not is_connected(G):
        return []
    if G.order > SUBSET_SWEEP_CAP:
        raise order_cap_error("connected dominating subset sweep", G.order, SUBSET_SWEEP_CAP)
    closed = [row | (1 << v) for v, row in enumerate(G.rows)]
    cut = cut_vertices(G).mask
    violations = []
    for mask in range(1, 1 << G.order):
        if cut & ~mask == 0:
            continue
        covered = 0
        for v in bits(mask):
            covered |= closed[v]
        if covered == G.full_mask and component_count(G, mask) == 1:
            violations.append(f"connected dominating set {sorted(bits(mask))} omits a cut vertex")
    return violations


def _brute_h_index(values: List[int]) -> int:
    return max(k for k in range(len(values) + 1) if sum(1 for x in values if x >= k) >= k)


def check_h_index(G: Graph, limits: SearchLimits) -> List[str]:
    """h-index agrees with its definition and follows the parameter chain."""
    violations = []
    indices = []
    for kind in CHAIN:
        table = parameter_table(G, kind, limits)
        h = h_index_of(table)
        if h != _brute_h_index(table):
            violations.append(f"h-index of {kind.value} is {h}, definition gives "
                              f"{_brute_h_index(table)}")
        indices.append(h)
    if any(a < b for a, b in zip(indices, indices[1:])):
        violations.append(f"h-indices deg/alpha/c/adh = {indices} are not non-increasing")
    return violations


def check_induced_matching(G: Graph, limits: SearchLimits) -> List[str]:
    """The exact induced matching number is attained and cannot be beaten."""
    size, witness = induced_matching_number(G, limits)
    if len(witness) != size or not is_induced_matching(G, witness):
        return [f"induced matching witness {witness} does not verify"]
    for larger in combinations(G.edges(), size + 1):
        if is_induced_matching(G, list(larger)):
            return [f"induced matching {list(larger)} beats the reported size {size}"]
    return []


@lru_cache(maxsize=None)
def _ordered_family_pairs(n: int) -> Tuple[Tuple[str, str], ...]:
    families = {theorem_id: theorem_family(theorem_id, n) for theorem_id in THEOREM_IDS}
    pairs = []
    for left in THEOREM_IDS:
        for right in THEOREM_IDS:
            if left != right and family_le(families[left], families[right]).holds:
                pairs.append((left, right))
    logger.debug("family-le: %d ordered pair(s) at n=%d", len(pairs), n)
    return tuple(pairs)


def check_family_le(G: Graph, limits: SearchLimits) -> List[str]:
    """Whenever left <= right, a left-free graph is also right-free."""
    pairs = _ordered_family_pairs(FAMILY_LE_N)
    free: Dict[str, bool] = {}

    def is_free(theorem_id: str) -> bool:
        if theorem_id not in free:
            family = theorem_family(theorem_id, FAMILY_LE_N)
            free[theorem_id] = is_family_free(G, family, limits).free
        return free[theorem_id]

    return [
        f"{left}:{FAMILY_LE_N} <= {right}:{FAMILY_LE_N} but the graph is only {left}-free"
        for left, right in pairs
        if is_free(left) and not is_free(right)
    ]


def _shuffled_prune(G: Graph, rule: str, rng: random.Random) -> int:
    alive = G.full_mask
    while True:
        ready = []
        for v in bits(alive):
            neighbourhood = G.rows[v] & alive
            if rule == "degree1":
                trivial = neighbourhood.bit_count() <= 1
            else:
                trivial = G.is_clique(neighbourhood)
            if trivial:
                ready.append(v)
        if not ready:
            return alive
        alive &= ~(1 << rng.choice(ready))


def check_prune_confluence(G: Graph, limits: SearchLimits) -> List[str]:
    """Pruning reaches the same core whatever order the deletions take."""
    violations = []
    for rule in RULES:
        core = sum(1 << v for v in prune(G, rule).kept)
        for seed in range(CONFLUENCE_ORDERS):
            other = _shuffled_prune(G, rule, random.Random(seed))
            if other != core:
                violations.append(
                    f"{rule}: deletion order {seed} keeps {sorted(bits(other))}, "
                    f"smallest-first keeps {sorted(bits(core))}"
                )
    return violations


def check_trichotomy(G: Graph, limits: SearchLimits) -> List[str]:
    """The path, clique and star certificates of a connected graph verify."""
    if G.order == 0 or not is_connected(G):
        return []
    result = path_clique_star(G, limits)
    patterns = {CLIQUE: complete_graph, PATH: path_graph}
    violations = []
    for shape, (k, embedding) in result.candidates.items():
        pattern = star_graph(k) if shape == STAR else patterns[shape](k)
        if not verify_embedding(G, pattern, embedding):
            violations.append(f"{shape} certificate {list(embedding.mapping)} does not verify")
    if G.order >= 2 and result.candidates[PATH][0] < 2:
        violations.append("a connected graph with an edge has no induced P_2")
    return violations


CHECKS: Dict[str, Dict[str, Any]] = {
    "chain": {"function": check_chain, "summary": "deg >= alpha(N) >= c(N) >= adh"},
    "cut-adh": {"function": check_cut_adhesion, "summary": "adh >= 2 iff cut vertex"},
    "cds-cut": {"function": check_cds_cut,
                "summary": "minimum connected dominating set holds every cut vertex"},
    "cds-subsets": {"function": check_cds_subsets,
                    "summary": "no connected dominating set omits a cut vertex"},
    "h-index": {"function": check_h_index, "summary": "h-index definition and chain"},
    "induced-matching": {"function": check_induced_matching,
                         "summary": "induced matching number is exact"},
    "family-le": {"function": check_family_le,
                  "summary": "family order transfers freeness at n=3"},
    "prune-confluence": {"function": check_prune_confluence,
                         "summary": "pruning core is independent of deletion order"},
    "trichotomy": {"function": check_trichotomy,
                   "summary": "path, clique and star certificates verify"},
}

CHECK_IDS = tuple(CHECKS)


def resolve_checks(names: List[str]) -> List[str]:
    """Validate check ids, expanding "all" and dropping repeats."""
    resolved: List[str] = []
    for name in names:
        if name == "all":
            resolved.extend(c for c in CHECK_IDS if c not in resolved)
            continue
        if name not in CHECKS:
            raise make_error(ErrorCode.E303, check_id=name, available=", ".join(CHECK_IDS))
        if name not in resolved:
            resolved.append(name)
    return resolved


def run_check(check_id: str, G: Graph, limits: Optional[SearchLimits] = None) -> List[str]:
    entry = CHECKS.get(check_id)
    if entry is None:
        raise make_error(ErrorCode.E303, check_id=check_id, available=", ".join(CHECK_IDS))
    function: Check = entry["function"]
    return function(G, limits if limits is not None else SearchLimits())
