"""Named Graphs and Forbidden Families.

Every named graph has a fixed labelling so embeddings are reproducible:

    P_n          path 0-1-...-(n-1)
    C_n          cycle 0-1-...-(n-1)-0, n >= 3
    K_{s,t}      parts 0..s-1 and s..s+t-1
    K_{1,n}^*    center 0, leaves 1..n, the pendant of leaf i is n+i
    K_n^*        clique 0..n-1, the pendant of i is n+i
    CK_n         cliques 0..n-1 and n..2n-1, matching i <-> n+i
    T_n          clique 0..n-1 joined to the stable set n..2n-1, apex 2n on n..2n-1
    K_n^n        clique 0..n-1, the pendants of i are n+i*n .. n+i*n+n-1
    K_2+nK_1     edge 0-1, then n vertices 2..n+1 joined to it
    K_1+nK_2     apex 0, pairs (1+2i, 2+2i)
    K_1+nP_3     apex 0, copy i on 1+3i..3+3i with middle 2+3i
    E_2+K_n      0 and 1, then the clique 2..n+1
    K_n+E_n      clique 0..n-1, then the stable set n..2n-1
    nG           copy i on the block i|G|..(i+1)|G|-1
"""

import re
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Tuple

from .errors import ErrorCode, make_error, unknown_theorem_error
from .graph import Graph, build_graph, disjoint_copies, empty_graph, join_graphs


@dataclass(frozen=True)
class GraphName:
    """A named graph: a tag and one or two positive parameters."""
    tag: str
    params: Tuple[int, ...]

    def __str__(self) -> str:
        p = self.params
        return _RENDER[self.tag](p)


_RENDER: Dict[str, Callable[[Tuple[int, ...]], str]] = {
    "K": lambda p: f"K{p[0]}",
    "E": lambda p: f"E{p[0]}",
    "P": lambda p: f"P{p[0]}",
    "C": lambda p: f"C{p[0]}",
    "K_st": lambda p: f"K{p[0]},{p[1]}",
    "K1n_star": lambda p: f"K1,{p[0]}*",
    "Kn_star": lambda p: f"K{p[0]}*",
    "CK": lambda p: f"CK{p[0]}",
    "T": lambda p: f"T{p[0]}",
    "Kn_n": lambda p: f"K{p[0]}^{p[0]}",
    "K2_plus_nK1": lambda p: f"K2+{p[0]}K1",
    "K1_plus_nK2": lambda p: f"K1+{p[0]}K2",
    "K1_plus_nP3": lambda p: f"K1+{p[0]}P3",
    "E2_plus_K": lambda p: f"E2+K{p[0]}",
    "K_plus_E": lambda p: f"K{p[0]}+E{p[0]}",
    "nP3": lambda p: f"{p[0]}P3",
    "nK3": lambda p: f"{p[0]}K3",
    "nK1n": lambda p: f"{p[0]}K1,{p[0]}",
}

TAGS = tuple(_RENDER)

# Checked in order; the first full match wins.
_PATTERNS: List[Tuple[str, "re.Pattern[str]"]] = [
    ("K1n_star", re.compile(r"K1,(\d+)\*")),
    ("K_st", re.compile(r"K(\d+),(\d+)")),
    ("Kn_star", re.compile(r"K(\d+)\*")),
    ("Kn_n", re.compile(r"K(\d+)\^(\d+)")),
    ("K2_plus_nK1", re.compile(r"K2\+(\d+)K1")),
    ("K1_plus_nK2", re.compile(r"K1\+(\d+)K2")),
    ("K1_plus_nP3", re.compile(r"K1\+(\d+)P3")),
    ("E2_plus_K", re.compile(r"E2\+K(\d+)")),
    ("K_plus_E", re.compile(r"K(\d+)\+E(\d+)")),
    ("CK", re.compile(r"CK(\d+)")),
    ("nP3", re.compile(r"(\d+)P3")),
    ("nK3", re.compile(r"(\d+)K3")),
    ("nK1n", re.compile(r"(\d+)K1,(\d+)")),
    ("K", re.compile(r"K(\d+)")),
    ("E", re.compile(r"E(\d+)")),
    ("P", re.compile(r"P(\d+)")),
    ("C", re.compile(r"C(\d+)")),
    ("T", re.compile(r"T(\d+)")),
]

# tags whose two written numbers must agree
_SQUARE = {"Kn_n", "K_plus_E", "nK1n"}


def parse_graph_name(text: str) -> GraphName:
    """Read the CLI syntax, e.g. 'K5', 'K1,4*', 'K3^3', '3K1,3'.

    TeX-ish spellings such as 'K_{1,4}^*' are accepted too.
    """
    s = re.sub(r"[\s_{}]", "", text).replace("^*", "*")
    for tag, pattern in _PATTERNS:
        match = pattern.fullmatch(s)
        if not match:
            continue
        values = tuple(int(g) for g in match.groups())
        if tag in _SQUARE:
            if values[0] != values[1]:
                raise make_error(ErrorCode.E106, text=text)
            values = values[:1]
        return GraphName(tag, values)
    raise make_error(ErrorCode.E106, text=text)


def _check(name: GraphName, minimum: int = 1) -> None:
    arity = 2 if name.tag == "K_st" else 1
    if len(name.params) != arity:
        raise make_error(
            ErrorCode.E004,
            what=name.tag,
            details=f"expected {arity} parameter(s), got {len(name.params)}",
        )
    for p in name.params:
        if p < minimum:
            raise make_error(ErrorCode.E004, what=str(name), details=f"parameters must be >= {minimum}")


def complete_graph(n: int) -> Graph:
    return build_graph(n, [(i, j) for j in range(n) for i in range(j)])


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(s: int, t: int) -> Graph:
    return build_graph(s + t, [(i, s + j) for i in range(s) for j in range(t)])


def star_graph(n: int) -> Graph:
    return complete_bipartite(1, n)


def _subdivided_star(n: int) -> Graph:
    edges = [(0, i) for i in range(1, n + 1)]
    edges += [(i, n + i) for i in range(1, n + 1)]
    return build_graph(2 * n + 1, edges)


def _corona(n: int, pendants: int) -> Graph:
    edges = [(i, j) for j in range(n) for i in range(j)]
    edges += [(i, n + i * pendants + j) for i in range(n) for j in range(pendants)]
    return build_graph(n + n * pendants, edges)


def _clique_pair(n: int) -> Graph:
    edges = [(i, j) for j in range(n) for i in range(j)]
    edges += [(n + i, n + j) for j in range(n) for i in range(j)]
    edges += [(i, n + i) for i in range(n)]
    return build_graph(2 * n, edges)


def _apex_threshold(n: int) -> Graph:
    base = join_graphs(complete_graph(n), empty_graph(n))
    edges = base.edges() + [(2 * n, n + i) for i in range(n)]
    return build_graph(2 * n + 1, edges)


def named_graph(name: GraphName) -> Graph:
    """Construct a named graph with its documented labelling."""
    _check(name, minimum=3 if name.tag == "C" else 1)
    n = name.params[0]
    tag = name.tag
    if tag == "K":
        return complete_graph(n)
    if tag == "E":
        return empty_graph(n)
    if tag == "P":
        return path_graph(n)
    if tag == "C":
        return cycle_graph(n)
    if tag == "K_st":
        return complete_bipartite(n, name.params[1])
    if tag == "K1n_star":
        return _subdivided_star(n)
    if tag == "Kn_star":
        return _corona(n, 1)
    if tag == "CK":
        return _clique_pair(n)
    if tag == "T":
        return _apex_threshold(n)
    if tag == "Kn_n":
        return _corona(n, n)
    if tag == "K2_plus_nK1":
        return join_graphs(complete_graph(2), empty_graph(n))
    if tag == "K1_plus_nK2":
        return join_graphs(complete_graph(1), disjoint_copies(n, complete_graph(2)))
    if tag == "K1_plus_nP3":
        return join_graphs(complete_graph(1), disjoint_copies(n, path_graph(3)))
    if tag == "E2_plus_K":
        return join_graphs(empty_graph(2), complete_graph(n))
    if tag == "K_plus_E":
        return join_graphs(complete_graph(n), empty_graph(n))
    if tag == "nP3":
        return disjoint_copies(n, path_graph(3))
    if tag == "nK3":
        return disjoint_copies(n, complete_graph(3))
    if tag == "nK1n":
        return disjoint_copies(n, star_graph(n))
    raise make_error(ErrorCode.E004, what="graph name", details=f"unknown tag '{tag}'")


def graph_from_text(text: str) -> Graph:
    return named_graph(parse_graph_name(text))


@dataclass(frozen=True)
class FamilyMember:
    name: GraphName
    graph: Graph


@dataclass
class FamilySpec:
    """A forbidden family H(n) for one theorem.

    Attributes:
        theorem_id: Theorem identifier, or 'custom' for ad-hoc lists
        n: Family parameter
        members: Named members in statement order
    """
    theorem_id: str
    n: int
    members: List[FamilyMember] = field(default_factory=list)

    @property
    def graphs(self) -> List[Graph]:
        return [m.graph for m in self.members]

    def names(self) -> List[str]:
        return [str(m.name) for m in self.members]

    def __str__(self) -> str:
        return f"{self.theorem_id}:{self.n} {{{', '.join(self.names())}}}"


def _g(tag: str, *params: int) -> GraphName:
    return GraphName(tag, params)


# theorem id -> member names for a given n, in statement order
FAMILIES: Dict[str, Callable[[int], List[GraphName]]] = {
    "deg": lambda n: [
        _g("K", n), _g("P", n), _g("K1n_star", n), _g("K_st", 2, n),
        _g("K2_plus_nK1", n), _g("K1_plus_nK2", n),
    ],
    "alpha": lambda n: [
        _g("Kn_star", n), _g("P", n), _g("K1n_star", n), _g("K_st", 2, n),
        _g("E2_plus_K", n), _g("K1_plus_nP3", n), _g("CK", n),
    ],
    "c": lambda n: [
        _g("Kn_star", n), _g("P", n), _g("K1n_star", n), _g("K_st", 2, n),
        _g("CK", n), _g("T", n),
    ],
    "adh": lambda n: [_g("Kn_star", n), _g("K1n_star", n), _g("P", n)],
    "h-deg": lambda n: [_g("K", n), _g("K_st", n, n), _g("nK1n", n)],
    "h-alpha": lambda n: [_g("K_st", n, n), _g("nK1n", n), _g("K_plus_E", n), _g("Kn_n", n)],
    "h-c": lambda n: [_g("K_st", n, n), _g("nK1n", n), _g("K_plus_E", n), _g("Kn_n", n)],
    "h-adh": lambda n: [_g("nK1n", n), _g("Kn_n", n)],
    "cor-deg": lambda n: [
        _g("K", n), _g("nP3", n), _g("nK3", n), _g("K1n_star", n), _g("K_st", 2, n),
        _g("K2_plus_nK1", n), _g("K1_plus_nK2", n),
    ],
    "cor-alpha": lambda n: [
        _g("Kn_star", n), _g("nP3", n), _g("K1n_star", n), _g("K_st", 2, n),
        _g("E2_plus_K", n), _g("CK", n),
    ],
    "cor-c": lambda n: [
        _g("Kn_star", n), _g("nP3", n), _g("K1n_star", n), _g("K_st", 2, n),
        _g("CK", n), _g("T", n),
    ],
    "cor-adh": lambda n: [_g("Kn_star", n), _g("nP3", n), _g("K1n_star", n)],
    "dom": lambda n: [_g("K1n_star", n), _g("Kn_star", n), _g("P", n)],
    "maxdeg": lambda n: [_g("K", n), _g("K_st", 1, n)],
}

THEOREM_IDS = tuple(FAMILIES)


def theorem_family(theorem_id: str, n: int) -> FamilySpec:
    """Build the forbidden family of a theorem at parameter n.

    Args:
        theorem_id: One of THEOREM_IDS
        n: Family parameter, n >= 1

    Returns:
        FamilySpec with every member constructed by named_graph
    """
    builder = FAMILIES.get(theorem_id)
    if builder is None:
        raise unknown_theorem_error(theorem_id, ", ".join(THEOREM_IDS))
    if n < 1:
        raise make_error(ErrorCode.E004, what=f"family {theorem_id}", details="n must be >= 1")
    members = [FamilyMember(name, named_graph(name)) for name in builder(n)]
    return FamilySpec(theorem_id, n, members)


def parse_family(text: str) -> FamilySpec:
    """Read '<theorem>:<n>' or a comma-free list 'K3;P4;CK3' of graph names."""
    if ":" in text:
        theorem_id, _, raw_n = text.partition(":")
        try:
            n = int(raw_n)
        except ValueError:
            raise make_error(ErrorCode.E402, details=f"family '{text}' needs an integer after ':'")
        return theorem_family(theorem_id.strip(), n)
    names = [parse_graph_name(part) for part in text.split(";") if part.strip()]
    return FamilySpec("custom", 0, [FamilyMember(name, named_graph(name)) for name in names])
