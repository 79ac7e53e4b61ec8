"""Report Rendering for the CLI.

Every command builds one plain dict (the JSON document) and renders it
either as JSON or as text tables, so both formats carry the same data.
JSON output sorts its keys and the tables use fixed layouts, which keeps
output byte-identical between runs.
"""

import json
from typing import Any, Callable, Dict, List, Sequence

FORMATS = ("json", "table")


def to_json(data: Any) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def _cell(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, (list, tuple)):
        return " ".join(_cell(v) for v in value) if value else "-"
    return str(value)


def box_table(title: str, headers: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    """Draw a boxed table with a title bar and one line per row."""
    cells = [[_cell(v) for v in row] for row in rows]
    widths = [len(h) for h in headers]
    for row in cells:
        for i, text in enumerate(row):
            widths[i] = max(widths[i], len(text))
    inner = sum(widths) + 3 * (len(widths) - 1)
    inner = max(inner, len(title))

    def line(values: Sequence[str]) -> str:
        text = " │ ".join(v.ljust(w) for v, w in zip(values, widths))
        return f"│ {text.ljust(inner)} │"

    lines = ["┌" + "─" * (inner + 2) + "┐", f"│ {title.ljust(inner)} │"]
    lines.append("├" + "─" * (inner + 2) + "┤")
    lines.append(line(list(headers)))
    lines.append("├" + "─" * (inner + 2) + "┤")
    if cells:
        lines.extend(line(row) for row in cells)
    else:
        lines.append(f"│ {'(none)'.ljust(inner)} │")
    lines.append("└" + "─" * (inner + 2) + "┘")
    return "\n".join(lines) + "\n"


def _key_values(title: str, data: Dict[str, Any], keys: Sequence[str]) -> str:
    return box_table(title, ["field", "value"], [[k, data.get(k)] for k in keys])


def table_analysis(data: Dict[str, Any]) -> str:
    parts = []
    for graph in data["graphs"]:
        kinds = list(graph["params"])
        rows = [[v] + [graph["params"][k][v] for k in kinds] for v in range(graph["order"])]
        rows.append(["h"] + [graph["h_index"][k] for k in kinds])
        title = f"graph {graph['index']}  {graph['graph6']}  order {graph['order']}"
        parts.append(box_table(title, ["v"] + kinds, rows))
    return "".join(parts)


def table_freeness(data: Dict[str, Any]) -> str:
    rows = [[g["index"], g["graph6"], g["free"], g["member"], g["embedding"]]
            for g in data["graphs"]]
    return box_table(f"freeness against {data['family']}",
                     ["#", "graph6", "free", "member", "embedding"], rows)


def table_order(data: Dict[str, Any]) -> str:
    rows = [[c["right"], c["left"], c["embedding"]] for c in data["certificates"]]
    title = f"left <= right: {_cell(data['holds'])}"
    return box_table(title, ["right member", "left member inside", "embedding"], rows)


def table_witness(data: Dict[str, Any]) -> str:
    parts = []
    for report in data["reports"]:
        outcome = report["outcome"]
        summary = dict(outcome)
        title = (f"graph {report['index']}  {report['theorem']}:{report['n']}  "
                 f"{report['mode']}  -> {outcome['kind']}")
        parts.append(_key_values(title, summary, sorted(summary)))
        trace = [[s["step"], s["sizes"], s["note"]] for s in report["trace"]]
        parts.append(box_table("trace", ["step", "sizes", "note"], trace))
        if report["constants"]:
            constants = [[k, report["constants"][k]] for k in sorted(report["constants"])]
            parts.append(box_table("constants", ["name", "value"], constants))
        if report["external"]:
            parts.append(box_table("external constants", ["name"],
                                   [[name] for name in report["external"]]))
    return "".join(parts)


def table_scan(data: Dict[str, Any]) -> str:
    parts = [_key_values("scan", data,
                         [k for k in ("checks", "graphs", "skipped", "passed", "family",
                                      "free_graphs") if k in data])]
    rows = [[v["index"], v["graph6"], v["check"], v["message"]] for v in data["violations"]]
    parts.append(box_table("violations", ["#", "graph6", "check", "message"], rows))
    return "".join(parts)


def table_extremal(data: Dict[str, Any]) -> str:
    rows = [[r["order"], r["graphs"], r["free_graphs"], r["max_count"], r["witness"]]
            for r in data["rows"]]
    title = (f"{data['family']}  {data['param']} >= {data['threshold']}"
             f"{'  connected' if data['connected_only'] else ''}  max {_cell(data['maximum'])}")
    return box_table(title, ["order", "graphs", "free", "max count", "witness"], rows)


def table_certificate(data: Dict[str, Any]) -> str:
    return _key_values(
        f"{data['constant']} = {_cell(data['value'])}",
        data,
        ["holds", "k6_colorings", "k6_passed", "k6_failures", "pentagon_triangles",
         "pentagon_mono_clique"],
    )


def table_shapes(data: Dict[str, Any]) -> str:
    rows = [[r["order"], r["graphs"], r["covered"], r["worst"], r["worst_graph"]]
            for r in data["rows"]]
    title = f"P_{data['n']} / K_{data['n']} / K_1,{data['n']}  estimate {_cell(data['estimate'])}"
    return box_table(title, ["order", "connected", "covered", "worst", "worst graph"], rows)


def table_necessity(data: Dict[str, Any]) -> str:
    rows = [[r["member"], r["count"], r["exceeds"]] for r in data["rows"]]
    title = f"{data['theorem']} at n={data['n']}  ({data['bound']})  holds: {_cell(data['holds'])}"
    return box_table(title, ["member", "count", "exceeds"], rows)


def table_family(data: Dict[str, Any]) -> str:
    rows = [[m["name"], m["order"], m["graph6"]] for m in data["members"]]
    return box_table(data["family"], ["member", "order", "graph6"], rows)


TableRenderer = Callable[[Dict[str, Any]], str]


def render(data: Dict[str, Any], fmt: str, table: TableRenderer) -> str:
    """Render data as JSON or through its table renderer."""
    if fmt == "json":
        return to_json(data)
    return table(data)


def lines_of(values: List[str]) -> str:
    return "".join(f"{v}\n" for v in values)
