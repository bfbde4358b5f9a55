"""
Decomposition files.

    tree
    <node count> <edge count>
    <a> <b>                      one line per tree edge
    bags
    <node>: <vertex> ...         one line per node, possibly without vertices
    torsos                       optional section
    torso <node>
    vertices: <vertex> ...
    satellite <label> <neighbor> | <subsumed nodes> | <vertices>
    edge <id> <u> <v>

Tree nodes are 0..N-1.
"""
from edgeadmit.exceptions.structure import PartitionError
from edgeadmit.models.multigraph import MultiGraph
from edgeadmit.schemas.structure import PartitionDocument, SatelliteInfo, Torso, TreePartition

SECTIONS = ("tree", "bags", "torsos")


def _join(values) -> str:
    return " ".join(map(str, values))


def serialize_partition(partition: TreePartition, torsos: dict[int, Torso] | None = None) -> str:
    lines = ["tree", f"{len(partition.nodes)} {len(partition.tree_edges)}"]
    lines.extend(f"{a} {b}" for a, b in partition.tree_edges)
    lines.append("bags")
    lines.extend(f"{node}: {_join(partition.bags[node])}".rstrip() for node in partition.nodes)
    if torsos:
        lines.append("torsos")
        for node in sorted(torsos):
            torso = torsos[node]
            lines.append(f"torso {node}")
            lines.append(f"vertices: {_join(torso.graph.sorted_vertices())}".rstrip())
            for satellite in torso.satellites:
                lines.append(
                    f"satellite {satellite.label} {satellite.neighbor} | "
                    f"{_join(satellite.subsumed)} | {_join(satellite.vertices)}"
                )
            lines.extend(f"edge {edge_id} {u} {v}" for edge_id, u, v in torso.graph.edges())
    return "\n".join(lines) + "\n"


def _ints(text: str, line_number: int) -> list[int]:
    try:
        return [int(token) for token in text.split()]
    except ValueError:
        raise PartitionError(f"line {line_number}: expected integers, got {text!r}") from None


def _split_sections(text: str) -> dict[str, list[tuple[int, str]]]:
    sections: dict[str, list[tuple[int, str]]] = {}
    current = None
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line in SECTIONS:
            current = line
            sections[current] = []
            continue
        if current is None:
            raise PartitionError(f"line {number}: content before the first section")
        sections[current].append((number, line))
    return sections


def parse_partition(text: str) -> PartitionDocument:
    """
    Raises:
        PartitionError: On missing sections or malformed lines.
    """
    sections = _split_sections(text)
    for name in ("tree", "bags"):
        if name not in sections:
            raise PartitionError(f"missing `{name}` section")

    tree_rows = sections["tree"]
    if not tree_rows:
        raise PartitionError("missing `<node count> <edge count>` line")
    header = _ints(tree_rows[0][1], tree_rows[0][0])
    if len(header) != 2:
        raise PartitionError("tree header must be `<node count> <edge count>`")
    node_count, edge_count = header
    if len(tree_rows) - 1 != edge_count:
        raise PartitionError(f"tree declares {edge_count} edges, found {len(tree_rows) - 1}")
    tree_edges = []
    for number, row in tree_rows[1:]:
        pair = _ints(row, number)
        if len(pair) != 2:
            raise PartitionError(f"line {number}: tree edge needs two nodes")
        tree_edges.append((min(pair), max(pair)))

    bags = {}
    for number, row in sections["bags"]:
        node_text, separator, vertices_text = row.partition(":")
        if not separator:
            raise PartitionError(f"line {number}: expected `<node>: <vertices>`")
        bags[_ints(node_text, number)[0]] = tuple(sorted(_ints(vertices_text, number)))
    nodes = tuple(range(node_count))

    torsos = _parse_torsos(sections.get("torsos", []), bags)
    return PartitionDocument(nodes=nodes, tree_edges=tuple(sorted(tree_edges)), bags=bags, torsos=torsos)


def _parse_torsos(rows: list[tuple[int, str]], bags: dict[int, tuple[int, ...]]) -> dict[int, Torso]:
    drafts: dict[int, dict] = {}
    current = None
    for number, row in rows:
        keyword, _, rest = row.partition(" ")
        if keyword == "torso":
            current = _ints(rest, number)[0]
            drafts[current] = {"vertices": [], "satellites": [], "edges": []}
        elif current is None:
            raise PartitionError(f"line {number}: torso content before `torso <node>`")
        elif keyword == "vertices:":
            drafts[current]["vertices"] = _ints(rest, number)
        elif row.startswith("vertices:"):
            drafts[current]["vertices"] = _ints(row.removeprefix("vertices:"), number)
        elif keyword == "satellite":
            parts = rest.split("|")
            if len(parts) != 3:
                raise PartitionError(f"line {number}: satellite needs `label neighbor | nodes | vertices`")
            head = _ints(parts[0], number)
            if len(head) != 2:
                raise PartitionError(f"line {number}: satellite needs a label and a neighbor")
            drafts[current]["satellites"].append(
                SatelliteInfo(
                    label=head[0],
                    neighbor=head[1],
                    subsumed=tuple(_ints(parts[1], number)),
                    vertices=tuple(_ints(parts[2], number)),
                )
            )
        elif keyword == "edge":
            values = _ints(rest, number)
            if len(values) != 3:
                raise PartitionError(f"line {number}: edge needs `id u v`")
            drafts[current]["edges"].append(tuple(values))
        else:
            raise PartitionError(f"line {number}: unknown torso line {row!r}")

    torsos = {}
    for node, draft in drafts.items():
        torsos[node] = Torso(
            node=node,
            bag=bags.get(node, ()),
            satellites=tuple(draft["satellites"]),
            graph=MultiGraph(vertices=draft["vertices"], edges=draft["edges"]),
        )
    return torsos
