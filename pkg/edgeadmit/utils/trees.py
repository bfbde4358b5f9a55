import networkx as nx


def subtree_nodes(tree: nx.Graph, node: int, parent: int) -> set[int]:
    """Tree nodes on the `node` side of the tree edge (parent, node)."""
    pruned = tree.copy()
    pruned.remove_edge(parent, node)
    return set(nx.node_connected_component(pruned, node))
