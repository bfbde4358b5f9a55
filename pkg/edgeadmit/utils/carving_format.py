from edgeadmit.schemas.carving import RootedCarving


def render_carving(carving: RootedCarving) -> str:
    """
    Nested parenthesized form of a carving.

    A leaf is `{v,...}`; an internal node is `(left@w1 right@w2)w=w0`, where
    w1 and w2 are the weights of the edges to the children and w0 is the node
    weight. Example: `({0,1,3}@2 {2}@2)w=2`.
    """

    def render(node: int) -> str:
        if node not in carving.children:
            return "{" + ",".join(map(str, carving.leaf_vertices(node))) + "}"
        left, right = carving.children[node]
        return (
            f"({render(left)}@{carving.edge_weights[left]} "
            f"{render(right)}@{carving.edge_weights[right]})w={carving.node_weights[node]}"
        )

    return render(carving.root)
