"""Plotting module."""

import matplotlib.pyplot as plt
import networkx as nx

from KOSTKA import paths
from KOSTKA import tableaux


def _is_path(x):
    return bool(x) and bool(x[0]) and isinstance(x[0][0], tuple)


def _label(x):
    if _is_path(x):
        return paths.path_to_str(x)
    return tableaux.tableau_to_str(x)


def crystal_graph(elements, n, affine=True):
    """Crystal graph on a finite set of tableaux or paths.

    Args:
        elements: rectangular tableaux, or paths given as tuples of tableaux
        n: rank
        affine: include the f_0 arrows

    Returns:
        networkx.DiGraph with an edge x -> f_i(x) labelled by i whenever both lie in elements
    """
    elements = list(elements)
    nodes = set(elements)
    G = nx.DiGraph()
    for x in elements:
        G.add_node(x, label=_label(x))

    for x in elements:
        for i in range(0 if affine else 1, n):
            if _is_path(x):
                y = paths.tensor_crystal_op(x, i, n, "lower")
            else:
                y = tableaux.crystal_op(x, i, n, "lower")
            if y is not None and y in nodes:
                G.add_edge(x, y, i=i, color=f"C{i}")
    return G


def path_crystal_graph(rects, n, affine=True):
    """Crystal graph of all paths in B^{R_L} (x) ... (x) B^{R_1}."""
    return crystal_graph(paths.enumerate_paths(rects, n), n, affine)


def create_axis(fig=None):
    """Create axis."""
    if fig is None:
        fig = plt.figure()
    ax = fig.add_subplot(1, 1, 1)
    return fig, ax


def draw_crystal_graph(
    G,
    ax=None,
    layout="spring",
    with_labels=True,
    node_size=300,
    font_size=8,
    axes_visible=False,
):
    """Draw a crystal graph with one colour per arrow index.

    Args:
        G: networkx.DiGraph built by crystal_graph
        ax: matplotlib axis (created if None)
        layout: 'spring' or 'kamada_kawai'
        with_labels: write the tableaux on the nodes
        node_size: node size
        font_size: label font size
        axes_visible: show axes

    Returns:
        matplotlib axis
    """
    if ax is None:
        _, ax = create_axis()

    if layout == "kamada_kawai":
        pos = nx.kamada_kawai_layout(G)
    else:
        pos = nx.spring_layout(G, seed=0)

    nx.draw_networkx_nodes(G, pos=pos, node_size=node_size, node_color="w", edgecolors="k", ax=ax)
    edges = list(G.edges(data=True))
    nx.draw_networkx_edges(
        G,
        pos=pos,
        edgelist=[(u, v) for u, v, _ in edges],
        edge_color=[d["color"] for _, _, d in edges],
        arrows=True,
        ax=ax,
    )
    if with_labels:
        nx.draw_networkx_labels(
            G, pos=pos, labels=nx.get_node_attributes(G, "label"), font_size=font_size, ax=ax
        )

    if not axes_visible:
        ax.axis("off")

    return ax
