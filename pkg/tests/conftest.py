"""Shared fixtures: the tree catalog and random-tree generation."""

import random

import pytest

from qplumb.plumbing import PlumbedGraph


def hopf_graph(f1=0, f2=-1):
    return PlumbedGraph.build({"v1": f1, "v2": f2}, [("v1", "v2")])


def path_graph(n, framings=None):
    names = [f"p{i}" for i in range(n)]
    f = dict(zip(names, framings or [0] * n))
    return PlumbedGraph.build(f, [(names[i], names[i + 1]) for i in range(n - 1)])


def star_graph(leaves, framings=None):
    names = ["c"] + [f"l{i}" for i in range(leaves)]
    f = dict(zip(names, framings or [0] * (leaves + 1)))
    return PlumbedGraph.build(f, [("c", leaf) for leaf in names[1:]])


def caterpillar_graph(spine, hairs, framings=None):
    """Path of `spine` vertices with extra leaves attached per `hairs` map."""
    names = [f"s{i}" for i in range(spine)]
    edges = [(names[i], names[i + 1]) for i in range(spine - 1)]
    for pos, count in hairs.items():
        for j in range(count):
            leaf = f"h{pos}_{j}"
            names.append(leaf)
            edges.append((f"s{pos}", leaf))
    f = dict(zip(names, framings or [0] * len(names)))
    return PlumbedGraph.build(f, edges)


def catalog_trees():
    """The fixed acceptance catalog: paths of 2..5 edges, stars with 3..5
    leaves (the 4-vertex star is the branching shape of the smallest
    interesting example), and two caterpillars."""
    return {
        "path3": path_graph(3),
        "path4": path_graph(4),
        "path5": path_graph(5),
        "path6": path_graph(6),
        "star3": star_graph(3),
        "star4": star_graph(4),
        "star5": star_graph(5),
        "caterpillar5": caterpillar_graph(3, {1: 2}),
        "caterpillar6": caterpillar_graph(4, {1: 1, 2: 1}),
    }


def random_tree(rng: random.Random, n_vertices: int, framing_span=2) -> PlumbedGraph:
    """Uniform-ish random tree built by random attachment, random framings."""
    names = [f"t{i}" for i in range(n_vertices)]
    edges = []
    for i in range(1, n_vertices):
        j = rng.randrange(i)
        edges.append((names[j], names[i]))
    framings = {v: rng.randint(-framing_span, framing_span) for v in names}
    base = rng.choice(names)
    return PlumbedGraph.build(framings, edges, base)


def random_exact_colors(rng: random.Random, graph: PlumbedGraph, r: int) -> dict:
    return {v: rng.randint(1, r - 1) for v in graph.vertices}


@pytest.fixture
def catalog():
    return catalog_trees()
