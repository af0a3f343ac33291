import random

from stlab.digraph import Digraph, build_digraph


def random_digraph(rng: random.Random, n: int, p: float = 0.5) -> Digraph:
    arcs = [
        (u, v)
        for u in range(n)
        for v in range(n)
        if u != v and rng.random() < p
    ]
    return build_digraph(n, arcs)


def naive_find_cycle(g: Digraph, length: int):
    """Reference detector: try every sequence of `length` distinct vertices."""
    import itertools

    for seq in itertools.permutations(range(g.n), length):
        if seq[0] != min(seq):
            continue
        if all(g.has_arc(seq[i], seq[(i + 1) % length]) for i in range(length)):
            return seq
    return None
