from models.bipartite_graph import BipartiteGraph
from shared.errors import GraphValidationError


def _require_positive(**values: int):
    for name, value in values.items():
        if value < 1:
            raise GraphValidationError(f"{name} must be at least 1, got {value}")


def single_edge() -> BipartiteGraph:
    """P1."""
    return BipartiteGraph(1, 1, ((0, 0),))


def complete(a: int, b: int) -> BipartiteGraph:
    """K_{a,b} with a class-1 and b class-2 vertices."""
    _require_positive(a=a, b=b)
    return BipartiteGraph(a, b, tuple((i, j) for i in range(a) for j in range(b)))


def even_cycle(length: int) -> BipartiteGraph:
    """C_{2k}: class-1 vertex i is adjacent to class-2 vertices i and i-1 (mod k)."""
    if length < 4 or length % 2:
        raise GraphValidationError(f"even cycle length must be even and at least 4, got {length}")
    k = length // 2
    edges = {(i, i) for i in range(k)} | {(i, (i - 1) % k) for i in range(k)}
    return BipartiteGraph(k, k, tuple(edges))


def path(m: int, start_class: int = 1) -> BipartiteGraph:
    """
    P_m: the path with m edges. Walking from the first endpoint, vertices alternate between
    classes starting with `start_class`; path(2) is K_{2,1} for start_class=1, K_{1,2} otherwise.
    """
    _require_positive(m=m)
    if start_class not in (1, 2):
        raise GraphValidationError(f"start_class must be 1 or 2, got {start_class}")

    edges = []
    for step in range(m):
        # the edge joins walk positions step and step + 1
        even_index = (step + 1) // 2 if step % 2 else step // 2
        edges.append((even_index, step // 2))

    n_even, n_odd = m // 2 + 1, (m + 1) // 2
    if start_class == 1:
        return BipartiteGraph(n_even, n_odd, tuple(edges))
    return BipartiteGraph(n_odd, n_even, tuple((j, i) for i, j in edges))


def matching(m: int) -> BipartiteGraph:
    _require_positive(m=m)
    return BipartiteGraph(m, m, tuple((i, i) for i in range(m)))


def star(n: int, center_class: int = 1) -> BipartiteGraph:
    """K_{1,n} when the centre is in class 1, K_{n,1} otherwise."""
    _require_positive(n=n)
    return complete(1, n) if center_class == 1 else complete(n, 1)
