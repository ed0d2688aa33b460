"""Closure order on nilpotent orbits of the classical algebras.

Orbits are admissible partitions ordered by dominance; for sl the covering
relations are exactly the images of two elementary degeneration moves
(shifting one box to the next row, or collapsing a fragment a+1, a^k, a-1
into a^(k+2)).  The central fact checked here is that the sl2-index strictly
decreases toward the boundary.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .sl2 import Partition, classical_index, normalize_partition, partition_is_admissible


def partitions_of(n: int, max_part: int | None = None):
    """All partitions of n in reverse-lexicographic (largest-first) order."""
    if n == 0:
        yield ()
        return
    if max_part is None or max_part > n:
        max_part = n
    for first in range(max_part, 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def enumerate_orbits(kind: str, n: int) -> list[Partition]:
    """Admissible partitions of n for the given classical kind."""
    if n < 1:
        raise ValueError("module dimension must be positive")
    if kind == "sp" and n % 2:
        raise ValueError("sp requires an even module dimension")
    return [p for p in partitions_of(n) if partition_is_admissible(kind, p)]


def degeneration_moves(p: Partition) -> list[Partition]:
    """Partitions one elementary degeneration below p, deduplicated.

    The partition is padded with a trailing zero so both moves can act on
    the last part.
    """
    p = normalize_partition(p)
    padded = list(p) + [0]
    seen: set[Partition] = set()
    for i in range(len(p)):
        if padded[i] >= padded[i + 1] + 2:
            q = padded.copy()
            q[i] -= 1
            q[i + 1] += 1
            seen.add(tuple(sorted((x for x in q if x > 0), reverse=True)))
    for i, top in enumerate(padded):
        a = top - 1
        if a < 1:
            continue
        j = i + 1
        while j < len(padded) and padded[j] == a:
            j += 1
        if j < len(padded) and padded[j] == a - 1:
            q = padded[:i] + [a] * (j - i + 1) + padded[j + 1 :]
            seen.add(tuple(sorted((x for x in q if x > 0), reverse=True)))
    return sorted(seen, reverse=True)


def dominance_leq(p: Partition, q: Partition) -> bool:
    """Whether p is below q in dominance order (same total assumed)."""
    total_p = 0
    total_q = 0
    for k in range(max(len(p), len(q))):
        total_p += p[k] if k < len(p) else 0
        total_q += q[k] if k < len(q) else 0
        if total_p > total_q:
            return False
    return total_p == total_q


@dataclass(frozen=True)
class OrbitPoset:
    kind: str
    n: int
    nodes: tuple[Partition, ...]
    covers: tuple[tuple[Partition, Partition], ...]  # (upper, lower) pairs


def build_poset(kind: str, n: int) -> OrbitPoset:
    """Admissible partitions of n under dominance, with covering relations.

    For sl the cover set is checked against the degeneration moves: every
    cover must be reachable by one move.
    """
    nodes = enumerate_orbits(kind, n)
    count = len(nodes)
    below = [[False] * count for _ in range(count)]
    for i, p in enumerate(nodes):
        for j, q in enumerate(nodes):
            if i != j and dominance_leq(p, q):
                below[i][j] = True
    covers = []
    for j, upper in enumerate(nodes):  # nodes are in descending order
        for i, lower in enumerate(nodes):
            if not below[i][j]:
                continue
            if any(below[i][k] and below[k][j] for k in range(count)):
                continue
            covers.append((upper, lower))
    if kind == "sl":
        move_edges = {(p, m) for p in nodes for m in degeneration_moves(p)}
        assert set(covers) <= move_edges, "a dominance cover is not a single move"
    return OrbitPoset(kind, n, tuple(nodes), tuple(covers))


def orbit_index(kind: str, p: Partition) -> Fraction:
    """Index of the orbit's sl2; zero for the zero orbit (poset bottom)."""
    if p[0] < 2:
        return Fraction(0)
    return classical_index(kind, p)


def monotonicity_holds(kind: str, n: int) -> bool:
    """Strict index decrease along every cover away from the zero orbit."""
    poset = build_poset(kind, n)
    for upper, lower in poset.covers:
        if lower[0] < 2:
            continue
        if not classical_index(kind, lower) < classical_index(kind, upper):
            return False
    return True


def comparable_pairs_strict(kind: str, n: int) -> bool:
    """The stronger consequence: strict inequality for every comparable pair."""
    nodes = [p for p in enumerate_orbits(kind, n) if p[0] >= 2]
    for i, p in enumerate(nodes):
        for q in nodes[i + 1 :]:
            if dominance_leq(q, p) and q != p:
                if not classical_index(kind, q) < classical_index(kind, p):
                    return False
            elif dominance_leq(p, q) and q != p:
                if not classical_index(kind, p) < classical_index(kind, q):
                    return False
    return True


def moves_generate_dominance(n: int) -> bool:
    """For sl: reachability by moves coincides with dominance (both ways)."""
    nodes = list(partitions_of(n))
    reachable: dict[Partition, set[Partition]] = {}
    for p in reversed(nodes):  # process upward so children are done first
        out: set[Partition] = set()
        for m in degeneration_moves(p):
            out.add(m)
            out |= reachable[m]
        reachable[p] = out
    for p in nodes:
        for q in nodes:
            dominated = q != p and dominance_leq(q, p)
            if dominated != (q in reachable[p]):
                return False
    return True


# -- exports -------------------------------------------------------------------


def _label(p: Partition) -> str:
    return ",".join(str(x) for x in p)


def poset_dot(poset: OrbitPoset) -> str:
    """Graphviz DOT rendering, one node per orbit labelled with its index."""
    lines = [f'digraph "{poset.kind}_{poset.n}_orbits" {{', "  rankdir=TB;"]
    for p in poset.nodes:
        idx = orbit_index(poset.kind, p)
        lines.append(f'  "{_label(p)}" [label="({_label(p)})\\nindex {idx}"];')
    for upper, lower in poset.covers:
        lines.append(f'  "{_label(upper)}" -> "{_label(lower)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def poset_payload(poset: OrbitPoset) -> dict:
    """JSON-ready description of the poset with per-node indices."""
    return {
        "kind": poset.kind,
        "n": poset.n,
        "nodes": [
            {"partition": list(p), "index": str(orbit_index(poset.kind, p))}
            for p in poset.nodes
        ],
        "covers": [
            {"upper": list(u), "lower": list(l)} for u, l in poset.covers
        ],
    }
