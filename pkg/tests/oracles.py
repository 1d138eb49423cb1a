"""Brute-force reference implementations used only by the tests.

Everything here works on Python sets of pairs and frozensets of element
indices, straight from the definitions, without touching the bit-mask code
in the package.
"""

from __future__ import annotations

import itertools

KIND_NAMES = ("s", "p", "and", "or")


def relation_pairs(n: int, code: int) -> set[tuple[int, int]]:
    return {(i, j) for i in range(n) for j in range(n) if code >> (i * n + j) & 1}


def neighborhoods(n: int, pairs: set[tuple[int, int]], kind: str) -> list[frozenset[int]]:
    out = []
    for x in range(n):
        succ = frozenset(y for y in range(n) if (x, y) in pairs)
        pred = frozenset(y for y in range(n) if (y, x) in pairs)
        out.append({"s": succ, "p": pred, "and": succ & pred, "or": succ | pred}[kind])
    return out


def lower(n, pairs, kind, X) -> frozenset[int]:
    N = neighborhoods(n, pairs, kind)
    return frozenset(x for x in range(n) if N[x] <= X)


def upper(n, pairs, kind, X) -> frozenset[int]:
    N = neighborhoods(n, pairs, kind)
    return frozenset(x for x in range(n) if N[x] & X)


def profile(n: int, pairs: set[tuple[int, int]]) -> dict[str, bool]:
    U = range(n)
    serial = all(any((x, y) in pairs for y in U) for x in U)
    inverse_serial = all(any((y, x) in pairs for y in U) for x in U)
    reflexive = all((x, x) in pairs for x in U)
    symmetric = all((y, x) in pairs for (x, y) in pairs)
    transitive = all((x, z) in pairs for (x, y) in pairs for (w, z) in pairs if y == w)
    return {
        "serial": serial,
        "inverse_serial": inverse_serial,
        "reflexive": reflexive,
        "symmetric": symmetric,
        "transitive": transitive,
        "preorder": reflexive and transitive,
        "tolerance": reflexive and symmetric,
        "equivalence": reflexive and symmetric and transitive,
    }


def powerset(n: int) -> list[frozenset[int]]:
    return [frozenset(c) for r in range(n + 1) for c in itertools.combinations(range(n), r)]


def topology_by_powerset(n: int, subbase) -> set[frozenset[int]]:
    """Opens generated by ``subbase``: scan the whole powerset, keep A iff every
    point of A has a finite intersection of subbase members around it inside A."""
    subbase = [frozenset(s) for s in subbase]
    universe = frozenset(range(n))
    opens = set()
    for A in powerset(n):
        ok = True
        for x in A:
            smallest = universe
            for s in subbase:
                if x in s:
                    smallest &= s
            if not smallest <= A:
                ok = False
                break
        if ok:
            opens.add(A)
    return opens


def topology_by_naive_fixpoint(n: int, subbase) -> set[frozenset[int]]:
    """Close S ∪ {∅, U} under pairwise ∪ and ∩ until nothing new appears."""
    fam = {frozenset(s) for s in subbase} | {frozenset(), frozenset(range(n))}
    while True:
        new = {a | b for a in fam for b in fam} | {a & b for a in fam for b in fam}
        if new <= fam:
            return fam
        fam |= new


def is_topology(n: int, fam) -> bool:
    fam = {frozenset(s) for s in fam}
    if frozenset() not in fam or frozenset(range(n)) not in fam:
        return False
    # Any union, not just pairwise: every subfamily.
    members = list(fam)
    for r in range(len(members) + 1):
        for combo in itertools.combinations(members, r):
            if frozenset().union(*combo) not in fam:
                return False
    return all(a & b in fam for a in fam for b in fam)


def base_conditions(n: int, fam) -> bool:
    fam = [frozenset(s) for s in fam]
    if frozenset().union(*fam) != frozenset(range(n)):
        return False
    for X in fam:
        for Y in fam:
            for x in X & Y:
                if not any(x in Z and Z <= X & Y for Z in fam):
                    return False
    return True


def interior(n: int, opens, X) -> frozenset[int]:
    """Points having an open neighbourhood inside X."""
    return frozenset(x for x in X if any(x in O and O <= X for O in opens))


def closure(n: int, opens, X) -> frozenset[int]:
    universe = frozenset(range(n))
    closed = [universe - O for O in opens]
    out = universe
    for C in closed:
        if X <= C:
            out &= C
    return out


def refines(F1, F2) -> bool:
    return all(any(a <= b for b in F2) for a in F1)
