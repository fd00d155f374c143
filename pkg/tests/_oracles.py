"""Independent oracles used to freeze expected values in the tests.

Everything here recomputes matroid quantities from first principles and by
brute force, on purpose along different paths than the library takes:
rank by exhaustive subset search instead of greedy growth, closure through
the rank function instead of circuit containment, and matroid enumeration
through the independence axioms instead of circuit antichains.
"""

import itertools

from matcat.core import STAR


def brute_rank(M, X):
    """Largest circuit-free subset of X, by exhaustive search."""
    X = sorted(frozenset(X))
    for size in range(len(X), -1, -1):
        for combo in itertools.combinations(X, size):
            S = frozenset(combo)
            if not any(C <= S for C in M.circuits):
                return size
    return 0


def rank_closure(M, X):
    """Closure via the rank function: e is spanned when adding it is free."""
    X = frozenset(X)
    base = brute_rank(M, X)
    return X | {e for e in M.ground - X if brute_rank(M, X | {e}) == base}


def maximal_independent_sizes(M, X):
    """Sizes of all inclusion-maximal independent subsets of X."""
    X = frozenset(X)
    independent = [
        frozenset(c)
        for size in range(len(X) + 1)
        for c in itertools.combinations(sorted(X), size)
        if not any(C <= frozenset(c) for C in M.circuits)
    ]
    return {
        len(I)
        for I in independent
        if not any(I < J for J in independent)
    }


def independence_family_circuits(k):
    """Circuit families on {*, 1..k} found through the independence axioms.

    Enumerates every down-closed exchange-satisfying family of subsets of
    {1..k} containing the empty set, and converts each to its minimal
    dependent sets plus the loop circuit.
    """
    elems = list(range(1, k + 1))
    universe = [
        frozenset(c)
        for size in range(k + 1)
        for c in itertools.combinations(elems, size)
    ]
    results = set()
    for picks in itertools.product((False, True), repeat=len(universe)):
        family = {s for s, keep in zip(universe, picks) if keep}
        if frozenset() not in family:
            continue
        if any(t - {e} not in family for t in family for e in t):
            continue
        ok = True
        for a in family:
            for b in family:
                if len(a) <= len(b):
                    continue
                if not any(b | {x} in family for x in a - b):
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            continue
        dependent = [s for s in universe if s not in family]
        circuits = {s for s in dependent if not any(d < s for d in dependent)}
        circuits.add(frozenset({STAR}))
        results.add(frozenset(circuits))
    return results


def search_isomorphic(A, B):
    """Search for a circuit-preserving bijection of ordinary elements."""
    xs, ys = sorted(A.nonstar), sorted(B.nonstar)
    if len(xs) != len(ys):
        return False
    for perm in itertools.permutations(ys):
        relabel = dict(zip(xs, perm))
        relabel[STAR] = STAR
        moved = frozenset(frozenset(relabel[e] for e in C) for C in A.circuits)
        if moved == B.circuits:
            return True
    return False
