"""Independent brute-force implementations used only to check the package.

Everything here is deliberately written from first principles with its own
representation (0-based tuples), its own composition code, and its own
search strategies (itertools products and stack floods instead of the
package's backtracking and breadth-first queues), so agreement with the
package is meaningful.
"""
from __future__ import annotations

import itertools
from functools import reduce

# 0-based permutation tuples: p[i] is the image of i.


def o_identity(d):
    return tuple(range(d))


def o_compose(p, q):
    """Apply q first, then p."""
    return tuple(p[q[i]] for i in range(len(p)))


def o_inverse(p):
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def o_product(word, d):
    return reduce(o_compose, word, o_identity(d))


def o_cycle_type(p):
    seen = set()
    lengths = []
    for i in range(len(p)):
        if i in seen:
            continue
        n = 0
        j = i
        while j not in seen:
            seen.add(j)
            n += 1
            j = p[j]
        lengths.append(n)
    return tuple(sorted(lengths, reverse=True))


def o_class_elements(d, cycle_type):
    return [p for p in itertools.permutations(range(d)) if o_cycle_type(p) == tuple(cycle_type)]


def o_transpositions(d):
    return o_class_elements(d, (2,) + (1,) * (d - 2))


def o_subgroup(d, gens):
    """Fixed-point iteration on set products; independent of the package's BFS."""
    current = set(gens) | {o_identity(d)}
    while True:
        bigger = set(current)
        for a in current:
            for b in current:
                bigger.add(o_compose(a, b))
        if bigger == current:
            return frozenset(current)
        current = bigger


def o_is_transitive(d, word):
    reach = {0}
    changed = True
    while changed:
        changed = False
        for p in word:
            for i in list(reach):
                for j in (p[i], o_inverse(p)[i]):
                    if j not in reach:
                        reach.add(j)
                        changed = True
    return len(reach) == d


def o_move_r(word, i):
    a, b = word[i], word[i + 1]
    return word[:i] + (o_compose(o_compose(a, b), o_inverse(a)), a) + word[i + 2:]


def o_move_l(word, i):
    a, b = word[i], word[i + 1]
    return word[:i] + (b, o_compose(o_compose(o_inverse(b), a), b)) + word[i + 2:]


def o_orbit(word, conjugation=False, d=None):
    """Stack flood over both moves (and optionally conjugation by everything)."""
    if conjugation:
        assert d is not None
        everyone = list(itertools.permutations(range(d)))
    seen = {word}
    stack = [word]
    while stack:
        w = stack.pop()
        nbrs = [o_move_r(w, i) for i in range(len(w) - 1)]
        nbrs += [o_move_l(w, i) for i in range(len(w) - 1)]
        if conjugation:
            nbrs += [tuple(o_compose(o_compose(g, f), o_inverse(g)) for f in w)
                     for g in everyone]
        for nb in nbrs:
            if nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return seen


def o_partition(words, conjugation=False, d=None):
    """Partition a word set into move orbits by repeated floods."""
    remaining = set(words)
    parts = []
    while remaining:
        w = min(remaining)
        orb = o_orbit(w, conjugation, d)
        assert orb <= set(words), "orbit left the fiber"
        parts.append(frozenset(orb))
        remaining -= orb
    return sorted(parts, key=min)


def o_fiber(d, cycle_type, n, product, constraint=None):
    """All n-tuples over one class with the given product, by raw product scan."""
    elements = o_class_elements(d, cycle_type)
    out = []
    for word in itertools.product(elements, repeat=n):
        if o_product(word, d) != product:
            continue
        if constraint == "full" and len(o_subgroup(d, word)) != _fact(d):
            continue
        if constraint == "transitive" and not o_is_transitive(d, word):
            continue
        out.append(word)
    return out


def _fact(n):
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def o_min_word(d, cycle_type, target, max_len):
    """Least m with target a product of m class members, by raw enumeration."""
    elements = o_class_elements(d, cycle_type)
    for m in range(1, max_len + 1):
        for word in itertools.product(elements, repeat=m):
            if o_product(word, d) == target:
                return m
    return None


# -- conversions to and from the package representation ------------------------

def from_perm(p):
    """Package Perm (1-based) -> oracle tuple (0-based)."""
    return tuple(x - 1 for x in p)


def to_images(p0):
    """Oracle tuple (0-based) -> 1-based one-line images."""
    return tuple(x + 1 for x in p0)


def from_word(word):
    return tuple(from_perm(f) for f in word)


def to_word_images(word0):
    return tuple(to_images(f) for f in word0)
