"""Exact arithmetic on permutations of {1, ..., d} and conjugacy-class bookkeeping.

Permutations are stored in one-line notation: a ``Perm`` is a tuple whose
entry at index ``i - 1`` is the image of ``i``, with values running over
``1..d``.  ``Perm`` subclasses ``tuple`` so that words of permutations hash
and compare at native tuple speed.

The composition convention is fixed once for the whole package:

    (p * q)(i) = p(q(i))        # q acts first

Cycle notation is an I/O format only.  ``"(1,2)(3,4,5)"`` parses to the
permutation with those cycles, fixed points are omitted when printing, and
the identity prints as ``"()"``.  One-line notation ``"[2,1,4,3]"`` is also
accepted by the parser.
"""
from __future__ import annotations

import functools
import itertools
import math
import re
from collections import Counter
from typing import Iterable, Iterator, Sequence

#: Largest degree for which exhaustive group computations (subgroup closure,
#: class enumeration over all of S_d) are permitted.
MAX_EXHAUSTIVE_DEGREE = 8

CycleType = tuple[int, ...]


class LimitExceededError(RuntimeError):
    """An exhaustive computation would exceed its configured limit."""


class Perm(tuple):
    """A permutation of {1..d} in one-line notation.

    >>> p = Perm([2, 1, 3])
    >>> str(p)
    '(1,2)'
    >>> p * Perm([1, 3, 2])           # (1,2) * (2,3), right factor acts first
    Perm('(1,2,3)', d=3)
    >>> p.inverse() == p
    True
    """

    __slots__ = ()

    def __new__(cls, images: Iterable[int]) -> "Perm":
        images = tuple(images)
        d = len(images)
        if d < 1:
            raise ValueError("a permutation needs degree >= 1")
        if sorted(images) != list(range(1, d + 1)):
            raise ValueError(f"not a permutation of 1..{d}: {images!r}")
        return tuple.__new__(cls, images)

    @classmethod
    def _raw(cls, images: Iterable[int]) -> "Perm":
        # Internal fast path: caller guarantees images is a valid one-line tuple.
        return tuple.__new__(cls, images)

    # -- constructors ------------------------------------------------------

    @classmethod
    def identity(cls, degree: int) -> "Perm":
        if degree < 1:
            raise ValueError("degree must be >= 1")
        return tuple.__new__(cls, range(1, degree + 1))

    @classmethod
    def cycle(cls, degree: int, points: Sequence[int]) -> "Perm":
        """The cyclic permutation points[0] -> points[1] -> ... -> points[0]."""
        if len(set(points)) != len(points):
            raise ValueError(f"cycle repeats a point: {points!r}")
        if points and not all(1 <= p <= degree for p in points):
            raise ValueError(f"cycle {points!r} out of range 1..{degree}")
        img = list(range(1, degree + 1))
        for a, b in zip(points, points[1:]):
            img[a - 1] = b
        if len(points) > 1:
            img[points[-1] - 1] = points[0]
        return tuple.__new__(cls, img)

    @classmethod
    def transposition(cls, degree: int, i: int, j: int) -> "Perm":
        if i == j:
            raise ValueError("a transposition needs two distinct points")
        return cls.cycle(degree, (i, j))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> "Perm":
        """Product of the given cycles, leftmost first under the package convention.

        Disjoint cycles commute, so for the usual disjoint-cycle input the
        order does not matter.
        """
        p = cls.identity(degree)
        for c in cycles:
            p = p * cls.cycle(degree, c)
        return p

    _CYCLE_TOKEN = re.compile(r"\((\d+(?:,\d+)*)?\)")

    @classmethod
    def parse(cls, text: str, degree: int | None = None) -> "Perm":
        """Parse cycle notation ``"(1,2)(3,4,5)"`` or one-line ``"[2,1,4,3]"``.

        ``degree`` is required for the bare identity ``"()"`` and is otherwise
        inferred from the largest point (cycle form) or the length (one-line
        form); when given, it must be consistent.

        >>> Perm.parse("(1,2)", degree=3)
        Perm('(1,2)', d=3)
        >>> Perm.parse("[2,1,4,3]")
        Perm('(1,2)(3,4)', d=4)
        """
        s = "".join(text.split())
        if not s:
            raise ValueError("empty permutation text")
        if s.startswith("["):
            if not s.endswith("]"):
                raise ValueError(f"unterminated one-line notation: {text!r}")
            body = s[1:-1]
            if not body:
                raise ValueError("empty one-line notation")
            p = cls(int(t) for t in body.split(","))
            if degree is not None and len(p) != degree:
                raise ValueError(f"expected degree {degree}, got {len(p)}: {text!r}")
            return p
        pos = 0
        cycles: list[tuple[int, ...]] = []
        while pos < len(s):
            m = cls._CYCLE_TOKEN.match(s, pos)
            if m is None:
                raise ValueError(f"bad cycle notation: {text!r}")
            if m.group(1):
                cycles.append(tuple(int(t) for t in m.group(1).split(",")))
            pos = m.end()
        if degree is None:
            if not cycles:
                raise ValueError("degree required to parse the identity '()'")
            degree = max(max(c) for c in cycles)
        return cls.from_cycles(degree, cycles)

    # -- arithmetic --------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self)

    def apply(self, point: int) -> int:
        return self[point - 1]

    __call__ = apply

    def __mul__(self, other):  # type: ignore[override]
        if not isinstance(other, Perm):
            return NotImplemented
        if len(self) != len(other):
            raise ValueError(f"degree mismatch: {len(self)} vs {len(other)}")
        return tuple.__new__(Perm, (self[x - 1] for x in other))

    def inverse(self) -> "Perm":
        inv = [0] * len(self)
        for i, img in enumerate(self):
            inv[img - 1] = i + 1
        return tuple.__new__(Perm, inv)

    def conjugate(self, other: "Perm") -> "Perm":
        """Return ``self * other * self.inverse()`` in a single pass."""
        if len(self) != len(other):
            raise ValueError(f"degree mismatch: {len(self)} vs {len(other)}")
        img = [0] * len(self)
        for x in range(len(self)):
            img[self[x] - 1] = self[other[x] - 1]
        return tuple.__new__(Perm, img)

    # -- structure ---------------------------------------------------------

    def is_identity(self) -> bool:
        return all(img == i + 1 for i, img in enumerate(self))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its least point, ordered by it."""
        seen = [False] * len(self)
        out = []
        for start in range(1, len(self) + 1):
            if seen[start - 1]:
                continue
            cur = start
            cyc = []
            while not seen[cur - 1]:
                seen[cur - 1] = True
                cyc.append(cur)
                cur = self[cur - 1]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_type(self) -> CycleType:
        """Cycle lengths including fixed points, non-increasing.

        >>> Perm.parse("(1,2)(3,4,5)", degree=8).cycle_type()
        (3, 2, 1, 1, 1)
        """
        seen = [False] * len(self)
        lengths = []
        for start in range(1, len(self) + 1):
            if seen[start - 1]:
                continue
            n = 0
            cur = start
            while not seen[cur - 1]:
                seen[cur - 1] = True
                n += 1
                cur = self[cur - 1]
            lengths.append(n)
        lengths.sort(reverse=True)
        return tuple(lengths)

    def cycle_count(self) -> int:
        return len(self.cycle_type())

    def parity(self) -> int:
        """0 for even, 1 for odd: (degree - number of cycles) mod 2."""
        return (len(self) - self.cycle_count()) % 2

    def order(self) -> int:
        return math.lcm(*self.cycle_type())

    def fixed_point_count(self) -> int:
        return sum(1 for i, img in enumerate(self) if img == i + 1)

    def reflection_length(self) -> int:
        """Least number of transpositions whose product is this permutation."""
        return len(self) - self.cycle_count()

    def __str__(self) -> str:
        cys = self.cycles()
        if not cys:
            return "()"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cys)

    def __repr__(self) -> str:
        return f"Perm('{self}', d={len(self)})"


# -- module-level aliases for the core operations ---------------------------

def compose(p: Perm, q: Perm) -> Perm:
    """Product p*q with q acting first: (p*q)(i) = p(q(i))."""
    return p * q


def inverse(p: Perm) -> Perm:
    return p.inverse()


def conj(g: Perm, a: Perm) -> Perm:
    """g * a * g^-1; preserves the cycle type of ``a``."""
    return g.conjugate(a)


def class_of(p: Perm) -> CycleType:
    return p.cycle_type()


def all_perms(degree: int) -> Iterator[Perm]:
    """All elements of S_degree in lexicographic one-line order."""
    for images in itertools.permutations(range(1, degree + 1)):
        yield Perm._raw(images)


@functools.lru_cache(maxsize=None)
def transpositions(degree: int) -> tuple[Perm, ...]:
    """All transpositions of S_degree, sorted."""
    return tuple(sorted(
        Perm.transposition(degree, i, j)
        for i in range(1, degree)
        for j in range(i + 1, degree + 1)
    ))


# -- cycle types (conjugacy class labels) -----------------------------------

def validate_cycle_type(cycle_type: Iterable[int], degree: int | None = None) -> CycleType:
    """Canonicalize to a non-increasing partition; check it sums to ``degree``."""
    ct = tuple(sorted((int(x) for x in cycle_type), reverse=True))
    if not ct or any(x < 1 for x in ct):
        raise ValueError(f"cycle type parts must be positive: {ct!r}")
    if degree is not None and sum(ct) != degree:
        raise ValueError(f"cycle type {ct!r} is not a partition of {degree}")
    return ct


def parse_cycle_type(text: str, degree: int | None = None) -> CycleType:
    """Parse ``"2,1,1"`` into the partition (2, 1, 1)."""
    try:
        parts = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise ValueError(f"bad cycle type: {text!r}") from None
    return validate_cycle_type(parts, degree)


def format_cycle_type(cycle_type: CycleType) -> str:
    return ",".join(str(x) for x in cycle_type)


def all_cycle_types(degree: int) -> tuple[CycleType, ...]:
    """All partitions of ``degree`` in descending lexicographic order."""
    out: list[CycleType] = []

    def rec(remaining: int, max_part: int, prefix: list[int]) -> None:
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for part in range(min(max_part, remaining), 0, -1):
            prefix.append(part)
            rec(remaining - part, part, prefix)
            prefix.pop()

    rec(degree, degree, [])
    return tuple(out)


def class_size(degree: int, cycle_type: Iterable[int]) -> int:
    """|C| = d! / prod_l (l^{m_l} * m_l!) where m_l counts parts of length l."""
    ct = validate_cycle_type(cycle_type, degree)
    denom = 1
    for length, mult in Counter(ct).items():
        denom *= (length ** mult) * math.factorial(mult)
    return math.factorial(degree) // denom


def class_parity(cycle_type: Iterable[int]) -> int:
    return sum(l - 1 for l in cycle_type) % 2


def class_order(cycle_type: Iterable[int]) -> int:
    return math.lcm(*cycle_type)


def class_fixed_points(cycle_type: Iterable[int]) -> int:
    return sum(1 for l in cycle_type if l == 1)


def class_reflection_length(cycle_type: Iterable[int]) -> int:
    return sum(l - 1 for l in cycle_type)


def canonical_class_element(degree: int, cycle_type: Iterable[int]) -> Perm:
    """The member of the class whose cycles occupy consecutive points in order."""
    ct = validate_cycle_type(cycle_type, degree)
    cycles = []
    next_point = 1
    for length in ct:
        cycles.append(tuple(range(next_point, next_point + length)))
        next_point += length
    return Perm.from_cycles(degree, cycles)


@functools.lru_cache(maxsize=None)
def _class_elements_cached(degree: int, cycle_type: CycleType) -> tuple[Perm, ...]:
    return tuple(sorted(p for p in all_perms(degree) if p.cycle_type() == cycle_type))


def class_elements(degree: int, cycle_type: Iterable[int],
                   limit: int | None = None) -> tuple[Perm, ...]:
    """All permutations of S_degree with the given cycle type, sorted.

    >>> [str(p) for p in class_elements(3, (2, 1))]
    ['(2,3)', '(1,2)', '(1,3)']
    """
    ct = validate_cycle_type(cycle_type, degree)
    if degree > MAX_EXHAUSTIVE_DEGREE:
        raise LimitExceededError(
            f"class enumeration is exhaustive and limited to degree <= {MAX_EXHAUSTIVE_DEGREE}")
    size = class_size(degree, ct)
    if limit is not None and size > limit:
        raise LimitExceededError(f"class has {size} elements, over the limit {limit}")
    return _class_elements_cached(degree, ct)


# -- subgroup machinery (small-degree exhaustion only) -----------------------

def closure(degree: int, generators: Iterable[Perm],
            limit: int | None = None) -> frozenset[Perm]:
    """The subgroup generated by ``generators`` as an explicit element set.

    Breadth-first closure under right multiplication; valid for finite groups
    since powers of each generator reach its inverse.
    """
    if degree > MAX_EXHAUSTIVE_DEGREE:
        raise LimitExceededError(
            f"subgroup closure is exhaustive and limited to degree <= {MAX_EXHAUSTIVE_DEGREE}")
    gens = tuple(dict.fromkeys(generators))
    for g in gens:
        if len(g) != degree:
            raise ValueError(f"generator degree {len(g)} != {degree}")
    ident = Perm.identity(degree)
    seen = {ident}
    order_ = [ident]
    for x in order_:
        for g in gens:
            y = x * g
            if y not in seen:
                if limit is not None and len(seen) >= limit:
                    raise LimitExceededError(f"subgroup closure exceeded limit {limit}")
                seen.add(y)
                order_.append(y)
    return frozenset(seen)


def is_transitive(degree: int, perms: Iterable[Perm]) -> bool:
    """Whether the group generated by ``perms`` acts transitively on 1..degree."""
    parent = list(range(degree + 1))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for p in perms:
        for i in range(1, degree + 1):
            ra, rb = find(i), find(p[i - 1])
            if ra != rb:
                parent[rb] = ra
    return len({find(i) for i in range(1, degree + 1)}) == 1
