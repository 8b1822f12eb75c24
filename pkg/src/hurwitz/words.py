"""Words of permutations and the local braid moves that rewrite them.

A :class:`Factorization` is an ordered word of non-identity permutations of a
fixed degree.  Two words represent the same semigroup element when one can be
rewritten into the other by the local moves

    R at i:  (g_i, g_{i+1})  ->  (g_i g_{i+1} g_i^-1, g_i)
    L at i:  (g_i, g_{i+1})  ->  (g_{i+1}, g_{i+1}^-1 g_i g_{i+1})

which are mutually inverse and preserve the product, the type (multiset of
factor classes), the length, and the subgroup generated by the factors.
Deciding that equivalence is the job of :mod:`hurwitz.orbits`; this module
only applies moves.

File format: a header line ``d=<degree>`` followed by one word per line,
factors in cycle notation separated by spaces, e.g. ``(1,2) (2,3) (1,3)``.
A word with no factors is written ``()``.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .perms import CycleType, Perm, closure, format_cycle_type, is_transitive, parse_cycle_type, validate_cycle_type

#: A word as the orbit engine sees it: a bare tuple of Perm values.
State = tuple[Perm, ...]

# Shared instances of small-degree permutations keep large visited sets compact
# and make tuple comparisons short-circuit on identity.
_INTERN_MAX_DEGREE = 7
_intern_tables: dict[int, dict[Perm, Perm]] = {}


def _intern(p: Perm) -> Perm:
    d = len(p)
    if d > _INTERN_MAX_DEGREE:
        return p
    table = _intern_tables.setdefault(d, {})
    return table.setdefault(p, p)


def move_right_state(state: State, index0: int) -> State:
    """Apply the R move at 0-based pair index ``index0``."""
    a = state[index0]
    b = state[index0 + 1]
    return state[:index0] + (_intern(a.conjugate(b)), a) + state[index0 + 2:]


def move_left_state(state: State, index0: int) -> State:
    """Apply the L move at 0-based pair index ``index0``."""
    a = state[index0]
    b = state[index0 + 1]
    return state[:index0] + (b, _intern(b.inverse().conjugate(a))) + state[index0 + 2:]


def conjugate_state(state: State, g: Perm) -> State:
    """Conjugate every factor by ``g``."""
    return tuple(_intern(g.conjugate(f)) for f in state)


def product_of_state(state: State, degree: int) -> Perm:
    p = Perm.identity(degree)
    for f in state:
        p = p * f
    return p


@dataclass(frozen=True)
class Move:
    """A single local rewrite at 1-based position ``position`` (acting on the
    factors at ``position`` and ``position + 1``)."""

    position: int
    direction: str  # "L" or "R"

    def __post_init__(self) -> None:
        if self.direction not in ("L", "R"):
            raise ValueError(f"direction must be 'L' or 'R', got {self.direction!r}")
        if self.position < 1:
            raise ValueError(f"move position must be >= 1, got {self.position}")

    def invert(self) -> "Move":
        return Move(self.position, "L" if self.direction == "R" else "R")

    def shifted(self, offset: int) -> "Move":
        return Move(self.position + offset, self.direction)

    def __str__(self) -> str:
        return f"{self.direction}{self.position}"

    @classmethod
    def parse(cls, text: str) -> "Move":
        text = text.strip()
        if len(text) < 2 or text[0] not in "LR":
            raise ValueError(f"bad move: {text!r}")
        return cls(int(text[1:]), text[0])


def apply_moves_state(state: State, moves: Iterable[Move]) -> State:
    for m in moves:
        i0 = m.position - 1
        if i0 < 0 or i0 + 1 >= len(state):
            raise ValueError(f"move {m} out of range for a word of length {len(state)}")
        state = move_right_state(state, i0) if m.direction == "R" else move_left_state(state, i0)
    return state


@dataclass(frozen=True)
class TypeVector:
    """Multiset of conjugacy-class labels with multiplicities (the word type).

    ``counts`` is kept sorted by cycle type so equal type vectors compare and
    hash equal.  The text form is ``"2,1:4"`` (cycle type, colon, count) with
    ``;`` between classes.
    """

    counts: tuple[tuple[CycleType, int], ...]

    def __post_init__(self) -> None:
        for ct, n in self.counts:
            if n < 1:
                raise ValueError(f"multiplicity must be positive: {ct}:{n}")
        keys = [ct for ct, _ in self.counts]
        if sorted(keys) != keys or len(set(keys)) != len(keys):
            raise ValueError("type vector entries must be sorted and unique")

    @classmethod
    def from_counts(cls, mapping: dict[CycleType, int] | Iterable[tuple[CycleType, int]]) -> "TypeVector":
        items = dict(mapping)
        return cls(tuple(sorted((validate_cycle_type(ct), n) for ct, n in items.items())))

    @classmethod
    def from_factors(cls, factors: Iterable[Perm]) -> "TypeVector":
        return cls.from_counts(Counter(f.cycle_type() for f in factors))

    @classmethod
    def single(cls, cycle_type: Iterable[int], count: int) -> "TypeVector":
        return cls.from_counts({validate_cycle_type(cycle_type): count})

    @classmethod
    def parse(cls, text: str, degree: int | None = None) -> "TypeVector":
        items: dict[CycleType, int] = {}
        for chunk in text.split(";"):
            chunk = chunk.strip()
            if not chunk:
                continue
            if ":" not in chunk:
                raise ValueError(f"bad type entry (want 'cycletype:count'): {chunk!r}")
            ct_text, count_text = chunk.rsplit(":", 1)
            ct = parse_cycle_type(ct_text, degree)
            n = int(count_text)
            items[ct] = items.get(ct, 0) + n
        if not items:
            raise ValueError(f"empty type vector: {text!r}")
        return cls.from_counts(items)

    def total(self) -> int:
        return sum(n for _, n in self.counts)

    def as_dict(self) -> dict[CycleType, int]:
        return dict(self.counts)

    def check_degree(self, degree: int) -> None:
        for ct, _ in self.counts:
            validate_cycle_type(ct, degree)

    def __str__(self) -> str:
        return ";".join(f"{format_cycle_type(ct)}:{n}" for ct, n in self.counts)


@dataclass(frozen=True)
class Factorization:
    """An ordered word of non-identity permutations of one degree.

    The word is only a representative: semigroup equality is Hurwitz-move
    equivalence, decided by the orbit engine, not structural equality.
    """

    degree: int
    factors: tuple[Perm, ...] = ()

    def __post_init__(self) -> None:
        if self.degree < 1:
            raise ValueError("degree must be >= 1")
        factors = tuple(self.factors)
        for f in factors:
            if not isinstance(f, Perm):
                raise TypeError(f"factor is not a Perm: {f!r}")
            if len(f) != self.degree:
                raise ValueError(f"factor degree {len(f)} != word degree {self.degree}")
            if f.is_identity():
                raise ValueError("identity factors are not stored; use Factorization.of(..., drop_identity=True)")
        object.__setattr__(self, "factors", factors)

    @classmethod
    def of(cls, degree: int, factors: Iterable[Perm | str | Sequence[int]],
           drop_identity: bool = False) -> "Factorization":
        """Build a word, coercing strings/one-line sequences to Perm.

        With ``drop_identity`` the builder silently absorbs identity factors
        (the word x_g * x_1 equals x_g).
        """
        coerced: list[Perm] = []
        for f in factors:
            if isinstance(f, Perm):
                p = f
            elif isinstance(f, str):
                p = Perm.parse(f, degree)
            else:
                p = Perm(f)
            if p.is_identity():
                if drop_identity:
                    continue
                raise ValueError("identity factor rejected (pass drop_identity=True to absorb)")
            coerced.append(_intern(p))
        return cls(degree, tuple(coerced))

    @classmethod
    def empty(cls, degree: int) -> "Factorization":
        return cls(degree, ())

    @classmethod
    def from_state(cls, degree: int, state: State) -> "Factorization":
        return cls(degree, tuple(state))

    # -- homomorphisms and invariants ---------------------------------------

    def product(self) -> Perm:
        """The ordered product of the factors; the empty word maps to identity."""
        return product_of_state(self.factors, self.degree)

    def type_vector(self) -> TypeVector:
        return TypeVector.from_factors(self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    def generated_subgroup(self, limit: int | None = None) -> frozenset[Perm]:
        """The subgroup generated by the factors, as an explicit element set."""
        return closure(self.degree, self.factors, limit=limit)

    def generates(self, subgroup: Iterable[Perm]) -> bool:
        """Whether the generated subgroup equals ``subgroup`` exactly."""
        return self.generated_subgroup() == frozenset(subgroup)

    def product_in(self, gamma: Iterable[Perm]) -> bool:
        return self.product() in set(gamma)

    def is_transitive(self) -> bool:
        return is_transitive(self.degree, self.factors)

    # -- rewriting -----------------------------------------------------------

    def apply_move(self, move: Move) -> "Factorization":
        if not 1 <= move.position <= len(self.factors) - 1:
            raise ValueError(
                f"move position {move.position} out of range 1..{len(self.factors) - 1}")
        state = apply_moves_state(self.factors, (move,))
        return Factorization(self.degree, state)

    def apply_moves(self, moves: Iterable[Move]) -> "Factorization":
        out = self
        for m in moves:
            out = out.apply_move(m)
        return out

    def conjugated_by(self, g: Perm) -> "Factorization":
        """Conjugate every factor by ``g``; the product conjugates along."""
        if len(g) != self.degree:
            raise ValueError(f"degree mismatch: {len(g)} vs {self.degree}")
        return Factorization(self.degree, conjugate_state(self.factors, g))

    def concat(self, other: "Factorization") -> "Factorization":
        if other.degree != self.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")
        return Factorization(self.degree, self.factors + other.factors)

    def repeated(self, n: int) -> "Factorization":
        if n < 0:
            raise ValueError("repetition count must be >= 0")
        return Factorization(self.degree, self.factors * n)

    # -- text form -----------------------------------------------------------

    def to_line(self) -> str:
        if not self.factors:
            return "()"
        return " ".join(str(f) for f in self.factors)

    __str__ = to_line

    @classmethod
    def parse_line(cls, degree: int, line: str) -> "Factorization":
        """Parse a file line: factors in cycle notation separated by spaces."""
        tokens = line.split()
        if tokens == ["()"]:
            return cls.empty(degree)
        return cls.of(degree, tokens)

    @classmethod
    def parse_word(cls, degree: int, text: str) -> "Factorization":
        """Parse the inline CLI form.

        With whitespace, each token is a factor in full cycle or one-line
        notation (so ``"(1,2)(3,4) (1,3)"`` is two factors, the first a double
        transposition).  Without whitespace, every bracketed group is its own
        factor: ``"(1,2)(2,3)"`` is two transpositions.  ``"()"`` is the empty
        word.
        """
        stripped = text.strip()
        if stripped == "()":
            return cls.empty(degree)
        if any(ch.isspace() for ch in stripped):
            return cls.parse_line(degree, stripped)
        groups = []
        pos = 0
        while pos < len(stripped):
            end_char = {"(": ")", "[": "]"}.get(stripped[pos])
            if end_char is None:
                raise ValueError(f"bad word syntax at {stripped[pos:]!r}")
            end = stripped.find(end_char, pos)
            if end < 0:
                raise ValueError(f"unterminated factor in {text!r}")
            groups.append(stripped[pos:end + 1])
            pos = end + 1
        return cls.of(degree, groups)


def save_words(path: str | Path, degree: int, words: Iterable[Factorization]) -> None:
    lines = [f"d={degree}"]
    for w in words:
        if w.degree != degree:
            raise ValueError(f"word degree {w.degree} != file degree {degree}")
        lines.append(w.to_line())
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def load_words(path: str | Path) -> tuple[int, list[Factorization]]:
    text = Path(path).read_text(encoding="utf-8")
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines or not lines[0].startswith("d="):
        raise ValueError(f"missing 'd=<degree>' header in {path}")
    degree = int(lines[0][2:])
    return degree, [Factorization.parse_line(degree, ln) for ln in lines[1:]]
