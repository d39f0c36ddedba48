"""Automorphisms of the rank-2 free group acting on words and cyclic words.

Two kinds matter here.  Signed permutations of the four letters (there are
exactly 8) and multiplier automorphisms (A, x) sending each letter u to
x^-1^[u^-1 in A] * u * x^[u in A] for a letter set A avoiding x and x^-1.
In rank 2 the non-inner multiplier automorphisms are exactly the
one-letter cases ({y}, x): y -> yx, y^-1 -> x^-1 y^-1.

Conjugation is factored out by working with cyclic words: rotations stand
in for inner automorphisms.  The canonical form modulo rotations and
signed permutations (canonical_mod_J) picks the lexicographically least
rotation among all 8 permutation images, in the order a < b < A < B.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .word_core import (
    LETTERS,
    cyclic_reduce,
    free_reduce,
    inverse_letter,
    is_cyclic_word,
    least_rotation,
    least_rotation_index,
    order_key,
    rotate,
)


@dataclass(frozen=True)
class Permutation:
    """A signed permutation of the letters, determined by the generator images."""

    image_of_a: str
    image_of_b: str

    def __post_init__(self):
        a, b = self.image_of_a, self.image_of_b
        assert a in LETTERS and b in LETTERS
        assert {a.lower(), b.lower()} == {"a", "b"}, "images must cover both generators"

    @property
    def table(self):
        return _perm_table(self.image_of_a, self.image_of_b)

    def __call__(self, w: str) -> str:
        return w.translate(self.table)

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other: (self.compose(other))(w) = self(other(w))."""
        return Permutation(self(other.image_of_a), self(other.image_of_b))

    def inverse(self) -> "Permutation":
        inv_a = next(c for c in LETTERS if self(c) == "a")
        inv_b = next(c for c in LETTERS if self(c) == "b")
        return Permutation(inv_a, inv_b)


@lru_cache(maxsize=None)
def _perm_table(image_of_a: str, image_of_b: str):
    return str.maketrans(
        "abAB",
        image_of_a + image_of_b + inverse_letter(image_of_a) + inverse_letter(image_of_b),
    )


ALL_PERMUTATIONS = tuple(
    Permutation(img_a, img_b)
    for img_a in LETTERS
    for img_b in (("b", "B") if img_a in "aA" else ("a", "A"))
)

IDENTITY_PERM = ALL_PERMUTATIONS[0]


@dataclass(frozen=True)
class WhiteheadII:
    """Multiplier automorphism (A, x): u -> x^-1^[u^-1 in A] * u * x^[u in A]."""

    members: frozenset
    x: str

    def __post_init__(self):
        assert self.x in LETTERS
        assert not (self.members & {self.x, inverse_letter(self.x)}), (
            "member set must avoid the multiplier and its inverse"
        )

    def letter_image(self, u: str) -> str:
        left = inverse_letter(self.x) if inverse_letter(u) in self.members else ""
        right = self.x if u in self.members else ""
        return left + u + right


def all_whitehead(x: str = None):
    """Every multiplier automorphism, or just those with multiplier x."""
    auts = []
    for mult in LETTERS if x is None else [x]:
        y = "b" if mult in "aA" else "a"
        pair = (y, inverse_letter(y))
        for members in (frozenset(), {pair[0]}, {pair[1]}, {pair[0], pair[1]}):
            auts.append(WhiteheadII(frozenset(members), mult))
    return auts


@dataclass(frozen=True)
class OneLetterAut:
    """The automorphism ({y}, x): y -> yx, y^-1 -> x^-1 y^-1, fixing x."""

    y: str
    x: str

    def __post_init__(self):
        assert self.y in LETTERS and self.x in LETTERS
        assert self.y not in (self.x, inverse_letter(self.x)), (
            "the moved letter must not be the multiplier or its inverse"
        )

    def as_whitehead(self) -> WhiteheadII:
        return WhiteheadII(frozenset({self.y}), self.x)

    def inverse(self) -> "OneLetterAut":
        return OneLetterAut(self.y, inverse_letter(self.x))

    @property
    def table(self):
        return _one_letter_table(self.y, self.x)

    def __str__(self):
        return f"W[{self.y},{self.x}]"


@lru_cache(maxsize=None)
def _one_letter_table(y: str, x: str):
    mapping = {y: y + x, inverse_letter(y): inverse_letter(x) + inverse_letter(y)}
    return str.maketrans(mapping)


ALL_ONE_LETTER = tuple(
    OneLetterAut(y, x)
    for y in LETTERS
    for x in (("b", "B") if y in "aA" else ("a", "A"))
)

# The four principal automorphisms, indexed 1..4 in this order.
PRINCIPALS = (
    OneLetterAut("a", "b"),
    OneLetterAut("a", "B"),
    OneLetterAut("b", "a"),
    OneLetterAut("b", "A"),
)


def principal_index(phi: OneLetterAut) -> int:
    """1-based index of a principal automorphism."""
    return PRINCIPALS.index(phi) + 1


def principal_of(phi: OneLetterAut) -> OneLetterAut:
    """The principal automorphism acting like phi on every cyclic word.

    ({y}, x) and ({y^-1}, x^-1) differ by an inner automorphism, so exactly
    one representative per pair has y a generator.
    """
    if phi.y in "ab":
        return phi
    return OneLetterAut(inverse_letter(phi.y), inverse_letter(phi.x))


def conjugate_by_perm(phi: OneLetterAut, pi: Permutation) -> OneLetterAut:
    """The unique psi with pi(phi(w)) = psi(pi(w)) for every word w."""
    return OneLetterAut(pi(phi.y), pi(phi.x))


def apply_whitehead(phi: WhiteheadII, w: str) -> str:
    """Letterwise image, freely reduced."""
    return free_reduce("".join(phi.letter_image(c) for c in w))


def apply_cyclic(phi, w: str) -> str:
    """Image of a cyclic word: letterwise map, then free and cyclic reduction.

    Accepts a OneLetterAut (fast path) or any WhiteheadII.  The length of
    the result is the quantity all level and minimality tests compare.
    """
    if isinstance(phi, OneLetterAut):
        return cyclic_reduce(w.translate(phi.table))[0]
    return cyclic_reduce(apply_whitehead(phi, w))[0]


@dataclass(frozen=True)
class JCanonicalForm:
    """Least rotation over all 8 permutation images; the class label for ~J."""

    word: str


def canonical_word(w: str) -> str:
    """The raw canonical string; see canonical_mod_J."""
    assert is_cyclic_word(w)
    best = least_rotation(w)
    best_key = order_key(best)
    for pi in ALL_PERMUTATIONS:
        if pi is IDENTITY_PERM:
            continue
        cand = least_rotation(pi(w))
        key = order_key(cand)
        if key < best_key:
            best, best_key = cand, key
    return best


def canonical_mod_J(w: str) -> JCanonicalForm:
    """Minimum over all rotations of all 8 permutation images, in a < b < A < B order.

    Two cyclic words get the same canonical form exactly when one is a
    rotation of a permutation image of the other.
    """
    return JCanonicalForm(canonical_word(w))


def canonical_witness(w: str) -> tuple[str, Permutation, int]:
    """(canonical, pi, k) with rotate(pi(w), k) == canonical."""
    assert is_cyclic_word(w)
    best = None
    for pi in ALL_PERMUTATIONS:
        image = pi(w)
        k = least_rotation_index(image)
        cand = rotate(image, k)
        if best is None or order_key(cand) < order_key(best[0]):
            best = (cand, pi, k)
    return best


def triangle_decompose(x: str, y: str):
    """Factor ({x^-1}, y) * ({y}, x) as pi * (inner by y) * ({x^-1}, y^-1).

    Returns (pi, factors) where pi maps x -> y^-1, y -> x and factors is the
    right-hand side as applicable automorphism values, outermost first.
    Both sides agree as maps on every word, which the tests verify.
    """
    if x not in LETTERS or y not in LETTERS:
        raise ValueError("letters must be one of 'a', 'b', 'A', 'B'")
    if y in (x, inverse_letter(x)):
        raise ValueError("y must not be x or its inverse")
    x_bar, y_bar = inverse_letter(x), inverse_letter(y)
    # x, y, x_bar, y_bar cover all four letters, so pi is fully determined
    img = {x: y_bar, y: x, x_bar: y, y_bar: x_bar}
    pi = Permutation(img["a"], img["b"])
    inner = WhiteheadII(frozenset({x, x_bar}), y)
    last = OneLetterAut(x_bar, y_bar)
    return pi, (pi, inner, last)
