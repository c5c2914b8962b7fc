"""
Hall bases of free ungraded Lie algebras, fixed to the Lyndon-word basis.

Generators come in two flavours: plain symbols x_1..x_m (for the classical
wedge-of-suspensions decomposition) and face generators a_{J,i} indexed by a
vertex subset J with |J| >= 2 and a copy index 1 <= i <= |J|-1 (the alphabet
the polyhedral decompositions run over).  The generator order is fixed once,
by (J, i), so the bases attached to nested vertex sets are simultaneously
compatible: the basis over a sub-alphabet is literally a subset of the basis
over the larger one.  That coherence is what makes deduplicating brackets
across overlapping maximal faces well defined.

witt_dimension is the classical multigraded Witt formula and serves as an
independent counting oracle for the Lyndon enumeration.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import factorial, gcd, prod
from typing import Iterable, Iterator, Sequence


@dataclass(frozen=True, slots=True)
class Generator:
    """A basis letter: a_{J,i} when subset is set, else the plain symbol x_index."""

    subset: tuple[int, ...] | None
    index: int

    @staticmethod
    def plain(i: int) -> "Generator":
        if i < 1:
            raise ValueError("plain generator index must be >= 1")
        return Generator(None, i)

    @staticmethod
    def face(J: Iterable[int], i: int) -> "Generator":
        sub = tuple(sorted(set(J)))
        if len(sub) < 2:
            raise ValueError(f"face generator needs |J| >= 2, got {sub}")
        if not 1 <= i <= len(sub) - 1:
            raise ValueError(f"copy index {i} outside 1..{len(sub) - 1}")
        return Generator(sub, i)

    def key(self) -> tuple:
        if self.subset is None:
            return ((self.index,), 0)
        return (self.subset, self.index)

    def name(self) -> str:
        if self.subset is None:
            return f"x{self.index}"
        return "a{" + ",".join(map(str, self.subset)) + "}#" + str(self.index)

    def __str__(self) -> str:
        return self.name()


def generators_for(I: Iterable[int]) -> tuple[Generator, ...]:
    """The alphabet S_I = {a_{J,i} : J subset of I, |J| >= 2, 1 <= i <= |J|-1}.

    Ordered by (J lexicographic, i); restricting to a smaller I gives a
    prefix-compatible subsequence of the same global order.
    """
    iv = tuple(sorted(set(I)))
    gens = []
    for k in range(2, len(iv) + 1):
        for J in combinations(iv, k):
            for i in range(1, k):
                gens.append(Generator(J, i))
    gens.sort(key=Generator.key)
    return tuple(gens)


def plain_alphabet(m: int) -> tuple[Generator, ...]:
    return tuple(Generator.plain(i) for i in range(1, m + 1))


@dataclass(frozen=True, slots=True)
class Bracket:
    """A binary Lie bracket over Generators; leaves carry gen, nodes left/right."""

    gen: Generator | None
    left: "Bracket | None"
    right: "Bracket | None"
    weight: int

    @staticmethod
    def leaf(g: Generator) -> "Bracket":
        return Bracket(g, None, None, 1)

    @staticmethod
    def pair(left: "Bracket", right: "Bracket") -> "Bracket":
        return Bracket(None, left, right, left.weight + right.weight)

    def leaves(self) -> tuple[Generator, ...]:
        if self.gen is not None:
            return (self.gen,)
        return self.left.leaves() + self.right.leaves()

    def multidegree(self) -> dict[Generator, int]:
        return dict(Counter(self.leaves()))

    def serialize(self) -> str:
        if self.gen is not None:
            return self.gen.name()
        return f"[{self.left.serialize()},{self.right.serialize()}]"

    def __str__(self) -> str:
        return self.serialize()


def lyndon_words(alphabet_size: int, max_len: int) -> Iterator[tuple[int, ...]]:
    """Duval's algorithm: all Lyndon words of length <= max_len over 0..k-1,
    in lexicographic order."""
    k = alphabet_size
    if k <= 0 or max_len <= 0:
        return
    w = [0]
    while True:
        yield tuple(w)
        period = len(w)
        while len(w) < max_len:
            w.append(w[len(w) - period])
        while w and w[-1] == k - 1:
            w.pop()
        if not w:
            return
        w[-1] += 1


def _standard_bracketing(
    word: tuple[int, ...],
    alphabet: Sequence[Generator],
    memo: dict[tuple[int, ...], Bracket],
) -> Bracket:
    """Right standard factorization w = uv, v the smallest proper suffix."""
    hit = memo.get(word)
    if hit is not None:
        return hit
    if len(word) == 1:
        b = Bracket.leaf(alphabet[word[0]])
    else:
        cut = 1
        for i in range(2, len(word)):
            if word[i:] < word[cut:]:
                cut = i
        b = Bracket.pair(
            _standard_bracketing(word[:cut], alphabet, memo),
            _standard_bracketing(word[cut:], alphabet, memo),
        )
    memo[word] = b
    return b


def hall_basis(
    alphabet: Sequence[Generator],
    weight_bound: int,
    *,
    letter_degrees: Sequence[int] | None = None,
    degree_bound: int | None = None,
) -> list[Bracket]:
    """All Lyndon brackets of weight <= weight_bound over the given alphabet.

    Deterministic order: (weight, word lexicographic in alphabet order).
    When letter_degrees and degree_bound are given, brackets whose total
    letter degree exceeds degree_bound are omitted; since degrees are >= 1
    this prunes exactly the brackets invisible below that degree, which keeps
    truncated series products finite without changing them.
    """
    if weight_bound < 1:
        raise ValueError("weight bound must be >= 1")
    k = len(alphabet)
    if k == 0:
        return []
    max_len = weight_bound
    degs = None
    if degree_bound is not None:
        if letter_degrees is None or len(letter_degrees) != k:
            raise ValueError("degree_bound needs letter_degrees for the alphabet")
        degs = list(letter_degrees)
        if any(d < 1 for d in degs):
            raise ValueError("letter degrees must be >= 1")
        max_len = min(max_len, degree_bound // min(degs))
    words = []
    for w in lyndon_words(k, max_len):
        if degs is not None and sum(degs[c] for c in w) > degree_bound:
            continue
        words.append(w)
    words.sort(key=lambda w: (len(w), w))
    memo: dict[tuple[int, ...], Bracket] = {}
    return [_standard_bracketing(w, alphabet, memo) for w in words]


@dataclass(slots=True)
class BracketStats:
    """Per-subset counts b(J), per-vertex totals l_i, and the weight of a bracket."""

    bJ: dict[tuple[int, ...], int]
    l: tuple[int, ...]
    weight: int


def stats(b: Bracket, m: int) -> BracketStats:
    """Counts over the face-generator leaves of b, on the ground set {1..m}."""
    bJ: Counter[tuple[int, ...]] = Counter()
    for g in b.leaves():
        if g.subset is None:
            raise ValueError("stats needs face generators, got a plain symbol")
        if g.subset[-1] > m:
            raise ValueError(f"generator {g} exceeds ground set 1..{m}")
        bJ[g.subset] += 1
    l = [0] * m
    for J, count in bJ.items():
        for v in J:
            l[v - 1] += count
    return BracketStats(dict(bJ), tuple(l), b.weight)


def support(b: Bracket) -> tuple[int, ...]:
    """Vertices occurring in the leaves of b (face or plain generators)."""
    verts: set[int] = set()
    for g in b.leaves():
        if g.subset is None:
            verts.add(g.index)
        else:
            verts.update(g.subset)
    return tuple(sorted(verts))


def restricted_support(b: Bracket, I: Iterable[int]) -> tuple[int, ...]:
    """I_b: the elements of I that appear in the subsets of b."""
    return tuple(sorted(set(I) & set(support(b))))


@lru_cache(maxsize=None)
def _mobius(n: int) -> int:
    if n == 1:
        return 1
    out = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            out = -out
        p += 1
    if n > 1:
        out = -out
    return out


def witt_dimension(multidegree: Sequence[int]) -> int:
    """Number of Hall-basis brackets with the given generator multidegree.

    Multigraded Witt formula: (1/n) sum over d | gcd of mu(d) * multinomial,
    where n is the total weight.
    """
    counts = [int(c) for c in multidegree]
    if any(c < 0 for c in counts):
        raise ValueError("multidegree entries must be nonnegative")
    n = sum(counts)
    if n < 1:
        raise ValueError("total weight must be >= 1")
    g = 0
    for c in counts:
        g = gcd(g, c)
    total = 0
    for d in range(1, g + 1):
        if g % d == 0:
            total += _mobius(d) * factorial(n // d) // prod(
                factorial(c // d) for c in counts
            )
    assert total % n == 0
    return total // n
