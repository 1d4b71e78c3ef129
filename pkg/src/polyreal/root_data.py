"""Root data for four affine families, folding maps, and adapted sequences.

The supported families are labeled A1, C1, A2, D2.  Each comes with a rank
parameter n, an index set I = {1, ..., n}, and an integer Cartan matrix
(a_{i,j}).  A cyclic word on I induces the crystal lattice; the word must be
"adapted": its restriction to any Dynkin-neighbor pair strictly alternates.
The alternation is recorded by the orientation data p_{i,j} in {0, 1} with
p_{i,j} + p_{j,i} = 1, and accumulated along folded color paths by the
P^k tables that every assignment map uses for its s-offsets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

FAMILIES = ("A1", "C1", "A2", "D2")

FOLD_KINDS = ("overline", "pi", "pi1", "pi2", "pi_prime")

MIN_RANK = {"A1": 2, "C1": 3, "A2": 3, "D2": 3}


class RootDataError(ValueError):
    """Invalid root-system, folding, or sequence input."""


class NotAdaptedError(RootDataError):
    """The word fails the alternation condition for some neighbor pair."""


@dataclass(frozen=True)
class AlgebraType:
    """One of the four supported affine families at rank parameter n."""

    family: str
    n: int

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise RootDataError(f"unknown family {self.family!r}, expected one of {FAMILIES}")
        if self.n < MIN_RANK[self.family]:
            raise RootDataError(
                f"family {self.family} needs n >= {MIN_RANK[self.family]}, got {self.n}"
            )

    def to_json(self) -> dict:
        return {"family": self.family, "n": self.n}

    @classmethod
    def from_json(cls, data: dict) -> "AlgebraType":
        return cls(str(data["family"]), int(data["n"]))


# Edge multiplicities (a_{1,2}, a_{2,1}) and (a_{n-1,n}, a_{n,n-1}) at the two
# chain ends; interior edges are single bonds.
_END_ARROWS = {
    "C1": ((-1, -2), (-2, -1)),
    "A2": ((-1, -2), (-1, -2)),
    "D2": ((-2, -1), (-1, -2)),
}


@dataclass(frozen=True)
class RootSystem:
    """An algebra type together with its Cartan matrix."""

    algebra: AlgebraType
    cartan: Tuple[Tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return self.algebra.n

    @property
    def index_set(self) -> Tuple[int, ...]:
        return tuple(range(1, self.n + 1))

    def a(self, i: int, j: int) -> int:
        """Cartan entry a_{i,j} = <h_i, alpha_j>."""
        return self.cartan[i - 1][j - 1]

    def neighbor_pairs(self) -> List[Tuple[int, int]]:
        """Unordered Dynkin edges as pairs (i, j) with i < j."""
        n = self.n
        return [
            (i, j)
            for i in range(1, n + 1)
            for j in range(i + 1, n + 1)
            if self.a(i, j) < 0
        ]


def build_root_system(algebra: AlgebraType) -> RootSystem:
    """Construct the Cartan matrix of the given algebra type."""
    n = algebra.n
    fam = algebra.family
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2
    if fam == "A1":
        if n == 2:
            a[0][1] = a[1][0] = -2
        else:
            for i in range(n):
                j = (i + 1) % n
                a[i][j] = a[j][i] = -1
    else:
        for i in range(n - 1):
            a[i][i + 1] = a[i + 1][i] = -1
        (a12, a21), (afl, alf) = _END_ARROWS[fam]
        a[0][1], a[1][0] = a12, a21
        a[n - 2][n - 1], a[n - 1][n - 2] = afl, alf
    return RootSystem(algebra, tuple(tuple(row) for row in a))


def fold(map_kind: str, n: int, t: int) -> int:
    """Fold an integer t onto the index set {1, ..., n}.

    overline has period n; pi and pi_prime have period 2n-2; pi1 has period
    2n-1; pi2 has period 2n.  pi_prime is pi restricted to t >= 1.
    """
    if map_kind == "overline":
        return (t - 1) % n + 1
    if map_kind in ("pi", "pi_prime"):
        if map_kind == "pi_prime" and t < 1:
            raise RootDataError(f"pi_prime needs t >= 1, got {t}")
        r = (t - 1) % (2 * n - 2) + 1
        return r if r <= n else 2 * n - r
    if map_kind == "pi1":
        r = (t - 1) % (2 * n - 1) + 1
        return r if r <= n else 2 * n - r
    if map_kind == "pi2":
        r = (t - 1) % (2 * n) + 1
        return r if r <= n else 2 * n + 1 - r
    raise RootDataError(f"unknown folding map {map_kind!r}, expected one of {FOLD_KINDS}")


class AdaptedSequence:
    """A cyclic word on the index set whose neighbor subsequences alternate.

    The word (i_1, ..., i_L) lists the sequence left to right starting from
    the first letter; position j >= 1 carries color i_{(j-1 mod L)+1}.
    """

    def __init__(self, root_system: RootSystem, word: Sequence[int]):
        self.root_system = root_system
        self.word = tuple(int(c) for c in word)
        self.L = len(self.word)
        self._validate()
        self._occ: Dict[int, Tuple[int, ...]] = {
            i: tuple(m for m, c in enumerate(self.word) if c == i)
            for i in root_system.index_set
        }
        self.p = self._orientation()
        self._pt_cache: Dict[Tuple[str, int], Dict[int, int]] = {}

    def _validate(self) -> None:
        n = self.root_system.n
        if not self.word:
            raise RootDataError("word must be nonempty")
        bad = [c for c in self.word if not 1 <= c <= n]
        if bad:
            raise RootDataError(f"letters {sorted(set(bad))} outside index set 1..{n}")
        missing = set(range(1, n + 1)) - set(self.word)
        if missing:
            raise RootDataError(f"indices {sorted(missing)} missing from word")
        L = self.L
        for m in range(L):
            if self.word[m] == self.word[(m + 1) % L]:
                raise RootDataError(
                    f"color {self.word[m]} repeats at cyclic positions {m + 1},{(m + 1) % L + 1}"
                )
        doubled = self.word * 2
        for i, j in self.root_system.neighbor_pairs():
            sub = [(m, c) for m, c in enumerate(doubled) if c in (i, j)]
            for (m1, c1), (m2, c2) in zip(sub, sub[1:]):
                if c1 == c2:
                    raise NotAdaptedError(
                        f"word is not adapted: neighbor pair ({i},{j}) sees color {c1} "
                        f"twice in a row at cyclic positions {m1 % L + 1},{m2 % L + 1}"
                    )

    def _orientation(self) -> Dict[Tuple[int, int], int]:
        p: Dict[Tuple[int, int], int] = {}
        for i, j in self.root_system.neighbor_pairs():
            first_i = self.word.index(i)
            first_j = self.word.index(j)
            p[(i, j)] = 1 if first_i < first_j else 0
            p[(j, i)] = 1 - p[(i, j)]
        return p

    def color_of(self, j: int) -> int:
        """Color of position j >= 1."""
        if j < 1:
            raise RootDataError(f"position must be >= 1, got {j}")
        return self.word[(j - 1) % self.L]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, AdaptedSequence)
            and self.root_system == other.root_system
            and self.word == other.word
        )

    def __hash__(self) -> int:
        return hash((self.root_system, self.word))

    def __repr__(self) -> str:
        alg = self.root_system.algebra
        return f"AdaptedSequence({alg.family}, n={alg.n}, word={list(self.word)})"

    def to_json(self) -> dict:
        return {"word": list(self.word)}


def build_adapted(root_system: RootSystem, word: Sequence[int]) -> AdaptedSequence:
    """Validate a word and package it with its orientation data."""
    return AdaptedSequence(root_system, word)


def index_to_pair(seq: AdaptedSequence, j: int) -> Tuple[int, int]:
    """Single index j >= 1 to the double index (s, l): s-th occurrence of color l."""
    if j < 1:
        raise RootDataError(f"position must be >= 1, got {j}")
    q, r = divmod(j - 1, seq.L)
    color = seq.word[r]
    occ = seq._occ[color]
    s = q * len(occ) + occ.index(r) + 1
    return s, color


def pair_to_index(seq: AdaptedSequence, s: int, l: int) -> int:
    """Double index (s, l) to the single index of the s-th occurrence of l."""
    if s < 1:
        raise RootDataError(f"occurrence count must be >= 1, got {s}")
    occ = seq._occ.get(l)
    if not occ:
        raise RootDataError(f"color {l} not in index set")
    q, rem = divmod(s - 1, len(occ))
    return q * seq.L + occ[rem] + 1


def p_table(seq: AdaptedSequence, variant: str, k: int, t: int) -> int:
    """Accumulated orientation table P^k(t) along the folded color path.

    P^k(k) = 0; going up, P^k(t) = P^k(t-1) + p_{c(t),c(t-1)}; going down,
    P^k(t) = P^k(t+1) + p_{c(t),c(t+1)}, where c folds via the variant map
    and equal folded colors contribute 0.  The pi_prime variant is one-sided
    and only defined for t >= k.
    """
    if variant not in FOLD_KINDS:
        raise RootDataError(f"unknown table variant {variant!r}")
    if variant == "pi_prime" and t < k:
        raise RootDataError(f"pi_prime table needs t >= {k}, got {t}")
    n = seq.root_system.n
    cache = seq._pt_cache.setdefault((variant, k), {k: 0})
    if t in cache:
        return cache[t]
    if t > k:
        base = max(u for u in cache if u <= t)
        for u in range(base + 1, t + 1):
            cache[u] = cache[u - 1] + _p_contrib(seq, fold(variant, n, u), fold(variant, n, u - 1))
    else:
        base = min(u for u in cache if u >= t)
        for u in range(base - 1, t - 1, -1):
            cache[u] = cache[u + 1] + _p_contrib(seq, fold(variant, n, u), fold(variant, n, u + 1))
    return cache[t]


def _p_contrib(seq: AdaptedSequence, a: int, b: int) -> int:
    if a == b:
        return 0
    try:
        return seq.p[(a, b)]
    except KeyError:
        raise RootDataError(f"colors {a},{b} are not neighbors") from None
