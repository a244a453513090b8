"""Symmetric-group machinery: actions on index sequences, inversions,
minimal-inversion coset representatives and the multi-index dictionary.

Permutations are stored in 1-based one-line notation.  ``sigma`` acts on a
sequence by ``sigma(x)_k = x_{sigma(k)}``; the product ``sigma * tau`` is
defined so that ``(sigma * tau)(x) == sigma(tau(x))``, which makes the left
cosets ``sigma H_A`` exactly the fibres of ``sigma -> sigma(A)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial
from typing import Iterator, List, Sequence, Tuple

MultiIndex = Tuple[int, ...]
Composition = Tuple[int, ...]


@dataclass(frozen=True)
class Permutation:
    images: Tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"{self.images} is not a permutation of 1..m")

    @classmethod
    def identity(cls, m: int) -> "Permutation":
        return cls(tuple(range(1, m + 1)))

    @classmethod
    def transposition(cls, m: int, a: int, b: int) -> "Permutation":
        img = list(range(1, m + 1))
        img[a - 1], img[b - 1] = b, a
        return cls(tuple(img))

    @classmethod
    def from_cycles(cls, m: int, *cycles: Sequence[int]) -> "Permutation":
        """Cycle notation: ``(1, 3, 4)`` sends 1 to 3, 3 to 4 and 4 to 1."""
        img = list(range(1, m + 1))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                img[a - 1] = b
        return cls(tuple(img))

    @property
    def m(self) -> int:
        return len(self.images)

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return Permutation(tuple(other.images[k - 1] for k in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.m
        for k, v in enumerate(self.images, start=1):
            inv[v - 1] = k
        return Permutation(tuple(inv))

    def reversed(self) -> "Permutation":
        """The permutation ``k -> sigma(m + 1 - k)``."""
        return Permutation(self.images[::-1])

    def is_identity(self) -> bool:
        return all(v == k for k, v in enumerate(self.images, start=1))

    def is_transposition(self) -> bool:
        moved = [k for k, v in enumerate(self.images, start=1) if v != k]
        return len(moved) == 2

    def __repr__(self) -> str:
        return f"Permutation{self.images}"


def act(sigma: Permutation, x: Sequence[int]) -> MultiIndex:
    """``sigma(x_1, ..., x_m) = (x_{sigma(1)}, ..., x_{sigma(m)})``."""
    if len(x) != sigma.m:
        raise ValueError(f"length mismatch: permutation of {sigma.m}, sequence of {len(x)}")
    return tuple(x[k - 1] for k in sigma.images)


def inversions(sigma: Permutation) -> int:
    img = sigma.images
    return sum(1 for a in range(len(img)) for b in range(a + 1, len(img)) if img[a] > img[b])


def word_inversions(x: Sequence[int]) -> int:
    """Number of pairs ``a < b`` with ``x_a > x_b``."""
    return sum(1 for a in range(len(x)) for b in range(a + 1, len(x)) if x[a] > x[b])


def all_permutations(m: int) -> Iterator[Permutation]:
    for img in itertools.permutations(range(1, m + 1)):
        yield Permutation(img)


def stabilizer(A: Sequence[int]) -> List[Permutation]:
    """``H_A``: permutations fixing ``A`` under the action."""
    A = tuple(A)
    out = []
    # product of symmetric groups on the blocks of equal values
    blocks = {}
    for pos, v in enumerate(A, start=1):
        blocks.setdefault(v, []).append(pos)
    block_lists = list(blocks.values())
    for choice in itertools.product(*(itertools.permutations(b) for b in block_lists)):
        img = list(range(1, len(A) + 1))
        for b, perm in zip(block_lists, choice):
            for src, dst in zip(b, perm):
                img[src - 1] = dst
        out.append(Permutation(tuple(img)))
    return sorted(out, key=lambda p: p.images)


def minimal_rep(A: Sequence[int], B: Sequence[int]) -> Permutation:
    """The fewest-inversion ``sigma`` with ``sigma(A) == B``.

    Equal values of ``A`` are matched to ``B`` in increasing order of
    position; this stable matching is the unique minimal element.
    """
    if sorted(A) != sorted(B):
        raise ValueError(f"{tuple(B)} is not a rearrangement of {tuple(A)}")
    slots = {}
    for pos, v in enumerate(A, start=1):
        slots.setdefault(v, []).append(pos)
    used = {v: 0 for v in slots}
    img = []
    for v in B:
        img.append(slots[v][used[v]])
        used[v] += 1
    return Permutation(tuple(img))


def rearrangements(A: Sequence[int]) -> List[MultiIndex]:
    """Distinct rearrangements of ``A`` in lexicographic order."""
    return sorted(set(itertools.permutations(tuple(A))))


@dataclass(frozen=True)
class CosetSystem:
    base: MultiIndex
    subgroup_order: int
    reps: Tuple[Permutation, ...]

    def __contains__(self, sigma: Permutation) -> bool:
        return minimal_rep(self.base, act(sigma, self.base)) == sigma


@lru_cache(maxsize=None)
def coset_reps(A: Tuple[int, ...]) -> CosetSystem:
    """``D_A``, one representative per distinct rearrangement of ``A``."""
    A = tuple(A)
    order = 1
    for v in set(A):
        order *= factorial(A.count(v))
    reps = tuple(minimal_rep(A, B) for B in rearrangements(A))
    return CosetSystem(A, order, reps)


def in_coset_reps(sigma: Permutation, A: Sequence[int]) -> bool:
    return sigma in coset_reps(tuple(A))


def decompose(tau: Permutation, i: Sequence[int]) -> Tuple[Permutation, Permutation, int]:
    """Split ``tau = sigma * xi`` with ``sigma`` in ``D_i`` and ``xi`` in ``H_i``.

    Returns ``(sigma, xi, inv(xi))``; the last entry is ``d_i(tau)``.
    """
    i = tuple(i)
    if list(i) != sorted(i):
        raise ValueError(f"{i} is not weakly increasing")
    sigma = minimal_rep(i, act(tau, i))
    xi = sigma.inverse() * tau
    return sigma, xi, inversions(xi)


def _descending_chain(tau: Permutation) -> List[Permutation]:
    """``[tau, ..., e]`` stripping one adjacent descent at a time."""
    chain = [tau]
    img = list(tau.images)
    while True:
        for a in range(len(img) - 1):
            if img[a] > img[a + 1]:
                img[a], img[a + 1] = img[a + 1], img[a]
                chain.append(Permutation(tuple(img)))
                break
        else:
            return chain


def transposition_path(tau: Permutation, tau_prime: Permutation, A: Sequence[int]) -> List[Permutation]:
    """A chain from ``tau_prime`` to ``tau`` inside ``D_A`` with transposition steps.

    Both endpoints are joined to the identity through right factors of a
    reduced word, which stay inside ``D_A``.
    """
    A = tuple(A)
    for t in (tau, tau_prime):
        if not in_coset_reps(t, A):
            raise ValueError(f"{t} is not a minimal coset representative for {A}")
    if tau == tau_prime:
        return [tau]
    down = _descending_chain(tau_prime)
    up = _descending_chain(tau)[::-1]
    return down + up[1:]


def validate_path(path: Sequence[Permutation], tau: Permutation, tau_prime: Permutation, A: Sequence[int]) -> bool:
    if not path or path[0] != tau_prime or path[-1] != tau:
        return False
    if not all(in_coset_reps(p, A) for p in path):
        return False
    return all((b * a.inverse()).is_transposition() for a, b in zip(path, path[1:]))


def mu_of(i: Sequence[int], N: int) -> Composition:
    """Occupation counts ``mu_k = #{l : i_l = k}`` for ``k = 0..N``."""
    if i and max(i) > N:
        raise ValueError(f"index {max(i)} exceeds N={N}")
    return tuple(sum(1 for x in i if x == k) for k in range(N + 1))


def multi_index_of(mu: Sequence[int]) -> MultiIndex:
    return tuple(k for k, c in enumerate(mu) for _ in range(c))


def enumerate_W(m: int, N: int) -> List[MultiIndex]:
    """Weakly increasing sequences of length ``m`` with entries in ``0..N``."""
    return list(itertools.combinations_with_replacement(range(N + 1), m))


def enumerate_B(m: int, N: int) -> List[Composition]:
    """Compositions ``(mu_0, ..., mu_N)`` of ``m``, lexicographic."""
    out = sorted(mu_of(i, N) for i in enumerate_W(m, N))
    assert len(out) == comb(m + N, N)
    return out


def rho_pairing(mu: Sequence[int], N: int) -> int:
    """``sum_k (2k - N) mu_k``, the exponent of ``q^{-2 h_rho}`` on weight ``mu``."""
    return sum((2 * k - N) * c for k, c in enumerate(mu))


def is_sorted(i: Sequence[int]) -> bool:
    return all(a <= b for a, b in zip(i, i[1:]))
