"""Exact matrix representations of U_q(gl(N+1)).

``I_0, ..., I_N`` is the canonical basis of the defining representation
``V``; ``e_{+,i}`` sends ``I_i`` to ``I_{i-1}``, so ``I_0`` is the highest
weight vector.  Tensor powers are assembled from the m-fold coproduct and the
symmetric subspace of ``V^{(x)m}`` is handled through its spanning vectors
``M(mu)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .combinatorics import (
    Composition,
    act,
    coset_reps,
    enumerate_B,
    inversions,
    multi_index_of,
)
from .expressions import AlgebraExpr, EGen, Eps, Root, Symbol, Word, hat_E, root_vector_expand
from .matrices import SparseMatrix, Vector, kron_all, matrix_unit
from .scalars import ONE, ZERO, QScalar, q_integer, q_pow, s_pow, scalar_div_exact


class NotInvariant(ValueError):
    """The image of the symmetric subspace left its span."""


class PathDependent(ValueError):
    """Two lowering paths produced different normalization scalars."""


@dataclass(frozen=True)
class RepSpace:
    kind: str  # "tensor", "sym", "exrep" or "product"
    N: int
    degree: int
    dim: int
    labels: Tuple = field(repr=False, compare=False, default=())

    def to_json(self) -> dict:
        return {"kind": self.kind, "N": self.N, "degree": self.degree, "dim": self.dim}


class Representation:
    """Base class: subclasses provide ``_e(sign, i)`` and ``_eps(i, half)``."""

    N: int
    dim: int
    space: RepSpace

    def __init__(self):
        self._sym_cache: Dict[Symbol, SparseMatrix] = {}
        self._word_cache: Dict[Word, SparseMatrix] = {}

    # generator matrices -------------------------------------------------
    def generator(self, sym: Symbol) -> SparseMatrix:
        if isinstance(sym, EGen):
            if not 1 <= sym.i <= self.N:
                raise IndexError(f"e_{{{sym.i}}} out of range for N={self.N}")
            return self._e(sym.sign, sym.i)
        if isinstance(sym, Eps):
            if not 0 <= sym.i <= self.N:
                raise IndexError(f"eps_{sym.i} out of range for N={self.N}")
            return self._eps(sym.i, sym.half)
        raise TypeError(f"{sym!r} is not a generator")

    def K(self, i: int, power: int = 1) -> SparseMatrix:
        """``q^{power * h_i / 2} = q^{power(eps_{i-1} - eps_i)/2}``."""
        return self._eps(i - 1, power) @ self._eps(i, -power)

    def generators(self) -> List[Tuple[Symbol, SparseMatrix]]:
        """All ``e_{+-,i}`` and ``q^{+-eps_i/2}`` with their matrices."""
        out = []
        for i in range(1, self.N + 1):
            for sign in (1, -1):
                out.append((EGen(sign, i), self.generator(EGen(sign, i))))
        for i in range(self.N + 1):
            for h in (1, -1):
                out.append((Eps(i, h), self.generator(Eps(i, h))))
        return out

    def symbol(self, sym: Symbol) -> SparseMatrix:
        mat = self._sym_cache.get(sym)
        if mat is None:
            if isinstance(sym, Root):
                if sym.variant == "hatted":
                    mat = self.evaluate(hat_E(sym.i, sym.j))
                else:
                    mat = self.evaluate(root_vector_expand(sym.i, sym.j, sym.variant))
            else:
                mat = self.generator(sym)
            self._sym_cache[sym] = mat
        return mat

    def word(self, word: Word) -> SparseMatrix:
        if not word:
            return SparseMatrix.identity(self.dim)
        mat = self._word_cache.get(word)
        if mat is None:
            mat = self.symbol(word[0]) if len(word) == 1 else self.word(word[:-1]) @ self.symbol(word[-1])
            self._word_cache[word] = mat
        return mat

    def evaluate(self, expr: AlgebraExpr) -> SparseMatrix:
        """Image of ``expr`` under the algebra homomorphism of this representation."""
        acc = SparseMatrix.zeros(self.dim, space=self.space)
        for word, c in expr:
            acc = acc + self.word(word).scale(c)
        acc.space = self.space
        return acc

    def __repr__(self) -> str:
        return f"{type(self).__name__}(N={self.N}, dim={self.dim})"


# --------------------------------------------------------------- tensor powers


def word_index(word: Sequence[int], N: int) -> int:
    idx = 0
    for j in word:
        idx = idx * (N + 1) + j
    return idx


def tensor_words(N: int, k: int) -> List[Tuple[int, ...]]:
    return list(itertools.product(range(N + 1), repeat=k))


def defining_action(sym: Symbol, N: int) -> SparseMatrix:
    """Generator matrix on ``V = C^{N+1}``."""
    n = N + 1
    if isinstance(sym, EGen):
        if not 1 <= sym.i <= N:
            raise IndexError(f"generator index {sym.i} out of range for N={N}")
        if sym.sign > 0:
            return matrix_unit(n, sym.i - 1, sym.i)
        return matrix_unit(n, sym.i, sym.i - 1)
    if isinstance(sym, Eps):
        if not 0 <= sym.i <= N:
            raise IndexError(f"eps index {sym.i} out of range for N={N}")
        return SparseMatrix.diagonal([s_pow(sym.half) if a == sym.i else ONE for a in range(n)])
    raise TypeError(f"{sym!r} is not a generator")


class TensorPower(Representation):
    """``V^{(x)k}`` through the k-fold coproduct (or the reversed one)."""

    def __init__(self, N: int, k: int, reversed: bool = False):
        super().__init__()
        if N < 1 or k < 1:
            raise ValueError("TensorPower needs N >= 1 and k >= 1")
        self.N, self.k, self.reversed = N, k, reversed
        self.dim = (N + 1) ** k
        self.space = RepSpace("tensor", N, k, self.dim, tuple(tensor_words(N, k)))

    def _eps(self, i: int, half: int) -> SparseMatrix:
        vals = [s_pow(half * sum(1 for j in w if j == i)) for w in self.space.labels]
        return SparseMatrix.diagonal(vals, self.space)

    def _e(self, sign: int, i: int) -> SparseMatrix:
        e = defining_action(EGen(sign, i), self.N)
        K = defining_action(Eps(i - 1, 1), self.N) @ defining_action(Eps(i, -1), self.N)
        Kinv = defining_action(Eps(i - 1, -1), self.N) @ defining_action(Eps(i, 1), self.N)
        before, after = (Kinv, K) if self.reversed else (K, Kinv)
        acc = SparseMatrix.zeros(self.dim)
        for v in range(self.k):
            acc = acc + kron_all([before] * v + [e] + [after] * (self.k - v - 1))
        acc.space = self.space
        return acc


def DefiningRep(N: int) -> TensorPower:
    return TensorPower(N, 1)


def coproduct_matrix(sym: Symbol, m: int, N: int, reversed: bool = False) -> SparseMatrix:
    """``Delta^{(m)}(g)`` (or the reversed coproduct) on ``V^{(x)m}``."""
    return TensorPower(N, m, reversed).generator(sym)


class TensorProduct(Representation):
    """``A (x) B`` through ``Delta`` or the reversed ``bar Delta``."""

    def __init__(self, A: Representation, B: Representation, reversed: bool = False):
        super().__init__()
        if A.N != B.N:
            raise ValueError("factors must share N")
        self.A, self.B, self.reversed = A, B, reversed
        self.N = A.N
        self.dim = A.dim * B.dim
        self.space = RepSpace("product", self.N, 2, self.dim)

    def _eps(self, i: int, half: int) -> SparseMatrix:
        return self.A._eps(i, half).kron(self.B._eps(i, half))

    def _e(self, sign: int, i: int) -> SparseMatrix:
        eA, eB = self.A._e(sign, i), self.B._e(sign, i)
        if self.reversed:
            return eA.kron(self.B.K(i, 1)) + self.A.K(i, -1).kron(eB)
        return eA.kron(self.B.K(i, -1)) + self.A.K(i, 1).kron(eB)


# ------------------------------------------------------------ symmetric basis


@dataclass
class SymBasis:
    """The vectors ``M(mu) = sum_{sigma in D^mu} q^{-inv sigma} sigma(v(mu))``."""

    N: int
    m: int
    compositions: List[Composition]
    vectors: List[Vector]
    anchors: List[int]  # tensor index of v(mu), where M(mu) has coefficient 1

    @cached_property
    def position(self) -> Dict[Composition, int]:
        return {mu: n for n, mu in enumerate(self.compositions)}

    @property
    def dim(self) -> int:
        return len(self.compositions)

    def vector(self, mu: Sequence[int]) -> Vector:
        return self.vectors[self.position[tuple(mu)]]


def M_vector(mu: Sequence[int], N: int) -> Vector:
    v = multi_index_of(mu)
    out: Vector = {}
    for sigma in coset_reps(v).reps:
        out[word_index(act(sigma, v), N)] = q_pow(-inversions(sigma))
    return out


def sym_basis(m: int, N: int) -> SymBasis:
    comps = enumerate_B(m, N)
    vectors = [M_vector(mu, N) for mu in comps]
    anchors = [word_index(multi_index_of(mu), N) for mu in comps]
    # supports are disjoint and each vector is 1 at its anchor: independent
    seen = set()
    for vec, a in zip(vectors, anchors):
        assert vec[a] == ONE and not (seen & vec.keys())
        seen |= vec.keys()
    return SymBasis(N, m, comps, vectors, anchors)


def restrict_to_sym(A: SparseMatrix, basis: SymBasis, left_dim: int = 1) -> SparseMatrix:
    """Matrix of ``A`` on ``L (x) span{M(mu)}`` in the basis ``l (x) M(mu)``.

    ``A`` acts on ``L (x) V^{(x)m}`` with ``dim L = left_dim``.  Raises
    :class:`NotInvariant` if some image leaves the span.
    """
    D = (basis.N + 1) ** basis.m
    if A.shape != (left_dim * D, left_dim * D):
        raise ValueError(f"operator shape {A.shape} does not match {left_dim} x {D}")
    d = basis.dim
    rows: Dict[int, Dict[int, QScalar]] = {}
    for a in range(left_dim):
        for n, vec in enumerate(basis.vectors):
            image = A.apply({a * D + t: c for t, c in vec.items()})
            col = a * d + n
            residual = dict(image)
            for b in range(left_dim):
                for nu, (anchor, mvec) in enumerate(zip(basis.anchors, basis.vectors)):
                    x = image.get(b * D + anchor)
                    if not x:
                        continue
                    rows.setdefault(b * d + nu, {})[col] = x
                    for t, c in mvec.items():
                        key = b * D + t
                        r = residual.get(key, ZERO) - x * c
                        if r:
                            residual[key] = r
                        else:
                            residual.pop(key, None)
            if residual:
                key = min(residual)
                raise NotInvariant(f"column {col}: residual entry {key} = {residual[key]}")
    return SparseMatrix((left_dim * d, left_dim * d), rows)


def embed_sym(basis: SymBasis) -> SparseMatrix:
    """``(N+1)^m x dim`` matrix whose columns are the ``M(mu)``."""
    D = (basis.N + 1) ** basis.m
    return SparseMatrix.from_entries((D, basis.dim), ((t, n, c) for n, vec in enumerate(basis.vectors) for t, c in vec.items()))


def sym_projector(basis: SymBasis) -> SparseMatrix:
    """Idempotent onto ``span{M(mu)}``: ``x -> sum_mu x[v(mu)] M(mu)``."""
    D = (basis.N + 1) ** basis.m
    return SparseMatrix.from_entries(
        (D, D), ((t, anchor, c) for anchor, vec in zip(basis.anchors, basis.vectors) for t, c in vec.items())
    )


class SymPower(Representation):
    """``P_m V^{(x)m}`` in the ``M(mu)`` basis, restricted from ``V^{(x)m}``."""

    def __init__(self, N: int, m: int):
        super().__init__()
        self.N, self.m = N, m
        self.basis = sym_basis(m, N)
        self.dim = self.basis.dim
        self.space = RepSpace("sym", N, m, self.dim, tuple(self.basis.compositions))
        self._ambient = TensorPower(N, m)

    def _eps(self, i: int, half: int) -> SparseMatrix:
        return SparseMatrix.diagonal([s_pow(half * mu[i]) for mu in self.basis.compositions], self.space)

    def _e(self, sign: int, i: int) -> SparseMatrix:
        mat = restrict_to_sym(self._ambient.generator(EGen(sign, i)), self.basis)
        mat.space = self.space
        return mat


def lowering_coefficient(mu: Sequence[int], i: int) -> QScalar:
    """``q^{(mu_{i-1} + mu_i - 1)/2} (1 + q^{-2} + ... + q^{-2 mu_i})``."""
    geometric = sum((q_pow(-2 * t) for t in range(mu[i] + 1)), ZERO)
    return s_pow(mu[i - 1] + mu[i] - 1) * geometric


def lower(mu: Sequence[int], i: int) -> Optional[Composition]:
    """``mu - hat i``: move one unit from level ``i-1`` to level ``i``."""
    if mu[i - 1] == 0:
        return None
    out = list(mu)
    out[i - 1] -= 1
    out[i] += 1
    return tuple(out)


def raise_(mu: Sequence[int], i: int) -> Optional[Composition]:
    """``mu + hat i``: move one unit from level ``i`` to level ``i-1``."""
    if mu[i] == 0:
        return None
    out = list(mu)
    out[i - 1] += 1
    out[i] -= 1
    return tuple(out)


def tilde_basis_scalars(m: int, N: int) -> Dict[Composition, QScalar]:
    """Normalizations ``c(mu)`` with ``c(m, 0, ..., 0) = 1``.

    Each lowering step uses ``c(mu - i) = c(mu) * a(mu, i) / [mu_i + 1]``
    where ``a`` is the lowering coefficient in the ``M`` basis; every
    composition reachable along two paths is cross-checked.
    """
    top = (m,) + (0,) * N
    c: Dict[Composition, QScalar] = {top: ONE}
    frontier = [top]
    while frontier:
        nxt = []
        for mu in frontier:
            for i in range(1, N + 1):
                nu = lower(mu, i)
                if nu is None:
                    continue
                val = scalar_div_exact(c[mu] * lowering_coefficient(mu, i), q_integer(mu[i] + 1))
                if nu in c:
                    if c[nu] != val:
                        raise PathDependent(f"c{nu}: {c[nu]} vs {val}")
                else:
                    c[nu] = val
                    nxt.append(nu)
        frontier = nxt
    return c


class ExRep(Representation):
    """Closed-form action on the normalized vectors ``tilde M(mu)``."""

    def __init__(self, N: int, m: int):
        super().__init__()
        self.N, self.m = N, m
        self.compositions = enumerate_B(m, N)
        self.position = {mu: n for n, mu in enumerate(self.compositions)}
        self.dim = len(self.compositions)
        self.space = RepSpace("exrep", N, m, self.dim, tuple(self.compositions))

    def _eps(self, i: int, half: int) -> SparseMatrix:
        return SparseMatrix.diagonal([s_pow(half * mu[i]) for mu in self.compositions], self.space)

    def _e(self, sign: int, i: int) -> SparseMatrix:
        entries = []
        for col, mu in enumerate(self.compositions):
            if sign > 0:
                nu, coeff = raise_(mu, i), q_integer(mu[i - 1] + 1)
            else:
                nu, coeff = lower(mu, i), q_integer(mu[i] + 1)
            if nu is not None:
                entries.append((self.position[nu], col, coeff))
        return SparseMatrix.from_entries((self.dim, self.dim), entries, self.space)


def ex_rep_generator(sym: Symbol, m: int, N: int) -> SparseMatrix:
    return ExRep(N, m).generator(sym)


def conjugate_by_scalars(mat: SparseMatrix, basis_order: Sequence[Composition], c: Mapping[Composition, QScalar]) -> SparseMatrix:
    """Change of basis ``M -> c M``: entry ``(nu, mu)`` scales by ``c(mu)/c(nu)``."""
    return SparseMatrix.from_entries(
        mat.shape,
        ((r, col, scalar_div_exact(v * c[basis_order[col]], c[basis_order[r]])) for r, col, v in mat.entries()),
    )


def make_rep(spec: str, N: int, m: Optional[int] = None) -> Representation:
    """Parse ``tensor:k``, ``sym[:k]`` or ``exrep[:k]`` (``k`` defaults to ``m``)."""
    kind, _, arg = spec.partition(":")
    k = int(arg) if arg else m
    if k is None or k < 1:
        raise ValueError(f"representation {spec!r} needs a positive degree")
    if kind == "tensor":
        return TensorPower(N, k)
    if kind == "sym":
        return SymPower(N, k)
    if kind == "exrep":
        return ExRep(N, k)
    raise ValueError(f"unknown representation {spec!r}")
