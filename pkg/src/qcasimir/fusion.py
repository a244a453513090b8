"""R-matrices, fusion onto the symmetric power and the Drinfeld construction.

Storage convention: the auxiliary slot ``0`` carrying the representation
``W`` is the first tensor factor, the quantum slots ``1..m`` (copies of the
defining representation ``V``) follow.  Fused operators are built on
``W (x) V^{(x)m}`` and then restricted to ``W (x) span{M(mu)}``; the
invariance of that subspace is checked, never assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence

from .combinatorics import enumerate_W, mu_of, rho_pairing
from .expressions import hat, tilde_E
from .matrices import SparseMatrix, kron_all, matrix_unit
from .representations import (
    Representation,
    RepSpace,
    SymBasis,
    TensorPower,
    TensorProduct,
    restrict_to_sym,
    sym_basis,
    sym_projector,
    tensor_words,
)
from .scalars import ZERO, QScalar, q_pow


@dataclass
class BipartiteOperator:
    """An operator on ``W (x) Q`` with ``Q`` a tensor or symmetric power of ``V``.

    ``quantum`` is ``"tensor"`` (basis: words ``(j_1, ..., j_m)`` in
    row-major order) or ``"sym"`` (basis: the ``M(mu)``).
    """

    W: RepSpace
    N: int
    m: int
    quantum: str
    matrix: SparseMatrix

    def __post_init__(self):
        if self.quantum not in ("tensor", "sym"):
            raise ValueError(f"unknown quantum space {self.quantum!r}")
        n = self.W.dim * self.quantum_dim
        if self.matrix.shape != (n, n):
            raise ValueError(f"matrix shape {self.matrix.shape} does not match {self.W.dim} x {self.quantum_dim}")

    @property
    def quantum_dim(self) -> int:
        if self.quantum == "tensor":
            return (self.N + 1) ** self.m
        return len(enumerate_W(self.m, self.N))

    def weights(self) -> "QTraceWeights":
        return qtrace_weights(self.N, self.m, self.quantum)

    def __matmul__(self, other: "BipartiteOperator") -> "BipartiteOperator":
        if (self.W, self.N, self.m, self.quantum) != (other.W, other.N, other.m, other.quantum):
            raise ValueError("operators live on different spaces")
        return BipartiteOperator(self.W, self.N, self.m, self.quantum, self.matrix @ other.matrix)


@dataclass(frozen=True)
class QTraceWeights:
    """Exponents of ``q`` in ``q^{-2 h_rho}`` on each basis label of the quantum leg."""

    labels: tuple
    exponents: tuple

    def scalars(self) -> List[QScalar]:
        return [q_pow(e) for e in self.exponents]


def qtrace_weights(N: int, m: int, quantum: str = "sym") -> QTraceWeights:
    if quantum == "tensor":
        labels = tuple(tensor_words(N, m))
        return QTraceWeights(labels, tuple(sum(2 * j - N for j in w) for w in labels))
    labels = tuple(sym_basis(m, N).compositions)
    return QTraceWeights(labels, tuple(rho_pairing(mu, N) for mu in labels))


# ------------------------------------------------------------------ R-matrices


def _leg(W: Representation, m: int, k: int, transposed: bool) -> SparseMatrix:
    """``R_{0k}`` (or ``R^T_{0k}``) on ``W (x) V^{(x)m}``."""
    n = W.N + 1
    ident = SparseMatrix.identity(n)
    acc = SparseMatrix.zeros(W.dim * n**m)
    for i in range(n):
        for j in range(i + 1):
            a, b = (j, i) if transposed else (i, j)
            # hat E_{ab} on W, e_{ba} on slot k
            mats = [W.symbol(hat(a, b))] + [ident] * (k - 1) + [matrix_unit(n, b, a)] + [ident] * (m - k)
            acc = acc + kron_all(mats)
    return acc


def r_matrix(W: Representation, transposed: bool = False) -> BipartiteOperator:
    """``R = sum_{i >= j} hat E_{ij} (x) e_{ji}`` or ``R^T = sum_{i >= j} hat E_{ji} (x) e_{ij}``."""
    return BipartiteOperator(W.space, W.N, 1, "tensor", _leg(W, 1, 1, transposed))


def fused_tensor(W: Representation, m: int, transposed: bool = False) -> BipartiteOperator:
    """The unrestricted fused product on ``W (x) V^{(x)m}``.

    ``R_{0m} ... R_{01}`` for ``R``; for ``R^T`` the transpose of that
    product, ``R^T_{01} ... R^T_{0m}``.
    """
    if m < 1:
        raise ValueError("fusion needs m >= 1")
    order = range(m, 0, -1) if transposed else range(1, m + 1)
    acc = SparseMatrix.identity(W.dim * (W.N + 1) ** m)
    for k in order:
        acc = _leg(W, m, k, transposed) @ acc
    return BipartiteOperator(W.space, W.N, m, "tensor", acc)


def restrict(op: BipartiteOperator, basis: Optional[SymBasis] = None) -> BipartiteOperator:
    """Restrict a tensor-leg operator to ``W (x) span{M(mu)}``; raises ``NotInvariant``."""
    if op.quantum != "tensor":
        raise ValueError("operator is already restricted")
    basis = basis or sym_basis(op.m, op.N)
    return BipartiteOperator(op.W, op.N, op.m, "sym", restrict_to_sym(op.matrix, basis, op.W.dim))


def fused_r(W: Representation, m: int, transposed: bool = False) -> BipartiteOperator:
    """The fused R-matrix on ``W (x) P_m V^{(x)m}`` in the ``M(mu)`` basis."""
    return restrict(fused_tensor(W, m, transposed))


def factored_form(W: Representation, m: int, transposed: bool = False) -> BipartiteOperator:
    """``sum_{i,j} tilde E^+_{ij} (x) e_{ji}`` (resp. ``sum tilde E^-_{ji} (x) e_{ij}``).

    ``e_{ji}`` sends ``M(i)`` to ``M(j)``.
    """
    N = W.N
    basis = sym_basis(m, N)
    pos = basis.position
    d = basis.dim
    acc = SparseMatrix.zeros(W.dim * d)
    for i in enumerate_W(m, N):
        for j in enumerate_W(m, N):
            expr = tilde_E(j, i, -1) if transposed else tilde_E(i, j, +1)
            if expr.is_zero():
                continue
            src, dst = (pos[mu_of(j, N)], pos[mu_of(i, N)]) if transposed else (pos[mu_of(i, N)], pos[mu_of(j, N)])
            acc = acc + W.evaluate(expr).kron(matrix_unit(d, dst, src))
    return BipartiteOperator(W.space, N, m, "sym", acc)


def gamma(W: Representation, m: int) -> BipartiteOperator:
    """``Gamma_m = R^T R`` on ``W (x) P_m V^{(x)m}``."""
    return fused_r(W, m, True) @ fused_r(W, m, False)


def q_trace_partial(A: BipartiteOperator) -> SparseMatrix:
    """``(id (x) tr_q)(A)``: the trace over the quantum leg weighted by ``q^{-2 h_rho}``."""
    d = A.quantum_dim
    weights = A.weights().scalars()
    rows = {}
    for r, row in A.matrix.rows.items():
        a, n = divmod(r, d)
        for c, v in row.items():
            b, n2 = divmod(c, d)
            if n2 == n:
                target = rows.setdefault(a, {})
                target[b] = target.get(b, ZERO) + weights[n] * v
    return SparseMatrix((A.W.dim, A.W.dim), rows, A.W)


def drinfeld_central(W: Representation, m: int) -> SparseMatrix:
    """``C_m`` on ``W`` from ``id (x) tr_q`` of ``Gamma_m``."""
    return q_trace_partial(gamma(W, m))


def drinfeld_central_tensor(W: Representation, m: int) -> SparseMatrix:
    """The same element computed with the tensor-basis trace.

    ``Gamma_m`` is formed on ``W (x) V^{(x)m}`` and sandwiched between the
    projector onto the symmetric subspace.
    """
    P = SparseMatrix.identity(W.dim).kron(sym_projector(sym_basis(m, W.N)))
    G = fused_tensor(W, m, True).matrix @ fused_tensor(W, m, False).matrix
    return q_trace_partial(BipartiteOperator(W.space, W.N, m, "tensor", P @ G @ P))


# ----------------------------------------------------------- coproduct actions


def coproduct_actions(W: Representation, m: int, quantum: str = "tensor"):
    """``(Delta, bar Delta)`` on ``W (x) Q``.

    ``bar Delta`` is the opposite coproduct: ``W`` is placed last in the
    coproduct order while keeping storage order.
    """
    from .representations import SymPower

    Q = TensorPower(W.N, m) if quantum == "tensor" else SymPower(W.N, m)
    return TensorProduct(W, Q), TensorProduct(W, Q, reversed=True)


def intertwining_defects(op: BipartiteOperator, W: Representation, transposed: bool = False) -> List[tuple]:
    """Generators ``u`` for which ``R Delta(u) != bar Delta(u) R``
    (``R^T bar Delta(u) != Delta(u) R^T`` when ``transposed``)."""
    delta, bar = coproduct_actions(W, op.m, op.quantum)
    bad = []
    for sym, g in delta.generators():
        gbar = bar.generator(sym)
        if transposed:
            lhs, rhs = op.matrix @ gbar, g @ op.matrix
        else:
            lhs, rhs = op.matrix @ g, gbar @ op.matrix
        diff = lhs.first_difference(rhs)
        if diff is not None:
            bad.append((sym, diff))
    return bad


def commutation_defects(op: BipartiteOperator, W: Representation) -> List[tuple]:
    """Generators whose ``Delta``-action fails to commute with ``op``."""
    delta, _ = coproduct_actions(W, op.m, op.quantum)
    bad = []
    for sym, g in delta.generators():
        diff = (op.matrix @ g).first_difference(g @ op.matrix)
        if diff is not None:
            bad.append((sym, diff))
    return bad


def leg_products(W: Representation, m: int, order: Sequence[int], transposed: bool) -> BipartiteOperator:
    """Product of legs with ``order[0]`` applied first; for exploring fusion orders."""
    acc = SparseMatrix.identity(W.dim * (W.N + 1) ** m)
    for k in order:
        acc = _leg(W, m, k, transposed) @ acc
    return BipartiteOperator(W.space, W.N, m, "tensor", acc)
