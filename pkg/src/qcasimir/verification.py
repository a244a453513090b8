"""Checks that turn the algebraic claims into exact matrix identities.

Every check returns :class:`VerificationReport` objects.  A failing report
carries the first witness (a matrix entry or an index pattern); reports are
deterministic for fixed inputs and serialize to one JSON object per line.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .combinatorics import (
    Permutation,
    act,
    all_permutations,
    coset_reps,
    decompose,
    enumerate_B,
    enumerate_W,
    inversions,
    mu_of,
    multi_index_of,
    rho_pairing,
    transposition_path,
    validate_path,
)
from .expressions import AlgebraExpr, EGen, Eps, Root, central_element, hat, hat_word, tilde_E
from .matrices import SparseMatrix, Vector, kron_all, matrix_unit
from .representations import (
    ExRep,
    Representation,
    TensorPower,
    conjugate_by_scalars,
    lowering_coefficient,
    lower,
    restrict_to_sym,
    sym_basis,
    tensor_words,
    tilde_basis_scalars,
    word_index,
)
from .scalars import INV_QDIFF, ONE, QDIFF, ZERO, QScalar, format_scalar, q_pow, s_pow

Witness = Optional[Dict[str, Any]]


@dataclass
class VerificationReport:
    check: str
    params: Dict[str, Any]
    passed: bool
    witness: Witness = None
    detail: List[Dict[str, Any]] = field(default_factory=list, repr=False)
    value: Optional[str] = None

    def to_json(self, verbose: bool = False) -> Dict[str, Any]:
        out = {"check": self.check, "params": self.params, "pass": self.passed, "witness": self.witness}
        if self.value is not None:
            out["value"] = self.value
        if verbose and self.detail:
            out["detail"] = self.detail
        return out

    def json_line(self, verbose: bool = False) -> str:
        return json.dumps(self.to_json(verbose), ensure_ascii=False)

    def sort_key(self) -> Tuple[str, str]:
        return self.check, json.dumps(self.params, sort_keys=True)


def sorted_reports(reports: Iterable[VerificationReport]) -> List[VerificationReport]:
    return sorted(reports, key=VerificationReport.sort_key)


def all_passed(reports: Iterable[VerificationReport]) -> bool:
    return all(r.passed for r in reports)


def _entry_witness(lhs: SparseMatrix, rhs: SparseMatrix, **extra) -> Witness:
    diff = lhs.first_difference(rhs)
    if diff is None:
        return None
    r, c, a, b = diff
    return {"row": r, "col": c, "lhs": format_scalar(a), "rhs": format_scalar(b), **extra}


def _symbol_name(sym) -> str:
    if isinstance(sym, EGen):
        return f"e_{'+' if sym.sign > 0 else '-'}{sym.i}"
    if isinstance(sym, Eps):
        return f"q^(eps_{sym.i}*{sym.half}/2)"
    return repr(sym)


def _matrix_check(check: str, params: Dict[str, Any], pairs: Iterable[Tuple[Any, SparseMatrix, SparseMatrix]]) -> VerificationReport:
    """Pass iff every ``(label, lhs, rhs)`` has ``lhs == rhs``; witness is the first failure."""
    detail = []
    for label, lhs, rhs in pairs:
        w = _entry_witness(lhs, rhs, case=label)
        if w is not None:
            detail.append(w)
    return VerificationReport(check, params, not detail, detail[0] if detail else None, detail)


# ----------------------------------------------------------------- centrality


def check_centrality(C: SparseMatrix, rep: Representation, m: Optional[int] = None, N: Optional[int] = None) -> VerificationReport:
    """``[C, g] = 0`` for every generator matrix ``g`` of ``rep``."""
    params = {"m": m, "N": rep.N if N is None else N, "rep": _rep_label(rep)}
    pairs = ((_symbol_name(sym), C @ g, g @ C) for sym, g in rep.generators())
    return _matrix_check("centrality", params, pairs)


def _rep_label(rep: Representation) -> str:
    space = rep.space
    return {"tensor": "tensor", "sym": "sym", "exrep": "exrep"}.get(space.kind, space.kind) + f":{space.degree}"


@dataclass
class NotScalar:
    witness: Dict[str, Any]

    def __bool__(self) -> bool:
        return False


def check_scalar(C: SparseMatrix) -> Union[QScalar, NotScalar]:
    """The scalar ``c`` when ``C = c * Id`` exactly, else :class:`NotScalar`."""
    c = C.scalar_value()
    if c is not None:
        return c
    n = C.shape[0]
    ref = C[0, 0]
    for r in range(n):
        for col, v in sorted(C.rows.get(r, {}).items()):
            if col != r:
                return NotScalar({"row": r, "col": col, "value": format_scalar(v), "expected": "0"})
        if C[r, r] != ref:
            return NotScalar({"row": r, "col": r, "value": format_scalar(C[r, r]), "expected": format_scalar(ref)})
    return NotScalar({"shape": list(C.shape)})


def scalar_report(C: SparseMatrix, params: Dict[str, Any]) -> VerificationReport:
    c = check_scalar(C)
    if isinstance(c, NotScalar):
        return VerificationReport("scalar", params, False, c.witness)
    return VerificationReport("scalar", params, True, None, [{"json": c.to_json()}], format_scalar(c))


# ---------------------------------------------------------------- eigenvalues


@dataclass(frozen=True)
class WeightVector:
    """A gl(N+1) weight in the ``eps`` basis with ``(eps_i, eps_j) = delta_ij``."""

    coeffs: Tuple[int, ...]

    def __post_init__(self):
        if not all(isinstance(x, int) for x in self.coeffs):
            raise ValueError(f"weight entries must be integers, got {self.coeffs}")

    @classmethod
    def of(cls, values: Sequence[int]) -> "WeightVector":
        return cls(tuple(int(v) for v in values))

    @property
    def N(self) -> int:
        return len(self.coeffs) - 1

    def pair(self, other: Sequence[int]) -> int:
        if len(other) != len(self.coeffs):
            raise ValueError("weights of different rank")
        return sum(a * b for a, b in zip(self.coeffs, other))

    def longest_weyl(self) -> "WeightVector":
        """Image under the longest Weyl element: reverse the entries."""
        return WeightVector(self.coeffs[::-1])


WEIGHT_CONVENTIONS = ("highest", "lowest")


def weyl_vector(N: int) -> WeightVector:
    """``rho = (N, N-1, ..., 0)``, the gl(N+1) Weyl vector for positive roots ``eps_{i-1} - eps_i``."""
    return WeightVector(tuple(range(N, -1, -1)))


def _lowest(N: int, Lam: Union[WeightVector, Sequence[int]], convention: str) -> WeightVector:
    Lam = Lam if isinstance(Lam, WeightVector) else WeightVector.of(Lam)
    if Lam.N != N:
        raise ValueError(f"weight {Lam.coeffs} has length {len(Lam.coeffs)}, expected {N + 1}")
    if convention not in WEIGHT_CONVENTIONS:
        raise ValueError(f"weight convention must be one of {WEIGHT_CONVENTIONS}")
    return Lam.longest_weyl() if convention == "highest" else Lam


def eigenvalue_formula(m: int, N: int, Lam: Union[WeightVector, Sequence[int]], convention: str = "highest") -> QScalar:
    """``(q-q^{-1})^{-2m} q^{-Nm} sum_{i in W_m} q^{2|i|} q^{(2 mu(i), Lambda)}``.

    The sum comes from acting on a lowest weight vector, so ``Lambda`` in it
    is a lowest weight.  With ``convention="highest"`` the caller passes the
    highest weight and it is reflected by the longest Weyl element first;
    ``"lowest"`` uses the argument as is.
    """
    low = _lowest(N, Lam, convention)
    acc = ZERO
    for i in enumerate_W(m, N):
        acc = acc + q_pow(2 * sum(i) + 2 * low.pair(mu_of(i, N)))
    return acc * q_pow(-N * m) * INV_QDIFF ** (2 * m)


def c_lambda0_eigenvalue(m: int, N: int, Lam: Union[WeightVector, Sequence[int]], rho: Optional[WeightVector] = None) -> QScalar:
    """``sum_{mu in B_m} q^{(2 rho, mu)} q^{2 (Lambda, mu)}`` for highest weight ``Lambda``."""
    Lam = Lam if isinstance(Lam, WeightVector) else WeightVector.of(Lam)
    rho = rho or weyl_vector(N)
    acc = ZERO
    for mu in enumerate_B(m, N):
        acc = acc + q_pow(2 * rho.pair(mu) + 2 * Lam.pair(mu))
    return acc


def eigenvalue_bridge(m: int, N: int, Lam: Sequence[int]) -> VerificationReport:
    """``eigenvalue_formula = (q-q^{-1})^{-2m} q^{-Nm} * c_lambda0_eigenvalue`` exactly."""
    lhs = eigenvalue_formula(m, N, Lam, "highest")
    rhs = c_lambda0_eigenvalue(m, N, Lam) * q_pow(-N * m) * INV_QDIFF ** (2 * m)
    params = {"m": m, "N": N, "Lambda": list(Lam)}
    if lhs == rhs:
        return VerificationReport("eigenvalue-bridge", params, True)
    return VerificationReport("eigenvalue-bridge", params, False, {"lhs": format_scalar(lhs), "rhs": format_scalar(rhs)})


def eigenvalue_agreement(m: int, N: int, k: int, convention: str = "highest") -> VerificationReport:
    """``eigenvalue_formula`` against the computed scalar of ``C_m`` on ``P_k V^{(x)k}``.

    The formula is always fed the highest weight ``(k, 0, ..., 0)``; only the
    matching reading of it reproduces the scalar, which is how the
    convention is fixed.
    """
    from .representations import SymPower

    rep = SymPower(N, k)
    Lam = (k,) + (0,) * N
    params = {"m": m, "N": N, "k": k, "convention": convention}
    c = check_scalar(rep.evaluate(central_element(m, N)))
    if isinstance(c, NotScalar):
        return VerificationReport("eigenvalue", params, False, c.witness)
    f = eigenvalue_formula(m, N, Lam, convention)
    if c == f:
        return VerificationReport("eigenvalue", params, True)
    return VerificationReport("eigenvalue", params, False, {"scalar": format_scalar(c), "formula": format_scalar(f)})


# ------------------------------------------------------------- relation suite


def _relation_cases(N: int) -> Iterable[Tuple[str, Tuple[int, ...], Callable]]:
    """``(family, indices, builder)`` where ``builder(E, H)`` returns ``(lhs, rhs)``.

    ``E(a, b)`` evaluates the root vector ``E_ab`` and ``H(a, b)`` its hatted
    version.
    """
    qd = QDIFF
    for i, j, k, l in itertools.product(range(N + 1), repeat=4):
        if i < l and j < k:
            if i < j < k < l or i < l < j < k:
                yield "comm", (i, j, k, l), lambda E, H, i=i, j=j, k=k, l=l: (E(i, l) @ E(j, k), E(j, k) @ E(i, l))
                yield "comm1", (i, j, k, l), lambda E, H, i=i, j=j, k=k, l=l: (E(l, i) @ E(k, j), E(k, j) @ E(l, i))
            elif i == j < k < l:
                yield "comm", (i, j, k, l), lambda E, H, i=i, j=j, k=k, l=l: (E(i, l) @ E(j, k), (E(j, k) @ E(i, l)).scale(q_pow(-1)))
                yield "comm1", (i, j, k, l), lambda E, H, i=i, j=j, k=k, l=l: (E(l, i) @ E(k, j), (E(k, j) @ E(l, i)).scale(q_pow(1)))
            elif i < j < k == l:
                yield "comm", (i, j, k, l), lambda E, H, i=i, j=j, k=k, l=l: (E(i, l) @ E(j, k), (E(j, k) @ E(i, l)).scale(q_pow(1)))
                yield "comm1", (i, j, k, l), lambda E, H, i=i, j=j, k=k, l=l: (E(l, i) @ E(k, j), (E(k, j) @ E(l, i)).scale(q_pow(-1)))
            elif i < j < l < k:
                yield "comm", (i, j, k, l), lambda E, H, i=i, j=j, k=k, l=l: (
                    E(i, l) @ E(j, k),
                    E(j, k) @ E(i, l) + (E(j, l) @ E(i, k)).scale(qd),
                )
                yield "comm1", (i, j, k, l), lambda E, H, i=i, j=j, k=k, l=l: (
                    E(l, i) @ E(k, j),
                    E(k, j) @ E(l, i) - (E(l, j) @ E(k, i)).scale(qd),
                )
        if i < j <= l <= k:
            yield "comm2", (i, j, k, l), lambda E, H, i=i, j=j, k=k, l=l: (
                H(i, l) @ H(j, k) + (H(i, k) @ H(j, l)).scale(q_pow(-1)),
                H(j, k) @ H(i, l) + (H(j, l) @ H(i, k)).scale(q_pow(1)),
            )
            yield "comm3", (i, j, k, l), lambda E, H, i=i, j=j, k=k, l=l: (
                H(l, i) @ H(k, j) + (H(k, i) @ H(l, j)).scale(q_pow(1)),
                H(k, j) @ H(l, i) + (H(l, j) @ H(k, i)).scale(q_pow(-1)),
            )


def uqgl_relations(rep: Representation) -> Iterable[Tuple[str, Tuple[int, ...], SparseMatrix, SparseMatrix]]:
    """All defining relations of U_q(gl(N+1)) as ``(name, indices, lhs, rhs)``."""
    N = rep.N
    ident = SparseMatrix.identity(rep.dim)
    e = {(s, i): rep.generator(EGen(s, i)) for s in (1, -1) for i in range(1, N + 1)}
    for a in range(N + 1):
        yield "eps-inverse", (a,), rep.generator(Eps(a, 1)) @ rep.generator(Eps(a, -1)), ident
        for b in range(N + 1):
            x, y = rep.generator(Eps(a, 1)), rep.generator(Eps(b, 1))
            yield "eps-commute", (a, b), x @ y, y @ x
    for i in range(1, N + 1):
        K, Kinv = rep.K(i, 1), rep.K(i, -1)
        yield "K-inverse", (i,), K @ Kinv, ident
        for i2 in range(1, N + 1):
            a = 2 if i == i2 else -1 if abs(i - i2) == 1 else 0
            for s in (1, -1):
                yield "K-conjugation", (i, i2, s), K @ e[s, i2] @ Kinv, e[s, i2].scale(s_pow(s * a))
            bracket = e[1, i] @ e[-1, i2] - e[-1, i2] @ e[1, i]
            if i == i2:
                rhs = (rep.K(i, 2) - rep.K(i, -2)).scale(INV_QDIFF)
            else:
                rhs = SparseMatrix.zeros(rep.dim)
            yield "bracket", (i, i2), bracket, rhs
            if abs(i - i2) >= 2:
                for s in (1, -1):
                    yield "far-commute", (i, i2, s), e[s, i] @ e[s, i2], e[s, i2] @ e[s, i]
            if abs(i - i2) == 1:
                for s in (1, -1):
                    x, y = e[s, i], e[s, i2]
                    serre = x @ x @ y - (x @ y @ x).scale(q_pow(1) + q_pow(-1)) + y @ x @ x
                    yield "serre", (i, i2, s), serre, SparseMatrix.zeros(rep.dim)
    total = ident
    for a in range(N + 1):
        total = total @ rep.generator(Eps(a, 2))
    for sym, g in rep.generators():
        yield "total-eps-central", (0,), total @ g, g @ total


def relation_suite(N: int, k: int, families: Optional[Sequence[str]] = None) -> List[VerificationReport]:
    """One report per relation family and index pattern, evaluated on ``V^{(x)k}``."""
    rep = TensorPower(N, k)
    E = lambda a, b: rep.symbol(Root(a, b, "modified"))
    H = lambda a, b: rep.symbol(hat(a, b))
    reports = []
    for fam, idx, build in _relation_cases(N):
        if families and fam not in families:
            continue
        lhs, rhs = build(E, H)
        reports.append(_matrix_check(fam, {"N": N, "k": k, "indices": list(idx)}, [(fam, lhs, rhs)]))
    if not families or "uqgl" in families:
        reports.extend(uqgl_suite(rep))
    return sorted_reports(reports)


def uqgl_suite(rep: Representation) -> List[VerificationReport]:
    reports = []
    for name, idx, lhs, rhs in uqgl_relations(rep):
        reports.append(_matrix_check(f"uqgl:{name}", {"N": rep.N, "rep": _rep_label(rep), "indices": list(idx)}, [(name, lhs, rhs)]))
    return reports


# ------------------------------------------------------ representative choice


def representative_sum(A, B, fixed: Permutation, part: int, sign: int, exponent: int) -> AlgebraExpr:
    """The sums compared by the representative-independence check.

    ``part = 1`` sums over ``sigma in D_B`` with ``fixed in D_A``;
    ``part = 2`` sums over ``tau in D_A`` with ``fixed in D_B``.  The
    coefficient is ``q^{exponent * (inv(summed) - inv(fixed))}``.
    """
    from .expressions import AlgebraExpr

    out = AlgebraExpr()
    summed = coset_reps(tuple(B) if part == 1 else tuple(A)).reps
    for p in summed:
        tA, sB = (fixed, p) if part == 1 else (p, fixed)
        w = hat_word(act(tA, A), act(sB, B), sign)
        if w is not None:
            out._accumulate(w, q_pow(exponent * (inversions(p) - inversions(fixed))))
    return out


def well_definedness_suite(m: int, N: int, k: int = 2, exponent: str = "printed", alphabet: Optional[int] = None) -> List[VerificationReport]:
    """Representative independence, evaluated on ``V^{(x)k}``.

    ``exponent="printed"`` uses ``q^{-+(inv summed - inv fixed)}`` with
    ``hat E^{+-}``; ``"corrected"`` flips it to ``q^{+-(...)}``.
    """
    if exponent not in ("printed", "corrected"):
        raise ValueError("exponent must be 'printed' or 'corrected'")
    top = N if alphabet is None else alphabet
    rep = TensorPower(N, k)
    reports = []
    for A in enumerate_W(m, top):
        for B in enumerate_W(m, top):
            for part in (1, 2):
                reps = coset_reps(A if part == 1 else B).reps
                for sign in (1, -1):
                    e = -sign if exponent == "printed" else sign
                    vals = [(f, rep.evaluate(representative_sum(A, B, f, part, sign, e))) for f in reps]
                    ref_f, ref = vals[0]
                    pairs = [(f"{ref_f.images} vs {f.images}", ref, v) for f, v in vals[1:]]
                    params = {"m": m, "N": N, "k": k, "A": list(A), "B": list(B), "part": part, "sign": sign, "exponent": exponent}
                    reports.append(_matrix_check("representative-independence", params, pairs))
    return reports


def tilde_independence(m: int, N: int, k: int = 2, printed: bool = False) -> List[VerificationReport]:
    """``tilde E^{+-}_{ij}`` does not depend on the free representative ``tau``."""
    rep = TensorPower(N, k)
    reports = []
    for i in enumerate_W(m, N):
        for j in enumerate_W(m, N):
            for sign in (1, -1):
                taus = coset_reps(j).reps
                ref = rep.evaluate(tilde_E(i, j, sign, printed=printed))
                pairs = [(list(t.images), ref, rep.evaluate(tilde_E(i, j, sign, t, printed=printed))) for t in taus[1:]]
                params = {"m": m, "N": N, "i": list(i), "j": list(j), "sign": sign, "printed": printed}
                reports.append(_matrix_check("tilde-independence", params, pairs))
    return reports


# --------------------------------------------------------- symmetric subspace


def _tensor_vector(N: int, word: Sequence[int]) -> Vector:
    return {word_index(word, N): ONE}


def _permute_vector(sigma: Permutation, vec: Vector, N: int, m: int) -> Vector:
    """``sigma`` acting on ``V^{(x)m}`` by permuting tensor positions."""
    words = tensor_words(N, m)
    return {word_index(act(sigma, words[t]), N): c for t, c in vec.items()}


def single_slot(sign: int, i: int, a: int, m: int, N: int) -> SparseMatrix:
    """``e^{(a)}_{+-,i}``: the summand of the coproduct with ``e`` in slot ``a``."""
    V = TensorPower(N, 1)
    K, Kinv = V.K(i, 1), V.K(i, -1)
    return kron_all([K] * (a - 1) + [V.generator(EGen(sign, i))] + [Kinv] * (m - a))


def _left_weight(word: Sequence[int], pos: int, i: int) -> int:
    """Twice the exponent of ``q^{h_i/2}`` summed over factors strictly left of ``pos``."""
    return sum((x == i - 1) - (x == i) for x in word[: pos - 1])


def slot_exchange_suite(m: int, N: int, literal: bool = True) -> List[VerificationReport]:
    """Moving a single-slot generator through a permutation of tensor positions.

    The factor in slot ``a`` of ``v`` sits in slot ``p = sigma^{-1}(a)`` of
    ``sigma(v)``.  Literally the claim is ``e^{(p)}(sigma v) = sigma(e^{(a)} v)``;
    the corrected statement carries the factor ``q^{L' - L}`` where ``L``
    and ``L'`` are the ``h_i`` weights to the left of the moved slot.
    """
    reports = []
    for mu in enumerate_B(m, N):
        v_word = multi_index_of(mu)
        v = _tensor_vector(N, v_word)
        for sigma in all_permutations(m):
            sv_word = act(sigma, v_word)
            sv = _tensor_vector(N, sv_word)
            for a in range(1, m + 1):
                p = sigma.inverse()(a)
                for i in range(1, N + 1):
                    for sign in (1, -1):
                        lhs = single_slot(sign, i, p, m, N).apply(sv)
                        rhs = _permute_vector(sigma, single_slot(sign, i, a, m, N).apply(v), N, m)
                        if not literal:
                            shift = _left_weight(sv_word, p, i) - _left_weight(v_word, a, i)
                            rhs = {t: c * q_pow(shift) for t, c in rhs.items()}
                        if lhs != rhs:
                            params = {"m": m, "N": N, "literal": literal}
                            witness = {
                                "mu": list(mu),
                                "sigma": list(sigma.images),
                                "slot": a,
                                "i": i,
                                "sign": sign,
                                "lhs": {str(t): format_scalar(c) for t, c in sorted(lhs.items())},
                                "rhs": {str(t): format_scalar(c) for t, c in sorted(rhs.items())},
                            }
                            reports.append(VerificationReport("slot-exchange", params, False, witness))
                            return reports
    reports.append(VerificationReport("slot-exchange", {"m": m, "N": N, "literal": literal}, True))
    return reports


def lowering_suite(m: int, N: int) -> VerificationReport:
    """``Delta(e_{-,i}) M(mu) = q^{(mu_{i-1}+mu_i-1)/2}(1 + ... + q^{-2 mu_i}) M(mu - i)``."""
    basis = sym_basis(m, N)
    rep = TensorPower(N, m)
    for i in range(1, N + 1):
        g = rep.generator(EGen(-1, i))
        for mu, vec in zip(basis.compositions, basis.vectors):
            image = g.apply(vec)
            nu = lower(mu, i)
            expected = {} if nu is None else {t: c * lowering_coefficient(mu, i) for t, c in basis.vector(nu).items()}
            if image != expected:
                w = {"mu": list(mu), "i": i}
                return VerificationReport("lowering", {"m": m, "N": N}, False, w)
    return VerificationReport("lowering", {"m": m, "N": N}, True)


def exrep_suite(m: int, N: int) -> List[VerificationReport]:
    """The closed-form normalized action against the restricted coproduct, plus the
    defining relations in the closed form."""
    basis = sym_basis(m, N)
    ambient = TensorPower(N, m)
    ex = ExRep(N, m)
    c = tilde_basis_scalars(m, N)
    pairs = []
    for sym, g in ex.generators():
        restricted = restrict_to_sym(ambient.generator(sym), basis)
        # matrix in the tilde basis: tilde M(mu) = c(mu) M(mu)
        pairs.append((_symbol_name(sym), conjugate_by_scalars(restricted, basis.compositions, c), g))
    for i in range(1, N + 1):
        for s in (1, -1):
            pairs.append((f"K_{i}^{s}", ex.K(i, s), SparseMatrix.diagonal([s_pow(s * (mu[i - 1] - mu[i])) for mu in ex.compositions])))
    reports = [_matrix_check("exrep-displays", {"m": m, "N": N}, pairs)]
    reports.extend(uqgl_suite(ex))
    return reports


def transfer_suite(m: int, N: int) -> List[VerificationReport]:
    """Both transfer identities for the tilde operators, on ``V^{(x)m}``."""
    basis = sym_basis(m, N)
    n = N + 1
    reports = []

    def e_word(dst: Sequence[int], src: Sequence[int]) -> SparseMatrix:
        return kron_all([matrix_unit(n, b, a) for b, a in zip(dst, src)])

    part1_fail = None
    for i in enumerate_W(m, N):
        Di = coset_reps(i).reps
        for j in enumerate_W(m, N):
            for zeta in coset_reps(j).reps:
                for tau, sigma in itertools.combinations(Di, 2):
                    op = e_word(act(zeta, j), act(tau, i)).scale(q_pow(inversions(tau))) - e_word(
                        act(zeta, j), act(sigma, i)
                    ).scale(q_pow(inversions(sigma)))
                    for mu, vec in zip(basis.compositions, basis.vectors):
                        if op.apply(vec):
                            part1_fail = part1_fail or {"i": list(i), "j": list(j), "mu": list(mu)}
    reports.append(VerificationReport("transfer-part1", {"m": m, "N": N}, part1_fail is None, part1_fail))

    part2_fail = None
    for i in enumerate_W(m, N):
        Mi = basis.vector(mu_of(i, N))
        for j in enumerate_W(m, N):
            op = tilde_e(j, i, N)
            if op.apply(Mi) != basis.vector(mu_of(j, N)):
                part2_fail = part2_fail or {"i": list(i), "j": list(j)}
    reports.append(VerificationReport("transfer-part2", {"m": m, "N": N}, part2_fail is None, part2_fail))
    return reports


def tilde_e(j: Sequence[int], i: Sequence[int], N: int) -> SparseMatrix:
    """``sum_{tau in D_j} q^{-d_i(tau)} e_{tau(j) tau(i)}`` on ``V^{(x)m}``."""
    n = N + 1
    acc = SparseMatrix.zeros(n ** len(i))
    for tau in coset_reps(tuple(j)).reps:
        _, _, d = decompose(tau, i)
        op = kron_all([matrix_unit(n, b, a) for b, a in zip(act(tau, j), act(tau, i))])
        acc = acc + op.scale(q_pow(-d))
    return acc


def transfer_examples() -> VerificationReport:
    """The three displayed instances of the transfer identity (``N = 4``, ``m = 2``)."""
    N, n = 4, 5
    basis = sym_basis(2, N)
    M = lambda a, b: basis.vector(mu_of((a, b), N))
    e = lambda b, a: matrix_unit(n, b, a)
    cases = [
        ("(1,1)->(2,3)", e(2, 1).kron(e(3, 1)) + e(3, 1).kron(e(2, 1)).scale(q_pow(-1)), M(1, 1), M(2, 3)),
        ("(1,2)->(3,3)", e(3, 1).kron(e(3, 2)), M(1, 2), M(3, 3)),
        ("(1,2)->(3,4)", e(3, 1).kron(e(4, 2)) + e(4, 2).kron(e(3, 1)), M(1, 2), M(3, 4)),
    ]
    for label, op, src, dst in cases:
        if op.apply(src) != dst:
            return VerificationReport("transfer-examples", {"N": N, "m": 2}, False, {"case": label})
    return VerificationReport("transfer-examples", {"N": N, "m": 2}, True)


def representation_suite(m: int, N: int) -> List[VerificationReport]:
    reports = [lowering_suite(m, N)]
    reports.extend(exrep_suite(m, N))
    reports.extend(slot_exchange_suite(m, N, literal=True))
    reports.extend(slot_exchange_suite(m, N, literal=False))
    reports.extend(transfer_suite(m, N))
    reports.extend(uqgl_suite(TensorPower(N, m)))
    return sorted_reports(reports)


# ----------------------------------------------------------- combinatorics


def path_suite(m_max: int = 5, samples: int = 20, seed: int = 0) -> List[VerificationReport]:
    """Transposition paths between all pairs of representatives for random ``A``."""
    rng = random.Random(seed)
    reports = []
    for _ in range(samples):
        m = rng.randint(1, m_max)
        A = tuple(rng.randint(0, 3) for _ in range(m))
        reps = coset_reps(A).reps
        bad = None
        for tau, tau_p in itertools.product(reps, repeat=2):
            path = transposition_path(tau, tau_p, A)
            if not validate_path(path, tau, tau_p, A):
                bad = {"tau": list(tau.images), "tau_prime": list(tau_p.images)}
                break
        reports.append(VerificationReport("transposition-path", {"A": list(A)}, bad is None, bad))
    return reports


def coset_oracle(A: Sequence[int]) -> List[Permutation]:
    """``D_A`` by scanning ``S_m``: keep the fewest-inversion element of each fibre."""
    best: Dict[Tuple[int, ...], Permutation] = {}
    for sigma in all_permutations(len(A)):
        key = act(sigma, A)
        if key not in best or inversions(sigma) < inversions(best[key]):
            best[key] = sigma
    return sorted(best.values(), key=lambda p: act(p, A))


def rho_pairing_suite(m: int = 3, N_max: int = 4) -> VerificationReport:
    for N in range(1, N_max + 1):
        for i in enumerate_W(m, N):
            if rho_pairing(mu_of(i, N), N) != -N * m + 2 * sum(i):
                return VerificationReport("rho-pairing", {"m": m, "N_max": N_max}, False, {"i": list(i), "N": N})
    return VerificationReport("rho-pairing", {"m": m, "N_max": N_max}, True)
