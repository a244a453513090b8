"""Formal noncommutative expressions in the generators of U_q(gl(N+1)).

Words are tuples of symbols kept in the order they were built; the only
rewriting ever performed is :func:`cartan_to_front`, which uses the exact
commutation of ``q^{eps_a/2}`` with weight vectors.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from .combinatorics import (
    Permutation,
    act,
    coset_reps,
    enumerate_W,
    inversions,
    is_sorted,
)
from .scalars import INV_QDIFF, ONE, QScalar, as_scalar, format_scalar, latex_scalar, q_pow, s_pow


@dataclass(frozen=True)
class EGen:
    """Chevalley generator ``e_{+,i}`` (``sign=+1``) or ``e_{-,i}`` (``sign=-1``)."""

    sign: int
    i: int

    def weight(self, a: int) -> int:
        # e_{+,i} carries weight eps_{i-1} - eps_i
        w = (a == self.i - 1) - (a == self.i)
        return w if self.sign > 0 else -w


@dataclass(frozen=True)
class Eps:
    """``q^{half * eps_i / 2}``."""

    i: int
    half: int

    def weight(self, a: int) -> int:
        return 0


ROOT_VARIANTS = ("primed", "modified", "hatted")


@dataclass(frozen=True)
class Root:
    """Root vector ``E'_{ij}``, ``E_{ij}`` or ``\\hat E_{ij}`` as an opaque letter."""

    i: int
    j: int
    variant: str = "hatted"

    def __post_init__(self):
        if self.variant not in ROOT_VARIANTS:
            raise ValueError(f"unknown root-vector variant {self.variant!r}")
        if self.i == self.j and self.variant != "hatted":
            raise ValueError("diagonal root vectors only exist in the hatted family")

    def weight(self, a: int) -> int:
        return (a == self.i) - (a == self.j)


Symbol = Union[EGen, Eps, Root]
Word = Tuple[Symbol, ...]


def hat(i: int, j: int) -> Root:
    return Root(i, j, "hatted")


class AlgebraExpr:
    """Finite sum of scalar-weighted words.

    Identical words are merged, zero coefficients dropped; insertion order of
    first occurrence is kept so that printed output is deterministic.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Iterable[Tuple[Word, QScalar]]] = None):
        self.terms: Dict[Word, QScalar] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for word, c in items:
                self._accumulate(tuple(word), as_scalar(c))

    def _accumulate(self, word: Word, c: QScalar) -> None:
        if word in self.terms:
            v = self.terms[word] + c
            if v:
                self.terms[word] = v
            else:
                del self.terms[word]
        elif c:
            self.terms[word] = c

    @classmethod
    def word(cls, *symbols: Symbol, coeff=ONE) -> "AlgebraExpr":
        return cls([(tuple(symbols), coeff)])

    @classmethod
    def scalar(cls, c) -> "AlgebraExpr":
        return cls([((), c)])

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[Tuple[Word, QScalar]]:
        return iter(self.terms.items())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraExpr):
            return NotImplemented
        return self.terms == other.terms

    def __add__(self, other: "AlgebraExpr") -> "AlgebraExpr":
        out = AlgebraExpr(self.terms)
        for w, c in other.terms.items():
            out._accumulate(w, c)
        return out

    def __neg__(self) -> "AlgebraExpr":
        return AlgebraExpr((w, -c) for w, c in self.terms.items())

    def __sub__(self, other: "AlgebraExpr") -> "AlgebraExpr":
        return self + (-other)

    def __mul__(self, other) -> "AlgebraExpr":
        if not isinstance(other, AlgebraExpr):
            return self.scale(other)
        out = AlgebraExpr()
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                out._accumulate(w1 + w2, c1 * c2)
        return out

    def __rmul__(self, other) -> "AlgebraExpr":
        return self.scale(other)

    def scale(self, c) -> "AlgebraExpr":
        c = as_scalar(c)
        return AlgebraExpr((w, c * v) for w, v in self.terms.items())

    def symbols(self) -> set:
        return {s for w in self.terms for s in w}

    def __repr__(self) -> str:
        return f"AlgebraExpr({to_text(self)})"

    def __str__(self) -> str:
        return to_text(self)


ZERO_EXPR = AlgebraExpr()


# --------------------------------------------------------------- root vectors


def default_pivot(i: int, j: int) -> int:
    return j - 1 if i < j else j + 1


@lru_cache(maxsize=None)
def _root_expand(i: int, j: int, variant: str, pivots: Tuple[Tuple[Tuple[int, int], int], ...]) -> AlgebraExpr:
    if abs(i - j) == 1:
        return AlgebraExpr.word(EGen(+1, j) if i < j else EGen(-1, i))
    k = dict(pivots).get((i, j), default_pivot(i, j))
    if not (min(i, j) < k < max(i, j)):
        raise ValueError(f"pivot {k} is not strictly between {i} and {j}")
    left = _root_expand(i, k, variant, pivots)
    right = _root_expand(k, j, variant, pivots)
    if variant == "modified":
        c = q_pow(-1)
    else:
        c = q_pow(1) if i < j else q_pow(-1)
    return left * right - (right * left).scale(c)


def root_vector_expand(i: int, j: int, variant: str = "modified", pivots: Optional[Mapping[Tuple[int, int], int]] = None) -> AlgebraExpr:
    """Expand ``E_{ij}`` (or ``E'_{ij}``) into words in the Chevalley generators.

    ``pivots`` overrides the intermediate index used at given ``(i, j)``
    levels of the recursion; by default ``k = j - 1`` for ``i < j`` and
    ``k = j + 1`` for ``i > j``.
    """
    if i == j:
        raise ValueError("diagonal root vectors are Cartan elements; use hat_E")
    if variant not in ("modified", "primed"):
        raise ValueError(f"root_vector_expand handles primed/modified, not {variant!r}")
    key = tuple(sorted((pivots or {}).items()))
    return _root_expand(i, j, variant, key)


def hat_E(i: int, j: int, depth: str = "generators") -> AlgebraExpr:
    """``\\hat E_{ij}`` with its Cartan dressing.

    Off the diagonal this is ``q^{(eps_i + eps_j - 1)/2} E_{ij}``; on the
    diagonal ``q^{eps_i} / (q - q^{-1})``.  With ``depth="modified"`` the
    modified root vector is left as a single :class:`Root` letter.
    """
    if i == j:
        return AlgebraExpr.word(Eps(i, 2), coeff=INV_QDIFF)
    prefix = AlgebraExpr.word(Eps(i, 1), Eps(j, 1), coeff=s_pow(-1))
    if depth == "modified":
        return prefix * AlgebraExpr.word(Root(i, j, "modified"))
    return prefix * root_vector_expand(i, j, "modified")


def expand(expr: AlgebraExpr, depth: str = "generators") -> AlgebraExpr:
    """Replace root-vector letters by their definitions."""
    out = AlgebraExpr()
    for word, c in expr:
        acc = AlgebraExpr.scalar(c)
        for sym in word:
            if isinstance(sym, Root):
                if sym.variant == "hatted":
                    piece = hat_E(sym.i, sym.j, depth)
                elif depth == "modified" and sym.variant == "modified":
                    piece = AlgebraExpr.word(sym)
                else:
                    piece = root_vector_expand(sym.i, sym.j, sym.variant)
            else:
                piece = AlgebraExpr.word(sym)
            acc = acc * piece
        out = out + acc
    return out


def cartan_to_front(expr: AlgebraExpr) -> AlgebraExpr:
    """Move every ``q^{eps/2}`` letter to the front of its word.

    Uses ``X q^{h eps_a/2} = q^{-h wt_a(X)/2} q^{h eps_a/2} X`` for a letter
    ``X`` of weight ``wt``, so ``shift`` below counts powers of ``q^{1/2}``.
    The collected Cartan part is written in increasing ``a`` with merged
    exponents.
    """
    out = AlgebraExpr()
    for word, c in expr:
        halves: Dict[int, int] = {}
        rest: List[Symbol] = []
        shift = 0
        for sym in word:
            if isinstance(sym, Eps):
                shift -= sum(sym.half * x.weight(sym.i) for x in rest)
                halves[sym.i] = halves.get(sym.i, 0) + sym.half
            else:
                rest.append(sym)
        front = tuple(Eps(a, h) for a, h in sorted(halves.items()) if h)
        out._accumulate(front + tuple(rest), c * s_pow(shift))
    return out


# ------------------------------------------------------------- tilde sums


def hat_word(i: Sequence[int], j: Sequence[int], sign: int) -> Optional[Word]:
    """``\\hat E^{\\pm}_{ij}`` as a word, or ``None`` when it is zero."""
    if any(sign * (a - b) < 0 for a, b in zip(i, j)):
        return None
    return tuple(hat(a, b) for a, b in zip(i, j))


def tilde_E(
    i: Sequence[int], j: Sequence[int], sign: int, tau: Optional[Permutation] = None, printed: bool = False
) -> AlgebraExpr:
    """The tilde sums that factor the fused R-matrices.

    For ``sign = +1``::

        sum_{zeta in D_i} q^{inv tau - inv zeta} \\hat E^+_{bar zeta(i), bar tau(j)}

    where the bar reverses a sequence.  For ``sign = -1`` the default is the
    coefficient that actually appears in the fused transposed R-matrix::

        sum_{zeta in D_i} q^{inv tau - inv zeta} \\hat E^-_{zeta(i), tau(j)}

    With ``printed=True`` the minus sum is instead the mirror of the plus
    sum (bars kept, exponent negated).  That form is also independent of
    ``tau`` but does not give a central element.  ``tau`` is any element of
    ``D_j`` and defaults to the identity.
    """
    i, j = tuple(i), tuple(j)
    if len(i) != len(j):
        raise ValueError("multi-indices of different length")
    if not (is_sorted(i) and is_sorted(j)):
        raise ValueError("tilde_E expects weakly increasing multi-indices")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    m = len(i)
    if tau is None:
        tau = Permutation.identity(m)
    elif tau not in coset_reps(j):
        raise ValueError(f"{tau} is not in D_{j}")
    bars = sign > 0 or printed
    expo = -1 if (sign < 0 and printed) else 1
    jj = act(tau.reversed() if bars else tau, j)
    inv_tau = inversions(tau)
    out = AlgebraExpr()
    for zeta in coset_reps(i).reps:
        w = hat_word(act(zeta.reversed() if bars else zeta, i), jj, sign)
        if w is not None:
            out._accumulate(w, q_pow(expo * (inv_tau - inversions(zeta))))
    return out


# ----------------------------------------------------------- central element


@dataclass
class Summand:
    i: Tuple[int, ...]
    j: Tuple[int, ...]
    weight: QScalar
    minus: AlgebraExpr
    plus: AlgebraExpr

    def expr(self) -> AlgebraExpr:
        return (self.minus * self.plus).scale(self.weight)


class CentralElement(AlgebraExpr):
    """``C_m`` as a flat expression that remembers its ``(i, j)`` summands."""

    __slots__ = ("m", "N", "summands")

    def __init__(self, m: int, N: int, summands: List[Summand]):
        super().__init__()
        self.m, self.N = m, N
        self.summands = summands
        for s in summands:
            for w, c in s.expr():
                self._accumulate(w, c)


def central_element(m: int, N: int, printed: bool = False) -> CentralElement:
    """``C_m = sum_{i,j in W_m} q^{2|i| - Nm} tilde E^-_{ji} tilde E^+_{ij}``.

    The minus factors are the ones read off the fused transposed R-matrix.
    ``printed=True`` builds the mirrored minus sums instead (see
    :func:`tilde_E`); that element is not central once ``m >= 2``.
    """
    if m < 1 or N < 1:
        raise ValueError("central_element needs m >= 1 and N >= 1")
    W = enumerate_W(m, N)
    summands = []
    for i in W:
        for j in W:
            plus = tilde_E(i, j, +1)
            if plus.is_zero():
                continue
            minus = tilde_E(j, i, -1, printed=printed)
            if minus.is_zero():
                continue
            summands.append(Summand(i, j, q_pow(2 * sum(i) - N * m), minus, plus))
    return CentralElement(m, N, summands)


def term_count(e: AlgebraExpr) -> int:
    """Number of nonvanishing ``(i, j)`` summands for a central element,
    number of words otherwise."""
    if isinstance(e, CentralElement):
        return len(e.summands)
    return len(e)


def c2_regime(i: Sequence[int], j: Sequence[int]) -> str:
    """Index regime of an ``m = 2`` summand, following the four families of
    the explicit C_2 expansion."""
    (i1, i2), (j1, j2) = i, j
    ci, cj = i1 == i2, j1 == j2
    if ci and cj:
        return "j<=i"
    if ci or cj:
        return "one-block"
    if j1 <= i1 < j2 <= i2:
        return "interleaved"
    if j1 < j2 <= i1 < i2:
        return "separated"
    return "other"


def vanishing_pairs(m: int, N: int) -> List[frozenset]:
    """Unordered pairs ``{i, j}`` whose summand vanishes in both orientations."""
    W = enumerate_W(m, N)
    out = []
    for a, i in enumerate(W):
        for j in W[a:]:
            both_zero = all(
                tilde_E(x, y, +1).is_zero() or tilde_E(y, x, -1).is_zero() for x, y in ((i, j), (j, i))
            )
            if both_zero:
                out.append(frozenset((i, j)))
    return out


# -------------------------------------------------------------- serializers


def _idx(*ks: int) -> str:
    return ",".join(map(str, ks)) if any(k >= 10 for k in ks) else "".join(map(str, ks))


def _eps_text(e: Eps, latex: bool) -> str:
    name = f"\\epsilon_{{{e.i}}}" if latex else f"ε_{e.i}"
    h = e.half
    if h == 2:
        return f"q^{{{name}}}"
    if h == -2:
        return f"q^{{-{name}}}"
    if h % 2 == 0:
        return f"q^{{{h // 2}{name}}}"
    return f"q^{{{name}/2}}" if h == 1 else f"q^{{-{name}/2}}" if h == -1 else f"q^{{{h}{name}/2}}"


def symbol_text(sym: Symbol, latex: bool = False) -> str:
    if isinstance(sym, EGen):
        sign = "+" if sym.sign > 0 else "-"
        return f"\\hat{{e}}_{{{sign},{sym.i}}}" if latex else f"ê_{{{sign},{sym.i}}}"
    if isinstance(sym, Eps):
        return _eps_text(sym, latex)
    ij = _idx(sym.i, sym.j)
    if sym.variant == "hatted":
        return f"\\hat{{E}}_{{{ij}}}" if latex else f"Ê_{{{ij}}}"
    if sym.variant == "primed":
        return f"E'_{{{ij}}}"
    return f"E_{{{ij}}}"


def _word_text(word: Word, latex: bool) -> str:
    return "".join(symbol_text(s, latex) for s in word) if latex else "".join(symbol_text(s) for s in word)


def _term_text(word: Word, c: QScalar) -> Tuple[bool, str]:
    w = _word_text(word, False)
    neg = False
    if len(c.num.coeffs) == 1:
        ((e, v),) = c.num.items()
        if v < 0:
            neg, c = True, -c
        mono = format_scalar(type(c)(c.num, 0))
        pre = "" if mono == "1" and w else mono
        body = f"{pre} {w}" if pre and w else (pre or w or "1")
        if c.k:
            body += "/(q-q^{-1})" if c.k == 1 else f"/(q-q^{{-1}})^{{{c.k}}}"
        return neg, body
    return False, f"({format_scalar(c)}){(' ' + w) if w else ''}"


def to_text(e: AlgebraExpr) -> str:
    if e.is_zero():
        return "0"
    out = ""
    for n, (word, c) in enumerate(e):
        neg, body = _term_text(word, c)
        if n == 0:
            out = ("-" if neg else "") + body
        else:
            out += (" - " if neg else " + ") + body
    return out


def to_latex(e: AlgebraExpr) -> str:
    if e.is_zero():
        return "0"
    parts = []
    for n, (word, c) in enumerate(e):
        coeff = latex_scalar(c)
        w = _word_text(word, True)
        if coeff.startswith("-"):
            sign, coeff = "-", coeff[1:]
        else:
            sign = "+"
        body = f"{coeff} {w}".strip() if coeff else (w or "1")
        if not w and coeff:
            body = coeff
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def symbol_to_json(sym: Symbol) -> dict:
    if isinstance(sym, EGen):
        return {"type": "e", "sign": "+" if sym.sign > 0 else "-", "i": sym.i}
    if isinstance(sym, Eps):
        return {"type": "eps", "i": sym.i, "half": sym.half}
    kind = {"hatted": "hatE", "modified": "E", "primed": "Eprime"}[sym.variant]
    return {"type": kind, "i": sym.i, "j": sym.j}


def symbol_from_json(d: Mapping) -> Symbol:
    t = d["type"]
    if t == "e":
        return EGen(+1 if d["sign"] == "+" else -1, int(d["i"]))
    if t == "eps":
        return Eps(int(d["i"]), int(d["half"]))
    variant = {"hatE": "hatted", "E": "modified", "Eprime": "primed"}.get(t)
    if variant is None:
        raise ValueError(f"unknown symbol type {t!r}")
    return Root(int(d["i"]), int(d["j"]), variant)


def expr_to_json(e: AlgebraExpr) -> dict:
    out = {"terms": [{"coeff": c.to_json(), "word": [symbol_to_json(s) for s in w]} for w, c in e]}
    if isinstance(e, CentralElement):
        out["m"], out["N"] = e.m, e.N
        out["summands"] = [
            {
                "i": list(s.i),
                "j": list(s.j),
                "weight": s.weight.to_json(),
                "minus": expr_to_json(s.minus)["terms"],
                "plus": expr_to_json(s.plus)["terms"],
            }
            for s in e.summands
        ]
    return out


def expr_from_json(data: Mapping) -> AlgebraExpr:
    def terms(ts):
        return [(tuple(symbol_from_json(s) for s in t["word"]), QScalar.from_json(t["coeff"])) for t in ts]

    if "summands" in data:
        summands = [
            Summand(tuple(s["i"]), tuple(s["j"]), QScalar.from_json(s["weight"]), AlgebraExpr(terms(s["minus"])), AlgebraExpr(terms(s["plus"])))
            for s in data["summands"]
        ]
        return CentralElement(int(data["m"]), int(data["N"]), summands)
    return AlgebraExpr(terms(data["terms"]))


def central_to_latex(c: CentralElement) -> str:
    """One product ``q^{..} (tilde E^-)(tilde E^+)`` per summand."""
    parts = []
    for s in c.summands:
        w = latex_scalar(s.weight)
        minus, plus = to_latex(s.minus), to_latex(s.plus)
        if len(s.minus) > 1:
            minus = f"({minus})"
        if len(s.plus) > 1:
            plus = f"({plus})"
        parts.append(f"{w} {minus}{plus}".strip())
    return f"C_{{{c.m}}} = " + " + ".join(parts)


def serialize(e: AlgebraExpr, fmt: str = "text") -> str:
    if fmt == "text":
        return to_text(e)
    if fmt == "latex":
        return central_to_latex(e) if isinstance(e, CentralElement) else to_latex(e)
    if fmt == "json":
        return json.dumps(expr_to_json(e), ensure_ascii=False, sort_keys=True)
    raise ValueError(f"unsupported format {fmt!r}")


def parse(text: str) -> AlgebraExpr:
    return expr_from_json(json.loads(text))
