"""Truncated presentation of the Hopf algebroid (BP_*, BP_*BP) at the prime 2.

Hazewinkel generators v_1, ..., v_N and the conjugate-free generators t_1, ..., t_N, all of
internal degree |v_i| = |t_i| = 2(2^i - 1). The structure maps come from the logarithm
coefficients lambda_n of the formal group law:

    2 lambda_n         = sum_{0 <= i < n} lambda_i v_{n-i}^{2^i}
    eta_R(lambda_n)    = sum_{i+j=n} lambda_i t_j^{2^i}
    sum_{i+j=n} lambda_i Delta(t_j)^{2^i} = sum_{i+j+k=n} lambda_i t_j^{2^i} (x) t_k^{2^{i+j}}

Rational arithmetic is done with sympy; the stored maps have integer coefficients. All
coefficients of Delta sit on the left tensor factor.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Tuple

from sympy import Poly, Rational, Symbol, expand, symbols

from trigraded.errors import CapTooSmall

logger = logging.getLogger(__name__)

Exps = Tuple[int, ...]
# (v exponents, t exponents) -> coefficient
GammaPoly = Dict[Tuple[Exps, Exps], int]
# (v exponents, left t exponents, right t exponents) -> coefficient
GammaSquaredPoly = Dict[Tuple[Exps, Exps, Exps], int]


def generator_degree(i: int) -> int:
    """Internal degree of v_i and t_i."""
    return 2 * (2 ** i - 1)


def stable_range(N: int, s_max: int, D: int) -> bool:
    """True when v_{N+1} and t_{N+1} cannot reach internal degrees up to D."""
    return generator_degree(N + 1) > D


def generators_for(D: int) -> int:
    """Smallest N whose presentation is exact through internal degree D."""
    N = 1
    while not stable_range(N, 0, max(D, 2)):
        N += 1
    return N


@dataclass
class BPPresentation:
    N: int
    cap: int
    eta_right: Dict[int, GammaPoly] = field(default_factory=dict)
    coproduct: Dict[int, GammaSquaredPoly] = field(default_factory=dict)

    def monomial_degree(self, exps: Exps) -> int:
        return sum(e * generator_degree(i + 1) for i, e in enumerate(exps))

    def describe_eta(self, n: int) -> str:
        return _format_gamma(self.eta_right[n])

    def describe_coproduct(self, n: int) -> str:
        return _format_gamma_squared(self.coproduct[n])


class _Symbols:
    def __init__(self, N: int):
        self.N = N
        self.v = list(symbols(f"v1:{N + 1}"))
        self.t = list(symbols(f"t1:{N + 1}"))
        self.tl = list(symbols(f"l1:{N + 1}"))
        self.tr = list(symbols(f"r1:{N + 1}"))

    def v_(self, i: int):
        return self.v[i - 1]

    @staticmethod
    def at(seq: List[Symbol], i: int):
        return 1 if i == 0 else seq[i - 1]


def _log_coefficients(sym: _Symbols) -> List:
    lam = [Rational(1)]
    for n in range(1, sym.N + 1):
        total = sum(lam[i] * sym.v_(n - i) ** (2 ** i) for i in range(n))
        lam.append(expand(Rational(1, 2) * total))
    return lam


def _right_units(sym: _Symbols, lam: List) -> List:
    eta_lam = [Rational(1)]
    for n in range(1, sym.N + 1):
        eta_lam.append(expand(sum(
            lam[i] * _Symbols.at(sym.t, n - i) ** (2 ** i) for i in range(n + 1)
        )))
    eta_v = [None]
    for n in range(1, sym.N + 1):
        value = 2 * eta_lam[n] - sum(eta_lam[i] * eta_v[n - i] ** (2 ** i) for i in range(1, n))
        eta_v.append(expand(value))
    return eta_v


def _coproducts(sym: _Symbols, lam: List) -> List:
    delta = [Rational(1)]
    for n in range(1, sym.N + 1):
        rhs = 0
        for i in range(n + 1):
            for j in range(n - i + 1):
                k = n - i - j
                rhs += (
                    lam[i]
                    * _Symbols.at(sym.tl, j) ** (2 ** i)
                    * _Symbols.at(sym.tr, k) ** (2 ** (i + j))
                )
        rhs -= sum(lam[i] * delta[n - i] ** (2 ** i) for i in range(1, n + 1))
        delta.append(expand(rhs))
    return delta


def _integral_terms(expr, gens) -> Dict[Exps, int]:
    terms: Dict[Exps, int] = {}
    for monom, coeff in Poly(expr, *gens).terms():
        if coeff.q != 1:
            raise ArithmeticError(f"non-integral coefficient {coeff} in {expr}")
        terms[tuple(int(e) for e in monom)] = int(coeff)
    return terms


def _check_counit(sym: _Symbols, eta_v: List, delta: List) -> None:
    zero_t = {t: 0 for t in sym.t}
    for n in range(1, sym.N + 1):
        if expand(eta_v[n].subs(zero_t)) != sym.v_(n):
            raise ArithmeticError(f"counit fails on eta_R(v{n})")
        left = expand(delta[n].subs({l: 0 for l in sym.tl}))
        right = expand(delta[n].subs({r: 0 for r in sym.tr}))
        if left != sym.tr[n - 1] or right != sym.tl[n - 1]:
            raise ArithmeticError(f"counit fails on Delta(t{n})")


def _check_coassociative(sym: _Symbols, eta_v: List, delta: List) -> None:
    a = list(symbols(f"a1:{sym.N + 1}"))
    b = list(symbols(f"b1:{sym.N + 1}"))
    c = list(symbols(f"c1:{sym.N + 1}"))

    def delta_in(n: int, left, right):
        return delta[n].subs(
            {**{sym.tl[i]: left[i] for i in range(sym.N)}, **{sym.tr[i]: right[i] for i in range(sym.N)}},
            simultaneous=True,
        )

    eta_on_a = {sym.v[i]: eta_v[i + 1].subs({sym.t[k]: a[k] for k in range(sym.N)}) for i in range(sym.N)}
    for n in range(1, sym.N + 1):
        # (Delta x id) Delta(t_n): replace left factor by Delta(t) on (a, b), right factor by c.
        left_side = delta[n].subs(
            {**{sym.tl[i]: delta_in(i + 1, a, b) for i in range(sym.N)},
             **{sym.tr[i]: c[i] for i in range(sym.N)}},
            simultaneous=True,
        )
        # (id x Delta) Delta(t_n): coefficients of the inner Delta pass through eta_R into factor a.
        inner = {
            sym.tr[i]: delta_in(i + 1, b, c).subs(eta_on_a, simultaneous=True) for i in range(sym.N)
        }
        right_side = delta[n].subs(
            {**{sym.tl[i]: a[i] for i in range(sym.N)}, **inner},
            simultaneous=True,
        )
        if expand(left_side - right_side) != 0:
            raise ArithmeticError(f"coassociativity fails on t{n}")


def build_presentation(N: int, D: int, verify: bool = True) -> BPPresentation:
    """Structure maps of (BP_*, BP_*BP) on v_1..v_N, t_1..t_N, valid through internal degree D."""
    if N < 1:
        raise CapTooSmall("at least one generator is required")
    if generator_degree(N) > D:
        raise CapTooSmall(f"|v_{N}| = {generator_degree(N)} exceeds the degree cap {D}")
    return _build_presentation(N, D, verify)


@lru_cache(maxsize=8)
def _build_presentation(N: int, D: int, verify: bool) -> BPPresentation:
    sym = _Symbols(N)
    lam = _log_coefficients(sym)
    eta_v = _right_units(sym, lam)
    delta = _coproducts(sym, lam)
    if verify:
        _check_counit(sym, eta_v, delta)
        if N <= 2:
            _check_coassociative(sym, eta_v, delta)

    pres = BPPresentation(N=N, cap=D)
    for n in range(1, N + 1):
        raw = _integral_terms(eta_v[n], sym.v + sym.t)
        pres.eta_right[n] = {(m[:N], m[N:]): c for m, c in raw.items()}
        raw = _integral_terms(delta[n], sym.v + sym.tl + sym.tr)
        pres.coproduct[n] = {(m[:N], m[N:2 * N], m[2 * N:]): c for m, c in raw.items()}
        for (alpha, tdeg), _ in pres.eta_right[n].items():
            if pres.monomial_degree(alpha) + pres.monomial_degree(tdeg) != generator_degree(n):
                raise ArithmeticError(f"eta_R(v{n}) is not homogeneous")
    logger.info(
        f"BP presentation N={N}: "
        + ", ".join(f"eta_R(v{n}) has {len(pres.eta_right[n])} terms" for n in range(1, N + 1))
    )
    return pres


# ============================================================================
# Formatting
# ============================================================================

def format_monomial(exps: Exps, name: str) -> str:
    factors = []
    for i, e in enumerate(exps):
        if e:
            factors.append(f"{name}{i + 1}" if e == 1 else f"{name}{i + 1}^{e}")
    return " ".join(factors)


def _signed_terms(items) -> str:
    out = ""
    for coeff, body in items:
        sign = "-" if coeff < 0 else "+"
        magnitude = abs(coeff)
        if body:
            piece = body if magnitude == 1 else f"{magnitude} {body}"
        else:
            piece = str(magnitude)
        out += f" {sign} {piece}" if out else ("-" + piece if sign == "-" else piece)
    return out or "0"


def _format_gamma(poly: GammaPoly) -> str:
    items = []
    for (alpha, delta), coeff in sorted(poly.items()):
        body = " ".join(x for x in (format_monomial(alpha, "v"), format_monomial(delta, "t")) if x)
        items.append((coeff, body))
    return _signed_terms(items)


def _format_gamma_squared(poly: GammaSquaredPoly) -> str:
    items = []
    for (alpha, x, y), coeff in sorted(poly.items()):
        left = " ".join(p for p in (format_monomial(alpha, "v"), format_monomial(x, "t")) if p) or "1"
        right = format_monomial(y, "t") or "1"
        items.append((coeff, f"{left}|{right}"))
    return _signed_terms(items)


def verify_presentation(N: int) -> None:
    """Run the counit and coassociativity checks at any N (slow beyond N = 3)."""
    sym = _Symbols(N)
    lam = _log_coefficients(sym)
    eta_v = _right_units(sym, lam)
    delta = _coproducts(sym, lam)
    _check_counit(sym, eta_v, delta)
    _check_coassociative(sym, eta_v, delta)
