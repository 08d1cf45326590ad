"""Cartan and Coxeter data of a linear Nakayama algebra.

Conventions: ``C[i][j] = 1`` iff ``i <= j <= i + c_i - 1`` (row ``i`` is the
dimension vector of ``P_i``), and the Coxeter matrix is ``Phi = -C^{-T} C``.
``Phi`` acts on coordinates with respect to the basis of indecomposable
projectives; on dimension vectors the same transformation reads
``-C C^{-T} = C^T Phi C^{-T}``.  Both have the same characteristic polynomial.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .algebra import NakayamaAlgebra


@dataclass(frozen=True)
class CoxeterData:
    cartan: tuple[tuple[int, ...], ...]
    coxeter_polynomial: tuple[int, ...]   # constant term first, monic

    @property
    def degree(self) -> int:
        return len(self.coxeter_polynomial) - 1

    def is_self_reciprocal(self) -> bool:
        p = self.coxeter_polynomial
        rev = p[::-1]
        return rev == p or rev == tuple(-x for x in p)

    def polynomial_str(self, var="T") -> str:
        return format_polynomial(self.coxeter_polynomial, var)


def cartan_matrix(algebra: NakayamaAlgebra) -> list[list[int]]:
    n = algebra.n
    return [[int(i <= j <= algebra.ends[i]) for j in range(1, n + 1)] for i in range(1, n + 1)]


def _unitriangular_inverse(c):
    # upper unitriangular integer matrix -> exact integer inverse
    n = len(c)
    inv = [[int(i == j) for j in range(n)] for i in range(n)]
    for i in range(n - 1, -1, -1):
        for j in range(i + 1, n):
            s = 0
            for k in range(i + 1, j + 1):
                s += c[i][k] * inv[k][j]
            inv[i][j] = -s
    return inv


def coxeter_matrix(algebra: NakayamaAlgebra) -> list[list[int]]:
    """``Phi = -C^{-T} C`` with integer entries."""
    c = cartan_matrix(algebra)
    n = len(c)
    cinv = _unitriangular_inverse(c)
    cinv_t = [[cinv[j][i] for j in range(n)] for i in range(n)]
    return [[-sum(cinv_t[i][k] * c[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def characteristic_polynomial(m) -> tuple[int, ...]:
    """Characteristic polynomial ``det(T I - m)`` by Faddeev-LeVerrier.

    Coefficients are returned constant term first; the input must have
    integer (or integral rational) entries and so does the output.
    """
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    mk = linalg.zeros(n, n)
    for k in range(1, n + 1):
        am = linalg.matmul(a, mk) if k > 1 else linalg.zeros(n, n)
        for i in range(n):
            am[i][i] += coeffs[n - k + 1]
        mk = am
        amk = linalg.matmul(a, mk)
        coeffs[n - k] = -sum(amk[i][i] for i in range(n)) / k
    out = []
    for x in coeffs:
        if x.denominator != 1:
            raise ArithmeticError("non-integral characteristic polynomial")
        out.append(int(x))
    return tuple(out)


def coxeter(algebra: NakayamaAlgebra) -> CoxeterData:
    cart = cartan_matrix(algebra)
    poly = characteristic_polynomial(coxeter_matrix(algebra))
    return CoxeterData(tuple(tuple(r) for r in cart), poly)


def format_polynomial(coeffs, var="T") -> str:
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        a = coeffs[k]
        if a == 0:
            continue
        mag = abs(a)
        if k == 0:
            body = str(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{mag}{mono}"
        sign = "-" if a < 0 else "+"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    text = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        text += f" {sign} {body}"
    return text
