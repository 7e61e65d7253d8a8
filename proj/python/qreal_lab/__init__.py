"""Python bindings for the qreal-lab C++ core."""

from dataclasses import dataclass
from fractions import Fraction

from . import _core
from ._core import (
    InsufficientPrecision,
    InsufficientSeriesOrder,
    InvalidInput,
    QRealError,
    StabilizationNotReached,
    burau_matrix,
    cubic_discriminant,
    decompose_psl2z,
    root_values,
    word_matrix_q,
)

__version__ = _core.__version__


def _number(text):
    value = Fraction(text)
    return value.numerator if value.denominator == 1 else value


@dataclass(frozen=True)
class Series:
    """Laurent series known exactly for exponents valuation .. order-1."""

    valuation: int
    order: int
    coeffs: tuple

    @classmethod
    def _from_core(cls, packed):
        valuation, order, coeffs = packed
        return cls(valuation, order, tuple(_number(c) for c in coeffs))

    def _to_core(self):
        return (self.valuation, self.order, [str(c) for c in self.coeffs])

    def coefficient(self, exponent):
        if exponent >= self.order:
            raise InsufficientPrecision(f"q^{exponent} is beyond the exactness order {self.order}")
        index = exponent - self.valuation
        return self.coeffs[index] if 0 <= index < len(self.coeffs) else 0

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def to_dict(self):
        return {"valuation": self.valuation, "order": self.order, "coeffs": [str(c) for c in self.coeffs]}


def q_rational(x):
    num, den, text = _core.q_rational(str(x))
    return [_number(c) for c in num], [_number(c) for c in den], text


def q_rational_series(x, order):
    return Series._from_core(_core.q_rational_series(str(x), order))


def q_real(minpoly, interval, order=31, margin=3, budget=200):
    lo, hi = interval
    return Series._from_core(_core.q_real_algebraic(list(minpoly), str(lo), str(hi), order, margin, budget))


def q_real_cf(head, period=(), order=31, margin=3, budget=200):
    return Series._from_core(_core.q_real_cf(list(head), list(period), order, margin, budget))


def quadratic_closed(minpoly, interval, order=20):
    lo, hi = interval
    d = _core.quadratic_closed(list(minpoly), str(lo), str(hi), order)
    out = {k: [_number(c) for c in d[k]] for k in ("Q", "R", "S")}
    out["fixing"] = [int(x) for x in d["fixing"]]
    out["word"] = d["word"]
    out["text"] = d["text"]
    out["series"] = Series._from_core(d["series"])
    return out


def cubic_roots(family, b, order=31):
    return [Series._from_core(s) for s in _core.cubic_roots(family, b, order)]


def b_series(family, b, order=31, route="sum", root_index=1):
    return Series._from_core(_core.b_series(family, b, order, route, root_index))


def vieta_residuals(family, b, order=31):
    product, pairs = _core.vieta_residuals(family, b, order)
    return Series._from_core(product), Series._from_core(pairs)


def c_table(series, lmax, mmax):
    return [[_number(c) for c in row] for row in _core.c_table(series._to_core(), lmax, mmax)]


def zero_block(series, lmax, mmax):
    return _core.zero_block(series._to_core(), lmax, mmax)


def fig_export(series):
    return [(k, _number(c), v) for k, c, v in _core.fig_export(series._to_core())]
