"""Truncated Taylor expansions (jets) in one and two variables.

Coefficient c[i] of a Jet is the i-th derivative divided by i!, so
multiplication is truncated convolution.  These carry double-precision
values only; they feed the numeric cross-checks, while exactness lives
in the monomial algebra.
"""

from math import factorial

import numpy as np

__all__ = ["Jet", "BivariateJet", "compose", "revert"]


class Jet:
    """Taylor coefficients c[0..N] of a function around base_point.

    >>> j = Jet.from_derivatives(0.0, [1.0, 1.0, 1.0, 1.0])   # e^t
    >>> j.coefficients.tolist()
    [1.0, 1.0, 0.5, 0.16666666666666666]
    >>> (j * j).derivatives()   # e^{2t}
    [1.0, 2.0, 4.0, 8.0]
    """

    def __init__(self, base_point, coefficients):
        self.base_point = float(base_point)
        self.coefficients = np.array(coefficients, dtype=float)
        if self.coefficients.ndim != 1 or len(self.coefficients) < 1:
            raise ValueError("need at least the constant coefficient")

    @property
    def order(self):
        return len(self.coefficients) - 1

    @property
    def value(self):
        return float(self.coefficients[0])

    @classmethod
    def from_derivatives(cls, base_point, derivatives):
        """Build from raw derivative values [f(t0), f'(t0), f''(t0), ...]."""
        return cls(base_point, [d / factorial(i) for i, d in enumerate(derivatives)])

    def derivatives(self):
        """Raw derivative values [f(t0), f'(t0), ...] back from the jet."""
        return [c * factorial(i) for i, c in enumerate(self.coefficients.tolist())]

    def _check_compatible(self, other):
        if self.order != other.order or self.base_point != other.base_point:
            raise ValueError("jets must share order and base point")

    def __add__(self, other):
        if isinstance(other, Jet):
            self._check_compatible(other)
            return Jet(self.base_point, self.coefficients + other.coefficients)
        out = self.coefficients.copy()
        out[0] += other
        return Jet(self.base_point, out)

    __radd__ = __add__

    def __neg__(self):
        return Jet(self.base_point, -self.coefficients)

    def __sub__(self, other):
        return self + (-other if isinstance(other, Jet) else -other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Jet):
            self._check_compatible(other)
            prod = np.convolve(self.coefficients, other.coefficients)[:self.order + 1]
            return Jet(self.base_point, prod)
        return Jet(self.base_point, self.coefficients * other)

    __rmul__ = __mul__

    def __repr__(self):
        return "Jet(%r, %s)" % (self.base_point, self.coefficients.tolist())


def compose(outer, inner):
    """The jet of outer(inner(x)) around inner's base point.

    inner must pass through outer's base point, so that the shifted inner
    series has no constant term and truncation loses nothing.

    >>> exp = Jet.from_derivatives(0.0, [1.0, 1.0, 1.0, 1.0])
    >>> twice = Jet(0.0, [0.0, 2.0, 0.0, 0.0])
    >>> compose(exp, twice).derivatives()
    [1.0, 2.0, 4.0, 8.0]
    """
    if inner.value != outer.base_point:
        raise ValueError("inner jet must pass through outer's base point")
    shifted = inner.coefficients.copy()
    shifted[0] = 0.0
    n = inner.order
    out = np.zeros(n + 1)
    for a in outer.coefficients[::-1]:
        out = np.convolve(out, shifted)[:n + 1]
        out[0] += a
    return Jet(inner.base_point, out)


def revert(jet):
    """The jet of the inverse function: for x = f(t) with f'(t0) nonzero,
    t as a function of x around x0 = f(t0).

    Solved order by order: the linear coefficient is 1/f', and each next
    coefficient is fixed by zeroing one power of x - x0 in f(t(x)) = x.

    >>> f = Jet.from_derivatives(1.0, [1.0, 2.0, 2.0, 0.0])   # t^2 at t=1
    >>> revert(f).derivatives()                               # sqrt at x=1
    [1.0, 0.5, -0.25, 0.375]
    """
    a = jet.coefficients
    n = jet.order
    if n < 1 or a[1] == 0.0:
        raise ValueError("series has no linear term; not invertible")
    b = np.zeros(n + 1)
    b[0] = jet.base_point
    b[1] = 1.0 / a[1]
    for m in range(2, n + 1):
        # coefficient of u^m in sum_i a_i s(u)^i, with b[m] still zero;
        # only the a_1 b[m] cross-term is missing, so solve for it
        s = b.copy()
        s[0] = 0.0
        s[m:] = 0.0
        comp = np.zeros(n + 1)
        for coeff in a[:m + 1][::-1]:
            comp = np.convolve(comp, s)[:n + 1]
            comp[0] += coeff
        b[m] = -comp[m] / a[1]
    return Jet(float(a[0]), b)


class BivariateJet:
    """Taylor coefficients c[a, b] of F(x, y) around base_point = (x0, y0)
    for a + b <= order; c[a, b] is the partial divided by a! b!.

    Entries beyond the triangle a + b <= order are zeroed on input.
    """

    def __init__(self, base_point, coefficients):
        x0, y0 = base_point
        self.base_point = (float(x0), float(y0))
        c = np.array(coefficients, dtype=float)
        if c.ndim != 2 or c.shape[0] != c.shape[1] or c.shape[0] < 2:
            raise ValueError("coefficients must be a square table of size >= 2")
        for a in range(c.shape[0]):
            c[a, c.shape[0] - a:] = 0.0
        self.coefficients = c

    @property
    def order(self):
        return self.coefficients.shape[0] - 1

    @classmethod
    def from_partials(cls, base_point, partials, order):
        """Build from a mapping (a, b) -> raw partial derivative value.
        Omitted pairs are zero; in particular (0, 0) defaults to zero,
        the on-curve value.
        """
        c = np.zeros((order + 1, order + 1))
        for (a, b), v in partials.items():
            if a < 0 or b < 0 or a + b > order:
                raise ValueError("partial (%d, %d) outside the jet" % (a, b))
            c[a, b] = v / (factorial(a) * factorial(b))
        return cls(base_point, c)

    def partial(self, a, b):
        """Raw partial derivative value at the base point."""
        return float(self.coefficients[a, b]) * factorial(a) * factorial(b)

    def __repr__(self):
        return "BivariateJet(%r, order=%d)" % (self.base_point, self.order)
