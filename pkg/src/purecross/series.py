"""Truncated formal power series with exact rational coefficients.

A :class:`Series` holds coefficients c0 .. c_order as ``Fraction``s; no
floating point is accepted anywhere.  Binary operations truncate to the
smaller operand order and record it on the result; nothing ever extends
an order silently (``pad`` exists for the rare explicit case).

>>> f = Series.x(5) + Series([0, 0, 1], order=5)
>>> f.reversion().coeffs
(Fraction(0, 1), Fraction(1, 1), Fraction(-1, 1), Fraction(2, 1), Fraction(-5, 1), Fraction(14, 1))
"""

from fractions import Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _to_fraction(value) -> Fraction:
    if isinstance(value, float):
        raise TypeError("float coefficients are not allowed; use Fraction or str")
    return Fraction(value)


class Series:
    """A power series known through ``x**order``, coefficients exact."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs, order=None):
        vals = [_to_fraction(c) for c in coeffs]
        if order is None:
            if not vals:
                raise ValueError("need coefficients or an explicit order")
            order = len(vals) - 1
        if not isinstance(order, int) or isinstance(order, bool) or order < 0:
            raise ValueError(f"order must be a nonnegative integer, got {order!r}")
        if len(vals) > order + 1:
            raise ValueError(f"{len(vals)} coefficients exceed order {order}")
        vals.extend([_ZERO] * (order + 1 - len(vals)))
        self.order = order
        self.coeffs = tuple(vals)

    @classmethod
    def zero(cls, order: int) -> "Series":
        return cls([], order=order)

    @classmethod
    def one(cls, order: int) -> "Series":
        return cls([1], order=order)

    @classmethod
    def x(cls, order: int) -> "Series":
        if order < 1:
            raise ValueError("Series.x needs order >= 1")
        return cls([0, 1], order=order)

    def __getitem__(self, k: int) -> Fraction:
        if not 0 <= k <= self.order:
            raise IndexError(f"coefficient {k} beyond order {self.order}")
        return self.coeffs[k]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"Series({[str(c) for c in self.coeffs]}, order={self.order})"

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other) -> "Series":
        if isinstance(other, Series):
            m = min(self.order, other.order)
            return Series(
                [a + b for a, b in zip(self.coeffs, other.coeffs)][: m + 1], order=m
            )
        scalar = _to_fraction(other)
        return Series((self.coeffs[0] + scalar,) + self.coeffs[1:], order=self.order)

    __radd__ = __add__

    def __neg__(self) -> "Series":
        return Series([-c for c in self.coeffs], order=self.order)

    def __sub__(self, other) -> "Series":
        return self + (-other if isinstance(other, Series) else -_to_fraction(other))

    def __rsub__(self, other) -> "Series":
        return (-self) + _to_fraction(other)

    def __mul__(self, other) -> "Series":
        if isinstance(other, Series):
            m = min(self.order, other.order)
            a, b = self.coeffs, other.coeffs
            out = [_ZERO] * (m + 1)
            for i in range(m + 1):
                ai = a[i]
                if ai:
                    for j in range(m + 1 - i):
                        out[i + j] += ai * b[j]
            return Series(out, order=m)
        scalar = _to_fraction(other)
        return Series([scalar * c for c in self.coeffs], order=self.order)

    __rmul__ = __mul__

    # -- order bookkeeping --------------------------------------------

    def truncate(self, order: int) -> "Series":
        """Forget coefficients beyond ``order`` (which must not exceed the
        current order)."""
        if order > self.order:
            raise ValueError(f"cannot truncate order {self.order} up to {order}")
        return Series(self.coeffs[: order + 1], order=order)

    def pad(self, order: int) -> "Series":
        """Explicitly extend with zero coefficients up to ``order``."""
        if order < self.order:
            raise ValueError(f"cannot pad order {self.order} down to {order}")
        return Series(self.coeffs, order=order)

    def shift_up(self) -> "Series":
        """Multiply by x at fixed order; the top input coefficient falls off."""
        return Series((_ZERO,) + self.coeffs[:-1], order=self.order)

    def shift_down(self) -> "Series":
        """Divide by x; requires a zero constant term, order drops by one."""
        if self.coeffs[0] != 0:
            raise ValueError("cannot shift down with a nonzero constant term")
        if self.order < 1:
            raise ValueError("cannot shift down an order-0 series")
        return Series(self.coeffs[1:], order=self.order - 1)

    def derivative(self) -> "Series":
        if self.order < 1:
            raise ValueError("cannot differentiate an order-0 series")
        return Series(
            [k * self.coeffs[k] for k in range(1, self.order + 1)],
            order=self.order - 1,
        )

    # -- composition and inverses -------------------------------------

    def compose(self, inner: "Series") -> "Series":
        """``self(inner)``; the inner series must kill its constant term."""
        if not isinstance(inner, Series):
            raise TypeError("compose expects a Series")
        if inner.coeffs[0] != 0:
            raise ValueError("inner series must have zero constant term")
        m = min(self.order, inner.order)
        g = inner if inner.order == m else inner.truncate(m)
        result = Series([self.coeffs[m]], order=m)
        for k in range(m - 1, -1, -1):
            result = result * g + self.coeffs[k]
        return result

    def inverse(self) -> "Series":
        """Reciprocal series 1 / self; needs an invertible constant term."""
        c = self.coeffs
        if c[0] == 0:
            raise ValueError("cannot invert a series with zero constant term")
        inv0 = _ONE / c[0]
        out = [inv0] + [_ZERO] * self.order
        for k in range(1, self.order + 1):
            acc = _ZERO
            for i in range(1, k + 1):
                if c[i]:
                    acc += c[i] * out[k - i]
            out[k] = -inv0 * acc
        return Series(out, order=self.order)

    def reversion(self) -> "Series":
        """Compositional inverse g with self(g) = g(self) = x.

        Requires a zero constant term and a nonzero linear coefficient.
        Newton iteration doubles the number of correct coefficients per
        round, so the loop is logarithmic in the order.
        """
        c = self.coeffs
        if c[0] != 0:
            raise ValueError("reversion needs a zero constant term")
        if self.order < 1 or c[1] == 0:
            raise ValueError("reversion needs a nonzero linear coefficient")
        order = self.order
        x = Series.x(order)
        df = self.derivative().pad(order)
        g = Series([0, _ONE / c[1]], order=order)
        for _ in range(order.bit_length() + 2):
            error = self.compose(g) - x
            if error.is_zero():
                return g
            g = g - error * df.compose(g).inverse()
        raise RuntimeError("reversion failed to stabilize")  # pragma: no cover


def solve_fixpoint(c: Series) -> Series:
    """The unique series d with constant term 1 and d = 1 + c(x * d).

    Iterating d -> 1 + c(x * d) from d = 1 gains at least one correct
    coefficient per pass, so at most order + 1 passes are needed.
    """
    if not isinstance(c, Series):
        raise TypeError("solve_fixpoint expects a Series")
    if c.coeffs[0] != 0:
        raise ValueError("the composed series must have zero constant term")
    d = Series.one(c.order)
    for _ in range(c.order + 2):
        nxt = c.compose(d.shift_up()) + 1
        if nxt == d:
            return d
        d = nxt
    raise RuntimeError("fixpoint iteration failed to stabilize")  # pragma: no cover


def render_text(f: Series) -> str:
    """Human form ``c0 + c1*x + c2*x^2 + ...``, fractions as ``p/q``."""
    parts = []
    for k, c in enumerate(f.coeffs):
        mag = c if (not parts or c >= 0) else -c
        term = str(mag) if k == 0 else (f"{mag}*x" if k == 1 else f"{mag}*x^{k}")
        if not parts:
            parts.append(term)
        else:
            parts.append(f"- {term}" if c < 0 else f"+ {term}")
    return " ".join(parts)
