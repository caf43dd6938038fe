"""Exact scalar arithmetic: rationals (default) and prime fields.

Every computation in the engine is exact.  Scalars are either
``fractions.Fraction`` or :class:`Fp` elements; both support the arithmetic
operators the rest of the code relies on (``+ - * / ==`` and truthiness).
"""

from fractions import Fraction


class Fp:
    """An element of the prime field F_p, normalized to ``0 <= v < p``."""

    __slots__ = ("v", "p")

    def __init__(self, v, p):
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, Fp):
            if other.p != self.p:
                raise ValueError("mixed characteristics %d and %d" % (self.p, other.p))
            return other.v
        if isinstance(other, int):
            return other % self.p
        return NotImplemented

    def __add__(self, other):
        w = self._coerce(other)
        if w is NotImplemented:
            return NotImplemented
        return Fp(self.v + w, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        w = self._coerce(other)
        if w is NotImplemented:
            return NotImplemented
        return Fp(self.v - w, self.p)

    def __rsub__(self, other):
        w = self._coerce(other)
        if w is NotImplemented:
            return NotImplemented
        return Fp(w - self.v, self.p)

    def __mul__(self, other):
        w = self._coerce(other)
        if w is NotImplemented:
            return NotImplemented
        return Fp(self.v * w, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        w = self._coerce(other)
        if w is NotImplemented:
            return NotImplemented
        return Fp(self.v * pow(w, -1, self.p), self.p)

    def __rtruediv__(self, other):
        w = self._coerce(other)
        if w is NotImplemented:
            return NotImplemented
        return Fp(w * pow(self.v, -1, self.p), self.p)

    def __neg__(self):
        return Fp(-self.v, self.p)

    def __eq__(self, other):
        if isinstance(other, Fp):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return "Fp(%d, %d)" % (self.v, self.p)


class Field:
    """Scalar field descriptor: rationals when ``char`` is None, else F_p."""

    __slots__ = ("char",)

    def __init__(self, char=None):
        if char is not None:
            if char < 2 or any(char % q == 0 for q in range(2, int(char**0.5) + 1)):
                raise ValueError("characteristic must be prime, got %r" % (char,))
        self.char = char

    def of(self, x):
        """Coerce an integer (or exact scalar) into this field."""
        if self.char is None:
            return Fraction(x) if isinstance(x, int) else x
        if isinstance(x, Fp):
            return x
        return Fp(x, self.char)

    @property
    def zero(self):
        return self.of(0)

    @property
    def one(self):
        return self.of(1)

    def scalar_to_str(self, x):
        if self.char is None:
            return str(x)
        return str(x.v)

    def scalar_from_str(self, s):
        if self.char is None:
            return Fraction(s)
        return Fp(int(s), self.char)

    def __eq__(self, other):
        return isinstance(other, Field) and self.char == other.char

    def __hash__(self):
        return hash(self.char)

    def __repr__(self):
        return "Field(%r)" % (self.char,)
