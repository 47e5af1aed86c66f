"""Exact exterior algebra over the dual of an n-dimensional space.

Basis monomials e^{i1..ik} (ascending indices) are encoded as bitmasks.
Coefficients are :class:`fractions.Fraction` for real forms and
:class:`GaussianRational` for complexified ones.  Zero coefficients are
never stored, so structural equality is semantic equality.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from numbers import Rational
from typing import Iterable, Iterator, Mapping

MAX_DIM = 64


class GaussianRational:
    """Exact element re + i*im of Q(i)."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @staticmethod
    def _lift(x):
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, (int, Rational)):
            return GaussianRational(x, 0)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        den = o.re * o.re + o.im * o.im
        if den == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        num = self * o.conjugate()
        return GaussianRational(num.re / den, num.im / den)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, k: int):
        if k < 0:
            return GaussianRational(1) / self ** (-k)
        out = GaussianRational(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    @property
    def real(self) -> Fraction:
        return self.re

    @property
    def imag(self) -> Fraction:
        return self.im

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            if isinstance(other, complex):
                return complex(self) == other
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"({self.re}{sign}{abs(self.im)}i)"


I = GaussianRational(0, 1)


def conj(x):
    """Complex conjugate of an exact scalar (identity on rationals)."""
    if isinstance(x, GaussianRational):
        return x.conjugate()
    return x


def is_real_scalar(x) -> bool:
    return not isinstance(x, GaussianRational) or x.im == 0


def to_gaussian(x) -> GaussianRational:
    if isinstance(x, GaussianRational):
        return x
    return GaussianRational(x, 0)


def as_scalar(x):
    """Normalize ints/floats-free inputs to Fraction or GaussianRational."""
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, float):
        raise TypeError("floating-point coefficients are not allowed in exact forms")
    if isinstance(x, complex):
        raise TypeError("use GaussianRational for complex coefficients")
    return Fraction(x)


# ---------------------------------------------------------------------------
# bitmask helpers

def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def indices_of(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def wedge_sign(a: int, b: int) -> int:
    """Sign of e^A ^ e^B relative to e^{A u B}; 0 if A and B overlap."""
    if a & b:
        return 0
    # count pairs (i in A, j in B) with i > j
    swaps = 0
    bb = b
    while bb:
        low = bb & -bb
        swaps += popcount(a & ~((low << 1) - 1))
        bb ^= low
    return -1 if swaps & 1 else 1


def sort_sign(seq: tuple[int, ...]) -> int:
    """Sign of the permutation sorting ``seq``; 0 on a repeated entry."""
    if len(set(seq)) != len(seq):
        return 0
    inv = 0
    for x in range(len(seq)):
        for y in range(x + 1, len(seq)):
            if seq[x] > seq[y]:
                inv += 1
    return -1 if inv & 1 else 1


def monomials(dim: int, degree: int) -> list[int]:
    """Masks of all degree-k monomials in lexicographic index order."""
    return [mask_of(c) for c in combinations(range(dim), degree)]


# ---------------------------------------------------------------------------

class _Graded:
    """Shared sparse storage for forms and multivectors."""

    __slots__ = ("dim", "degree", "_c")

    def __init__(self, dim: int, degree: int, coeffs: Mapping[int, object] | None = None):
        if not 0 < dim <= MAX_DIM:
            raise ValueError(f"dimension must be in 1..{MAX_DIM}, got {dim}")
        if not 0 <= degree <= dim:
            raise ValueError(f"degree {degree} out of range for dimension {dim}")
        store = {}
        full = (1 << dim) - 1
        for m, v in (coeffs or {}).items():
            if m & ~full or popcount(m) != degree:
                raise ValueError(f"key {indices_of(m)} incompatible with degree {degree}, dim {dim}")
            v = as_scalar(v)
            if v:
                store[m] = v
        self.dim = dim
        self.degree = degree
        self._c = store

    @classmethod
    def _raw(cls, dim, degree, store):
        obj = object.__new__(cls)
        obj.dim = dim
        obj.degree = degree
        obj._c = store
        return obj

    @classmethod
    def zero(cls, dim: int, degree: int):
        return cls._raw(dim, degree, {})

    @classmethod
    def from_terms(cls, dim: int, terms: Mapping[tuple[int, ...], object]):
        """Build from index tuples (any order; the permutation sign is applied)."""
        degree = None
        store: dict[int, object] = {}
        for idx, v in terms.items():
            idx = tuple(idx)
            if degree is None:
                degree = len(idx)
            elif len(idx) != degree:
                raise ValueError("mixed degrees in from_terms")
            s = sort_sign(idx)
            if s == 0:
                continue
            m = mask_of(idx)
            store[m] = store.get(m, 0) + s * as_scalar(v)
        if degree is None:
            raise ValueError("from_terms needs at least one term; use zero()")
        return cls(dim, degree, store)

    @classmethod
    def basis(cls, dim: int, indices: Iterable[int], coeff=1):
        return cls.from_terms(dim, {tuple(indices): coeff})

    @classmethod
    def scalar(cls, dim: int, value):
        return cls(dim, 0, {0: value})

    # -- access -------------------------------------------------------------
    @property
    def coeffs(self) -> dict[int, object]:
        return dict(self._c)

    def items(self):
        return self._c.items()

    def terms(self) -> Iterator[tuple[tuple[int, ...], object]]:
        for m in sorted(self._c, key=indices_of):
            yield indices_of(m), self._c[m]

    def coeff(self, indices: Iterable[int]):
        idx = tuple(indices)
        s = sort_sign(idx)
        if s == 0:
            return Fraction(0)
        return s * self._c.get(mask_of(idx), Fraction(0))

    def __bool__(self):
        return bool(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def __len__(self):
        return len(self._c)

    # -- vector space structure --------------------------------------------
    def _check(self, other):
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if other.dim != self.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __add__(self, other):
        self._check(other)
        if other.degree != self.degree:
            raise ValueError("cannot add elements of different degree")
        store = dict(self._c)
        for m, v in other._c.items():
            w = store.get(m, 0) + v
            if w:
                store[m] = w
            else:
                store.pop(m, None)
        return self._raw(self.dim, self.degree, store)

    def __neg__(self):
        return self._raw(self.dim, self.degree, {m: -v for m, v in self._c.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, s):
        if isinstance(s, _Graded):
            return NotImplemented
        s = as_scalar(s)
        if not s:
            return self.zero(self.dim, self.degree)
        return self._raw(self.dim, self.degree, {m: v * s for m, v in self._c.items()})

    __rmul__ = __mul__

    def __truediv__(self, s):
        s = as_scalar(s)
        return self._raw(self.dim, self.degree, {m: v / s for m, v in self._c.items()})

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.dim == other.dim and self.degree == other.degree and self._c == other._c

    def __hash__(self):
        return hash((type(self).__name__, self.dim, self.degree, frozenset(self._c.items())))

    # -- scalars ------------------------------------------------------------
    def is_real(self) -> bool:
        return all(is_real_scalar(v) for v in self._c.values())

    def conj(self):
        return self._raw(self.dim, self.degree, {m: conj(v) for m, v in self._c.items()})

    def complexify(self):
        """Embed rational coefficients into Q(i)."""
        return self._raw(self.dim, self.degree, {m: to_gaussian(v) for m, v in self._c.items()})

    def real_part(self):
        store = {}
        for m, v in self._c.items():
            r = v.re if isinstance(v, GaussianRational) else v
            if r:
                store[m] = Fraction(r)
        return self._raw(self.dim, self.degree, store)

    def imag_part(self):
        store = {}
        for m, v in self._c.items():
            if isinstance(v, GaussianRational) and v.im:
                store[m] = v.im
        return self._raw(self.dim, self.degree, store)

    def to_real(self):
        """Drop the (necessarily zero) imaginary parts; error if not real."""
        if not self.is_real():
            raise ValueError("element has nonzero imaginary part")
        return self.real_part()

    # -- products -----------------------------------------------------------
    def wedge(self, other):
        self._check(other)
        deg = self.degree + other.degree
        if deg > self.dim:
            # past the top exterior power: identically zero, kept in top degree
            return self.zero(self.dim, self.dim)
        store: dict[int, object] = {}
        for a, x in self._c.items():
            for b, y in other._c.items():
                s = wedge_sign(a, b)
                if s:
                    m = a | b
                    w = store.get(m, 0) + (x * y if s > 0 else -(x * y))
                    if w:
                        store[m] = w
                    else:
                        store.pop(m, None)
        return self._raw(self.dim, deg, store)

    __xor__ = wedge

    def __repr__(self):
        if not self._c:
            return f"{type(self).__name__}(0, dim={self.dim}, deg={self.degree})"
        return f"{type(self).__name__}({self.pretty()})"

    def pretty(self, names: list[str] | None = None, sym: str = "e") -> str:
        if not self._c:
            return "0"
        parts = []
        for idx, v in self.terms():
            if names is not None:
                label = "^".join(names[i] for i in idx) if idx else "1"
            else:
                label = f"{sym}{''.join(str(i + 1) for i in idx)}" if idx else "1"
            parts.append(f"{v}*{label}")
        return " + ".join(parts)


class Form(_Graded):
    """Element of the exterior algebra of the dual space."""

    __slots__ = ()


class Multivector(_Graded):
    """Element of the exterior algebra of the space itself."""

    __slots__ = ()


def covector(dim: int, coords: Iterable) -> Form:
    return Form(dim, 1, {1 << i: c for i, c in enumerate(coords)})


def vector(dim: int, coords: Iterable) -> Multivector:
    return Multivector(dim, 1, {1 << i: c for i, c in enumerate(coords)})


def basis_vector(dim: int, i: int) -> Multivector:
    return Multivector(dim, 1, {1 << i: 1})


def basis_form(dim: int, *indices: int, coeff=1) -> Form:
    return Form.from_terms(dim, {tuple(indices): coeff})


def coords(v: _Graded) -> tuple:
    """Dense coordinate tuple of a degree-1 element."""
    if v.degree != 1:
        raise ValueError("coords() needs a degree-1 element")
    out = [Fraction(0)] * v.dim
    for m, c in v.items():
        out[m.bit_length() - 1] = c
    return tuple(out)


def wedge(a: Form, b: Form) -> Form:
    return a.wedge(b)


def wedge_all(factors: Iterable[Form], dim: int | None = None) -> Form:
    out = None
    for f in factors:
        out = f if out is None else out.wedge(f)
    if out is None:
        if dim is None:
            raise ValueError("empty product needs a dimension")
        return Form.scalar(dim, 1)
    return out


def _det(rows: list[list]):
    """Exact determinant by fraction-aware elimination (small k)."""
    n = len(rows)
    a = [list(r) for r in rows]
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        piv = a[c][c]
        det = det * piv
        for r in range(c + 1, n):
            if a[r][c]:
                f = a[r][c] / piv
                for k in range(c, n):
                    a[r][k] = a[r][k] - f * a[c][k]
    return det


def evaluate(a: Form, *vectors) -> object:
    """Evaluate a k-form on k vectors (determinant convention).

    Vectors may be degree-1 :class:`Multivector` objects or coordinate
    sequences.
    """
    if len(vectors) != a.degree:
        raise ValueError(f"arity mismatch: form of degree {a.degree} given {len(vectors)} vectors")
    cols = []
    for v in vectors:
        if isinstance(v, _Graded):
            if v.dim != a.dim:
                raise ValueError("dimension mismatch")
            cols.append(coords(v))
        else:
            v = tuple(v)
            if len(v) != a.dim:
                raise ValueError("dimension mismatch")
            cols.append(v)
    if a.degree == 0:
        return a._c.get(0, Fraction(0))
    total = Fraction(0)
    for m, c in a._c.items():
        idx = indices_of(m)
        minor = [[cols[j][i] for j in range(len(cols))] for i in idx]
        d = _det(minor)
        if d:
            total = total + c * d
    return total


def complexify(a: _Graded):
    return a.complexify()


def pullback(a: Form, matrix: list[list]) -> Form:
    """Pull a form back along the linear map with the given matrix.

    ``matrix[i][j]`` is the i-th coordinate of the image of e_j, so the
    1-form e^i pulls back to sum_j matrix[i][j] e^j.
    """
    n = a.dim
    pulled = {}

    def one(i):
        f = pulled.get(i)
        if f is None:
            f = Form(n, 1, {1 << j: matrix[i][j] for j in range(n) if matrix[i][j]})
            pulled[i] = f
        return f

    out = Form.zero(n, a.degree)
    for m, c in a._c.items():
        term = wedge_all((one(i) for i in indices_of(m)), dim=n)
        out = out + term * c
    return out
