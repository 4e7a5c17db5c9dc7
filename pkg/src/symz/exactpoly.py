"""Exact polynomial arithmetic over the rationals.

Coefficients are Python ints or :class:`fractions.Fraction`; integral
fractions are collapsed to ints so that integer-coefficient work stays on
the fast path.  Polynomials are sparse maps from exponent tuples to nonzero
coefficients and are treated as immutable.
"""
from __future__ import annotations

import json
import operator
from fractions import Fraction
from functools import reduce
from math import lcm
from typing import Iterable, Mapping, Sequence

Rational = Fraction

_add = operator.add


def as_rational(x):
    """Coerce ints, Fractions and strings like ``"3/4"`` to an exact scalar."""
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, str):
        return as_rational(Fraction(x.strip()))
    raise TypeError(f"not an exact rational: {x!r}")


def _norm(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def format_rational(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def is_scalar(x) -> bool:
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


class MultiPoly:
    """Sparse polynomial in ``nvars`` variables with nonnegative exponents."""

    __slots__ = ("nvars", "terms", "_hash")
    _negative_ok = False

    def __init__(self, nvars: int, terms: Mapping | Iterable | None = None):
        if nvars < 0:
            raise ValueError("nvars must be nonnegative")
        items = terms.items() if isinstance(terms, Mapping) else (terms or ())
        d: dict = {}
        for exp, c in items:
            exp = tuple(int(e) for e in exp)
            if len(exp) != nvars:
                raise ValueError(f"exponent {exp} does not have length {nvars}")
            if not self._negative_ok and any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}; use LaurentPoly")
            d[exp] = d.get(exp, 0) + as_rational(c)
        self.nvars = nvars
        self.terms = {e: _norm(c) for e, c in d.items() if c != 0}
        self._hash = None

    @classmethod
    def _raw(cls, nvars, terms):
        obj = object.__new__(cls)
        obj.nvars = nvars
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def _clean(cls, nvars, terms):
        return cls._raw(nvars, {e: _norm(c) for e, c in terms.items() if c != 0})

    # constructors -----------------------------------------------------
    @classmethod
    def zero(cls, nvars: int):
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, c, nvars: int):
        c = as_rational(c)
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def var(cls, i: int, nvars: int, power: int = 1):
        exp = [0] * nvars
        exp[i] = power
        return cls(nvars, {tuple(exp): 1})

    @classmethod
    def monomial(cls, exp: Sequence[int], coeff=1):
        return cls(len(exp), {tuple(exp): coeff})

    # basic protocol ---------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and (0,) * self.nvars in self.terms)

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, 0)

    def coefficient(self, exp: Sequence[int]):
        return self.terms.get(tuple(exp), 0)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if is_scalar(other):
            if other == 0:
                return not self.terms
            return self.terms == {(0,) * self.nvars: other}
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def _result_cls(self, other):
        if isinstance(other, LaurentPoly) or isinstance(self, LaurentPoly):
            return LaurentPoly
        return MultiPoly

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise ValueError(f"nvars mismatch: {self.nvars} vs {other.nvars}")
            return other
        if is_scalar(other):
            return type(self).constant(other, self.nvars)
        return None

    # arithmetic -------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        cls = self._result_cls(other)
        a, b = (self.terms, other.terms) if len(self.terms) >= len(other.terms) else (other.terms, self.terms)
        out = dict(a)
        for e, c in b.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = _norm(v)
            else:
                out.pop(e, None)
        return cls._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return type(self)._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, c):
        c = as_rational(c)
        if c == 0:
            return type(self).zero(self.nvars)
        return type(self)._raw(self.nvars, {e: _norm(v * c) for e, v in self.terms.items()})

    def __mul__(self, other):
        if is_scalar(other):
            return self.scale(other)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        cls = self._result_cls(other)
        a, b = self.terms, other.terms
        if not a or not b:
            return cls.zero(self.nvars)
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        get = out.get
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = tuple(map(_add, ea, eb))
                out[e] = get(e, 0) + ca * cb
        return cls._clean(self.nvars, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if is_scalar(other):
            return self.scale(Fraction(1) / other)
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers")
        result = type(self).constant(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # structure --------------------------------------------------------
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, i: int) -> int:
        return max((e[i] for e in self.terms), default=-1)

    def sorted_terms(self) -> list:
        """Terms in graded lexicographic descending order."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def leading_term(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return self.sorted_terms()[0]

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.terms.values())

    def permute(self, perm: Sequence[int]):
        """Rename variable i to perm[i]."""
        out = {}
        for e, c in self.terms.items():
            ne = [0] * self.nvars
            for i, k in enumerate(e):
                ne[perm[i]] = k
            out[tuple(ne)] = c
        return type(self)._raw(self.nvars, out)

    def is_symmetric(self) -> bool:
        terms = self.terms
        for i in range(self.nvars - 1):
            for e, c in terms.items():
                if e[i] == e[i + 1]:
                    continue
                s = e[:i] + (e[i + 1], e[i]) + e[i + 2:]
                if terms.get(s) != c:
                    return False
        return True

    def extend(self, nvars: int, offset: int = 0):
        """Embed into a ring with more variables, shifting indices by ``offset``."""
        if nvars < self.nvars + offset:
            raise ValueError("target ring too small")
        pre, post = (0,) * offset, (0,) * (nvars - self.nvars - offset)
        return type(self)._raw(nvars, {pre + e + post: c for e, c in self.terms.items()})

    def specialize(self, i: int, value):
        """Set variable i to a scalar and drop it from the ring."""
        value = as_rational(value)
        out: dict = {}
        for e, c in self.terms.items():
            ne = e[:i] + e[i + 1:]
            out[ne] = out.get(ne, 0) + c * Fraction(value) ** e[i] if e[i] else out.get(ne, 0) + c
        return type(self)._clean(self.nvars - 1, out)

    def evaluate(self, point: Sequence):
        if len(point) != self.nvars:
            raise ValueError(f"need {self.nvars} values, got {len(point)}")
        point = [as_rational(v) for v in point]
        cache: list[dict] = [{} for _ in point]
        total = 0
        for e, c in self.terms.items():
            term = c
            for i, k in enumerate(e):
                if k:
                    pw = cache[i].get(k)
                    if pw is None:
                        pw = Fraction(point[i]) ** k
                        cache[i][k] = pw
                    term = term * pw
            total += term
        return _norm(Fraction(total)) if not isinstance(total, int) else total

    __call__ = evaluate

    def compose(self, images: Sequence, nvars: int | None = None):
        """Substitute variable i by ``images[i]`` (ring elements or scalars)."""
        if len(images) != self.nvars:
            raise ValueError("one image per variable required")
        if nvars is None:
            nvars = next((im.nvars for im in images if isinstance(im, MultiPoly)), 0)
        cls = LaurentPoly if any(isinstance(im, LaurentPoly) for im in images) else MultiPoly
        imgs = [im if isinstance(im, MultiPoly) else cls.constant(im, nvars) for im in images]
        powers: list[dict] = [{0: cls.constant(1, nvars)} for _ in imgs]

        def pw(i, k):
            cache = powers[i]
            if k not in cache:
                cache[k] = pw(i, k - 1) * imgs[i]
            return cache[k]

        total = cls.zero(nvars)
        for e, c in self.terms.items():
            term = cls.constant(c, nvars)
            for i, k in enumerate(e):
                if k:
                    term = term * pw(i, k)
            total = total + term
        return total

    def div_linear(self, j: int, k: int):
        """Exact quotient by ``(z_j - z_k)``; raises if the remainder is nonzero."""
        n = self.nvars
        cls = type(self)
        coeffs: dict[int, dict] = {}
        for e, c in self.terms.items():
            d = e[j]
            coeffs.setdefault(d, {})[e[:j] + (0,) + e[j + 1:]] = c
        if not coeffs:
            return cls.zero(n)
        top = max(coeffs)
        root = cls.var(k, n)
        zj = cls.var(j, n)
        quotient = cls.zero(n)
        carry = cls.zero(n)
        for d in range(top, 0, -1):
            carry = cls._raw(n, dict(coeffs.get(d, {}))) + root * carry
            quotient = quotient + carry * zj ** (d - 1)
        remainder = cls._raw(n, dict(coeffs.get(0, {}))) + root * carry
        if remainder:
            raise ArithmeticError(f"not divisible by (z{j + 1} - z{k + 1})")
        return quotient

    # presentation -----------------------------------------------------
    def to_str(self, var: str = "z") -> str:
        if not self.terms:
            return "0"
        pieces = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                f"{var}{i + 1}" if k == 1 else f"{var}{i + 1}^{k}" for i, k in enumerate(e) if k
            )
            cs = str(c) if not isinstance(c, Fraction) else f"({c})"
            if not mono:
                body = cs
            elif c == 1:
                body = mono
            elif c == -1:
                body = "-" + mono
            else:
                body = f"{cs}*{mono}"
            pieces.append(body)
        out = pieces[0]
        for p in pieces[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"{type(self).__name__}({self.nvars}, {self.to_str()})"

    def to_json(self) -> dict:
        terms = []
        for e, c in self.sorted_terms():
            c = Fraction(c)
            terms.append({"exp": list(e), "num": str(c.numerator), "den": str(c.denominator)})
        return {"nvars": self.nvars, "terms": terms}

    @classmethod
    def from_json(cls, data) -> "MultiPoly":
        if isinstance(data, str):
            data = json.loads(data)
        nvars = int(data["nvars"])
        terms = [(t["exp"], Fraction(int(t["num"]), int(t.get("den", "1")))) for t in data["terms"]]
        negative = any(e < 0 for t in data["terms"] for e in t["exp"])
        target = LaurentPoly if negative or cls is LaurentPoly else MultiPoly
        return target(nvars, terms)

    def dumps(self) -> str:
        return json.dumps(self.to_json())


class LaurentPoly(MultiPoly):
    """Sparse Laurent polynomial: exponents may be negative."""

    __slots__ = ()
    _negative_ok = True

    def to_str(self, var: str = "x") -> str:
        return super().to_str(var)


def poly_arith(op: str, a: MultiPoly, b):
    """Dispatch ``add|sub|mul|scale`` on two operands."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "scale":
        return a.scale(b)
    raise ValueError(f"unknown op {op!r}")


def is_symmetric(P: MultiPoly) -> bool:
    return P.is_symmetric()


def substitute_symplectic(P: MultiPoly, pairing: Sequence, n: int) -> LaurentPoly:
    """Replace each variable of P by a monomial ``x_j^{+-1}`` or by 1.

    ``pairing[i]`` is ``(j, s)`` with 0-based j and s in {+1, -1}, or None for
    the constant 1.
    """
    if len(pairing) != P.nvars:
        raise ValueError("pairing must cover every variable")
    out: dict = {}
    zero = [0] * n
    for e, c in P.terms.items():
        ne = list(zero)
        for i, k in enumerate(e):
            if k and pairing[i] is not None:
                j, s = pairing[i]
                ne[j] += s * k
        key = tuple(ne)
        out[key] = out.get(key, 0) + c
    return LaurentPoly._clean(n, out)


def symplectic_pairing(n: int, odd: bool = False) -> list:
    """Standard pairing ``(x_1..x_n, x_1^-1..x_n^-1[, 1])``."""
    pairing = [(j, 1) for j in range(n)] + [(j, -1) for j in range(n)]
    if odd:
        pairing.append(None)
    return pairing


def zhukovsky_images(n: int) -> list[LaurentPoly]:
    """``x_j + 1/x_j`` for j = 1..n as Laurent polynomials."""
    out = []
    for j in range(n):
        up = [0] * n
        dn = [0] * n
        up[j], dn[j] = 1, -1
        out.append(LaurentPoly(n, {tuple(up): 1, tuple(dn): 1}))
    return out


class UniPoly:
    """Dense univariate polynomial, coefficients listed from degree 0 upward."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def x(cls):
        return cls((0, 1))

    @classmethod
    def from_roots(cls, roots: Iterable, leading=1):
        p = cls((leading,))
        for r in roots:
            p = p * cls((-as_rational(r), 1))
        return p

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if is_scalar(other):
            return self.coeffs == ((other,) if other else ())
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def _coerce(self, other):
        if isinstance(other, UniPoly):
            return other
        if is_scalar(other):
            return UniPoly((other,))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return UniPoly((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return UniPoly(out)

    __rmul__ = __mul__

    def __call__(self, x):
        """Horner evaluation at any ring element (scalar or polynomial)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        if isinstance(acc, Fraction):
            return _norm(acc)
        return acc

    def compose(self, other: "UniPoly") -> "UniPoly":
        acc = UniPoly()
        for c in reversed(self.coeffs):
            acc = acc * other + c
        return acc

    def divmod(self, other: "UniPoly"):
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        dq = other.degree()
        lead = Fraction(other.leading())
        q = [0] * max(0, len(rem) - dq)
        for i in range(len(rem) - 1 - dq, -1, -1):
            c = rem[i + dq] / lead
            q[i] = c
            if c:
                for j, oc in enumerate(other.coeffs):
                    rem[i + j] -= c * oc
        return UniPoly(q), UniPoly(rem[:dq])

    def is_palindromic(self) -> bool:
        return self.coeffs == tuple(reversed(self.coeffs))

    def to_multipoly(self, var: int = 0, nvars: int = 1) -> MultiPoly:
        terms = {}
        for k, c in enumerate(self.coeffs):
            if c:
                e = [0] * nvars
                e[var] = k
                terms[tuple(e)] = c
        return MultiPoly(nvars, terms)

    def to_str(self, var: str = "u") -> str:
        return self.to_multipoly().to_str(var).replace(f"{var}1", var)

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"UniPoly({list(self.coeffs)})"


class PolyMatrix:
    """Rectangular matrix whose entries are scalars or MultiPoly values."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable]):
        self.rows = [list(r) for r in rows]
        widths = {len(r) for r in self.rows}
        if len(widths) > 1:
            raise ValueError("ragged matrix")

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), (len(self.rows[0]) if self.rows else 0)

    def __getitem__(self, idx):
        i, j = idx
        return self.rows[i][j]

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "PolyMatrix":
        return PolyMatrix([[self.rows[i][j] for j in cols] for i in rows])

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(list(map(list, zip(*self.rows))))

    def det(self):
        return det_exact(self)

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        n, k = self.shape
        k2, m = other.shape
        if k != k2:
            raise ValueError("shape mismatch")
        return PolyMatrix(
            [[sum((self.rows[i][t] * other.rows[t][j] for t in range(k)), 0) for j in range(m)] for i in range(n)]
        )


def _bareiss_int(a: list[list[int]]) -> int:
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * akk - aik * rk[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def _det_scalar(rows) -> int | Fraction:
    n = len(rows)
    if n == 0:
        return 1
    # clear denominators row by row, then run integer Bareiss
    scale = Fraction(1)
    ints = []
    for r in rows:
        den = reduce(lcm, (Fraction(x).denominator for x in r), 1)
        scale *= den
        ints.append([int(Fraction(x) * den) for x in r])
    return _norm(Fraction(_bareiss_int(ints)) / scale)


def _det_laplace(rows, nvars):
    n = len(rows)
    one = MultiPoly.constant(1, nvars)
    memo: dict[int, object] = {}

    def minor(r, mask):
        if r == n:
            return one
        hit = memo.get(mask)
        if hit is not None:
            return hit
        total = MultiPoly.zero(nvars)
        sign = 1
        row = rows[r]
        for c in range(n):
            if mask >> c & 1:
                entry = row[c]
                if entry != 0:
                    sub = minor(r + 1, mask & ~(1 << c))
                    if sub:
                        prod = sub * entry
                        total = total + prod if sign > 0 else total - prod
                sign = -sign
        memo[mask] = total
        return total

    return minor(0, (1 << n) - 1)


def det_exact(M, nvars: int | None = None):
    """Exact determinant.

    Scalar matrices use denominator clearing plus integer Bareiss
    elimination; matrices with polynomial entries use Laplace expansion
    memoized on column subsets.  An empty matrix has determinant 1.
    """
    rows = M.rows if isinstance(M, PolyMatrix) else [list(r) for r in M]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant of a non-square matrix")
    polys = [x for r in rows for x in r if isinstance(x, MultiPoly)]
    if not polys:
        if nvars is None:
            return _det_scalar(rows)
        return MultiPoly.constant(_det_scalar(rows), nvars)
    nv = polys[0].nvars
    if nvars is not None and nvars != nv:
        raise ValueError("nvars mismatch")
    if any(p.nvars != nv for p in polys):
        raise ValueError("entries live in different rings")
    return _det_laplace(rows, nv)


def det_cofactor(rows):
    """Naive first-row cofactor expansion; slow oracle for tests."""
    rows = [list(r) for r in rows]
    n = len(rows)
    if n == 0:
        return 1
    total = 0
    for c in range(n):
        sub = [r[:c] + r[c + 1:] for r in rows[1:]]
        term = rows[0][c] * det_cofactor(sub)
        total = total + term if c % 2 == 0 else total - term
    return total
