"""Arithmetic in GF(2^r) with a precomputed trace table.

Field elements are plain ints in [0, q) with q = 2^r; bit k of an
element is the coefficient of x^k in its polynomial-basis
representative, so addition is XOR.  A :class:`FieldContext` fixes the
extension degree, an irreducible modulus polynomial, exp/log and
inverse tables, the trace table, the image of the Artin-Schreier map
x -> x^2 + x (sorted ascending, 0 first), and a distinguished element
b of trace 1.  Contexts are immutable after construction and safe to
share; every operation is a pure function of (context, arguments).

By default the modulus is the degree-r irreducible polynomial with the
smallest integer encoding and b is the smallest trace-one element.
These canonical choices make outputs reproducible; any irreducible
modulus of the right degree (and any trace-one b) may be supplied
instead, since fields of equal order are isomorphic and everything
built downstream is invariant under the choice.
"""

from __future__ import annotations

__all__ = [
    "FieldContext",
    "build_field",
    "is_irreducible",
    "smallest_irreducible",
    "irreducible_polys",
    "poly_str",
    "parse_poly",
    "polymod",
]

MAX_DEGREE = 16


def polymod(a: int, b: int) -> int:
    """Remainder of carry-less division of GF(2)[x] polynomial a by b != 0."""
    bl = b.bit_length()
    while a.bit_length() >= bl:
        a ^= b << (a.bit_length() - bl)
    return a


def _find_factor(f: int) -> int | None:
    """Smallest nontrivial divisor of f over GF(2), or None if irreducible."""
    deg = f.bit_length() - 1
    for d in range(1, deg // 2 + 1):
        for g in range(1 << d, 1 << (d + 1)):
            if polymod(f, g) == 0:
                return g
    return None


def is_irreducible(f: int) -> bool:
    """Trial-division irreducibility test for a GF(2)[x] polynomial."""
    return f.bit_length() >= 2 and _find_factor(f) is None


def irreducible_polys(r: int):
    """Yield the irreducible degree-r polynomials in increasing encoding order."""
    for f in range(1 << r, 1 << (r + 1)):
        if is_irreducible(f):
            yield f


def smallest_irreducible(r: int) -> int:
    """The canonical (smallest-encoding) irreducible polynomial of degree r."""
    return next(irreducible_polys(r))


def poly_str(f: int) -> str:
    """Render a polynomial bitmask as e.g. 'x^3+x+1'."""
    if f == 0:
        return "0"
    terms = []
    for k in range(f.bit_length() - 1, -1, -1):
        if f >> k & 1:
            terms.append("1" if k == 0 else "x" if k == 1 else f"x^{k}")
    return "+".join(terms)


def parse_poly(s: str) -> int:
    """Parse a polynomial given as hex (0x..), binary (0b..), decimal, or 'x^3+x+1'."""
    s = s.strip().replace(" ", "")
    if s.lower().startswith("0x"):
        return int(s, 16)
    if s.lower().startswith("0b"):
        return int(s, 2)
    if s.isdigit():
        return int(s)
    f = 0
    for term in s.lower().split("+"):
        if term == "1":
            f ^= 1
        elif term == "x":
            f ^= 2
        elif term.startswith("x^"):
            f ^= 1 << int(term[2:])
        else:
            raise ValueError(f"cannot parse polynomial term {term!r}")
    return f


def _factor_int(n: int) -> list[int]:
    """Distinct prime factors of n by trial division (n fits well below 2^17)."""
    primes = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            primes.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        primes.append(n)
    return primes


class FieldContext:
    """GF(2^r) with precomputed tables.

    Attributes
    ----------
    r, q : extension degree and field size 2^r.
    modulus : irreducible degree-r polynomial as an (r+1)-bit int.
    exp, log : discrete exp/log tables for a primitive element; ``exp``
        holds two periods so ``exp[log[x] + log[y]]`` needs no reduction.
    inv_table : multiplicative inverses, index 0 unused.
    trace_table : bytes, entry a = tr(a) in {0, 1}.
    lam_table : tuple, entry a = (-1)^tr(a) in {+1, -1}.
    theta : the image {a^2 + a}, sorted ascending (equals the trace-zero
        set; exactly q/2 elements, starting with 0).
    b : a fixed element outside theta, i.e. of trace 1.
    """

    def __init__(self, r: int, modulus: int | None = None, b: int | None = None):
        if not 1 <= r <= MAX_DEGREE:
            raise ValueError(f"extension degree must be in 1..{MAX_DEGREE}, got {r}")
        if modulus is None:
            modulus = smallest_irreducible(r)
        else:
            if modulus.bit_length() - 1 != r:
                raise ValueError(
                    f"modulus {poly_str(modulus)} has degree {modulus.bit_length() - 1}, need {r}"
                )
            factor = _find_factor(modulus)
            if factor is not None:
                raise ValueError(
                    f"modulus {poly_str(modulus)} is reducible (divisible by {poly_str(factor)})"
                )
        self.r = r
        self.q = 1 << r
        self.modulus = modulus

        self.exp, self.log = self._build_exp_log()
        qm1 = self.q - 1
        self.inv_table = (0,) + tuple(self.exp[qm1 - self.log[x]] for x in range(1, self.q))
        self.trace_table = self._build_trace_table()
        self.lam_table = tuple(1 - 2 * t for t in self.trace_table)
        self.theta = tuple(sorted({self.mul(a, a) ^ a for a in range(self.q)}))
        assert len(self.theta) == self.q // 2 and self.theta[0] == 0

        if b is None:
            b = self.trace_table.index(1)
        elif not 0 <= b < self.q or self.trace_table[b] != 1:
            raise ValueError(f"b must be a field element of trace 1, got {b:#x}")
        self.b = b

    # -- construction helpers -------------------------------------------------

    def _mul_raw(self, x: int, y: int) -> int:
        # shift-and-xor product, reduced by the modulus; no tables needed
        p = 0
        while y:
            if y & 1:
                p ^= x
            y >>= 1
            x <<= 1
            if x >> self.r:
                x ^= self.modulus
        return p

    def _pow_raw(self, x: int, n: int) -> int:
        p = 1
        while n:
            if n & 1:
                p = self._mul_raw(p, x)
            x = self._mul_raw(x, x)
            n >>= 1
        return p

    def _build_exp_log(self):
        q = self.q
        if q == 2:
            return (1, 1), (None, 0)
        qm1 = q - 1
        primes = _factor_int(qm1)
        for g in range(2, q):
            if all(self._pow_raw(g, qm1 // p) != 1 for p in primes):
                break
        else:  # pragma: no cover - every field has a primitive element
            raise AssertionError("no primitive element found")
        exp = [0] * (2 * qm1)
        log: list[int | None] = [None] * q
        v = 1
        for i in range(qm1):
            exp[i] = exp[i + qm1] = v
            log[v] = i
            v = self._mul_raw(v, g)
        assert v == 1
        return tuple(exp), tuple(log)

    def _build_trace_table(self) -> bytes:
        # tr is GF(2)-linear, so tr(v) is the parity of v & mask where
        # bit k of mask is the trace of the basis monomial x^k
        mask = 0
        for k in range(self.r):
            e = acc = 1 << k
            for _ in range(self.r - 1):
                e = self._mul_raw(e, e)
                acc ^= e
            assert acc <= 1
            mask |= acc << k
        return bytes((v & mask).bit_count() & 1 for v in range(self.q))

    # -- field operations -----------------------------------------------------

    def mul(self, x: int, y: int) -> int:
        """Product in GF(2^r)."""
        if x == 0 or y == 0:
            return 0
        return self.exp[self.log[x] + self.log[y]]

    def inv(self, x: int) -> int:
        """Multiplicative inverse of a nonzero element."""
        if x == 0:
            raise ValueError("0 has no multiplicative inverse")
        return self.inv_table[x]

    def pow(self, x: int, n: int) -> int:
        """x raised to an integer power n >= 0."""
        if x == 0:
            return 0 if n else 1
        return self.exp[self.log[x] * n % (self.q - 1)]

    def trace(self, x: int) -> int:
        """Trace to GF(2): x + x^2 + ... + x^(2^(r-1)), as 0 or 1."""
        return self.trace_table[x]

    def lam(self, x: int) -> int:
        """Canonical additive character (-1)^tr(x), as +1 or -1."""
        return self.lam_table[x]

    def elements(self) -> range:
        return range(self.q)

    def nonzero(self) -> range:
        return range(1, self.q)

    # -- presentation ----------------------------------------------------------

    @property
    def modulus_hex(self) -> str:
        return format(self.modulus, "#x")

    @property
    def modulus_str(self) -> str:
        return poly_str(self.modulus)

    def __repr__(self):
        return f"FieldContext(r={self.r}, modulus={self.modulus_str}, b={self.b:#x})"


def build_field(r: int, modulus: int | None = None, b: int | None = None) -> FieldContext:
    """Construct GF(2^r), with optional modulus and trace-one b overrides."""
    return FieldContext(r, modulus=modulus, b=b)
