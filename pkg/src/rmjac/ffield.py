"""Exact arithmetic: prime fields, small extension fields, dense polynomials.

Coefficient domains share one informal protocol (zero/one/add/sub/mul/neg/
eq/is_zero/from_int/pow, plus inv/div on fields and exact_div everywhere it
is meaningful).  Elements are plain Python values: ints for F_p, tuples for
F_{p^k}, Fraction for Q, and lists of coefficients (low-to-high) for
polynomials.  All arithmetic goes through the domain object, so rings stack:
PolyRing(PrimeField(3), "T") models F_3[T] and PolyRing of that models
F_3[T][x], which is how sextics with T-dependent coefficients are held.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .errors import DivisionByZero, NotSquarefree, Unsupported

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n):
    """Deterministic Miller-Rabin; exact for every n below 3.3e24."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class PrimeField:
    """F_p for odd p; elements are ints in [0, p)."""

    def __init__(self, p):
        if not is_prime(p):
            raise ValueError("%r is not prime" % (p,))
        if p == 2:
            raise Unsupported("characteristic 2 arithmetic is out of scope here")
        self.p = p
        self.characteristic = p
        self.order = p
        self.zero = 0
        self.one = 1

    def __repr__(self):
        return "F_%d" % self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def from_int(self, n):
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def eq(self, a, b):
        return (a - b) % self.p == 0

    def is_zero(self, a):
        return a % self.p == 0

    def inv(self, a):
        if a % self.p == 0:
            raise DivisionByZero("inverse of 0 in %r" % self)
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    exact_div = div

    def pow(self, a, e):
        return pow(a, e, self.p)

    def elements(self):
        return range(self.p)

    def is_square(self, a):
        """Euler's criterion; 0 counts as a square."""
        a %= self.p
        return a == 0 or pow(a, (self.p - 1) // 2, self.p) == 1

    def sqrt(self, a):
        """Smallest square root of a, or None.  Brute scan: desk-scale p only."""
        a %= self.p
        for r in range((self.p + 1) // 2 + 1):
            if r * r % self.p == a:
                return r
        return None

    def fmt(self, a):
        return str(a % self.p)

    def to_json(self, a):
        return str(a % self.p)

    def from_json(self, s):
        return int(s) % self.p


class RationalField:
    """Q via fractions.Fraction."""

    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def __repr__(self):
        return "Q"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("RationalField")

    def from_int(self, n):
        return Fraction(n)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def eq(self, a, b):
        return a == b

    def is_zero(self, a):
        return a == 0

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of 0 in Q")
        return 1 / Fraction(a)

    def div(self, a, b):
        if b == 0:
            raise DivisionByZero("division by 0 in Q")
        return Fraction(a) / b

    exact_div = div

    def pow(self, a, e):
        return Fraction(a) ** e

    def fmt(self, a):
        return str(a)

    to_json = fmt

    def from_json(self, s):
        return Fraction(s)


QQ = RationalField()


class ExtField:
    """F_{p^k} as F_p[g]/(m(g)); elements are k-tuples of ints, low-to-high.

    The modulus is the lexicographically first monic irreducible of degree k
    (scanning constant term fastest), so element encodings are stable across
    runs.  Irreducibility of the modulus is established by this module's own
    test (Rabin: g^(p^k) = g mod m and gcd(g^(p^(k/r)) - g, m) = 1 for prime
    r | k), not taken on faith.
    """

    def __init__(self, p, k, modulus=None):
        self.base = PrimeField(p)
        self.p = p
        self.k = k
        self.characteristic = p
        self.order = p**k
        if modulus is None:
            modulus = self._find_modulus()
        else:
            modulus = tuple(c % p for c in modulus)
            if len(modulus) != k + 1 or modulus[-1] != 1:
                raise ValueError("modulus must be monic of degree k")
            if not self._irreducible(list(modulus)):
                raise ValueError("modulus is reducible")
        self.modulus = modulus
        self.zero = (0,) * k
        self.one = tuple([1] + [0] * (k - 1))

    def __repr__(self):
        return "F_%d^%d" % (self.p, self.k)

    def __eq__(self, other):
        return (
            isinstance(other, ExtField)
            and other.p == self.p
            and other.k == self.k
            and other.modulus == self.modulus
        )

    def __hash__(self):
        return hash(("ExtField", self.p, self.k, self.modulus))

    def _irreducible(self, m):
        R = PolyRing(self.base, "g")
        k = len(m) - 1
        if k == 1:
            return True
        x = [0, 1]
        if not R.eq(poly_pow_mod(R, x, self.p**k, m), poly_mod(R, x, m)):
            return False
        for r in set(_prime_divisors(k)):
            h = R.sub(poly_pow_mod(R, x, self.p ** (k // r), m), x)
            if R.degree(poly_gcd(R, h, m)) != 0:
                return False
        return True

    def _find_modulus(self):
        if self.k == 1:
            return (0, 1)
        for tail in itertools.product(range(self.p), repeat=self.k):
            m = list(tail[::-1]) + [1]
            if self._irreducible(m):
                return tuple(m)
        raise AssertionError("no irreducible modulus found")  # unreachable

    def _reduce(self, cs):
        # schoolbook reduction of an int list mod the monic modulus
        cs = [c % self.p for c in cs]
        m = self.modulus
        for i in range(len(cs) - 1, self.k - 1, -1):
            c = cs[i]
            if c:
                for j in range(self.k):
                    cs[i - self.k + j] = (cs[i - self.k + j] - c * m[j]) % self.p
            cs[i] = 0
        return tuple(cs[: self.k]) if len(cs) >= self.k else tuple(
            cs + [0] * (self.k - len(cs))
        )

    def from_int(self, n):
        return tuple([n % self.p] + [0] * (self.k - 1))

    def from_base(self, a):
        return self.from_int(a)

    def gen(self):
        if self.k == 1:
            return self.from_int(self.modulus[0] and -self.modulus[0])
        return tuple([0, 1] + [0] * (self.k - 2))

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def neg(self, a):
        return tuple((-x) % self.p for x in a)

    def mul(self, a, b):
        prod = [0] * (2 * self.k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        return self._reduce(prod)

    def eq(self, a, b):
        return a == b

    def is_zero(self, a):
        return all(c == 0 for c in a)

    def inv(self, a):
        if self.is_zero(a):
            raise DivisionByZero("inverse of 0 in %r" % self)
        # extended Euclid in F_p[g]
        R = PolyRing(self.base, "g")
        r0, r1 = list(self.modulus), [c for c in a]
        s0, s1 = [], [1]
        r1 = R.normalize(r1)
        while R.degree(r1) > 0:
            q, rem = poly_divmod(R, r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, R.sub(s0, R.mul(q, s1))
        c = self.base.inv(r1[0])
        out = [self.base.mul(c, x) for x in s1]
        return self._reduce(out)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    exact_div = div

    def pow(self, a, e):
        if e < 0:
            return self.pow(self.inv(a), -e)
        out = self.one
        base = a
        while e:
            if e & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            e >>= 1
        return out

    def frobenius(self, a):
        return self.pow(a, self.p)

    def elements(self):
        for tup in itertools.product(range(self.p), repeat=self.k):
            yield tup

    def is_square(self, a):
        if self.is_zero(a):
            return True
        return self.eq(self.pow(a, (self.order - 1) // 2), self.one)

    def fmt(self, a):
        terms = []
        for i, c in enumerate(a):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                head = "" if c == 1 else str(c)
                terms.append(head + ("g" if i == 1 else "g^%d" % i))
        return " + ".join(terms) if terms else "0"

    def to_json(self, a):
        return [str(c) for c in a]

    def from_json(self, v):
        return tuple(int(c) % self.p for c in v) if isinstance(v, list) else self.from_int(int(v))


def _prime_divisors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class PolyRing:
    """Dense univariate polynomials over a coefficient domain.

    Elements are plain lists, low-to-high, with no trailing zeros; [] is the
    zero polynomial and degree() reports -1 for it (standing in for -inf).
    The ring object itself satisfies the domain protocol, so PolyRing can be
    stacked for F_p[T][x].
    """

    def __init__(self, dom, var="x"):
        self.dom = dom
        self.var = var
        self.characteristic = dom.characteristic
        self.zero = []
        self.one = [dom.one]

    def __repr__(self):
        return "%r[%s]" % (self.dom, self.var)

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing) and other.dom == self.dom and other.var == self.var
        )

    def __hash__(self):
        return hash(("PolyRing", self.dom, self.var))

    def normalize(self, cs):
        n = len(cs)
        while n > 0 and self.dom.is_zero(cs[n - 1]):
            n -= 1
        return cs[:n]

    def degree(self, f):
        return len(f) - 1

    def lc(self, f):
        if not f:
            raise ValueError("zero polynomial has no leading coefficient")
        return f[-1]

    def coeff(self, f, i):
        return f[i] if 0 <= i < len(f) else self.dom.zero

    def from_int(self, n):
        c = self.dom.from_int(n)
        return [c] if not self.dom.is_zero(c) else []

    def const(self, c):
        return [c] if not self.dom.is_zero(c) else []

    def gen(self):
        return [self.dom.zero, self.dom.one]

    def add(self, f, g):
        n = max(len(f), len(g))
        out = [self.dom.add(self.coeff(f, i), self.coeff(g, i)) for i in range(n)]
        return self.normalize(out)

    def sub(self, f, g):
        n = max(len(f), len(g))
        out = [self.dom.sub(self.coeff(f, i), self.coeff(g, i)) for i in range(n)]
        return self.normalize(out)

    def neg(self, f):
        return [self.dom.neg(c) for c in f]

    def mul(self, f, g):
        if not f or not g:
            return []
        out = [self.dom.zero] * (len(f) + len(g) - 1)
        for i, a in enumerate(f):
            if self.dom.is_zero(a):
                continue
            for j, b in enumerate(g):
                out[i + j] = self.dom.add(out[i + j], self.dom.mul(a, b))
        return self.normalize(out)

    def scale(self, f, c):
        if self.dom.is_zero(c):
            return []
        return self.normalize([self.dom.mul(a, c) for a in f])

    def eq(self, f, g):
        f, g = self.normalize(f), self.normalize(g)
        return len(f) == len(g) and all(self.dom.eq(a, b) for a, b in zip(f, g))

    def is_zero(self, f):
        return len(self.normalize(f)) == 0

    def pow(self, f, e):
        if e < 0:
            raise ValueError("negative exponent in polynomial ring")
        out = self.one
        base = list(f)
        while e:
            if e & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            e >>= 1
        return out

    def deriv(self, f):
        out = [self.dom.mul(f[i], self.dom.from_int(i)) for i in range(1, len(f))]
        return self.normalize(out)

    def eval(self, f, x):
        acc = self.dom.zero
        for c in reversed(f):
            acc = self.dom.add(self.dom.mul(acc, x), c)
        return acc

    def eval_map(self, f, x, codom, lift):
        """Horner evaluation of f at x in codom, lifting coefficients via lift."""
        acc = codom.zero
        for c in reversed(f):
            acc = codom.add(codom.mul(acc, x), lift(c))
        return acc

    def exact_div(self, f, g):
        """Exact division f / g; raises DivisionByZero when not exact."""
        g = self.normalize(g)
        if not g:
            raise DivisionByZero("polynomial division by zero")
        rem = self.normalize(list(f))
        out = [self.dom.zero] * max(len(rem) - len(g) + 1, 0)
        while rem and len(rem) >= len(g):
            shift = len(rem) - len(g)
            q = self.dom.exact_div(rem[-1], g[-1])
            out[shift] = q
            sub = [self.dom.zero] * shift + [self.dom.mul(q, c) for c in g]
            rem = self.sub(rem, sub)
        if rem:
            raise DivisionByZero("inexact polynomial division")
        return self.normalize(out)

    def monic(self, f):
        f = self.normalize(f)
        if not f:
            return f
        c = self.dom.inv(f[-1])
        return [self.dom.mul(a, c) for a in f]

    def fmt(self, f):
        return poly_to_str(self, f)

    def to_json(self, f):
        return [self.dom.to_json(c) for c in f]

    def from_json(self, v):
        return self.normalize([self.dom.from_json(c) for c in v])


def poly_divmod(R, f, g):
    """Division with remainder over a field coefficient domain."""
    dom = R.dom
    g = R.normalize(g)
    if not g:
        raise DivisionByZero("polynomial division by zero")
    rem = R.normalize(list(f))
    quo = [dom.zero] * max(len(rem) - len(g) + 1, 0)
    ginv = dom.inv(g[-1])
    while rem and len(rem) >= len(g):
        shift = len(rem) - len(g)
        q = dom.mul(rem[-1], ginv)
        quo[shift] = dom.add(quo[shift], q)
        sub = [dom.zero] * shift + [dom.mul(q, c) for c in g]
        rem = R.sub(rem, sub)
    return R.normalize(quo), rem


def poly_mod(R, f, g):
    return poly_divmod(R, f, g)[1]


def poly_gcd(R, f, g):
    """Monic gcd over a field coefficient domain."""
    a, b = R.normalize(list(f)), R.normalize(list(g))
    while b:
        a, b = b, poly_mod(R, a, b)
    return R.monic(a)


def poly_pow_mod(R, f, e, m):
    """f^e mod m by square-and-multiply (0^0 = 1)."""
    out = poly_mod(R, R.one, m)
    base = poly_mod(R, f, m)
    while e:
        if e & 1:
            out = poly_mod(R, R.mul(out, base), m)
        base = poly_mod(R, R.mul(base, base), m)
        e >>= 1
    return out


def distinct_degree_pattern(R, f):
    """Multiset (sorted tuple) of irreducible factor degrees of squarefree f.

    Degree counts come from distinct-degree splitting alone: the stage-d gcd
    has degree d * (number of degree-d factors), so no equal-degree splitting
    is needed for the pattern.  Raises NotSquarefree when gcd(f, f') != 1.
    """
    dom = R.dom
    q = dom.order
    f = R.normalize(list(f))
    if R.degree(f) < 1:
        return ()
    if R.degree(poly_gcd(R, f, R.deriv(f))) > 0:
        raise NotSquarefree("repeated factor in %s" % poly_to_str(R, f))
    g = R.monic(f)
    x = R.gen()
    h = poly_mod(R, x, g)
    pattern = []
    d = 0
    while R.degree(g) >= 1:
        d += 1
        if d > R.degree(g) // 2:
            pattern.append(R.degree(g))
            break
        h = poly_pow_mod(R, h, q, g)
        common = poly_gcd(R, R.sub(h, x), g)
        if R.degree(common) > 0:
            pattern.extend([d] * (R.degree(common) // d))
            g = R.exact_div(g, common)
            if R.degree(g) >= 1:
                h = poly_mod(R, h, g)
    return tuple(sorted(pattern))


def factor_squarefree(R, f, rng):
    """Full factorization of a squarefree monic f over a finite field.

    Distinct-degree stages followed by Cantor-Zassenhaus equal-degree splits
    (odd q only); rng drives the random split polynomials, so a seeded
    Random gives reproducible runs.  Used as a cross-check oracle for
    distinct_degree_pattern.
    """
    dom = R.dom
    q = dom.order
    if q % 2 == 0:
        raise Unsupported("equal-degree splitting implemented for odd q only")
    f = R.monic(R.normalize(list(f)))
    if R.degree(poly_gcd(R, f, R.deriv(f))) > 0:
        raise NotSquarefree("repeated factor")
    stages = []
    g = f
    x = R.gen()
    h = poly_mod(R, x, g)
    d = 0
    while R.degree(g) >= 1:
        d += 1
        if d > R.degree(g) // 2:
            stages.append((R.degree(g), g))
            break
        h = poly_pow_mod(R, h, q, g)
        common = poly_gcd(R, R.sub(h, x), g)
        if R.degree(common) > 0:
            stages.append((d, common))
            g = R.exact_div(g, common)
            if R.degree(g) >= 1:
                h = poly_mod(R, h, g)
    factors = []
    for d, prod in stages:
        factors.extend(_equal_degree_split(R, prod, d, rng))
    factors.sort(key=lambda u: (R.degree(u), [_coeff_key(dom, c) for c in u]))
    return factors


def _coeff_key(dom, c):
    return c if isinstance(c, (int, Fraction)) else tuple(c)


def _random_poly(R, deg, rng):
    dom = R.dom
    cs = [dom.from_int(rng.randrange(dom.order)) for _ in range(deg + 1)]
    if isinstance(dom, ExtField):
        cs = [
            tuple(rng.randrange(dom.p) for _ in range(dom.k)) for _ in range(deg + 1)
        ]
    return R.normalize(cs)


def _equal_degree_split(R, f, d, rng):
    dom = R.dom
    q = dom.order
    n = R.degree(f)
    if n == d:
        return [f]
    while True:
        a = _random_poly(R, n - 1, rng)
        if R.degree(a) < 1:
            continue
        g = poly_gcd(R, a, f)
        if 0 < R.degree(g) < n:
            break
        b = poly_pow_mod(R, a, (q**d - 1) // 2, f)
        g = poly_gcd(R, R.sub(b, R.one), f)
        if 0 < R.degree(g) < n:
            break
    return _equal_degree_split(R, g, d, rng) + _equal_degree_split(
        R, R.exact_div(f, g), d, rng
    )


def bareiss_det(dom, rows):
    """Fraction-free determinant; needs only exact_div in an integral domain."""
    M = [list(r) for r in rows]
    n = len(M)
    sign = 1
    prev = dom.one
    for k in range(n - 1):
        if dom.is_zero(M[k][k]):
            for r in range(k + 1, n):
                if not dom.is_zero(M[r][k]):
                    M[k], M[r] = M[r], M[k]
                    sign = -sign
                    break
            else:
                return dom.zero
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = dom.sub(
                    dom.mul(M[i][j], M[k][k]), dom.mul(M[i][k], M[k][j])
                )
                M[i][j] = dom.exact_div(num, prev)
            M[i][k] = dom.zero
        prev = M[k][k]
    det = M[n - 1][n - 1]
    return dom.neg(det) if sign < 0 else det


def resultant(R, f, g):
    """res(f, g) via the Sylvester matrix and Bareiss elimination.

    Valid over any coefficient domain with exact_div (fields, F_p[T]).
    """
    dom = R.dom
    f, g = R.normalize(list(f)), R.normalize(list(g))
    m, n = R.degree(f), R.degree(g)
    if m < 0 or n < 0:
        return dom.zero
    if m == 0:
        return dom.pow(f[0], n)
    if n == 0:
        return dom.pow(g[0], m)
    size = m + n
    rows = []
    fr = list(reversed(f))
    gr = list(reversed(g))
    for i in range(n):
        rows.append([dom.zero] * i + fr + [dom.zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([dom.zero] * i + gr + [dom.zero] * (size - n - 1 - i))
    return bareiss_det(dom, rows)


def discriminant(R, f):
    """disc(f) = (-1)^(n(n-1)/2) res(f, f') / lc(f)."""
    dom = R.dom
    f = R.normalize(list(f))
    n = R.degree(f)
    if n < 1:
        raise ValueError("discriminant needs degree >= 1")
    df = R.deriv(f)
    if R.is_zero(df):
        return dom.zero
    res = resultant(R, f, df)
    res = dom.exact_div(res, f[-1])
    if (n * (n - 1) // 2) % 2:
        res = dom.neg(res)
    return res


def poly_sqrt_monic(R, f):
    """Monic square root of a monic even-degree poly, or None.

    Solves the top coefficients one at a time (char != 2) and verifies by
    squaring, so a false positive is impossible.
    """
    dom = R.dom
    f = R.normalize(list(f))
    n = R.degree(f)
    if n < 0 or n % 2:
        return None
    if not dom.eq(f[-1], dom.one):
        return None
    m = n // 2
    r = [dom.zero] * m + [dom.one]
    two_inv = dom.inv(dom.from_int(2))
    for j in range(1, m + 1):
        # coefficient of x^(2m-j) in r^2 is 2*r_{m-j} + sum of known products
        acc = dom.zero
        for i in range(1, j):
            acc = dom.add(acc, dom.mul(r[m - i], r[m - j + i]))
        target = R.coeff(f, 2 * m - j)
        r[m - j] = dom.mul(dom.sub(target, acc), two_inv)
    r = R.normalize(r)
    if R.eq(R.mul(r, r), f):
        return r
    return None


def poly_to_str(R, f, var=None):
    """Human-readable rendering, highest degree first.

    Multi-term coefficients from a nested PolyRing are parenthesized, so
    F_p[T][x] values print like x^6 + (T + 1)x^3 + 2Tx + 2.
    """
    var = var or R.var
    f = R.normalize(list(f))
    if not f:
        return "0"
    dom = R.dom
    parts = []
    for i in range(len(f) - 1, -1, -1):
        c = R.coeff(f, i)
        if dom.is_zero(c):
            continue
        cs = dom.fmt(c)
        if i == 0:
            term = cs if not _needs_parens(cs) else "(%s)" % cs
        else:
            xpow = var if i == 1 else "%s^%d" % (var, i)
            if cs == "1":
                term = xpow
            elif cs == "-1":
                term = "-" + xpow
            elif _needs_parens(cs):
                term = "(%s)%s" % (cs, xpow)
            else:
                term = cs + xpow
        parts.append(term)
    out = parts[0]
    for term in parts[1:]:
        if term.startswith("-"):
            out += " - " + term[1:]
        else:
            out += " + " + term
    return out


def _needs_parens(s):
    return ("+" in s) or ("-" in s[1:]) or (" " in s)
