"""Finite commutative rings: integers mod n, Galois fields, direct products.

Ring elements are integers 0..order-1 under the same mixed-radix encoding
the group module uses: a Zmod element is its residue, a field element is
the base-p value of its coefficient vector (so coords are listed most
significant first), and a product element mixes the factor indices with the
leftmost factor most significant.  The additive group of any ring is
available as a FiniteGroup with the identical element encoding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .groups import CyclicGroup, FiniteGroup, ProductGroup


class NotPrimeError(ValueError):
    """Characteristic argument is not a prime."""


class EvenOrderError(ValueError):
    """Operation needs a ring of odd order."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division, {prime: exponent}."""
    if n < 1:
        raise ValueError("positive integers only")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def maximal_prime_power_divisors(n: int) -> list[int]:
    """The p^a with p^a || n, sorted ascending."""
    return sorted(p ** a for p, a in factorize(n).items())


class Ring:
    """Base class; subclasses provide arithmetic on integer element indices."""

    order: int
    arity: int
    zero: int = 0
    one: int

    def add(self, a: int, b: int) -> int:
        raise NotImplementedError

    def neg(self, a: int) -> int:
        raise NotImplementedError

    def mul(self, a: int, b: int) -> int:
        raise NotImplementedError

    def is_unit(self, a: int) -> bool:
        raise NotImplementedError

    def coords(self, a: int) -> tuple[int, ...]:
        raise NotImplementedError

    def index_of(self, coords) -> int:
        raise NotImplementedError

    def descriptor(self) -> dict:
        raise NotImplementedError

    def elements(self) -> range:
        return range(self.order)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def units(self) -> list[int]:
        return [a for a in self.elements() if self.is_unit(a)]

    def _check(self, a: int) -> int:
        if not 0 <= a < self.order:
            raise IndexError(f"ring element {a} outside 0..{self.order - 1}")
        return a

    def __eq__(self, other):
        return (isinstance(other, Ring)
                and self.descriptor() == other.descriptor())

    def __hash__(self):
        import json
        return hash(json.dumps(self.descriptor(), sort_keys=True))

    def __repr__(self):
        return f"{type(self).__name__}(order={self.order})"


class Zmod(Ring):
    """Integers modulo n."""

    def __init__(self, n: int):
        if n < 2:
            raise ValueError("modulus must be at least 2")
        self.order = n
        self.arity = 1
        self.one = 1 % n

    def add(self, a, b):
        return (self._check(a) + self._check(b)) % self.order

    def neg(self, a):
        return (-self._check(a)) % self.order

    def mul(self, a, b):
        return (self._check(a) * self._check(b)) % self.order

    def is_unit(self, a):
        return math.gcd(self._check(a), self.order) == 1

    def coords(self, a):
        return (self._check(a),)

    def index_of(self, coords):
        (a,) = coords
        return self._check(int(a))

    def descriptor(self):
        return {"type": "zmod", "n": self.order}

    def __repr__(self):
        return f"Zmod({self.order})"


def _poly_rem(num: list[int], den: list[int], p: int) -> list[int]:
    """Remainder of num by den over Zp; coefficient lists ascending."""
    num = num[:]
    dn = len(den) - 1
    inv_lead = pow(den[dn], -1, p)
    for k in range(len(num) - 1, dn - 1, -1):
        c = num[k] % p
        if c:
            f = (c * inv_lead) % p
            for i in range(dn + 1):
                num[k - dn + i] = (num[k - dn + i] - f * den[i]) % p
    return [c % p for c in num[:dn]]


def _is_irreducible(poly: list[int], p: int) -> bool:
    """Trial division by all monic polynomials of degree <= deg/2."""
    k = len(poly) - 1
    for d in range(1, k // 2 + 1):
        for val in range(p ** d):
            den = _digits(val, p, d) + [1]
            rem = _poly_rem(poly, den, p)
            if not any(rem):
                return False
    return True


def _digits(val: int, p: int, width: int) -> list[int]:
    out = []
    for _ in range(width):
        val, r = divmod(val, p)
        out.append(r)
    return out


class GaloisField(Ring):
    """GF(p^k) with the lexicographically first monic irreducible modulus.

    Elements are polynomials of degree < k over Zp; the index of an element
    is the base-p value of its coefficients, so GF(p,1) looks exactly like
    Zp.  The modulus is stored as ascending coefficients of the non-leading
    part (x^k + sum modulus[i] x^i).
    """

    def __init__(self, p: int, k: int = 1):
        if not is_prime(p):
            raise NotPrimeError(f"{p} is not prime")
        if k < 1:
            raise ValueError("extension degree must be positive")
        self.p = p
        self.k = k
        self.order = p ** k
        self.arity = k
        self.one = 1
        self.modulus = self._find_modulus()
        # reduction table for x^k .. x^(2k-2)
        self._xpow = self._reduction_table()

    def _find_modulus(self) -> tuple[int, ...]:
        p, k = self.p, self.k
        for val in range(p ** k):
            low = _digits(val, p, k)
            if _is_irreducible(low + [1], p):
                return tuple(low)
        raise RuntimeError("no irreducible polynomial found")  # unreachable

    def _reduction_table(self) -> list[list[int]]:
        p, k = self.p, self.k
        x_k = [(-c) % p for c in self.modulus]  # x^k reduced mod the modulus
        table = [x_k[:]]
        cur = x_k[:]
        for _ in range(k - 2):
            top = cur[-1]
            nxt = [0] + cur[:-1]  # multiply by x; top coefficient overflows
            if top:
                for i in range(k):
                    nxt[i] = (nxt[i] + top * x_k[i]) % p
            cur = nxt
            table.append(cur[:])
        return table

    def _vec(self, a: int) -> list[int]:
        return _digits(self._check(a), self.p, self.k)

    def _val(self, vec) -> int:
        out = 0
        for c in reversed(vec):
            out = out * self.p + (c % self.p)
        return out

    def add(self, a, b):
        va, vb = self._vec(a), self._vec(b)
        return self._val([(x + y) % self.p for x, y in zip(va, vb)])

    def neg(self, a):
        return self._val([(-x) % self.p for x in self._vec(a)])

    def mul(self, a, b):
        p, k = self.p, self.k
        va, vb = self._vec(a), self._vec(b)
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(va):
            if x:
                for j, y in enumerate(vb):
                    prod[i + j] = (prod[i + j] + x * y) % p
        for e in range(2 * k - 2, k - 1, -1):
            c = prod[e]
            if c:
                prod[e] = 0
                red = self._xpow[e - k]
                for i in range(k):
                    prod[i] = (prod[i] + c * red[i]) % p
        return self._val(prod[:k])

    def is_unit(self, a):
        return self._check(a) != 0

    def coords(self, a):
        return tuple(reversed(self._vec(a)))

    def index_of(self, coords):
        coords = [int(c) for c in coords]
        if len(coords) != self.k:
            raise ValueError(f"expected {self.k} coordinates")
        if any(not 0 <= c < self.p for c in coords):
            raise IndexError("coordinate out of range")
        return self._val(list(reversed(coords)))

    def descriptor(self):
        return {"type": "gf", "p": self.p, "k": self.k}

    def __repr__(self):
        return f"GF({self.order})"


class ProductRing(Ring):
    """Direct product of rings; unitwise arithmetic, concatenated coords."""

    def __init__(self, factors):
        factors = tuple(factors)
        if not factors:
            raise ValueError("product needs at least one factor")
        self.factors = factors
        self.order = 1
        for f in factors:
            self.order *= f.order
        self.arity = sum(f.arity for f in factors)
        strides = []
        acc = 1
        for f in reversed(factors):
            strides.append(acc)
            acc *= f.order
        self.strides = tuple(reversed(strides))
        self.one = self.join(f.one for f in factors)

    def split(self, a: int) -> tuple[int, ...]:
        self._check(a)
        out = []
        for s in self.strides:
            q, a = divmod(a, s)
            out.append(q)
        return tuple(out)

    def join(self, parts) -> int:
        return sum(p * s for p, s in zip(parts, self.strides))

    def _zip(self, a, b, fn_name):
        pa, pb = self.split(a), self.split(b)
        return self.join(getattr(f, fn_name)(x, y)
                         for f, x, y in zip(self.factors, pa, pb))

    def add(self, a, b):
        return self._zip(a, b, "add")

    def mul(self, a, b):
        return self._zip(a, b, "mul")

    def neg(self, a):
        return self.join(f.neg(x)
                         for f, x in zip(self.factors, self.split(a)))

    def is_unit(self, a):
        return all(f.is_unit(x)
                   for f, x in zip(self.factors, self.split(a)))

    def coords(self, a):
        out = []
        for f, x in zip(self.factors, self.split(a)):
            out.extend(f.coords(x))
        return tuple(out)

    def index_of(self, coords):
        coords = tuple(int(c) for c in coords)
        if len(coords) != self.arity:
            raise ValueError(f"expected {self.arity} coordinates")
        parts = []
        pos = 0
        for f in self.factors:
            parts.append(f.index_of(coords[pos:pos + f.arity]))
            pos += f.arity
        return self.join(parts)

    def descriptor(self):
        return {"type": "product",
                "factors": [f.descriptor() for f in self.factors]}

    def __repr__(self):
        return " x ".join(repr(f) for f in self.factors)


def make_gf(p: int, k: int = 1) -> GaloisField:
    return GaloisField(p, k)


def make_ring(descriptor: dict) -> Ring:
    """Build a ring from its JSON descriptor."""
    kind = descriptor.get("type")
    if kind == "zmod":
        return Zmod(int(descriptor["n"]))
    if kind == "gf":
        return GaloisField(int(descriptor["p"]), int(descriptor.get("k", 1)))
    if kind == "product":
        return ProductRing(make_ring(d) for d in descriptor["factors"])
    raise ValueError(f"unknown ring descriptor type {kind!r}")


def additive_group(ring: Ring) -> FiniteGroup:
    """The additive group of a ring, with the same element indexing."""
    if isinstance(ring, Zmod):
        return CyclicGroup(ring.order)
    if isinstance(ring, GaloisField):
        if ring.k == 1:
            return CyclicGroup(ring.p)
        return ProductGroup(CyclicGroup(ring.p) for _ in range(ring.k))
    if isinstance(ring, ProductRing):
        return ProductGroup(additive_group(f) for f in ring.factors)
    raise TypeError(f"no additive group mapping for {type(ring).__name__}")


def ring_pow(ring: Ring, a: int, e: int) -> int:
    """a**e by binary exponentiation, e >= 0."""
    result = ring.one
    base = a
    while e:
        if e & 1:
            result = ring.mul(result, base)
        base = ring.mul(base, base)
        e >>= 1
    return result


def primitive_element(field: GaloisField) -> int:
    """Smallest element generating the multiplicative group."""
    if not isinstance(field, GaloisField):
        raise TypeError("primitive elements are defined for fields")
    q = field.order
    prime_divs = sorted(factorize(q - 1))
    for a in range(1, q):
        if all(ring_pow(field, a, (q - 1) // ell) != field.one
               for ell in prime_divs):
            return a
    raise RuntimeError("no primitive element found")  # unreachable


def starter_reps(ring: Ring) -> list[int]:
    """One representative per pair {h, -h} of nonzero elements.

    Needs odd order so no nonzero element is its own negative; picks the
    canonically smaller element of each pair, returned ascending.
    """
    if ring.order % 2 == 0:
        raise EvenOrderError("patterned starters need a ring of odd order")
    reps = []
    for h in range(1, ring.order):
        if h <= ring.neg(h):
            reps.append(h)
    return reps


def _field_factors(ring: Ring) -> list[GaloisField]:
    if isinstance(ring, GaloisField):
        return [ring]
    if isinstance(ring, ProductRing):
        out = []
        for f in ring.factors:
            if not isinstance(f, GaloisField):
                raise TypeError("all factors must be fields")
            out.append(f)
        return out
    raise TypeError("need a field or a product of fields")


def build_y_powers(ring: Ring, m: int) -> list[int]:
    """Diagonal powers (rho_1^j, ..., rho_t^j) for j = 1..m.

    rho_i is the canonical primitive element of the i-th field factor.  The
    list is returned in power order, which downstream code uses as the
    canonical ordering of Y.
    """
    fields = _field_factors(ring)
    rhos = [primitive_element(f) for f in fields]
    powers = [list(rhos)]
    for _ in range(m - 1):
        powers.append([f.mul(prev, r)
                       for f, prev, r in zip(fields, powers[-1], rhos)])
    if isinstance(ring, ProductRing):
        return [ring.join(vec) for vec in powers[:m]]
    return [vec[0] for vec in powers[:m]]


@dataclass(frozen=True)
class YCheck:
    ok: bool
    witness: tuple[int, int] | None = None  # offending pair (a, b), a-b bad
    reason: str | None = None


def check_y_condition(ring: Ring, y) -> YCheck:
    """Unit-difference test for a candidate Y.

    Requires: every element of Y is a unit, Y has no repeats, Y and -Y are
    disjoint, and every difference of distinct elements of Y union -Y is a
    unit.  Returns the first offending pair on failure.
    """
    y = [ring._check(int(e)) for e in y]
    if len(set(y)) != len(y):
        return YCheck(False, None, "repeated element in Y")
    for e in y:
        if not ring.is_unit(e):
            return YCheck(False, (e, e), f"element {e} is not a unit")
    negs = {ring.neg(e) for e in y}
    overlap = sorted(set(y) & negs)
    if overlap:
        o = overlap[0]
        return YCheck(False, (o, ring.neg(o)), "Y meets -Y")
    full = sorted(set(y) | negs)
    for i, a in enumerate(full):
        for b in full[i + 1:]:
            if not ring.is_unit(ring.sub(a, b)):
                return YCheck(False, (a, b),
                              f"difference {ring.sub(a, b)} is not a unit")
    return YCheck(True)
