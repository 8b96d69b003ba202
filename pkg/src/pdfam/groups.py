"""Finite additive groups with a canonical integer encoding of elements.

A group of order n has elements 0..n-1.  Each element also carries a
coordinate tuple (one integer per direct factor, a singleton for cyclic and
table groups); index and coordinates are two sides of a mixed-radix
bijection with the leftmost coordinate most significant, so index order is
lexicographic order on coordinates.  Groups are written additively but need
not be abelian; DiffConvention fixes what "a - b" means when order matters.
"""

from __future__ import annotations

import json
from enum import Enum

import numpy as np


class NonAssociativeError(ValueError):
    """Operation table fails associativity."""


class NoIdentityError(ValueError):
    """Operation table has no two-sided identity."""


class NoInverseError(ValueError):
    """Some element of an operation table has no two-sided inverse."""


class ElementOutOfRangeError(IndexError):
    """Element index outside 0..order-1."""


class DiffConvention(Enum):
    """Reading of the difference a - b in a possibly non-abelian group."""

    RIGHT_INVERSE = "right"  # a + (-b)
    LEFT_INVERSE = "left"    # (-b) + a


DEFAULT_CONVENTION = DiffConvention.RIGHT_INVERSE


def convention_from_name(name: str) -> DiffConvention:
    for conv in DiffConvention:
        if conv.value == name:
            return conv
    raise ValueError(f"unknown difference convention {name!r}")


class FiniteGroup:
    """Base class.  Subclasses implement op/neg on integer element indices."""

    order: int
    arity: int
    identity: int = 0

    def op(self, a: int, b: int) -> int:
        raise NotImplementedError

    def neg(self, a: int) -> int:
        raise NotImplementedError

    def coords(self, a: int) -> tuple[int, ...]:
        raise NotImplementedError

    def index_of(self, coords) -> int:
        raise NotImplementedError

    def descriptor(self) -> dict:
        raise NotImplementedError

    def elements(self) -> range:
        return range(self.order)

    def difference(self, a: int, b: int,
                   convention: DiffConvention = DEFAULT_CONVENTION) -> int:
        """a - b under the given convention."""
        if convention is DiffConvention.RIGHT_INVERSE:
            return self.op(a, self.neg(b))
        return self.op(self.neg(b), a)

    def _check(self, a: int) -> int:
        if not 0 <= a < self.order:
            raise ElementOutOfRangeError(
                f"element {a} outside 0..{self.order - 1}")
        return a

    @property
    def is_abelian(self) -> bool:
        cached = getattr(self, "_abelian", None)
        if cached is None:
            n = self.order
            cached = all(self.op(a, b) == self.op(b, a)
                         for a in range(n) for b in range(a + 1, n))
            self._abelian = cached
        return cached

    def __eq__(self, other):
        return (isinstance(other, FiniteGroup)
                and self.descriptor() == other.descriptor())

    def __hash__(self):
        return hash(json.dumps(self.descriptor(), sort_keys=True))

    def __repr__(self):
        return f"{type(self).__name__}(order={self.order})"


class CyclicGroup(FiniteGroup):
    """Integers mod n under addition."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("order must be positive")
        self.order = n
        self.arity = 1

    def op(self, a, b):
        return (self._check(a) + self._check(b)) % self.order

    def neg(self, a):
        return (-self._check(a)) % self.order

    def coords(self, a):
        return (self._check(a),)

    def index_of(self, coords):
        (a,) = coords
        return self._check(int(a))

    def descriptor(self):
        return {"type": "cyclic", "n": self.order}

    def __repr__(self):
        return f"Z{self.order}"


class ProductGroup(FiniteGroup):
    """Direct product of groups; coordinates are concatenated."""

    def __init__(self, factors):
        factors = tuple(factors)
        if not factors:
            raise ValueError("product needs at least one factor")
        self.factors = factors
        self.order = 1
        for f in factors:
            self.order *= f.order
        self.arity = sum(f.arity for f in factors)
        # stride[i] = product of orders of factors to the right of i
        strides = []
        acc = 1
        for f in reversed(factors):
            strides.append(acc)
            acc *= f.order
        self.strides = tuple(reversed(strides))

    def split(self, a: int) -> tuple[int, ...]:
        """Index -> per-factor indices."""
        self._check(a)
        out = []
        for f, s in zip(self.factors, self.strides):
            q, a = divmod(a, s)
            out.append(q)
        return tuple(out)

    def join(self, parts) -> int:
        return sum(p * s for p, s in zip(parts, self.strides))

    def op(self, a, b):
        pa = self.split(a)
        pb = self.split(b)
        return self.join(f.op(x, y)
                         for f, x, y in zip(self.factors, pa, pb))

    def neg(self, a):
        return self.join(f.neg(x)
                         for f, x in zip(self.factors, self.split(a)))

    def coords(self, a):
        out = []
        for f, x in zip(self.factors, self.split(a)):
            out.extend(f.coords(x))
        return tuple(out)

    def index_of(self, coords):
        coords = tuple(int(c) for c in coords)
        if len(coords) != self.arity:
            raise ValueError(
                f"expected {self.arity} coordinates, got {len(coords)}")
        parts = []
        pos = 0
        for f in self.factors:
            parts.append(f.index_of(coords[pos:pos + f.arity]))
            pos += f.arity
        return self.join(parts)

    def descriptor(self):
        return {"type": "product",
                "factors": [f.descriptor() for f in self.factors]}

    @property
    def is_abelian(self):
        return all(f.is_abelian for f in self.factors)

    def __repr__(self):
        return " x ".join(repr(f) for f in self.factors)


class Semidirect32(FiniteGroup):
    """Non-abelian order-32 group on Z4 x Z8 pairs.

    (x1,y1) + (x2,y2) = (x1+x2 mod 4, 5^x2 * y1 + y2 mod 8).  Since
    5^2 = 25 = 1 mod 8 the twist only depends on the parity of x2.
    """

    def __init__(self):
        self.order = 32
        self.arity = 2
        self._abelian = False

    def op(self, a, b):
        self._check(a)
        self._check(b)
        x1, y1 = divmod(a, 8)
        x2, y2 = divmod(b, 8)
        x = (x1 + x2) & 3
        y = ((5 * y1 if x2 & 1 else y1) + y2) & 7
        return (x << 3) | y

    def neg(self, a):
        self._check(a)
        x, y = divmod(a, 8)
        xn = (-x) & 3
        yn = (-(5 * y if xn & 1 else y)) & 7
        return (xn << 3) | yn

    def coords(self, a):
        self._check(a)
        return divmod(a, 8)

    def index_of(self, coords):
        x, y = (int(c) for c in coords)
        if not (0 <= x < 4 and 0 <= y < 8):
            raise ElementOutOfRangeError(f"bad coordinates ({x},{y})")
        return (x << 3) | y

    def descriptor(self):
        return {"type": "semidirect32"}

    def __repr__(self):
        return "Semidirect32"


class TableGroup(FiniteGroup):
    """Group given by an explicit operation table, validated eagerly."""

    def __init__(self, table):
        t = np.asarray(table, dtype=np.int64)
        if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
            raise ValueError("table must be a nonempty square matrix")
        n = t.shape[0]
        if t.min() < 0 or t.max() >= n:
            raise ValueError("table entries must lie in 0..n-1")
        self.order = n
        self.arity = 1
        self.table = t
        self.identity = _find_identity(t)
        self._inv = _find_inverses(t, self.identity)
        _check_associativity(t)

    def op(self, a, b):
        return int(self.table[self._check(a), self._check(b)])

    def neg(self, a):
        return self._inv[self._check(a)]

    def coords(self, a):
        return (self._check(a),)

    def index_of(self, coords):
        (a,) = coords
        return self._check(int(a))

    def descriptor(self):
        return {"type": "table", "n": self.order,
                "table": self.table.tolist()}


def _find_identity(t: np.ndarray) -> int:
    n = t.shape[0]
    idx = np.arange(n)
    for e in range(n):
        if np.array_equal(t[e], idx) and np.array_equal(t[:, e], idx):
            return e
    raise NoIdentityError("table has no two-sided identity")


def _find_inverses(t: np.ndarray, e: int) -> list[int]:
    n = t.shape[0]
    inv = []
    for a in range(n):
        hits = [b for b in range(n) if t[a, b] == e and t[b, a] == e]
        if not hits:
            raise NoInverseError(f"element {a} has no two-sided inverse")
        inv.append(hits[0])
    return inv


def _check_associativity(t: np.ndarray) -> None:
    n = t.shape[0]
    if n <= 64:
        for a in range(n):
            # (a+x)+y versus a+(x+y), all x, y at once
            if not np.array_equal(t[t[a], :], t[a][t]):
                raise NonAssociativeError(
                    f"associativity fails through element {a}")
        return
    _light_test(t)


def _light_test(t: np.ndarray) -> None:
    """Light's associativity test: check only through a generating set."""
    n = t.shape[0]
    gens: list[int] = []
    closure = {0}
    remaining = set(range(n)) - closure
    while remaining:
        gens.append(min(remaining))
        closure = set(gens) | {0}
        grew = True
        while grew:
            grew = False
            for a in list(closure):
                for b in list(closure):
                    c = int(t[a, b])
                    if c not in closure:
                        closure.add(c)
                        grew = True
        remaining = set(range(n)) - closure
    for g in gens:
        left = t[t[:, g], :]    # (x,y) -> (x+g)+y
        right = t[:, t[g, :]]   # (x,y) -> x+(g+y)
        if not np.array_equal(left, right):
            raise NonAssociativeError(
                f"associativity fails through generator {g}")


def make_group(descriptor: dict) -> FiniteGroup:
    """Build a group from its JSON descriptor."""
    kind = descriptor.get("type")
    if kind == "cyclic":
        return CyclicGroup(int(descriptor["n"]))
    if kind == "product":
        return ProductGroup(make_group(d) for d in descriptor["factors"])
    if kind == "semidirect32":
        return Semidirect32()
    if kind == "table":
        g = TableGroup(descriptor["table"])
        if "n" in descriptor and int(descriptor["n"]) != g.order:
            raise ValueError("declared order does not match table size")
        return g
    raise ValueError(f"unknown group descriptor type {kind!r}")


def subgroup_closure(group: FiniteGroup, generators) -> frozenset[int]:
    """Smallest subgroup containing the generators."""
    closed = {group.identity}
    frontier = [group._check(int(g)) for g in generators]
    closed.update(frontier)
    grew = True
    while grew:
        grew = False
        current = list(closed)
        for a in current:
            na = group.neg(a)
            if na not in closed:
                closed.add(na)
                grew = True
            for b in current:
                c = group.op(a, b)
                if c not in closed:
                    closed.add(c)
                    grew = True
    return frozenset(closed)


def is_subgroup(group: FiniteGroup, subset) -> bool:
    """True when the subset is closed under the group operations."""
    s = frozenset(int(x) for x in subset)
    if group.identity not in s:
        return False
    return all(group.op(a, group.neg(b)) in s for a in s for b in s)
