"""Finite groups as dense multiplication tables over element indices.

A group of order n lives in an n-by-n table of element indices with the
identity pinned at index 0.  Derived data (inverses, centre, conjugacy
classes, ...) is memoised on the table object; tables are immutable after
construction, so concurrent reads are safe.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import (
    AbelianInput,
    IndexOutOfRange,
    InternalInconsistency,
    NoIdentity,
    NotASubgroup,
    NotAssociative,
    NotClosed,
    NotLatin,
    NotNilpotent,
    OrderOverflow,
)

# Full O(n^3) associativity checking is done at or below this order; larger
# tables produced by the trusted constructors skip the cube, everything else
# still gets it.
FULL_ASSOC_LIMIT = 128

# Default ceiling for construction-type operations (tables are O(n^2) memory).
DEFAULT_ORDER_CAP = 512


class CayleyTable:
    """A finite group given by its full multiplication table.

    ``table[i, j]`` is the index of the product i*j.  Index 0 is always the
    identity.  ``parent_map`` is set on tables induced from a subgroup of a
    larger table and maps local indices back to parent indices.
    """

    __slots__ = ("order", "table", "descriptor", "parent_map", "_memo")

    def __init__(self, order, table, descriptor, parent_map=None):
        self.order = int(order)
        self.table = table
        self.descriptor = descriptor
        self.parent_map = parent_map
        self._memo = {}

    def mul(self, i: int, j: int) -> int:
        return int(self.table[i, j])

    def inv(self, i: int) -> int:
        return int(self.inverses[i])

    def elements(self) -> range:
        return range(self.order)

    @property
    def inverses(self) -> np.ndarray:
        inv = self._memo.get("inv")
        if inv is None:
            rows, cols = np.nonzero(self.table == 0)
            inv = np.empty(self.order, dtype=np.int64)
            inv[rows] = cols
            inv.flags.writeable = False
            self._memo["inv"] = inv
        return inv

    @property
    def commuting(self) -> np.ndarray:
        """Boolean matrix whose [i, j] entry says whether i and j commute."""
        c = self._memo.get("comm")
        if c is None:
            c = np.asarray(self.table == self.table.T)
            c.flags.writeable = False
            self._memo["comm"] = c
        return c

    @property
    def is_abelian(self) -> bool:
        flag = self._memo.get("abelian")
        if flag is None:
            flag = bool(self.commuting.all())
            self._memo["abelian"] = flag
        return flag

    def __repr__(self):
        return f"CayleyTable({self.descriptor!r}, order={self.order})"


@dataclass(frozen=True)
class ElementSet:
    """A subset of a group's elements; ``subgroup_flag`` marks verified subgroups."""

    parent: CayleyTable
    members: frozenset
    subgroup_flag: bool

    def __len__(self):
        return len(self.members)

    def __contains__(self, x):
        return x in self.members

    @property
    def sorted_members(self) -> tuple:
        return tuple(sorted(self.members))


@dataclass(frozen=True)
class SylowFactor:
    """One Sylow subgroup of a nilpotent group, as an element set."""

    prime: int
    members: ElementSet
    abelian: bool


def validate(raw, descriptor=None, *, trusted=False) -> CayleyTable:
    """Check the group axioms on a raw table and return a normalized group.

    Closure, two-sided identity and the Latin-square property are always
    checked.  Associativity is the full cube check, skipped only for trusted
    constructor output above ``FULL_ASSOC_LIMIT``.  If the identity is not at
    index 0, elements are relabeled so that it is.
    """
    arr = np.array(raw, dtype=np.int64)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 1:
        raise ValueError("expected a square table of order >= 1")
    n = arr.shape[0]
    name = descriptor if descriptor is not None else f"table(order={n})"

    bad = (arr < 0) | (arr >= n)
    if bad.any():
        i, j = map(int, np.argwhere(bad)[0])
        raise NotClosed(
            f"{name}: entry {int(arr[i, j])} at ({i}, {j}) is outside 0..{n - 1}",
            witness=(i, j, int(arr[i, j])),
        )

    idx = np.arange(n)
    row_ids = np.nonzero((arr == idx).all(axis=1))[0]
    identity = None
    for e in row_ids:
        if (arr[:, e] == idx).all():
            identity = int(e)
            break
    if identity is None:
        raise NoIdentity(f"{name}: no two-sided identity element")

    sorted_rows = np.sort(arr, axis=1)
    bad_rows = np.nonzero((sorted_rows != idx).any(axis=1))[0]
    if bad_rows.size:
        i = int(bad_rows[0])
        counts = np.bincount(arr[i], minlength=n)
        v = int(np.nonzero(counts > 1)[0][0])
        j1, j2 = map(int, np.nonzero(arr[i] == v)[0][:2])
        raise NotLatin(
            f"{name}: row {i} repeats value {v} at columns {j1} and {j2}",
            witness=(i, j1, j2),
        )
    sorted_cols = np.sort(arr, axis=0)
    bad_cols = np.nonzero((sorted_cols != idx[:, None]).any(axis=0))[0]
    if bad_cols.size:
        j = int(bad_cols[0])
        counts = np.bincount(arr[:, j], minlength=n)
        v = int(np.nonzero(counts > 1)[0][0])
        i1, i2 = map(int, np.nonzero(arr[:, j] == v)[0][:2])
        raise NotLatin(
            f"{name}: column {j} repeats value {v} at rows {i1} and {i2}",
            witness=(i1, i2, j),
        )

    if n <= FULL_ASSOC_LIMIT or not trusted:
        for i in range(n):
            left = arr[arr[i], :]      # [j, k] -> (i*j)*k
            right = arr[i][arr]        # [j, k] -> i*(j*k)
            if not np.array_equal(left, right):
                j, k = map(int, np.argwhere(left != right)[0])
                raise NotAssociative(
                    f"{name}: ({i}*{j})*{k} != {i}*({j}*{k})",
                    witness=(i, j, k),
                )

    if identity != 0:
        sigma = idx.copy()
        sigma[0], sigma[identity] = identity, 0
        arr = sigma[arr[np.ix_(sigma, sigma)]]

    table = np.ascontiguousarray(arr, dtype=np.int32)
    table.flags.writeable = False
    return CayleyTable(n, table, name)


# --- centre, centralizers, conjugacy -----------------------------------------

def center(g: CayleyTable) -> ElementSet:
    """The set of elements commuting with everything."""
    z = g._memo.get("center")
    if z is None:
        mask = g.commuting.all(axis=1)
        z = ElementSet(g, frozenset(int(i) for i in np.nonzero(mask)[0]), True)
        g._memo["center"] = z
    return z


def centralizer(g: CayleyTable, x: int) -> ElementSet:
    """All elements commuting with x."""
    if not 0 <= x < g.order:
        raise IndexOutOfRange(f"element index {x} outside 0..{g.order - 1}")
    mask = g.commuting[x]
    return ElementSet(g, frozenset(int(i) for i in np.nonzero(mask)[0]), True)


def centralizer_size(g: CayleyTable, x: int) -> int:
    if not 0 <= x < g.order:
        raise IndexOutOfRange(f"element index {x} outside 0..{g.order - 1}")
    return int(g.commuting[x].sum())


def conjugacy_classes(g: CayleyTable) -> tuple:
    """Partition of the elements into conjugacy classes, by smallest member.

    Each class is cross-checked against the orbit-stabiliser count
    |class| * |centralizer| = |G|.
    """
    classes = g._memo.get("classes")
    if classes is not None:
        return classes
    n = g.order
    t = g.table
    inv = g.inverses
    idx = np.arange(n)
    seen = np.zeros(n, dtype=bool)
    out = []
    for x in range(n):
        if seen[x]:
            continue
        conj = t[t[inv, x], idx]           # y -> (y^-1 * x) * y
        members = np.unique(conj)
        seen[members] = True
        csize = int(g.commuting[x].sum())
        if len(members) * csize != n:
            raise InternalInconsistency(
                f"orbit-stabiliser mismatch at element {x}: "
                f"{len(members)} * {csize} != {n}"
            )
        out.append(tuple(int(m) for m in members))
    classes = tuple(out)
    g._memo["classes"] = classes
    return classes


def element_orders(g: CayleyTable) -> np.ndarray:
    orders = g._memo.get("orders")
    if orders is None:
        n = g.order
        t = g.table
        orders = np.ones(n, dtype=np.int64)
        for x in range(1, n):
            k, y = 1, x
            while y != 0:
                y = int(t[y, x])
                k += 1
            orders[x] = k
        orders.flags.writeable = False
        g._memo["orders"] = orders
    return orders


# --- nilpotency ---------------------------------------------------------------

def upper_central_series(g: CayleyTable) -> list:
    """Ascending central series Z_0 = {e} <= Z_1 <= ...; stops at a stall or at G.

    Membership step: x lies in the next level iff every commutator
    x^-1 y^-1 x y lands in the current level, tested as y^-1 x y in x*Z_i.
    """
    cached = g._memo.get("ucs")
    if cached is not None:
        return list(cached)
    n = g.order
    t = g.table
    inv = g.inverses
    idx = np.arange(n)
    levels = []
    current = np.zeros(n, dtype=bool)
    current[0] = True
    levels.append(current.copy())
    while not current.all():
        nxt = np.zeros(n, dtype=bool)
        members = np.nonzero(current)[0]
        for x in range(n):
            if current[x]:
                nxt[x] = True
                continue
            conj = t[t[inv, x], idx]
            allowed = np.zeros(n, dtype=bool)
            allowed[t[x, members]] = True
            nxt[x] = bool(allowed[conj].all())
        if (nxt == current).all():
            break
        current = nxt
        levels.append(current.copy())
    sets = [
        ElementSet(g, frozenset(int(i) for i in np.nonzero(m)[0]), True)
        for m in levels
    ]
    g._memo["ucs"] = tuple(sets)
    return sets


def is_nilpotent(g: CayleyTable):
    """Return (flag, nilpotency class or None)."""
    cached = g._memo.get("nilp")
    if cached is None:
        series = upper_central_series(g)
        if len(series[-1]) == g.order:
            cached = (True, len(series) - 1)
        else:
            cached = (False, None)
        g._memo["nilp"] = cached
    return cached


# --- products and subgroups ----------------------------------------------------

def product_table(t1: np.ndarray, t2: np.ndarray) -> np.ndarray:
    """Raw direct-product table under the index convention (i, j) -> i*m + j."""
    m = t2.shape[0]
    t = t1[:, None, :, None] * m + t2[None, :, None, :]
    nm = t1.shape[0] * m
    return np.ascontiguousarray(t.reshape(nm, nm), dtype=np.int64)


def direct_product(g: CayleyTable, h: CayleyTable,
                   max_order: int = DEFAULT_ORDER_CAP) -> CayleyTable:
    """Direct product with pair index (i, j) -> i*|H| + j."""
    nm = g.order * h.order
    if nm > max_order:
        raise OrderOverflow(
            f"product order {nm} exceeds cap {max_order}"
        )
    table = np.ascontiguousarray(product_table(g.table, h.table), dtype=np.int32)
    table.flags.writeable = False
    out = CayleyTable(nm, table, f"product({g.descriptor},{h.descriptor})")
    expected = {
        a * h.order + b
        for a in center(g).members
        for b in center(h).members
    }
    if center(out).members != frozenset(expected):
        raise InternalInconsistency(
            "centre of a direct product is not the product of centres"
        )
    return out


def induced_group(g: CayleyTable, s: ElementSet) -> CayleyTable:
    """Relabel a subgroup-flagged set as a group of its own.

    The result's ``parent_map`` maps local indices back to parent indices;
    the parent identity comes first, so it stays at index 0.
    """
    if s.parent is not g:
        raise NotASubgroup("element set belongs to a different table")
    if not s.subgroup_flag:
        raise NotASubgroup("element set is not flagged as a subgroup")
    members = s.sorted_members
    if not members or members[0] != 0:
        raise NotASubgroup("subgroup must contain the identity")
    k = len(members)
    lookup = np.full(g.order, -1, dtype=np.int64)
    lookup[list(members)] = np.arange(k)
    sub = g.table[np.ix_(members, members)]
    new = lookup[sub]
    if (new < 0).any():
        i, j = map(int, np.argwhere(new < 0)[0])
        raise NotASubgroup(
            f"set is not closed: {members[i]} * {members[j]} escapes it",
            witness=(members[i], members[j], int(sub[i, j])),
        )
    table = np.ascontiguousarray(new, dtype=np.int32)
    table.flags.writeable = False
    return CayleyTable(
        k, table, f"subgroup(order={k}) of {g.descriptor}", parent_map=members
    )


def generate_subgroup(g: CayleyTable, seed) -> ElementSet:
    """Closure of a seed set under multiplication (always contains the identity)."""
    t = g.table
    members = {0}
    frontier = [0]
    for x in seed:
        if not 0 <= x < g.order:
            raise IndexOutOfRange(f"element index {x} outside 0..{g.order - 1}")
        if x not in members:
            members.add(int(x))
            frontier.append(int(x))
    while frontier:
        x = frontier.pop()
        for y in list(members):
            for z in (int(t[x, y]), int(t[y, x])):
                if z not in members:
                    members.add(z)
                    frontier.append(z)
    return ElementSet(g, frozenset(members), True)


# --- structure tests ------------------------------------------------------------

def is_ac_group(g: CayleyTable) -> bool:
    """Whether every centralizer of a non-central element is abelian."""
    if g.is_abelian:
        raise AbelianInput("AC is only defined for non-abelian groups")
    cached = g._memo.get("ac")
    if cached is not None:
        return cached
    comm = g.commuting
    central = comm.all(axis=1)
    result = True
    for cls in conjugacy_classes(g):
        x = cls[0]
        if central[x]:
            continue
        mem = np.nonzero(comm[x])[0]
        if not comm[np.ix_(mem, mem)].all():
            result = False
            break
    g._memo["ac"] = result
    return result


def has_uniform_class_sizes(g: CayleyTable):
    """Return (flag, common size or None) over the non-trivial classes."""
    if g.is_abelian:
        raise AbelianInput("class-size profile test needs a non-abelian group")
    sizes = {len(c) for c in conjugacy_classes(g) if len(c) > 1}
    if len(sizes) == 1:
        return True, sizes.pop()
    return False, None


def prime_factorization(n: int) -> dict:
    """Prime -> exponent map (trial division; inputs here are small)."""
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def sylow_decomposition(g: CayleyTable) -> list:
    """Sylow subgroups of a nilpotent group as p-power-order element sets.

    For each prime p dividing |G| the elements of p-power order are collected,
    verified to form a subgroup of the right size, and the product map across
    all factors is verified to be a bijection onto G.
    """
    nilp, _ = is_nilpotent(g)
    if not nilp:
        raise NotNilpotent(
            f"{g.descriptor}: Sylow decomposition by element orders needs nilpotency"
        )
    cached = g._memo.get("sylow")
    if cached is not None:
        return list(cached)
    n = g.order
    if n == 1:
        g._memo["sylow"] = ()
        return []
    orders = element_orders(g)
    comm = g.commuting
    factors = []
    member_lists = []
    for p, e in sorted(prime_factorization(n).items()):
        o = orders.copy()
        while True:
            div = o % p == 0
            if not div.any():
                break
            o[div] //= p
        members = tuple(int(i) for i in np.nonzero(o == 1)[0])
        if len(members) != p ** e:
            raise InternalInconsistency(
                f"p-power-order elements at p={p} number {len(members)}, "
                f"expected {p ** e}"
            )
        lookup = np.full(n, -1, dtype=np.int64)
        lookup[list(members)] = np.arange(len(members))
        if (lookup[g.table[np.ix_(members, members)]] < 0).any():
            raise InternalInconsistency(
                f"p-power-order elements at p={p} are not closed"
            )
        abelian = bool(comm[np.ix_(members, members)].all())
        eset = ElementSet(g, frozenset(members), True)
        factors.append(SylowFactor(p, eset, abelian))
        member_lists.append(members)
    t = g.table
    seen = np.zeros(n, dtype=bool)
    for combo in itertools.product(*member_lists):
        y = combo[0]
        for z in combo[1:]:
            y = int(t[y, z])
        if seen[y]:
            raise InternalInconsistency("Sylow product map is not injective")
        seen[y] = True
    if not seen.all():
        raise InternalInconsistency("Sylow product map is not surjective")
    g._memo["sylow"] = tuple(factors)
    return factors


def nonabelian_sylow_count(g: CayleyTable) -> int:
    return sum(1 for f in sylow_decomposition(g) if not f.abelian)
