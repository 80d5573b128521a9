"""Finite permutation groups with full element enumeration.

Permutations are numpy uint16 image arrays (0-based internally,
1-based in cycle notation).  Composition is left to right: (p*q) means
"apply p, then q", so (p*q).img = q.img[p.img].  Groups enumerate all
their elements by breadth-first closure, which is fine at this scale
(orders up to ~20000) and keeps conjugacy classes, normal closures and
quotients straightforward.  Hot loops are batched through numpy fancy
indexing so even degree-4374 groups close in seconds.
"""

from __future__ import annotations

import math
from typing import Iterable, NamedTuple, Optional, Sequence

import numpy as np

DTYPE = np.uint16
DEFAULT_CEILING = 2**20


class CapacityError(RuntimeError):
    """Group or coset enumeration outgrew its configured ceiling."""


class Perm:
    """A permutation of {1..degree}, stored as a 0-based image array."""

    __slots__ = ("img", "_hash", "_order")

    def __init__(self, img, validate: bool = True):
        arr = np.array(img, dtype=DTYPE, copy=True)
        if validate:
            n = len(arr)
            if n > 65535:
                raise ValueError("degree too large for uint16 images")
            if n and (np.bincount(arr, minlength=n) != 1).any():
                raise ValueError("image array is not a bijection")
        arr.setflags(write=False)
        self.img = arr
        self._hash = None
        self._order = None

    @classmethod
    def _trusted(cls, arr: np.ndarray) -> "Perm":
        p = cls.__new__(cls)
        a = np.ascontiguousarray(arr, dtype=DTYPE)
        a.setflags(write=False)
        p.img = a
        p._hash = None
        p._order = None
        return p

    @classmethod
    def identity(cls, degree: int) -> "Perm":
        return cls._trusted(np.arange(degree, dtype=DTYPE))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> "Perm":
        """Build from 1-based cycles; non-disjoint cycles compose left to right."""
        img = np.arange(degree, dtype=DTYPE)
        for cyc in cycles:
            if len(cyc) < 2:
                continue
            step = np.arange(degree, dtype=DTYPE)
            for x, y in zip(cyc, cyc[1:] + type(cyc)((cyc[0],))):
                if not 1 <= x <= degree:
                    raise ValueError(f"point {x} outside 1..{degree}")
                step[x - 1] = y - 1
            img = step[img]
        return cls(img)

    @classmethod
    def parse(cls, s: str, degree: int) -> "Perm":
        """Parse disjoint-cycle notation, e.g. "(1,2)(3,4)"; "()" is the identity."""
        text = s.replace(" ", "")
        if text in ("()", ""):
            return cls.identity(degree)
        if not (text.startswith("(") and text.endswith(")")):
            raise ValueError(f"malformed permutation {s!r}")
        cycles = []
        for part in text[1:-1].split(")("):
            pts = tuple(int(tok) for tok in part.split(","))
            if len(pts) != len(set(pts)):
                raise ValueError(f"repeated point in cycle {part!r}")
            cycles.append(pts)
        return cls.from_cycles(degree, cycles)

    @property
    def degree(self) -> int:
        return len(self.img)

    def __mul__(self, other: "Perm") -> "Perm":
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return Perm._trusted(other.img[self.img])

    def inverse(self) -> "Perm":
        inv = np.empty_like(self.img)
        inv[self.img] = np.arange(self.degree, dtype=DTYPE)
        return Perm._trusted(inv)

    def __pow__(self, n: int) -> "Perm":
        if n < 0:
            return self.inverse() ** (-n)
        result = Perm.identity(self.degree)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self, g: "Perm") -> "Perm":
        """g^-1 * self * g."""
        return Perm._trusted(g.img[self.img[g.inverse().img]])

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, 1-based, each starting at its least point."""
        seen = np.zeros(self.degree, dtype=bool)
        out = []
        for start in range(self.degree):
            if seen[start] or self.img[start] == start:
                seen[start] = True
                continue
            cyc = [start]
            seen[start] = True
            x = int(self.img[start])
            while x != start:
                cyc.append(x)
                seen[x] = True
                x = int(self.img[x])
            out.append(tuple(p + 1 for p in cyc))
        return out

    def order(self) -> int:
        if self._order is None:
            self._order = math.lcm(*(len(c) for c in self.cycles()), 1)
        return self._order

    def is_identity(self) -> bool:
        return bool((self.img == np.arange(self.degree, dtype=DTYPE)).all())

    def key(self) -> bytes:
        """Bytes key; equal keys iff equal permutations (same degree)."""
        return self.img.tobytes()

    def sort_key(self) -> bytes:
        """Big-endian bytes, so byte order equals lexicographic image order."""
        return self.img.astype(">u2").tobytes()

    def __eq__(self, other):
        return (
            isinstance(other, Perm)
            and self.degree == other.degree
            and bool((self.img == other.img).all())
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.img.tobytes())
        return self._hash

    def __str__(self):
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cyc)

    def __repr__(self):
        return f"Perm[{self}]"


def element_order(g: Perm) -> int:
    return g.order()


class _Closure:
    """Incremental breadth-first closure of a set of generator arrays."""

    def __init__(self, degree: int, ceiling: int, abort_above: Optional[int] = None):
        self.degree = degree
        self.ceiling = ceiling
        self.abort_above = abort_above
        ident = np.arange(degree, dtype=DTYPE)
        self.rows: list[np.ndarray] = [ident]
        self.index: dict[bytes, int] = {ident.tobytes(): 0}
        self.gens: list[np.ndarray] = []
        self._ptr: list[int] = []
        self.aborted = False

    def __contains__(self, row: np.ndarray) -> bool:
        return row.tobytes() in self.index

    def add_seed(self, row: np.ndarray) -> bool:
        key = row.tobytes()
        if key in self.index:
            return False
        if self.abort_above is not None and len(self.rows) + 1 > self.abort_above:
            self.aborted = True
            return False
        if len(self.rows) + 1 > self.ceiling:
            raise CapacityError(f"closure exceeded ceiling {self.ceiling}")
        self.index[key] = len(self.rows)
        self.rows.append(np.array(row, dtype=DTYPE))
        return True

    def add_gen(self, row: np.ndarray):
        self.gens.append(np.asarray(row, dtype=DTYPE))
        self._ptr.append(0)
        self.add_seed(row)

    def run(self) -> bool:
        """Process every (element, generator) pair once; False if aborted."""
        if self.aborted:
            return False
        while True:
            moved = False
            for k, g in enumerate(self.gens):
                start = self._ptr[k]
                if start >= len(self.rows):
                    continue
                moved = True
                stop = len(self.rows)
                self._ptr[k] = stop
                chunk = np.stack(self.rows[start:stop])
                prods = g[chunk]
                for row in prods:
                    key = row.tobytes()
                    if key in self.index:
                        continue
                    if (
                        self.abort_above is not None
                        and len(self.rows) + 1 > self.abort_above
                    ):
                        self.aborted = True
                        return False
                    if len(self.rows) + 1 > self.ceiling:
                        raise CapacityError(
                            f"closure exceeded ceiling {self.ceiling}"
                        )
                    self.index[key] = len(self.rows)
                    self.rows.append(row.copy())
            if not moved:
                return True


class IsoFingerprint(NamedTuple):
    """Cheap isomorphism invariants; equality is necessary, not sufficient."""

    order: int
    order_histogram: tuple[tuple[int, int], ...]
    abelian_invariants: tuple[int, ...]
    center_order: int
    derived_order: int
    class_count: int


class PermGroup:
    """Group generated by permutations of a common degree.

    Elements, conjugacy classes and derived data are computed lazily and
    cached; the element list is sorted lexicographically on image arrays
    so every downstream enumeration is deterministic.
    """

    def __init__(
        self,
        degree: int,
        generators: Iterable[Perm],
        *,
        ceiling: int = DEFAULT_CEILING,
        name: Optional[str] = None,
        tracked: Optional[dict[str, Perm]] = None,
    ):
        gens = []
        seen = set()
        for g in generators:
            if g.degree != degree:
                raise ValueError("generator degree mismatch")
            if g.is_identity() or g.key() in seen:
                continue
            seen.add(g.key())
            gens.append(g)
        self.degree = degree
        self.generators = tuple(gens)
        self.ceiling = ceiling
        self.name = name
        self.tracked = dict(tracked) if tracked else {}
        self._E: Optional[np.ndarray] = None
        self._index: Optional[dict[bytes, int]] = None
        self._elements: Optional[tuple[Perm, ...]] = None
        self._classes = None
        self._class_idx: Optional[np.ndarray] = None
        self._orders: Optional[np.ndarray] = None
        self._center = None
        self._derived = None
        self._fingerprint = None

    # -- element enumeration ------------------------------------------------

    def _enumerate(self):
        if self._E is not None:
            return
        cl = _Closure(self.degree, self.ceiling)
        for g in self.generators:
            cl.add_gen(g.img)
        cl.run()
        E = np.stack(cl.rows)
        keys = [row.astype(">u2").tobytes() for row in E]
        order = sorted(range(len(keys)), key=keys.__getitem__)
        E = np.ascontiguousarray(E[order])
        E.setflags(write=False)
        self._E = E
        self._index = {row.tobytes(): i for i, row in enumerate(E)}

    @classmethod
    def _from_rows(cls, degree, rows_index, gens, **kw) -> "PermGroup":
        """Internal: wrap an already-closed element set."""
        E, index = rows_index
        G = cls(degree, gens, **kw)
        G._E = E
        G._index = index
        return G

    @property
    def order(self) -> int:
        self._enumerate()
        return len(self._E)

    @property
    def elements(self) -> tuple[Perm, ...]:
        self._enumerate()
        if self._elements is None:
            self._elements = tuple(Perm._trusted(row) for row in self._E)
        return self._elements

    @property
    def element_images(self) -> np.ndarray:
        """All elements as one (order, degree) array, sorted."""
        self._enumerate()
        return self._E

    def index_of(self, p: Perm) -> int:
        self._enumerate()
        return self._index[p.key()]

    def __contains__(self, p) -> bool:
        self._enumerate()
        return isinstance(p, Perm) and p.key() in self._index

    def __len__(self):
        return self.order

    def __repr__(self):
        label = self.name or f"degree {self.degree}"
        if self._E is not None:
            return f"PermGroup({label}, order {self.order})"
        return f"PermGroup({label}, {len(self.generators)} gens)"

    def identity(self) -> Perm:
        return Perm.identity(self.degree)

    # -- structure ----------------------------------------------------------

    def element_orders(self) -> np.ndarray:
        """Orders of all elements, aligned with .elements."""
        self._enumerate()
        if self._orders is None:
            E = self._E
            n, deg = E.shape
            orders = np.zeros(n, dtype=np.int64)
            power = E.copy()
            alive = np.arange(n)
            ident = np.arange(deg, dtype=DTYPE)
            k = 1
            while alive.size:
                done = (power[alive] == ident).all(axis=1)
                orders[alive[done]] = k
                alive = alive[~done]
                if alive.size:
                    power[alive] = np.take_along_axis(E[alive], power[alive], axis=1)
                    k += 1
            self._orders = orders
        return self._orders

    def order_histogram(self) -> tuple[tuple[int, int], ...]:
        vals, counts = np.unique(self.element_orders(), return_counts=True)
        return tuple((int(v), int(c)) for v, c in zip(vals, counts))

    def involutions(self) -> tuple[Perm, ...]:
        idx = np.nonzero(self.element_orders() == 2)[0]
        return tuple(Perm._trusted(self._E[i]) for i in idx)

    def conjugacy_classes(self) -> tuple[tuple[Perm, ...], ...]:
        """Conjugation orbits, ordered by least member, members sorted."""
        self._enumerate()
        if self._classes is None:
            E = self._E
            n = len(E)
            gen_pairs = [(g.img, g.inverse().img) for g in self.generators]
            class_idx = np.full(n, -1, dtype=np.int64)
            classes = []
            for start in range(n):
                if class_idx[start] >= 0:
                    continue
                cls_no = len(classes)
                class_idx[start] = cls_no
                members = [start]
                frontier = [start]
                while frontier:
                    F = E[frontier]
                    frontier = []
                    for g_img, ginv_img in gen_pairs:
                        R = g_img[F[:, ginv_img]]
                        for row in R:
                            j = self._index[row.tobytes()]
                            if class_idx[j] < 0:
                                class_idx[j] = cls_no
                                members.append(j)
                                frontier.append(j)
                classes.append(tuple(sorted(members)))
            self._class_idx = class_idx
            self._classes = tuple(
                tuple(Perm._trusted(E[i]) for i in members) for members in classes
            )
        return self._classes

    def class_index_of(self, p: Perm) -> int:
        self.conjugacy_classes()
        return int(self._class_idx[self.index_of(p)])

    def is_abelian(self) -> bool:
        return all(
            g * h == h * g
            for i, g in enumerate(self.generators)
            for h in self.generators[i + 1 :]
        )

    def is_elementary_abelian_2(self) -> bool:
        return all(o <= 2 for o, _ in self.order_histogram())

    def center(self) -> "PermGroup":
        self._enumerate()
        if self._center is None:
            E = self._E
            mask = np.ones(len(E), dtype=bool)
            for g in self.generators:
                mask &= (g.img[E] == E[:, g.img]).all(axis=1)
            members = [Perm._trusted(E[i]) for i in np.nonzero(mask)[0]]
            self._center = self.subgroup(self._reduce_gens(members))
        return self._center

    def _reduce_gens(self, members: list[Perm]) -> list[Perm]:
        """Greedy small generating subset of a closed member list."""
        cl = _Closure(self.degree, self.ceiling)
        gens = []
        for p in members:
            if p.img not in cl:
                gens.append(p)
                cl.add_gen(p.img)
                cl.run()
        return gens

    def derived_subgroup(self) -> "PermGroup":
        if self._derived is None:
            comms = []
            for i, g in enumerate(self.generators):
                for h in self.generators[i + 1 :]:
                    comms.append(g.inverse() * h.inverse() * g * h)
            self._derived = self.normal_closure(comms)
        return self._derived

    def abelian_invariants(self) -> tuple[int, ...]:
        """Primary invariants (prime powers, sorted) of G/G'."""
        Q = self.quotient(self.derived_subgroup())
        orders = [int(o) for o in Q.element_orders()]
        invariants = []
        for p in _prime_factors(Q.order):
            # m_k = number of cyclic p-power factors of exponent >= k,
            # read off the counts of elements killed by p**k
            ms = []
            s_prev, k = 1, 1
            while True:
                s_k = sum(1 for o in orders if p**k % o == 0)
                m = round(math.log(s_k // s_prev, p)) if s_k > s_prev else 0
                if m == 0:
                    break
                ms.append(m)
                s_prev, k = s_k, k + 1
            for i in range(ms[0] if ms else 0):
                invariants.append(p ** sum(1 for m in ms if m > i))
        return tuple(sorted(invariants))

    def fingerprint(self) -> IsoFingerprint:
        if self._fingerprint is None:
            self._fingerprint = IsoFingerprint(
                order=self.order,
                order_histogram=self.order_histogram(),
                abelian_invariants=self.abelian_invariants(),
                center_order=self.center().order,
                derived_order=self.derived_subgroup().order,
                class_count=len(self.conjugacy_classes()),
            )
        return self._fingerprint

    # -- subgroups and quotients ---------------------------------------------

    def subgroup(self, gens: Iterable[Perm]) -> "PermGroup":
        gens = list(gens)
        self._enumerate()
        for g in gens:
            if g.key() not in self._index:
                raise ValueError("subgroup generator outside the group")
        H = PermGroup(self.degree, gens, ceiling=self.ceiling)
        assert self.order % H.order == 0, "Lagrange violated: corrupt closure"
        return H

    def normal_closure(
        self, X: Iterable[Perm], abort_above: Optional[int] = None
    ) -> Optional["PermGroup"]:
        """Smallest normal subgroup containing X.

        With abort_above set, returns None as soon as the closure is known
        to have more than abort_above elements.
        """
        self._enumerate()
        seeds = [x for x in X if not x.is_identity()]
        conj_rows: list[np.ndarray] = []
        conj_seen: set[bytes] = set()
        gen_pairs = [(g.img, g.inverse().img) for g in self.generators]
        for x in seeds:
            if x.key() not in self._index:
                raise ValueError("closure seed outside the group")
            if x.key() in conj_seen:
                continue
            frontier = [x.img]
            conj_seen.add(x.key())
            conj_rows.append(x.img)
            while frontier:
                F = np.stack(frontier)
                frontier = []
                for g_img, ginv_img in gen_pairs:
                    R = g_img[F[:, ginv_img]]
                    for row in R:
                        key = row.tobytes()
                        if key not in conj_seen:
                            conj_seen.add(key)
                            row = row.copy()
                            conj_rows.append(row)
                            frontier.append(row)
        conj_rows.sort(key=lambda r: r.astype(">u2").tobytes())
        cl = _Closure(self.degree, self.ceiling, abort_above)
        gens = []
        for row in conj_rows:
            if row not in cl:
                gens.append(Perm._trusted(row))
                cl.add_gen(row)
                if not cl.run():
                    return None
        E = np.stack(cl.rows)
        keys = [row.astype(">u2").tobytes() for row in E]
        order = sorted(range(len(keys)), key=keys.__getitem__)
        E = np.ascontiguousarray(E[order])
        E.setflags(write=False)
        index = {row.tobytes(): i for i, row in enumerate(E)}
        return PermGroup._from_rows(
            self.degree, (E, index), gens, ceiling=self.ceiling
        )

    def is_normal(self, N: "PermGroup") -> bool:
        if N.degree != self.degree:
            return False
        N._enumerate()
        return all(
            n.conj(g).key() in N._index
            for n in N.generators
            for g in self.generators
        ) and all(n.key() in self._index for n in N.generators)

    def quotient(self, N: "PermGroup") -> "PermGroup":
        """Action of the group on the cosets of a normal subgroup N.

        Generator images are tracked: the quotient's .tracked carries the
        images of this group's tracked permutations.
        """
        if not self.is_normal(N):
            raise ValueError("quotient by a non-normal subgroup")
        self._enumerate()
        N._enumerate()
        n = self.order
        N_E = N.element_images
        coset_of = np.full(n, -1, dtype=np.int64)
        reps: list[np.ndarray] = []

        def open_coset(row: np.ndarray) -> int:
            c = len(reps)
            reps.append(row)
            for member in row[N_E]:
                coset_of[self._index[member.tobytes()]] = c
            return c

        open_coset(np.arange(self.degree, dtype=DTYPE))
        trans = [[] for _ in self.generators]
        i = 0
        while i < len(reps):
            rep = reps[i]
            for k, g in enumerate(self.generators):
                row = g.img[rep]
                j = coset_of[self._index[row.tobytes()]]
                if j < 0:
                    j = open_coset(row)
                trans[k].append(j)
            i += 1
        count = len(reps)
        assert count * N.order == n, "coset bookkeeping failed"
        gen_imgs = [Perm(np.array(t, dtype=DTYPE)) for t in trans]
        tracked = {}
        if self.tracked:
            R = np.stack(reps)
            for label, p in self.tracked.items():
                rows = p.img[R]
                imgs = [
                    int(coset_of[self._index[row.tobytes()]]) for row in rows
                ]
                tracked[label] = Perm(np.array(imgs, dtype=DTYPE))
        Q = PermGroup(count, gen_imgs, ceiling=self.ceiling, tracked=tracked)
        assert Q.order == count, "coset action of a quotient must be regular"
        return Q

    def conjugate_subgroup(self, H: "PermGroup", g: Perm) -> "PermGroup":
        return self.subgroup([h.conj(g) for h in H.generators])

    def element_key_set(self) -> frozenset[bytes]:
        self._enumerate()
        return frozenset(self._index)

    def generating_tuple(self) -> tuple[Perm, ...]:
        """Greedy lexicographically-least generating tuple."""
        self._enumerate()
        cl = _Closure(self.degree, self.ceiling)
        gens = []
        for row in self._E:
            if len(cl.rows) == self.order:
                break
            if row not in cl:
                gens.append(Perm._trusted(row))
                cl.add_gen(row)
                cl.run()
        return tuple(gens)


def generate(degree: int, gens: Iterable[Perm], **kw) -> PermGroup:
    return PermGroup(degree, gens, **kw)


def is_elementary_abelian_2(K: PermGroup) -> bool:
    return K.is_elementary_abelian_2()


def _prime_factors(n: int) -> list[int]:
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


# -- isomorphism testing -----------------------------------------------------


def _class_invariants(G: PermGroup) -> list[tuple[int, int]]:
    """(element order, class size) per element index."""
    classes = G.conjugacy_classes()
    orders = G.element_orders()
    inv = [None] * G.order
    for cls in classes:
        size = len(cls)
        for p in cls:
            i = G.index_of(p)
            inv[i] = (int(orders[i]), size)
    return inv


def _certify_hom(G: PermGroup, gens, H: PermGroup, imgs) -> bool:
    """Check that gens -> imgs extends to an isomorphism via mirrored BFS."""
    n = G.order
    if H.order != n:
        return False
    phi = np.full(n, -1, dtype=np.int64)
    start = G.index_of(G.identity())
    phi[start] = H.index_of(H.identity())
    queue = [start]
    gh = [(g.img, h.img) for g, h in zip(gens, imgs)]
    G_E, H_E = G.element_images, H.element_images
    G_idx, H_idx = G._index, H._index
    qi = 0
    while qi < len(queue):
        x = queue[qi]
        qi += 1
        xrow = G_E[x]
        hrow = H_E[phi[x]]
        for g_img, h_img in gh:
            y = G_idx[g_img[xrow].tobytes()]
            fy = H_idx[h_img[hrow].tobytes()]
            if phi[y] < 0:
                phi[y] = fy
                queue.append(y)
            elif phi[y] != fy:
                return False
    if len(queue) != n:
        return False
    seen = np.zeros(n, dtype=bool)
    seen[phi] = True
    return bool(seen.all())


def isomorphic(G: PermGroup, H: PermGroup) -> bool:
    """Exact isomorphism test: fingerprint gate, then certified search."""
    if G.order != H.order:
        return False
    if G.fingerprint() != H.fingerprint():
        return False
    n = G.order
    if n == 1:
        return True
    gens = G.generating_tuple()
    G_inv = _class_invariants(G)
    H_inv = _class_invariants(H)
    H_classes = H.conjugacy_classes()
    gen_idx = [G.index_of(g) for g in gens]

    # orders of the partial subgroups <g_0..g_k> prune the search hard
    partial_orders = []
    for k in range(len(gens)):
        partial_orders.append(PermGroup(G.degree, gens[: k + 1]).order)
    pair_orders = [
        [(gens[i] * gens[k]).order() for i in range(k)] for k in range(len(gens))
    ]

    # the first image may be fixed to one representative per class
    # (conjugating an isomorphism by an inner automorphism is free)
    cand0 = [cls[0] for cls in H_classes if H_inv[H.index_of(cls[0])] == G_inv[gen_idx[0]]]
    later = [
        [h for h in H.elements if H_inv[H.index_of(h)] == G_inv[gen_idx[k]]]
        for k in range(len(gens))
    ]

    def extend(k: int, imgs: list[Perm]) -> bool:
        if k == len(gens):
            return _certify_hom(G, gens, H, imgs)
        pool = cand0 if k == 0 else later[k]
        for h in pool:
            if any((imgs[i] * h).order() != pair_orders[k][i] for i in range(k)):
                continue
            cl = _Closure(H.degree, H.ceiling, abort_above=partial_orders[k])
            for p in imgs:
                cl.add_gen(p.img)
            cl.add_gen(h.img)
            if not cl.run() or len(cl.rows) != partial_orders[k]:
                continue
            if extend(k + 1, imgs + [h]):
                return True
        return False

    return extend(0, [])


# -- standard constructions ---------------------------------------------------


def trivial_group(degree: int = 1) -> PermGroup:
    return PermGroup(degree, [], name="1")


def cyclic_group(n: int) -> PermGroup:
    if n == 1:
        return trivial_group()
    gen = Perm.from_cycles(n, [tuple(range(1, n + 1))])
    return PermGroup(n, [gen], name=f"C{n}")


def symmetric_group(n: int) -> PermGroup:
    if n <= 1:
        return trivial_group(max(n, 1))
    gens = [Perm.from_cycles(n, [(1, 2)])]
    if n > 2:
        gens.append(Perm.from_cycles(n, [tuple(range(1, n + 1))]))
    return PermGroup(n, gens, name=f"S{n}")


def alternating_group(n: int) -> PermGroup:
    if n <= 2:
        return trivial_group(max(n, 1))
    gens = [Perm.from_cycles(n, [(1, 2, 3)])]
    if n > 3:
        long = tuple(range(1, n + 1)) if n % 2 else tuple(range(2, n + 1))
        gens.append(Perm.from_cycles(n, [long]))
    return PermGroup(n, gens, name=f"A{n}")


def dihedral_group(order: int) -> PermGroup:
    """Dihedral group named by order: dihedral_group(8) has 8 elements."""
    if order % 2 or order < 2:
        raise ValueError("dihedral order must be even and >= 2")
    n = order // 2
    if n == 1:
        return PermGroup(2, [Perm.from_cycles(2, [(1, 2)])], name="C2")
    if n == 2:
        gens = [Perm.from_cycles(4, [(1, 2)]), Perm.from_cycles(4, [(3, 4)])]
        return PermGroup(4, gens, name="D4")
    rot = Perm.from_cycles(n, [tuple(range(1, n + 1))])
    ref = Perm(np.array([n - 1 - i for i in range(n)], dtype=DTYPE))
    return PermGroup(n, [rot, ref], name=f"D{order}")


def elementary_abelian_2(rank: int) -> PermGroup:
    gens = [
        Perm.from_cycles(2 * rank, [(2 * i + 1, 2 * i + 2)]) for i in range(rank)
    ]
    return PermGroup(2 * rank, gens, name=f"2^{rank}")


def quaternion_group() -> PermGroup:
    i = Perm.from_cycles(8, [(1, 3, 2, 4), (5, 8, 6, 7)])
    j = Perm.from_cycles(8, [(1, 5, 2, 6), (3, 7, 4, 8)])
    return PermGroup(8, [i, j], name="Q8")


def dicyclic_group_12() -> PermGroup:
    a = Perm.from_cycles(12, [(1, 2, 3, 4, 5, 6), (7, 12, 11, 10, 9, 8)])
    b = Perm.from_cycles(12, [(1, 7, 4, 10), (2, 8, 5, 11), (3, 9, 6, 12)])
    return PermGroup(12, [a, b], name="Dic3")


def direct_product(*groups: PermGroup, name: Optional[str] = None) -> PermGroup:
    degree = sum(G.degree for G in groups)
    gens = []
    offset = 0
    for G in groups:
        for g in G.generators:
            img = np.arange(degree, dtype=DTYPE)
            img[offset : offset + G.degree] = g.img + offset
            gens.append(Perm(img))
        offset += G.degree
    if name is None:
        name = " x ".join(G.name or "?" for G in groups)
    return PermGroup(degree, gens, name=name)
