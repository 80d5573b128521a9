"""T-sets on a concrete group, pair typing, and the two obstruction engines.

A T-set is the closure of the four seed involutions a, b, c, ab under
conjugation and under taking cubes of order-6 products.  Pairs of T-elements
acquire dihedral types from the order of their product and T-membership of
the relevant powers.  Obstructions to a Majorana representation come in two
kinds: an elementary abelian 2^3 subgroup all of whose involutions lie in T
(contradicting the fusion rules), and an exact inner-product audit over the
axis span of a 2xD8 subgroup (contradicting associativity of the form).
Both produce self-verifying certificates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .dihedral import FUSION
from .fpgrp import Word, evaluate_word, parse_word
from .permgrp import (
    CapacityError,
    Perm,
    PermGroup,
    cyclic_group,
    dihedral_group,
    direct_product,
    elementary_abelian_2,
    generate,
    isomorphic,
)
from .qlin import Vector, parse_rat, rat_str

__all__ = [
    "PAIR_INNER",
    "AxisSpanModel",
    "Derivation",
    "M1Witness",
    "NotTrianglePointError",
    "ObstructionCertificate",
    "PairType",
    "TConfig",
    "UnsupportedConfigurationError",
    "axis_span_model",
    "cert_from_dict",
    "cert_to_dict",
    "find_subgroups_iso",
    "klein_identity",
    "klein_search",
    "klein_witnesses",
    "m1_audit",
    "obstruct",
    "pair_type",
    "t_closure",
    "two_d8_reference",
    "verify_certificate",
]


class NotTrianglePointError(ValueError):
    """Some product of T-set elements has order exceeding six."""


class UnsupportedConfigurationError(ValueError):
    """The configuration falls outside what the audit machinery supports."""


# Inner products of distinct axes by dihedral pair type.
PAIR_INNER = {
    "1A": Fraction(1),
    "2A": Fraction(1, 8),
    "2B": Fraction(0),
    "3A": Fraction(13, 256),
    "3C": Fraction(1, 64),
    "4A": Fraction(1, 32),
    "4B": Fraction(1, 64),
    "5A": Fraction(3, 128),
    "6A": Fraction(5, 256),
}


@dataclass(frozen=True)
class PairType:
    """Either a forced dihedral type or the ambiguous order-3 pair."""

    options: frozenset

    @property
    def forced(self) -> str | None:
        if len(self.options) == 1:
            return next(iter(self.options))
        return None

    def __str__(self):
        return self.forced or "{" + ",".join(sorted(self.options)) + "}"


def _forced(name: str) -> PairType:
    return PairType(frozenset({name}))


AMBIGUOUS_3 = PairType(frozenset({"3A", "3C"}))


@dataclass(frozen=True)
class Derivation:
    """How a T-set element was obtained; the word re-derives it from seeds."""

    kind: str  # "seed" | "conjugate" | "cube"
    word: Word


@dataclass(frozen=True, eq=False)
class TConfig:
    """A group with its seed involutions and the closed T-set."""

    group: PermGroup
    seeds: tuple[Perm, Perm, Perm]
    tset: tuple[Perm, ...]
    derivations: tuple[Derivation, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "_index", {t.key(): i for i, t in enumerate(self.tset)}
        )

    def __contains__(self, p: Perm) -> bool:
        return p.key() in self._index

    def index_of(self, p: Perm) -> int:
        try:
            return self._index[p.key()]
        except KeyError:
            raise ValueError(f"{p} is not in the T-set") from None

    def derivation_of(self, p: Perm) -> Derivation:
        return self.derivations[self.index_of(p)]

    def seed_images(self) -> dict[str, Perm]:
        a, b, c = self.seeds
        return {"a": a, "b": b, "c": c}


class _ClosureState:
    """Mutable working set for t_closure: elements, derivations, orbits."""

    def __init__(self, seeds: dict[str, Perm]):
        self.seeds = seeds
        self.entries: dict[bytes, tuple[Perm, Derivation]] = {}
        self.orbit: dict[bytes, int] = {}
        self.next_orbit = 0

    def add(self, p: Perm, deriv: Derivation, orbit: int | None = None) -> bool:
        k = p.key()
        if k in self.entries:
            return False
        if orbit is None:
            orbit = self.next_orbit
            self.next_orbit += 1
        self.entries[k] = (p, deriv)
        self.orbit[k] = orbit
        return True

    def conj_close(self, queue: list[Perm]):
        while queue:
            t = queue.pop()
            kt = t.key()
            word = self.entries[kt][1].word
            orb = self.orbit[kt]
            for letter, g in self.seeds.items():
                u = t.conj(g)
                deriv = Derivation("conjugate", word.conj(Word(letter)).reduced())
                if self.add(u, deriv, orb):
                    queue.append(u)

    def sorted_elements(self) -> list[tuple[Perm, Derivation]]:
        return sorted(self.entries.values(), key=lambda e: e[0].sort_key())


def _identity_mask(power: np.ndarray, ident: np.ndarray) -> np.ndarray:
    return (power == ident).all(axis=1)


def _scan_products(state: _ClosureState) -> list[tuple[Perm, Word, Word]]:
    """Check o(ts) <= 6 for all T-pairs; list cubes of the order-6 products.

    Products are conjugation-invariant, so the left factor ranges over one
    representative per conjugation orbit while the right factor ranges over
    everything; powers are computed on whole image matrices at once.
    """
    elems = state.sorted_elements()
    perms = [p for p, _ in elems]
    words = [d.word for _, d in elems]
    m = np.stack([p.img for p in perms]).astype(np.intp)
    deg = m.shape[1]
    ident = np.arange(deg, dtype=np.intp)
    seen_orbits: set[int] = set()
    reps: list[int] = []
    for i, p in enumerate(perms):
        orb = state.orbit[p.key()]
        if orb not in seen_orbits:
            seen_orbits.add(orb)
            reps.append(i)
    cubes: list[tuple[Perm, Word, Word]] = []
    for ri in reps:
        prod = m[:, m[ri]]  # row s is the image table of perms[ri] * perms[s]
        p2 = np.take_along_axis(prod, prod, axis=1)
        p3 = np.take_along_axis(prod, p2, axis=1)
        p4 = np.take_along_axis(prod, p3, axis=1)
        p5 = np.take_along_axis(prod, p4, axis=1)
        p6 = np.take_along_axis(prod, p5, axis=1)
        is2 = _identity_mask(p2, ident)
        is3 = _identity_mask(p3, ident)
        ok = _identity_mask(p4, ident) | _identity_mask(p5, ident) | _identity_mask(p6, ident)
        if not ok.all():
            s = int(np.flatnonzero(~ok)[0])
            raise NotTrianglePointError(
                f"product of T-set elements {perms[ri]} and {perms[s]} "
                f"has order {(perms[ri] * perms[s]).order()} > 6"
            )
        for s in np.flatnonzero(_identity_mask(p6, ident) & ~is2 & ~is3):
            cube = Perm(p3[int(s)].astype(np.uint16), validate=False)
            cubes.append((cube, words[ri], words[int(s)]))
    return cubes


def t_closure(G: PermGroup, a: Perm, b: Perm, c: Perm) -> TConfig:
    """Close {a, b, c, ab} under conjugation and the order-6 cube rule."""
    for name, p in (("a", a), ("b", b), ("c", c)):
        if p.degree != G.degree:
            raise ValueError(f"seed {name} has the wrong degree")
        if p not in G:
            raise ValueError(f"seed {name} does not lie in the group")
        if p.order() != 2:
            raise ValueError(f"seed {name} must be an involution")
    ab = a * b
    if ab.order() != 2:
        raise ValueError("ab must be an involution")
    if generate(G.degree, [a, b, c]).order != G.order:
        raise ValueError("seeds must generate the group")

    state = _ClosureState({"a": a, "b": b, "c": c})
    queue = []
    seed_words = ((a, Word("a")), (b, Word("b")), (c, Word("c")), (ab, Word("ab")))
    for p, w in seed_words:
        if state.add(p, Derivation("seed", w)):
            queue.append(p)
    state.conj_close(queue)
    while True:
        fresh = []
        for cube, w_t, w_s in _scan_products(state):
            deriv = Derivation("cube", ((w_t * w_s) ** 3).reduced())
            if state.add(cube, deriv):
                fresh.append(cube)
        if not fresh:
            break
        state.conj_close(fresh)
    elems = state.sorted_elements()
    return TConfig(
        group=G,
        seeds=(a, b, c),
        tset=tuple(p for p, _ in elems),
        derivations=tuple(d for _, d in elems),
    )


def _typed(contains, universe, t: Perm, s: Perm) -> PairType:
    p = t * s
    o = p.order()
    if o == 1:
        return _forced("1A")
    if o == 2:
        return _forced("2A") if contains(p) else _forced("2B")
    if o == 3:
        # Forced 3A when ts is the square of an order-6 product sharing an
        # axis with the pair; otherwise the type cannot be decided here.
        p_inv = p.inverse()
        for x in (t, s):
            for r in universe:
                q = x * r
                if q.order() == 6:
                    q2 = q * q
                    if q2 == p or q2 == p_inv:
                        return _forced("3A")
        return AMBIGUOUS_3
    if o == 4:
        return _forced("4B") if contains(p * p) else _forced("4A")
    if o == 5:
        return _forced("5A")
    if o == 6:
        return _forced("6A")
    raise NotTrianglePointError(f"product of {t} and {s} has order {o} > 6")


def pair_type(cfg: TConfig, t: Perm, s: Perm) -> PairType:
    if t not in cfg or s not in cfg:
        raise ValueError("both elements must lie in the T-set")
    return _typed(cfg.__contains__, cfg.tset, t, s)


@dataclass(frozen=True, eq=False)
class AxisSpanModel:
    """Formal axis span over the designated involutions S of a subgroup K.

    Axes are indexed by the elements of ``axes`` in the given order; pair
    types are decided by membership in S itself, which agrees with the
    ambient T-set whenever S = K intersect T.
    """

    subgroup: PermGroup
    axes: tuple[Perm, ...]

    def __post_init__(self):
        object.__setattr__(self, "_index", {t.key(): i for i, t in enumerate(self.axes)})

    @property
    def dim(self) -> int:
        return len(self.axes)

    def __contains__(self, p: Perm) -> bool:
        return p.key() in self._index

    def axis_index(self, p: Perm) -> int:
        try:
            return self._index[p.key()]
        except KeyError:
            raise ValueError(f"{p} is not an axis of the model") from None

    def pair_of(self, t: Perm, s: Perm) -> PairType:
        return _typed(self.__contains__, self.axes, t, s)

    def inner_entry(self, i: int, j: int) -> Fraction:
        if i == j:
            return Fraction(1)
        kind = self.pair_of(self.axes[i], self.axes[j]).forced
        if kind is None:
            raise UnsupportedConfigurationError(
                "inner product of an ambiguous order-3 pair is undetermined"
            )
        return PAIR_INNER[kind]

    def product_entry(self, i: int, j: int) -> dict[int, Fraction] | None:
        """Coefficients of a_i * a_j over the axes, or None if inexpressible."""
        if i == j:
            return {i: Fraction(1)}
        t, s = self.axes[i], self.axes[j]
        kind = self.pair_of(t, s).forced
        if kind == "2B":
            return {}
        if kind == "2A":
            k = self.axis_index(t * s)
            e = Fraction(1, 8)
            return {i: e, j: e, k: -e}
        if kind == "3C":
            k = self.axis_index(t * s * t)
            e = Fraction(1, 64)
            return {i: e, j: e, k: -e}
        if kind == "4B":
            ts = t * s
            k1 = self.axis_index(t * s * t)
            k2 = self.axis_index(s * t * s)
            k3 = self.axis_index(ts * ts)
            e = Fraction(1, 64)
            out = {i: e, j: e}
            for k, delta in ((k1, -e), (k2, -e), (k3, e)):
                out[k] = out.get(k, Fraction(0)) + delta
            return {k: v for k, v in out.items() if v}
        return None


def axis_span_model(
    K: PermGroup, axes, order: list[Perm] | None = None
) -> AxisSpanModel:
    members = sorted(axes, key=lambda p: p.sort_key()) if order is None else list(order)
    for t in members:
        if t.order() != 2 or t not in K:
            raise ValueError(f"{t} is not an involution of the subgroup")
    return AxisSpanModel(subgroup=K, axes=tuple(members))


@dataclass(frozen=True)
class M1Witness:
    """A basis triple where the two evaluations of the form disagree."""

    triple: tuple[Perm, Perm, Perm]
    indices: tuple[int, int, int]
    lhs: Fraction
    rhs: Fraction


# LHS pairs must have axis-span products; 4A and order-3 pairs do not.
_EXPRESSIBLE = ("2A", "2B", "4B")


def audit_model(model: AxisSpanModel) -> M1Witness | None:
    """First basis triple (i,j,k) with (a_i a_j, a_k) != (a_i, a_j a_k)."""
    n = model.dim
    inner_cache: dict[tuple[int, int], Fraction] = {}

    def inner_of(i, j):
        key = (i, j) if i <= j else (j, i)
        if key not in inner_cache:
            inner_cache[key] = model.inner_entry(*key)
        return inner_cache[key]

    products: list[list[dict[int, Fraction] | None]] = [
        [None] * n for _ in range(n)
    ]
    for i in range(n):
        for j in range(n):
            if i == j or model.pair_of(model.axes[i], model.axes[j]).forced in _EXPRESSIBLE:
                products[i][j] = model.product_entry(i, j)
    for i in range(n):
        for j in range(n):
            left = products[i][j]
            if i == j or left is None:
                continue
            for k in range(n):
                right = products[j][k]
                if right is None:
                    continue
                lhs = sum((c * inner_of(m, k) for m, c in left.items()), Fraction(0))
                rhs = sum((c * inner_of(i, m) for m, c in right.items()), Fraction(0))
                if lhs != rhs:
                    return M1Witness(
                        triple=(model.axes[i], model.axes[j], model.axes[k]),
                        indices=(i, j, k),
                        lhs=lhs,
                        rhs=rhs,
                    )
    return None


def two_d8_reference() -> PermGroup:
    return direct_product(cyclic_group(2), dihedral_group(8), name="2xD8")


def _canonical_2d8_basis(K: PermGroup, in_t) -> list[Perm] | None:
    """Order the ten designated involutions of a 2xD8 by their structural roles.

    Requires exactly one missing involution, central in K; the roles are fixed
    by t9 = square of an order-4 element, t10 = t9 * missing, and a noncentral
    pair y, z with o(yz) = 4.  Any valid choice of y, z differs by an
    automorphism preserving the designated set, so the audit is unaffected.
    """
    invs = K.involutions()
    if len(invs) != 11:
        return None
    missing = [t for t in invs if not in_t(t)]
    if len(missing) != 1:
        return None
    t11 = missing[0]
    gens = K.generating_tuple()
    if any(t11 * g != g * t11 for g in gens):
        return None
    order4 = next((g for g in K.elements if g.order() == 4), None)
    if order4 is None:
        return None
    t9 = order4 * order4
    if t9 == t11:
        return None
    t10 = t9 * t11
    central_keys = {t9.key(), t10.key(), t11.key()}
    noncentral = [t for t in invs if t.key() not in central_keys]
    if len(noncentral) != 8:
        return None
    y = noncentral[0]
    z = next((v for v in noncentral if (y * v).order() == 4), None)
    if z is None:
        return None
    t1 = y.conj(z)
    basis = [t1, y, t10 * y, t10 * t1, z.conj(y) * t11, z * t11, z.conj(y), z, t9, t10]
    keys = {t.key() for t in basis}
    if len(keys) != 10 or t11.key() in keys or not all(in_t(t) for t in basis):
        return None
    return basis


def m1_audit(cfg: TConfig, K: PermGroup, order: list[Perm] | None = None) -> M1Witness | None:
    """Audit the axis span of K against associativity of the form.

    Supports subgroups with element orders in {1, 2, 4} only: their pair
    types are 2A/2B/4A/4B, the cases with axis-span products or pinned inner
    products.
    """
    if any(o not in (1, 2, 4) for o in (int(x) for x in K.element_orders())):
        raise UnsupportedConfigurationError(
            "audit requires all subgroup element orders in {1, 2, 4}"
        )
    axes = [t for t in K.involutions() if t in cfg]
    if order is None:
        order = _canonical_2d8_basis(K, cfg.__contains__) or sorted(
            axes, key=lambda p: p.sort_key()
        )
    model = axis_span_model(K, axes, order)
    return audit_model(model)


def _tset_matrix(cfg: TConfig) -> np.ndarray:
    return np.stack([t.img for t in cfg.tset]).astype(np.intp)


def _orbit_representatives(cfg: TConfig) -> list[int]:
    """One index per conjugation orbit of the T-set, first in sorted order."""
    seen: set[bytes] = set()
    reps = []
    for i, t in enumerate(cfg.tset):
        if t.key() in seen:
            continue
        reps.append(i)
        queue = [t]
        seen.add(t.key())
        while queue:
            u = queue.pop()
            for g in cfg.seeds:
                v = u.conj(g)
                if v.key() not in seen:
                    seen.add(v.key())
                    queue.append(v)
    return reps


def _klein_triples(cfg: TConfig, stop_early: bool) -> list[tuple[Perm, Perm, Perm]]:
    """Generating triples (x, y, z) of 2^3 subgroups inside the T-set.

    Anchored at one representative per conjugation orbit of x; full coverage
    of all subgroups is restored afterwards by closing under conjugation.
    """
    tset = cfg.tset
    n = len(tset)
    m = _tset_matrix(cfg)
    index = {t.key(): i for i, t in enumerate(tset)}
    found: list[tuple[Perm, Perm, Perm]] = []
    for xi in _orbit_representatives(cfg):
        x = tset[xi]
        prod = m[:, m[xi]]
        rev = m[xi][m]
        commute = (prod == rev).all(axis=1)
        cand = [
            s
            for s in np.flatnonzero(commute)
            if s != xi and prod[s].astype(np.uint16).tobytes() in index
        ]
        for yj_pos, yj in enumerate(cand):
            y = tset[int(yj)]
            xy_key = prod[yj].astype(np.uint16).tobytes()
            rest = np.array([s for s in cand[yj_pos + 1 :]], dtype=np.intp)
            if rest.size == 0:
                continue
            sub = m[rest]
            yz = sub[:, m[yj]]
            zy = m[yj][sub]
            pair_ok = (yz == zy).all(axis=1)
            for pos in np.flatnonzero(pair_ok):
                zi = int(rest[pos])
                z_key = tset[zi].key()
                if z_key == xy_key:
                    continue
                yz_key = yz[pos].astype(np.uint16).tobytes()
                if yz_key not in index:
                    continue
                xyz = yz[pos][m[xi]]
                if xyz.astype(np.uint16).tobytes() not in index:
                    continue
                found.append((x, y, tset[zi]))
                if stop_early:
                    return found
    return found


def _subgroup_of_triple(cfg: TConfig, triple: tuple[Perm, Perm, Perm]) -> PermGroup:
    K = generate(cfg.group.degree, list(triple))
    if K.order != 8 or not K.is_elementary_abelian_2():
        raise RuntimeError("klein scan produced a non-2^3 subgroup")
    return K


def klein_search(cfg: TConfig) -> PermGroup | None:
    """First 2^3 subgroup with all seven involutions in the T-set, or None."""
    triples = _klein_triples(cfg, stop_early=True)
    if not triples:
        return None
    return _subgroup_of_triple(cfg, triples[0])


def klein_witnesses(cfg: TConfig) -> tuple[PermGroup, ...]:
    """All 2^3 subgroups with every involution in the T-set."""
    subgroups: dict[frozenset, PermGroup] = {}
    queue = []
    for triple in _klein_triples(cfg, stop_early=False):
        K = _subgroup_of_triple(cfg, triple)
        ks = K.element_key_set()
        if ks not in subgroups:
            subgroups[ks] = K
            queue.append(K)
    while queue:
        K = queue.pop()
        for g in cfg.seeds:
            Kg = cfg.group.conjugate_subgroup(K, g)
            ks = Kg.element_key_set()
            if ks not in subgroups:
                subgroups[ks] = Kg
                queue.append(Kg)
    return tuple(
        subgroups[ks] for ks in sorted(subgroups, key=lambda s: tuple(sorted(s)))
    )


def klein_identity() -> dict:
    """Symbolic form of the 2^3 fusion contradiction in a 7-axis span.

    With every pair of the seven involutions typed 2A, the three differences
    alpha = a(t1) - a(t0 t1), beta = a(t2) - a(t0 t2), gamma = a(t1 t2) -
    a(t0 t1 t2) are 1/4-eigenvectors of multiplication by a(t0), yet
    alpha * beta = -(1/4) gamma: the (1/4, 1/4) fusion cell excludes 1/4.
    """
    K = elementary_abelian_2(3)
    t0, t1, t2 = K.generating_tuple()
    model = axis_span_model(K, K.involutions())
    dim = model.dim

    def axis(p: Perm) -> Vector:
        return Vector.unit(dim, model.axis_index(p))

    def mul(u: Vector, v: Vector) -> Vector:
        out = Vector.zero(dim)
        for i, ci in enumerate(u):
            if not ci:
                continue
            for j, cj in enumerate(v):
                if not cj:
                    continue
                coeffs = model.product_entry(i, j)
                for k, ck in coeffs.items():
                    out = out + Vector.unit(dim, k) * (ci * cj * ck)
        return out

    for i in range(dim):
        for j in range(dim):
            if model.pair_of(model.axes[i], model.axes[j]).forced != ("1A" if i == j else "2A"):
                raise UnsupportedConfigurationError("expected an all-2A klein span")

    alpha = axis(t1) - axis(t0 * t1)
    beta = axis(t2) - axis(t0 * t2)
    gamma = axis(t1 * t2) - axis(t0 * t1 * t2)
    quarter = Fraction(1, 4)
    steps = []
    if mul(alpha, beta) != gamma * -quarter:
        raise UnsupportedConfigurationError("product identity failed to expand")
    steps.append("alpha * beta = -(1/4) gamma")
    a0 = axis(t0)
    for name, w in (("alpha", alpha), ("beta", beta), ("gamma", gamma)):
        if mul(a0, w) != w * quarter:
            raise UnsupportedConfigurationError(f"{name} is not a 1/4-eigenvector")
        steps.append(f"a(t0) * {name} = (1/4) {name}")
    cell = FUSION[(quarter, quarter)]
    if quarter in cell:
        raise UnsupportedConfigurationError("fusion cell unexpectedly admits 1/4")
    steps.append("(1/4, 1/4) fusion cell is {1, 0}: eigenvalue 1/4 excluded")
    return {
        "ok": True,
        "rhs_coefficient": -quarter,
        "eigenvalue": quarter,
        "fusion_cell": cell,
        "steps": tuple(steps),
    }


def find_subgroups_iso(G: PermGroup, ref: PermGroup) -> tuple[PermGroup, ...]:
    """All subgroups of G isomorphic to ref, via generator-order backtracking.

    The first generator is anchored at conjugacy class representatives; the
    full list is recovered by closing under conjugation.
    """
    if ref.order > 32:
        raise ValueError("reference group too large for subgroup search")
    ref_gens = ref.generating_tuple()
    orders = [g.order() for g in ref_gens]
    target = ref.order
    pools: dict[int, list[Perm]] = {}
    for o in set(orders):
        pools[o] = [g for g in G.elements if g.order() == o]
    anchors = [
        min(cls, key=lambda p: p.sort_key())
        for cls in G.conjugacy_classes()
        if cls[0].order() == orders[0]
    ]
    found: dict[frozenset, PermGroup] = {}
    seen_prefix: set[tuple[int, frozenset]] = set()

    def extend(gens: list[Perm], depth: int):
        try:
            H = generate(G.degree, gens, ceiling=target)
            if target % H.order:
                return
        except CapacityError:
            return
        state = (depth, H.element_key_set())
        if state in seen_prefix:
            return
        seen_prefix.add(state)
        if depth == len(orders):
            if H.order == target and isomorphic(H, ref):
                found.setdefault(H.element_key_set(), H)
            return
        for g in pools[orders[depth]]:
            extend(gens + [g], depth + 1)

    for x in sorted(anchors, key=lambda p: p.sort_key()):
        extend([x], 1)
    queue = list(found.values())
    while queue:
        H = queue.pop()
        for g in G.generating_tuple():
            Hg = G.conjugate_subgroup(H, g)
            ks = Hg.element_key_set()
            if ks not in found:
                found[ks] = Hg
                queue.append(Hg)
    return tuple(found[ks] for ks in sorted(found, key=lambda s: tuple(sorted(s))))


@dataclass(frozen=True)
class ObstructionCertificate:
    """Machine-checkable record of why a configuration has no representation."""

    kind: str  # "klein" | "m1-audit"
    degree: int
    group_order: int
    generators: tuple[str, ...]
    members: tuple[tuple[str, str], ...]  # (cycles, derivation word)
    basis: tuple[str, ...] | None = None
    triple: tuple[str, str, str] | None = None
    lhs: str | None = None
    rhs: str | None = None


def cert_to_dict(cert: ObstructionCertificate) -> dict:
    out = {
        "kind": cert.kind,
        "degree": cert.degree,
        "group_order": cert.group_order,
        "generators": list(cert.generators),
        "members": [[p, w] for p, w in cert.members],
    }
    if cert.kind == "m1-audit":
        out["basis"] = list(cert.basis)
        out["triple"] = list(cert.triple)
        out["lhs"] = cert.lhs
        out["rhs"] = cert.rhs
    return out


def cert_from_dict(data: dict) -> ObstructionCertificate:
    kind = data["kind"]
    if kind not in ("klein", "m1-audit"):
        raise ValueError(f"unknown certificate kind {kind!r}")
    return ObstructionCertificate(
        kind=kind,
        degree=int(data["degree"]),
        group_order=int(data["group_order"]),
        generators=tuple(data["generators"]),
        members=tuple((p, w) for p, w in data["members"]),
        basis=tuple(data["basis"]) if "basis" in data else None,
        triple=tuple(data["triple"]) if "triple" in data else None,
        lhs=data.get("lhs"),
        rhs=data.get("rhs"),
    )


def _klein_certificate(cfg: TConfig, K: PermGroup) -> ObstructionCertificate:
    members = tuple(
        (str(t), str(cfg.derivation_of(t).word)) for t in K.involutions()
    )
    return ObstructionCertificate(
        kind="klein",
        degree=cfg.group.degree,
        group_order=cfg.group.order,
        generators=tuple(str(g) for g in K.generating_tuple()),
        members=members,
    )


def _m1_certificate(
    cfg: TConfig, K: PermGroup, basis: list[Perm], witness: M1Witness
) -> ObstructionCertificate:
    return ObstructionCertificate(
        kind="m1-audit",
        degree=cfg.group.degree,
        group_order=cfg.group.order,
        generators=tuple(str(g) for g in K.generating_tuple()),
        members=tuple((str(t), str(cfg.derivation_of(t).word)) for t in basis),
        basis=tuple(str(t) for t in basis),
        triple=tuple(str(t) for t in witness.triple),
        lhs=rat_str(witness.lhs),
        rhs=rat_str(witness.rhs),
    )


def _klein_in_subgroup(cfg: TConfig, K: PermGroup) -> PermGroup | None:
    """2^3 subgroup of small K with every involution in the T-set, if any."""
    invs = [t for t in K.involutions() if t in cfg]
    for i, x in enumerate(invs):
        for j in range(i + 1, len(invs)):
            y = invs[j]
            if x * y != y * x or (x * y) not in cfg:
                continue
            xy = x * y
            for k in range(j + 1, len(invs)):
                z = invs[k]
                if z == xy or x * z != z * x or y * z != z * y:
                    continue
                if (x * z) in cfg and (y * z) in cfg and (xy * z) in cfg:
                    return generate(cfg.group.degree, [x, y, z])
    return None


def obstruct(cfg: TConfig) -> ObstructionCertificate | None:
    """Certificate that no Majorana representation exists, or None.

    Tries the Klein fusion obstruction first; failing that, audits every
    2xD8 subgroup for an M1 violation over its axis span.
    """
    K = klein_search(cfg)
    if K is not None:
        cert = _klein_certificate(cfg, K)
    else:
        cert = None
        for K in find_subgroups_iso(cfg.group, two_d8_reference()):
            designated = [t for t in K.involutions() if t in cfg]
            if len(designated) == 11:
                inner = _klein_in_subgroup(cfg, K)
                if inner is not None:
                    cert = _klein_certificate(cfg, inner)
                    break
            elif len(designated) == 10:
                basis = _canonical_2d8_basis(K, cfg.__contains__)
                if basis is None:
                    basis = designated
                witness = audit_model(axis_span_model(K, designated, basis))
                if witness is not None:
                    cert = _m1_certificate(cfg, K, basis, witness)
                    break
        if cert is None:
            return None
    if not verify_certificate(cfg, cert):
        raise RuntimeError("obstruction certificate failed self-verification")
    return cert


def verify_certificate(cfg: TConfig, cert: ObstructionCertificate) -> bool:
    """Re-check a certificate from scratch against the configuration."""
    deg = cfg.group.degree
    if cert.degree != deg or cert.group_order != cfg.group.order:
        return False
    images = cfg.seed_images()
    try:
        gens = [Perm.parse(s, deg) for s in cert.generators]
        members = [(Perm.parse(s, deg), parse_word(w)) for s, w in cert.members]
    except ValueError:
        return False
    for p, w in members:
        if evaluate_word(w, images) != p or p not in cfg:
            return False
    K = generate(deg, gens)
    if cert.kind == "klein":
        if K.order != 8 or not K.is_elementary_abelian_2():
            return False
        claimed = {p.key() for p, _ in members}
        return len(members) == 7 and {t.key() for t in K.involutions()} == claimed
    if K.order != 16 or not isomorphic(K, two_d8_reference()):
        return False
    member_keys = {p.key() for p, _ in members}
    designated = {t.key() for t in K.involutions() if t in cfg}
    if len(members) != 10 or member_keys != designated:
        return False
    try:
        basis = [Perm.parse(s, deg) for s in cert.basis]
        triple = tuple(Perm.parse(s, deg) for s in cert.triple)
        lhs, rhs = parse_rat(cert.lhs), parse_rat(cert.rhs)
    except (TypeError, ValueError):
        return False
    if {t.key() for t in basis} != member_keys:
        return False
    model = axis_span_model(K, basis, basis)
    idx = tuple(model.axis_index(t) for t in triple)
    i, j, k = idx
    left = model.product_entry(i, j)
    right = model.product_entry(j, k)
    if left is None or right is None:
        return False
    lhs_check = sum((c * model.inner_entry(m, k) for m, c in left.items()), Fraction(0))
    rhs_check = sum((c * model.inner_entry(i, m) for m, c in right.items()), Fraction(0))
    return lhs_check == lhs and rhs_check == rhs and lhs != rhs
