"""Exact models of the nine dihedral (Norton-Sakuma) Majorana algebras.

Each algebra is built over Q from its tabulated structure constants: the
published products and inner products seed a table that is then closed under
the dihedral relabeling symmetries of the axis indices.  Any clash between a
seeded and a derived entry, or any product left undetermined by the closure,
aborts the construction.  The finished table must satisfy associativity of
the form (M1) before it is released to callers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .qlin import Matrix, Vector, parse_rat, rat_str, span_contains

__all__ = [
    "DIHEDRAL_TYPES",
    "EIGENVALUES",
    "FUSION",
    "AxiomError",
    "ConstructionError",
    "DihedralAlgebra",
    "ad_spectrum",
    "build",
    "check_fusion",
    "check_inclusion",
    "check_m1",
    "check_miyamoto",
    "from_dict",
    "inner",
    "product",
    "to_dict",
]

DIHEDRAL_TYPES = ("1A", "2A", "2B", "3A", "3C", "4A", "4B", "5A", "6A")

_ONE = Fraction(1)
_ZERO = Fraction(0)
_QUARTER = Fraction(1, 4)
_THIRTY_SECOND = Fraction(1, 32)

# Adjoint eigenvalues admitted by the Majorana axioms, in fusion-table order.
EIGENVALUES = (_ONE, _ZERO, _QUARTER, _THIRTY_SECOND)

# Fusion rules: products of mu- and nu-eigenvectors decompose into the listed
# eigenvalues.  Keys are unordered; see fusion_rule() for symmetric lookup.
FUSION = {
    (_ONE, _ONE): frozenset([_ONE]),
    (_ONE, _ZERO): frozenset(),
    (_ONE, _QUARTER): frozenset([_QUARTER]),
    (_ONE, _THIRTY_SECOND): frozenset([_THIRTY_SECOND]),
    (_ZERO, _ZERO): frozenset([_ZERO]),
    (_ZERO, _QUARTER): frozenset([_QUARTER]),
    (_ZERO, _THIRTY_SECOND): frozenset([_THIRTY_SECOND]),
    (_QUARTER, _QUARTER): frozenset([_ONE, _ZERO]),
    (_QUARTER, _THIRTY_SECOND): frozenset([_THIRTY_SECOND]),
    (_THIRTY_SECOND, _THIRTY_SECOND): frozenset([_ONE, _ZERO, _QUARTER]),
}


def fusion_rule(mu: Fraction, nu: Fraction) -> frozenset:
    try:
        return FUSION[(mu, nu)] if (mu, nu) in FUSION else FUSION[(nu, mu)]
    except KeyError:
        raise ValueError(f"not an admissible eigenvalue pair: ({mu}, {nu})") from None


class ConstructionError(ValueError):
    """The structure constants are inconsistent or do not determine the algebra."""


class AxiomError(ValueError):
    """A Majorana axiom fails on a concrete algebra element."""


# Basis labels in the published order.  Axis labels start with "a_"; the
# remaining labels are the extra basis vectors of the 3A, 4A, 5A, 6A algebras.
_BASES = {
    "1A": ("a_0",),
    "2A": ("a_0", "a_1", "a_rho"),
    "2B": ("a_0", "a_1"),
    "3A": ("a_-1", "a_0", "a_1", "u_rho"),
    "3C": ("a_-1", "a_0", "a_1"),
    "4A": ("a_-1", "a_0", "a_1", "a_2", "v_rho"),
    "4B": ("a_-1", "a_0", "a_1", "a_2", "a_rho2"),
    "5A": ("a_-2", "a_-1", "a_0", "a_1", "a_2", "w_rho"),
    "6A": ("a_-2", "a_-1", "a_0", "a_1", "a_2", "a_3", "a_rho3", "u_rho2"),
}

# Order of the rotation rho, i.e. the modulus of the axis indices.
_TYPE_N = {"1A": 1, "2A": 2, "2B": 2, "3A": 3, "3C": 3, "4A": 4, "4B": 4, "5A": 5, "6A": 6}


def is_axis(label: str) -> bool:
    return label.startswith("a_")


def _axis_label(t: str, i: int) -> str:
    # Reduce mod N into the published representative range for the type.
    n = _TYPE_N[t]
    lo = min(int(lab[2:]) for lab in _BASES[t] if lab[2:].lstrip("-").isdigit())
    return f"a_{(i - lo) % n + lo}"


def _frac(p, q=1) -> Fraction:
    return Fraction(p, q)


def _norm_coeffs(coeffs: dict) -> dict:
    return {lab: Fraction(c) for lab, c in coeffs.items() if c}


class _Table:
    """Product and inner-product entries indexed by unordered label pairs."""

    def __init__(self, t: str):
        self.type = t
        self.products: dict[tuple[str, str], dict] = {}
        self.inners: dict[tuple[str, str], Fraction] = {}

    @staticmethod
    def _key(x: str, y: str) -> tuple[str, str]:
        return (x, y) if x <= y else (y, x)

    def set_product(self, x: str, y: str, coeffs: dict):
        key = self._key(x, y)
        val = _norm_coeffs(coeffs)
        old = self.products.get(key)
        if old is not None and old != val:
            raise ConstructionError(f"{self.type}: conflicting products for {key}: {old} vs {val}")
        self.products[key] = val

    def set_inner(self, x: str, y: str, value):
        key = self._key(x, y)
        val = Fraction(value)
        old = self.inners.get(key)
        if old is not None and old != val:
            raise ConstructionError(f"{self.type}: conflicting inner products for {key}: {old} vs {val}")
        self.inners[key] = val


def _seed_table(t: str) -> _Table:
    tab = _Table(t)
    basis = _BASES[t]

    # Every axis is an idempotent of norm 1; the axes labelled by powers of
    # rho (2A, 4B, 6A) are axes in their own right.
    for lab in basis:
        if is_axis(lab):
            tab.set_product(lab, lab, {lab: 1})
            tab.set_inner(lab, lab, 1)

    f = _frac
    if t == "1A":
        pass
    elif t == "2A":
        tab.set_product("a_0", "a_1", {"a_0": f(1, 8), "a_1": f(1, 8), "a_rho": f(-1, 8)})
        tab.set_product("a_0", "a_rho", {"a_0": f(1, 8), "a_rho": f(1, 8), "a_1": f(-1, 8)})
        tab.set_inner("a_0", "a_1", f(1, 8))
        tab.set_inner("a_0", "a_rho", f(1, 8))
        tab.set_inner("a_1", "a_rho", f(1, 8))
    elif t == "2B":
        tab.set_product("a_0", "a_1", {})
        tab.set_inner("a_0", "a_1", 0)
    elif t == "3A":
        tab.set_product(
            "a_0", "a_1",
            {"a_0": f(1, 16), "a_1": f(1, 16), "a_-1": f(1, 32), "u_rho": f(-135, 2048)},
        )
        tab.set_product(
            "a_0", "u_rho",
            {"a_0": f(2, 9), "a_1": f(-1, 9), "a_-1": f(-1, 9), "u_rho": f(5, 32)},
        )
        tab.set_product("u_rho", "u_rho", {"u_rho": 1})
        tab.set_inner("a_0", "a_1", f(13, 256))
        tab.set_inner("a_0", "u_rho", f(1, 4))
        tab.set_inner("u_rho", "u_rho", f(8, 5))
    elif t == "3C":
        tab.set_product("a_0", "a_1", {"a_0": f(1, 64), "a_1": f(1, 64), "a_-1": f(-1, 64)})
        tab.set_inner("a_0", "a_1", f(1, 64))
    elif t == "4A":
        tab.set_product(
            "a_0", "a_1",
            {"a_0": f(3, 64), "a_1": f(3, 64), "a_2": f(1, 64), "a_-1": f(1, 64), "v_rho": f(-3, 64)},
        )
        tab.set_product(
            "a_0", "v_rho",
            {"a_0": f(5, 16), "a_1": f(-1, 8), "a_2": f(-1, 16), "a_-1": f(-1, 8), "v_rho": f(3, 16)},
        )
        tab.set_product("v_rho", "v_rho", {"v_rho": 1})
        tab.set_product("a_0", "a_2", {})
        tab.set_inner("a_0", "a_1", f(1, 32))
        tab.set_inner("a_0", "a_2", 0)
        tab.set_inner("a_0", "v_rho", f(3, 8))
        tab.set_inner("v_rho", "v_rho", 2)
    elif t == "4B":
        tab.set_product(
            "a_0", "a_1",
            {"a_0": f(1, 64), "a_1": f(1, 64), "a_-1": f(-1, 64), "a_2": f(-1, 64), "a_rho2": f(1, 64)},
        )
        tab.set_product("a_0", "a_2", {"a_0": f(1, 8), "a_2": f(1, 8), "a_rho2": f(-1, 8)})
        tab.set_inner("a_0", "a_1", f(1, 64))
        tab.set_inner("a_0", "a_2", f(1, 8))
        tab.set_inner("a_0", "a_rho2", f(1, 8))
        # Each pair (a_i, a_{i+2}) generates a 2A subalgebra whose third axis
        # is a_rho2; record those products for every index.
        for i in (-1, 0, 1, 2):
            ai, a2 = _axis_label(t, i), _axis_label(t, i + 2)
            tab.set_product(ai, "a_rho2", {ai: f(1, 8), "a_rho2": f(1, 8), a2: f(-1, 8)})
            tab.set_inner(ai, "a_rho2", f(1, 8))
    elif t == "5A":
        tab.set_product(
            "a_0", "a_1",
            {
                "a_0": f(3, 128), "a_1": f(3, 128),
                "a_2": f(-1, 128), "a_-1": f(-1, 128), "a_-2": f(-1, 128),
                "w_rho": 1,
            },
        )
        tab.set_product(
            "a_0", "a_2",
            {
                "a_0": f(3, 128), "a_2": f(3, 128),
                "a_1": f(-1, 128), "a_-1": f(-1, 128), "a_-2": f(-1, 128),
                "w_rho": -1,
            },
        )
        tab.set_product(
            "a_0", "w_rho",
            {
                "a_1": f(7, 4096), "a_-1": f(7, 4096),
                "a_2": f(-7, 4096), "a_-2": f(-7, 4096),
                "w_rho": f(7, 32),
            },
        )
        tab.set_product(
            "w_rho", "w_rho",
            {f"a_{i}": f(175, 524288) for i in (-2, -1, 0, 1, 2)},
        )
        tab.set_inner("a_0", "a_1", f(3, 128))
        tab.set_inner("a_0", "w_rho", 0)
        tab.set_inner("w_rho", "w_rho", f(875, 524288))
    elif t == "6A":
        tab.set_product(
            "a_0", "a_1",
            {
                "a_0": f(1, 64), "a_1": f(1, 64),
                "a_-2": f(-1, 64), "a_-1": f(-1, 64), "a_2": f(-1, 64), "a_3": f(-1, 64),
                "a_rho3": f(1, 64), "u_rho2": f(45, 2048),
            },
        )
        tab.set_product(
            "a_0", "a_2",
            {"a_0": f(1, 16), "a_2": f(1, 16), "a_-2": f(1, 32), "u_rho2": f(-135, 2048)},
        )
        tab.set_product("a_0", "a_3", {"a_0": f(1, 8), "a_3": f(1, 8), "a_rho3": f(-1, 8)})
        tab.set_product("a_rho3", "u_rho2", {})
        tab.set_product("u_rho2", "u_rho2", {"u_rho2": 1})
        tab.set_inner("a_0", "a_1", f(5, 256))
        tab.set_inner("a_0", "a_2", f(13, 256))
        tab.set_inner("a_0", "a_3", f(1, 8))
        tab.set_inner("a_rho3", "u_rho2", 0)
        tab.set_inner("u_rho2", "u_rho2", f(8, 5))
        # Subalgebra entries for every index: (a_i, a_{i+3}) generates a 2A
        # with third axis a_rho3, and (a_i, a_{i+2}) a 3A with extra vector
        # u_rho2.
        for i in (-2, -1, 0, 1, 2, 3):
            ai = _axis_label(t, i)
            a3 = _axis_label(t, i + 3)
            tab.set_product(ai, "a_rho3", {ai: f(1, 8), "a_rho3": f(1, 8), a3: f(-1, 8)})
            tab.set_inner(ai, "a_rho3", f(1, 8))
            ap, am = _axis_label(t, i + 2), _axis_label(t, i - 2)
            tab.set_product(
                ai, "u_rho2",
                {ai: f(2, 9), ap: f(-1, 9), am: f(-1, 9), "u_rho2": f(5, 32)},
            )
            tab.set_inner(ai, "u_rho2", f(1, 4))
    else:
        raise ValueError(f"unknown dihedral type: {t!r}")
    return tab


def _relabelings(t: str) -> list[dict[str, tuple[str, int]]]:
    """Signed basis permutations generating the relabeling symmetries.

    The index maps i -> i+2 (rotation), i -> -i and i -> 1-i (the two kinds of
    reflection) fix every extra vector.  The 5A algebra additionally carries
    the index-doubling map i -> 2i, under which w_rho changes sign: the vector
    attached to rho^2 is the negative of the one attached to rho.
    """
    basis = _BASES[t]

    def mk(index_map, w_sign: int = 1) -> dict[str, tuple[str, int]]:
        out = {}
        for lab in basis:
            if is_axis(lab) and lab[2:].lstrip("-").isdigit():
                out[lab] = (_axis_label(t, index_map(int(lab[2:]))), 1)
            elif lab == "w_rho":
                out[lab] = (lab, w_sign)
            else:
                out[lab] = (lab, 1)
        return out

    maps = [mk(lambda i: i + 2), mk(lambda i: -i), mk(lambda i: 1 - i)]
    if t == "5A":
        maps.append(mk(lambda i: 2 * i, w_sign=-1))
    return maps


def _map_coeffs(m: dict, coeffs: dict) -> dict:
    out: dict[str, Fraction] = {}
    for lab, c in coeffs.items():
        lab2, s = m[lab]
        out[lab2] = out.get(lab2, _ZERO) + s * c
    return _norm_coeffs(out)


def _complete_table(t: str, tab: _Table):
    """Close the seeded table under the relabeling maps, then demand totality."""
    maps = _relabelings(t)
    changed = True
    while changed:
        changed = False
        for m in maps:
            for (x, y), val in list(tab.products.items()):
                x2, sx = m[x]
                y2, sy = m[y]
                key = _Table._key(x2, y2)
                image = _map_coeffs(m, val)
                if sx * sy < 0:
                    image = {lab: -c for lab, c in image.items()}
                if key not in tab.products:
                    changed = True
                tab.set_product(x2, y2, image)
            for (x, y), val in list(tab.inners.items()):
                x2, sx = m[x]
                y2, sy = m[y]
                key = _Table._key(x2, y2)
                if key not in tab.inners:
                    changed = True
                tab.set_inner(x2, y2, sx * sy * val)
    basis = _BASES[t]
    missing = [
        (x, y)
        for i, x in enumerate(basis)
        for y in basis[i:]
        if _Table._key(x, y) not in tab.products or _Table._key(x, y) not in tab.inners
    ]
    if missing:
        raise ConstructionError(f"{t}: entries left undetermined by symmetry closure: {missing}")


@dataclass(frozen=True)
class DihedralAlgebra:
    """A dihedral Majorana algebra with exact rational structure constants."""

    type: str
    basis: tuple[str, ...]
    mult: tuple[tuple[Vector, ...], ...]
    gram: Matrix

    @property
    def dim(self) -> int:
        return len(self.basis)

    def index(self, label: str) -> int:
        try:
            return self.basis.index(label)
        except ValueError:
            raise ValueError(f"no basis vector {label!r} in a {self.type} algebra") from None

    def basis_vector(self, label: str) -> Vector:
        return Vector.unit(self.dim, self.index(label))

    @property
    def axes(self) -> tuple[str, ...]:
        return tuple(lab for lab in self.basis if is_axis(lab))


@lru_cache(maxsize=None)
def build(t: str) -> DihedralAlgebra:
    """Construct the dihedral algebra of the given type from its seed table."""
    if t not in DIHEDRAL_TYPES:
        raise ValueError(f"unknown dihedral type: {t!r}")
    tab = _seed_table(t)
    _complete_table(t, tab)
    basis = _BASES[t]
    n = len(basis)
    pos = {lab: i for i, lab in enumerate(basis)}

    def vec(coeffs: dict) -> Vector:
        coords = [_ZERO] * n
        for lab, c in coeffs.items():
            coords[pos[lab]] = c
        return Vector(coords)

    mult = tuple(
        tuple(vec(tab.products[_Table._key(x, y)]) for y in basis) for x in basis
    )
    gram = Matrix([[tab.inners[_Table._key(x, y)] for y in basis] for x in basis])
    alg = DihedralAlgebra(type=t, basis=basis, mult=mult, gram=gram)
    violations = check_m1(alg)
    if violations:
        raise ConstructionError(f"{t}: completed table fails M1: {violations[0]}")
    return alg


def product(alg: DihedralAlgebra, u: Vector, v: Vector) -> Vector:
    if len(u) != alg.dim or len(v) != alg.dim:
        raise ValueError(f"vectors must have dimension {alg.dim}")
    out = Vector.zero(alg.dim)
    for i, ci in enumerate(u):
        if not ci:
            continue
        row = alg.mult[i]
        for j, cj in enumerate(v):
            if cj:
                out = out + row[j] * (ci * cj)
    return out


def inner(alg: DihedralAlgebra, u: Vector, v: Vector) -> Fraction:
    if len(u) != alg.dim or len(v) != alg.dim:
        raise ValueError(f"vectors must have dimension {alg.dim}")
    return u.dot(alg.gram.apply(v))


def ad_matrix(alg: DihedralAlgebra, axis: str) -> Matrix:
    """Matrix of left multiplication by the named axis."""
    i = alg.index(axis)
    return Matrix.from_columns(list(alg.mult[i]))


def ad_spectrum(alg: DihedralAlgebra, axis: str) -> dict[Fraction, tuple[int, tuple[Vector, ...]]]:
    """Eigenvalue -> (multiplicity, eigenbasis) for the adjoint of an axis.

    Raises AxiomError if the adjoint is not diagonalizable with spectrum
    inside {1, 0, 1/4, 1/32}, or if the 1-eigenspace is not spanned by the
    axis itself.
    """
    if not is_axis(axis):
        raise ValueError(f"{axis!r} is not an axis label")
    m = ad_matrix(alg, axis)
    spectrum: dict[Fraction, tuple[int, tuple[Vector, ...]]] = {}
    total = 0
    for lam in EIGENVALUES:
        eb = m.eigenspace(lam)
        if eb:
            spectrum[lam] = (len(eb), tuple(eb))
            total += len(eb)
    if total != alg.dim:
        raise AxiomError(
            f"{alg.type}: adjoint of {axis} is not diagonalizable over eigenvalues 1, 0, 1/4, 1/32"
        )
    mult_one, basis_one = spectrum.get(_ONE, (0, ()))
    if mult_one != 1 or not span_contains(list(basis_one), alg.basis_vector(axis)):
        raise AxiomError(f"{alg.type}: 1-eigenspace of {axis} is not spanned by the axis")
    return spectrum


def _eigencomponents(alg: DihedralAlgebra, spectrum, w: Vector) -> dict[Fraction, Vector]:
    """Decompose w into its adjoint eigencomponents."""
    cols: list[Vector] = []
    lams: list[Fraction] = []
    for lam, (_, eb) in spectrum.items():
        for v in eb:
            cols.append(v)
            lams.append(lam)
    coords = Matrix.from_columns(cols).solve(w)
    if coords is None:
        raise AxiomError(f"{alg.type}: eigenbasis does not span the algebra")
    parts: dict[Fraction, Vector] = {lam: Vector.zero(alg.dim) for lam in spectrum}
    for c, lam, v in zip(coords, lams, cols):
        if c:
            parts[lam] = parts[lam] + v * c
    return parts


def check_fusion(alg: DihedralAlgebra, axis: str | None = None) -> list[str]:
    """Verify the fusion rules for one axis (or all axes); return violations."""
    if axis is None:
        out: list[str] = []
        for ax in alg.axes:
            out.extend(check_fusion(alg, ax))
        return out
    spectrum = ad_spectrum(alg, axis)
    lams = list(spectrum)
    violations = []
    for i, mu in enumerate(lams):
        for nu in lams[i:]:
            allowed = fusion_rule(mu, nu)
            for u in spectrum[mu][1]:
                for v in spectrum[nu][1]:
                    parts = _eigencomponents(alg, spectrum, product(alg, u, v))
                    for lam, comp in parts.items():
                        if lam not in allowed and not comp.is_zero():
                            violations.append(
                                f"{alg.type}/{axis}: ({mu},{nu}) product has a {lam}-component"
                            )
    return violations


def check_m1(alg: DihedralAlgebra) -> list[str]:
    """Verify (u*v, w) == (u, v*w) on all basis triples; return violations."""
    violations = []
    units = [alg.basis_vector(lab) for lab in alg.basis]
    for i, x in enumerate(alg.basis):
        for j, y in enumerate(alg.basis):
            for k, z in enumerate(alg.basis):
                lhs = inner(alg, product(alg, units[i], units[j]), units[k])
                rhs = inner(alg, units[i], product(alg, units[j], units[k]))
                if lhs != rhs:
                    violations.append(f"{alg.type}: ({x}*{y}, {z}) = {lhs} but ({x}, {y}*{z}) = {rhs}")
    return violations


def _tau_sigma_matrices(alg: DihedralAlgebra, spectrum) -> tuple[Matrix, Matrix]:
    """Matrices acting as -1 on the 1/32-eigenspace resp. the 1/4-eigenspace."""
    tau_cols = []
    sigma_cols = []
    for j in range(alg.dim):
        parts = _eigencomponents(alg, spectrum, Vector.unit(alg.dim, j))
        tau = Vector.zero(alg.dim)
        sigma = Vector.zero(alg.dim)
        for lam, comp in parts.items():
            tau = tau + (comp * (-1) if lam == _THIRTY_SECOND else comp)
            sigma = sigma + (comp * (-1) if lam == _QUARTER else comp)
        tau_cols.append(tau)
        sigma_cols.append(sigma)
    return Matrix.from_columns(tau_cols), Matrix.from_columns(sigma_cols)


def check_miyamoto(alg: DihedralAlgebra, axis: str | None = None) -> list[str]:
    """Verify the Miyamoto involution and its even companion; return violations.

    The map tau negating the 1/32-eigenspace of an axis must be an algebra
    automorphism preserving the inner product.  On the tau-fixed subspace, the
    map sigma negating the 1/4-eigenspace must preserve the restricted product.
    """
    if axis is None:
        out: list[str] = []
        for ax in alg.axes:
            out.extend(check_miyamoto(alg, ax))
        return out
    spectrum = ad_spectrum(alg, axis)
    tau, sigma = _tau_sigma_matrices(alg, spectrum)
    violations = []
    units = [alg.basis_vector(lab) for lab in alg.basis]
    for i, x in enumerate(alg.basis):
        for j, y in enumerate(alg.basis[i:], start=i):
            lhs = tau.apply(product(alg, units[i], units[j]))
            rhs = product(alg, tau.apply(units[i]), tau.apply(units[j]))
            if lhs != rhs:
                violations.append(f"{alg.type}/{axis}: tau is not multiplicative on ({x}, {y})")
            if inner(alg, tau.apply(units[i]), tau.apply(units[j])) != inner(alg, units[i], units[j]):
                violations.append(f"{alg.type}/{axis}: tau does not preserve the form on ({x}, {y})")
    # tau-fixed subspace: spanned by the eigenvectors away from 1/32.
    fixed = [v for lam in spectrum if lam != _THIRTY_SECOND for v in spectrum[lam][1]]
    for i, u in enumerate(fixed):
        for v in fixed[i:]:
            p = product(alg, u, v)
            parts = _eigencomponents(alg, spectrum, p)
            stray = parts.get(_THIRTY_SECOND)
            if stray is not None and not stray.is_zero():
                violations.append(
                    f"{alg.type}/{axis}: product of tau-fixed vectors leaves the tau-fixed subspace"
                )
                continue
            if sigma.apply(p) != product(alg, sigma.apply(u), sigma.apply(v)):
                violations.append(
                    f"{alg.type}/{axis}: sigma is not multiplicative on the tau-fixed subspace"
                )
    return violations


# Subalgebras required of the composite types: target type and label map from
# the subalgebra's basis into the host algebra.
_INCLUSIONS = {
    "4A": (("2B", {"a_0": "a_0", "a_1": "a_2"}),),
    "4B": (("2A", {"a_0": "a_0", "a_1": "a_2", "a_rho": "a_rho2"}),),
    "6A": (
        ("3A", {"a_-1": "a_-2", "a_0": "a_0", "a_1": "a_2", "u_rho": "u_rho2"}),
        ("2A", {"a_0": "a_0", "a_1": "a_3", "a_rho": "a_rho3"}),
    ),
}


def check_inclusion(alg: DihedralAlgebra) -> list[str]:
    """Verify the forced subalgebras of a 4A, 4B or 6A algebra."""
    if alg.type not in _INCLUSIONS:
        raise ValueError(f"{alg.type} has no subalgebra requirements")
    violations = []
    for sub_type, label_map in _INCLUSIONS[alg.type]:
        sub = build(sub_type)

        def lift(w: Vector) -> Vector:
            out = Vector.zero(alg.dim)
            for k, c in enumerate(w):
                if c:
                    out = out + alg.basis_vector(label_map[sub.basis[k]]) * c
            return out

        for i, x in enumerate(sub.basis):
            for j, y in enumerate(sub.basis[i:], start=i):
                ex = alg.basis_vector(label_map[x])
                ey = alg.basis_vector(label_map[y])
                if product(alg, ex, ey) != lift(product(sub, sub.basis_vector(x), sub.basis_vector(y))):
                    violations.append(
                        f"{alg.type}: ({label_map[x]}, {label_map[y]}) does not match the {sub_type} product"
                    )
                if inner(alg, ex, ey) != inner(sub, sub.basis_vector(x), sub.basis_vector(y)):
                    violations.append(
                        f"{alg.type}: ({label_map[x]}, {label_map[y]}) does not match the {sub_type} form"
                    )
    return violations


def to_dict(alg: DihedralAlgebra) -> dict:
    """JSON-ready description: basis labels, products and Gram entries as strings."""
    return {
        "type": alg.type,
        "basis": list(alg.basis),
        "mult": [[[rat_str(c) for c in vec] for vec in row] for row in alg.mult],
        "gram": [[rat_str(alg.gram[i, j]) for j in range(alg.dim)] for i in range(alg.dim)],
    }


def from_dict(data: dict) -> DihedralAlgebra:
    t = data["type"]
    basis = tuple(data["basis"])
    mult = tuple(
        tuple(Vector([parse_rat(c) for c in vec]) for vec in row) for row in data["mult"]
    )
    gram = Matrix([[parse_rat(c) for c in row] for row in data["gram"]])
    n = len(basis)
    if len(mult) != n or any(len(row) != n for row in mult) or any(
        len(vec) != n for row in mult for vec in row
    ):
        raise ValueError("multiplication table shape does not match the basis")
    if gram.nrows != n or gram.ncols != n:
        raise ValueError("Gram matrix shape does not match the basis")
    return DihedralAlgebra(type=t, basis=basis, mult=mult, gram=gram)
