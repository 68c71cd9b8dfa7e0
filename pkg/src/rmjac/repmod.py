"""The 60-element fractional-linear permutation group on six points and the
4-dimensional characteristic-2 module sitting inside its permutation module.

Points are the projective line over F_5: index 0 is the point at infinity
and index r+1 is the residue r.  The module ("heart") is the even-weight
subspace of F_2^6 modulo the all-ones vector; its 4x4 matrices over F_2 are
bit-packed into 16-bit ints, nibble i = row i, so the exhaustive
65536-generator subalgebra census stays fast.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass

import numpy as np

from .errors import UnexpectedAlgebra

IDENT6 = (0, 1, 2, 3, 4, 5)


def compose(p, q):
    """(p after q)(i) = p[q[i]]."""
    return tuple(p[q[i]] for i in range(6))


def inverse(p):
    out = [0] * 6
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def cycle_type(p):
    seen = [False] * 6
    parts = []
    for i in range(6):
        if seen[i]:
            continue
        n = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            n += 1
        parts.append(n)
    return tuple(sorted(parts, reverse=True))


def translation_perm():
    """z -> z+1: fixes infinity, 5-cycles the residues."""
    out = [0] * 6
    for r in range(5):
        out[r + 1] = ((r + 1) % 5) + 1
    return tuple(out)


def neg_inv_perm():
    """z -> -1/z: swaps 0 with infinity and r with -1/r."""
    out = [0] * 6
    out[0] = 1
    out[1] = 0
    for r in range(1, 5):
        out[r + 1] = (-pow(r, 3, 5)) % 5 + 1  # r^3 = r^-1 mod 5
    return tuple(out)


def closure(gens, start=(IDENT6,)):
    elems = set(start)
    frontier = list(start)
    while frontier:
        fresh = []
        for a in frontier:
            for g in gens:
                b = compose(g, a)
                if b not in elems:
                    elems.add(b)
                    fresh.append(b)
        frontier = fresh
    return elems


@dataclass
class PermGroup:
    degree: int
    generators: list
    elements: list

    def order(self):
        return len(self.elements)

    def cycle_type_census(self):
        census = {}
        for p in self.elements:
            t = cycle_type(p)
            census[t] = census.get(t, 0) + 1
        return census

    def is_doubly_transitive(self):
        pairs = {(p[0], p[1]) for p in self.elements}
        return len(pairs) == self.degree * (self.degree - 1)

    def is_simple_group(self):
        """Normal closure of every non-identity element is the whole group."""
        full = set(self.elements)
        for g in self.elements:
            if g == IDENT6:
                continue
            conjugates = {compose(compose(h, g), inverse(h)) for h in self.elements}
            if closure(list(conjugates)) != full:
                return False
        return True


def build_psl25():
    gens = [translation_perm(), neg_inv_perm()]
    elems = sorted(closure(gens))
    group = PermGroup(degree=6, generators=gens, elements=elems)
    assert group.order() == 60
    return group


# ---- bit-packed 4x4 matrices over F_2 -------------------------------------

I4 = 0x8421  # rows 1, 2, 4, 8


def mat_mul(a, b):
    out = 0
    for i in range(4):
        arow = (a >> (4 * i)) & 15
        row = 0
        if arow & 1:
            row ^= b & 15
        if arow & 2:
            row ^= (b >> 4) & 15
        if arow & 4:
            row ^= (b >> 8) & 15
        if arow & 8:
            row ^= (b >> 12) & 15
        out |= row << (4 * i)
    return out


def mat_apply(m, v):
    out = 0
    for i in range(4):
        if bin((m >> (4 * i)) & v & 15).count("1") % 2:
            out |= 1 << i
    return out


# ---- the heart module -------------------------------------------------------


def subset_class_coords(mask):
    """Coordinates of an even-cardinality subset class in the pair basis.

    Basis vector j (j=0..3) is the class of the pair {point 1, point j+2}.
    Canonicalize so point 0 is absent (complement if needed); then the
    coordinates are membership of points 2..5.
    """
    assert bin(mask).count("1") % 2 == 0
    if mask & 1:
        mask ^= 0b111111
    return (mask >> 2) & 15


def coords_to_subset(v):
    """Inverse of subset_class_coords on canonical representatives."""
    mask = v << 2
    if bin(mask).count("1") % 2:
        mask |= 2  # add point 1 to restore even cardinality
    return mask


def perm_subset(p, mask):
    out = 0
    for i in range(6):
        if mask >> i & 1:
            out |= 1 << p[i]
    return out


def heart_matrix(p):
    """Packed matrix of the permutation p acting on the heart basis."""
    m = 0
    for j in range(4):
        pair = 0b10 | (1 << (j + 2))  # {point 1, point j+2}
        col = subset_class_coords(perm_subset(p, pair))
        for i in range(4):
            if col >> i & 1:
                m |= 1 << (4 * i + j)
    return m


@dataclass
class HeartModule:
    field: str  # "F2" or "F4"
    group: PermGroup
    gen_matrices: list  # matrices of the two group generators
    matrices: dict  # permutation -> packed matrix

    @property
    def dimension(self):
        return 4


def heart(group=None, field="F2"):
    if group is None:
        group = build_psl25()
    assert field in ("F2", "F4")
    mats = {p: heart_matrix(p) for p in group.elements}
    assert len(set(mats.values())) == group.order(), "action must be faithful"
    assert mats[IDENT6] == I4
    return HeartModule(
        field=field,
        group=group,
        gen_matrices=[heart_matrix(g) for g in group.generators],
        matrices=mats,
    )


# ---- linear algebra over F_2 on packed vectors/matrices ---------------------


def _reduce_into(pivots, w):
    """Reduce w against pivots (dict leading-bit -> vector); insert if new."""
    while w:
        lead = w.bit_length() - 1
        if lead in pivots:
            w ^= pivots[lead]
        else:
            pivots[lead] = w
            return True
    return False


def span_dim(vectors):
    pivots = {}
    for v in vectors:
        _reduce_into(pivots, v)
    return len(pivots)


def rref_basis(vectors):
    """Canonical (fully reduced, sorted) basis of the span; hashable tuple."""
    pivots = {}
    for v in vectors:
        _reduce_into(pivots, v)
    for lead in sorted(pivots, reverse=True):
        for other in pivots:
            if other != lead and (pivots[other] >> lead) & 1:
                pivots[other] ^= pivots[lead]
    return tuple(sorted(pivots.values(), reverse=True))


def spin_f2(gen_mats, v):
    """Span of the orbit of vector v under the generated matrix monoid."""
    pivots = {}
    stack = [v]
    while stack:
        w = stack.pop()
        if _reduce_into(dict_copy := pivots, w):
            for m in gen_mats:
                stack.append(mat_apply(m, w))
    return pivots


def is_simple_f2(module):
    """Simple iff every nonzero vector spins to the full space."""
    gens = module.gen_matrices
    for v in range(1, 16):
        if len(spin_f2(gens, v)) != 4:
            return False, v
    return True, None


# ---- F_4 scalar extension ---------------------------------------------------
# F_4 = F_2[w], w^2 = w + 1.  Scalars are bit pairs (a, b) = a + b*w; vectors
# over F_4 are pairs (v0, v1) of packed F_2 vectors meaning v0 + w*v1.

F4_SCALARS = [(0, 0), (1, 0), (0, 1), (1, 1)]
F4_INV = {(1, 0): (1, 0), (0, 1): (1, 1), (1, 1): (0, 1)}


def f4_scalar_mul(s, vec):
    a, b = s
    v0, v1 = vec
    acc0 = acc1 = 0
    if a:
        acc0 ^= v0
        acc1 ^= v1
    if b:
        # w * (v0 + w v1) = v1 + w (v0 + v1)
        acc0 ^= v1
        acc1 ^= v0 ^ v1
    return (acc0, acc1)


def f4_vec_add(u, v):
    return (u[0] ^ v[0], u[1] ^ v[1])


def f4_mat_apply(m, vec):
    return (mat_apply(m, vec[0]), mat_apply(m, vec[1]))


def _f4_lead(vec):
    both = vec[0] | vec[1]
    return both.bit_length() - 1 if both else -1


def _f4_coord(vec, i):
    return ((vec[0] >> i) & 1, (vec[1] >> i) & 1)


def f4_reduce_into(pivots, vec):
    while vec != (0, 0):
        lead = _f4_lead(vec)
        if lead in pivots:
            c = _f4_coord(vec, lead)
            vec = f4_vec_add(vec, f4_scalar_mul(c, pivots[lead]))
        else:
            c = _f4_coord(vec, lead)
            pivots[lead] = f4_scalar_mul(F4_INV[c], vec)
            return True
    return False


def spin_f4(gen_mats, vec):
    pivots = {}
    stack = [vec]
    while stack:
        w = stack.pop()
        if f4_reduce_into(pivots, w):
            for m in gen_mats:
                stack.append(f4_mat_apply(m, w))
    return pivots


def is_simple_f4(module):
    """Over F_4 the module is reducible; returns (False, witness vector)."""
    gens = module.gen_matrices
    for v0 in range(16):
        for v1 in range(16):
            if (v0, v1) == (0, 0):
                continue
            dim = len(spin_f4(gens, (v0, v1)))
            if dim != 4:
                return False, (v0, v1)
    return True, None


# ---- commutant --------------------------------------------------------------


def commutant_f2(module):
    """Basis of all X with X M_g = M_g X for the generators, plus structure.

    Solves the 32x16 linear system over F_2; when the dimension is 2 the
    non-scalar basis element w is checked to satisfy w^2 = w + 1.
    """
    rows = []
    for M in module.gen_matrices:
        for i in range(4):
            for j in range(4):
                eqn = 0
                for k in range(4):
                    if (M >> (4 * k + j)) & 1:  # M[k][j] * X[i][k]
                        eqn ^= 1 << (4 * i + k)
                    if (M >> (4 * i + k)) & 1:  # M[i][k] * X[k][j]
                        eqn ^= 1 << (4 * k + j)
                if eqn:
                    rows.append(eqn)
    basis = _nullspace(rows, 16)
    report = {"dim": len(basis), "basis": basis}
    if len(basis) == 2:
        omega = next(
            x
            for x in _span_elements(basis)
            if x not in (0, I4)
        )
        report["omega"] = omega
        report["omega_squared_is_omega_plus_one"] = (
            mat_mul(omega, omega) == (omega ^ I4)
        )
    return report


def _nullspace(rows, nbits):
    """Nullspace basis for a list of F_2 equation masks over nbits unknowns."""
    pivots = {}
    for r in rows:
        _reduce_into(pivots, r)
    pivot_bits = set(pivots)
    free_bits = [b for b in range(nbits) if b not in pivot_bits]
    # back-substitution per free variable
    basis = []
    reduced = dict(pivots)
    for lead in sorted(reduced, reverse=True):
        for other in list(reduced):
            if other != lead and (reduced[other] >> lead) & 1:
                reduced[other] ^= reduced[lead]
    for fb in free_bits:
        vec = 1 << fb
        for lead, row in reduced.items():
            if (row >> fb) & 1:
                vec |= 1 << lead
        basis.append(vec)
    return basis


def _span_elements(basis):
    out = [0]
    for b in basis:
        out += [x ^ b for x in out]
    return out


def commutant_f4(module):
    """The F_4-commutant of the scalar-extended module.

    F_2-linearity gives End_{F_4-extended} = (F_2 commutant) tensor F_4, so
    the F_4-dimension equals the F_2 dimension; splitness is witnessed by a
    nontrivial idempotent among the 16 combinations a*I + b*omega, a,b in F_4.
    """
    base = commutant_f2(module)
    report = {"dim": base["dim"]}
    if base["dim"] != 2:
        return report
    omega = base["omega"]
    idempotents = []
    eye = (I4, 0)
    om = (omega, 0)
    for a in F4_SCALARS:
        for b in F4_SCALARS:
            # element a*I + b*omega as an F_4 matrix pair (real, w-part)
            elt = _f4m_add(_f4m_scalar(a, eye), _f4m_scalar(b, om))
            if elt in ((0, 0), eye):
                continue
            if _f4m_mul(elt, elt) == elt:
                idempotents.append(elt)
    report["split"] = bool(idempotents)
    report["idempotent"] = idempotents[0] if idempotents else None
    return report


def _f4m_scalar(s, m):
    a, b = s
    m0, m1 = m
    acc0 = acc1 = 0
    if a:
        acc0 ^= m0
        acc1 ^= m1
    if b:
        acc0 ^= m1
        acc1 ^= m0 ^ m1
    return (acc0, acc1)


def _f4m_add(x, y):
    return (x[0] ^ y[0], x[1] ^ y[1])


def _f4m_mul(x, y):
    x0, x1 = x
    y0, y1 = y
    # (x0 + w x1)(y0 + w y1) with w^2 = w + 1
    a = mat_mul(x0, y0) ^ mat_mul(x1, y1)
    b = mat_mul(x0, y1) ^ mat_mul(x1, y0) ^ mat_mul(x1, y1)
    return (a, b)


# ---- exhaustive G-stable subalgebra census ----------------------------------


class SubalgebraClass(enum.Enum):
    ScalarsF2 = 1
    FieldF4 = 2
    MatTwoOverF4 = 8
    FullMatFour = 16


def _mul_table(b):
    """tbl[m] = XOR of rows of b selected by nibble m."""
    tbl = [0] * 16
    tbl[1] = b & 15
    tbl[2] = (b >> 4) & 15
    tbl[4] = (b >> 8) & 15
    tbl[8] = (b >> 12) & 15
    for m in range(3, 16):
        low = m & -m
        if m != low:
            tbl[m] = tbl[low] ^ tbl[m ^ low]
    return tbl


def _mat_mul_with_table(a, tbl):
    return (
        tbl[a & 15]
        | tbl[(a >> 4) & 15] << 4
        | tbl[(a >> 8) & 15] << 8
        | tbl[(a >> 12) & 15] << 12
    )


def algebra_closure(gens):
    """Unital algebra (span closed under products) generated by gens."""
    pivots = {}
    _reduce_into(pivots, I4)
    for g in gens:
        _reduce_into(pivots, g)
    while True:
        basis = list(pivots.values())
        grew = False
        for b in basis:
            tbl = _mul_table(b)
            for a in basis:
                if _reduce_into(pivots, _mat_mul_with_table(a, tbl)):
                    grew = True
        if not grew:
            return pivots


def reference_algebras(module):
    """The four G-stable unital subalgebras, as canonical RREF bases."""
    com = commutant_f2(module)
    assert com["dim"] == 2
    omega = com["omega"]
    centralizer = [x for x in range(65536) if mat_mul(x, omega) == mat_mul(omega, x)]
    refs = {
        SubalgebraClass.ScalarsF2: rref_basis([I4]),
        SubalgebraClass.FieldF4: rref_basis([I4, omega]),
        SubalgebraClass.MatTwoOverF4: rref_basis(centralizer),
        SubalgebraClass.FullMatFour: rref_basis([1 << b for b in range(16)]),
    }
    assert [len(refs[c]) for c in SubalgebraClass] == [1, 2, 8, 16]
    return refs, omega


def conjugation_tables(module):
    """For each group element g, a uint16 array tbl with tbl[u] = g u g^-1."""
    tables = []
    for p in module.group.elements:
        Mg = module.matrices[p]
        Mginv = module.matrices[inverse(p)]
        imgs = [mat_mul(mat_mul(Mg, 1 << b), Mginv) for b in range(16)]
        tbl = np.zeros(65536, dtype=np.uint16)
        size = 1
        for b in range(16):
            tbl[size : 2 * size] = tbl[:size] ^ np.uint16(imgs[b])
            size *= 2
        tables.append(tbl)
    return tables


def classify_g_stable_algebras(module, join_samples=50, seed=0x5EED):
    """Census over all 65536 single generators u of the unital algebra
    generated by the orbit {g u g^-1}.

    Conjugate generators give the same algebra, so the census canonicalizes
    u over its conjugation orbit first and only closes one representative
    per orbit.  Every closure must equal one of the four reference algebras;
    anything else raises UnexpectedAlgebra.  Random pairs of resulting
    algebras are also joined and re-checked.
    """
    refs, _ = reference_algebras(module)
    ref_lookup = {basis: cls for cls, basis in refs.items()}
    tables = conjugation_tables(module)
    stacked = np.stack(tables)
    canon = np.min(stacked, axis=0)
    counts = {}
    rep_class = {}
    uniques, inverse_idx, rep_counts = np.unique(
        canon, return_inverse=True, return_counts=True
    )
    for rep, n in zip(uniques.tolist(), rep_counts.tolist()):
        orbit = sorted({int(t[rep]) for t in tables})
        pivots = algebra_closure(orbit)
        basis = rref_basis(list(pivots.values()))
        cls = ref_lookup.get(basis)
        if cls is None:
            raise UnexpectedAlgebra(
                "generator %d closes to dimension %d outside the four classes"
                % (rep, len(basis))
            )
        rep_class[rep] = cls
        counts[cls] = counts.get(cls, 0) + n
    # join sampled pairs: the result must stay inside the four classes
    rng = random.Random(seed)
    reps = uniques.tolist()
    for _ in range(join_samples):
        u, v = rng.choice(reps), rng.choice(reps)
        ou = {int(t[u]) for t in tables}
        ov = {int(t[v]) for t in tables}
        basis = rref_basis(list(algebra_closure(sorted(ou | ov)).values()))
        if basis not in ref_lookup:
            raise UnexpectedAlgebra("join escaped the four classes")
    assert set(counts) == set(SubalgebraClass), "all four classes must occur"
    assert sum(counts.values()) == 65536
    return {cls: counts[cls] for cls in SubalgebraClass}


def verify(join_samples=50, seed=0x5EED):
    """Full report used by the CLI and the acceptance suite."""
    group = build_psl25()
    module = heart(group)
    census = group.cycle_type_census()
    com2 = commutant_f2(module)
    com4 = commutant_f4(module)
    simple2, _ = is_simple_f2(module)
    simple4, witness4 = is_simple_f4(module)
    alg = classify_g_stable_algebras(module, join_samples=join_samples, seed=seed)
    refs, omega = reference_algebras(module)
    return {
        "group_order": group.order(),
        "cycle_type_census": {"-".join(map(str, k)): v for k, v in census.items()},
        "doubly_transitive": group.is_doubly_transitive(),
        "group_simple": group.is_simple_group(),
        "heart_dimension": module.dimension,
        "heart_element_count": 2**module.dimension,
        "simple_over_f2": simple2,
        "commutant_f2_dim": com2["dim"],
        "omega_squared_is_omega_plus_one": com2.get(
            "omega_squared_is_omega_plus_one", False
        ),
        "simple_over_f4": simple4,
        "f4_proper_submodule_witness": witness4,
        "commutant_f4_dim": com4["dim"],
        "commutant_f4_split": com4.get("split", False),
        "subalgebra_census": {cls.name: n for cls, n in alg.items()},
        "subalgebra_dims": sorted(c.value for c in alg),
        "all_four_classes_realized": set(alg) == set(SubalgebraClass),
    }
