"""Induced (tensor) Hopf actions and their associated orders.

Two actions compose through the Kronecker product of their
representations.  One global ordering convention is used everywhere:
product bases are Kronecker-ordered with the left index slow and the
right index fast, so the row permutation aligning the induced action
matrix with the Kronecker product of the factors is exactly the
Tracy-Singh index law.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .action import (
    ActionBundle,
    ActionTable,
    FieldPresentation,
    ValidationError,
    build_bundle,
    verify_action,
)
from .freeness import GeneratorCandidate, generator_matrix, search_free_generator
from .linalg import (
    CoefficientRing,
    LatticeBasis,
    Matrix,
    kronecker,
    lattice_equal,
)
from .order import OrderBasis, associated_order


class NotArithmeticallyDisjointError(Exception):
    pass


def tracy_singh_permutation(r: int, u: int):
    """Row permutation P with P M(H, L) = M(H1, E) (x) M(Hbar, F).

    Returned as a tuple `dest` over 0-based indices: row i of the input
    moves to row dest[i].  The underlying index law, for 1 <= a, b <= r
    and 1 <= c, d <= u with n = r u, sends row
    nu(b-1) + n(d-1) + u(a-1) + c to position
    nu(b-1) + u^2(a-1) + u(d-1) + c.
    """
    if r < 1 or u < 1:
        raise ValueError("factors must have degree >= 1")
    n = r * u
    dest = [None] * (n * n)
    for a in range(1, r + 1):
        for b in range(1, r + 1):
            for c in range(1, u + 1):
                for d in range(1, u + 1):
                    src = n * u * (b - 1) + n * (d - 1) + u * (a - 1) + c
                    dst = n * u * (b - 1) + u * u * (a - 1) + u * (d - 1) + c
                    dest[src - 1] = dst - 1
    return tuple(dest)


def permutation_cycles(dest, one_based: bool = True):
    """Disjoint cycles of a permutation given as a dest tuple."""
    seen = [False] * len(dest)
    cycles = []
    for i in range(len(dest)):
        if seen[i] or dest[i] == i:
            seen[i] = True
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(j + 1 if one_based else j)
            j = dest[j]
        cycles.append(tuple(cyc))
    return tuple(cycles)


def permute_rows(m: Matrix, dest) -> Matrix:
    rows = [None] * m.rows
    for i in range(m.rows):
        rows[dest[i]] = list(m.row(i))
    return Matrix(rows)


def product_field(
    left: FieldPresentation, right: FieldPresentation
) -> FieldPresentation:
    """L = E (x) F with basis alpha_k z_l in Kronecker order."""
    r, u = left.dim, right.dim
    n = r * u
    labels = tuple(
        f"{left.basis_labels[k]}*{right.basis_labels[l]}"
        for k in range(r)
        for l in range(u)
    )
    scE, scF = left.structure_constants, right.structure_constants
    sc = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    for a in range(r):
        for c in range(u):
            for b in range(r):
                for d in range(u):
                    for e in range(r):
                        x = scE[a][b][e]
                        if x == 0:
                            continue
                        for f in range(u):
                            sc[u * a + c][u * b + d][u * e + f] = (
                                x * scF[c][d][f]
                            )
    return FieldPresentation(
        dim=n,
        basis_labels=labels,
        structure_constants=sc,
        one_index=u * left.one_index + right.one_index,
    )


def _tensor_table(
    left: ActionTable, right: ActionTable, prod: FieldPresentation
) -> ActionTable:
    r, u = left.dim, right.dim
    labels = tuple(
        f"{left.hopf_labels[i]}*{right.hopf_labels[j]}"
        for i in range(r)
        for j in range(u)
    )
    entries = []
    for i in range(r):
        for j in range(u):
            row = []
            for k in range(r):
                for l in range(u):
                    ve = left.entries[i][k]
                    vf = right.entries[j][l]
                    row.append(
                        tuple(ve[e] * vf[f] for e in range(r) for f in range(u))
                    )
            entries.append(tuple(row))
    return ActionTable(hopf_labels=labels, field=prod, entries=tuple(entries))


@dataclass(frozen=True)
class InducedSetup:
    left: ActionBundle
    right: ActionBundle
    product_field: FieldPresentation
    bundle: ActionBundle  # the induced action on the product field
    perm: tuple  # Tracy-Singh row permutation, dest form

    @property
    def ring(self) -> CoefficientRing:
        return self.bundle.ring


def induce_action(
    left: ActionTable, right: ActionTable, ring: CoefficientRing
) -> InducedSetup:
    """Compose two verified actions into the induced action on E (x) F."""
    left_bundle = build_bundle(left, ring)
    right_bundle = build_bundle(right, ring)
    for name, b in (("left", left_bundle), ("right", right_bundle)):
        rep = verify_action(b)
        if not (rep.rank_ok and rep.j_bijective):
            raise ValidationError(f"{name} table is not a Hopf Galois action")
    prod = product_field(left.field, right.field)
    table = _tensor_table(left, right, prod)
    return InducedSetup(
        left=left_bundle,
        right=right_bundle,
        product_field=prod,
        bundle=build_bundle(table, ring),
        perm=tracy_singh_permutation(left.dim, right.dim),
    )


def verify_kronecker_theorem(setup: InducedSetup) -> bool:
    """Exact check of P M(H, L) = M(H1, E) (x) M(Hbar, F)."""
    lhs = permute_rows(setup.bundle.M, setup.perm)
    rhs = kronecker(setup.left.M, setup.right.M)
    return lhs == rhs


def are_arithmetically_disjoint(
    left_field: FieldPresentation,
    right_field: FieldPresentation,
    ring: CoefficientRing,
) -> bool:
    """Coprimality of the trace-form discriminants over the ring."""
    d1 = left_field.discriminant()
    d2 = right_field.discriminant()
    if d1 == 0 or d2 == 0:
        return False
    if ring.is_local:
        return ring.valuation(d1) == 0 or ring.valuation(d2) == 0
    if d1.denominator != 1 or d2.denominator != 1:
        return True  # a non-integral discriminant already carries a unit
    return gcd(d1.numerator, d2.numerator) == 1


def _require_disjoint(setup: InducedSetup):
    if not are_arithmetically_disjoint(
        setup.left.table.field, setup.right.table.field, setup.ring
    ):
        raise NotArithmeticallyDisjointError(
            "factor extensions are not arithmetically disjoint"
        )


def tensor_order_lattice(setup: InducedSetup) -> LatticeBasis:
    """Kronecker product of the two factor order bases, as a lattice."""
    left_ob = associated_order(setup.left)
    right_ob = associated_order(setup.right)
    return LatticeBasis(
        ambient_dim=setup.bundle.dim,
        basis=kronecker(left_ob.basis_in_w, right_ob.basis_in_w),
        ring=setup.ring,
    )


def verify_tensor_order(setup: InducedSetup, require_disjoint: bool = True) -> bool:
    """Compare the induced order with the tensor of the factor orders."""
    if require_disjoint:
        _require_disjoint(setup)
    induced_ob = associated_order(setup.bundle)
    return lattice_equal(induced_ob.lattice(), tensor_order_lattice(setup))


@dataclass(frozen=True)
class InducedGeneratorReport:
    free: bool
    product_beta: tuple
    left_candidate: GeneratorCandidate
    right_candidate: GeneratorCandidate
    product_candidate: GeneratorCandidate
    kronecker_factorization_ok: bool


def verify_induced_generator(
    setup: InducedSetup, gamma, delta, left_basis=None, right_basis=None
) -> InducedGeneratorReport:
    """Check that gamma*delta generates, and that its generator matrix is
    the Kronecker product of the factor generator matrices.

    Optional `left_basis`/`right_basis` present the factor orders in
    other bases of the same lattices; the product order follows suit.
    """
    _require_disjoint(setup)
    left_ob = associated_order(setup.left)
    right_ob = associated_order(setup.right)
    if left_basis is not None:
        left_ob = left_ob.with_basis(left_basis)
    if right_basis is not None:
        right_ob = right_ob.with_basis(right_basis)
    induced_ob = associated_order(setup.bundle)
    # present the induced order in the product basis v_i mu_j
    tensor_basis = kronecker(left_ob.basis_in_w, right_ob.basis_in_w)
    tensored_ob = induced_ob.with_basis(tensor_basis)

    gamma = tuple(Fraction(x) for x in gamma)
    delta = tuple(Fraction(x) for x in delta)
    product_beta = tuple(g * d for g in gamma for d in delta)

    cg = generator_matrix(left_ob, gamma)
    cd = generator_matrix(right_ob, delta)
    cp = generator_matrix(tensored_ob, product_beta)
    return InducedGeneratorReport(
        free=setup.ring.is_unit(cp.det),
        product_beta=product_beta,
        left_candidate=cg,
        right_candidate=cd,
        product_candidate=cp,
        kronecker_factorization_ok=cp.d_beta == kronecker(cg.d_beta, cd.d_beta),
    )


@dataclass(frozen=True)
class BaseChangeReport:
    lattice_eq: bool
    gamma_free: bool | None
    gamma: tuple | None
    order: OrderBasis


def base_change_order(setup: InducedSetup, gamma=None) -> BaseChangeReport:
    """Order of the left Hopf algebra extended by the right field.

    The extended algebra H1 (x) F acts on L with the right factor acting
    by multiplication; its associated order is computed as an O_K-lattice
    and compared with the span of the products v_i z_l.
    """
    _require_disjoint(setup)
    right_field = setup.right.table.field
    u = right_field.dim
    mult_table = ActionTable(
        hopf_labels=right_field.basis_labels,
        field=right_field,
        entries=tuple(
            tuple(right_field.structure_constants[l][m] for m in range(u))
            for l in range(u)
        ),
    )
    table = _tensor_table(setup.left.table, mult_table, setup.product_field)
    bundle = build_bundle(table, setup.ring)
    ob = associated_order(bundle)

    left_ob = associated_order(setup.left)
    expected = LatticeBasis(
        ambient_dim=bundle.dim,
        basis=kronecker(left_ob.basis_in_w, Matrix.identity(u)),
        ring=setup.ring,
    )
    lattice_eq = lattice_equal(ob.lattice(), expected)

    if gamma is None:
        found = search_free_generator(left_ob, 3)
        gamma = found.beta if found is not None else None
    if gamma is None:
        return BaseChangeReport(lattice_eq=lattice_eq, gamma_free=None, gamma=None, order=ob)
    one_f = right_field.one()
    beta = tuple(Fraction(g) * z for g in gamma for z in one_f)
    cand = generator_matrix(ob, beta)
    return BaseChangeReport(
        lattice_eq=lattice_eq,
        gamma_free=setup.ring.is_unit(cand.det),
        gamma=tuple(Fraction(g) for g in gamma),
        order=ob,
    )
