"""Supersingularity tests built on the coefficient window of h = f^((p-1)/2).

For y^2 = f(x) with monic sextic f over characteristic p != 2, write
h = f^((p-1)/2) = sum c_i x^i and

    M = [[c_{p-1}, c_{p-2}], [c_{2p-1}, c_{2p-2}]].

The jacobian is supersingular exactly when M * M^(p) = 0, where M^(p) raises
entries to the p-th power.  An equivalent closed form splits into two cases
(c_{2p-1} zero or not); both tests are implemented and must always agree.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import IdentityViolation, NonSeparable, WrongCharacteristic
from .ffield import ExtField, PolyRing, PrimeField


class Verdict(enum.Enum):
    Supersingular = "Supersingular"
    NotSupersingular = "NotSupersingular"


class CaseTag(enum.Enum):
    Case1 = "Case1"
    Case2 = "Case2"
    NotSS = "NotSS"


@dataclass
class CartierManinReport:
    p: int
    dom: object
    window: dict  # the four c_i, keyed c_pm1 / c_pm2 / c_2pm1 / c_2pm2
    matrix: list
    matrix_product: list
    verdict: Verdict
    case_tag: CaseTag

    def to_json(self):
        enc = self.dom.to_json
        return {
            "p": self.p,
            "window": {k: enc(v) for k, v in self.window.items()},
            "matrix": [[enc(e) for e in row] for row in self.matrix],
            "matrix_str": [[self.dom.fmt(e) for e in row] for row in self.matrix],
            "matrix_product": [[enc(e) for e in row] for row in self.matrix_product],
            "matrix_product_str": [
                [self.dom.fmt(e) for e in row] for row in self.matrix_product
            ],
            "verdict": self.verdict.value,
            "case": self.case_tag.value,
            "note": "matrix stored without p-th-root normalization; "
            "the verdict only needs M * M^(p) = 0",
        }


def _pth_power(dom, a, p):
    # over F_p[T] this is u(T) -> u(T^p): spread coefficients at stride p
    # and push base coefficients through Frobenius
    if isinstance(dom, PolyRing) and dom.characteristic == p:
        if not a:
            return a
        base = dom.dom
        out = [base.zero] * (p * (len(a) - 1) + 1)
        for i, ci in enumerate(a):
            out[p * i] = _pth_power(base, ci, p)
        return dom.normalize(out)
    return dom.pow(a, p)


def cartier_manin(curve):
    """Full report: window coefficients, M, M*M^(p), verdict, case tag."""
    ring = curve.ring
    dom = ring.dom
    p = dom.characteristic
    if p == 0:
        raise WrongCharacteristic("curve must live in positive characteristic")
    if not curve.separable:
        raise NonSeparable("supersingularity is only defined for separable f")
    h = ring.pow(curve.coeffs, (p - 1) // 2)
    a = ring.coeff(h, p - 1)
    b = ring.coeff(h, p - 2)
    c = ring.coeff(h, 2 * p - 1)
    d = ring.coeff(h, 2 * p - 2)
    M = [[a, b], [c, d]]
    Mp = [[_pth_power(dom, e, p) for e in row] for row in M]
    prod = [
        [
            dom.add(dom.mul(M[i][0], Mp[0][j]), dom.mul(M[i][1], Mp[1][j]))
            for j in range(2)
        ]
        for i in range(2)
    ]
    ss = all(dom.is_zero(e) for row in prod for e in row)
    verdict = Verdict.Supersingular if ss else Verdict.NotSupersingular
    case_tag = _closed_form_case(dom, a, b, c, d, p)
    if (case_tag is not CaseTag.NotSS) != ss:
        raise IdentityViolation(
            "closed-form case disagrees with the matrix product"
        )
    return CartierManinReport(
        p=p,
        dom=dom,
        window={"c_pm1": a, "c_pm2": b, "c_2pm1": c, "c_2pm2": d},
        matrix=M,
        matrix_product=prod,
        verdict=verdict,
        case_tag=case_tag,
    )


def _closed_form_case(dom, a, b, c, d, p):
    """Division-free two-case criterion.

    Case 1: c_{p-1} = c_{2p-1} = c_{2p-2} = 0 (the all-zero M lands here).
    Case 2: c_{2p-1} != 0 with
        c_{p-2} * c_{2p-1}^p   = -c_{p-1}^(p+1)
        c_{2p-2} * c_{2p-1}^(p-1) = -c_{p-1}^p
    (the fraction form cleared of denominators, so F_p[T] needs no fractions).
    """
    if dom.is_zero(c):
        if dom.is_zero(a) and dom.is_zero(d):
            return CaseTag.Case1
        return CaseTag.NotSS
    ap = dom.pow(a, p)
    cp1 = dom.pow(c, p - 1)
    rel1 = dom.eq(dom.mul(b, dom.mul(cp1, c)), dom.neg(dom.mul(ap, a)))
    rel2 = dom.eq(dom.mul(d, cp1), dom.neg(ap))
    return CaseTag.Case2 if (rel1 and rel2) else CaseTag.NotSS


def char3_case2_relations(dom, a1, a2, a4, a5):
    """At p = 3 the window is (a2, a1, a5, a4); case 2 reads
    a1 * a5^3 = -a2^4 and a4 * a5^2 = -a2^3 (valid whenever a5 != 0)."""
    lhs1 = dom.mul(a1, dom.pow(a5, 3))
    rhs1 = dom.neg(dom.pow(a2, 4))
    lhs2 = dom.mul(a4, dom.pow(a5, 2))
    rhs2 = dom.neg(dom.pow(a2, 3))
    return dom.eq(lhs1, rhs1) and dom.eq(lhs2, rhs2)


def char3_criterion(curve):
    """Closed-form verdict at p = 3, where h = f makes the window explicit."""
    dom = curve.ring.dom
    if dom.characteristic != 3:
        raise WrongCharacteristic("criterion applies in characteristic 3 only")
    if not curve.separable:
        raise NonSeparable("supersingularity is only defined for separable f")
    a1, a2, a4, a5 = curve.a(1), curve.a(2), curve.a(4), curve.a(5)
    if dom.is_zero(a2) and dom.is_zero(a4) and dom.is_zero(a5):
        # separability forces a1 != 0 here: otherwise f' = 0
        assert not dom.is_zero(a1)
        return Verdict.Supersingular
    if not dom.is_zero(a5) and char3_case2_relations(dom, a1, a2, a4, a5):
        return Verdict.Supersingular
    return Verdict.NotSupersingular


def char3_brumer_obstruction(q):
    """Solutions of z^4 + 1 = 0 and z^3 + z - 1 = 0 in F_q, q a power of 3.

    The subfamily construction needs such a z; an empty set at q = 3 is what
    rules out supersingular family reductions over F_3(T).
    """
    k = 0
    n = q
    while n % 3 == 0:
        n //= 3
        k += 1
    if n != 1 or k < 1:
        raise ValueError("q must be a positive power of 3, got %r" % (q,))
    K = PrimeField(3) if k == 1 else ExtField(3, k)
    out = set()
    for z in K.elements():
        quartic = K.add(K.pow(z, 4), K.one)
        cubic = K.sub(K.add(K.pow(z, 3), z), K.one)
        if K.is_zero(quartic) and K.is_zero(cubic):
            out.add(z)
    return out
