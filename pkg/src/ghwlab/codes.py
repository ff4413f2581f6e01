"""Parameter derivation and trace-representation materialization of the codes.

A parameter tuple (p, s, m, e, t, a, deltas) determines exponents
a_i = a + ((Q-1)/e) * delta_i, a length n = (Q-1)/gcd(Q-1, a_1..a_t), and a
class count N = gcd((Q-1)/(q-1), a*e).  The code itself is the image of
F_Q^t under the trace map: coordinate i of the word for message (x_1..x_t)
is Tr_{Q->q}(sum_j x_j gamma^(a_j * i)), i = 1..n.

Coordinates are 1-based in the mathematics; everything serialized by this
package is 0-based and says so via an explicit "index_base" field.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import linalg
from .cyclotomy import CyclotomyCtx, semiprimitive_j
from .fields import FieldCtx, PolyOverFq, build_field, is_prime, poly_divmod, poly_mul


@dataclass(frozen=True)
class AssumptionCheck:
    ok: bool
    detail: str

    def to_dict(self):
        return {"ok": self.ok, "detail": self.detail}


@dataclass(frozen=True)
class AssumptionReport:
    """Pass/fail record, with witnesses, for the three parameter assumptions."""

    i: AssumptionCheck
    ii: AssumptionCheck
    iii: AssumptionCheck

    @property
    def all_ok(self) -> bool:
        return self.i.ok and self.ii.ok and self.iii.ok

    def to_dict(self):
        return {
            "i": self.i.to_dict(),
            "ii": self.ii.to_dict(),
            "iii": self.iii.to_dict(),
            "all_ok": self.all_ok,
        }


@dataclass(frozen=True)
class HypothesisReport:
    """Which closed-form hypotheses hold for a parameter set.

    Never raised from; the closed-form engine consults it and refuses when
    any flag is false.  t = 1 is accepted and flagged as the irreducible
    (one-nonzero) special case.
    """

    e_equals_t: bool
    N_in_range: bool      # 2 < N and N^2 <= Q
    j: int | None
    sm_over_2j_odd: bool
    m_even: bool
    irreducible: bool

    @property
    def semiprimitive(self) -> bool:
        return self.j is not None

    @property
    def all_hold(self) -> bool:
        return (self.e_equals_t and self.N_in_range and self.semiprimitive
                and self.sm_over_2j_odd and self.m_even)

    def failures(self) -> list:
        out = []
        if not self.e_equals_t:
            out.append("e_equals_t")
        if not self.N_in_range:
            out.append("N_in_range (need 2 < N <= sqrt(Q))")
        if not self.semiprimitive:
            out.append("semiprimitive (no j with p^j = -1 mod N)")
        if not self.sm_over_2j_odd:
            out.append("sm_over_2j_odd")
        if not self.m_even:
            out.append("m_even")
        return out

    def to_dict(self):
        return {
            "e_equals_t": self.e_equals_t,
            "N_in_range": self.N_in_range,
            "semiprimitive": self.semiprimitive,
            "j": self.j,
            "sm_over_2j_odd": self.sm_over_2j_odd,
            "m_even": self.m_even,
            "irreducible": self.irreducible,
            "all_hold": self.all_hold,
        }


@dataclass(eq=False)
class CodeParams:
    p: int
    s: int
    m: int
    e: int
    t: int
    a: int
    deltas: tuple
    q: int
    Q: int
    a_list: tuple
    delta: int
    n: int
    N: int
    field: FieldCtx
    assumptions: AssumptionReport

    @property
    def k(self) -> int:
        """Code dimension t*m (holds when assumption iii passes)."""
        return self.t * self.m

    def to_dict(self):
        return {
            "p": self.p, "s": self.s, "m": self.m,
            "e": self.e, "t": self.t, "a": self.a,
            "deltas": list(self.deltas),
            "q": self.q, "Q": self.Q,
            "a_i": list(self.a_list),
            "delta": self.delta, "n": self.n, "N": self.N, "k": self.k,
        }


def derive_params(p, s, m, e, t, a, deltas=None) -> CodeParams:
    """Derive all code parameters and record the assumption checks.

    Hard errors are limited to non-prime p, t > e, a delta list of the wrong
    length, and e not dividing Q-1 (without which the exponents a_i are
    undefined); every other assumption failure is recorded in the report
    rather than raised, so callers can inspect near-miss parameter sets.
    """
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    for name, val in (("s", s), ("m", m), ("e", e), ("t", t)):
        if val < 1:
            raise ValueError(f"{name} must be positive, got {val}")
    if a < 1:
        raise ValueError(f"a must be positive, got {a}")
    if t > e:
        raise ValueError(f"t={t} exceeds e={e}")
    if deltas is None:
        if e == t:
            deltas = tuple(range(t))
        else:
            raise ValueError("deltas may only be defaulted when e == t")
    deltas = tuple(deltas)
    if len(deltas) != t:
        raise ValueError(f"deltas must have length t={t}, got {len(deltas)}")

    field = build_field(p, s * m, subfield_degree=s)
    q, Q = field.q, field.Q
    if (Q - 1) % e != 0:
        raise ValueError(f"e={e} does not divide Q-1={Q - 1}")

    step = (Q - 1) // e
    a_list = tuple((a + step * d) % (Q - 1) for d in deltas)
    delta = math.gcd(Q - 1, *a_list)
    n = (Q - 1) // delta
    N = math.gcd((Q - 1) // (q - 1), a * e)

    report = AssumptionReport(
        i=_check_i(Q, e, a, t),
        ii=_check_ii(e, t, deltas),
        iii=_check_iii(field, a_list, m),
    )
    return CodeParams(p=p, s=s, m=m, e=e, t=t, a=a, deltas=deltas,
                      q=q, Q=Q, a_list=a_list, delta=delta, n=n, N=N,
                      field=field, assumptions=report)


def _check_i(Q, e, a, t):
    clauses = []
    ok = True
    if (Q - 1) % e == 0:
        clauses.append(f"e={e} divides Q-1")
    else:
        ok = False
        clauses.append(f"e={e} does not divide Q-1={Q - 1}")
    if a % (Q - 1) != 0:
        clauses.append(f"a={a} is nonzero mod Q-1")
    else:
        ok = False
        clauses.append(f"a={a} is 0 mod Q-1={Q - 1}")
    if e >= t >= 1:
        clauses.append(f"e={e} >= t={t} >= 1")
    else:
        ok = False
        clauses.append(f"e={e} >= t={t} >= 1 fails")
    return AssumptionCheck(ok, "; ".join(clauses))


def _check_ii(e, t, deltas):
    if t < 2:
        return AssumptionCheck(True, "t=1: no condition on deltas")
    residues = [d % e for d in deltas]
    if len(set(residues)) != t:
        dupes = sorted({r for r in residues if residues.count(r) > 1})
        return AssumptionCheck(False, f"deltas collide mod e at residues {dupes}")
    g = math.gcd(e, *[(d - deltas[0]) % e for d in deltas[1:]])
    if g != 1:
        return AssumptionCheck(False, f"gcd(delta differences, e) = {g} != 1")
    return AssumptionCheck(True, "deltas distinct mod e and difference gcd is 1")


def _check_iii(field, a_list, m):
    polys = []
    for ai in a_list:
        root = field.pow(field.gamma, -ai) if ai else field.one
        polys.append(field.minimal_poly(root))
    degs = [poly.degree for poly in polys]
    if any(d != m for d in degs):
        return AssumptionCheck(False, f"minimal polynomial degrees {degs}, expected all {m}")
    coeff_sets = [poly.coeffs for poly in polys]
    if len(set(coeff_sets)) != len(coeff_sets):
        return AssumptionCheck(False, "repeated minimal polynomial among the exponents")
    return AssumptionCheck(True, f"all degrees equal {m} and polynomials pairwise distinct")


def check_closed_form_hypotheses(params: CodeParams) -> HypothesisReport:
    """Report whether the closed-form hierarchy applies; never raises."""
    N = params.N
    j = None
    if N > 2:
        j = semiprimitive_j(params.p, N)
    sm = params.s * params.m
    odd = j is not None and sm % (2 * j) == 0 and (sm // (2 * j)) % 2 == 1
    return HypothesisReport(
        e_equals_t=params.e == params.t,
        N_in_range=2 < N and N * N <= params.Q,
        j=j,
        sm_over_2j_odd=odd,
        m_even=params.m % 2 == 0,
        irreducible=params.t == 1,
    )


class TraceCode:
    """The code materialized via its trace representation.

    Evaluation points gamma^(a_j * i) are precomputed; the message space is
    F_Q^t and the word for a message is read off coordinatewise.  Immutable
    after construction and safe to share across workers.
    """

    def __init__(self, params: CodeParams):
        if not params.assumptions.all_ok:
            raise ValueError(
                "cannot materialize code: assumption check failed: "
                + "; ".join(c.detail for c in (params.assumptions.i,
                                               params.assumptions.ii,
                                               params.assumptions.iii) if not c.ok))
        self.params = params
        self.field = params.field
        self.n = params.n
        self.k = params.k
        self.q = params.q
        self.t = params.t
        self.cyclotomy = CyclotomyCtx(self.field, params.N)
        group = params.Q - 1
        exp = self.field.exp
        self.eval_points = tuple(
            tuple(exp[(aj * i) % group] for i in range(1, params.n + 1))
            for aj in params.a_list
        )
        self._trace_q = self.field.trace_table(params.s)

    def __repr__(self):
        p = self.params
        return f"TraceCode([{self.n},{self.k}] over GF({p.q}), N={p.N})"

    def codeword(self, xbar) -> tuple:
        """Word for a message in F_Q^t; GF(q)-linear in the message."""
        if len(xbar) != self.t:
            raise ValueError(f"message must have {self.t} components, got {len(xbar)}")
        field = self.field
        add, mul = field.add, field.mul
        trace = self._trace_q
        pts = self.eval_points
        word = []
        for i in range(self.n):
            acc = 0
            for j in range(self.t):
                xj = xbar[j]
                if xj:
                    acc = add(acc, mul(xj, pts[j][i]))
            word.append(trace[acc])
        return tuple(word)

    def support_union(self, basis) -> frozenset:
        """0-based coordinates where some basis word is nonzero.

        By linearity of the coordinate functionals this is the support of
        the whole subcode spanned by the basis.  The basis must be
        GF(q)-independent.
        """
        if not linalg.vectors_independent(self.field, basis):
            raise ValueError("basis vectors are GF(q)-dependent")
        return self._support_union_unchecked(basis)

    def _support_union_unchecked(self, basis) -> frozenset:
        supp = set()
        for vec in basis:
            word = self.codeword(vec)
            supp.update(i for i, c in enumerate(word) if c)
        return frozenset(supp)

    def parity_check_poly(self) -> PolyOverFq:
        """Product of the minimal polynomials of the gamma^(-a_i)."""
        field = self.field
        coeffs = (1,)
        for ai in self.params.a_list:
            root = field.pow(field.gamma, -ai) if ai else field.one
            coeffs = poly_mul(field, coeffs, field.minimal_poly(root).coeffs)
        return PolyOverFq(field, coeffs)

    def generator_poly(self) -> PolyOverFq:
        """(x^n - 1) / parity_check_poly, the division being exact."""
        field = self.field
        xn1 = [0] * (self.n + 1)
        xn1[0] = field.neg(1)
        xn1[-1] = 1
        quot, rem = poly_divmod(field, tuple(xn1), self.parity_check_poly().coeffs)
        if any(rem):
            raise RuntimeError("parity-check polynomial does not divide x^n - 1")
        return PolyOverFq(field, quot)


def support_union(code: TraceCode, basis) -> frozenset:
    return code.support_union(basis)
