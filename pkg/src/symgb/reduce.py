"""Equivariant reduction of polynomials under the symmetric-group action.

A reduction step rewrites the leading term of f using a basis element g,
a permutation witness sigma and a single cofactor term, so that

    f  ->  f - (lc(f)/lc(g)) * u * sigma(g),

which cancels lt(f) and strictly lowers the leading monomial.  Every
normal-form computation returns the residue together with a trace whose
exact re-expansion reconstructs the input; traces double as membership
certificates for the module generated by the basis over the group ring.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .order import LEX, leading_term
from .perm import Permutation, act
from .poly import Monomial, Polynomial
from .wqo import cancellation_witness


@dataclass(frozen=True)
class ReductionStep:
    generator_index: int
    generator: Polynomial
    sigma: Permutation
    coefficient: Fraction
    cofactor: Monomial
    target: Monomial

    def summand(self) -> Polynomial:
        return act(self.sigma, self.generator).mul_term(self.cofactor, self.coefficient)

    def to_dict(self) -> dict:
        from .parse import render_monomial, render_polynomial

        return {
            "generator": self.generator_index,
            "sigma": self.sigma.cycle_string(),
            "coefficient": str(self.coefficient),
            "cofactor": render_monomial(self.cofactor),
            "target": render_monomial(self.target),
            "summand": render_polynomial(self.summand()),
        }


@dataclass(frozen=True)
class ReductionTrace:
    steps: tuple[ReductionStep, ...] = ()
    residue: Polynomial = field(default_factory=Polynomial.zero)

    def reconstruct(self) -> Polynomial:
        total = self.residue
        for step in self.steps:
            total = total + step.summand()
        return total

    def to_dict(self) -> dict:
        from .parse import render_polynomial

        return {
            "residue": render_polynomial(self.residue),
            "steps": [s.to_dict() for s in self.steps],
        }


def _pick_generator(target: Monomial, basis: Sequence[Polynomial]):
    """The applicable generator with lex-smallest leading monomial (ties by
    position), together with its witness; None when target is irreducible."""
    best = None
    for pos, g in enumerate(basis):
        if g.is_zero():
            continue
        lm, _ = leading_term(g, LEX)
        report = cancellation_witness(lm, target)
        if not report.related:
            continue
        if best is None or LEX.less(lm, best[1]):
            best = (pos, lm, report)
    return best


def reduce_step(f: Polynomial, basis: Sequence[Polynomial]) -> Optional[tuple[Polynomial, ReductionStep]]:
    """One leading-term rewrite of f by the basis, or None if f is reduced."""
    if f.is_zero():
        raise ValueError("cannot reduce the zero polynomial")
    lm_f, lc_f = leading_term(f, LEX)
    choice = _pick_generator(lm_f, basis)
    if choice is None:
        return None
    pos, _, report = choice
    g = basis[pos]
    _, lc_g = leading_term(g, LEX)
    coeff = lc_f / lc_g
    step = ReductionStep(pos, g, report.sigma, coeff, report.cofactor, lm_f)
    return f - step.summand(), step


def normal_form(
    f: Polynomial, basis: Sequence[Polynomial], tail: bool = False
) -> tuple[Polynomial, ReductionTrace]:
    """Reduce f to a residue whose leading term admits no further rewrite.

    With ``tail=True`` the lower-order terms of the residue are rewritten
    as well, yielding a residue none of whose monomials is reducible.
    Termination is guaranteed because the rewritten monomial strictly
    decreases under the lexicographic order at every step.
    """
    steps = []
    work = f
    done = Polynomial.zero()
    while not work.is_zero():
        outcome = reduce_step(work, basis)
        if outcome is not None:
            work, step = outcome
            steps.append(step)
            continue
        if not tail:
            done = work
            break
        lm, lc = leading_term(work, LEX)
        done = done + Polynomial.from_monomial(lm, lc)
        work = work - Polynomial.from_monomial(lm, lc)
    residue = done
    return residue, ReductionTrace(tuple(steps), residue)


def is_reduced(f: Polynomial, basis: Sequence[Polynomial]) -> bool:
    if f.is_zero():
        return True
    lm_f, _ = leading_term(f, LEX)
    return _pick_generator(lm_f, basis) is None


def verify_trace(f: Polynomial, trace: ReductionTrace) -> bool:
    """Check the exact identity f = residue + sum of step summands and the
    bound lm(summand) <= lm(f) for every step."""
    if trace.reconstruct() != f:
        return False
    if f.is_zero():
        return not trace.steps
    lm_f, _ = leading_term(f, LEX)
    for step in trace.steps:
        summand = step.summand()
        if summand.is_zero():
            return False
        lm_s, _ = leading_term(summand, LEX)
        if LEX.less(lm_f, lm_s):
            return False
    return True


def minimalize(basis: Sequence[Polynomial]) -> list[Polynomial]:
    """Drop every element whose leading monomial sits above another's in the
    certified cancellation relation; survivors keep ascending-lex order."""
    decorated = []
    for pos, g in enumerate(basis):
        if g.is_zero():
            continue
        lm, _ = leading_term(g, LEX)
        decorated.append((lm, pos, g))
    decorated.sort(key=lambda item: (LEX.monomial_key()(item[0]), item[1]))
    kept: list[tuple[Monomial, int, Polynomial]] = []
    for lm, pos, g in decorated:
        if any(cancellation_witness(lm_kept, lm).related for lm_kept, _, _ in kept):
            continue
        kept.append((lm, pos, g))
    return [g for _, _, g in kept]


def truncation_gb_check(
    basis: Sequence[Polynomial], gens: Sequence[Polynomial], n: int
) -> bool:
    """Do all symmetrized generators of the invariant ideal of Q[x1..xn]
    spanned by ``gens`` reduce to zero by ``basis``?

    This certifies the Groebner property of ``basis`` restricted to the
    truncation: a genuine equivariant Groebner basis reduces every member
    of the ideal to zero, in particular these generators.
    """
    from .chains import symmetrize

    for g in symmetrize(gens, n):
        residue, _ = normal_form(g, basis)
        if not residue.is_zero():
            return False
    return True
