"""Certified order relations between monomials under the symmetric group.

The central relation is a decidable sufficient certificate for the
symmetric cancellation order on arity-1 monomials: v is related to w when
v <= w lexicographically and the exponent profile of v embeds into the
profile of w by a strictly increasing position map.  Each positive answer
comes with an explicit permutation witness sigma and cofactor u such that
u * sigma(v) = w and sigma is increasing on the indices of v, which makes
the witness sound for the cancellation order.  Whether the certificate is
also complete is not known and is never assumed.

For arbitrary arity there is divisibility up to an index injection,
decided by exhaustive backtracking, together with good-pair scanning of
finite sequences and the standard arity-2 bad sequence.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Optional

from .order import LEX
from .perm import Injection, Permutation, act
from .poly import Monomial, Variable, exponent_profile, max_index


def _require_arity_one(*monomials: Monomial):
    for m in monomials:
        for v, _ in m.items():
            if v.arity != 1 or v.family != "x":
                raise ValueError("this relation is defined for x[i] variables only")


def higman_embed(v: Monomial, w: Monomial) -> Optional[tuple[int, ...]]:
    """Strictly increasing phi with v_profile[i] <= w_profile[phi[i]], or None.

    Positions are matched greedily from the most significant end: the last
    position of v takes the largest usable position of w, and so on down.
    The usual exchange argument shows this finds an embedding whenever one
    exists, and the top-down scan matches how the lexicographic order reads
    exponent tuples.  Returned positions are 1-based; the embedding for the
    monomial 1 is the empty tuple.
    """
    _require_arity_one(v, w)
    vp, wp = exponent_profile(v), exponent_profile(w)
    phi = [0] * len(vp)
    limit = len(wp)
    for i in range(len(vp) - 1, -1, -1):
        j = limit
        while j >= 1 and wp[j - 1] < vp[i]:
            j -= 1
        if j < i + 1:
            return None
        phi[i] = j
        limit = j - 1
    return tuple(phi)


@dataclass(frozen=True)
class WitnessReport:
    """Outcome of a cancellation-order test, with certificate when related."""

    v: Monomial
    w: Monomial
    related: bool
    phi: Optional[tuple[int, ...]] = None
    sigma: Optional[Permutation] = None
    cofactor: Optional[Monomial] = None

    def validate(self) -> bool:
        """Re-verify the certificate by expansion."""
        if not self.related:
            return False
        image = act(self.sigma, self.v)
        if not image.divides(self.w):
            return False
        if self.cofactor * image != self.w:
            return False
        top = max_index(self.w)
        return all(i <= (top or 0) for i in self.sigma.support)

    def to_dict(self) -> dict:
        from .parse import render_monomial

        out = {"related": self.related, "v": render_monomial(self.v), "w": render_monomial(self.w)}
        if self.related:
            out["phi"] = {i + 1: p for i, p in enumerate(self.phi)}
            out["sigma"] = self.sigma.cycle_string()
            out["cofactor"] = render_monomial(self.cofactor)
        return out


def cancellation_witness(v: Monomial, w: Monomial) -> WitnessReport:
    """Decide the certified subrelation of the cancellation order on
    arity-1 monomials and produce a permutation witness.

    Related means v <= w under lex and the profile of v Higman-embeds into
    the profile of w.  The witness sigma sends position i of v to phi(i),
    permutes only {1..max_index(w)} and fixes everything above, so that
    sigma is increasing on the support of every monomial below v; the
    cofactor is w / sigma(v).
    """
    _require_arity_one(v, w)
    if LEX.compare(v, w) > 0:
        return WitnessReport(v, w, False)
    phi = higman_embed(v, w)
    if phi is None:
        return WitnessReport(v, w, False)
    sigma = Injection({i + 1: p for i, p in enumerate(phi)}).extend_to_permutation()
    cofactor = w.quotient_by(act(sigma, v))
    assert cofactor is not None
    return WitnessReport(v, w, True, phi, sigma, cofactor)


def injection_divisor(v: Monomial, w: Monomial) -> Optional[Injection]:
    """An injection pi on the index support of v with act(pi, v) | w, or None.

    Works for any arity.  The search backtracks over the variables of v in
    ascending order, trying target variables of w in ascending order, so
    the returned witness is deterministic; exhausting the finite search
    space proves no witnessing permutation exists, because any permutation
    with sigma(v) | w restricts to exactly such an injection.
    """
    if v.is_one():
        return Injection({})
    vvars = v.variables()
    wvars = w.variables()
    assignment: dict[int, int] = {}
    used_targets: set[Variable] = set()

    def extend(var: Variable, target: Variable) -> Optional[list[int]]:
        if target.arity != var.arity:
            return None
        added = []
        for a, b in zip(var.entries, target.entries):
            if a in assignment:
                if assignment[a] != b:
                    for k in added:
                        del assignment[k]
                    return None
            else:
                if b in assignment.values():
                    for k in added:
                        del assignment[k]
                    return None
                assignment[a] = b
                added.append(a)
        return added

    def search(pos: int) -> bool:
        if pos == len(vvars):
            return True
        var = vvars[pos]
        exp = v.exponent(var)
        for target in wvars:
            if target in used_targets or w.exponent(target) < exp:
                continue
            added = extend(var, target)
            if added is None:
                continue
            used_targets.add(target)
            if search(pos + 1):
                return True
            used_targets.discard(target)
            for k in added:
                del assignment[k]
        return False

    if search(0):
        return Injection(dict(assignment))
    return None


Relation = Literal["higman", "injection"]


def related(v: Monomial, w: Monomial, relation: Relation) -> bool:
    if relation == "higman":
        return cancellation_witness(v, w).related
    if relation == "injection":
        return injection_divisor(v, w) is not None
    raise ValueError(f"unknown relation {relation!r}")


def goodness_scan(seq, relation: Relation = "higman") -> Optional[tuple[int, int]]:
    """First pair of 1-based positions i < j with seq[i] related to seq[j].

    Pairs are scanned in lexicographic (i, j) order; None means the finite
    sequence is bad for the chosen relation.
    """
    items = list(seq)
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            if related(items[i], items[j], relation):
                return (i + 1, j + 1)
    return None


def bad_sequence_element(n: int) -> Monomial:
    """The n-th member of the arity-2 antichain for divisibility up to
    injections: the product of x[1,2], x[3,2], x[j,j-1] for 4 <= j <= n,
    and x[n,n+1].

    No injection maps an earlier member into a later one, which is what
    rules out a lovely order for tuple variables of arity >= 2.
    """
    if n < 3:
        raise ValueError("bad sequence starts at n = 3")
    pairs = [(1, 2), (3, 2)]
    pairs.extend((j, j - 1) for j in range(4, n + 1))
    pairs.append((n, n + 1))
    return Monomial({Variable(p): 1 for p in pairs})
