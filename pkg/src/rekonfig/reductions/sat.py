"""Formula-level reduction: exactly-3 SAT to its sandwiched variant whose
question is the existence of a mixed satisfying assignment.

The two stages: first widen every clause C_h to (C_h or x_i or not x_j) over
all variable pairs (i, j), which yields a sandwiched E5 formula of m*n^2
clauses that a mixed assignment satisfies iff it satisfies the input; then
shrink clauses back to width 3 by repeatedly replacing a same-polarity pair
with a fresh definitional variable,

    x or y  <->  z   becoming   (x or y or -z)(-x or -x or z)(-y or -y or z)

and the all-negative dual for a negative pair. Each size-5 clause takes two
replacements, so the output has exactly 7*m*n^2 clauses over n + 2*m*n^2
variables, and every replacement preserves mixed satisfiability in both
directions.
"""

from __future__ import annotations

from ..errors import PreconditionError
from ..oracles import Assignment, CnfFormula


def _all_const_assignment_satisfies(phi: CnfFormula, value: bool) -> bool:
    return Assignment((value,) * phi.variable_count).satisfies(phi)


def e3sat_to_inte3sat(phi: CnfFormula) -> CnfFormula:
    """Compile an E3 formula into a sandwiched E3 formula with the same
    mixed satisfiability.

    Requires that neither the all-true nor the all-false assignment
    satisfies phi (so plain satisfiability of phi coincides with mixed
    satisfiability of the output).
    """
    if not phi.is_e3:
        raise PreconditionError("input must have exactly three literals per clause")
    for value, name in ((True, "all-true"), (False, "all-false")):
        if _all_const_assignment_satisfies(phi, value):
            raise PreconditionError(f"the {name} assignment satisfies the input formula")
    n = phi.variable_count
    widened = tuple(
        clause + (i, -j)
        for clause in phi.clauses
        for i in range(1, n + 1)
        for j in range(1, n + 1)
    )
    out = CnfFormula(n, widened)
    while not out.is_e3:
        out = replace_long_clause(out)
    m = phi.clause_count
    assert out.clause_count == 7 * m * n * n
    assert out.variable_count == n + 2 * m * n * n
    return out


def replace_long_clause(psi: CnfFormula) -> CnfFormula:
    """Apply one definitional replacement to the first clause of width >= 4.

    Scans clauses left to right; inside the clause a positive literal pair is
    preferred over a negative one, taking the two earliest occurrences. The
    fresh variable gets the next free index and the three defining clauses
    are appended at the end, keeping the formula sandwiched.
    """
    if not psi.is_sandwiched:
        raise PreconditionError("input formula must be sandwiched")
    target = next((idx for idx, c in enumerate(psi.clauses) if len(c) >= 4), None)
    if target is None:
        raise PreconditionError("no clause of width >= 4 to replace")
    clause = psi.clauses[target]
    z = psi.variable_count + 1
    positives = [p for p, l in enumerate(clause) if l > 0]
    if len(positives) >= 2:
        pa, pb = positives[0], positives[1]
        x, y = clause[pa], clause[pb]
        replacement = z
        defining = ((x, y, -z), (-x, -x, z), (-y, -y, z))
    else:
        negatives = [p for p, l in enumerate(clause) if l < 0]
        if len(negatives) < 2:
            raise PreconditionError("clause of width >= 4 with no same-polarity pair")
        pa, pb = negatives[0], negatives[1]
        x, y = -clause[pa], -clause[pb]
        replacement = -z
        defining = ((-x, -y, z), (x, x, -z), (y, y, -z))
    shrunk = (replacement,) + tuple(
        l for p, l in enumerate(clause) if p not in (pa, pb)
    )
    clauses = (
        psi.clauses[:target] + (shrunk,) + psi.clauses[target + 1 :] + defining
    )
    return CnfFormula(z, clauses)
