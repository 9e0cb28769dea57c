"""CNF formulas with DIMACS-style literals (``+v`` / ``-v``, variables 1-based)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import PreconditionError

Clause = tuple[int, ...]


@dataclass(frozen=True)
class CnfFormula:
    num_vars: int
    clauses: tuple[Clause, ...] = ()

    def __post_init__(self):
        clauses = tuple(tuple(int(l) for l in c) for c in self.clauses)
        for c in clauses:
            vars_ = [abs(l) for l in c]
            if any(l == 0 for l in c):
                raise PreconditionError("literal 0 is not allowed")
            if any(v > self.num_vars for v in vars_):
                raise PreconditionError(f"clause {c} mentions a variable above {self.num_vars}")
            if len(set(vars_)) != len(vars_):
                raise PreconditionError(f"clause {c} repeats a variable")
        object.__setattr__(self, "clauses", clauses)

    def occurrences(self) -> dict[int, int]:
        count = {v: 0 for v in range(1, self.num_vars + 1)}
        for c in self.clauses:
            for l in c:
                count[abs(l)] += 1
        return count

    def satisfied_by(self, assignment: Sequence[bool]) -> bool:
        """``assignment[v-1]`` is the value of variable ``v``."""
        return all(any(assignment[abs(l) - 1] == (l > 0) for l in c) for c in self.clauses)


def make_formula(num_vars: int, clauses: Iterable[Iterable[int]]) -> CnfFormula:
    return CnfFormula(num_vars, tuple(tuple(c) for c in clauses))


def expand_unit_clauses(F: CnfFormula) -> CnfFormula:
    """Replace each unit clause (l) by (l | y) & (l | -y) with a fresh y."""
    num_vars = F.num_vars
    out = []
    for c in F.clauses:
        if len(c) == 1:
            num_vars += 1
            out.append((c[0], num_vars))
            out.append((c[0], -num_vars))
        else:
            out.append(c)
    return CnfFormula(num_vars, tuple(out))
