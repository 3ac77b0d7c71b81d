"""Exact rational linear programming: maximize c.x over {x >= 0 : Ax = b}.

Two-phase tableau simplex over fractions.Fraction with Bland's rule, so no
floats and no cycling.  The optimal dual vector is recomputed from the final
basis and re-verified against every column before an Optimal outcome is
returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionMismatch, InternalInconsistency

Rational = Fraction


@dataclass
class LinearProgram:
    num_vars: int
    constraints: list[tuple[tuple[Fraction, ...], Fraction]]
    objective: tuple[Fraction, ...]
    variable_names: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.variable_names:
            self.variable_names = tuple(f"x{i}" for i in range(self.num_vars))
        if len(self.objective) != self.num_vars:
            raise DimensionMismatch("objective length != num_vars")
        if len(self.variable_names) != self.num_vars:
            raise DimensionMismatch("variable_names length != num_vars")
        for row, _ in self.constraints:
            if len(row) != self.num_vars:
                raise DimensionMismatch("constraint row length != num_vars")


@dataclass
class LPOutcome:
    status: str  # Optimal | Infeasible | Unbounded
    value: Fraction | None = None
    point: tuple[Fraction, ...] | None = None
    basis: tuple[int, ...] | None = None
    unique: bool | None = None


class _Tableau:
    """Dense simplex tableau with full row elimination at each pivot."""

    def __init__(self, rows, rhs, ncols):
        self.rows = rows  # list of lists of Fractions, length ncols each
        self.rhs = rhs
        self.ncols = ncols
        self.basis: list[int] = []

    def reduced_costs(self, cost):
        rc = list(cost)
        for i, bi in enumerate(self.basis):
            cb = cost[bi]
            if cb:
                row = self.rows[i]
                for j in range(self.ncols):
                    if row[j]:
                        rc[j] -= cb * row[j]
        return rc

    def objective_value(self, cost):
        return sum(cost[bi] * self.rhs[i] for i, bi in enumerate(self.basis))

    def pivot(self, row_i, col_j):
        piv = self.rows[row_i][col_j]
        inv = Fraction(1) / piv
        self.rows[row_i] = [x * inv for x in self.rows[row_i]]
        self.rhs[row_i] *= inv
        prow = self.rows[row_i]
        for i in range(len(self.rows)):
            if i == row_i:
                continue
            f = self.rows[i][col_j]
            if f:
                self.rows[i] = [x - f * y for x, y in zip(self.rows[i], prow)]
                self.rhs[i] -= f * self.rhs[row_i]
        self.basis[row_i] = col_j

    def ratio_leave(self, col_j):
        """Bland leaving row for entering column, or None if unbounded."""
        best = None
        for i, row in enumerate(self.rows):
            a = row[col_j]
            if a > 0:
                r = self.rhs[i] / a
                if best is None or r < best[0] or (r == best[0] and self.basis[i] < self.basis[best[1]]):
                    best = (r, i)
        return None if best is None else best[1]

    def maximize(self, cost):
        """Run Bland-rule simplex to optimality; returns False on unbounded."""
        while True:
            rc = self.reduced_costs(cost)
            enter = next((j for j in range(self.ncols) if rc[j] > 0), None)
            if enter is None:
                return True
            leave = self.ratio_leave(enter)
            if leave is None:
                return False
            self.pivot(leave, enter)


def solve_max(lp: LinearProgram) -> LPOutcome:
    n = lp.num_vars
    rows = []
    rhs = []
    for r, b in lp.constraints:
        row = [Fraction(x) for x in r]
        b = Fraction(b)
        if b < 0:
            row = [-x for x in row]
            b = -b
        rows.append(row)
        rhs.append(b)
    m = len(rows)

    # phase 1: artificial variable per row, drive their sum to zero
    ncols = n + m
    tab = _Tableau([row + [Fraction(int(i == k)) for k in range(m)] for i, row in enumerate(rows)],
                   list(rhs), ncols)
    tab.basis = [n + i for i in range(m)]
    phase1_cost = [Fraction(0)] * n + [Fraction(-1)] * m
    if not tab.maximize(phase1_cost):
        raise InternalInconsistency("phase 1 cannot be unbounded")
    if tab.objective_value(phase1_cost) != 0:
        return LPOutcome(status="Infeasible")

    # remove artificials from the basis (pivot out or drop redundant rows)
    drop = []
    for i in range(len(tab.basis)):
        if tab.basis[i] >= n:
            col = next((j for j in range(n) if tab.rows[i][j] != 0), None)
            if col is None:
                drop.append(i)
            else:
                tab.pivot(i, col)
    for i in reversed(drop):
        del tab.rows[i]
        del tab.rhs[i]
        del tab.basis[i]
    tab.rows = [row[:n] for row in tab.rows]
    tab.ncols = n

    # the constraint system actually enforced from here on (for the dual check)
    live_rows = [r for i, r in enumerate(rows) if i not in drop]
    live_rhs = [b for i, b in enumerate(rhs) if i not in drop]

    # phase 2
    cost = [Fraction(x) for x in lp.objective]
    if not tab.maximize(cost):
        return LPOutcome(status="Unbounded")

    point = [Fraction(0)] * n
    for i, bi in enumerate(tab.basis):
        point[bi] = tab.rhs[i]
    value = sum(c * x for c, x in zip(cost, point))

    _verify_dual_certificate(live_rows, live_rhs, cost, tab.basis, value)

    unique = _probe_uniqueness(tab, cost, point)
    return LPOutcome(
        status="Optimal",
        value=value,
        point=tuple(point),
        basis=tuple(tab.basis),
        unique=unique,
    )


def _verify_dual_certificate(rows, rhs, cost, basis, value):
    """Solve y^T A_B = c_B exactly and check reduced costs <= 0 and y.b = value."""
    m = len(rows)
    if m == 0:
        if any(c > 0 for c in cost):
            raise InternalInconsistency("empty system cannot be optimal with positive costs")
        return
    # y^T A_B = c_B  <=>  (A_B)^T y = c_B
    cols = list(basis)
    mat = [[rows[i][j] for i in range(m)] for j in cols]
    target = [cost[j] for j in cols]
    y = _solve_square(mat, target)
    if y is None:
        raise InternalInconsistency("basis matrix is singular at optimum")
    for j in range(len(cost)):
        reduced = cost[j] - sum(y[i] * rows[i][j] for i in range(m))
        if reduced > 0:
            raise InternalInconsistency("dual certificate rejects a column")
    if sum(yi * bi for yi, bi in zip(y, rhs)) != value:
        raise InternalInconsistency("dual objective does not match primal value")


def _solve_square(rows, rhs):
    n = len(rows)
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [aug[r][n] for r in range(n)]


def _probe_uniqueness(tab: _Tableau, cost, point) -> bool:
    """Pivot-probe each zero-reduced-cost nonbasic column; unique iff none moves."""
    rc = tab.reduced_costs(cost)
    basic = set(tab.basis)
    for j in range(tab.ncols):
        if j in basic or rc[j] != 0:
            continue
        leave = tab.ratio_leave(j)
        if leave is None:
            return False  # optimal ray: infinitely many optima
        if tab.rhs[leave] / tab.rows[leave][j] > 0:
            return False  # a genuine step to a different optimal point
    return True


def evaluate(lp: LinearProgram, point) -> tuple[bool, Fraction]:
    if len(point) != lp.num_vars:
        raise DimensionMismatch("point length != num_vars")
    point = [Fraction(x) for x in point]
    feasible = all(x >= 0 for x in point) and all(
        sum(c * x for c, x in zip(row, point)) == b for row, b in lp.constraints
    )
    objective = sum(c * x for c, x in zip(lp.objective, point))
    return feasible, objective


# --- serialization ----------------------------------------------------------


def fraction_to_json(q: Fraction) -> dict:
    q = Fraction(q)
    return {"num": str(q.numerator), "den": str(q.denominator)}


def fraction_from_json(d: dict) -> Fraction:
    return Fraction(int(d["num"]), int(d["den"]))


def lp_to_json_dict(lp: LinearProgram) -> dict:
    return {
        "vars": list(lp.variable_names),
        "constraints": [
            {"coeffs": [fraction_to_json(c) for c in row], "rhs": fraction_to_json(b)}
            for row, b in lp.constraints
        ],
        "objective": [fraction_to_json(c) for c in lp.objective],
    }


def lp_from_json_dict(d: dict) -> LinearProgram:
    names = tuple(d["vars"])
    constraints = [
        (
            tuple(fraction_from_json(c) for c in item["coeffs"]),
            fraction_from_json(item["rhs"]),
        )
        for item in d["constraints"]
    ]
    objective = tuple(fraction_from_json(c) for c in d["objective"])
    return LinearProgram(
        num_vars=len(names),
        constraints=constraints,
        objective=objective,
        variable_names=names,
    )
