"""Brute-force ground truth: minrank over GF(2) and scalar-scheme search.

Both oracles enumerate their entire search space (no sampling, hard budgets)
and return witnesses that re-verify through the scheme verifier, keeping the
oracle and the verifier independent code paths.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .errors import BadParams, BudgetExceeded
from .galois import Field, Matrix, PrimeField
from .model import Instance
from .scheme import LinearScheme

DEFAULT_ORACLE_BUDGET = 2**20


@dataclass(frozen=True)
class OracleResult:
    query: str
    value: Optional[int]
    search_space_size: int
    witness_matrix: Optional[Matrix] = None
    witness_scheme: Optional[LinearScheme] = None

    def to_json(self) -> dict:
        from .scheme import scheme_to_json

        out = {
            "query": self.query,
            "value": self.value,
            "search_space_size": self.search_space_size,
        }
        if self.witness_matrix is not None:
            out["witness_matrix"] = self.witness_matrix.row_list()
        if self.witness_scheme is not None:
            out["witness_scheme"] = scheme_to_json(self.witness_scheme)
        return out


def _desired_message_of(inst: Instance) -> dict:
    """destination id -> its unique desired message; requires square unicast."""
    if not inst.is_multiple_unicast():
        raise BadParams("oracle requires a multiple unicast instance")
    mapping = {}
    desired = set()
    for d in inst.destinations:
        if len(d.wants) != 1:
            raise BadParams("oracle requires single-demand destinations")
        (m,) = d.wants
        mapping[d.id] = m
        desired.add(m)
    if desired != set(range(1, inst.num_messages + 1)):
        raise BadParams("every message must be desired by exactly one destination")
    return mapping


def minrank_gf2(inst: Instance, budget: int = DEFAULT_ORACLE_BUDGET) -> OracleResult:
    """Minimum rank over GF(2) of matrices fitting the side-information graph.

    Fitting: unit diagonal, zero wherever neither the diagonal nor an
    antidote permits a nonzero entry, free on antidote positions.  The value
    equals the optimal scalar-linear broadcast length over GF(2); the witness
    matrix is rank-factored into an encoding scheme of that length.
    """
    demand = _desired_message_of(inst)
    K = inst.num_messages
    if K > 6:
        raise BudgetExceeded(f"minrank search is limited to 6 messages, got {K}")
    dest_of = {m: k for k, m in demand.items()}
    free = []
    for m in range(1, K + 1):
        d = inst.destination(dest_of[m])
        for mp in sorted(d.has):
            free.append((m, mp))
    if 2 ** len(free) > budget:
        raise BudgetExceeded(f"2^{len(free)} fitting matrices exceed budget {budget}")

    base = [1 << m for m in range(K)]  # unit diagonal, rows as bitmasks

    def rank_rows(rows):
        rows = list(rows)
        r = 0
        for bit in range(K):
            mask = 1 << bit
            piv = next((i for i in range(r, K) if rows[i] & mask), None)
            if piv is None:
                continue
            rows[r], rows[piv] = rows[piv], rows[r]
            for i in range(K):
                if i != r and rows[i] & mask:
                    rows[i] ^= rows[r]
            r += 1
        return r

    best = None
    best_rows = None
    for bits in range(2 ** len(free)):
        rows = list(base)
        for idx, (m, mp) in enumerate(free):
            if bits >> idx & 1:
                rows[m - 1] |= 1 << (mp - 1)
        r = rank_rows(rows)
        if best is None or r < best:
            best, best_rows = r, rows

    gf2 = PrimeField(2)
    fitting = Matrix.from_rows(
        gf2, [[best_rows[i] >> j & 1 for j in range(K)] for i in range(K)]
    )
    scheme = _scheme_from_fitting(inst, fitting, demand, best)
    return OracleResult(
        query=f"minrank over GF(2), {K} messages",
        value=best,
        search_space_size=2 ** len(free),
        witness_matrix=fitting,
        witness_scheme=scheme,
    )


def _scheme_from_fitting(inst, fitting, demand, rank):
    """Rank-factor the fitting matrix A = A[:, pivots] @ rref(A) into an
    n = rank scalar scheme: beams from the reduced rows, combiners from the
    pivot columns."""
    red = fitting.rref()
    pivots = []
    r = 0
    for c in range(red.cols):
        if r < red.rows and red[r, c] == 1 and all(red[i, c] == 0 for i in range(red.rows) if i != r):
            pivots.append(c)
            r += 1
    rows = Matrix.from_rows(fitting.field, [list(red.row(i)) for i in range(rank)])
    left = fitting.take_cols(pivots)
    V = {m: rows.take_cols([m - 1]) for m in range(1, inst.num_messages + 1)}
    U = {}
    for k, m in demand.items():
        U[(m, k)] = left.take_rows([m - 1])
    return LinearScheme(fitting.field, rank, V, U)


def best_scalar_scheme(
    inst: Instance,
    q: int,
    n_max: int,
    budget: int = DEFAULT_ORACLE_BUDGET,
) -> OracleResult:
    """Smallest block length n <= n_max with a valid scalar scheme over GF(q).

    Enumerates beam assignments up to scalar equivalence (projective
    representatives, first message pinned to the first unit vector, which is
    exact because validity is invariant under invertible basis change and
    per-beam scaling).  Returns value=None when no length works.
    """
    if inst.num_messages > 6 or q > 3 or n_max > 3:
        raise BudgetExceeded("scalar search is limited to M <= 6, q <= 3, n <= 3")
    field = PrimeField(q)
    M = inst.num_messages
    checked_total = 0
    for n in range(1, n_max + 1):
        reps = _projective_reps(field, n)
        space = len(reps) ** (M - 1)
        if space > budget:
            raise BudgetExceeded(f"{len(reps)}^{M - 1} assignments exceed budget {budget}")
        checked_total += space
        e1 = tuple(1 if i == 0 else 0 for i in range(n))
        for rest in itertools.product(reps, repeat=M - 1):
            beams = (e1,) + rest
            if _scalar_assignment_valid(inst, field, beams):
                V = {m: Matrix.from_cols(field, [list(beams[m - 1])]) for m in range(1, M + 1)}
                scheme = LinearScheme(field, n, V)
                return OracleResult(
                    query=f"best scalar scheme over GF({q}), n <= {n_max}",
                    value=n,
                    search_space_size=checked_total,
                    witness_scheme=scheme,
                )
    return OracleResult(
        query=f"best scalar scheme over GF({q}), n <= {n_max}",
        value=None,
        search_space_size=checked_total,
    )


def _projective_reps(field: Field, n: int) -> list:
    """Nonzero vectors of field^n with leading nonzero coordinate equal 1."""
    reps = []
    for vec in itertools.product(field.elements(), repeat=n):
        lead = next((x for x in vec if x != 0), None)
        if lead == 1:
            reps.append(vec)
    return reps


def _scalar_assignment_valid(inst, field, beams) -> bool:
    """Rank-mode validity specialized to one beam per message."""
    for d in inst.destinations:
        desired = [beams[m - 1] for m in sorted(d.wants)]
        interference = [beams[i - 1] for i in sorted(inst.interferers(d))]
        rows = desired + interference
        joint = _rank(field, rows)
        if joint != _rank(field, desired) + _rank(field, interference):
            return False
        if _rank(field, desired) != len(desired):
            return False
    return True


def _rank(field, vectors) -> int:
    basis = []
    for v in vectors:
        v = list(v)
        for b in basis:
            lead = next(i for i, x in enumerate(b) if x != 0)
            if v[lead] != 0:
                c = field.div(v[lead], b[lead])
                v = [field.sub(x, field.mul(c, y)) for x, y in zip(v, b)]
        if any(x != 0 for x in v):
            basis.append(v)
    return len(basis)
