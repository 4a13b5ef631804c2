"""Groupcast-to-multiple-unicast transformation and scheme translations.

A groupcast instance (after normalization: each message desired by exactly L
destinations, each destination desiring one message) becomes a multiple
unicast instance with M(L+1) messages: L working copies per original message
plus one auxiliary.  Each copy's destination inherits the lifted antidotes of
its groupcast counterpart and holds all other copies of its own message plus
every auxiliary; the auxiliary's destination holds everything except its own
message group, which forces the copies to share signal space in any linear
scheme.  Rate tuples translate as R for copies and 1 - R for auxiliaries,
in both directions for linear coding.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import TranslationFailed
from .galois import Matrix, Subspace
from .model import Destination, Instance, _normalize_groupcast_tracked
from .scheme import LinearScheme, _independent_rows


@dataclass(frozen=True)
class UnicastMap:
    """Original (normalized groupcast) instance, its unicast equivalent, and
    the (message, copy) -> transformed id correspondence."""

    original: Instance
    transformed: Instance
    L: int
    with_auxiliaries: bool = True
    # per normalized destination: the pre-normalization destination id whose
    # demand/antidotes it descends from (decoder reuse needs this)
    source_destinations: tuple = ()

    @property
    def M(self) -> int:
        return self.original.num_messages

    def unicast_id(self, i: int, j: int) -> int:
        """Transformed id of copy j (0 = auxiliary) of original message i."""
        if not (1 <= i <= self.M) or not (0 <= j <= self.L):
            raise KeyError(f"no copy ({i}, {j})")
        if not self.with_auxiliaries:
            if j == 0:
                raise KeyError("transform was built without auxiliary messages")
            return (i - 1) * self.L + j
        return (i - 1) * (self.L + 1) + j + 1

    def copy_of(self, uid: int) -> tuple:
        """Inverse of unicast_id."""
        if self.with_auxiliaries:
            return (uid - 1) // (self.L + 1) + 1, (uid - 1) % (self.L + 1)
        return (uid - 1) // self.L + 1, (uid - 1) % self.L + 1

    def to_json(self) -> dict:
        return {
            "original": {"messages": self.M, "L": self.L},
            "auxiliaries": self.with_auxiliaries,
            "id_map": {
                f"{i},{j}": self.unicast_id(i, j)
                for i in range(1, self.M + 1)
                for j in range(0 if self.with_auxiliaries else 1, self.L + 1)
            },
        }


def to_unicast(inst: Instance, L: int, with_auxiliaries: bool = True) -> UnicastMap:
    """Construct the equivalent multiple unicast instance.

    ``with_auxiliaries=False`` drops the auxiliary messages and destinations;
    that variant is exploratory only (nothing here claims the reduced
    transform preserves achievability in either direction).
    """
    norm, sources = _normalize_groupcast_tracked(inst, L)
    M = norm.num_messages
    helper = UnicastMap(norm, norm, L, with_auxiliaries)  # for unicast_id only
    uid = helper.unicast_id

    def lifted(k: int) -> set:
        """All copies (including auxiliaries, when present) of k's antidotes."""
        out = set()
        lo = 0 if with_auxiliaries else 1
        for m in norm.destinations[k - 1].has:
            for l in range(lo, L + 1):
                out.add(uid(m, l))
        return out

    total = M * (L + 1) if with_auxiliaries else M * L
    all_ids = frozenset(range(1, total + 1))
    auxiliaries = frozenset(uid(m, 0) for m in range(1, M + 1)) if with_auxiliaries else frozenset()
    dests = []
    for i in range(1, M + 1):
        group = frozenset(uid(i, l) for l in range(0 if with_auxiliaries else 1, L + 1))
        if with_auxiliaries:
            dests.append(Destination(uid(i, 0), frozenset({uid(i, 0)}), all_ids - group))
        for j in range(1, L + 1):
            has = lifted((i - 1) * L + j) | auxiliaries | (group - {uid(i, j)})
            dests.append(Destination(uid(i, j), frozenset({uid(i, j)}), frozenset(has)))
    transformed = Instance(total, tuple(sorted(dests, key=lambda d: d.id)))
    return UnicastMap(norm, transformed, L, with_auxiliaries, sources)


# ----------------------------------------------------------------------
# scheme translations
# ----------------------------------------------------------------------


def _complement_columns(v: Matrix) -> Matrix:
    """A full-rank n x (n - rank) matrix whose span meets colspan(v) only at 0.

    Deterministic: greedily append identity columns that grow the rank.
    """
    f = v.field
    n = v.rows
    cur = v
    picked = []
    eye = Matrix.identity(f, n)
    rank = v.rank()
    for j in range(n):
        if rank + len(picked) == n:
            break
        cand = cur.hstack(eye.take_cols([j]))
        if cand.rank() > cur.rank():
            cur = cand
            picked.append(j)
    return eye.take_cols(picked)


def scheme_to_unicast(umap: UnicastMap, scheme: LinearScheme) -> LinearScheme:
    """Translate a groupcast scheme: copies reuse V_i, auxiliaries get a
    complement of colspan(V_i), so each copy rides at rate R_i and the
    auxiliary at 1 - R_i."""
    if not umap.with_auxiliaries:
        raise TranslationFailed("scheme translation requires the auxiliary construction")
    f = scheme.field
    n = scheme.n
    V = {}
    U = {} if scheme.U is not None else None
    for i in range(1, umap.M + 1):
        vi = scheme.V[i]
        aux = _complement_columns(vi)
        V[umap.unicast_id(i, 0)] = aux
        for j in range(1, umap.L + 1):
            V[umap.unicast_id(i, j)] = vi
        if U is not None:
            ann = vi.left_nullspace()
            U[(umap.unicast_id(i, 0), umap.unicast_id(i, 0))] = ann
            for j in range(1, umap.L + 1):
                gk = (i - 1) * umap.L + j  # normalized groupcast destination id
                src = umap.source_destinations[gk - 1] if umap.source_destinations else gk
                key = (i, src) if (i, src) in scheme.U else (i, gk)
                if key not in scheme.U:
                    raise TranslationFailed(
                        f"groupcast scheme has no decoder for message {i} at destination {src}"
                    )
                U[(umap.unicast_id(i, j), umap.unicast_id(i, j))] = scheme.U[key]
    return LinearScheme(f, n, V, U)


def scheme_to_groupcast(umap: UnicastMap, scheme: LinearScheme) -> LinearScheme:
    """Translate back: original message i rides on the intersection of its
    copies' column spans; copy decoders are reused row-selected."""
    if not umap.with_auxiliaries:
        raise TranslationFailed("scheme translation requires the auxiliary construction")
    f = scheme.field
    n = scheme.n
    V = {}
    U = {} if scheme.U is not None else None
    for i in range(1, umap.M + 1):
        inter = Subspace.from_matrix(scheme.V[umap.unicast_id(i, 1)])
        for j in range(2, umap.L + 1):
            inter = inter.intersect(Subspace.from_matrix(scheme.V[umap.unicast_id(i, j)]))
        if inter.dim == 0:
            raise TranslationFailed(
                f"copies of message {i} share no signal space; groupcast rate would be 0"
            )
        V[i] = inter.basis
        if U is not None:
            for j in range(1, umap.L + 1):
                uid = umap.unicast_id(i, j)
                ubar = scheme.U[(uid, uid)]
                rows = _independent_rows(ubar @ V[i], inter.dim)
                if rows is None:
                    raise TranslationFailed(
                        f"copy decoder of message {i}, copy {j} does not cover the intersection"
                    )
                U[(i, (i - 1) * umap.L + j)] = ubar.take_rows(rows)
    return LinearScheme(f, n, V, U)


@dataclass(frozen=True)
class RankChainStep:
    """One step of the intersection dimension chain for a message group."""

    message: int
    copies_used: int
    dim: int  # dim of the first `copies_used` copies' intersection
    lower_bound: int
    slack: int


def groupcast_rank_chain(umap: UnicastMap, scheme: LinearScheme) -> list:
    """Stepwise audit of rank(intersection) against the translation bound.

    For each original message i with copy spans S_1..S_L and auxiliary rank
    r_0: dim(S_1 n ... n S_t) >= dim(S_1 n ... n S_{t-1}) + rank(S_t) - (n -
    r_0) at every step, hence >= sum_l rank(S_l) - (L-1)(n - r_0) overall.
    Valid whenever every copy span avoids the auxiliary span, which holds for
    any verifying unicast scheme.
    """
    steps = []
    n = scheme.n
    for i in range(1, umap.M + 1):
        r0 = scheme.V[umap.unicast_id(i, 0)].rank()
        spans = [
            Subspace.from_matrix(scheme.V[umap.unicast_id(i, j)])
            for j in range(1, umap.L + 1)
        ]
        inter = spans[0]
        prev_dim = inter.dim
        steps.append(RankChainStep(i, 1, prev_dim, spans[0].dim, 0))
        for t in range(2, umap.L + 1):
            inter = inter.intersect(spans[t - 1])
            bound = prev_dim + spans[t - 1].dim - (n - r0)
            steps.append(RankChainStep(i, t, inter.dim, bound, inter.dim - bound))
            prev_dim = inter.dim
        total_bound = sum(s.dim for s in spans) - (umap.L - 1) * (n - r0)
        steps.append(RankChainStep(i, umap.L, prev_dim, total_bound, prev_dim - total_bound))
    return steps


def translated_rates(umap: UnicastMap, scheme: LinearScheme) -> dict:
    """Expected unicast rates: R_i for copies, 1 - R_i for auxiliaries."""
    out = {}
    for i in range(1, umap.M + 1):
        ri = scheme.rate(i)
        out[umap.unicast_id(i, 0)] = 1 - ri
        for j in range(1, umap.L + 1):
            out[umap.unicast_id(i, j)] = ri
    return out


def unicast_transform_report(umap: UnicastMap) -> dict:
    from .model import instance_to_json

    return {
        "map": umap.to_json(),
        "original": instance_to_json(umap.original),
        "transformed": instance_to_json(umap.transformed),
    }
