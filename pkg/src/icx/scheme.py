"""Vector-linear index codes: representation, verification, decoders, simulation.

A scheme assigns each message m an n x L_m precoding matrix V_m over a finite
field; the broadcast word is sum_m V_m X_m.  Verification runs in two modes:

* decoder mode (combining matrices U present): zero-forcing checks
  U_{m,k} V_i = 0 for every non-antidote interferer i at k, and
  U_{m,k} V_m invertible;
* rank mode (V only): at each destination the desired columns are jointly
  independent and their span meets the interference span only at zero.

The two modes accept exactly the same schemes; ``synthesize_decoders`` turns
a rank-mode-valid scheme into a decoder-mode one.  ``simulate_exhaustive`` is
the ground-truth check: it enumerates every message tuple, encodes, decodes
at every destination, and compares.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from types import MappingProxyType
from fractions import Fraction
from typing import Mapping, Optional

from .errors import (
    BudgetExceeded,
    NoDecoderExists,
    ParseError,
    SchemeMalformed,
    UnsupportedFamily,
)
from .galois import BinaryField, Field, Matrix, PrimeField, field_from_json
from .model import Instance

DEFAULT_SIMULATION_BUDGET = 2**24


@dataclass(frozen=True)
class LinearScheme:
    """Precoding matrices V (per message) and optional combiners U (per (m, k))."""

    field: Field
    n: int
    V: Mapping[int, Matrix]
    U: Optional[Mapping[tuple, Matrix]] = None

    def __post_init__(self):
        object.__setattr__(self, "V", MappingProxyType(dict(self.V)))
        if self.U is not None:
            object.__setattr__(self, "U", MappingProxyType(dict(self.U)))
        for m, mat in self.V.items():
            if mat.field != self.field or mat.rows != self.n:
                raise SchemeMalformed(f"V[{m}] is not an {self.n}-row matrix over {self.field}")
        if self.U is not None:
            for (m, k), mat in self.U.items():
                if m not in self.V:
                    raise SchemeMalformed(f"U[{m}@{k}] refers to unknown message {m}")
                if mat.field != self.field or mat.rows != self.V[m].cols or mat.cols != self.n:
                    raise SchemeMalformed(
                        f"U[{m}@{k}] must be {self.V[m].cols}x{self.n} over {self.field}"
                    )

    def stream_count(self, m: int) -> int:
        return self.V[m].cols

    def rate(self, m: int) -> Fraction:
        return Fraction(self.stream_count(m), self.n)

    def rates(self) -> dict:
        return {m: self.rate(m) for m in sorted(self.V)}

    def without_decoders(self) -> "LinearScheme":
        return LinearScheme(self.field, self.n, self.V, None)

    def message_ids(self) -> list:
        return sorted(self.V)


@dataclass(frozen=True)
class Diagnostic:
    """One failed check: which property broke, at which (m, i, k)."""

    kind: str  # "property1" | "property2" | "desired-rank" | "resolvability" | "missing-decoder"
    destination: int
    message: Optional[int] = None
    interferer: Optional[int] = None

    def describe(self) -> str:
        bits = [self.kind, f"destination {self.destination}"]
        if self.message is not None:
            bits.append(f"message {self.message}")
        if self.interferer is not None:
            bits.append(f"interferer {self.interferer}")
        return ", ".join(bits)


@dataclass(frozen=True)
class VerificationReport:
    valid: bool
    mode: str
    diagnostics: tuple
    rates: dict

    def to_json(self) -> dict:
        return {
            "valid": self.valid,
            "mode": self.mode,
            "diagnostics": [d.describe() for d in self.diagnostics],
            "rates": {str(m): f"{r.numerator}/{r.denominator}" for m, r in sorted(self.rates.items())},
        }


def _check_scheme_matches(inst: Instance, scheme: LinearScheme):
    msgs = set(range(1, inst.num_messages + 1))
    if set(scheme.V) != msgs:
        raise SchemeMalformed(
            f"scheme covers messages {sorted(scheme.V)}, instance has {inst.num_messages}"
        )


def verify(inst: Instance, scheme: LinearScheme, mode: str = "auto") -> VerificationReport:
    """Check a scheme against an instance; see the module docstring for modes."""
    _check_scheme_matches(inst, scheme)
    if mode == "auto":
        mode = "decoder" if scheme.U is not None else "rank"
    if mode not in ("rank", "decoder"):
        raise ValueError(f"unknown mode {mode!r}")
    diags = []
    if mode == "rank":
        for d in inst.destinations:
            desired = sorted(d.wants)
            interference = sorted(inst.interferers(d))
            vdes = Matrix.hstack_all(scheme.field, [scheme.V[m] for m in desired])
            rank_des = vdes.rank()
            if rank_des != sum(scheme.stream_count(m) for m in desired):
                diags.append(Diagnostic("desired-rank", d.id))
            if interference:
                vint = Matrix.hstack_all(scheme.field, [scheme.V[i] for i in interference])
                if vdes.hstack(vint).rank() != rank_des + vint.rank():
                    diags.append(Diagnostic("resolvability", d.id))
    else:
        if scheme.U is None:
            raise SchemeMalformed("decoder mode requires combining matrices")
        for d in inst.destinations:
            for m in sorted(d.wants):
                u = scheme.U.get((m, d.id))
                if u is None:
                    diags.append(Diagnostic("missing-decoder", d.id, message=m))
                    continue
                prod = u @ scheme.V[m]
                if prod.rank() != scheme.stream_count(m):
                    diags.append(Diagnostic("property2", d.id, message=m))
                for i in scheme.message_ids():
                    if i == m or i in d.has:
                        continue
                    if not (u @ scheme.V[i]).is_zero():
                        diags.append(Diagnostic("property1", d.id, message=m, interferer=i))
    return VerificationReport(not diags, mode, tuple(diags), scheme.rates())


def synthesize_decoders(inst: Instance, scheme: LinearScheme) -> LinearScheme:
    """Compute zero-forcing combiners for a V-only scheme.

    For each (m, k) the rows of U_{m,k} are picked from a basis of the left
    annihilator of every non-antidote column other than V_m; existence is
    equivalent to rank-mode validity.
    """
    _check_scheme_matches(inst, scheme)
    f = scheme.field
    U = {}
    for d in inst.destinations:
        for m in sorted(d.wants):
            others = [i for i in scheme.message_ids() if i != m and i not in d.has]
            if others:
                block = Matrix.hstack_all(f, [scheme.V[i] for i in others])
                ann = block.left_nullspace()  # rows annihilate the block
            else:
                ann = Matrix.identity(f, scheme.n)
            probe = ann @ scheme.V[m]
            rows = _independent_rows(probe, scheme.stream_count(m))
            if rows is None:
                raise NoDecoderExists(
                    f"no zero-forcing decoder for message {m} at destination {d.id}"
                )
            U[(m, d.id)] = ann.take_rows(rows)
    return LinearScheme(f, scheme.n, scheme.V, U)


def _independent_rows(mat: Matrix, need: int):
    """Indices of `need` rows of mat forming an invertible square block, or None."""
    if mat.cols != need:
        return None
    if need == 0:
        return []
    chosen = []
    for i in range(mat.rows):
        cand = chosen + [i]
        if mat.take_rows(cand).rank() == len(cand):
            chosen = cand
            if len(chosen) == need:
                return chosen
    return None


# ----------------------------------------------------------------------
# exhaustive zero-error simulation
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class SimulationResult:
    ok: bool
    tuples_checked: int
    counterexample: Optional[dict] = None  # message id -> symbol tuple
    destination: Optional[int] = None
    message: Optional[int] = None

    def to_json(self) -> dict:
        out = {"ok": self.ok, "tuples_checked": self.tuples_checked}
        if not self.ok:
            out["counterexample"] = {str(m): list(v) for m, v in sorted(self.counterexample.items())}
            out["destination"] = self.destination
            out["message"] = self.message
        return out


def simulate_exhaustive(
    inst: Instance, scheme: LinearScheme, budget: int = DEFAULT_SIMULATION_BUDGET
) -> SimulationResult:
    """Enumerate every message tuple, encode, decode everywhere, compare.

    Tuples are scanned in lexicographic order (message 1's first stream is
    the most significant digit), so the first counterexample is well defined.
    Decoders come from the scheme or, for V-only schemes, from
    ``synthesize_decoders``; if synthesis itself fails the scheme cannot be
    simulated and the first tuple that breaks rank-mode validity is found by
    the plain encode/compare sweep below.
    """
    _check_scheme_matches(inst, scheme)
    q = scheme.field.order
    msg_ids = scheme.message_ids()
    streams = [(m, j) for m in msg_ids for j in range(scheme.stream_count(m))]
    total = len(streams)
    space = q**total
    if space > budget:
        raise BudgetExceeded(f"{q}^{total} = {space} tuples exceed budget {budget}")
    if total == 0:
        return SimulationResult(True, 1)

    if scheme.U is not None:
        working = scheme
    else:
        try:
            working = synthesize_decoders(inst, scheme)
        except NoDecoderExists:
            return _simulate_collision_scan(inst, scheme, streams, space)

    decoders = _decoder_tables(inst, working)
    use_numpy = isinstance(scheme.field, PrimeField) and scheme.field.p <= 2**20 or (
        isinstance(scheme.field, BinaryField) and scheme.field.m <= 8
    )
    if use_numpy:
        return _simulate_numpy(inst, working, streams, space, decoders)
    return _simulate_python(inst, working, streams, space, decoders)


def _decoder_tables(inst: Instance, scheme: LinearScheme):
    """Per (m, k): the full decode matrix (U V_m)^-1 U."""
    out = {}
    for d in inst.destinations:
        for m in sorted(d.wants):
            u = scheme.U[(m, d.id)]
            out[(m, d.id)] = (u @ scheme.V[m]).inverse() @ u
    return out


def _stream_slices(scheme: LinearScheme, streams):
    pos = {m: [] for m in scheme.V}
    for idx, (m, j) in enumerate(streams):
        pos[m].append(idx)
    return pos


def _simulate_python(inst, scheme, streams, space, decoders):
    f = scheme.field
    pos = _stream_slices(scheme, streams)
    vfull = Matrix.hstack_all(f, [scheme.V[m] for m in scheme.message_ids()])
    checked = 0
    for digits in itertools.product(f.elements(), repeat=len(streams)):
        checked += 1
        s = [0] * scheme.n
        for idx, x in enumerate(digits):
            if x:
                col = vfull.col(idx)
                s = [f.add(a, f.mul(x, b)) for a, b in zip(s, col)]
        for d in inst.destinations:
            cancelled = list(s)
            for i in sorted(d.has):
                for idx in pos[i]:
                    x = digits[idx]
                    if x:
                        col = scheme.V[i].col(idx - pos[i][0])
                        cancelled = [f.sub(a, f.mul(x, b)) for a, b in zip(cancelled, col)]
            for m in sorted(d.wants):
                dec = decoders[(m, d.id)]
                got = [0] * dec.rows
                for r in range(dec.rows):
                    acc = 0
                    for c in range(dec.cols):
                        acc = f.add(acc, f.mul(dec[r, c], cancelled[c]))
                    got[r] = acc
                want = [digits[idx] for idx in pos[m]]
                if got != want:
                    return SimulationResult(
                        False,
                        checked,
                        counterexample=_tuple_by_message(scheme, streams, digits),
                        destination=d.id,
                        message=m,
                    )
    return SimulationResult(True, space)


def _simulate_numpy(inst, scheme, streams, space, decoders):
    """Vectorized enumeration of all q^total tuples.

    Streams split into h leading "page" digits and k trailing "offset"
    digits.  By linearity of encode and decode, each tuple's decode error is
    the offset part's error plus a page constant, so the offset part is
    evaluated once for all q^k offsets and condensed into a first-occurrence
    table of error signatures; each page then contributes one constant shift
    per (destination, message).  Every tuple's decoder output is accounted
    for exactly, and pages are scanned in lexicographic order, so the first
    failing tuple matches the naive scan.
    """
    import numpy as np

    f = scheme.field
    q = f.order
    total = len(streams)
    pos = _stream_slices(scheme, streams)
    prime = isinstance(f, PrimeField)
    vfull_m = Matrix.hstack_all(f, [scheme.V[m] for m in scheme.message_ids()])
    dtype = np.float64 if prime else np.int64
    vfull = np.array(vfull_m.row_list(), dtype=dtype)
    if not prime:
        mul_table = np.zeros((q, q), dtype=dtype)
        for a in range(q):
            for b in range(q):
                mul_table[a, b] = f.mul(a, b)

    def gmul(mat, x):
        """mat (r x c) times x (c x N) over the field, vectorized over N."""
        if prime:
            return (mat @ x) % q
        r, c = mat.shape
        out = np.zeros((r, x.shape[1]), dtype=dtype)
        for i in range(r):
            for kk in range(c):
                a = int(mat[i, kk])
                if a:
                    out[i] ^= mul_table[a, x[kk].astype(np.int64)]
        return out

    # trailing digits enumerated in one block of size q^k
    low_cap = max(q, 1 << 19)
    k = 1
    while k < total and q ** (k + 1) <= low_cap:
        k += 1
    h = total - k
    nlow = q**k
    weights = [q ** (total - 1 - s) for s in range(total)]

    idx = np.arange(nlow, dtype=np.int64)
    x_low = np.empty((k, nlow), dtype=np.int64)
    for r in range(k):
        x_low[r] = (idx // (q ** (k - 1 - r))) % q
    x_low = x_low.astype(dtype)
    del idx

    # Per (destination, message): first-occurrence table of offset-part error
    # signatures, plus the exact page-constant matrix for the leading digits.
    pairs = []
    for dpos, d in enumerate(inst.destinations):
        keep = [s for s, (mid, _) in enumerate(streams) if mid not in d.has]
        keep_low = [s for s in keep if s >= h]
        keep_high = [s for s in keep if s < h]
        y_low = (
            gmul(vfull[:, keep_low], x_low[[s - h for s in keep_low]])
            if keep_low
            else None
        )
        for m in sorted(d.wants):
            dmat_exact = decoders[(m, d.id)]
            dmat = np.array(dmat_exact.row_list(), dtype=dtype)
            lm = scheme.stream_count(m)
            if y_low is not None:
                err = gmul(dmat, y_low)
            else:
                err = np.zeros((lm, nlow), dtype=dtype)
            own = np.zeros((lm, nlow), dtype=dtype)
            for r, s in enumerate(pos[m]):
                if s >= h:
                    own[r] = x_low[s - h]
            err = (err - own) % q if prime else err.astype(np.int64) ^ own.astype(np.int64)
            sig = np.zeros(nlow, dtype=np.int64)
            for r in range(lm):
                sig = sig * q + err[r].astype(np.int64)
            values, first_idx = np.unique(sig, return_index=True)
            present = sorted(zip((int(i) for i in first_idx), (int(v) for v in values)))
            page_mat = (dmat_exact @ vfull_m.take_cols(keep_high)).row_list() if keep_high else []
            own_high = [(r, s) for r, s in enumerate(pos[m]) if s < h]
            pairs.append((dpos, d.id, m, lm, present, keep_high, page_mat, own_high))

    npages = q**h
    for page in range(npages):
        x_high = [(page // (q ** (h - 1 - j))) % q for j in range(h)] if h else []
        first_bad = None  # (global tuple index, destination position, message)
        for dpos, did, m, lm, present, keep_high, page_mat, own_high in pairs:
            cvals = [0] * lm
            for r in range(lm):
                acc = 0
                for j, s in enumerate(keep_high):
                    acc = f.add(acc, f.mul(page_mat[r][j], x_high[s]))
                cvals[r] = acc
            for r, s in own_high:
                cvals[r] = f.sub(cvals[r], x_high[s])
            # tuple fails iff offset signature != encode(-c)
            target = 0
            for r in range(lm):
                target = target * q + f.neg(cvals[r])
            for fidx, val in present:
                if val != target:
                    cand = (page * nlow + fidx, dpos, m)
                    if first_bad is None or cand < first_bad:
                        first_bad = cand
                    break
        if first_bad is not None:
            first, dpos, m = first_bad
            digits = tuple(int(first // w) % q for w in weights)
            return SimulationResult(
                False,
                first + 1,
                counterexample=_tuple_by_message(scheme, streams, digits),
                destination=inst.destinations[dpos].id,
                message=m,
            )
    return SimulationResult(True, space)


def simulate_sampled(
    inst: Instance, scheme: LinearScheme, count: int, seed: int = 0
) -> SimulationResult:
    """Encode/decode a deterministic pseudorandom sample of message tuples.

    The fallback for spaces beyond the exhaustive budget: a passing result
    means no counterexample among `count` sampled tuples, nothing more.
    """
    import random as _random

    _check_scheme_matches(inst, scheme)
    f = scheme.field
    working = scheme if scheme.U is not None else synthesize_decoders(inst, scheme)
    decoders = _decoder_tables(inst, working)
    msg_ids = scheme.message_ids()
    streams = [(m, j) for m in msg_ids for j in range(scheme.stream_count(m))]
    pos = _stream_slices(scheme, streams)
    rnd = _random.Random(seed)
    vfull = Matrix.hstack_all(f, [scheme.V[m] for m in msg_ids])
    for trial in range(count):
        digits = tuple(rnd.randrange(f.order) for _ in streams)
        s = [0] * scheme.n
        for idx, x in enumerate(digits):
            if x:
                col = vfull.col(idx)
                s = [f.add(a, f.mul(x, b)) for a, b in zip(s, col)]
        for d in inst.destinations:
            cancelled = list(s)
            for i in sorted(d.has):
                for idx in pos[i]:
                    x = digits[idx]
                    if x:
                        col = scheme.V[i].col(idx - pos[i][0])
                        cancelled = [f.sub(a, f.mul(x, b)) for a, b in zip(cancelled, col)]
            for m in sorted(d.wants):
                dec = decoders[(m, d.id)]
                got = [
                    _dot(f, dec.row(r), cancelled) for r in range(dec.rows)
                ]
                if got != [digits[idx] for idx in pos[m]]:
                    return SimulationResult(
                        False,
                        trial + 1,
                        counterexample=_tuple_by_message(scheme, streams, digits),
                        destination=d.id,
                        message=m,
                    )
    return SimulationResult(True, count)


def _dot(f, row, vec):
    acc = 0
    for a, b in zip(row, vec):
        if a and b:
            acc = f.add(acc, f.mul(a, b))
    return acc


def _simulate_collision_scan(inst, scheme, streams, space):
    """Fallback for undecodable V-only schemes: find two tuples a destination
    cannot tell apart (same broadcast word and same antidote symbols, different
    desired symbols), scanning in lexicographic order."""
    f = scheme.field
    pos = _stream_slices(scheme, streams)
    seen = {}  # (destination, encoded word, antidote digits) -> earlier tuple
    checked = 0
    for digits in itertools.product(f.elements(), repeat=len(streams)):
        checked += 1
        s = [0] * scheme.n
        for idx, x in enumerate(digits):
            if x:
                m, j = streams[idx]
                col = scheme.V[m].col(j)
                s = [f.add(a, f.mul(x, b)) for a, b in zip(s, col)]
        for d in inst.destinations:
            side = tuple(digits[idx] for i in sorted(d.has) for idx in pos[i])
            key = (d.id, tuple(s), side)
            if key in seen:
                for m in sorted(d.wants):
                    if any(seen[key][idx] != digits[idx] for idx in pos[m]):
                        return SimulationResult(
                            False,
                            checked,
                            counterexample=_tuple_by_message(scheme, streams, digits),
                            destination=d.id,
                            message=m,
                        )
            else:
                seen[key] = digits
    return SimulationResult(True, space)


def _tuple_by_message(scheme, streams, digits):
    out = {}
    for (m, j), x in zip(streams, digits):
        out.setdefault(m, []).append(x)
    return {m: tuple(v) for m, v in out.items()}


# ----------------------------------------------------------------------
# dimension audit for the neighboring-antidotes family
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class DimensionAudit:
    """Summed dimensions of unions of consecutive precoder spans.

    alpha[j-1] is sum_i dim(span of V_i .. V_{i+j-1}) over all K circular
    starts.  Any decodable scheme for the neighboring-antidotes family must
    satisfy alpha_j >= (U+j)/(U+1) * alpha_1 for every window size j up to
    the per-destination interferer count K-A-1.
    """

    K: int
    U: int
    D: int
    alpha: tuple
    checks: tuple  # (j, alpha_j, lower bound as Fraction, slack as Fraction)

    @property
    def holds(self) -> bool:
        return all(slack >= 0 for _, _, _, slack in self.checks)

    @property
    def final_slack(self) -> Fraction:
        return self.checks[-1][3]

    def to_json(self) -> dict:
        return {
            "alpha": list(self.alpha),
            "checks": [
                {
                    "window": j,
                    "alpha": a,
                    "bound": f"{b.numerator}/{b.denominator}",
                    "slack": f"{s.numerator}/{s.denominator}",
                }
                for j, a, b, s in self.checks
            ],
            "holds": self.holds,
        }


def dimension_audit(inst: Instance, scheme: LinearScheme) -> DimensionAudit:
    """Window-dimension accounting for neighboring-antidotes schemes."""
    fam = inst.family
    if fam is None or fam.kind != "neighboring-antidotes":
        raise UnsupportedFamily("dimension audit requires the neighboring-antidotes family tag")
    _check_scheme_matches(inst, scheme)
    K, U, D = fam.param("K"), fam.param("U"), fam.param("D")
    A = U + D
    jmax = K - A - 1
    if jmax < 1:
        raise UnsupportedFamily("no interference to audit when A >= K-1")
    f = scheme.field
    alpha = []
    for j in range(1, jmax + 1):
        total = 0
        for i in range(1, K + 1):
            window = [(i - 1 + t) % K + 1 for t in range(j)]
            total += Matrix.hstack_all(f, [scheme.V[m] for m in window]).rank()
        alpha.append(total)
    checks = []
    for j in range(1, jmax + 1):
        bound = Fraction(U + j, U + 1) * alpha[0]
        checks.append((j, alpha[j - 1], bound, Fraction(alpha[j - 1]) - bound))
    return DimensionAudit(K, U, D, tuple(alpha), tuple(checks))


# ----------------------------------------------------------------------
# scheme files (JSON)
# ----------------------------------------------------------------------

_SCHEME_KEYS = {"field", "n", "V", "U"}


def scheme_to_json(scheme: LinearScheme) -> dict:
    out = {
        "field": scheme.field.to_json(),
        "n": scheme.n,
        "V": {str(m): scheme.V[m].row_list() for m in scheme.message_ids()},
    }
    if scheme.U is not None:
        out["U"] = {f"{m}@{k}": mat.row_list() for (m, k), mat in sorted(scheme.U.items())}
    return out


def scheme_from_json(obj: dict) -> LinearScheme:
    if not isinstance(obj, dict):
        raise ParseError("scheme file must contain a JSON object")
    unknown = set(obj) - _SCHEME_KEYS
    if unknown:
        raise ParseError(f"unknown scheme keys: {sorted(unknown)}")
    for key in ("field", "n", "V"):
        if key not in obj:
            raise ParseError(f"scheme file needs '{key}'")
    try:
        field = field_from_json(obj["field"])
    except (KeyError, ValueError) as exc:
        raise ParseError(f"bad field spec: {exc}") from exc
    n = obj["n"]
    if not isinstance(n, int) or n < 1:
        raise ParseError("'n' must be a positive integer")

    def read_matrix(rows, what):
        if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
            raise ParseError(f"{what} must be a list of rows")
        try:
            return Matrix.from_rows(field, rows)
        except Exception as exc:
            raise ParseError(f"{what}: {exc}") from exc

    V = {}
    for key, rows in obj["V"].items():
        try:
            m = int(key)
        except ValueError:
            raise ParseError(f"V key {key!r} is not a message id")
        V[m] = read_matrix(rows, f"V[{key}]")
    U = None
    if "U" in obj and obj["U"] is not None:
        U = {}
        for key, rows in obj["U"].items():
            try:
                ms, ks = key.split("@")
                mk = (int(ms), int(ks))
            except ValueError:
                raise ParseError(f"U key {key!r} is not of the form 'm@k'")
            U[mk] = read_matrix(rows, f"U[{key}]")
    try:
        return LinearScheme(field, n, V, U)
    except SchemeMalformed as exc:
        raise ParseError(str(exc)) from exc


def serialize_scheme(scheme: LinearScheme) -> str:
    return json.dumps(scheme_to_json(scheme), sort_keys=True, indent=2) + "\n"


def parse_scheme(text: str) -> LinearScheme:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}")
    return scheme_from_json(obj)


def load_scheme(path) -> LinearScheme:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_scheme(fh.read())


def save_scheme(scheme: LinearScheme, path):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(serialize_scheme(scheme))
