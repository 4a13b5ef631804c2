"""Capacity-achieving schemes for the symmetric families, and built-in examples.

Neighboring antidotes: message i rides on beamforming vectors z_i..z_{i+U}
taken from a family where any n are independent, so adjacent messages overlap
in U dimensions and the K-A-1 interferers at each destination collapse into
U + (K-A-1) dimensions.

Neighboring interference and the X family use GF(2) identity columns assigned
periodically; the divisibility preconditions of the generators are exactly
what keeps the periodic assignment consistent around the circle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import BadParams
from .galois import (
    BinaryField,
    Field,
    Matrix,
    PrimeField,
    mds_vector_family,
    smallest_prime_at_least,
)
from .model import (
    Destination,
    FamilyTag,
    Instance,
    _x_network_instance,
    gen_neighboring_antidotes,
    gen_neighboring_interference,
    gen_x_network,
)
from .scheme import LinearScheme


def build_antidote_scheme(K: int, U: int, D: int) -> LinearScheme:
    """Rate-(U+1)/(K-A+2U) scheme for gen_neighboring_antidotes(K, U, D).

    Needs A = U+D <= K-3; with A = K-1 every destination already holds all
    other messages (rate-1 scheme), and with A = K-2 a rate-1/2 scheme comes
    from the alignment module instead.
    """
    if not (0 <= U <= D):
        raise BadParams(f"need 0 <= U <= D, got U={U}, D={D}")
    A = U + D
    if A == K - 1:
        gf2 = PrimeField(2)
        one = Matrix.from_rows(gf2, [[1]])
        return LinearScheme(gf2, 1, {m: one for m in range(1, K + 1)})
    if A == K - 2:
        from .alignment import build_scalar_scheme

        return build_scalar_scheme(gen_neighboring_antidotes(K, U, D), 1)
    if A > K - 3:
        raise BadParams(f"need U+D <= K-1, got K={K}, U={U}, D={D}")
    n = K - A + 2 * U
    field = PrimeField(smallest_prime_at_least(K))
    z = mds_vector_family(K, n, field)
    V = {}
    for i in range(1, K + 1):
        cols = [(i - 1 + t) % K for t in range(U + 1)]
        V[i] = z.take_cols(cols)
    return LinearScheme(field, n, V)


def build_interference_scheme(K: int, U: int, D: int) -> LinearScheme:
    """Rate-1/(D+1) XOR scheme for gen_neighboring_interference(K, U, D).

    Message i is sent on identity column (i-1) mod (D+1); the U up-interferers
    land on the same columns as U of the D down-interferers.
    """
    gen_neighboring_interference(K, U, D)  # validate parameters
    n = D + 1
    gf2 = PrimeField(2)
    eye = Matrix.identity(gf2, n)
    V = {i: eye.take_cols([(i - 1) % n]) for i in range(1, K + 1)}
    return LinearScheme(gf2, n, V)


def x_precoder_pattern(L: int) -> list:
    """(L+1) x L table of vector indices (1-based) with period L(L+1).

    Diagonal g (g-th future destination's demands inside a window) holds
    vector indices offset(g)..offset(g)+L-g-1; each vector appears a second
    time one row above the diagonal's start, which is what aligns the two
    interference occurrences inside every L-row window.
    """
    if L < 1:
        raise BadParams("need L >= 1")
    table = [[0] * L for _ in range(L + 1)]
    idx = 1
    for g in range(L):
        for p in range(L - g):
            table[g + p][L - 1 - p] = idx
            table[(g - 1) % (L + 1)][p] = idx
            idx += 1
    return table


def build_x_scheme(K: int, L: int) -> LinearScheme:
    """Rate-2/(L(L+1)) identity-column scheme for gen_x_network(K, L)."""
    gen_x_network(K, L)  # validate parameters
    n = L * (L + 1) // 2
    gf2 = PrimeField(2)
    eye = Matrix.identity(gf2, n)
    pattern = x_precoder_pattern(L)
    period = L * (L + 1)
    V = {}
    for m in range(1, K * L + 1):
        p = (m - 1) % period
        vec = pattern[p // L][p % L]
        V[m] = eye.take_cols([vec - 1])
    return LinearScheme(gf2, n, V)


# ----------------------------------------------------------------------
# built-in worked examples
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class BuiltinExample:
    id: int
    instance: Instance
    scheme: LinearScheme
    claimed_rate: Fraction


def _cols(field: Field, cols) -> Matrix:
    return Matrix.from_cols(field, [list(c) for c in cols])


def _example1(field: Field) -> BuiltinExample:
    # Three messages on a two-dimensional broadcast: messages 2 and 3 share a
    # beam, destination 1 reads the clean coordinate, destinations 2 and 3
    # cancel each other via their antidotes.
    inst = Instance(
        3,
        (
            Destination(1, frozenset({1}), frozenset()),
            Destination(2, frozenset({2}), frozenset({3})),
            Destination(3, frozenset({3}), frozenset({2})),
        ),
    )
    V = {
        1: _cols(field, [(0, 1)]),
        2: _cols(field, [(1, 0)]),
        3: _cols(field, [(1, 0)]),
    }
    U = {
        (1, 1): Matrix.from_rows(field, [[0, 1]]),
        (2, 2): Matrix.from_rows(field, [[1, 0]]),
        (3, 3): Matrix.from_rows(field, [[1, 0]]),
    }
    return BuiltinExample(1, inst, LinearScheme(field, 2, V, U), Fraction(1, 2))


def _example2(field: Field) -> BuiltinExample:
    # Five messages, five destinations on a circle; destination k holds the
    # messages at circular distance two and faces its two unit-distance
    # neighbors as interference.  Two streams per message pair up on five
    # basis vectors over n = 5 uses.
    dests = []
    for k in range(1, 6):
        has = frozenset({(k + 1) % 5 + 1, (k + 2) % 5 + 1})
        dests.append(Destination(k, frozenset({k}), has))
    inst = Instance(5, tuple(dests))

    def t(i):  # identity column i (1-based) of length 5
        return tuple(1 if r == i - 1 else 0 for r in range(5))

    V = {
        1: _cols(field, [t(3), t(4)]),
        2: _cols(field, [t(5), t(1)]),
        3: _cols(field, [t(2), t(3)]),
        4: _cols(field, [t(4), t(5)]),
        5: _cols(field, [t(1), t(2)]),
    }
    U = {
        (1, 1): Matrix.from_rows(field, [list(t(3)), list(t(4))]),
        (2, 2): Matrix.from_rows(field, [list(t(5)), list(t(1))]),
        (3, 3): Matrix.from_rows(field, [list(t(2)), list(t(3))]),
        (4, 4): Matrix.from_rows(field, [list(t(4)), list(t(5))]),
        (5, 5): Matrix.from_rows(field, [list(t(1)), list(t(2))]),
    }
    return BuiltinExample(2, inst, LinearScheme(field, 5, V, U), Fraction(2, 5))


def _example3(field: Field) -> BuiltinExample:
    # Fifteen messages, five destinations: the K=5, L=3 locally connected X
    # setting.  Three desired symbols per destination; six interferers align
    # into three dimensions, some only subspace-wise (V_8, V_10, V_11, V_14
    # are genuine multi-term combinations).
    inst = _x_network_instance(5, 3)
    neg = field.neg

    def t(i):
        return tuple(1 if r == i - 1 else 0 for r in range(6))

    def combo(*terms):
        v = [0] * 6
        for coef, idx in terms:
            col = t(idx)
            v = [field.add(a, field.mul(coef, b)) for a, b in zip(v, col)]
        return tuple(v)

    one = 1
    m1 = neg(1)
    V_cols = {
        1: t(6),
        2: t(4),
        3: t(1),
        4: t(5),
        5: t(2),
        6: t(6),
        7: t(3),
        8: combo((one, 4), (one, 5), (one, 6)),
        9: t(5),
        10: combo((one, 1), (one, 2), (one, 3), (m1, 4), (m1, 5)),
        11: combo((one, 2), (one, 3), (m1, 5)),
        12: t(3),
        13: t(1),
        14: combo((one, 1), (one, 2), (one, 6)),
        15: combo((one, 1), (one, 2), (one, 3), (m1, 4), (m1, 5)),
    }
    V = {m: _cols(field, [V_cols[m]]) for m in V_cols}

    def u(row):
        return Matrix.from_rows(field, [[field.canonical(x) for x in row]])

    U = {
        (3, 1): u([1, 0, 0, 0, 0, 0]),
        (5, 1): u([0, 1, 0, 0, 0, 0]),
        (7, 1): u([0, 0, 1, 0, 0, 0]),
        (6, 2): u([-1, 0, 0, -1, 0, 1]),
        (8, 2): u([1, 0, 0, 1, 0, 0]),
        (10, 2): u([1, 0, 0, 0, 0, 0]),
        (9, 3): u([0, 1, 0, 0, 1, -1]),
        (11, 3): u([0, 1, 0, 1, 0, -1]),
        (13, 3): u([1, 0, 0, 1, 0, -1]),
        (12, 4): u([0, 0, 1, 0, 1, 0]),
        (14, 4): u([0, 1, 0, 0, 1, 0]),
        (1, 4): u([0, -1, 0, 0, -1, 1]),
        (15, 5): u([0, 0, 1, 0, 0, 0]),
        (2, 5): u([0, 0, 1, 1, 0, 0]),
        (4, 5): u([0, 0, 1, 0, 1, 0]),
    }
    return BuiltinExample(3, inst, LinearScheme(field, 6, V, U), Fraction(1, 6))


def builtin_example(example_id: int, field: Field | None = None) -> BuiltinExample:
    """The three worked examples, over GF(2) by default (any field verifies)."""
    if field is None:
        field = PrimeField(2)
    builders = {1: _example1, 2: _example2, 3: _example3}
    if example_id not in builders:
        raise BadParams(f"example id must be 1, 2 or 3, got {example_id}")
    return builders[example_id](field)
