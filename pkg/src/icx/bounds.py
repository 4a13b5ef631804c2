"""Machine-checkable outer-bound certificates.

Three certificate sources:

* simple bounds: a destination pair (k, j) where k, once it has decoded its
  own demands, knows everything j knows, so it can also decode the messages
  of j that interfere at k; the combined rates fit in one link use.
* alignment-chain bounds: a chain of alignment relations whose endpoints
  collide sums the chain messages plus the desired sets of the realizing
  destinations against the chain length.
* family formulas and genie decode chains for the tagged symmetric families.

Certificates assert sum_{m in terms} R_m <= rhs with term multiplicity
preserved (a message id may legitimately appear twice).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .errors import BudgetExceeded, UnsupportedFamily
from .model import Instance, normalize
from .alignment import partition

DEFAULT_CHAIN_MAX_N = 4
DEFAULT_CHAIN_BUDGET = 200_000


@dataclass(frozen=True)
class BoundCertificate:
    kind: str  # "simple" | "chain" | "family-formula" | "genie-chain"
    terms: tuple  # sorted message ids, multiplicity preserved
    rhs: Fraction
    provenance: tuple

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(sorted(self.terms)))
        object.__setattr__(self, "rhs", Fraction(self.rhs))

    def evaluate(self, rates: Mapping[int, Fraction]) -> Fraction:
        return sum((Fraction(rates[m]) for m in self.terms), Fraction(0))

    def violated_by(self, rates: Mapping[int, Fraction]) -> bool:
        return self.evaluate(rates) > self.rhs

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "terms": list(self.terms),
            "rhs": f"{self.rhs.numerator}/{self.rhs.denominator}",
            "provenance": list(self.provenance),
        }


def _sort_key(cert: BoundCertificate):
    return (cert.rhs, cert.terms, cert.kind, cert.provenance)


# ----------------------------------------------------------------------
# simple bounds
# ----------------------------------------------------------------------


def simple_bounds(inst: Instance) -> list:
    """One certificate per destination and per ordered destination pair.

    For a pair (k, j): the demands of k plus the demands of j that interfere
    at k sum to at most one link use.  Pairs whose second term is empty
    collapse to the single-destination bound.  Deduplicated by term multiset.
    """
    certs = {}
    for d in inst.destinations:
        cert = BoundCertificate("simple", tuple(sorted(d.wants)), Fraction(1), (d.id,))
        certs.setdefault((cert.terms, cert.rhs), cert)
    for dk in inst.destinations:
        outside = inst.interferers(dk)
        for dj in inst.destinations:
            if dj.id == dk.id:
                continue
            second = sorted(dj.wants & outside)
            if not second:
                continue
            terms = tuple(sorted(dk.wants)) + tuple(second)
            cert = BoundCertificate("simple", terms, Fraction(1), (dk.id, dj.id))
            certs.setdefault((cert.terms, cert.rhs), cert)
    return sorted(certs.values(), key=_sort_key)


# ----------------------------------------------------------------------
# alignment-chain bounds
# ----------------------------------------------------------------------


def chain_bounds(
    inst: Instance,
    L: int,
    maxN: int = DEFAULT_CHAIN_MAX_N,
    budget: int = DEFAULT_CHAIN_BUDGET,
) -> list:
    """Certificates from alignment chains of length 1..maxN.

    A chain i_0 <-> i_1 <-> ... <-> i_N (distinct messages, each link
    realized at some destination) whose tail is desired at a destination k
    missing the head as an antidote bounds the sum of the chain messages and
    of the realizing destinations' demand sets by N.  Destination demand sets
    enter with multiplicity; the same message may appear twice in the terms.

    Raises BudgetExceeded (with the certificates found so far attached) when
    the enumeration exceeds `budget` visited states.
    """
    norm = normalize(inst, L)
    part = partition(norm)
    by_pair = {}
    for (a, b, k) in part.edges:
        by_pair.setdefault((a, b), []).append(k)
        by_pair.setdefault((b, a), []).append(k)
    for dests in by_pair.values():
        dests.sort()
    adjacency = {}
    for (a, b) in by_pair:
        adjacency.setdefault(a, set()).add(b)

    dest_by_id = {d.id: d for d in norm.destinations}
    terminals = {}  # message -> list of destination ids desiring it
    for d in norm.destinations:
        for m in d.wants:
            terminals.setdefault(m, []).append(d.id)

    certs = {}
    visited = 0

    def emit(path, links):
        head = path[0]
        tail = path[-1]
        for k in terminals.get(tail, ()):
            if head in dest_by_id[k].has:
                continue
            terms = list(path)
            for j in links:
                terms.extend(sorted(dest_by_id[j].wants))
            cert = BoundCertificate(
                "chain", tuple(terms), Fraction(len(path) - 1), tuple(path[:1]) + tuple(
                    x for pair in zip(links, path[1:]) for x in pair
                ) + (k,),
            )
            certs.setdefault((cert.terms, cert.rhs), cert)

    def extend(path, links):
        nonlocal visited
        visited += 1
        if visited > budget:
            raise BudgetExceeded(
                f"chain enumeration exceeded {budget} states",
                partial=sorted(certs.values(), key=_sort_key),
            )
        if len(path) > 1:
            emit(path, links)
        if len(path) - 1 >= maxN:
            return
        tail = path[-1]
        for nxt in sorted(adjacency.get(tail, ())):
            if nxt in path:
                continue
            for j in by_pair[(tail, nxt)]:
                extend(path + [nxt], links + [j])

    for start in range(1, norm.num_messages + 1):
        extend([start], [])
    return sorted(certs.values(), key=_sort_key)


# ----------------------------------------------------------------------
# symmetric family capacities
# ----------------------------------------------------------------------


def x_outer_bound_messages(K: int, L: int, k: int = 1) -> list:
    """The L(L+1)/2 messages one genie-aided destination decodes in sequence:
    at offset row t of destination k's window, the last t+1 messages."""
    M = K * L
    out = []
    for t in range(L):
        for c in range(L - t, L + 1):
            out.append(((k - 1 + t) * L + c - 1) % M + 1)
    return sorted(out)


def symmetric_capacity(inst: Instance) -> tuple:
    """Per-message capacity of a tagged family instance, with its certificate.

    Returns (capacity as Fraction, BoundCertificate).  The certificate for
    neighboring interference is the decode-chain window of D+1 consecutive
    messages; for the X family it is the L(L+1)/2-message genie set; for
    neighboring antidotes it is the all-messages sum bound K * C.
    """
    fam = inst.family
    if fam is None or fam.kind == "custom":
        raise UnsupportedFamily("instance carries no symmetric family tag")
    if fam.kind == "neighboring-antidotes":
        K, U, D = fam.param("K"), fam.param("U"), fam.param("D")
        A = U + D
        value = Fraction(1) if A == K - 1 else Fraction(U + 1, K - A + 2 * U)
        cert = BoundCertificate(
            "family-formula",
            tuple(range(1, K + 1)),
            Fraction(K) * value,
            ("neighboring-antidotes", K, U, D),
        )
        return value, cert
    if fam.kind == "neighboring-interference":
        K, U, D = fam.param("K"), fam.param("U"), fam.param("D")
        value = Fraction(1, D + 1)
        cert = BoundCertificate(
            "genie-chain",
            tuple(range(1, D + 2)),
            Fraction(1),
            ("neighboring-interference", K, U, D, 1),
        )
        return value, cert
    if fam.kind == "x-network":
        K, L = fam.param("K"), fam.param("L")
        value = Fraction(2, L * (L + 1))
        cert = BoundCertificate(
            "genie-chain",
            tuple(x_outer_bound_messages(K, L)),
            Fraction(1),
            ("x-network", K, L, 1),
        )
        return value, cert
    raise UnsupportedFamily(f"unknown family kind {fam.kind!r}")
