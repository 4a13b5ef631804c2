"""Index coding problem instances: validation, normalization, generators, files.

An instance is a set of messages 1..M and a list of destinations, each with a
set of desired messages (``wants``) and a set of side-information messages
(``has``).  Symmetric families carry a tag so closed-form capacity formulas
can be applied without pattern-matching raw sets.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import BadParams, CannotNormalize, ParseError

FAMILY_KINDS = ("neighboring-antidotes", "neighboring-interference", "x-network", "custom")


@dataclass(frozen=True)
class FamilyTag:
    """Symmetric family marker with its construction parameters."""

    kind: str
    params: tuple = ()  # sorted (name, value) pairs

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS:
            raise BadParams(f"unknown family kind {self.kind!r}")
        object.__setattr__(self, "params", tuple(sorted(self.params)))

    @staticmethod
    def make(kind: str, **params: int) -> "FamilyTag":
        return FamilyTag(kind, tuple(sorted(params.items())))

    def param(self, name: str) -> int:
        for k, v in self.params:
            if k == name:
                return v
        raise KeyError(name)

    def to_json(self) -> dict:
        out = {"kind": self.kind}
        out.update({k: v for k, v in self.params})
        return out


@dataclass(frozen=True)
class Destination:
    """One receiver: id, desired message ids, side-information message ids."""

    id: int
    wants: frozenset
    has: frozenset

    def __post_init__(self):
        object.__setattr__(self, "wants", frozenset(self.wants))
        object.__setattr__(self, "has", frozenset(self.has))


@dataclass(frozen=True)
class Instance:
    """An index coding problem with messages 1..num_messages."""

    num_messages: int
    destinations: tuple
    family: Optional[FamilyTag] = None

    def __post_init__(self):
        object.__setattr__(self, "destinations", tuple(self.destinations))

    @property
    def num_destinations(self) -> int:
        return len(self.destinations)

    def destination(self, k: int) -> Destination:
        for d in self.destinations:
            if d.id == k:
                return d
        raise KeyError(f"no destination with id {k}")

    def interferers(self, d: Destination) -> frozenset:
        """Messages that are neither desired nor held at d."""
        return frozenset(range(1, self.num_messages + 1)) - d.wants - d.has

    def is_multiple_unicast(self) -> bool:
        seen = set()
        for d in self.destinations:
            if d.wants & seen:
                return False
            seen |= d.wants
        return True

    def demand_sizes(self) -> set:
        return {len(d.wants) for d in self.destinations}


@dataclass(frozen=True)
class RateVector:
    """Exact per-message rates R_1..R_M."""

    rates: tuple

    def __post_init__(self):
        rs = tuple(Fraction(r) for r in self.rates)
        if any(r < 0 or r > 1 for r in rs):
            raise ValueError("rates must lie in [0, 1]")
        object.__setattr__(self, "rates", rs)

    def __getitem__(self, m: int) -> Fraction:
        return self.rates[m - 1]

    def __len__(self) -> int:
        return len(self.rates)

    @staticmethod
    def uniform(m: int, value: Fraction) -> "RateVector":
        return RateVector((Fraction(value),) * m)


# ----------------------------------------------------------------------
# validation
# ----------------------------------------------------------------------


def validate(inst: Instance) -> list:
    """Empty list iff the instance is well formed; otherwise named violations."""
    out = []
    if inst.num_messages < 1:
        out.append("instance must have at least one message")
    ids = [d.id for d in inst.destinations]
    if len(set(ids)) != len(ids):
        out.append("duplicate destination ids")
    valid = set(range(1, inst.num_messages + 1))
    for d in inst.destinations:
        for m in sorted((d.wants | d.has) - valid):
            out.append(f"destination {d.id}: unknown message id {m}")
        if not d.wants:
            out.append(f"destination {d.id}: desires no message")
        for m in sorted(d.wants & d.has):
            out.append(f"destination {d.id}: message {m} both desired and held")
    return out


def _require_valid(inst: Instance):
    problems = validate(inst)
    if problems:
        raise BadParams("invalid instance: " + "; ".join(problems))


# ----------------------------------------------------------------------
# normalization
# ----------------------------------------------------------------------


def normalize(inst: Instance, L: int, variant: str = "split") -> Instance:
    """Reshape demand sets to a uniform size L.

    ``split``: every output destination desires exactly L messages.  A
    destination wanting more is replaced by sliding L-windows over its sorted
    wants (same antidotes); the achievable rate region projects correctly
    because every original demand is covered.

    ``groupcast``: additionally make every message desired by exactly L
    destinations and every destination desire exactly one message (L = 1
    demands first, then virtual destinations copying an existing antidote
    set).  Output destinations are ordered so message m is desired by
    destinations (m-1)*L+1 .. m*L.
    """
    _require_valid(inst)
    if variant == "split":
        return _normalize_split(inst, L)
    if variant == "groupcast":
        return _normalize_groupcast(inst, L)
    raise ValueError(f"unknown variant {variant!r}")


def _normalize_split(inst: Instance, L: int) -> Instance:
    if L < 1:
        raise CannotNormalize("L must be >= 1")
    for d in inst.destinations:
        if len(d.wants) < L:
            raise CannotNormalize(
                f"destination {d.id} desires {len(d.wants)} < L={L} messages"
            )
    if inst.demand_sizes() == {L}:
        return inst
    dests = []
    for d in inst.destinations:
        wants = sorted(d.wants)
        for start in range(len(wants) - L + 1):
            dests.append((frozenset(wants[start : start + L]), d.has))
    return Instance(
        inst.num_messages,
        tuple(Destination(i + 1, w, h) for i, (w, h) in enumerate(dests)),
        inst.family,
    )


def _normalize_groupcast(inst: Instance, L: int) -> Instance:
    return _normalize_groupcast_tracked(inst, L)[0]


def _normalize_groupcast_tracked(inst: Instance, L: int) -> tuple:
    """Groupcast normalization plus, per output destination, the id of the
    input destination whose demand (and antidote set) it descends from."""
    if L < 1:
        raise CannotNormalize("L must be >= 1")
    per_message = {m: [] for m in range(1, inst.num_messages + 1)}
    for d in inst.destinations:
        for m in sorted(d.wants):
            per_message[m].append((d.has, d.id))
    dests = []
    sources = []
    for m in range(1, inst.num_messages + 1):
        holders = per_message[m]
        if not holders:
            raise CannotNormalize(f"message {m} is desired by no destination")
        if len(holders) > L:
            raise CannotNormalize(
                f"message {m} is desired by {len(holders)} > L={L} destinations"
            )
        holders = holders + [holders[0]] * (L - len(holders))  # virtual copies
        for has, src in holders:
            dests.append(Destination(len(dests) + 1, frozenset({m}), has - {m}))
            sources.append(src)
    return Instance(inst.num_messages, tuple(dests), inst.family), tuple(sources)


# ----------------------------------------------------------------------
# symmetric family generators (1-based circular indexing)
# ----------------------------------------------------------------------


def _mod1(i: int, K: int) -> int:
    return (i - 1) % K + 1


def gen_neighboring_antidotes(K: int, U: int, D: int) -> Instance:
    """Each destination k wants W_k and holds the U up- and D down-neighbors."""
    if not (0 <= U <= D) or U + D >= K:
        raise BadParams(f"need 0 <= U <= D and U+D < K, got K={K}, U={U}, D={D}")
    dests = []
    for k in range(1, K + 1):
        has = {_mod1(k - u, K) for u in range(1, U + 1)}
        has |= {_mod1(k + d, K) for d in range(1, D + 1)}
        dests.append(Destination(k, frozenset({k}), frozenset(has)))
    return Instance(K, tuple(dests), FamilyTag.make("neighboring-antidotes", K=K, U=U, D=D))


def gen_neighboring_interference(K: int, U: int, D: int) -> Instance:
    """Each destination k misses only the window W_{k-U}..W_{k+D} around its
    desired message; everything else is side information.

    (D+1) must divide K so the periodic achievable scheme is consistent under
    wraparound; this is the finite-circular fidelity condition.
    """
    if not (0 <= U <= D):
        raise BadParams(f"need 0 <= U <= D, got U={U}, D={D}")
    if K < U + D + 1:
        raise BadParams(f"need K >= U+D+1, got K={K}, U={U}, D={D}")
    if K % (D + 1) != 0:
        raise BadParams(f"(D+1)={D + 1} must divide K={K}")
    dests = []
    all_msgs = frozenset(range(1, K + 1))
    for k in range(1, K + 1):
        window = {_mod1(k + off, K) for off in range(-U, D + 1)}
        dests.append(Destination(k, frozenset({k}), all_msgs - frozenset(window)))
    return Instance(K, tuple(dests), FamilyTag.make("neighboring-interference", K=K, U=U, D=D))


def x_network_sets(K: int, L: int, k: int) -> tuple:
    """(wants, non-antidote window) for destination k of the K-user X family.

    The window is the L*L consecutive messages starting at (k-1)*L+1; the
    desired messages are its anti-diagonal.
    """
    M = K * L
    wants = frozenset(_mod1((k + t) * L - t, M) for t in range(L))
    window = frozenset(_mod1((k - 1) * L + s, M) for s in range(1, L * L + 1))
    return wants, window


def gen_x_network(K: int, L: int) -> Instance:
    """Locally-connected X family: K destinations, L messages per link, M = K*L.

    Requires (L+1) | K and K >= 2L so that the periodic precoder assignment
    and the decode-chain converse stay consistent on the finite circle.
    """
    if L < 1:
        raise BadParams(f"need L >= 1, got L={L}")
    if K < 2 * L:
        raise BadParams(f"need K >= 2L, got K={K}, L={L}")
    if K % (L + 1) != 0:
        raise BadParams(f"(L+1)={L + 1} must divide K={K}")
    return _x_network_instance(K, L)


def _x_network_instance(K: int, L: int) -> Instance:
    M = K * L
    all_msgs = frozenset(range(1, M + 1))
    dests = []
    for k in range(1, K + 1):
        wants, window = x_network_sets(K, L, k)
        dests.append(Destination(k, wants, all_msgs - window))
    return Instance(M, tuple(dests), FamilyTag.make("x-network", K=K, L=L))


# ----------------------------------------------------------------------
# instance files (JSON)
# ----------------------------------------------------------------------

_INSTANCE_KEYS = {"messages", "family", "destinations"}
_DEST_KEYS = {"id", "wants", "has"}


def instance_to_json(inst: Instance) -> dict:
    out = {"messages": inst.num_messages}
    if inst.family is not None:
        out["family"] = inst.family.to_json()
    out["destinations"] = [
        {"id": d.id, "wants": sorted(d.wants), "has": sorted(d.has)}
        for d in inst.destinations
    ]
    return out


def instance_from_json(obj: dict, check: bool = True) -> Instance:
    if not isinstance(obj, dict):
        raise ParseError("instance file must contain a JSON object")
    unknown = set(obj) - _INSTANCE_KEYS
    if unknown:
        raise ParseError(f"unknown instance keys: {sorted(unknown)}")
    if "messages" not in obj or "destinations" not in obj:
        raise ParseError("instance file needs 'messages' and 'destinations'")
    if not isinstance(obj["messages"], int):
        raise ParseError("'messages' must be an integer")
    family = None
    if "family" in obj and obj["family"] is not None:
        fam = dict(obj["family"])
        kind = fam.pop("kind", None)
        if kind is None:
            raise ParseError("family needs a 'kind'")
        try:
            family = FamilyTag.make(kind, **fam)
        except BadParams as exc:
            raise ParseError(str(exc)) from exc
    dests = []
    for i, dobj in enumerate(obj["destinations"]):
        if not isinstance(dobj, dict):
            raise ParseError(f"destination #{i + 1} must be an object")
        unknown = set(dobj) - _DEST_KEYS
        if unknown:
            raise ParseError(f"destination #{i + 1}: unknown keys {sorted(unknown)}")
        for key in _DEST_KEYS:
            if key not in dobj:
                raise ParseError(f"destination #{i + 1}: missing '{key}'")
        if not isinstance(dobj["id"], int):
            raise ParseError(f"destination #{i + 1}: 'id' must be an integer")
        for key in ("wants", "has"):
            if not isinstance(dobj[key], list) or not all(isinstance(x, int) for x in dobj[key]):
                raise ParseError(f"destination #{i + 1}: '{key}' must be a list of integers")
        dests.append(Destination(dobj["id"], frozenset(dobj["wants"]), frozenset(dobj["has"])))
    inst = Instance(obj["messages"], tuple(dests), family)
    if check:
        problems = validate(inst)
        if problems:
            raise ParseError("; ".join(problems))
    return inst


def serialize_instance(inst: Instance) -> str:
    return json.dumps(instance_to_json(inst), sort_keys=True, indent=2) + "\n"


def parse_instance(text: str, check: bool = True) -> Instance:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}")
    return instance_from_json(obj, check=check)


def load_instance(path) -> Instance:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_instance(fh.read())


def save_instance(inst: Instance, path):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(serialize_instance(inst))
