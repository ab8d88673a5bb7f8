"""Higgs-de Rham flow on graded degree-0 Higgs bundles over an elliptic curve.

States are formal multisets of blocks:

  * LineBlock(P)   -- the degree-0 line bundle O(P - O) with zero Higgs field
  * NBlock(P, r)   -- S^(r-1)N tensored by O(P - O), N the nontrivial
                      self-extension of the trivial bundle
  * UnifBlock      -- (O + O, id), the uniformizing bundle (K^(1/2) = O)
  * ExtBlock(r, s) -- a nonzero extension of trivial bundles

The flow operator rewrites blocks according to whether the curve is ordinary
or supersingular; periodicity verdicts follow the classification of periodic
Higgs bundles on elliptic curves (torsion line bundles and their sums).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .curves import Curve, Point, point_order
from .errors import UnsupportedBlockStep
from .fields import parse_fq
from .numtheory import multiplicative_order


@dataclass(frozen=True)
class LineBlock:
    point: Point

    @property
    def rank(self) -> int:
        return 1


@dataclass(frozen=True)
class NBlock:
    point: Point
    r: int = 2

    def __post_init__(self):
        if self.r < 2:
            raise ValueError("NBlock rank parameter must be >= 2")

    @property
    def rank(self) -> int:
        return self.r


@dataclass(frozen=True)
class UnifBlock:
    @property
    def rank(self) -> int:
        return 2


@dataclass(frozen=True)
class ExtBlock:
    r: int
    s: int

    def __post_init__(self):
        if self.r < 1 or self.s < 1:
            raise ValueError("ExtBlock ranks must be >= 1")

    @property
    def rank(self) -> int:
        return self.r + self.s


Block = LineBlock | NBlock | UnifBlock | ExtBlock


def _point_key(P: Point):
    if P.is_infinity():
        return (0,)
    return (1,) + P.x.sort_key() + P.y.sort_key()


def _block_key(b: Block):
    if isinstance(b, LineBlock):
        return (0,) + _point_key(b.point)
    if isinstance(b, NBlock):
        return (1, b.r) + _point_key(b.point)
    if isinstance(b, UnifBlock):
        return (2,)
    return (3, b.r, b.s)


class HiggsState:
    """Multiset of blocks on one curve, stored in canonical order."""

    __slots__ = ("blocks",)

    def __init__(self, blocks):
        bs = tuple(sorted(blocks, key=_block_key))
        if not bs:
            raise ValueError("empty Higgs state")
        self.blocks = bs

    @property
    def rank(self) -> int:
        return sum(b.rank for b in self.blocks)

    def is_line_sum(self) -> bool:
        return all(isinstance(b, LineBlock) for b in self.blocks)

    def has_stepper_rule(self) -> bool:
        return not any(
            isinstance(b, ExtBlock) or (isinstance(b, NBlock) and b.r > 2)
            for b in self.blocks
        )

    def __eq__(self, other):
        return isinstance(other, HiggsState) and self.blocks == other.blocks

    def __hash__(self):
        return hash(self.blocks)

    def __repr__(self):
        return f"HiggsState({format_state(self)})"


@dataclass(frozen=True)
class Verdict:
    kind: str  # "periodic" | "non_periodic" | "undetermined"
    period: int | None = None
    reason: str | None = None
    steps_exhausted: int | None = None

    @classmethod
    def periodic(cls, m: int) -> "Verdict":
        return cls("periodic", period=m)

    @classmethod
    def non_periodic(cls, reason: str) -> "Verdict":
        return cls("non_periodic", reason=reason)

    @classmethod
    def undetermined(cls, steps: int) -> "Verdict":
        return cls("undetermined", steps_exhausted=steps)


SUPERSINGULAR_DEGENERATION = "supersingular_degeneration"
P_TORSION_ESCAPE = "p_torsion_escape"
EXTENSION_OBSTRUCTION = "extension_obstruction"


@dataclass(frozen=True)
class FlowTrace:
    curve: Curve
    ordinary: bool
    states: tuple[HiggsState, ...]
    verdict: Verdict


def flow_step(state: HiggsState, curve: Curve) -> HiggsState:
    """One application of Gr o C^(-1), blockwise."""
    p = curve.field.p
    ss = curve.is_supersingular()
    out: list[Block] = []
    for b in state.blocks:
        if isinstance(b, LineBlock):
            out.append(LineBlock(b.point.scalar_mul(p)))
        elif isinstance(b, NBlock):
            if b.r > 2:
                raise UnsupportedBlockStep(
                    "no flow rule for S^(r-1)N blocks with r > 2"
                )
            Pp = b.point.scalar_mul(p)
            if ss:
                # the extension dies: C^(-1)(N, 0) has trivial bundle
                out.append(LineBlock(Pp))
                out.append(LineBlock(Pp))
            else:
                out.append(NBlock(Pp, 2))
        elif isinstance(b, UnifBlock):
            if ss:
                # nonzero Frobenius-lifting obstruction: V = N
                out.append(NBlock(Point.infinity(curve), 2))
            else:
                out.append(UnifBlock())
        else:
            raise UnsupportedBlockStep("no flow rule for extension blocks")
    return HiggsState(out)


def _line_sum_verdict(state: HiggsState, curve: Curve) -> Verdict:
    p = curve.field.p
    orders = [point_order(b.point) for b in state.blocks]
    if any(o % p == 0 for o in orders):
        return Verdict.non_periodic(P_TORSION_ESCAPE)
    d = 1
    for o in orders:
        d = d * o // math.gcd(d, o)
    m = 1 if d == 1 else multiplicative_order(p % d, d)
    return Verdict.periodic(m)


def decide_periodicity(
    state: HiggsState, curve: Curve, max_steps: int = 64
) -> FlowTrace:
    """Periodicity verdict with a witness trace.

    Pure line-bundle states are decided analytically (the flow is P -> [p]P,
    so the period is the order of p modulo the lcm of the prime-to-p point
    orders). States containing the uniformizing block or an N-block iterate
    the stepper; extension blocks and higher symmetric powers carry no step
    rule and are decided by the classification theorem where it applies.
    """
    if max_steps < 1:
        raise ValueError("max_steps must be >= 1")
    ordinary = not curve.is_supersingular()

    if not state.has_stepper_rule():
        if not ordinary:
            verdict = Verdict.non_periodic(EXTENSION_OBSTRUCTION)
        else:
            verdict = Verdict.undetermined(0)
        return FlowTrace(curve, ordinary, (state,), verdict)

    if state.is_line_sum():
        verdict = _line_sum_verdict(state, curve)
        states = [state]
        if verdict.kind == "periodic":
            s = state
            for _ in range(min(verdict.period, max_steps)):
                s = flow_step(s, curve)
                states.append(s)
        return FlowTrace(curve, ordinary, tuple(states), verdict)

    if not ordinary:
        # UnifBlock -> NBlock and NBlock -> lines are irreversible: the Higgs
        # field / extension datum is never recreated by the flow
        stepped = flow_step(state, curve)
        return FlowTrace(
            curve,
            ordinary,
            (state, stepped),
            Verdict.non_periodic(SUPERSINGULAR_DEGENERATION),
        )

    states = [state]
    s = state
    for step in range(1, max_steps + 1):
        s = flow_step(s, curve)
        states.append(s)
        if s == state:
            return FlowTrace(curve, ordinary, tuple(states), Verdict.periodic(step))
    return FlowTrace(
        curve, ordinary, tuple(states), Verdict.undetermined(max_steps)
    )


PERIODIC_TORSION_SUM = "periodic_torsion_sum"
NON_PERIODIC = "non_periodic"
CONDITIONALLY_UNKNOWN = "conditionally_unknown"


def classify_higgs(state: HiggsState, supersingular_rich: bool) -> str:
    """Classification of periodic states under the hypothesis of infinitely
    many supersingular primes: exactly the direct sums of (torsion) line
    bundles are periodic. Without the hypothesis no claim is made for
    non-line states."""
    if state.is_line_sum():
        return PERIODIC_TORSION_SUM
    return NON_PERIODIC if supersingular_rich else CONDITIONALLY_UNKNOWN


# ---------------------------------------------------------------------------
# CLI state literals: "unif", "N", "line:x,y", "line:inf", "ext:r,s", "+"-joined


def parse_state(curve: Curve, text: str) -> HiggsState:
    blocks: list[Block] = []
    for raw in text.split("+"):
        tok = raw.strip()
        if tok == "unif":
            blocks.append(UnifBlock())
        elif tok == "N":
            blocks.append(NBlock(Point.infinity(curve), 2))
        elif tok == "line:inf":
            blocks.append(LineBlock(Point.infinity(curve)))
        elif tok.startswith("line:"):
            xs, ys = tok[5:].split(",")
            fld = curve.field
            blocks.append(LineBlock(Point(curve, parse_fq(fld, xs), parse_fq(fld, ys))))
        elif tok.startswith("ext:"):
            rs, ss = tok[4:].split(",")
            blocks.append(ExtBlock(int(rs), int(ss)))
        else:
            raise ValueError(f"unknown state literal {tok!r}")
    return HiggsState(blocks)


def format_block(b: Block) -> str:
    if isinstance(b, UnifBlock):
        return "unif"
    if isinstance(b, LineBlock):
        if b.point.is_infinity():
            return "line:inf"
        return f"line:{b.point.x},{b.point.y}"
    if isinstance(b, NBlock):
        if b.point.is_infinity() and b.r == 2:
            return "N"
        base = "N" if b.r == 2 else f"S^{b.r - 1}N"
        if b.point.is_infinity():
            return base
        return f"{base}@{b.point.x},{b.point.y}"
    return f"ext:{b.r},{b.s}"


def format_state(state: HiggsState) -> str:
    return "+".join(format_block(b) for b in state.blocks)
