"""Non-e-positivity tests for spiders and trees.

Every criterion is one-sided: a trigger proves the chromatic symmetric
function is not e-positive and carries a witness (a connected-partition
type that is missing, a negative coefficient with its value, or, for the
purely analytic bounds, the violated inequality as text).  Criteria never
decide e-positivity; silence means "unknown" until an exact expansion is
computed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd, isqrt

from espider.csf import (CsfCache, DEFAULT_TREE_ORACLE_BOUND, OracleBoundError,
                         coeff_four_leg, coeff_three_two, spider_csf,
                         three_two_key)
from espider.graphs import (Spider, Tree, reduce_to_spider,
                            spider_mod_type_info)
from espider.partitions import Partition
from espider.symfunc import EExpansion


class CriterionSoundnessError(RuntimeError):
    """A criterion produced a witness its own re-check contradicts."""


@dataclass(frozen=True)
class Witness:
    kind: str  # "missing_type" | "negative_coefficient" | "inequality"
    partition: Partition | None = None
    value: int | None = None
    text: str = ""

    def to_json_obj(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.partition is not None:
            out["partition"] = list(self.partition.parts)
        if self.value is not None:
            out["value"] = str(self.value)
        if self.text:
            out["text"] = self.text
        return out


@dataclass
class CriterionReport:
    name: str
    triggered: bool
    witness: Witness | None = None
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.triggered and self.witness is None:
            raise CriterionSoundnessError(
                f"{self.name} triggered without a witness")

    def to_json_obj(self) -> dict:
        return {
            "name": self.name,
            "triggered": self.triggered,
            "witness": self.witness.to_json_obj() if self.witness else None,
            "params": {k: (str(v) if isinstance(v, (Partition, Spider)) else v)
                       for k, v in self.params.items()},
        }


def _missing(kind_partition: Partition) -> Witness:
    return Witness("missing_type", partition=kind_partition,
                   text=f"missing connected partition of type "
                        f"{kind_partition.exponential_str()}")


def mod_test(s: Spider, m: int) -> CriterionReport:
    """Residue-sum test at one modulus.

    With n = mq + r and sigma = 1 + (sum of leg residues mod m), the type
    (m^q, r) is present iff sigma == r, or sigma == m + r with some leg
    residue >= r; any other outcome proves the type missing.
    """
    info = spider_mod_type_info(s, m)
    params = {"m": m, "q": info.q, "r": info.r, "sigma": info.sigma}
    if info.has_type:
        return CriterionReport("mod", False, params=params)
    return CriterionReport("mod", True, _missing(info.type_partition), params)


def mod_test_scan(s: Spider, m_max: int | None = None) -> CriterionReport:
    """Residue-sum test over every modulus 2..n; first firing m reported."""
    top = m_max if m_max is not None else s.n
    for m in range(2, top + 1):
        rep = mod_test(s, m)
        if rep.triggered:
            return rep
    return CriterionReport("mod", False, params={"scanned_m": f"2..{top}"})


def variety_conditions(s: Spider, include_weak: bool = False) -> list[CriterionReport]:
    """Six standalone leg-shape conditions, each sufficient for
    non-e-positivity.  Every firing condition reduces to a residue-sum
    failure at some modulus, so each witness is a concrete missing type.

    ``include_weak`` also allows equality in condition 1 for inner legs
    longer than 1; it rests on an argument this artifact does not re-derive,
    so it is off by default and excluded from the soundness guarantees.
    """
    legs = s.legs.parts
    d = s.d
    n = s.n
    out = []

    def fire(name, modulus, params):
        rep = mod_test(s, modulus)
        if not rep.triggered:
            raise CriterionSoundnessError(
                f"{name} fired but the residue test at m={modulus} found "
                f"type {rep.params} present on {s}")
        return CriterionReport(name, True, rep.witness,
                               {**params, "modulus": modulus})

    # 1: some leg shorter than the ones after it combined.  The weak form
    # (equality allowed on inner legs longer than 1) is trusted from an
    # external argument, so it carries a text witness, not a missing type.
    rep = None
    for i in range(d - 1):
        tail = sum(legs[i + 1:])
        params = {"i": i + 1, "leg": legs[i], "tail": tail}
        if legs[i] < tail:
            rep = fire("variety_1", legs[i] + 1, {**params, "weak": False})
            break
        if include_weak and i >= 1 and legs[i] > 1 and legs[i] == tail:
            rep = CriterionReport(
                "variety_1", True,
                Witness("inequality",
                        text=f"leg_{i + 1} = {legs[i]} equals the tail sum "
                             f"(weak form, not independently re-derived)"),
                {**params, "weak": True})
            break
    out.append(rep or CriterionReport("variety_1", False))

    # 2: at least 2m-1 legs with length not divisible by m.
    rep = None
    for m in range(2, n + 1):
        bad = sum(1 for l in legs if l % m)
        if bad >= 2 * m - 1:
            rep = fire("variety_2", m, {"m": m, "indivisible_legs": bad})
            break
    out.append(rep or CriterionReport("variety_2", False))

    # 3: m divides n and at least m legs are not divisible by m.
    rep = None
    for m in range(2, n + 1):
        if n % m:
            continue
        bad = sum(1 for l in legs if l % m)
        if bad >= m:
            rep = fire("variety_3", m, {"m": m, "indivisible_legs": bad})
            break
    out.append(rep or CriterionReport("variety_3", False))

    # 4: m divides n and lands in [leg_i + 1, leg_i + ... + leg_d].
    rep = None
    for m in range(2, n + 1):
        if n % m:
            continue
        hit = None
        for i in range(d):
            if legs[i] + 1 <= m <= sum(legs[i:]):
                hit = i
                break
        if hit is not None:
            rep = fire("variety_4", m, {"m": m, "i": hit + 1})
            break
    out.append(rep or CriterionReport("variety_4", False))

    # 5: legs i, j with a common factor g > 1 of leg+1 that misses leg k.
    rep = None
    for i in range(d):
        if rep:
            break
        for j in range(i + 1, d):
            if rep:
                break
            g0 = gcd(legs[i] + 1, legs[j] + 1)
            if g0 == 1:
                continue
            for g in _divisors_over_one(g0):
                ks = [k for k in range(d)
                      if k not in (i, j) and legs[k] % g]
                if ks:
                    rep = fire("variety_5", g,
                               {"i": i + 1, "j": j + 1, "k": ks[0] + 1, "g": g})
                    break
    out.append(rep or CriterionReport("variety_5", False))

    # 6: n mod t exceeds leg_i where t is the tail sum from leg_i on.
    rep = None
    for i in range(d):
        t = sum(legs[i:])
        if t <= 1:
            continue
        if n % t > legs[i]:
            rep = fire("variety_6", t, {"i": i + 1, "t": t, "n_mod_t": n % t})
            break
    out.append(rep or CriterionReport("variety_6", False))

    return out


def _divisors_over_one(g: int):
    out = [d for d in range(2, isqrt(g) + 1) if g % d == 0]
    out += [g // d for d in reversed(out) if g // d not in out]
    if g > 1:
        out.append(g)
    return sorted(set(out))


def qm_test(s: Spider, i: int | None = None, m: int | None = None) -> CriterionReport:
    """Block-size test: long inner legs force nearly equal block sizes the
    tail legs cannot absorb.

    For an inner leg index i (1-indexed, 2 <= i < d) and a block multiplier
    m >= 1: with a = ceil((leg_i + 1)/m), n = qa + r, r = q d' + r' and
    t = tail sum after leg i, the type (a+d'+1)^{r'} (a+d')^{q-r'} is missing
    whenever q (t - 2m + 1) > m (a - 1), t > 2m - 1 and a > leg_{i+1}.

    With no arguments every (i, m) is scanned (m up to ceil(t/2)); passing
    i and m evaluates exactly that instantiation.
    """
    d = s.d
    legs = s.legs.parts
    n = s.n
    if i is not None:
        if not 2 <= i <= d - 1:
            raise ValueError(f"i must be in 2..{d - 1}, got {i}")
        pairs = [(i, m2) for m2 in ([m] if m else
                                    range(1, _qm_m_top(legs, i) + 1))]
    elif m is not None:
        pairs = [(i2, m) for i2 in range(2, d)]
    else:
        pairs = [(i2, m2) for i2 in range(2, d)
                 for m2 in range(1, _qm_m_top(legs, i2) + 1)]

    for ii, mm in pairs:
        li = legs[ii - 1]
        lnext = legs[ii]
        t = sum(legs[ii:])
        span = t - 2 * mm + 1
        if span <= 0:
            continue
        a = -(-(li + 1) // mm)
        if a <= lnext:
            continue
        q, r = divmod(n, a)
        if q * span > mm * (a - 1):
            dp, rp = divmod(r, q)
            typ = Partition((a + dp + 1,) * rp + (a + dp,) * (q - rp))
            return CriterionReport(
                "qm", True, _missing(typ),
                {"i": ii, "m": mm, "a": a, "t": t, "q": q, "r": r,
                 "dprime": dp, "rprime": rp})
    return CriterionReport("qm", False,
                           params=({} if i is None and m is None
                                   else {"i": i, "m": m}))


def _qm_m_top(legs, i):
    t = sum(legs[i:])
    return max(1, -(-t // 2))


def sqrt_bound(s: Spider) -> CriterionReport:
    """Geometric leg-growth bounds every e-positive spider must satisfy;
    any failure triggers.  Checked in cross-multiplied integer form."""
    legs = s.legs.parts
    d = s.d
    n = s.n
    for i in range(2, d - 2):  # 1-indexed 2 <= i <= d-3
        lhs = 2 * (legs[i - 1] + 1) ** 2
        rhs = n * (legs[i] + 1)
        if lhs <= rhs:
            return CriterionReport(
                "sqrt_bound", True,
                Witness("inequality",
                        text=f"2*(leg_{i}+1)^2 = {lhs} <= n*(leg_{i + 1}+1) = {rhs}"),
                {"i": i, "clause": 1})
    for i in range(3, d - 1):  # 1-indexed 2 < i <= d-2
        lhs = 2 * legs[i - 1] ** 2
        rhs = n * legs[i]
        if lhs <= rhs:
            return CriterionReport(
                "sqrt_bound", True,
                Witness("inequality",
                        text=f"2*leg_{i}^2 = {lhs} <= n*leg_{i + 1} = {rhs}"),
                {"i": i, "clause": 2})
    return CriterionReport("sqrt_bound", False)


def degree_bound(s: Spider) -> CriterionReport:
    """Analytic bound for spiders with five or more legs: e-positivity
    requires sum_{k=1}^{d-3} (n/2)^(-1/2^k) < 1, so a certified 'sum >= 1'
    triggers.  Decided with widening-precision integer root bounds; no
    floating point."""
    if s.d < 5:
        return CriterionReport("degree_bound", False)
    k_top = s.d - 3
    ge_one = _sum_inv_roots_ge_one(s.n, k_top)
    if ge_one:
        return CriterionReport(
            "degree_bound", True,
            Witness("inequality",
                    text=f"sum of (n/2)^(-1/2^k), k=1..{k_top}, is >= 1 "
                         f"at n={s.n}"),
            {"terms": k_top})
    return CriterionReport("degree_bound", False, params={"terms": k_top})


def _sum_inv_roots_ge_one(n: int, k_top: int) -> bool:
    if n <= 2:
        return True  # (n/2) <= 1: every term is >= 1
    for digits in (30, 60, 120, 240):
        scale = 10 ** digits
        lo_sum = 0
        hi_sum = 0
        for k in range(1, k_top + 1):
            lo = 2 * scale // n
            hi = -(-2 * scale // n)
            for _ in range(k):
                lo = isqrt(lo * scale)
                hi = isqrt(hi * scale) + 1
            lo_sum += lo
            hi_sum += hi
        if hi_sum < scale:
            return False
        if lo_sum >= scale:
            return True
    raise ArithmeticError(
        f"could not separate the root sum from 1 at n={n}, k={k_top}")


def six_leg(s: Spider, exhaustive_limit: int = 20) -> CriterionReport:
    """Spiders with six or more legs always lack some connected-partition
    type.  The witness is located constructively: the block-size test at
    the instantiation the theory singles out, then widening scans, then an
    exhaustive type sweep at small n."""
    if s.d < 6:
        return CriterionReport("six_leg", False)
    legs = s.legs.parts

    m0 = (legs[1] + 1) // (legs[2] + 1)
    if m0 >= 1:
        rep = qm_test(s, i=2, m=m0)
        if rep.triggered:
            return CriterionReport("six_leg", True, rep.witness,
                                   {**rep.params, "witness_path": "qm_fixed"})
    rep = qm_test(s)
    if rep.triggered:
        return CriterionReport("six_leg", True, rep.witness,
                               {**rep.params, "witness_path": "qm_scan"})
    rep = mod_test_scan(s)
    if rep.triggered:
        return CriterionReport("six_leg", True, rep.witness,
                               {**rep.params, "witness_path": "mod_scan"})
    for vrep in variety_conditions(s):
        if vrep.triggered:
            return CriterionReport("six_leg", True, vrep.witness,
                                   {**vrep.params, "witness_path": "variety_scan"})
    if s.n <= exhaustive_limit:
        missing = s.first_missing_type()
        if missing is None:
            raise CriterionSoundnessError(
                f"{s} has six legs yet every type was found present")
        return CriterionReport("six_leg", True, _missing(missing),
                               {"witness_path": "exhaustive"})
    # No cheap witness and too large to sweep; state the bare fact.
    return CriterionReport(
        "six_leg", True,
        Witness("inequality", text=f"d = {s.d} >= 6"),
        {"witness_path": "statement"})


def four_leg_q(s: Spider) -> CriterionReport:
    """Four-leg test at m = sum of the two short legs, n = mq + m + r:
    q >= m forces either a missing block type or a negative coefficient at
    (m+r, m^q)."""
    if s.d != 4:
        return CriterionReport("four_leg_q", False)
    legs = s.legs.parts
    m = legs[2] + legs[3]
    q, r = divmod(s.n - m, m)
    params = {"m": m, "q": q, "r": r}
    if q < m:
        return CriterionReport("four_leg_q", False, params=params)
    info = spider_mod_type_info(s, m)
    if not info.has_type:
        return CriterionReport("four_leg_q", True,
                               _missing(info.type_partition), params)
    key, value = coeff_four_leg(s)
    if value >= 0:
        raise CriterionSoundnessError(
            f"four_leg_q on {s}: q={q} >= m={m} but coefficient at {key} "
            f"evaluates to {value} >= 0")
    return CriterionReport(
        "four_leg_q", True,
        Witness("negative_coefficient", partition=key, value=value,
                text=f"coefficient at {key.exponential_str()} is {value}"),
        params)


def two_odd_legs(s: Spider) -> CriterionReport:
    """Spiders with at least four legs, exactly two of odd length, and an
    even longest leg: the coefficient at (3, 2^((n-3)/2)) is evaluated in
    closed form and triggers when negative.  The sign is re-checked rather
    than assumed, so leg patterns where the value is nonnegative simply do
    not trigger here."""
    legs = s.legs.parts
    odd = sum(1 for l in legs if l % 2)
    if s.d < 4 or odd != 2 or legs[0] % 2:
        return CriterionReport("two_odd_legs", False)
    value = coeff_three_two(s)
    key = three_two_key(s.n)
    params = {"value": value}
    if value >= 0:
        return CriterionReport("two_odd_legs", False, params=params)
    return CriterionReport(
        "two_odd_legs", True,
        Witness("negative_coefficient", partition=key, value=value,
                text=f"coefficient at {key.exponential_str()} is {value}"),
        params)


@dataclass
class BatteryResult:
    graph: str
    reports: list[CriterionReport]
    e_positive: bool | None  # None = unknown (criteria silent, no expansion)
    expansion: EExpansion | None = None
    negative_term: tuple[Partition, int] | None = None

    @property
    def any_triggered(self) -> bool:
        return any(r.triggered for r in self.reports)

    def first_trigger(self) -> CriterionReport | None:
        for r in self.reports:
            if r.triggered:
                return r
        return None

    def to_json_obj(self) -> dict:
        return {
            "graph": self.graph,
            "criteria": [r.to_json_obj() for r in self.reports],
            "e_positive": ("unknown" if self.e_positive is None
                           else self.e_positive),
        }


MODES = ("criteria_only", "with_expansion", "criteria_then_expansion")


def run_battery(s: Spider, mode: str = "criteria_only",
                cache: CsfCache | None = None,
                max_n: int | None = None,
                include_weak_variety: bool = False) -> BatteryResult:
    """Run the whole criterion battery on one spider.

    Modes: ``criteria_only`` never expands (verdict None unless a criterion
    fires); ``with_expansion`` always expands (within the oracle bound) and
    re-verifies every witness against the exact expansion;
    ``criteria_then_expansion`` expands only when no criterion fired.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    reports = [mod_test_scan(s)]
    reports += variety_conditions(s, include_weak=include_weak_variety)
    reports += [qm_test(s), sqrt_bound(s), degree_bound(s), six_leg(s),
                four_leg_q(s), two_odd_legs(s)]
    result = BatteryResult(str(s), reports,
                           False if any(r.triggered for r in reports) else None)
    if mode == "criteria_only":
        return result
    if mode == "criteria_then_expansion" and result.any_triggered:
        return result

    bound = max_n if max_n is not None else DEFAULT_TREE_ORACLE_BOUND
    if s.n > bound:
        raise OracleBoundError(
            f"{s.n} vertices exceeds the expansion bound {bound}")
    expansion = spider_csf(s, cache)
    negative = expansion.first_negative()
    result.expansion = expansion
    result.negative_term = negative
    result.e_positive = negative is None
    _verify_witnesses(s, reports, expansion)
    if result.any_triggered and negative is None:
        raise CriterionSoundnessError(
            f"criteria fired on {s} but the expansion is e-positive")
    return result


def _verify_witnesses(s: Spider, reports, expansion: EExpansion | None):
    for rep in reports:
        if not (rep.triggered and rep.witness):
            continue
        w = rep.witness
        if w.kind == "missing_type":
            if s.has_connected_partition(w.partition):
                raise CriterionSoundnessError(
                    f"{rep.name} on {s}: witness type {w.partition} is present")
        elif w.kind == "negative_coefficient" and expansion is not None:
            got = expansion.coefficient(w.partition)
            if got != w.value:
                raise CriterionSoundnessError(
                    f"{rep.name} on {s}: coefficient at {w.partition} is "
                    f"{got}, witness claims {w.value}")


TREE_CRITERIA_NOTE = ("only missing-partition criteria transfer from the "
                      "reduced spider to the tree")


def tree_battery(t: Tree) -> list[CriterionReport]:
    """Reduce at every vertex of degree >= 3 and run the missing-partition
    criteria on the reduced spider.  A missing type there is missing in the
    tree as well, so any trigger proves the tree not e-positive.
    Coefficient-based criteria do not transfer and are not run."""
    reports: list[CriterionReport] = []
    for v in range(t.n):
        if t.degree(v) < 3:
            continue
        sp = reduce_to_spider(t, v)
        subs = [mod_test_scan(sp)]
        subs += variety_conditions(sp)
        subs += [qm_test(sp), six_leg(sp)]
        for rep in subs:
            rep.params = {**rep.params, "vertex": v, "spider": str(sp)}
            reports.append(rep)
    return reports


def tree_battery_triggered(t: Tree) -> bool:
    return any(r.triggered for r in tree_battery(t))
