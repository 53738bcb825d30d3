"""Composition of the transforms into staged pipelines, with bound reports.

`reduce_wx_qz` runs split-then-thicken to make the X weight and Z degree
small; `weight_reduce` runs it twice with a dualization in between, which
bounds all four weight/degree parameters; `balance` thickens whichever
side has the smaller distance.  Every stage records the parameter vector
before and after plus pass/fail checks of the guaranteed bounds.

The exponent calculators evaluate the closed-form asymptotic exponents of
the combined construction and its two-phase composition.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil

from .assignment import AssignmentOutcome, lll_resample
from .model import CodeParams, CssCode, dualize, k_of, params, require_valid
from .transforms import (
    Assignment,
    SplitTrace,
    lll_parameters,
    split_all_x_generators,
    thicken,
)


@dataclass(frozen=True)
class BoundCheck:
    name: str
    passed: bool
    detail: str

    def as_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


@dataclass(frozen=True)
class StageReport:
    stage: str
    params_before: CodeParams
    params_after: CodeParams
    checks: tuple[BoundCheck, ...]
    assignment: AssignmentOutcome | None = None

    def as_dict(self) -> dict:
        out = {
            "stage": self.stage,
            "params_before": self.params_before.as_dict(),
            "params_after": self.params_after.as_dict(),
            "checks": [c.as_dict() for c in self.checks],
        }
        if self.assignment is not None:
            out["assignment"] = {
                "l": self.assignment.assignment.l,
                "choice": list(self.assignment.assignment.choice),
                "max_copied_load": self.assignment.max_copied_load,
                "resample_rounds": self.assignment.resample_rounds,
                "method": self.assignment.method,
                "target_met": self.assignment.target_met,
                "target": self.assignment.target,
            }
        return out


@dataclass(frozen=True)
class PipelineReport:
    stages: tuple[StageReport, ...]
    input_params: CodeParams
    output_params: CodeParams
    k_preserved: bool
    notes: tuple[str, ...] = ()

    def all_passed(self) -> bool:
        return self.k_preserved and all(c.passed for s in self.stages for c in s.checks)

    def failed_checks(self) -> list[BoundCheck]:
        return [c for s in self.stages for c in s.checks if not c.passed]

    def as_dict(self) -> dict:
        return {
            "stages": [s.as_dict() for s in self.stages],
            "input_params": self.input_params.as_dict(),
            "output_params": self.output_params.as_dict(),
            "k_preserved": self.k_preserved,
            "all_passed": self.all_passed(),
            "notes": list(self.notes),
        }


def _check(name: str, passed: bool, detail: str) -> BoundCheck:
    return BoundCheck(name=name, passed=bool(passed), detail=detail)


def _split_checks(p0: CodeParams, p1: CodeParams, trace: SplitTrace) -> list[BoundCheck]:
    delta = trace.delta
    out = [
        _check("split: qubit count", p1.n == p0.n + delta, f"{p1.n} == {p0.n}+{delta}"),
        _check(
            "split: x generator count",
            p1.n_x == p0.n_x + delta,
            f"{p1.n_x} == {p0.n_x}+{delta}",
        ),
        _check("split: z generator count", p1.n_z == p0.n_z, f"{p1.n_z} == {p0.n_z}"),
        _check("split: max x weight", p1.w_x <= 3, f"{p1.w_x} <= 3"),
        _check(
            "split: max z degree",
            Fraction(p1.q_z) <= max(Fraction(p0.w_x * p0.q_z, 2), Fraction(p0.q_z)),
            f"{p1.q_z} <= max({p0.w_x}*{p0.q_z}/2, {p0.q_z})",
        ),
        _check(
            "split: max z weight",
            p1.w_z <= p0.w_z * (p0.q_x + 1),
            f"{p1.w_z} <= {p0.w_z}*({p0.q_x}+1)",
        ),
        _check(
            "split: max x degree",
            p1.q_x <= max(p0.q_x, 2),
            f"{p1.q_x} <= max({p0.q_x}, 2)",
        ),
        _check("split: k preserved", p1.k == p0.k, f"{p1.k} == {p0.k}"),
        _check(
            "split: total x weight",
            p1.w_total_x == p0.w_total_x + 2 * delta,
            f"{p1.w_total_x} == {p0.w_total_x}+2*{delta}",
        ),
        _check(
            "split: total z weight",
            p1.w_total_z <= p0.w_total_z * (p0.q_x + 1),
            f"{p1.w_total_z} <= {p0.w_total_z}*({p0.q_x}+1)",
        ),
    ]
    if p0.d_x is not None and p1.d_x is not None and p0.d_x.exact and p1.d_x.exact:
        out.append(
            _check(
                "split: x distance",
                Fraction(p1.d_x.value) >= Fraction(p0.d_x.value) / (Fraction(p0.w_x, 2) + 1),
                f"{p1.d_x.value} >= {p0.d_x.value}/({p0.w_x}/2+1)",
            )
        )
    if p0.d_z is not None and p1.d_z is not None and p0.d_z.exact and p1.d_z.exact:
        out.append(
            _check(
                "split: z distance",
                p1.d_z.value >= p0.d_z.value,
                f"{p1.d_z.value} >= {p0.d_z.value}",
            )
        )
    return out


def _thicken_checks(
    p1: CodeParams, p2: CodeParams, l: int, outcome: AssignmentOutcome | None
) -> list[BoundCheck]:
    out = [
        _check(
            "thicken: qubit count",
            p2.n == p1.n * l + p1.n_x * (l - 1),
            f"{p2.n} == {p1.n}*{l}+{p1.n_x}*({l}-1)",
        ),
        _check(
            "thicken: x generator count", p2.n_x == l * p1.n_x, f"{p2.n_x} == {l}*{p1.n_x}"
        ),
        _check(
            "thicken: z generator count",
            p2.n_z == p1.n_z + (l - 1) * p1.n,
            f"{p2.n_z} == {p1.n_z}+({l}-1)*{p1.n}",
        ),
        _check("thicken: k preserved", p2.k == p1.k, f"{p2.k} == {p1.k}"),
        _check(
            "thicken: total x weight",
            p2.w_total_x == l * p1.w_total_x + 2 * (l - 1) * p1.n_x,
            f"{p2.w_total_x} == {l}*{p1.w_total_x}+2*({l}-1)*{p1.n_x}",
        ),
        _check(
            "thicken: total z weight",
            p2.w_total_z == p1.w_total_z + 2 * (l - 1) * p1.n + (l - 1) * p1.w_total_x,
            f"{p2.w_total_z} == {p1.w_total_z}+2*({l}-1)*{p1.n}+({l}-1)*{p1.w_total_x}",
        ),
    ]
    if p1.n_x >= 1:
        bump = 2 if l >= 3 else 1
        out.append(
            _check(
                "thicken: max x weight",
                p2.w_x == p1.w_x + bump,
                f"{p2.w_x} == {p1.w_x}+{bump}",
            )
        )
        out.append(
            _check(
                "thicken: max x degree",
                p2.q_x == max(p1.q_x, 2),
                f"{p2.q_x} == max({p1.q_x}, 2)",
            )
        )
    if p1.n >= 1:
        out.append(
            _check(
                "thicken: max z weight",
                p2.w_z == max(p1.w_z, 2 + p1.q_x),
                f"{p2.w_z} == max({p1.w_z}, 2+{p1.q_x})",
            )
        )
    if outcome is not None:
        load = outcome.max_copied_load
        out.append(
            _check(
                "thicken: max z degree (achieved load)",
                p2.q_z <= max(load + 2, p1.w_x),
                f"{p2.q_z} <= max({load}+2, {p1.w_x})",
            )
        )
        if outcome.target_met and outcome.target is not None:
            out.append(
                _check(
                    "thicken: max z degree (load target)",
                    p2.q_z <= max(outcome.target + 2, p1.w_x),
                    f"{p2.q_z} <= max({outcome.target}+2, {p1.w_x})",
                )
            )
    if p1.d_x is not None and p2.d_x is not None and p1.d_x.exact and p2.d_x.exact:
        out.append(
            _check(
                "thicken: x distance scaled",
                p2.d_x.value == l * p1.d_x.value,
                f"{p2.d_x.value} == {l}*{p1.d_x.value}",
            )
        )
    if p1.d_z is not None and p2.d_z is not None and p1.d_z.exact and p2.d_z.exact:
        out.append(
            _check(
                "thicken: z distance preserved",
                p2.d_z.value == p1.d_z.value,
                f"{p2.d_z.value} == {p1.d_z.value}",
            )
        )
    return out


def _combined_checks(
    p0: CodeParams, p2: CodeParams, w: int, l: int, outcome: AssignmentOutcome
) -> list[BoundCheck]:
    out = [
        _check("combined: k preserved", p2.k == p0.k, f"{p2.k} == {p0.k}"),
        _check(
            "combined: qubit count",
            p2.n <= l * (p0.n + p0.n_x + 2 * p0.w_total_x),
            f"{p2.n} <= {l}*({p0.n}+{p0.n_x}+2*{p0.w_total_x})",
        ),
        _check(
            "combined: x generator count",
            p2.n_x <= l * (p0.n_x + p0.w_total_x),
            f"{p2.n_x} <= {l}*({p0.n_x}+{p0.w_total_x})",
        ),
        _check(
            "combined: z generator count",
            p2.n_z <= p0.n_z + (l - 1) * (p0.n + p0.w_total_x),
            f"{p2.n_z} <= {p0.n_z}+({l}-1)*({p0.n}+{p0.w_total_x})",
        ),
        _check("combined: max x weight", p2.w_x <= 5, f"{p2.w_x} <= 5"),
        _check(
            "combined: max z weight",
            p2.w_z <= max(p0.w_z * (p0.q_x + 1), 2 + p0.q_x),
            f"{p2.w_z} <= max({p0.w_z}*({p0.q_x}+1), 2+{p0.q_x})",
        ),
        _check(
            "combined: max x degree", p2.q_x <= max(p0.q_x, 2), f"{p2.q_x} <= max({p0.q_x}, 2)"
        ),
    ]
    if outcome.target_met:
        out.append(
            _check(
                "combined: max z degree",
                p2.q_z <= max(w + 2, 3),
                f"{p2.q_z} <= max({w}+2, 3)",
            )
        )
    if p0.d_z is not None and p2.d_z is not None and p0.d_z.exact and p2.d_z.exact:
        out.append(
            _check(
                "combined: z distance",
                p2.d_z.value >= p0.d_z.value,
                f"{p2.d_z.value} >= {p0.d_z.value}",
            )
        )
    if p0.d_x is not None and p2.d_x is not None and p0.d_x.exact and p2.d_x.exact:
        out.append(
            _check(
                "combined: x distance",
                Fraction(p2.d_x.value)
                >= l * Fraction(p0.d_x.value) / (Fraction(p0.w_x, 2) + 1),
                f"{p2.d_x.value} >= {l}*{p0.d_x.value}/({p0.w_x}/2+1)",
            )
        )
    return out


def reduce_wx_qz(
    code: CssCode,
    *,
    w: int | None = None,
    l: int | None = None,
    epsilon=None,
    seed: int,
    max_rounds: int | None = None,
    distance_cap: int | None = None,
) -> tuple[CssCode, PipelineReport]:
    """Split all X generators, then thicken with a resampled assignment.

    Provide either an explicit (w, l) pair or `epsilon`, in which case
    (w, l) come from `lll_parameters` applied to the input parameters.
    Distances are computed and checked only when `distance_cap` is given.
    """
    require_valid(code)
    p0 = params(code, distance_cap=distance_cap)
    notes = []
    if epsilon is not None:
        if w is not None or l is not None:
            raise ValueError("give either epsilon or an explicit (w, l), not both")
        w, l = lll_parameters(p0, epsilon)
        notes.append(f"selected w={w}, l={l} from epsilon={epsilon}")
    if w is None or l is None:
        raise ValueError("either epsilon or both w and l are required")

    split_code, trace = split_all_x_generators(code)
    p1 = params(split_code, distance_cap=distance_cap)
    split_stage = StageReport(
        stage="split",
        params_before=p0,
        params_after=p1,
        checks=tuple(_split_checks(p0, p1, trace)),
    )

    outcome = lll_resample(split_code, l, w, seed=seed, max_rounds=max_rounds)
    if not outcome.target_met:
        notes.append(
            f"assignment load target {w} not met (achieved {outcome.max_copied_load}); "
            "the z-degree guarantee is reported against the achieved load"
        )
    thick = thicken(split_code, outcome.assignment)
    p2 = params(thick, distance_cap=distance_cap)
    thicken_stage = StageReport(
        stage="thicken",
        params_before=p1,
        params_after=p2,
        checks=tuple(_thicken_checks(p1, p2, l, outcome)),
        assignment=outcome,
    )
    combined_stage = StageReport(
        stage="combined",
        params_before=p0,
        params_after=p2,
        checks=tuple(_combined_checks(p0, p2, w, l, outcome)),
    )
    report = PipelineReport(
        stages=(split_stage, thicken_stage, combined_stage),
        input_params=p0,
        output_params=p2,
        k_preserved=p2.k == p0.k,
        notes=tuple(notes),
    )
    return thick, report


def weight_reduce(
    code: CssCode,
    *,
    w: int | None = None,
    l: int | None = None,
    epsilon=None,
    phase2_w: int | None = None,
    phase2_l: int | None = None,
    seed: int,
    max_rounds: int | None = None,
) -> tuple[CssCode, PipelineReport]:
    """Full reduction: reduce the X side, dualize, reduce again, dualize.

    Phase 2 reuses the phase-1 (w, l) unless overridden; phase 2 draws its
    randomness from seed+1.
    """
    require_valid(code)
    p0 = params(code)
    phase1, rep1 = reduce_wx_qz(
        code, w=w, l=l, epsilon=epsilon, seed=seed, max_rounds=max_rounds
    )
    phase2_input = dualize(phase1)
    phase2, rep2 = reduce_wx_qz(
        phase2_input,
        w=phase2_w if phase2_w is not None else w,
        l=phase2_l if phase2_l is not None else l,
        epsilon=epsilon if (phase2_w is None and phase2_l is None and w is None) else None,
        seed=seed + 1,
        max_rounds=max_rounds,
    )
    final = dualize(phase2)
    p_final = params(final)

    stages = tuple(
        StageReport(
            stage=f"phase1 {s.stage}",
            params_before=s.params_before,
            params_after=s.params_after,
            checks=s.checks,
            assignment=s.assignment,
        )
        for s in rep1.stages
    ) + tuple(
        StageReport(
            stage=f"phase2 {s.stage}",
            params_before=s.params_before,
            params_after=s.params_after,
            checks=s.checks,
            assignment=s.assignment,
        )
        for s in rep2.stages
    )
    report = PipelineReport(
        stages=stages,
        input_params=p0,
        output_params=p_final,
        k_preserved=p_final.k == p0.k,
        notes=rep1.notes + rep2.notes,
    )
    return final, report


def balance(
    code: CssCode,
    distance_hint: tuple[int, int] | None = None,
    *,
    verify_distances: bool = False,
) -> tuple[CssCode, PipelineReport]:
    """Thicken the side with the smaller distance so the two match.

    Distances come from the exact oracle unless a (d_x, d_z) hint is given.
    With `verify_distances`, the output distances are oracle-checked
    against the expected values (search capped at the expected value).
    """
    require_valid(code)
    p0 = params(code)
    notes = []
    if max(p0.w_x, p0.w_z, p0.q_x, p0.q_z) > 8:
        notes.append("input weights/degrees are large; balancing keeps them bounded only for bounded inputs")
    if distance_hint is not None:
        dx, dz = distance_hint
        notes.append(f"using distance hint d_x={dx}, d_z={dz}")
    else:
        from .distance import min_logical_weight

        rx = min_logical_weight(code, "x")
        rz = min_logical_weight(code, "z")
        dx, dz = rx.value, rz.value

    if dx == dz:
        report = PipelineReport(
            stages=(),
            input_params=p0,
            output_params=p0,
            k_preserved=True,
            notes=tuple(notes + ["distances already equal; identity"]),
        )
        return code, report

    if dx < dz:
        l = ceil(Fraction(dz, dx))
        out = thicken(code, Assignment.all_ones(l, code.n_z))
        branch = f"thicken with l={l} (x side amplified)"
        expect_dx, expect_dz = l * dx, dz
    else:
        l = ceil(Fraction(dx, dz))
        dual_in = dualize(code)
        out = dualize(thicken(dual_in, Assignment.all_ones(l, dual_in.n_z)))
        branch = f"dualize, thicken with l={l}, dualize (z side amplified)"
        expect_dx, expect_dz = dx, l * dz
    notes.append(branch)

    p_out = params(out)
    checks = [
        _check("balance: k preserved", p_out.k == p0.k, f"{p_out.k} == {p0.k}"),
    ]
    if verify_distances:
        from .distance import min_logical_weight

        ox = min_logical_weight(out, "x", cap=expect_dx)
        oz = min_logical_weight(out, "z", cap=expect_dz)
        checks.append(
            _check(
                "balance: x distance",
                ox.exact and ox.value == expect_dx,
                f"{ox.value} == {expect_dx}",
            )
        )
        checks.append(
            _check(
                "balance: z distance",
                oz.exact and oz.value == expect_dz,
                f"{oz.value} == {expect_dz}",
            )
        )
        checks.append(
            _check(
                "balance: min distance",
                min(ox.value, oz.value) == max(dx, dz),
                f"min({ox.value},{oz.value}) == max({dx},{dz})",
            )
        )
    stage = StageReport(
        stage="balance",
        params_before=p0,
        params_after=p_out,
        checks=tuple(checks),
    )
    report = PipelineReport(
        stages=(stage,),
        input_params=p0,
        output_params=p_out,
        k_preserved=p_out.k == p0.k,
        notes=tuple(notes),
    )
    return out, report


@dataclass(frozen=True)
class ExponentVector:
    """Exponents of N for the eight code parameters of a code family."""

    alpha_x: Fraction | float
    alpha_z: Fraction | float
    beta_x: Fraction | float
    beta_z: Fraction | float
    sigma_x: Fraction | float
    sigma_z: Fraction | float
    tau_x: Fraction | float
    tau_z: Fraction | float

    def swapped(self) -> ExponentVector:
        return ExponentVector(
            alpha_x=self.alpha_z,
            alpha_z=self.alpha_x,
            beta_x=self.beta_z,
            beta_z=self.beta_x,
            sigma_x=self.sigma_z,
            sigma_z=self.sigma_x,
            tau_x=self.tau_z,
            tau_z=self.tau_x,
        )


def _require_exponents(e: ExponentVector, epsilon) -> None:
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    if e.sigma_x < 1 or e.sigma_z < 1:
        raise ValueError("total-weight exponents sigma_x, sigma_z must be >= 1")


def exponents_clasympt(e: ExponentVector, epsilon) -> ExponentVector:
    """Exponents of the split-then-thicken output in terms of the input.

    The output has constant max X weight and Z degree (exponents 0) and
    total X weight linear in the new length (sigma_x = 1).
    """
    _require_exponents(e, epsilon)
    denom = e.sigma_x + (1 + epsilon) * (e.alpha_x + e.beta_z)
    return ExponentVector(
        alpha_x=0 * denom,
        alpha_z=(e.alpha_z + e.beta_x) / denom,
        beta_x=e.beta_x / denom,
        beta_z=0 * denom,
        sigma_x=denom / denom,
        sigma_z=max((e.sigma_z + e.beta_x) / denom, 1),
        tau_x=(e.tau_x + epsilon * e.alpha_x + (1 + epsilon) * e.beta_z) / denom,
        tau_z=e.tau_z / denom,
    )


def exponents_two_phase(e: ExponentVector, epsilon) -> ExponentVector:
    """Compose the single-phase exponents with the side swap in between."""
    phase1 = exponents_clasympt(e, epsilon)
    phase2 = exponents_clasympt(phase1.swapped(), epsilon)
    return phase2.swapped()


def exponents_theorem1(e: ExponentVector, epsilon):
    """Closed-form distance exponents of the full two-phase reduction.

    Returns (tau_x_new, tau_z_new, sigma_z_phase1); equals the two-phase
    composition of `exponents_clasympt`.
    """
    _require_exponents(e, epsilon)
    denom1 = e.sigma_x + (1 + epsilon) * (e.alpha_x + e.beta_z)
    sigma_z_prime = max((e.sigma_z + e.beta_x) / denom1, 1)
    big = denom1 * sigma_z_prime + (1 + epsilon) * (e.alpha_z + 2 * e.beta_x)
    tau_x_new = (e.tau_x + epsilon * e.alpha_x + (1 + epsilon) * e.beta_z) / big
    tau_z_new = (e.tau_z + epsilon * (e.alpha_z + e.beta_x) + (1 + epsilon) * e.beta_x) / big
    return tau_x_new, tau_z_new, sigma_z_prime


def nu_from_mu(mu):
    """Distance exponent after balancing a family with d_x d_z ~ N^mu."""
    if mu >= 3:
        raise ValueError("mu must be below 3")
    return 1 / (3 - mu)
