"""Batch evaluation over phantom suites and the embedded diameter regression.

The regression fixture is ten maximum-diameter measurements (mm) of the same
lesions by a human reader and by the tool; the checks assert the recomputed
summary statistics, so a stats regression is caught immediately.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field, replace

from .contour import dice
from .errors import DomainError, FormatError, UscutError
from .phantom import ECHO_CLASSES, PhantomSpec, class_defaults, generate_phantom
from .session import segment_at
from .template import DEFAULT_CONFIG, TemplateConfig

# Reference measurements, mm: human reader vs tool, ten lesions.
MANUAL_DIAMETERS_MM = (11.32, 18.5, 23.92, 13.95, 12.1, 30.49, 15.63, 21.66, 7.18, 19.83)
USCUT_DIAMETERS_MM = (10.66, 17.22, 21.94, 10.68, 10.78, 28.03, 12.7, 21.88, 6.77, 19.3)


def compute_stats(values) -> tuple[float, float]:
    """Arithmetic mean and sample (n-1) standard deviation."""
    values = [float(v) for v in values]
    n = len(values)
    if n < 2:
        raise DomainError("compute_stats needs at least 2 values")
    mean = math.fsum(values) / n
    var = math.fsum((v - mean) ** 2 for v in values) / (n - 1)
    return mean, math.sqrt(var)


def deviation_stats(manual, algo) -> tuple[float, float]:
    """Mean signed and mean absolute difference manual_i - algo_i, in mm."""
    manual = [float(v) for v in manual]
    algo = [float(v) for v in algo]
    if len(manual) != len(algo):
        raise DomainError("deviation_stats needs equal-length lists")
    if not manual:
        raise DomainError("deviation_stats needs at least one pair")
    diffs = [m - a for m, a in zip(manual, algo)]
    signed = math.fsum(diffs) / len(diffs)
    absolute = math.fsum(abs(d) for d in diffs) / len(diffs)
    return signed, absolute


@dataclass(frozen=True)
class RegressionReport:
    manual_mean: float
    manual_sd: float
    algo_mean: float
    algo_sd: float
    mean_signed_mm: float
    mean_abs_mm: float
    ok: bool
    lines: tuple[str, ...]


def regression_check() -> RegressionReport:
    """Recompute the embedded table's statistics and compare at 2 decimals.

    Expected: manual 17.46 +- 6.86, deviations 1.46 / 1.51 mm signed/absolute,
    tool column recomputes to 16.00 +- 6.73. The originally printed tool
    summary (16.03 +- 6.62) does not match its own row data; the check pins
    the recomputation and prints a note instead of forcing the printed value.
    """
    manual_mean, manual_sd = compute_stats(MANUAL_DIAMETERS_MM)
    algo_mean, algo_sd = compute_stats(USCUT_DIAMETERS_MM)
    signed, absolute = deviation_stats(MANUAL_DIAMETERS_MM, USCUT_DIAMETERS_MM)
    checks = [
        ("manual mean", manual_mean, 17.46),
        ("manual sd", manual_sd, 6.86),
        ("tool mean (recomputed)", algo_mean, 16.00),
        ("tool sd (recomputed)", algo_sd, 6.73),
        ("mean signed deviation", signed, 1.46),
        ("mean absolute deviation", absolute, 1.51),
    ]
    ok = True
    lines = []
    for name, got, want in checks:
        good = round(got, 2) == want
        ok = ok and good
        status = "ok" if good else "MISMATCH"
        lines.append(f"{status:8s} {name}: {got:.4f} (expected {want:.2f})")
    lines.append(
        "note: originally printed tool summary is 16.03 +- 6.62; recomputation "
        "from the row data gives 16.00 +- 6.73, which is what this check asserts."
    )
    return RegressionReport(
        manual_mean=manual_mean,
        manual_sd=manual_sd,
        algo_mean=algo_mean,
        algo_sd=algo_sd,
        mean_signed_mm=signed,
        mean_abs_mm=absolute,
        ok=ok,
        lines=tuple(lines),
    )


@dataclass(frozen=True)
class EvalCase:
    """One evaluation case: a phantom, where to seed, and the template config."""

    name: str
    spec: PhantomSpec
    seed: tuple[float, float]
    spacing: float = 0.2
    cfg: TemplateConfig = field(default_factory=TemplateConfig)


def default_suite(speckle_sigma: float = 0.15) -> list[EvalCase]:
    """Fifteen cases, three per echo class, at 0.2 mm/px.

    Halo classes get lesions sized so the template rim (80 px by default)
    falls inside the dark halo; with an isoechoic lesion the rim contrast is
    the only signal the seed statistics can pick up.
    """
    cases = []
    radii = {"A": (26.0, 30.0, 34.0), "B": (26.0, 30.0, 34.0), "C": (26.0, 30.0, 34.0),
             "D": (68.0, 71.0, 74.0), "E": (68.0, 71.0, 74.0)}
    for echo_class in ECHO_CLASSES:
        for j, radius in enumerate(radii[echo_class]):
            halo_width = 16.0 if echo_class in ("D", "E") else None
            spec = class_defaults(
                echo_class,
                lesion_radius=radius,
                speckle_sigma=speckle_sigma,
                rng_seed=100 * (ord(echo_class) - ord("A")) + j,
                halo_width=halo_width,
            )
            cases.append(
                EvalCase(
                    name=f"{echo_class}{j + 1}",
                    spec=spec,
                    seed=spec.center,
                )
            )
    return cases


_CASE_KEYS = {
    "class", "width", "height", "cx", "cy", "lesion_radius", "background",
    "lesion", "halo_width", "halo", "speckle", "rng_seed", "seed_x", "seed_y",
    "spacing", "rays", "nodes", "radius", "delta", "name",
}


def load_suite(path: str | os.PathLike) -> list[EvalCase]:
    """Parse a suite file: one case per line of key=value pairs, # comments."""
    cases = []
    with open(path, "r", encoding="ascii") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            fields = {}
            for token in line.split():
                if "=" not in token:
                    raise FormatError(f"suite line {lineno}: expected key=value, got {token!r}")
                key, value = token.split("=", 1)
                if key not in _CASE_KEYS:
                    raise FormatError(f"suite line {lineno}: unknown key {key!r}")
                fields[key] = value
            if "class" not in fields:
                raise FormatError(f"suite line {lineno}: missing class=")
            echo_class = fields["class"]
            base = class_defaults(
                echo_class,
                lesion_radius=float(fields.get("lesion_radius", 30.0)),
                width=int(fields.get("width", 512)),
                height=int(fields.get("height", 512)),
                speckle_sigma=float(fields.get("speckle", 0.0)),
                rng_seed=int(fields.get("rng_seed", 0)),
                halo_width=float(fields["halo_width"]) if "halo_width" in fields else None,
            )
            overrides = {}
            if "cx" in fields or "cy" in fields:
                cx, cy = base.center
                overrides["center"] = (
                    float(fields.get("cx", cx)),
                    float(fields.get("cy", cy)),
                )
            if "background" in fields:
                overrides["background_level"] = float(fields["background"])
            if "lesion" in fields:
                overrides["lesion_level"] = float(fields["lesion"])
            if "halo" in fields:
                overrides["halo_level"] = float(fields["halo"])
            spec = replace(base, **overrides) if overrides else base
            cfg = TemplateConfig(
                num_rays=int(fields.get("rays", DEFAULT_CONFIG.num_rays)),
                nodes_per_ray=int(fields.get("nodes", DEFAULT_CONFIG.nodes_per_ray)),
                radius_px=float(fields.get("radius", DEFAULT_CONFIG.radius_px)),
                delta=int(fields.get("delta", DEFAULT_CONFIG.delta)),
            )
            seed = (
                float(fields.get("seed_x", spec.center[0])),
                float(fields.get("seed_y", spec.center[1])),
            )
            cases.append(
                EvalCase(
                    name=fields.get("name", f"case{len(cases) + 1}"),
                    spec=spec,
                    seed=seed,
                    spacing=float(fields.get("spacing", 0.2)),
                    cfg=cfg,
                )
            )
    return cases


EVAL_HEADER = "case,echo_class,true_diameter_mm,measured_diameter_mm,error_mm,dice,elapsed_ms,note"


def run_eval(cases: list[EvalCase], out_path: str | os.PathLike, timing: bool = False) -> list[str]:
    """Segment every case and write the results CSV; returns the file's lines.

    elapsed_ms is written as 0.0 unless timing is requested: wall time varies
    run to run and the output contract is byte-stable for fixed rng seeds.
    """
    lines = [EVAL_HEADER]
    true_d: list[float] = []
    measured_d: list[float] = []
    for case in cases:
        true_mm = 2.0 * case.spec.lesion_radius * case.spacing
        try:
            img, truth = generate_phantom(case.spec, spacing=case.spacing)
            result = segment_at(img, case.seed, case.cfg)
            overlap = dice(result.contour, truth)
        except UscutError as exc:
            note = str(exc).replace(",", ";")  # keep the row parseable
            lines.append(f"{case.name},{case.spec.echo_class},{true_mm!r},,,,,error: {note}")
            continue
        err = result.diameter_mm - true_mm
        elapsed = result.elapsed_ms if timing else 0.0
        lines.append(
            f"{case.name},{case.spec.echo_class},{true_mm!r},{result.diameter_mm!r},"
            f"{err!r},{overlap!r},{elapsed!r},"
        )
        true_d.append(true_mm)
        measured_d.append(result.diameter_mm)
    if len(true_d) >= 2:
        t_mean, t_sd = compute_stats(true_d)
        m_mean, m_sd = compute_stats(measured_d)
        signed, absolute = deviation_stats(true_d, measured_d)
        lines.append(f"summary_mean,,{t_mean!r},{m_mean!r},{signed!r},,,")
        lines.append(f"summary_sd,,{t_sd!r},{m_sd!r},,,,")
        lines.append(f"summary_abs_deviation,,,,{absolute!r},,,")
    with open(out_path, "w", encoding="ascii", newline="\n") as fh:
        for line in lines:
            fh.write(line + "\n")
    return lines
