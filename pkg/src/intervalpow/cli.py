"""Command-line front end.

    intervalpow --base [-2,3] --exp [2,3] --check
    intervalpow --base [-8,-8] --exp-rational 1/3
    intervalpow --base [0,3] --exp-irrational 3.14159

Exit status: 0 on success, 1 on a usage error, 2 when ``--check`` finds a
sample outside the printed interval.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from .exponent import Rational, parse_rational
from .extended import ExactExponent, pow_exact, pow_float, pow_nonsingleton_exact
from .interval import Interval, format_interval, parse_interval
from .nonneg import DEFAULT_SLACK
from .oracle import GridSpec, check_containment, sample_image

EXIT_OK, EXIT_USAGE, EXIT_CHECK_FAILED = 0, 1, 2


class UsageError(ValueError):
    pass


@dataclass(frozen=True)
class EvalRequest:
    base: Interval
    exponent: Interval | ExactExponent
    mode: str  # "float" or "exact"
    check: bool = False
    grid: GridSpec = GridSpec()
    slack: int = DEFAULT_SLACK

    def __post_init__(self):
        if self.mode == "float" and not isinstance(self.exponent, Interval):
            raise UsageError("float mode needs an interval exponent (--exp)")
        if self.mode == "exact" and isinstance(self.exponent, Interval) and self.exponent.is_singleton:
            raise UsageError("exact mode with an interval exponent needs a non-singleton interval")
        if self.mode not in ("float", "exact"):
            raise UsageError(f"unknown mode {self.mode!r}")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _parser() -> argparse.ArgumentParser:
    p = _Parser(prog="intervalpow", description="Interval extension of x**y for any base sign and exponent.")
    p.add_argument("--base", required=True, metavar="INTERVAL", help="base interval, e.g. [-2,3]")
    exp = p.add_mutually_exclusive_group(required=True)
    exp.add_argument("--exp", metavar="INTERVAL", help="exponent interval with machine bounds")
    exp.add_argument("--exp-rational", metavar="NUM/DEN", help="exact rational exponent")
    exp.add_argument("--exp-irrational", metavar="DECIMAL", help="irrational exponent, given by an approximation")
    p.add_argument("--mode", choices=("float", "exact"), help="defaults to float for --exp, exact otherwise")
    p.add_argument("--check", action="store_true", help="verify the result against the sampling oracle")
    p.add_argument("--grid", default="100x100", metavar="BxE", help="oracle grid, default 100x100")
    p.add_argument("--max-den", type=int, default=99, help="largest odd denominator sampled (default 99)")
    p.add_argument("--slack", type=int, default=DEFAULT_SLACK, help="ulps of outward widening (default 2)")
    return p


def _value(token: str, parse, flag: str):
    try:
        return parse(token)
    except ValueError as exc:
        raise UsageError(f"{flag} {token}: {exc}") from None


def parse_args(argv: list[str]) -> EvalRequest:
    # let values such as "-3/5" or "-inf" follow their flag without "="
    argv = list(argv)
    for i, tok in enumerate(argv[:-1]):
        if tok in ("--base", "--exp", "--exp-rational", "--exp-irrational") and argv[i + 1].startswith("-"):
            argv[i] = f"{tok}={argv[i + 1]}"
            argv[i + 1] = ""
    argv = [t for t in argv if t != ""]

    ns = _parser().parse_args(argv)
    base = _value(ns.base, parse_interval, "--base")
    exponent: Interval | ExactExponent
    if ns.exp is not None:
        exponent = _value(ns.exp, parse_interval, "--exp")
        mode = ns.mode or "float"
    elif ns.exp_rational is not None:
        q: Rational = _value(ns.exp_rational, parse_rational, "--exp-rational")
        exponent = ExactExponent(value=q)
        mode = ns.mode or "exact"
    else:
        approx = _value(ns.exp_irrational, _finite_float, "--exp-irrational")
        exponent = ExactExponent.irrational(approx)
        mode = ns.mode or "exact"
    if ns.slack < 0:
        raise UsageError(f"--slack {ns.slack}: must be nonnegative")
    try:
        grid = GridSpec.parse(ns.grid, max_den=ns.max_den)
    except ValueError as exc:
        raise UsageError(f"--grid {ns.grid}: {exc}") from None
    return EvalRequest(base, exponent, mode, ns.check, grid, ns.slack)


def _finite_float(token: str) -> float:
    v = float(token)
    if v != v or v in (float("inf"), float("-inf")):
        raise ValueError("approximation must be finite")
    return v


def evaluate(request: EvalRequest) -> tuple[Interval, Interval]:
    """Result and the machine exponent interval it was evaluated over."""
    x, y = request.base, request.exponent
    if isinstance(y, ExactExponent):
        return pow_exact(x, y, request.slack), y.enclosure()
    if request.mode == "exact":
        return pow_nonsingleton_exact(x, y, request.slack), y
    return pow_float(x, y, request.slack), y


def run(request: EvalRequest) -> tuple[int, str]:
    result, y_machine = evaluate(request)
    lines = [format_interval(result)]
    status = EXIT_OK
    if request.check:
        report = check_containment(result, sample_image(request.base, y_machine, request.grid), request.grid.threshold)
        lines.append(report.summary())
        if not report.passed:
            status = EXIT_CHECK_FAILED
    return status, "\n".join(lines) + "\n"


def main(argv: list[str] | None = None) -> int:
    try:
        request = parse_args(sys.argv[1:] if argv is None else argv)
    except UsageError as exc:
        sys.stderr.write(f"intervalpow: error: {exc}\n")
        return EXIT_USAGE
    status, text = run(request)
    sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
