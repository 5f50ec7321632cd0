import argparse
import logging
import math
import sys
from typing import Any, Dict, List, Optional, Sequence

import pandas as pd
from dotenv import load_dotenv

from subperm_patterns.config_manager import get_setting, load_config, oracle_ceiling
from subperm_patterns.enumeration import (
    Family,
    RecurrenceMethod,
    asymptotic_coefficient,
    catalan_table,
    dominant_root,
    dyck_avoiding_table,
    expected_gamma_table,
    gamma_u_bounded_table,
    lj_coefficients,
    lj_complement,
    m2_table,
    motzkin_table,
    pj_coefficients,
    ratio_table,
)
from subperm_patterns.errors import (
    AcceptanceCheckError,
    InvalidInputError,
    SubpermError,
    USAGE_EXIT_CODE,
)
from subperm_patterns.montecarlo import McConfig, estimates_frame, sweep, sweep_grid
from subperm_patterns.oracle_suite import SUITES, run_oracle_suite
from subperm_patterns.output_manager import bfile_text, emit, json_document, render_frame
from subperm_patterns.permutations import (
    Permutation,
    all_sub_permutations,
    as_permutation,
    gamma_u,
    parse_permutation,
    sub_permutation,
    two_line,
)
from subperm_patterns.probability import (
    DenominatorMethod,
    conditional_presence,
    exhaustive_not_avsk,
    not_av_213_2_count,
    prob_not_avsk,
    prob_not_avsk_asymptotic,
    resolve_sequence,
)
from subperm_patterns.trees import (
    TreeRole,
    phi,
    phi_inverse,
    psi,
    psi_inverse,
    tree_from_text,
    tree_to_text,
)

logger = logging.getLogger(__name__)

PATTERN_213 = Permutation((2, 1, 3))
PROB_COLUMNS = ["n", "k", "method", "value", "truncation"]


class CliParser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors exit with status 1."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(USAGE_EXIT_CODE, f"{self.prog}: error: {message}\n")


def _permutation_arg(text: str) -> Permutation:
    try:
        return parse_permutation(text)
    except InvalidInputError as e:
        raise argparse.ArgumentTypeError(str(e)) from e


def _pattern_arg(text: str) -> Permutation:
    try:
        return as_permutation(text)
    except InvalidInputError as e:
        raise argparse.ArgumentTypeError(str(e)) from e


def _int_range(start: Optional[int], stop: Optional[int], single: Optional[int], name: str) -> List[int]:
    if single is not None:
        return [single]
    if start is None or stop is None:
        raise InvalidInputError(f"give --{name} or both --{name}-from and --{name}-to")
    if start > stop:
        raise InvalidInputError(f"--{name}-from {start} is larger than --{name}-to {stop}")
    return list(range(start, stop + 1))


def build_parser() -> argparse.ArgumentParser:
    parser = CliParser(
        prog="subperm",
        description="Sub-permutations, tree bijections, coefficient tables and pattern-presence probabilities.",
    )
    parser.add_argument("--config", default="config/config.yaml", help="Path to the configuration file.")
    parser.add_argument("--log-level", default="WARNING",
                        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
                        help="Logging level for diagnostics on stderr.")
    parser.add_argument("--output", default=None, help="Write results to this file instead of stdout.")
    subparsers = parser.add_subparsers(dest="command", required=True)

    # 'convert' command
    convert_parser = subparsers.add_parser("convert", help="Map between permutations and trees.")
    direction = convert_parser.add_mutually_exclusive_group(required=True)
    direction.add_argument("--to-tree", type=_permutation_arg, metavar="PERM",
                           help='Permutation in one-line form, e.g. "4 5 3 1 2 6 8 7".')
    direction.add_argument("--to-perm", type=str, metavar="TREE",
                           help='Tree text, e.g. "(1 L:(3) R:(2))" or "(L:* R:*)".')
    convert_parser.add_argument("--bijection", default="phi", choices=["phi", "psi"],
                                help="phi: increasing trees <-> S_n; psi: planar binary trees <-> Av_n(312).")

    # 'subperm' command
    subperm_parser = subparsers.add_parser("subperm", help="List the sub-permutations of a permutation.")
    subperm_parser.add_argument("host", type=_permutation_arg, help="Permutation in one-line form.")
    subperm_parser.add_argument("--k", type=int, default=None, help="Only the sub-permutation generated by k.")
    subperm_parser.add_argument("--two-line", action="store_true",
                                help="Also report the two-line drawing and gamma_u of a 123-avoider.")
    subperm_parser.add_argument("--format", default="csv", choices=["csv", "json", "text"])

    # 'count' command
    count_parser = subparsers.add_parser("count", help="Exact coefficient tables.")
    count_parser.add_argument("--family", required=True, choices=[f.value for f in Family])
    count_parser.add_argument("--j", type=int, default=None, help="Index j (pj, dyck_avoid, gamma_u_bounded).")
    count_parser.add_argument("--m", type=int, default=None, help="Index m (lj, lj_complement).")
    count_parser.add_argument("--n-max", type=int, required=True)
    count_parser.add_argument("--method", default="convolution", choices=[m.value for m in RecurrenceMethod])
    count_parser.add_argument("--format", default="bfile", choices=["bfile", "csv", "json"])

    # 'asym' command
    asym_parser = subparsers.add_parser("asym", help="Dominant roots and asymptotic estimates.")
    target = asym_parser.add_mutually_exclusive_group(required=True)
    target.add_argument("--family", choices=["catalan", "pj", "lj_complement"],
                        help="Root and coefficient estimate of one family.")
    target.add_argument("--ratio", type=int, metavar="M",
                        help="Exact v_(2m,n)/(c_n - l_n) next to its estimate.")
    target.add_argument("--expected-gamma", action="store_true",
                        help="Mean largest Av(213) sub-permutation over Av_n(312).")
    asym_parser.add_argument("--index", type=int, default=1, help="j for pj, m for lj_complement.")
    asym_parser.add_argument("--n", type=int, nargs="+", required=True, help="Sizes to evaluate.")
    asym_parser.add_argument("--k-m", type=float, default=1.0, help="Constant of the ratio estimate.")
    asym_parser.add_argument("--format", default="csv", choices=["csv", "json"])

    # 'prob' command
    prob_parser = subparsers.add_parser("prob", help="Prob(pattern in pi and not in g(k)).")
    prob_parser.add_argument("--pattern", type=_pattern_arg, required=True)
    prob_parser.add_argument("--n", type=int, required=True)
    ks = prob_parser.add_mutually_exclusive_group(required=True)
    ks.add_argument("--k", type=int)
    ks.add_argument("--k-sweep", action="store_true", help="Every k = 1..n.")
    prob_parser.add_argument("--method", default="series", choices=["exact", "asym", "series", "conditional"])
    prob_parser.add_argument("--denominator", default=DenominatorMethod.MEAN_SIZE.value,
                             choices=[d.value for d in DenominatorMethod],
                             help="Denominator model for --method conditional.")
    prob_parser.add_argument("--seq-file", default=None, help='File of "i count" lines for |Av_i(pattern)|.')
    prob_parser.add_argument("--terms", type=int, default=None, help="Series truncation.")
    prob_parser.add_argument("--verify-terms", type=int, default=0,
                             help="Re-count this many leading file terms by exhaustion.")
    prob_parser.add_argument("--format", default="csv", choices=["csv", "json"])

    # 'simulate' command
    simulate_parser = subparsers.add_parser("simulate", help="Seeded Monte Carlo estimates.")
    simulate_parser.add_argument("--pattern", type=_pattern_arg, required=True)
    simulate_parser.add_argument("--n", type=int, default=None)
    simulate_parser.add_argument("--n-from", type=int, default=None)
    simulate_parser.add_argument("--n-to", type=int, default=None)
    simulate_parser.add_argument("--k", type=int, default=None)
    simulate_parser.add_argument("--k-from", type=int, default=None)
    simulate_parser.add_argument("--k-to", type=int, default=None)
    simulate_parser.add_argument("--samples", type=int, default=None)
    simulate_parser.add_argument("--seed", type=int, default=None)
    simulate_parser.add_argument("--workers", type=int, default=None)
    simulate_parser.add_argument("--out", default="csv", choices=["csv", "json"])

    # 'oracle' command
    oracle_parser = subparsers.add_parser("oracle", help="Cross-check everything against brute force.")
    oracle_parser.add_argument("--check", default="all", choices=["all", *SUITES])
    oracle_parser.add_argument("--n-max", type=int, default=None,
                               help="Largest size to check (defaults to the configured ceiling).")
    oracle_parser.add_argument("--format", default="text", choices=["text", "csv", "json"])

    return parser


def _float_digits(config: Dict[str, Any]) -> int:
    return int(get_setting(config, "output.float_digits", 12))


def cmd_convert(args, config) -> str:
    if args.to_tree is not None:
        tree = phi_inverse(args.to_tree) if args.bijection == "phi" else psi_inverse(args.to_tree)
        return tree_to_text(tree) + "\n"
    tree = tree_from_text(args.to_perm)
    p = phi(tree) if tree.role is TreeRole.INCREASING else psi(tree)
    return f"{p}\n"


def cmd_subperm(args, config) -> str:
    records = all_sub_permutations(args.host) if args.k is None else [sub_permutation(args.host, args.k)]
    extra: Dict[str, Any] = {}
    if args.two_line:
        extra = {"two_line": two_line(args.host).to_dict(), "gamma_u": gamma_u(args.host)}

    if args.format == "json":
        payload = {"host": str(args.host), "sub_permutations": [r.to_dict() for r in records]}
        payload.update(extra)
        return json_document(payload)
    if args.format == "text":
        lines = [f"g({r.generator_value}) = {r.pattern}" for r in records]
        if extra:
            lines.append(f"lines {extra['two_line']['lines']} l={extra['two_line']['l']} "
                         f"v={extra['two_line']['v']} gamma_u={extra['gamma_u']}")
        return "\n".join(lines) + "\n"
    frame = pd.DataFrame(
        [
            {
                "k": r.generator_value,
                "start": r.window[0],
                "end": r.window[1],
                "size": r.size,
                "pattern": str(r.pattern),
            }
            for r in records
        ],
        columns=["k", "start", "end", "size", "pattern"],
    )
    return render_frame(frame, "csv", _float_digits(config))


def _require(value: Optional[int], flag: str, family: str) -> int:
    if value is None:
        raise InvalidInputError(f"--family {family} needs {flag}")
    return value


def cmd_count(args, config) -> str:
    family = Family(args.family)
    method = RecurrenceMethod(args.method)
    n_max = args.n_max
    if n_max < 0:
        raise InvalidInputError(f"--n-max must be non-negative, got {n_max}")
    logger.info(f"Counting {family.value} up to n={n_max}")

    if family is Family.CATALAN:
        table = catalan_table(n_max)
    elif family is Family.PJ:
        table = pj_coefficients(_require(args.j, "--j", family.value), n_max, method)
    elif family is Family.LJ:
        table = lj_coefficients(_require(args.m, "--m", family.value), n_max)
    elif family is Family.LJ_COMPLEMENT:
        table = lj_complement(_require(args.m, "--m", family.value), n_max, method)
    elif family is Family.M2:
        table = m2_table(n_max)
    elif family is Family.DYCK_AVOID:
        table = dyck_avoiding_table(_require(args.j, "--j", family.value), n_max)
    elif family is Family.GAMMA_U_BOUNDED:
        table = gamma_u_bounded_table(_require(args.j, "--j", family.value), n_max)
    else:
        table = motzkin_table(n_max)

    if args.format == "json":
        return json_document(table.to_dict())
    if args.format == "csv":
        return render_frame(table.to_frame(), "csv")
    return bfile_text(table.to_bfile_lines())


def cmd_asym(args, config) -> str:
    digits = _float_digits(config)
    if args.ratio is not None:
        frame = ratio_table(args.ratio, args.n, args.k_m)
        return render_frame(frame, args.format, digits)
    if args.expected_gamma:
        return render_frame(expected_gamma_table(args.n), args.format, digits)

    family = Family(args.family)
    index = 0 if family is Family.CATALAN else args.index
    precision = int(get_setting(config, "roots.precision_bits", 128))
    width = float(get_setting(config, "roots.bracket_width", 1e-20))
    params = dominant_root(family, index, precision, width)
    rows = []
    for n in args.n:
        rows.append(
            {
                "family": family.value,
                "index": index,
                "root": float(params.root),
                "residual": params.residual,
                "n": n,
                "estimate": float(asymptotic_coefficient(family, index, n, params, precision)),
            }
        )
    frame = pd.DataFrame(rows, columns=["family", "index", "root", "residual", "n", "estimate"])
    return render_frame(frame, args.format, digits)


def _prob_row(n: int, k: int, method: str, value: float, truncation: Optional[int]) -> Dict[str, Any]:
    return {"n": n, "k": k, "method": method, "value": value, "truncation": truncation}


def cmd_prob(args, config) -> str:
    pattern: Permutation = args.pattern
    n = args.n
    ks = list(range(1, n + 1)) if args.k_sweep else [args.k]
    for k in ks:
        if not 1 <= k <= n:
            raise InvalidInputError(f"k={k} is outside 1..{n}")

    rows = []
    if args.method == "exact":
        for k in ks:
            if pattern == PATTERN_213 and k == 2 and n >= 3:
                value = not_av_213_2_count(n) / math.factorial(n)
            else:
                value = float(exhaustive_not_avsk(pattern, n, k, oracle_ceiling(config)))
            rows.append(_prob_row(n, k, "exact", value, None))
    else:
        default_terms = "series.h_terms" if args.method == "asym" else "series.terms"
        terms = args.terms or int(get_setting(config, default_terms, 20))
        seq_file = args.seq_file or get_setting(config, "avoidance_sequences", {}).get(str(pattern))
        seq = resolve_sequence(pattern, terms, seq_file, args.verify_terms, oracle_ceiling(config))
        terms = min(terms, len(seq))
        for k in ks:
            if args.method == "asym":
                if k != 2:
                    raise InvalidInputError("--method asym covers k = 2 only")
                estimate = prob_not_avsk_asymptotic(seq, n, terms)
            elif args.method == "series":
                estimate = prob_not_avsk(seq, n, k, terms)
            else:
                estimate = conditional_presence(seq, n, k, DenominatorMethod(args.denominator), terms)
            rows.append(_prob_row(n, k, args.method, estimate.value, estimate.truncation))

    frame = pd.DataFrame(rows, columns=PROB_COLUMNS)
    return render_frame(frame, args.format, _float_digits(config))


def cmd_simulate(args, config) -> str:
    ns = _int_range(args.n_from, args.n_to, args.n, "n")
    ks = _int_range(args.k_from, args.k_to, args.k, "k")
    overrides = {"samples": args.samples, "seed": args.seed, "workers": args.workers}
    if len(ns) == 1:
        cfg = McConfig.from_config(config, ns[0], args.pattern, ks, **overrides)
        estimates = sweep(cfg)
    else:
        # validated at the largest n; smaller sizes drop the ks that do not fit
        cfg = McConfig.from_config(config, ns[-1], args.pattern, ks, **overrides)
        estimates = sweep_grid(cfg, ns)
    frame = estimates_frame(estimates)
    if args.out == "json":
        return json_document(
            {
                "pattern": str(args.pattern),
                "estimates": [e.to_dict() for e in estimates],
            }
        )
    return render_frame(frame, "csv", _float_digits(config))


def cmd_oracle(args, config) -> str:
    ceiling = oracle_ceiling(config) if args.n_max is None else args.n_max
    suites = list(SUITES) if args.check == "all" else [args.check]
    report = run_oracle_suite(ceiling, suites, config)
    if args.format == "json":
        text = json_document(report.to_dict())
    elif args.format == "csv":
        text = render_frame(report.to_frame(), "csv")
    else:
        text = report.summary() + "\n"
    if not report.passed:
        emit(text, args.output)
        raise AcceptanceCheckError(f"{len(report.failures)} oracle check(s) failed")
    return text


COMMANDS = {
    "convert": cmd_convert,
    "subperm": cmd_subperm,
    "count": cmd_count,
    "asym": cmd_asym,
    "prob": cmd_prob,
    "simulate": cmd_simulate,
    "oracle": cmd_oracle,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parses ``argv``, runs one subcommand and returns the exit status."""
    parser = build_parser()
    args = parser.parse_args(argv)

    logging.basicConfig(
        level=getattr(logging, args.log_level),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )

    try:
        config = load_config(args.config)
        text = COMMANDS[args.command](args, config)
    except SubpermError as e:
        print(f"Error: {e}", file=sys.stderr)
        return e.exit_code
    emit(text, args.output)
    return 0


def main():
    """Main function to run the subperm CLI."""
    # Load environment variables from .env file
    load_dotenv()
    sys.exit(run())


if __name__ == "__main__":
    main()
