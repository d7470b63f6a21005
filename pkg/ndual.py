import argparse
import faulthandler
import logging.config
import os.path
import sys
from pathlib import Path
from typing import Callable, Optional

import sentry_sdk
import yaml
from sentry_sdk.integrations.logging import LoggingIntegration

from newtondual.core.betti import BettiTable
from newtondual.core.cellres import (
    FreeComplex,
    LabeledCellComplex,
    betti_from_complex,
    build_borel_complex,
    build_planar_complex,
    free_complex,
)
from newtondual.core.duals import (
    DualComparison,
    ExponentBound,
    compare_squarefree_duals,
    exponent_bound,
    generalized_dual,
    is_a_determined,
    newton_bound,
    verify_alex_dual,
)
from newtondual.core.ferrers import ShiftedDiagram, diagram_from_ideal, removal_order
from newtondual.core.homology import Field, betti_oracle
from newtondual.core.monomials import MonomialIdeal, format_monomial
from newtondual.core.stability import (
    LinearQuotientsResult,
    OrderedGenerators,
    check_linear_quotients,
    colex_order,
    dual_order,
)
from newtondual.core.toric import ToricRelation, fiber_relations
from newtondual.exceptions import (
    AmbientMismatchException,
    DisconnectedDiagramException,
    EmptyGraphException,
    IncidenceException,
    IncompatibleDiagramException,
    InvalidPartitionException,
    NonMinimalException,
    NotDeterminedException,
    NotEquigeneratedException,
    NotSquarefreeException,
    NotStableException,
    ParseException,
    ScaleGuardException,
    SpecializationException,
    TrivialIdealException,
)
from newtondual.helpers.svg import write_svg
from newtondual.helpers.utilities import dump_document, elapsedtime
from newtondual.records.betti import create_betti_document, format_betti_text
from newtondual.records.cellcomplex import create_complex_document
from newtondual.records.ideal import (
    IdealDocument,
    bound_from_document,
    create_ideal_document,
    graph_from_document,
    ideal_from_document,
    parse_ideal,
)
from newtondual.records.relations import create_relations_document
from newtondual.verify_borel import check_borel_resolution, verify_borel
from newtondual.verify_duals import verify_duals
from newtondual.verify_fields import verify_fields
from newtondual.verify_planar import check_planar_resolution, verify_planar
from newtondual.verify_stability import verify_stability
from newtondual.verify_toric import verify_toric

faulthandler.enable()

Path("logs").mkdir(exist_ok=True)
log_config: dict = yaml.full_load(open(Path(__file__).parent / "logging.yml"))  # noqa: SIM115

logging.config.dictConfig(log_config)
log = logging.getLogger("newtondual")

EXIT_SUCCESS: int = 0
EXIT_FAILED: int = 1
EXIT_USAGE: int = 2

# Inputs that the requested computation does not accept.
USAGE_ERRORS: tuple[type[Exception], ...] = (
    ParseException,
    AmbientMismatchException,
    TrivialIdealException,
    NotDeterminedException,
    NotEquigeneratedException,
    NotStableException,
    NotSquarefreeException,
    InvalidPartitionException,
    DisconnectedDiagramException,
    IncompatibleDiagramException,
    EmptyGraphException,
    SpecializationException,
    ScaleGuardException,
)

SUITES: dict[str, Callable[[dict], bool]] = {
    "duals": verify_duals,
    "stability": verify_stability,
    "borel": verify_borel,
    "planar": verify_planar,
    "toric": verify_toric,
    "fields": verify_fields,
}


def read_document(source: str) -> IdealDocument:
    if source == "-":
        return parse_ideal(sys.stdin.read())
    return parse_ideal(Path(source).read_text(encoding="utf-8"))


def choose_bound(doc: IdealDocument, ideal: MonomialIdeal, flag: Optional[list[int]]) -> ExponentBound:
    """The --bound flag wins over the document's bound; without either the Newton bound is used."""
    if flag is not None:
        return exponent_bound(flag)
    bound: Optional[ExponentBound] = bound_from_document(doc)
    if bound is not None:
        return bound
    return newton_bound(ideal)


def emit(cfg: dict, document: object) -> None:
    sys.stdout.write(dump_document(document, cfg["output"]["indent"]) + "\n")


def emit_text(lines: list[str]) -> None:
    sys.stdout.write("\n".join(lines) + "\n")


def build_complex(mode: str, ideal: MonomialIdeal, bound: ExponentBound) -> LabeledCellComplex:
    if mode == "planar":
        return build_planar_complex(diagram_from_ideal(ideal), bound)
    return build_borel_complex(ideal, bound)


def run_dual(cfg: dict, args: argparse.Namespace) -> int:
    doc: IdealDocument = read_document(args.input)
    ideal: MonomialIdeal = ideal_from_document(doc)
    bound: ExponentBound = choose_bound(doc, ideal, args.bound)
    dual: MonomialIdeal = generalized_dual(ideal, bound)

    if cfg["text"]:
        emit_text([format_monomial(g, doc["variables"]) for g in dual.generators])
    else:
        emit(cfg, create_ideal_document(dual, doc["variables"], doc["blocks"], bound))
    return EXIT_SUCCESS


def run_betti(cfg: dict, args: argparse.Namespace) -> int:
    doc: IdealDocument = read_document(args.input)
    ideal: MonomialIdeal = ideal_from_document(doc)
    if args.dual:
        ideal = generalized_dual(ideal, choose_bound(doc, ideal, args.bound))

    oracle: dict = cfg["oracle"]
    table: BettiTable = betti_oracle(ideal, oracle["field"], oracle["workers"], oracle["max_generators"])

    if cfg["text"]:
        emit_text([format_betti_text(table)])
    else:
        emit(cfg, create_betti_document(table))
    return EXIT_SUCCESS


def run_resolve(cfg: dict, args: argparse.Namespace) -> int:
    doc: IdealDocument = read_document(args.input)
    ideal: MonomialIdeal = ideal_from_document(doc)
    bound: ExponentBound = choose_bound(doc, ideal, args.bound)

    cx: LabeledCellComplex = build_complex(args.mode, ideal, bound)
    fc: FreeComplex = free_complex(cx)
    table: BettiTable = betti_from_complex(fc)

    res: bool = True
    if args.check:
        field: Field = cfg["oracle"]["field"]
        workers: int = cfg["oracle"]["workers"]
        if args.mode == "planar":
            res &= check_planar_resolution(diagram_from_ideal(ideal), bound, field, workers)
        else:
            res &= check_borel_resolution(ideal, field, workers, bound)
        log.info("The %s complex %s the oracle check.", args.mode, "passed" if res else "failed")

    if cfg["text"]:
        emit_text([format_betti_text(table)])
    else:
        document: dict = {"complex": create_complex_document(cx, fc), "betti": create_betti_document(table)}
        if args.check:
            document["verified"] = res
        emit(cfg, document)

    return EXIT_SUCCESS if res else EXIT_FAILED


def run_linear_quotients(cfg: dict, args: argparse.Namespace) -> int:
    doc: IdealDocument = read_document(args.input)
    ideal: MonomialIdeal = ideal_from_document(doc)
    bound: ExponentBound = choose_bound(doc, ideal, args.bound)
    if not is_a_determined(ideal, bound):
        raise NotDeterminedException(f"{ideal} is not determined by the bound {bound}.")

    base: OrderedGenerators
    if args.order == "removal":
        diag: ShiftedDiagram = diagram_from_ideal(ideal)
        base = removal_order(diag, ideal.n)
    else:
        base = colex_order(ideal)

    og: OrderedGenerators = dual_order(base, bound)
    result: LinearQuotientsResult = check_linear_quotients(og)

    if cfg["text"]:
        lines: list[str] = [format_monomial(g, doc["variables"]) for g in og.order]
        lines.append("linear quotients" if result.ok else f"fails at generator {result.failed_at}")
        emit_text(lines)
    else:
        emit(
            cfg,
            {
                "order": args.order,
                "generators": [list(g.exponents) for g in og.order],
                "ok": result.ok,
                "colons": [sorted(c) for c in result.colons],
                "failed_at": result.failed_at,
                "offending": list(result.offending.exponents) if result.offending is not None else None,
            },
        )

    return EXIT_SUCCESS if result.ok else EXIT_FAILED


def run_alexander_compare(cfg: dict, args: argparse.Namespace) -> int:
    doc: IdealDocument = read_document(args.input)

    comparison: DualComparison
    if doc["blocks"] is not None:
        comparison = verify_alex_dual(graph_from_document(doc))
    else:
        comparison = compare_squarefree_duals(ideal_from_document(doc))

    if cfg["text"]:
        emit_text(
            [
                f"newton dual: {comparison.newton_dual}",
                f"alexander dual: {comparison.alexander_dual}",
                "equal" if comparison.equal else "different",
            ]
        )
    else:
        emit(
            cfg,
            {
                "equal": comparison.equal,
                "newton_dual": [list(g.exponents) for g in comparison.newton_dual.generators],
                "alexander_dual": [list(g.exponents) for g in comparison.alexander_dual.generators],
                "complement": [list(g.exponents) for g in comparison.complement.generators],
            },
        )

    return EXIT_SUCCESS if comparison.equal else EXIT_FAILED


def run_fiber_relations(cfg: dict, args: argparse.Namespace) -> int:
    doc: IdealDocument = read_document(args.input)
    ideal: MonomialIdeal = ideal_from_document(doc)
    degree_cap: int = cfg["toric"]["degree_cap"]

    rels: tuple[ToricRelation, ...] = fiber_relations(ideal, degree_cap, max_products=cfg["toric"]["max_products"])
    log.info("Found %s relations of degree at most %s.", len(rels), degree_cap)

    if cfg["text"]:
        emit_text([str(rel) for rel in rels])
    else:
        emit(cfg, create_relations_document(rels, degree_cap))
    return EXIT_SUCCESS


def run_verify(cfg: dict, args: argparse.Namespace) -> int:
    suites: list[str] = list(SUITES) if args.suite == "all" else [args.suite]

    res: bool = True
    for suite in suites:
        outcome: bool = SUITES[suite](cfg)
        log.info("Suite %s %s.", suite, "passed" if outcome else "failed")
        res &= outcome

    if not res:
        log.error("Verification failed.")
    else:
        log.info("Verification successful.")

    return EXIT_SUCCESS if res else EXIT_FAILED


def run_export_svg(cfg: dict, args: argparse.Namespace) -> int:
    doc: IdealDocument = read_document(args.input)
    ideal: MonomialIdeal = ideal_from_document(doc)
    bound: ExponentBound = choose_bound(doc, ideal, args.bound)

    cx: LabeledCellComplex = build_complex(args.mode, ideal, bound)
    write_svg(cx, args.output, doc["variables"])
    return EXIT_SUCCESS


COMMANDS: dict[str, Callable[[dict, argparse.Namespace], int]] = {
    "dual": run_dual,
    "betti": run_betti,
    "resolve": run_resolve,
    "check-linear-quotients": run_linear_quotients,
    "alexander-compare": run_alexander_compare,
    "fiber-relations": run_fiber_relations,
    "verify": run_verify,
    "export-svg": run_export_svg,
}


@elapsedtime
def main(args: argparse.Namespace) -> int:
    cfg_filename: str = "./ndual_config.yml" if not args.config else args.config

    log.info("Using %s as the configuration file.", cfg_filename)

    if not os.path.exists(cfg_filename):
        log.fatal("Could not find config file %s.", cfg_filename)
        return EXIT_USAGE

    cfg: dict = yaml.full_load(open(cfg_filename))  # noqa: SIM115

    # Set up sentry logging
    sentry_logging = LoggingIntegration(
        level=logging.ERROR,
        event_level=logging.ERROR,
    )

    version: str = str(cfg["common"]["version"])
    release: str = version[1:] if version.startswith("v") else version

    debug_mode: bool = cfg["common"]["debug"]
    if debug_mode is False and cfg["sentry"]["dsn"]:
        sentry_sdk.init(
            dsn=cfg["sentry"]["dsn"],
            environment=cfg["sentry"]["environment"],
            integrations=[sentry_logging],
            release=f"newtondual@{release}",
        )

    # Command-line flags override the configuration file.
    cfg.update({"text": args.text})
    if args.field:
        cfg["oracle"]["field"] = args.field
    if args.workers:
        cfg["oracle"]["workers"] = args.workers
    if getattr(args, "degree_cap", None):
        cfg["toric"]["degree_cap"] = args.degree_cap
    if getattr(args, "max_points", None):
        cfg["sweeps"]["max_points"] = args.max_points

    try:
        return COMMANDS[args.command](cfg, args)
    except FileNotFoundError as e:
        log.fatal("Could not read the input: %s", e)
        return EXIT_USAGE
    except USAGE_ERRORS as e:
        log.error("%s: %s", type(e).__name__, e)
        return EXIT_USAGE
    except (IncidenceException, NonMinimalException) as e:
        log.error("The complex is not a minimal free complex: %s", e)
        return EXIT_FAILED


def bound_argument(value: str) -> list[int]:
    try:
        values: list[int] = [int(v) for v in value.split(",")]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"'{value}' is not a comma-separated list of integers.") from e
    if any(v < 0 for v in values):
        raise argparse.ArgumentTypeError(f"'{value}' has a negative entry.")
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ndual", description="Generalized Newton complementary duals.")
    parser.add_argument(
        "-c",
        "--config",
        dest="config",
        help="Path to a config file; default is ./ndual_config.yml.",
    )
    parser.add_argument("--text", action="store_true", help="Print plain text instead of a structured document")
    parser.add_argument("--field", choices=["Q", "F2"], help="Coefficient field of the homology oracle")
    parser.add_argument("-w", "--workers", type=int, help="Worker processes for the homology oracle")

    subparsers = parser.add_subparsers(dest="command", required=True)

    def with_input(name: str, help_text: str) -> argparse.ArgumentParser:
        sub = subparsers.add_parser(name, help=help_text)
        sub.add_argument("input", help="Ideal document, or '-' for standard input")
        sub.add_argument("--bound", type=bound_argument, help="Exponent bound, e.g. 5,6")
        return sub

    with_input("dual", "Compute the dual with respect to a bound")

    betti = with_input("betti", "Multigraded Betti numbers from the homology oracle")
    betti.add_argument("--dual", action="store_true", help="Take the Betti numbers of the dual instead")

    resolve = with_input("resolve", "Build the cellular resolution of the dual")
    resolve.add_argument("--mode", choices=["borel", "planar"], default="borel")
    resolve.add_argument("--check", action="store_true", help="Compare against the homology oracle")

    lq = with_input("check-linear-quotients", "Test the dual generators for linear quotients")
    lq.add_argument("--order", choices=["colex", "removal"], default="colex")

    subparsers.add_parser("alexander-compare", help="Newton dual against the Alexander dual").add_argument(
        "input", help="Ideal document, or '-' for standard input"
    )

    fiber = subparsers.add_parser("fiber-relations", help="Relations of the special fiber ring")
    fiber.add_argument("input", help="Ideal document, or '-' for standard input")
    fiber.add_argument("--degree-cap", dest="degree_cap", type=int, help="Highest relation degree")

    verify = subparsers.add_parser("verify", help="Run the verification suites")
    verify.add_argument("--suite", choices=["all", *SUITES], default="all")
    verify.add_argument("--max-points", dest="max_points", type=int, help="Largest diagram in the planar sweep")

    svg = with_input("export-svg", "Draw the complex as SVG")
    svg.add_argument("--mode", choices=["borel", "planar"], default="planar")
    svg.add_argument("-o", "--output", required=True, help="SVG file to write")

    return parser


if __name__ == "__main__":
    input_args: argparse.Namespace = build_parser().parse_args()

    try:
        code: int = main(input_args)
    except Exception as e:
        log.critical("Main method raised an exception and could not continue: %s", e)
        code = EXIT_FAILED

    if code == EXIT_SUCCESS:
        # Exit with status 0 (success).
        faulthandler.disable()
        sys.exit()
    sys.exit(code)
