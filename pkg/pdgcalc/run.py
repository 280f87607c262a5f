import argparse
import logging
import re
import sys
from collections import namedtuple
from dataclasses import dataclass
from typing import Optional

import pandas as pd

from pdgcalc.chifn.chifunction import dom_of, eval_chifn, monotonicity
from pdgcalc.chifn.regions import format_cut, format_region
from pdgcalc.chifn.solvers import (
    ALL_OF_DOMAIN, dominance_analysis, membership_solutions, zeros,
)
from pdgcalc.defsets.formulas import brute_force_agrees, formula_to_set
from pdgcalc.defsets.normalform import format_cardinality, format_set
from pdgcalc.errors import InvalidArgumentError, PdgError
from pdgcalc.extensions.cuts import ExtensionPlan, extend_zed
from pdgcalc.extensions.driver import classify_simple_extension
from pdgcalc.extensions.embedding import check_embedding
from pdgcalc.extensions.loose import adjoin_class
from pdgcalc.extensions.quotient import quotient
from pdgcalc.extensions.simple import delta_gamma
from pdgcalc.language.evaluate import eval_formula, eval_term
from pdgcalc.language.parser import (
    parse_chifunction, parse_element, parse_formula, parse_term,
)
from pdgcalc.model.group import ext_cmp, is_chi_set_point
from pdgcalc.model.modelfile import (
    dump_model, parse_position, resolve_model, save_model,
)
from pdgcalc.model.spec import Submodel
from pdgcalc.oracle.suite import (
    PROPERTY_NAMES, all_pass, axiom_suite, format_report,
)
from pdgcalc.oracle.window import DEFAULT_WINDOW, window_enum
from pdgcalc.piecewise.compose import term_to_piecewise
from pdgcalc.report.tables import (
    make_piecewise_table, make_record_table, make_set_table, render_table,
)

logger = logging.getLogger(__name__)

HANDLER_NAME = "pdgcalc-console"

CommandResult = namedtuple("CommandResult", ["text", "table", "code"])


@dataclass(frozen=True)
class CliConfig:
    """
    Settings shared by every subcommand

    Args:
        model_path (str): preset name or model file, None for the prime model
        window (int): oracle window size
        seed (int): seed for every random draw
        samples (int): draws per property of the axiom suite
        pool_size (int): worker processes for the suite, 0 runs inline
        json (bool): print json lines instead of text
    """
    model_path: Optional[str] = None
    window: int = DEFAULT_WINDOW
    seed: int = 0
    samples: int = 10000
    pool_size: int = 0
    json: bool = False

    @classmethod
    def from_args(cls, args):
        return cls(model_path=args.model, window=args.window, seed=args.seed,
                   samples=args.samples, pool_size=args.pool_size,
                   json=args.json)

    def load_model(self):
        return resolve_model(self.model_path)


def key_value_table(pairs):
    return pd.DataFrame([{"key": k, "value": v} for k, v in pairs],
                        columns=["key", "value"])


def key_value_result(pairs, code=0):
    table = key_value_table(pairs)
    return CommandResult(render_table(table), table, code)


# -- subcommands --------------------------------------------------------------

def cmd_order(config, model, args):
    x = parse_element(args.left, model)
    y = parse_element(args.right, model)
    result = ext_cmp(x, y).value
    return CommandResult(result, make_record_table(
        left=str(x), right=str(y), order=result), 0)


def cmd_eval(config, model, args):
    x = parse_element(args.at, model)
    if args.formula:
        value = "true" if eval_formula(parse_formula(args.expression, model),
                                       x, model) else "false"
    else:
        value = str(eval_term(parse_term(args.expression, model), x, model))
    return CommandResult(value, make_record_table(
        at=str(x), value=value), 0)


def _format_pairs(pairs):
    if pairs == ALL_OF_DOMAIN:
        return ALL_OF_DOMAIN
    if not pairs:
        return "none"
    return ", ".join("{} -> {}".format(x, v) for x, v in pairs)


def _format_points(points):
    if points == ALL_OF_DOMAIN:
        return ALL_OF_DOMAIN
    return ", ".join(str(x) for x in points) if points else "none"


def cmd_chifn(config, model, args):
    G = parse_chifunction(args.function, model)
    pairs = [("function", str(G))]
    if G.is_const:
        pairs.append(("monotonicity", monotonicity(G).value))
    else:
        domain = dom_of(G, model)
        profile = dominance_analysis(G, domain, model)
        pairs += [
            ("domain", format_region(model, domain)),
            ("monotonicity", monotonicity(G).value),
            ("threshold", format_cut(model, profile.threshold)),
            ("sign below", profile.sign_below),
            ("sign above", profile.sign_above),
            ("exceptions", _format_pairs(profile.exceptions)),
        ]
    pairs += [
        ("membership", _format_pairs(membership_solutions(G, model))),
        ("zeros", _format_points(zeros(G, model))),
    ]
    if args.at is not None:
        p = parse_element(args.at, model)
        if not is_chi_set_point(p):
            raise InvalidArgumentError("{} is not a chi-set point".format(p))
        pairs.append(("value", str(eval_chifn(G, p))))
    return key_value_result(pairs)


def cmd_piecewise(config, model, args):
    P = term_to_piecewise(parse_term(args.term, model), model)
    table = make_piecewise_table(P)
    return CommandResult(render_table(table), table, 0)


def cmd_defset(config, model, args):
    f = parse_formula(args.formula, model)
    S = formula_to_set(f, model)
    pairs = [("set", format_set(S)), ("cardinality", format_cardinality(S))]
    code = 0
    if args.verify:
        bad = brute_force_agrees(f, S, window_enum(model, config.window))
        if bad:
            code = 1
            pairs.append(("oracle", "disagree at {}".format(
                ", ".join(str(p) for p in bad))))
        else:
            pairs.append(("oracle", "agree"))
    table = make_set_table(S)
    text = "\n".join([pairs[0][1], pairs[1][1]] + [
        "{}: {}".format(k, v) for k, v in pairs[2:]])
    return CommandResult(text, table, code)


def _model_result(config, target, embedding=None, extra=()):
    pairs = [("model", target.describe())]
    code = 0
    if embedding is not None:
        report = check_embedding(embedding, seed=config.seed)
        pairs.append(("embedding", "ok" if report.ok else
                      "; ".join(report.violations)))
        code = 0 if report.ok else 1
    pairs += list(extra)
    table = key_value_table(pairs)
    text = dump_model(target) + render_table(table)
    return CommandResult(text, table, code)


def _save(target, args):
    if args.out:
        save_model(target, args.out)


def cmd_extend(config, model, args):
    target, inclusion = extend_zed(model, ExtensionPlan.of(args.plan))
    _save(target, args)
    return _model_result(config, target, inclusion)


def cmd_adjoin(config, model, args):
    gap = parse_position(args.at, model.chain_ids)
    succ = parse_position(args.succ, model.chain_ids)
    target = adjoin_class(model, gap, succ)
    _save(target, args)
    return _model_result(config, target)


def cmd_quotient(config, model, args):
    target, projection = quotient(model, args.keep)
    _save(target, args)
    extra = []
    if args.project is not None:
        extra.append(("projection", str(projection(
            parse_element(args.project, model)))))
    return _model_result(config, target, extra=extra)


def cmd_classify(config, model, args):
    chains = [model.chain_position(label) for label in args.sub]
    sub = Submodel.of(chains, args.sub_loose)
    a = parse_element(args.element, model)
    report = delta_gamma(model, sub, a)
    result = classify_simple_extension(model, sub, a)
    check = check_embedding(result.embedding, seed=config.seed)
    pairs = [
        ("delta", report.describe()),
        ("class", result.describe()),
        ("model", result.model.describe()),
        ("image", str(result.image)),
        ("embedding", "ok" if check.ok else "; ".join(check.violations)),
    ]
    return key_value_result(pairs, 0 if check.ok else 1)


def cmd_check(config, model, args):
    report = axiom_suite(model, samples=config.samples, seed=config.seed,
                         pool_size=config.pool_size, names=args.property)
    return CommandResult(format_report(report), report,
                         0 if all_pass(report) else 1)


COMMANDS = {
    "order": cmd_order,
    "eval": cmd_eval,
    "chifn": cmd_chifn,
    "piecewise": cmd_piecewise,
    "defset": cmd_defset,
    "extend": cmd_extend,
    "adjoin": cmd_adjoin,
    "quotient": cmd_quotient,
    "classify": cmd_classify,
    "check": cmd_check,
}


# -- argument parsing ---------------------------------------------------------

common = argparse.ArgumentParser(add_help=False)
common.add_argument('-v', '--verbose', action='count', default=0,
                    help="Logging verbosity level")
common.add_argument("--model",
                    help="preset name or model file, default: prime")
common.add_argument("--window",
                    type=int,
                    default=DEFAULT_WINDOW,
                    help="oracle window size")
common.add_argument("--seed",
                    type=int,
                    default=0,
                    help="seed for random draws")
common.add_argument("--samples",
                    type=int,
                    default=10000,
                    help="draws per property")
common.add_argument("--pool-size",
                    type=int,
                    default=0,
                    help="pool size for multiprocessing")
common.add_argument("--json",
                    action="store_true",
                    help="print json lines")

parser = argparse.ArgumentParser(prog="pdgcalc", description="""
Computes with models of the theory of divisible centripetal precontraction
groups with a discrete chi-set: exact arithmetic and chi, terms and
formulas in one variable, their piecewise normal forms on the chi-set,
definable sets, model extensions and an axiom oracle.
""")
subparsers = parser.add_subparsers(dest="command")
subparsers.required = True

sub = subparsers.add_parser("order", parents=[common],
                            help="compare two elements")
sub.add_argument("left")
sub.add_argument("right")

sub = subparsers.add_parser("eval", parents=[common],
                            help="evaluate a term or formula")
sub.add_argument("expression")
sub.add_argument("--at", required=True, help="value of x")
sub.add_argument("--formula", action="store_true",
                 help="the expression is a formula")

sub = subparsers.add_parser("chifn", parents=[common],
                            help="analyse a chi-function")
sub.add_argument("function")
sub.add_argument("--at", help="chi-set point to evaluate at")

sub = subparsers.add_parser("piecewise", parents=[common],
                            help="piecewise form of a term on the chi-set")
sub.add_argument("term")

sub = subparsers.add_parser("defset", parents=[common],
                            help="normal form of a definable set")
sub.add_argument("formula")
sub.add_argument("--verify", action="store_true",
                 help="compare with pointwise evaluation on the window")

sub = subparsers.add_parser("extend", parents=[common],
                            help="insert Z-chains at special cuts")
sub.add_argument("plan", type=int, nargs="*", help="cut of each new chain")
sub.add_argument("--out", help="write the model file here")

sub = subparsers.add_parser("adjoin", parents=[common],
                            help="adjoin a loose class inside a chain")
sub.add_argument("--at", required=True, help="position, e.g. e9/2")
sub.add_argument("--succ", required=True, help="class of chi, e.g. e5")
sub.add_argument("--out", help="write the model file here")

sub = subparsers.add_parser("quotient", parents=[common],
                            help="keep a prefix of the chains")
sub.add_argument("--keep", type=int, required=True,
                 help="number of chains to keep")
sub.add_argument("--project", help="element to project")
sub.add_argument("--out", help="write the model file here")

sub = subparsers.add_parser("classify", parents=[common],
                            help="classify a simple extension")
sub.add_argument("element")
sub.add_argument("--sub", type=int, nargs="*", default=[],
                 help="Z-chain ids of the submodel (Omega is implied)")
sub.add_argument("--sub-loose", type=int, nargs="*", default=[],
                 help="loose class names of the submodel")

sub = subparsers.add_parser("check", parents=[common],
                            help="run the axiom suite")
sub.add_argument("--property", action="append", choices=PROPERTY_NAMES,
                 help="run only this property")

OPTION_RE = re.compile(r"^-(?:-[a-z-]+(?:=.*)?|v+|h)$")


def protect_values(argv):
    """
    argparse reads a value like ``-e2`` as an unknown option; a leading
    space makes it a plain argument and the parsers skip it
    """
    return [" " + arg if arg.startswith("-") and not OPTION_RE.match(arg)
            else arg for arg in argv]


def configure_logging(verbose):
    # Set up the root logger to log everything, we will filter with handlers
    rootLogger = logging.getLogger()
    rootLogger.setLevel(logging.DEBUG)
    for handler in list(rootLogger.handlers):
        if handler.get_name() == HANDLER_NAME:
            rootLogger.removeHandler(handler)
    consoleHandler = logging.StreamHandler(stream=sys.stderr)
    consoleHandler.set_name(HANDLER_NAME)
    consoleHandler.setFormatter(logging.Formatter())

    v_count = verbose if verbose < 3 else 3
    # set the error level for the console handler
    # 0 - ERROR, 1 - WARNING, 2 - INFO, 3 - DEBUG
    consoleHandler.setLevel(logging.ERROR - (10 * v_count))
    rootLogger.addHandler(consoleHandler)


def run(argv=None):
    """
    Runs one subcommand

    Args:
        argv (list(str)): arguments without the program name

    Returns:
        int: 0 on success, 1 on a domain error or failed check, 2 on a
            usage error
    """
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = parser.parse_args(protect_values(argv))
    except SystemExit as e:
        return e.code
    configure_logging(args.verbose)
    config = CliConfig.from_args(args)
    logger.debug("Running {} with {}".format(args.command, config))

    try:
        model = config.load_model()
        result = COMMANDS[args.command](config, model, args)
    except PdgError as e:
        logger.debug("{} failed".format(args.command), exc_info=True)
        sys.stderr.write("error: {}\n".format(e))
        return 1

    text = render_table(result.table, json=True) if config.json \
        else result.text
    sys.stdout.write(text + "\n")
    return result.code


if __name__ == "__main__":
    sys.exit(run())
