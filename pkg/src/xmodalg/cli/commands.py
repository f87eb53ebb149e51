"""Argument parsing and verb dispatch for the ``xmodalg`` command."""

from __future__ import annotations

import argparse
import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import TYPE_CHECKING, Any

from rich.console import Console
from rich.logging import RichHandler

from xmodalg.catcheck import (
    check_adjunction_alg,
    check_adjunction_pullback_induced,
    check_cartesian,
    check_cocartesian,
    check_free_2xmod,
    check_free_module,
    check_induced_naturality,
    check_pullback_naturality,
    enum_2x_morphisms,
    enum_alg_morphisms,
    enum_xmod_morphisms,
    twoxmod_family,
)
from xmodalg.cli.output import print_error, print_homset, print_report
from xmodalg.cli.workspace import (
    Workspace,
    dump_object,
    load_family,
    load_object,
    load_vectors,
    write_family,
    write_object,
)
from xmodalg.constructions import induced_2xmod_epi, induced_xmod_epi, pullback_2xmod
from xmodalg.core.algebra import check_action, kernel_image
from xmodalg.exceptions import InvalidInputError, XmodError, exit_code_for
from xmodalg.models.report import Report
from xmodalg.models.xmod import CrossedModule
from xmodalg.settings import Settings
from xmodalg.x2mod import (
    check_2morphism,
    check_2xmod,
    functor_alpha,
    functor_beta,
    functor_sk,
    functor_tr,
)
from xmodalg.xmod import check_crossed, check_precrossed, check_xmod_morphism, pullback_xmod

if TYPE_CHECKING:
    from collections.abc import Callable, Sequence

    from pydantic import BaseModel

    from xmodalg.models.results import HomSet

logger = logging.getLogger(__name__)


@dataclass
class Outcome:
    """What a verb produced: reports, an object to emit and extra JSON data."""

    reports: list[Report] = field(default_factory=list)
    output: BaseModel | None = None
    homset: HomSet | None = None
    extra: dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        """Whether every report passed."""
        return all(report.ok for report in self.reports)


def _crossed(value: Any) -> CrossedModule:
    return value if isinstance(value, CrossedModule) else CrossedModule.from_precrossed(value)


def cmd_check(args: argparse.Namespace, ws: Workspace, settings: Settings) -> Outcome:
    """Run the axiom suite matching the object kind."""
    loaded = ws.bind("object", load_object(args.file))
    value = loaded.value
    if loaded.kind == "algebra":
        report = Report(subject="algebra", stats={"dim": value.dim, "unital": value.is_unital})
    elif loaded.kind == "morphism":
        found = kernel_image(value)
        report = Report(
            subject="morphism",
            stats={
                "kernel_dim": found.kernel.dim,
                "image_dim": found.image.dim,
                "mono": found.is_mono,
                "epi": found.is_epi,
            },
        )
    elif loaded.kind == "action":
        report = check_action(value)
    elif loaded.kind == "xmod":
        report = check_crossed(value)
    elif loaded.kind == "x2mod":
        report = check_2xmod(value)
    elif loaded.kind == "xmorphism":
        report = check_xmod_morphism(value.morphism, value.source, value.target)
    else:
        report = check_2morphism(value.morphism, value.source, value.target)
    return Outcome(reports=[report], extra={"kind": loaded.kind})


def cmd_pullback(args: argparse.Namespace, ws: Workspace, settings: Settings) -> Outcome:
    """Pull a crossed or 2-crossed module back along a morphism."""
    phi = ws.load(args.phi, "phi", ("morphism",))
    X = ws.load(args.x, "x", ("xmod", "x2mod"))
    if ws.bindings["x"].kind == "xmod":
        crossed = _crossed(X)
        pulled = pullback_xmod(phi, crossed)
        reports = [
            check_crossed(pulled.result),
            check_xmod_morphism(pulled.projection, pulled.result, crossed),
        ]
        return Outcome(reports=reports, output=pulled.result)
    result = pullback_2xmod(phi, X)
    reports = [
        check_2xmod(result.result),
        check_2morphism(result.canonical, result.result, X),
    ]
    return Outcome(reports=reports, output=result.result)


def cmd_induce(args: argparse.Namespace, ws: Workspace, settings: Settings) -> Outcome:
    """Induce a crossed or 2-crossed module along an epimorphism."""
    phi = ws.load(args.phi, "phi", ("morphism",))
    D = ws.load(args.d, "d", ("xmod", "x2mod"))
    if ws.bindings["d"].kind == "xmod":
        result = induced_xmod_epi(phi, _crossed(D))
        return Outcome(reports=[check_crossed(result)], output=result)
    induced = induced_2xmod_epi(phi, D)
    reports = [
        check_2xmod(induced.result),
        check_2morphism(induced.canonical, D, induced.result),
    ]
    return Outcome(reports=reports, output=induced.result)


def cmd_homs(args: argparse.Namespace, ws: Workspace, settings: Settings) -> Outcome:
    """Enumerate the morphisms between two objects of the same kind."""
    kinds = ("algebra", "xmod", "x2mod")
    source = ws.load(args.source, "source", kinds)
    target = ws.load(args.target, "target", kinds)
    kind = ws.bindings["source"].kind
    if ws.bindings["target"].kind != kind:
        msg = "source and target must be objects of the same kind"
        raise InvalidInputError(msg)
    base = ws.load(args.base, "base", ("morphism",)) if args.base else None
    middle = ws.load(args.middle, "middle", ("morphism",)) if args.middle else None
    if kind == "algebra":
        if base is not None or middle is not None:
            msg = "--base and --middle apply to crossed and 2-crossed modules only"
            raise InvalidInputError(msg)
        homs = enum_alg_morphisms(source, target, settings)
    elif kind == "xmod":
        if middle is not None:
            msg = "--middle applies to 2-crossed modules only"
            raise InvalidInputError(msg)
        homs = enum_xmod_morphisms(source, target, base, settings)
    else:
        homs = enum_2x_morphisms(source, target, base, middle, settings)
    report = Report(subject=f"homs.{kind}", stats={"count": len(homs)})
    return Outcome(reports=[report], homset=homs)


def cmd_adjoint(args: argparse.Namespace, ws: Workspace, settings: Settings) -> Outcome:
    """Check one of the adjunctions on enumerated hom-sets."""
    if args.algebra:
        if not args.x:
            msg = "--algebra needs --x"
            raise InvalidInputError(msg)
        X = ws.load(args.x, "x", ("x2mod",))
        R = ws.load(args.algebra, "algebra", ("algebra",))
        return Outcome(reports=[check_adjunction_alg(X, R, settings)])
    if not (args.phi and args.d and args.b):
        msg = "adjoint needs either --phi, --d and --b or --x and --algebra"
        raise InvalidInputError(msg)
    phi = ws.load(args.phi, "phi", ("morphism",))
    D = ws.load(args.d, "d", ("x2mod",))
    B = ws.load(args.b, "b", ("x2mod",))
    return Outcome(reports=[check_adjunction_pullback_induced(phi, D, B, settings)])


def _fibration(check: Callable[..., Report]) -> Callable[..., Outcome]:
    def handler(args: argparse.Namespace, ws: Workspace, settings: Settings) -> Outcome:
        bundle = ws.load(args.f, "f", ("x2morphism",))
        family = load_family(args.family)
        report = check(bundle.morphism, bundle.source, bundle.target, family, settings)
        return Outcome(reports=[report], extra={"family": family.name, "members": len(family)})

    handler.__doc__ = check.__doc__
    return handler


def cmd_free(args: argparse.Namespace, ws: Workspace, settings: Settings) -> Outcome:
    """Check the universal property of a 2-crossed module with a basis."""
    X = ws.load(args.x, "x", ("x2mod",))
    theta = [X.L.element(vector) for vector in load_vectors(args.theta)]
    targets = load_family(args.targets)
    return Outcome(reports=[check_free_2xmod(X, theta, targets, settings)])


def cmd_free_module(args: argparse.Namespace, ws: Workspace, settings: Settings) -> Outcome:
    """Check that an action makes its acted algebra a free module."""
    action = ws.load(args.action, "action", ("action",))
    basis = [action.acted.element(vector) for vector in load_vectors(args.basis)]
    return Outcome(reports=[check_free_module(action.acted, action, basis)])


def cmd_naturality(args: argparse.Namespace, ws: Workspace, settings: Settings) -> Outcome:
    """Compare stepwise and direct base change along two morphisms."""
    phi = ws.load(args.phi, "phi", ("morphism",))
    phi_prime = ws.load(args.phi_prime, "phi_prime", ("morphism",))
    X = ws.load(args.x, "x", ("x2mod",))
    check = check_induced_naturality if args.mode == "induced" else check_pullback_naturality
    return Outcome(reports=[check(phi, phi_prime, X, settings)])


def cmd_sk(args: argparse.Namespace, ws: Workspace, settings: Settings) -> Outcome:
    """Skeleton 2-crossed module of a pre-crossed module."""
    result = functor_sk(ws.load(args.file, "object", ("xmod",)))
    return Outcome(reports=[check_2xmod(result)], output=result)


def cmd_tr(args: argparse.Namespace, ws: Workspace, settings: Settings) -> Outcome:
    """Truncation of a 2-crossed module to its pre-crossed module."""
    result = functor_tr(ws.load(args.file, "object", ("x2mod",)))
    return Outcome(reports=[check_precrossed(result)], output=result)


def cmd_alpha(args: argparse.Namespace, ws: Workspace, settings: Settings) -> Outcome:
    """2-crossed module {0, C, R, 0, d} of a crossed module."""
    result = functor_alpha(ws.load(args.file, "object", ("xmod",)))
    return Outcome(reports=[check_2xmod(result)], output=result)


def cmd_beta(args: argparse.Namespace, ws: Workspace, settings: Settings) -> Outcome:
    """Crossed module M / Im d2 -> P of a 2-crossed module."""
    result = functor_beta(ws.load(args.file, "object", ("x2mod",)))
    return Outcome(reports=[check_crossed(result)], output=result)


def cmd_catalog(args: argparse.Namespace, ws: Workspace, settings: Settings) -> Outcome:
    """Write the catalog family as a directory of 2-crossed module files."""
    if args.output is None:
        msg = "catalog needs -o <directory>"
        raise InvalidInputError(msg)
    family = twoxmod_family(args.prime, args.max_dim, settings)
    paths = write_family(family, args.output)
    report = Report(subject="catalog", stats={"members": len(family)})
    return Outcome(reports=[report], extra={"files": [str(path) for path in paths]})


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="Emit a machine-readable report.")
    common.add_argument("--limit", type=int, help="Largest search space enumerated.")
    common.add_argument("--workers", type=int, help="Worker processes for enumeration.")
    common.add_argument("-o", "--output", type=Path, help="Where to write the result.")
    common.add_argument(
        "-v", "--verbose", action="count", default=0, help="Log progress; repeat for debug."
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser with one subcommand per verb."""
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="xmodalg",
        description="Crossed modules and 2-crossed modules of algebras over F_p.",
    )
    verbs = parser.add_subparsers(dest="command", required=True)

    def verb(name: str, handler: Callable[..., Outcome], text: str) -> argparse.ArgumentParser:
        sub = verbs.add_parser(name, parents=[common], help=text, description=text)
        sub.set_defaults(handler=handler)
        return sub

    sub = verb("check", cmd_check, "Run the axiom suite for an object file.")
    sub.add_argument("file", type=Path)

    sub = verb("pullback", cmd_pullback, "Pull back along a monomorphism.")
    sub.add_argument("--phi", type=Path, required=True)
    sub.add_argument("--x", type=Path, required=True)

    sub = verb("induce", cmd_induce, "Induce along an epimorphism.")
    sub.add_argument("--phi", type=Path, required=True)
    sub.add_argument("--d", type=Path, required=True)

    sub = verb("homs", cmd_homs, "Enumerate morphisms between two objects.")
    sub.add_argument("source", type=Path)
    sub.add_argument("target", type=Path)
    sub.add_argument("--base", type=Path)
    sub.add_argument("--middle", type=Path)

    sub = verb("adjoint", cmd_adjoint, "Check an adjunction element by element.")
    for flag in ("--phi", "--d", "--b", "--x", "--algebra"):
        sub.add_argument(flag, type=Path)

    for name, check in (("cartesian", check_cartesian), ("cocartesian", check_cocartesian)):
        sub = verb(name, _fibration(check), f"Check that a morphism is {name}.")
        sub.add_argument("--f", type=Path, required=True)
        sub.add_argument("--family", type=Path, required=True)

    sub = verb("free", cmd_free, "Check freeness of a 2-crossed module.")
    sub.add_argument("--x", type=Path, required=True)
    sub.add_argument("--theta", type=Path, required=True)
    sub.add_argument("--targets", type=Path, required=True)

    sub = verb("free-module", cmd_free_module, "Check that a module is free.")
    sub.add_argument("--action", type=Path, required=True)
    sub.add_argument("--basis", type=Path, required=True)

    sub = verb("naturality", cmd_naturality, "Check naturality of base change.")
    sub.add_argument("--phi", type=Path, required=True)
    sub.add_argument("--phi-prime", type=Path, required=True)
    sub.add_argument("--x", type=Path, required=True)
    sub.add_argument("--mode", choices=("pullback", "induced"), default="pullback")

    for name, handler, text in (
        ("sk", cmd_sk, "Skeleton 2-crossed module of a pre-crossed module."),
        ("tr", cmd_tr, "Truncate a 2-crossed module."),
        ("alpha", cmd_alpha, "Embed a crossed module as a 2-crossed module."),
        ("beta", cmd_beta, "Crossed module of a 2-crossed module."),
    ):
        sub = verb(name, handler, text)
        sub.add_argument("file", type=Path)

    sub = verb("catalog", cmd_catalog, "Write the catalog family to a directory.")
    sub.add_argument("--prime", type=int, default=2)
    sub.add_argument("--max-dim", type=int, default=1)
    return parser


def configure_logging(verbosity: int) -> None:
    """Send log records to stderr through rich."""
    level = (logging.WARNING, logging.INFO, logging.DEBUG)[min(verbosity, 2)]
    logging.basicConfig(
        level=level,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=Console(stderr=True), show_path=False)],
        force=True,
    )


def _emit(args: argparse.Namespace, outcome: Outcome, code: int, console: Console) -> None:
    if outcome.output is not None and args.output is not None:
        write_object(outcome.output, args.output)
    if args.json:
        payload: dict[str, Any] = {
            "exit_code": code,
            "reports": [report.model_dump(mode="json") for report in outcome.reports],
            **outcome.extra,
        }
        if outcome.output is not None and args.output is None:
            payload["object"] = json.loads(dump_object(outcome.output))
        if outcome.homset is not None:
            payload["count"] = len(outcome.homset)
            payload["elements"] = [
                element.model_dump(mode="json") for element in outcome.homset.elements
            ]
        print(json.dumps(payload, sort_keys=True))
        return
    for report in outcome.reports:
        print_report(console, report)
    if outcome.homset is not None:
        print_homset(console, outcome.homset)
    if outcome.output is not None:
        if args.output is None:
            console.print_json(dump_object(outcome.output))
        else:
            console.print(f"💾 Wrote [green]{args.output}[/green]")


def run(argv: Sequence[str] | None = None) -> int:
    """Run one verb and return its exit code.

    Exit codes: 0 when every check passes, 1 on an axiom violation or a
    mathematical failure, 2 on input or usage errors, 3 when a search
    space exceeds the limit.

    Args:
        argv: Command-line arguments without the program name

    Returns:
        The exit code
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    configure_logging(args.verbose)
    console = Console()
    errors = Console(stderr=True)

    try:
        settings = Settings.from_env(search_limit=args.limit, workers=args.workers)
        outcome = args.handler(args, Workspace(), settings)
    except (XmodError, ValueError, OSError) as e:
        code = exit_code_for(e)
        logger.debug("%s failed", args.command, exc_info=True)
        if args.json:
            if isinstance(e, XmodError):
                details: dict[str, Any] = dict(e.to_json())
            else:
                details = {"error": type(e).__name__, "message": str(e)}
            print(json.dumps({"exit_code": code, **details}, sort_keys=True))
        elif isinstance(e, XmodError):
            print_error(errors, e)
        else:
            errors.print(f"❌ [bold red]{type(e).__name__}[/bold red]: {e}")
        return code

    code = 0 if outcome.ok else 1
    _emit(args, outcome, code, console)
    return code
