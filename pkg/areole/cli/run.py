#!/usr/bin/python3
"""
Command-line driver.

    areole mytc.aol --param N=16 --emit-spec --emit-report --emit-rewrite

parses the program, binds the parameters, builds one channel per group of
references and writes the requested artifacts. Without any --emit-* flag
the report goes to standard output. Diagnostics go to standard error as
'file:line:col: severity: message [CODE]'.

Exit status: 0 on success, 1 when the analysis rejects the program, 2 on
usage or file errors.
"""
import argparse
import os
import re
import sys
from typing import Dict, List, Optional, Sequence, Tuple
from pydantic import ValidationError
from areole import __version__
from areole.cli.models import RunConfig
from areole.config import Config
from areole.front.parser import parse
from areole.front.references import (
    ArrayReference, analyze, repetition_space
)
from areole.geometry.domain import UserBoxDomain
from areole.output.report import render_report
from areole.output.spec_document import build_spec_document, dump_spec
from areole.synthesis.diagnostics import diagnose
from areole.synthesis.parametric import parametric_channel
from areole.synthesis.partition import partition_by_paving
from areole.synthesis.rewrite import rewrite_program
from areole.synthesis.synthesize import STRATEGIES, synthesize
from areole.utils.exceptions import (
        AreoleError, InputFileError, ParametricLimitationError, UsageError
        )
from areole.utils.logger import get_logger

logger = get_logger(__name__)

_BINDING = re.compile(r"^([A-Za-z_]\w*)=(-?\d+)$")
_RANGE = re.compile(r"^(-?\d+)\.\.(-?\d+)$")


def _binding(text: str) -> Tuple[str, int]:
    match = _BINDING.match(text.strip())
    if not match:
        raise argparse.ArgumentTypeError(
            f"expected NAME=INTEGER, got '{text}'")
    return match.group(1), int(match.group(2))


def _user_box(text: str) -> Tuple[str, List[Tuple[int, int]]]:
    label, sep, spec = text.partition("=")
    ranges = []
    for part in spec.split(",") if spec else []:
        match = _RANGE.match(part.strip())
        if not match:
            raise argparse.ArgumentTypeError(
                f"expected lo..hi, got '{part}' in '{text}'")
        ranges.append((int(match.group(1)), int(match.group(2))))
    if not sep or "#" not in label:
        raise argparse.ArgumentTypeError(
            f"expected ARRAY#K=lo..hi,..., got '{text}'")
    return label.strip(), ranges


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="areole",
        description="Synthesize Array-OL access specifications (paving, "
        "pattern, fitting) from a loop-nest program.")
    parser.add_argument("input", help="loop-nest source file")
    parser.add_argument(
        "--param", action="append", type=_binding, default=[],
        metavar="NAME=VALUE", help="bind a parameter (repeatable)")
    parser.add_argument(
        "--strategy", choices=STRATEGIES, default="general",
        help="pattern synthesis strategy (default: general)")
    parser.add_argument(
        "--strict", action="store_true",
        help="treat overlapping output footprints as an error; implies "
        "--check-overlap")
    parser.add_argument(
        "--check-overlap", action="store_true",
        help="enumerate footprints and report overlaps")
    for which, default in (("spec", ".spec.json"),
                           ("report", ".report.txt"),
                           ("rewrite", ".rewrite.aol")):
        parser.add_argument(
            f"--emit-{which}", nargs="?", const="", default=None,
            metavar="PATH",
            help=f"write the {which} (default path <stem>{default})")
    parser.add_argument(
        "--output-dir", default=".",
        help="directory for default artifact paths")
    parser.add_argument(
        "--user-box", action="append", type=_user_box, default=[],
        metavar="ARRAY#K=lo..hi,...",
        help="bounding box of the iteration domain of one reference")
    parser.add_argument(
        "--verbose", action="store_true",
        help="print the active settings to standard error")
    parser.add_argument(
        "--version", action="version", version=f"areole {__version__}")
    return parser


def config_from_args(argv: Optional[Sequence[str]] = None) -> RunConfig:
    """
    Raises:
        SystemExit: With status 2 on malformed arguments.
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return RunConfig(
            input_path=args.input, param_bindings=dict(args.param),
            strategy=args.strategy, strict=args.strict,
            check_overlap=args.check_overlap, emit_spec=args.emit_spec,
            emit_report=args.emit_report, emit_rewrite=args.emit_rewrite,
            output_dir=args.output_dir, user_boxes=dict(args.user_box),
            verbose=args.verbose)
    except ValidationError as e:
        parser.error(str(e))


def _diagnostic(path: str, severity: str, message: str, code: str,
                location=None) -> None:
    where = f"{path}:{location[0]}:{location[1]}" if location else path
    print(f"{where}: {severity}: {message} [{code}]", file=sys.stderr)


def _report_error(path: str, error: AreoleError) -> None:
    _diagnostic(path, "error", error.message, error.code, error.location)
    if error.mitigation:
        print(f"{path}: note: {error.mitigation}", file=sys.stderr)
    for detail in getattr(error, "error_details", []):
        print(f"{path}: note: {detail}", file=sys.stderr)


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as f:
            return f.read()
    except (OSError, UnicodeDecodeError) as e:
        raise InputFileError(path, getattr(e, "strerror", None) or str(e))


def _write(path: str, text: str) -> None:
    try:
        directory = os.path.dirname(path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(path, "w", encoding="utf-8") as f:
            f.write(text)
    except OSError as e:
        raise InputFileError(path, e.strerror or str(e))
    logger.info("Wrote %s.", path)


def apply_user_boxes(refs: Sequence[ArrayReference],
                     boxes: Dict[str, List[Tuple[int, int]]]
                     ) -> List[ArrayReference]:
    """
    Put the user boxes in place of the vertices of the named references.

    Raises:
        UsageError: For a label matching no reference or a box of the
        wrong dimension.
    """
    labels = {ref.label for ref in refs}
    unknown = sorted(set(boxes) - labels)
    if unknown:
        raise UsageError(f"--user-box names unknown reference {unknown[0]}; "
                         f"references are {', '.join(sorted(labels))}.")
    result = []
    for ref in refs:
        ranges = boxes.get(ref.label)
        if ranges is not None:
            if len(ranges) != ref.d:
                raise UsageError(
                    f"--user-box for {ref.label} has {len(ranges)} ranges; "
                    f"its domain has {ref.d} counters.")
            ref = ref.model_copy(update=dict(domain=UserBoxDomain(
                ref.inner_counters, ranges, exact=ref.domain)))
        result.append(ref)
    return result


def _warn_overlaps(config: RunConfig, channels) -> None:
    for ch in channels:
        o = ch.diagnostics.overlap
        if not o.overlaps:
            continue
        code = "W_OVERLAP_OUT" if o.kind == "output-overlap" \
            else "W_OVERLAP_IN"
        _diagnostic(
            config.input_path, "warning",
            f"channel {ch.name} {o.kind}: repetitions {o.first} and "
            f"{o.second} share cell {o.cell}", code, ch.refs[0].span)


def _show_settings() -> None:
    settings = Config.display_config()
    logger.debug("Settings: %s", settings)
    for key, value in settings.items():
        print(f"areole: {key}={value}", file=sys.stderr)


def run(config: RunConfig) -> int:
    """
    Run the whole analysis for config.

    Returns:
        int: The exit status.
    """
    if config.verbose:
        _show_settings()
    bindings = config.param_bindings
    try:
        program = parse(_read(config.input_path))
        unknown = sorted(set(bindings) - set(program.params))
        if unknown:
            raise UsageError(f"--param binds undeclared parameter "
                             f"'{unknown[0]}'.")
        repetition = repetition_space(program)
        refs = apply_user_boxes(analyze(program), config.user_boxes)

        channels, parametric = [], []
        numbers: Dict[str, int] = {}
        for group in partition_by_paving(refs, bindings):
            name = group[0].array.name
            numbers[name] = numbers.get(name, 0) + 1
            try:
                ch = synthesize(group, config.strategy, bindings, repetition,
                                numbers[name])
            except ParametricLimitationError:
                if all(ref.is_numeric(bindings) for ref in group):
                    raise
                parametric.append(parametric_channel(group))
                continue
            channels.append(diagnose(ch, bindings, config.check_overlap,
                                     config.strict))
        _warn_overlaps(config, channels)

        doc = build_spec_document(
            os.path.basename(config.input_path), program.name,
            program.arrays, repetition, channels, parametric, bindings)
        outputs = {
            "spec": lambda: dump_spec(doc),
            "report": lambda: render_report(doc),
            "rewrite": lambda: rewrite_program(program, channels),
        }
        requested = {w: config.artifact_path(w) for w in outputs}
        if parametric and requested["rewrite"] is not None:
            raise ParametricLimitationError(
                "The program cannot be rewritten while channels stay "
                "symbolic.")
        if all(path is None for path in requested.values()):
            sys.stdout.write(render_report(doc))
        for which, path in requested.items():
            if path is not None:
                _write(path, outputs[which]())
    except AreoleError as e:
        _report_error(config.input_path, e)
        return e.exit_status
    except Exception as e:
        logger.critical("Unexpected failure on %s: %s", config.input_path, e)
        _diagnostic(config.input_path, "error", f"internal error: {e}",
                    "E_INTERNAL")
        return 1

    logger.info("Analysis of %s done: %d channel(s), %d parametric.",
                config.input_path, len(channels), len(parametric))
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    return run(config_from_args(argv))


if __name__ == "__main__":
    sys.exit(main())
