"""Command-line front end: config ingestion, experiment dispatch, output.

Exit codes: 0 on success, 2 on configuration/usage errors, 3 on runtime
failures. Results go to --out (or stdout) as CSV or a JSON envelope;
diagnostics and the resolved config echo go to stderr only.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time
from dataclasses import dataclass

from . import __version__
from .errors import ConfigError, SkyShieldError
from .scenarios import (
    BeamDemoConfig,
    ExpAConfig,
    ExpBConfig,
    SweepTable,
    run_beam_demo,
    run_exp_a,
    run_exp_b,
)

log = logging.getLogger("skyshield")

SCHEMA_VERSION = 1

EXPERIMENTS = {
    "exp-a": ExpAConfig,
    "exp-b": ExpBConfig,
    "beam-demo": BeamDemoConfig,
}


@dataclass(frozen=True)
class RunManifest:
    """One resolved invocation: which experiment, with what inputs/outputs.

    seed is None when not given on the command line; the run then uses
    the config file's seed, or 42 when that is absent too.
    """

    command: str
    config_path: str | None
    overrides: tuple[str, ...]
    seed: int | None
    trials: int | None
    workers: int
    out: str | None
    fmt: str
    plot: str | None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skyshield",
        description="Secrecy-rate experiments for UAV-ground wireless links",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    runs = [
        ("exp-a", "UAV-BS placement and cooperative jamming power sweep"),
        ("exp-b", "remote jamming of a UAV eavesdropper (Monte-Carlo)"),
        ("beam-demo", "planar-array nulling versus transmitter altitude"),
    ]
    for name, help_text in runs:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--config", metavar="PATH", help="JSON config file (defaults built in)")
        p.add_argument("--out", metavar="PATH", help="output file (default: stdout)")
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--seed", type=int, default=None, help="Monte-Carlo seed (default 42)")
        p.add_argument("--trials", type=int, default=None, help="Monte-Carlo trials")
        p.add_argument(
            "--workers", type=int, default=None, help="parallel workers (default: all cores)"
        )
        p.add_argument(
            "--set",
            dest="overrides",
            action="append",
            default=[],
            metavar="KEY=VALUE",
            help="override a config field (dotted keys, repeatable)",
        )
        p.add_argument("--plot", metavar="PATH", help="also render the sweep as a figure file")
    v = sub.add_parser("validate-config", help="check a config file against its schema")
    v.add_argument("--config", metavar="PATH", required=True)
    return parser


def setup_logging() -> None:
    level_name = os.environ.get("SKYSHIELD_LOG", "").lower()
    level = {"debug": logging.DEBUG, "info": logging.INFO}.get(level_name, logging.WARNING)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    log.handlers[:] = [handler]
    log.setLevel(level)


def load_config_file(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config {path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ConfigError(f"config {path} must hold a JSON object")
    return data


def parse_override(item: str) -> tuple[list[str], object]:
    key, sep, raw = item.partition("=")
    if not sep or not key:
        raise ConfigError(f"--set expects KEY=VALUE, got {item!r}")
    try:
        value = json.loads(raw)
    except json.JSONDecodeError:
        value = raw
    return key.split("."), value


def apply_overrides(data: dict, overrides) -> dict:
    for item in overrides:
        path, value = parse_override(item)
        node = data
        for part in path[:-1]:
            node = node.setdefault(part, {})
            if not isinstance(node, dict):
                raise ConfigError(f"--set {item!r}: {part!r} is not a nested object")
        node[path[-1]] = value
    return data


def strip_meta(data: dict, command: str, path: str | None) -> dict:
    data = dict(data)
    version = data.pop("schema_version", SCHEMA_VERSION)
    if version != SCHEMA_VERSION:
        raise ConfigError(f"unsupported schema_version {version!r} (expected {SCHEMA_VERSION})")
    experiment = data.pop("experiment", command)
    if experiment != command:
        where = f" in {path}" if path else ""
        raise ConfigError(f"config is for experiment {experiment!r}{where}, not {command!r}")
    return data


def resolve_config(manifest: RunManifest):
    data = load_config_file(manifest.config_path) if manifest.config_path else {}
    data = strip_meta(data, manifest.command, manifest.config_path)
    data = apply_overrides(data, manifest.overrides)
    cls = EXPERIMENTS[manifest.command]
    if cls is ExpBConfig:
        if manifest.seed is not None:
            data["seed"] = manifest.seed
        if manifest.trials is not None:
            data["trials"] = manifest.trials
    return cls.from_dict(data)


def write_output(manifest: RunManifest, config, table: SweepTable) -> None:
    if manifest.fmt == "csv":
        text = table.to_csv()
    else:
        envelope = {
            "config_echo": config.to_dict(),
            "rows": table.rows,
            "artifact_version": __version__,
            # kept out of the payload so identical runs stay byte-identical;
            # the measured time is logged to stderr
            "wall_time_s": None,
        }
        text = json.dumps(envelope, indent=2, sort_keys=True) + "\n"
    if manifest.out:
        with open(manifest.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def run_command(manifest: RunManifest) -> int:
    config = resolve_config(manifest)
    log.info("config: %s", json.dumps(config.to_dict(), sort_keys=True))
    started = time.perf_counter()
    if manifest.command == "exp-a":
        table = run_exp_a(config)
    elif manifest.command == "exp-b":
        table = run_exp_b(config, workers=manifest.workers)
    else:
        table = run_beam_demo(config)
    wall = time.perf_counter() - started
    log.info("%s finished in %.3f s (%d rows)", manifest.command, wall, len(table.rows))
    write_output(manifest, config, table)
    if manifest.plot:
        from . import figures

        figures.render(manifest.command, table, manifest.plot)
        log.info("figure written to %s", manifest.plot)
    return 0


def main(argv=None) -> int:
    setup_logging()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    if args.command == "validate-config":
        try:
            data = load_config_file(args.config)
            experiment = data.get("experiment")
            if experiment not in EXPERIMENTS:
                raise ConfigError(
                    f"config must name its experiment, one of {sorted(EXPERIMENTS)}; "
                    f"got {experiment!r}"
                )
            cls = EXPERIMENTS[experiment]
            cls.from_dict(strip_meta(data, experiment, args.config))
        except ConfigError as exc:
            print(f"invalid: {exc}", file=sys.stderr)
            return 2
        print(f"ok: {args.config} is a valid {experiment} config")
        return 0

    manifest = RunManifest(
        command=args.command,
        config_path=args.config,
        overrides=tuple(args.overrides),
        seed=args.seed,
        trials=args.trials,
        workers=(os.cpu_count() or 1) if args.workers is None else max(1, args.workers),
        out=args.out,
        fmt=args.format,
        plot=args.plot,
    )
    try:
        return run_command(manifest)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except SkyShieldError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except Exception as exc:  # pragma: no cover - defensive
        log.exception("unexpected failure")
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
