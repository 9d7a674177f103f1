"""Command-line front end: ``kernelize``, ``solve``, ``verify`` and ``gen``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from .graph import GraphParseError, read_graph, serialize_graph, write_graph
from .kernel import KernelInvariantError, kernelize
from .rng import SplitMix64, gnp, random_instances
from .solver import DeletionInstance, exact_solve, verify_equivalence

EXIT_OK = 0
EXIT_DISAGREE = 1
EXIT_USAGE = 2
EXIT_INVARIANT = 3


@dataclass
class RunConfig:
    command: str
    t: int = 3
    k: int = 1
    input: str | None = None
    output: str | None = None
    trace: str | None = None
    n: int = 8
    p: float | None = None
    seed: int = 0
    samples: int = 100


def _emit(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="\n") as f:
            f.write(text)


def _load(cfg: RunConfig):
    if cfg.input is None:
        raise GraphParseError("no input file given (-i)")
    try:
        return read_graph(cfg.input)
    except OSError as exc:
        raise GraphParseError(f"cannot read {cfg.input}: {exc.strerror}") from None


def cmd_kernelize(cfg: RunConfig) -> int:
    g = _load(cfg)
    result = kernelize(g, cfg.k, cfg.t)
    kg = result.kernel_graph
    comments = [f"kernel t={cfg.t} budget={result.kernel_budget}"]
    _emit(serialize_graph(kg, comments), cfg.output)
    if cfg.trace:
        with open(cfg.trace, "w", newline="\n") as f:
            json.dump(result.trace.to_json(), f, indent=2)
            f.write("\n")
    print(
        f"kernel: {kg.n} vertices, {kg.m} edges, family {len(result.reduced_family)}, "
        f"budget {result.kernel_budget}",
        file=sys.stderr if cfg.output is None else sys.stdout,
    )
    return EXIT_OK


def cmd_solve(cfg: RunConfig) -> int:
    g = _load(cfg)
    verdict = exact_solve(DeletionInstance(g, cfg.k, cfg.t))
    lines = [str(verdict)]
    if verdict.answer:
        lines.extend(f"e {u + 1} {v + 1}" for u, v in verdict.witness)
    print("\n".join(lines))
    return EXIT_OK


def cmd_verify(cfg: RunConfig) -> int:
    p_values = (cfg.p,) if cfg.p is not None else (0.3, 0.5, 0.7)
    agree = 0
    for i, (g, k, t) in enumerate(
        random_instances(cfg.samples, cfg.seed, cfg.n, (cfg.t,), cfg.k, p_values)
    ):
        report = verify_equivalence(g, k, t, kernelize_fn=kernelize, strict=False)
        if report.agree:
            agree += 1
            continue
        prefix = os.path.join(cfg.output or ".", f"verify_failure_{i}")
        write_graph(prefix + ".graph", g, [f"t={t} k={k} seed={cfg.seed} sample={i}"])
        with open(prefix + ".trace.json", "w", newline="\n") as f:
            json.dump(report.trace.to_json(), f, indent=2)
            f.write("\n")
        print(
            f"sample {i}: original {report.original}, kernel {report.kernel}; dumped {prefix}.*",
            file=sys.stderr,
        )
    print(f"{agree}/{cfg.samples} agree")
    return EXIT_OK if agree == cfg.samples else EXIT_DISAGREE


def cmd_gen(cfg: RunConfig) -> int:
    p = 0.5 if cfg.p is None else cfg.p
    g = gnp(cfg.n, p, SplitMix64(cfg.seed))
    _emit(serialize_graph(g), cfg.output)
    return EXIT_OK


COMMANDS = {
    "kernelize": cmd_kernelize,
    "solve": cmd_solve,
    "verify": cmd_verify,
    "gen": cmd_gen,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ktkernel", description="K_t-free edge deletion kernel")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("--t", type=int, default=3, help="clique size (>= 3)")
        sp.add_argument("--k", type=int, default=1, help="budget (verify: maximum budget)")
        sp.add_argument("-i", "--input", dest="input")
        sp.add_argument("-o", "--output", dest="output")
        sp.add_argument("--trace")
        sp.add_argument("--n", type=int, default=8, help="vertices (verify: maximum)")
        sp.add_argument("--p", type=float, default=None, help="edge probability")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--samples", type=int, default=100)
    return parser


def _validate(cfg: RunConfig) -> str | None:
    if cfg.command != "gen" and cfg.t < 3:
        return "--t must be >= 3"
    if cfg.k < 0:
        return "--k must be >= 0"
    if cfg.n < 0:
        return "--n must be >= 0"
    if cfg.p is not None and not 0.0 <= cfg.p <= 1.0:
        return "--p must lie in [0, 1]"
    if not 0 <= cfg.seed < 1 << 64:
        return "--seed must be an unsigned 64-bit integer"
    if cfg.samples < 0:
        return "--samples must be >= 0"
    return None


def main(argv: list[str] | None = None) -> int:
    ns = build_parser().parse_args(argv)
    cfg = RunConfig(**vars(ns))
    problem = _validate(cfg)
    if problem:
        print(f"error: {problem}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return COMMANDS[cfg.command](cfg)
    except GraphParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except KernelInvariantError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
