"""Command line entry point: ``python -m middlelevels <command> ...``."""
from __future__ import annotations

import argparse
import resource
import sys
import time
from math import gcd

import numpy as np

from . import engine
from .factor import factor_to_dot, factor_to_text, max_n
from .oracle import expand, full_flips, verify_ordering

CHUNK = 1 << 16


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="middlelevels")
    sub = p.add_subparsers(dest="cmd", required=True)

    g = sub.add_parser("gen", help="stream the ordering")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--shift", type=int, default=1)
    g.add_argument("--start")
    g.add_argument("--output", choices=("combos", "flips", "blocks"), default="combos")
    g.add_argument("--limit", type=int)

    v = sub.add_parser("verify", help="check an ordering read from a file or stdin")
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--shift", type=int, default=1)
    v.add_argument("--input", default="-")
    v.add_argument("--start")

    f = sub.add_parser("factor", help="dump the cycle factor")
    f.add_argument("--n", type=int, required=True)
    f.add_argument("--format", choices=("dot", "text"), default="text")

    t = sub.add_parser("tree", help="dump the spanning tree of plane trees")
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--format", choices=("dot",), default="dot")

    s = sub.add_parser("switches", help="show the shift repair plan")
    s.add_argument("--n", type=int, required=True)

    b = sub.add_parser("bench", help="time the generator")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--steps", type=int, default=100_000)
    return p


def _validate(p: argparse.ArgumentParser, a: argparse.Namespace) -> None:
    if a.n < 1:
        p.error("--n must be positive")
    m = 2 * a.n + 1
    if hasattr(a, "shift") and gcd(a.shift, m) != 1:
        p.error(f"--shift {a.shift} is not coprime to {m}")
    start = getattr(a, "start", None)
    if start is not None and (len(start) != m + 1 or set(start) - {"0", "1"}
                              or start.count("1") != a.n + 1):
        p.error(f"--start must be a bitstring of length {m + 1} with {a.n + 1} ones")
    if getattr(a, "limit", None) is not None and a.limit < 0:
        p.error("--limit must be non-negative")
    if a.cmd == "bench" and a.steps < 1:
        p.error("--steps must be positive")
    if a.cmd == "factor" and a.n > max_n():
        p.error(f"--n exceeds MLC_MAX_N={max_n()}")
    if a.cmd == "tree" and not 4 <= a.n <= min(9, max_n()):
        p.error(f"tree needs 4 <= n <= {min(9, max_n())}")


def _gen(a, out) -> int:
    state = engine.init(a.n, a.shift, a.start)
    total = engine.count(a.n) if a.limit is None else a.limit
    if a.output == "combos":
        for _ in range(total):
            out.write(engine.next(state).combination + "\n")
        return 0
    block = engine.block_length(a.n)
    line: list[str] = []
    done = 0
    while done < total:
        k = min(CHUNK, total - done)
        for p in engine.flips(state, k):
            if a.output == "flips":
                out.write(f"{p}\n")
            else:
                line.append(str(p))
                if len(line) == block:
                    out.write(" ".join(line) + "\n")
                    line = []
        done += k
    if line:
        out.write(" ".join(line) + "\n")
    return 0


def _verify(a, inp, out) -> int:
    m = 2 * a.n + 1
    tokens = inp.read().split()
    default = "1" * (a.n + 1) + "0" * (a.n + 1)
    if tokens and len(tokens[0]) == m + 1 and set(tokens[0]) <= {"0", "1"}:
        seq = tokens
    else:
        try:
            flips = [int(t) for t in tokens]
        except ValueError:
            out.write("unreadable input\n")
            return 1
        if any(not 1 <= p <= m for p in flips):
            out.write("flip position out of range\n")
            return 1
        if len(flips) == engine.block_length(a.n):
            flips = full_flips(flips, m, a.shift)
        seq = expand(a.start or default, flips)
    rep = verify_ordering(seq, a.n, a.shift)
    if rep.ok:
        out.write("ok\n")
        return 0
    step, reason = rep.first_violation
    out.write(f"violation at step {step}: {reason}\n")
    return 1


def _bench(a, out) -> int:
    t0 = time.perf_counter()
    state = engine.init(a.n, 1)
    t1 = time.perf_counter()
    engine.flips(state, min(a.steps, 1000))  # warm-up / compile
    t2 = time.perf_counter()
    engine.flips(state, a.steps)
    t3 = time.perf_counter()
    peak = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss
    out.write(f"n={a.n} init={t1 - t0:.3f}s warmup={t2 - t1:.3f}s "
              f"ns/step={(t3 - t2) / a.steps * 1e9:.0f} state_bytes={state.nbytes()} "
              f"peak_rss_kb={peak}\n")
    return 0


def run(argv=None, inp=None, out=None) -> int:
    inp = inp or sys.stdin
    out = out or sys.stdout
    p = _parser()
    a = p.parse_args(argv)
    _validate(p, a)
    if a.cmd == "gen":
        return _gen(a, out)
    if a.cmd == "verify":
        if a.input == "-":
            return _verify(a, inp, out)
        with open(a.input) as fh:
            return _verify(a, fh, out)
    if a.cmd == "factor":
        out.write((factor_to_dot(a.n) if a.format == "dot" else factor_to_text(a.n)) + "\n")
        return 0
    if a.cmd == "tree":
        from .arcs import tree_to_dot
        out.write(tree_to_dot(a.n) + "\n")
        return 0
    if a.cmd == "switches":
        from .switching import plan_switches
        if a.n < 4:
            out.write(f"s={engine.catalan_mod(a.n)}, plan=[], s'=1 (fixed sequence)\n")
            return 0
        out.write(plan_switches(a.n, engine.catalan_mod(a.n)).describe() + "\n")
        return 0
    return _bench(a, out)


def main() -> None:
    try:
        sys.exit(run())
    except BrokenPipeError:
        sys.exit(0)


if __name__ == "__main__":
    main()
