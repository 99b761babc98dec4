"""Time per step and state size as n grows, from random start combinations."""
import argparse
import random
import time

from middlelevels import engine


def per_step(n: int, steps: int, reps: int, rng: random.Random) -> float:
    total = 0.0
    for _ in range(reps):
        bits = ["1"] * (n + 1) + ["0"] * (n + 1)
        rng.shuffle(bits)
        state = engine.init(n, 1, "".join(bits))
        engine.flips(state, 10)
        t = time.perf_counter()
        engine.flips(state, steps)
        total += time.perf_counter() - t
    return total / (reps * steps)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--ns", type=int, nargs="+", default=[25, 50, 100, 200, 400, 800])
    ap.add_argument("--steps", type=int, default=4000)
    ap.add_argument("--reps", type=int, default=5)
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    engine.flips(engine.init(50, 1), 100)  # compile
    base = None
    print(f"{'n':>6} {'ns/step':>10} {'ratio':>7} {'bytes':>9} {'B/n':>6}")
    for n in args.ns:
        t = per_step(n, args.steps, args.reps, rng) * 1e9
        base = base or t
        b = engine.init(n, 1).nbytes()
        print(f"{n:6d} {t:10.0f} {t / base:7.2f} {b:9d} {b / n:6.0f}")


if __name__ == "__main__":
    main()
