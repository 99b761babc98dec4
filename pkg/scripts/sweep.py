"""Generate and verify the full cycle for every n and every coprime shift."""
import argparse
import time
from math import gcd

from middlelevels import engine, oracle


def sweep(n_max: int) -> list[tuple[int, int, bool, float]]:
    rows = []
    for n in range(1, n_max + 1):
        m = 2 * n + 1
        for s in range(1, m):
            if gcd(s, m) != 1:
                continue
            t = time.perf_counter()
            state = engine.init(n, s)
            start = state.comb.decode()
            fl = engine.flips(state, engine.count(n))
            rep = oracle.verify_ordering(oracle.combos_from_flips(start, fl), n, s)
            rows.append((n, s, rep.ok, time.perf_counter() - t))
            if not rep.ok:
                print(f"n={n} s={s}: {rep.first_violation}")
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=10)
    args = ap.parse_args()
    rows = sweep(args.n_max)
    for n in range(1, args.n_max + 1):
        mine = [r for r in rows if r[0] == n]
        ok = all(r[2] for r in mine)
        print(f"n={n:2d}  shifts={len(mine):2d}  {'ok' if ok else 'FAIL'}  {sum(r[3] for r in mine):7.2f}s")
    print(f"total {sum(r[3] for r in rows):.1f}s, {sum(not r[2] for r in rows)} failures")


if __name__ == "__main__":
    main()
