"""Generate one full block for n=16 and check it by streaming necklace hashing.

The block has 2*C_16 = 70,715,340 emissions; the realized shift is checked by
comparing the block's end with the start rotated by the target shift.
"""
import argparse
import time

from middlelevels import engine
from middlelevels.oracle import BlockStream

CHUNK = 1 << 20


def run_block(n: int, shift: int = 1, verbose: bool = True) -> dict:
    t0 = time.perf_counter()
    state = engine.init(n, shift)
    m = 2 * n + 1
    length = engine.block_length(n)
    stream = BlockStream(state.comb.decode()[1:], m, length)
    left = length
    while left:
        k = min(CHUNK, left)
        stream.feed(engine.flips(state, k))
        left -= k
        if verbose:
            done = length - left
            print(f"\r{done}/{length} ({time.perf_counter() - t0:.0f}s)", end="", flush=True)
    t1 = time.perf_counter()
    distinct, rotated = stream.finish(shift)
    if verbose:
        print()
    return {"n": n, "emissions": length, "plan": state.plan.describe(),
            "distinct": distinct, "rotated": rotated,
            "gen_s": t1 - t0, "total_s": time.perf_counter() - t0}


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=16)
    ap.add_argument("--shift", type=int, default=1)
    args = ap.parse_args()
    print(run_block(args.n, args.shift))
