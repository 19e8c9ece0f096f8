#!/usr/bin/env python3
"""Generate a table of zeta zero ordinates for the empirical test suite.

Ordinates come from Arb (python-flint), which isolates and refines zeros with
rigorous error balls. Each ball radius must be below 1e-9. A few ordinates
are cross-checked against mpmath.zetazero.

Usage: gen_zeros.py COUNT OUTPUT
"""
import sys

import flint
import mpmath as mp

BLOCK = 250
MAX_RADIUS = 1e-9


def main():
    count = int(sys.argv[1])
    out = sys.argv[2]
    flint.ctx.prec = 80
    zeros = []
    n = 1
    while n <= count:
        num = min(BLOCK, count - n + 1)
        for z in flint.acb.zeta_zeros(n, num):
            im = z.imag
            assert float(im.rad()) < MAX_RADIUS, (len(zeros) + 1, im)
            zeros.append(im.mid())
        n += num
        print(f"{len(zeros)} zeros, t={float(zeros[-1]):.2f}", file=sys.stderr, flush=True)

    assert all(zeros[k] < zeros[k + 1] for k in range(len(zeros) - 1))
    mp.mp.dps = 25
    for k in sorted({1, 2, 3, 100, count}):
        ref = mp.zetazero(k).imag
        assert abs(ref - mp.mpf(zeros[k - 1].str(30, radius=False))) < 1e-12, (k, ref, zeros[k - 1])
    with open(out, "w") as fh:
        for r in zeros:
            fh.write(r.str(16, radius=False) + "\n")


if __name__ == "__main__":
    main()
