"""Timing of the main constructions over Q(l).

    python3 scripts/hybe_timings.py --max-n 4
"""
import argparse
import time

from hombraid import bialgebra as bi
from hombraid.braid import build_braid_generators, check_braid_relations
from hombraid.homalg import build_B_alpha, gl2, sl2_lambda
from hombraid.hybe import check_hybe


def timed(label, fn):
    t = time.perf_counter()
    out = fn()
    print(f"{label:<40} {time.perf_counter() - t:7.3f}s")
    return out


def main(max_n: int):
    c = timed("build B_alpha(sl2_l)", lambda: build_B_alpha(sl2_lambda()))
    timed("check_hybe B_alpha(sl2_l)", lambda: check_hybe(c))
    timed("build + check B_alpha(gl2)", lambda: check_hybe(build_B_alpha(gl2())))
    sw = bi.sweedler()
    timed("check_qt + qybe Sweedler R_1", lambda: (bi.check_qt(sw, bi.sweedler_R(1)),
                                                    bi.check_qybe(sw, bi.sweedler_R(1).R)))
    for n in range(3, max_n + 1):
        rep = timed(f"braid generators n={n}", lambda: build_braid_generators(c, n))
        timed(f"braid relations n={n}", lambda: check_braid_relations(rep))


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-n", type=int, default=4)
    main(p.parse_args().max_n)
