"""Braid representations from the twisted sl(2) family, specialized at several l.

For each value prints relation verdicts, the trace of B_1 and the time taken.

    python3 scripts/sl2_braid_family.py --n 3 --values 1 2 -1 1/2 3
"""
import argparse
import time
from dataclasses import dataclass, field
from fractions import Fraction

from hombraid.braid import build_braid_generators, check_braid_relations, specialize_rep
from hombraid.homalg import build_B_alpha, sl2_lambda
from hombraid.scalar import format_scalar


@dataclass
class Config:
    n: int = 3
    values: list = field(default_factory=lambda: ["1", "2", "-1", "1/2"])


def trace(m):
    return sum((m[i, i] for i in range(m.rows)), Fraction(0))


def main(cfg: Config):
    start = time.perf_counter()
    rep = build_braid_generators(build_B_alpha(sl2_lambda()), cfg.n)
    generic = check_braid_relations(rep)
    print(f"n={cfg.n}  dim={rep.size}  generic relations: {'pass' if generic.passed else 'FAIL'}"
          f"  ({time.perf_counter() - start:.2f}s)")
    print(f"  tr B_1 = {format_scalar(trace(rep.generators[0]))}")
    for v in cfg.values:
        t = time.perf_counter()
        specialized = specialize_rep(rep, Fraction(v))
        ok = check_braid_relations(specialized).passed
        print(f"  l={v:>5}  relations {'pass' if ok else 'FAIL'}  tr B_1 = {format_scalar(trace(specialized.generators[0])):>8}"
              f"  ({time.perf_counter() - t:.2f}s)")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--values", nargs="+", default=Config().values)
    args = p.parse_args()
    main(Config(args.n, args.values))
