"""Write the fixture corpus and run every expected CLI invocation against it.

    python3 scripts/verify_corpus.py [--out DIR]
"""
import argparse
import tempfile
import time
from pathlib import Path

from hombraid.cli import run
from hombraid.fixtures import EXPECTED


def main(out: Path) -> int:
    run(["fixtures", "--out", str(out)])
    bad = 0
    for argv, expected in EXPECTED:
        args = [str(out / a) if a.endswith(".json") else a for a in argv]
        t = time.perf_counter()
        code = run(args).code
        ok = code == expected
        bad += not ok
        print(f"{'ok ' if ok else 'BAD'} exit {code} (want {expected})  {time.perf_counter() - t:5.2f}s  {' '.join(argv)}")
    print(f"{len(EXPECTED) - bad}/{len(EXPECTED)} invocations as expected")
    return 1 if bad else 0


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--out", type=Path, default=None)
    args = p.parse_args()
    if args.out:
        raise SystemExit(main(args.out))
    with tempfile.TemporaryDirectory() as tmp:
        raise SystemExit(main(Path(tmp)))
