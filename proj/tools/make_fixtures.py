#!/usr/bin/env python3
"""Write OEIS-style b-files for the sequences the oeis-check command compares.

The values come from each sequence's defining formula using plain Python
integers, independent of the C++ library. Indices follow the OEIS offsets.
Run with --fetch to download the real b-files from oeis.org instead.
"""

import argparse
import pathlib
import sys
import urllib.request


def lin(s, t, count, a0=0, a1=1):
    v = [a0, a1]
    while len(v) < count:
        v.append(s * v[-1] + t * v[-2])
    return v[:count]


def gaussian2(n, k):
    if k < 0 or k > n:
        return 0
    num, den = 1, 1
    for i in range(k):
        num *= 2 ** (n - i) - 1
        den *= 2 ** (i + 1) - 1
    return num // den


TERMS = 31
F = lin(1, 1, TERMS + 4)
P = lin(2, 1, TERMS + 4)
J = lin(1, 2, TERMS + 4)
M = lin(3, -2, TERMS + 4)

# id -> (offset, a(n))
SEQUENCES = {
    "A000045": (0, lambda n: F[n]),
    "A000129": (0, lambda n: P[n]),
    "A001045": (0, lambda n: J[n]),
    "A000225": (0, lambda n: 2 ** n - 1),
    "A001654": (0, lambda n: F[n] * F[n + 1]),
    "A084158": (0, lambda n: P[n] * P[n + 1] // 2),
    "A084175": (0, lambda n: J[n] * J[n + 1]),
    "A006095": (1, lambda n: gaussian2(n, 2)),
    "A001655": (0, lambda n: F[n + 1] * F[n + 2] * F[n + 3] // 2),
    "A099930": (0, lambda n: P[n + 1] * P[n + 2] * P[n + 3] // 10),
    "A006096": (3, lambda n: gaussian2(n, 3)),
}


def write_generated(out):
    for sid, (offset, a) in SEQUENCES.items():
        lines = [f"# {sid}: generated from the defining formula (tools/make_fixtures.py)"]
        lines += [f"{n} {a(n)}" for n in range(offset, offset + TERMS)]
        (out / f"b{sid[1:]}.txt").write_text("\n".join(lines) + "\n")


def fetch(out):
    for sid in SEQUENCES:
        url = f"https://oeis.org/{sid}/b{sid[1:]}.txt"
        with urllib.request.urlopen(url, timeout=30) as r:
            (out / f"b{sid[1:]}.txt").write_bytes(r.read())


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "data" / "oeis"))
    ap.add_argument("--fetch", action="store_true")
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    if args.fetch:
        fetch(out)
    else:
        write_generated(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
