#!/usr/bin/env python3
"""Regenerates the vendored b-files without network access.

A003116: number of compositions of n with p_i - p_{i+1} >= -1, a(0) = 1,
counted by plain recursion over the previous part.

A039924: coefficients of sum_a (-1)^a q^(a^2) / ((1-q)...(1-q^a)), obtained
as the signed count of partitions of n whose parts differ by at least 2,
each weighted by (-1)^(number of parts).

Run `qetude fetch --id A003116 --online` to replace these with the OEIS
originals when the network is available.
"""
from functools import lru_cache
from pathlib import Path

HERE = Path(__file__).resolve().parent


@lru_cache(maxsize=None)
def relaxed(remaining, previous):
    if remaining == 0:
        return 1
    top = remaining if previous is None else min(remaining, previous + 1)
    return sum(relaxed(remaining - p, p) for p in range(1, top + 1))


def gap_two_signed(n):
    total = 0

    def walk(remaining, smallest, parts):
        nonlocal total
        if remaining == 0:
            total += -1 if parts % 2 else 1
            return
        for p in range(smallest, remaining + 1):
            walk(remaining - p, p + 2, parts + 1)

    walk(n, 1, 0)
    return total


def write(name, header, values):
    lines = [f"# {line}" for line in header]
    lines += [f"{n} {v}" for n, v in values]
    (HERE / name).write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    write("b003116.txt",
          ["A003116 (offset 0), generated locally by exhaustive (-1)-partition counting."],
          [(n, 1 if n == 0 else relaxed(n, None)) for n in range(0, 41)])
    write("b039924.txt",
          ["A039924 (offset 0), generated locally as signed gap-2 partition counts.",
           "Sign and offset convention relative to OEIS not confirmed; see fixtures.json."],
          [(n, gap_two_signed(n)) for n in range(0, 61)])
