#!/usr/bin/env python3
"""Generates b030067.txt: the first 1000 terms of A030067 (semi-Fibonacci
numbers) as an OEIS-style b-file, for offline cross-validation.

Terms are computed from the power-partition side: the number of partitions
of n into powers of 2 in which every part occurs an odd number of times.
This route is independent of the semi-Fibonacci recurrence that the library
implements, so the generated file works as a genuine cross-check.
"""

N_MAX = 1000


def nd_counts(n_max, m):
    # f[j][n] = partitions of n into powers m^0..m^j, each used with
    # multiplicity not divisible by m (0 allowed = part absent).
    powers = []
    p = 1
    while p <= n_max:
        powers.append(p)
        p *= m
    prev = [1] + [0] * n_max
    for pw in powers:
        cur = [0] * (n_max + 1)
        for n in range(n_max + 1):
            acc = prev[n]
            u = 1
            while u * pw <= n:
                if u % m != 0:
                    acc += prev[n - u * pw]
                u += 1
            cur[n] = acc
        prev = cur
    return prev


def main():
    counts = nd_counts(N_MAX, 2)
    with open("b030067.txt", "w") as fh:
        fh.write("# A030067: semi-Fibonacci numbers, terms 1..%d\n" % N_MAX)
        fh.write("# generated offline by gen_b030067.py (power-of-2 partitions\n")
        fh.write("# with all multiplicities odd)\n")
        for n in range(1, N_MAX + 1):
            fh.write("%d %d\n" % (n, counts[n]))


if __name__ == "__main__":
    main()
