#!/usr/bin/env python3
"""Writes the bundled b-files from each sequence's OEIS definition.

Run from this directory. Output is deterministic; every file holds TERMS
consecutive terms starting at the sequence's OEIS offset.
"""

from math import comb

TERMS = 30


def fib(n):
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def linear(coeffs, seed, count=TERMS):
    out = list(seed)
    while len(out) < count:
        out.append(sum(c * out[-1 - j] for j, c in enumerate(coeffs)))
    return out[:count]


def closed(f, start=0):
    return [f(n) for n in range(start, start + TERMS)]


SEQUENCES = {}


def add(oeis_id, definition, values, offset=0):
    SEQUENCES[oeis_id] = (definition, offset, values)


add("A000079", "a(n) = 2^n", closed(lambda n: 2**n))
POWERS = ["A000244", "A000302", "A000351", "A000400", "A000420", "A001018",
          "A001019", "A011557", "A001020", "A001021", "A001022", "A001023",
          "A001024", "A001025", "A001026", "A001027", "A001029"]
POWERS += ["A%06d" % i for i in range(9964, 9985)]
for base, oeis_id in enumerate(POWERS, start=3):
    add(oeis_id, "a(n) = %d^n" % base, closed(lambda n, b=base: b**n))

add("A001045", "Jacobsthal: a(n) = (2^n - (-1)^n)/3", closed(lambda n: (2**n - (-1)**n) // 3))
add("A001906", "a(n) = F(2n)", closed(lambda n: fib(2 * n)))
add("A001519", "a(0) = 1, a(n) = F(2n-1)", closed(lambda n: 1 if n == 0 else fib(2 * n - 1)))
add("A046717", "a(n) = (3^n + (-1)^n)/2", closed(lambda n: (3**n + (-1)**n) // 2))
add("A007051", "a(n) = (3^n + 1)/2", closed(lambda n: (3**n + 1) // 2))
add("A033887", "a(n) = F(3n+1)", closed(lambda n: fib(3 * n + 1)))
add("A008776", "a(n) = 2*3^n", closed(lambda n: 2 * 3**n))
add("A002001", "a(0) = 1, a(n) = 3*4^(n-1)", closed(lambda n: 1 if n == 0 else 3 * 4**(n - 1)))
add("A003946", "a(0) = 1, a(n) = 4*3^(n-1)", closed(lambda n: 1 if n == 0 else 4 * 3**(n - 1)))

add("A000129", "Pell: a(n) = 2a(n-1) + a(n-2), 0, 1", linear([2, 1], [0, 1]))
add("A001333", "a(n) = 2a(n-1) + a(n-2), 1, 1", linear([2, 1], [1, 1]))
add("A006053", "a(n) = a(n-1) + 2a(n-2) - a(n-3), 0, 0, 1", linear([1, 2, -1], [0, 0, 1]))
add("A006054", "a(n) = 2a(n-1) + a(n-2) - a(n-3), 0, 0, 1", linear([2, 1, -1], [0, 0, 1]))
add("A001353", "a(n) = 4a(n-1) - a(n-2), 0, 1", linear([4, -1], [0, 1]))
add("A007052", "a(n) = 4a(n-1) - 2a(n-2), 1, 3", linear([4, -2], [1, 3]))
add("A001835", "a(n) = 4a(n-1) - a(n-2), 1, 1", linear([4, -1], [1, 1]))
add("A001653", "a(n) = 6a(n-1) - a(n-2), 1, 5", linear([6, -1], [1, 5]), offset=1)
add("A006190", "a(n) = 3a(n-1) + a(n-2), 0, 1", linear([3, 1], [0, 1]))
add("A001076", "a(n) = 4a(n-1) + a(n-2), 0, 1", linear([4, 1], [0, 1]))
add("A052918", "a(n) = 5a(n-1) + a(n-2), 1, 5", linear([5, 1], [1, 5]))
add("A054413", "a(n) = 7a(n-1) + a(n-2), 1, 7", linear([7, 1], [1, 7]))
add("A028859", "a(n) = 2a(n-1) + 2a(n-2), 1, 3", linear([2, 2], [1, 3]))
add("A030186", "a(n) = 3a(n-1) + a(n-2) - a(n-3), 1, 2, 7", linear([3, 1, -1], [1, 2, 7]))
add("A054854", "a(n) = 2a(n-1) + 3a(n-2) - 2a(n-3), 1, 1, 5", linear([2, 3, -2], [1, 1, 5]))
add("A095263", "a(n) = 3a(n-1) - 2a(n-2) + a(n-3), 1, 3, 7", linear([3, -2, 1], [1, 3, 7]))
add("A052542", "a(0..2) = 1, 2, 4, then a(n) = 2a(n-1) + a(n-2)", [1] + linear([2, 1], [2, 4], TERMS - 1))

add("A038503", "a(n) = Sum_k binomial(n, 4k)", closed(lambda n: sum(comb(n, 4 * k) for k in range(n // 4 + 1))))
add("A024495", "a(n) = Sum_k binomial(n, 3k+2)", closed(lambda n: sum(comb(n, 3 * k + 2) for k in range(n // 3 + 1))))


def main():
    for oeis_id, (definition, offset, values) in sorted(SEQUENCES.items()):
        with open("b%s.txt" % oeis_id[1:], "w") as f:
            f.write("# %s: %s\n" % (oeis_id, definition))
            f.write("# regenerated offline by regenerate.py\n")
            for j, v in enumerate(values):
                f.write("%d %d\n" % (offset + j, v))


if __name__ == "__main__":
    main()
