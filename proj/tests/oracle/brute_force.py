"""Independent brute-force oracle for the frozen expected values in the C++ tests.

Works directly from divisor enumeration and the product identities; shares no
code path with the library.
"""
from fractions import Fraction


def divs(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def brute_solve(a1, b1, a2, b2, limit=200):
    out = []
    for A in range(1, limit):
        for B in range(b2 + 1, limit):
            n = A * B
            if (A + a1) * (B - b1) == n and (A + a2) * (B - b2) == n:
                out.append((A, B, n))
    return out


def max_ab_by_divisors(C, n_limit):
    """max A, B over triples found from divisor lists (n <= n_limit)."""
    best = 0
    for n in range(2, n_limit + 1):
        ds = divs(n)
        for i in range(len(ds)):
            for k in range(i + 2, len(ds)):
                if ds[k] - ds[i] > C:
                    break
                if n // ds[i] - n // ds[k] > C:
                    continue
                best = max(best, ds[i], n // ds[i])
    return best


def max_ab_by_lines(C):
    """Direct search: for each quad, search A directly up to C^3."""
    best = 0
    for a1 in range(1, C):
        for a2 in range(a1 + 1, C + 1):
            for b1 in range(1, C):
                for b2 in range(b1 + 1, C + 1):
                    d = (a2 - a1) * b1 - (b2 - b1) * a1
                    if d <= 0:
                        continue
                    B = Fraction(b1 * b2 * (a2 - a1), d)
                    A = Fraction(a1) * (B - b1) / b1
                    if B.denominator == 1 and A.denominator == 1 and B > b2 and A > 0:
                        best = max(best, int(A), int(B))
    return best


def min_gap(n):
    ds = divs(n)
    best = None
    for i in range(len(ds)):
        for j in range(i + 1, len(ds)):
            for k in range(j + 1, len(ds)):
                g = max(ds[k] - ds[i], n // ds[i] - n // ds[k])
                if best is None or g < best[0]:
                    best = (g, ds[i], ds[j], ds[k])
    return best


if __name__ == "__main__":
    print("solve (1,2,2,3):", brute_solve(1, 2, 2, 3, 50))
    print("solve (1,2,3,5):", brute_solve(1, 2, 3, 5, 50))
    print("solve (1,1,2,3):", brute_solve(1, 1, 2, 3, 50))
    print("solve (2,1,6,2):", brute_solve(2, 1, 6, 2, 50))
    print("solve (2,3,3,4):", brute_solve(2, 3, 3, 4, 50))
    print("solve (3,2,5,3):", brute_solve(3, 2, 5, 3, 50))
    print("solve (2,3,5,5):", brute_solve(2, 3, 5, 5, 50))
    for C in range(2, 14):
        print("C", C, "max", max_ab_by_lines(C), "thm2", Fraction(C * (C - 1) ** 2, 4))
    # divisor-side confirmation at small C (n up to C^6 is too big; C=5 -> n < 125^2)
    print("C=5 via divisors:", max_ab_by_divisors(5, 20000))
    for n in (12, 36, 180, 4, 72):
        print("min gap", n, min_gap(n))
    for N in range(1, 6):
        n = N * (N + 1) ** 2 * (N + 2) * (2 * N + 1) * (2 * N + 3)
        g = 2 * N + 3
        print("family", N, n, (5 * g - 6) ** 6 < 250000 * n, (2 * g - 1) ** 6 > 1024 * n)
    fails = []
    for N in range(1, 1001):
        n = N * (N + 1) ** 2 * (N + 2) * (2 * N + 1) * (2 * N + 3)
        if not (5 * (2 * N + 3) - 6) ** 6 < 250000 * n:
            fails.append(N)
    print("threshold failures", fails)
    print("pow6", 5 ** 6, 1024 * 12, 9 ** 6, 1024 * 180)
