"""Independent oracle for frozen test values.

Computes psi and Psi on Gamma_{p,q} without exact cyclotomic arithmetic:
matrices are built from cos(pi/p), cos(pi/q) in 60-digit floating point, W is
taken from the logarithmic definition with Im log in [-pi, pi), and psi is
folded letter by letter.  Cyclotomic data comes from sympy.

Run:  python3 tests/oracle/freeze_values.py
"""
import re

import mpmath as mp
import sympy

mp.mp.dps = 60
EPS = mp.mpf(10) ** -40


def generators(p, q):
    s2 = 2 * mp.cos(mp.pi / p)
    u2 = 2 * mp.cos(mp.pi / q)
    S = mp.matrix([[0, -1], [1, s2]])
    U = mp.matrix([[u2, -1], [1, 0]])
    return S, U


def j(g, z):
    return g[1, 0] * z + g[1, 1]


def log_branch(w):
    if abs(mp.im(w)) < EPS:
        return mp.log(abs(w)) + (0 if mp.re(w) > 0 else -1j * mp.pi)
    return mp.log(w)


def W(g1, g2, z=mp.mpc(0, 1)):
    g2z = (g2[0, 0] * z + g2[0, 1]) / (g2[1, 0] * z + g2[1, 1])
    total = log_branch(j(g1, g2z)) + log_branch(j(g2, z)) - log_branch(j(g1 * g2, z))
    value = total / (2j * mp.pi)
    r = int(mp.nint(mp.re(value)))
    assert abs(value - r) < 1e-30, value
    return r


def sgn_matrix(g):
    c = g[1, 0]
    if abs(c) > EPS:
        return 1 if c > 0 else -1
    return 1 if g[1, 1] > 0 else -1


def parse(text):
    text = text.replace(" ", "")
    sign = -1 if text.startswith("-") else 1
    letters = []
    for gen, exp in re.findall(r"([SU])(?:\^(\d+))?", text):
        letters += [gen] * int(exp or 1)
    return sign, letters


def symbols(p, q, text):
    S, U = generators(p, q)
    sign, letters = parse(text)
    if sign < 0:
        letters = ["S"] * p + letters
    M = mp.eye(2)
    psi = 0
    for letter in letters:
        g = S if letter == "S" else U
        psi += (-q if letter == "S" else -p) + 2 * p * q * W(M, g)
        M = M * g
    tr = M[0, 0] + M[1, 1]
    tsign = 0 if abs(tr) < EPS else (1 if tr > 0 else -1)
    twice = p * q * sgn_matrix(M) * (1 - tsign)
    assert twice % 2 == 0
    return psi, psi + twice // 2, tsign


WORDS = {
    (2, 3): ["S U", "S U^2", "S U S U^2", "-S U S U^2 S U", "U S", "S", "U", "U^2", "-I", "S U^4", "U S U S U"],
    (2, 5): ["S U", "S U^2", "S U^3", "S U^4", "S U S U^3", "U^2 S U"],
    (2, 7): ["S U^3 S U^5", "S U^6"],
    (3, 4): ["S U", "S^2 U^3 S U^2"],
    (3, 5): ["S U S^2 U^4", "S^2 U^3", "-S U^4 S^2 U"],
    (4, 5): ["S^3 U^2 S U", "S^2 U^4 S^3 U^4 S U"],
}

if __name__ == "__main__":
    x = sympy.symbols("x")
    for n in (12, 20, 28, 24, 30, 40):
        print(f"Phi_{n} =", sympy.Poly(sympy.cyclotomic_poly(n, x), x).all_coeffs()[::-1],
              "phi =", sympy.totient(n))
    for (p, q), words in WORDS.items():
        for w in words:
            if w == "-I":
                sign, letters = -1, []
            psi, Psi, t = symbols(p, q, w if w != "-I" else "-")
            print(f"({p},{q}) {w!r}: psi={psi} Psi={Psi} trace_sign={t}")
