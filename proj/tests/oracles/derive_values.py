"""High-precision reference values frozen into the C++ unit tests.

Run with: python3 tests/oracles/derive_values.py
Everything here is computed with mpmath at 50 digits, independently of the
C++ implementation.
"""
import mpmath as mp

mp.mp.dps = 50

ALPHA0 = 3 - 2 * mp.sqrt(2)


def f(e, M, E):
    return E - e * mp.sin(E) - M


def fp(e, E):
    return 1 - e * mp.cos(E)


def gamma_sup(e, E, kmax=400):
    """Brute-force supremum over k = 2..kmax, no stopping rule."""
    d = fp(e, E)
    best, arg = mp.mpf(0), 0
    for k in range(2, kmax + 1):
        mag = e * (abs(mp.sin(E)) if k % 2 == 0 else abs(mp.cos(E)))
        if mag == 0:
            continue
        t = (mag / (mp.factorial(k) * d)) ** (mp.mpf(1) / (k - 1))
        if t > best:
            best, arg = t, k
    return best, arg


def root(e, M):
    return mp.findroot(lambda E: f(e, M, E), (mp.mpf(0), mp.pi), solver="anderson")


def show(name, value):
    print(f"{name:40s} {mp.nstr(value, 20)}")


show("alpha0", ALPHA0)
show("f(e=.5,M=1,E=1)", f(mp.mpf("0.5"), 1, mp.mpf(1)))
show("f''(e=.3,E=1)", mp.mpf("0.3") * mp.sin(1))
show("beta(e=.5,M=1,E=1)", abs(f(mp.mpf("0.5"), 1, 1)) / fp(mp.mpf("0.5"), 1))
g, k = gamma_sup(mp.mpf("0.5"), mp.mpf(1))
show("gamma(e=.5,E=1)", g)
print("  argmax", k)
show("alpha(e=.5,M=1,E=1)", g * abs(f(mp.mpf("0.5"), 1, 1)) / fp(mp.mpf("0.5"), 1))
g, k = gamma_sup(mp.mpf("0.99"), mp.mpf("0.5"))
show("gamma(e=.99,E=.5)", g)
print("  argmax", k)
show("position y (a=1,e=.5,E=1)", mp.sqrt(mp.mpf("0.75")) * mp.sin(1))
show("position x", mp.cos(1))
show("newton step (e=.5,M=1,E=1)", 1 - f(mp.mpf("0.5"), 1, 1) / fp(mp.mpf("0.5"), 1))
for n in (1, 15, 307):
    v = mp.log(1 + mp.log(mp.pi, 2) + n * mp.log(10, 2), 2)
    print(f"iterations_for_digits({n}) = {int(mp.ceil(v))}  (log2 = {mp.nstr(v, 8)})")
for eps in ("0.5", "0.1", "0.09"):
    b = (mp.pi + 2) / (2 * ALPHA0 * mp.mpf(eps) ** 2)
    print(f"table bound eps={eps}: {mp.nstr(b, 15)} -> N={int(mp.floor(b)) + 1}")
show("1-cos(pi/7)", 1 - mp.cos(mp.pi / 7))

# S10 cubic root at e=.5, M=pi
e, M = mp.mpf("0.5"), mp.pi
cub = mp.findroot(lambda E: E * (1 - e) + e * E**3 / 6 - M, 2.7)
show("S10 (e=.5,M=pi)", cub)


def cube_root_starter(e, M):
    c = mp.cbrt(6 * M * e * e)
    return c / e - 2 * (1 - e) / c


show("thm1 cube branch (e=.99,M=.3)", cube_root_starter(mp.mpf("0.99"), mp.mpf("0.3")))
show("cube root (e=1-1e-9,M=.001)", cube_root_starter(1 - mp.mpf("1e-9"), mp.mpf("0.001")))
show("cube root (e=.999,M=.001)", cube_root_starter(mp.mpf("0.999"), mp.mpf("0.001")))
show("branch4 bound (e=.99)", (12 * ALPHA0) ** 0.25 * mp.mpf("0.01") ** 1.5 / mp.sqrt(mp.mpf("0.99")))
show("(12a0)^(1/4)", (12 * ALPHA0) ** mp.mpf(0.25))
show("8/(27 sqrt6 a0)", 8 / (27 * mp.sqrt(6) * ALPHA0))
show("4 a0 0.8", 4 * ALPHA0 * mp.mpf("0.8"))

show("root (e=.9,M=.5)", root(mp.mpf("0.9"), mp.mpf("0.5")))
show("root (e=.99,M=.001)", root(mp.mpf("0.99"), mp.mpf("0.001")))
show("root (e=.5,M=pi/2)", root(mp.mpf("0.5"), mp.pi / 2))
show("root (e=.5,M=1)", root(mp.mpf("0.5"), mp.mpf(1)))
show("root (e=.2,M=1)", root(mp.mpf("0.2"), mp.mpf(1)))
show("root (e=.9,M=.1)", root(mp.mpf("0.9"), mp.mpf("0.1")))
show("root (e=.5,M=0.5)", root(mp.mpf("0.5"), mp.mpf("0.5")))


def fixed_point(e, M, E0, n):
    E = E0
    for _ in range(n):
        E = M + e * mp.sin(E)
    return E


show("fixed pt e=.9,M=.1,E0=.1,n=20 err",
     abs(fixed_point(mp.mpf("0.9"), mp.mpf("0.1"), mp.mpf("0.1"), 20) - root(mp.mpf("0.9"), mp.mpf("0.1"))))
