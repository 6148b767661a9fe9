"""High-precision reference values frozen into tests/reference_values.hpp.

Every value is computed from first principles with mpmath (quadrature, root
finding, mpmath's own zeta and gamma), independently of the C++ library.
Run: python3 tools/derive_oracle_values.py > tests/reference_values.hpp
"""
import mpmath as mp

mp.mp.dps = 40
pi = mp.pi


def lam0():
    return mp.findroot(lambda x: 2 * x * mp.tanh(x) - 1, 0.77)


L0 = lam0()


def coeffs(a, d):
    lam = pi * a * d
    A = (2 * lam * mp.coth(lam) - 1) / mp.sinh(lam) ** 2
    B = (2 * lam * mp.coth(lam) + 1) / mp.sinh(lam) ** 2
    if lam >= L0:
        C = (2 * lam * mp.tanh(lam) - 1) / mp.cosh(lam) ** 2
        D = (2 * lam * mp.tanh(lam) + 1) / mp.cosh(lam) ** 2
        E = mp.mpf(0)
    else:
        C = mp.mpf(0)
        D = mp.mpf(1) / 2 * ((2 * lam + mp.tanh(lam)) / (mp.sinh(lam) + lam * mp.sech(lam))) ** 2
        E = (1 - 2 * lam * mp.tanh(lam)) / (2 * lam ** 2 + lam * mp.tanh(lam))
    return A, B, C, D, E


def minorant(a, d, z):
    A, B, *_ = coeffs(a, d)
    return (z ** 2 - a ** 2 - (A * z ** 2 + B * a ** 2) * mp.sin(pi * d * z) ** 2) / (z ** 2 + a ** 2) ** 2


def majorant(a, d, z):
    _, _, C, D, E = coeffs(a, d)
    w = mp.cos(pi * d * z) - E * pi * d * z * mp.sin(pi * d * z)
    return (z ** 2 - a ** 2 + (C * z ** 2 + D * a ** 2) * w ** 2) / (z ** 2 + a ** 2) ** 2


def line_integral(F, period, n0=50, levels=6):
    """2 * int_0^inf F for even F decaying like 1/x^2 with a periodic factor.

    Partial integrals over [0, n period] for n = n0 2^k share the phase of the
    periodic factor, so they expand in powers of 1/n; Neville extrapolation to
    1/n = 0 removes the tail.
    """
    with mp.workdps(25):
        n_max = n0 * 2 ** (levels - 1)
        acc = mp.mpf(0)
        partial = {}
        for k in range(n_max):
            acc += mp.quad(F, [k * period, (k + 0.5) * period, (k + 1) * period])
            if (k + 1) in [n0 * 2 ** j for j in range(levels)]:
                partial[k + 1] = acc
        hs = [mp.mpf(1) / n for n in sorted(partial)]
        vs = [partial[n] for n in sorted(partial)]
        # Neville at h = 0.
        table = list(vs)
        for j in range(1, len(table)):
            for i in range(len(table) - j):
                table[i] = (hs[i + j] * table[i] - hs[i] * table[i + 1]) / (hs[i + j] - hs[i])
        return 2 * table[0]


def emit(name, value, digits=20):
    print(f"inline constexpr double {name} = {mp.nstr(value, digits, min_fixed=-30, max_fixed=30)};")


print("#pragma once")
print()
print("// Generated by tools/derive_oracle_values.py (mpmath, 40 digits). Do not edit.")
print()
print("namespace ref {")
print()
emit("kLambda0", L0, 25)
emit("kTwoSech2Lambda0", 2 / mp.cosh(L0) ** 2)
A, B, *_ = coeffs(1 / pi, 1)
emit("kA_lambda1", A)
emit("kB_lambda1", B)
_, _, C, D, E = coeffs(1 / pi, 1)
emit("kC_lambda1", C)
emit("kD_lambda1", D)
_, _, C, D, E = coeffs(0.5 / pi, 1)
emit("kD_lambda05", D)
emit("kE_lambda05", E)

for s in ["0.6", "0.75", "0.9"]:
    sg = mp.mpf(s)
    r = -sg ** 2 + 5 * sg - 2
    q = -sg ** 2 + 3 * sg - 1
    u = -sg ** 2 + sg + 1
    c = mp.sqrt(2 * r * q * u / (sg * (2 - sg)))
    b = mp.sqrt((3 * sg ** 4 - 17 * sg ** 3 + 19 * sg ** 2 + 4 * sg - 4) * q / (sg * (2 - sg)))
    tag = s.replace("0.", "")
    emit(f"kCsigma_{tag}", c)
    emit(f"kBsigma_{tag}", b)

# Masses by quadrature over the real line for six (a, delta) pairs spanning both branches.
pairs = [(1, 1 / pi), (0.5, 0.4), (0.25, 1.0), (0.5, 1.0), (0.3, 0.5), (0.2, 0.5)]
print()
print("struct MassCase {")
print("  double a, delta, minorant_integral, majorant_integral;")
print("};")
print("inline constexpr MassCase kMassCases[] = {")
for a, d in pairs:
    a = mp.mpf(a)
    d = mp.mpf(d)
    li = line_integral(lambda x: minorant(a, d, x), 1 / d)
    ui = line_integral(lambda x: majorant(a, d, x), 1 / d)
    print(f"    {{{mp.nstr(a, 20)}, {mp.nstr(d, 20)}, {mp.nstr(li, 20)}, {mp.nstr(ui, 20)}}},")
print("};")
print()

# Fourier transforms by quadrature.
a, y = mp.mpf("0.5"), mp.mpf("0.3")
f = lambda x: (x ** 2 - a ** 2) / (x ** 2 + a ** 2) ** 2 * mp.cos(2 * pi * x * y)
emit("kFHat_a05_y03", 2 * mp.quadosc(f, [0, mp.inf], omega=2 * pi * y))
a, y = mp.mpf("0.7"), mp.mpf("0.4")
emit("kPHat_a07_y04", 2 * mp.quadosc(lambda x: mp.cos(2 * pi * x * y) / (x ** 2 + a ** 2), [0, mp.inf], omega=2 * pi * y))
emit("kQHat_a07_y04", 2 * mp.quadosc(lambda x: a ** 2 * mp.cos(2 * pi * x * y) / (x ** 2 + a ** 2) ** 2, [0, mp.inf], omega=2 * pi * y))

# Majorant transform by quadrature in the E > 0 branch at (a, delta) = (0.5, 0.4).
a, d = mp.mpf("0.5"), mp.mpf("0.4")
for y in ["0.1", "0.25"]:
    yy = mp.mpf(y)
    val = line_integral(lambda x: majorant(a, d, x) * mp.cos(2 * pi * x * yy), 20, n0=20)
    emit(f"kMajorantHat_a05_d04_y{y.replace('0.', '')}", val)

# Limit at the removable singularity z = ia, a = 1/2, delta = 1.
a, d = mp.mpf("0.5"), mp.mpf(1)
mp.mp.dps = 80
z = mp.mpc(0, a) + mp.mpf("1e-30")
emit("kMinorantAtHalfI_re", mp.re(minorant(a, d, z)))
emit("kMajorantAtHalfI_re", mp.re(majorant(a, d, z)))
mp.mp.dps = 40

# Smallest positive zero of B at E = 1e-6 and the first three zeros at lambda = 0.5.
E = mp.mpf("1e-6")
emit("kBZero_E1em6", mp.findroot(lambda u: mp.cos(pi * u) - E * pi * u * mp.sin(pi * u), 0.5))
_, _, _, _, E = coeffs(0.5 / pi, 1)
for k in range(3):
    emit(f"kBZero_lambda05_{k}", mp.findroot(lambda u: mp.cos(pi * u) - E * pi * u * mp.sin(pi * u), k + 0.3))

# Zeta and friends.
for name, s in [("s075_100", mp.mpc("0.75", "100")), ("s09_1000", mp.mpc("0.9", "1000")), ("s2_0", mp.mpc(2, 0))]:
    z0 = mp.zeta(s)
    z1 = mp.zeta(s, derivative=1)
    z2 = mp.zeta(s, derivative=2)
    ld = z1 / z0
    ldp = z2 / z0 - ld ** 2
    emit(f"kZetaRe_{name}", mp.re(z0))
    emit(f"kZetaIm_{name}", mp.im(z0))
    emit(f"kZeta1Re_{name}", mp.re(z1))
    emit(f"kZeta1Im_{name}", mp.im(z1))
    emit(f"kLogDerivRe_{name}", mp.re(ld))
    emit(f"kLogDerivIm_{name}", mp.im(ld))
    emit(f"kLogDerivPrimeRe_{name}", mp.re(ldp))
    emit(f"kLogDerivPrimeIm_{name}", mp.im(ldp))

s = mp.mpc("0.25", "5")
emit("kDigammaRe_025_5", mp.re(mp.digamma(s)))
emit("kDigammaIm_025_5", mp.im(mp.digamma(s)))
s = mp.mpc("-2.5", "0.5")
emit("kDigammaRe_m25_05", mp.re(mp.digamma(s)))
emit("kDigammaIm_m25_05", mp.im(mp.digamma(s)))
s = mp.mpc("1.5", "2")
emit("kTrigammaRe_15_2", mp.re(mp.psi(1, s)))
emit("kTrigammaIm_15_2", mp.im(mp.psi(1, s)))
s = mp.mpc(3, 4)
emit("kLogGammaRe_3_4", mp.re(mp.loggamma(s)))
emit("kLogGammaIm_3_4", mp.im(mp.loggamma(s)))
emit("kHardyTheta_100", mp.siegeltheta(100))
emit("kHardyZ_100", mp.siegelz(100))
emit("kHardyZ_1000", mp.siegelz(1000))
emit("kSmoothCount_1000", mp.siegeltheta(1000) / pi + 1)

print()
print("}  // namespace ref")
