#!/usr/bin/env python3
"""Generate the built-in J0/J1 Hankel digital filter tables.

Design: sinc-response filter computed in the spectral domain.  With the
substitution lambda = exp(y)/r the Hankel-type integral

    I(r) = int_0^inf K(lambda) J_nu(lambda r) dlambda
         = (1/r) int K(exp(y)/r) J_nu(exp(y)) exp(y) dy

becomes a convolution of the input sampled on a log-uniform grid with the
Bessel kernel psi(y) = J_nu(exp(y)) exp(y).  The spectrum of psi is known in
closed form through the Mellin transform

    int_0^inf J_nu(x) x^{-iw} dx  =>  Phi_nu(w) = 2^{-iw} Gamma((nu+1-iw)/2)
                                                       / Gamma((nu+1+iw)/2),

an all-pass response (|Phi_nu| = 1).  The filter weights are the band-limited
projections

    W_m = (dy/2pi) int_{-pi/dy}^{pi/dy} chi(w) exp(i w y_m) Phi_nu(w) dw,

where chi is an erfc roll-off that tapers the band edge so the weights decay
fast enough for kernels with conditionally convergent tails (the h = 0
instrument response).  The quadrature rule is then

    int_0^inf K(lambda) J_nu(lambda r) dlambda ~= (1/r) sum_m K(lambda_m) W_m,
    lambda_m = exp(y0 + m*dy)/r.

Running this script regenerates ../src/hankel_tables.cpp and prints the
closed-form validation suite (Lipschitz-Hankel pairs, constant-tail pairs).
Requires numpy and scipy only.
"""

import datetime
import pathlib
import sys

import numpy as np
from scipy.special import loggamma, erfc, k0, k1

DY = 0.05                # log-domain sampling step
Y0 = -22.0               # first abscissa exponent
Q = 621                  # number of points -> last exponent Y0 + (Q-1)*DY = 9.0
GL_NODES = 24            # Gauss-Legendre nodes per panel
PANEL_PHASE = 1.2        # max phase advance per panel, radians-ish


def bessel_kernel_phase(nu: float, w: np.ndarray) -> np.ndarray:
    """Phase of Phi_nu(w); the modulus is identically 1."""
    z = (nu + 1.0 + 1j * w) / 2.0
    return -w * np.log(2.0) - 2.0 * np.imag(loggamma(z))


def taper(w: np.ndarray, w_center: float, w_width: float) -> np.ndarray:
    return 0.5 * erfc((w - w_center) / w_width)


def design(nu: float) -> np.ndarray:
    band = np.pi / DY
    w_center = 0.72 * band
    w_width = (band - w_center) / 6.5

    u = Y0 + DY * np.arange(Q)

    # Panel the band so the oscillation exp(i w u) is resolved everywhere.
    max_rate = np.abs(u).max() + np.log(2.0) + np.log(max(band, 2.0))
    n_panels = int(np.ceil(band * max_rate / PANEL_PHASE))
    edges = np.linspace(0.0, band, n_panels + 1)
    gx, gw = np.polynomial.legendre.leggauss(GL_NODES)

    centers = 0.5 * (edges[:-1] + edges[1:])
    halves = 0.5 * (edges[1:] - edges[:-1])
    wnodes = (centers[:, None] + halves[:, None] * gx[None, :]).ravel()
    wquad = (halves[:, None] * gw[None, :]).ravel()

    integrand = wquad * taper(wnodes, w_center, w_width) * np.exp(
        1j * bessel_kernel_phase(nu, wnodes))

    # W_m = (dy/pi) * Re sum_k integrand_k * exp(i w_k u_m)
    weights = np.empty(Q)
    chunk = 64
    for start in range(0, Q, chunk):
        stop = min(start + chunk, Q)
        phase = np.exp(1j * np.outer(u[start:stop], wnodes))
        weights[start:stop] = (DY / np.pi) * np.real(phase @ integrand)
    return weights


def apply_filter(weights: np.ndarray, kernel, r: float) -> float:
    lam = np.exp(Y0 + DY * np.arange(Q)) / r
    return float(np.dot(weights, kernel(lam))) / r


def validate(w0: np.ndarray, w1: np.ndarray) -> float:
    worst = 0.0
    rows = []
    for a in (0.1, 0.5, 1.0, 2.0, 10.0):
        for r in (0.5, 1.0, 2.0):
            exact0 = a / (a * a + r * r) ** 1.5
            got0 = apply_filter(w0, lambda lam: np.exp(-a * lam) * lam, r)
            exact1 = r / (a * a + r * r) ** 1.5
            got1 = apply_filter(w1, lambda lam: np.exp(-a * lam) * lam, r)
            e0 = abs(got0 - exact0) / abs(exact0)
            e1 = abs(got1 - exact1) / abs(exact1)
            rows.append(f"  exp pair a={a:<5g} r={r:<4g}  J0 rel {e0:.2e}  J1 rel {e1:.2e}")
            worst = max(worst, e0, e1)
    for a in (0.3, 1.0, 3.0):
        for r in (0.5, 1.0, 2.0):
            gotK0 = apply_filter(w0, lambda lam: lam / (lam * lam + a * a), r)
            eK0 = abs(gotK0 - k0(a * r)) / abs(k0(a * r))
            gotK1 = apply_filter(w1, lambda lam: lam * lam / (lam * lam + a * a), r)
            eK1 = abs(gotK1 - a * k1(a * r)) / abs(a * k1(a * r))
            rows.append(f"  K pair   a={a:<5g} r={r:<4g}  J0 rel {eK0:.2e}  J1 rel {eK1:.2e}")
            worst = max(worst, eK0, eK1)
    for r in (0.5, 1.0, 2.0):
        # int_0^inf J_nu(r lam) dlam = 1/r: the conditionally convergent case
        got0 = apply_filter(w0, lambda lam: np.ones_like(lam), r)
        got1 = apply_filter(w1, lambda lam: np.ones_like(lam), r)
        e0 = abs(got0 - 1.0 / r) * r
        e1 = abs(got1 - 1.0 / r) * r
        rows.append(f"  unit tail       r={r:<4g}  J0 rel {e0:.2e}  J1 rel {e1:.2e}")
        worst = max(worst, e0, e1)
    print("\n".join(rows))
    print(f"worst relative error: {worst:.3e}")
    return worst


def emit_cpp(path: pathlib.Path, w0: np.ndarray, w1: np.ndarray) -> None:
    stamp = datetime.date.today().isoformat()

    def fmt(arr):
        body = []
        for i in range(0, len(arr), 4):
            row = ", ".join(f"{v:+.17e}" for v in arr[i:i + 4])
            body.append("    " + row + ",")
        return "\n".join(body).rstrip(",")

    text = f"""// Built-in Hankel digital filter tables (J0/J1), generated by
// scripts/generate_hankel_filter.py on {stamp}.  Spectral sinc-response
// design; abscissas lambda_i = exp({Y0} + {DY}*i)/r, i = 0..{Q - 1}.
// Do not edit by hand; rerun the script to regenerate.

#include "emsound/hankel.hpp"

namespace emsound {{

namespace {{

constexpr double kSpacing = {DY};
constexpr double kOffset = {Y0};

const double kWeightsJ0[{Q}] = {{
{fmt(w0)}
}};

const double kWeightsJ1[{Q}] = {{
{fmt(w1)}
}};

}}  // namespace

const HankelFilter& builtin_j0_filter() {{
  static const HankelFilter filter{{
      0, kSpacing, kOffset,
      std::vector<double>(kWeightsJ0, kWeightsJ0 + {Q}),
      "sinc-spectral-{Q}pt-j0"}};
  return filter;
}}

const HankelFilter& builtin_j1_filter() {{
  static const HankelFilter filter{{
      1, kSpacing, kOffset,
      std::vector<double>(kWeightsJ1, kWeightsJ1 + {Q}),
      "sinc-spectral-{Q}pt-j1"}};
  return filter;
}}

}}  // namespace emsound
"""
    path.write_text(text)
    print(f"wrote {path} ({len(w0)} + {len(w1)} weights)")


def main() -> int:
    w0 = design(0.0)
    w1 = design(1.0)
    worst = validate(w0, w1)
    if worst > 1e-8:
        print("validation outside design margin (1e-8); not emitting", file=sys.stderr)
        return 1
    out = pathlib.Path(__file__).resolve().parent.parent / "src" / "hankel_tables.cpp"
    out.parent.mkdir(parents=True, exist_ok=True)
    emit_cpp(out, w0, w1)
    return 0


if __name__ == "__main__":
    sys.exit(main())
