#pragma once

// Test-only quadrature oracles. Deliberately independent of the library's
// special-function code paths: plain adaptive Simpson on the defining
// integrals.

#include <algorithm>
#include <cmath>

namespace oracle {

template <class F>
double simpson_rec(const F& f, double a, double b, double fa, double fm, double fb,
                   double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
           + simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

template <class F>
double integrate(const F& f, double a, double b, double tol_abs) {
    if (!(b > a)) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_rec(f, a, b, fa, fm, fb, whole, tol_abs, 48);
}

// Gamma(a, x) = int_x^inf t^{a-1} e^{-t} dt for x > 0, via panelled
// quadrature with a certified tail cutoff.
inline double upper_gamma(double a, double x, double tol_rel) {
    const auto f = [a](double t) { return std::pow(t, a - 1.0) * std::exp(-t); };
    // For T >= 2|a| + 2: Gamma(a,T) <= 2 T^{a-1} e^{-T}.
    double T = std::max(2.0 * std::abs(a) + 2.0, x);
    while (2.0 * std::pow(T, a - 1.0) * std::exp(-T) > 1e-18) T += 5.0;

    // Geometric panels resolve the near-singular region at small x.
    double crude = 0.0;
    for (double lo = x; lo < T;) {
        const double hi = std::min(T, lo * 4.0);
        crude += std::abs(f(0.5 * (lo + hi))) * (hi - lo);
        lo = hi;
    }
    double total = 0.0;
    const double tol_abs = std::max(crude, 1e-300) * tol_rel * 0.05;
    for (double lo = x; lo < T;) {
        const double hi = std::min(T, lo * 4.0);
        total += integrate(f, lo, hi, tol_abs);
        lo = hi;
    }
    return total;
}

// E[max(D, nu)^{-beta}] for D the nearest point of a PPP(lambda), from the
// defining integral int_0^inf max(r,nu)^{-beta} 2 pi lambda r e^{-pi lambda r^2} dr.
inline double psi_integral(double lambda_p, double nu, double beta, double tol_rel) {
    if (lambda_p == 0.0) return 0.0;
    const auto f = [&](double r) {
        return std::pow(std::max(r, nu), -beta) * 2.0 * M_PI * lambda_p * r
               * std::exp(-M_PI * lambda_p * r * r);
    };
    const double R = std::sqrt(60.0 / (M_PI * lambda_p));
    const double scale = std::pow(nu, -beta);
    const double tol_abs = scale * tol_rel * 0.05;
    return integrate(f, 0.0, nu, tol_abs) + integrate(f, nu, std::max(R, nu * 2.0), tol_abs);
}

} // namespace oracle
