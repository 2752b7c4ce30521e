#include "boxspec/bessel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace boxspec {

namespace {

constexpr double kPi = 3.14159265358979323846;
// Power series below, Miller recurrence between, Hankel asymptotics above.
constexpr double kSeriesLimit = 12.0;
constexpr double kAsymptoticLimit = 3000.0;

void check_envelope(int order, double x) {
    if (order < 0 || order > kBesselMaxOrder)
        throw std::domain_error("bessel_j: order outside envelope [0," +
                                std::to_string(kBesselMaxOrder) + "]: " +
                                std::to_string(order));
    if (!(x >= 0.0) || x > kBesselMaxArgument)
        throw std::domain_error("bessel_j: argument outside envelope [0,1e4]: " +
                                std::to_string(x));
}

// J_n(x) = sum_m (-1)^m (x/2)^{n+2m} / (m! (n+m)!)
double series(int n, double x) {
    const double half = 0.5 * x;
    double term = 1.0;
    for (int j = 1; j <= n; ++j) term *= half / j;  // (x/2)^n / n!
    double sum = term;
    const double h2 = half * half;
    for (int m = 1; m <= 500; ++m) {
        term *= -h2 / (static_cast<double>(m) * (n + m));
        sum += term;
        if (std::abs(term) < 1e-18 * (1.0 + std::abs(sum))) break;
    }
    return sum;
}

// Miller's backward recurrence, normalized by J_0 + 2 sum J_{2k} = 1.
double miller(int n, double x) {
    const int start = static_cast<int>(x + 14.0 * std::cbrt(x) + 40.0) + std::max(n, 0);
    double jp = 0.0;          // J_{m+1}
    double jc = 1e-30;        // J_m (arbitrary seed)
    double jn = 0.0;          // value at the requested order
    double norm = 0.0;
    for (int m = start; m >= 1; --m) {
        double jm = (2.0 * m / x) * jc - jp;
        jp = jc;
        jc = jm;
        if (m - 1 == n) jn = jc;
        if ((m - 1) % 2 == 0) norm += (m - 1 == 0) ? jc : 2.0 * jc;
        if (std::abs(jc) > 1e250) {  // rescale to avoid overflow
            jc *= 1e-250;
            jp *= 1e-250;
            jn *= 1e-250;
            norm *= 1e-250;
        }
    }
    return jn / norm;
}

// Hankel expansion: J_n(x) ~ sqrt(2/(pi x)) (P cos w - Q sin w),
// w = x - (n/2 + 1/4) pi.
double asymptotic(int n, double x) {
    const double mu = 4.0 * static_cast<double>(n) * n;
    double p = 1.0, q = 0.0;
    double term = 1.0;
    double prev = std::abs(term);
    for (int k = 1; k <= 60; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= (mu - odd * odd) / (k * 8.0 * x);
        const double mag = std::abs(term);
        if (mag > prev) break;  // divergent tail reached
        prev = mag;
        const int phase = k % 4;  // i^k pattern: +Q, -P, -Q, +P
        switch (phase) {
            case 1: q += term; break;
            case 2: p -= term; break;
            case 3: q -= term; break;
            default: p += term; break;
        }
        if (mag < 1e-18) break;
    }
    const double w = x - (0.5 * n + 0.25) * kPi;
    return std::sqrt(2.0 / (kPi * x)) * (p * std::cos(w) - q * std::sin(w));
}

double bessel_j_prime(int n, double x) {
    if (n == 0) return -bessel_j(1, x);
    return bessel_j(n - 1, x) - (n / x) * bessel_j(n, x);
}

}  // namespace

double bessel_j(int order, double x) {
    check_envelope(order, x);
    if (x == 0.0) return order == 0 ? 1.0 : 0.0;
    if (x <= kSeriesLimit) return series(order, x);
    if (x <= kAsymptoticLimit) return miller(order, x);
    return asymptotic(order, x);
}

double bessel_zero_with_tol(int order, int rank, double bisect_tol) {
    if (rank < 1) throw std::domain_error("bessel_zero: rank must be >= 1");
    check_envelope(order, static_cast<double>(order));

    // Scan for the rank-th sign change; zeros of J_n all exceed n.
    const double step = kPi / 4.0;
    double a = static_cast<double>(order);
    double fa = bessel_j(order, a);
    if (fa == 0.0 && order > 0) {  // J_n(n) > 0 analytically; nudge off exact zero
        a += 1e-12;
        fa = bessel_j(order, a);
    }
    int found = 0;
    double b = a, fb = fa;
    while (found < rank) {
        a = b;
        fa = fb;
        b = a + step;
        if (b > kBesselMaxArgument)
            throw std::runtime_error("bessel_zero: scan budget exhausted for (n=" +
                                     std::to_string(order) + ", k=" + std::to_string(rank) +
                                     ")");
        fb = bessel_j(order, b);
        if ((fa < 0.0) != (fb < 0.0)) ++found;
    }

    // Bisect the final bracket.
    double lo = a, hi = b, flo = fa;
    while (hi - lo > bisect_tol * std::max(1.0, lo)) {
        const double mid = 0.5 * (lo + hi);
        const double fm = bessel_j(order, mid);
        if ((flo < 0.0) != (fm < 0.0)) {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
    }

    // Newton polish, falling back to the bisection midpoint if it strays.
    double z = 0.5 * (lo + hi);
    for (int it = 0; it < 8; ++it) {
        const double f = bessel_j(order, z);
        const double fp = bessel_j_prime(order, z);
        if (fp == 0.0) break;
        const double next = z - f / fp;
        if (next < a || next > b) break;
        if (std::abs(next - z) < 1e-14 * z) {
            z = next;
            break;
        }
        z = next;
    }
    return z;
}

double bessel_zero(int order, int rank) {
    return bessel_zero_with_tol(order, rank, 1e-6);
}

}  // namespace boxspec
