#pragma once

namespace boxspec {

// Accuracy envelope of the Bessel kernel. Outside it the functions throw
// rather than return a silently inaccurate value.
inline constexpr int kBesselMaxOrder = 50;
inline constexpr double kBesselMaxArgument = 1e4;

/// Bessel function of the first kind J_n(x), absolute accuracy 1e-12 on
/// the envelope n <= 50, 0 <= x <= 1e4. Power series for small arguments,
/// Miller backward recurrence with normalization for moderate ones, and
/// the large-argument asymptotic expansion beyond a crossover.
double bessel_j(int order, double x);

/// k-th positive zero j_{n,k}, relative accuracy 1e-10. Brackets found by
/// scanning sign changes of bessel_j in steps of pi/4 starting at n (all
/// zeros of J_n exceed n), refined by bisection and a Newton polish using
/// J_n' = J_{n-1} - (n/x) J_n.
double bessel_zero(int order, int rank);

/// Like bessel_zero but with a caller-chosen bisection tolerance; used by
/// the self-consistency checks (halved tolerance must not move the zero).
double bessel_zero_with_tol(int order, int rank, double bisect_tol);

}  // namespace boxspec
