#include "boxspec/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

namespace boxspec::oracle {

DenseSymMatrix::DenseSymMatrix(std::size_t order, std::vector<double> entries)
    : n_(order), a_(std::move(entries)) {
    if (n_ == 0) throw std::invalid_argument("DenseSymMatrix: order must be positive");
    if (a_.size() != n_ * n_)
        throw std::invalid_argument("DenseSymMatrix: entry count does not match order");
}

DenseSymMatrix DenseSymMatrix::zero(std::size_t order) {
    return DenseSymMatrix(order, std::vector<double>(order * order, 0.0));
}

bool DenseSymMatrix::is_symmetric() const {
    double scale = 0.0;
    for (double v : a_) scale = std::max(scale, std::abs(v));
    const double tol = 1e-14 * std::max(1.0, scale);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if (std::abs((*this)(i, j) - (*this)(j, i)) > tol) return false;
    return true;
}

namespace {

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) s += a[i * n + j] * a[i * n + j];
    return std::sqrt(2.0 * s);
}

double frobenius(const std::vector<double>& a) {
    double s = 0.0;
    for (double v : a) s += v * v;
    return std::sqrt(s);
}

void require_symmetric(const DenseSymMatrix& m, const char* who) {
    if (!m.is_symmetric())
        throw std::invalid_argument(std::string(who) + ": input is not symmetric");
}

}  // namespace

std::vector<double> symmetric_eigen_dense(const DenseSymMatrix& m) {
    require_symmetric(m, "symmetric_eigen_dense");
    const std::size_t n = m.order();
    if (n > kDenseOrderLimit)
        throw std::invalid_argument("symmetric_eigen_dense: order exceeds desk-scale bound");
    std::vector<double> a = m.entries();
    const double fro = frobenius(a);
    const double target = 1e-14 * std::max(1.0, fro);

    // Cyclic-by-row sweeps; rotation order is fixed, so results are
    // deterministic regardless of caller parallelism.
    for (int sweep = 0; sweep < 50; ++sweep) {
        if (off_diagonal_norm(a, n) <= target) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a[p * n + q];
                if (apq == 0.0) continue;
                const double app = a[p * n + p];
                const double aqq = a[q * n + q];
                const double theta = (aqq - app) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a[k * n + p];
                    const double akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a[p * n + k];
                    const double aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
            }
        }
    }

    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = a[i * n + i];
    std::sort(eig.begin(), eig.end());
    return eig;
}

std::vector<double> tridiagonal_eigen(std::vector<double> d, std::vector<double> e) {
    const std::size_t n = d.size();
    if (n == 0) throw std::invalid_argument("tridiagonal_eigen: empty matrix");
    if (e.size() != n - 1)
        throw std::invalid_argument("tridiagonal_eigen: offdiag size must be n-1");
    e.push_back(0.0);

    // Absolute deflation floor at machine precision times the matrix scale.
    // The relative test alone stalls inside clusters of (near-)zero
    // eigenvalues, where it demands subdiagonals far below roundoff.
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        scale = std::max(scale, std::abs(d[i]) + std::abs(e[i]));
    const double floor = std::numeric_limits<double>::epsilon() * scale;

    // Implicit-shift QL.
    for (std::size_t l = 0; l < n; ++l) {
        for (int iter = 0;; ++iter) {
            std::size_t msplit = l;
            for (; msplit + 1 < n; ++msplit) {
                const double dd = std::abs(d[msplit]) + std::abs(d[msplit + 1]);
                if (std::abs(e[msplit]) + dd == dd || std::abs(e[msplit]) <= floor) break;
            }
            if (msplit == l) break;
            if (iter >= 60)
                throw std::runtime_error("tridiagonal_eigen: QL failed to converge");
            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[msplit] - d[l] + e[l] / (g + (g >= 0.0 ? std::abs(r) : -std::abs(r)));
            double s = 1.0, c = 1.0, p = 0.0;
            bool underflow = false;
            for (std::size_t i = msplit; i-- > l;) {
                double f = s * e[i];
                const double b = c * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == 0.0) {
                    d[i + 1] -= p;
                    e[msplit] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if (underflow) continue;
            d[l] -= p;
            e[l] = g;
            e[msplit] = 0.0;
        }
    }
    std::sort(d.begin(), d.end());
    return d;
}

std::vector<double> symmetric_eigen_large(const DenseSymMatrix& m) {
    require_symmetric(m, "symmetric_eigen_large");
    const std::size_t n = m.order();
    std::vector<double> a = m.entries();
    std::vector<double> d(n, 0.0), e(n, 0.0), p(n, 0.0);

    // Householder reduction to tridiagonal form. Only the lower triangle
    // is kept current: the symmetric matvec folds the mirrored upper part
    // into the same contiguous row pass, and the rank-2 update touches
    // k <= j only. Halves both flops and memory traffic against the
    // full-matrix variant, which matters at FD-grid orders.
    for (std::size_t i = n - 1; i >= 1; --i) {
        const std::size_t l = i - 1;
        double h = 0.0, scale = 0.0;
        double* ai = &a[i * n];
        if (l > 0) {
            for (std::size_t k = 0; k <= l; ++k) scale += std::abs(ai[k]);
            if (scale == 0.0) {
                e[i] = ai[l];
            } else {
                for (std::size_t k = 0; k <= l; ++k) {
                    ai[k] /= scale;
                    h += ai[k] * ai[k];
                }
                double f = ai[l];
                const double g = (f >= 0.0 ? -std::sqrt(h) : std::sqrt(h));
                e[i] = scale * g;
                h -= f * g;
                ai[l] = f - g;
                // p = A v over the leading (l+1) block, lower triangle only
                for (std::size_t j = 0; j <= l; ++j) p[j] = 0.0;
                for (std::size_t j = 0; j <= l; ++j) {
                    const double* aj = &a[j * n];
                    const double vj = ai[j];
                    double s = aj[j] * vj;
                    for (std::size_t k = 0; k < j; ++k) {
                        s += aj[k] * ai[k];
                        p[k] += aj[k] * vj;
                    }
                    p[j] += s;
                }
                double kdot = 0.0;
                for (std::size_t j = 0; j <= l; ++j) {
                    p[j] /= h;
                    kdot += p[j] * ai[j];
                }
                const double hh = kdot / (h + h);
                for (std::size_t j = 0; j <= l; ++j) p[j] -= hh * ai[j];
                // A -= q v^T + v q^T, lower triangle
                for (std::size_t j = 0; j <= l; ++j) {
                    const double vj = ai[j];
                    const double qj = p[j];
                    double* aj = &a[j * n];
                    for (std::size_t k = 0; k <= j; ++k)
                        aj[k] -= vj * p[k] + qj * ai[k];
                }
            }
        } else {
            e[i] = ai[l];
        }
        d[i] = h;
    }
    for (std::size_t i = 0; i < n; ++i) d[i] = a[i * n + i];

    std::vector<double> off(e.begin() + 1, e.end());
    return tridiagonal_eigen(std::move(d), std::move(off));
}

DenseSymMatrix kronecker_sum(const DenseSymMatrix& a, const DenseSymMatrix& b) {
    const std::size_t m = a.order(), k = b.order();
    if (m * k > kDenseOrderLimit)
        throw std::invalid_argument("kronecker_sum: combined order exceeds desk-scale bound");
    require_symmetric(a, "kronecker_sum");
    require_symmetric(b, "kronecker_sum");
    DenseSymMatrix out = DenseSymMatrix::zero(m * k);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const double aij = a(i, j);
            if (aij == 0.0 && i != j) continue;
            for (std::size_t r = 0; r < k; ++r) {
                if (i == j) {
                    for (std::size_t s = 0; s < k; ++s)
                        out.at(i * k + r, j * k + s) = (r == s) ? aij + b(r, s) : b(r, s);
                } else {
                    out.at(i * k + r, j * k + r) = aij;
                }
            }
        }
    return out;
}

DenseSymMatrix fd_dirichlet_interval_matrix(double length, std::size_t points) {
    if (!(length > 0.0))
        throw std::invalid_argument("fd_dirichlet_interval: length must be positive");
    if (points == 0)
        throw std::invalid_argument("fd_dirichlet_interval: points must be >= 1");
    const double h = length / static_cast<double>(points + 1);
    const double diag = 2.0 / (h * h);
    const double off = -1.0 / (h * h);
    DenseSymMatrix m = DenseSymMatrix::zero(points);
    for (std::size_t i = 0; i < points; ++i) {
        m.at(i, i) = diag;
        if (i + 1 < points) {
            m.at(i, i + 1) = off;
            m.at(i + 1, i) = off;
        }
    }
    return m;
}

std::vector<double> fd_dirichlet_interval(double length, std::size_t points) {
    const double h = length / static_cast<double>(points + 1);
    if (!(length > 0.0) || points == 0)
        throw std::invalid_argument("fd_dirichlet_interval: bad arguments");
    std::vector<double> d(points, 2.0 / (h * h));
    std::vector<double> e(points > 0 ? points - 1 : 0, -1.0 / (h * h));
    return tridiagonal_eigen(std::move(d), std::move(e));
}

DenseSymMatrix fd_dirichlet_rect_matrix(double a, double b, std::size_t nx, std::size_t ny) {
    // Node order ix*ny + iy, matching kronecker_sum(Ax, Ay).
    const DenseSymMatrix ax = fd_dirichlet_interval_matrix(a, nx);
    const DenseSymMatrix ay = fd_dirichlet_interval_matrix(b, ny);
    return kronecker_sum(ax, ay);
}

std::size_t disc_interior_node_count(double radius, double step) {
    const long k = static_cast<long>(std::floor(radius / step));
    std::size_t count = 0;
    for (long i = -k; i <= k; ++i)
        for (long j = -k; j <= k; ++j)
            if ((static_cast<double>(i) * i + static_cast<double>(j) * j) * step * step <
                radius * radius)
                ++count;
    return count;
}

std::vector<double> fd_dirichlet_disc(double radius, double step) {
    if (!(radius > 0.0) || !(step > 0.0))
        throw std::invalid_argument("fd_dirichlet_disc: radius and step must be positive");
    if (step > radius / 10.0)
        throw std::invalid_argument("fd_dirichlet_disc: step must be <= radius/10");
    const long kmax = static_cast<long>(std::floor(radius / step));
    const long w = 2 * kmax + 1;
    std::vector<long> index(static_cast<std::size_t>(w) * w, -1);
    auto cell = [&](long i, long j) -> long& {
        return index[static_cast<std::size_t>(i + kmax) * w + (j + kmax)];
    };
    std::vector<std::pair<long, long>> nodes;
    for (long i = -kmax; i <= kmax; ++i)
        for (long j = -kmax; j <= kmax; ++j)
            if ((static_cast<double>(i) * i + static_cast<double>(j) * j) * step * step <
                radius * radius) {
                cell(i, j) = static_cast<long>(nodes.size());
                nodes.emplace_back(i, j);
            }
    if (nodes.size() < 5)
        throw std::invalid_argument("fd_dirichlet_disc: fewer than 5 interior nodes");

    const std::size_t n = nodes.size();
    const double inv_h2 = 1.0 / (step * step);
    DenseSymMatrix m = DenseSymMatrix::zero(n);
    for (std::size_t t = 0; t < n; ++t) {
        const auto [i, j] = nodes[t];
        m.at(t, t) = 4.0 * inv_h2;
        for (const auto& [di, dj] : {std::pair{1L, 0L}, {-1L, 0L}, {0L, 1L}, {0L, -1L}}) {
            const long ni = i + di, nj = j + dj;
            if (std::abs(ni) <= kmax && std::abs(nj) <= kmax && cell(ni, nj) >= 0)
                m.at(t, static_cast<std::size_t>(cell(ni, nj))) = -inv_h2;
        }
    }
    return symmetric_eigen_large(m);
}

std::vector<double> fd_box0_rectangle(double a, double b, std::size_t nx, std::size_t ny) {
    if (!(a > 0.0) || !(b > 0.0))
        throw std::invalid_argument("fd_box0_rectangle: sides must be positive");
    if (nx < 4 || ny < 4)
        throw std::invalid_argument("fd_box0_rectangle: nx, ny must be >= 4");
    const std::size_t n = nx * ny;
    const double hx = a / static_cast<double>(nx - 1);
    const double hy = b / static_cast<double>(ny - 1);
    auto idx = [ny](std::size_t i, std::size_t j) { return i * ny + j; };

    // dbar u sampled at cell centers: transverse averages of forward
    // differences, then dbar = (d/dx + i d/dy)/2. No boundary condition is
    // imposed on u; the Neumann-type condition is natural for the form.
    // H = dbar^H dbar = A + iB with A symmetric, B antisymmetric.
    std::vector<double> ar(n * n, 0.0), br(n * n, 0.0);
    const std::complex<double> cx(1.0 / (4.0 * hx), 0.0);
    const std::complex<double> cy(0.0, 1.0 / (4.0 * hy));
    for (std::size_t i = 0; i + 1 < nx; ++i) {
        for (std::size_t j = 0; j + 1 < ny; ++j) {
            const std::size_t support[4] = {idx(i, j), idx(i, j + 1), idx(i + 1, j),
                                            idx(i + 1, j + 1)};
            const std::complex<double> coef[4] = {-cx - cy, -cx + cy, cx - cy, cx + cy};
            for (int u = 0; u < 4; ++u) {
                for (int v = 0; v < 4; ++v) {
                    const std::complex<double> c = std::conj(coef[u]) * coef[v];
                    ar[support[u] * n + support[v]] += c.real();
                    br[support[u] * n + support[v]] += c.imag();
                }
            }
        }
    }

    // Doubled real realization [[A, -B], [B, A]]; eigenvalues come in
    // exact pairs, one per complex eigenvalue.
    const std::size_t n2 = 2 * n;
    std::vector<double> dbl(n2 * n2, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            dbl[i * n2 + j] = ar[i * n + j];
            dbl[i * n2 + (n + j)] = -br[i * n + j];
            dbl[(n + i) * n2 + j] = br[i * n + j];
            dbl[(n + i) * n2 + (n + j)] = ar[i * n + j];
        }
    }
    std::vector<double> paired = symmetric_eigen_large(DenseSymMatrix(n2, std::move(dbl)));
    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = paired[2 * i];
    return eig;
}

}  // namespace boxspec::oracle
