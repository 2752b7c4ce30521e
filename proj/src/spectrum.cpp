#include "boxspec/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace boxspec {

bool values_merge(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

namespace {

// Sort by value and coalesce runs that fall within merge_tol of the run
// representative (the smallest member). Multiplicities add within a run.
std::vector<SpectralPoint> sort_and_merge(std::vector<SpectralPoint> pts, double merge_tol) {
    std::sort(pts.begin(), pts.end(),
              [](const SpectralPoint& a, const SpectralPoint& b) { return a.value < b.value; });
    std::vector<SpectralPoint> out;
    for (const auto& p : pts) {
        if (!out.empty() && values_merge(out.back().value, p.value, merge_tol)) {
            out.back().multiplicity = out.back().multiplicity + p.multiplicity;
        } else {
            out.push_back(p);
        }
    }
    return out;
}

}  // namespace

TruncatedSpectrum::TruncatedSpectrum(std::vector<SpectralPoint> raw_points, double cutoff,
                                     bool complete_below_cutoff, double merge_tol,
                                     bool pure_point)
    : cutoff_(cutoff), complete_(complete_below_cutoff), merge_tol_(merge_tol),
      pure_point_(pure_point) {
    if (!(cutoff > 0.0))
        throw std::invalid_argument("TruncatedSpectrum: cutoff must be positive");
    if (merge_tol < 0.0)
        throw std::invalid_argument("TruncatedSpectrum: merge_tol must be nonnegative");
    for (const auto& p : raw_points) {
        if (p.value < 0.0)
            throw std::invalid_argument("TruncatedSpectrum: negative eigenvalue");
    }
    std::erase_if(raw_points, [&](const SpectralPoint& p) { return p.value >= cutoff; });
    points_ = sort_and_merge(std::move(raw_points), merge_tol_);
}

ExtendedCardinal TruncatedSpectrum::multiplicity_at(double value) const {
    for (const auto& p : points_) {
        if (values_merge(p.value, value, merge_tol_))
            return ExtendedCardinal::from(p.multiplicity);
        if (p.value > value) break;
    }
    return ExtendedCardinal::zero();
}

TruncatedSpectrum minkowski_sum(const TruncatedSpectrum& s, const TruncatedSpectrum& t) {
    const double cutoff = std::min(s.cutoff(), t.cutoff());
    const double merge_tol = std::max(s.merge_tol(), t.merge_tol());
    std::vector<SpectralPoint> sums;
    sums.reserve(s.points().size() * t.points().size());
    for (const auto& a : s.points()) {
        for (const auto& b : t.points()) {
            const double v = a.value + b.value;
            if (v >= cutoff) break;  // t ascending, later sums only larger
            sums.push_back({v, a.multiplicity * b.multiplicity});
        }
    }
    return TruncatedSpectrum(std::move(sums), cutoff,
                             s.complete_below_cutoff() && t.complete_below_cutoff(), merge_tol,
                             s.pure_point() && t.pure_point());
}

TruncatedSpectrum minkowski_sum_many(const std::vector<TruncatedSpectrum>& factors) {
    if (factors.empty())
        throw std::invalid_argument("minkowski_sum_many: empty factor list");
    TruncatedSpectrum acc = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i)
        acc = minkowski_sum(acc, factors[i]);
    return acc;
}

GapReport gap_report(const TruncatedSpectrum& s) {
    GapReport r;
    if (!s.complete_below_cutoff()) {
        r.verdict = RangeVerdict::Unknown;
        return r;
    }
    r.verdict = RangeVerdict::ClosedRange;
    const auto& pts = s.points();
    auto it = std::find_if(pts.begin(), pts.end(),
                           [](const SpectralPoint& p) { return p.value > 0.0; });
    if (it == pts.end()) {
        r.gap = s.cutoff();
        r.gap_is_lower_bound = true;
    } else {
        r.gap = it->value;
    }
    r.bound_constant = r.gap;
    return r;
}

ExtendedCardinal kernel_dim(const TruncatedSpectrum& s, double zero_tol) {
    if (zero_tol < 0.0)
        throw std::invalid_argument("kernel_dim: zero_tol must be nonnegative");
    // A lone point within zero_tol is the kernel point (analytic providers
    // emit exact 0, oracles near-zero noise). Two points inside the window
    // mean zero_tol swallowed a genuine positive eigenvalue.
    std::size_t within = 0;
    ExtendedCardinal dim = ExtendedCardinal::zero();
    for (const auto& p : s.points()) {
        if (p.value > zero_tol) break;
        ++within;
        dim = ExtendedCardinal::from(p.multiplicity);
    }
    if (within > 1)
        throw std::invalid_argument("kernel_dim: zero_tol overlaps a positive eigenvalue");
    return dim;
}

namespace {

template <typename Fn>
void for_each_split(const std::vector<int>& dims, int p, int q, std::vector<Bidegree>& split,
                    std::size_t j, Fn&& fn) {
    if (j == dims.size()) {
        if (p == 0 && q == 0) fn(split);
        return;
    }
    for (int pj = 0; pj <= std::min(p, dims[j]); ++pj) {
        for (int qj = 0; qj <= std::min(q, dims[j]); ++qj) {
            split.push_back({pj, qj});
            for_each_split(dims, p - pj, q - qj, split, j + 1, fn);
            split.pop_back();
        }
    }
}

}  // namespace

BidegreeProduct bidegree_product(const std::vector<BidegreeSpectrum>& factors) {
    if (factors.empty())
        throw std::invalid_argument("bidegree_product: empty factor list");
    std::vector<int> dims;
    int n_total = 0;
    for (const auto& f : factors) {
        if (f.complex_dim <= 0)
            throw std::invalid_argument("bidegree_product: factor complex_dim must be positive");
        dims.push_back(f.complex_dim);
        n_total += f.complex_dim;
    }

    BidegreeProduct out;
    out.spectra.complex_dim = n_total;
    for (int p = 0; p <= n_total; ++p) {
        for (int q = 0; q <= n_total; ++q) {
            std::vector<std::vector<const TruncatedSpectrum*>> splits;
            std::optional<std::string> missing;
            std::vector<Bidegree> split;
            for_each_split(dims, p, q, split, 0, [&](const std::vector<Bidegree>& s) {
                if (missing) return;
                std::vector<const TruncatedSpectrum*> specs;
                for (std::size_t j = 0; j < s.size(); ++j) {
                    auto it = factors[j].table.find(s[j]);
                    if (it == factors[j].table.end()) {
                        missing = "factor " + std::to_string(j + 1) + " lacks bidegree (" +
                                  std::to_string(s[j].p) + "," + std::to_string(s[j].q) + ")";
                        return;
                    }
                    specs.push_back(&it->second);
                }
                splits.push_back(std::move(specs));
            });
            if (missing) {
                out.unavailable.emplace(Bidegree{p, q}, *missing);
                continue;
            }
            if (splits.empty()) continue;  // no split exists for this (p,q)

            double cutoff = std::numeric_limits<double>::infinity();
            double merge_tol = 0.0;
            bool complete = true;
            bool pure = true;
            std::vector<SpectralPoint> pool;
            for (const auto& specs : splits) {
                std::vector<TruncatedSpectrum> parts;
                parts.reserve(specs.size());
                for (const auto* sp : specs) parts.push_back(*sp);
                TruncatedSpectrum term = minkowski_sum_many(parts);
                cutoff = std::min(cutoff, term.cutoff());
                merge_tol = std::max(merge_tol, term.merge_tol());
                complete = complete && term.complete_below_cutoff();
                pure = pure && term.pure_point();
                pool.insert(pool.end(), term.points().begin(), term.points().end());
            }
            out.spectra.table.emplace(
                Bidegree{p, q},
                TruncatedSpectrum(std::move(pool), cutoff, complete, merge_tol, pure));
        }
    }
    return out;
}

KunnethProduct kunneth_product(const std::vector<HarmonicDims>& factors) {
    if (factors.empty())
        throw std::invalid_argument("kunneth_product: empty factor list");
    std::vector<int> dims;
    int n_total = 0;
    for (const auto& f : factors) {
        if (f.complex_dim <= 0)
            throw std::invalid_argument("kunneth_product: factor complex_dim must be positive");
        dims.push_back(f.complex_dim);
        n_total += f.complex_dim;
    }

    KunnethProduct out;
    out.dims.complex_dim = n_total;
    for (int p = 0; p <= n_total; ++p) {
        for (int q = 0; q <= n_total; ++q) {
            ExtendedCardinal total = ExtendedCardinal::zero();
            std::optional<std::string> missing;
            bool any_split = false;
            std::vector<Bidegree> split;
            for_each_split(dims, p, q, split, 0, [&](const std::vector<Bidegree>& s) {
                any_split = true;
                if (missing) return;
                ExtendedCardinal prod = ExtendedCardinal::finite(1);
                for (std::size_t j = 0; j < s.size(); ++j) {
                    auto it = factors[j].table.find(s[j]);
                    if (it == factors[j].table.end()) {
                        missing = "factor " + std::to_string(j + 1) + " lacks bidegree (" +
                                  std::to_string(s[j].p) + "," + std::to_string(s[j].q) + ")";
                        return;
                    }
                    prod = prod * it->second;
                }
                total = total + prod;
            });
            if (missing) {
                out.unavailable.emplace(Bidegree{p, q}, *missing);
                continue;
            }
            if (any_split) out.dims.table.emplace(Bidegree{p, q}, total);
        }
    }
    return out;
}

}  // namespace boxspec
