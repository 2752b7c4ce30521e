#include "boxspec/polydomain.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "boxspec/bessel.hpp"

namespace boxspec {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Choice {
    double value;
    Multiplicity mult;
    int rank;  // 0 = Bergman point, >= 1 = rank into the distinct positive list
};

struct FactorLists {
    std::vector<Choice> mu;      // sigma_{0,1}, ranks 1..
    std::vector<Choice> lambda;  // sigma_{0,0} including the Bergman point
};

void require_complete(const TruncatedSpectrum& s, double cutoff, const char* what) {
    if (!s.complete_below_cutoff() || s.cutoff() < cutoff)
        throw std::invalid_argument(std::string("enumerate_box_q: factor ") + what +
                                    " spectrum incomplete below the cutoff");
}

FactorLists factor_lists(const PlanarDomain& domain, double cutoff, double merge_tol) {
    if (const auto* c = std::get_if<Custom>(&domain)) {
        if (!c->pure_point)
            throw std::invalid_argument(
                "enumerate_box_q: custom factor without pure_point cannot support "
                "multiplicity enumeration");
        if (c->complex_dim != 1)
            throw std::invalid_argument(
                "enumerate_box_q: factors must have complex dimension 1");
    }
    const FactorData fd = factor_bidegree(domain, cutoff, merge_tol);
    auto it01 = fd.spectra.table.find({0, 1});
    auto it00 = fd.spectra.table.find({0, 0});
    if (it01 == fd.spectra.table.end() || it00 == fd.spectra.table.end())
        throw std::invalid_argument(
            "enumerate_box_q: factor does not provide sigma_{0,1} and sigma_{0,0}");
    require_complete(it01->second, cutoff, "(0,1)");
    require_complete(it00->second, cutoff, "(0,0)");

    FactorLists out;
    int rank = 1;
    for (const auto& p : it01->second.points())
        out.mu.push_back({p.value, p.multiplicity, rank++});
    rank = 1;
    for (const auto& p : it00->second.points()) {
        if (p.value <= kDefaultZeroTol)
            out.lambda.push_back({p.value, p.multiplicity, 0});
        else
            out.lambda.push_back({p.value, p.multiplicity, rank++});
    }
    return out;
}

struct Combo {
    double value;
    Multiplicity mult;
    EigenLabel label;
};

void collect_combos(const std::vector<const std::vector<Choice>*>& lists,
                    const std::vector<int>& in_J, const std::vector<double>& suffix_min,
                    double cutoff, std::size_t j, double value, Multiplicity mult,
                    EigenLabel& label, std::vector<Combo>& out) {
    if (j == lists.size()) {
        Combo c{value, mult, label};
        // Classification: W when every complement factor is at its Bergman
        // point; the k map of a W label covers J only.
        bool all_bergman = true;
        for (std::size_t t = 0; t < in_J.size(); ++t)
            if (!in_J[t] && c.label.k.at(static_cast<int>(t) + 1) != 0) all_bergman = false;
        if (all_bergman) {
            c.label.kind = EigenLabel::Kind::W;
            for (std::size_t t = 0; t < in_J.size(); ++t)
                if (!in_J[t]) c.label.k.erase(static_cast<int>(t) + 1);
        } else {
            c.label.kind = EigenLabel::Kind::V;
        }
        out.push_back(std::move(c));
        return;
    }
    for (const Choice& ch : *lists[j]) {
        const double v = value + ch.value;
        if (v + suffix_min[j + 1] >= cutoff) break;  // ascending lists
        label.k[static_cast<int>(j) + 1] = ch.rank;
        collect_combos(lists, in_J, suffix_min, cutoff, j + 1, v, mult * ch.mult, label, out);
    }
    label.k.erase(static_cast<int>(j) + 1);
}

}  // namespace

Enumeration enumerate_box_q(const std::vector<PlanarDomain>& factors, int q, double cutoff,
                            double merge_tol) {
    const int n = static_cast<int>(factors.size());
    if (n == 0) throw std::invalid_argument("enumerate_box_q: no factors");
    if (q < 0 || q > n)
        throw std::invalid_argument("enumerate_box_q: q must satisfy 0 <= q <= n");
    if (!(cutoff > 0.0)) throw std::invalid_argument("enumerate_box_q: cutoff must be positive");

    std::vector<FactorLists> lists;
    lists.reserve(factors.size());
    bool any_custom = false;
    for (const auto& f : factors) {
        lists.push_back(factor_lists(f, cutoff, merge_tol));
        any_custom = any_custom || std::holds_alternative<Custom>(f);
    }

    std::vector<Combo> combos;
    std::vector<int> subset(q);
    for (int i = 0; i < q; ++i) subset[i] = i;
    while (true) {
        std::vector<int> in_J(n, 0);
        for (int s : subset) in_J[s] = 1;
        std::vector<const std::vector<Choice>*> choice_lists(n);
        for (int j = 0; j < n; ++j)
            choice_lists[j] = in_J[j] ? &lists[j].mu : &lists[j].lambda;

        bool feasible = true;
        std::vector<double> suffix_min(n + 1, 0.0);
        for (int j = n; j-- > 0;) {
            if (choice_lists[j]->empty()) {
                feasible = false;
                break;
            }
            suffix_min[j] = suffix_min[j + 1] + choice_lists[j]->front().value;
        }
        if (feasible) {
            EigenLabel label;
            for (int s : subset) label.J.push_back(s + 1);
            collect_combos(choice_lists, in_J, suffix_min, cutoff, 0, 0.0,
                           Multiplicity::finite(1), label, combos);
        }

        // next q-combination of {0..n-1}
        if (q == 0) break;
        int i = q - 1;
        while (i >= 0 && subset[i] == n - q + i) --i;
        if (i < 0) break;
        ++subset[i];
        for (int t = i + 1; t < q; ++t) subset[t] = subset[t - 1] + 1;
    }

    std::sort(combos.begin(), combos.end(), [](const Combo& a, const Combo& b) {
        return a.value < b.value;
    });

    Enumeration result;
    result.n = n;
    result.q = q;
    result.cutoff = cutoff;
    result.merge_tol = merge_tol;
    result.assumes_pure_point = any_custom;
    for (const auto& c : combos) {
        if (!result.entries.empty() &&
            values_merge(result.entries.back().value, c.value, merge_tol)) {
            EigenEntry& e = result.entries.back();
            e.multiplicity = e.multiplicity + c.mult;
            if (e.labels.size() < kLabelCap)
                e.labels.push_back(c.label);
            else
                e.labels_truncated = true;
        } else {
            if (!result.entries.empty())
                std::sort(result.entries.back().labels.begin(),
                          result.entries.back().labels.end());
            result.entries.push_back({c.value, c.mult, {c.label}, false});
        }
    }
    if (!result.entries.empty())
        std::sort(result.entries.back().labels.begin(), result.entries.back().labels.end());
    return result;
}

ExtendedCardinal counting_function(const Enumeration& enumeration, double lambda) {
    if (lambda >= enumeration.cutoff)
        throw std::invalid_argument(
            "counting_function: lambda reaches the completeness cutoff (count would be "
            "short)");
    ExtendedCardinal total = ExtendedCardinal::zero();
    for (const auto& e : enumeration.entries) {
        if (e.value > lambda) break;
        total = total + ExtendedCardinal::from(e.multiplicity);
    }
    return total;
}

CompactnessVerdict compactness_verdict(int q, int n) {
    if (n < 1 || q < 0 || q > n)
        throw std::invalid_argument("compactness_verdict: need 0 <= q <= n, n >= 1");
    if (q == 0)
        return {Compactness::NotApplicable,
                "q = 0: the non-compactness statement covers 0 < q < n only"};
    if (q < n)
        return {Compactness::NonCompact,
                "0 < q < n: box_q has eigenvalues of infinite multiplicity"};
    return {Compactness::Compact,
            "q = n: all multiplicities finite and eigenvalues unbounded (Dirichlet-type "
            "problem; verdict extends the stated non-compact range)"};
}

namespace {

// Distinct eigenvalue ranks resolved to concrete modes.
struct RectMode {
    int m, n;
};

RectMode rect_mode_for_rank(double a, double b, int rank, double merge_tol) {
    const double cx = kPi * kPi / (4.0 * a * a);
    const double cy = kPi * kPi / (4.0 * b * b);
    double bound = (cx + cy) * 4.0 * (rank + 1) * (rank + 1);
    for (;;) {
        std::vector<std::pair<double, RectMode>> vals;
        for (int m = 1; cx * m * m + cy < bound; ++m)
            for (int n = 1; cx * m * m + cy * n * n < bound; ++n)
                vals.push_back({cx * m * m + cy * n * n, {m, n}});
        std::sort(vals.begin(), vals.end(),
                  [](const auto& x, const auto& y) {
                      if (x.first != y.first) return x.first < y.first;
                      return std::pair{x.second.m, x.second.n} <
                             std::pair{y.second.m, y.second.n};
                  });
        int distinct = 0;
        double prev = -1.0;
        for (const auto& [v, mode] : vals) {
            if (prev < 0.0 || !values_merge(prev, v, merge_tol)) {
                ++distinct;
                prev = v;
                if (distinct == rank) return mode;
            }
        }
        bound *= 2.0;
    }
}

struct DiscMode {
    int order, zero_rank;
    double zero;
};

DiscMode disc_mode_for_rank(double radius, int rank, double merge_tol) {
    double bound = kPi * (rank + 2);
    for (;;) {
        std::vector<std::pair<double, DiscMode>> vals;
        for (int nn = 0; static_cast<double>(nn) < bound && nn <= kBesselMaxOrder; ++nn) {
            bool any = false;
            for (int kk = 1;; ++kk) {
                const double z = bessel_zero(nn, kk);
                if (z >= bound) break;
                any = true;
                vals.push_back({z * z / (4.0 * radius * radius), {nn, kk, z}});
            }
            if (!any && nn > 0) break;
        }
        std::sort(vals.begin(), vals.end(), [](const auto& x, const auto& y) {
            if (x.first != y.first) return x.first < y.first;
            return std::pair{x.second.order, x.second.zero_rank} <
                   std::pair{y.second.order, y.second.zero_rank};
        });
        int distinct = 0;
        double prev = -1.0;
        for (const auto& [v, mode] : vals) {
            if (prev < 0.0 || !values_merge(prev, v, merge_tol)) {
                ++distinct;
                prev = v;
                if (distinct == rank) return mode;
            }
        }
        bound *= 2.0;
    }
}

FactorSample normalize(FactorSample s, double grid_step) {
    double norm2 = 0.0;
    for (const auto& v : s.values) norm2 += std::norm(v);
    norm2 *= grid_step * grid_step;
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& v : s.values) v *= inv;
    return s;
}

FactorSample sample_rect_dirichlet(double a, double b, RectMode mode, double step) {
    FactorSample s;
    for (double x = step; x < a; x += step) {
        for (double y = step; y < b; y += step) {
            s.xs.push_back(x);
            s.ys.push_back(y);
            s.values.push_back(std::sin(mode.m * kPi * x / a) * std::sin(mode.n * kPi * y / b));
        }
    }
    return normalize(std::move(s), step);
}

FactorSample sample_disc(double radius, double step,
                         const std::function<std::complex<double>(double, double)>& f) {
    FactorSample s;
    const long kmax = static_cast<long>(std::floor(radius / step));
    for (long i = -kmax; i <= kmax; ++i) {
        for (long j = -kmax; j <= kmax; ++j) {
            const double x = i * step, y = j * step;
            if (x * x + y * y >= radius * radius) continue;
            s.xs.push_back(x);
            s.ys.push_back(y);
            s.values.push_back(f(x, y));
        }
    }
    return normalize(std::move(s), step);
}

}  // namespace

FormSample eigenform_sample(const std::vector<PlanarDomain>& factors, int q,
                            const EigenLabel& label, double grid_step,
                            const std::map<int, int>& holo_index) {
    const int n = static_cast<int>(factors.size());
    if (static_cast<int>(label.J.size()) != q)
        throw std::invalid_argument("eigenform_sample: |J| != q");
    if (!(grid_step > 0.0))
        throw std::invalid_argument("eigenform_sample: grid_step must be positive");
    if (label.kind == EigenLabel::Kind::V)
        throw std::invalid_argument(
            "eigenform_sample: V labels (kernel-orthogonal complement factors) are not "
            "supported for sampling");
    for (int j : label.J)
        if (j < 1 || j > n) throw std::invalid_argument("eigenform_sample: J index out of range");

    FormSample out;
    out.dzbar = label.J;
    for (int j = 1; j <= n; ++j) {
        const PlanarDomain& dom = factors[j - 1];
        if (std::holds_alternative<Custom>(dom))
            throw std::invalid_argument("eigenform_sample: custom factors are unsupported");
        const bool in_J = std::find(label.J.begin(), label.J.end(), j) != label.J.end();
        if (in_J) {
            const int rank = label.k.at(j);
            if (const auto* r = std::get_if<Rectangle>(&dom)) {
                const RectMode mode = rect_mode_for_rank(r->a, r->b, rank, kDefaultMergeTol);
                out.factors.push_back(sample_rect_dirichlet(r->a, r->b, mode, grid_step));
            } else {
                const auto& d = std::get<Disc>(dom);
                const DiscMode mode = disc_mode_for_rank(d.radius, rank, kDefaultMergeTol);
                out.factors.push_back(sample_disc(d.radius, grid_step, [&](double x, double y) {
                    const double rr = std::hypot(x, y);
                    const double th = std::atan2(y, x);
                    return std::complex<double>(
                        bessel_j(mode.order, mode.zero * rr / d.radius) *
                        std::cos(mode.order * th));
                }));
            }
        } else {
            // Bergman factor: monomial basis, disc factors only.
            const auto* d = std::get_if<Disc>(&dom);
            if (d == nullptr)
                throw std::invalid_argument(
                    "eigenform_sample: the rectangle Bergman basis is index-only; sampling "
                    "needs disc complement factors");
            auto it = holo_index.find(j);
            const int m = (it == holo_index.end()) ? 0 : it->second;
            if (m < 0) throw std::invalid_argument("eigenform_sample: negative monomial index");
            out.factors.push_back(sample_disc(d->radius, grid_step, [&](double x, double y) {
                return std::pow(std::complex<double>(x, y), m);
            }));
        }
    }
    return out;
}

}  // namespace boxspec
