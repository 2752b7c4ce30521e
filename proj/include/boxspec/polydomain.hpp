#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "boxspec/factor_domains.hpp"
#include "boxspec/spectrum.hpp"

namespace boxspec {

/// Label of a product eigenform. J (1-based factor indices, |J| = q) names
/// the factors carrying the dzbar direction. For kind W the index map k is
/// defined on J only and every complement factor sits in its Bergman
/// space. For kind V the map covers all factors; on complement factors
/// k_j >= 1 picks the k-th distinct positive eigenvalue and k_j = 0 the
/// Bergman eigenvalue 0 (mixed complements arise for three or more
/// factors). Indices are ranks into the factor's distinct eigenvalue
/// lists, 1-based.
struct EigenLabel {
    enum class Kind { W, V };
    Kind kind = Kind::W;
    std::vector<int> J;
    std::map<int, int> k;

    auto operator<=>(const EigenLabel&) const = default;
};

inline constexpr int kLabelCap = 16;

struct EigenEntry {
    double value = 0.0;
    Multiplicity multiplicity = Multiplicity::finite(1);
    std::vector<EigenLabel> labels;  // representative labels, canonical order
    bool labels_truncated = false;   // more than kLabelCap labels exist
};

/// Output of enumerate_box_q: complete labeled list below the cutoff.
struct Enumeration {
    std::vector<EigenEntry> entries;
    int n = 0;  // number of factors
    int q = 0;
    double cutoff = 0.0;
    double merge_tol = kDefaultMergeTol;
    // Custom factors contribute on the strength of their declared
    // pure_point flag; recorded rather than verified.
    bool assumes_pure_point = false;
};

/// Complete labeled eigenstructure of box_q on the product of planar
/// factors below the cutoff. Entries with equal values (within merge_tol)
/// merge additively and the list is sorted ascending. The
/// value/multiplicity multiset equals the (0,q) table of bidegree_product
/// on the same factors.
Enumeration enumerate_box_q(const std::vector<PlanarDomain>& factors, int q, double cutoff,
                            double merge_tol = kDefaultMergeTol);

/// Cardinal count of eigenvalues <= lambda with multiplicity. Throws when
/// lambda reaches the completeness cutoff (the count would be short).
ExtendedCardinal counting_function(const Enumeration& enumeration, double lambda);

enum class Compactness { NonCompact, Compact, NotApplicable };

struct CompactnessVerdict {
    Compactness verdict;
    std::string reason;
};

/// dbar-Neumann operator N_q on an n-factor polydomain: non-compact for
/// 0 < q < n (eigenvalues of infinite multiplicity), compact for q = n
/// (all multiplicities finite, values unbounded), not applicable at q = 0.
CompactnessVerdict compactness_verdict(int q, int n);

/// Discrete samples of one factor's eigenform coefficient on a square
/// grid of the given step; nodes outside a disc factor are omitted.
struct FactorSample {
    std::vector<double> xs;  // node coordinates, same length as values
    std::vector<double> ys;
    std::vector<std::complex<double>> values;  // unit discrete L2 norm
};

/// Samples of the product eigenform coefficient attached to dzbar^J: one
/// normalized per-factor table per factor (the product form is their
/// outer product). Factors carrying the dzbar direction sample the
/// Dirichlet-type eigenfunction; Bergman factors sample the monomial
/// z^m chosen by holo_index (disc factors only; the rectangle Bergman
/// basis is index-only). Sampling V labels is unsupported.
struct FormSample {
    std::vector<int> dzbar;  // = label.J
    std::vector<FactorSample> factors;
};

FormSample eigenform_sample(const std::vector<PlanarDomain>& factors, int q,
                            const EigenLabel& label, double grid_step,
                            const std::map<int, int>& holo_index = {});

}  // namespace boxspec
