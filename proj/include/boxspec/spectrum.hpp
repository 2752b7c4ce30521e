#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "boxspec/multiplicity.hpp"

namespace boxspec {

inline constexpr double kDefaultMergeTol = 1e-9;
inline constexpr double kDefaultZeroTol = 1e-12;

/// Relative merge rule shared by all spectrum constructions:
/// a and b coalesce iff |a - b| <= tol * max(1, |a|, |b|).
bool values_merge(double a, double b, double tol);

struct SpectralPoint {
    double value;
    Multiplicity multiplicity;
};

/// Sorted multiset of nonnegative eigenvalues, complete below a cutoff.
///
/// Invariants: values strictly ascending and pairwise non-mergeable under
/// merge_tol, all values < cutoff, values >= 0. If complete_below_cutoff
/// holds, the represented operator has no spectrum in [0, cutoff) beyond
/// the listed points. Sums of listed nonnegative points below the cutoff
/// are again listed points, so the closure step that a Minkowski sum of
/// closed sets would require ("E+F is also a closed set") never arises
/// inside the truncation window.
///
/// pure_point=false marks set-only data (continuous-spectrum factors);
/// multiplicities of such spectra are placeholders and every derived
/// spectrum is demoted to set-only as well.
class TruncatedSpectrum {
public:
    TruncatedSpectrum(std::vector<SpectralPoint> raw_points, double cutoff,
                      bool complete_below_cutoff,
                      double merge_tol = kDefaultMergeTol,
                      bool pure_point = true);

    const std::vector<SpectralPoint>& points() const { return points_; }
    double cutoff() const { return cutoff_; }
    bool complete_below_cutoff() const { return complete_; }
    double merge_tol() const { return merge_tol_; }
    bool pure_point() const { return pure_point_; }
    bool empty() const { return points_.empty(); }

    /// Multiplicity at a given value (within merge_tol), Zero if absent.
    ExtendedCardinal multiplicity_at(double value) const;

private:
    std::vector<SpectralPoint> points_;
    double cutoff_;
    bool complete_;
    double merge_tol_;
    bool pure_point_;
};

struct Bidegree {
    int p;
    int q;
    auto operator<=>(const Bidegree&) const = default;
};

/// Per-(p,q) spectra of one factor or product manifold. An absent bidegree
/// means "not provided", never "empty spectrum".
struct BidegreeSpectrum {
    int complex_dim = 1;
    std::map<Bidegree, TruncatedSpectrum> table;
};

enum class RangeVerdict { ClosedRange, NotClosedRange, Unknown };

struct GapReport {
    RangeVerdict verdict = RangeVerdict::Unknown;
    std::optional<double> gap;
    std::optional<double> bound_constant;  // C of ||Ax|| >= C ||x||, = gap
    // Set when no positive point exists below the cutoff, so the true gap
    // is at least the cutoff.
    bool gap_is_lower_bound = false;
};

/// Per-(p,q) dimensions of ker(box), the L2 cohomology bookkeeping.
struct HarmonicDims {
    int complex_dim = 1;
    std::map<Bidegree, ExtendedCardinal> table;
};

// ---- Operations -----------------------------------------------------------

/// Minkowski sum of two truncated spectra. Result cutoff = min of inputs,
/// multiplicities multiply per pair and merge additively on collisions,
/// completeness flags conjoin. All values nonnegative, so every sum below
/// the result cutoff uses only addends below it.
TruncatedSpectrum minkowski_sum(const TruncatedSpectrum& s, const TruncatedSpectrum& t);

/// Left fold of minkowski_sum in input order; rejects an empty list.
TruncatedSpectrum minkowski_sum_many(const std::vector<TruncatedSpectrum>& factors);

/// Spectral-gap verdict. A complete spectrum yields ClosedRange with gap
/// equal to its smallest positive value (or at least the cutoff when no
/// positive point exists). Incomplete data yields Unknown; a finite complete
/// representation can never witness NotClosedRange.
GapReport gap_report(const TruncatedSpectrum& s);

/// Multiplicity of the point at 0 (within zero_tol), Zero if absent.
/// Throws if zero_tol overlaps a positive eigenvalue (ambiguous kernel).
ExtendedCardinal kernel_dim(const TruncatedSpectrum& s, double zero_tol = kDefaultZeroTol);

/// Result of bidegree_product / kunneth_product: computed entries plus, for
/// target bidegrees some factor could not serve, a marker naming the gap.
struct BidegreeProduct {
    BidegreeSpectrum spectra;
    std::map<Bidegree, std::string> unavailable;
};

/// Product-manifold bidegree table: for each target (p,q), the union over
/// all splits p = sum p_j, q = sum q_j of the Minkowski sums of per-factor
/// spectra. Collisions merge additively; a target with any missing factor
/// bidegree is marked unavailable rather than guessed.
BidegreeProduct bidegree_product(const std::vector<BidegreeSpectrum>& factors);

struct KunnethProduct {
    HarmonicDims dims;
    std::map<Bidegree, std::string> unavailable;
};

/// Cardinal Kunneth arithmetic: dim at (p,q) is the sum over splits of the
/// per-factor dimension products. A factor declares a bidegree trivial by
/// listing it as Zero; absent entries mark the target unavailable.
KunnethProduct kunneth_product(const std::vector<HarmonicDims>& factors);

}  // namespace boxspec
