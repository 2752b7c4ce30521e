#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "boxspec/spectrum.hpp"

namespace boxspec {

struct Disc {
    double radius;
};

struct Rectangle {
    double a;
    double b;
};

/// Factor whose spectra come from an external source (annuli, Hartogs
/// triangles, higher-dimensional factors). pure_point=false means the data
/// is set-only and multiplicity claims are dropped downstream.
struct Custom {
    int complex_dim = 1;
    BidegreeSpectrum spectra;
    std::optional<HarmonicDims> harmonic;
    bool pure_point = true;
};

using PlanarDomain = std::variant<Disc, Rectangle, Custom>;

int domain_complex_dim(const PlanarDomain& d);

/// sigma_{0,1} of the disc: values j_{n,k}^2 / (4 r^2) below the cutoff,
/// multiplicity 1 for n = 0 and 2 for n >= 1 (angular degeneracy).
/// Complete below the cutoff. Throws when the cutoff would require Bessel
/// zeros outside the accuracy envelope, naming the limiting (n,k).
TruncatedSpectrum disc_sigma01(double radius, double cutoff,
                               double merge_tol = kDefaultMergeTol);

/// sigma_{0,1} of the a x b rectangle: values (pi^2/4)(m^2/a^2 + n^2/b^2)
/// for m,n >= 1 below the cutoff, collision-merged. Complete.
TruncatedSpectrum rect_sigma01(double a, double b, double cutoff,
                               double merge_tol = kDefaultMergeTol);

struct FactorData {
    BidegreeSpectrum spectra;
    HarmonicDims harmonic;  // empty table when a Custom factor omits it
    bool pure_point = true;
    // sigma_{1,q} = sigma_{0,q} rests on the flat dz frame; recorded so
    // reports can carry the provenance note.
    bool flat_frame_identification = false;
};

/// Full bidegree table of one factor below the cutoff.
///
/// For Disc and Rectangle: sigma_{0,1} from the analytic provider;
/// sigma_{0,0} = {0 with infinite multiplicity (Bergman space)} plus a
/// positive part identical to sigma_{0,1}; sigma_{1,q} = sigma_{0,q}
/// (parallel dz frame). Harmonic dims: infinite at (0,0), (1,0) and zero
/// at (0,1), (1,1). Custom factors pass their stored tables through after
/// validation.
FactorData factor_bidegree(const PlanarDomain& domain, double cutoff,
                           double merge_tol = kDefaultMergeTol);

/// Schema violation in custom-spectrum input; pointer locates the field.
struct SchemaError : std::runtime_error {
    SchemaError(const std::string& msg, std::string ptr)
        : std::runtime_error(msg), pointer(std::move(ptr)) {}
    std::string pointer;
};

/// Parse a Custom factor from the JSON schema shared with the CLI:
/// {"type":"custom","dim":D,"pure_point":B,
///  "spectra":{"P,Q":[[value,mult],...]},"harmonic":{"P,Q":mult}}
/// mult is a positive integer or "inf". Rejects negative values, unsorted
/// tables and multiplicity 0 with a JSON pointer to the offending field.
Custom load_custom_spectrum(const std::string& json_text, double cutoff,
                            double merge_tol = kDefaultMergeTol);
Custom load_custom_spectrum(std::istream& in, double cutoff,
                            double merge_tol = kDefaultMergeTol);

}  // namespace boxspec
