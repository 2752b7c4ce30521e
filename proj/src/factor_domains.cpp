#include "boxspec/factor_domains.hpp"

#include <cmath>
#include <istream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "boxspec/bessel.hpp"
#include "boxspec/custom_json.hpp"

namespace boxspec {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_positive(double v, const char* what) {
    if (!(v > 0.0)) throw std::invalid_argument(std::string(what) + " must be positive");
}

}  // namespace

int domain_complex_dim(const PlanarDomain& d) {
    if (const auto* c = std::get_if<Custom>(&d)) return c->complex_dim;
    return 1;
}

TruncatedSpectrum disc_sigma01(double radius, double cutoff, double merge_tol) {
    check_positive(radius, "disc radius");
    check_positive(cutoff, "cutoff");
    // j_{n,k}^2 / (4 r^2) < cutoff  <=>  j_{n,k} < 2 r sqrt(cutoff)
    const double zero_bound = 2.0 * radius * std::sqrt(cutoff);
    if (zero_bound > kBesselMaxArgument)
        throw std::domain_error(
            "disc_sigma01: cutoff requires Bessel zeros beyond the envelope, "
            "first at (n=0, k~" +
            std::to_string(static_cast<int>(zero_bound / kPi)) + ")");

    std::vector<SpectralPoint> pts;
    std::vector<std::vector<double>> zero_table;  // per order, for interlacing check
    for (int n = 0;; ++n) {
        if (static_cast<double>(n) >= zero_bound) break;  // j_{n,1} > n
        if (n > kBesselMaxOrder)
            throw std::domain_error("disc_sigma01: cutoff requires Bessel order beyond the "
                                    "envelope, limiting index (n=" +
                                    std::to_string(n) + ", k=1)");
        std::vector<double> zeros;
        for (int k = 1;; ++k) {
            const double z = bessel_zero(n, k);
            if (z >= zero_bound) break;
            zeros.push_back(z);
            pts.push_back({z * z / (4.0 * radius * radius),
                           Multiplicity::finite(n == 0 ? 1 : 2)});
        }
        if (zeros.empty() && n > 0) break;  // larger orders only have larger zeros
        zero_table.push_back(std::move(zeros));
    }

    // Interlacing j_{n,k} < j_{n+1,k} < j_{n,k+1} across the computed table.
    for (std::size_t n = 0; n + 1 < zero_table.size(); ++n) {
        const auto& cur = zero_table[n];
        const auto& nxt = zero_table[n + 1];
        for (std::size_t k = 0; k < nxt.size() && k < cur.size(); ++k) {
            if (!(cur[k] < nxt[k]))
                throw std::runtime_error("disc_sigma01: interlacing violated");
            if (k + 1 < cur.size() && !(nxt[k] < cur[k + 1]))
                throw std::runtime_error("disc_sigma01: interlacing violated");
        }
    }

    return TruncatedSpectrum(std::move(pts), cutoff, true, merge_tol);
}

TruncatedSpectrum rect_sigma01(double a, double b, double cutoff, double merge_tol) {
    check_positive(a, "rectangle side a");
    check_positive(b, "rectangle side b");
    check_positive(cutoff, "cutoff");
    const double cx = kPi * kPi / (4.0 * a * a);
    const double cy = kPi * kPi / (4.0 * b * b);
    std::vector<SpectralPoint> pts;
    for (int m = 1; cx * m * m + cy < cutoff; ++m) {
        for (int n = 1;; ++n) {
            const double v = cx * m * m + cy * n * n;
            if (v >= cutoff) break;
            pts.push_back({v, Multiplicity::finite(1)});
        }
    }
    return TruncatedSpectrum(std::move(pts), cutoff, true, merge_tol);
}

namespace {

// sigma_{0,0} = Bergman point {0, inf} plus the positive part of
// sigma_{0,1}, multiplicity-preserving.
TruncatedSpectrum with_bergman_point(const TruncatedSpectrum& sigma01) {
    std::vector<SpectralPoint> pts = sigma01.points();
    pts.push_back({0.0, Multiplicity::infinite()});
    return TruncatedSpectrum(std::move(pts), sigma01.cutoff(), true, sigma01.merge_tol());
}

void validate_custom(const Custom& c) {
    if (c.complex_dim <= 0)
        throw std::invalid_argument("custom factor: complex_dim must be positive");
    for (const auto& [bd, spec] : c.spectra.table) {
        if (bd.p < 0 || bd.q < 0 || bd.p > c.complex_dim || bd.q > c.complex_dim)
            throw std::invalid_argument("custom factor: bidegree out of range");
        (void)spec;  // TruncatedSpectrum enforces its own invariants on construction
    }
}

}  // namespace

FactorData factor_bidegree(const PlanarDomain& domain, double cutoff, double merge_tol) {
    check_positive(cutoff, "cutoff");
    if (const auto* c = std::get_if<Custom>(&domain)) {
        validate_custom(*c);
        FactorData out;
        out.spectra = c->spectra;
        out.spectra.complex_dim = c->complex_dim;
        if (c->harmonic) out.harmonic = *c->harmonic;
        out.harmonic.complex_dim = c->complex_dim;
        out.pure_point = c->pure_point;
        return out;
    }

    TruncatedSpectrum sigma01 = std::holds_alternative<Disc>(domain)
                                    ? disc_sigma01(std::get<Disc>(domain).radius, cutoff, merge_tol)
                                    : rect_sigma01(std::get<Rectangle>(domain).a,
                                                   std::get<Rectangle>(domain).b, cutoff, merge_tol);
    TruncatedSpectrum sigma00 = with_bergman_point(sigma01);

    FactorData out;
    out.spectra.complex_dim = 1;
    out.spectra.table.emplace(Bidegree{0, 0}, sigma00);
    out.spectra.table.emplace(Bidegree{0, 1}, sigma01);
    out.spectra.table.emplace(Bidegree{1, 0}, sigma00);
    out.spectra.table.emplace(Bidegree{1, 1}, sigma01);
    out.harmonic.complex_dim = 1;
    out.harmonic.table.emplace(Bidegree{0, 0}, ExtendedCardinal::infinite());
    out.harmonic.table.emplace(Bidegree{0, 1}, ExtendedCardinal::zero());
    out.harmonic.table.emplace(Bidegree{1, 0}, ExtendedCardinal::infinite());
    out.harmonic.table.emplace(Bidegree{1, 1}, ExtendedCardinal::zero());
    out.pure_point = true;
    out.flat_frame_identification = true;
    return out;
}

namespace {

using nlohmann::json;

Bidegree parse_bidegree_key(const std::string& key, const std::string& ptr) {
    int p = -1, q = -1;
    char comma = 0;
    std::istringstream ss(key);
    if (!(ss >> p >> comma >> q) || comma != ',' || p < 0 || q < 0)
        throw SchemaError("bidegree key must be \"P,Q\" with nonnegative integers", ptr);
    return {p, q};
}

Multiplicity parse_mult(const json& j, const std::string& ptr) {
    if (j.is_string()) {
        if (j.get<std::string>() == "inf") return Multiplicity::infinite();
        throw SchemaError("multiplicity string must be \"inf\"", ptr);
    }
    if (j.is_number_unsigned() || (j.is_number_integer() && j.get<long long>() > 0)) {
        const auto c = j.get<long long>();
        if (c >= 1) return Multiplicity::finite(static_cast<std::uint64_t>(c));
    }
    throw SchemaError("multiplicity must be a positive integer or \"inf\"", ptr);
}

}  // namespace

Custom custom_from_json(const json& j, const std::string& base, double cutoff,
                        double merge_tol) {
    if (!j.is_object()) throw SchemaError("custom factor must be an object", base);
    Custom c;
    if (j.contains("dim")) {
        if (!j["dim"].is_number_integer() || j["dim"].get<int>() < 1)
            throw SchemaError("dim must be an integer >= 1", base + "/dim");
        c.complex_dim = j["dim"].get<int>();
    }
    c.spectra.complex_dim = c.complex_dim;
    if (j.contains("pure_point")) {
        if (!j["pure_point"].is_boolean())
            throw SchemaError("pure_point must be a boolean", base + "/pure_point");
        c.pure_point = j["pure_point"].get<bool>();
    }
    if (!j.contains("spectra") || !j["spectra"].is_object())
        throw SchemaError("custom factor needs a spectra object", base + "/spectra");

    for (const auto& [key, tbl] : j["spectra"].items()) {
        const std::string tptr = base + "/spectra/" + key;
        const Bidegree bd = parse_bidegree_key(key, tptr);
        if (bd.p > c.complex_dim || bd.q > c.complex_dim)
            throw SchemaError("bidegree exceeds complex_dim", tptr);
        if (!tbl.is_array()) throw SchemaError("spectrum table must be an array", tptr);
        std::vector<SpectralPoint> pts;
        double prev = -1.0;
        for (std::size_t i = 0; i < tbl.size(); ++i) {
            const std::string eptr = tptr + "/" + std::to_string(i);
            const auto& entry = tbl[i];
            if (!entry.is_array() || entry.size() != 2)
                throw SchemaError("spectrum entry must be [value, multiplicity]", eptr);
            if (!entry[0].is_number())
                throw SchemaError("eigenvalue must be a number", eptr + "/0");
            const double v = entry[0].get<double>();
            if (v < 0.0) throw SchemaError("eigenvalue must be nonnegative", eptr + "/0");
            if (v <= prev) throw SchemaError("eigenvalues must be strictly ascending", eptr + "/0");
            prev = v;
            pts.push_back({v, parse_mult(entry[1], eptr + "/1")});
        }
        c.spectra.table.emplace(
            bd, TruncatedSpectrum(std::move(pts), cutoff, true, merge_tol, c.pure_point));
    }

    if (j.contains("harmonic")) {
        if (!j["harmonic"].is_object())
            throw SchemaError("harmonic must be an object", base + "/harmonic");
        HarmonicDims h;
        h.complex_dim = c.complex_dim;
        for (const auto& [key, val] : j["harmonic"].items()) {
            const std::string hptr = base + "/harmonic/" + key;
            const Bidegree bd = parse_bidegree_key(key, hptr);
            if (val.is_string()) {
                if (val.get<std::string>() != "inf")
                    throw SchemaError("harmonic dim string must be \"inf\"", hptr);
                h.table.emplace(bd, ExtendedCardinal::infinite());
            } else if (val.is_number_integer() && val.get<long long>() >= 0) {
                h.table.emplace(bd,
                                ExtendedCardinal::finite(static_cast<std::uint64_t>(
                                    val.get<long long>())));
            } else {
                throw SchemaError("harmonic dim must be a nonnegative integer or \"inf\"", hptr);
            }
        }
        c.harmonic = std::move(h);
    }
    return c;
}

Custom load_custom_spectrum(const std::string& json_text, double cutoff, double merge_tol) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what(), "");
    }
    return custom_from_json(j, "", cutoff, merge_tol);
}

Custom load_custom_spectrum(std::istream& in, double cutoff, double merge_tol) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_custom_spectrum(ss.str(), cutoff, merge_tol);
}

}  // namespace boxspec
