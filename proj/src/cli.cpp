#include "boxspec/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "boxspec/bessel.hpp"
#include "boxspec/custom_json.hpp"
#include "boxspec/oracle.hpp"
#include "boxspec/polydomain.hpp"

namespace boxspec::cli {

using nlohmann::json;

std::string fmt_g12(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

namespace {

std::string fmt_mult(const Multiplicity& m) {
    return m.is_infinite() ? "\"inf\"" : std::to_string(m.count());
}

std::string fmt_cardinal(const ExtendedCardinal& c) {
    return c.is_infinite() ? "\"inf\"" : c.str();
}

void emit_points(std::ostringstream& os, const TruncatedSpectrum& s) {
    os << "[";
    bool first = true;
    for (const auto& p : s.points()) {
        if (!first) os << ",";
        first = false;
        os << "[" << fmt_g12(p.value) << "," << fmt_mult(p.multiplicity) << "]";
    }
    os << "]";
}

double require_number(const json& j, const char* field, const std::string& ptr) {
    if (!j.contains(field) || !j[field].is_number())
        throw CliError(2, std::string(field) + " must be a number", ptr);
    return j[field].get<double>();
}

PlanarDomain parse_factor(const json& f, const std::string& ptr, double cutoff,
                          double merge_tol) {
    if (!f.is_object() || !f.contains("type") || !f["type"].is_string())
        throw CliError(2, "factor needs a string type", ptr + "/type");
    const std::string type = f["type"].get<std::string>();
    if (type == "disc") {
        const double r = require_number(f, "radius", ptr + "/radius");
        if (!(r > 0.0)) throw CliError(2, "radius must be positive", ptr + "/radius");
        return Disc{r};
    }
    if (type == "rectangle") {
        const double a = require_number(f, "a", ptr + "/a");
        if (!(a > 0.0)) throw CliError(2, "a must be positive", ptr + "/a");
        const double b = require_number(f, "b", ptr + "/b");
        if (!(b > 0.0)) throw CliError(2, "b must be positive", ptr + "/b");
        return Rectangle{a, b};
    }
    if (type == "custom") {
        try {
            return custom_from_json(f, ptr, cutoff, merge_tol);
        } catch (const SchemaError& e) {
            throw CliError(2, e.what(), e.pointer);
        }
    }
    throw CliError(2, "unknown factor type \"" + type + "\"", ptr + "/type");
}

}  // namespace

JobConfig parse_config(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw CliError(2, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw CliError(2, "config must be a JSON object", "");

    JobConfig cfg;
    if (!j.contains("cutoff") || !j["cutoff"].is_number())
        throw CliError(2, "cutoff is required and must be a number", "/cutoff");
    cfg.cutoff = j["cutoff"].get<double>();
    if (!(cfg.cutoff > 0.0)) throw CliError(2, "cutoff must be positive", "/cutoff");

    if (j.contains("merge_tol")) {
        if (!j["merge_tol"].is_number() || j["merge_tol"].get<double>() < 0.0)
            throw CliError(2, "merge_tol must be a nonnegative number", "/merge_tol");
        cfg.merge_tol = j["merge_tol"].get<double>();
    }
    if (j.contains("zero_tol")) {
        if (!j["zero_tol"].is_number() || j["zero_tol"].get<double>() < 0.0)
            throw CliError(2, "zero_tol must be a nonnegative number", "/zero_tol");
        cfg.zero_tol = j["zero_tol"].get<double>();
    }
    if (j.contains("format")) {
        if (!j["format"].is_string() ||
            (j["format"] != "json" && j["format"] != "csv"))
            throw CliError(2, "format must be \"json\" or \"csv\"", "/format");
        cfg.format = j["format"].get<std::string>();
    }

    if (!j.contains("factors") || !j["factors"].is_array())
        throw CliError(2, "factors must be an array", "/factors");
    if (j["factors"].empty()) throw CliError(2, "factors must be nonempty", "/factors");
    for (std::size_t i = 0; i < j["factors"].size(); ++i)
        cfg.factors.push_back(parse_factor(j["factors"][i], "/factors/" + std::to_string(i),
                                           cfg.cutoff, cfg.merge_tol));
    return cfg;
}

namespace {

// Total-degree spectrum of one factor: merge of all provided bidegree
// tables (the operator is the orthogonal sum over bidegrees).
TruncatedSpectrum factor_total_spectrum(const FactorData& fd) {
    if (fd.spectra.table.empty())
        throw CliError(4, "factor provides no bidegree spectra");
    std::vector<SpectralPoint> pool;
    double cutoff = std::numeric_limits<double>::infinity();
    double merge_tol = 0.0;
    bool complete = true, pure = true;
    for (const auto& [bd, s] : fd.spectra.table) {
        pool.insert(pool.end(), s.points().begin(), s.points().end());
        cutoff = std::min(cutoff, s.cutoff());
        merge_tol = std::max(merge_tol, s.merge_tol());
        complete = complete && s.complete_below_cutoff();
        pure = pure && s.pure_point();
    }
    return TruncatedSpectrum(std::move(pool), cutoff, complete, merge_tol, pure);
}

TruncatedSpectrum product_total_spectrum(const JobConfig& cfg, double cutoff) {
    std::vector<TruncatedSpectrum> parts;
    for (const auto& f : cfg.factors)
        parts.push_back(factor_total_spectrum(factor_bidegree(f, cutoff, cfg.merge_tol)));
    return minkowski_sum_many(parts);
}

bool any_analytic_factor(const JobConfig& cfg) {
    for (const auto& f : cfg.factors)
        if (!std::holds_alternative<Custom>(f)) return true;
    return false;
}

std::string csv_table(const TruncatedSpectrum& s) {
    std::ostringstream os;
    os << "value,multiplicity,kind,J,k\n";
    for (const auto& p : s.points())
        os << fmt_g12(p.value) << ","
           << (p.multiplicity.is_infinite() ? "inf" : std::to_string(p.multiplicity.count()))
           << ",,,\n";
    return os.str();
}

std::string label_kind(const EigenLabel& l) {
    return l.kind == EigenLabel::Kind::W ? "W" : "V";
}

std::string label_j_compact(const EigenLabel& l) {
    std::string out;
    for (std::size_t i = 0; i < l.J.size(); ++i) {
        if (i) out += ";";
        out += std::to_string(l.J[i]);
    }
    return out;
}

std::string label_k_compact(const EigenLabel& l) {
    std::string out;
    bool first = true;
    for (const auto& [j, r] : l.k) {
        if (!first) out += ";";
        first = false;
        out += std::to_string(j) + ":" + std::to_string(r);
    }
    return out;
}

CommandResult cmd_spectrum(const JobConfig& cfg, double cutoff, const std::string& format) {
    TruncatedSpectrum total = product_total_spectrum(cfg, cutoff);
    if (format == "csv") return {csv_table(total), 0};
    std::ostringstream os;
    os << "{\"command\":\"spectrum\",\"cutoff\":" << fmt_g12(total.cutoff())
       << ",\"complete\":" << (total.complete_below_cutoff() ? "true" : "false")
       << ",\"pure_point\":" << (total.pure_point() ? "true" : "false") << ",\"points\":";
    emit_points(os, total);
    if (any_analytic_factor(cfg))
        os << ",\"notes\":[\"sigma_{1,q} tables of planar factors use the flat-frame "
              "identification sigma_{1,q} = sigma_{0,q}\"]";
    os << "}\n";
    return {os.str(), 0};
}

CommandResult cmd_bidegree(const JobConfig& cfg, double cutoff, const std::string& format,
                           const Bidegree& pq) {
    std::vector<BidegreeSpectrum> tables;
    for (const auto& f : cfg.factors)
        tables.push_back(factor_bidegree(f, cutoff, cfg.merge_tol).spectra);
    BidegreeProduct prod = bidegree_product(tables);
    auto un = prod.unavailable.find(pq);
    if (un != prod.unavailable.end())
        throw CliError(4, "bidegree (" + std::to_string(pq.p) + "," + std::to_string(pq.q) +
                              ") unavailable: " + un->second);
    auto it = prod.spectra.table.find(pq);
    if (it == prod.spectra.table.end())
        throw CliError(4, "bidegree (" + std::to_string(pq.p) + "," + std::to_string(pq.q) +
                              ") out of range for total complex dimension " +
                              std::to_string(prod.spectra.complex_dim));
    const TruncatedSpectrum& s = it->second;
    if (format == "csv") return {csv_table(s), 0};
    std::ostringstream os;
    os << "{\"command\":\"bidegree\",\"p\":" << pq.p << ",\"q\":" << pq.q
       << ",\"cutoff\":" << fmt_g12(s.cutoff())
       << ",\"complete\":" << (s.complete_below_cutoff() ? "true" : "false")
       << ",\"pure_point\":" << (s.pure_point() ? "true" : "false") << ",\"points\":";
    emit_points(os, s);
    if (pq.p > 0 && any_analytic_factor(cfg))
        os << ",\"notes\":[\"sigma_{1,q} tables of planar factors use the flat-frame "
              "identification sigma_{1,q} = sigma_{0,q}\"]";
    os << "}\n";
    return {os.str(), 0};
}

CommandResult cmd_gap(const JobConfig& cfg, double cutoff) {
    GapReport r = gap_report(product_total_spectrum(cfg, cutoff));
    std::ostringstream os;
    os << "{\"command\":\"gap\",\"verdict\":\"";
    switch (r.verdict) {
        case RangeVerdict::ClosedRange: os << "ClosedRange"; break;
        case RangeVerdict::NotClosedRange: os << "NotClosedRange"; break;
        default: os << "Unknown"; break;
    }
    os << "\"";
    if (r.gap) {
        os << ",\"gap\":" << fmt_g12(*r.gap)
           << ",\"gap_is_lower_bound\":" << (r.gap_is_lower_bound ? "true" : "false")
           << ",\"bound_constant\":" << fmt_g12(*r.bound_constant);
    }
    os << "}\n";
    return {os.str(), 0};
}

CommandResult cmd_kunneth(const JobConfig& cfg, double cutoff) {
    std::vector<HarmonicDims> dims;
    for (std::size_t i = 0; i < cfg.factors.size(); ++i) {
        FactorData fd = factor_bidegree(cfg.factors[i], cutoff, cfg.merge_tol);
        if (fd.harmonic.table.empty())
            throw CliError(4, "factor " + std::to_string(i + 1) +
                                  " provides no harmonic dimensions");
        dims.push_back(fd.harmonic);
    }
    KunnethProduct prod = kunneth_product(dims);
    std::ostringstream os;
    os << "{\"command\":\"kunneth\",\"dim\":" << prod.dims.complex_dim << ",\"table\":{";
    bool first = true;
    for (const auto& [bd, c] : prod.dims.table) {
        if (!first) os << ",";
        first = false;
        os << "\"" << bd.p << "," << bd.q << "\":" << fmt_cardinal(c);
    }
    os << "}";
    if (!prod.unavailable.empty()) {
        os << ",\"unavailable\":{";
        first = true;
        for (const auto& [bd, why] : prod.unavailable) {
            if (!first) os << ",";
            first = false;
            os << "\"" << bd.p << "," << bd.q << "\":" << json(why).dump();
        }
        os << "}";
    }
    os << "}\n";
    return {os.str(), 0};
}

CommandResult cmd_enumerate(const JobConfig& cfg, double cutoff, const std::string& format,
                            int q) {
    Enumeration e;
    try {
        e = enumerate_box_q(cfg.factors, q, cutoff, cfg.merge_tol);
    } catch (const std::invalid_argument& ex) {
        throw CliError(2, ex.what());
    }
    if (format == "csv") {
        std::ostringstream os;
        os << "value,multiplicity,kind,J,k\n";
        for (const auto& entry : e.entries) {
            const EigenLabel& l = entry.labels.front();
            os << fmt_g12(entry.value) << ","
               << (entry.multiplicity.is_infinite() ? "inf"
                                                    : std::to_string(entry.multiplicity.count()))
               << "," << label_kind(l) << "," << label_j_compact(l) << ","
               << label_k_compact(l) << "\n";
        }
        return {os.str(), 0};
    }
    std::ostringstream os;
    os << "{\"command\":\"enumerate\",\"n\":" << e.n << ",\"q\":" << e.q
       << ",\"cutoff\":" << fmt_g12(e.cutoff) << ",\"entries\":[";
    bool first = true;
    for (const auto& entry : e.entries) {
        if (!first) os << ",";
        first = false;
        os << "{\"value\":" << fmt_g12(entry.value)
           << ",\"multiplicity\":" << fmt_mult(entry.multiplicity) << ",\"labels\":[";
        bool lf = true;
        for (const auto& l : entry.labels) {
            if (!lf) os << ",";
            lf = false;
            os << "{\"kind\":\"" << label_kind(l) << "\",\"J\":[";
            for (std::size_t i = 0; i < l.J.size(); ++i) os << (i ? "," : "") << l.J[i];
            os << "],\"k\":{";
            bool kf = true;
            for (const auto& [j, r] : l.k) {
                if (!kf) os << ",";
                kf = false;
                os << "\"" << j << "\":" << r;
            }
            os << "}}";
        }
        os << "],\"labels_truncated\":" << (entry.labels_truncated ? "true" : "false") << "}";
    }
    os << "],\"metadata\":{\"assumes_pure_point\":"
       << (e.assumes_pure_point ? "true" : "false") << "}}\n";
    return {os.str(), 0};
}

CommandResult cmd_bessel(const CommandOptions& opts) {
    if (!opts.bessel_n || !opts.bessel_k)
        throw CliError(2, "bessel requires --n and --k");
    double z;
    try {
        z = bessel_zero(*opts.bessel_n, *opts.bessel_k);
    } catch (const std::exception& ex) {
        throw CliError(2, ex.what());
    }
    std::ostringstream os;
    os << "{\"command\":\"bessel\",\"n\":" << *opts.bessel_n << ",\"k\":" << *opts.bessel_k
       << ",\"zero\":" << fmt_g12(z) << "}\n";
    return {os.str(), 0};
}

// ---- verify suites ---------------------------------------------------------

struct Check {
    std::string name;
    std::function<void()> run;  // throws on failure
};

void expect(bool cond, const std::string& what) {
    if (!cond) throw std::runtime_error(what);
}

oracle::DenseSymMatrix random_psd(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> g(n * n);
    for (auto& v : g) v = u(rng);
    oracle::DenseSymMatrix m = oracle::DenseSymMatrix::zero(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < n; ++k) s += g[k * n + i] * g[k * n + j];
            m.at(i, j) = s;
        }
    return m;
}

double det_by_elimination(oracle::DenseSymMatrix m) {
    const std::size_t n = m.order();
    double det = 1.0;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::abs(m(r, c)) > std::abs(m(piv, c))) piv = r;
        if (m(piv, c) == 0.0) return 0.0;
        if (piv != c) {
            for (std::size_t k = 0; k < n; ++k) std::swap(m.at(piv, k), m.at(c, k));
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            const double f = m(r, c) / m(c, c);
            for (std::size_t k = c; k < n; ++k) m.at(r, k) -= f * m(c, k);
        }
    }
    return det;
}

std::vector<double> minkowski_pairwise(const std::vector<double>& a,
                                       const std::vector<double>& b) {
    std::vector<double> out;
    out.reserve(a.size() * b.size());
    for (double x : a)
        for (double y : b) out.push_back(x + y);
    std::sort(out.begin(), out.end());
    return out;
}

void add_kronecker_checks(std::vector<Check>& checks, std::uint64_t seed) {
    checks.push_back({"kronecker/2x2-known", [] {
        oracle::DenseSymMatrix a(2, {2, 1, 1, 2});
        auto eig = oracle::symmetric_eigen_dense(a);
        expect(std::abs(eig[0] - 1.0) < 1e-12 && std::abs(eig[1] - 3.0) < 1e-12,
               "eig([[2,1],[1,2]]) != {1,3}");
    }});
    checks.push_back({"kronecker/random-pairs", [seed] {
        std::mt19937_64 rng(seed);
        for (int t = 0; t < 10; ++t) {
            const std::size_t m = 2 + t % 5, k = 2 + (t + 2) % 4;
            auto a = random_psd(rng, m);
            auto b = random_psd(rng, k);
            auto ea = oracle::symmetric_eigen_dense(a);
            auto eb = oracle::symmetric_eigen_dense(b);
            auto expected = minkowski_pairwise(ea, eb);
            auto got = oracle::symmetric_eigen_dense(oracle::kronecker_sum(a, b));
            expect(got.size() == expected.size(), "size mismatch");
            for (std::size_t i = 0; i < got.size(); ++i)
                expect(std::abs(got[i] - expected[i]) < 1e-8, "kronecker spectrum mismatch");
        }
    }});
    checks.push_back({"kronecker/trace-det", [seed] {
        std::mt19937_64 rng(seed + 1);
        auto a = random_psd(rng, 5);
        auto eig = oracle::symmetric_eigen_dense(a);
        double tr = 0.0, prod = 1.0, tra = 0.0;
        for (std::size_t i = 0; i < 5; ++i) tra += a(i, i);
        for (double v : eig) {
            tr += v;
            prod *= v;
        }
        const double det = det_by_elimination(a);
        expect(std::abs(tr - tra) < 1e-10 * std::max(1.0, std::abs(tra)), "trace mismatch");
        expect(std::abs(prod - det) < 1e-10 * std::max(1.0, std::abs(det)),
               "determinant mismatch");
    }});
}

void add_fd_checks(std::vector<Check>& checks) {
    checks.push_back({"fd/interval-1pt", [] {
        auto eig = oracle::fd_dirichlet_interval(3.14159265358979323846, 1);
        const double expected = 8.0 / (3.14159265358979323846 * 3.14159265358979323846);
        expect(std::abs(eig[0] - expected) < 1e-12, "1x1 interval eigenvalue");
    }});
    checks.push_back({"fd/interval-vs-dense", [] {
        auto m = oracle::fd_dirichlet_interval_matrix(2.0, 3);
        auto viaql = oracle::fd_dirichlet_interval(2.0, 3);
        auto dense = oracle::symmetric_eigen_dense(m);
        for (int i = 0; i < 3; ++i)
            expect(std::abs(viaql[i] - dense[i]) < 1e-12 * std::max(1.0, dense[i]),
                   "tridiagonal vs dense");
    }});
    checks.push_back({"fd/interval-convergence", [] {
        const double pi = 3.14159265358979323846;
        auto eig = oracle::fd_dirichlet_interval(pi, 200);
        expect(std::abs(eig[0] - 1.0) < 1e-3, "interval smallest eigenvalue");
        const double h = pi / 201.0;
        for (std::size_t k = 1; k <= 200; ++k) {
            const double closed = (2.0 - 2.0 * std::cos(k * pi / 201.0)) / (h * h);
            expect(std::abs(eig[k - 1] - closed) < 1e-9 * std::max(1.0, closed),
                   "Toeplitz closed form");
        }
    }});
    checks.push_back({"fd/rect-kronecker-identity", [] {
        auto rect = oracle::fd_dirichlet_rect_matrix(2.0, 1.5, 12, 9);
        auto ks = oracle::kronecker_sum(oracle::fd_dirichlet_interval_matrix(2.0, 12),
                                        oracle::fd_dirichlet_interval_matrix(1.5, 9));
        expect(rect.entries() == ks.entries(), "matrix equality");
        auto spec2d = oracle::symmetric_eigen_dense(rect);
        auto mink = minkowski_pairwise(oracle::fd_dirichlet_interval(2.0, 12),
                                       oracle::fd_dirichlet_interval(1.5, 9));
        for (std::size_t i = 0; i < spec2d.size(); ++i)
            expect(std::abs(spec2d[i] - mink[i]) < 1e-9, "2D spectrum vs Minkowski sum");
    }});
    checks.push_back({"fd/disc-smallest", [] {
        auto eig = oracle::fd_dirichlet_disc(1.0, 1.0 / 15.0);
        const double j01 = bessel_zero(0, 1);
        expect(std::abs(eig[0] - j01 * j01) < 0.05 * j01 * j01, "disc smallest eigenvalue");
        expect(std::abs(eig[2] - eig[1]) < 0.02 * eig[1], "near-degenerate pair");
    }});
}

void add_bessel_checks(std::vector<Check>& checks) {
    checks.push_back({"bessel/zero-targets", [] {
        expect(std::abs(bessel_zero(0, 1) - 2.404825557695773) < 1e-9, "j_{0,1}");
        expect(std::abs(bessel_zero(1, 1) - 3.831705970207512) < 1e-9, "j_{1,1}");
        expect(std::abs(bessel_zero(0, 2) - 5.520078110286311) < 1e-9, "j_{0,2}");
    }});
    checks.push_back({"bessel/self-consistency", [] {
        for (auto [n, k] : {std::pair{0, 1}, {1, 1}, {0, 2}}) {
            const double z1 = bessel_zero_with_tol(n, k, 1e-6);
            const double z2 = bessel_zero_with_tol(n, k, 5e-7);
            expect(std::abs(z1 - z2) < 1e-9, "halved bisection tolerance moved the zero");
        }
    }});
    checks.push_back({"bessel/interlacing", [] {
        for (int n = 0; n < 5; ++n)
            for (int k = 1; k <= 5; ++k) {
                expect(bessel_zero(n, k) < bessel_zero(n + 1, k), "j_{n,k} < j_{n+1,k}");
                expect(bessel_zero(n + 1, k) < bessel_zero(n, k + 1), "j_{n+1,k} < j_{n,k+1}");
            }
    }});
    checks.push_back({"bessel/value-at-zero", [] {
        expect(std::abs(bessel_j(0, bessel_zero(0, 1))) < 1e-10, "J_0(j_{0,1}) != 0");
    }});
}

void add_box0_checks(std::vector<Check>& checks) {
    checks.push_back({"box0/sigma00-identification", [] {
        const double pi = 3.14159265358979323846;
        auto eig = oracle::fd_box0_rectangle(pi, pi, 32, 32);
        std::size_t kernel = 0;
        while (kernel < eig.size() && eig[kernel] < 1e-8) ++kernel;
        expect(kernel >= 32 + 32 - 1, "kernel smaller than nx+ny-1");
        expect(std::abs(eig[kernel] - 0.5) < 0.10 * 0.5,
               "smallest positive eigenvalue vs 0.5");
    }});
}

CommandResult cmd_verify(const CommandOptions& opts) {
    std::vector<Check> checks;
    const std::string& s = opts.suite;
    if (s != "kronecker" && s != "fd" && s != "bessel" && s != "box0" && s != "all")
        throw CliError(2, "unknown verify suite \"" + s + "\"");
    if (s == "kronecker" || s == "all") add_kronecker_checks(checks, opts.seed);
    if (s == "fd" || s == "all") add_fd_checks(checks);
    if (s == "bessel" || s == "all") add_bessel_checks(checks);
    if (s == "box0" || s == "all") add_box0_checks(checks);

    std::ostringstream os;
    int failed = 0;
    for (const auto& c : checks) {
        try {
            c.run();
            os << "PASS " << c.name << "\n";
        } catch (const std::exception& e) {
            ++failed;
            os << "FAIL " << c.name << ": " << e.what() << "\n";
        }
    }
    os << "verify: " << (checks.size() - failed) << " passed, " << failed << " failed\n";
    return {os.str(), failed == 0 ? 0 : 3};
}

}  // namespace

CommandResult run_command(const std::string& name, const JobConfig* config,
                          const CommandOptions& opts) {
    if (name == "bessel") return cmd_bessel(opts);
    if (name == "verify") return cmd_verify(opts);
    if (config == nullptr) throw CliError(2, "command \"" + name + "\" requires --config");

    const double cutoff = opts.cutoff.value_or(config->cutoff);
    if (!(cutoff > 0.0)) throw CliError(2, "cutoff must be positive");
    const std::string format = opts.format.value_or(config->format);
    if (format != "json" && format != "csv")
        throw CliError(2, "format must be \"json\" or \"csv\"");

    try {
        if (name == "spectrum") return cmd_spectrum(*config, cutoff, format);
        if (name == "bidegree") {
            if (!opts.pq) throw CliError(2, "bidegree requires --pq P,Q");
            return cmd_bidegree(*config, cutoff, format, *opts.pq);
        }
        if (name == "gap") return cmd_gap(*config, cutoff);
        if (name == "kunneth") return cmd_kunneth(*config, cutoff);
        if (name == "enumerate") {
            if (!opts.q) throw CliError(2, "enumerate requires --q Q");
            return cmd_enumerate(*config, cutoff, format, *opts.q);
        }
    } catch (const CliError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw CliError(2, e.what());
    } catch (const std::domain_error& e) {
        throw CliError(2, e.what());
    }
    throw CliError(2, "unknown command \"" + name + "\"");
}

}  // namespace boxspec::cli
