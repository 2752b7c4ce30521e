#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "boxspec/spectrum.hpp"

using namespace boxspec;

namespace {

TruncatedSpectrum make(std::vector<std::pair<double, std::uint64_t>> pts, double cutoff,
                       bool complete = true) {
    std::vector<SpectralPoint> raw;
    for (auto [v, m] : pts) raw.push_back({v, Multiplicity::finite(m)});
    return TruncatedSpectrum(std::move(raw), cutoff, complete);
}

std::vector<double> expanded(const TruncatedSpectrum& s) {
    std::vector<double> out;
    for (const auto& p : s.points())
        for (std::uint64_t i = 0; i < p.multiplicity.count(); ++i) out.push_back(p.value);
    return out;
}

TruncatedSpectrum random_spectrum(std::mt19937_64& rng, double cutoff) {
    std::uniform_real_distribution<double> val(0.0, cutoff);
    std::uniform_int_distribution<int> len(1, 8), mult(1, 3);
    std::vector<SpectralPoint> raw;
    const int n = len(rng);
    for (int i = 0; i < n; ++i)
        raw.push_back({val(rng), Multiplicity::finite(static_cast<std::uint64_t>(mult(rng)))});
    return TruncatedSpectrum(std::move(raw), cutoff, true);
}

}  // namespace

TEST_CASE("multiplicity algebra") {
    auto two = Multiplicity::finite(2);
    auto inf = Multiplicity::infinite();
    CHECK((two * Multiplicity::finite(3)).count() == 6);
    CHECK((two + Multiplicity::finite(3)).count() == 5);
    CHECK((two * inf).is_infinite());
    CHECK((inf + two).is_infinite());
    CHECK_THROWS_AS(Multiplicity::finite(0), std::invalid_argument);
    CHECK(inf.str() == "inf");
}

TEST_CASE("extended cardinal absorbs zero under product") {
    auto z = ExtendedCardinal::zero();
    auto inf = ExtendedCardinal::infinite();
    CHECK((z * inf).is_zero());
    CHECK((inf * ExtendedCardinal::finite(2)).is_infinite());
    CHECK((z + ExtendedCardinal::finite(4)).count() == 4);
    CHECK((inf + z).is_infinite());
    CHECK(ExtendedCardinal::finite(0).is_zero());
    CHECK(ExtendedCardinal::from(Multiplicity::infinite()).is_infinite());
}

TEST_CASE("truncated spectrum sorts, merges and validates") {
    auto s = make({{3.0, 1}, {1.0, 2}, {1.0 + 1e-12, 1}}, 10.0);
    REQUIRE(s.points().size() == 2);
    CHECK(s.points()[0].value == doctest::Approx(1.0));
    CHECK(s.points()[0].multiplicity.count() == 3);
    CHECK(s.points()[1].value == 3.0);

    CHECK_THROWS_AS(make({{-0.5, 1}}, 10.0), std::invalid_argument);
    CHECK(make({{11.0, 1}}, 10.0).points().empty());  // beyond-cutoff values drop
    CHECK_NOTHROW(make({}, 10.0));
}

TEST_CASE("merge rule is relative above 1") {
    CHECK(values_merge(1000.0, 1000.0 + 5e-7, 1e-9));
    CHECK_FALSE(values_merge(1000.0, 1000.0 + 5e-6, 1e-9));
    CHECK(values_merge(0.0, 5e-10, 1e-9));
    CHECK_FALSE(values_merge(0.0, 5e-9, 1e-9));
}

TEST_CASE("minkowski sum on hand-sized inputs") {
    auto a = make({{0.0, 2}, {1.0, 1}}, 10.0);
    auto b = make({{0.5, 1}, {2.0, 3}}, 10.0);
    auto s = minkowski_sum(a, b);
    // sums: 0.5 (x2), 1.5, 2.0 (x6), 3.0 (x3)
    REQUIRE(s.points().size() == 4);
    CHECK(s.points()[0].value == 0.5);
    CHECK(s.points()[0].multiplicity.count() == 2);
    CHECK(s.points()[2].value == 2.0);
    CHECK(s.points()[2].multiplicity.count() == 6);
    CHECK(s.points()[3].multiplicity.count() == 3);
    CHECK(s.cutoff() == 10.0);
    CHECK(s.complete_below_cutoff());
}

TEST_CASE("minkowski sum truncates at the smaller cutoff") {
    auto a = make({{4.0, 1}}, 6.0);
    auto b = make({{3.0, 1}}, 5.0);
    auto s = minkowski_sum(a, b);
    CHECK(s.cutoff() == 5.0);
    CHECK(s.points().empty());  // 7.0 lies beyond the window
}

TEST_CASE("completeness and pure_point flags conjoin") {
    auto a = make({{1.0, 1}}, 10.0, false);
    auto b = make({{2.0, 1}}, 10.0, true);
    CHECK_FALSE(minkowski_sum(a, b).complete_below_cutoff());

    TruncatedSpectrum set_only({{1.0, Multiplicity::finite(1)}}, 10.0, true,
                               kDefaultMergeTol, false);
    CHECK_FALSE(minkowski_sum(set_only, b).pure_point());
}

TEST_CASE("minkowski sum collisions add multiplicities") {
    auto a = make({{1.0, 1}, {2.0, 1}}, 10.0);
    auto b = make({{1.0, 1}, {2.0, 1}}, 10.0);
    auto s = minkowski_sum(a, b);
    // 2, 3 (two ways), 4
    REQUIRE(s.points().size() == 3);
    CHECK(s.points()[1].value == 3.0);
    CHECK(s.points()[1].multiplicity.count() == 2);
}

TEST_CASE("minkowski sum with infinite multiplicity") {
    std::vector<SpectralPoint> raw{{0.0, Multiplicity::infinite()},
                                   {1.0, Multiplicity::finite(1)}};
    TruncatedSpectrum a(std::move(raw), 10.0, true);
    auto b = make({{2.0, 2}}, 10.0);
    auto s = minkowski_sum(a, b);
    REQUIRE(s.points().size() == 2);
    CHECK(s.points()[0].value == 2.0);
    CHECK(s.points()[0].multiplicity.is_infinite());
    CHECK(s.points()[1].multiplicity.count() == 2);
}

TEST_CASE("minkowski sum is commutative and associative (randomized)") {
    std::mt19937_64 rng(7151);
    for (int t = 0; t < 40; ++t) {
        auto a = random_spectrum(rng, 20.0);
        auto b = random_spectrum(rng, 20.0);
        auto c = random_spectrum(rng, 20.0);
        auto ab = expanded(minkowski_sum(a, b));
        auto ba = expanded(minkowski_sum(b, a));
        REQUIRE(ab.size() == ba.size());
        for (std::size_t i = 0; i < ab.size(); ++i)
            CHECK(ab[i] == doctest::Approx(ba[i]).epsilon(1e-12));
        auto left = expanded(minkowski_sum(minkowski_sum(a, b), c));
        auto right = expanded(minkowski_sum(a, minkowski_sum(b, c)));
        REQUIRE(left.size() == right.size());
        for (std::size_t i = 0; i < left.size(); ++i)
            CHECK(left[i] == doctest::Approx(right[i]).epsilon(1e-9));
    }
}

TEST_CASE("minkowski_sum_many folds and rejects empty input") {
    auto a = make({{1.0, 1}}, 10.0);
    auto s = minkowski_sum_many({a, a, a});
    REQUIRE(s.points().size() == 1);
    CHECK(s.points()[0].value == 3.0);
    CHECK_THROWS_AS(minkowski_sum_many({}), std::invalid_argument);
}

TEST_CASE("gap report") {
    SUBCASE("complete with positive point") {
        auto r = gap_report(make({{0.0, 1}, {0.25, 2}}, 10.0));
        CHECK(r.verdict == RangeVerdict::ClosedRange);
        CHECK(*r.gap == 0.25);
        CHECK(*r.bound_constant == 0.25);
        CHECK_FALSE(r.gap_is_lower_bound);
    }
    SUBCASE("complete, only zero below cutoff") {
        auto r = gap_report(make({{0.0, 1}}, 10.0));
        CHECK(r.verdict == RangeVerdict::ClosedRange);
        CHECK(*r.gap == 10.0);
        CHECK(r.gap_is_lower_bound);
    }
    SUBCASE("incomplete is unknown") {
        auto r = gap_report(make({{0.25, 1}}, 10.0, false));
        CHECK(r.verdict == RangeVerdict::Unknown);
        CHECK_FALSE(r.gap.has_value());
    }
}

TEST_CASE("kernel dimension") {
    std::vector<SpectralPoint> raw{{0.0, Multiplicity::infinite()},
                                   {1.0, Multiplicity::finite(1)}};
    CHECK(kernel_dim(TruncatedSpectrum(std::move(raw), 10.0, true)).is_infinite());
    CHECK(kernel_dim(make({{0.0, 3}, {1.0, 1}}, 10.0)).count() == 3);
    CHECK(kernel_dim(make({{1.0, 1}}, 10.0)).is_zero());
    // A wide zero_tol that swallows a genuine positive point is ambiguous.
    CHECK_THROWS_AS(kernel_dim(make({{0.0, 1}, {1e-4, 1}}, 10.0), 1e-3),
                    std::invalid_argument);
}

TEST_CASE("bidegree product covers every split") {
    // Two planar-style factors with sigma_{0,0} and sigma_{0,1} each.
    BidegreeSpectrum f1{1, {}};
    f1.table.emplace(Bidegree{0, 0}, make({{0.0, 1}, {1.0, 1}}, 10.0));
    f1.table.emplace(Bidegree{0, 1}, make({{1.0, 1}}, 10.0));
    BidegreeSpectrum f2{1, {}};
    f2.table.emplace(Bidegree{0, 0}, make({{0.0, 1}, {2.0, 1}}, 10.0));
    f2.table.emplace(Bidegree{0, 1}, make({{2.0, 1}}, 10.0));

    auto prod = bidegree_product({f1, f2});
    CHECK(prod.spectra.complex_dim == 2);

    // (0,1) = sigma01 x sigma00 union sigma00 x sigma01:
    // {1+0, 1+2} union {0+2, 1+2} = {1, 2, 3 (x2)}
    const auto& s01 = prod.spectra.table.at({0, 1});
    REQUIRE(s01.points().size() == 3);
    CHECK(s01.points()[0].value == 1.0);
    CHECK(s01.points()[1].value == 2.0);
    CHECK(s01.points()[2].value == 3.0);
    CHECK(s01.points()[2].multiplicity.count() == 2);

    // (0,2) has a single split.
    const auto& s02 = prod.spectra.table.at({0, 2});
    REQUIRE(s02.points().size() == 1);
    CHECK(s02.points()[0].value == 3.0);

    // (1,1) needs sigma_{1,0} or sigma_{0,1}-with-p data the factors lack.
    CHECK(prod.unavailable.count({1, 1}) == 1);
    CHECK(prod.spectra.table.count({1, 1}) == 0);
}

TEST_CASE("kunneth product cardinal arithmetic") {
    HarmonicDims planar{1, {{{0, 0}, ExtendedCardinal::infinite()},
                            {{0, 1}, ExtendedCardinal::zero()},
                            {{1, 0}, ExtendedCardinal::infinite()},
                            {{1, 1}, ExtendedCardinal::zero()}}};
    auto prod = kunneth_product({planar, planar});
    CHECK(prod.dims.complex_dim == 2);
    CHECK(prod.dims.table.at({0, 0}).is_infinite());
    // (0,1) = inf*0 + 0*inf = 0
    CHECK(prod.dims.table.at({0, 1}).is_zero());
    CHECK(prod.dims.table.at({2, 2}).is_zero());
    CHECK(prod.dims.table.at({2, 0}).is_infinite());
    CHECK(prod.unavailable.empty());
}

TEST_CASE("kunneth marks targets unavailable when a factor omits a bidegree") {
    HarmonicDims full{1, {{{0, 0}, ExtendedCardinal::finite(2)},
                          {{0, 1}, ExtendedCardinal::zero()},
                          {{1, 0}, ExtendedCardinal::zero()},
                          {{1, 1}, ExtendedCardinal::zero()}}};
    HarmonicDims partial{1, {{{0, 0}, ExtendedCardinal::finite(3)}}};
    auto prod = kunneth_product({full, partial});
    CHECK(prod.dims.table.at({0, 0}).count() == 6);
    CHECK(prod.unavailable.count({0, 1}) == 1);
}
