#include <doctest.h>

#include <cmath>

#include "gmfq/analysis.hpp"
#include "gmfq/errors.hpp"
#include "gmfq/reports.hpp"
#include "oracles.hpp"

using namespace gmfq;

TEST_CASE("st_measure endpoints and quadrature") {
    CHECK(st_measure(-1, 1) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(st_measure(0, 1) - 0.5) < 1e-12);
    CHECK(std::abs(st_measure(0.0, 0.1) - oracle::st_mass_quadrature(0.0, 0.1)) < 1e-9);
    CHECK(std::abs(st_measure(-0.73, 0.4) - oracle::st_mass_quadrature(-0.73, 0.4)) < 1e-9);

    CHECK_THROWS_AS(st_measure(-1.5, 0), DomainError);
    CHECK_THROWS_AS(st_measure(0, 1.5), DomainError);
    CHECK_THROWS_AS(st_measure(0.5, 0.2), DomainError);
}

TEST_CASE("st_measure is additive over adjacent intervals") {
    double total = 0.0;
    for (int i = 0; i < 40; ++i) {
        total += st_measure(-1.0 + i * 0.05, -1.0 + (i + 1) * 0.05);
    }
    CHECK(std::abs(total - 1.0) < 1e-12);
}

TEST_CASE("normalize_bp") {
    CHECK(normalize_bp(0, 97) == 0.0);
    CHECK(normalize_bp(-2, 2) == doctest::Approx(-1.0 / std::sqrt(2.0)));
    CHECK_THROWS_AS(normalize_bp(5, 5), IntegrityError); // 25 > 20
}

TEST_CASE("st_histogram shapes and refusals") {
    PrimeTable table(10000);
    Eigenform form = load_eigenform("11", 10000, table);

    SatoTateReport trivial = st_histogram(form, 10000, 1, table);
    REQUIRE(trivial.bins.size() == 1);
    CHECK(trivial.bins[0].empirical == doctest::Approx(1.0));
    CHECK(trivial.bins[0].expected == doctest::Approx(1.0).epsilon(1e-14));

    SatoTateReport report = st_histogram(form, 10000, 20, table);
    CHECK(report.sample == table.pi(10000) - 1); // 11 excluded
    double mass = 0.0;
    std::int64_t count = 0;
    for (const auto& bin : report.bins) {
        mass += bin.empirical;
        count += bin.count;
    }
    CHECK(count == report.sample);
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(report.discrepancy < 0.08); // desk-scale bound at xmax = 10^4
    CHECK(report.excluded == std::vector<std::int64_t>{11});

    Eigenform cm_form = load_eigenform("36", 100, table);
    CHECK_THROWS_AS(st_histogram(cm_form, 100, 20, table), DomainError);
    CHECK_THROWS_AS(st_histogram(form, 10000, 0, table), DomainError);
}

TEST_CASE("sign_density at xmax below the smallest good prime") {
    PrimeTable table(100);
    // Level 20: p = 2 is bad, so xmax = 2 sees no good primes at all.
    Eigenform even = load_eigenform("20", 100, table);
    SignDensityReport report = sign_density(even, 2, table);
    CHECK(report.n_pos + report.n_neg + report.n_zero == 0);
    CHECK(report.pi_x == 1);
}

TEST_CASE("sign_density partition identity") {
    PrimeTable table(10000);
    for (std::int64_t level : {11, 14, 15}) {
        Eigenform form = load_eigenform(std::to_string(level), 10000, table);
        SignDensityReport report = sign_density(form, 10000, table);
        CHECK(report.n_pos + report.n_neg + report.n_zero ==
              report.pi_x - static_cast<std::int64_t>(report.excluded.size()));
        // b(p) = 0 contributes to the positive exponent side; zero means b(p) = 1.
        CHECK(report.ratio_zero() < 0.05);
        CHECK(std::abs(report.ratio_pos() - 0.5) < 0.05);
        CHECK(std::abs(report.ratio_neg() - 0.5) < 0.05);
    }
}

TEST_CASE("CM sign pattern is recorded without assertion") {
    PrimeTable table(10000);
    Eigenform form = load_eigenform("36", 10000, table);
    SignDensityReport report = sign_density(form, 10000, table);
    // b(p) = 0 half the time makes c(p) > 0 substantially more common.
    CHECK(report.ratio_pos() > 0.6);
}

TEST_CASE("pair_sign_density counts and degenerate input") {
    PrimeTable table(10000);
    Eigenform f1 = load_eigenform("11", 10000, table);
    Eigenform f2 = load_eigenform("14", 10000, table);
    SignDensityReport report = pair_sign_density(f1, f2, 10000, table);

    CHECK(report.n_pos + report.n_neg + report.n_zero ==
          report.pi_x - static_cast<std::int64_t>(report.excluded.size()));
    CHECK(*report.n_geq == report.n_pos + report.n_zero);
    CHECK(*report.n_leq == report.n_neg + report.n_zero);
    CHECK(report.excluded == std::vector<std::int64_t>{2, 7, 11});

    CHECK_THROWS_AS(pair_sign_density(f1, f1, 10000, table), DomainError);
    Eigenform cm_form = load_eigenform("36", 10000, table);
    CHECK_THROWS_AS(pair_sign_density(f1, cm_form, 10000, table), DomainError);
}

TEST_CASE("pair_joint_histogram full square and empty interval") {
    PrimeTable table(5000);
    Eigenform f1 = load_eigenform("11", 5000, table);
    Eigenform f2 = load_eigenform("14", 5000, table);

    JointDensity full = pair_joint_histogram(f1, f2, 5000, {-1, 1}, {-1, 1}, table);
    CHECK(full.product == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(full.count == full.pi_x - 3); // 2, 7, 11 excluded
    CHECK(full.empirical > 0.99);

    JointDensity degenerate = pair_joint_histogram(f1, f2, 5000, {0, 1}, {0, 0}, table);
    CHECK(degenerate.product == 0.0);
    // B2(p) = 0 happens only when b2(p) = 0.
    CHECK(degenerate.empirical < 0.05);
}

TEST_CASE("boundary band count") {
    PrimeTable table(100000);
    LoadOptions opts;
    opts.threads = 2;
    Eigenform form = load_eigenform("11", 100000, table, opts);

    BandCount at2 = boundary_band_count(form, 2, table);
    CHECK(at2.count == 0); // b(2) = -2 sits outside [0, 1)

    BandCount big = boundary_band_count(form, 100000, table);
    CHECK(big.ratio < 0.01);

    BandCount small = boundary_band_count(form, 1000, table);
    // density-zero trend: the ratio shrinks as x grows
    CHECK(big.ratio < small.ratio);

    Eigenform cm_form = load_eigenform("36", 100000, table, opts);
    BandCount cm_band = boundary_band_count(cm_form, 100000, table);
    CHECK(std::abs(cm_band.ratio - 0.5) < 0.02);
}

TEST_CASE("cm_value_scan lists exactly the vanishing primes") {
    PrimeTable table(1000);
    Eigenform form = load_eigenform("36", 1000, table);
    auto rows = cm_value_scan(form, 1000, table);
    REQUIRE(!rows.empty());
    CHECK(rows.front().first == 5);
    CHECK(rows.front().second == make_rational(1, 5));
    for (const auto& [p, cp] : rows) {
        REQUIRE(p % 3 == 2);
        REQUIRE(cp == make_rational(1, p));
    }
    // 7 is a nonvanishing prime: not listed.
    for (const auto& [p, cp] : rows) REQUIRE(p != 7);

    Eigenform noncm = load_eigenform("11", 100, table);
    CHECK_THROWS_AS(cm_value_scan(noncm, 100, table), DomainError);
}

TEST_CASE("distinct_values_count grows with xmax") {
    PrimeTable table(2000);
    Eigenform form = load_eigenform("11", 2000, table);

    DistinctValueCount at100 = distinct_values_count(form, 100, table);
    CHECK(at100.distinct_positive >= 10);

    DistinctValueCount at2 = distinct_values_count(form, 2, table);
    CHECK(at2.positive + at2.negative == 1); // the single prime 2

    DistinctValueCount at1000 = distinct_values_count(form, 1000, table);
    DistinctValueCount at2000 = distinct_values_count(form, 2000, table);
    CHECK(at2000.distinct_positive >= at1000.distinct_positive);
    CHECK(at2000.distinct_negative >= at1000.distinct_negative);
}

TEST_CASE("integrality scan on level 11") {
    PrimeTable table(1000);
    Eigenform form = load_eigenform("11", 1000, table);
    ExponentSeries c = exponents_from_eigenform(form, 1000, table);
    IntegralityReport report = integrality_scan(c, 1000, table);

    bool has1 = false, has4 = false;
    for (const auto& [n, value] : report.integral_exponents) {
        if (n == 1) {
            has1 = true;
            CHECK(value == -1);
        }
        if (n == 4) {
            has4 = true;
            CHECK(value == -1);
        }
        // zero values are never listed
        REQUIRE(value != 0);
    }
    CHECK(has1);
    CHECK(has4);
    CHECK(report.size_bound_violations.empty());
    CHECK(report.growth_bound_violations.empty());
}

TEST_CASE("first_sign_change on catalogue levels") {
    PrimeTable table(100);
    Eigenform form = load_eigenform("11", 100, table);
    ExponentSeries c = exponents_from_eigenform(form, 100, table);
    BoundReport report = first_sign_change(c, 11, table);
    REQUIRE(report.d1.has_value());
    CHECK(*report.d1 == 2);
    CHECK(report.d2 == 1);
    CHECK(report.bound_38 == doctest::Approx(std::pow(44.0, 0.375)));
    CHECK(*report.d1 <= report.bound_38);
    CHECK(report.psi2 == doctest::Approx(psi2(11)));
    CHECK(report.level_squarefree);

    Eigenform f14 = load_eigenform("14", 100, table);
    ExponentSeries c14 = exponents_from_eigenform(f14, 100, table);
    BoundReport r14 = first_sign_change(c14, 14, table);
    REQUIRE(r14.d1.has_value());
    CHECK(*r14.d1 <= std::pow(56.0, 0.375));

    Eigenform f36 = load_eigenform("36", 100, table);
    ExponentSeries c36 = exponents_from_eigenform(f36, 100, table);
    BoundReport r36 = first_sign_change(c36, 36, table);
    CHECK_FALSE(r36.level_squarefree);
}

TEST_CASE("first_sign_change reports an inconclusive range without error") {
    PrimeTable table(100);
    ExponentSeries c;
    c.level = 11;
    c.c = {BigRational(0), BigRational(-1)}; // only c(1) known, no positive value in range
    BoundReport report = first_sign_change(c, 11, table);
    CHECK_FALSE(report.d1.has_value());
    CHECK(report.d2 == 1);
    auto doc = to_json(report);
    CHECK(doc["conclusive"] == false);
    CHECK(doc["d1"].is_null());
}

TEST_CASE("reports serialize with stable keys") {
    PrimeTable table(1000);
    Eigenform form = load_eigenform("11", 1000, table);

    auto signs = to_json(sign_density(form, 1000, table));
    CHECK(signs.contains("xmax"));
    CHECK(signs.contains("counts"));
    CHECK(signs.contains("ratios"));
    CHECK(signs["density_kind"] == "natural_estimate");

    auto hist = to_json(st_histogram(form, 1000, 4, table));
    CHECK(hist.contains("bins"));
    CHECK(hist.contains("discrepancy"));
    CHECK(hist["bins"].size() == 4);

    ExponentSeries c = exponents_from_eigenform(form, 100, table);
    auto bound = to_json(first_sign_change(c, 11, table));
    CHECK(bound.contains("d1"));
    CHECK(bound.contains("d2"));
    CHECK(bound.contains("bound_38"));
    CHECK(bound.contains("psi2"));
    CHECK(bound.contains("n0"));

    // byte-identical dumps on repeated serialization
    CHECK(to_json(sign_density(form, 1000, table)).dump(2) == signs.dump(2));

    std::string csv = histogram_bins_csv(st_histogram(form, 1000, 4, table));
    CHECK(csv.rfind("lo,hi,count,empirical,expected\n", 0) == 0);
}
