#include "hilbforest/classifier.hpp"
#include "hilbforest/errors.hpp"
#include "hilbforest/forest.hpp"
#include "hilbforest/probability.hpp"

#include <doctest.h>

#include <cmath>
#include <map>

using namespace hilbforest;

namespace {

mpq_class q(long num, long den = 1) { return mpq_class(num, den); }

double dbl(const mpq_class& x) { return x.get_d(); }

// E[pdm] and E[pdm^2] by summing d^j binom(k, d) f(k) / 2^k in long double.
std::pair<long double, long double> pdm_moments_by_summation(const HeightMass& m, int K) {
    long double first = 0, second = 0;
    for (int k = 0; k <= K; ++k) {
        const long double fk = m.mass_double(k);
        long double binom = 1;
        for (int d = 0; d <= k; ++d) {
            const long double w = fk * binom * std::pow(0.5L, k);
            first += d * w;
            second += static_cast<long double>(d) * d * w;
            binom = binom * (k - d) / (d + 1);
        }
    }
    return {first, second};
}

// Fraction of height-k vertices with each parametrized degree.
std::map<long, double> pdg_distribution_at_height(int k) {
    std::map<long, double> out;
    for (const ForestNode node : vertices_at_height(1, k)) out[node.hp().parametrized_degree()] += 1;
    for (auto& [d, n] : out) n /= std::ldexp(1.0, k);
    return out;
}

HeightMass point_mass(int k) {
    std::vector<mpq_class> masses(static_cast<std::size_t>(k) + 1, q(0));
    masses.back() = 1;
    return HeightMass::table(masses);
}

}  // namespace

TEST_CASE("exp_neg encloses the exponential") {
    for (const auto& x : {q(0), q(1, 2), q(1), q(2), q(7, 3), q(20), q(256)}) {
        const Interval e = exp_neg(x);
        CHECK(e.lower <= e.upper);
        CHECK(e.width() < mpq_class(1, mpz_class(1) << 200));
        CHECK(std::abs(dbl(e.midpoint()) - std::exp(-dbl(x))) <= 1e-15 * std::exp(-dbl(x)) + 1e-60);
    }
    CHECK(exp_neg(q(0)).is_exact());
    CHECK(exp_neg(q(0)).lower == 1);
}

TEST_CASE("parsing masses") {
    CHECK(parse_rational("0.5") == q(1, 2));
    CHECK(parse_rational("3/4") == q(3, 4));
    CHECK(parse_rational("1e-3") == q(1, 1000));
    CHECK_THROWS_AS(parse_rational("x"), ValidationError);
    CHECK(HeightMass::parse("geometric:0.5").mass(2).lower == q(1, 8));
    CHECK(HeightMass::parse("table:0.5,0.5").cdf(1).lower == 1);
    CHECK(HeightMass::parse("poisson:2").kind() == HeightMass::Kind::Poisson);
    CHECK_THROWS_AS(HeightMass::parse("geometric:1.5"), ValidationError);
    CHECK_THROWS_AS(HeightMass::parse("table:0.5,0.25"), ValidationError);
    CHECK_THROWS_AS(HeightMass::parse("poisson:-1"), ValidationError);
    CHECK_THROWS_AS(HeightMass::parse("zipf:2"), ValidationError);
    CHECK(CodimMass::parse("geometric:0.5").mass(3) == q(1, 8));
    CHECK(CodimMass::parse("single:2").mass(2) == 1);
    CHECK(CodimMass::parse("table:0.25,0.75").cdf(2) == 1);
    CHECK(to_decimal(q(1, 3), 5) == "0.33333");
}

TEST_CASE("pdm moments") {
    const MomentEstimates g = expectation_pdm_closed(HeightMass::geometric(q(1, 2)));
    CHECK(g.mean.value == q(1, 2));
    CHECK(g.variance.value == q(3, 4));
    CHECK(g.mean.method == Estimate::Method::ClosedForm);
    for (const auto& p : {q(1, 4), q(1, 2), q(3, 4)}) {
        const MomentEstimates c = expectation_pdm_closed(HeightMass::geometric(p));
        CHECK(c.mean.value == (1 - p) / (2 * p));
        CHECK(c.variance.value == (1 - p * p) / (4 * p * p));
    }
    const MomentEstimates po = expectation_pdm_closed(HeightMass::poisson(q(2)));
    CHECK(po.mean.value == 1);
    CHECK(po.variance.value == 1);

    const MomentEstimates tbl = expectation_pdm_closed(HeightMass::table({q(1, 2), q(0), q(1, 2)}));
    CHECK(tbl.mean.value == q(1, 2));
    CHECK(tbl.variance.value == q(1, 2));
}

TEST_CASE("truncated sums match closed forms at K = 60") {
    std::vector<HeightMass> masses{HeightMass::geometric(q(1, 2)), HeightMass::geometric(q(3, 4)),
                                   HeightMass::poisson(q(1, 2)), HeightMass::poisson(q(1)), HeightMass::poisson(q(2))};
    for (const auto& m : masses) {
        CAPTURE(m.to_string());
        const MomentEstimates closed = expectation_pdm_closed(m);
        const MomentEstimates sum = expectation_pdm_truncated(m, 60);
        CHECK(sum.mean.method == Estimate::Method::TruncatedSum);
        CHECK(std::abs(dbl(sum.mean.value - closed.mean.value)) < 1e-12);
        CHECK(std::abs(dbl(sum.variance.value - closed.variance.value)) < 1e-12);
        CHECK(sum.mean.lower <= closed.mean.value);
        CHECK(closed.mean.value <= sum.mean.upper);
        const auto [first, second] = pdm_moments_by_summation(m, 60);
        CHECK(std::abs(static_cast<double>(first) - dbl(closed.mean.value)) < 1e-12);
        CHECK(std::abs(static_cast<double>(second - first * first) - dbl(closed.variance.value)) < 1e-12);
    }
}

TEST_CASE("geometric p = 1/4 needs a longer truncation") {
    const HeightMass m = HeightMass::geometric(q(1, 4));
    const MomentEstimates closed = expectation_pdm_closed(m);
    const MomentEstimates short_sum = expectation_pdm_truncated(m, 60);
    // The mass beyond height 60 is (3/4)^61, so the raw sum is still off by about 4e-7.
    CHECK(std::abs(dbl(short_sum.mean.value - closed.mean.value)) > 1e-12);
    CHECK(short_sum.mean.lower <= closed.mean.value);
    CHECK(closed.mean.value <= short_sum.mean.upper);
    const MomentEstimates long_sum = expectation_pdm_truncated(m, 130);
    CHECK(std::abs(dbl(long_sum.mean.value - closed.mean.value)) < 1e-12);
    CHECK(std::abs(dbl(long_sum.variance.value - closed.variance.value)) < 1e-12);
}

TEST_CASE("pdg mass function") {
    const HeightMass half = HeightMass::geometric(q(1, 2));
    CHECK(pmf_pdg(half, 1).value == q(3, 4));
    CHECK(pmf_pdg(half, 2).value == q(3, 16));
    CHECK_THROWS_AS(pmf_pdg(half, 0), ValidationError);

    for (int k = 0; k <= 12; ++k) {
        const auto counted = pdg_distribution_at_height(k);
        const HeightMass point = point_mass(k);
        for (int d = 1; d <= k + 2; ++d) {
            const auto it = counted.find(d);
            CHECK(dbl(pmf_pdg(point, d).value) == doctest::Approx(it == counted.end() ? 0.0 : it->second));
        }
    }

    for (const auto& m : {HeightMass::geometric(q(1, 4)), half, HeightMass::poisson(q(3)),
                          HeightMass::table({q(1, 3), q(1, 3), q(1, 3)})}) {
        CAPTURE(m.to_string());
        for (int d = 1; d <= 30; ++d) {
            const Estimate e = pmf_pdg(m, d);
            CHECK(e.upper < mpq_class(1, mpz_class(1) << (d - 1)));
            CHECK(e.lower >= 0);
        }
        const Estimate total = pdg_total_mass(m, 64);
        CHECK(total.lower <= 1);
        CHECK(1 - total.lower < mpq_class(1, mpz_class(1) << 40));
        const Estimate mean = expectation_pdg(m, 64);
        CHECK(mean.upper < q(346, 100));
        CHECK(mean.lower <= mean.value);
        CHECK(mean.value <= mean.upper);
    }
    CHECK(dbl(expectation_pdg(half, 64).value) == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("radius bounds") {
    const RadiusBounds g = radius_bounds(HeightMass::geometric(q(1, 2)));
    CHECK(g.rad_le_1.value == q(2, 3));
    CHECK(g.rad_le_2.value == q(8, 9));
    CHECK(g.rad_le_1.method == Estimate::Method::ClosedForm);
    for (const auto& p : {q(1, 4), q(3, 4)}) {
        const RadiusBounds b = radius_bounds(HeightMass::geometric(p));
        CHECK(b.rad_le_1.value == 2 * p / (1 + p));
        CHECK(b.rad_le_2.value == 4 * p / ((1 + p) * (1 + p)));
    }
    for (const auto& lambda : {q(1, 2), q(1), q(2), q(5)}) {
        const HeightMass m = HeightMass::poisson(lambda);
        const RadiusBounds b = radius_bounds(m);
        const double l = dbl(lambda);
        CHECK(dbl(b.rad_le_1.value) == doctest::Approx(std::exp(-l / 2)).epsilon(1e-14));
        CHECK(dbl(b.rad_le_2.value) == doctest::Approx((1 + l / 2) * std::exp(-l / 2)).epsilon(1e-14));
        // P(pdm = 0) = sum_k f(k) / 2^k
        double direct = 0;
        for (int k = 0; k <= 200; ++k) direct += m.mass_double(k) * std::ldexp(1.0, -k);
        CHECK(dbl(b.pdm_eq_0.value) == doctest::Approx(direct).epsilon(1e-12));
        CHECK(b.pdm_eq_0.lower <= b.rad_le_1.upper);
        CHECK(b.rad_le_1.lower <= b.pdm_eq_0.upper);
    }
    const RadiusBounds t = radius_bounds(HeightMass::table({q(1, 2), q(1, 2)}));
    CHECK(t.rad_le_1.value == q(3, 4));
    CHECK(t.rad_le_2.value == 1);
    CHECK(t.rad_le_1.method == Estimate::Method::TruncatedSum);
}

TEST_CASE("irreducibility lower bounds") {
    ForestMass single;
    single.codim = CodimMass::single(2);
    const IrrBounds s = irr_lower_bound(single);
    CHECK(s.analytic.value == q(3, 4));
    CHECK(s.analytic_exceeds_half);
    CHECK(s.counting_exceeds_half);
    CHECK(s.tolerance_reached);
    double counted = 0;
    for (int k = 0; k <= 12; ++k)
        counted += std::ldexp(1.0, -(k + 1)) * static_cast<double>(count_unique_at_height_by_sweep(2, k)) * std::ldexp(1.0, -k);
    CHECK(dbl(s.counting.lower) >= counted - 1e-15);
    CHECK(s.counting.lower > s.analytic.value);

    std::vector<ForestMass> configs(5);
    configs[1].height = HeightMass::poisson(q(2));
    configs[2].codim = CodimMass::table({q(1, 2), q(1, 4), q(1, 4)});
    configs[2].overrides.emplace(2, HeightMass::poisson(q(1, 2)));
    configs[3].height = HeightMass::geometric(q(1, 10));
    configs[3].truncation = 400;
    configs[4].codim = CodimMass::single(1);
    configs[4].height = HeightMass::table({q(0), q(0), q(0), q(1)});
    for (std::size_t i = 0; i < configs.size(); ++i) {
        const IrrBounds b = irr_lower_bound(configs[i]);
        CAPTURE(i);
        if (i == 4) {
            // No mass at the root: the analytic bound degenerates to exactly 1/2.
            CHECK(b.analytic.value == q(1, 2));
            CHECK_FALSE(b.analytic_exceeds_half);
        } else {
            CHECK(b.analytic.lower > q(1, 2));
        }
        CHECK(b.counting.lower > q(1, 2));
        CHECK(b.counting.lower <= b.counting.upper);
        CHECK(b.truncation_mass.upper <= 1);
    }
    ForestMass bad;
    bad.truncation = 5000;
    CHECK_THROWS_AS(irr_lower_bound(bad), ValidationError);

    ForestMass shallow;
    shallow.height = HeightMass::geometric(q(1, 100));
    shallow.truncation = 10;
    const IrrBounds w = irr_lower_bound(shallow);
    CHECK_FALSE(w.tolerance_reached);
    CHECK(w.counting.lower > q(1, 2));

    for (int k = 1; k <= 5; ++k) CHECK(2 * count_unique_at_height_by_sweep(2, k) >= (std::uint64_t{1} << k));
}

TEST_CASE("sampling") {
    ForestMass fm;
    const ForestNode a = sample_node(fm, 99);
    const ForestNode b = sample_node(fm, 99);
    CHECK(a == b);

    const std::size_t n = 100000;
    const HeightMass& f = fm.height;
    const Estimate zero = monte_carlo(fm, SampledStatistic::PdmIsZero, n, 5);
    double direct = 0;
    for (int k = 0; k <= 200; ++k) direct += f.mass_double(k) * std::ldexp(1.0, -k);
    CHECK(zero.method == Estimate::Method::MonteCarlo);
    CHECK(zero.samples == n);
    CHECK(std::abs(zero.to_double() - direct) <= 3 * zero.std_error);

    const Estimate pdg = monte_carlo(fm, SampledStatistic::Pdg, n, 6);
    CHECK(pdg.to_double() <= 3.46 + 3 * pdg.std_error);
    CHECK(std::abs(pdg.to_double() - 4.0 / 3.0) <= 3 * pdg.std_error);

    const Estimate pdm = monte_carlo(fm, SampledStatistic::Pdm, n, 7);
    CHECK(std::abs(pdm.to_double() - 0.5) <= 3 * pdm.std_error);

    const Estimate unique = monte_carlo(fm, SampledStatistic::UniqueBorel, n, 8);
    CHECK(unique.to_double() > 0.5);

    // Reproducible for a fixed seed, whatever the thread count.
    const Estimate once = monte_carlo(fm, SampledStatistic::Pdm, 20000, 42, 1);
    for (unsigned threads : {1u, 2u, 4u}) {
        const Estimate again = monte_carlo(fm, SampledStatistic::Pdm, 20000, 42, threads);
        CHECK(again.value == once.value);
        CHECK(again.lower == once.lower);
    }
    CHECK(monte_carlo(fm, SampledStatistic::Pdm, 20000, 43).value != once.value);
}
