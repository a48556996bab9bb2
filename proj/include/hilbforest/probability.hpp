#pragma once

#include "hilbforest/forest.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace hilbforest {

/// Closed rational interval [lower, upper].
struct Interval {
    mpq_class lower;
    mpq_class upper;

    Interval() = default;
    Interval(mpq_class exact) : lower(exact), upper(std::move(exact)) {}
    Interval(mpq_class lo, mpq_class hi);

    bool is_exact() const { return lower == upper; }
    mpq_class midpoint() const { return (lower + upper) / 2; }
    mpq_class width() const { return upper - lower; }
    bool contains(const mpq_class& x) const { return lower <= x && x <= upper; }

    friend Interval operator+(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a, const Interval& b);
    friend Interval operator*(const Interval& a, const Interval& b);
    friend Interval operator*(const mpq_class& s, const Interval& a);
    Interval& operator+=(const Interval& b) { return *this = *this + b; }
};

/// Enclosure of e^{-x} for rational x >= 0 of width below 2^-bits.
Interval exp_neg(const mpq_class& x, int bits = 256);

/// Parses "0.5", "1/2", "2", "1e-3" into an exact rational.
mpq_class parse_rational(const std::string& text);
/// Truncated decimal expansion with `digits` places.
std::string to_decimal(const mpq_class& x, int digits = 15);

/// Mass function f_c on heights k >= 0.
class HeightMass {
public:
    enum class Kind { Geometric, Poisson, Table };

    /// f(k) = p (1-p)^k, 0 < p < 1.
    static HeightMass geometric(const mpq_class& p);
    /// f(k) = e^{-lambda} lambda^k / k!, lambda > 0.
    static HeightMass poisson(const mpq_class& lambda);
    /// f(k) = masses[k]; nonnegative, summing to 1 within 2^-40.
    static HeightMass table(std::vector<mpq_class> masses);
    /// "geometric:0.5", "poisson:2", "table:0.5,0.25,0.25".
    static HeightMass parse(const std::string& text);

    Kind kind() const noexcept { return kind_; }
    const mpq_class& parameter() const noexcept { return param_; }
    std::string to_string() const;

    Interval mass(long k) const;
    /// f(0) + ... + f(k).
    Interval cdf(long k) const;
    /// Upper bound on f(k+1)/f(k) for all k >= m; std::nullopt when f vanishes
    /// from m on (tables).
    std::optional<mpq_class> tail_ratio(long m) const;
    /// Enclosure of sum_{k >= m} k^power f(k) x^k for power in {0, 1, 2} and
    /// 0 < x <= 1. Lower end is 0 unless the tail is exact.
    Interval weighted_tail(long m, int power, const mpq_class& x) const;
    /// Smallest m >= k such that the tail ratio times x is below 1.
    long convergent_truncation(long k, const mpq_class& x) const;

    double mass_double(long k) const;
    /// Inverse-CDF draw from u in [0, 1).
    long sample(double u) const;

private:
    HeightMass(Kind kind, mpq_class param) : kind_(kind), param_(std::move(param)) {}

    Kind kind_;
    mpq_class param_;
    std::vector<mpq_class> table_;
    Interval scale_{mpq_class(1)};  // e^{-lambda} for Poisson
};

/// Mass function f on codimensions c >= 1.
class CodimMass {
public:
    enum class Kind { Geometric, Single, Table };

    /// f(c) = (1 - rho) rho^{c-1}; rho = 1/2 gives f(c) = 2^{-c}.
    static CodimMass geometric(const mpq_class& rho);
    /// All mass on one tree.
    static CodimMass single(int codim);
    /// f(c) = masses[c-1].
    static CodimMass table(std::vector<mpq_class> masses);
    /// "geometric:0.5", "single:2", "table:0.5,0.5".
    static CodimMass parse(const std::string& text);

    Kind kind() const noexcept { return kind_; }
    std::string to_string() const;
    mpq_class mass(int c) const;
    /// f(1) + ... + f(c).
    mpq_class cdf(int c) const;
    int sample(double u) const;

private:
    CodimMass(Kind kind, mpq_class param) : kind_(kind), param_(std::move(param)) {}

    Kind kind_;
    mpq_class param_;
    std::vector<mpq_class> table_;
};

struct ForestMass {
    CodimMass codim = CodimMass::geometric(mpq_class(1, 2));
    /// f_c for every codimension without an override.
    HeightMass height = HeightMass::geometric(mpq_class(1, 2));
    std::map<int, HeightMass> overrides;
    int truncation = 64;
    /// 2^-40
    mpq_class epsilon = mpq_class(1, mpz_class(1) << 40);

    const HeightMass& height_for(int codim) const;
};

struct Estimate {
    enum class Method { ClosedForm, TruncatedSum, MonteCarlo };

    mpq_class value;
    mpq_class lower;
    mpq_class upper;
    Method method = Method::ClosedForm;
    /// Truncation height for truncated sums.
    int truncation = 0;
    /// Monte Carlo: sample count and standard error; [lower, upper] is value
    /// +- 3 standard errors.
    std::size_t samples = 0;
    double std_error = 0.0;

    static Estimate from_interval(const Interval& range, Method method, int truncation = 0);
    bool is_exact() const { return lower == upper; }
    double to_double() const { return value.get_d(); }
};

const char* to_string(Estimate::Method m) noexcept;

struct MomentEstimates {
    Estimate mean;
    Estimate variance;
};

/// E and Var of pdm under f_c (pdm | k is Binomial(k, 1/2)).
MomentEstimates expectation_pdm_closed(const HeightMass& m);
/// sum_{k <= K} sum_d d^j binom(k, d) f(k) / 2^k plus a tail enclosure.
MomentEstimates expectation_pdm_truncated(const HeightMass& m, int truncation);

/// P(pdg = d) = (f(d-1) + (1 - F(d-1)) / 2) / 2^{d-1}.
Estimate pmf_pdg(const HeightMass& m, int d);
/// sum_d d P(pdg = d) truncated at `truncation` with the pmf < 2^{1-d} tail.
Estimate expectation_pdg(const HeightMass& m, int truncation);
/// sum_{d <= truncation} P(pdg = d).
Estimate pdg_total_mass(const HeightMass& m, int truncation);

struct RadiusBounds {
    /// Lower bounds for P(rad <= 1) and P(rad <= 2).
    Estimate rad_le_1;
    Estimate rad_le_2;
    /// P(pdm = 0) and P(pdm <= 1) by truncated sums.
    Estimate pdm_eq_0;
    Estimate pdm_le_1;
};

/// Closed forms for geometric and Poisson masses; tables use the sums.
RadiusBounds radius_bounds(const HeightMass& m, int truncation = 64);

struct IrrBounds {
    /// sum_c f(c) f_c(0) / 2 + 1/2.
    Estimate analytic;
    /// Mass of unique-Borel vertices up to the truncation, plus half the tail.
    Estimate counting;
    /// Mass of all vertices up to the truncation (>= 1 - epsilon when reached).
    Estimate truncation_mass;
    bool analytic_exceeds_half = false;
    bool counting_exceeds_half = false;
    bool tolerance_reached = false;
};

IrrBounds irr_lower_bound(const ForestMass& fm);

/// Draws c ~ f, k ~ f_c and k uniform steps.
ForestNode sample_node(const ForestMass& fm, std::mt19937_64& rng);
ForestNode sample_node(const ForestMass& fm, std::uint64_t seed);

enum class SampledStatistic { Pdm, Pdg, PdmIsZero, PdmAtMostOne, UniqueBorel };

/// Sample mean of the statistic. Samples are drawn in fixed blocks with their
/// own seeds, so the result does not depend on the thread count.
Estimate monte_carlo(const ForestMass& fm, SampledStatistic stat, std::size_t samples, std::uint64_t seed,
                     unsigned threads = 0);

}  // namespace hilbforest
