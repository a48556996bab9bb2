#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace hilbforest {

/// Exact binomial coefficient binom(x, k) for integer x (possibly negative)
/// and k >= 0, read as the degree-k polynomial binom(t, k) evaluated at x.
/// Zero for k < 0.
mpz_class binomial(const mpz_class& x, long k);

/// Dense univariate polynomial in t over Q, normalized: no trailing zero
/// coefficients, the zero polynomial has no coefficients at all.
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<mpq_class> coefficients);
    RationalPolynomial(std::initializer_list<mpq_class> coefficients);

    static RationalPolynomial constant(const mpq_class& c);
    static RationalPolynomial monomial(const mpq_class& c, std::size_t degree);

    /// binom(t + a, b) as a polynomial: zero when b < 0, degree b otherwise.
    static RationalPolynomial binomial(long a, long b);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<mpq_class>& coefficients() const noexcept { return coeffs_; }
    mpq_class coefficient(std::size_t i) const;
    mpq_class leading_coefficient() const;

    mpq_class operator()(const mpq_class& t) const;

    /// q(t + s)
    RationalPolynomial shifted(long s) const;
    /// Backwards difference q(t) - q(t - 1).
    RationalPolynomial backward_difference() const;

    RationalPolynomial& operator+=(const RationalPolynomial& o);
    RationalPolynomial& operator-=(const RationalPolynomial& o);
    RationalPolynomial& operator*=(const RationalPolynomial& o);
    RationalPolynomial& operator*=(const mpq_class& c);

    friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
    friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
    friend RationalPolynomial operator*(RationalPolynomial a, const RationalPolynomial& b) { return a *= b; }
    friend RationalPolynomial operator*(RationalPolynomial a, const mpq_class& c) { return a *= c; }
    RationalPolynomial operator-() const;

    friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

    /// Linear ASCII form, e.g. "(3/2)t^2+(5/2)t-1"; "0" for the zero polynomial.
    std::string to_string() const;

    /// Parses sums of terms c, c*t, c*t^k (c an integer or "p/q", optionally
    /// parenthesized; '*' optional). Throws ParseError.
    static RationalPolynomial parse(const std::string& text);

    /// Unique polynomial of degree < points.size() through (x_i, y_i).
    static RationalPolynomial interpolate(const std::vector<mpq_class>& xs,
                                          const std::vector<mpq_class>& ys);

private:
    void normalize();
    std::vector<mpq_class> coeffs_;
};

}  // namespace hilbforest
