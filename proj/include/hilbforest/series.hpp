#pragma once

#include "hilbforest/hilbert_poly.hpp"
#include "hilbforest/monomial_ideal.hpp"

#include <gmpxx.h>

#include <string>
#include <vector>

namespace hilbforest {

/// Integer polynomial in T, dense, without trailing zeros.
class KPolynomial {
public:
    KPolynomial() = default;
    explicit KPolynomial(std::vector<mpz_class> coefficients);

    const std::vector<mpz_class>& coefficients() const noexcept { return coeffs_; }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    mpz_class coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : mpz_class(0); }

    /// "1 - T - 2T^4 + 3T^5 - T^6"
    std::string to_string() const;

    friend bool operator==(const KPolynomial&, const KPolynomial&) = default;

private:
    std::vector<mpz_class> coeffs_;
};

/// K-polynomial of S/I over (1-T)^{n+1}, with deg hs = deg hk - (n+1).
struct SeriesProfile {
    KPolynomial kpoly;
    int ambient = 0;
    long deg_hs = 0;
};

/// hk_I(T) = 1 - sum_g T^{deg g} (1-T)^{max g} over minimal generators.
/// Throws ContractViolation unless I is Borel.
KPolynomial k_polynomial(const MonomialIdeal& ideal);
/// Throws EmptySchemeError for <1> (its K-polynomial is 0).
SeriesProfile series_profile(const MonomialIdeal& ideal);
long series_degree(const MonomialIdeal& ideal);

/// Coefficient of T^i in hk / (1-T)^{n+1}.
mpz_class hilbert_function(const SeriesProfile& profile, long i);
mpz_class hilbert_function(const MonomialIdeal& ideal, long i);

/// Number of degree-i monomials outside I, by direct enumeration. Works for
/// any monomial ideal. Throws ResourceError when binom(n+i, n) exceeds
/// `max_monomials`.
mpz_class count_standard_monomials(const MonomialIdeal& ideal, long i, long max_monomials = 10'000'000);

/// Interpolates hf above deg hs and recovers the Gotzmann partition.
/// Throws EmptySchemeError when the Hilbert polynomial is 0.
AdmissiblePolynomial hilbert_polynomial(const MonomialIdeal& ideal);

/// Coefficients of (1-T)^m, shared across threads.
const std::vector<mpz_class>& alternating_pascal_row(int m);

}  // namespace hilbforest
