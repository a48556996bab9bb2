#include "hilbforest/series.hpp"

#include "hilbforest/errors.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <sstream>

namespace hilbforest {

KPolynomial::KPolynomial(std::vector<mpz_class> coefficients) : coeffs_(std::move(coefficients)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string KPolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const mpz_class& c = coeffs_[k];
        if (c == 0) continue;
        mpz_class mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0 || mag != 1) os << mag;
        if (k >= 1) os << 'T';
        if (k >= 2) os << '^' << k;
    }
    return os.str();
}

const std::vector<mpz_class>& alternating_pascal_row(int m) {
    static std::shared_mutex mutex;
    static std::deque<std::vector<mpz_class>> rows{{mpz_class(1)}};
    {
        std::shared_lock lock(mutex);
        if (static_cast<std::size_t>(m) < rows.size()) return rows[static_cast<std::size_t>(m)];
    }
    std::unique_lock lock(mutex);
    while (rows.size() <= static_cast<std::size_t>(m)) {
        const auto& prev = rows.back();
        std::vector<mpz_class> next(prev.size() + 1);
        for (std::size_t i = 0; i < prev.size(); ++i) {
            next[i] += prev[i];
            next[i + 1] -= prev[i];
        }
        rows.push_back(std::move(next));
    }
    return rows[static_cast<std::size_t>(m)];
}

KPolynomial k_polynomial(const MonomialIdeal& ideal) {
    if (!is_borel(ideal))
        throw ContractViolation("K-polynomial formula needs a Borel ideal; " + ideal.to_string() + " is not");
    std::vector<mpz_class> coeffs{mpz_class(1)};
    for (const auto& g : ideal.generators()) {
        const int shift = g.degree();
        const auto& row = alternating_pascal_row(g.max_index().value_or(0));
        if (coeffs.size() < shift + row.size()) coeffs.resize(shift + row.size());
        for (std::size_t i = 0; i < row.size(); ++i) coeffs[shift + i] -= row[i];
    }
    return KPolynomial(std::move(coeffs));
}

SeriesProfile series_profile(const MonomialIdeal& ideal) {
    KPolynomial k = k_polynomial(ideal);
    if (k.degree() < 0) throw EmptySchemeError(ideal.to_string() + " has Hilbert series 0");
    const long deg_hs = k.degree() - (ideal.ambient() + 1);
    return SeriesProfile{std::move(k), ideal.ambient(), deg_hs};
}

long series_degree(const MonomialIdeal& ideal) { return series_profile(ideal).deg_hs; }

mpz_class hilbert_function(const SeriesProfile& profile, long i) {
    mpz_class acc = 0;
    const auto& k = profile.kpoly.coefficients();
    for (long j = 0; j < static_cast<long>(k.size()) && j <= i; ++j)
        if (k[static_cast<std::size_t>(j)] != 0)
            acc += k[static_cast<std::size_t>(j)] * binomial(i - j + profile.ambient, profile.ambient);
    return acc;
}

mpz_class hilbert_function(const MonomialIdeal& ideal, long i) {
    if (ideal.is_unit()) return 0;
    return hilbert_function(series_profile(ideal), i);
}

namespace {

// Enumerates exponent vectors of a fixed degree, counting those outside I.
class StandardMonomialCounter {
public:
    explicit StandardMonomialCounter(const MonomialIdeal& ideal)
        : ideal_(ideal), exps_(static_cast<std::size_t>(ideal.ambient()) + 1, 0) {}

    long count(long degree) {
        count_ = 0;
        fill(0, degree);
        return count_;
    }

private:
    void fill(std::size_t var, long remaining) {
        if (var + 1 == exps_.size()) {
            exps_[var] = static_cast<int>(remaining);
            if (!ideal_.contains(Monomial(exps_))) ++count_;
            return;
        }
        for (long e = remaining; e >= 0; --e) {
            exps_[var] = static_cast<int>(e);
            fill(var + 1, remaining - e);
        }
        exps_[var] = 0;
    }

    const MonomialIdeal& ideal_;
    std::vector<int> exps_;
    long count_ = 0;
};

}  // namespace

mpz_class count_standard_monomials(const MonomialIdeal& ideal, long i, long max_monomials) {
    if (i < 0) return 0;
    const mpz_class total = binomial(i + ideal.ambient(), ideal.ambient());
    if (total > max_monomials)
        throw ResourceError("brute-force Hilbert function would visit " + total.get_str() + " monomials");
    return StandardMonomialCounter(ideal).count(i);
}

AdmissiblePolynomial hilbert_polynomial(const MonomialIdeal& ideal) {
    const SeriesProfile profile = series_profile(ideal);
    const int n = ideal.ambient();
    std::vector<mpq_class> xs, ys;
    for (long i = profile.deg_hs + 1; i <= profile.deg_hs + n + 1; ++i) {
        xs.emplace_back(i);
        ys.emplace_back(hilbert_function(profile, i));
    }
    const RationalPolynomial interpolant = RationalPolynomial::interpolate(xs, ys);
    if (interpolant.is_zero()) throw EmptySchemeError(ideal.to_string() + " defines the empty scheme");
    AdmissiblePolynomial hp = recover(interpolant);
    if (hilbert_function(profile, profile.deg_hs) == hp.evaluate(profile.deg_hs))
        throw Error(ErrorKind::Internal, "internal",
                    "Hilbert function and polynomial agree at deg hs for " + ideal.to_string());
    return hp;
}

}  // namespace hilbforest
