#include "hilbforest/rational_poly.hpp"

#include "hilbforest/errors.hpp"

#include <cctype>
#include <sstream>

namespace hilbforest {

mpz_class binomial(const mpz_class& x, long k) {
    if (k < 0) return 0;
    mpz_class out;
    // mpz_bin_ui handles negative x via bin(-x, k) = (-1)^k bin(x + k - 1, k).
    mpz_bin_ui(out.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(k));
    return out;
}

RationalPolynomial::RationalPolynomial(std::vector<mpq_class> coefficients)
    : coeffs_(std::move(coefficients)) {
    normalize();
}

RationalPolynomial::RationalPolynomial(std::initializer_list<mpq_class> coefficients)
    : coeffs_(coefficients) {
    normalize();
}

RationalPolynomial RationalPolynomial::constant(const mpq_class& c) {
    return RationalPolynomial(std::vector<mpq_class>{c});
}

RationalPolynomial RationalPolynomial::monomial(const mpq_class& c, std::size_t degree) {
    std::vector<mpq_class> cs(degree + 1);
    cs[degree] = c;
    return RationalPolynomial(std::move(cs));
}

RationalPolynomial RationalPolynomial::binomial(long a, long b) {
    if (b < 0) return {};
    RationalPolynomial out = constant(1);
    mpz_class factorial = 1;
    for (long i = 0; i < b; ++i) {
        out *= RationalPolynomial{mpq_class(a - i), mpq_class(1)};
        factorial *= i + 1;
    }
    return out * mpq_class(1, factorial);
}

void RationalPolynomial::normalize() {
    for (auto& c : coeffs_) c.canonicalize();
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpq_class RationalPolynomial::coefficient(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : mpq_class(0);
}

mpq_class RationalPolynomial::leading_coefficient() const {
    return coeffs_.empty() ? mpq_class(0) : coeffs_.back();
}

mpq_class RationalPolynomial::operator()(const mpq_class& t) const {
    mpq_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

RationalPolynomial RationalPolynomial::shifted(long s) const {
    RationalPolynomial acc;
    const RationalPolynomial step{mpq_class(s), mpq_class(1)};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= step;
        acc += constant(*it);
    }
    return acc;
}

RationalPolynomial RationalPolynomial::backward_difference() const {
    return *this - shifted(-1);
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const RationalPolynomial& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<mpq_class> out(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    coeffs_ = std::move(out);
    normalize();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const mpq_class& c) {
    for (auto& x : coeffs_) x *= c;
    normalize();
    return *this;
}

RationalPolynomial RationalPolynomial::operator-() const {
    RationalPolynomial out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

std::string RationalPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const mpq_class& c = coeffs_[k];
        if (c == 0) continue;
        const bool negative = c < 0;
        mpq_class mag = abs(c);
        if (negative) os << '-';
        else if (!first) os << '+';
        first = false;
        const bool integral = mag.get_den() == 1;
        if (k == 0 || mag != 1) {
            if (integral) os << mag.get_num();
            else os << '(' << mag.get_num() << '/' << mag.get_den() << ')';
        }
        if (k >= 1) os << 't';
        if (k >= 2) os << '^' << k;
    }
    return os.str();
}

namespace {

class PolynomialParser {
public:
    explicit PolynomialParser(const std::string& text) : s_(text) {}

    RationalPolynomial run() {
        RationalPolynomial acc;
        skip_ws();
        if (pos_ == s_.size()) throw ParseError("empty polynomial", pos_);
        bool first = true;
        while (true) {
            skip_ws();
            if (pos_ == s_.size()) break;
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_ws();
            } else if (!first) {
                throw ParseError("expected '+' or '-'", pos_, std::string(1, peek()));
            }
            acc += term() * mpq_class(sign);
            first = false;
        }
        return acc;
    }

private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    mpz_class integer() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected integer", pos_, std::string(1, peek()));
        return mpz_class(s_.substr(start, pos_ - start), 10);
    }

    mpq_class fraction() {
        mpz_class num = integer();
        skip_ws();
        if (peek() != '/') return mpq_class(num);
        ++pos_;
        skip_ws();
        const std::size_t at = pos_;
        mpz_class den = integer();
        if (den == 0) throw ParseError("zero denominator", at, "0");
        mpq_class q(num, den);
        q.canonicalize();
        return q;
    }

    RationalPolynomial term() {
        mpq_class coeff = 1;
        bool have_coeff = false;
        if (peek() == '(') {
            ++pos_;
            skip_ws();
            int sign = 1;
            if (peek() == '-' || peek() == '+') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_ws();
            }
            coeff = fraction() * sign;
            skip_ws();
            if (peek() != ')') throw ParseError("expected ')'", pos_, std::string(1, peek()));
            ++pos_;
            have_coeff = true;
        } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = fraction();
            have_coeff = true;
        }
        skip_ws();
        if (have_coeff && peek() == '*') {
            ++pos_;
            skip_ws();
            if (peek() != 't') throw ParseError("expected 't' after '*'", pos_, std::string(1, peek()));
        }
        if (peek() != 't') {
            if (!have_coeff) throw ParseError("expected term", pos_, std::string(1, peek()));
            return RationalPolynomial::constant(coeff);
        }
        ++pos_;
        skip_ws();
        std::size_t power = 1;
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            const std::size_t at = pos_;
            mpz_class k = integer();
            if (!k.fits_uint_p() || k > 4096) throw ParseError("exponent too large", at);
            power = k.get_ui();
        }
        return RationalPolynomial::monomial(coeff, power);
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

RationalPolynomial RationalPolynomial::parse(const std::string& text) {
    return PolynomialParser(text).run();
}

RationalPolynomial RationalPolynomial::interpolate(const std::vector<mpq_class>& xs,
                                                   const std::vector<mpq_class>& ys) {
    // Newton divided differences.
    const std::size_t m = xs.size();
    std::vector<mpq_class> dd(ys.begin(), ys.end());
    for (std::size_t level = 1; level < m; ++level)
        for (std::size_t i = m - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
    RationalPolynomial acc;
    for (std::size_t i = m; i-- > 0;) {
        acc *= RationalPolynomial{-xs[i], mpq_class(1)};
        acc += constant(dd[i]);
    }
    return acc;
}

}  // namespace hilbforest
