#include "hilbforest/probability.hpp"

#include "hilbforest/classifier.hpp"
#include "hilbforest/enumerator.hpp"
#include "hilbforest/errors.hpp"
#include "hilbforest/rational_poly.hpp"

#include <tbb/parallel_for.h>
#include <tbb/info.h>
#include <tbb/task_arena.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace hilbforest {

Interval::Interval(mpq_class lo, mpq_class hi) : lower(std::move(lo)), upper(std::move(hi)) {
    if (lower > upper) throw Error(ErrorKind::Internal, "internal", "inverted interval");
}

Interval operator+(const Interval& a, const Interval& b) { return Interval(a.lower + b.lower, a.upper + b.upper); }
Interval operator-(const Interval& a, const Interval& b) { return Interval(a.lower - b.upper, a.upper - b.lower); }

Interval operator*(const Interval& a, const Interval& b) {
    const mpq_class p[4] = {a.lower * b.lower, a.lower * b.upper, a.upper * b.lower, a.upper * b.upper};
    return Interval(*std::min_element(p, p + 4), *std::max_element(p, p + 4));
}

Interval operator*(const mpq_class& s, const Interval& a) {
    return s >= 0 ? Interval(s * a.lower, s * a.upper) : Interval(s * a.upper, s * a.lower);
}

namespace {

mpz_class pow2(unsigned long e) { return mpz_class(1) << e; }

// Outward rounding to multiples of 2^-bits keeps denominators small.
Interval round_out(const Interval& x, int bits) {
    const mpz_class scale = pow2(static_cast<unsigned long>(bits));
    mpz_class lo, hi;
    const mpq_class a = x.lower * scale, b = x.upper * scale;
    mpz_fdiv_q(lo.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
    mpz_cdiv_q(hi.get_mpz_t(), b.get_num_mpz_t(), b.get_den_mpz_t());
    mpq_class lower(lo, scale), upper(hi, scale);
    lower.canonicalize();
    upper.canonicalize();
    return Interval(lower, upper);
}

mpq_class power(const mpq_class& x, long e) {
    mpq_class r = 1;
    for (long i = 0; i < e; ++i) r *= x;
    return r;
}

}  // namespace

Interval exp_neg(const mpq_class& x, int bits) {
    if (x < 0) throw ValidationError("exp_neg needs a nonnegative argument");
    // e^{-x} = (e^{-y})^{2^s} with y = x / 2^s <= 1.
    unsigned long s = 0;
    mpq_class y = x;
    while (y > 1) {
        y /= 2;
        ++s;
    }
    const int work = bits + 32 + static_cast<int>(s) * 2;
    const mpq_class tolerance(1, pow2(static_cast<unsigned long>(work)));
    mpq_class sum = 1, term = 1;
    for (long i = 1;; ++i) {
        term *= y;
        term /= i;
        sum += term;
        // Remaining terms are at most term * y/(i+1) / (1 - y/(i+2)) <= 2 term y/(i+1).
        const mpq_class remainder = 2 * term * y / (i + 1);
        if (remainder < tolerance) {
            Interval e = round_out(Interval(1 / (sum + remainder), 1 / sum), work);
            for (unsigned long j = 0; j < s; ++j) e = round_out(e * e, work);
            return e;
        }
    }
}

mpq_class parse_rational(const std::string& text) {
    std::string t;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    if (t.empty()) throw ParseError("expected a number", 0);
    try {
        if (t.find('/') != std::string::npos) {
            mpq_class q(t, 10);
            if (q.get_den() == 0) throw ParseError("zero denominator", t.find('/'));
            q.canonicalize();
            return q;
        }
        long exponent = 0;
        const std::size_t epos = t.find_first_of("eE");
        std::string mantissa = t.substr(0, epos);
        if (epos != std::string::npos) {
            std::size_t used = 0;
            exponent = std::stol(t.substr(epos + 1), &used);
            if (used != t.size() - epos - 1) throw ParseError("bad exponent", epos + 1);
        }
        const std::size_t dot = mantissa.find('.');
        if (dot != std::string::npos) {
            exponent -= static_cast<long>(mantissa.size() - dot - 1);
            mantissa.erase(dot, 1);
        }
        if (mantissa.empty() || mantissa == "-" || mantissa == "+") throw ParseError("expected digits", 0);
        for (std::size_t i = (mantissa[0] == '-' || mantissa[0] == '+') ? 1 : 0; i < mantissa.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(mantissa[i])))
                throw ParseError("unexpected character in number", i, std::string(1, mantissa[i]));
        if (mantissa[0] == '+') mantissa.erase(0, 1);
        mpq_class q{mpz_class(mantissa, 10)};
        mpz_class ten;
        mpz_ui_pow_ui(ten.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
        if (exponent >= 0) return q * ten;
        q /= ten;
        return q;
    } catch (const std::invalid_argument&) {
        throw ParseError("not a number: '" + text + "'", 0, text);
    } catch (const std::out_of_range&) {
        throw ParseError("number out of range: '" + text + "'", 0, text);
    }
}

std::string to_decimal(const mpq_class& x, int digits) {
    mpz_class ten;
    mpz_ui_pow_ui(ten.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    const mpq_class scaled = abs(x) * ten;
    mpz_class whole;
    mpz_tdiv_q(whole.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    std::string s = whole.get_str();
    if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    if (digits > 0) s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    return (x < 0 && whole != 0 ? "-" : "") + s;
}

// ---------------------------------------------------------------------------
// HeightMass

HeightMass HeightMass::geometric(const mpq_class& p) {
    if (p <= 0 || p >= 1) throw ValidationError("geometric parameter must lie in (0, 1), got " + p.get_str());
    return HeightMass(Kind::Geometric, p);
}

HeightMass HeightMass::poisson(const mpq_class& lambda) {
    if (lambda <= 0) throw ValidationError("Poisson parameter must be positive, got " + lambda.get_str());
    if (lambda > 256) throw ValidationError("Poisson parameter above 256 is not supported");
    HeightMass m(Kind::Poisson, lambda);
    m.scale_ = exp_neg(lambda);
    return m;
}

HeightMass HeightMass::table(std::vector<mpq_class> masses) {
    if (masses.empty()) throw ValidationError("mass table is empty");
    mpq_class total = 0;
    for (const auto& f : masses) {
        if (f < 0) throw ValidationError("mass table has a negative entry");
        total += f;
    }
    if (abs(total - 1) > mpq_class(1, pow2(40))) throw ValidationError("mass table sums to " + total.get_str());
    HeightMass m(Kind::Table, 0);
    m.table_ = std::move(masses);
    return m;
}

namespace {

std::pair<std::string, std::string> split_kind(const std::string& text) {
    const std::size_t colon = text.find(':');
    if (colon == std::string::npos) throw ParseError("expected kind:parameter", text.size(), text);
    return {text.substr(0, colon), text.substr(colon + 1)};
}

std::vector<mpq_class> parse_list(const std::string& text) {
    std::vector<mpq_class> out;
    std::stringstream in(text);
    for (std::string item; std::getline(in, item, ',');) out.push_back(parse_rational(item));
    return out;
}

}  // namespace

HeightMass HeightMass::parse(const std::string& text) {
    const auto [kind, arg] = split_kind(text);
    if (kind == "geometric") return geometric(parse_rational(arg));
    if (kind == "poisson") return poisson(parse_rational(arg));
    if (kind == "table") return table(parse_list(arg));
    throw ParseError("unknown mass kind '" + kind + "'", 0, kind);
}

std::string HeightMass::to_string() const {
    switch (kind_) {
        case Kind::Geometric: return "geometric:" + param_.get_str();
        case Kind::Poisson: return "poisson:" + param_.get_str();
        case Kind::Table: {
            std::string s = "table:";
            for (std::size_t i = 0; i < table_.size(); ++i) s += (i ? "," : "") + table_[i].get_str();
            return s;
        }
    }
    return {};
}

Interval HeightMass::mass(long k) const {
    if (k < 0) return Interval(mpq_class(0));
    switch (kind_) {
        case Kind::Geometric: return Interval(param_ * power(1 - param_, k));
        case Kind::Poisson: {
            mpq_class c = 1;
            for (long i = 1; i <= k; ++i) c = c * param_ / i;
            return c * scale_;
        }
        case Kind::Table:
            return Interval(static_cast<std::size_t>(k) < table_.size() ? table_[static_cast<std::size_t>(k)]
                                                                         : mpq_class(0));
    }
    return {};
}

Interval HeightMass::cdf(long k) const {
    if (k < 0) return Interval(mpq_class(0));
    switch (kind_) {
        case Kind::Geometric: return Interval(1 - power(1 - param_, k + 1));
        case Kind::Poisson: {
            mpq_class c = 1, sum = 1;
            for (long i = 1; i <= k; ++i) {
                c = c * param_ / i;
                sum += c;
            }
            Interval r = sum * scale_;
            if (r.upper > 1) r.upper = 1;
            return r;
        }
        case Kind::Table: {
            mpq_class sum = 0;
            for (std::size_t i = 0; i < table_.size() && static_cast<long>(i) <= k; ++i) sum += table_[i];
            return Interval(sum);
        }
    }
    return {};
}

std::optional<mpq_class> HeightMass::tail_ratio(long m) const {
    switch (kind_) {
        case Kind::Geometric: return 1 - param_;
        case Kind::Poisson: return param_ / (m + 1);
        case Kind::Table: return std::nullopt;
    }
    return std::nullopt;
}

long HeightMass::convergent_truncation(long k, const mpq_class& x) const {
    const auto rho = tail_ratio(k);
    if (!rho) return k;
    long m = k;
    while (*tail_ratio(m) * x >= 1) ++m;
    return m;
}

Interval HeightMass::weighted_tail(long m, int power_index, const mpq_class& x) const {
    if (power_index < 0 || power_index > 2) throw ValidationError("tail moments are supported up to order 2");
    if (kind_ == Kind::Table) {
        mpq_class sum = 0, xk = power(x, m);
        for (long k = m; k < static_cast<long>(table_.size()); ++k) {
            mpq_class kp = 1;
            for (int j = 0; j < power_index; ++j) kp *= k;
            sum += kp * table_[static_cast<std::size_t>(k)] * xk;
            xk *= x;
        }
        return Interval(sum);
    }
    const mpq_class rho = *tail_ratio(m) * x;
    if (rho >= 1) throw Error(ErrorKind::Internal, "internal", "tail bound requested where the ratio is >= 1");
    const mpq_class one_minus = 1 - rho;
    const mpq_class mm(m);
    mpq_class series;
    switch (power_index) {
        case 0: series = 1 / one_minus; break;
        case 1: series = mm / one_minus + rho / (one_minus * one_minus); break;
        default:
            series = mm * mm / one_minus + 2 * mm * rho / (one_minus * one_minus) +
                     rho * (1 + rho) / (one_minus * one_minus * one_minus);
    }
    const mpq_class head = mass(m).upper * power(x, m);
    return Interval(mpq_class(0), head * series);
}

double HeightMass::mass_double(long k) const {
    if (k < 0) return 0.0;
    switch (kind_) {
        case Kind::Geometric: return param_.get_d() * std::pow(1 - param_.get_d(), static_cast<double>(k));
        case Kind::Poisson: {
            const double lambda = param_.get_d();
            return std::exp(-lambda + static_cast<double>(k) * std::log(lambda) - std::lgamma(static_cast<double>(k) + 1));
        }
        case Kind::Table: return static_cast<std::size_t>(k) < table_.size() ? table_[static_cast<std::size_t>(k)].get_d() : 0.0;
    }
    return 0.0;
}

long HeightMass::sample(double u) const {
    if (kind_ == Kind::Geometric) return static_cast<long>(std::floor(std::log1p(-u) / std::log1p(-param_.get_d())));
    const long cap = kind_ == Kind::Table ? static_cast<long>(table_.size()) - 1 : 100000;
    double cdf = 0.0;
    for (long k = 0; k < cap; ++k) {
        cdf += mass_double(k);
        if (u < cdf) return k;
    }
    return cap;
}

// ---------------------------------------------------------------------------
// CodimMass

CodimMass CodimMass::geometric(const mpq_class& rho) {
    if (rho <= 0 || rho >= 1) throw ValidationError("codimension ratio must lie in (0, 1), got " + rho.get_str());
    return CodimMass(Kind::Geometric, rho);
}

CodimMass CodimMass::single(int codim) {
    if (codim < 1) throw ValidationError("codimension must be positive, got " + std::to_string(codim));
    return CodimMass(Kind::Single, codim);
}

CodimMass CodimMass::table(std::vector<mpq_class> masses) {
    if (masses.empty()) throw ValidationError("codimension mass table is empty");
    mpq_class total = 0;
    for (const auto& f : masses) {
        if (f < 0) throw ValidationError("codimension mass table has a negative entry");
        total += f;
    }
    if (total != 1) throw ValidationError("codimension mass table sums to " + total.get_str());
    CodimMass m(Kind::Table, 0);
    m.table_ = std::move(masses);
    return m;
}

CodimMass CodimMass::parse(const std::string& text) {
    const auto [kind, arg] = split_kind(text);
    if (kind == "geometric") return geometric(parse_rational(arg));
    if (kind == "single") {
        const mpq_class c = parse_rational(arg);
        if (c.get_den() != 1 || !c.get_num().fits_sint_p()) throw ValidationError("codimension must be an integer");
        return single(static_cast<int>(c.get_num().get_si()));
    }
    if (kind == "table") return table(parse_list(arg));
    throw ParseError("unknown codimension mass kind '" + kind + "'", 0, kind);
}

std::string CodimMass::to_string() const {
    switch (kind_) {
        case Kind::Geometric: return "geometric:" + param_.get_str();
        case Kind::Single: return "single:" + param_.get_str();
        case Kind::Table: {
            std::string s = "table:";
            for (std::size_t i = 0; i < table_.size(); ++i) s += (i ? "," : "") + table_[i].get_str();
            return s;
        }
    }
    return {};
}

mpq_class CodimMass::mass(int c) const {
    if (c < 1) return 0;
    switch (kind_) {
        case Kind::Geometric: return (1 - param_) * power(param_, c - 1);
        case Kind::Single: return param_ == c ? 1 : 0;
        case Kind::Table: return static_cast<std::size_t>(c) <= table_.size() ? table_[static_cast<std::size_t>(c) - 1] : 0;
    }
    return 0;
}

mpq_class CodimMass::cdf(int c) const {
    mpq_class sum = 0;
    for (int i = 1; i <= c; ++i) sum += mass(i);
    return sum;
}

int CodimMass::sample(double u) const {
    switch (kind_) {
        case Kind::Geometric:
            return 1 + static_cast<int>(std::floor(std::log1p(-u) / std::log(param_.get_d())));
        case Kind::Single: return static_cast<int>(param_.get_num().get_si());
        case Kind::Table: {
            double cdf = 0.0;
            for (std::size_t i = 0; i < table_.size(); ++i) {
                cdf += table_[i].get_d();
                if (u < cdf) return static_cast<int>(i) + 1;
            }
            return static_cast<int>(table_.size());
        }
    }
    return 1;
}

const HeightMass& ForestMass::height_for(int c) const {
    const auto it = overrides.find(c);
    return it != overrides.end() ? it->second : height;
}

// ---------------------------------------------------------------------------
// Estimates

Estimate Estimate::from_interval(const Interval& range, Method method, int truncation) {
    Estimate e;
    e.value = range.is_exact() ? range.lower : range.midpoint();
    e.lower = range.lower;
    e.upper = range.upper;
    e.method = method;
    e.truncation = truncation;
    return e;
}

const char* to_string(Estimate::Method m) noexcept {
    switch (m) {
        case Estimate::Method::ClosedForm: return "closed-form";
        case Estimate::Method::TruncatedSum: return "truncated-sum";
        case Estimate::Method::MonteCarlo: return "monte-carlo";
    }
    return "closed-form";
}

MomentEstimates expectation_pdm_closed(const HeightMass& m) {
    const mpq_class& p = m.parameter();
    switch (m.kind()) {
        case HeightMass::Kind::Geometric:
            return {Estimate::from_interval(Interval(mpq_class((1 - p) / (2 * p))), Estimate::Method::ClosedForm),
                    Estimate::from_interval(Interval(mpq_class((1 - p * p) / (4 * p * p))), Estimate::Method::ClosedForm)};
        case HeightMass::Kind::Poisson:
            return {Estimate::from_interval(Interval(mpq_class(p / 2)), Estimate::Method::ClosedForm),
                    Estimate::from_interval(Interval(mpq_class(p / 2)), Estimate::Method::ClosedForm)};
        case HeightMass::Kind::Table: break;
    }
    // E[pdm | k] = k/2 and Var[pdm | k] = k/4; table tails are exact sums.
    const mpq_class m1 = m.weighted_tail(0, 1, 1).lower, m2 = m.weighted_tail(0, 2, 1).lower;
    const mpq_class e1 = m1 / 2, e2 = (m1 + m2) / 4;
    return {Estimate::from_interval(Interval(e1), Estimate::Method::ClosedForm),
            Estimate::from_interval(Interval(mpq_class(e2 - e1 * e1)), Estimate::Method::ClosedForm)};
}

MomentEstimates expectation_pdm_truncated(const HeightMass& m, int truncation) {
    const long last = m.convergent_truncation(truncation + 1, 1) - 1;
    Interval e1(mpq_class(0)), e2(mpq_class(0));
    std::vector<mpz_class> row{1};
    for (long k = 0; k <= last; ++k) {
        if (k > 0) {
            std::vector<mpz_class> next(row.size() + 1);
            for (std::size_t i = 0; i < row.size(); ++i) {
                next[i] += row[i];
                next[i + 1] += row[i];
            }
            row = std::move(next);
        }
        mpz_class s1 = 0, s2 = 0;
        for (long d = 0; d <= k; ++d) {
            s1 += row[static_cast<std::size_t>(d)] * d;
            s2 += row[static_cast<std::size_t>(d)] * d * d;
        }
        const Interval weight = mpq_class(1, pow2(static_cast<unsigned long>(k))) * m.mass(k);
        e1 += mpq_class(s1) * weight;
        e2 += mpq_class(s2) * weight;
    }
    const Interval t1 = m.weighted_tail(last + 1, 1, 1);
    const Interval t2 = m.weighted_tail(last + 1, 2, 1);
    e1 += mpq_class(1, 2) * t1;
    e2 += mpq_class(1, 4) * (t1 + t2);
    Interval var = e2 - e1 * e1;
    const int k = static_cast<int>(last);
    return {Estimate::from_interval(e1, Estimate::Method::TruncatedSum, k),
            Estimate::from_interval(var, Estimate::Method::TruncatedSum, k)};
}

namespace {

Interval pmf_pdg_interval(const HeightMass& m, int d) {
    const Interval tail = Interval(mpq_class(1)) - m.cdf(d - 1);
    return mpq_class(1, pow2(static_cast<unsigned long>(d - 1))) * (m.mass(d - 1) + mpq_class(1, 2) * tail);
}

}  // namespace

Estimate pmf_pdg(const HeightMass& m, int d) {
    if (d < 1) throw ValidationError("parametrized degree must be positive, got " + std::to_string(d));
    return Estimate::from_interval(pmf_pdg_interval(m, d), Estimate::Method::ClosedForm);
}

Estimate expectation_pdg(const HeightMass& m, int truncation) {
    if (truncation < 1) throw ValidationError("truncation must be positive");
    Interval sum(mpq_class(0));
    for (int d = 1; d <= truncation; ++d) sum += mpq_class(d) * pmf_pdg_interval(m, d);
    // sum_{d > D} d 2^{1-d} = (D + 2) / 2^{D-1}
    sum.upper += mpq_class(truncation + 2) * 2 / pow2(static_cast<unsigned long>(truncation));
    return Estimate::from_interval(sum, Estimate::Method::TruncatedSum, truncation);
}

Estimate pdg_total_mass(const HeightMass& m, int truncation) {
    Interval sum(mpq_class(0));
    for (int d = 1; d <= truncation; ++d) sum += pmf_pdg_interval(m, d);
    return Estimate::from_interval(sum, Estimate::Method::TruncatedSum, truncation);
}

RadiusBounds radius_bounds(const HeightMass& m, int truncation) {
    const mpq_class half(1, 2);
    const long last = m.convergent_truncation(truncation + 1, half) - 1;
    Interval p0(mpq_class(0)), p1(mpq_class(0));
    for (long k = 0; k <= last; ++k) {
        const Interval w = mpq_class(1, pow2(static_cast<unsigned long>(k))) * m.mass(k);
        p0 += w;
        p1 += mpq_class(1 + k) * w;
    }
    const Interval t0 = m.weighted_tail(last + 1, 0, half);
    p0 += t0;
    p1 += t0 + m.weighted_tail(last + 1, 1, half);

    RadiusBounds r;
    r.pdm_eq_0 = Estimate::from_interval(p0, Estimate::Method::TruncatedSum, static_cast<int>(last));
    r.pdm_le_1 = Estimate::from_interval(p1, Estimate::Method::TruncatedSum, static_cast<int>(last));
    const mpq_class& p = m.parameter();
    switch (m.kind()) {
        case HeightMass::Kind::Geometric:
            r.rad_le_1 = Estimate::from_interval(Interval(mpq_class(2 * p / (1 + p))), Estimate::Method::ClosedForm);
            r.rad_le_2 = Estimate::from_interval(Interval(mpq_class(4 * p / ((1 + p) * (1 + p)))),
                                                 Estimate::Method::ClosedForm);
            break;
        case HeightMass::Kind::Poisson: {
            const Interval e = exp_neg(p / 2);
            r.rad_le_1 = Estimate::from_interval(e, Estimate::Method::ClosedForm);
            r.rad_le_2 = Estimate::from_interval(mpq_class(1 + p / 2) * e, Estimate::Method::ClosedForm);
            break;
        }
        case HeightMass::Kind::Table:
            r.rad_le_1 = r.pdm_eq_0;
            r.rad_le_2 = r.pdm_le_1;
            break;
    }
    return r;
}

// ---------------------------------------------------------------------------
// irr

namespace {

struct CodimGroup {
    mpq_class weight;
    int codim;  // representative: 1, or any c >= 2
    const HeightMass* mass;
};

std::vector<CodimGroup> codim_groups(const ForestMass& fm) {
    std::vector<CodimGroup> groups;
    mpq_class overridden_high = 0;
    for (const auto& [c, hm] : fm.overrides) {
        const mpq_class w = fm.codim.mass(c);
        if (w != 0) groups.push_back({w, c, &hm});
        if (c >= 2) overridden_high += w;
    }
    if (!fm.overrides.contains(1)) {
        const mpq_class w = fm.codim.mass(1);
        if (w != 0) groups.push_back({w, 1, &fm.height});
    }
    const mpq_class rest = 1 - fm.codim.cdf(1) - overridden_high;
    if (rest != 0) groups.push_back({rest, 2, &fm.height});
    return groups;
}

mpz_class unique_count(int codim, int k) {
    constexpr int kSweepHeight = 12;
    if (k <= kSweepHeight) return mpz_class(std::to_string(count_unique_at_height_by_sweep(codim, k)));
    return count_unique_at_height(codim, k);
}

}  // namespace

IrrBounds irr_lower_bound(const ForestMass& fm) {
    if (fm.truncation < 0 || fm.truncation > 4096) throw ValidationError("truncation must lie in [0, 4096]");
    const int K = fm.truncation;
    Interval analytic(mpq_class(1, 2)), counting(mpq_class(0)), total(mpq_class(0));
    for (const auto& g : codim_groups(fm)) {
        analytic += mpq_class(g.weight / 2) * g.mass->mass(0);
        Interval partial(mpq_class(0));
        for (int k = 0; k <= K; ++k) {
            const mpq_class share(unique_count(g.codim, k), pow2(static_cast<unsigned long>(k)));
            partial += share * g.mass->mass(k);
        }
        const Interval cdf = g.mass->cdf(K);
        const mpq_class tail_lo = 1 - cdf.upper, tail_hi = 1 - cdf.lower;
        counting += g.weight * Interval(mpq_class(partial.lower + tail_lo / 2), mpq_class(partial.upper + tail_hi));
        total += g.weight * cdf;
    }
    IrrBounds out;
    out.analytic = Estimate::from_interval(analytic, Estimate::Method::ClosedForm);
    out.counting = Estimate::from_interval(counting, Estimate::Method::TruncatedSum, K);
    out.counting.value = counting.lower;
    out.truncation_mass = Estimate::from_interval(total, Estimate::Method::TruncatedSum, K);
    out.analytic_exceeds_half = analytic.lower > mpq_class(1, 2);
    out.counting_exceeds_half = counting.lower > mpq_class(1, 2);
    out.tolerance_reached = total.lower >= 1 - fm.epsilon;
    return out;
}

// ---------------------------------------------------------------------------
// Sampling

namespace {

constexpr std::size_t kBlockSize = 4096;
constexpr long kMaxSampledHeight = 1 << 16;

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

ForestNode sample_node(const ForestMass& fm, std::mt19937_64& rng) {
    const int c = fm.codim.sample(uniform01(rng));
    const long k = fm.height_for(c).sample(uniform01(rng));
    if (k > kMaxSampledHeight) throw ResourceError("sampled height " + std::to_string(k) + " exceeds guard");
    std::vector<Step> steps(static_cast<std::size_t>(k));
    std::uint64_t bits = 0;
    for (long i = 0; i < k; ++i) {
        if (i % 64 == 0) bits = rng();
        steps[static_cast<std::size_t>(i)] = (bits >> (i % 64)) & 1u ? Step::Lift : Step::Plus;
    }
    return ForestNode::at(c, PathWord(std::move(steps)));
}

ForestNode sample_node(const ForestMass& fm, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return sample_node(fm, rng);
}

Estimate monte_carlo(const ForestMass& fm, SampledStatistic stat, std::size_t samples, std::uint64_t seed,
                     unsigned threads) {
    if (samples < 2) throw ValidationError("Monte Carlo needs at least 2 samples");
    const std::size_t blocks = (samples + kBlockSize - 1) / kBlockSize;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> sums(blocks);

    auto observe = [&](const ForestNode& node) -> std::uint64_t {
        switch (stat) {
            case SampledStatistic::Pdm: return static_cast<std::uint64_t>(node.hp().degree());
            case SampledStatistic::Pdg: return static_cast<std::uint64_t>(node.hp().parametrized_degree());
            case SampledStatistic::PdmIsZero: return node.hp().degree() == 0;
            case SampledStatistic::PdmAtMostOne: return node.hp().degree() <= 1;
            case SampledStatistic::UniqueBorel: return classify(node.hp(), node.codim()).unique_borel;
        }
        return 0;
    };
    auto run_block = [&](std::size_t b) {
        std::mt19937_64 rng(splitmix64(seed ^ splitmix64(b)));
        const std::size_t count = std::min(kBlockSize, samples - b * kBlockSize);
        std::uint64_t s1 = 0, s2 = 0;
        for (std::size_t i = 0; i < count; ++i) {
            const std::uint64_t x = observe(sample_node(fm, rng));
            s1 += x;
            s2 += x * x;
        }
        sums[b] = {s1, s2};
    };
    tbb::task_arena arena(std::min(static_cast<int>(resolve_thread_count(threads)), tbb::info::default_concurrency()));
    arena.execute([&] { tbb::parallel_for(std::size_t{0}, blocks, run_block); });

    mpz_class s1 = 0, s2 = 0;
    for (const auto& [a, b] : sums) {
        s1 += mpz_class(std::to_string(a));
        s2 += mpz_class(std::to_string(b));
    }
    const mpz_class n(std::to_string(samples));
    Estimate e;
    e.method = Estimate::Method::MonteCarlo;
    e.samples = samples;
    e.value = mpq_class(s1, n);
    e.value.canonicalize();
    const mpq_class var = (mpq_class(s2) - mpq_class(s1 * s1, n)) / mpq_class(n - 1);
    e.std_error = std::sqrt(std::max(0.0, var.get_d()) / static_cast<double>(samples));
    const mpq_class spread(3 * e.std_error);
    e.lower = e.value - spread;
    e.upper = e.value + spread;
    return e;
}

}  // namespace hilbforest
