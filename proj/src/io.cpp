#include "hilbforest/io.hpp"

#include "hilbforest/errors.hpp"

#include <cctype>
#include <sstream>

namespace hilbforest {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<int> int_list(const Json& j, const std::string& what) {
    if (!j.is_array()) throw ValidationError(what + " must be an array of integers");
    std::vector<int> out;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw ValidationError(what + " must contain integers only");
        out.push_back(x.get<int>());
    }
    return out;
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("malformed JSON", e.byte > 0 ? e.byte - 1 : 0);
    }
}

template <class Parts>
std::string bracketed(char tag, const Parts& parts) {
    std::string s = std::string(1, tag) + "=[";
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
    return s + "]";
}

// Cursor over the monomial/ideal grammar.
class IdealLexer {
public:
    explicit IdealLexer(const std::string& text) : text_(text) {}

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip_space();
        return pos_ >= text_.size();
    }
    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    bool accept_word(const std::string& w) {
        skip_space();
        if (text_.compare(pos_, w.size(), w) == 0) {
            pos_ += w.size();
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    long number() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a number");
        const std::string digits = text_.substr(start, pos_ - start);
        if (digits.size() > 9) throw ParseError("number too large", start, digits);
        return std::stol(digits);
    }
    [[noreturn]] void fail(const std::string& what) const {
        const std::string token = pos_ < text_.size() ? text_.substr(pos_, 1) : std::string();
        throw ParseError(what + (token.empty() ? " but found end of input" : " but found '" + token + "'"), pos_, token);
    }
    std::size_t position() const { return pos_; }

    // Exponent vector of a product of powers of x_i; indices are checked by the caller.
    std::vector<std::pair<long, long>> monomial() {
        std::vector<std::pair<long, long>> factors;
        skip_space();
        if (accept('1')) return factors;
        do {
            if (!accept('x')) fail("expected a variable x<i>");
            const long index = number();
            long exponent = 1;
            if (accept('^')) exponent = number();
            factors.emplace_back(index, exponent);
        } while (accept('*'));
        return factors;
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
};

Monomial build_monomial(const std::vector<std::pair<long, long>>& factors, int n) {
    std::vector<int> exps(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& [index, exponent] : factors) {
        if (index > n)
            throw DimensionError("variable x" + std::to_string(index) + " is outside k[x0..x" + std::to_string(n) + "]");
        exps[static_cast<std::size_t>(index)] += static_cast<int>(exponent);
        if (exps[static_cast<std::size_t>(index)] > kMaxGeneratorDegree)
            throw ValidationError("exponent too large in monomial");
    }
    return Monomial(std::move(exps));
}

}  // namespace

std::string format_gotzmann(const GotzmannPartition& b) { return bracketed('b', b.parts()); }
std::string format_macaulay(const MacaulayPartition& e) { return bracketed('e', e.parts()); }

AdmissiblePolynomial parse_polynomial(const std::string& raw) {
    const std::string text = trim(raw);
    if (text.empty()) throw ParseError("empty polynomial", 0);
    if (text.front() == '{') return polynomial_from_json(parse_json(text));
    if (text.size() >= 2 && (text[0] == 'b' || text[0] == 'e') && trim(text.substr(1)).front() == '=') {
        const std::string list = trim(text.substr(text.find('=') + 1));
        const std::vector<int> parts = int_list(parse_json(list), "partition literal");
        return text[0] == 'b' ? AdmissiblePolynomial::from_gotzmann(parts) : AdmissiblePolynomial::from_macaulay(parts);
    }
    return recover(RationalPolynomial::parse(text));
}

Json to_json(const AdmissiblePolynomial& hp) { return Json{{"gotzmann", hp.gotzmann().parts()}}; }

AdmissiblePolynomial polynomial_from_json(const Json& j) {
    if (!j.is_object()) throw ValidationError("polynomial JSON must be an object");
    if (j.contains("gotzmann")) return AdmissiblePolynomial::from_gotzmann(int_list(j.at("gotzmann"), "gotzmann"));
    if (j.contains("macaulay")) return AdmissiblePolynomial::from_macaulay(int_list(j.at("macaulay"), "macaulay"));
    throw ValidationError("polynomial JSON needs a \"gotzmann\" or \"macaulay\" field");
}

Monomial parse_monomial(const std::string& text, int n) {
    if (n < 0) throw DimensionError("ambient dimension must be nonnegative");
    IdealLexer lex(text);
    const auto factors = lex.monomial();
    if (!lex.at_end()) lex.fail("unexpected trailing input");
    return build_monomial(factors, n);
}

MonomialIdeal parse_ideal(const std::string& raw, std::optional<int> n) {
    const std::string text = trim(raw);
    if (!text.empty() && text.front() == '{') {
        MonomialIdeal ideal = ideal_from_json(parse_json(text));
        if (n && *n != ideal.ambient())
            throw DimensionError("ideal lives in P^" + std::to_string(ideal.ambient()) + ", expected P^" + std::to_string(*n));
        return ideal;
    }
    IdealLexer lex(text);
    lex.expect('<');
    std::vector<std::vector<std::pair<long, long>>> gens;
    if (!lex.accept('>')) {
        do gens.push_back(lex.monomial());
        while (lex.accept(','));
        lex.expect('>');
    }
    std::optional<int> declared;
    if (lex.accept_word("in")) {
        if (!lex.accept_word("P^")) lex.fail("expected 'P^'");
        declared = static_cast<int>(lex.number());
    }
    if (!lex.at_end()) lex.fail("unexpected trailing input");
    if (declared && n && *declared != *n)
        throw DimensionError("ideal is declared in P^" + std::to_string(*declared) + " but n = " + std::to_string(*n));
    const std::optional<int> ambient = declared ? declared : n;
    if (!ambient) throw ValidationError("ambient dimension missing: append 'in P^n' or pass n");
    std::vector<Monomial> monomials;
    for (const auto& g : gens) monomials.push_back(build_monomial(g, *ambient));
    return MonomialIdeal(*ambient, std::move(monomials));
}

Json to_json(const MonomialIdeal& ideal) {
    Json gens = Json::array();
    for (const auto& g : ideal.generators()) gens.push_back(g.exponents());
    return Json{{"n", ideal.ambient()}, {"gens", gens}};
}

MonomialIdeal ideal_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("gens"))
        throw ValidationError("ideal JSON needs \"n\" and \"gens\"");
    if (!j.at("n").is_number_integer()) throw ValidationError("\"n\" must be an integer");
    const int n = j.at("n").get<int>();
    if (n < 0) throw DimensionError("ambient dimension must be nonnegative");
    if (!j.at("gens").is_array()) throw ValidationError("\"gens\" must be an array");
    std::vector<Monomial> gens;
    for (const auto& g : j.at("gens")) {
        std::vector<int> exps = int_list(g, "generator");
        if (exps.size() != static_cast<std::size_t>(n) + 1)
            throw DimensionError("generator has " + std::to_string(exps.size()) + " exponents, expected " +
                                 std::to_string(n + 1));
        gens.emplace_back(std::move(exps));
    }
    return MonomialIdeal(n, std::move(gens));
}

Json to_json(const SeriesProfile& profile) {
    Json k = Json::array();
    for (const auto& c : profile.kpoly.coefficients()) {
        if (c.fits_slong_p())
            k.push_back(c.get_si());
        else
            k.push_back(c.get_str());
    }
    return Json{{"kpoly", k}, {"n", profile.ambient}, {"deg_hs", profile.deg_hs}};
}

SeriesProfile profile_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kpoly") || !j.contains("n"))
        throw ValidationError("profile JSON needs \"kpoly\" and \"n\"");
    std::vector<mpz_class> coeffs;
    for (const auto& c : j.at("kpoly")) {
        if (c.is_number_integer())
            coeffs.emplace_back(std::to_string(c.get<long>()));
        else if (c.is_string())
            coeffs.emplace_back(c.get<std::string>());
        else
            throw ValidationError("kpoly entries must be integers");
    }
    KPolynomial k(std::move(coeffs));
    const int n = j.at("n").get<int>();
    const long deg_hs = k.degree() - (n + 1);
    if (j.contains("deg_hs") && j.at("deg_hs").get<long>() != deg_hs)
        throw ValidationError("deg_hs disagrees with the K-polynomial");
    return SeriesProfile{std::move(k), n, deg_hs};
}

Json to_json(const ForestNode& node) {
    return Json{{"codim", node.codim()},
                {"hp", node.hp().to_string()},
                {"gotzmann", node.hp().gotzmann().parts()},
                {"n", node.ambient()},
                {"height", node.height()},
                {"path", node.path().to_string()}};
}

Json to_json(const Verdict& v) {
    Json j{{"unique_borel", v.unique_borel},
           {"rule", rule_tag(v.rule)},
           {"smooth_irreducible", to_string(v.smooth_irreducible)}};
    if (v.witnesses) {
        Json w = Json::array();
        for (const auto& ideal : *v.witnesses) w.push_back(ideal.to_string());
        j["witnesses"] = w;
    }
    return j;
}

Json to_json(const EnumerationResult& r) {
    Json ideals = Json::array();
    for (const auto& ideal : r.ideals) ideals.push_back(to_json(ideal));
    Json stats = Json::array();
    for (const auto& s : r.stats)
        stats.push_back(Json{{"stage", s.stage},
                             {"ambient", s.ambient},
                             {"input", s.input_ideals},
                             {"rejected", s.rejected_inputs},
                             {"expansions", s.expansions},
                             {"output", s.output_ideals}});
    return Json{{"hp", r.hp.to_string()},
                {"gotzmann", r.hp.gotzmann().parts()},
                {"n", r.ambient},
                {"count", r.ideals.size()},
                {"ideals", ideals},
                {"stats", stats}};
}

Json to_json(const Estimate& e) {
    Json j{{"method", to_string(e.method)},
           {"value", to_decimal(e.value, 15)},
           {"lower", to_decimal(e.lower, 15)},
           {"upper", to_decimal(e.upper, 15)}};
    if (e.is_exact()) j["exact"] = e.value.get_str();
    if (e.method == Estimate::Method::TruncatedSum) j["truncation"] = e.truncation;
    if (e.method == Estimate::Method::MonteCarlo) {
        j["samples"] = e.samples;
        std::ostringstream se;
        se.precision(6);
        se << std::scientific << e.std_error;
        j["std_error"] = se.str();
    }
    return j;
}

}  // namespace hilbforest
