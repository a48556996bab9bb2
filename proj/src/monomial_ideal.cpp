#include "hilbforest/monomial_ideal.hpp"

#include "hilbforest/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hilbforest {

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
    if (exps_.empty()) throw ValidationError("monomial needs at least one variable");
    for (int e : exps_)
        if (e < 0) throw ValidationError("negative exponent in monomial");
}

Monomial Monomial::one(int n) {
    if (n < 0) throw DimensionError("ambient dimension must be nonnegative");
    return Monomial(std::vector<int>(static_cast<std::size_t>(n) + 1, 0));
}

Monomial Monomial::variable(int n, int i) {
    if (i < 0 || i > n) throw DimensionError("variable x" + std::to_string(i) + " not in P^" + std::to_string(n));
    Monomial m = one(n);
    m.exps_[static_cast<std::size_t>(i)] = 1;
    return m;
}

int Monomial::degree() const noexcept { return std::accumulate(exps_.begin(), exps_.end(), 0); }

std::optional<int> Monomial::max_index() const noexcept {
    for (std::size_t i = exps_.size(); i-- > 0;)
        if (exps_[i] > 0) return static_cast<int>(i);
    return std::nullopt;
}

std::optional<int> Monomial::min_index() const noexcept {
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > 0) return static_cast<int>(i);
    return std::nullopt;
}

bool Monomial::divides(const Monomial& m) const noexcept {
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > m.exps_[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& m) const {
    std::vector<int> out = exps_;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += m.exps_[i];
    return Monomial(std::move(out));
}

Monomial Monomial::quotient_of(const Monomial& m) const {
    std::vector<int> out = m.exps_;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= exps_[i];
    return Monomial(std::move(out));
}

Monomial Monomial::times_variable(int i) const {
    Monomial out = *this;
    ++out.exps_.at(static_cast<std::size_t>(i));
    return out;
}

Monomial Monomial::swap_variable(int from, int to) const {
    Monomial out = *this;
    --out.exps_.at(static_cast<std::size_t>(from));
    ++out.exps_.at(static_cast<std::size_t>(to));
    return out;
}

Monomial Monomial::extended() const {
    std::vector<int> out = exps_;
    out.push_back(0);
    return Monomial(std::move(out));
}

std::string Monomial::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] == 0) continue;
        if (!first) os << '*';
        first = false;
        os << 'x' << i;
        if (exps_[i] > 1) os << '^' << exps_[i];
    }
    return first ? "1" : os.str();
}

MonomialIdeal::MonomialIdeal(int n, std::vector<Monomial> generators) : n_(n) {
    if (n < 0) throw DimensionError("ambient dimension must be nonnegative");
    for (const auto& g : generators) {
        if (g.ambient() != n)
            throw DimensionError("generator " + g.to_string() + " does not live in P^" + std::to_string(n));
        if (g.degree() > kMaxGeneratorDegree)
            throw ResourceError("generator degree " + std::to_string(g.degree()) + " exceeds guard");
    }
    std::sort(generators.begin(), generators.end(),
              [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
    for (auto& g : generators) {
        const bool redundant =
            std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& h) { return h.divides(g); });
        if (!redundant) gens_.push_back(std::move(g));
    }
    std::sort(gens_.begin(), gens_.end(), std::greater<>());
}

MonomialIdeal MonomialIdeal::linear(int n, int k) {
    if (k < 0 || k > n + 1) throw DimensionError("linear ideal needs 0 <= k <= n+1");
    std::vector<Monomial> gens;
    for (int i = 0; i < k; ++i) gens.push_back(Monomial::variable(n, i));
    return MonomialIdeal(n, std::move(gens));
}

int MonomialIdeal::max_generator_degree() const noexcept {
    int out = 0;
    for (const auto& g : gens_) out = std::max(out, g.degree());
    return out;
}

bool MonomialIdeal::contains(const Monomial& m) const noexcept {
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::is_minimal_generator(const Monomial& m) const noexcept {
    return std::binary_search(gens_.begin(), gens_.end(), m, std::greater<>());
}

std::string MonomialIdeal::to_string() const {
    std::ostringstream os;
    os << '<';
    for (std::size_t i = 0; i < gens_.size(); ++i) os << (i ? ", " : "") << gens_[i].to_string();
    os << "> in P^" << n_;
    return os.str();
}

std::size_t MonomialIdealHash::operator()(const MonomialIdeal& ideal) const noexcept {
    std::size_t h = std::hash<int>{}(ideal.ambient());
    for (const auto& g : ideal.generators())
        for (int e : g.exponents()) h = h * 1000003u ^ static_cast<std::size_t>(e);
    return h;
}

void check_degree_guard(const MonomialIdeal& ideal, int limit) {
    if (ideal.max_generator_degree() > limit)
        throw ResourceError("generator degree " + std::to_string(ideal.max_generator_degree()) +
                            " exceeds guard " + std::to_string(limit));
}

bool is_borel(const MonomialIdeal& ideal) {
    for (const auto& g : ideal.generators())
        for (int j = 1; j <= ideal.ambient(); ++j) {
            if (g[static_cast<std::size_t>(j)] == 0) continue;
            for (int i = 0; i < j; ++i)
                if (!ideal.contains(g.swap_variable(j, i))) return false;
        }
    return true;
}

bool is_saturated_borel(const MonomialIdeal& ideal) {
    if (!is_borel(ideal)) throw ContractViolation(ideal.to_string() + " is not Borel");
    const auto last = static_cast<std::size_t>(ideal.ambient());
    return std::none_of(ideal.generators().begin(), ideal.generators().end(),
                        [&](const Monomial& g) { return g[last] > 0; });
}

LexSpec lex_spec(const AdmissiblePolynomial& hp, int n) {
    if (n <= hp.degree())
        throw DimensionError("lex ideal of a degree " + std::to_string(hp.degree()) + " polynomial needs n > " +
                             std::to_string(hp.degree()) + ", got " + std::to_string(n));
    const MacaulayPartition e = hp.macaulay();
    LexSpec spec;
    for (int j = 0; j < n; ++j) spec.a.push_back(e[static_cast<std::size_t>(j)] - e[static_cast<std::size_t>(j) + 1]);
    return spec;
}

MonomialIdeal lex_ideal(const LexSpec& spec) {
    const int n = spec.ambient();
    for (int a : spec.a)
        if (a < 0) throw ValidationError("lex spec entries must be nonnegative");
    // x_0^{a_{n-1}} ... x_{k-1}^{a_{n-k}} x_k^{a_{n-1-k}+1} for k < n-1, then
    // x_0^{a_{n-1}} ... x_{n-1}^{a_0}.
    std::vector<Monomial> gens;
    std::vector<int> prefix(static_cast<std::size_t>(n) + 1, 0);
    for (int k = 0; k + 1 < n; ++k) {
        std::vector<int> g = prefix;
        g[static_cast<std::size_t>(k)] = spec.a[static_cast<std::size_t>(n - 1 - k)] + 1;
        gens.emplace_back(std::move(g));
        prefix[static_cast<std::size_t>(k)] = spec.a[static_cast<std::size_t>(n - 1 - k)];
    }
    if (n >= 1) prefix[static_cast<std::size_t>(n - 1)] = spec.a[0];
    gens.emplace_back(std::move(prefix));
    return MonomialIdeal(n, std::move(gens));
}

MonomialIdeal lex_ideal(const AdmissiblePolynomial& hp, int n) { return lex_ideal(lex_spec(hp, n)); }

LexSpec lex_expand(const LexSpec& spec) {
    if (spec.a.empty()) throw DimensionError("lex expansion needs n >= 1");
    LexSpec out = spec;
    ++out.a[0];
    return out;
}

LexSpec lex_extend(const LexSpec& spec) {
    LexSpec out;
    out.a.push_back(0);
    out.a.insert(out.a.end(), spec.a.begin(), spec.a.end());
    return out;
}

std::vector<Monomial> expandable_generators(const MonomialIdeal& ideal) {
    if (!is_saturated_borel(ideal))
        throw ContractViolation(ideal.to_string() + " is not saturated; expansions are undefined");
    const int n = ideal.ambient();
    std::vector<Monomial> out;
    for (const auto& g : ideal.generators()) {
        bool expandable = true;
        for (int i = 0; i + 1 < n && expandable; ++i)
            if (g[static_cast<std::size_t>(i)] > 0 && ideal.is_minimal_generator(g.swap_variable(i, i + 1)))
                expandable = false;
        if (expandable) out.push_back(g);
    }
    return out;
}

MonomialIdeal expand(const MonomialIdeal& ideal, const Monomial& g) {
    const auto candidates = expandable_generators(ideal);
    if (std::find(candidates.begin(), candidates.end(), g) == candidates.end())
        throw ExpansionError(g.to_string() + " is not an expandable generator of " + ideal.to_string());
    const int n = ideal.ambient();
    std::vector<Monomial> gens;
    for (const auto& h : ideal.generators())
        if (h != g) gens.push_back(h);
    for (int j = g.max_index().value_or(0); j <= n - 1; ++j) gens.push_back(g.times_variable(j));
    return MonomialIdeal(n, std::move(gens));
}

MonomialIdeal extend(const MonomialIdeal& ideal) {
    std::vector<Monomial> gens;
    gens.reserve(ideal.generators().size());
    for (const auto& g : ideal.generators()) gens.push_back(g.extended());
    return MonomialIdeal(ideal.ambient() + 1, std::move(gens));
}

MonomialIdeal nabla_ideal(const MonomialIdeal& ideal) {
    const int n = ideal.ambient();
    if (n == 0) throw DimensionError("nabla of an ideal needs n >= 1");
    if (!is_saturated_borel(ideal)) throw ContractViolation(ideal.to_string() + " is not saturated");
    std::vector<Monomial> gens;
    for (const auto& g : ideal.generators()) {
        std::vector<int> e(g.exponents().begin(), g.exponents().end() - 1);
        e.back() = 0;
        gens.emplace_back(std::move(e));
    }
    return MonomialIdeal(n - 1, std::move(gens));
}

}  // namespace hilbforest
