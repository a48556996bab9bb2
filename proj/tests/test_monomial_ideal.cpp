#include "hilbforest/enumerator.hpp"
#include "hilbforest/errors.hpp"
#include "hilbforest/io.hpp"
#include "hilbforest/monomial_ideal.hpp"
#include "hilbforest/series.hpp"

#include <doctest.h>

#include <functional>
#include <random>

using namespace hilbforest;

namespace {

MonomialIdeal ideal(const std::string& text) { return parse_ideal(text); }
Monomial mono(const std::string& text, int n) { return parse_monomial(text, n); }
AdmissiblePolynomial hp_of(const std::string& text) { return parse_polynomial(text); }

// Every monomial of k[x_0..x_n] with degree <= max_degree.
std::vector<Monomial> monomials_up_to(int n, int max_degree) {
    std::vector<Monomial> out;
    std::vector<int> e(static_cast<std::size_t>(n) + 1, 0);
    std::function<void(int, int)> fill = [&](int var, int left) {
        if (var == n) {
            for (int x = 0; x <= left; ++x) {
                e[static_cast<std::size_t>(var)] = x;
                out.emplace_back(e);
            }
            e[static_cast<std::size_t>(var)] = 0;
            return;
        }
        for (int x = 0; x <= left; ++x) {
            e[static_cast<std::size_t>(var)] = x;
            fill(var + 1, left - x);
        }
        e[static_cast<std::size_t>(var)] = 0;
    };
    fill(0, max_degree);
    return out;
}

// Borel: every swap x_i m / x_j (i < j) of every member stays inside, up to a degree.
bool borel_by_brute_force(const MonomialIdeal& I, int max_degree) {
    for (const auto& m : monomials_up_to(I.ambient(), max_degree)) {
        if (!I.contains(m)) continue;
        for (int j = 1; j <= I.ambient(); ++j)
            for (int i = 0; i < j; ++i)
                if (m[static_cast<std::size_t>(j)] > 0 && !I.contains(m.swap_variable(j, i))) return false;
    }
    return true;
}

// (I : <x_0..x_n>) == I, checked on monomials up to a degree.
bool saturated_by_brute_force(const MonomialIdeal& I, int max_degree) {
    for (const auto& m : monomials_up_to(I.ambient(), max_degree)) {
        if (I.contains(m)) continue;
        bool all = true;
        for (int i = 0; i <= I.ambient() && all; ++i) all = I.contains(m.times_variable(i));
        if (all) return false;
    }
    return true;
}

// Intersect with k[x_0..x_{n-1}] (drop x_n), then saturate by x_{n-1}.
bool nabla_member_by_saturation(const MonomialIdeal& I, const Monomial& m, int max_power) {
    std::vector<int> e = m.exponents();
    e.push_back(0);
    for (int p = 0; p <= max_power; ++p) {
        if (I.contains(Monomial(e))) return true;
        ++e[e.size() - 2];
    }
    return false;
}

std::vector<MonomialIdeal> sample_ideals() {
    std::vector<MonomialIdeal> out;
    for (const char* hp : {"3t+1", "2t+2", "4", "t^2+3t", "3t", "5t-4", "(3/2)t^2+(5/2)t+1"}) {
        const AdmissiblePolynomial h = hp_of(hp);
        for (int c = 1; c <= 2; ++c)
            for (const auto& I : enumerate_saturated_borel(h, c + h.degree()).ideals) out.push_back(I);
    }
    return out;
}

bool is_minimal(const MonomialIdeal& I) {
    const auto& g = I.generators();
    for (std::size_t a = 0; a < g.size(); ++a)
        for (std::size_t b = 0; b < g.size(); ++b)
            if (a != b && g[a].divides(g[b])) return false;
    return true;
}

}  // namespace

TEST_CASE("monomials") {
    const Monomial m = mono("x0^2*x2", 3);
    CHECK(m.degree() == 3);
    CHECK(m.max_index() == 2);
    CHECK(m.min_index() == 0);
    CHECK(m.to_string() == "x0^2*x2");
    CHECK(Monomial::one(2).to_string() == "1");
    CHECK_FALSE(Monomial::one(2).max_index().has_value());
    CHECK(mono("x1", 2) < mono("x0", 2));
    CHECK(mono("x0*x1", 2).divides(mono("x0^2*x1*x2", 2)));
    CHECK_THROWS_AS(mono("x3", 2), DimensionError);
}

TEST_CASE("ideals are stored minimal and canonically sorted") {
    const MonomialIdeal I = ideal("<x1^2, x0*x1, x0^2, x0^2*x1, x0*x1> in P^2");
    CHECK(I.to_string() == "<x0^2, x0*x1, x1^2> in P^2");
    CHECK(I == ideal("<x0^2, x1^2, x0*x1> in P^2"));
    CHECK(I.contains(mono("x0*x1*x2", 2)));
    CHECK_FALSE(I.contains(mono("x0*x2^5", 2)));
    CHECK(ideal("<1, x0> in P^1").is_unit());
    CHECK(MonomialIdeal::linear(3, 2).to_string() == "<x0, x1> in P^3");
}

TEST_CASE("is_borel") {
    CHECK(is_borel(ideal("<x0^2, x0*x1, x1^2> in P^2")));
    CHECK_FALSE(is_borel(ideal("<x1> in P^1")));
    CHECK(is_borel(ideal("<x0, x1^4, x1^3*x2> in P^3")));
    CHECK_FALSE(is_borel(ideal("<x0^2, x1^2> in P^2")));
    for (const auto& text : {"<x0^2, x0*x1, x1^2> in P^2", "<x1> in P^1", "<x0, x1^4, x1^3*x2> in P^3",
                             "<x0^2, x1^2> in P^2", "<x0*x1, x0^2, x1^3, x1^2*x2> in P^2", "<x0^3, x0*x2> in P^2"}) {
        const MonomialIdeal I = ideal(text);
        CHECK_MESSAGE(is_borel(I) == borel_by_brute_force(I, I.max_generator_degree() + 1), text);
    }
}

TEST_CASE("is_saturated_borel") {
    CHECK(is_saturated_borel(ideal("<x0, x1^3> in P^2")));
    CHECK_FALSE(is_saturated_borel(ideal("<x0^2, x0*x1, x0*x2, x1^3> in P^2")));
    CHECK(is_saturated_borel(MonomialIdeal::unit(2)));
    CHECK_THROWS_AS(is_saturated_borel(ideal("<x1> in P^1")), ContractViolation);
    for (const auto& text : {"<x0, x1^3> in P^2", "<x0^2, x0*x1, x0*x2, x1^3> in P^2", "<x0^2, x0*x1, x1^2> in P^2",
                             "<x0, x1^4, x1^3*x2> in P^3", "<x0, x1> in P^1", "<x0^2, x0*x1, x0*x2, x1^3> in P^3"}) {
        const MonomialIdeal I = ideal(text);
        CHECK_MESSAGE(is_saturated_borel(I) == saturated_by_brute_force(I, I.max_generator_degree() + 1), text);
    }
}

TEST_CASE("lex ideals") {
    CHECK(lex_spec(hp_of("3t+1"), 3).a == std::vector<int>{1, 3, 0});
    CHECK(lex_ideal(hp_of("3t+1"), 3).to_string() == "<x0, x1^4, x1^3*x2> in P^3");
    CHECK(lex_spec(hp_of("3t"), 3).a == std::vector<int>{0, 3, 0});
    CHECK(lex_ideal(hp_of("3t"), 3).to_string() == "<x0, x1^3> in P^3");
    for (int c = 1; c <= 5; ++c) CHECK(lex_ideal(AdmissiblePolynomial::constant(1), c) == MonomialIdeal::linear(c, c));
    CHECK_THROWS_AS(lex_ideal(hp_of("3t+1"), 1), DimensionError);
    for (const auto& text : {"3t+1", "3t", "t^2+3t", "4", "2t+2", "(3/2)t^2+(5/2)t+1"}) {
        const AdmissiblePolynomial h = hp_of(text);
        for (int n = h.degree() + 1; n <= h.degree() + 3; ++n) {
            const MonomialIdeal L = lex_ideal(h, n);
            CHECK(is_saturated_borel(L));
            CHECK(hilbert_polynomial(L) == h);
            CHECK(extend(L) == lex_ideal(lift(h), n + 1));
            CHECK(lex_ideal(lex_expand(lex_spec(h, n))) == lex_ideal(plus(h), n));
        }
    }
}

TEST_CASE("lex expansion") {
    CHECK(lex_expand(LexSpec{{0, 3, 0}}).a == std::vector<int>{1, 3, 0});
    CHECK(lex_extend(LexSpec{{1, 3, 0}}).a == std::vector<int>{0, 1, 3, 0});
    CHECK(lex_ideal(LexSpec{{0, 0, 0}}).is_unit());
    CHECK(hilbert_polynomial(lex_ideal(lex_expand(LexSpec{{0, 0, 0}}))) == AdmissiblePolynomial::constant(1));
    CHECK(hilbert_polynomial(lex_ideal(lex_expand(LexSpec{{1, 0, 0}}))) == AdmissiblePolynomial::constant(2));

    std::mt19937_64 rng(17);
    int checked = 0;
    while (checked < 20) {
        const int n = 1 + static_cast<int>(rng() % 4);
        LexSpec s;
        for (int i = 0; i < n; ++i) s.a.push_back(static_cast<int>(rng() % 4));
        const MonomialIdeal L = lex_ideal(s);
        if (L.is_unit()) continue;
        CHECK(hilbert_polynomial(lex_ideal(lex_expand(s))) == plus(hilbert_polynomial(L)));
        CHECK(lex_ideal(lex_extend(s)) == extend(L));
        ++checked;
    }
}

TEST_CASE("expandable generators and expansion") {
    const MonomialIdeal I = ideal("<x0^2, x0*x1, x1^2> in P^2");
    CHECK(expandable_generators(I) == std::vector<Monomial>{mono("x1^2", 2)});
    CHECK(expandable_generators(ideal("<x0, x1> in P^2")) == std::vector<Monomial>{mono("x1", 2)});
    CHECK(expandable_generators(ideal("<x0^2, x0*x1, x0*x2, x1^3> in P^3")) ==
          std::vector<Monomial>{mono("x0*x2", 3), mono("x1^3", 3)});
    CHECK(expandable_generators(MonomialIdeal::unit(2)) == std::vector<Monomial>{Monomial::one(2)});
    CHECK_THROWS_AS(expandable_generators(ideal("<x0^2, x0*x1, x0*x2, x1^3> in P^2")), ContractViolation);

    CHECK(expand(I, mono("x1^2", 2)).to_string() == "<x0^2, x0*x1, x1^3> in P^2");
    CHECK(expand(ideal("<x0, x1^3> in P^3"), mono("x0", 3)).to_string() == "<x0^2, x0*x1, x0*x2, x1^3> in P^3");
    CHECK(expand(MonomialIdeal::unit(1), Monomial::one(1)).to_string() == "<x0> in P^1");
    CHECK_THROWS_AS(expand(I, mono("x0^2", 2)), ExpansionError);
    CHECK_THROWS_AS(expand(I, mono("x2", 2)), ExpansionError);

    // Lex ideals: expandable generators are the smallest minimal generator of each degree.
    for (const auto& text : {"3t+1", "t^2+3t", "(3/2)t^2+(5/2)t+1", "5t-4"}) {
        const MonomialIdeal L = lex_ideal(hp_of(text), hp_of(text).degree() + 2);
        std::map<int, Monomial> smallest;
        for (const auto& g : L.generators()) {
            auto it = smallest.find(g.degree());
            if (it == smallest.end() || g < it->second) smallest.insert_or_assign(g.degree(), g);
        }
        std::vector<Monomial> expected;
        for (const auto& [d, g] : smallest) expected.push_back(g);
        std::sort(expected.begin(), expected.end(), std::greater<>());
        CHECK(expandable_generators(L) == expected);
    }
}

TEST_CASE("extension and nabla") {
    const MonomialIdeal L = lex_ideal(hp_of("3t+1"), 3);
    CHECK(extend(L).to_string() == "<x0, x1^4, x1^3*x2> in P^4");
    CHECK(hilbert_polynomial(extend(L)).to_string() == "(3/2)t^2+(5/2)t-1");
    CHECK(hilbert_polynomial(extend(ideal("<x0^2, x0*x1, x1^2> in P^2"))).to_string() == "3t+1");
    CHECK(hilbert_polynomial(extend(ideal("<x0^2, x0*x1, x0*x2, x1^3> in P^3"))).to_string() == "(3/2)t^2+(5/2)t+1");
    CHECK(nabla_ideal(ideal("<x0^2, x0*x1, x0*x2, x1^3> in P^3")).to_string() == "<x0, x1^3> in P^2");
    CHECK(nabla_ideal(ideal("<x0> in P^1")).is_unit());
    CHECK_THROWS_AS(nabla_ideal(MonomialIdeal::unit(0)), DimensionError);
}

TEST_CASE("properties over enumerated saturated Borel ideals") {
    const auto samples = sample_ideals();
    REQUIRE(samples.size() >= 20);
    int factor_checks = 0;
    for (const auto& I : samples) {
        CAPTURE(I.to_string());
        CHECK(is_minimal(I));
        const AdmissiblePolynomial h = hilbert_polynomial(I);

        // Extension then nabla is the identity.
        CHECK(nabla_ideal(extend(I)) == I);
        CHECK(is_saturated_borel(extend(I)));

        // nabla by substitution agrees with intersect-then-saturate.
        const MonomialIdeal N = nabla_ideal(I);
        const int D = I.max_generator_degree() + 1;
        for (const auto& m : monomials_up_to(N.ambient(), D)) CHECK(N.contains(m) == nabla_member_by_saturation(I, m, D));
        if (h.degree() > 0) CHECK(hilbert_polynomial(N) == *nabla(h));

        for (const auto& g : expandable_generators(I)) {
            const MonomialIdeal E = expand(I, g);
            CHECK(is_minimal(E));
            CHECK(is_saturated_borel(E));
            CHECK(hilbert_polynomial(E) == plus(h));
        }

        // Every member of degree <= 6 is g m' with g minimal and max g <= min m', uniquely.
        if (factor_checks < 10 && I.ambient() <= 3) {
            ++factor_checks;
            for (const auto& m : monomials_up_to(I.ambient(), 6)) {
                if (!I.contains(m)) continue;
                int ways = 0;
                for (const auto& g : I.generators()) {
                    if (!g.divides(m)) continue;
                    const Monomial rest = g.quotient_of(m);
                    if (rest.is_one() || g.max_index().value_or(0) <= *rest.min_index()) ++ways;
                }
                CHECK(ways == 1);
            }
        }
    }
    CHECK(factor_checks == 10);
}
