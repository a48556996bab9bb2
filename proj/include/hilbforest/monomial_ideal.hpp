#pragma once

#include "hilbforest/hilbert_poly.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace hilbforest {

/// Generator degrees above this are rejected when ideals are built.
inline constexpr int kMaxGeneratorDegree = 1 << 16;

/// x_0^{u_0} ... x_n^{u_n} in k[x_0, ..., x_n]. x_0 is the largest variable.
class Monomial {
public:
    explicit Monomial(std::vector<int> exponents);
    static Monomial one(int n);
    static Monomial variable(int n, int i);

    /// n, the index of the last variable.
    int ambient() const noexcept { return static_cast<int>(exps_.size()) - 1; }
    const std::vector<int>& exponents() const noexcept { return exps_; }
    int operator[](std::size_t i) const noexcept { return exps_[i]; }
    int degree() const noexcept;
    bool is_one() const noexcept { return degree() == 0; }

    /// Largest / smallest index of a variable dividing the monomial;
    /// std::nullopt for the monomial 1.
    std::optional<int> max_index() const noexcept;
    std::optional<int> min_index() const noexcept;

    bool divides(const Monomial& m) const noexcept;
    Monomial operator*(const Monomial& m) const;
    /// m / this; requires divides(m).
    Monomial quotient_of(const Monomial& m) const;
    Monomial times_variable(int i) const;
    /// this * x_to / x_from; requires x_from to divide this.
    Monomial swap_variable(int from, int to) const;
    /// Same exponents in k[x_0, ..., x_{n+1}].
    Monomial extended() const;

    /// "x0^2*x1", or "1".
    std::string to_string() const;

    /// Lexicographic order: compares exponent vectors left to right, so
    /// x_0 > x_1 > ... > x_n.
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
    std::vector<int> exps_;
};

/// A monomial ideal of k[x_0, ..., x_n], held by its minimal generators in
/// lex-descending order so equal ideals compare and print identically. No
/// generators means the zero ideal; the single generator 1 is <1>.
class MonomialIdeal {
public:
    /// Minimalizes and sorts. Every generator must live in k[x_0..x_n].
    MonomialIdeal(int n, std::vector<Monomial> generators);

    static MonomialIdeal unit(int n) { return MonomialIdeal(n, {Monomial::one(n)}); }
    static MonomialIdeal zero(int n) { return MonomialIdeal(n, {}); }
    /// <x_0, ..., x_{k-1}> in k[x_0..x_n].
    static MonomialIdeal linear(int n, int k);

    int ambient() const noexcept { return n_; }
    const std::vector<Monomial>& generators() const noexcept { return gens_; }
    bool is_unit() const noexcept { return gens_.size() == 1 && gens_.front().is_one(); }
    bool is_zero() const noexcept { return gens_.empty(); }
    int max_generator_degree() const noexcept;

    bool contains(const Monomial& m) const noexcept;
    bool is_minimal_generator(const Monomial& m) const noexcept;

    /// "<x0^2, x0*x1, x1^2> in P^2"
    std::string to_string() const;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;
    /// Canonical order: ambient first, then generator lists lexicographically.
    friend auto operator<=>(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    int n_;
    std::vector<Monomial> gens_;
};

struct MonomialIdealHash {
    std::size_t operator()(const MonomialIdeal& ideal) const noexcept;
};

/// Rejects ideals with a generator of degree above `limit`.
void check_degree_guard(const MonomialIdeal& ideal, int limit);

/// Closed under m -> m x_i / x_j for i < j; checked on generators only.
bool is_borel(const MonomialIdeal& ideal);
/// Borel and no minimal generator divisible by x_n. Throws
/// ContractViolation on non-Borel input.
bool is_saturated_borel(const MonomialIdeal& ideal);

/// (a_0, ..., a_{n-1}): the lex ideal L(a_0, ..., a_{n-1}) in k[x_0..x_n].
struct LexSpec {
    std::vector<int> a;

    int ambient() const noexcept { return static_cast<int>(a.size()); }
    friend bool operator==(const LexSpec&, const LexSpec&) = default;
};

/// a_j = e_j - e_{j+1} with e_i = 0 past the Macaulay partition. Throws
/// DimensionError unless n > deg hp.
LexSpec lex_spec(const AdmissiblePolynomial& hp, int n);
MonomialIdeal lex_ideal(const LexSpec& spec);
MonomialIdeal lex_ideal(const AdmissiblePolynomial& hp, int n);
/// a_0 -> a_0 + 1; realizes plus on Hilbert polynomials.
LexSpec lex_expand(const LexSpec& spec);
/// (0, a_0, ..., a_{n-1}); the spec of the extended ideal.
LexSpec lex_extend(const LexSpec& spec);

/// Generators g with no g x_{i+1} / x_i (x_i | g, 0 <= i < n-1) among the
/// minimal generators. For <1> this is [1]. Requires a saturated Borel ideal.
std::vector<Monomial> expandable_generators(const MonomialIdeal& ideal);
/// Replaces g by g x_j for max g <= j <= n-1. Throws ExpansionError when g is
/// not expandable.
MonomialIdeal expand(const MonomialIdeal& ideal, const Monomial& g);
/// The same generators in k[x_0..x_{n+1}].
MonomialIdeal extend(const MonomialIdeal& ideal);
/// Image under x_{n-1}, x_n -> 1, in k[x_0..x_{n-1}]. Requires a saturated
/// Borel ideal and n >= 1.
MonomialIdeal nabla_ideal(const MonomialIdeal& ideal);

}  // namespace hilbforest
