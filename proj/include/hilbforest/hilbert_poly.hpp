#pragma once

#include "hilbforest/rational_poly.hpp"

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hilbforest {

/// Ferrers transpose of a weakly decreasing list of nonnegative integers.
/// The result has `length` entries (default: the largest part); entry i
/// counts the parts that are >= i + 1. Throws ValidationError on
/// non-monotone input or when `length` is shorter than the largest part.
std::vector<int> conjugate(std::span<const int> parts, std::optional<int> length = std::nullopt);

/// (b_1 >= ... >= b_r >= 0), r >= 1. The canonical form of an admissible
/// Hilbert polynomial: hp(t) = sum_j binom(t + b_j - (j - 1), b_j).
class GotzmannPartition {
public:
    explicit GotzmannPartition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    /// Gotzmann number r.
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    int degree() const noexcept { return parts_.front(); }
    int last() const noexcept { return parts_.back(); }
    /// Number of parts equal to the largest one (b_1 = ... = b_s > b_{s+1}).
    int leading_run() const noexcept;

    friend auto operator<=>(const GotzmannPartition&, const GotzmannPartition&) = default;

private:
    std::vector<int> parts_;
};

/// (e_0 >= ... >= e_d > 0): hp(t) = sum_i binom(t+i, i+1) - binom(t+i-e_i, i+1).
class MacaulayPartition {
public:
    explicit MacaulayPartition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int degree() const noexcept { return static_cast<int>(parts_.size()) - 1; }
    /// e_i, with e_i = 0 past the end.
    int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    friend auto operator<=>(const MacaulayPartition&, const MacaulayPartition&) = default;

private:
    std::vector<int> parts_;
};

MacaulayPartition to_macaulay(const GotzmannPartition& b);
GotzmannPartition to_gotzmann(const MacaulayPartition& e);

/// An admissible Hilbert polynomial, stored as its Gotzmann partition.
/// Values are immutable; every operation returns a new value.
class AdmissiblePolynomial {
public:
    explicit AdmissiblePolynomial(GotzmannPartition b) : b_(std::move(b)) {}
    static AdmissiblePolynomial from_gotzmann(std::vector<int> parts);
    static AdmissiblePolynomial from_macaulay(std::vector<int> parts);
    /// The constant polynomial m >= 1.
    static AdmissiblePolynomial constant(int m);

    const GotzmannPartition& gotzmann() const noexcept { return b_; }
    MacaulayPartition macaulay() const { return to_macaulay(b_); }

    int degree() const noexcept { return b_.degree(); }
    int gotzmann_number() const noexcept { return b_.length(); }
    /// Height in the Macaulay tree: r + b_1 - 1.
    int height() const noexcept { return b_.length() + b_.degree() - 1; }
    /// d! times the leading coefficient; equals e_d.
    int parametrized_degree() const noexcept { return b_.leading_run(); }

    mpz_class evaluate(const mpz_class& i) const;
    RationalPolynomial dense() const;
    mpq_class leading_coefficient() const;

    /// Linear ASCII dense form, e.g. "3t+1".
    std::string to_string() const { return dense().to_string(); }
    /// Binomial-sum display, e.g. "C(t+1,1)+C(t,1)+C(t-1,1)+C(t-3,0)".
    std::string binomial_form() const;

    friend auto operator<=>(const AdmissiblePolynomial&, const AdmissiblePolynomial&) = default;

private:
    GotzmannPartition b_;
};

/// Every Gotzmann part incremented.
AdmissiblePolynomial lift(const AdmissiblePolynomial& hp);
/// 1 + hp: a trailing zero part.
AdmissiblePolynomial plus(const AdmissiblePolynomial& hp);
/// Backwards difference hp(t) - hp(t-1). std::nullopt stands for the zero
/// polynomial, which is what constants map to.
std::optional<AdmissiblePolynomial> nabla(const AdmissiblePolynomial& hp);

/// Recovers the Gotzmann partition of an admissible polynomial given in
/// dense form. Throws NotAdmissible naming the failing stage.
AdmissiblePolynomial recover(const RationalPolynomial& q);

enum class Step : char { Plus = 'P', Lift = 'L' };

/// Root-to-node word in the Macaulay tree. Steps are stored in application
/// order: steps()[0] is applied to the root 1 first.
class PathWord {
public:
    PathWord() = default;
    explicit PathWord(std::vector<Step> steps) : steps_(std::move(steps)) {}

    const std::vector<Step>& steps() const noexcept { return steps_; }
    std::size_t size() const noexcept { return steps_.size(); }
    bool empty() const noexcept { return steps_.empty(); }

    /// Composition order (root-side operator last, as in "P L P P" for 3t+1)
    /// unless `application_order`. With `compact`, runs collapse to "P^2".
    std::string to_string(bool application_order = false, bool compact = false) const;

    /// Accepts "PLPP", "P L P P", "P^1 L P^2", "P^2ΛPΛP^2" in composition order
    /// (or application order when `application_order`). "1" or "" is the root.
    static PathWord parse(const std::string& text, bool application_order = false);

    friend bool operator==(const PathWord&, const PathWord&) = default;

private:
    std::vector<Step> steps_;
};

PathWord path_from_root(const AdmissiblePolynomial& hp);
AdmissiblePolynomial node_at(const PathWord& word);

}  // namespace hilbforest
