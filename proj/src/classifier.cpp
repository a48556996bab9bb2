#include "hilbforest/classifier.hpp"

#include "hilbforest/errors.hpp"

#include <string>

namespace hilbforest {

const char* rule_tag(UniquenessRule rule) noexcept {
    switch (rule) {
        case UniquenessRule::PositiveLastPart: return "b_r>0";
        case UniquenessRule::ShortPartition: return "c>=2,r<=2";
        case UniquenessRule::ConstantPartition: return "c=1,b1=b_r";
        case UniquenessRule::ShortTail: return "c=1,r-s<=2";
        case UniquenessRule::Negative: return "negative-case";
    }
    return "negative-case";
}

const char* to_string(Smoothness s) noexcept {
    return s == Smoothness::IrreducibleNonsingular ? "irreducible-nonsingular" : "unknown";
}

Verdict classify(const AdmissiblePolynomial& hp, int codim) {
    if (codim < 1) throw ValidationError("codimension must be positive, got " + std::to_string(codim));
    const GotzmannPartition& b = hp.gotzmann();
    const int r = b.length();
    UniquenessRule rule = UniquenessRule::Negative;
    if (b.last() > 0)
        rule = UniquenessRule::PositiveLastPart;
    else if (codim >= 2 && r <= 2)
        rule = UniquenessRule::ShortPartition;
    else if (codim == 1 && b.degree() == b.last())
        rule = UniquenessRule::ConstantPartition;
    else if (codim == 1 && r - b.leading_run() <= 2)
        rule = UniquenessRule::ShortTail;

    Verdict v;
    v.rule = rule;
    v.unique_borel = rule != UniquenessRule::Negative;
    v.smooth_irreducible = v.unique_borel ? Smoothness::IrreducibleNonsingular : Smoothness::Unknown;
    return v;
}

Verdict classify_with_witnesses(const AdmissiblePolynomial& hp, int codim, const EnumerationOptions& options) {
    Verdict v = classify(hp, codim);
    if (!v.unique_borel) {
        auto ideals = enumerate_saturated_borel(hp, codim + hp.degree(), options).ideals;
        if (ideals.size() > 2) ideals.erase(ideals.begin() + 2, ideals.end());
        v.witnesses = std::move(ideals);
    }
    return v;
}

bool children_smooth_guarantee(const ForestNode& node) {
    return classify(lift(node.hp()), node.codim()).unique_borel;
}

// Height-k vertices with b_r = 0 come from plus-steps last; among those the
// survivors are r <= 2 (c >= 2) or, for c = 1, constants and short tails.
mpz_class count_unique_at_height(int codim, int height) {
    if (codim < 1) throw ValidationError("codimension must be positive, got " + std::to_string(codim));
    if (height < 0) throw ValidationError("height must be nonnegative");
    if (height == 0) return 1;
    const long k = height;
    const mpz_class base = (mpz_class(1) << static_cast<unsigned long>(k - 1)) + 1;
    if (codim >= 2) return base;
    return base + (k - 1) + (k - 1) * (k - 2) / 2;
}

std::uint64_t count_unique_at_height_by_sweep(int codim, int height) {
    std::uint64_t count = 0;
    for (const ForestNode node : vertices_at_height(codim, height))
        if (classify(node.hp(), codim).unique_borel) ++count;
    return count;
}

}  // namespace hilbforest
