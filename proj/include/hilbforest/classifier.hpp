#pragma once

#include "hilbforest/enumerator.hpp"
#include "hilbforest/forest.hpp"
#include "hilbforest/monomial_ideal.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

namespace hilbforest {

/// Which condition decided uniqueness of the saturated Borel point.
enum class UniquenessRule {
    PositiveLastPart,    // b_r > 0
    ShortPartition,      // c >= 2 and r <= 2
    ConstantPartition,   // c = 1 and b_1 = b_r
    ShortTail,           // c = 1 and r - s <= 2
    Negative,
};

/// "b_r>0", "c>=2,r<=2", "c=1,b1=b_r", "c=1,r-s<=2", "negative-case".
const char* rule_tag(UniquenessRule rule) noexcept;

enum class Smoothness { IrreducibleNonsingular, Unknown };

const char* to_string(Smoothness s) noexcept;

struct Verdict {
    bool unique_borel = false;
    UniquenessRule rule = UniquenessRule::Negative;
    /// IrreducibleNonsingular when unique_borel; Unknown otherwise.
    Smoothness smooth_irreducible = Smoothness::Unknown;
    /// Only filled by classify_with_witnesses on negative verdicts.
    std::optional<std::vector<MonomialIdeal>> witnesses;
};

/// Throws ValidationError for c < 1.
Verdict classify(const AdmissiblePolynomial& hp, int codim);
/// classify plus up to two distinct saturated Borel ideals on negative verdicts.
Verdict classify_with_witnesses(const AdmissiblePolynomial& hp, int codim, const EnumerationOptions& options = {});

/// Whether some child of the node is irreducible and nonsingular; checked
/// through the lift-child.
bool children_smooth_guarantee(const ForestNode& node);

/// Number of vertices at height k in the codimension-c tree with a unique
/// saturated Borel ideal, from the shape of the classifier conditions.
mpz_class count_unique_at_height(int codim, int height);
/// The same count by running classify on every vertex.
std::uint64_t count_unique_at_height_by_sweep(int codim, int height);

}  // namespace hilbforest
