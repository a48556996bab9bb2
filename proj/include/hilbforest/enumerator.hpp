#pragma once

#include "hilbforest/forest.hpp"
#include "hilbforest/monomial_ideal.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace hilbforest {

struct EnumerationOptions {
    /// Largest number of ideals held at one remaining-budget level.
    std::size_t max_frontier = 1'000'000;
    int max_generator_degree = 64;
    /// 0: HILBFOREST_THREADS if set, else the hardware concurrency.
    unsigned threads = 0;
    /// When set, expandable generators are visited in a seeded random order.
    /// The output must not depend on it.
    std::optional<std::uint64_t> shuffle_seed;
};

/// Worker count from HILBFOREST_THREADS (when set and positive) capped by
/// `requested` when that is nonzero.
unsigned resolve_thread_count(unsigned requested);

struct StageStats {
    int stage = 0;
    /// n - d + stage: the ring is k[x_0 .. x_ambient].
    int ambient = 0;
    std::size_t input_ideals = 0;
    /// Inputs whose Hilbert polynomial already exceeds the stage target.
    std::size_t rejected_inputs = 0;
    std::size_t expansions = 0;
    std::size_t output_ideals = 0;
};

struct EnumerationResult {
    AdmissiblePolynomial hp;
    int ambient;
    /// Distinct saturated Borel ideals, in canonical order.
    std::vector<MonomialIdeal> ideals;
    std::vector<StageStats> stats;
};

/// All saturated Borel ideals of k[x_0..x_n] with Hilbert polynomial hp:
/// starting from <1> in k[x_0..x_{n-d}], each stage extends by one variable
/// and closes under q_j - hp_J expansions, where q_j = nabla^{d-j}(hp).
/// Throws DimensionError unless n > deg hp, ResourceError past the guards.
EnumerationResult enumerate_saturated_borel(const AdmissiblePolynomial& hp, int n,
                                            const EnumerationOptions& options = {});

struct UniquenessMismatch {
    ForestNode node;
    std::size_t enumerated = 0;
    bool predicted_unique = false;
};

struct UniquenessReport {
    int codim = 0;
    int max_height = 0;
    std::size_t nodes_checked = 0;
    std::size_t unique_nodes = 0;
    std::vector<UniquenessMismatch> mismatches;
};

/// For every vertex of height <= max_height in the codimension-c tree,
/// compares "exactly one saturated Borel ideal" against the classifier.
UniquenessReport count_unique_vs_theorem(int codim, int max_height, const EnumerationOptions& options = {});

}  // namespace hilbforest
