#include "hilbforest/enumerator.hpp"

#include "hilbforest/classifier.hpp"
#include "hilbforest/errors.hpp"
#include "hilbforest/series.hpp"

#include <tbb/concurrent_unordered_set.h>
#include <tbb/info.h>
#include <tbb/parallel_for.h>
#include <tbb/task_arena.h>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <random>
#include <string>
#include <thread>

namespace hilbforest {

unsigned resolve_thread_count(unsigned requested) {
    unsigned count = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("HILBFOREST_THREADS")) {
        char* end = nullptr;
        const long cap = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && cap > 0) count = std::min<unsigned>(count, static_cast<unsigned>(cap));
    }
    return count;
}

namespace {

using IdealSet = tbb::concurrent_unordered_set<MonomialIdeal, MonomialIdealHash>;

// Frontiers below this size are expanded on the calling thread.
constexpr std::size_t kParallelThreshold = 64;

// target - hp_J, which must be a constant for the ideals reached at a stage.
long constant_gap(const AdmissiblePolynomial& target, const MonomialIdeal& ideal) {
    if (ideal.is_unit()) {
        if (target.degree() != 0)
            throw Error(ErrorKind::Internal, "internal", "stage target of <1> is not constant");
        return target.gotzmann_number();
    }
    const SeriesProfile profile = series_profile(ideal);
    const long i0 = std::max(0L, profile.deg_hs + 1);
    const mpz_class gap = target.evaluate(i0) - hilbert_function(profile, i0);
    if (gap != target.evaluate(i0 + 1) - hilbert_function(profile, i0 + 1))
        throw Error(ErrorKind::Internal, "internal",
                    "stage target minus hp of " + ideal.to_string() + " is not constant");
    if (!gap.fits_slong_p()) throw ResourceError("expansion budget does not fit in a machine integer");
    return gap.get_si();
}

class StageRunner {
public:
    StageRunner(const EnumerationOptions& options, unsigned threads, StageStats& stats)
        : options_(options), arena_(std::min(static_cast<int>(threads), tbb::info::default_concurrency())), stats_(stats) {}

    // Closes `starts` (each with its own budget) under expansions; the ideals
    // whose budget reaches 0 are the stage output.
    std::vector<MonomialIdeal> run(std::vector<std::pair<MonomialIdeal, long>> starts) {
        long top = 0;
        for (const auto& [ideal, budget] : starts) top = std::max(top, budget);
        // levels[b]: ideals with b expansions left. An ideal fixes its own
        // Hilbert polynomial, so it can only ever appear at one level.
        std::vector<IdealSet> levels(static_cast<std::size_t>(top) + 1);
        for (auto& [ideal, budget] : starts) levels[static_cast<std::size_t>(budget)].insert(std::move(ideal));

        for (long b = top; b > 0; --b) {
            std::vector<MonomialIdeal> frontier(levels[static_cast<std::size_t>(b)].begin(),
                                                levels[static_cast<std::size_t>(b)].end());
            levels[static_cast<std::size_t>(b)].clear();
            std::sort(frontier.begin(), frontier.end());
            expand_level(frontier, levels[static_cast<std::size_t>(b - 1)]);
            guard_frontier(levels[static_cast<std::size_t>(b - 1)].size());
        }
        std::vector<MonomialIdeal> out(levels[0].begin(), levels[0].end());
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    void expand_level(const std::vector<MonomialIdeal>& frontier, IdealSet& next) {
        auto work = [&](std::size_t i) {
            std::vector<Monomial> gens = expandable_generators(frontier[i]);
            if (options_.shuffle_seed) {
                std::mt19937_64 rng(*options_.shuffle_seed ^ (0x9e3779b97f4a7c15ULL * (i + 1)));
                std::shuffle(gens.begin(), gens.end(), rng);
            }
            for (const auto& g : gens) {
                MonomialIdeal expanded = expand(frontier[i], g);
                check_degree_guard(expanded, options_.max_generator_degree);
                expansions_.fetch_add(1, std::memory_order_relaxed);
                next.insert(std::move(expanded));
            }
        };
        if (frontier.size() < kParallelThreshold || arena_.max_concurrency() == 1) {
            for (std::size_t i = 0; i < frontier.size(); ++i) work(i);
        } else {
            arena_.execute([&] { tbb::parallel_for(std::size_t{0}, frontier.size(), work); });
        }
        stats_.expansions = expansions_.load();
    }

    void guard_frontier(std::size_t size) const {
        if (size > options_.max_frontier)
            throw ResourceError("enumeration frontier of " + std::to_string(size) + " ideals exceeds guard " +
                                std::to_string(options_.max_frontier));
    }

    const EnumerationOptions& options_;
    tbb::task_arena arena_;
    StageStats& stats_;
    std::atomic<std::size_t> expansions_{0};
};

}  // namespace

EnumerationResult enumerate_saturated_borel(const AdmissiblePolynomial& hp, int n, const EnumerationOptions& options) {
    const int d = hp.degree();
    if (n <= d)
        throw DimensionError("ambient dimension " + std::to_string(n) + " must exceed deg hp = " + std::to_string(d));

    // targets[j] = nabla^{d-j}(hp)
    std::vector<AdmissiblePolynomial> targets{hp};
    for (int j = d; j > 0; --j) targets.push_back(*nabla(targets.back()));
    std::reverse(targets.begin(), targets.end());

    const unsigned threads = resolve_thread_count(options.threads);
    EnumerationResult result{hp, n, {}, {}};
    std::vector<MonomialIdeal> current{MonomialIdeal::unit(n - d)};

    for (int j = 0; j <= d; ++j) {
        StageStats stats;
        stats.stage = j;
        stats.ambient = n - d + j;
        stats.input_ideals = current.size();

        std::vector<std::pair<MonomialIdeal, long>> starts;
        for (auto& ideal : current) {
            MonomialIdeal start = j > 0 ? extend(ideal) : std::move(ideal);
            const long budget = constant_gap(targets[static_cast<std::size_t>(j)], start);
            if (budget < 0) {
                ++stats.rejected_inputs;
                continue;
            }
            starts.emplace_back(std::move(start), budget);
        }
        current = StageRunner(options, threads, stats).run(std::move(starts));
        stats.output_ideals = current.size();
        result.stats.push_back(stats);
    }
    result.ideals = std::move(current);
    return result;
}

UniquenessReport count_unique_vs_theorem(int codim, int max_height, const EnumerationOptions& options) {
    UniquenessReport report;
    report.codim = codim;
    report.max_height = max_height;
    for (int k = 0; k <= max_height; ++k) {
        for (const ForestNode node : vertices_at_height(codim, k)) {
            const std::size_t count = enumerate_saturated_borel(node.hp(), node.ambient(), options).ideals.size();
            const bool predicted = classify(node.hp(), codim).unique_borel;
            ++report.nodes_checked;
            if (count == 1) ++report.unique_nodes;
            if ((count == 1) != predicted) report.mismatches.push_back({node, count, predicted});
        }
    }
    return report;
}

}  // namespace hilbforest
