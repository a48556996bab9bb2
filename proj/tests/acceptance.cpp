// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include "hilbforest/classifier.hpp"
#include "hilbforest/cli.hpp"
#include "hilbforest/enumerator.hpp"
#include "hilbforest/forest.hpp"
#include "hilbforest/io.hpp"
#include "hilbforest/probability.hpp"
#include "hilbforest/series.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace hilbforest;

namespace {

struct Check {
    bool ok = true;
    std::vector<std::string> failures;
    std::ostringstream notes;

    void require(bool condition, const std::string& what) {
        if (!condition) {
            ok = false;
            if (failures.size() < 5) failures.push_back(what);
        }
    }
};

struct Criterion {
    int id;
    const char* title;
    double limit_seconds;
    std::function<void(Check&)> body;
};

double dbl(const mpq_class& x) { return x.get_d(); }

// Every ideal enumerated for the vertices of height <= 5 in trees c = 1, 2, 3.
const std::vector<std::pair<ForestNode, std::vector<MonomialIdeal>>>& sweep() {
    static const auto all = [] {
        std::vector<std::pair<ForestNode, std::vector<MonomialIdeal>>> out;
        for (int c = 1; c <= 3; ++c)
            for (int k = 0; k <= 5; ++k)
                for (const ForestNode node : vertices_at_height(c, k))
                    out.emplace_back(node, enumerate_saturated_borel(node.hp(), node.ambient()).ideals);
        return out;
    }();
    return all;
}

void twisted_cubic(Check& c) {
    const AdmissiblePolynomial hp = parse_polynomial("3t+1");
    c.require(format_macaulay(hp.macaulay()) == "e=[4,3]", "Macaulay partition (4,3)");
    c.require(format_gotzmann(hp.gotzmann()) == "b=[1,1,1,0]", "Gotzmann partition (1,1,1,0)");
    const MonomialIdeal L = lex_ideal(hp, 3);
    c.require(L.to_string() == "<x0, x1^4, x1^3*x2> in P^3", "lex ideal, got " + L.to_string());
    const SeriesProfile p = series_profile(L);
    c.require(p.kpoly.to_string() == "1 - T - 2T^4 + 3T^5 - T^6", "K-polynomial, got " + p.kpoly.to_string());
    c.require(p.deg_hs == 2, "deg hs = 2");
    const std::vector<long> expected{1, 3, 6, 10, 13, 16};
    for (long i = 0; i < 6; ++i)
        c.require(hilbert_function(p, i) == expected[static_cast<std::size_t>(i)], "hf(" + std::to_string(i) + ")");
    c.notes << L.to_string() << ", " << p.kpoly.to_string();
}

void enumeration(Check& c) {
    const auto ideals = enumerate_saturated_borel(parse_polynomial("3t+1"), 3).ideals;
    const std::vector<MonomialIdeal> expected{parse_ideal("<x0^2, x0*x1, x1^2> in P^3"),
                                              parse_ideal("<x0^2, x0*x1, x0*x2, x1^3> in P^3"),
                                              parse_ideal("<x0, x1^4, x1^3*x2> in P^3")};
    c.require(ideals.size() == 3, "three ideals for 3t+1");
    for (const auto& I : expected)
        c.require(std::find(ideals.begin(), ideals.end(), I) != ideals.end(), "missing " + I.to_string());
    for (int codim = 1; codim <= 5; ++codim) {
        const auto root = enumerate_saturated_borel(AdmissiblePolynomial::constant(1), codim).ideals;
        c.require(root.size() == 1 && root.front() == MonomialIdeal::linear(codim, codim),
                  "root of codimension " + std::to_string(codim));
    }
    c.notes << "3t+1 in P^3: " << ideals.size() << " ideals; root: 1 ideal for c = 1..5";
}

void operator_identities(Check& c) {
    const RationalPolynomial t = RationalPolynomial::monomial(1, 1);
    std::size_t vertices = 0;
    for (int codim = 1; codim <= 3; ++codim)
        for (int k = 0; k <= 8; ++k)
            for (const ForestNode node : vertices_at_height(codim, k)) {
                ++vertices;
                const AdmissiblePolynomial& hp = node.hp();
                const GotzmannPartition& b = hp.gotzmann();
                const int r = b.length();
                const std::string at = " at " + hp.to_string();
                c.require(*nabla(lift(hp)) == hp, "nabla lift" + at);
                int last_nonzero = 0;
                for (int j = 0; j < r; ++j)
                    if (b.parts()[static_cast<std::size_t>(j)] != 0) last_nonzero = j + 1;
                const auto down = nabla(hp);
                const RationalPolynomial lifted = down ? lift(*down).dense() : RationalPolynomial();
                c.require(hp.dense() - lifted == RationalPolynomial::constant(r - last_nonzero), "hp - lift nabla" + at);
                c.require(lift(plus(hp)).dense() - plus(lift(hp)).dense() == t - RationalPolynomial::constant(r),
                          "lift plus - plus lift" + at);
                c.require(hp.height() == r + b.degree() - 1 && node.height() == k, "height" + at);
                c.require(recover(hp.dense()) == hp, "recover" + at);
            }
    c.require(vertices == 3 * 511, "vertex count");
    c.notes << vertices << " vertices";
}

void series_oracle(Check& c) {
    std::size_t ideals = 0, values = 0;
    for (const auto& [node, list] : sweep())
        for (const auto& I : list) {
            ++ideals;
            const SeriesProfile p = series_profile(I);
            const AdmissiblePolynomial hp = hilbert_polynomial(I);
            c.require(hp == node.hp(), "Hilbert polynomial of " + I.to_string());
            for (long i = 0; i <= p.deg_hs + 5; ++i, ++values)
                c.require(hilbert_function(p, i) == count_standard_monomials(I, i),
                          "hf(" + std::to_string(i) + ") of " + I.to_string());
            for (long i = p.deg_hs + 1; i <= p.deg_hs + 5; ++i)
                c.require(hilbert_function(p, i) == hp.evaluate(i), "hf = hp above deg hs for " + I.to_string());
            if (p.deg_hs >= 0)
                c.require(hilbert_function(p, p.deg_hs) != hp.evaluate(p.deg_hs), "hf != hp at deg hs for " + I.to_string());
        }
    c.notes << ideals << " ideals, " << values << " Hilbert function values";
}

void degree_gap(Check& c) {
    std::size_t compared = 0, violations = 0;
    for (const auto& [node, list] : sweep()) {
        const MonomialIdeal L = lex_ideal(node.hp(), node.ambient());
        const long lex_degree = k_polynomial(L).degree();
        for (const auto& I : list) {
            if (I == L) continue;
            ++compared;
            if (k_polynomial(I).degree() >= lex_degree) {
                ++violations;
                c.require(false, "degree gap at " + I.to_string());
            }
        }
    }
    c.notes << compared << " non-lexicographic ideals, " << violations << " violations";
}

void classifier_cross_check(Check& c) {
    std::map<std::string, std::size_t> fired;
    std::size_t mismatches = 0;
    for (const auto& [node, list] : sweep()) {
        const Verdict v = classify(node.hp(), node.codim());
        ++fired[rule_tag(v.rule)];
        if (v.unique_borel != (list.size() == 1)) {
            ++mismatches;
            c.require(false, "mismatch at " + node.hp().to_string() + " c=" + std::to_string(node.codim()));
        }
    }
    c.require(fired["c=1,b1=b_r"] > 0 && fired["c=1,r-s<=2"] > 0, "c = 1 special cases exercised");
    c.notes << sweep().size() << " vertices, " << mismatches << " mismatches; rules:";
    for (const auto& [tag, n] : fired) c.notes << ' ' << tag << '=' << n;
}

void probability_closed_forms(Check& c) {
    std::vector<HeightMass> masses{HeightMass::geometric(mpq_class(1, 2)), HeightMass::geometric(mpq_class(3, 4)),
                                   HeightMass::poisson(mpq_class(1, 2)), HeightMass::poisson(mpq_class(1)),
                                   HeightMass::poisson(mpq_class(2))};
    double worst = 0;
    for (const auto& m : masses) {
        const MomentEstimates closed = expectation_pdm_closed(m);
        const MomentEstimates sum = expectation_pdm_truncated(m, 60);
        const double mean_gap = std::abs(dbl(sum.mean.value - closed.mean.value));
        const double var_gap = std::abs(dbl(sum.variance.value - closed.variance.value));
        worst = std::max({worst, mean_gap, var_gap});
        c.require(mean_gap < 1e-12 && var_gap < 1e-12, "K = 60 sum vs closed form for " + m.to_string());
    }
    for (const auto& p : {mpq_class(1, 2), mpq_class(3, 4)}) {
        const MomentEstimates closed = expectation_pdm_closed(HeightMass::geometric(p));
        c.require(closed.mean.value == (1 - p) / (2 * p), "geometric mean formula");
        c.require(closed.variance.value == (1 - p * p) / (4 * p * p), "geometric variance formula");
    }
    for (const auto& l : {mpq_class(1, 2), mpq_class(1), mpq_class(2)}) {
        const MomentEstimates closed = expectation_pdm_closed(HeightMass::poisson(l));
        c.require(closed.mean.value == l / 2 && closed.variance.value == l / 2, "Poisson moment formulas");
    }

    // p = 1/4: the mass above height 60 is (3/4)^61, so the bare K = 60 sum
    // cannot be within 1e-12; its enclosure must still contain the closed
    // form and a longer sum must converge.
    const HeightMass quarter = HeightMass::geometric(mpq_class(1, 4));
    const MomentEstimates q_closed = expectation_pdm_closed(quarter);
    const MomentEstimates q60 = expectation_pdm_truncated(quarter, 60);
    const MomentEstimates q130 = expectation_pdm_truncated(quarter, 130);
    c.require(q60.mean.lower <= q_closed.mean.value && q_closed.mean.value <= q60.mean.upper,
              "p = 1/4 enclosure at K = 60");
    c.require(std::abs(dbl(q130.mean.value - q_closed.mean.value)) < 1e-12 &&
                  std::abs(dbl(q130.variance.value - q_closed.variance.value)) < 1e-12,
              "p = 1/4 sum at K = 130");

    const RadiusBounds rad = radius_bounds(HeightMass::geometric(mpq_class(1, 2)));
    c.require(rad.rad_le_1.value == mpq_class(2, 3) && rad.rad_le_2.value == mpq_class(8, 9), "radius bounds 2/3, 8/9");

    const double root12 = std::sqrt(12.0);
    const Estimate pdg = expectation_pdg(HeightMass::geometric(mpq_class(1, 2)), 64);
    c.require(dbl(pdg.upper) <= root12, "E[pdg] truncated sum <= sqrt 12");
    const Estimate mc = monte_carlo(ForestMass{}, SampledStatistic::Pdg, 100000, 20240601, 1);
    c.require(mc.to_double() <= root12 + 3 * mc.std_error, "E[pdg] Monte Carlo <= sqrt 12 + 3 sigma");
    c.require(std::abs(mc.to_double() - dbl(pdg.value)) <= 3 * mc.std_error, "Monte Carlo within 3 sigma of the sum");

    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "max gap %.2e at K = 60; p = 1/4 gap %.2e at K = 60, %.2e at K = 130; E[pdg] = %.6f (sum), %.4f +- %.4f (MC)",
                  worst, std::abs(dbl(q60.mean.value - q_closed.mean.value)),
                  std::abs(dbl(q130.mean.value - q_closed.mean.value)), dbl(pdg.value), mc.to_double(), mc.std_error);
    c.notes << buf;
}

void irreducibility(Check& c) {
    std::vector<std::pair<std::string, HeightMass>> masses{
        {"geometric:1/4", HeightMass::geometric(mpq_class(1, 4))}, {"geometric:1/2", HeightMass::geometric(mpq_class(1, 2))},
        {"geometric:3/4", HeightMass::geometric(mpq_class(3, 4))}, {"poisson:1/2", HeightMass::poisson(mpq_class(1, 2))},
        {"poisson:1", HeightMass::poisson(mpq_class(1))},          {"poisson:2", HeightMass::poisson(mpq_class(2))}};
    for (const auto& [name, m] : masses) {
        ForestMass fm;
        fm.height = m;
        const IrrBounds b = irr_lower_bound(fm);
        c.require(b.analytic.lower > mpq_class(1, 2) && b.analytic_exceeds_half, "analytic bound for " + name);
        c.require(b.counting.lower > mpq_class(1, 2) && b.counting_exceeds_half, "counting bound for " + name);
        char buf[128];
        std::snprintf(buf, sizeof buf, "%s%s: %.6f / %.6f", c.notes.tellp() > 0 ? "; " : "", name.c_str(),
                      dbl(b.analytic.lower), dbl(b.counting.lower));
        c.notes << buf;
    }
    ForestMass single;
    single.codim = CodimMass::single(1);
    c.require(irr_lower_bound(single).analytic.value == mpq_class(3, 4), "single tree, p = 1/2: analytic bound 3/4");
    single.codim = CodimMass::single(3);
    c.require(irr_lower_bound(single).analytic.value == mpq_class(3, 4), "single tree c = 3: analytic bound 3/4");
}

void determinism(Check& c) {
    const std::vector<std::vector<std::string>> commands{
        {"poly", "info", "--hp", "(3/2)t^2+(5/2)t+1", "--format", "json"},
        {"poly", "path", "--hp", "3t+1"},
        {"lex", "--hp", "3t+1", "--n", "3"},
        {"borel", "--ideal", "<x0^2,x0*x1,x0*x2,x1^3>", "--n", "3", "--op", "expandable"},
        {"--threads", "2", "enumerate", "--hp", "6t+4", "--n", "3", "--format", "json"},
        {"kpoly", "--ideal", "<x0,x1^4,x1^3*x2>", "--n", "3"},
        {"--threads", "2", "classify", "--hp", "3t+1", "--c", "2", "--witnesses"},
        {"tree", "--c", "2", "--height", "4", "--format", "dot"},
        {"prob", "--stat", "irr", "--format", "json"},
        {"--threads", "2", "prob", "--stat", "pdg", "--mode", "mc", "--samples", "50000", "--seed", "7", "--format", "csv"},
        {"--threads", "2", "prob", "--stat", "pdm", "--mode", "mc", "--samples", "50000", "--seed", "7"}};
    for (const auto& args : commands) {
        const cli::Outcome a = cli::run(args);
        const cli::Outcome b = cli::run(args);
        std::string line;
        for (const auto& s : args) line += s + ' ';
        c.require(a.status == cli::kOk, "exit status of " + line);
        c.require(a.out == b.out && a.err == b.err && a.status == b.status, "output differs for " + line);
    }
    c.notes << commands.size() << " commands run twice";
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "twisted cubic pipeline", 1.0, twisted_cubic},
        {2, "enumeration examples", 1.0, enumeration},
        {3, "operator identities on 511 vertices per tree", 10.0, operator_identities},
        {4, "series vs monomial counting, coincidence boundary", 120.0, series_oracle},
        {5, "lexicographic K-polynomial degree gap", 120.0, degree_gap},
        {6, "classifier vs enumeration", 120.0, classifier_cross_check},
        {7, "probability closed forms", 120.0, probability_closed_forms},
        {8, "irreducibility lower bounds exceed 1/2", 120.0, irreducibility},
        {9, "deterministic command output", 120.0, determinism},
    };
    int failed = 0;
    for (const auto& criterion : criteria) {
        Check check;
        const auto start = std::chrono::steady_clock::now();
        try {
            criterion.body(check);
        } catch (const std::exception& e) {
            check.require(false, std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        check.require(seconds < criterion.limit_seconds, "runtime limit");
        if (!check.ok) ++failed;
        std::printf("criterion %d: %s  %s (%.3f s, limit %.0f s) | %s\n", criterion.id, check.ok ? "PASS" : "FAIL",
                    criterion.title, seconds, criterion.limit_seconds, check.notes.str().c_str());
        for (const auto& f : check.failures) std::printf("    failed: %s\n", f.c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
