#include "hilbforest/cli.hpp"

#include "hilbforest/classifier.hpp"
#include "hilbforest/enumerator.hpp"
#include "hilbforest/errors.hpp"
#include "hilbforest/io.hpp"
#include "hilbforest/probability.hpp"
#include "hilbforest/series.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <sstream>

namespace hilbforest::cli {

namespace {

struct Globals {
    int guard_degree = 64;
    std::size_t guard_frontier = 1'000'000;
    unsigned threads = 0;
    int guard_partition = 64;
};

AdmissiblePolynomial parse_hp(const std::string& text, const Globals& g) {
    AdmissiblePolynomial hp = parse_polynomial(text);
    if (hp.gotzmann_number() + hp.degree() > g.guard_partition)
        throw ResourceError("r + b_1 = " + std::to_string(hp.gotzmann_number() + hp.degree()) + " exceeds guard " +
                            std::to_string(g.guard_partition));
    return hp;
}

EnumerationOptions enumeration_options(const Globals& g) {
    EnumerationOptions o;
    o.max_generator_degree = g.guard_degree;
    o.max_frontier = g.guard_frontier;
    o.threads = g.threads;
    return o;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string join_lines(const std::vector<std::string>& lines) {
    std::string s;
    for (const auto& l : lines) s += l + "\n";
    return s;
}

// ---------------------------------------------------------------------------

struct PolyArgs {
    std::string action;
    std::string hp;
    std::string path;
    bool reverse = false;
    bool compact = false;
    std::string format = "text";
};

std::string run_poly(const PolyArgs& a, const Globals& g) {
    if (a.hp.empty() == a.path.empty()) throw ValidationError("give exactly one of --hp and --path");
    const AdmissiblePolynomial hp = a.hp.empty() ? node_at(PathWord::parse(a.path)) : parse_hp(a.hp, g);
    const bool json = a.format == "json";

    if (a.action == "info") {
        const std::string path = path_from_root(hp).to_string(a.reverse, a.compact);
        if (json)
            return dump(Json{{"hp", hp.to_string()},
                             {"gotzmann", hp.gotzmann().parts()},
                             {"macaulay", hp.macaulay().parts()},
                             {"binomial", hp.binomial_form()},
                             {"degree", hp.degree()},
                             {"gotzmann_number", hp.gotzmann_number()},
                             {"height", hp.height()},
                             {"path", path}});
        return join_lines({"hp: " + hp.to_string(), "binomial: " + hp.binomial_form(),
                           "gotzmann: " + format_gotzmann(hp.gotzmann()), "macaulay: " + format_macaulay(hp.macaulay()),
                           "degree: " + std::to_string(hp.degree()),
                           "gotzmann_number: " + std::to_string(hp.gotzmann_number()),
                           "height: " + std::to_string(hp.height()), "path: " + path});
    }
    if (a.action == "path") {
        const std::string path = path_from_root(hp).to_string(a.reverse, a.compact);
        if (json) return dump(Json{{"hp", hp.to_string()}, {"path", path}, {"application_order", a.reverse}});
        return path + "\n";
    }
    std::optional<AdmissiblePolynomial> result;
    if (a.action == "lift")
        result = lift(hp);
    else if (a.action == "plus")
        result = plus(hp);
    else
        result = nabla(hp);
    if (json) return dump(result ? to_json(*result) : Json{{"gotzmann", nullptr}, {"zero", true}});
    return (result ? result->to_string() + "  " + format_gotzmann(result->gotzmann()) : std::string("0")) + "\n";
}

// ---------------------------------------------------------------------------

struct LexArgs {
    std::string hp;
    int n = -1;
    std::string spec;
    std::string format = "text";
};

std::string run_lex(const LexArgs& a, const Globals& g) {
    LexSpec spec;
    if (!a.spec.empty()) {
        if (!a.hp.empty()) throw ValidationError("give either --hp with --n, or --spec");
        std::stringstream in(a.spec);
        for (std::string item; std::getline(in, item, ',');) {
            try {
                std::size_t used = 0;
                const int v = std::stoi(item, &used);
                if (used != item.size() || v < 0) throw std::invalid_argument(item);
                spec.a.push_back(v);
            } catch (const std::logic_error&) {
                throw ParseError("bad entry '" + item + "' in --spec", 0, item);
            }
        }
        if (spec.a.empty()) throw ValidationError("--spec needs at least one entry");
    } else {
        if (a.hp.empty() || a.n < 0) throw ValidationError("lex needs --hp and --n (or --spec)");
        spec = lex_spec(parse_hp(a.hp, g), a.n);
    }
    const MonomialIdeal ideal = lex_ideal(spec);
    check_degree_guard(ideal, g.guard_degree);
    if (a.format == "json") {
        Json j = to_json(ideal);
        j["spec"] = spec.a;
        return dump(j);
    }
    return ideal.to_string() + "\n";
}

// ---------------------------------------------------------------------------

struct BorelArgs {
    std::string ideal;
    int n = -1;
    std::string op = "check";
    std::string gen;
    std::string format = "text";
};

std::string render_ideal(const MonomialIdeal& ideal, bool json) {
    return json ? dump(to_json(ideal)) : ideal.to_string() + "\n";
}

std::string run_borel(const BorelArgs& a, const Globals& g) {
    const MonomialIdeal ideal = parse_ideal(a.ideal, a.n >= 0 ? std::optional<int>(a.n) : std::nullopt);
    check_degree_guard(ideal, g.guard_degree);
    const bool json = a.format == "json";
    if (a.op == "check") {
        const bool borel = is_borel(ideal);
        const bool saturated = borel && is_saturated_borel(ideal);
        if (json) return dump(Json{{"ideal", ideal.to_string()}, {"borel", borel}, {"saturated", saturated}});
        return join_lines({std::string("borel: ") + (borel ? "yes" : "no"),
                           std::string("saturated: ") + (saturated ? "yes" : "no")});
    }
    if (!is_borel(ideal)) throw ContractViolation(ideal.to_string() + " is not Borel");
    if (a.op == "expandable") {
        std::vector<std::string> gens;
        for (const auto& m : expandable_generators(ideal)) gens.push_back(m.to_string());
        if (json) return dump(Json{{"ideal", ideal.to_string()}, {"expandable", gens}});
        return join_lines(gens);
    }
    MonomialIdeal result = ideal;
    if (a.op == "expand") {
        if (a.gen.empty()) throw ValidationError("--op expand needs --gen");
        result = expand(ideal, parse_monomial(a.gen, ideal.ambient()));
    } else if (a.op == "extend") {
        result = extend(ideal);
    } else {
        result = nabla_ideal(ideal);
    }
    check_degree_guard(result, g.guard_degree);
    return render_ideal(result, json);
}

// ---------------------------------------------------------------------------

struct EnumerateArgs {
    std::string hp;
    int n = -1;
    std::string format = "text";
};

std::string run_enumerate(const EnumerateArgs& a, const Globals& g) {
    const AdmissiblePolynomial hp = parse_hp(a.hp, g);
    const EnumerationResult r = enumerate_saturated_borel(hp, a.n, enumeration_options(g));
    if (a.format == "json") return dump(to_json(r));
    const MonomialIdeal lex = lex_ideal(hp, a.n);
    std::vector<std::string> lines{std::to_string(r.ideals.size()) + " saturated Borel ideal" +
                                   (r.ideals.size() == 1 ? "" : "s") + " with Hilbert polynomial " + hp.to_string() +
                                   " in P^" + std::to_string(a.n)};
    for (const auto& ideal : r.ideals) lines.push_back(ideal.to_string() + (ideal == lex ? "  (lex)" : ""));
    return join_lines(lines);
}

// ---------------------------------------------------------------------------

struct KpolyArgs {
    std::string ideal;
    int n = -1;
    std::string format = "text";
};

std::string run_kpoly(const KpolyArgs& a, const Globals& g) {
    const MonomialIdeal ideal = parse_ideal(a.ideal, a.n >= 0 ? std::optional<int>(a.n) : std::nullopt);
    check_degree_guard(ideal, g.guard_degree);
    if (a.format == "json") return dump(to_json(series_profile(ideal)));
    return k_polynomial(ideal).to_string() + "\n";
}

// ---------------------------------------------------------------------------

struct ClassifyArgs {
    std::string hp;
    int c = 0;
    bool witnesses = false;
    std::string format = "json";
};

std::string run_classify(const ClassifyArgs& a, const Globals& g) {
    const AdmissiblePolynomial hp = parse_hp(a.hp, g);
    const Verdict v = a.witnesses ? classify_with_witnesses(hp, a.c, enumeration_options(g)) : classify(hp, a.c);
    if (a.format == "json") {
        Json j{{"hp", hp.to_string()}, {"gotzmann", hp.gotzmann().parts()}, {"codim", a.c}};
        j.update(to_json(v));
        return dump(j);
    }
    std::vector<std::string> lines{std::string("unique_borel: ") + (v.unique_borel ? "true" : "false"),
                                   std::string("rule: ") + rule_tag(v.rule),
                                   std::string("smooth_irreducible: ") + to_string(v.smooth_irreducible)};
    if (v.witnesses)
        for (const auto& w : *v.witnesses) lines.push_back("witness: " + w.to_string());
    return join_lines(lines);
}

// ---------------------------------------------------------------------------

struct TreeArgs {
    int c = 1;
    int height = 3;
    std::string format = "dot";
};

std::string node_id(int k, std::uint64_t i) { return "v" + std::to_string(k) + "_" + std::to_string(i); }

std::string run_tree(const TreeArgs& a, const Globals& g) {
    if (a.height < 0) throw ValidationError("--height must be nonnegative");
    if (a.height > HeightRange::kMaxHeight ||
        (std::uint64_t{2} << a.height) - 1 > static_cast<std::uint64_t>(g.guard_frontier))
        throw ResourceError("a tree of height " + std::to_string(a.height) + " exceeds the frontier guard " +
                            std::to_string(g.guard_frontier));
    std::vector<std::vector<ForestNode>> levels;
    for (int k = 0; k <= a.height; ++k) {
        levels.emplace_back();
        for (const ForestNode node : vertices_at_height(a.c, k)) levels.back().push_back(node);
    }

    if (a.format == "dot") {
        std::ostringstream os;
        os << "digraph hilbert_tree_c" << a.c << " {\n";
        os << "  node [shape=box, fontname=\"Helvetica\"];\n";
        for (int k = 0; k <= a.height; ++k)
            for (std::uint64_t i = 0; i < levels[static_cast<std::size_t>(k)].size(); ++i) {
                const ForestNode& node = levels[static_cast<std::size_t>(k)][i];
                os << "  " << node_id(k, i) << " [label=\"" << node.hp().to_string() << "\\nP^" << node.ambient()
                   << "\"];\n";
            }
        for (int k = 0; k < a.height; ++k)
            for (std::uint64_t i = 0; i < levels[static_cast<std::size_t>(k)].size(); ++i) {
                os << "  " << node_id(k, i) << " -> " << node_id(k + 1, 2 * i) << " [label=\"P\"];\n";
                os << "  " << node_id(k, i) << " -> " << node_id(k + 1, 2 * i + 1) << " [label=\"L\"];\n";
            }
        os << "}\n";
        return os.str();
    }
    if (a.format == "json") {
        Json nodes = Json::array();
        for (int k = 0; k <= a.height; ++k)
            for (std::uint64_t i = 0; i < levels[static_cast<std::size_t>(k)].size(); ++i) {
                Json j = to_json(levels[static_cast<std::size_t>(k)][i]);
                j["id"] = node_id(k, i);
                if (k > 0) {
                    j["parent"] = node_id(k - 1, i / 2);
                    j["edge"] = i % 2 ? "L" : "P";
                }
                nodes.push_back(j);
            }
        return dump(Json{{"codim", a.c}, {"height", a.height}, {"nodes", nodes}});
    }
    // Depth-first outline, plus-child first.
    std::vector<std::string> lines;
    std::function<void(int, std::uint64_t, const std::string&)> visit = [&](int k, std::uint64_t i,
                                                                            const std::string& edge) {
        const ForestNode& node = levels[static_cast<std::size_t>(k)][i];
        lines.push_back(std::string(static_cast<std::size_t>(2 * k), ' ') + edge + node.hp().to_string() + "  (P^" +
                        std::to_string(node.ambient()) + ")");
        if (k == a.height) return;
        visit(k + 1, 2 * i, "P: ");
        visit(k + 1, 2 * i + 1, "L: ");
    };
    visit(0, 0, "");
    return join_lines(lines);
}

// ---------------------------------------------------------------------------

struct ProbArgs {
    std::string dist = "geometric:0.5";
    std::string codim = "geometric:0.5";
    std::string stat;
    std::string mode = "exact";
    std::size_t samples = 100000;
    std::uint64_t seed = 0;
    std::string format = "text";
    int truncation = 64;
    int pdg_rows = 8;
};

struct ProbReport {
    std::vector<std::pair<std::string, Estimate>> rows;
    std::vector<std::pair<std::string, bool>> checks;
};

ProbReport prob_exact(const ProbArgs& a, const ForestMass& fm) {
    ProbReport r;
    const HeightMass& m = fm.height;
    if (a.stat == "pdm") {
        const MomentEstimates closed = expectation_pdm_closed(m);
        const MomentEstimates trunc = expectation_pdm_truncated(m, a.truncation);
        r.rows = {{"mean", closed.mean},
                  {"variance", closed.variance},
                  {"mean_truncated", trunc.mean},
                  {"variance_truncated", trunc.variance}};
        r.checks = {{"mean_in_enclosure", trunc.mean.lower <= closed.mean.upper && closed.mean.lower <= trunc.mean.upper},
                    {"variance_in_enclosure",
                     trunc.variance.lower <= closed.variance.upper && closed.variance.lower <= trunc.variance.upper}};
    } else if (a.stat == "pdg") {
        bool below = true;
        for (int d = 1; d <= a.pdg_rows; ++d) {
            const Estimate e = pmf_pdg(m, d);
            below = below && e.upper < mpq_class(1, mpz_class(1) << (d - 1));
            r.rows.emplace_back("pmf_" + std::to_string(d), e);
        }
        const Estimate mean = expectation_pdg(m, a.truncation);
        r.rows.emplace_back("mean", mean);
        r.rows.emplace_back("total_mass", pdg_total_mass(m, a.truncation));
        r.checks = {{"pmf_below_2^(1-d)", below}, {"mean_at_most_sqrt12", mean.upper * mean.upper <= 12}};
    } else if (a.stat == "rad") {
        const RadiusBounds b = radius_bounds(m, a.truncation);
        r.rows = {{"rad_le_1_lower_bound", b.rad_le_1},
                  {"rad_le_2_lower_bound", b.rad_le_2},
                  {"pdm_eq_0", b.pdm_eq_0},
                  {"pdm_le_1", b.pdm_le_1}};
    } else {
        const IrrBounds b = irr_lower_bound(fm);
        r.rows = {{"analytic_lower_bound", b.analytic},
                  {"counting_lower_bound", b.counting},
                  {"truncation_mass", b.truncation_mass}};
        r.checks = {{"analytic_exceeds_half", b.analytic_exceeds_half},
                    {"counting_exceeds_half", b.counting_exceeds_half},
                    {"tolerance_reached", b.tolerance_reached}};
    }
    return r;
}

ProbReport prob_mc(const ProbArgs& a, const ForestMass& fm, const Globals& g) {
    ProbReport r;
    auto sample = [&](SampledStatistic s) { return monte_carlo(fm, s, a.samples, a.seed, g.threads); };
    if (a.stat == "pdm") {
        r.rows = {{"mean", sample(SampledStatistic::Pdm)}};
    } else if (a.stat == "pdg") {
        const Estimate mean = sample(SampledStatistic::Pdg);
        r.rows = {{"mean", mean}};
        r.checks = {{"mean_at_most_sqrt12_plus_3se", mean.lower * mean.lower <= 12}};
    } else if (a.stat == "rad") {
        r.rows = {{"pdm_eq_0", sample(SampledStatistic::PdmIsZero)}, {"pdm_le_1", sample(SampledStatistic::PdmAtMostOne)}};
    } else {
        const Estimate unique = sample(SampledStatistic::UniqueBorel);
        r.rows = {{"unique_borel_fraction", unique}};
        r.checks = {{"exceeds_half", unique.value > mpq_class(1, 2)}};
    }
    return r;
}

std::string run_prob(const ProbArgs& a, const Globals& g) {
    if (a.truncation < 1 || static_cast<std::size_t>(a.truncation) > g.guard_frontier)
        throw ValidationError("--K must be positive and within the frontier guard");
    ForestMass fm;
    fm.height = HeightMass::parse(a.dist);
    fm.codim = CodimMass::parse(a.codim);
    fm.truncation = a.truncation;
    const ProbReport r = a.mode == "mc" ? prob_mc(a, fm, g) : prob_exact(a, fm);

    if (a.format == "json") {
        Json rows = Json::object();
        for (const auto& [name, e] : r.rows) rows[name] = to_json(e);
        Json checks = Json::object();
        for (const auto& [name, ok] : r.checks) checks[name] = ok;
        Json j{{"dist", fm.height.to_string()}, {"codim", fm.codim.to_string()}, {"stat", a.stat}, {"mode", a.mode}};
        if (a.mode == "mc") j["seed"] = a.seed;
        j["results"] = rows;
        j["checks"] = checks;
        return dump(j);
    }
    std::ostringstream os;
    if (a.format == "csv") {
        os << "stat,quantity,method,value,lower,upper,exact,truncation,samples,std_error\n";
        for (const auto& [name, e] : r.rows)
            os << a.stat << ',' << name << ',' << to_string(e.method) << ',' << to_decimal(e.value) << ','
               << to_decimal(e.lower) << ',' << to_decimal(e.upper) << ',' << (e.is_exact() ? e.value.get_str() : "")
               << ',' << e.truncation << ',' << e.samples << ',' << e.std_error << '\n';
        return os.str();
    }
    os << "dist " << fm.height.to_string() << ", codim " << fm.codim.to_string() << ", stat " << a.stat << ", mode "
       << a.mode << '\n';
    for (const auto& [name, e] : r.rows) {
        os << name << ": " << to_decimal(e.value);
        if (e.is_exact())
            os << " = " << e.value.get_str();
        else
            os << " in [" << to_decimal(e.lower) << ", " << to_decimal(e.upper) << "]";
        os << "  (" << to_string(e.method);
        if (e.method == Estimate::Method::TruncatedSum) os << ", K=" << e.truncation;
        if (e.method == Estimate::Method::MonteCarlo) os << ", n=" << e.samples;
        os << ")\n";
    }
    for (const auto& [name, ok] : r.checks) os << "check " << name << ": " << (ok ? "yes" : "no") << '\n';
    return os.str();
}

// ---------------------------------------------------------------------------

Outcome render_error(int status, const std::string& code, const std::string& message, const std::string& token,
                     bool json) {
    if (json) {
        Json e{{"code", code}, {"message", message}};
        if (!token.empty()) e["token"] = token;
        return {status, dump(Json{{"error", e}}), ""};
    }
    std::string line = "error[" + code + "]: " + message;
    if (!token.empty()) line += " (token '" + token + "')";
    return {status, "", line + "\n"};
}

}  // namespace

Outcome run(const std::vector<std::string>& args) {
    CLI::App app{"Hilbert polynomials, saturated Borel ideals and the Hilbert forest", "hilbforest"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--guard-degree", g.guard_degree, "Largest generator degree allowed")->check(CLI::PositiveNumber);
    app.add_option("--guard-frontier", g.guard_frontier, "Largest frontier / node count allowed")
        ->check(CLI::PositiveNumber);
    app.add_option("--guard-partition", g.guard_partition, "Largest r + b_1 accepted for a polynomial")
        ->check(CLI::PositiveNumber);
    app.add_option("--threads", g.threads, "Worker threads (0: all, capped by HILBFOREST_THREADS)");

    const auto text_json = CLI::IsMember({"text", "json"});

    PolyArgs poly;
    auto* poly_cmd = app.add_subcommand("poly", "Inspect an admissible Hilbert polynomial");
    poly_cmd->add_option("action", poly.action, "info | path | lift | plus | nabla")
        ->required()
        ->check(CLI::IsMember({"info", "path", "lift", "plus", "nabla"}));
    poly_cmd->add_option("--hp", poly.hp, "Polynomial, partition literal or JSON");
    poly_cmd->add_option("--path", poly.path, "Root-to-node word such as \"P L P P\"");
    poly_cmd->add_flag("--reverse", poly.reverse, "Print paths in application order");
    poly_cmd->add_flag("--compact", poly.compact, "Collapse runs in paths (P^2)");
    poly_cmd->add_option("--format", poly.format)->check(text_json);

    LexArgs lex;
    auto* lex_cmd = app.add_subcommand("lex", "Lexicographic ideal");
    lex_cmd->add_option("--hp", lex.hp);
    lex_cmd->add_option("--n", lex.n, "Ambient P^n");
    lex_cmd->add_option("--spec", lex.spec, "a_0,...,a_{n-1}");
    lex_cmd->add_option("--format", lex.format)->check(text_json);

    BorelArgs borel;
    auto* borel_cmd = app.add_subcommand("borel", "Borel ideal operations");
    borel_cmd->add_option("--ideal", borel.ideal)->required();
    borel_cmd->add_option("--n", borel.n);
    borel_cmd->add_option("--op", borel.op)->check(CLI::IsMember({"check", "expandable", "expand", "extend", "nabla"}));
    borel_cmd->add_option("--gen", borel.gen, "Generator to expand, e.g. x1^3");
    borel_cmd->add_option("--format", borel.format)->check(text_json);

    EnumerateArgs en;
    auto* en_cmd = app.add_subcommand("enumerate", "All saturated Borel ideals with a Hilbert polynomial");
    en_cmd->add_option("--hp", en.hp)->required();
    en_cmd->add_option("--n", en.n)->required();
    en_cmd->add_option("--format", en.format)->check(text_json);

    KpolyArgs kp;
    auto* kp_cmd = app.add_subcommand("kpoly", "K-polynomial of a Borel ideal");
    kp_cmd->add_option("--ideal", kp.ideal)->required();
    kp_cmd->add_option("--n", kp.n);
    kp_cmd->add_option("--format", kp.format)->check(text_json);

    ClassifyArgs cl;
    auto* cl_cmd = app.add_subcommand("classify", "Unique Borel point test");
    cl_cmd->add_option("--hp", cl.hp)->required();
    cl_cmd->add_option("--c", cl.c, "Codimension")->required();
    cl_cmd->add_flag("--witnesses", cl.witnesses, "Enumerate witnesses on negative verdicts");
    cl_cmd->add_option("--format", cl.format)->check(text_json);

    TreeArgs tr;
    auto* tr_cmd = app.add_subcommand("tree", "Export the codimension-c tree");
    tr_cmd->add_option("--c", tr.c)->required();
    tr_cmd->add_option("--height", tr.height)->required();
    tr_cmd->add_option("--format", tr.format)->check(CLI::IsMember({"dot", "text", "json"}));

    ProbArgs pr;
    auto* pr_cmd = app.add_subcommand("prob", "Statistics of the Hilbert forest");
    pr_cmd->add_option("--dist", pr.dist, "Height mass: geometric:p | poisson:lambda | table:f0,f1,...");
    pr_cmd->add_option("--codim", pr.codim, "Codimension mass: geometric:rho | single:c | table:...");
    pr_cmd->add_option("--stat", pr.stat)->required()->check(CLI::IsMember({"pdm", "pdg", "rad", "irr"}));
    pr_cmd->add_option("--mode", pr.mode)->check(CLI::IsMember({"exact", "mc"}));
    pr_cmd->add_option("--samples", pr.samples)->check(CLI::Range(std::size_t{2}, std::size_t{100'000'000}));
    pr_cmd->add_option("--seed", pr.seed);
    pr_cmd->add_option("--format", pr.format)->check(CLI::IsMember({"text", "json", "csv"}));
    pr_cmd->add_option("--K", pr.truncation, "Truncation height");

    const bool json_format = std::find(args.begin(), args.end(), "json") != args.end();
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        std::ostringstream out, err;
        app.exit(e, out, err);
        return {kOk, out.str(), err.str()};
    } catch (const CLI::CallForAllHelp& e) {
        std::ostringstream out, err;
        app.exit(e, out, err);
        return {kOk, out.str(), err.str()};
    } catch (const CLI::ParseError& e) {
        return render_error(kValidation, "usage", e.what(), "", json_format);
    }

    try {
        std::string out;
        if (poly_cmd->parsed())
            out = run_poly(poly, g);
        else if (lex_cmd->parsed())
            out = run_lex(lex, g);
        else if (borel_cmd->parsed())
            out = run_borel(borel, g);
        else if (en_cmd->parsed())
            out = run_enumerate(en, g);
        else if (kp_cmd->parsed())
            out = run_kpoly(kp, g);
        else if (cl_cmd->parsed())
            out = run_classify(cl, g);
        else if (tr_cmd->parsed())
            out = run_tree(tr, g);
        else
            out = run_prob(pr, g);
        return {kOk, out, ""};
    } catch (const ParseError& e) {
        return render_error(kValidation, e.code(), e.what(), e.token(), json_format);
    } catch (const NotAdmissible& e) {
        return render_error(kValidation, e.code(), std::string(e.what()) + " [stage: " + to_string(e.stage()) + "]", "",
                            json_format);
    } catch (const Error& e) {
        const int status = e.kind() == ErrorKind::Validation ? kValidation
                           : e.kind() == ErrorKind::Resource ? kResource
                                                             : kInternal;
        return render_error(status, e.code(), e.what(), "", json_format);
    } catch (const std::exception& e) {
        return render_error(kInternal, "internal", e.what(), "", json_format);
    }
}

}  // namespace hilbforest::cli
