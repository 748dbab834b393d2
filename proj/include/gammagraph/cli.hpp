#pragma once

// The gammagraph command-line tool. run() parses arguments, writes JSON to
// stdout (or --out) and diagnostics to the error stream, and returns the exit
// status: 0 success, 1 failed fixture check, 2 usage or precondition error,
// 3 budget exhausted.

#include "classifier.hpp"
#include "clutter.hpp"
#include "domination.hpp"
#include "enumerate.hpp"
#include "errors.hpp"
#include "families.hpp"
#include "fixtures.hpp"
#include "gamma_graph.hpp"
#include "graph6.hpp"
#include "json_io.hpp"
#include "labelling.hpp"
#include "realizer.hpp"
#include "search.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace gammagraph::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_budget = 3;

/// Where the graphs for a subcommand come from; exactly one may be set.
struct GraphSource
{
    std::string graph6, in, family;

    auto add_to(CLI::App & app) -> void
    {
        app.add_option("--graph6", graph6, "graph6 word");
        app.add_option("--in", in, "file of graph6 words, one per line");
        app.add_option("--family", family, "named family, e.g. wheel:9 or fan:2,3");
    }

    auto count() const -> int { return ! graph6.empty() + ! in.empty() + ! family.empty(); }

    /// The graphs, and whether they came from a file.
    auto load() const -> std::pair<std::vector<Graph>, bool>
    {
        if (count() != 1)
            throw ArgumentError("give exactly one of --graph6, --in, --family");
        if (! graph6.empty())
            return {{parse_graph6(graph6)}, false};
        if (! family.empty())
            return {{make_family(family)}, false};
        std::ifstream file(in);
        if (! file)
            throw ArgumentError("cannot read " + in);
        return {read_graph6_lines(file), true};
    }
};

/// --sets or --sets-file.
struct SetSource
{
    std::string sets, sets_file;

    auto add_to(CLI::App & app) -> void
    {
        app.add_option("--sets", sets, "comma-separated digit strings, e.g. 123,124");
        app.add_option("--sets-file", sets_file, "JSON file: [[1,2,3],...] or {\"n\":..,\"members\":[...]}");
    }

    auto load() const -> SetFamily
    {
        if (sets.empty() == sets_file.empty())
            throw ArgumentError("give exactly one of --sets, --sets-file");
        if (! sets.empty())
            return SetFamily{std::nullopt, parse_set_list(sets)};
        std::ifstream file(sets_file);
        if (! file)
            throw ArgumentError("cannot read " + sets_file);
        std::stringstream text;
        text << file.rdbuf();
        return parse_set_family_json(text.str());
    }
};

/// One document per graph; a file of graphs gives an array keyed by graph6.
template <typename F>
auto per_graph(const std::vector<Graph> & graphs, bool from_file, F && document) -> Json
{
    if (! from_file)
        return document(graphs.front());
    Json result = Json::array();
    for (const auto & g : graphs)
        result.push_back(Json{{"graph6", write_graph6(g)}, {"result", document(g)}});
    return result;
}

struct FixtureCheck
{
    std::string name;
    bool pass = false;
};

/// Runs the bundled example graphs and labellings, plus a seeded sample of
/// realization round trips.
inline auto verify_fixtures(std::uint64_t seed) -> std::vector<FixtureCheck>
{
    std::vector<FixtureCheck> checks;
    auto check = [&](std::string name, auto && test) {
        bool pass = false;
        try {
            pass = test();
        }
        catch (const std::exception &) {
            pass = false;
        }
        checks.push_back({std::move(name), pass});
    };
    auto names_of = [](const Graph & g, const DominationResult & r) {
        std::vector<std::string> result;
        for (const auto & s : r.min_sets) {
            std::string word;
            for (const auto & n : sorted_names(g, s))
                word += n;
            result.push_back(word);
        }
        std::sort(result.begin(), result.end());
        return result;
    };
    auto labellable = [](const Graph & g, unsigned k_max) {
        return decide_labellable(g, {k_max, 100'000'000}).decision;
    };

    check("domination_example_d1", [&] {
        auto g = fixtures::domination_example();
        auto r = min_dominating_sets(g, 1);
        return r.gamma == 2 && names_of(g, r) == std::vector<std::string>{"15", "25", "36", "46", "56"};
    });
    check("domination_example_d2", [&] {
        auto g = fixtures::domination_example();
        auto r = min_dominating_sets(g, 2);
        return r.gamma == 1 && names_of(g, r) == std::vector<std::string>{"2", "3", "5", "6", "7"};
    });
    check("size_table", [&] {
        auto a = parse_set_list("123,124");
        auto b = parse_set_list("1234,1235,1246,2357,3578");
        auto eq = [](ConstructionSize s, std::uint64_t v, std::uint64_t e) { return s.vertices == v && s.edges == e; };
        return eq(construction_size(a, 3), 22, 26) && eq(construction_size(a, 1), 10, 14) && eq(construction_size(b, 1), 28, 68)
            && eq(hhl_size(a), 36, 62) && eq(hhl_size(b), 613, 2728);
    });
    check("wheel9_labelling", [&] { return wheel_labelling(9) == fixtures::wheel9_labelling(); });
    check("theta_graph_labelling",
        [&] { return is_valid_labelling(fixtures::theta_graph(), fixtures::theta_graph_labelling()).valid; });
    check("theta_graph_with_spoke_labelling", [&] {
        return is_valid_labelling(fixtures::theta_graph_with_spoke(), fixtures::theta_graph_with_spoke_labelling()).valid;
    });
    check("hexagon_with_ear_labelling",
        [&] { return is_valid_labelling(fixtures::hexagon_with_ear(), fixtures::hexagon_with_ear_labelling()).valid; });
    check("theta_graph_with_chord_minimal", [&] {
        return is_minimally_unlabellable(fixtures::theta_graph_with_chord(), {7, 100'000'000}).status
            == Status::minimally_unlabellable;
    });
    for (std::size_t i = 0; i < 4; ++i)
        check("minimal_unlabellable_five_" + std::to_string(i + 1), [&] {
            return is_minimally_unlabellable(fixtures::minimal_unlabellable_five()[i], {6, 100'000'000}).status
                == Status::minimally_unlabellable;
        });
    for (std::size_t i = 0; i < 4; ++i)
        check("minimal_unlabellable_six_" + std::to_string(i + 1), [&] {
            return is_minimally_unlabellable(fixtures::minimal_unlabellable_six()[i], {6, 100'000'000}).status
                == Status::minimally_unlabellable;
        });
    check("k23_with_pendant_unlabellable",
        [&] { return labellable(fixtures::k23_with_pendant(), 6) == Decision::unlabellable; });

    check("realize_round_trip_sample", [&] {
        std::mt19937_64 rng(seed);
        for (int trial = 0; trial < 20; ++trial) {
            unsigned n = 2 + rng() % 4, k = 1 + rng() % std::min(3u, n), d = 1 + rng() % 3;
            std::vector<SymbolSet> all;
            for (std::uint64_t bits = 0; bits < (1ull << n); ++bits)
                if (std::popcount(bits) == static_cast<int>(k))
                    all.push_back(SymbolSet::from_bits(bits));
            std::vector<SymbolSet> family;
            for (const auto & s : all)
                if (rng() % 2)
                    family.push_back(s);
            if (family.empty())
                family.push_back(all.front());
            if (! verify_realization(realize(family, d), family).matches)
                return false;
        }
        return true;
    });
    return checks;
}

inline auto emit(const Json & doc, const std::string & out_path, std::ostream & out) -> void
{
    auto text = doc.dump(2) + "\n";
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (! file)
        throw ArgumentError("cannot write " + out_path);
    file << text;
}

inline auto summary_table(const ClassificationReport & report) -> std::string
{
    std::ostringstream s;
    s << std::setw(3) << "n" << std::setw(12) << "labellable" << std::setw(12) << "minimal" << std::setw(12)
      << "nonminimal" << std::setw(12) << "undecided" << "\n";
    for (const auto & [n, c] : report.counts_by_order)
        s << std::setw(3) << n << std::setw(12) << c.labellable << std::setw(12) << c.minimally_unlabellable
          << std::setw(12) << c.unlabellable_nonminimal << std::setw(12) << c.undecided
          << (n >= exploratory_order ? "  (exploratory)" : "") << "\n";
    return s.str();
}

inline auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int
{
    CLI::App app{"Distance-d domination, gamma-graphs, realizations and Johnson-graph labellings", "gammagraph"};
    app.require_subcommand(1);

    unsigned d = 1;
    unsigned k_max = 0;
    std::uint64_t node_limit = 100'000'000;
    unsigned max_n = 0, min_n = 1, jobs = 1;
    std::uint64_t seed = 20240611;
    std::string out_path, check_path;
    bool verify = false;
    GraphSource graphs;
    SetSource sets;

    auto add_out = [&](CLI::App * sub) { sub->add_option("--out", out_path, "write JSON here instead of stdout"); };
    auto add_d = [&](CLI::App * sub) {
        sub->add_option("--d", d, "distance parameter")->check(CLI::PositiveNumber);
    };
    auto add_budget = [&](CLI::App * sub) {
        sub->add_option("--k-max", k_max, "largest label size tried (default max(2, n))")->check(CLI::PositiveNumber);
        sub->add_option("--node-limit", node_limit, "search nodes allowed per graph")->check(CLI::PositiveNumber);
    };

    auto * gamma = app.add_subcommand("gamma", "domination number and all minimum dominating sets");
    auto * gammagraph = app.add_subcommand("gammagraph", "the gamma_d-graph");
    auto * realize_cmd = app.add_subcommand("realize", "graph whose minimum dominating sets are the given family");
    auto * blocker_cmd = app.add_subcommand("blocker", "minimal transversals of a clutter");
    auto * label = app.add_subcommand("label", "search for a Johnson-graph labelling");
    auto * classify_cmd = app.add_subcommand("classify", "classify small connected graphs by labellability");
    auto * family = app.add_subcommand("family", "emit a named graph family member");
    auto * fixtures_cmd = app.add_subcommand("verify-fixtures", "check the bundled example graphs");

    for (auto * sub : {gamma, gammagraph, label}) {
        graphs.add_to(*sub);
        add_out(sub);
    }
    add_d(gamma);
    add_d(gammagraph);
    add_budget(label);
    label->add_option("--check", check_path, "validate this labelling JSON instead of searching");

    add_d(realize_cmd);
    sets.add_to(*realize_cmd);
    realize_cmd->add_flag("--verify", verify, "enumerate the realized graph's minimum dominating sets and compare");
    add_out(realize_cmd);

    sets.add_to(*blocker_cmd);
    add_out(blocker_cmd);

    classify_cmd->add_option("--max-n", max_n, "classify all connected graphs up to this order (at most 7)");
    classify_cmd->add_option("--min-n", min_n, "smallest order enumerated")->check(CLI::PositiveNumber);
    classify_cmd->add_option("--in", graphs.in, "file of graph6 words to classify instead");
    classify_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    add_budget(classify_cmd);
    add_out(classify_cmd);

    family->add_option("spec", graphs.family, "family spec, e.g. wheel:9");
    family->add_option("--family", graphs.family, "family spec, e.g. wheel:9");
    add_out(family);

    fixtures_cmd->add_option("--seed", seed, "seed for the sampled round trips");
    add_out(fixtures_cmd);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e, out, err);
    }
    catch (const CLI::CallForAllHelp & e) {
        return app.exit(e, out, err);
    }
    catch (const CLI::ParseError & e) {
        app.exit(e, out, err);
        return exit_usage;
    }

    try {
        if (gamma->parsed() || gammagraph->parsed()) {
            auto [input, from_file] = graphs.load();
            bool as_graph = gammagraph->parsed();
            emit(per_graph(input, from_file,
                     [&](const Graph & g) {
                         return as_graph ? gamma_graph_to_json(g, build_gamma_graph(g, d))
                                         : domination_to_json(g, min_dominating_sets(g, d));
                     }),
                out_path, out);
            return exit_ok;
        }

        if (realize_cmd->parsed()) {
            auto family_sets = sets.load().members;
            auto r = realize(family_sets, d);
            auto doc = realization_to_json(r);
            doc["construction_size"] = size_to_json(construction_size(family_sets, d));
            try {
                doc["hhl_size"] = size_to_json(hhl_size(family_sets));
            }
            catch (const UnsupportedSize &) {
                doc["hhl_size"] = nullptr;
            }
            if (verify)
                doc["verification"] = realization_report_to_json(verify_realization(r, family_sets));
            emit(doc, out_path, out);
            return exit_ok;
        }

        if (blocker_cmd->parsed()) {
            auto input = sets.load();
            auto c = Clutter::validate(input.ground_size(), input.members);
            emit(clutter_to_json(blocker(c)), out_path, out);
            return exit_ok;
        }

        if (label->parsed()) {
            auto [input, from_file] = graphs.load();
            if (! check_path.empty()) {
                if (from_file)
                    throw ArgumentError("--check takes a single graph");
                std::ifstream file(check_path);
                if (! file)
                    throw ArgumentError("cannot read " + check_path);
                Json doc;
                try {
                    doc = Json::parse(file);
                }
                catch (const Json::parse_error & e) {
                    throw ParseError(e.byte == 0 ? 0 : e.byte - 1, std::string("invalid JSON: ") + e.what());
                }
                auto result = is_valid_labelling(input.front(), labelling_from_json(input.front(), doc));
                Json report{{"valid", result.valid}};
                if (result.violation)
                    report["violation"] = result.violation->describe(input.front());
                emit(report, out_path, out);
                return result.valid ? exit_ok : exit_check_failed;
            }
            bool exhausted = false;
            emit(per_graph(input, from_file,
                     [&](const Graph & g) {
                         SearchBudget budget = SearchBudget::defaults_for(g);
                         if (k_max != 0)
                             budget.k_max = k_max;
                         budget.node_limit = node_limit;
                         SearchOutcome outcome;
                         if (is_connected(g))
                             outcome = find_labelling(g, budget);
                         else {
                             auto decision = decide_labellable(g, budget);
                             outcome.k_max = decision.k_bound;
                             outcome.frontier_k = decision.k_bound;
                             outcome.nodes = decision.nodes;
                             outcome.labelling = decision.labelling;
                             outcome.status = decision.decision == Decision::labellable ? SearchStatus::found
                                 : decision.decision == Decision::unlabellable         ? SearchStatus::absent
                                                                                       : SearchStatus::budget_exhausted;
                         }
                         exhausted = exhausted || outcome.status == SearchStatus::budget_exhausted;
                         return search_outcome_to_json(g, outcome);
                     }),
                out_path, out);
            return exhausted ? exit_budget : exit_ok;
        }

        if (classify_cmd->parsed()) {
            if ((max_n == 0) == graphs.in.empty())
                throw ArgumentError("give exactly one of --max-n, --in");
            std::vector<Graph> input;
            Json params = Json::object();
            if (max_n != 0) {
                if (min_n > max_n)
                    throw ArgumentError("--min-n exceeds --max-n");
                for (auto n = min_n; n <= max_n; ++n)
                    for (auto & g : enumerate_connected_graphs(n))
                        input.push_back(std::move(g));
                params["min_n"] = min_n;
                params["max_n"] = max_n;
            }
            else {
                std::ifstream file(graphs.in);
                if (! file)
                    throw ArgumentError("cannot read " + graphs.in);
                input = read_graph6_lines(file);
                params["input"] = graphs.in;
            }
            std::size_t largest = 0;
            for (const auto & g : input)
                largest = std::max(largest, g.size());
            SearchBudget budget{k_max != 0 ? k_max : static_cast<unsigned>(std::max<std::size_t>(2, largest)), node_limit};
            params["k_max"] = budget.k_max;
            params["node_limit"] = budget.node_limit;

            auto report = classify(input, budget, jobs);
            emit(report_to_json(report, params), out_path, out);
            err << summary_table(report);
            return report.counts.undecided > 0 ? exit_budget : exit_ok;
        }

        if (family->parsed()) {
            if (graphs.family.empty())
                throw ArgumentError("family needs a spec such as wheel:9");
            auto spec = FamilySpec::parse(graphs.family);
            auto g = make_family(spec);
            Json edges = Json::array();
            for (auto [u, v] : g.edges())
                edges.push_back({g.name(u), g.name(v)});
            Json doc{{"family", spec.to_string()}, {"n", g.size()}, {"m", g.edge_count()}};
            if (g.size() <= graph6_json_limit)
                doc["graph6"] = write_graph6(g);
            doc["names"] = g.names();
            doc["edges"] = edges;
            if (spec.name == "wheel" && ! spec.params.empty() && (spec.params[0] == 4 || (spec.params[0] >= 5 && spec.params[0] % 2 == 1)))
                doc["labelling"] = labelling_to_json(g, wheel_labelling(spec.params[0]));
            emit(doc, out_path, out);
            return exit_ok;
        }

        if (fixtures_cmd->parsed()) {
            auto checks = verify_fixtures(seed);
            Json list = Json::array();
            bool all = true;
            for (const auto & c : checks) {
                list.push_back(Json{{"name", c.name}, {"pass", c.pass}});
                all = all && c.pass;
            }
            emit(Json{{"seed", seed}, {"all_pass", all}, {"checks", list}}, out_path, out);
            return all ? exit_ok : exit_check_failed;
        }
    }
    catch (const ResourceError & e) {
        err << "gammagraph: budget exhausted: " << e.what() << "\n";
        return exit_budget;
    }
    catch (const Error & e) {
        err << "gammagraph: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}

} // namespace gammagraph::cli
