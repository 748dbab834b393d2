#pragma once

// JSON documents written by the command-line tool, and the readers for set
// families and labellings.

#include "classifier.hpp"
#include "clutter.hpp"
#include "domination.hpp"
#include "errors.hpp"
#include "gamma_graph.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "labelling.hpp"
#include "realizer.hpp"
#include "search.hpp"
#include "symbol_set.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <string>
#include <vector>

namespace gammagraph {

using Json = nlohmann::ordered_json;

/// Graphs above this size are written as edge lists only.
inline constexpr std::size_t graph6_json_limit = 62;

inline auto symbols_to_json(const SymbolSet & s) -> Json
{
    return Json(s.to_vector());
}

/// Vertex names of s, sorted.
inline auto sorted_names(const Graph & g, const VertexList & s) -> std::vector<std::string>
{
    auto names = set_names(g, s);
    std::sort(names.begin(), names.end());
    return names;
}

inline auto domination_to_json(const Graph & g, const DominationResult & r) -> Json
{
    std::vector<std::vector<std::string>> sets;
    for (const auto & s : r.min_sets)
        sets.push_back(sorted_names(g, s));
    std::sort(sets.begin(), sets.end());
    return Json{{"d", r.d}, {"gamma", r.gamma}, {"min_sets", sets}};
}

inline auto gamma_graph_to_json(const Graph & source, const GammaGraph & gg) -> Json
{
    Json vertices = Json::array();
    for (const auto & tag : gg.tags)
        vertices.push_back(sorted_names(source, tag));
    Json edges = Json::array();
    for (auto [u, v] : gg.graph.edges())
        edges.push_back({u, v});
    return Json{{"gamma", gg.gamma}, {"d", gg.d}, {"vertices", vertices}, {"edges", edges}};
}

inline auto clutter_to_json(const Clutter & c) -> Json
{
    Json members = Json::array();
    for (const auto & m : c.members())
        members.push_back(symbols_to_json(m));
    return Json{{"n", c.ground_size()}, {"members", members}};
}

/// One member; symbols must be integers in [1, 64].
inline auto symbols_from_json(const Json & j) -> SymbolSet
{
    if (! j.is_array())
        throw ArgumentError("a set must be a JSON array of positive integers");
    SymbolSet result;
    for (const auto & x : j) {
        if (! x.is_number_integer() || x.get<long long>() < 1 || x.get<long long>() > SymbolSet::max_symbol)
            throw ArgumentError("set elements must be integers in [1, " + std::to_string(SymbolSet::max_symbol) + "]: " + x.dump());
        if (result.contains(x.get<unsigned>()))
            throw ArgumentError("repeated element " + x.dump() + " in " + j.dump());
        result.insert(x.get<unsigned>());
    }
    return result;
}

struct SetFamily
{
    /// Ground-set size if the document gave one.
    std::optional<unsigned> n;
    std::vector<SymbolSet> members;

    auto ground_size() const -> unsigned
    {
        unsigned m = 0;
        for (const auto & s : members)
            m = std::max(m, s.max());
        return n.value_or(m);
    }
};

/// Accepts {"n": 5, "members": [[1,2],[2,3]]} or a bare [[1,2],[2,3]].
inline auto set_family_from_json(const Json & j) -> SetFamily
{
    SetFamily result;
    const Json * members = &j;
    if (j.is_object()) {
        if (! j.contains("members"))
            throw ArgumentError("set family object needs a \"members\" array");
        members = &j.at("members");
        if (j.contains("n")) {
            if (! j.at("n").is_number_unsigned())
                throw ArgumentError("\"n\" must be a non-negative integer");
            result.n = j.at("n").get<unsigned>();
        }
    }
    if (! members->is_array())
        throw ArgumentError("set family must be an array of arrays");
    for (const auto & m : *members)
        result.members.push_back(symbols_from_json(m));
    return result;
}

inline auto parse_set_family_json(const std::string & text) -> SetFamily
{
    try {
        return set_family_from_json(Json::parse(text));
    }
    catch (const Json::parse_error & e) {
        throw ParseError(e.byte == 0 ? 0 : e.byte - 1, std::string("invalid JSON: ") + e.what());
    }
}

/// "123,124" -> {1,2,3}, {1,2,4}. Each element is one digit 1-9.
inline auto parse_set_list(const std::string & text) -> std::vector<SymbolSet>
{
    std::vector<SymbolSet> result;
    SymbolSet current;
    bool open = false;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        char c = i < text.size() ? text[i] : ',';
        if (c == ',') {
            if (! open)
                throw ParseError(i, "empty set in list");
            result.push_back(current);
            current = {};
            open = false;
        }
        else if (c >= '1' && c <= '9') {
            auto s = static_cast<unsigned>(c - '0');
            if (current.contains(s))
                throw ParseError(i, std::string("repeated element ") + c);
            current.insert(s);
            open = true;
        }
        else if (c != ' ')
            throw ParseError(i, std::string("unexpected character '") + c + "' in set list");
    }
    return result;
}

inline auto labelling_to_json(const Graph & g, const Labelling & l) -> Json
{
    Json labels = Json::object();
    for (Vertex v = 0; v < g.size(); ++v)
        labels[g.name(v)] = symbols_to_json(l.labels.at(v));
    return Json{{"k", l.k}, {"labels", labels}};
}

/// Reads {"k": 3, "labels": {"1": [1,2,3], ...}}; every vertex needs a label.
inline auto labelling_from_json(const Graph & g, const Json & j) -> Labelling
{
    if (! j.is_object() || ! j.contains("k") || ! j.contains("labels") || ! j.at("labels").is_object())
        throw ArgumentError("labelling needs \"k\" and a \"labels\" object");
    Labelling result{j.at("k").get<unsigned>(), std::vector<SymbolSet>(g.size())};
    const auto & labels = j.at("labels");
    for (Vertex v = 0; v < g.size(); ++v) {
        if (! labels.contains(g.name(v)))
            throw ArgumentError("no label for vertex " + g.name(v));
        result.labels[v] = symbols_from_json(labels.at(g.name(v)));
    }
    if (labels.size() != g.size())
        throw ArgumentError("labels given for unknown vertices");
    return result;
}

inline auto search_status_name(SearchStatus s) -> std::string
{
    switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::absent: return "absent_up_to_k";
    case SearchStatus::budget_exhausted: return "budget_exhausted";
    }
    return "unknown";
}

inline auto search_outcome_to_json(const Graph & g, const SearchOutcome & o) -> Json
{
    Json j{{"status", search_status_name(o.status)}, {"k_max", o.k_max}, {"nodes", o.nodes}};
    if (o.labelling)
        j["labelling"] = labelling_to_json(g, *o.labelling);
    if (o.status == SearchStatus::budget_exhausted)
        j["frontier_k"] = o.frontier_k;
    return j;
}

inline auto size_to_json(const ConstructionSize & s) -> Json
{
    return Json::array({s.vertices, s.edges});
}

inline auto realization_to_json(const RealizedGraph & r) -> Json
{
    Json relabel = Json::object();
    for (unsigned i = 0; i < r.core_size; ++i)
        relabel[std::to_string(i + 1)] = r.original_symbol[i];

    Json edges = Json::array();
    for (auto [u, v] : r.graph.edges())
        edges.push_back({r.graph.name(u), r.graph.name(v)});

    Json j{{"d", r.d}, {"k", r.k}, {"n", r.core_size}, {"relabel", relabel},
        {"family", clutter_to_json(r.family)}, {"blocker", clutter_to_json(r.blocker)},
        {"vertices", r.graph.size()}, {"edges", r.graph.edge_count()}};
    if (r.graph.size() <= graph6_json_limit)
        j["graph6"] = write_graph6(r.graph);
    j["names"] = r.graph.names();
    j["edge_list"] = edges;
    return j;
}

inline auto realization_report_to_json(const RealizationReport & report) -> Json
{
    Json missing = Json::array();
    for (const auto & s : report.missing)
        missing.push_back(symbols_to_json(s));
    return Json{{"matches", report.matches}, {"gamma", report.gamma}, {"missing", missing},
        {"extra", report.extra}, {"gadget_vertex_used", report.gadget_vertex_used}};
}

inline auto counts_to_json(const StatusCounts & c) -> Json
{
    return Json{{"labellable", c.labellable}, {"minimally_unlabellable", c.minimally_unlabellable},
        {"unlabellable_nonminimal", c.unlabellable_nonminimal}, {"undecided", c.undecided}, {"total", c.total()}};
}

/// Orders at or above this are reported as exploratory.
inline constexpr std::size_t exploratory_order = 7;

inline auto report_to_json(const ClassificationReport & report, const Json & params) -> Json
{
    Json verdicts = Json::object();
    for (const auto & e : report.entries) {
        Json v{{"status", to_string(e.verdict.status)}, {"n", e.graph.size()}, {"k_bound", e.verdict.k_bound}};
        if (e.verdict.labelling)
            v["labelling"] = labelling_to_json(e.graph, *e.verdict.labelling);
        if (e.verdict.witness) {
            auto sub = induced_subgraph(e.graph, std::span<const Vertex>(*e.verdict.witness));
            v["witness_graph6"] = write_graph6(sub);
            v["witness_vertices"] = set_names(e.graph, *e.verdict.witness);
        }
        verdicts[e.graph6] = v;
    }
    Json by_order = Json::array();
    for (const auto & [n, c] : report.counts_by_order) {
        auto row = counts_to_json(c);
        row["n"] = n;
        row["exploratory"] = n >= exploratory_order;
        by_order.push_back(row);
    }
    return Json{{"params", params}, {"counts", counts_to_json(report.counts)}, {"by_order", by_order}, {"verdicts", verdicts}};
}

} // namespace gammagraph
