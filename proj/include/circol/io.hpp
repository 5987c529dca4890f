#pragma once

// Text formats shared by the CLI and the golden tests:
//   graph:      "p edge <n> <m>" then m lines "e <u> <v>" (0-based)
//   colouring:  "colouring <p> <q> <n>" then n integers
//   labelling:  "labelling <p> <q> <m>" then "<u> <v> <value>" per edge
// Lines starting with 'c' are comments.  Verdicts and reduction metadata are
// JSON with sorted keys, pretty-printed for byte-stable golden files.

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "circol/circular.hpp"
#include "circol/errors.hpp"
#include "circol/graph.hpp"
#include "circol/hardness.hpp"
#include "circol/labelling.hpp"
#include "circol/recolour.hpp"

namespace circol {

namespace detail {

// Content lines: comments, blank lines and trailing whitespace dropped.  A
// comment is a lone 'c' or 'c' followed by whitespace, so the "colouring"
// header stays a content line.
inline std::vector<std::string> content_lines(std::istream& in) {
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        size_t end = line.find_last_not_of(" \t");
        line = end == std::string::npos ? "" : line.substr(0, end + 1);
        if (line.empty()) continue;
        if (line[0] == 'c' && (line.size() == 1 || line[1] == ' ' || line[1] == '\t')) continue;
        out.push_back(line);
    }
    return out;
}

inline bool parse_ints(const std::string& s, size_t start, std::vector<long long>& out) {
    std::istringstream iss(s.substr(start));
    long long x;
    while (iss >> x) out.push_back(x);
    return iss.eof();
}

}  // namespace detail

inline Graph parse_graph(std::istream& in) {
    std::vector<std::string> lines = detail::content_lines(in);
    if (lines.empty()) throw parse_error("graph: missing problem line");
    std::istringstream head(lines[0]);
    std::string tag, fmt;
    long long n = -1, m = -1;
    if (!(head >> tag >> fmt >> n >> m) || tag != "p" || fmt != "edge" || n < 0 || m < 0)
        throw parse_error("graph: bad problem line '" + lines[0] + "'");
    if (static_cast<long long>(lines.size()) - 1 != m)
        throw parse_error("graph: expected " + std::to_string(m) + " edge lines");
    std::vector<std::pair<int, int>> es;
    for (size_t i = 1; i < lines.size(); ++i) {
        std::istringstream el(lines[i]);
        std::string e;
        long long u, v;
        if (!(el >> e >> u >> v) || e != "e")
            throw parse_error("graph: bad edge line '" + lines[i] + "'");
        std::string rest;
        if (el >> rest) throw parse_error("graph: trailing tokens on '" + lines[i] + "'");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw parse_error("graph: endpoint out of range on '" + lines[i] + "'");
        if (u == v) throw parse_error("graph: self-loop on '" + lines[i] + "'");
        es.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    try {
        return Graph(static_cast<int>(n), es);
    } catch (const std::invalid_argument& ex) {
        throw parse_error(std::string("graph: ") + ex.what());
    }
}

inline std::string format_graph(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.n << " " << g.edge_count() << "\n";
    for (const Edge& e : g.edges) out << "e " << e.u << " " << e.v << "\n";
    return out.str();
}

inline CircularColouring parse_colouring(std::istream& in) {
    std::vector<std::string> lines = detail::content_lines(in);
    if (lines.empty()) throw parse_error("colouring: missing header line");
    std::istringstream head(lines[0]);
    std::string tag;
    long long p, q, n;
    if (!(head >> tag >> p >> q >> n) || tag != "colouring" || n < 0)
        throw parse_error("colouring: bad header line '" + lines[0] + "'");
    std::vector<long long> vals;
    for (size_t i = 1; i < lines.size(); ++i)
        if (!detail::parse_ints(lines[i], 0, vals))
            throw parse_error("colouring: bad value line '" + lines[i] + "'");
    if (static_cast<long long>(vals.size()) != n)
        throw parse_error("colouring: expected " + std::to_string(n) + " colours, got " +
                          std::to_string(vals.size()));
    CircularParams pr;
    try {
        pr = CircularParams(static_cast<int>(p), static_cast<int>(q));
    } catch (const param_out_of_range&) {
        throw;
    }
    std::vector<int> cs(vals.begin(), vals.end());
    for (int c : cs)
        if (c < 0 || c >= pr.p) throw parse_error("colouring: colour out of range");
    return CircularColouring(pr, cs);
}

inline std::string format_colouring(const CircularColouring& c) {
    std::ostringstream out;
    out << "colouring " << c.params.p << " " << c.params.q << " " << c.colours.size() << "\n";
    for (size_t i = 0; i < c.colours.size(); ++i)
        out << c.colours[i] << (i + 1 == c.colours.size() ? "\n" : " ");
    if (c.colours.empty()) out << "\n";
    return out.str();
}

inline std::string format_labelling(const Graph& g, const EdgeLabelling& lab) {
    std::ostringstream out;
    out << "labelling " << lab.params.p << " " << lab.params.q << " " << g.edge_count() << "\n";
    for (int i = 0; i < g.edge_count(); ++i)
        out << g.edges[i].u << " " << g.edges[i].v << " " << lab.labels[i] << "\n";
    return out.str();
}

inline EdgeLabelling parse_labelling(std::istream& in, const Graph& g) {
    std::vector<std::string> lines = detail::content_lines(in);
    if (lines.empty()) throw parse_error("labelling: missing header line");
    std::istringstream head(lines[0]);
    std::string tag;
    long long p, q, m;
    if (!(head >> tag >> p >> q >> m) || tag != "labelling")
        throw parse_error("labelling: bad header line");
    if (m != g.edge_count() || static_cast<long long>(lines.size()) - 1 != m)
        throw parse_error("labelling: edge count mismatch");
    EdgeLabelling lab;
    lab.params = CircularParams(static_cast<int>(p), static_cast<int>(q));
    lab.labels.assign(g.edge_count(), -1);
    for (size_t i = 1; i < lines.size(); ++i) {
        std::istringstream el(lines[i]);
        long long u, v, val;
        if (!(el >> u >> v >> val)) throw parse_error("labelling: bad line '" + lines[i] + "'");
        int ei = g.edge_index(static_cast<int>(u), static_cast<int>(v));
        if (ei < 0) throw parse_error("labelling: unknown edge");
        if (lab.labels[ei] != -1) throw parse_error("labelling: duplicate edge");
        if (val < 0 || val >= p) throw parse_error("labelling: value out of range");
        lab.labels[ei] = static_cast<int>(val);
    }
    return lab;
}

inline nlohmann::json steps_to_json(const std::vector<RecolourStep>& steps) {
    nlohmann::json arr = nlohmann::json::array();
    for (const RecolourStep& s : steps) arr.push_back({s.vertex, s.new_colour});
    return arr;
}

inline std::vector<RecolourStep> steps_from_json(const nlohmann::json& arr) {
    if (!arr.is_array()) throw parse_error("steps: expected a JSON array");
    std::vector<RecolourStep> steps;
    for (const auto& item : arr) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
            !item[1].is_number_integer())
            throw parse_error("steps: each step must be a [vertex, colour] pair");
        steps.push_back({item[0].get<int>(), item[1].get<int>()});
    }
    return steps;
}

// Sequence validation for externally supplied step documents: malformed
// entries (for example a step naming two vertices at once) are reported by
// index, then the decoded steps run through check_sequence.
inline SequenceCheck check_sequence_json(const Graph& g, const CircularColouring& from,
                                         const CircularColouring& to,
                                         const nlohmann::json& arr) {
    SequenceCheck bad;
    bad.ok = false;
    if (!arr.is_array()) {
        bad.bad_index = -1;
        bad.reason = "steps document is not an array";
        return bad;
    }
    std::vector<RecolourStep> steps;
    for (size_t i = 0; i < arr.size(); ++i) {
        const auto& item = arr[i];
        if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
            !item[1].is_number_integer()) {
            bad.bad_index = static_cast<int>(i);
            bad.reason = "step does not encode exactly one vertex-colour pair";
            return bad;
        }
        steps.push_back({item[0].get<int>(), item[1].get<int>()});
    }
    return check_sequence(g, from, to, steps);
}

inline const char* obstruction_kind_name(Obstruction::Kind k) {
    switch (k) {
        case Obstruction::Kind::fixed_vertex: return "fixed-vertex";
        case Obstruction::Kind::cycle_weight: return "cycle-weight";
        case Obstruction::Kind::fixed_path: return "fixed-path";
    }
    return "?";
}

inline nlohmann::json verdict_to_json(const RecolourResult& res) {
    nlohmann::json doc;
    if (res.yes()) {
        doc["result"] = "yes";
        doc["sequence"] = steps_to_json(res.steps);
        return doc;
    }
    const Obstruction& obs = *res.obstruction;
    doc["result"] = "no";
    nlohmann::json cert;
    cert["kind"] = obstruction_kind_name(obs.kind);
    nlohmann::json wit;
    switch (obs.kind) {
        case Obstruction::Kind::fixed_vertex:
            wit["vertex"] = obs.vertex;
            wit["cycle"] = obs.witness_cycle;
            wit["f_colour"] = obs.f_colour;
            wit["g_colour"] = obs.g_colour;
            break;
        case Obstruction::Kind::cycle_weight:
            wit["cycle"] = obs.cycle.verts;
            wit["f_weight"] = obs.f_weight;
            wit["g_weight"] = obs.g_weight;
            break;
        case Obstruction::Kind::fixed_path:
            wit["path"] = obs.path;
            wit["f_weight"] = obs.f_weight;
            wit["g_weight"] = obs.g_weight;
            break;
    }
    cert["witness"] = wit;
    doc["certificate"] = cert;
    return doc;
}

// nlohmann objects keep keys sorted; dump(2) then gives byte-stable output.
inline std::string dump_json(const nlohmann::json& doc) { return doc.dump(2) + "\n"; }

inline nlohmann::json reduction_metadata(const ReductionInstance& red) {
    nlohmann::json doc;
    nlohmann::json original = nlohmann::json::array();
    for (int v = 0; v < red.g_original.n; ++v) original.push_back(v);
    doc["original"] = original;
    nlohmann::json pinned = nlohmann::json::array();
    if (!red.bypass)
        for (int i = 0; i < red.params.p; ++i) pinned.push_back(red.y_base + i);
    doc["pinned"] = pinned;
    nlohmann::json paths = nlohmann::json::array();
    for (const ForbiddingPath& path : red.paths) {
        nlohmann::json p;
        p["from"] = path.from;
        p["to"] = path.to;
        p["internal"] = path.xs;
        paths.push_back(p);
    }
    doc["paths"] = paths;
    return doc;
}

}  // namespace circol
