#pragma once

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include <gcn/errors.hpp>
#include <gcn/gc.hpp>
#include <gcn/geometry.hpp>
#include <gcn/search.hpp>

namespace gcn {

using Json = nlohmann::ordered_json;

/// Node-set file format: plain text, one directive per line, '#' comments.
///
///   degree 4
///   node 0 0
///   node 1/2 -1/3
///
/// Coordinates are exact rational literals; floats are not accepted.
/// Diagnostics carry name:line:column positions.
inline NodeSet parse_node_set(std::istream& in, const std::string& name = "<input>") {
    const auto at = [&name](int line, std::size_t col) {
        return name + ":" + std::to_string(line) + ":" + std::to_string(col + 1) + ": ";
    };

    int degree = -1;
    bool saw_degree = false;
    std::vector<Point> pts;
    std::vector<std::pair<int, std::size_t>> positions; // of each node directive

    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw.substr(0, raw.find('#'));

        // split into (column, token) pairs
        std::vector<std::pair<std::size_t, std::string>> tokens;
        std::size_t i = 0;
        while (i < line.size()) {
            if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
                ++i;
                continue;
            }
            const std::size_t start = i;
            while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
            tokens.emplace_back(start, line.substr(start, i - start));
        }
        if (tokens.empty()) continue;

        const auto& [kcol, keyword] = tokens[0];
        if (keyword == "degree") {
            require(!saw_degree, Errc::parse_error, at(line_no, kcol) + "duplicate degree directive");
            require(tokens.size() == 2, Errc::parse_error,
                    at(line_no, kcol) + "expected: degree <n>");
            try {
                std::size_t used = 0;
                degree = std::stoi(tokens[1].second, &used);
                require(used == tokens[1].second.size() && degree >= 0, Errc::parse_error, "");
            } catch (const Error&) {
                fail(Errc::parse_error,
                     at(line_no, tokens[1].first) + "degree must be a nonnegative integer");
            } catch (const std::exception&) {
                fail(Errc::parse_error,
                     at(line_no, tokens[1].first) + "degree must be a nonnegative integer");
            }
            saw_degree = true;
        } else if (keyword == "node") {
            require(saw_degree, Errc::parse_error,
                    at(line_no, kcol) + "degree directive must come first");
            require(tokens.size() == 3, Errc::parse_error,
                    at(line_no, kcol) + "expected: node <x> <y>");
            Point p;
            for (int c = 0; c < 2; ++c) {
                const auto& [col, text] = tokens[static_cast<std::size_t>(1 + c)];
                try {
                    (c == 0 ? p.x : p.y) = parse_rational(text);
                } catch (const Error& e) {
                    fail(Errc::parse_error, at(line_no, col) + e.what());
                }
            }
            for (std::size_t k = 0; k < pts.size(); ++k)
                require(!(pts[k] == p), Errc::parse_error,
                        at(line_no, kcol) + "duplicate node " + to_string(p) +
                            " (first on line " + std::to_string(positions[k].first) + ")");
            positions.emplace_back(line_no, kcol);
            pts.push_back(std::move(p));
        } else {
            fail(Errc::parse_error, at(line_no, kcol) + "unknown directive '" + keyword + "'");
        }
    }
    require(saw_degree, Errc::parse_error, name + ": missing degree directive");
    require(!pts.empty(), Errc::parse_error, name + ": empty node list");
    return NodeSet(degree, std::move(pts));
}

inline NodeSet parse_node_set_file(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), Errc::parse_error, path + ": cannot open file");
    return parse_node_set(in, path);
}

inline std::string format_node_set(const NodeSet& nodes) {
    std::string out = "degree " + std::to_string(nodes.degree()) + "\n";
    for (const Point& p : nodes.nodes())
        out += "node " + to_string(p.x) + " " + to_string(p.y) + "\n";
    return out;
}

inline Json nodes_to_json(const NodeSet& nodes) {
    Json arr = Json::array();
    for (const Point& p : nodes.nodes()) arr.push_back({to_string(p.x), to_string(p.y)});
    return arr;
}

inline Json lines_to_json(const std::vector<Line>& lines) {
    Json arr = Json::array();
    for (const Line& l : lines) arr.push_back(to_string(l));
    return arr;
}

/// Deterministic full report: stable key order, canonical line forms,
/// node indices refer to the input order.
inline Json analysis_to_json(const NodeSet& nodes, const SetAnalysis& a) {
    Json out;
    out["degree"] = nodes.degree();
    out["node_count"] = nodes.size();
    out["nodes"] = nodes_to_json(nodes);
    out["poised"] = a.poised;
    out["gc"] = a.gc;
    if (a.failing_node)
        out["gc_failing_node"] = *a.failing_node;
    out["maximal_lines"] = lines_to_json(a.maximal);

    Json census = Json::array();
    for (const CensusEntry& e : a.census.entries) {
        Json entry;
        entry["line"] = to_string(e.line);
        entry["node_count"] = e.nodes.size();
        entry["nodes"] = e.nodes;
        census.push_back(std::move(entry));
    }
    out["line_census"] = std::move(census);

    Json witnesses = Json::array();
    for (const FactorizationWitness& w : a.witnesses) {
        Json entry;
        entry["node"] = w.owner;
        entry["scale"] = to_string(w.scale);
        entry["factors"] = lines_to_json(w.factors);
        witnesses.push_back(std::move(entry));
    }
    out["witnesses"] = std::move(witnesses);

    Json usage = Json::array();
    for (const UsageRecord& r : a.usage) {
        Json entry;
        entry["line"] = to_string(r.line);
        entry["users"] = r.users;
        usage.push_back(std::move(entry));
    }
    out["usage"] = std::move(usage);

    out["used_line_profiles"] = a.profiles;
    out["verdict"] = to_string(a.verdict.status);
    return out;
}

/// Serialized search report. Elapsed time is intentionally absent: fixed
/// seeds must produce byte-identical reports.
inline Json search_report_to_json(const SearchReport& r) {
    Json out;
    out["seed"] = r.config.seed;
    out["trials"] = r.config.trials;
    out["degree"] = r.config.degree;
    out["coordinate_bound"] = r.config.coordinate_bound;
    out["family_mix"] = {{"random", r.config.mix.random_sets},
                         {"perturbed_lattice", r.config.mix.perturbed_lattices},
                         {"line_arrangement", r.config.mix.line_arrangements}};
    out["generated"] = r.generated;
    out["non_poised"] = r.non_poised;
    out["poised_non_gc"] = r.poised_non_gc;
    out["gc_with_maximal_line"] = r.gc_with_maximal_line;
    out["counterexamples"] = r.counterexamples;
    Json hits = Json::array();
    for (const auto& [trial, set] : r.counterexample_sets) {
        Json entry;
        entry["trial"] = trial;
        entry["degree"] = set.degree();
        entry["nodes"] = nodes_to_json(set);
        hits.push_back(std::move(entry));
    }
    out["counterexample_sets"] = std::move(hits);
    return out;
}

} // namespace gcn
