#pragma once

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "completion.hpp"
#include "graph.hpp"
#include "hypergraph.hpp"
#include "recognition.hpp"

namespace domhg::io {

using Json = nlohmann::ordered_json;

namespace detail {

inline std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

inline std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

[[noreturn]] inline void parse_fail(int line, const std::string& message) {
    fail(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + message);
}

struct Line {
    int number;
    std::string text;
};

// Non-blank, non-comment lines with their 1-based numbers.
inline std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> out;
    std::istringstream in{std::string(text)};
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        auto t = trim(raw);
        if (t.empty() || t.front() == '#') continue;
        out.push_back({number, std::move(t)});
    }
    return out;
}

inline GroundSet parse_ground_line(const Line& line) {
    constexpr std::string_view prefix = "ground:";
    if (line.text.rfind(prefix, 0) != 0) parse_fail(line.number, "expected 'ground: a,b,...'");
    auto labels = split(std::string_view(line.text).substr(prefix.size()), ',');
    for (const auto& l : labels)
        if (l.empty()) parse_fail(line.number, "empty label in ground set");
    return GroundSet(std::move(labels));
}

inline int label_index(const GroundSet& ground, const std::string& label, int line) {
    auto i = ground.find(label);
    if (!i) parse_fail(line, "unknown label '" + label + "'");
    return *i;
}

inline bool looks_like_json(std::string_view text) {
    const auto b = text.find_first_not_of(" \t\r\n");
    return b != std::string_view::npos && text[b] == '{';
}

inline std::string json_label(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return j.dump();
    fail(ErrorKind::ParseError, "labels must be strings or integers");
}

inline Json parse_json(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        fail(ErrorKind::ParseError, e.what());
    }
}

inline GroundSet json_ground(const Json& doc) {
    if (!doc.is_object() || !doc.contains("ground") || !doc["ground"].is_array())
        fail(ErrorKind::ParseError, "expected an object with a 'ground' array");
    std::vector<std::string> labels;
    for (const auto& l : doc["ground"]) labels.push_back(json_label(l));
    return GroundSet(std::move(labels));
}

inline const Json& json_edges(const Json& doc) {
    if (!doc.contains("edges") || !doc["edges"].is_array()) fail(ErrorKind::ParseError, "expected an 'edges' array");
    return doc["edges"];
}

}  // namespace detail

/// Splits a stream of documents separated by lines reading "---".
inline std::vector<std::string> split_documents(std::string_view text) {
    std::vector<std::string> docs(1);
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        if (detail::trim(raw) == "---") {
            docs.emplace_back();
            continue;
        }
        docs.back() += raw;
        docs.back() += '\n';
    }
    std::erase_if(docs, [](const std::string& d) { return detail::content_lines(d).empty(); });
    return docs;
}

/// Text or JSON hypergraph. Without `minimize_input` a family that is not an
/// antichain is rejected.
inline Hypergraph parse_hypergraph(std::string_view text, bool minimize_input = false) {
    std::vector<VertexSet> family;
    std::optional<GroundSet> ground;
    if (detail::looks_like_json(text)) {
        const Json doc = detail::parse_json(text);
        ground = detail::json_ground(doc);
        for (const auto& e : detail::json_edges(doc)) {
            if (!e.is_array()) fail(ErrorKind::ParseError, "each edge must be an array of labels");
            VertexSet s;
            for (const auto& l : e) {
                auto i = ground->find(detail::json_label(l));
                if (!i) fail(ErrorKind::ParseError, "unknown label '" + detail::json_label(l) + "'");
                s = s.with(*i);
            }
            family.push_back(s);
        }
    } else {
        const auto lines = detail::content_lines(text);
        if (lines.empty()) detail::parse_fail(1, "missing ground line");
        ground = detail::parse_ground_line(lines.front());
        for (std::size_t k = 1; k < lines.size(); ++k) {
            VertexSet s;
            for (const auto& label : detail::split(lines[k].text, ',')) {
                if (label.empty()) detail::parse_fail(lines[k].number, "empty label in edge");
                const int i = detail::label_index(*ground, label, lines[k].number);
                if (s.contains(i)) detail::parse_fail(lines[k].number, "label '" + label + "' repeated in edge");
                s = s.with(i);
            }
            family.push_back(s);
        }
    }
    return minimize_input ? minimize(std::move(family), *ground) : Hypergraph::from_antichain(*ground, std::move(family));
}

inline Graph parse_graph(std::string_view text) {
    std::optional<GroundSet> ground;
    std::vector<Edge> edges;
    auto add = [&](int x, int y, int line) {
        if (x == y) detail::parse_fail(line, "self-loop");
        edges.emplace_back(std::min(x, y), std::max(x, y));
    };
    if (detail::looks_like_json(text)) {
        const Json doc = detail::parse_json(text);
        ground = detail::json_ground(doc);
        for (const auto& e : detail::json_edges(doc)) {
            if (!e.is_array() || e.size() != 2) fail(ErrorKind::ParseError, "each edge must be a pair of labels");
            auto x = ground->find(detail::json_label(e[0])), y = ground->find(detail::json_label(e[1]));
            if (!x || !y) fail(ErrorKind::ParseError, "unknown label in edge");
            add(*x, *y, 0);
        }
    } else {
        const auto lines = detail::content_lines(text);
        if (lines.empty()) detail::parse_fail(1, "missing ground line");
        ground = detail::parse_ground_line(lines.front());
        for (std::size_t k = 1; k < lines.size(); ++k) {
            for (const auto& item : detail::split(lines[k].text, ',')) {
                const auto ends = detail::split(item, '-');
                if (ends.size() != 2) detail::parse_fail(lines[k].number, "expected an edge 'a-b'");
                add(detail::label_index(*ground, ends[0], lines[k].number),
                    detail::label_index(*ground, ends[1], lines[k].number), lines[k].number);
            }
        }
    }
    return Graph::from_edges(*ground, edges);
}

inline std::string join_labels(const GroundSet& ground, VertexSet s, std::string_view sep = ",") {
    std::string out;
    s.for_each([&](int i) {
        if (!out.empty()) out += sep;
        out += ground.label(i);
    });
    return out;
}

inline std::string format_ground(const GroundSet& ground) {
    return "ground: " + join_labels(ground, ground.full()) + "\n";
}

inline std::string format_hypergraph(const Hypergraph& h) {
    std::string out = format_ground(h.ground());
    for (auto e : h.edges()) out += join_labels(h.ground(), e) + "\n";
    return out;
}

inline std::string format_edge_list(const Graph& g) {
    std::string out;
    for (auto [x, y] : g.edges()) {
        if (!out.empty()) out += ",";
        out += g.ground().label(x) + "-" + g.ground().label(y);
    }
    return out;
}

inline std::string format_graph(const Graph& g) {
    std::string out = format_ground(g.ground());
    for (auto [x, y] : g.edges()) out += g.ground().label(x) + "-" + g.ground().label(y) + "\n";
    return out;
}

/// Hypergraph in set notation on one line, e.g. {{3},{1,2}}.
inline std::string brief(const Hypergraph& h) {
    std::string out = "{";
    for (std::size_t k = 0; k < h.size(); ++k) {
        if (k) out += ",";
        out += "{" + join_labels(h.ground(), h.edges()[k]) + "}";
    }
    return out + "}";
}

inline Json to_json(const GroundSet& ground) { return Json(ground.labels()); }

inline Json to_json(const Hypergraph& h) {
    Json edges = Json::array();
    for (auto e : h.edges()) {
        Json edge = Json::array();
        e.for_each([&](int i) { edge.push_back(h.ground().label(i)); });
        edges.push_back(std::move(edge));
    }
    return Json{{"ground", to_json(h.ground())}, {"edges", std::move(edges)}};
}

inline Json to_json(const Graph& g) {
    Json edges = Json::array();
    for (auto [x, y] : g.edges()) edges.push_back(Json::array({g.ground().label(x), g.ground().label(y)}));
    return Json{{"ground", to_json(g.ground())}, {"edges", std::move(edges)}};
}

inline Json to_json(const RecognitionResult& r) {
    Json realizations = Json::array();
    for (const auto& g : r.realizations) realizations.push_back(to_json(g));
    return Json{{"is_domination", r.is_domination},
                {"rejected_by_necessary_condition", r.rejected_by_necessary_condition},
                {"realizations", std::move(realizations)}};
}

inline Json to_json(const CompletionReport& report) {
    Json completions = Json::array(), minimal = Json::array(), witness = Json::array();
    for (const auto& c : report.completions)
        completions.push_back(Json{{"hypergraph", to_json(c.hypergraph)}, {"witness", to_json(c.witness)}});
    for (const auto& m : report.minimal_completions) {
        Json ws = Json::array();
        for (const auto& w : m.witnesses) ws.push_back(to_json(w));
        minimal.push_back(Json{{"hypergraph", to_json(m.hypergraph)}, {"witnesses", std::move(ws)}});
    }
    for (const auto& h : report.decomposition_witness) witness.push_back(to_json(h));
    return Json{{"r", report.r},
                {"ground", to_json(report.ground)},
                {"completions", std::move(completions)},
                {"minimal_completions", std::move(minimal)},
                {"decomposition_parameter", report.decomposition_parameter},
                {"decomposition_witness", std::move(witness)}};
}

}  // namespace domhg::io
