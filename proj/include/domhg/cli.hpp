#pragma once

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "completion.hpp"
#include "families.hpp"
#include "graph.hpp"
#include "hypergraph.hpp"
#include "io.hpp"
#include "recognition.hpp"
#include "verify.hpp"

namespace domhg::cli {

namespace detail {

using io::Json;

struct Options {
    std::vector<std::string> files;
    bool json = false;
    bool minimize_input = false;
    bool table = false;
    bool count_only = false;
    bool skip_checks = false;
    std::optional<int> r;
    std::string ground;
    std::optional<int> n;
    std::optional<unsigned> workers;
    std::optional<int> cap;
    std::optional<std::uint64_t> budget;
    std::string method = "search";

    RunOptions run() const {
        RunOptions o;
        o.workers = workers.value_or(default_workers());
        o.cap = cap;
        o.check_realizations = !skip_checks;
        if (budget) o.search_budget = *budget;
        return o;
    }
};

class Session {
public:
    Session(const Options& opt, std::istream& in, std::ostream& out) : opt_(opt), in_(in), out_(out) {}

    void dispatch(const std::string& command) {
        if (command == "domsets") return graph_to_hypergraph(minimal_dominating_sets);
        if (command == "neighborhoods") return graph_to_hypergraph(minimal_closed_neighborhoods);
        if (command == "transversal") return transversal_cmd();
        if (command == "meet") return meet_cmd();
        if (command == "leq") return leq_cmd();
        if (command == "recognize") return recognize_cmd();
        if (command == "uniform-check") return uniform_check_cmd();
        if (command == "completions") return completions_cmd();
        if (command == "minimal-completions") return minimal_completions_cmd();
        if (command == "decompose") return decompose_cmd();
        if (command == "star-forests") return star_forests_cmd();
        if (command == "expand-realizations") return expand_cmd();
        fail(ErrorKind::ParseError, "unknown command '" + command + "'");
    }

private:
    std::vector<std::string> documents() {
        std::string text;
        if (opt_.files.empty()) {
            text.assign(std::istreambuf_iterator<char>(in_), std::istreambuf_iterator<char>());
        } else {
            for (const auto& path : opt_.files) {
                std::ifstream file(path);
                if (!file) fail(ErrorKind::ParseError, "cannot read '" + path + "'");
                text.append(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
                text += "\n---\n";
            }
        }
        return io::split_documents(text);
    }

    std::string single_document() {
        auto docs = documents();
        if (docs.size() != 1) fail(ErrorKind::ParseError, "expected one document, got " + std::to_string(docs.size()));
        return docs.front();
    }

    std::vector<Hypergraph> hypergraphs() {
        std::vector<Hypergraph> out;
        for (const auto& d : documents()) out.push_back(io::parse_hypergraph(d, opt_.minimize_input));
        if (out.empty()) fail(ErrorKind::ParseError, "no input");
        return out;
    }

    GroundSet uniform_ground() const {
        if (!opt_.ground.empty()) {
            std::vector<std::string> labels;
            std::stringstream ss(opt_.ground);
            for (std::string l; std::getline(ss, l, ',');) labels.push_back(io::detail::trim(l));
            return GroundSet(std::move(labels));
        }
        if (opt_.n) return GroundSet::range(*opt_.n);
        fail(ErrorKind::ParseError, "this command needs --ground or --n");
    }

    int rank() const {
        if (!opt_.r) fail(ErrorKind::ParseError, "this command needs --r");
        return *opt_.r;
    }

    void emit(const Json& j) { out_ << j.dump(2) << "\n"; }

    void graph_to_hypergraph(Hypergraph (*op)(const Graph&)) {
        const Hypergraph h = op(io::parse_graph(single_document()));
        if (opt_.json) return emit(io::to_json(h));
        out_ << io::format_hypergraph(h);
    }

    void transversal_cmd() {
        const Hypergraph h = transversal(io::parse_hypergraph(single_document(), opt_.minimize_input));
        if (opt_.json) return emit(io::to_json(h));
        out_ << io::format_hypergraph(h);
    }

    void meet_cmd() {
        const Hypergraph m = meet(hypergraphs());
        if (opt_.json) return emit(io::to_json(m));
        out_ << io::format_hypergraph(m);
    }

    void leq_cmd() {
        const auto hs = hypergraphs();
        if (hs.size() != 2) fail(ErrorKind::ParseError, "leq needs exactly two hypergraphs");
        const bool v = is_leq(hs[0], hs[1]);
        if (opt_.json) return emit(Json{{"leq", v}});
        out_ << (v ? "true" : "false") << "\n";
    }

    void print_graphs(const std::vector<Graph>& graphs) {
        for (const auto& g : graphs) {
            const auto edges = io::format_edge_list(g);
            out_ << (edges.empty() ? "(no edges)" : edges) << "\n";
        }
    }

    void print_recognition(const RecognitionResult& r) {
        out_ << "domination: " << (r.is_domination ? "yes" : "no") << "\n";
        if (r.rejected_by_necessary_condition) out_ << "necessary condition: fails (more blocker sets than vertices)\n";
        out_ << "realizations: " << r.realizations.size() << "\n";
        print_graphs(r.realizations);
    }

    void recognize_cmd() {
        const Hypergraph h = io::parse_hypergraph(single_document(), opt_.minimize_input);
        RecognitionResult r;
        if (opt_.method == "search") r = recognize(h, opt_.run());
        else if (opt_.method == "sweep") r = recognize_by_sweep(h, opt_.run());
        else fail(ErrorKind::ParseError, "--method must be 'search' or 'sweep'");
        if (opt_.json) return emit(io::to_json(r));
        print_recognition(r);
    }

    void uniform_check_cmd() {
        const auto r = uniform_recognition(rank(), uniform_ground());
        if (opt_.json) return emit(io::to_json(r));
        print_recognition(r);
    }

    void completions_cmd() {
        const auto list = completions(rank(), uniform_ground(), opt_.run());
        if (opt_.json) {
            Json arr = Json::array();
            for (const auto& c : list) arr.push_back(Json{{"hypergraph", io::to_json(c.hypergraph)}, {"witness", io::to_json(c.witness)}});
            return emit(Json{{"completions", std::move(arr)}});
        }
        out_ << "# completions: " << list.size() << "\n";
        for (std::size_t i = 0; i < list.size(); ++i) {
            if (i) out_ << "---\n";
            out_ << "# witness: " << io::format_edge_list(list[i].witness) << "\n" << io::format_hypergraph(list[i].hypergraph);
        }
    }

    void minimal_completions_cmd() {
        const int r = rank();
        const GroundSet ground = uniform_ground();
        if (opt_.table) return table_row(r, ground);
        const auto list = minimal_completions(r, ground, opt_.run());
        if (opt_.json) {
            Json arr = Json::array();
            for (const auto& m : list) {
                Json ws = Json::array();
                for (const auto& w : m.witnesses) ws.push_back(io::to_json(w));
                arr.push_back(Json{{"hypergraph", io::to_json(m.hypergraph)}, {"witnesses", std::move(ws)}});
            }
            return emit(Json{{"minimal_completions", std::move(arr)}});
        }
        out_ << "# minimal completions: " << list.size() << "\n";
        for (std::size_t i = 0; i < list.size(); ++i) {
            if (i) out_ << "---\n";
            for (const auto& w : list[i].witnesses) out_ << "# witness: " << io::format_edge_list(w) << "\n";
            out_ << io::format_hypergraph(list[i].hypergraph);
        }
    }

    // One row: n, r, number of minimal completions, decomposition parameter and
    // the isomorphism classes of their sparsest realizations.
    void table_row(int r, const GroundSet& ground) {
        const auto report = completion_report(r, ground, opt_.run());
        const auto shapes = realization_shapes(report.minimal_completions);
        if (opt_.json) {
            Json arr = Json::array();
            for (const auto& s : shapes) {
                Json edges = Json::array();
                for (auto [x, y] : s.representative) edges.push_back(Json::array({ground.label(x), ground.label(y)}));
                arr.push_back(Json{{"representative", std::move(edges)}, {"count", s.count}});
            }
            return emit(Json{{"n", ground.size()}, {"r", r}, {"s", report.minimal_completions.size()},
                             {"decomposition_parameter", report.decomposition_parameter}, {"shapes", std::move(arr)}});
        }
        out_ << "n=" << ground.size() << " r=" << r << " s=" << report.minimal_completions.size()
             << " D=" << report.decomposition_parameter << " shapes:";
        for (const auto& s : shapes) {
            const auto g = Graph::from_edges(ground, s.representative);
            const auto edges = io::format_edge_list(g);
            out_ << " [" << edges << "]x" << s.count;
        }
        out_ << "\n";
    }

    void decompose_cmd() {
        const int r = rank();
        const GroundSet ground = uniform_ground();
        const auto d = decomposition_parameter(r, ground, opt_.run());
        const char* source = d.source == DecompositionSource::Sweep ? "sweep" : "closed-form";
        if (opt_.json) {
            Json witness = Json::array();
            for (const auto& h : d.witness) witness.push_back(io::to_json(h));
            Json j{{"decomposition_parameter", d.value}, {"source", source}, {"witness", std::move(witness)}};
            if (d.star_upper_bound) {
                Json stars = Json::array();
                for (const auto& h : *d.star_upper_bound) stars.push_back(io::to_json(h));
                j["star_upper_bound"] = std::move(stars);
            }
            return emit(j);
        }
        out_ << "# decomposition parameter: " << d.value << "\n# source: " << source << "\n";
        if (d.source == DecompositionSource::ClosedForm)
            out_ << "# the witness is verified; minimality assumes the closed-form completion family\n";
        if (d.star_upper_bound) out_ << "# star upper bound: " << d.star_upper_bound->size() << " members\n";
        for (std::size_t i = 0; i < d.witness.size(); ++i) {
            if (i) out_ << "---\n";
            out_ << io::format_hypergraph(d.witness[i]);
        }
    }

    void star_forests_cmd() {
        const auto forests = star_forests(uniform_ground());
        if (opt_.json) {
            Json arr = Json::array();
            if (!opt_.count_only)
                for (const auto& f : forests) arr.push_back(io::to_json(f));
            Json j{{"count", forests.size()}};
            if (!opt_.count_only) j["graphs"] = std::move(arr);
            return emit(j);
        }
        out_ << "# star forests: " << forests.size() << "\n";
        if (!opt_.count_only) print_graphs(forests);
    }

    void expand_cmd() {
        const auto graphs = realization_expansion(io::parse_graph(single_document()), opt_.run());
        if (opt_.json) {
            Json arr = Json::array();
            for (const auto& g : graphs) arr.push_back(io::to_json(g));
            return emit(Json{{"count", graphs.size()}, {"realizations", std::move(arr)}});
        }
        out_ << "# realizations: " << graphs.size() << "\n";
        print_graphs(graphs);
    }

    const Options& opt_;
    std::istream& in_;
    std::ostream& out_;
};

inline const std::vector<std::pair<std::string, std::string>>& commands() {
    static const std::vector<std::pair<std::string, std::string>> list{
        {"domsets", "minimal dominating sets of a graph"},
        {"neighborhoods", "minimal closed neighborhoods of a graph"},
        {"transversal", "transversal (blocker) of a hypergraph"},
        {"meet", "meet of one or more hypergraphs"},
        {"leq", "whether the first hypergraph is below the second"},
        {"recognize", "decide whether a hypergraph is a domination hypergraph and list its realizations"},
        {"uniform-check", "closed-form recognition of the uniform hypergraph of rank --r"},
        {"completions", "domination hypergraphs above the uniform hypergraph of rank --r"},
        {"minimal-completions", "minimal completions with all realizations (--table for a summary row)"},
        {"decompose", "decomposition parameter of the uniform hypergraph of rank --r"},
        {"star-forests", "all spanning star forests on the ground set"},
        {"expand-realizations", "all graphs with the same minimal dominating sets as a star forest"},
        {"verify", "run the acceptance suite"},
    };
    return list;
}

}  // namespace detail

/// Runs one command; returns the process exit code (0 ok, 1 domain error, 2 parse or usage error).
inline int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
    detail::Options opt;
    CLI::App app{"Domination hypergraphs: recognition, completions and decompositions", "domhg"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    app.add_flag("--json", opt.json, "JSON output");
    app.add_flag("--minimize", opt.minimize_input, "minimize input families instead of rejecting non-antichains");
    app.add_flag("--table", opt.table, "summary row (minimal-completions)");
    app.add_flag("--count", opt.count_only, "print only the count (star-forests)");
    app.add_flag("--no-check", opt.skip_checks, "skip re-checking emitted realizations");
    app.add_option("--r", opt.r, "rank of the uniform hypergraph")->check(CLI::PositiveNumber);
    app.add_option("--ground", opt.ground, "comma-separated ground labels");
    app.add_option("--n", opt.n, "ground set 1..n")->check(CLI::Range(1, kMaxGround));
    app.add_option("--workers", opt.workers, "worker threads (default: hardware concurrency)")->check(CLI::PositiveNumber);
    app.add_option("--cap", opt.cap, "override the enumeration size cap")->check(CLI::PositiveNumber);
    app.add_option("--budget", opt.budget, "decomposition search budget per subset size");
    app.add_option("--method", opt.method, "recognition method: search or sweep");
    for (const auto& [name, help] : detail::commands()) {
        auto* sub = app.add_subcommand(name, help);
        if (name != "verify") sub->add_option("files", opt.files, "input files (default: standard input)");
    }

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        if (command == "verify") {
            const auto checks = verify::run_verification(opt.workers.value_or(default_workers()));
            if (opt.json) {
                io::Json arr = io::Json::array();
                for (const auto& c : checks)
                    arr.push_back(io::Json{{"id", c.id}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
                out << io::Json{{"passed", verify::all_passed(checks)}, {"checks", std::move(arr)}}.dump(2) << "\n";
            } else {
                out << verify::render(checks);
            }
            return verify::all_passed(checks) ? 0 : 1;
        }
        detail::Session(opt, in, out).dispatch(command);
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return is_parse_error(e.kind()) ? 2 : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace domhg::cli
