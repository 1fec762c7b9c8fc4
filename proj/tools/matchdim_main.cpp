// matchdim: exact matching/independence invariants of simple graphs and the
// parameterized families realizing every feasible (a,b,c,d) profile.
//
// Exit codes: 0 success, 1 verification or property failure, 2 input error.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "matchdim/constructions.hpp"
#include "matchdim/graph.hpp"
#include "matchdim/invariants.hpp"
#include "matchdim/io.hpp"
#include "matchdim/oracle.hpp"
#include "matchdim/verifier.hpp"

namespace {

using nlohmann::json;
using namespace matchdim;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitInputError = 2;

int oracle_cap_from_env() {
    const char* raw = std::getenv("MATCHDIM_ORACLE_CAP");
    if (raw == nullptr) return kDefaultOracleCap;
    try {
        size_t consumed = 0;
        int cap = std::stoi(raw, &consumed);
        if (consumed != std::string(raw).size() || cap < 1)
            throw std::invalid_argument(raw);
        return cap;
    } catch (const std::exception&) {
        throw std::runtime_error(
            "MATCHDIM_ORACLE_CAP must be a positive integer, got '" +
            std::string(raw) + "'");
    }
}

// Serialized graph goes to the out path when given, otherwise to stdout with
// the human-readable note diverted to stderr so machine output stays clean.
void emit_graph(const Graph& g, const std::string& format_name,
                const std::string& out_path, const std::string& note) {
    const std::string text = serialize(g, parse_format(format_name));
    if (out_path.empty()) {
        std::cout << text;
        if (!note.empty()) std::cerr << note << "\n";
    } else {
        write_text_file(out_path, text);
        if (!note.empty()) std::cout << note << "\n";
    }
}

json profile_json(const InvariantProfile& p) {
    return json::array({p.ind_match, p.min_match, p.match, p.dim});
}

int cmd_construct(int a, int b, int c, int d, const std::string& format,
                  const std::string& out_path) {
    Graph g = construct(a, b, c, d);  // throws with the violated inequality
    const CaseTag tag = dispatch_case(a, b, c, d);
    const std::string note = "case " + std::string(to_string(tag)) +
                             ": n=" + std::to_string(g.order()) +
                             " m=" + std::to_string(g.edge_count());
    emit_graph(g, format, out_path, note);
    return kExitOk;
}

int cmd_invariants(const std::string& in_path, bool with_oracle) {
    const Graph g = load_graph_file(in_path);
    const InvariantProfile p = invariant_profile(g);
    json out;
    out["ind_match"] = p.ind_match;
    out["min_match"] = p.min_match;
    out["match"] = p.match;
    out["dim"] = p.dim;
    out["connected"] = g.connected();
    bool agrees = true;
    if (with_oracle) {
        const InvariantProfile reference = oracle_profile(g, oracle_cap_from_env());
        agrees = reference == p;
        out["oracle_agrees"] = agrees;
        if (!agrees) out["oracle"] = profile_json(reference);
    }
    std::cout << out.dump() << "\n";
    return agrees ? kExitOk : kExitFailure;
}

int cmd_verify(int max_b, int d_slack, int jobs) {
    const auto reports = sweep_theorem(max_b, d_slack, jobs);
    int failed = 0;
    double total_elapsed = 0.0;
    for (const auto& r : reports) {
        json line;
        line["tuple"] = json::array({r.a, r.b, r.c, r.d});
        line["case"] = to_string(r.case_tag);
        line["expected"] = profile_json(r.expected);
        line["computed"] = profile_json(r.computed);
        line["connected"] = r.connected;
        line["witness_sizes"] =
            json::array({r.maximal_witness_size, r.maximum_witness_size});
        line["passed"] = r.passed;
        std::cout << line.dump() << "\n";
        if (!r.passed) ++failed;
        total_elapsed += r.elapsed_seconds;
    }
    json summary;
    summary["tuples"] = reports.size();
    summary["passed"] = reports.size() - failed;
    summary["failed"] = failed;
    std::cout << summary.dump() << "\n";
    std::cerr << "verify: " << reports.size() << " tuples, " << failed
              << " failed, " << total_elapsed << "s solver time\n";
    return failed == 0 ? kExitOk : kExitFailure;
}

int cmd_suspend(const std::string& in_path, const std::string& set_csv,
                const std::string& format, const std::string& out_path) {
    const Graph g = load_graph_file(in_path);
    VertexSet s;
    std::string token;
    std::istringstream csv(set_csv);
    while (std::getline(csv, token, ',')) {
        if (token.empty()) continue;
        size_t consumed = 0;
        int v = std::stoi(token, &consumed);
        if (consumed != token.size())
            throw std::runtime_error("--set: '" + token +
                                     "' is not a vertex index");
        s.push_back(v);
    }
    const Graph suspended = s_suspension(g, s);
    const std::string note = "suspension: n=" +
                             std::to_string(suspended.order()) +
                             " m=" + std::to_string(suspended.edge_count());
    emit_graph(suspended, format, out_path, note);
    return kExitOk;
}

int cmd_lemmas(int corpus_size, uint64_t seed) {
    const auto results = run_lemma_suites(corpus_size, seed);
    bool all_passed = true;
    for (const auto& r : results) {
        json line;
        line["lemma"] = r.lemma;
        line["samples"] = r.samples;
        line["failures"] = r.failures;
        line["passed"] = r.passed();
        std::cout << line.dump() << "\n";
        all_passed = all_passed && r.passed();
    }
    return all_passed ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact matching numbers and edge-ideal dimension of simple graphs"};
    app.require_subcommand(1);

    int a = 1, b = 1, c = 1, d = 1;
    std::string format = "json";
    std::string out_path;
    auto* construct_cmd = app.add_subcommand(
        "construct", "build the graph realizing profile (a, b, c, d)");
    construct_cmd->add_option("a", a, "induced matching number")->required();
    construct_cmd->add_option("b", b, "minimum matching number")->required();
    construct_cmd->add_option("c", c, "matching number")->required();
    construct_cmd->add_option("d", d, "independence number")->required();
    construct_cmd->add_option("--format", format, "json, edgelist or dot")
        ->default_val("json");
    construct_cmd->add_option("--out", out_path, "output file (default stdout)");

    std::string in_path;
    bool with_oracle = false;
    auto* invariants_cmd = app.add_subcommand(
        "invariants", "compute the invariant profile of a graph file");
    invariants_cmd->add_option("input", in_path, "graph file (json or edge list)")
        ->required();
    invariants_cmd->add_flag("--oracle", with_oracle,
                             "cross-check against the exhaustive oracle");

    int max_b = 3, d_slack = 2, jobs = 0;
    auto* verify_cmd = app.add_subcommand(
        "verify", "sweep all feasible tuples and verify construct-then-solve");
    verify_cmd->add_option("--max-b", max_b, "largest b (and a) to sweep")
        ->default_val(3);
    verify_cmd->add_option("--d-slack", d_slack, "extra d values above the minimum")
        ->default_val(2);
    verify_cmd->add_option("--jobs", jobs, "worker threads (0 = all cores)")
        ->default_val(0);

    std::string set_csv;
    std::string suspend_in;
    std::string suspend_format = "json";
    std::string suspend_out;
    auto* suspend_cmd =
        app.add_subcommand("suspend", "apply an S-suspension to a graph file");
    suspend_cmd->add_option("input", suspend_in, "graph file")->required();
    suspend_cmd->add_option("--set", set_csv,
                            "comma-separated independent set (default empty)");
    suspend_cmd->add_option("--format", suspend_format, "json, edgelist or dot")
        ->default_val("json");
    suspend_cmd->add_option("--out", suspend_out, "output file (default stdout)");

    int corpus_size = 200;
    uint64_t seed = 42;
    auto* lemmas_cmd = app.add_subcommand(
        "lemmas", "run the lemma property suites over a seeded corpus");
    lemmas_cmd->add_option("--corpus-size", corpus_size, "samples per suite")
        ->default_val(200);
    lemmas_cmd->add_option("--seed", seed, "corpus seed")->default_val(42);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // prints help, exit 0
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    try {
        if (construct_cmd->parsed())
            return cmd_construct(a, b, c, d, format, out_path);
        if (invariants_cmd->parsed()) return cmd_invariants(in_path, with_oracle);
        if (verify_cmd->parsed()) return cmd_verify(max_b, d_slack, jobs);
        if (suspend_cmd->parsed())
            return cmd_suspend(suspend_in, set_csv, suspend_format, suspend_out);
        if (lemmas_cmd->parsed()) return cmd_lemmas(corpus_size, seed);
        std::cerr << "error: no subcommand\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}
