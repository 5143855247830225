// Command-line front end for the sparse-dense graph library. Every
// subcommand emits a deterministic, self-describing record stream; with
// --json the records are JSON objects, one per line, versioned through the
// leading run record. A not-in-class or infeasible outcome is a successful
// run (exit 0); only unusable input or usage mistakes exit nonzero.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sdg/applications.hpp"
#include "sdg/graph.hpp"
#include "sdg/graph_io.hpp"
#include "sdg/independent_sets.hpp"
#include "sdg/oracle.hpp"
#include "sdg/partition.hpp"
#include "sdg/recognizers.hpp"

namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string fnv1a_digest(const std::string& bytes) {
    std::uint64_t hash = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    char out[17];
    std::snprintf(out, sizeof(out), "%016llx", static_cast<unsigned long long>(hash));
    return out;
}

int default_threads() {
    if (const char* env = std::getenv("SDG_THREADS")) {
        const int value = std::atoi(env);
        if (value > 0) return value;
    }
    return 1;
}

json to_json(const sdg::VertexSet& s) { return json(s.to_vector()); }

json to_json(const sdg::SparseDensePartition& p) {
    return json{{"S", p.sparse_side.to_vector()}, {"D", p.dense_side.to_vector()}};
}

// One record stream per run: json mode prints one JSON object per line on
// stdout and a short human summary on stderr; plain mode prints the human
// lines on stdout. Timing goes into a trailing record of its own so output
// comparisons can drop it.
class Emitter {
public:
    Emitter(bool as_json, std::string command_echo)
        : json_(as_json), start_(std::chrono::steady_clock::now()) {
        run_record_["schema_version"] = kSchemaVersion;
        run_record_["type"] = "run";
        run_record_["command"] = std::move(command_echo);
    }

    json& run_record() { return run_record_; }

    void open() {
        if (json_) std::cout << run_record_.dump() << '\n';
    }

    void record(const json& payload, const std::string& plain) {
        if (json_)
            std::cout << payload.dump() << '\n';
        else
            std::cout << plain << '\n';
    }

    void close(const std::string& summary) {
        const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - start_)
                                 .count();
        if (json_) {
            std::cout << json{{"type", "timing"}, {"total_ms", elapsed}}.dump() << '\n';
            std::cerr << summary << " (" << elapsed << " ms)\n";
        }
    }

private:
    bool json_;
    json run_record_;
    std::chrono::steady_clock::time_point start_;
};

struct GraphInput {
    sdg::Graph graph;
    std::string digest;
};

GraphInput load_graph(const std::string& path, const std::string& format) {
    const std::string text = read_file(path);
    GraphInput in;
    in.digest = fnv1a_digest(text);
    in.graph = format == "dimacs" ? sdg::parse_dimacs(text) : sdg::parse_edge_list(text);
    return in;
}

std::string join_args(int argc, char** argv) {
    std::string out;
    for (int i = 1; i < argc; ++i) {
        if (i > 1) out += ' ';
        out += argv[i];
    }
    return out;
}

struct CommonOptions {
    std::string input;
    std::string format = "edge-list";
    std::string spec_text = "1,1";
    bool as_json = false;
};

void add_input_options(CLI::App* cmd, CommonOptions& opts, bool with_spec = true) {
    cmd->add_option("--input", opts.input, "input graph file")->required();
    cmd->add_option("--format", opts.format, "input format")
        ->check(CLI::IsMember({"edge-list", "dimacs"}))
        ->capture_default_str();
    if (with_spec)
        cmd->add_option("--spec", opts.spec_text,
                        "class pair: \"1,L\" (independent + bounded-independence) or \"2,L\" "
                        "(bipartite + bounded-independence)")
            ->capture_default_str();
    cmd->add_flag("--json", opts.as_json, "emit JSON records on stdout");
}

void fill_run_record(Emitter& emitter, const CommonOptions& opts, const GraphInput& in) {
    emitter.run_record()["input"] = opts.input;
    emitter.run_record()["input_digest"] = in.digest;
    emitter.run_record()["format"] = opts.format;
    emitter.run_record()["spec"] = opts.spec_text;
    emitter.run_record()["n"] = in.graph.order();
    emitter.run_record()["m"] = in.graph.edge_count();
}

int run_partition(const CommonOptions& opts, bool first_only, const std::string& echo) {
    const GraphInput in = load_graph(opts.input, opts.format);
    const auto spec = sdg::ClassSpec::parse(opts.spec_text);
    Emitter emitter(opts.as_json, echo);
    fill_run_record(emitter, opts, in);
    emitter.open();

    const auto result = enumerate_partitions(in.graph, spec);
    const std::size_t emit_count =
        first_only ? std::min<std::size_t>(1, result.partitions.size()) : result.partitions.size();
    for (std::size_t i = 0; i < emit_count; ++i) {
        json record = to_json(result.partitions[i]);
        record["type"] = "partition";
        record["index"] = i;
        emitter.record(record, "S=" + result.partitions[i].sparse_side.to_string() +
                                   " D=" + result.partitions[i].dense_side.to_string());
    }

    json warnings = json::array();
    for (int i : result.bound_warnings)
        warnings.push_back("prefix " + std::to_string(i) + " exceeded the partition-count bound");
    json summary{{"type", "summary"},
                 {"status", result.partitions.empty() ? "none" : "ok"},
                 {"count", emit_count},
                 {"total", result.partitions.size()},
                 {"prefix_counts", result.prefix_counts},
                 {"bound_warnings", result.bound_warnings},
                 {"warnings", warnings}};
    emitter.record(summary, result.partitions.empty()
                                ? "none"
                                : "count " + std::to_string(result.partitions.size()) +
                                      ", warnings " + std::to_string(warnings.size()));
    emitter.close("partition: " + std::to_string(result.partitions.size()) + " partitions");
    return 0;
}

int run_enum_mis(const CommonOptions& opts, int threads, const std::string& echo) {
    const GraphInput in = load_graph(opts.input, opts.format);
    const auto spec = sdg::ClassSpec::parse(opts.spec_text);
    Emitter emitter(opts.as_json, echo);
    fill_run_record(emitter, opts, in);
    emitter.run_record()["threads"] = threads;
    emitter.open();

    const auto collection = enumerate_maximal_is(in.graph, spec, threads);
    if (!collection) {
        emitter.record(json{{"type", "summary"}, {"status", "not_in_class"}}, "not in class");
        emitter.close("enum-mis: not in class");
        return 0;
    }
    // the collection serializes count-first, then one ascending array per set
    emitter.record(json{{"type", "summary"},
                        {"status", "ok"},
                        {"count", collection->sets.size()},
                        {"partition", to_json(collection->source_partition)}},
                   "count " + std::to_string(collection->sets.size()));
    for (std::size_t i = 0; i < collection->sets.size(); ++i)
        emitter.record(json{{"type", "mis"}, {"index", i}, {"set", to_json(collection->sets[i])}},
                       collection->sets[i].to_string());
    emitter.close("enum-mis: " + std::to_string(collection->sets.size()) + " sets");
    return 0;
}

int run_max_is(const CommonOptions& opts, const std::string& echo) {
    const GraphInput in = load_graph(opts.input, opts.format);
    const auto spec = sdg::ClassSpec::parse(opts.spec_text);
    Emitter emitter(opts.as_json, echo);
    fill_run_record(emitter, opts, in);
    emitter.open();

    const auto result = max_is(in.graph, spec);
    if (!result) {
        emitter.record(json{{"type", "summary"}, {"status", "not_in_class"}}, "not in class");
        emitter.close("max-is: not in class");
        return 0;
    }
    emitter.record(json{{"type", "summary"},
                        {"status", "ok"},
                        {"size", result->set.size()},
                        {"set", to_json(result->set)},
                        {"from_dense", to_json(result->from_dense)},
                        {"partition", to_json(result->partition)}},
                   "size " + std::to_string(result->set.size()) + " set " +
                       result->set.to_string());
    emitter.close("max-is: size " + std::to_string(result->set.size()));
    return 0;
}

int run_well_covered(const CommonOptions& opts, const std::string& echo) {
    const GraphInput in = load_graph(opts.input, opts.format);
    const auto spec = sdg::ClassSpec::parse(opts.spec_text);
    Emitter emitter(opts.as_json, echo);
    fill_run_record(emitter, opts, in);
    emitter.open();

    const auto verdict = is_well_covered(in.graph, spec);
    switch (verdict.status) {
        case sdg::WellCoveredStatus::not_in_class:
            emitter.record(json{{"type", "summary"}, {"status", "not_in_class"}}, "not in class");
            break;
        case sdg::WellCoveredStatus::well_covered:
            emitter.record(json{{"type", "summary"},
                                {"status", "well_covered"},
                                {"size", verdict.common_size}},
                           "well covered, size " + std::to_string(verdict.common_size));
            break;
        case sdg::WellCoveredStatus::not_well_covered:
            emitter.record(
                json{{"type", "summary"},
                     {"status", "not_well_covered"},
                     {"witness", json::array({to_json(verdict.witness_pair->first),
                                              to_json(verdict.witness_pair->second)})},
                     {"witness_sizes",
                      json::array({verdict.witness_pair->first.size(),
                                   verdict.witness_pair->second.size()})}},
                "not well covered: " + verdict.witness_pair->first.to_string() + " vs " +
                    verdict.witness_pair->second.to_string());
            break;
    }
    emitter.close("well-covered: done");
    return 0;
}

int run_conflict(const CommonOptions& opts, const std::string& problem, int source, int target,
                 const std::string& echo) {
    const std::string text = read_file(opts.input);
    const auto inst = sdg::parse_conflict_instance(text);
    const auto spec = sdg::ClassSpec::parse(opts.spec_text);
    Emitter emitter(opts.as_json, echo);
    emitter.run_record()["input"] = opts.input;
    emitter.run_record()["input_digest"] = fnv1a_digest(text);
    emitter.run_record()["spec"] = opts.spec_text;
    emitter.run_record()["problem"] = problem;
    emitter.run_record()["n"] = inst.base.graph.order();
    emitter.run_record()["m"] = static_cast<int>(inst.base.edge_list.size());
    emitter.run_record()["conflicts"] = inst.conflict_graph.edge_count();
    emitter.open();

    const sdg::ConflictResult result =
        problem == "mst" ? conflict_free_mst(inst, spec)
                         : conflict_free_shortest_path(inst, source, target, spec);
    switch (result.status) {
        case sdg::ConflictStatus::not_in_class:
            emitter.record(json{{"type", "summary"}, {"status", "not_in_class"}}, "not in class");
            break;
        case sdg::ConflictStatus::infeasible:
            emitter.record(json{{"type", "summary"}, {"status", "infeasible"}}, "infeasible");
            break;
        case sdg::ConflictStatus::feasible: {
            const auto& sol = *result.solution;
            json endpoint_pairs = json::array();
            for (int e : sol.chosen_edges) {
                const auto& [u, v] = inst.base.edge_list[static_cast<std::size_t>(e)];
                endpoint_pairs.push_back(json::array({u, v}));
            }
            std::ostringstream plain;
            plain << "objective " << sol.objective << " edges";
            for (int e : sol.chosen_edges) plain << ' ' << e;
            emitter.record(json{{"type", "summary"},
                                {"status", "ok"},
                                {"objective", sol.objective},
                                {"edge_indices", sol.chosen_edges},
                                {"edges", endpoint_pairs},
                                {"certificate", to_json(sol.certificate)}},
                           plain.str());
            break;
        }
    }
    emitter.close("conflict " + problem + ": done");
    return 0;
}

int run_gen(int k, int l, const std::vector<int>& sizes, double p, std::uint64_t seed,
            const std::string& output, const std::string& format, bool as_json,
            const std::string& echo) {
    const auto made = sdg::generate_kl_graph(k, l, sizes, p, seed);
    const std::string text =
        format == "dimacs" ? sdg::to_dimacs(made.graph) : sdg::to_edge_list(made.graph);
    std::ofstream out(output, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + output);
    out << text;
    out.close();

    Emitter emitter(as_json, echo);
    emitter.run_record()["seed"] = seed;
    emitter.run_record()["format"] = format;
    emitter.open();
    json parts = json::array();
    for (const auto& part : made.parts) parts.push_back(to_json(part));
    emitter.record(json{{"type", "summary"},
                        {"status", "ok"},
                        {"path", output},
                        {"n", made.graph.order()},
                        {"m", made.graph.edge_count()},
                        {"digest", fnv1a_digest(text)},
                        {"planted_parts", parts}},
                   "wrote " + output + ": n=" + std::to_string(made.graph.order()) +
                       " m=" + std::to_string(made.graph.edge_count()));
    emitter.close("gen: wrote " + output);
    return 0;
}

int run_oracle(const std::string& which, const CommonOptions& opts, const std::string& echo) {
    const GraphInput in = load_graph(opts.input, opts.format);
    Emitter emitter(opts.as_json, echo);
    fill_run_record(emitter, opts, in);
    emitter.run_record()["oracle"] = which;
    emitter.open();

    if (which == "mis") {
        const auto sets = sdg::oracle::bron_kerbosch_mis(in.graph);
        emitter.record(json{{"type", "summary"}, {"status", "ok"}, {"count", sets.size()}},
                       "count " + std::to_string(sets.size()));
        for (std::size_t i = 0; i < sets.size(); ++i)
            emitter.record(json{{"type", "mis"}, {"index", i}, {"set", to_json(sets[i])}},
                           sets[i].to_string());
    } else if (which == "alpha") {
        const auto best = sdg::oracle::brute_force_max_is(in.graph);
        emitter.record(json{{"type", "summary"},
                            {"status", "ok"},
                            {"alpha", best.size()},
                            {"set", to_json(best)}},
                       "alpha " + std::to_string(best.size()));
    } else if (which == "partitions") {
        const auto spec = sdg::ClassSpec::parse(opts.spec_text);
        const auto parts = sdg::oracle::brute_force_partitions(in.graph, spec);
        for (std::size_t i = 0; i < parts.size(); ++i) {
            json record = to_json(parts[i]);
            record["type"] = "partition";
            record["index"] = i;
            emitter.record(record, "S=" + parts[i].sparse_side.to_string() +
                                       " D=" + parts[i].dense_side.to_string());
        }
        emitter.record(json{{"type", "summary"},
                            {"status", parts.empty() ? "none" : "ok"},
                            {"count", parts.size()}},
                       "count " + std::to_string(parts.size()));
    } else {  // well-covered
        const auto verdict = sdg::oracle::brute_force_well_covered(in.graph);
        const bool covered = verdict.status == sdg::WellCoveredStatus::well_covered;
        json summary{{"type", "summary"},
                     {"status", covered ? "well_covered" : "not_well_covered"}};
        if (covered) summary["size"] = verdict.common_size;
        emitter.record(summary, covered ? "well covered, size " +
                                              std::to_string(verdict.common_size)
                                        : "not well covered");
    }
    emitter.close("oracle " + which + ": done");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sparse-dense graph partitions, independent-set pipelines, and oracles"};
    app.require_subcommand(1);
    const std::string echo = join_args(argc, argv);

    CommonOptions partition_opts;
    bool first_only = false;
    auto* partition_cmd =
        app.add_subcommand("partition", "enumerate all sparse-dense partitions");
    add_input_options(partition_cmd, partition_opts);
    auto* all_flag = partition_cmd->add_flag("--all", "emit every partition (default)");
    partition_cmd->add_flag("--first", first_only, "emit only the canonically first partition")
        ->excludes(all_flag);

    CommonOptions enum_opts;
    int threads = default_threads();
    auto* enum_cmd =
        app.add_subcommand("enum-mis", "enumerate all maximal independent sets, or assert "
                                       "that the graph is outside the class pair");
    add_input_options(enum_cmd, enum_opts);
    enum_cmd->add_option("--threads", threads, "worker threads for the enumeration loop")
        ->check(CLI::PositiveNumber);

    CommonOptions max_opts;
    auto* max_cmd = app.add_subcommand("max-is", "compute a maximum independent set");
    add_input_options(max_cmd, max_opts);

    CommonOptions wc_opts;
    auto* wc_cmd = app.add_subcommand("well-covered",
                                      "decide whether all maximal independent sets share one size");
    add_input_options(wc_cmd, wc_opts);

    CommonOptions conflict_opts;
    std::string problem = "mst";
    int source = 0, target = 0;
    auto* conflict_cmd =
        app.add_subcommand("conflict", "solve a conflict-constrained problem on a weighted base");
    conflict_cmd->add_option("--input", conflict_opts.input, "conflict instance file")->required();
    conflict_cmd->add_option("--spec", conflict_opts.spec_text, "class pair for the conflict graph")
        ->capture_default_str();
    conflict_cmd->add_option("--problem", problem, "mst or path")
        ->check(CLI::IsMember({"mst", "path"}));
    conflict_cmd->add_option("--source", source, "path source vertex");
    conflict_cmd->add_option("--target", target, "path target vertex");
    conflict_cmd->add_flag("--json", conflict_opts.as_json, "emit JSON records on stdout");

    int gen_k = 1, gen_l = 1;
    std::vector<int> gen_sizes;
    double gen_p = 0.5;
    std::uint64_t gen_seed = 1;
    std::string gen_output, gen_format = "edge-list";
    bool gen_json = false;
    auto* gen_cmd = app.add_subcommand("gen", "generate a graph with a planted partition");
    gen_cmd->add_option("--k", gen_k, "number of independent parts")->capture_default_str();
    gen_cmd->add_option("--l", gen_l, "number of clique parts")->capture_default_str();
    gen_cmd->add_option("--sizes", gen_sizes, "comma-separated part sizes")
        ->required()
        ->delimiter(',');
    gen_cmd->add_option("--p", gen_p, "cross-part edge probability")->capture_default_str();
    gen_cmd->add_option("--seed", gen_seed, "generator seed")->capture_default_str();
    gen_cmd->add_option("--output", gen_output, "output path")->required();
    gen_cmd->add_option("--format", gen_format, "output format")
        ->check(CLI::IsMember({"edge-list", "dimacs"}))
        ->capture_default_str();
    gen_cmd->add_flag("--json", gen_json, "emit JSON records on stdout");

    CommonOptions oracle_opts;
    auto* oracle_cmd = app.add_subcommand("oracle", "exponential ground-truth cross-checks");
    oracle_cmd->require_subcommand(1);
    auto* oracle_mis = oracle_cmd->add_subcommand("mis", "all maximal independent sets");
    auto* oracle_alpha = oracle_cmd->add_subcommand("alpha", "maximum independent set size");
    auto* oracle_partitions =
        oracle_cmd->add_subcommand("partitions", "all sparse-dense partitions by subset sweep");
    auto* oracle_wc = oracle_cmd->add_subcommand("well-covered", "well-covered verdict");
    for (CLI::App* sub : {oracle_mis, oracle_alpha, oracle_partitions, oracle_wc})
        add_input_options(sub, oracle_opts, sub == oracle_partitions);

    CLI11_PARSE(app, argc, argv);

    try {
        if (partition_cmd->parsed()) return run_partition(partition_opts, first_only, echo);
        if (enum_cmd->parsed()) return run_enum_mis(enum_opts, threads, echo);
        if (max_cmd->parsed()) return run_max_is(max_opts, echo);
        if (wc_cmd->parsed()) return run_well_covered(wc_opts, echo);
        if (conflict_cmd->parsed()) {
            if (problem == "path" &&
                (conflict_cmd->count("--source") == 0 || conflict_cmd->count("--target") == 0))
                throw std::runtime_error("--problem path needs --source and --target");
            return run_conflict(conflict_opts, problem, source, target, echo);
        }
        if (gen_cmd->parsed())
            return run_gen(gen_k, gen_l, gen_sizes, gen_p, gen_seed, gen_output, gen_format,
                           gen_json, echo);
        if (oracle_cmd->parsed()) {
            if (oracle_mis->parsed()) return run_oracle("mis", oracle_opts, echo);
            if (oracle_alpha->parsed()) return run_oracle("alpha", oracle_opts, echo);
            if (oracle_partitions->parsed()) return run_oracle("partitions", oracle_opts, echo);
            return run_oracle("well-covered", oracle_opts, echo);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
