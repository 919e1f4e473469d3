#include "turanlab/cli.hpp"

#include "turanlab/construction.hpp"
#include "turanlab/counting.hpp"
#include "turanlab/error.hpp"
#include "turanlab/formulas.hpp"
#include "turanlab/graph6.hpp"
#include "turanlab/oracle.hpp"
#include "turanlab/pattern.hpp"
#include "turanlab/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <thread>

namespace turanlab {

namespace {

int default_threads() {
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

// --graph accepts either "g6:<graph6>" or a construction spec
Graph parse_host(const std::string& text) {
    if (text.rfind("g6:", 0) == 0) return graph6_decode(text.substr(3));
    return ConstructionSpec::parse(text).build();
}

void write_file_or_die(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ArgumentError("cannot open output file: " + path);
    f << content;
    if (!f) throw ArgumentError("failed writing output file: " + path);
}

int require_value(const std::optional<int>& v, const char* flag) {
    if (!v) throw ArgumentError(std::string("missing required flag ") + flag);
    return *v;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact workbench for double-star Turán-type counting problems"};
    app.require_subcommand(1);

    int threads = default_threads();
    app.add_option("--threads", threads, "worker threads (affects wall time only, never values)");
    // let --threads appear after the subcommand name as well
    app.fallthrough();

    // count / contains
    std::string graph_text, pattern_text;
    auto* count_cmd = app.add_subcommand("count", "count copies of a pattern in a host graph");
    count_cmd->add_option("--graph", graph_text, "host: g6:<graph6> or a construction spec")
        ->required();
    count_cmd->add_option("--pattern", pattern_text, "pattern to count")->required();

    auto* contains_cmd = app.add_subcommand("contains", "test whether a host contains a pattern");
    contains_cmd->add_option("--graph", graph_text, "host: g6:<graph6> or a construction spec")
        ->required();
    contains_cmd->add_option("--pattern", pattern_text, "pattern to look for")->required();

    // construct
    std::string spec_text, construct_format = "g6";
    auto* construct_cmd = app.add_subcommand("construct", "build a named construction");
    construct_cmd->add_option("--spec", spec_text, "construction spec, e.g. kbipartite:3,4")
        ->required();
    construct_cmd->add_option("--format", construct_format, "g6 (default) or json")
        ->check(CLI::IsMember({"g6", "json"}));

    // formula
    std::string formula_kind;
    std::optional<int> fa, fb, fc, fd, fk, fm, fn, fx, fy;
    auto* formula_cmd = app.add_subcommand("formula", "evaluate a closed-form value");
    formula_cmd
        ->add_option("--kind", formula_kind,
                     "f | count-bipartite | best-bipartite | best-bipartite-plus | klikks | r | cnc")
        ->required();
    formula_cmd->add_option("--a", fa, "double-star leaf count a");
    formula_cmd->add_option("--b", fb, "double-star leaf count b");
    formula_cmd->add_option("--c", fc, "forbidden-star small side c");
    formula_cmd->add_option("--d", fd, "forbidden-star large side d");
    formula_cmd->add_option("--k", fk, "clique order k");
    formula_cmd->add_option("--m", fm, "bipartite part size m");
    formula_cmd->add_option("--n", fn, "total vertex count n");
    formula_cmd->add_option("--x", fx, "degree x");
    formula_cmd->add_option("--y", fy, "degree y");

    // oracle
    int oracle_n = 0, witness_limit = 16;
    std::string oracle_pattern, oracle_forbid, oracle_method = "exhaustive";
    std::uint64_t seed = 0, budget = 100000;
    std::string dump_g6_path, oracle_out;
    auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive or stochastic extremal search");
    oracle_cmd->add_option("--n", oracle_n, "vertex count")->required();
    oracle_cmd->add_option("--pattern", oracle_pattern, "pattern H to maximize (omit to only "
                                                        "enumerate classes)");
    oracle_cmd->add_option("--forbid", oracle_forbid, "forbidden pattern F");
    oracle_cmd->add_option("--method", oracle_method, "exhaustive (default) or stochastic")
        ->check(CLI::IsMember({"exhaustive", "stochastic"}));
    oracle_cmd->add_option("--seed", seed, "stochastic RNG seed");
    oracle_cmd->add_option("--budget", budget, "stochastic evaluation budget");
    oracle_cmd->add_option("--witness-limit", witness_limit, "max witnesses kept per record");
    oracle_cmd->add_option("--dump-g6", dump_g6_path,
                           "write enumerated classes as graph6 lines (enumeration mode only)");
    oracle_cmd->add_option("--out", oracle_out, "also write the JSON record to this file");

    // verify
    std::string theorem_target, lemma_target, verify_forbid, verify_out, verify_csv;
    std::optional<int> va, vb, vc_, vd, vk;
    int nmin = 0, nmax = 0;
    auto* verify_cmd = app.add_subcommand("verify", "audit a theorem or lemma against the oracle");
    auto* theorem_opt = verify_cmd->add_option(
        "--theorem", theorem_target, "gyww | cce | fketto | klikks | neww | cnc");
    auto* lemma_opt =
        verify_cmd->add_option("--lemma", lemma_target, "ahs | triangle_free_edges | vc | efgg");
    theorem_opt->excludes(lemma_opt);
    verify_cmd->add_option("--a", va, "leaf count a");
    verify_cmd->add_option("--b", vb, "leaf count b");
    verify_cmd->add_option("--c", vc_, "forbidden-star small side c");
    verify_cmd->add_option("--d", vd, "forbidden-star large side d");
    verify_cmd->add_option("--k", vk, "clique order k");
    verify_cmd->add_option("--forbid", verify_forbid, "forbidden pattern (cce only)");
    verify_cmd->add_option("--nmin", nmin, "first n to audit (theorems)");
    auto* nmax_opt = verify_cmd->add_option("--nmax", nmax, "last n to audit")->required();
    (void)nmax_opt;
    verify_cmd->add_option("--out", verify_out, "write the JSON report to this file");
    verify_cmd->add_option("--csv", verify_csv, "write the per-n CSV table to this file");

    // CLI11 wants mutable char pointers
    std::vector<std::string> argv_storage;
    argv_storage.push_back("turanlab");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_storage) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*count_cmd) {
            Graph host = parse_host(graph_text);
            Pattern p = Pattern::parse(pattern_text);
            nlohmann::json j;
            j["value"] = to_decimal(count_pattern(host, p));
            out << j.dump() << "\n";
            return 0;
        }
        if (*contains_cmd) {
            Graph host = parse_host(graph_text);
            Pattern p = Pattern::parse(pattern_text);
            nlohmann::json j;
            j["contains"] = contains_pattern(host, p);
            out << j.dump() << "\n";
            return 0;
        }
        if (*construct_cmd) {
            Graph g = ConstructionSpec::parse(spec_text).build();
            if (construct_format == "g6") {
                out << graph6_encode(g) << "\n";
            } else {
                nlohmann::json j;
                j["n"] = g.order();
                j["edges"] = g.edge_count();
                j["graph6"] = graph6_encode(g);
                out << j.dump() << "\n";
            }
            return 0;
        }
        if (*formula_cmd) {
            nlohmann::json j;
            nlohmann::json params;
            auto dstar = [&] {
                return make_double_star(require_value(fa, "--a"), require_value(fb, "--b"));
            };
            if (formula_kind == "f") {
                auto p = dstar();
                int x = require_value(fx, "--x"), y = require_value(fy, "--y");
                params = {{"a", p.a}, {"b", p.b}, {"x", x}, {"y", y}};
                j["value"] = to_decimal(f_value(x, y, p));
            } else if (formula_kind == "count-bipartite") {
                auto p = dstar();
                int m = require_value(fm, "--m"), n = require_value(fn, "--n");
                params = {{"a", p.a}, {"b", p.b}, {"m", m}, {"n", n}};
                j["value"] = to_decimal(count_in_complete_bipartite(m, n, p));
            } else if (formula_kind == "best-bipartite") {
                auto p = dstar();
                int n = require_value(fn, "--n");
                params = {{"a", p.a}, {"b", p.b}, {"n", n}};
                auto best = best_complete_bipartite(n, p);
                j["m"] = best.m;
                j["value"] = to_decimal(best.value);
            } else if (formula_kind == "best-bipartite-plus") {
                auto p = dstar();
                int n = require_value(fn, "--n");
                params = {{"a", p.a}, {"b", p.b}, {"n", n}};
                auto best = best_complete_bipartite_plus(n, p);
                j["m"] = best.m;
                j["value"] = to_decimal(best.value);
            } else if (formula_kind == "klikks") {
                auto p = dstar();
                int n = require_value(fn, "--n"), k = require_value(fk, "--k");
                params = {{"a", p.a}, {"b", p.b}, {"k", k}, {"n", n}};
                j["value"] = to_decimal(klikks_value(n, k, p));
            } else if (formula_kind == "r") {
                int a = require_value(fa, "--a"), b = require_value(fb, "--b");
                int c = require_value(fc, "--c"), d = require_value(fd, "--d");
                params = {{"a", a}, {"b", b}, {"c", c}, {"d", d}};
                auto rv = r_value(a, b, c, d);
                j["value"] = to_decimal(rv.r);
                j["nice"] = rv.nice;
                j["clique_term"] = to_decimal(rv.clique_term);
                j["regular_term"] = to_decimal(rv.regular_term);
            } else if (formula_kind == "cnc") {
                auto p = dstar();
                int n = require_value(fn, "--n"), c = require_value(fc, "--c");
                params = {{"a", p.a}, {"b", p.b}, {"c", c}, {"n", n}};
                j["value"] = to_decimal(cnc_value(n, p, c));
            } else {
                throw ArgumentError("unknown formula kind \"" + formula_kind + "\"");
            }
            j["params"] = std::move(params);
            out << j.dump() << "\n";
            return 0;
        }
        if (*oracle_cmd) {
            OracleOptions options;
            options.threads = threads;
            options.witness_limit = witness_limit;
            if (oracle_pattern.empty()) {
                // enumeration-only mode
                std::optional<Pattern> f;
                if (!oracle_forbid.empty()) f = Pattern::parse(oracle_forbid);
                auto classes = enumerate_forbidden_free(oracle_n, f, threads);
                if (!dump_g6_path.empty()) {
                    std::string lines;
                    for (const auto& g : classes) lines += graph6_encode(g) + "\n";
                    write_file_or_die(dump_g6_path, lines);
                }
                nlohmann::json j;
                j["n"] = oracle_n;
                j["classes"] = classes.size();
                if (f)
                    j["forbidden"] = f->to_string();
                else
                    j["forbidden"] = nullptr;
                out << j.dump() << "\n";
                return 0;
            }
            if (!dump_g6_path.empty())
                throw ArgumentError("--dump-g6 is only available in enumeration mode "
                                    "(omit --pattern)");
            if (oracle_forbid.empty())
                throw ArgumentError("missing required flag --forbid (needed with --pattern)");
            Pattern h = Pattern::parse(oracle_pattern);
            Pattern f = Pattern::parse(oracle_forbid);
            ExtremalRecord rec = oracle_method == "exhaustive"
                                     ? ex_exhaustive(oracle_n, h, f, options)
                                     : ex_stochastic(oracle_n, h, f, seed, budget, options);
            std::string text = record_to_json(rec).dump();
            out << text << "\n";
            if (!oracle_out.empty()) write_file_or_die(oracle_out, text + "\n");
            return 0;
        }
        if (*verify_cmd) {
            if (theorem_target.empty() && lemma_target.empty())
                throw ArgumentError("verify needs exactly one of --theorem or --lemma");
            OracleOptions options;
            options.threads = threads;
            AuditReport rep;
            if (!theorem_target.empty()) {
                TheoremParams tp;
                tp.a = va.value_or(1);
                tp.b = vb.value_or(1);
                tp.c = vc_;
                tp.d = vd;
                tp.k = vk;
                if (!verify_forbid.empty()) tp.forbidden = Pattern::parse(verify_forbid);
                if (nmin == 0)
                    throw ArgumentError("missing required flag --nmin (theorem audits)");
                rep = audit_theorem(theorem_target, tp, nmin, nmax, options);
            } else {
                rep = audit_lemma(lemma_target, nmax, options);
            }
            std::string text = rep.to_json().dump(2);
            out << text << "\n";
            if (!verify_out.empty()) write_file_or_die(verify_out, text + "\n");
            if (!verify_csv.empty()) write_file_or_die(verify_csv, rep.to_csv());
            return rep.verdict == Verdict::violation ? 1 : 0;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

} // namespace turanlab
