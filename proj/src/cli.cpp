#include "socrep/cli.hpp"

#include "socrep/bench.hpp"
#include "socrep/errors.hpp"
#include "socrep/exact.hpp"
#include "socrep/frontends.hpp"
#include "socrep/heuristics.hpp"
#include "socrep/io.hpp"
#include "socrep/medseq.hpp"
#include "socrep/verify.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace socrep {

namespace {

using io::Json;

// Parses the tuple, divides out any common factor and records it.
WeightTuple tuple_arg(const std::vector<std::string>& args, Json& out) {
    auto n = normalize(WeightTuple::from_strings(args));
    if (n.scale != 1) {
        out["input"] = args;
        out["divided_by"] = io::integer(n.scale);
    }
    return n.tuple;
}

Json read_json_file(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(path);
        if (!in) throw InvalidInput("cannot read " + path);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InvalidInput(path + ": " + e.what());
    }
}

std::pair<Configuration, WeightTuple> config_with_tuple(const std::string& path) {
    auto [cfg, w] = io::read_configuration(read_json_file(path));
    if (!w) throw InvalidInput(path + ": the document has no \"s\" tuple");
    return {cfg, *w};
}

Strategy strategy_arg(const std::string& name, bool force_traversal) {
    auto st = Strategy::parse(name);
    if (force_traversal) {
        st.kind = st.is_power_two() ? StrategyKind::TraversalPowerTwo : StrategyKind::TraversalCommonOne;
    }
    return st;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Second-order cone representations of weighted geometric mean inequalities", "socrep"};
    app.require_subcommand(1);
    std::function<Json()> action;
    auto emit_json = [&](const Json& j) { out << j.dump(2) << '\n'; };

    std::vector<std::string> s_args;
    std::string strategy = "greedy-power-two";
    bool use_traversal = false;
    std::uint64_t budget = kDefaultTraversalBudget;

    auto* repr = app.add_subcommand("repr", "heuristic representation of a tuple");
    repr->add_option("s", s_args, "weights")->required()->expected(1, -1);
    repr->add_option("--strategy", strategy, "greedy-power-two, greedy-common-one, traversal-power-two, traversal-common-one");
    repr->add_flag("--traversal", use_traversal, "use the traversal variant of the strategy");
    repr->add_option("--budget", budget, "traversal node budget");
    repr->callback([&] {
        action = [&] {
            Json j;
            auto w = tuple_arg(s_args, j);
            auto st = strategy_arg(strategy, use_traversal);
            j["s"] = io::tuple(w);
            j["strategy"] = st.name();
            Configuration cfg;
            if (st.is_traversal()) {
                auto r = traversal(w, st, budget);
                cfg = r.config;
                j["exhaustive"] = r.exhaustive;
                j["expansions"] = r.expansions;
            } else {
                cfg = heuristic(w, st);
            }
            j["size"] = cfg.size();
            j["lower"] = lower_bound(w);
            j["configuration"] = io::configuration(cfg, &w);
            return j;
        };
    });

    std::optional<std::string> catalog_dir;
    int cap = 8;
    auto* optimal = app.add_subcommand("optimal", "minimum representation by exhaustive search");
    optimal->add_option("s", s_args, "weights")->required()->expected(1, -1);
    optimal->add_option("--catalog", catalog_dir, "directory for configuration catalogs");
    optimal->add_option("--cap", cap, "largest size to search");
    optimal->callback([&] {
        action = [&] {
            Json j;
            auto w = tuple_arg(s_args, j);
            BruteForceOptions opt;
            opt.cap = cap;
            if (catalog_dir) opt.catalog_dir = *catalog_dir;
            auto r = brute_force(w, opt);
            j["s"] = io::tuple(w);
            j["size"] = r.config.size();
            j["lower"] = r.lower;
            j["heuristic_upper"] = r.heuristic_upper;
            j["tested"] = r.tested;
            j["configuration"] = io::configuration(r.config, &w);
            return j;
        };
    });

    std::string file;
    int trials = 100;
    std::uint64_t seed = 42;
    auto* verify = app.add_subcommand("verify", "check a configuration document");
    verify->add_option("config", file, "JSON file, - for stdin")->required();
    verify->add_option("--trials", trials, "numeric trials (0 to skip)");
    verify->add_option("--seed", seed, "numeric seed");
    verify->callback([&] {
        action = [&] {
            auto [cfg, w] = config_with_tuple(file);
            auto rec = reconstruct(cfg, w);
            Json j = io::verdict(rec);
            if (rec.valid() && trials > 0) j["numeric"] = io::numeric(numeric_check(cfg, w, trials, seed));
            return j;
        };
    });

    auto* bounds = app.add_subcommand("bounds", "closed-form bounds");
    bounds->add_option("s", s_args, "weights")->required()->expected(1, -1);
    bounds->callback([&] {
        action = [&] {
            Json j;
            auto w = tuple_arg(s_args, j);
            Json b = io::bounds(w, compute_bounds(w));
            for (auto& [k, v] : b.items()) j[k] = v;
            return j;
        };
    });

    std::string p_arg, q_arg;
    auto* medseq = app.add_subcommand("medseq", "minimum (p,q)-mediated sequence");
    medseq->add_option("p", p_arg)->required();
    medseq->add_option("q", q_arg)->required();
    medseq->callback([&] {
        action = [&] {
            Integer p = parse_integer(p_arg), q = parse_integer(q_arg);
            Json j = io::sequence(min_mediated_sequence(p, q));
            j["configuration"] = io::configuration(bivariate_configuration(p, q));
            return j;
        };
    });

    auto* tree = app.add_subcommand("tree", "tree of the minimum (p,q)-mediated sequence");
    tree->add_option("p", p_arg)->required();
    tree->add_option("q", q_arg)->required();
    tree->callback([&] {
        action = [&] { return io::tree(build_tree(min_mediated_sequence(parse_integer(p_arg), parse_integer(q_arg)))); };
    });

    std::size_t limit = 100;
    auto* enum_succ = app.add_subcommand("enum-successive", "successive minimum sequences for odd p, q");
    enum_succ->add_option("p", p_arg)->required();
    enum_succ->add_option("q", q_arg)->required();
    enum_succ->add_option("--limit", limit, "stop after this many");
    enum_succ->callback([&] {
        action = [&] {
            auto r = enumerate_successive(parse_integer(p_arg), parse_integer(q_arg), limit);
            Json j;
            j["p"] = p_arg;
            j["q"] = q_arg;
            j["complete"] = r.complete;
            j["count"] = r.sequences.size();
            Json seqs = Json::array();
            for (const auto& s : r.sequences) seqs.push_back(io::sequence(s)["points"]);
            j["sequences"] = seqs;
            return j;
        };
    });

    int em = 0, en = 0;
    std::optional<std::string> store;
    auto* enumerate = app.add_subcommand("enumerate", "count canonical configurations");
    enumerate->add_option("m", em)->required();
    enumerate->add_option("n", en)->required();
    enumerate->add_option("--store", store, "write the catalog to this file");
    enumerate->callback([&] {
        action = [&] {
            Json j;
            j["m"] = em;
            j["n"] = en;
            if (store) {
                auto cat = build_catalog(em, en);
                catalog_store(cat, *store);
                j["count"] = cat.count();
                j["file"] = *store;
            } else {
                j["count"] = enumerate_pairs(em, en, [](auto) { return true; });
            }
            if (auto known = tabulated_count(em, en)) j["tabulated"] = *known;
            return j;
        };
    });

    std::string family;
    std::vector<std::string> params;
    int dimension = 0;
    bool with_emit = false;
    auto* convert = app.add_subcommand("convert", "reduce an inequality family to weighted geometric means");
    convert->add_option("family", family, "wgm, sub-unit-wgm, power-up, power-down, neg-power, neg-power-multi, p-norm, power-cone")
        ->required();
    convert->add_option("params", params, "rational exponents a/b")->required()->expected(1, -1);
    convert->add_option("--dim", dimension, "p-norm dimension");
    convert->add_flag("--emit", with_emit, "also build and emit cones with --strategy");
    convert->add_option("--strategy", strategy, "strategy used by --emit");
    convert->callback([&] {
        action = [&] {
            ConeInstance in;
            in.kind = parse_family(family);
            for (const auto& p : params) in.exponents.push_back(parse_rational(p));
            in.dimension = dimension;
            auto conv = to_wgm(in);
            Json j = io::conversion(conv);
            if (with_emit) {
                auto st = Strategy::parse(strategy);
                Json docs = Json::array();
                for (const auto& inst : conv.instances) {
                    auto names = inst.inputs;
                    names.push_back(inst.output);
                    auto doc = emit_constraints(inst.tuple, heuristic(inst.tuple, st), names);
                    docs.push_back(io::document(doc));
                }
                j["documents"] = docs;
            }
            return j;
        };
    });

    std::string format = "json";
    auto* emit = app.add_subcommand("emit", "cone constraints of a configuration document");
    emit->add_option("config", file, "JSON file, - for stdin")->required();
    emit->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    emit->callback([&] {
        action = [&] {
            auto [cfg, w] = config_with_tuple(file);
            auto doc = emit_constraints(w, cfg);
            if (format == "text") {
                out << render_text(doc);
                return Json();
            }
            return io::document(doc);
        };
    });

    long long s_hat = 0;
    int bm = 0;
    std::vector<std::string> algos{"greedy-power-two", "greedy-common-one"};
    std::optional<std::string> csv;
    int repeat = 1, jobs = 0;
    bool rows = false;
    auto* bench = app.add_subcommand("bench", "run strategies over all partitions of s_hat");
    bench->add_option("s_hat", s_hat)->required();
    bench->add_option("m", bm)->required();
    bench->add_option("--algos", algos, "comma separated strategies")->delimiter(',');
    bench->add_option("--budget", budget, "traversal node budget");
    bench->add_option("--csv", csv, "write one row per partition and algorithm");
    bench->add_option("--repeat", repeat, "repetitions per timing");
    bench->add_option("--jobs", jobs, "worker threads (0 = all cores)");
    bench->add_flag("--rows", rows, "include per-partition sizes in the JSON");
    bench->callback([&] {
        action = [&] {
            std::vector<Strategy> st;
            for (const auto& a : algos) st.push_back(Strategy::parse(a));
            BenchOptions opt;
            opt.budget = budget;
            opt.repeat = repeat;
            opt.jobs = jobs;
            opt.keep_rows = rows || csv.has_value();
            auto rep = bench_run(s_hat, bm, st, opt);
            if (csv) {
                std::ofstream f(*csv);
                if (!f) throw InvalidInput("cannot write " + *csv);
                write_csv(rep, f);
            }
            Json j;
            j["schema"] = io::kSchema;
            j["s_hat"] = rep.s_hat;
            j["m"] = rep.m;
            j["partition_count"] = rep.partition_count;
            Json totals = Json::array();
            for (std::size_t k = 0; k < rep.totals.size(); ++k) {
                const auto& t = rep.totals[k];
                totals.push_back({{"algorithm", t.algorithm},
                                  {"total_size", t.total_size},
                                  {"average_size", rep.average(k)},
                                  {"seconds", t.seconds},
                                  {"budget_hits", t.budget_hits},
                                  {"partial", t.partial()}});
            }
            j["totals"] = totals;
            if (rows) {
                Json r = Json::array();
                for (const auto& row : rep.rows) {
                    r.push_back({{"s", io::tuple(row.tuple)}, {"algorithm", row.algorithm}, {"size", row.size}});
                }
                j["rows"] = r;
            }
            return j;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }
    try {
        Json j = action();
        if (!j.is_null()) emit_json(j);
        return 0;
    } catch (const SearchLimit& e) {
        err << "search limit: " << e.what() << '\n';
        return 2;
    } catch (const InvalidInput& e) {
        err << "invalid input: " << e.what() << '\n';
        return 1;
    } catch (const CorruptCatalog& e) {
        err << "corrupt catalog: " << e.what() << '\n';
        return 1;
    } catch (const Json::exception& e) {
        err << "invalid input: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 3;
    }
}

}  // namespace socrep
