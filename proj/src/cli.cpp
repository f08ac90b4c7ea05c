#include "robustcurve/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "robustcurve/attack.hpp"
#include "robustcurve/dataset.hpp"
#include "robustcurve/edge_list.hpp"
#include "robustcurve/errors.hpp"
#include "robustcurve/eval.hpp"

namespace robustcurve::cli {
namespace {

namespace fs = std::filesystem;

struct GraphSource {
    std::string input;
    std::string model = "er";
    std::size_t n = 1000;
    double k = 4;
    std::uint64_t seed = 0;

    void add_to(CLI::App& app) {
        app.add_option("--input,-i", input, "Edge-list file (overrides the generator flags)");
        app.add_option("--model", model, "Generator model: er or ba")->capture_default_str();
        app.add_option("--n", n, "Number of nodes")->capture_default_str();
        app.add_option("--k", k, "Mean degree")->capture_default_str();
        app.add_option("--seed", seed, "RNG seed")->capture_default_str();
    }

    Graph load() const {
        if (!input.empty()) return read_edge_list(fs::path(input)).graph;
        return make_graph(parse_model(model), n, k, seed);
    }
};

// Writes to the file when a path is given, to `out` otherwise.
template <class Writer>
void emit(const std::string& path, std::ostream& out, Writer&& write) {
    if (path.empty()) {
        write(out);
        return;
    }
    std::ofstream file(path, std::ios::trunc);
    if (!file) throw FormatError("cannot write " + path);
    write(file);
    if (!file) throw FormatError("write failed for " + path);
}

std::size_t default_threads() {
    if (const char* env = std::getenv(kThreadsEnv)) {
        try {
            const auto value = std::stoul(env);
            if (value > 0) return value;
        } catch (const std::exception&) {
        }
    }
    return 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Network robustness simulation and surrogate evaluation toolkit", "robustcurve"};
    app.require_subcommand(1, 1);

    std::size_t threads = default_threads();
    std::string output;

    // generate
    GraphSource gen_source;
    auto* generate = app.add_subcommand("generate", "Generate an ER or BA graph as an edge list");
    generate->add_option("--model", gen_source.model, "Generator model: er or ba")->required();
    generate->add_option("--n", gen_source.n, "Number of nodes")->required();
    generate->add_option("--k", gen_source.k, "Mean degree")->required();
    generate->add_option("--seed", gen_source.seed, "RNG seed")->capture_default_str();
    generate->add_option("--output,-o", output, "Output file (default: stdout)");

    // curve
    GraphSource curve_source;
    std::string scenario_name;
    std::size_t steps = 1000;
    std::size_t realizations = 1;
    bool adaptive = false;
    bool resample = false;
    auto* curve = app.add_subcommand("curve", "Simulate one attack curve and write it as CSV");
    curve_source.add_to(*curve);
    curve->add_option("--scenario", scenario_name, "rnf, hdaa, ref or hedaa")->required();
    curve->add_option("--steps", steps, "Grid size T (or S)")->capture_default_str();
    curve->add_option("--realizations", realizations,
                      "Random-scenario realizations; more than one writes p,mean,std")
        ->capture_default_str();
    curve->add_flag("--adaptive", adaptive, "Recompute degrees after every removal");
    curve->add_flag("--resample", resample, "Draw an independent removal set for every p");
    curve->add_option("--threads", threads, "Worker threads")->capture_default_str();
    curve->add_option("--output,-o", output, "Output file (default: stdout)");

    // dataset
    std::vector<std::string> models = {"er", "ba"};
    std::vector<double> ks = {4, 6, 8};
    std::size_t count = 1000;
    std::size_t dataset_n = 1000;
    std::uint64_t seed = 0;
    auto* dataset = app.add_subcommand("dataset", "Build a labelled training dataset");
    dataset->add_option("--models", models, "Comma-separated generator models")
        ->delimiter(',')
        ->capture_default_str();
    dataset->add_option("--ks", ks, "Comma-separated mean degrees")->delimiter(',')->capture_default_str();
    dataset->add_option("--count", count, "Graphs per (model, k) pair, a multiple of 10")
        ->capture_default_str();
    dataset->add_option("--n", dataset_n, "Nodes per graph")->capture_default_str();
    dataset->add_option("--scenario", scenario_name, "rnf, hdaa, ref or hedaa")->required();
    dataset->add_option("--steps", steps, "Grid size T (or S)")->capture_default_str();
    dataset->add_option("--seed", seed, "Base seed; graph i uses seed + i")->capture_default_str();
    dataset->add_flag("--adaptive", adaptive, "Recompute degrees after every removal");
    dataset->add_option("--threads", threads, "Worker threads")->capture_default_str();
    dataset->add_option("--output,-o", output, "Output directory")->required();

    // eval
    std::string predictions;
    std::string split_name;
    bool clamp = false;
    auto* eval = app.add_subcommand("eval", "Compare predictions against fresh simulation");
    eval->add_option("--predictions,-p", predictions, "Prediction manifest (dataset layout)")->required();
    eval->add_option("--split", split_name, "Only evaluate train, val or test records");
    eval->add_flag("--clamp", clamp, "Clamp predictions into [0, 1] first");
    eval->add_flag("--adaptive", adaptive, "Simulate with adaptive degree ranking");
    eval->add_option("--threads", threads, "Worker threads")->capture_default_str();
    eval->add_option("--output,-o", output, "Report file (default: stdout)");

    // stats
    std::string stats_input;
    std::string name;
    auto* stats = app.add_subcommand("stats", "Ingest an edge list and report N, M and mean degree");
    stats->add_option("--input,-i", stats_input, "Edge-list file")->required();
    stats->add_option("--name", name, "Network name (default: file stem)");
    stats->add_option("--output,-o", output, "Output file (default: stdout)");

    // bench
    GraphSource bench_source;
    std::vector<std::string> engines = {"naive", "incremental"};
    std::size_t repeats = 3;
    std::string model_cmd;
    auto* benchmark = app.add_subcommand("bench", "Time simulation engines on one graph");
    bench_source.add_to(*benchmark);
    benchmark->add_option("--scenario", scenario_name, "rnf, hdaa, ref or hedaa")->required();
    benchmark->add_option("--steps", steps, "Grid size T (or S)")->capture_default_str();
    benchmark->add_option("--engines", engines, "Comma-separated: naive, incremental, model")
        ->delimiter(',')
        ->capture_default_str();
    benchmark->add_option("--repeats", repeats, "Runs per engine; the median is reported")
        ->capture_default_str();
    benchmark->add_option("--model-cmd", model_cmd, "Shell command timed as the model engine");
    benchmark->add_option("--output,-o", output, "Output file (default: stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help("", CLI::AppFormatMode::All);
        return kExitUsage;
    }
    if (threads == 0) threads = 1;

    try {
        if (generate->parsed()) {
            const auto g = gen_source.load();
            emit(output, out, [&](std::ostream& os) { write_edge_list(os, g); });
        } else if (curve->parsed()) {
            const auto g = curve_source.load();
            const auto scenario = parse_scenario(scenario_name);
            const CurveSpec spec(steps);
            const auto curves = curve_ensemble(g, scenario, spec, realizations, curve_source.seed,
                                               {threads, adaptive, resample});
            emit(output, out, [&](std::ostream& os) {
                if (curves.size() == 1) {
                    write_curve_csv(os, curves.front());
                } else {
                    const CurveSet set(curves);
                    export_plot_data(os, mean_curve(set), std_curve(set));
                }
            });
        } else if (dataset->parsed()) {
            DatasetConfig config;
            config.models.clear();
            for (const auto& m : models) config.models.push_back(parse_model(m));
            config.avg_ks = ks;
            config.per_config_count = count;
            config.n = dataset_n;
            config.steps = steps;
            config.scenario = parse_scenario(scenario_name);
            config.base_seed = seed;
            config.threads = threads;
            config.attack.adaptive = adaptive;
            const auto manifest = build_dataset(config, output);
            out << "wrote " << manifest.records.size() << " records (train "
                << manifest.count(Split::Train) << ", val " << manifest.count(Split::Val) << ", test "
                << manifest.count(Split::Test) << ") to " << output << '\n';
        } else if (eval->parsed()) {
            const fs::path manifest_path(predictions);
            const auto manifest = read_manifest(manifest_path);
            EvalOptions options;
            if (!split_name.empty()) options.split = parse_split(split_name);
            options.threads = threads;
            options.clamp = clamp;
            options.attack.adaptive = adaptive;
            const auto reports = evaluate_predictions(manifest, manifest_path.parent_path(), options);
            nlohmann::json doc = nlohmann::json::array();
            for (const auto& r : reports) doc.push_back(to_json(r));
            emit(output, out, [&](std::ostream& os) { os << doc.dump(2) << '\n'; });
        } else if (stats->parsed()) {
            const fs::path path(stats_input);
            const auto network = ingest_edge_list(path, name.empty() ? path.stem().string() : name);
            emit(output, out, [&](std::ostream& os) { os << stats_json(network.stats).dump(2) << '\n'; });
        } else if (benchmark->parsed()) {
            const auto g = bench_source.load();
            const auto scenario = parse_scenario(scenario_name);
            const CurveSpec spec(steps);
            BenchOptions options;
            options.engines.clear();
            for (const auto& e : engines) options.engines.push_back(parse_engine(e));
            options.repeats = repeats;
            options.seed = bench_source.seed;
            if (!model_cmd.empty()) {
                options.model = [&model_cmd] {
                    if (std::system(model_cmd.c_str()) != 0) {
                        throw FormatError("model command failed: " + model_cmd);
                    }
                };
            }
            const auto rows = bench(g, scenario, spec, options);
            nlohmann::json doc{{"n", g.node_count()},
                               {"m", g.edge_count()},
                               {"scenario", to_string(scenario)},
                               {"steps", steps},
                               {"repeats", repeats},
                               {"rows", nlohmann::json::array()}};
            for (const auto& row : rows) {
                doc["rows"].push_back(
                    {{"engine", to_string(row.engine)}, {"seconds", row.seconds}, {"speedup", row.speedup}});
            }
            emit(output, out, [&](std::ostream& os) { os << doc.dump(2) << '\n'; });
        }
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const FormatError& e) {
        err << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitData;
    }
    return kExitOk;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

}  // namespace robustcurve::cli
