#include "robustcurve/eval.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "robustcurve/errors.hpp"
#include "robustcurve/metrics.hpp"
#include "robustcurve/parallel.hpp"

namespace robustcurve {
namespace {

std::size_t resolve_length(const CurveSet& set, std::optional<std::size_t> length) {
    const auto l = length.value_or(set.length());
    if (l == 0 || l > set.length()) throw ParameterError("statistic length out of range");
    return l;
}

double median(std::vector<double> xs) {
    std::sort(xs.begin(), xs.end());
    const auto mid = xs.size() / 2;
    return xs.size() % 2 ? xs[mid] : 0.5 * (xs[mid - 1] + xs[mid]);
}

std::optional<double> maybe_mean_std(const CurveSet& set, std::size_t length) {
    if (set.size() < 2) return std::nullopt;
    return mean_std(set, length);
}

nlohmann::json optional_json(std::optional<double> x) {
    return x ? nlohmann::json(*x) : nlohmann::json(nullptr);
}

}  // namespace

CurveSet::CurveSet(std::vector<std::vector<double>> curves) : curves_(std::move(curves)) {
    for (const auto& c : curves_) {
        if (c.size() != curves_.front().size()) throw ParameterError("curves differ in length");
        if (!std::all_of(c.begin(), c.end(), [](double x) { return std::isfinite(x); })) {
            throw ParameterError("curve contains a non-finite value");
        }
    }
}

double mean_std(const CurveSet& set, std::optional<std::size_t> length) {
    if (set.size() < 2) throw ParameterError("mean std needs at least two curves");
    const auto l = resolve_length(set, length);
    const auto count = static_cast<double>(set.size());
    double total = 0.0;
    for (std::size_t i = 0; i < l; ++i) {
        double mean = 0.0;
        for (std::size_t c = 0; c < set.size(); ++c) mean += set[c][i];
        mean /= count;
        double var = 0.0;
        for (std::size_t c = 0; c < set.size(); ++c) var += (set[c][i] - mean) * (set[c][i] - mean);
        total += std::sqrt(var / count);
    }
    return total / static_cast<double>(l);
}

double mean_abs_diff(const CurveSet& pred, const CurveSet& sim, std::optional<std::size_t> length) {
    if (pred.size() != sim.size() || pred.length() != sim.length() || pred.size() == 0) {
        throw ParameterError("prediction and simulation sets differ in shape");
    }
    const auto l = resolve_length(sim, length);
    double total = 0.0;
    for (std::size_t c = 0; c < pred.size(); ++c) {
        double diff = 0.0;
        for (std::size_t i = 0; i < l; ++i) diff += std::abs(pred[c][i] - sim[c][i]);
        total += diff / static_cast<double>(l);
    }
    return total / static_cast<double>(pred.size());
}

std::vector<double> mean_curve(const CurveSet& set) {
    std::vector<double> out(set.length(), 0.0);
    if (set.size() == 0) return out;
    for (std::size_t c = 0; c < set.size(); ++c) {
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += set[c][i];
    }
    for (auto& x : out) x /= static_cast<double>(set.size());
    return out;
}

std::vector<double> std_curve(const CurveSet& set) {
    const auto mean = mean_curve(set);
    std::vector<double> out(set.length(), 0.0);
    if (set.size() == 0) return out;
    for (std::size_t c = 0; c < set.size(); ++c) {
        for (std::size_t i = 0; i < out.size(); ++i) {
            out[i] += (set[c][i] - mean[i]) * (set[c][i] - mean[i]);
        }
    }
    for (auto& x : out) x = std::sqrt(x / static_cast<double>(set.size()));
    return out;
}

ErrorReport error_report(const CurveSet& pred, const CurveSet& sim, std::size_t length) {
    return {maybe_mean_std(sim, length), maybe_mean_std(pred, length),
            mean_abs_diff(pred, sim, length)};
}

nlohmann::json to_json(const GroupReport& report) {
    return {{"e_sim", optional_json(report.errors.e_sim)},
            {"e_pred", optional_json(report.errors.e_pred)},
            {"e_pair", report.errors.e_pair},
            {"scenario", to_string(report.scenario)},
            {"model", to_string(report.model)},
            {"avg_k", report.avg_k},
            {"n_networks", report.n_networks},
            {"robustness_direct_error", report.robustness_direct_error},
            {"robustness_from_curve_error", report.robustness_from_curve_error}};
}

std::vector<GroupReport> evaluate_predictions(const DatasetManifest& predictions,
                                              const std::filesystem::path& manifest_dir,
                                              const EvalOptions& options) {
    const CurveSpec spec(predictions.steps);
    std::vector<const ManifestEntry*> selected;
    for (const auto& entry : predictions.records) {
        if (!options.split || entry.split == *options.split) selected.push_back(&entry);
    }
    if (selected.empty()) throw ParameterError("no prediction records selected");

    std::vector<std::vector<double>> predicted(selected.size());
    std::vector<std::vector<double>> simulated(selected.size());
    parallel_for(selected.size(), options.threads, [&](std::size_t i) {
        const auto loaded = load_record(manifest_dir, *selected[i]);
        if (loaded.record.steps() != predictions.steps) {
            throw FormatError(selected[i]->file + ": label length does not match the manifest");
        }
        if (loaded.record.scenario != predictions.scenario) {
            throw FormatError(selected[i]->file + ": scenario does not match the manifest");
        }
        std::vector<double> values(loaded.record.label.begin(), loaded.record.label.end());
        predicted[i] = options.clamp ? clamp_filter(values) : std::move(values);
        const auto g = loaded.record.adjacency.to_graph();
        simulated[i] =
            simulate_label(g, predictions.scenario, spec, selected[i]->seed, options.attack).flatten();
    });

    std::vector<std::pair<GraphModel, double>> keys;
    std::map<std::pair<GraphModel, double>, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < selected.size(); ++i) {
        const std::pair key{selected[i]->model, selected[i]->avg_k};
        auto& members = groups[key];
        if (members.empty()) keys.push_back(key);
        members.push_back(i);
    }

    const auto length = predictions.steps;
    std::vector<GroupReport> reports;
    for (const auto& key : keys) {
        const auto& members = groups[key];
        std::vector<std::vector<double>> pred_rows;
        std::vector<std::vector<double>> sim_rows;
        double direct = 0.0;
        double from_curve = 0.0;
        for (const auto i : members) {
            pred_rows.push_back(predicted[i]);
            sim_rows.push_back(simulated[i]);
            const double r_sim = simulated[i].back();
            direct += std::abs(predicted[i].back() - r_sim);
            from_curve += std::abs(robustness(std::span(predicted[i]).first(length)) - r_sim);
        }
        const auto count = static_cast<double>(members.size());
        reports.push_back({key.first, key.second, predictions.scenario, members.size(),
                           error_report(CurveSet(std::move(pred_rows)), CurveSet(std::move(sim_rows)),
                                        length),
                           direct / count, from_curve / count});
    }
    return reports;
}

std::string_view to_string(Engine e) noexcept {
    switch (e) {
        case Engine::Naive: return "naive";
        case Engine::Incremental: return "incremental";
        case Engine::Model: return "model";
    }
    return "unknown";
}

Engine parse_engine(std::string_view text) {
    for (const auto e : {Engine::Naive, Engine::Incremental, Engine::Model}) {
        if (text == to_string(e)) return e;
    }
    throw ParameterError("unknown engine '" + std::string(text) + "'");
}

std::vector<BenchRow> bench(const Graph& g, Scenario scenario, const CurveSpec& spec,
                            const BenchOptions& options) {
    if (options.engines.empty()) throw ParameterError("no engines to benchmark");
    if (options.repeats == 0) throw ParameterError("benchmark needs at least one repeat");

    std::vector<BenchRow> rows;
    for (const auto engine : options.engines) {
        if (engine == Engine::Model && !options.model) {
            throw ParameterError("model engine requested without an inference command");
        }
        std::vector<double> times;
        for (std::size_t r = 0; r < options.repeats; ++r) {
            const auto start = std::chrono::steady_clock::now();
            switch (engine) {
                case Engine::Naive:
                    naive_attack_curve(g, removal_order(g, scenario, options.seed), spec);
                    break;
                case Engine::Incremental:
                    attack_curve(g, removal_order(g, scenario, options.seed), spec);
                    break;
                case Engine::Model: options.model(); break;
            }
            const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
            times.push_back(elapsed.count());
        }
        rows.push_back({engine, median(std::move(times)), 1.0});
    }

    const auto naive = std::find_if(rows.begin(), rows.end(),
                                    [](const BenchRow& r) { return r.engine == Engine::Naive; });
    const double baseline = naive != rows.end() ? naive->seconds : rows.front().seconds;
    for (auto& row : rows) row.speedup = row.seconds > 0.0 ? baseline / row.seconds : INFINITY;
    return rows;
}

std::string format_value(double x) {
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.9g", x);
    return buffer;
}

void write_curve_csv(std::ostream& out, std::span<const double> curve) {
    const CurveSpec spec(curve.size());
    out << "p,value\n";
    for (std::size_t j = 0; j < curve.size(); ++j) {
        out << format_value(spec.p(j)) << ',' << format_value(curve[j]) << '\n';
    }
}

void export_plot_data(std::ostream& out, std::span<const double> mean, std::span<const double> std) {
    if (mean.size() != std.size()) throw ParameterError("mean and std curves differ in length");
    out << "p,mean,std\n";
    if (mean.empty()) return;
    const CurveSpec spec(mean.size());
    for (std::size_t j = 0; j < mean.size(); ++j) {
        out << format_value(spec.p(j)) << ',' << format_value(mean[j]) << ',' << format_value(std[j])
            << '\n';
    }
}

void export_plot_data(const std::filesystem::path& path, std::span<const double> mean,
                      std::span<const double> std) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw FormatError("cannot write " + path.string());
    export_plot_data(out, mean, std);
    if (!out) throw FormatError("write failed for " + path.string());
}

PlotData read_plot_data(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "p,mean,std") throw FormatError("missing plot header", 1);
    PlotData data;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream fields(line);
        double p = 0;
        double mean = 0;
        double sd = 0;
        char c1 = 0;
        char c2 = 0;
        if (!(fields >> p >> c1 >> mean >> c2 >> sd) || c1 != ',' || c2 != ',') {
            throw FormatError("malformed plot row", line_no);
        }
        data.p.push_back(p);
        data.mean.push_back(mean);
        data.std.push_back(sd);
    }
    return data;
}

}  // namespace robustcurve
