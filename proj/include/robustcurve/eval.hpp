#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "robustcurve/attack.hpp"
#include "robustcurve/dataset.hpp"
#include "robustcurve/graph.hpp"

namespace robustcurve {

/// Equal-length, finite curves: one per network or realization.
class CurveSet {
  public:
    CurveSet() = default;
    /// Throws ParameterError for ragged or non-finite input.
    explicit CurveSet(std::vector<std::vector<double>> curves);

    std::size_t size() const noexcept { return curves_.size(); }
    std::size_t length() const noexcept { return curves_.empty() ? 0 : curves_.front().size(); }
    std::span<const double> operator[](std::size_t i) const { return curves_[i]; }

  private:
    std::vector<std::vector<double>> curves_;
};

/// Population standard deviation across curves at each of the first `length`
/// positions (all positions by default), averaged over positions.
/// Needs at least two curves.
double mean_std(const CurveSet& set, std::optional<std::size_t> length = {});

/// Per network (1/L) * sum |pred_i - sim_i| over the first `length`
/// positions, averaged over networks. Shapes must match.
double mean_abs_diff(const CurveSet& pred, const CurveSet& sim,
                     std::optional<std::size_t> length = {});

std::vector<double> mean_curve(const CurveSet& set);
/// Population standard deviation at every position.
std::vector<double> std_curve(const CurveSet& set);

struct ErrorReport {
    /// Mean std of the simulated set; nullopt with fewer than two networks.
    std::optional<double> e_sim;
    std::optional<double> e_pred;
    double e_pair = 0.0;
};

/// All statistics run over the first `length` entries (the curve part).
ErrorReport error_report(const CurveSet& pred, const CurveSet& sim, std::size_t length);

/// Accuracy of one (model, mean degree) group of predictions.
struct GroupReport {
    GraphModel model = GraphModel::Er;
    double avg_k = 0.0;
    Scenario scenario = Scenario::Rnf;
    std::size_t n_networks = 0;
    ErrorReport errors;
    /// mean |predicted robustness - simulated robustness|
    double robustness_direct_error = 0.0;
    /// mean |mean(predicted curve) - simulated robustness|
    double robustness_from_curve_error = 0.0;
};

nlohmann::json to_json(const GroupReport& report);

struct EvalOptions {
    std::optional<Split> split;
    std::size_t threads = 1;
    /// Clamp predictions into [0, 1] before comparing.
    bool clamp = false;
    AttackOptions attack;
};

/// Reads every prediction record listed in the manifest, re-simulates the
/// graph stored in its adjacency image with the entry's seed, and reports
/// errors per (model, avg_k) group in order of first appearance.
std::vector<GroupReport> evaluate_predictions(const DatasetManifest& predictions,
                                              const std::filesystem::path& manifest_dir,
                                              const EvalOptions& options = {});

enum class Engine { Naive, Incremental, Model };

std::string_view to_string(Engine e) noexcept;
Engine parse_engine(std::string_view text);

struct BenchOptions {
    std::vector<Engine> engines = {Engine::Naive, Engine::Incremental};
    std::size_t repeats = 3;
    std::uint64_t seed = 0;
    /// Inference callable for Engine::Model.
    std::function<void()> model;
};

struct BenchRow {
    Engine engine = Engine::Naive;
    /// Median wall-clock time over the repeats.
    double seconds = 0.0;
    /// Baseline time / this time. The baseline is the naive engine when
    /// present, otherwise the first engine listed.
    double speedup = 1.0;
};

/// Times every engine on one (graph, scenario) pair, single-threaded.
std::vector<BenchRow> bench(const Graph& g, Scenario scenario, const CurveSpec& spec,
                            const BenchOptions& options);

/// Prints a value with 9 significant digits.
std::string format_value(double x);

/// CSV "p,value" with one row per grid point.
void write_curve_csv(std::ostream& out, std::span<const double> curve);

struct PlotData {
    std::vector<double> p;
    std::vector<double> mean;
    std::vector<double> std;
};

/// CSV "p,mean,std" with p_j = j / length.
void export_plot_data(std::ostream& out, std::span<const double> mean, std::span<const double> std);
void export_plot_data(const std::filesystem::path& path, std::span<const double> mean,
                      std::span<const double> std);
/// Throws FormatError on a bad header or malformed row.
PlotData read_plot_data(std::istream& in);

}  // namespace robustcurve
