#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "robustcurve/attack.hpp"
#include "robustcurve/graph.hpp"
#include "robustcurve/metrics.hpp"
#include "robustcurve/record.hpp"

namespace robustcurve {

enum class GraphModel { Er, Ba, Empirical };

std::string_view to_string(GraphModel m) noexcept;
GraphModel parse_model(std::string_view text);

/// ER uses mean_degree directly; BA attaches m = mean_degree / 2 edges per
/// node, so mean_degree must be a positive even integer.
Graph make_graph(GraphModel model, std::size_t n, double mean_degree, std::uint64_t seed);

enum class Split { Train, Val, Test };

std::string_view to_string(Split s) noexcept;
Split parse_split(std::string_view text);

/// 80/10/10 by position within one (model, mean degree) block.
Split split_for_index(std::size_t index, std::size_t block_size);

struct ManifestEntry {
    std::size_t id = 0;
    /// Record path relative to the manifest's directory.
    std::string file;
    Split split = Split::Train;
    GraphModel model = GraphModel::Er;
    double avg_k = 0.0;
    std::size_t n = 0;
    std::uint64_t seed = 0;

    friend bool operator==(const ManifestEntry&, const ManifestEntry&) = default;
};

struct DatasetManifest {
    static constexpr int kVersion = 1;

    Scenario scenario = Scenario::Rnf;
    std::size_t steps = 0;
    std::vector<ManifestEntry> records;

    std::size_t count(Split s) const;

    friend bool operator==(const DatasetManifest&, const DatasetManifest&) = default;
};

void to_json(nlohmann::json& j, const ManifestEntry& e);
void from_json(const nlohmann::json& j, ManifestEntry& e);
void to_json(nlohmann::json& j, const DatasetManifest& m);
void from_json(const nlohmann::json& j, DatasetManifest& m);

void write_manifest(const std::filesystem::path& path, const DatasetManifest& manifest);
/// Throws FormatError on unreadable or schema-violating JSON.
DatasetManifest read_manifest(const std::filesystem::path& path);

/// One manifest entry together with its decoded file.
struct DatasetRecord {
    ManifestEntry meta;
    Record record;
};

DatasetRecord load_record(const std::filesystem::path& manifest_dir, const ManifestEntry& entry);

/// Simulates the attack curve of g and appends its robustness.
LabelVector simulate_label(const Graph& g, Scenario scenario, const CurveSpec& spec,
                           std::uint64_t seed, AttackOptions options = {});

Record make_record(const Graph& g, Scenario scenario, const LabelVector& label);

struct DatasetConfig {
    std::vector<GraphModel> models = {GraphModel::Er, GraphModel::Ba};
    std::vector<double> avg_ks = {4, 6, 8};
    std::size_t per_config_count = 1000;
    std::size_t n = 1000;
    std::size_t steps = 1000;
    Scenario scenario = Scenario::Rnf;
    std::uint64_t base_seed = 0;
    std::size_t threads = 1;
    AttackOptions attack;
};

/// Manifest that build_dataset would write, without generating anything.
DatasetManifest plan_dataset(const DatasetConfig& config);

/// Generates, simulates and writes every record under output_dir/records/,
/// then writes output_dir/manifest.json. Record i uses seed base_seed + i for
/// both its topology and its removal order (on separate RNG streams).
/// Output bytes depend only on the config, not on the thread count.
DatasetManifest build_dataset(const DatasetConfig& config, const std::filesystem::path& output_dir);

struct NetworkStats {
    std::string name;
    std::size_t n = 0;
    std::size_t m = 0;
    double mean_degree = 0.0;
    std::size_t duplicates_dropped = 0;
    std::size_t self_loops_dropped = 0;
};

/// {name, n, m, k} with k rounded to two decimals, plus the drop counts.
nlohmann::json stats_json(const NetworkStats& stats);

struct IngestedNetwork {
    Graph graph;
    NetworkStats stats;
};

IngestedNetwork ingest_edge_list(const std::filesystem::path& path, std::string name);

}  // namespace robustcurve
