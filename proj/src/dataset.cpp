#include "robustcurve/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>

#include "robustcurve/edge_list.hpp"
#include "robustcurve/errors.hpp"
#include "robustcurve/generators.hpp"
#include "robustcurve/parallel.hpp"

namespace robustcurve {
namespace {

std::string lowercase(std::string_view text) {
    std::string out(text);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::string record_file_name(std::size_t id) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "records/%06zu.rbst", id);
    return buffer;
}

}  // namespace

std::string_view to_string(GraphModel m) noexcept {
    switch (m) {
        case GraphModel::Er: return "er";
        case GraphModel::Ba: return "ba";
        case GraphModel::Empirical: return "empirical";
    }
    return "unknown";
}

GraphModel parse_model(std::string_view text) {
    const auto lower = lowercase(text);
    for (const auto m : {GraphModel::Er, GraphModel::Ba, GraphModel::Empirical}) {
        if (lower == to_string(m)) return m;
    }
    throw ParameterError("unknown graph model '" + std::string(text) + "'");
}

Graph make_graph(GraphModel model, std::size_t n, double mean_degree, std::uint64_t seed) {
    switch (model) {
        case GraphModel::Er: return generate_er(n, mean_degree, seed);
        case GraphModel::Ba: {
            const double m = mean_degree / 2.0;
            if (!(m >= 1.0) || m != std::floor(m)) {
                throw ParameterError("BA mean degree must be a positive even integer");
            }
            return generate_ba(n, static_cast<std::size_t>(m), seed);
        }
        case GraphModel::Empirical: break;
    }
    throw ParameterError("empirical graphs cannot be generated");
}

std::string_view to_string(Split s) noexcept {
    switch (s) {
        case Split::Train: return "train";
        case Split::Val: return "val";
        case Split::Test: return "test";
    }
    return "unknown";
}

Split parse_split(std::string_view text) {
    const auto lower = lowercase(text);
    for (const auto s : {Split::Train, Split::Val, Split::Test}) {
        if (lower == to_string(s)) return s;
    }
    throw FormatError("unknown split '" + std::string(text) + "'");
}

Split split_for_index(std::size_t index, std::size_t block_size) {
    if (10 * index < 8 * block_size) return Split::Train;
    if (10 * index < 9 * block_size) return Split::Val;
    return Split::Test;
}

std::size_t DatasetManifest::count(Split s) const {
    return static_cast<std::size_t>(
        std::count_if(records.begin(), records.end(), [s](const auto& r) { return r.split == s; }));
}

void to_json(nlohmann::json& j, const ManifestEntry& e) {
    j = nlohmann::json{{"id", e.id},
                       {"file", e.file},
                       {"split", to_string(e.split)},
                       {"model", to_string(e.model)},
                       {"avg_k", e.avg_k},
                       {"n", e.n},
                       {"seed", e.seed}};
}

void from_json(const nlohmann::json& j, ManifestEntry& e) {
    j.at("id").get_to(e.id);
    j.at("file").get_to(e.file);
    e.split = parse_split(j.at("split").get<std::string>());
    e.model = parse_model(j.at("model").get<std::string>());
    j.at("avg_k").get_to(e.avg_k);
    j.at("n").get_to(e.n);
    j.at("seed").get_to(e.seed);
}

void to_json(nlohmann::json& j, const DatasetManifest& m) {
    j = nlohmann::json{{"version", DatasetManifest::kVersion},
                       {"scenario", to_string(m.scenario)},
                       {"steps", m.steps},
                       {"records", m.records}};
}

void from_json(const nlohmann::json& j, DatasetManifest& m) {
    if (j.at("version").get<int>() != DatasetManifest::kVersion) {
        throw FormatError("unsupported manifest version");
    }
    m.scenario = parse_scenario(j.at("scenario").get<std::string>());
    j.at("steps").get_to(m.steps);
    j.at("records").get_to(m.records);
}

void write_manifest(const std::filesystem::path& path, const DatasetManifest& manifest) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw FormatError("cannot write " + path.string());
    out << nlohmann::json(manifest).dump(2) << '\n';
    if (!out) throw FormatError("write failed for " + path.string());
}

DatasetManifest read_manifest(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path.string());
    try {
        return nlohmann::json::parse(in).get<DatasetManifest>();
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(path.string() + ": " + e.what());
    } catch (const ParameterError& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

DatasetRecord load_record(const std::filesystem::path& manifest_dir, const ManifestEntry& entry) {
    return {entry, read_record(manifest_dir / entry.file)};
}

LabelVector simulate_label(const Graph& g, Scenario scenario, const CurveSpec& spec,
                           std::uint64_t seed, AttackOptions options) {
    return label_vector(simulate(g, scenario, spec, seed, options));
}

Record make_record(const Graph& g, Scenario scenario, const LabelVector& label) {
    Record record{scenario, AdjacencyImage::from_graph(g), {}};
    record.label.reserve(label.size());
    for (const double x : label.curve) record.label.push_back(static_cast<float>(x));
    record.label.push_back(static_cast<float>(label.robustness));
    return record;
}

DatasetManifest plan_dataset(const DatasetConfig& config) {
    if (config.per_config_count == 0 || config.per_config_count % 10 != 0) {
        throw ParameterError("per-config count must be a positive multiple of 10 for an 8/1/1 split");
    }
    if (config.models.empty() || config.avg_ks.empty()) {
        throw ParameterError("dataset needs at least one model and one mean degree");
    }
    if (config.steps == 0) throw ParameterError("curve needs at least one step");

    DatasetManifest manifest{config.scenario, config.steps, {}};
    for (const auto model : config.models) {
        for (const double k : config.avg_ks) {
            for (std::size_t i = 0; i < config.per_config_count; ++i) {
                const auto id = manifest.records.size();
                manifest.records.push_back({id, record_file_name(id),
                                            split_for_index(i, config.per_config_count), model, k,
                                            config.n, config.base_seed + id});
            }
        }
    }
    return manifest;
}

DatasetManifest build_dataset(const DatasetConfig& config, const std::filesystem::path& output_dir) {
    auto manifest = plan_dataset(config);
    const CurveSpec spec(config.steps);

    std::filesystem::create_directories(output_dir / "records");
    // Workers fill one chunk at a time; the chunk is then written in id order.
    const std::size_t chunk = std::max<std::size_t>(4 * config.threads, 16);
    std::vector<std::optional<Record>> pending(chunk);
    for (std::size_t first = 0; first < manifest.records.size(); first += chunk) {
        const auto count = std::min(chunk, manifest.records.size() - first);
        parallel_for(count, config.threads, [&](std::size_t k) {
            const auto& entry = manifest.records[first + k];
            const auto g = make_graph(entry.model, entry.n, entry.avg_k, entry.seed);
            pending[k] = make_record(g, config.scenario,
                                     simulate_label(g, config.scenario, spec, entry.seed, config.attack));
        });
        for (std::size_t k = 0; k < count; ++k) {
            write_record(output_dir / manifest.records[first + k].file, *pending[k]);
            pending[k].reset();
        }
    }
    write_manifest(output_dir / "manifest.json", manifest);
    return manifest;
}

nlohmann::json stats_json(const NetworkStats& stats) {
    return {{"name", stats.name},
            {"n", stats.n},
            {"m", stats.m},
            {"k", std::round(stats.mean_degree * 100.0) / 100.0},
            {"duplicates_dropped", stats.duplicates_dropped},
            {"self_loops_dropped", stats.self_loops_dropped}};
}

IngestedNetwork ingest_edge_list(const std::filesystem::path& path, std::string name) {
    auto imported = read_edge_list(path);
    NetworkStats stats{std::move(name),
                       imported.graph.node_count(),
                       imported.graph.edge_count(),
                       imported.graph.mean_degree(),
                       imported.duplicates_dropped,
                       imported.self_loops_dropped};
    return {std::move(imported.graph), std::move(stats)};
}

}  // namespace robustcurve
