#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <sstream>

#include "robustcurve/errors.hpp"
#include "robustcurve/eval.hpp"
#include "robustcurve/generators.hpp"
#include "robustcurve/metrics.hpp"
#include "robustcurve/rng.hpp"

using namespace robustcurve;
namespace fs = std::filesystem;

namespace {

std::vector<std::vector<double>> random_rows(Rng& rng, std::size_t count, std::size_t length,
                                             double lo = 0.0, double hi = 1.0) {
    std::vector<std::vector<double>> rows(count, std::vector<double>(length));
    for (auto& row : rows)
        for (auto& x : row) x = lo + (hi - lo) * rng.uniform01();
    return rows;
}

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& name)
        : path(fs::temp_directory_path() / ("robustcurve_test_" + name)) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("curve set validation") {
    CHECK_THROWS_AS(CurveSet({{1.0, 2.0}, {1.0}}), ParameterError);
    CHECK_THROWS_AS(CurveSet({{1.0, NAN}}), ParameterError);
    CHECK_THROWS_AS(CurveSet({{INFINITY, 0.0}}), ParameterError);
    const CurveSet ok({{1.0, 2.0}, {3.0, 4.0}});
    CHECK(ok.size() == 2);
    CHECK(ok.length() == 2);
}

TEST_CASE("mean_std examples") {
    CHECK(mean_std(CurveSet({{0.3, 0.4}, {0.3, 0.4}})) == 0.0);
    CHECK(mean_std(CurveSet({{0.0, 0.0}, {1.0, 1.0}})) == 0.5);
    // Only the first position counts when length = 1.
    CHECK(mean_std(CurveSet({{0.0, 5.0}, {1.0, 5.0}}), 1) == 0.5);
    CHECK(mean_std(CurveSet({{0.0, 5.0}, {1.0, 5.0}})) == 0.25);
    CHECK_THROWS_AS(mean_std(CurveSet({{1.0, 2.0}})), ParameterError);
    CHECK_THROWS_AS(mean_std(CurveSet({{1.0}, {2.0}}), 2), ParameterError);
}

TEST_CASE("mean_std is invariant under reordering") {
    Rng rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        auto rows = random_rows(rng, 2 + rng.uniform_below(20), 30);
        const double before = mean_std(CurveSet(rows));
        rng.shuffle(std::span(rows));
        CHECK(mean_std(CurveSet(rows)) == doctest::Approx(before).epsilon(1e-12));
    }
}

TEST_CASE("mean_abs_diff examples and properties") {
    Rng rng(3);
    const auto sim = random_rows(rng, 10, 40);
    CHECK(mean_abs_diff(CurveSet(sim), CurveSet(sim)) == 0.0);

    auto shifted = sim;
    for (auto& row : shifted)
        for (auto& x : row) x += 0.01;
    CHECK(mean_abs_diff(CurveSet(shifted), CurveSet(sim)) == doctest::Approx(0.01).epsilon(1e-9));

    const auto other = random_rows(rng, 10, 40);
    CHECK(mean_abs_diff(CurveSet(other), CurveSet(sim)) == mean_abs_diff(CurveSet(sim), CurveSet(other)));

    CHECK_THROWS_AS(mean_abs_diff(CurveSet(sim), CurveSet(random_rows(rng, 9, 40))), ParameterError);
    CHECK_THROWS_AS(mean_abs_diff(CurveSet(sim), CurveSet(random_rows(rng, 10, 41))), ParameterError);
}

TEST_CASE("clamping never increases the error against feasible targets") {
    Rng rng(21);
    for (int trial = 0; trial < 50; ++trial) {
        const auto sim = random_rows(rng, 5, 25);
        const auto raw = random_rows(rng, 5, 25, -0.5, 1.5);
        std::vector<std::vector<double>> clamped;
        for (const auto& row : raw) clamped.push_back(clamp_filter(row));
        CHECK(mean_abs_diff(CurveSet(clamped), CurveSet(sim)) <= mean_abs_diff(CurveSet(raw), CurveSet(sim)));
    }
}

TEST_CASE("mean and std curves") {
    const CurveSet set({{0.0, 1.0}, {1.0, 1.0}});
    CHECK(mean_curve(set) == std::vector<double>{0.5, 1.0});
    CHECK(std_curve(set) == std::vector<double>{0.5, 0.0});
}

TEST_CASE("plot data export") {
    SUBCASE("constant curve") {
        std::stringstream out;
        export_plot_data(out, std::vector<double>(4, 0.7), std::vector<double>(4, 0.0));
        const auto data = read_plot_data(out);
        CHECK(data.std == std::vector<double>(4, 0.0));
        CHECK(data.p == std::vector<double>{0.0, 0.25, 0.5, 0.75});
    }
    SUBCASE("parse-back agrees to 9 significant digits") {
        Rng rng(6);
        const auto rows = random_rows(rng, 2, 1000);
        std::stringstream out;
        export_plot_data(out, rows[0], rows[1]);
        const auto text = out.str();
        CHECK(std::count(text.begin(), text.end(), '\n') == 1001);
        const auto data = read_plot_data(out);
        REQUIRE(data.mean.size() == 1000);
        for (std::size_t i = 0; i < 1000; ++i) {
            CHECK(std::abs(data.mean[i] - rows[0][i]) <= 5e-9 * std::abs(rows[0][i]));
            CHECK(std::abs(data.std[i] - rows[1][i]) <= 5e-9 * std::abs(rows[1][i]));
        }
    }
    SUBCASE("bad input") {
        CHECK_THROWS_AS(export_plot_data(std::cout, std::vector<double>{1.0}, std::vector<double>{}),
                        ParameterError);
        std::istringstream bad_header("p,value\n0,1\n");
        CHECK_THROWS_AS(read_plot_data(bad_header), FormatError);
        std::istringstream bad_row("p,mean,std\n0,1\n");
        CHECK_THROWS_AS(read_plot_data(bad_row), FormatError);
    }
}

TEST_CASE("curve csv") {
    std::ostringstream out;
    write_curve_csv(out, std::vector<double>{1.0, 2.0 / 3.0});
    CHECK(out.str() == "p,value\n0,1\n0.5,0.666666667\n");
}

TEST_CASE("evaluate_predictions against fresh simulation") {
    DatasetConfig config;
    config.models = {GraphModel::Er, GraphModel::Ba};
    config.avg_ks = {4};
    config.per_config_count = 10;
    config.n = 50;
    config.steps = 50;
    config.scenario = Scenario::Rnf;
    config.base_seed = 77;

    TempDir dir("eval");
    const auto manifest = build_dataset(config, dir.path);

    SUBCASE("ground truth as prediction") {
        const auto reports = evaluate_predictions(manifest, dir.path);
        REQUIRE(reports.size() == 2);
        CHECK(reports[0].model == GraphModel::Er);
        CHECK(reports[1].model == GraphModel::Ba);
        for (const auto& r : reports) {
            CHECK(r.n_networks == 10);
            CHECK(r.errors.e_pair < 1e-7);
            CHECK(r.robustness_direct_error < 1e-7);
            REQUIRE(r.errors.e_sim);
            CHECK(*r.errors.e_sim == doctest::Approx(*r.errors.e_pred).epsilon(1e-6));
        }
        const auto json = to_json(reports[0]);
        CHECK(json.at("model") == "er");
        CHECK(json.at("scenario") == "rnf");
    }
    SUBCASE("shifted predictions") {
        for (const auto& entry : manifest.records) {
            auto record = read_record(dir.path / entry.file);
            for (auto& x : record.label) x = static_cast<float>(x * 0.5);
            write_record(dir.path / entry.file, record);
        }
        EvalOptions options;
        options.split = Split::Test;
        const auto reports = evaluate_predictions(manifest, dir.path, options);
        REQUIRE(reports.size() == 2);
        CHECK(reports[0].n_networks == 1);
        CHECK_FALSE(reports[0].errors.e_sim);
        CHECK(to_json(reports[0]).at("e_sim").is_null());
        CHECK(reports[0].errors.e_pair > 0.1);
    }
    SUBCASE("label length mismatch") {
        auto wrong = manifest;
        wrong.steps = 40;
        CHECK_THROWS_AS(evaluate_predictions(wrong, dir.path), FormatError);
    }
}

TEST_CASE("bench reports medians and speedups") {
    const auto g = generate_er(300, 6, 2);
    BenchOptions options;
    options.repeats = 3;
    int calls = 0;
    options.engines = {Engine::Naive, Engine::Incremental, Engine::Model};
    options.model = [&calls] { ++calls; };
    const auto rows = bench(g, Scenario::Hedaa, CurveSpec(300), options);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].speedup == 1.0);
    CHECK(rows[1].speedup > 1.0);
    CHECK(calls == 3);

    options.model = nullptr;
    CHECK_THROWS_AS(bench(g, Scenario::Hedaa, CurveSpec(300), options), ParameterError);
    CHECK(parse_engine("incremental") == Engine::Incremental);
    CHECK_THROWS_AS(parse_engine("gpu"), ParameterError);
}
