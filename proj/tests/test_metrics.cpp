#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "robustcurve/attack.hpp"
#include "robustcurve/errors.hpp"
#include "robustcurve/generators.hpp"
#include "robustcurve/metrics.hpp"
#include "robustcurve/rng.hpp"

using namespace robustcurve;

namespace {

std::vector<double> random_vector(Rng& rng, std::size_t n, double lo, double hi) {
    std::vector<double> v(n);
    for (auto& x : v) x = lo + (hi - lo) * rng.uniform01();
    return v;
}

}  // namespace

TEST_CASE("robustness is the curve mean") {
    const std::vector<double> curve = {1.0, 0.5, 0.5};
    CHECK(robustness(curve) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK_THROWS_AS(robustness(std::vector<double>{}), ParameterError);

    std::vector<Edge> edges;
    for (NodeId u = 0; u < 10; ++u)
        for (NodeId v = u + 1; v < 10; ++v) edges.push_back({u, v});
    const Graph k10(10, edges);
    for (const auto s : {Scenario::Rnf, Scenario::Hdaa}) {
        CHECK(std::abs(robustness(simulate(k10, s, CurveSpec(10), 4)) - 0.55) < 1e-12);
    }

    std::vector<Edge> spokes;
    for (NodeId v = 1; v < 10; ++v) spokes.push_back({0, v});
    CHECK(std::abs(robustness(simulate(Graph(10, spokes), Scenario::Hdaa, CurveSpec(10), 0)) - 0.19) <
          1e-12);
}

TEST_CASE("robustness stays within the curve range") {
    Rng rng(5);
    for (int i = 0; i < 200; ++i) {
        const auto v = random_vector(rng, 1 + rng.uniform_below(1500), -2.0, 3.0);
        const double r = robustness(v);
        CHECK(r >= *std::min_element(v.begin(), v.end()));
        CHECK(r <= *std::max_element(v.begin(), v.end()));
    }
    const std::vector<double> flat(1001, 0.1);
    CHECK(robustness(flat) == 0.1);
}

TEST_CASE("label_vector appends robustness") {
    const auto label = label_vector(std::vector<double>{1.0, 0.5, 0.5});
    const auto flat = label.flatten();
    REQUIRE(flat.size() == 4);
    CHECK(flat[3] == doctest::Approx(2.0 / 3.0));

    const auto g = generate_er(1000, 4, 1);
    const auto full = label_vector(simulate(g, Scenario::Rnf, CurveSpec(1000), 1));
    CHECK(full.size() == 1001);
    CHECK(full.flatten().size() == 1001);

    CHECK(label_vector(std::vector<double>(7, 1.0)).robustness == 1.0);
}

TEST_CASE("label round-trip recomputes the same robustness") {
    Rng rng(17);
    for (int i = 0; i < 100; ++i) {
        const auto curve = random_vector(rng, 1 + rng.uniform_below(300), 0.0, 1.0);
        const auto flat = label_vector(curve).flatten();
        const auto back = unflatten_label(flat);
        CHECK(back.curve == curve);
        CHECK(robustness(back.curve) == back.robustness);
    }
    CHECK_THROWS_AS(unflatten_label(std::vector<double>{0.5}), ParameterError);
}

TEST_CASE("clamp_filter") {
    CHECK(clamp_filter(std::vector<double>{1.2, -0.1, 0.5}) == std::vector<double>{1.0, 0.0, 0.5});
    CHECK(clamp_filter(std::vector<double>{0.3, 0.7}) == std::vector<double>{0.3, 0.7});
    // No monotonicity repair.
    CHECK(clamp_filter(std::vector<double>{0.2, 0.6}) == std::vector<double>{0.2, 0.6});

    Rng rng(8);
    for (int i = 0; i < 100; ++i) {
        const auto v = random_vector(rng, 50, -1.0, 2.0);
        const auto once = clamp_filter(v);
        CHECK(std::all_of(once.begin(), once.end(), [](double x) { return x >= 0.0 && x <= 1.0; }));
        CHECK(clamp_filter(once) == once);
    }
}
