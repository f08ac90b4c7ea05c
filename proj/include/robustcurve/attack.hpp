#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "robustcurve/graph.hpp"

namespace robustcurve {

/// Removal scenario. The numeric values are the on-disk scenario codes.
enum class Scenario : std::uint8_t {
    Rnf = 0,    ///< random node failure
    Hdaa = 1,   ///< high-degree attack
    Ref = 2,    ///< random edge failure
    Hedaa = 3,  ///< high-edge-degree attack
};

enum class RemovalTarget { Nodes, Edges };

constexpr RemovalTarget target_of(Scenario s) noexcept {
    return s == Scenario::Rnf || s == Scenario::Hdaa ? RemovalTarget::Nodes : RemovalTarget::Edges;
}

constexpr bool is_random(Scenario s) noexcept { return s == Scenario::Rnf || s == Scenario::Ref; }

std::string_view to_string(Scenario s) noexcept;
/// Accepts "rnf", "hdaa", "ref", "hedaa" in any case.
Scenario parse_scenario(std::string_view text);
Scenario scenario_from_code(std::uint8_t code);

/// Removal-fraction grid p_j = j / steps, j = 0..steps-1.
class CurveSpec {
  public:
    explicit CurveSpec(std::size_t steps);

    std::size_t steps() const noexcept { return steps_; }
    double p(std::size_t j) const noexcept {
        return static_cast<double>(j) / static_cast<double>(steps_);
    }
    /// round_half_up(p_j * population), computed in exact integer arithmetic.
    std::size_t removal_count(std::size_t j, std::size_t population) const noexcept {
        return (2 * j * population + steps_) / (2 * steps_);
    }

  private:
    std::size_t steps_;
};

/// Total order over node ids or edge ids; the first k items are the set
/// removed when k items have to go.
struct RemovalOrder {
    RemovalTarget target = RemovalTarget::Nodes;
    std::vector<std::uint32_t> items;
};

/// values[j] is the LCC size relative to N at p_j.
using AttackCurve = std::vector<double>;

struct AttackOptions {
    /// Recompute degrees on the residual graph after every single removal
    /// instead of ranking once on the original graph. Ignored for RNF/REF.
    bool adaptive = false;
};

/// RNF/REF: seeded uniform permutation. HDAA/HEDAA: descending degree /
/// edge degree on the original graph, ties by ascending node id / edge pair.
RemovalOrder removal_order(const Graph& g, Scenario scenario, std::uint64_t seed,
                           AttackOptions options = {});

/// Single reverse union-find pass: items are re-inserted from the back of
/// the order and the largest component is sampled at every prefix boundary.
AttackCurve attack_curve(const Graph& g, const RemovalOrder& order, const CurveSpec& spec);

/// Reference engine: rebuilds the residual graph and runs a BFS for every p_j.
AttackCurve naive_attack_curve(const Graph& g, const RemovalOrder& order, const CurveSpec& spec);

/// Random scenarios only: draws an independent removal set for every p_j
/// instead of nested prefixes. The result need not be monotone.
/// For HDAA/HEDAA this equals attack_curve on the static order.
AttackCurve resampled_attack_curve(const Graph& g, Scenario scenario, const CurveSpec& spec,
                                   std::uint64_t seed);

struct EnsembleOptions {
    std::size_t threads = 1;
    bool adaptive = false;
    bool resample = false;
};

/// One curve per realization, realization r seeded with seed + r. The
/// deterministic attacks always return a single curve.
std::vector<AttackCurve> curve_ensemble(const Graph& g, Scenario scenario, const CurveSpec& spec,
                                        std::size_t realizations, std::uint64_t seed,
                                        EnsembleOptions options = {});

/// Convenience: removal_order followed by attack_curve.
AttackCurve simulate(const Graph& g, Scenario scenario, const CurveSpec& spec, std::uint64_t seed,
                     AttackOptions options = {});

}  // namespace robustcurve
