#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "epshull/geom.hpp"
#include "epshull/stream_io.hpp"

namespace epshull::bench {

struct SuiteReport {
    std::string name;
    bool pass = false;
    std::string detail;
    std::vector<ResultRow> rows;
};

/// Scale (and center) so the exact diameter is 1. No-op for degenerate sets.
std::vector<Vec2> normalize_unit_diameter(std::vector<Vec2> pts);

/// ROA validity on every prefix checkpoint across disk/circle/grid streams,
/// trial t running configuration t mod 6.
SuiteReport roa_correctness(int trials, std::uint64_t seed);

/// ROA peak size against 10 * OPT_bd * log2(n) on disk streams, plus the
/// grid-growth contrast between insertion-only and full ROA.
SuiteReport roa_space(int seeds_per_size, int grid_seeds, std::uint64_t seed);

/// Multipass pass counts against 3 + ceil(log2(1/eps)) on diameter-normalized
/// streams; exceedances up to one extra pass are reported, anything beyond
/// fails.
SuiteReport multipass_pass_bound(int trials_per_eps, std::uint64_t seed);

/// Multipass output cardinality <= 6*OPT and peak words <= 24*OPT + 16 on
/// brute-force-verifiable instances.
SuiteReport multipass_card_space(int instances, std::uint64_t seed);

/// Per-run hook for cross-checking the Monte-Carlo estimate; receives the
/// reduced 2D hulls when dim == 2 (empty otherwise).
using BadFractionHook = std::function<void(int dim, int k, std::uint64_t seed,
                                           const std::vector<Vec2>& hull_p,
                                           const std::vector<Vec2>& sketch_out, double mc)>;

/// (eps,delta) guarantee over seeds for d in {2,3}, k-gon streams k in {4,6}.
SuiteReport epsdelta_guarantee(int seeds_per_config, std::uint64_t seed,
                               const BadFractionHook& hook = nullptr);

/// Lower-bound construction demo: layer meaningfulness, constructive OPT
/// witnesses, greedy-keeper retention and the f(x)=x growth comparison.
SuiteReport lower_bound_demo();

}  // namespace epshull::bench
