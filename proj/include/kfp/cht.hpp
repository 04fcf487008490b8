#pragma once

// Lower and upper bounds on the Hilbert function of a fat point scheme from a
// complete reduction vector v = (v_1, ..., v_r):
//
//   f_v(t) = sum_{i=0}^{r-1} max(0, min(t - i + 1, v_{i+1}))
//   F_v(t) = min_{0<=i<=r} ( C(t+2,2) - C(t-i+2,2) + sum_{j>i} v_j )
//
// with C(n,2) = 0 for n < 2.

#include "kfp/hilbert.hpp"
#include "kfp/kconfig.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace kfp {

std::int64_t f_lower(std::span<const std::int64_t> v, int t);
std::int64_t F_upper(std::span<const std::int64_t> v, int t);

/// Both throw IncompleteReduction unless v.complete.
std::int64_t f_lower(const ReductionVector& v, int t);
std::int64_t F_upper(const ReductionVector& v, int t);

struct BoundReport {
  int t = 0;
  std::int64_t f_lower = 0;
  std::int64_t F_upper = 0;
  std::optional<std::int64_t> exact;
  bool tight = false;
  ReductionVector v;
};

/// Computes v, both bounds and the exact value. Throws IncompleteReduction,
/// or SandwichViolation if f <= H <= F fails.
BoundReport bound_check(const FatPointScheme& z, std::span<const ProjLine> lines, int t,
                        const RankOptions& options = {});

enum class PeelingStrategy { RepeatDescending, Star, Augmented };

std::string to_string(PeelingStrategy s);
/// Accepts "repeat", "star", "augmented"; throws Parse.
PeelingStrategy parse_strategy(const std::string& name);

/// Line sequences whose reduction of mX is complete:
///  RepeatDescending  (L_s .. L_1) repeated m times
///  Star              (H_{s+1}, H_s, .., H_1) repeated ceil(m/2) times, where
///                    the H are the s+1 full lines of a pairwise-meet configuration
///  Augmented         (L_s .. L_1) repeated m-1 times, then the line H through
///                    the private points P_1, P_2, then one line through each
///                    private point Q_i off H, each missing the later Q_j and
///                    every other point of X
/// Star and Augmented throw StrategyInapplicable on configurations of the
/// wrong shape. The seed drives the random second point of each H_i.
std::vector<ProjLine> peeling_sequence(const KConfiguration& x, int m, PeelingStrategy strategy,
                                       std::uint64_t seed = 0, long coord_bound = 50);

}  // namespace kfp
