#pragma once

// Instance checks relating Hilbert functions of mX to the lines of X that
// carry d_s points.

#include "kfp/cht.hpp"
#include "kfp/hilbert.hpp"
#include "kfp/kconfig.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kfp {

/// Multiplicity from which ΔH_{mX}(m d_s - 1) counts the full lines:
/// 2 if d_s > s, s+1 if d_s = s. Throws SinglePointType for type (1).
int m0(const KType& ktype);

struct VerificationReport {
  std::string config_id;
  KType ktype{std::vector<int>{1}};
  int m = 0;
  int t = 0;                       // m d_s - 1
  std::int64_t delta_value = 0;    // ΔH_{mX}(t)
  std::int64_t h_value = 0;        // H_{mX}(t)
  std::int64_t degree = 0;         // deg(mX)
  int line_count = 0;              // lines with exactly d_s points
  int m0 = 0;
  bool matches = false;
  bool asserted = false;           // m >= m0
  std::int64_t reduced_delta = 0;  // ΔH_X(d_s - 1)
  std::optional<int> ri;

  /// False only when an asserted identity fails.
  bool passed() const { return !asserted || (matches && h_value == degree); }
};

VerificationReport verify_main(const KConfiguration& x, int m, const std::string& config_id = "",
                               const RankOptions& options = {});

struct ReducedBoundReport {
  int tail_length = 0;
  std::int64_t reduced_delta = 0;  // ΔH_X(d_s - 1)
  std::int64_t reduced_value = 0;  // H_X(d_s - 1)
  int type_sum = 0;
  int line_count = 0;
  bool delta_is_tail = false;
  bool count_bounded = false;  // line_count <= reduced_delta + 1
  bool value_is_sum = false;

  bool passed() const { return delta_is_tail && count_bounded && value_is_sum; }
};

ReducedBoundReport verify_reduced_bound(const KConfiguration& x, const RankOptions& options = {});

struct RegularityReport {
  int m = 0;
  int expected = 0;
  int ri = 0;
  bool passed() const { return ri == expected; }
};

/// ri(mX) against m d_s - 1 (m - 1 for type (1)). Throws
/// MultiplicityBelowThreshold when m < s+1 and the type is not (1).
RegularityReport verify_regularity(const KConfiguration& x, int m, const RankOptions& options = {});

struct LastNonzeroReport {
  int m = 0;
  HilbertTable table;
  int last_t = -1;
  std::int64_t last_value = 0;
  int expected_t = 0;
  int line_count = 0;
  bool passed() const { return last_t == expected_t && last_value == line_count; }
};

/// Last nonzero entry of ΔH_{mX}; needs m >= m0 (MultiplicityBelowThreshold).
LastNonzeroReport verify_last_nonzero(const KConfiguration& x, int m, const RankOptions& options = {});

struct FamilyMember {
  int r = 0;
  KConfiguration config;
  HilbertTable reduced;
  bool reduced_ok = false;  // H_X(t) = min(C(t+2,2), C(s+1,2))
  HilbertTable table;       // H_{mX}
  std::int64_t value_at = 0;
  std::int64_t expected_at = 0;  // deg(mX) - r at t = m s - 2
};

struct FamilyReport {
  int s = 0;
  int m = 0;
  int t = 0;  // m s - 2
  std::vector<FamilyMember> members;
  /// Line counts with no configuration of type (1,...,s); for s = 2 this is {1, 2}.
  std::vector<int> unrealizable;
  bool distinct = false;

  bool passed() const;
};

/// One configuration of type (1,...,s) for each realizable r in 1..s+1 and the
/// Hilbert functions of their m-fold fattenings. passed() needs all s+1 counts
/// to be realized. Needs m >= s+1.
FamilyReport hilbert_family(int s, int m, std::uint64_t seed, const GeneratorOptions& gen = {},
                            const RankOptions& options = {});

}  // namespace kfp
