#pragma once

// k-configurations of type (d_1 < ... < d_s): subsets X_i of d_i points on
// distinct lines L_i, where L_i contains no point of X_j for j < i.

#include "kfp/geom.hpp"
#include "kfp/scheme.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace kfp {

class KType {
 public:
  /// Throws InvalidType unless 1 <= d_1 < ... < d_s and s >= 1.
  explicit KType(std::vector<int> d);

  const std::vector<int>& d() const noexcept { return d_; }
  int s() const noexcept { return static_cast<int>(d_.size()); }
  int d(int i) const { return d_.at(static_cast<std::size_t>(i - 1)); }  // 1-based
  int d_s() const { return d_.back(); }
  /// Number of consecutive integers ending the type.
  int tail_length() const;
  int sum() const;
  /// (1, 2, ..., s)
  bool is_standard() const { return d_s() == s(); }
  bool is_single_point() const { return d_.size() == 1 && d_[0] == 1; }
  std::string str() const;

  static KType standard(int s);

  friend bool operator==(const KType&, const KType&) = default;

 private:
  std::vector<int> d_;
};

struct KConfiguration {
  KType ktype;
  std::vector<std::vector<ProjPoint>> subsets;  // X_1..X_s
  std::vector<ProjLine> lines;                   // L_1..L_s

  std::vector<ProjPoint> points() const;
  /// Number of points of X on L_i (1-based).
  int points_on_line(int i) const;
};

struct Violation {
  std::string rule;
  std::string detail;
};

/// Every violated condition; empty means valid.
std::vector<Violation> validate(const KConfiguration& x);
/// Throws InvalidConfiguration listing the violations.
void require_valid(const KConfiguration& x);

struct GeneratorOptions {
  /// Bound on the absolute value of every point coordinate.
  long coord_bound = 50;
  int max_attempts = 2000;

  /// Defaults, with coord_bound overridden by KCONFIG_COORD_BOUND if set.
  static GeneratorOptions from_env();
};

/// s random lines with d_i points on L_i in general position: no point on a
/// second defining line and no three points collinear off the defining lines.
KConfiguration generate_generic(const KType& ktype, std::uint64_t seed, const GeneratorOptions& options = {});

/// Line counts r for which a configuration of the type with exactly r lines
/// carrying d_s points exists: 1..tail_length, plus s+1 for type (1, ..., s).
/// Type (1,2) only admits r = 3 and type (1) admits none.
std::vector<int> feasible_line_counts(const KType& ktype);

/// Type (1, ..., s) with exactly r lines containing s points, r in
/// feasible_line_counts.
KConfiguration generate_with_line_count(int s, int r, std::uint64_t seed, const GeneratorOptions& options = {});

/// Any type with exactly r lines containing d_s points. The last r defining
/// lines are made full, so r may range over 1..tail_length, plus s+1 for
/// the standard type (but see feasible_line_counts). Throws InvalidLineCount
/// otherwise.
KConfiguration generate_with_line_count(const KType& ktype, int r, std::uint64_t seed,
                                        const GeneratorOptions& options = {});

struct LineCount {
  int count = 0;
  std::vector<ProjLine> lines;  // sorted
};

/// Lines through pairs of points meeting the set in exactly k points.
LineCount count_lines(std::span<const ProjPoint> points, int k);
LineCount count_lines(const KConfiguration& x, int k);

/// Superset of the lines carrying d_s points: the defining lines, plus the
/// two joins of X_1 with the points of X_2 when d_s = s.
std::vector<ProjLine> candidate_lines(const KConfiguration& x);

/// Indices i (1-based) with |L_i ∩ X| = d_s.
std::vector<int> full_defining_lines(const KConfiguration& x);

/// Rearranges subsets and lines so that the defining lines carrying d_s
/// points are exactly the trailing ones. Returns x unchanged when it is
/// already in that form.
KConfiguration relabel_canonical(const KConfiguration& x);

enum class LineCase { Many, Exact, Few };

std::string to_string(LineCase c);

struct CaseReport {
  LineCase tag = LineCase::Few;
  int r = 0;
  std::vector<ProjLine> full_lines;
  /// Many: X is the set of pairwise meets of the full lines.
  /// Exact: each full line has s-1 meets with the others plus one private point.
  bool structure_ok = true;
  /// Exact only: the private point of each full line, in full_lines order.
  std::vector<ProjPoint> private_points;
};

/// Trichotomy for type (1, ..., s), s >= 2; throws TypeMismatch otherwise.
/// Full lines are listed defining lines first (by index), then the others.
CaseReport classify_case(const KConfiguration& x);

FatPointScheme fatten(const KConfiguration& x, int m);

/// Seeded engine used by the generators.
using Rng = std::mt19937_64;

/// A random point of l with coordinates bounded by `bound`.
ProjPoint random_point_on(const ProjLine& l, Rng& rng, long bound);
/// A random point with coordinates in [-bound, bound].
ProjPoint random_point(Rng& rng, long bound);

}  // namespace kfp
