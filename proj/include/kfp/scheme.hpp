#pragma once

// Fat point schemes: finitely many distinct points, each with a positive
// multiplicity. Residuals with respect to a line are computed by decrementing
// the multiplicity of every support point on the line.

#include "kfp/geom.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace kfp {

class FatPointScheme {
 public:
  FatPointScheme() = default;

  /// Throws LengthMismatch, DuplicatePoint or NonPositiveMultiplicity.
  static FatPointScheme from_points(std::span<const ProjPoint> points, std::span<const int> mults);
  /// mX: every point with multiplicity m.
  static FatPointScheme homogeneous(std::span<const ProjPoint> points, int m);

  const std::map<ProjPoint, int>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }
  std::size_t size() const noexcept { return entries_.size(); }
  int max_multiplicity() const;
  std::int64_t degree() const;

  friend bool operator==(const FatPointScheme&, const FatPointScheme&) = default;

 private:
  std::map<ProjPoint, int> entries_;
};

/// Sum of multiplicities of support points lying on l.
std::int64_t line_degree(const FatPointScheme& z, const ProjLine& l);

FatPointScheme residual(const FatPointScheme& z, const ProjLine& l);

struct ReductionVector {
  std::vector<std::int64_t> values;
  std::vector<ProjLine> lines;
  bool complete = false;

  std::int64_t sum() const;
};

ReductionVector reduction_vector(const FatPointScheme& z, std::span<const ProjLine> lines);

/// Z_0 = z, Z_i = residual(Z_{i-1}, lines[i-1]); size lines.size() + 1.
std::vector<FatPointScheme> residual_chain(const FatPointScheme& z, std::span<const ProjLine> lines);

}  // namespace kfp
