#include "kfp/scheme.hpp"

#include "kfp/error.hpp"

#include <algorithm>
#include <numeric>

namespace kfp {

FatPointScheme FatPointScheme::from_points(std::span<const ProjPoint> points, std::span<const int> mults) {
  if (points.size() != mults.size()) {
    throw Error(ErrorCode::LengthMismatch, std::to_string(points.size()) + " points but " +
                                               std::to_string(mults.size()) + " multiplicities");
  }
  FatPointScheme z;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (mults[i] < 1) {
      throw Error(ErrorCode::NonPositiveMultiplicity, "multiplicity " + std::to_string(mults[i]) + " at " + points[i].str());
    }
    if (!z.entries_.emplace(points[i], mults[i]).second) {
      throw Error(ErrorCode::DuplicatePoint, points[i].str());
    }
  }
  return z;
}

FatPointScheme FatPointScheme::homogeneous(std::span<const ProjPoint> points, int m) {
  std::vector<int> mults(points.size(), m);
  return from_points(points, mults);
}

int FatPointScheme::max_multiplicity() const {
  int m = 0;
  for (const auto& [p, mult] : entries_) m = std::max(m, mult);
  return m;
}

std::int64_t FatPointScheme::degree() const {
  std::int64_t d = 0;
  for (const auto& [p, mult] : entries_) d += choose2(mult + 1);
  return d;
}

std::int64_t line_degree(const FatPointScheme& z, const ProjLine& l) {
  std::int64_t d = 0;
  for (const auto& [p, mult] : z.entries()) {
    if (incident(p, l)) d += mult;
  }
  return d;
}

FatPointScheme residual(const FatPointScheme& z, const ProjLine& l) {
  std::vector<ProjPoint> points;
  std::vector<int> mults;
  for (const auto& [p, mult] : z.entries()) {
    int m = incident(p, l) ? mult - 1 : mult;
    if (m == 0) continue;
    points.push_back(p);
    mults.push_back(m);
  }
  return FatPointScheme::from_points(points, mults);
}

std::int64_t ReductionVector::sum() const { return std::accumulate(values.begin(), values.end(), std::int64_t{0}); }

ReductionVector reduction_vector(const FatPointScheme& z, std::span<const ProjLine> lines) {
  ReductionVector v;
  FatPointScheme current = z;
  for (const auto& l : lines) {
    v.values.push_back(line_degree(current, l));
    v.lines.push_back(l);
    current = residual(current, l);
  }
  v.complete = current.empty();
  return v;
}

std::vector<FatPointScheme> residual_chain(const FatPointScheme& z, std::span<const ProjLine> lines) {
  std::vector<FatPointScheme> chain{z};
  for (const auto& l : lines) chain.push_back(residual(chain.back(), l));
  return chain;
}

}  // namespace kfp
