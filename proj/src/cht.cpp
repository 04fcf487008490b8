#include "kfp/cht.hpp"

#include "kfp/error.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace kfp {

std::int64_t f_lower(std::span<const std::int64_t> v, int t) {
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    sum += std::max<std::int64_t>(0, std::min<std::int64_t>(t - static_cast<std::int64_t>(i) + 1, v[i]));
  }
  return sum;
}

std::int64_t F_upper(std::span<const std::int64_t> v, int t) {
  std::int64_t tail = std::accumulate(v.begin(), v.end(), std::int64_t{0});
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  const std::int64_t top = choose2(t + 2);
  for (std::size_t i = 0; i <= v.size(); ++i) {
    best = std::min(best, top - choose2(t - static_cast<std::int64_t>(i) + 2) + tail);
    if (i < v.size()) tail -= v[i];
  }
  return best;
}

namespace {
void require_complete(const ReductionVector& v) {
  if (!v.complete) throw Error(ErrorCode::IncompleteReduction, "reduction does not exhaust the scheme");
}
}  // namespace

std::int64_t f_lower(const ReductionVector& v, int t) {
  require_complete(v);
  return f_lower(std::span<const std::int64_t>(v.values), t);
}

std::int64_t F_upper(const ReductionVector& v, int t) {
  require_complete(v);
  return F_upper(std::span<const std::int64_t>(v.values), t);
}

BoundReport bound_check(const FatPointScheme& z, std::span<const ProjLine> lines, int t, const RankOptions& options) {
  BoundReport rep;
  rep.t = t;
  rep.v = reduction_vector(z, lines);
  rep.f_lower = f_lower(rep.v, t);
  rep.F_upper = F_upper(rep.v, t);
  rep.exact = hilbert_value(z, t, options);
  rep.tight = rep.f_lower == rep.F_upper;
  if (!(rep.f_lower <= *rep.exact && *rep.exact <= rep.F_upper)) {
    throw Error(ErrorCode::SandwichViolation, "t=" + std::to_string(t) + ": f=" + std::to_string(rep.f_lower) +
                                                  " H=" + std::to_string(*rep.exact) + " F=" + std::to_string(rep.F_upper));
  }
  return rep;
}

std::string to_string(PeelingStrategy s) {
  switch (s) {
    case PeelingStrategy::RepeatDescending: return "repeat";
    case PeelingStrategy::Star: return "star";
    case PeelingStrategy::Augmented: return "augmented";
  }
  return "?";
}

PeelingStrategy parse_strategy(const std::string& name) {
  if (name == "repeat") return PeelingStrategy::RepeatDescending;
  if (name == "star") return PeelingStrategy::Star;
  if (name == "augmented") return PeelingStrategy::Augmented;
  throw Error(ErrorCode::Parse, "unknown strategy '" + name + "' (repeat, star, augmented)");
}

std::vector<ProjLine> peeling_sequence(const KConfiguration& x, int m, PeelingStrategy strategy, std::uint64_t seed,
                                       long coord_bound) {
  if (m < 1) throw Error(ErrorCode::NonPositiveMultiplicity, "m = " + std::to_string(m));
  std::vector<ProjLine> descending(x.lines.rbegin(), x.lines.rend());
  std::vector<ProjLine> out;

  if (strategy == PeelingStrategy::RepeatDescending) {
    for (int k = 0; k < m; ++k) out.insert(out.end(), descending.begin(), descending.end());
    return out;
  }

  if (!x.ktype.is_standard() || x.ktype.s() < 2) {
    throw Error(ErrorCode::StrategyInapplicable, to_string(strategy) + " needs type (1,...,s) with s >= 2");
  }
  const CaseReport c = classify_case(x);

  if (strategy == PeelingStrategy::Star) {
    if (c.tag != LineCase::Many || !c.structure_ok) {
      throw Error(ErrorCode::StrategyInapplicable, "star peeling needs s+1 full lines meeting pairwise in X");
    }
    std::vector<ProjLine> round(c.full_lines.rbegin(), c.full_lines.rend());
    for (int k = 0; k < (m + 1) / 2; ++k) out.insert(out.end(), round.begin(), round.end());
    return out;
  }

  // Augmented
  const int s = x.ktype.s();
  if (c.tag != LineCase::Exact || !c.structure_ok ||
      !std::equal(x.lines.begin(), x.lines.end(), c.full_lines.begin())) {
    throw Error(ErrorCode::StrategyInapplicable, "augmented peeling needs the defining lines to be the s full lines");
  }
  if (m < 2) throw Error(ErrorCode::StrategyInapplicable, "augmented peeling needs m >= 2");
  for (int k = 0; k < m - 1; ++k) out.insert(out.end(), descending.begin(), descending.end());

  const auto& priv = c.private_points;
  const ProjLine h = line_through(priv[0], priv[1]);
  out.push_back(h);
  std::vector<ProjPoint> q;
  for (int i = 0; i < s; ++i) {
    if (!incident(priv[static_cast<std::size_t>(i)], h)) q.push_back(priv[static_cast<std::size_t>(i)]);
  }
  const auto pts = x.points();
  Rng rng(seed);
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (int tries = 0;; ++tries) {
      if (tries > 10000) throw Error(ErrorCode::GenerationFailed, "no line through " + q[i].str() + " avoiding X");
      ProjPoint r = random_point(rng, coord_bound);
      if (r == q[i]) continue;
      ProjLine l = line_through(q[i], r);
      bool clean = std::none_of(pts.begin(), pts.end(), [&](const ProjPoint& p) { return p != q[i] && incident(p, l); });
      if (clean) {
        out.push_back(l);
        break;
      }
    }
  }
  return out;
}

}  // namespace kfp
