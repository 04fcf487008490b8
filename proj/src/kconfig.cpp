#include "kfp/kconfig.hpp"

#include "kfp/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <set>

namespace kfp {

KType::KType(std::vector<int> d) : d_(std::move(d)) {
  if (d_.empty()) throw Error(ErrorCode::InvalidType, "empty type");
  if (d_.front() < 1) throw Error(ErrorCode::InvalidType, "entries must be positive");
  for (std::size_t i = 1; i < d_.size(); ++i) {
    if (d_[i] <= d_[i - 1]) throw Error(ErrorCode::InvalidType, "type " + str() + " is not strictly increasing");
  }
}

int KType::tail_length() const {
  int t = 1;
  while (t < s() && d_[d_.size() - 1 - t] == d_s() - t) ++t;
  return t;
}

int KType::sum() const { return std::accumulate(d_.begin(), d_.end(), 0); }

std::string KType::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < d_.size(); ++i) out += (i ? "," : "") + std::to_string(d_[i]);
  return out + ")";
}

KType KType::standard(int s) {
  std::vector<int> d(static_cast<std::size_t>(std::max(s, 0)));
  std::iota(d.begin(), d.end(), 1);
  return KType(std::move(d));
}

std::vector<ProjPoint> KConfiguration::points() const {
  std::vector<ProjPoint> out;
  for (const auto& xi : subsets) out.insert(out.end(), xi.begin(), xi.end());
  return out;
}

int KConfiguration::points_on_line(int i) const {
  auto pts = points();
  return static_cast<int>(count_on(pts, lines.at(static_cast<std::size_t>(i - 1))));
}

std::vector<Violation> validate(const KConfiguration& x) {
  std::vector<Violation> out;
  const int s = x.ktype.s();
  if (static_cast<int>(x.subsets.size()) != s || static_cast<int>(x.lines.size()) != s) {
    out.push_back({"shape", "type " + x.ktype.str() + " needs " + std::to_string(s) + " subsets and lines, got " +
                                std::to_string(x.subsets.size()) + " and " + std::to_string(x.lines.size())});
    return out;
  }
  for (int i = 0; i < s; ++i) {
    for (int j = i + 1; j < s; ++j) {
      if (x.lines[i] == x.lines[j]) {
        out.push_back({"distinct lines", "L_" + std::to_string(i + 1) + " = L_" + std::to_string(j + 1)});
      }
    }
  }
  std::set<ProjPoint> seen;
  for (int i = 0; i < s; ++i) {
    const auto& xi = x.subsets[i];
    const std::string tag = "X_" + std::to_string(i + 1);
    if (static_cast<int>(xi.size()) != x.ktype.d(i + 1)) {
      out.push_back({"condition 2", "|" + tag + "| = " + std::to_string(xi.size()) + " but d_" + std::to_string(i + 1) +
                                        " = " + std::to_string(x.ktype.d(i + 1))});
    }
    for (const auto& p : xi) {
      if (!incident(p, x.lines[i])) out.push_back({"condition 2", p.str() + " in " + tag + " is not on L_" + std::to_string(i + 1)});
      if (!seen.insert(p).second) out.push_back({"disjoint subsets", p.str() + " appears twice"});
    }
  }
  for (int i = 1; i < s; ++i) {
    for (int j = 0; j < i; ++j) {
      for (const auto& p : x.subsets[j]) {
        if (incident(p, x.lines[i])) {
          out.push_back({"condition 3", "L_" + std::to_string(i + 1) + " contains " + p.str() + " of X_" + std::to_string(j + 1)});
        }
      }
    }
  }
  return out;
}

void require_valid(const KConfiguration& x) {
  auto v = validate(x);
  if (v.empty()) return;
  std::string msg;
  for (const auto& e : v) msg += (msg.empty() ? "" : "; ") + e.rule + ": " + e.detail;
  throw Error(ErrorCode::InvalidConfiguration, msg);
}

GeneratorOptions GeneratorOptions::from_env() {
  GeneratorOptions o;
  if (const char* env = std::getenv("KCONFIG_COORD_BOUND")) {
    try {
      std::size_t used = 0;
      long b = std::stol(env, &used);
      if (used != std::string(env).size() || b < 1) throw std::invalid_argument(env);
      o.coord_bound = b;
    } catch (const std::exception&) {
      throw Error(ErrorCode::Parse, std::string("KCONFIG_COORD_BOUND must be a positive integer, got '") + env + "'");
    }
  }
  return o;
}

namespace {

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

long max_abs(const Triple& t) {
  long m = 0;
  for (const auto& v : t) m = std::max(m, Integer(abs(v)).get_si());
  return m;
}

// Line coefficients small enough that pairwise meets respect the coordinate bound.
long line_bound(long coord_bound) {
  return std::max(1L, static_cast<long>(std::floor(std::sqrt(static_cast<double>(coord_bound) / 2.0))));
}

ProjLine random_line(Rng& rng, long bound) {
  for (;;) {
    long a = uniform(rng, -bound, bound), b = uniform(rng, -bound, bound), c = uniform(rng, -bound, bound);
    if (a || b || c) return ProjLine(a, b, c);
  }
}

// Distinct lines, no three through a common point.
std::vector<ProjLine> random_lines(std::size_t n, Rng& rng, long bound) {
  std::vector<ProjLine> lines;
  while (lines.size() < n) {
    ProjLine l = random_line(rng, bound);
    bool ok = std::find(lines.begin(), lines.end(), l) == lines.end();
    for (std::size_t i = 0; ok && i < lines.size(); ++i) {
      for (std::size_t j = i + 1; ok && j < lines.size(); ++j) ok = !incident(meet(lines[i], lines[j]), l);
    }
    if (ok) lines.push_back(l);
  }
  return lines;
}

// Incremental placement keeping points off foreign defining lines and off
// every join of two placed points other than their own line.
class Placer {
 public:
  explicit Placer(const std::vector<ProjLine>& lines) : lines_(lines) {}

  void add(const ProjPoint& p) {
    for (const auto& q : placed_) {
      ProjLine l = line_through(p, q);
      if (std::find(joins_.begin(), joins_.end(), l) == joins_.end()) joins_.push_back(l);
    }
    placed_.push_back(p);
  }

  bool acceptable(const ProjPoint& p, std::size_t own) const {
    if (std::find(placed_.begin(), placed_.end(), p) != placed_.end()) return false;
    for (std::size_t j = 0; j < lines_.size(); ++j) {
      if (j != own && incident(p, lines_[j])) return false;
    }
    for (const auto& l : joins_) {
      if (l != lines_[own] && incident(p, l)) return false;
    }
    return true;
  }

  /// False if no acceptable point turned up.
  bool place(std::size_t own, std::vector<ProjPoint>& into, Rng& rng, long bound) {
    for (int tries = 0; tries < 400; ++tries) {
      ProjPoint p = random_point_on(lines_[own], rng, bound);
      if (!acceptable(p, own)) continue;
      add(p);
      into.push_back(p);
      return true;
    }
    return false;
  }

 private:
  const std::vector<ProjLine>& lines_;
  std::vector<ProjPoint> placed_;
  std::vector<ProjLine> joins_;
};

}  // namespace

ProjPoint random_point_on(const ProjLine& l, Rng& rng, long bound) {
  const Triple& c = l.coords();
  const Triple e[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  std::vector<Triple> basis;
  for (const auto& ek : e) {
    Triple u = cross(c, ek);
    if (u == Triple{0, 0, 0}) continue;
    if (basis.empty() || cross(basis[0], u) != Triple{0, 0, 0}) basis.push_back(u);
    if (basis.size() == 2) break;
  }
  const long k = std::max(1L, bound / (2 * std::max(max_abs(basis[0]), max_abs(basis[1]))));
  for (;;) {
    long lam = uniform(rng, -k, k), mu = uniform(rng, -k, k);
    if (lam == 0 && mu == 0) continue;
    Triple p;
    for (int i = 0; i < 3; ++i) p[i] = lam * basis[0][i] + mu * basis[1][i];
    return ProjPoint(p);
  }
}

ProjPoint random_point(Rng& rng, long bound) {
  for (;;) {
    long a = uniform(rng, -bound, bound), b = uniform(rng, -bound, bound), c = uniform(rng, -bound, bound);
    if (a || b || c) return ProjPoint(a, b, c);
  }
}

KConfiguration generate_generic(const KType& ktype, std::uint64_t seed, const GeneratorOptions& options) {
  Rng rng(seed);
  const long lb = line_bound(options.coord_bound);
  const auto s = static_cast<std::size_t>(ktype.s());
  for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
    KConfiguration x{ktype, std::vector<std::vector<ProjPoint>>(s), random_lines(s, rng, lb)};
    Placer placer(x.lines);
    bool ok = true;
    for (std::size_t i = 0; i < s && ok; ++i) {
      for (int k = 0; k < ktype.d(static_cast<int>(i) + 1) && ok; ++k) {
        ok = placer.place(i, x.subsets[i], rng, options.coord_bound);
      }
    }
    if (ok && validate(x).empty()) return x;
  }
  throw Error(ErrorCode::GenerationFailed, "no generic configuration of type " + ktype.str() + " found");
}

std::vector<int> feasible_line_counts(const KType& ktype) {
  std::vector<int> out;
  if (ktype.is_single_point()) return out;
  // three non-collinear points always span three two-point lines
  if (ktype.is_standard() && ktype.s() == 2) return {3};
  const int r_max = ktype.is_standard() ? ktype.s() + 1 : ktype.tail_length();
  for (int r = 1; r <= r_max; ++r) out.push_back(r);
  return out;
}

KConfiguration generate_with_line_count(int s, int r, std::uint64_t seed, const GeneratorOptions& options) {
  if (s < 2) throw Error(ErrorCode::InvalidType, "line-count generator needs s >= 2");
  return generate_with_line_count(KType::standard(s), r, seed, options);
}

KConfiguration generate_with_line_count(const KType& ktype, int r, std::uint64_t seed, const GeneratorOptions& options) {
  if (ktype.is_single_point()) throw Error(ErrorCode::SinglePointType, "type (1) has no line count");
  const int s = ktype.s();
  const auto feasible = feasible_line_counts(ktype);
  if (std::find(feasible.begin(), feasible.end(), r) == feasible.end()) {
    std::string list;
    for (int v : feasible) list += (list.empty() ? "" : ",") + std::to_string(v);
    throw Error(ErrorCode::InvalidLineCount,
                "r = " + std::to_string(r) + " is not one of {" + list + "} for type " + ktype.str());
  }
  Rng rng(seed);
  const long lb = line_bound(options.coord_bound);
  const auto su = static_cast<std::size_t>(s);
  for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
    KConfiguration x{ktype, std::vector<std::vector<ProjPoint>>(su), {}};
    if (r == s + 1) {
      auto h = random_lines(su + 1, rng, lb);
      for (std::size_t i = 0; i < su; ++i) {
        for (std::size_t j = 0; j < i; ++j) x.subsets[i].push_back(meet(h[i], h[j]));
        x.subsets[i].push_back(meet(h[i], h[su]));
      }
      h.pop_back();
      x.lines = std::move(h);
    } else {
      x.lines = random_lines(su, rng, lb);
      Placer placer(x.lines);
      // Lines first..s-1 (0-based) carry d_s points: their mutual meets go
      // to the later subset, the rest of each subset is free.
      const std::size_t first = su - static_cast<std::size_t>(r);
      for (std::size_t i = first + 1; i < su; ++i) {
        for (std::size_t j = first; j < i; ++j) {
          ProjPoint p = meet(x.lines[i], x.lines[j]);
          placer.add(p);
          x.subsets[i].push_back(p);
        }
      }
      bool ok = true;
      for (std::size_t i = 0; i < su && ok; ++i) {
        const int need = ktype.d(static_cast<int>(i) + 1) - static_cast<int>(x.subsets[i].size());
        for (int k = 0; k < need && ok; ++k) ok = placer.place(i, x.subsets[i], rng, options.coord_bound);
      }
      if (!ok) continue;
    }
    if (validate(x).empty() && count_lines(x, ktype.d_s()).count == r) return x;
  }
  throw Error(ErrorCode::GenerationFailed,
              "no configuration of type " + ktype.str() + " with " + std::to_string(r) + " full lines found");
}

LineCount count_lines(std::span<const ProjPoint> points, int k) {
  std::set<ProjLine> joins;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i] != points[j]) joins.insert(line_through(points[i], points[j]));
    }
  }
  LineCount out;
  for (const auto& l : joins) {
    if (static_cast<int>(count_on(points, l)) == k) out.lines.push_back(l);
  }
  out.count = static_cast<int>(out.lines.size());
  return out;
}

LineCount count_lines(const KConfiguration& x, int k) {
  auto pts = x.points();
  return count_lines(pts, k);
}

std::vector<ProjLine> candidate_lines(const KConfiguration& x) {
  if (x.ktype.is_single_point()) throw Error(ErrorCode::SinglePointType, "type (1) has no candidate lines");
  std::vector<ProjLine> out = x.lines;
  if (x.ktype.is_standard()) {
    const ProjPoint& p = x.subsets[0][0];
    for (const auto& q : x.subsets[1]) {
      ProjLine l = line_through(p, q);
      if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(l);
    }
  }
  return out;
}

std::vector<int> full_defining_lines(const KConfiguration& x) {
  auto pts = x.points();
  std::vector<int> out;
  for (int i = 1; i <= x.ktype.s(); ++i) {
    if (static_cast<int>(count_on(pts, x.lines[static_cast<std::size_t>(i - 1)])) == x.ktype.d_s()) out.push_back(i);
  }
  return out;
}

KConfiguration relabel_canonical(const KConfiguration& x) {
  require_valid(x);
  KConfiguration y = x;
  const int s = x.ktype.s();
  const auto pts = x.points();
  for (;;) {
    // 1-based accessors into the current labelling
    auto full = [&](int k) {
      return static_cast<int>(count_on(pts, y.lines[static_cast<std::size_t>(k - 1)])) == x.ktype.d_s();
    };
    auto X = [&](int k) -> std::vector<ProjPoint>& { return y.subsets[static_cast<std::size_t>(k - 1)]; };
    auto L = [&](int k) -> ProjLine& { return y.lines[static_cast<std::size_t>(k - 1)]; };

    // L_s, ..., L_{s-j} full and L_{s-j-1} not
    int j = 0;
    while (j + 1 <= s - 1 && full(s - j - 1)) ++j;
    int i = j + 2;
    while (i <= s - 1 && !full(s - i)) ++i;
    if (i > s - 1) break;

    std::vector<ProjPoint> t;
    for (int k = s - i + 1; k <= s - j - 1; ++k) {
      for (const auto& p : X(k)) {
        if (incident(p, L(s - i))) t.push_back(p);
      }
    }
    auto without_t = [&](const std::vector<ProjPoint>& v) {
      std::vector<ProjPoint> out;
      for (const auto& p : v) {
        if (std::find(t.begin(), t.end(), p) == t.end()) out.push_back(p);
      }
      return out;
    };

    KConfiguration next = y;
    auto nX = [&](int k) -> std::vector<ProjPoint>& { return next.subsets[static_cast<std::size_t>(k - 1)]; };
    auto nL = [&](int k) -> ProjLine& { return next.lines[static_cast<std::size_t>(k - 1)]; };
    for (int k = s - i; k <= s - j - 2; ++k) {
      nX(k) = without_t(X(k + 1));
      nL(k) = L(k + 1);
    }
    nX(s - j - 1) = X(s - i);
    nX(s - j - 1).insert(nX(s - j - 1).end(), t.begin(), t.end());
    nL(s - j - 1) = L(s - i);
    y = std::move(next);
  }
  require_valid(y);
  return y;
}

std::string to_string(LineCase c) {
  switch (c) {
    case LineCase::Many: return "MANY";
    case LineCase::Exact: return "EXACT";
    case LineCase::Few: return "FEW";
  }
  return "?";
}

CaseReport classify_case(const KConfiguration& x) {
  const int s = x.ktype.s();
  if (!x.ktype.is_standard() || s < 2) {
    throw Error(ErrorCode::TypeMismatch, "trichotomy needs type (1,...,s) with s >= 2, got " + x.ktype.str());
  }
  const auto pts = x.points();
  CaseReport rep;
  // defining lines first, in index order
  auto found = count_lines(pts, s).lines;
  for (const auto& l : x.lines) {
    if (std::find(found.begin(), found.end(), l) != found.end()) rep.full_lines.push_back(l);
  }
  for (const auto& l : found) {
    if (std::find(x.lines.begin(), x.lines.end(), l) == x.lines.end()) rep.full_lines.push_back(l);
  }
  rep.r = static_cast<int>(rep.full_lines.size());
  const auto& h = rep.full_lines;

  if (rep.r == s + 1) {
    rep.tag = LineCase::Many;
    std::set<ProjPoint> meets;
    for (std::size_t a = 0; a < h.size(); ++a) {
      for (std::size_t b = a + 1; b < h.size(); ++b) meets.insert(meet(h[a], h[b]));
    }
    std::set<ProjPoint> xs(pts.begin(), pts.end());
    rep.structure_ok = meets == xs && static_cast<std::int64_t>(meets.size()) == binomial(s + 1, 2);
  } else if (rep.r == s) {
    rep.tag = LineCase::Exact;
    for (std::size_t a = 0; a < h.size(); ++a) {
      std::vector<ProjPoint> priv;
      int shared = 0;
      for (const auto& p : pts) {
        if (!incident(p, h[a])) continue;
        bool elsewhere = false;
        for (std::size_t b = 0; b < h.size(); ++b) elsewhere = elsewhere || (b != a && incident(p, h[b]));
        if (elsewhere) ++shared;
        else priv.push_back(p);
      }
      if (priv.size() != 1 || shared != s - 1) rep.structure_ok = false;
      if (!priv.empty()) rep.private_points.push_back(priv.front());
    }
  } else {
    rep.tag = LineCase::Few;
  }
  return rep;
}

FatPointScheme fatten(const KConfiguration& x, int m) {
  auto pts = x.points();
  return FatPointScheme::homogeneous(pts, m);
}

}  // namespace kfp
