#include "kfp/geom.hpp"

#include "kfp/error.hpp"

#include <algorithm>

namespace kfp {

Triple canonical_triple(Triple raw) {
  Integer g = 0;
  for (const auto& v : raw) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (g == 0) throw Error(ErrorCode::ZeroTriple, "homogeneous coordinates are all zero");
  auto lead = std::find_if(raw.begin(), raw.end(), [](const Integer& v) { return sgn(v) != 0; });
  if (sgn(*lead) < 0) g = -g;
  for (auto& v : raw) v = exact_div(v, g);
  return raw;
}

ProjPoint affine_point(long x_num, long x_den, long y_num, long y_den) {
  // (1 : x : y) scaled by x_den * y_den
  return ProjPoint(Integer(x_den) * y_den, Integer(x_num) * y_den, Integer(y_num) * x_den);
}

Triple cross(const Triple& u, const Triple& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

Integer dot(const Triple& u, const Triple& v) { return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]; }

ProjLine line_through(const ProjPoint& p, const ProjPoint& q) {
  if (p == q) throw Error(ErrorCode::CoincidentPoints, "no unique line through " + p.str());
  return ProjLine(cross(p.coords(), q.coords()));
}

ProjPoint meet(const ProjLine& l1, const ProjLine& l2) {
  if (l1 == l2) throw Error(ErrorCode::CoincidentLines, "no unique meet of " + l1.str());
  return ProjPoint(cross(l1.coords(), l2.coords()));
}

bool collinear(std::span<const ProjPoint> points) {
  // Find two distinct points; everything else must lie on their join.
  if (points.size() <= 2) return true;
  const ProjPoint& a = points[0];
  auto other = std::find_if(points.begin() + 1, points.end(), [&](const ProjPoint& p) { return p != a; });
  if (other == points.end()) return true;
  ProjLine l = line_through(a, *other);
  return std::all_of(points.begin(), points.end(), [&](const ProjPoint& p) { return incident(p, l); });
}

std::size_t count_on(std::span<const ProjPoint> points, const ProjLine& l) {
  return static_cast<std::size_t>(
      std::count_if(points.begin(), points.end(), [&](const ProjPoint& p) { return incident(p, l); }));
}

}  // namespace kfp
