#pragma once

// Exact projective-plane primitives. Points and lines are integer triples
// kept in canonical form: the gcd of the entries is 1 and the first nonzero
// entry is positive. Two objects are equal iff their canonical triples are
// equal, so they can be used directly as keys of ordered containers.
//
// The base field is the rationals. Ranks of rational matrices do not change
// under field extension, so every computation here is faithful to the
// algebraically closed setting.

#include "kfp/integer.hpp"

#include <array>
#include <compare>
#include <span>
#include <string>
#include <vector>

namespace kfp {

using Triple = std::array<Integer, 3>;

/// Reduces a nonzero triple to its canonical representative.
Triple canonical_triple(Triple raw);

template <typename Tag>
class Homogeneous {
 public:
  /// Canonicalizes; throws Error(ZeroTriple) if all entries vanish.
  explicit Homogeneous(Triple raw) : c_(canonical_triple(std::move(raw))) {}
  Homogeneous(const Integer& a, const Integer& b, const Integer& c)
      : Homogeneous(Triple{a, b, c}) {}
  Homogeneous(long a, long b, long c) : Homogeneous(Triple{Integer(a), Integer(b), Integer(c)}) {}

  const Triple& coords() const noexcept { return c_; }
  const Integer& operator[](std::size_t i) const { return c_[i]; }

  friend bool operator==(const Homogeneous& a, const Homogeneous& b) { return a.c_ == b.c_; }
  friend std::strong_ordering operator<=>(const Homogeneous& a, const Homogeneous& b) {
    for (std::size_t i = 0; i < 3; ++i) {
      int c = cmp(a.c_[i], b.c_[i]);
      if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

  std::string str() const {
    return "(" + c_[0].get_str() + ":" + c_[1].get_str() + ":" + c_[2].get_str() + ")";
  }

 private:
  Triple c_;
};

struct PointTag {};
struct LineTag {};

using ProjPoint = Homogeneous<PointTag>;
/// The linear form a*x0 + b*x1 + c*x2.
using ProjLine = Homogeneous<LineTag>;

/// The point of the affine chart x0 = 1 with rational coordinates
/// (x_num/x_den, y_num/y_den).
ProjPoint affine_point(long x_num, long x_den, long y_num, long y_den);
inline ProjPoint affine_point(long x, long y) { return affine_point(x, 1, y, 1); }

Triple cross(const Triple& u, const Triple& v);
Integer dot(const Triple& u, const Triple& v);

/// Join of two distinct points; throws Error(CoincidentPoints).
ProjLine line_through(const ProjPoint& p, const ProjPoint& q);

/// Intersection of two distinct lines; throws Error(CoincidentLines).
ProjPoint meet(const ProjLine& l1, const ProjLine& l2);

inline bool incident(const ProjPoint& p, const ProjLine& l) {
  return sgn(dot(p.coords(), l.coords())) == 0;
}

/// True iff all points lie on one line (vacuously true for at most two).
bool collinear(std::span<const ProjPoint> points);

/// Number of points of the list lying on l.
std::size_t count_on(std::span<const ProjPoint> points, const ProjLine& l);

}  // namespace kfp
