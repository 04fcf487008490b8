#include "kfp/catalog.hpp"

#include "kfp/error.hpp"

namespace kfp::catalog {

namespace {

ProjPoint pt(long x, long y) { return affine_point(x, y); }
ProjPoint pt(long xn, long xd, long yn, long yd) { return affine_point(xn, xd, yn, yd); }

KConfiguration make(std::vector<int> d, std::vector<std::vector<ProjPoint>> subsets, std::vector<ProjLine> lines) {
  KConfiguration x{KType(std::move(d)), std::move(subsets), std::move(lines)};
  require_valid(x);
  return x;
}

// 3x+5y=24, y=0, y=x, y=3x-12
ProjLine line_a() { return line_through(pt(8, 0), pt(3, 3)); }
ProjLine line_b() { return line_through(pt(0, 0), pt(1, 0)); }
ProjLine line_c() { return line_through(pt(0, 0), pt(1, 1)); }
ProjLine line_d() { return line_through(pt(4, 0), pt(6, 6)); }

}  // namespace

KConfiguration type123(int r) {
  const std::vector<ProjLine> lines{line_a(), line_b(), line_c()};
  switch (r) {
    case 4:
      return make({1, 2, 3}, {{pt(14, 3, 2, 1)}, {pt(4, 0), pt(8, 0)}, {pt(0, 0), pt(3, 3), pt(6, 6)}}, lines);
    case 3:
      return make({1, 2, 3}, {{pt(11, 2, 3, 2)}, {pt(4, 0), pt(8, 0)}, {pt(0, 0), pt(3, 3), pt(6, 6)}}, lines);
    case 2:
      return make({1, 2, 3}, {{pt(11, 2, 3, 2)}, {pt(4, 0), pt(13, 2, 0, 1)}, {pt(0, 0), pt(3, 3), pt(6, 6)}}, lines);
    case 1:
      return make({1, 2, 3}, {{pt(11, 2, 3, 2)}, {pt(4, 0), pt(13, 2, 0, 1)}, {pt(1, 1), pt(3, 3), pt(6, 6)}}, lines);
    default:
      throw Error(ErrorCode::InvalidLineCount, "reference type (1,2,3) exists for r = 1..4");
  }
}

KConfiguration type1345() {
  return make({1, 3, 4, 5},
              {{pt(5, 3)},
               {pt(3, 2, 3, 2), pt(9, 2, 9, 2), pt(6, 6)},
               {pt(0, 0), pt(7, 4, 0, 1), pt(7, 2, 0, 1), pt(11, 2, 0, 1)},
               {pt(8, 0), pt(19, 3, 1, 1), pt(3, 3), pt(4, 3, 4, 1), pt(-1, 3, 5, 1)}},
              {line_d(), line_c(), line_b(), line_a()});
}

KConfiguration type1234_exact() {
  return make({1, 2, 3, 4},
              {{pt(11, 2, 9, 2)},
               {pt(6, 6), pt(9, 2, 9, 2)},
               {pt(0, 0), pt(4, 0), pt(7, 4, 0, 1)},
               {pt(8, 0), pt(14, 3, 2, 1), pt(3, 3), pt(13, 2, 9, 10)}},
              {line_d(), line_c(), line_b(), line_a()});
}

namespace {

// 3x+y=18, y=x, y=3, y=3/2, y=0
ProjLine l1_13456() { return line_through(pt(6, 0), pt(5, 3)); }
ProjLine l2_13456() { return line_c(); }
ProjLine l3_13456() { return line_through(pt(0, 3), pt(1, 3)); }
ProjLine l4_13456() { return line_through(pt(0, 1, 3, 2), pt(1, 1, 3, 2)); }
ProjLine l5_13456() { return line_b(); }

std::vector<ProjPoint> circles() { return {pt(0, 0), pt(2, 0), pt(4, 0), pt(6, 0), pt(8, 0), pt(10, 0)}; }
std::vector<ProjPoint> kites() { return {pt(13, 4, 3, 2), pt(5, 1, 3, 2), pt(27, 4, 3, 2), pt(35, 4, 3, 2)}; }
std::vector<ProjPoint> squares() { return {pt(5, 3), pt(7, 3), pt(37, 4, 3, 1)}; }
std::vector<ProjPoint> triangles() { return {pt(4, 4), pt(11, 2, 11, 2), pt(7, 7)}; }
ProjPoint star() { return pt(19, 5, 33, 5); }

}  // namespace

KConfiguration type13456_unsorted() {
  auto x4 = kites();
  x4.push_back(pt(3, 2, 3, 2));
  auto x3 = squares();
  x3.insert(x3.begin(), pt(3, 3));
  return make({1, 3, 4, 5, 6}, {{star()}, triangles(), x3, x4, circles()},
              {l1_13456(), l2_13456(), l3_13456(), l4_13456(), l5_13456()});
}

KConfiguration type13456_sorted() {
  auto x4 = triangles();
  x4.push_back(pt(3, 3));
  x4.push_back(pt(3, 2, 3, 2));
  return make({1, 3, 4, 5, 6}, {{star()}, squares(), kites(), x4, circles()},
              {l1_13456(), l3_13456(), l4_13456(), l2_13456(), l5_13456()});
}

std::vector<Named> reference_configurations() {
  return {
      {"type123_r4", type123(4)},         {"type123_r3", type123(3)},  {"type123_r2", type123(2)},
      {"type123_r1", type123(1)},         {"type1345_r3", type1345()}, {"type1234_r4", type1234_exact()},
      {"type13456_r2", type13456_unsorted()},
  };
}

}  // namespace kfp::catalog
