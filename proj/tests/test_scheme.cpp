#include "kfp/catalog.hpp"
#include "kfp/error.hpp"
#include "kfp/scheme.hpp"

#include <doctest.h>

#include <random>

using namespace kfp;

namespace {

std::vector<ProjLine> descending_twice(const KConfiguration& x) {
  std::vector<ProjLine> seq(x.lines.rbegin(), x.lines.rend());
  seq.insert(seq.end(), x.lines.rbegin(), x.lines.rend());
  return seq;
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error");
  return ErrorCode::Parse;
}

}  // namespace

TEST_SUITE("scheme") {
  TEST_CASE("construction and degree") {
    auto x = catalog::type1345();
    auto pts = x.points();
    REQUIRE(pts.size() == 13);
    auto z = FatPointScheme::homogeneous(pts, 2);
    CHECK(z.degree() == 39);
    CHECK(z.degree() == 10 + 9 + 8 + 3 + 3 + 3 + 2 + 1);

    std::vector<ProjPoint> one{ProjPoint(1, 2, 3)};
    for (int m = 1; m <= 6; ++m) CHECK(FatPointScheme::homogeneous(one, m).degree() == m * (m + 1) / 2);
    CHECK(FatPointScheme::homogeneous(one, 5).degree() == 15);
    CHECK(FatPointScheme().degree() == 0);
    CHECK(FatPointScheme::from_points({}, {}).empty());
  }

  TEST_CASE("construction errors") {
    std::vector<ProjPoint> dup{ProjPoint(1, 2, 3), ProjPoint(2, 4, 6)};
    std::vector<int> m2{1, 1};
    CHECK(code_of([&] { FatPointScheme::from_points(dup, m2); }) == ErrorCode::DuplicatePoint);
    std::vector<ProjPoint> two{ProjPoint(1, 2, 3), ProjPoint(1, 0, 0)};
    std::vector<int> bad{1, 0};
    CHECK(code_of([&] { FatPointScheme::from_points(two, bad); }) == ErrorCode::NonPositiveMultiplicity);
    std::vector<int> short_list{1};
    CHECK(code_of([&] { FatPointScheme::from_points(two, short_list); }) == ErrorCode::LengthMismatch);
  }

  TEST_CASE("line degree and residual along the type (1,3,4,5) reduction") {
    auto x = catalog::type1345();
    auto z0 = fatten(x, 2);
    const ProjLine& l4 = x.lines[3];
    const ProjLine& l3 = x.lines[2];
    CHECK(line_degree(z0, l4) == 10);
    auto z1 = residual(z0, l4);
    CHECK(line_degree(z1, l3) == 9);
    auto z2 = residual(z1, l3);
    // L_3 carries four double points of X_3 and (8,0), already simple after L_4
    for (const auto& p : x.subsets[2]) CHECK(z2.entries().at(p) == 1);
    CHECK(z2.entries().count(affine_point(8, 0)) == 0);
    CHECK(line_degree(z0, ProjLine(1, 1000, 1000)) == 0);
  }

  TEST_CASE("residual of simple and double points") {
    std::vector<ProjPoint> p{ProjPoint(1, 0, 0)};
    ProjLine through(0, 1, 0);
    auto z = FatPointScheme::homogeneous(p, 2);
    CHECK(residual(z, through).entries().at(p[0]) == 1);
    CHECK(residual(residual(z, through), through).empty());
    CHECK(residual(z, ProjLine(1, 0, 0)) == z);
  }

  TEST_CASE("reduction vectors of the reference configurations") {
    auto x = catalog::type1345();
    auto v = reduction_vector(fatten(x, 2), descending_twice(x));
    CHECK(v.values == std::vector<std::int64_t>{10, 9, 8, 3, 3, 3, 2, 1});
    CHECK(v.complete);

    auto y = catalog::type1234_exact();
    auto w = reduction_vector(fatten(y, 2), descending_twice(y));
    CHECK(w.values == std::vector<std::int64_t>{8, 7, 6, 5, 1, 1, 1, 1});
    CHECK(w.complete);

    auto partial = reduction_vector(fatten(x, 2), std::vector<ProjLine>(x.lines.rbegin(), x.lines.rend()));
    CHECK_FALSE(partial.complete);
    CHECK(partial.sum() < 39);
  }

  TEST_CASE("residual and completeness properties on random schemes") {
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<long> c(-3, 3);
    std::uniform_int_distribution<int> mult(1, 3);
    for (int n = 0; n < 100; ++n) {
      std::vector<ProjPoint> pts;
      std::vector<int> ms;
      while (pts.size() < 6) {
        long a = c(rng), b = c(rng), d = c(rng);
        if (!(a || b || d)) continue;
        ProjPoint p(a, b, d);
        if (std::find(pts.begin(), pts.end(), p) != pts.end()) continue;
        pts.push_back(p);
        ms.push_back(mult(rng));
      }
      auto z = FatPointScheme::from_points(pts, ms);
      std::vector<ProjLine> seq;
      FatPointScheme cur = z;
      while (!cur.empty()) {
        // a line through the first support point and a random second point
        const ProjPoint& p = cur.entries().begin()->first;
        ProjPoint q(c(rng), c(rng), 1);
        ProjLine l = q == p ? ProjLine(p.coords()[1], -p.coords()[0], 0) : line_through(p, q);
        if (!incident(p, l)) continue;
        auto next = residual(cur, l);
        std::int64_t on = 0;
        for (const auto& [pt, m] : cur.entries()) {
          if (incident(pt, l)) ++on;
          auto it = next.entries().find(pt);
          if (it != next.entries().end()) CHECK(it->second <= m);
        }
        CHECK(next.degree() == cur.degree() - [&] {
          std::int64_t drop = 0;
          for (const auto& [pt, m] : cur.entries())
            if (incident(pt, l)) drop += m;
          return drop;
        }());
        CHECK(on >= 1);
        seq.push_back(l);
        cur = next;
      }
      auto v = reduction_vector(z, seq);
      CHECK(v.complete);
      CHECK(v.sum() == z.degree());
      auto chain = residual_chain(z, seq);
      CHECK(chain.size() == seq.size() + 1);
      CHECK(chain.back().empty());
    }
  }
}
