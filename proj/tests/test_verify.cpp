#include "kfp/catalog.hpp"
#include "kfp/error.hpp"
#include "kfp/verify.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <set>

using namespace kfp;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Parse;
}

long oracle_h(const KConfiguration& x, int m, int t) {
  auto pts = x.points();
  return oracle::hilbert(pts, std::vector<int>(pts.size(), m), t);
}

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("thresholds") {
    CHECK(m0(KType({1, 2, 3})) == 4);
    CHECK(m0(KType({1, 2})) == 3);
    CHECK(m0(KType({1, 3, 4, 5})) == 2);
    CHECK(m0(KType({2, 5})) == 2);
    CHECK(code_of([] { m0(KType({1})); }) == ErrorCode::SinglePointType);
  }

  TEST_CASE("main identity on the reference configurations") {
    auto a = verify_main(catalog::type1345(), 2, "ex");
    CHECK(a.t == 9);
    CHECK(a.delta_value == 3);
    CHECK(a.line_count == 3);
    CHECK(a.matches);
    CHECK(a.asserted);
    CHECK(a.h_value == 39);
    CHECK(a.passed());
    CHECK(a.config_id == "ex");

    auto below = verify_main(catalog::type123(1), 2);
    CHECK(below.delta_value == 3);
    CHECK(below.line_count == 1);
    CHECK_FALSE(below.matches);
    CHECK_FALSE(below.asserted);
    CHECK(below.passed());
    CHECK(below.m0 == 4);

    auto at = verify_main(catalog::type123(1), 4);
    CHECK(at.t == 11);
    CHECK(at.delta_value == 1);
    CHECK(at.line_count == 1);
    CHECK(at.asserted);
    CHECK(at.passed());

    auto e = verify_main(catalog::type1234_exact(), 2);
    CHECK(e.delta_value == 4);
    CHECK(e.line_count == 4);
    CHECK(e.passed());

    CHECK(code_of([] { verify_main(generate_generic(KType({1}), 1), 2); }) == ErrorCode::SinglePointType);
  }

  TEST_CASE("small instances against the rational oracle") {
    for (int r = 1; r <= 4; ++r) {
      auto x = catalog::type123(r);
      auto rep = verify_main(x, 2);
      CHECK(rep.h_value == oracle_h(x, 2, rep.t));
      CHECK(rep.delta_value == oracle_h(x, 2, rep.t) - oracle_h(x, 2, rep.t - 1));
      CHECK(rep.reduced_delta == oracle_h(x, 1, 2) - oracle_h(x, 1, 1));
    }
    auto y = generate_with_line_count(2, 3, 4);
    auto rep = verify_main(y, 3);
    CHECK(rep.delta_value == oracle_h(y, 3, 5) - oracle_h(y, 3, 4));
    CHECK(rep.delta_value == 3);
  }

  TEST_CASE("reduced bound") {
    for (int r = 1; r <= 4; ++r) {
      auto rep = verify_reduced_bound(catalog::type123(r));
      CHECK(rep.reduced_delta == 3);
      CHECK(rep.tail_length == 3);
      CHECK(rep.line_count == r);
      CHECK(rep.passed());
    }
    auto b = verify_reduced_bound(catalog::type1345());
    CHECK(b.tail_length == 3);
    CHECK(b.line_count == 3);
    CHECK(b.reduced_value == 13);
    CHECK(b.passed());
    auto g = verify_reduced_bound(generate_generic(KType({2, 5}), 2));
    CHECK(g.tail_length == 1);
    CHECK(g.line_count <= 2);
    CHECK(g.passed());
  }

  TEST_CASE("regularity") {
    auto a = verify_regularity(catalog::type123(3), 4);
    CHECK(a.ri == 11);
    CHECK(a.passed());
    auto b = verify_regularity(catalog::type1345(), 5);
    CHECK(b.ri == 24);
    CHECK(b.passed());
    auto single = generate_generic(KType({1}), 5);
    for (int m = 1; m <= 4; ++m) {
      auto rep = verify_regularity(single, m);
      CHECK(rep.ri == m - 1);
      CHECK(rep.passed());
    }
    CHECK(code_of([] { verify_regularity(catalog::type123(2), 3); }) == ErrorCode::MultiplicityBelowThreshold);
  }

  TEST_CASE("last nonzero difference") {
    auto a = verify_last_nonzero(catalog::type1345(), 2);
    CHECK(a.last_t == 9);
    CHECK(a.last_value == 3);
    CHECK(a.passed());
    auto b = verify_last_nonzero(catalog::type123(1), 4);
    CHECK(b.last_t == 11);
    CHECK(b.last_value == 1);
    CHECK(b.passed());
    auto c = verify_last_nonzero(generate_with_line_count(2, 3, 1), 3);
    CHECK(c.last_t == 5);
    CHECK(c.last_value == 3);
    CHECK(c.passed());
    CHECK(code_of([] { verify_last_nonzero(catalog::type123(1), 2); }) == ErrorCode::MultiplicityBelowThreshold);
  }

  TEST_CASE("family of distinct Hilbert functions") {
    // type (1,2) is three non-collinear points, so only r = 3 exists
    auto two = hilbert_family(2, 3, 1);
    CHECK(two.members.size() == 1);
    CHECK(two.unrealizable == std::vector<int>{1, 2});
    CHECK_FALSE(two.passed());

    auto three = hilbert_family(3, 4, 1);
    REQUIRE(three.members.size() == 4);
    CHECK(three.t == 10);
    for (const auto& mem : three.members) {
      CAPTURE(mem.r);
      CHECK(mem.table.degree == 60);
      CHECK(mem.value_at == 60 - mem.r);
      CHECK(mem.reduced_ok);
      for (int t = 0; t <= mem.reduced.t_max(); ++t)
        CHECK(mem.reduced.values[static_cast<std::size_t>(t)] == std::min<std::int64_t>(binomial(t + 2, 2), 6));
    }
    std::set<std::vector<std::int64_t>> tables;
    for (const auto& mem : three.members) tables.insert(mem.table.values);
    CHECK(tables.size() == 4);
    CHECK(three.passed());
  }
}
