#include "kfp/catalog.hpp"
#include "kfp/cht.hpp"
#include "kfp/error.hpp"

#include <doctest.h>

#include <random>

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

// Brute-force reading of the two bounds, written out term by term.
std::int64_t f_direct(const std::vector<std::int64_t>& v, int t) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::int64_t room = t - static_cast<std::int64_t>(i) + 1;
    s += std::max<std::int64_t>(0, std::min(room, v[i]));
  }
  return s;
}

std::int64_t F_direct(const std::vector<std::int64_t>& v, int t) {
  auto c2 = [](std::int64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; };
  std::int64_t best = -1;
  for (std::size_t i = 0; i <= v.size(); ++i) {
    std::int64_t tail = 0;
    for (std::size_t j = i; j < v.size(); ++j) tail += v[j];
    std::int64_t val = c2(t + 2) - c2(t - static_cast<std::int64_t>(i) + 2) + tail;
    if (best < 0 || val < best) best = val;
  }
  return best;
}

}  // namespace

TEST_SUITE("cht") {
  TEST_CASE("bounds on explicit vectors") {
    std::vector<std::int64_t> ex{10, 9, 8, 3, 3, 3, 2, 1};
    CHECK(f_lower(ex, 8) == 36);
    CHECK(F_upper(ex, 8) == 36);
    std::vector<std::int64_t> l_only{8, 7, 6, 5, 1, 1, 1, 1};
    CHECK(f_lower(l_only, 6) == 25);
    std::vector<std::int64_t> one{1};
    CHECK(f_lower(one, 0) == 1);
    CHECK(F_upper(one, 0) == 1);
    CHECK(f_lower(std::vector<std::int64_t>{}, 3) == 0);
    CHECK(F_upper(std::vector<std::int64_t>{}, 3) == 0);
  }

  TEST_CASE("closed forms agree with the term-by-term reading") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> len(0, 9);
    std::uniform_int_distribution<std::int64_t> val(0, 12);
    for (int n = 0; n < 300; ++n) {
      std::vector<std::int64_t> v(static_cast<std::size_t>(len(rng)));
      for (auto& x : v) x = val(rng);
      for (int t = 0; t <= 25; ++t) {
        CHECK(f_lower(v, t) == f_direct(v, t));
        CHECK(F_upper(v, t) == F_direct(v, t));
        // both collapse to the sum once every line fits
        std::int64_t top = 0, sum = 0;
        for (auto x : v) {
          top = std::max(top, x);
          sum += x;
        }
        if (t >= static_cast<int>(v.size()) - 1 + top) CHECK(f_lower(v, t) == sum);
      }
    }
  }

  TEST_CASE("reference bound checks") {
    auto x = catalog::type1345();
    auto z = fatten(x, 2);
    auto rep = bound_check(z, peeling_sequence(x, 2, PeelingStrategy::RepeatDescending), 8);
    CHECK(rep.v.values == std::vector<std::int64_t>{10, 9, 8, 3, 3, 3, 2, 1});
    CHECK(rep.f_lower == 36);
    CHECK(rep.F_upper == 36);
    CHECK(rep.exact == 36);
    CHECK(rep.tight);

    auto y = catalog::type1234_exact();
    auto zy = fatten(y, 2);
    auto plain = bound_check(zy, peeling_sequence(y, 2, PeelingStrategy::RepeatDescending), 6);
    CHECK(plain.v.values == std::vector<std::int64_t>{8, 7, 6, 5, 1, 1, 1, 1});
    CHECK(plain.f_lower == 25);
    CHECK(plain.F_upper == 26);
    CHECK(plain.exact == 26);
    CHECK_FALSE(plain.tight);
    for (std::uint64_t seed : {0u, 1u, 2u}) {
      auto aug = bound_check(zy, peeling_sequence(y, 2, PeelingStrategy::Augmented, seed), 6);
      CHECK(aug.v.complete);
      CHECK(aug.f_lower == 26);
      CHECK(aug.F_upper == 26);
      CHECK(aug.tight);
    }

    auto e = bound_check(FatPointScheme(), std::vector<ProjLine>{}, 0);
    CHECK(e.f_lower == 0);
    CHECK(e.F_upper == 0);
    CHECK(e.exact == 0);
    CHECK(e.tight);
  }

  TEST_CASE("incomplete reductions are rejected") {
    auto x = catalog::type1345();
    auto z = fatten(x, 2);
    std::vector<ProjLine> once(x.lines.rbegin(), x.lines.rend());
    auto v = reduction_vector(z, once);
    REQUIRE_FALSE(v.complete);
    CHECK(code_of([&] { f_lower(v, 3); }) == ErrorCode::IncompleteReduction);
    CHECK(code_of([&] { F_upper(v, 3); }) == ErrorCode::IncompleteReduction);
    CHECK(code_of([&] { bound_check(z, once, 3); }) == ErrorCode::IncompleteReduction);
  }

  TEST_CASE("peeling sequences") {
    auto x = catalog::type123(4);
    for (int m = 1; m <= 4; ++m) {
      auto rep = peeling_sequence(x, m, PeelingStrategy::RepeatDescending);
      CHECK(rep.size() == static_cast<std::size_t>(3 * m));
      CHECK(reduction_vector(fatten(x, m), rep).complete);
      auto star = peeling_sequence(x, m, PeelingStrategy::Star);
      CHECK(star.size() == static_cast<std::size_t>(4 * ((m + 1) / 2)));
      CHECK(reduction_vector(fatten(x, m), star).complete);
    }
    auto y = catalog::type1234_exact();
    for (int m = 2; m <= 4; ++m) {
      auto aug = peeling_sequence(y, m, PeelingStrategy::Augmented, 11);
      CHECK(reduction_vector(fatten(y, m), aug).complete);
    }
    CHECK(code_of([&] { peeling_sequence(catalog::type123(1), 2, PeelingStrategy::Star); }) ==
          ErrorCode::StrategyInapplicable);
    CHECK(code_of([&] { peeling_sequence(catalog::type123(4), 2, PeelingStrategy::Augmented); }) ==
          ErrorCode::StrategyInapplicable);
    CHECK(code_of([&] { peeling_sequence(y, 1, PeelingStrategy::Augmented); }) == ErrorCode::StrategyInapplicable);
    CHECK(code_of([&] { peeling_sequence(catalog::type1345(), 2, PeelingStrategy::Star); }) ==
          ErrorCode::StrategyInapplicable);
  }

  TEST_CASE("strategy names") {
    for (auto s : {PeelingStrategy::RepeatDescending, PeelingStrategy::Star, PeelingStrategy::Augmented}) {
      CHECK(parse_strategy(to_string(s)) == s);
    }
    CHECK(code_of([] { parse_strategy("spiral"); }) == ErrorCode::Parse);
  }

  TEST_CASE("sandwich on random schemes with random peelings") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<long> c(-4, 4);
    std::uniform_int_distribution<int> mult(1, 3), npts(1, 7);
    for (int n = 0; n < 40; ++n) {
      std::vector<ProjPoint> pts;
      std::vector<int> ms;
      const int want = npts(rng);
      while (static_cast<int>(pts.size()) < want) {
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
        std::vector<ProjPoint> sup;
        for (const auto& [p, m] : cur.entries()) sup.push_back(p);
        std::uniform_int_distribution<std::size_t> pick(0, sup.size() - 1);
        const ProjPoint p = sup[pick(rng)];
        const ProjPoint q = sup[pick(rng)];
        ProjPoint other = q;
        while (other == p) other = random_point(rng, 9);
        ProjLine l = line_through(p, other);
        seq.push_back(l);
        cur = residual(cur, l);
      }
      auto table = hilbert_table(z, 40);
      REQUIRE(table.stabilized_at.has_value());
      for (int t = 0; t <= *table.stabilized_at; ++t) {
        CAPTURE(t);
        CHECK_NOTHROW(bound_check(z, seq, t));
      }
    }
  }
}
