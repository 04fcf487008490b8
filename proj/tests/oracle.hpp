#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's rank or conditions code.

#include "kfp/geom.hpp"

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <vector>

namespace oracle {

using Rational = mpq_class;
using Dense = std::vector<std::vector<Rational>>;

/// Gaussian elimination over Q.
inline long rank(Dense a) {
  const std::size_t rows = a.size();
  if (rows == 0) return 0;
  const std::size_t cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (sgn(a[i][c]) == 0) continue;
      Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return static_cast<long>(r);
}

/// Rows: every partial derivative of order 0..m-1 of every degree-t monomial,
/// evaluated at each point.
inline Dense conditions(const std::vector<kfp::ProjPoint>& pts, const std::vector<int>& mults, int t) {
  std::vector<std::array<int, 3>> mons;
  for (int a = 0; a <= t; ++a)
    for (int b = 0; a + b <= t; ++b) mons.push_back({a, b, t - a - b});
  Dense out;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    for (int order = 0; order < mults[k]; ++order) {
      for (int a = 0; a <= order; ++a) {
        for (int b = 0; a + b <= order; ++b) {
          const int d[3] = {a, b, order - a - b};
          std::vector<Rational> row;
          for (const auto& e : mons) {
            mpz_class v = 1;
            for (int i = 0; i < 3; ++i) {
              if (e[i] < d[i]) {
                v = 0;
                break;
              }
              mpz_class fall = 1;
              for (int j = 0; j < d[i]; ++j) fall *= e[i] - j;
              mpz_class pw;
              mpz_pow_ui(pw.get_mpz_t(), pts[k][i].get_mpz_t(), static_cast<unsigned long>(e[i] - d[i]));
              v *= fall * pw;
            }
            row.emplace_back(v);
          }
          out.push_back(std::move(row));
        }
      }
    }
  }
  return out;
}

inline long hilbert(const std::vector<kfp::ProjPoint>& pts, const std::vector<int>& mults, int t) {
  return rank(conditions(pts, mults, t));
}

inline mpz_class det3(const kfp::ProjPoint& p, const kfp::ProjPoint& q, const kfp::ProjPoint& r) {
  return p[0] * (q[1] * r[2] - q[2] * r[1]) - p[1] * (q[0] * r[2] - q[2] * r[0]) + p[2] * (q[0] * r[1] - q[1] * r[0]);
}

/// Lines meeting pts in exactly k points, each counted once through its
/// two lowest-indexed points.
inline int count_lines(const std::vector<kfp::ProjPoint>& pts, int k) {
  int count = 0;
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      int on = 2;
      bool first_pair = true;
      for (std::size_t l = 0; l < n; ++l) {
        if (l == i || l == j) continue;
        if (sgn(det3(pts[i], pts[j], pts[l])) == 0) {
          ++on;
          if (l < j) first_pair = false;
        }
      }
      if (first_pair && on == k) ++count;
    }
  }
  return count;
}

}  // namespace oracle
