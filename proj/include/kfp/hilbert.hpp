#pragma once

// Hilbert function of a fat point scheme as the rank of the matrix of
// vanishing conditions on degree-t forms.
//
// A form F of degree t lies in I_P^m iff every partial derivative of F of
// order m-1 vanishes at P (for t >= m-1; Euler's identity then takes care
// of the lower orders). For t < m-1 the order-t derivatives already force F
// to vanish, so we use order min(m-1, t). Either way each point contributes
// C(k+2, 2) rows with k = min(m-1, t).

#include "kfp/linalg.hpp"
#include "kfp/scheme.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kfp {

/// Exponent triples of degree t, lexicographically descending.
std::vector<std::array<int, 3>> monomials(int t);

template <typename Scalar>
Matrix<Scalar> conditions_matrix(const FatPointScheme& z, int t) {
  const auto cols_exp = monomials(t);
  Eigen::Index rows = 0;
  for (const auto& [p, m] : z.entries()) rows += binomial(std::min(m - 1, t) + 2, 2);
  Matrix<Scalar> a(rows, static_cast<Eigen::Index>(cols_exp.size()));
  Eigen::Index r = 0;
  for (const auto& [p, m] : z.entries()) {
    // powers[i][e] = p_i^e
    std::array<std::vector<Scalar>, 3> powers;
    for (int i = 0; i < 3; ++i) {
      powers[i].resize(static_cast<std::size_t>(t) + 1);
      powers[i][0] = Scalar(1);
      for (int e = 1; e <= t; ++e) powers[i][e] = powers[i][e - 1] * Scalar(p[i]);
    }
    const int k = std::min(m - 1, t);
    for (const auto& d : monomials(k)) {
      for (std::size_t c = 0; c < cols_exp.size(); ++c) {
        const auto& e = cols_exp[c];
        Scalar v(1);
        for (int i = 0; i < 3 && v != Scalar(0); ++i) {
          if (e[i] < d[i]) {
            v = Scalar(0);
            break;
          }
          for (int j = 0; j < d[i]; ++j) v *= Scalar(e[i] - j);
          v *= powers[i][e[i] - d[i]];
        }
        a(r, static_cast<Eigen::Index>(c)) = v;
      }
      ++r;
    }
  }
  return a;
}

std::int64_t hilbert_value(const FatPointScheme& z, int t, const RankOptions& options = {});

struct HilbertTable {
  std::vector<std::int64_t> values;
  std::vector<std::int64_t> deltas;
  std::optional<int> stabilized_at;
  std::int64_t degree = 0;

  int t_max() const { return static_cast<int>(values.size()) - 1; }
  /// "1 3 6 10 15 18 18 →"
  std::string arrow() const;
};

/// Values for t = 0..t_max. Once H(t) reaches deg(z) it stays there, so the
/// remaining entries are filled without further rank computations.
HilbertTable hilbert_table(const FatPointScheme& z, int t_max, const RankOptions& options = {});

/// First difference with H(-1) = 0; throws OutOfRange beyond the table.
std::int64_t delta(const HilbertTable& table, int t);

/// Smallest t with H(t) = deg(z); throws EmptyScheme.
int regularity_index(const FatPointScheme& z, const RankOptions& options = {});

}  // namespace kfp
