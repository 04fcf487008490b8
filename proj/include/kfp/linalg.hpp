#pragma once

// Exact rank of integer matrices.
//
// Two independent routes are provided:
//
//  * rank_fraction_free: Bareiss elimination over any integral domain scalar.
//    Deterministic and exact, but intermediate entries grow like minors, which
//    makes it slow beyond a few thousand matrix entries with large entries.
//
//  * certified_rank: elimination modulo word-size primes. The rank modulo a
//    prime never exceeds the rational rank, so it is a proven lower bound. The
//    matching upper bound comes from a left-kernel basis reconstructed over Q
//    (Chinese remaindering + rational reconstruction) and checked exactly
//    against the integer matrix. Both bounds are proofs, so the answer is
//    exact; the primes only influence running time.

#include "kfp/integer.hpp"

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace kfp {

/// Rank by fraction-free (Bareiss) elimination.
template <typename Derived>
Eigen::Index rank_fraction_free(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  Matrix<Scalar> a = input;
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  Scalar prev(1);
  Eigen::Index rank = 0;
  for (Eigen::Index c = 0; c < cols && rank < rows; ++c) {
    Eigen::Index pivot = rank;
    while (pivot < rows && a(pivot, c) == Scalar(0)) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) a.row(pivot).swap(a.row(rank));
    const Scalar& p = a(rank, c);
    for (Eigen::Index i = rank + 1; i < rows; ++i) {
      for (Eigen::Index j = c + 1; j < cols; ++j) {
        Scalar num = p * a(i, j) - a(i, c) * a(rank, j);
        a(i, j) = exact_div(num, prev);
      }
      a(i, c) = Scalar(0);
    }
    prev = p;
    ++rank;
  }
  return rank;
}

/// Arithmetic modulo a prime below 2^31 with Barrett reduction.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const noexcept { return p_; }

  /// Reduces x < 2^63.
  std::uint32_t reduce(std::uint64_t x) const noexcept {
    std::uint64_t q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * barrett_) >> 64);
    std::uint64_t r = x - q * p_;
    return static_cast<std::uint32_t>(r >= p_ ? r - p_ : r);
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    return reduce(static_cast<std::uint64_t>(a) * b);
  }
  std::uint32_t inverse(std::uint32_t a) const;
  std::uint32_t from(const Integer& v) const;

 private:
  std::uint32_t p_;
  std::uint64_t barrett_;
};

/// Deterministic list of distinct primes just below 2^31, largest first.
std::span<const std::uint32_t> word_primes(std::size_t count);

/// Row-major residue matrix.
struct ResidueMatrix {
  Eigen::Index rows = 0;
  Eigen::Index cols = 0;
  std::vector<std::uint32_t> data;

  std::uint32_t* row(Eigen::Index i) { return data.data() + i * cols; }
  const std::uint32_t* row(Eigen::Index i) const { return data.data() + i * cols; }
};

ResidueMatrix reduce_mod(const IntegerMatrix& m, const PrimeField& field, bool transpose = false);

/// Rank of m modulo a prime; a lower bound for the rational rank.
Eigen::Index rank_mod_p(const IntegerMatrix& m, const PrimeField& field);

/// Left kernel of m modulo a prime, in the canonical form produced by the
/// reduced echelon form of m^T: rows of m are split into the lexicographically
/// first independent set (pivots) and the rest (free). Every free row equals
/// sum_k coeff(k, f) * row(pivot[k]).
struct ModularLeftKernel {
  std::uint32_t prime = 0;
  std::vector<Eigen::Index> pivots;
  std::vector<Eigen::Index> free;
  std::vector<std::uint32_t> coeff;  // pivots.size() x free.size(), row-major

  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots.size()); }
};

ModularLeftKernel left_kernel_mod_p(const IntegerMatrix& m, const PrimeField& field);

/// Rational reconstruction of a residue modulo `modulus` with numerator and
/// denominator bounded by sqrt(modulus / 2). Returns false when none exists.
bool rational_reconstruct(const Integer& residue, const Integer& modulus, Integer& num, Integer& den);

enum class RankMethod { Auto, FractionFree, Modular };

struct RankOptions {
  RankMethod method = RankMethod::Auto;
  /// Auto switches to the modular route above this many matrix entries.
  Eigen::Index fraction_free_limit = 2500;
  /// Primes tried before the modular route falls back to Bareiss.
  std::size_t max_primes = 600;
};

struct RankCertificate {
  Eigen::Index rank = 0;
  RankMethod method = RankMethod::FractionFree;
  std::size_t primes_used = 0;
  /// Number of integer left-kernel vectors checked exactly (0 when the rank
  /// hit min(rows, cols) and no upper-bound witness was needed).
  Eigen::Index kernel_vectors = 0;
};

RankCertificate certified_rank(const IntegerMatrix& m, const RankOptions& options = {});

inline Eigen::Index exact_rank(const IntegerMatrix& m, const RankOptions& options = {}) {
  return certified_rank(m, options).rank;
}

}  // namespace kfp
