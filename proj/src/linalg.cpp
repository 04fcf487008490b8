#include "kfp/linalg.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace kfp {

namespace {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp) {
    if (exp & 1) result = static_cast<std::uint64_t>(static_cast<unsigned __int128>(result) * base % mod);
    base = static_cast<std::uint64_t>(static_cast<unsigned __int128>(base) * base % mod);
    exp >>= 1;
  }
  return result;
}

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic for n < 2^32.
  for (std::uint64_t a : {2ull, 7ull, 61ull}) {
    if (a % n == 0) continue;
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = x * x % n;
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// In-place row echelon form with unit pivots. Returns the pivot columns.
std::vector<Eigen::Index> echelonize(ResidueMatrix& a, const PrimeField& field) {
  const std::uint32_t p = field.modulus();
  std::vector<Eigen::Index> pivots;
  Eigen::Index rank = 0;
  for (Eigen::Index c = 0; c < a.cols && rank < a.rows; ++c) {
    Eigen::Index pivot = rank;
    while (pivot < a.rows && a.row(pivot)[c] == 0) ++pivot;
    if (pivot == a.rows) continue;
    if (pivot != rank) std::swap_ranges(a.row(pivot), a.row(pivot) + a.cols, a.row(rank));
    std::uint32_t* prow = a.row(rank);
    const std::uint32_t inv = field.inverse(prow[c]);
    for (Eigen::Index j = c; j < a.cols; ++j) prow[j] = field.mul(prow[j], inv);
    for (Eigen::Index i = rank + 1; i < a.rows; ++i) {
      std::uint32_t* row = a.row(i);
      const std::uint32_t f = row[c];
      if (f == 0) continue;
      const std::uint64_t neg = p - f;
      for (Eigen::Index j = c; j < a.cols; ++j) row[j] = field.reduce(row[j] + neg * prow[j]);
    }
    pivots.push_back(c);
    ++rank;
  }
  return pivots;
}

bool lexicographically_before(const std::vector<Eigen::Index>& a, const std::vector<Eigen::Index>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Checks that every reconstructed kernel vector annihilates m exactly.
bool verify_kernel(const IntegerMatrix& m, const ModularLeftKernel& shape, const std::vector<Integer>& num,
                   const std::vector<Integer>& den) {
  const std::size_t nfree = shape.free.size();
  const std::size_t npiv = shape.pivots.size();
  std::vector<Integer> coeff(npiv);
  Integer acc, lcm;
  for (std::size_t f = 0; f < nfree; ++f) {
    lcm = 1;
    for (std::size_t k = 0; k < npiv; ++k) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den[k * nfree + f].get_mpz_t());
    for (std::size_t k = 0; k < npiv; ++k) {
      coeff[k] = exact_div(Integer(lcm * num[k * nfree + f]), den[k * nfree + f]);
    }
    const Eigen::Index free_row = shape.free[f];
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      acc = lcm * m(free_row, j);
      for (std::size_t k = 0; k < npiv; ++k) {
        if (sgn(coeff[k]) == 0) continue;
        mpz_submul(acc.get_mpz_t(), coeff[k].get_mpz_t(), m(shape.pivots[k], j).get_mpz_t());
      }
      if (sgn(acc) != 0) return false;
    }
  }
  return true;
}

}  // namespace

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p < 3 || p >= (1u << 31)) throw std::invalid_argument("PrimeField expects an odd prime below 2^31");
  barrett_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(1) << 64) / p);
}

std::uint32_t PrimeField::inverse(std::uint32_t a) const {
  return static_cast<std::uint32_t>(pow_mod(a, p_ - 2, p_));
}

std::uint32_t PrimeField::from(const Integer& v) const {
  return static_cast<std::uint32_t>(mpz_fdiv_ui(v.get_mpz_t(), p_));
}

std::span<const std::uint32_t> word_primes(std::size_t count) {
  static std::mutex mutex;
  static std::vector<std::uint32_t> primes;
  std::lock_guard lock(mutex);
  std::uint32_t candidate = primes.empty() ? (1u << 31) - 1 : primes.back() - 2;
  while (primes.size() < count) {
    if (is_prime_u32(candidate)) primes.push_back(candidate);
    candidate -= 2;
  }
  return {primes.data(), count};
}

ResidueMatrix reduce_mod(const IntegerMatrix& m, const PrimeField& field, bool transpose) {
  ResidueMatrix r;
  r.rows = transpose ? m.cols() : m.rows();
  r.cols = transpose ? m.rows() : m.cols();
  r.data.resize(static_cast<std::size_t>(r.rows * r.cols));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      std::uint32_t v = field.from(m(i, j));
      if (transpose) r.row(j)[i] = v;
      else r.row(i)[j] = v;
    }
  }
  return r;
}

Eigen::Index rank_mod_p(const IntegerMatrix& m, const PrimeField& field) {
  // Eliminate along the shorter dimension.
  ResidueMatrix a = reduce_mod(m, field, m.rows() > m.cols());
  return static_cast<Eigen::Index>(echelonize(a, field).size());
}

ModularLeftKernel left_kernel_mod_p(const IntegerMatrix& m, const PrimeField& field) {
  ResidueMatrix t = reduce_mod(m, field, true);
  ModularLeftKernel out;
  out.prime = field.modulus();
  out.pivots = echelonize(t, field);
  const Eigen::Index rank = static_cast<Eigen::Index>(out.pivots.size());
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.rows()), false);
  for (Eigen::Index c : out.pivots) is_pivot[c] = true;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (!is_pivot[i]) out.free.push_back(i);
  }
  const std::size_t nfree = out.free.size();
  out.coeff.assign(static_cast<std::size_t>(rank) * nfree, 0);
  // Back substitution against the unit upper-triangular pivot block.
  const std::uint32_t p = field.modulus();
  std::vector<std::uint32_t> x(static_cast<std::size_t>(rank));
  for (std::size_t f = 0; f < nfree; ++f) {
    const Eigen::Index col = out.free[f];
    for (Eigen::Index k = rank - 1; k >= 0; --k) {
      const std::uint32_t* row = t.row(k);
      std::uint64_t acc = row[col];
      for (Eigen::Index l = k + 1; l < rank; ++l) {
        const std::uint32_t e = row[out.pivots[l]];
        if (e) acc = field.reduce(acc + static_cast<std::uint64_t>(p - e) * x[l]);
      }
      x[k] = field.reduce(acc);
      out.coeff[static_cast<std::size_t>(k) * nfree + f] = x[k];
    }
  }
  return out;
}

bool rational_reconstruct(const Integer& residue, const Integer& modulus, Integer& num, Integer& den) {
  Integer bound;
  {
    Integer half = modulus / 2;
    mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  }
  Integer r0 = modulus, r1 = residue % modulus;
  if (sgn(r1) < 0) r1 += modulus;
  Integer t0 = 0, t1 = 1, q, tmp;
  while (r1 > bound) {
    mpz_fdiv_q(q.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
    tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (sgn(t1) == 0 || abs(t1) > bound) return false;
  Integer g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return false;
  if (sgn(t1) < 0) {
    num = -r1;
    den = -t1;
  } else {
    num = r1;
    den = t1;
  }
  return true;
}

RankCertificate certified_rank(const IntegerMatrix& m, const RankOptions& options) {
  RankCertificate out;
  if (m.rows() == 0 || m.cols() == 0) return out;
  const Eigen::Index full = std::min(m.rows(), m.cols());

  const bool small = m.rows() * m.cols() <= options.fraction_free_limit;
  if (options.method == RankMethod::FractionFree || (options.method == RankMethod::Auto && small)) {
    out.rank = rank_fraction_free(m);
    out.method = RankMethod::FractionFree;
    return out;
  }

  out.method = RankMethod::Modular;
  ModularLeftKernel ref;
  std::vector<Integer> residues;
  Integer modulus;
  std::size_t combined = 0;     // primes folded into residues
  std::size_t next_attempt = 1;  // reconstruction is tried on a geometric schedule
  std::size_t last_failure = 0;
  std::vector<Integer> num, den;

  for (std::uint32_t prime : word_primes(options.max_primes)) {
    PrimeField field(prime);
    ++out.primes_used;
    ModularLeftKernel k = left_kernel_mod_p(m, field);

    const bool reset = ref.prime == 0 || k.rank() > ref.rank() ||
                       (k.rank() == ref.rank() && lexicographically_before(k.pivots, ref.pivots));
    if (reset) {
      ref = std::move(k);
      residues.assign(ref.coeff.begin(), ref.coeff.end());
      modulus = prime;
      combined = 1;
      next_attempt = 1;
      if (ref.rank() == full) {
        out.rank = ref.rank();
        return out;
      }
    } else if (k.rank() < ref.rank() || k.pivots != ref.pivots) {
      continue;  // unlucky prime
    } else {
      const std::uint32_t nmod = field.from(modulus);
      const std::uint64_t ninv = field.inverse(nmod);
      for (std::size_t e = 0; e < residues.size(); ++e) {
        const std::uint32_t a = field.from(residues[e]);
        const std::uint32_t diff = field.reduce(static_cast<std::uint64_t>(k.coeff[e]) + (prime - a));
        const std::uint32_t lift = field.reduce(diff * ninv);
        residues[e] += modulus * lift;
      }
      modulus *= prime;
      ++combined;
    }
    if (combined < next_attempt) continue;
    next_attempt = combined + combined / 4 + 1;

    num.resize(residues.size());
    den.resize(residues.size());
    // The entry that failed last time usually fails again; try it first.
    if (last_failure < residues.size() && !rational_reconstruct(residues[last_failure], modulus, num[last_failure], den[last_failure])) {
      continue;
    }
    bool ok = true;
    for (std::size_t e = 0; e < residues.size() && ok; ++e) {
      ok = rational_reconstruct(residues[e], modulus, num[e], den[e]);
      if (!ok) last_failure = e;
    }
    if (ok && verify_kernel(m, ref, num, den)) {
      out.rank = ref.rank();
      out.kernel_vectors = static_cast<Eigen::Index>(ref.free.size());
      return out;
    }
  }

  out.rank = rank_fraction_free(m);
  out.method = RankMethod::FractionFree;
  return out;
}

}  // namespace kfp
