#include "kfp/hilbert.hpp"

#include "kfp/error.hpp"

namespace kfp {

std::vector<std::array<int, 3>> monomials(int t) {
  std::vector<std::array<int, 3>> out;
  for (int a = t; a >= 0; --a) {
    for (int b = t - a; b >= 0; --b) out.push_back({a, b, t - a - b});
  }
  return out;
}

std::int64_t hilbert_value(const FatPointScheme& z, int t, const RankOptions& options) {
  if (t < 0) throw Error(ErrorCode::OutOfRange, "negative degree " + std::to_string(t));
  if (z.empty()) return 0;
  return static_cast<std::int64_t>(exact_rank(conditions_matrix<Integer>(z, t), options));
}

std::string HilbertTable::arrow() const {
  std::string s;
  for (auto v : values) s += std::to_string(v) + " ";
  return s + "→";
}

HilbertTable hilbert_table(const FatPointScheme& z, int t_max, const RankOptions& options) {
  if (t_max < 0) throw Error(ErrorCode::OutOfRange, "negative t_max");
  HilbertTable table;
  table.degree = z.degree();
  std::int64_t prev = 0;
  for (int t = 0; t <= t_max; ++t) {
    std::int64_t h = table.stabilized_at ? table.degree : hilbert_value(z, t, options);
    if (!table.stabilized_at && h == table.degree) table.stabilized_at = t;
    table.values.push_back(h);
    table.deltas.push_back(h - prev);
    prev = h;
  }
  return table;
}

std::int64_t delta(const HilbertTable& table, int t) {
  if (t < 0 || t > table.t_max()) {
    throw Error(ErrorCode::OutOfRange, "degree " + std::to_string(t) + " outside table 0.." + std::to_string(table.t_max()));
  }
  return table.deltas[static_cast<std::size_t>(t)];
}

int regularity_index(const FatPointScheme& z, const RankOptions& options) {
  if (z.empty()) throw Error(ErrorCode::EmptyScheme, "regularity index of the empty scheme");
  const std::int64_t deg = z.degree();
  int t = 0;
  // H(t) <= C(t+2, 2), so smaller degrees cannot reach deg(z).
  while (binomial(t + 2, 2) < deg) ++t;
  while (hilbert_value(z, t, options) != deg) ++t;
  return t;
}

}  // namespace kfp
