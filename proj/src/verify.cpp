#include "kfp/verify.hpp"

#include "kfp/error.hpp"

#include <algorithm>

namespace kfp {

int m0(const KType& ktype) {
  if (ktype.is_single_point()) throw Error(ErrorCode::SinglePointType, "type (1) is excluded");
  return ktype.d_s() > ktype.s() ? 2 : ktype.s() + 1;
}

namespace {

std::int64_t delta_at(const FatPointScheme& z, int t, const RankOptions& options) {
  return hilbert_value(z, t, options) - (t > 0 ? hilbert_value(z, t - 1, options) : 0);
}

void require_multiplicity(const KConfiguration& x, int m) {
  if (m < x.ktype.s() + 1) {
    throw Error(ErrorCode::MultiplicityBelowThreshold,
                "m = " + std::to_string(m) + " but s + 1 = " + std::to_string(x.ktype.s() + 1));
  }
}

}  // namespace

VerificationReport verify_main(const KConfiguration& x, int m, const std::string& config_id, const RankOptions& options) {
  VerificationReport rep;
  rep.config_id = config_id;
  rep.ktype = x.ktype;
  rep.m0 = m0(x.ktype);
  if (m < 1) throw Error(ErrorCode::NonPositiveMultiplicity, "m = " + std::to_string(m));
  rep.m = m;
  const int ds = x.ktype.d_s();
  rep.t = m * ds - 1;
  const FatPointScheme z = fatten(x, m);
  rep.degree = z.degree();
  rep.h_value = hilbert_value(z, rep.t, options);
  rep.delta_value = rep.h_value - hilbert_value(z, rep.t - 1, options);
  rep.line_count = count_lines(x, ds).count;
  rep.matches = rep.delta_value == rep.line_count;
  rep.asserted = m >= rep.m0;
  rep.reduced_delta = delta_at(fatten(x, 1), ds - 1, options);
  return rep;
}

ReducedBoundReport verify_reduced_bound(const KConfiguration& x, const RankOptions& options) {
  if (x.ktype.is_single_point()) throw Error(ErrorCode::SinglePointType, "type (1) is excluded");
  ReducedBoundReport rep;
  const int ds = x.ktype.d_s();
  const FatPointScheme z = fatten(x, 1);
  rep.tail_length = x.ktype.tail_length();
  rep.type_sum = x.ktype.sum();
  rep.reduced_value = hilbert_value(z, ds - 1, options);
  rep.reduced_delta = rep.reduced_value - (ds >= 2 ? hilbert_value(z, ds - 2, options) : 0);
  rep.line_count = count_lines(x, ds).count;
  rep.delta_is_tail = rep.reduced_delta == rep.tail_length;
  rep.count_bounded = rep.line_count <= rep.reduced_delta + 1;
  rep.value_is_sum = rep.reduced_value == rep.type_sum;
  return rep;
}

RegularityReport verify_regularity(const KConfiguration& x, int m, const RankOptions& options) {
  if (m < 1) throw Error(ErrorCode::NonPositiveMultiplicity, "m = " + std::to_string(m));
  RegularityReport rep;
  rep.m = m;
  if (x.ktype.is_single_point()) {
    rep.expected = m - 1;
  } else {
    require_multiplicity(x, m);
    rep.expected = m * x.ktype.d_s() - 1;
  }
  rep.ri = regularity_index(fatten(x, m), options);
  return rep;
}

LastNonzeroReport verify_last_nonzero(const KConfiguration& x, int m, const RankOptions& options) {
  if (x.ktype.is_single_point()) throw Error(ErrorCode::SinglePointType, "type (1) is excluded");
  if (m < m0(x.ktype)) {
    throw Error(ErrorCode::MultiplicityBelowThreshold,
                "m = " + std::to_string(m) + " but m0 = " + std::to_string(m0(x.ktype)));
  }
  LastNonzeroReport rep;
  rep.m = m;
  rep.expected_t = m * x.ktype.d_s() - 1;
  rep.table = hilbert_table(fatten(x, m), rep.expected_t + 1, options);
  for (int t = rep.table.t_max(); t >= 0; --t) {
    if (rep.table.deltas[static_cast<std::size_t>(t)] != 0) {
      rep.last_t = t;
      rep.last_value = rep.table.deltas[static_cast<std::size_t>(t)];
      break;
    }
  }
  rep.line_count = count_lines(x, x.ktype.d_s()).count;
  return rep;
}

bool FamilyReport::passed() const {
  if (!distinct || static_cast<int>(members.size()) != s + 1) return false;
  for (const auto& mem : members) {
    if (!mem.reduced_ok || mem.value_at != mem.expected_at) return false;
  }
  return true;
}

FamilyReport hilbert_family(int s, int m, std::uint64_t seed, const GeneratorOptions& gen, const RankOptions& options) {
  if (s < 2) throw Error(ErrorCode::InvalidType, "family needs s >= 2");
  if (m < s + 1) {
    throw Error(ErrorCode::MultiplicityBelowThreshold,
                "m = " + std::to_string(m) + " but s + 1 = " + std::to_string(s + 1));
  }
  FamilyReport rep;
  rep.s = s;
  rep.m = m;
  rep.t = m * s - 2;
  const std::int64_t support = binomial(s + 1, 2);
  const auto feasible = feasible_line_counts(KType::standard(s));
  for (int r = 1; r <= s + 1; ++r) {
    if (std::find(feasible.begin(), feasible.end(), r) == feasible.end()) {
      rep.unrealizable.push_back(r);
      continue;
    }
    FamilyMember mem{r, generate_with_line_count(s, r, seed, gen), {}, false, {}, 0, 0};
    mem.reduced = hilbert_table(fatten(mem.config, 1), s, options);
    mem.reduced_ok = true;
    for (int t = 0; t <= s; ++t) {
      mem.reduced_ok = mem.reduced_ok && mem.reduced.values[static_cast<std::size_t>(t)] ==
                                             std::min<std::int64_t>(binomial(t + 2, 2), support);
    }
    mem.table = hilbert_table(fatten(mem.config, m), m * s, options);
    mem.value_at = mem.table.values[static_cast<std::size_t>(rep.t)];
    mem.expected_at = mem.table.degree - r;
    rep.members.push_back(std::move(mem));
  }
  rep.distinct = true;
  for (std::size_t a = 0; a < rep.members.size(); ++a) {
    for (std::size_t b = a + 1; b < rep.members.size(); ++b) {
      if (rep.members[a].table.values == rep.members[b].table.values) rep.distinct = false;
    }
  }
  return rep;
}

}  // namespace kfp
