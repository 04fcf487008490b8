// kconfig: generate k-configurations, compute Hilbert functions and
// reduction-vector bounds of fat points on them, and check line counts.

#include "kfp/catalog.hpp"
#include "kfp/error.hpp"
#include "kfp/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

using namespace kfp;
using io::Json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { Json, Csv, Text };

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "text") return Format::Text;
  throw UsageError("unknown format '" + s + "'");
}

std::vector<int> parse_type(const std::string& text) {
  std::vector<int> d;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      d.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad type entry '" + item + "'");
    }
  }
  return d;
}

KConfiguration load_config(const std::string& path) {
  KConfiguration x = io::config_from_json(io::read_file(path));
  require_valid(x);
  return x;
}

// A scheme from --scheme, or from --config fattened to multiplicity m.
FatPointScheme load_scheme(const std::string& scheme_path, const std::string& config_path, int m,
                           std::optional<KConfiguration>* config_out = nullptr) {
  if (!scheme_path.empty() && !config_path.empty()) throw UsageError("give either --scheme or --config, not both");
  if (!scheme_path.empty()) return io::scheme_from_json(io::read_file(scheme_path));
  if (config_path.empty()) throw UsageError("one of --scheme or --config is required");
  KConfiguration x = load_config(config_path);
  if (config_out) *config_out = x;
  return fatten(x, m);
}

std::vector<ProjLine> load_lines(const std::string& lines_path, const std::string& strategy,
                                 const std::optional<KConfiguration>& config, int m, std::uint64_t seed) {
  if (!lines_path.empty() && !strategy.empty()) throw UsageError("give either --lines or --strategy, not both");
  if (!lines_path.empty()) return io::lines_from_json(io::read_file(lines_path));
  if (strategy.empty()) throw UsageError("one of --lines or --strategy is required");
  if (!config) throw UsageError("--strategy needs --config");
  return peeling_sequence(*config, m, parse_strategy(strategy), seed, GeneratorOptions::from_env().coord_bound);
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string multiplicity_map(const FatPointScheme& z) {
  std::string s = "{";
  bool first = true;
  for (const auto& [p, m] : z.entries()) {
    s += (first ? "" : ", ") + p.str() + ": " + std::to_string(m);
    first = false;
  }
  return s + "}";
}

// The two-row comparison of t-i+1 against v_{i+1} whose minima sum to f_v(t).
void print_bound_table(const BoundReport& rep) {
  const auto& v = rep.v.values;
  auto row = [&](const std::string& label, auto value) {
    std::cout << std::left << std::setw(8) << label << std::right;
    for (std::size_t i = 0; i < v.size(); ++i) std::cout << std::setw(5) << value(static_cast<long>(i));
    std::cout << "\n";
  };
  row("i", [](long i) { return i; });
  row("t-i+1", [&](long i) { return rep.t - i + 1; });
  row("v_i+1", [&](long i) { return static_cast<long>(v[static_cast<std::size_t>(i)]); });
  row("min", [&](long i) {
    return std::max(0L, std::min(rep.t - i + 1, static_cast<long>(v[static_cast<std::size_t>(i)])));
  });
  std::cout << "f=" << rep.f_lower << " F=" << rep.F_upper << " H=" << *rep.exact << (rep.tight ? " tight" : " gap")
            << "\n";
}

std::string verify_line(const VerificationReport& r) {
  std::string s = "m=" + std::to_string(r.m) + " t=" + std::to_string(r.t) + " delta=" + std::to_string(r.delta_value) +
                  " lines=" + std::to_string(r.line_count) + (r.matches ? " MATCH" : " MISMATCH");
  if (!r.asserted) s += " (below m0=" + std::to_string(r.m0) + ", not asserted)";
  else if (r.h_value != r.degree) s += " H=" + std::to_string(r.h_value) + " != deg=" + std::to_string(r.degree);
  return s;
}

int exit_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::Parse:
    case ErrorCode::InvalidType:
    case ErrorCode::InvalidLineCount:
    case ErrorCode::OutOfRange:
    case ErrorCode::SinglePointType:
    case ErrorCode::MultiplicityBelowThreshold:
    case ErrorCode::StrategyInapplicable:
    case ErrorCode::TypeMismatch:
      return 2;
    default:
      return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-configurations, fat points and Hilbert functions in the projective plane"};
  app.require_subcommand(1);
  app.fallthrough();  // global --format/--json may follow the subcommand

  std::string format_name = "text";
  bool json_flag = false;
  app.add_option("--format", format_name, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_flag("--json", json_flag, "same as --format json");

  // generate
  auto* gen = app.add_subcommand("generate", "generate a k-configuration");
  std::string gen_type, gen_out;
  int gen_s = 0, gen_r = 0;
  std::uint64_t gen_seed = 0;
  long gen_bound = 0;
  std::string gen_reference;
  gen->add_option("--type", gen_type, "type vector, e.g. 1,3,4,5");
  gen->add_option("--s", gen_s, "shorthand for --type 1,2,...,s");
  gen->add_option("--r", gen_r, "number of lines carrying d_s points (omit for a generic configuration)");
  gen->add_option("--seed", gen_seed, "random seed");
  gen->add_option("--coord-bound", gen_bound, "coordinate bound (default 50 or KCONFIG_COORD_BOUND)");
  gen->add_option("--reference", gen_reference,
                  "emit a built-in configuration: type123_r1..type123_r4, type1345_r3, type1234_r4, type13456_r2");
  gen->add_option("--out", gen_out, "write JSON to this file instead of stdout");

  // hilbert
  auto* hil = app.add_subcommand("hilbert", "Hilbert function table");
  std::string hil_scheme, hil_config;
  int hil_m = 1, hil_tmax = -1;
  hil->add_option("--scheme", hil_scheme, "fat point scheme JSON");
  hil->add_option("--config", hil_config, "configuration JSON (fattened by --m)");
  hil->add_option("--m", hil_m, "multiplicity for --config")->check(CLI::PositiveNumber);
  hil->add_option("--t-max", hil_tmax, "last degree (default: until stable)");

  // bounds
  auto* bnd = app.add_subcommand("bounds", "reduction-vector bounds against the exact value");
  std::string bnd_scheme, bnd_config, bnd_lines, bnd_strategy;
  int bnd_m = 1, bnd_t = -1;
  std::uint64_t bnd_seed = 0;
  bnd->add_option("--scheme", bnd_scheme, "fat point scheme JSON");
  bnd->add_option("--config", bnd_config, "configuration JSON (fattened by --m)");
  bnd->add_option("--m", bnd_m, "multiplicity for --config")->check(CLI::PositiveNumber);
  bnd->add_option("--lines", bnd_lines, "JSON array of line triples");
  bnd->add_option("--strategy", bnd_strategy, "repeat, star or augmented")
      ->check(CLI::IsMember({"repeat", "star", "augmented"}));
  bnd->add_option("--seed", bnd_seed, "seed for the augmented strategy");
  bnd->add_option("--t", bnd_t, "degree (default: every t up to stabilization)");

  // count-lines
  auto* cnt = app.add_subcommand("count-lines", "lines meeting the configuration in exactly k points");
  std::string cnt_config;
  int cnt_k = 0;
  bool cnt_classify = false, cnt_relabel = false;
  cnt->add_option("--config", cnt_config, "configuration JSON")->required();
  cnt->add_option("--k", cnt_k, "points per line (default d_s)");
  cnt->add_flag("--classify", cnt_classify, "also report the MANY/EXACT/FEW case for type (1,...,s)");
  cnt->add_flag("--relabel", cnt_relabel, "also print the relabelling with full lines last");

  // verify
  auto* ver = app.add_subcommand("verify", "check delta H at m d_s - 1 against the line count");
  std::string ver_config, ver_id;
  int ver_m = 0, ver_mmax = 0;
  bool ver_reduced = false, ver_reg = false, ver_last = false;
  ver->add_option("--config", ver_config, "configuration JSON")->required();
  ver->add_option("--m", ver_m, "multiplicity (default m0)");
  ver->add_option("--m-max", ver_mmax, "sweep m = 1..m-max; values below m0 are informational");
  ver->add_option("--id", ver_id, "identifier echoed in reports");
  ver->add_flag("--reduced", ver_reduced, "also check delta H_X(d_s - 1) against the tail length");
  ver->add_flag("--regularity", ver_reg, "also check the regularity index (needs m >= s+1)");
  ver->add_flag("--last-nonzero", ver_last, "also check the last nonzero delta (needs m >= m0)");

  // family
  auto* fam = app.add_subcommand("family", "Hilbert functions of mX for every line count r = 1..s+1");
  int fam_s = 2, fam_m = 0;
  std::uint64_t fam_seed = 0;
  fam->add_option("--s", fam_s, "s >= 2")->required();
  fam->add_option("--m", fam_m, "multiplicity >= s+1 (default s+1)");
  fam->add_option("--seed", fam_seed, "random seed");

  // reduce
  auto* red = app.add_subcommand("reduce", "residual chain along a line sequence");
  std::string red_scheme, red_config, red_lines, red_strategy;
  int red_m = 1;
  std::uint64_t red_seed = 0;
  red->add_option("--scheme", red_scheme, "fat point scheme JSON");
  red->add_option("--config", red_config, "configuration JSON (fattened by --m)");
  red->add_option("--m", red_m, "multiplicity for --config")->check(CLI::PositiveNumber);
  red->add_option("--lines", red_lines, "JSON array of line triples");
  red->add_option("--strategy", red_strategy, "repeat, star or augmented")
      ->check(CLI::IsMember({"repeat", "star", "augmented"}));
  red->add_option("--seed", red_seed, "seed for the augmented strategy");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const Format fmt = json_flag ? Format::Json : parse_format(format_name);

    if (*gen) {
      GeneratorOptions opts = GeneratorOptions::from_env();
      if (gen_bound > 0) opts.coord_bound = gen_bound;
      std::optional<KConfiguration> x;
      if (!gen_reference.empty()) {
        for (auto& [id, cfg] : catalog::reference_configurations()) {
          if (id == gen_reference) x = cfg;
        }
        if (!x) throw UsageError("unknown reference '" + gen_reference + "'");
      } else {
        if (gen_type.empty() == (gen_s == 0)) throw UsageError("give exactly one of --type or --s");
        KType t = gen_type.empty() ? KType::standard(gen_s) : KType(parse_type(gen_type));
        x = gen_r > 0 ? generate_with_line_count(t, gen_r, gen_seed, opts) : generate_generic(t, gen_seed, opts);
      }
      require_valid(*x);
      std::string text;
      // files are always JSON so they can be fed back through --config
      if (fmt == Format::Text && gen_out.empty()) {
        std::ostringstream os;
        os << "type " << x->ktype.str() << "\n";
        for (int i = 0; i < x->ktype.s(); ++i) {
          os << "L_" << i + 1 << " " << x->lines[static_cast<std::size_t>(i)].str() << "  X_" << i + 1 << ":";
          for (const auto& p : x->subsets[static_cast<std::size_t>(i)]) os << " " << p.str();
          os << "\n";
        }
        text = os.str();
      } else {
        text = io::to_json(*x).dump(2) + "\n";
      }
      if (gen_out.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(gen_out);
        if (!out) throw Error(ErrorCode::Parse, "cannot write " + gen_out);
        out << text;
      }
      return 0;
    }

    if (*hil) {
      FatPointScheme z = load_scheme(hil_scheme, hil_config, hil_m);
      HilbertTable table;
      if (hil_tmax >= 0) {
        table = hilbert_table(z, hil_tmax);
      } else {
        // extend until the value reaches the degree, plus one stable entry
        int t_stop = z.empty() ? 0 : regularity_index(z) + 1;
        table = hilbert_table(z, t_stop);
      }
      if (fmt == Format::Text) {
        std::cout << table.arrow() << "\n";
      } else if (fmt == Format::Csv) {
        std::cout << "t,H,delta\n";
        for (int t = 0; t <= table.t_max(); ++t) {
          std::cout << t << "," << table.values[static_cast<std::size_t>(t)] << ","
                    << table.deltas[static_cast<std::size_t>(t)] << "\n";
        }
      } else {
        print_json(io::to_json(table));
      }
      return 0;
    }

    if (*bnd) {
      std::optional<KConfiguration> x;
      FatPointScheme z = load_scheme(bnd_scheme, bnd_config, bnd_m, &x);
      auto lines = load_lines(bnd_lines, bnd_strategy, x, bnd_m, bnd_seed);
      std::vector<int> ts;
      if (bnd_t >= 0) {
        ts.push_back(bnd_t);
      } else {
        int ri = z.empty() ? 0 : regularity_index(z);
        for (int t = 0; t <= ri; ++t) ts.push_back(t);
      }
      std::vector<BoundReport> reps;
      for (int t : ts) reps.push_back(bound_check(z, lines, t));
      if (fmt == Format::Text) {
        for (const auto& r : reps) {
          std::cout << "t=" << r.t << "\n";
          print_bound_table(r);
        }
      } else if (fmt == Format::Csv) {
        std::cout << "t,f_lower,H,F_upper,tight\n";
        for (const auto& r : reps) {
          std::cout << r.t << "," << r.f_lower << "," << *r.exact << "," << r.F_upper << "," << (r.tight ? 1 : 0) << "\n";
        }
      } else if (reps.size() == 1) {
        print_json(io::to_json(reps.front()));
      } else {
        Json arr = Json::array();
        for (const auto& r : reps) arr.push_back(io::to_json(r));
        print_json(arr);
      }
      return 0;
    }

    if (*cnt) {
      KConfiguration x = load_config(cnt_config);
      const int k = cnt_k > 0 ? cnt_k : x.ktype.d_s();
      LineCount c = count_lines(x, k);
      std::optional<CaseReport> cls;
      if (cnt_classify) cls = classify_case(x);
      std::optional<KConfiguration> rel;
      if (cnt_relabel) rel = relabel_canonical(x);
      if (fmt == Format::Json) {
        Json j = io::to_json(c);
        j["k"] = k;
        if (cls) j["classification"] = io::to_json(*cls);
        if (rel) j["relabelled"] = io::to_json(*rel);
        print_json(j);
      } else if (fmt == Format::Csv) {
        std::cout << "k,count\n" << k << "," << c.count << "\n";
      } else {
        std::cout << c.count << " lines with exactly " << k << " points\n";
        for (const auto& l : c.lines) std::cout << "  " << l.str() << "\n";
        if (cls) std::cout << "case " << to_string(cls->tag) << " r=" << cls->r << (cls->structure_ok ? "" : " (structure check failed)") << "\n";
        if (rel) std::cout << io::to_json(*rel).dump() << "\n";
      }
      return 0;
    }

    if (*ver) {
      KConfiguration x = load_config(ver_config);
      const int threshold = m0(x.ktype);
      std::vector<int> ms;
      if (ver_mmax > 0) {
        for (int m = 1; m <= ver_mmax; ++m) ms.push_back(m);
      } else {
        ms.push_back(ver_m > 0 ? ver_m : threshold);
      }
      bool ok = true;
      Json reports = Json::array();
      if (fmt == Format::Csv) std::cout << "config_id,m,t,delta,line_count,m0,matches,asserted\n";
      for (int m : ms) {
        VerificationReport r = verify_main(x, m, ver_id);
        Json j = io::to_json(r);
        if (ver_reg && m >= x.ktype.s() + 1) {
          auto reg = verify_regularity(x, m);
          r.ri = reg.ri;
          j = io::to_json(r);
          j["regularity"] = io::to_json(reg);
          ok = ok && reg.passed();
        }
        if (ver_last && m >= threshold) {
          auto last = verify_last_nonzero(x, m);
          j["last_nonzero"] = io::to_json(last);
          ok = ok && last.passed();
        }
        ok = ok && r.passed();
        reports.push_back(j);
        if (fmt == Format::Text) {
          std::cout << verify_line(r);
          if (j.contains("regularity")) std::cout << " ri=" << j["regularity"]["ri"].get<int>();
          if (j.contains("last_nonzero")) std::cout << " last_nonzero=" << j["last_nonzero"]["last_value"].get<long>() << "@"
                                                    << j["last_nonzero"]["last_t"].get<int>();
          std::cout << "\n";
        } else if (fmt == Format::Csv) {
          std::cout << ver_id << "," << r.m << "," << r.t << "," << r.delta_value << "," << r.line_count << "," << r.m0
                    << "," << r.matches << "," << r.asserted << "\n";
        }
      }
      Json out = reports.size() == 1 ? reports.front() : reports;
      if (ver_reduced) {
        auto red_rep = verify_reduced_bound(x);
        ok = ok && red_rep.passed();
        if (fmt == Format::Text) {
          std::cout << "reduced: delta=" << red_rep.reduced_delta << " tail=" << red_rep.tail_length
                    << " lines=" << red_rep.line_count << " H=" << red_rep.reduced_value << " sum=" << red_rep.type_sum
                    << (red_rep.passed() ? " OK" : " FAIL") << "\n";
        }
        out = Json{{"main", out}, {"reduced", io::to_json(red_rep)}};
      }
      if (fmt == Format::Json) print_json(out);
      return ok ? 0 : 1;
    }

    if (*fam) {
      const int m = fam_m > 0 ? fam_m : fam_s + 1;
      FamilyReport r = hilbert_family(fam_s, m, fam_seed, GeneratorOptions::from_env());
      if (fmt == Format::Text) {
        for (const auto& mem : r.members) {
          std::cout << "r=" << mem.r << "  " << mem.table.arrow() << "  H(" << r.t << ")=" << mem.value_at
                    << " expected " << mem.expected_at << (mem.reduced_ok ? "" : "  support H wrong") << "\n";
        }
        for (int r0 : r.unrealizable) std::cout << "r=" << r0 << "  no configuration of this type has this line count\n";
        std::cout << (r.distinct ? "pairwise distinct" : "NOT distinct") << "\n";
      } else if (fmt == Format::Csv) {
        std::cout << "r,t,H\n";
        for (const auto& mem : r.members) {
          for (int t = 0; t <= mem.table.t_max(); ++t) {
            std::cout << mem.r << "," << t << "," << mem.table.values[static_cast<std::size_t>(t)] << "\n";
          }
        }
      } else {
        print_json(io::to_json(r));
      }
      return r.passed() ? 0 : 1;
    }

    if (*red) {
      std::optional<KConfiguration> x;
      FatPointScheme z = load_scheme(red_scheme, red_config, red_m, &x);
      auto lines = load_lines(red_lines, red_strategy, x, red_m, red_seed);
      auto chain = residual_chain(z, lines);
      ReductionVector v = reduction_vector(z, lines);
      if (fmt == Format::Text) {
        std::cout << "Z_0 = " << multiplicity_map(chain[0]) << "\n";
        for (std::size_t i = 0; i < lines.size(); ++i) {
          std::cout << "line " << i + 1 << " " << lines[i].str() << "  v=" << v.values[i] << "\n";
          std::cout << "Z_" << i + 1 << " = " << multiplicity_map(chain[i + 1]) << "\n";
        }
        std::cout << (v.complete ? "complete" : "incomplete") << "\n";
      } else if (fmt == Format::Csv) {
        std::cout << "step,v,degree_after\n";
        for (std::size_t i = 0; i < lines.size(); ++i) {
          std::cout << i + 1 << "," << v.values[i] << "," << chain[i + 1].degree() << "\n";
        }
      } else {
        Json steps = Json::array();
        for (const auto& zi : chain) steps.push_back(io::to_json(zi));
        print_json(Json{{"reduction_vector", io::to_json(v)}, {"chain", steps}});
      }
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
