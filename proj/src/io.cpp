#include "kfp/io.hpp"

#include "kfp/error.hpp"

#include <fstream>
#include <sstream>

namespace kfp::io {

namespace {

Integer integer_from_json(const Json& j) {
  if (j.is_string()) return parse_integer(j.get<std::string>());
  if (j.is_number_integer()) return Integer(j.dump());
  throw Error(ErrorCode::Parse, "expected an integer or decimal string, got " + j.dump());
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::Parse, std::string("missing field '") + key + "'");
  return j.at(key);
}

const Json& array(const Json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorCode::Parse, std::string(what) + " must be an array");
  return j;
}

}  // namespace

Json integer_to_json(const Integer& v) {
  // numbers when they fit in a long, decimal strings beyond that
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(to_decimal(v));
}

Json to_json(const Triple& t) { return Json::array({integer_to_json(t[0]), integer_to_json(t[1]), integer_to_json(t[2])}); }

Triple triple_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) throw Error(ErrorCode::Parse, "expected a triple, got " + j.dump());
  try {
    return {integer_from_json(j[0]), integer_from_json(j[1]), integer_from_json(j[2])};
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::Parse, "bad integer in " + j.dump());
  }
}

Json to_json(const ProjPoint& p) { return to_json(p.coords()); }
Json to_json(const ProjLine& l) { return to_json(l.coords()); }
ProjPoint point_from_json(const Json& j) { return ProjPoint(triple_from_json(j)); }
ProjLine line_from_json(const Json& j) { return ProjLine(triple_from_json(j)); }

std::vector<ProjLine> lines_from_json(const Json& j) {
  const Json& arr = array(j.is_object() ? field(j, "lines") : j, "lines");
  std::vector<ProjLine> out;
  for (const auto& e : arr) out.push_back(line_from_json(e));
  return out;
}

Json to_json(const std::vector<ProjLine>& lines) {
  Json arr = Json::array();
  for (const auto& l : lines) arr.push_back(to_json(l));
  return arr;
}

Json to_json(const FatPointScheme& z) {
  Json pts = Json::array(), mults = Json::array();
  for (const auto& [p, m] : z.entries()) {
    pts.push_back(to_json(p));
    mults.push_back(m);
  }
  return Json{{"points", pts}, {"mults", mults}};
}

FatPointScheme scheme_from_json(const Json& j) {
  std::vector<ProjPoint> pts;
  std::vector<int> mults;
  for (const auto& e : array(field(j, "points"), "points")) pts.push_back(point_from_json(e));
  for (const auto& e : array(field(j, "mults"), "mults")) {
    if (!e.is_number_integer()) throw Error(ErrorCode::Parse, "multiplicity must be an integer");
    mults.push_back(e.get<int>());
  }
  return FatPointScheme::from_points(pts, mults);
}

Json to_json(const KConfiguration& x) {
  Json subsets = Json::array();
  for (const auto& xi : x.subsets) {
    Json s = Json::array();
    for (const auto& p : xi) s.push_back(to_json(p));
    subsets.push_back(s);
  }
  return Json{{"type", x.ktype.d()}, {"subsets", subsets}, {"lines", to_json(x.lines)}};
}

KConfiguration config_from_json(const Json& j) {
  std::vector<int> d;
  for (const auto& e : array(field(j, "type"), "type")) {
    if (!e.is_number_integer()) throw Error(ErrorCode::Parse, "type entries must be integers");
    d.push_back(e.get<int>());
  }
  KConfiguration x{KType(d), {}, lines_from_json(field(j, "lines"))};
  for (const auto& s : array(field(j, "subsets"), "subsets")) {
    std::vector<ProjPoint> xi;
    for (const auto& e : array(s, "subset")) xi.push_back(point_from_json(e));
    x.subsets.push_back(std::move(xi));
  }
  return x;
}

Json to_json(const HilbertTable& t) {
  Json j{{"values", t.values}, {"deltas", t.deltas}};
  j["stabilized_at"] = t.stabilized_at ? Json(*t.stabilized_at) : Json(nullptr);
  j["degree"] = t.degree;
  return j;
}

Json to_json(const ReductionVector& v) {
  return Json{{"values", v.values}, {"lines", to_json(v.lines)}, {"complete", v.complete}};
}

Json to_json(const BoundReport& r) {
  Json j{{"t", r.t}, {"f_lower", r.f_lower}, {"F_upper", r.F_upper}};
  j["exact"] = r.exact ? Json(*r.exact) : Json(nullptr);
  j["tight"] = r.tight;
  j["reduction_vector"] = r.v.values;
  return j;
}

Json to_json(const LineCount& c) { return Json{{"count", c.count}, {"lines", to_json(c.lines)}}; }

Json to_json(const CaseReport& c) {
  Json priv = Json::array();
  for (const auto& p : c.private_points) priv.push_back(to_json(p));
  return Json{{"case", to_string(c.tag)},
              {"r", c.r},
              {"full_lines", to_json(c.full_lines)},
              {"structure_ok", c.structure_ok},
              {"private_points", priv}};
}

Json to_json(const VerificationReport& r) {
  Json j{{"config_id", r.config_id}, {"type", r.ktype.d()},       {"m", r.m},
         {"t", r.t},                 {"delta", r.delta_value},    {"h", r.h_value},
         {"degree", r.degree},       {"line_count", r.line_count}, {"m0", r.m0},
         {"matches", r.matches},     {"asserted", r.asserted},    {"reduced_delta", r.reduced_delta}};
  j["ri"] = r.ri ? Json(*r.ri) : Json(nullptr);
  j["passed"] = r.passed();
  return j;
}

Json to_json(const ReducedBoundReport& r) {
  return Json{{"tail_length", r.tail_length},     {"reduced_delta", r.reduced_delta}, {"reduced_value", r.reduced_value},
              {"type_sum", r.type_sum},           {"line_count", r.line_count},       {"delta_is_tail", r.delta_is_tail},
              {"count_bounded", r.count_bounded}, {"value_is_sum", r.value_is_sum},   {"passed", r.passed()}};
}

Json to_json(const RegularityReport& r) {
  return Json{{"m", r.m}, {"ri", r.ri}, {"expected", r.expected}, {"passed", r.passed()}};
}

Json to_json(const LastNonzeroReport& r) {
  return Json{{"m", r.m},
              {"table", to_json(r.table)},
              {"last_t", r.last_t},
              {"last_value", r.last_value},
              {"expected_t", r.expected_t},
              {"line_count", r.line_count},
              {"passed", r.passed()}};
}

Json to_json(const FamilyReport& r) {
  Json members = Json::array();
  for (const auto& m : r.members) {
    members.push_back(Json{{"r", m.r},
                           {"config", to_json(m.config)},
                           {"reduced", m.reduced.values},
                           {"reduced_ok", m.reduced_ok},
                           {"table", to_json(m.table)},
                           {"value_at_t", m.value_at},
                           {"expected_at_t", m.expected_at}});
  }
  return Json{{"s", r.s}, {"m", r.m}, {"t", r.t}, {"members", members}, {"unrealizable", r.unrealizable}, {"distinct", r.distinct}, {"passed", r.passed()}};
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::Parse, path + ": " + e.what());
  }
}

}  // namespace kfp::io
