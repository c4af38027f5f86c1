#include "sonf/json_io.hpp"

#include <stdexcept>

namespace sonf {

Json to_json(const HalfInt& h) { return h.str(); }

Json to_json(const QLaurent& q) {
  Json arr = Json::array();
  for (auto& [e, c] : q.coeffs) arr.push_back(Json::array({e.str(), c}));
  return arr;
}

Json to_json(const SupercuspidalLabel& l) {
  Json j;
  j["name"] = l.name;
  j["dim"] = l.dim_k;
  j["ramified"] = l.ramified;
  j["selfdual"] = selfdual_kind_str(l.kind);
  if (l.unram_sign) j["unram_sign"] = l.unram_sign->str();
  j["base_conductor"] = l.base_conductor;
  if (l.twist != HalfInt(0)) j["twist"] = l.twist.str();
  return j;
}

Json to_json(const Segment& s) {
  Json j;
  j["label"] = to_json(s.label);
  j["x"] = s.x.str();
  j["y"] = s.y.str();
  return j;
}

Json to_json(const SegmentProduct& p) {
  Json arr = Json::array();
  for (auto& f : p.factors) arr.push_back(to_json(f));
  return arr;
}

Json to_json(const DiscreteLParameter& phi) {
  Json j;
  j["n"] = phi.n;
  Json arr = Json::array();
  for (auto& s : phi.summands) {
    Json sj;
    sj["label"] = to_json(s.label);
    sj["kappa"] = s.kappa.str();
    arr.push_back(sj);
  }
  j["summands"] = arr;
  return j;
}

Json to_json(const ConstructionResult& c) {
  Json j;
  Json segs = Json::array();
  for (auto& s : c.segments) segs.push_back(to_json(s));
  j["segments"] = segs;
  Json supp = Json::array();
  for (auto& l : c.cuspidal_support) supp.push_back(to_json(l));
  j["cuspidal_support"] = supp;
  j["n0"] = c.n0;
  return j;
}

Json to_json(const ReductionNode& node) {
  Json j;
  j["stage"] = node.stage;
  j["parameter"] = to_json(node.parameter);
  Json segs = Json::array();
  for (auto& s : node.segments_peeled) segs.push_back(to_json(s));
  j["segments_peeled"] = segs;
  j["a_induced"] = node.a_induced;
  j["c_param"] = node.c_param;
  j["relation"] = chain_relation_str(node.relation);
  return j;
}

Json to_json(const MuUrTerm& term) {
  Json j;
  j["gl"] = to_json(term.gl_part);
  j["parameter"] = to_json(term.so_parameter);
  j["generic"] = term.so_generic;
  return j;
}

Json to_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.n; ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.n; ++c) row.push_back(m.at(r, c).str());
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const DistinctnessReport& r) {
  Json j;
  j["checked"] = r.pairs_checked;
  Json fails = Json::array();
  for (auto& f : r.failures) fails.push_back(Json::array({f.first, f.second}));
  j["failures"] = fails;
  return j;
}

Json to_json(const LevelRaisingState& st) {
  Json j;
  j["operator"] = st.op == LevelOperator::theta ? "theta" : "theta_prime";
  j["n"] = st.n;
  j["r"] = st.r;
  j["chi_sign"] = st.chi_sign.str();
  j["s"] = st.s.str();
  j["coeff_s1_even"] = to_json(st.coeff_s1_even);
  j["coeff_s1_odd"] = to_json(st.coeff_s1_odd);
  return j;
}

namespace {

[[noreturn]] void bad_input(const std::string& what) {
  throw std::invalid_argument("input: " + what);
}

const Json& field(const Json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) bad_input(std::string("missing field '") + name + "'");
  return *it;
}

}  // namespace

HalfInt halfint_from_json(const Json& j) {
  if (j.is_number_integer()) return HalfInt::whole(j.get<long long>());
  if (j.is_string()) return HalfInt::parse(j.get<std::string>());
  bad_input("half-integers are strings like \"3/2\" or integers");
}

SupercuspidalLabel label_from_json(const Json& j) {
  if (!j.is_object()) bad_input("label must be an object");
  SupercuspidalLabel l;
  l.name = field(j, "name").get<std::string>();
  l.dim_k = field(j, "dim").get<int>();
  l.ramified = field(j, "ramified").get<bool>();
  l.kind = parse_selfdual_kind(field(j, "selfdual").get<std::string>());
  if (j.contains("unram_sign") && !j["unram_sign"].is_null())
    l.unram_sign = UnitSign::parse(j["unram_sign"].get<std::string>());
  l.base_conductor = j.value("base_conductor", 0LL);
  if (j.contains("twist")) l.twist = halfint_from_json(j["twist"]);
  return l;
}

Segment segment_from_json(const Json& j) {
  return Segment(label_from_json(field(j, "label")), halfint_from_json(field(j, "x")),
                 halfint_from_json(field(j, "y")));
}

DiscreteLParameter parameter_from_json(const Json& j, SuppliedSigns* signs) {
  if (!j.is_object()) bad_input("parameter must be an object");
  DiscreteLParameter phi;
  phi.n = field(j, "n").get<long long>();
  for (auto& sj : field(j, "summands")) {
    Summand s;
    s.label = label_from_json(field(sj, "label"));
    s.kappa = halfint_from_json(field(sj, "kappa"));
    if (signs && sj.contains("epsilon"))
      (*signs)[{s.label.name, s.kappa}] = UnitSign::parse(sj["epsilon"].get<std::string>());
    phi.summands.push_back(std::move(s));
  }
  phi.sort();
  return phi;
}

std::vector<InverseLFactor> inverse_l_factors_from_json(const Json& j) {
  if (!j.is_array()) bad_input("inverse L-factors must be an array");
  std::vector<InverseLFactor> out;
  for (auto& fj : j) {
    InverseLFactor f;
    f.sign = UnitSign::parse(field(fj, "sign").get<std::string>());
    f.x = halfint_from_json(field(fj, "x"));
    out.push_back(f);
  }
  return out;
}

}  // namespace sonf
