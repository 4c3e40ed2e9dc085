#include "kuwalls/serialize.hpp"

#include <stdexcept>

namespace kuwalls {

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const ChernVector& x) {
  return Json::array({to_string(x.r), to_string(x.c1), to_string(x.c2), to_string(x.c3)});
}

Json to_json(const KuClass& c) { return Json::array({c.a, c.b}); }

Json to_json(const WallLocus& w) {
  Json j;
  j["kind"] = to_string(w.kind);
  if (w.kind == WallLocus::Kind::semicircle) {
    j["center_beta"] = to_json(w.center_beta);
    j["radius_sq"] = to_json(w.radius_sq);
  } else {
    j["beta0"] = to_json(w.center_beta);
  }
  return j;
}

Json to_json(const DestabilizerCandidate& c) {
  Json j;
  j["x"] = to_int64(c.x);
  j["y"] = to_json(c.y);
  j["z"] = to_json(c.z);
  j["alpha_sq"] = to_json(c.alpha_sq);
  j["discriminant"] = to_json(c.discriminant);
  j["wall"] = to_json(c.wall);
  return j;
}

Json to_json(const SearchRules& r) {
  Json j;
  j["same_sign_for_torsion"] = r.same_sign_for_torsion;
  j["canonical_side"] = r.canonical_side;
  j["quotient_discriminant"] = true;
  j["integral_lattice"] =
      r.integral_lattice ? Json(r.integral_lattice->denominators) : Json(nullptr);
  return j;
}

Json to_json(const ChamberReport& r) {
  Json j;
  j["beta0"] = to_json(r.beta0);
  j["denominators"] = Json::array({r.denoms.ch1, r.denoms.ch2});
  j["rules"] = to_json(r.rules);
  j["torsion_target"] = r.torsion_target;
  j["x_bound"] = r.x_bound;
  j["saturated"] = r.saturated;
  j["chambers"] = r.chamber_count();
  Json walls = Json::array();
  for (const auto& w : r.walls) {
    Json jw;
    jw["wall"] = to_json(w.wall);
    jw["alpha_sq"] = to_json(w.alpha_sq);
    jw["alpha"] = w.alpha ? to_json(*w.alpha) : Json(nullptr);
    Json cands = Json::array();
    for (const auto& c : w.candidates) cands.push_back(to_json(c));
    jw["candidates"] = std::move(cands);
    walls.push_back(std::move(jw));
  }
  j["walls"] = std::move(walls);
  if (r.decomposition) {
    Json d;
    d["identity"] = r.decomposition->identity;
    d["lhs"] = to_json(r.decomposition->lhs);
    d["rhs"] = to_json(r.decomposition->rhs);
    d["holds"] = r.decomposition->holds;
    j["decomposition"] = std::move(d);
  } else {
    j["decomposition"] = nullptr;
  }
  return j;
}

Json to_json(const PicVector& v) {
  Json j;
  j["e0"] = v.e0;
  j["e"] = v.e;
  j["text"] = describe(v);
  return j;
}

Json to_json(const ExtTable& t) { return Json(t.dims); }

Json to_json(const CatalogEntry& e) {
  Json j;
  j["name"] = e.name;
  j["description"] = e.description;
  j["chern"] = to_json(e.chern);
  j["ku_class"] = e.ku_class ? to_json(*e.ku_class) : Json(nullptr);
  Json tables = Json::array();
  for (const auto& fx : e.ext_tables) {
    tables.push_back({{"label", fx.label}, {"dims", to_json(fx.table)},
                      {"serre_trivial", fx.serre_trivial}});
  }
  j["ext_tables"] = std::move(tables);
  j["source"] = e.source;
  return j;
}

Json to_json(const CheckResult& r) {
  Json j;
  j["name"] = r.name;
  j["passed"] = r.passed;
  j["detail"] = r.detail;
  return j;
}

Json to_json(const CheckItem& i) {
  Json j = to_json(i.result);
  j["group"] = i.group;
  return j;
}

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw std::invalid_argument(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

long integer_field(const Json& j) {
  if (!j.is_number_integer()) throw std::invalid_argument("expected an integer");
  return j.get<long>();
}

}  // namespace

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw std::invalid_argument("rational must be encoded as a string");
  return parse_rational(j.get<std::string>());
}

ChernVector chern_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) {
    throw std::invalid_argument("Chern vector must be an array of 4 rationals");
  }
  return {rational_from_json(j[0]), rational_from_json(j[1]), rational_from_json(j[2]),
          rational_from_json(j[3])};
}

KuClass ku_class_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("Ku class must be [a, b]");
  return {integer_field(j[0]), integer_field(j[1])};
}

WallLocus wall_from_json(const Json& j) {
  const auto kind = field(j, "kind").get<std::string>();
  if (kind == "semicircle") {
    return WallLocus::semicircle(rational_from_json(field(j, "center_beta")),
                                 rational_from_json(field(j, "radius_sq")));
  }
  if (kind == "vertical") return WallLocus::vertical(rational_from_json(field(j, "beta0")));
  throw std::invalid_argument("unknown wall kind '" + kind + "'");
}

DestabilizerCandidate candidate_from_json(const Json& j) {
  return {Integer(integer_field(field(j, "x"))), rational_from_json(field(j, "y")),
          rational_from_json(field(j, "z")), rational_from_json(field(j, "alpha_sq")),
          rational_from_json(field(j, "discriminant")), wall_from_json(field(j, "wall"))};
}

PicVector pic_from_json(const Json& j) {
  PicVector v;
  v.e0 = integer_field(field(j, "e0"));
  const Json& e = field(j, "e");
  if (!e.is_array()) throw std::invalid_argument("field 'e' must be an array");
  for (const auto& x : e) v.e.push_back(integer_field(x));
  return v;
}

Json output_document(const std::string& command, std::optional<int> degree, Json payload) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["degree"] = degree ? Json(*degree) : Json(nullptr);
  j["payload"] = std::move(payload);
  return j;
}

}  // namespace kuwalls
