#include "ncode/json_io.hpp"

#include <algorithm>

#include "json.hpp"

namespace ncode {

using json = nlohmann::ordered_json;

namespace {

json word_json(Word w) {
  json a = json::array();
  for (int i : word_indices(w)) a.push_back(i);
  return a;
}

Word word_from(const json& a, int n) {
  std::vector<int> idx;
  for (const auto& v : a) idx.push_back(v.get<int>());
  return word_from_indices(idx, n);
}

json rat_json(const Rat& r) { return rat_str(r); }

Rat rat_from(const json& v) {
  if (v.is_number_integer()) return Rat(v.get<long long>());
  if (v.is_string()) return parse_rat(v.get<std::string>());
  throw PreconditionError("rational must be a string \"p/q\" or an integer");
}

json vec_json(const RatVec& v) {
  json a = json::array();
  for (const Rat& x : v) a.push_back(rat_json(x));
  return a;
}

RatVec vec_from(const json& a, int dim) {
  RatVec v;
  for (const auto& x : a) v.push_back(rat_from(x));
  if ((int)v.size() != dim) throw PreconditionError("point dimension mismatch");
  return v;
}

json code_json(const Code& c) {
  json j;
  j["n"] = c.n;
  json cw = json::array();
  for (Word w : c.words) cw.push_back(word_json(w));
  j["codewords"] = cw;
  return j;
}

Code code_from(const json& j) {
  int n = j.at("n").get<int>();
  std::vector<Word> ws;
  for (const auto& a : j.at("codewords")) ws.push_back(word_from(a, n));
  return code_from_words(n, ws);
}

json set_json(const SetGeom& s) {
  json j;
  if (std::holds_alternative<EmptySet>(s)) {
    j["kind"] = "empty";
  } else if (const auto* h = std::get_if<HPolytope>(&s)) {
    j["kind"] = "H";
    json ineqs = json::array();
    for (const Halfspace& hs : h->halfspaces)
      ineqs.push_back({{"a", vec_json(hs.a)}, {"b", rat_json(hs.b)}});
    j["ineqs"] = ineqs;
  } else {
    const auto& v = std::get<VPolytope>(s);
    j["kind"] = "V";
    json pts = json::array();
    for (const RatVec& p : v.points) pts.push_back(vec_json(p));
    j["points"] = pts;
  }
  return j;
}

SetGeom set_from(const json& j, int dim) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "empty") return EmptySet{};
  if (kind == "H") {
    HPolytope h;
    h.dim = dim;
    for (const auto& ineq : j.at("ineqs"))
      h.halfspaces.push_back(
          {vec_from(ineq.at("a"), dim), rat_from(ineq.at("b"))});
    return h;
  }
  if (kind == "V") {
    VPolytope v;
    v.dim = dim;
    for (const auto& p : j.at("points")) v.points.push_back(vec_from(p, dim));
    return v;
  }
  throw PreconditionError("unknown set kind: " + kind);
}

json realization_json(const Realization& r) {
  json j;
  j["dim"] = r.dim;
  j["topology"] = r.open ? "open" : "closed";
  json sets = json::array();
  for (const SetGeom& s : r.sets) sets.push_back(set_json(s));
  j["sets"] = sets;
  return j;
}

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw PreconditionError("invalid JSON input");
  return j;
}

}  // namespace

std::string code_to_json(const Code& c) { return code_json(c).dump(2); }

Code code_from_json(const std::string& text) {
  try {
    return code_from(parse(text));
  } catch (const json::exception& e) {
    throw PreconditionError(std::string("bad code JSON: ") + e.what());
  }
}

std::string points_to_json(const std::vector<RatVec>& pts, int dim) {
  json j;
  j["dim"] = dim;
  json a = json::array();
  for (const RatVec& p : pts) a.push_back(vec_json(p));
  j["points"] = a;
  return j.dump(2);
}

std::vector<RatVec> points_from_json(const std::string& text, int* dim) {
  try {
    json j = parse(text);
    int d = j.at("dim").get<int>();
    if (dim) *dim = d;
    std::vector<RatVec> pts;
    for (const auto& p : j.at("points")) pts.push_back(vec_from(p, d));
    return pts;
  } catch (const json::exception& e) {
    throw PreconditionError(std::string("bad points JSON: ") + e.what());
  }
}

std::string realization_to_json(const Realization& r) {
  return realization_json(r).dump(2);
}

Realization realization_from_json(const std::string& text) {
  try {
    json j = parse(text);
    Realization r;
    r.dim = j.at("dim").get<int>();
    if (r.dim < 1) throw PreconditionError("realization dim must be >= 1");
    std::string topo = j.at("topology").get<std::string>();
    if (topo != "open" && topo != "closed")
      throw PreconditionError("topology must be \"open\" or \"closed\"");
    r.open = topo == "open";
    for (const auto& s : j.at("sets")) r.sets.push_back(set_from(s, r.dim));
    return r;
  } catch (const json::exception& e) {
    throw PreconditionError(std::string("bad realization JSON: ") + e.what());
  }
}

std::string morphism_to_json(const TrunkMorphism& f) {
  json j;
  j["source"] = code_json(f.source);
  json trunks = json::array();
  for (const auto& t : f.trunks) {
    json ti = json::array();
    for (Word w : t) {
      auto it = std::find(f.source.words.begin(), f.source.words.end(), w);
      if (it == f.source.words.end())
        throw PreconditionError("trunk contains a non-codeword");
      ti.push_back((int)(it - f.source.words.begin()));
    }
    trunks.push_back(ti);
  }
  j["trunks"] = trunks;
  return j.dump(2);
}

TrunkMorphism morphism_from_json(const std::string& text) {
  try {
    json j = parse(text);
    TrunkMorphism f;
    f.source = code_from(j.at("source"));
    for (const auto& t : j.at("trunks")) {
      std::vector<Word> ws;
      for (const auto& v : t) {
        int i = v.get<int>();
        if (i < 0 || i >= (int)f.source.words.size())
          throw PreconditionError("trunk codeword index out of range");
        ws.push_back(f.source.words[i]);
      }
      f.trunks.push_back(ws);
    }
    return f;
  } catch (const json::exception& e) {
    throw PreconditionError(std::string("bad morphism JSON: ") + e.what());
  }
}

std::string bound_report_to_json(const BoundReport& r) {
  json j;
  j["n"] = r.n;
  j["intersection_complete"] = r.intersection_complete;
  j["max_codeword_count"] = r.max_codeword_count;
  j["complex_dimension"] = r.complex_dimension;
  j["odim"] = {{"lower", r.odim_lower}, {"upper", r.odim_upper}};
  j["cdim"] = {{"lower", r.cdim_lower}, {"upper", r.cdim_upper}};
  if (r.exact_odim) j["exact_odim"] = *r.exact_odim;
  if (r.family) j["family"] = *r.family;
  j["reasons"] = r.reasons;
  return j.dump(2);
}

std::string plan_to_json(const RealizePlan& p) {
  json j;
  j["code"] = code_json(p.code);
  j["complex_dimension"] = p.d;
  j["ambient_dimension"] = p.m;
  j["route"] = p.simplex_route ? "simplex" : "curve";
  if (!p.simplex_route) j["curve_facets"] = p.curve_facets;
  json scaffold = json::array();
  for (const VPolytope& v : p.scaffold) {
    json pts = json::array();
    for (const RatVec& q : v.points) pts.push_back(vec_json(q));
    scaffold.push_back(pts);
  }
  j["scaffold"] = scaffold;
  json points = json::object();
  for (const auto& [w, q] : p.points) points[word_str(w, p.code.n)] = vec_json(q);
  j["points"] = points;
  j["realization"] = realization_json(p.realization);
  return j.dump(2);
}

RealizePlan plan_from_json(const std::string& text) {
  try {
    json j = parse(text);
    RealizePlan p;
    p.code = code_from(j.at("code"));
    p.d = j.at("complex_dimension").get<int>();
    p.m = j.at("ambient_dimension").get<int>();
    p.simplex_route = j.at("route").get<std::string>() == "simplex";
    if (j.contains("curve_facets"))
      p.curve_facets = j["curve_facets"].get<std::vector<std::vector<int>>>();
    for (const auto& pts : j.at("scaffold")) {
      VPolytope v;
      v.dim = p.m;
      for (const auto& q : pts) v.points.push_back(vec_from(q, p.m));
      p.scaffold.push_back(v);
    }
    for (const auto& [key, q] : j.at("points").items()) {
      std::vector<int> idx;
      if (key != "{}")
        for (size_t pos = 0; pos < key.size();) {
          size_t sp = key.find(' ', pos);
          if (sp == std::string::npos) sp = key.size();
          idx.push_back(std::stoi(key.substr(pos, sp - pos)));
          pos = sp + 1;
        }
      p.points[word_from_indices(idx, p.code.n)] = vec_from(q, p.m);
    }
    p.realization = realization_from_json(j.at("realization").dump());
    return p;
  } catch (const json::exception& e) {
    throw PreconditionError(std::string("bad plan JSON: ") + e.what());
  }
}

std::string sunflower_to_json(const Sunflower& s) {
  json j;
  j["dim"] = s.dim;
  j["k"] = s.k;
  json petals = json::array();
  for (const HPolytope& p : s.petals) petals.push_back(set_json(p));
  j["petals"] = petals;
  j["center"] = set_json(s.center);
  json pts = json::array();
  for (const RatVec& p : s.points) pts.push_back(vec_json(p));
  j["points"] = pts;
  j["certified"] = s.certified;
  return j.dump(2);
}

std::string verify_report_to_json(const VerifyReport& r) {
  json j;
  j["closure_ok"] = r.closure_ok;
  j["witnesses_ok"] = r.witnesses_ok;
  if (r.full_code_ok)
    j["full_code_ok"] = *r.full_code_ok;
  else
    j["full_code_ok"] = nullptr;
  j["ok"] = r.ok();
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j.dump(2);
}

}  // namespace ncode
