#include "primesub/io.hpp"

#include <sstream>

namespace primesub {

namespace {

std::string at(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string at(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

const Json& field(const Json& obj, const std::string& path, const std::string& key) {
  if (!obj.is_object()) throw SchemaError(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(at(path, key), "missing field");
  return *it;
}

const Json& array(const Json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array");
  return j;
}

Integer integer(const Json& j, const std::string& path) {
  Integer n;
  if (j.is_number_integer()) {
    n = Integer(j.dump());
  } else if (j.is_string()) {
    if (n.set_str(j.get<std::string>(), 10) != 0) throw SchemaError(path, "not an integer");
  } else {
    throw SchemaError(path, "expected an integer");
  }
  return n;
}

long smallInt(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw SchemaError(path, "expected an integer");
  return j.get<long>();
}

RingElem element(const Json& j, const std::string& path, const RingCtx& ctx) {
  std::string text;
  if (j.is_number_integer()) text = j.dump();
  else if (j.is_string()) text = j.get<std::string>();
  else throw SchemaError(path, "expected an exact \"num/den\" string");
  try {
    return RingElem::parse(text, ctx);
  } catch (const AlgebraError& e) {
    throw SchemaError(path, e.what());
  }
}

Json integerJson(const Integer& n) {
  if (n.fits_slong_p()) return n.get_si();
  return n.get_str();
}

FgModule parseModule(const Json& j, const std::string& path, const RingCtx& ctx) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  static const Json kNone = Json::array();
  const Json& inv = j.contains("invariants") ? array(j["invariants"], at(path, "invariants")) : kNone;
  std::vector<Integer> invariants;
  for (std::size_t k = 0; k < inv.size(); ++k) {
    const std::string p = at(at(path, "invariants"), k);
    Integer d = integer(inv[k], p);
    if (d <= 1) throw SchemaError(p, "invariants must be > 1");
    if (ctx.strip(d) != d) throw SchemaError(p, "invariant shares a prime with u");
    if (!invariants.empty() && d % invariants.back() != 0)
      throw SchemaError(p, "invariants must form a divisibility chain");
    invariants.push_back(d);
  }
  const long f = j.contains("free") ? smallInt(j["free"], at(path, "free")) : 0;
  if (f < 0) throw SchemaError(at(path, "free"), "free rank must be >= 0");
  return FgModule(ctx, std::move(invariants), static_cast<std::size_t>(f));
}

Vector parseVector(const Json& j, const std::string& path, const FgModule& M) {
  array(j, path);
  if (j.size() != M.dimension())
    throw SchemaError(path, "expected " + std::to_string(M.dimension()) + " coordinates");
  Vector v;
  for (std::size_t k = 0; k < j.size(); ++k) v.push_back(element(j[k], at(path, k), M.ctx()));
  return M.reduce(v);
}

Matrix parseMatrix(const Json& j, const std::string& path, std::size_t rows, std::size_t cols, const RingCtx& ctx) {
  array(j, path);
  if (j.size() != rows) throw SchemaError(path, "expected " + std::to_string(rows) + " rows");
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string rp = at(path, r);
    array(j[r], rp);
    if (j[r].size() != cols) throw SchemaError(rp, "expected " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = element(j[r][c], at(rp, c), ctx);
  }
  return m;
}

Subcomplex parseSubcomplex(const Json& j, const std::string& path, const Complex& C) {
  const Json& parts = array(field(j, path, "parts"), at(path, "parts"));
  if (parts.size() != C.length())
    throw SchemaError(at(path, "parts"), "expected " + std::to_string(C.length()) + " parts");
  std::vector<Submodule> subs;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const std::string pp = at(at(path, "parts"), k);
    const Json& gens = array(field(parts[k], pp, "gens"), at(pp, "gens"));
    std::vector<Vector> vs;
    for (std::size_t g = 0; g < gens.size(); ++g)
      vs.push_back(parseVector(gens[g], at(at(pp, "gens"), g), C.modules()[k]));
    subs.emplace_back(C.modules()[k], vs);
  }
  Subcomplex S(C, std::move(subs));
  if (auto v = validateSubcomplex(S))
    throw ValidationError("subcomplex not closed under d at degree " + std::to_string(v->index) + ": " + v->message,
                          v->index, path);
  return S;
}

CechDocument parseCech(const Json& doc) {
  const Json& spec = doc["cech"];
  const Json& el = array(field(spec, "/cech", "elements"), "/cech/elements");
  std::vector<Integer> elements;
  for (std::size_t k = 0; k < el.size(); ++k) elements.push_back(integer(el[k], at("/cech/elements", k)));
  CechDocument out;
  try {
    out.complex = buildCech(elements);
  } catch (const AlgebraError& e) {
    throw SchemaError("/cech/elements", e.what());
  }
  if (doc.contains("subcomplex")) {
    // Either {"parts": [{"gens": [...]}, ...]} or {"degree_0": [...], "degree_1": [...], ...}.
    const Json& sub = doc["subcomplex"];
    if (!sub.is_object()) throw SchemaError("/subcomplex", "expected an object");
    const bool byParts = sub.contains("parts");
    if (byParts) {
      array(sub["parts"], "/subcomplex/parts");
      if (sub["parts"].size() != out.complex.length())
        throw SchemaError("/subcomplex/parts", "expected " + std::to_string(out.complex.length()) + " parts");
    }
    std::vector<IdealSubcomplexPart> ps;
    for (std::size_t k = 0; k < out.complex.length(); ++k) {
      const std::string key = "degree_" + std::to_string(k);
      const std::string pp = byParts ? at(at("/subcomplex/parts", k), "gens") : at("/subcomplex", key);
      const Json& gens = array(byParts ? field(sub["parts"][k], at("/subcomplex/parts", k), "gens")
                                       : field(sub, "/subcomplex", key),
                               pp);
      IdealSubcomplexPart part;
      for (std::size_t g = 0; g < gens.size(); ++g) part.gens.push_back(integer(gens[g], at(pp, g)));
      ps.push_back(std::move(part));
    }
    if (auto v = validateCechSubcomplex(ps, out.complex))
      throw ValidationError(v->message, static_cast<long>(v->degree), "/subcomplex");
    out.parts = std::move(ps);
  }
  return out;
}

}  // namespace

Document parseDocument(const std::string& text, std::uint64_t factorCap) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError("", std::string("not valid JSON: ") + e.what());
  }
  return parseDocumentJson(doc, factorCap);
}

Document parseDocumentJson(const Json& doc, std::uint64_t factorCap) {
  if (!doc.is_object()) throw SchemaError("", "expected an object");
  Document out;
  if (doc.contains("cech")) {
    out.cech = parseCech(doc);
    return out;
  }
  const Json& ring = field(doc, "", "ring");
  const Integer u = integer(field(ring, "/ring", "u"), "/ring/u");
  if (u < 1) throw SchemaError("/ring/u", "u must be a positive squarefree integer");
  try {
    for (const auto& [q, e] : factor(u, factorCap))
      if (e > 1) throw SchemaError("/ring/u", "u must be squarefree");
  } catch (const AlgebraError& e) {
    throw SchemaError("/ring/u", e.what());
  }
  std::optional<RingCtx> ctx;
  try {
    ctx.emplace(u, factorCap);
  } catch (const AlgebraError& e) {
    throw SchemaError("/ring/u", e.what());
  }
  const long lo = doc.contains("lo") ? smallInt(doc["lo"], "/lo") : 0;
  const Json& mods = array(field(doc, "", "modules"), "/modules");
  if (mods.empty()) throw SchemaError("/modules", "at least one module is required");
  std::vector<FgModule> modules;
  for (std::size_t k = 0; k < mods.size(); ++k) modules.push_back(parseModule(mods[k], at("/modules", k), *ctx));

  static const Json kNoDiffs = Json::array();
  const Json& diffs = doc.contains("diffs") ? array(doc["diffs"], "/diffs") : kNoDiffs;
  if (diffs.size() != modules.size() - 1)
    throw SchemaError("/diffs", "expected " + std::to_string(modules.size() - 1) + " differentials");
  std::vector<ModuleMap> maps;
  for (std::size_t k = 0; k < diffs.size(); ++k) {
    const std::string p = at("/diffs", k);
    const long degree = lo + static_cast<long>(k) + 1;
    Matrix m = parseMatrix(diffs[k], p, modules[k].dimension(), modules[k + 1].dimension(), *ctx);
    try {
      maps.emplace_back(modules[k + 1], modules[k], std::move(m));
    } catch (const AlgebraError& e) {
      throw ValidationError("d_" + std::to_string(degree) + " is not well defined: " + e.what(), degree, p);
    }
  }
  Complex C(*ctx, lo, std::move(modules), std::move(maps));
  if (auto v = validateComplex(C))
    throw ValidationError("d_" + std::to_string(v->index) + " d_" + std::to_string(v->index + 1) + " != 0", v->index,
                          "/diffs");
  out.complex = C;
  if (doc.contains("subcomplex")) out.subcomplex = parseSubcomplex(doc["subcomplex"], "/subcomplex", C);
  if (doc.contains("avoid")) {
    const Json& fam = array(doc["avoid"], "/avoid");
    for (std::size_t k = 0; k < fam.size(); ++k) out.family.push_back(parseSubcomplex(fam[k], at("/avoid", k), C));
  }
  return out;
}

Json elementJson(const Vector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.toString());
  return a;
}

Json serializeComplex(const Complex& C) {
  Json doc;
  doc["ring"] = {{"u", integerJson(C.ctx().u())}};
  doc["lo"] = C.lo();
  Json mods = Json::array();
  for (const auto& M : C.modules()) {
    Json inv = Json::array();
    for (const auto& d : M.invariants()) inv.push_back(integerJson(d));
    mods.push_back({{"invariants", inv}, {"free", M.freeRank()}});
  }
  doc["modules"] = mods;
  Json diffs = Json::array();
  for (const auto& d : C.diffs()) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < d.matrix().rows(); ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < d.matrix().cols(); ++c) row.push_back(d.matrix()(r, c).toString());
      rows.push_back(row);
    }
    diffs.push_back(rows);
  }
  doc["diffs"] = diffs;
  return doc;
}

Json serializeSubcomplex(const Subcomplex& S) {
  Json parts = Json::array();
  for (const auto& P : S.parts()) {
    Json gens = Json::array();
    for (const auto& g : P.generators()) gens.push_back(elementJson(g));
    parts.push_back({{"gens", gens}});
  }
  return {{"parts", parts}};
}

Json serializeDocument(const Document& doc) {
  Json out;
  if (doc.cech) {
    Json el = Json::array();
    for (const auto& e : doc.cech->complex.elements) el.push_back(integerJson(e));
    out["cech"] = {{"elements", el}};
    if (doc.cech->parts) {
      Json sub = Json::object();
      for (std::size_t k = 0; k < doc.cech->parts->size(); ++k) {
        Json gens = Json::array();
        for (const auto& g : (*doc.cech->parts)[k].gens) gens.push_back(integerJson(g));
        sub["degree_" + std::to_string(k)] = gens;
      }
      out["subcomplex"] = sub;
    }
    return out;
  }
  if (doc.complex) out = serializeComplex(*doc.complex);
  if (doc.subcomplex) out["subcomplex"] = serializeSubcomplex(*doc.subcomplex);
  if (!doc.family.empty()) {
    Json fam = Json::array();
    for (const auto& T : doc.family) fam.push_back(serializeSubcomplex(T));
    out["avoid"] = fam;
  }
  return out;
}

Json idealsJson(const std::map<long, Ideal>& ideals) {
  Json out = Json::object();
  for (const auto& [i, I] : ideals) out[std::to_string(i)] = I.toString();
  return out;
}

Json witnessJson(const std::optional<Witness>& w) {
  if (!w) return nullptr;
  return {{"index", w->index}, {"scalar", w->scalar.toString()}, {"element", elementJson(w->element)},
          {"replay", w->replay}};
}

Json auditJson(const AuditReport& report) {
  Json suitesJson = Json::array();
  for (const auto& s : report.suites) {
    const SuiteInfo* info = findSuite(s.name);
    suitesJson.push_back({{"name", s.name},
                          {"description", info ? info->description : ""},
                          {"trials", s.trials},
                          {"passed", s.passed},
                          {"failed", s.failed},
                          {"vacuous", s.vacuous},
                          {"failures", s.failures}});
  }
  return {{"seed", report.seed}, {"trials", report.trials}, {"all_passed", report.allPassed()}, {"suites", suitesJson}};
}

Json makeReport(const std::string& command, const std::string& verdict) {
  Json r;
  r["command"] = command;
  r["verdict"] = verdict;
  r["ideals"] = Json::object();
  r["witness"] = nullptr;
  r["timing"] = nullptr;
  return r;
}

namespace {

void renderValue(std::ostringstream& out, const std::string& key, const Json& v, const std::string& indent) {
  if (v.is_object() && !v.empty()) {
    out << indent << key << ":\n";
    for (const auto& [k, x] : v.items()) renderValue(out, k, x, indent + "  ");
  } else if (v.is_array() && !v.empty() && (v.front().is_object() || v.front().is_array())) {
    out << indent << key << ":\n";
    for (std::size_t i = 0; i < v.size(); ++i) renderValue(out, "[" + std::to_string(i) + "]", v[i], indent + "  ");
  } else if (v.is_string()) {
    out << indent << key << ": " << v.get<std::string>() << "\n";
  } else {
    out << indent << key << ": " << v.dump() << "\n";
  }
}

}  // namespace

std::string renderHuman(const Json& report) {
  std::ostringstream out;
  out << report.value("command", "") << ": " << report.value("verdict", "") << "\n";
  if (report.contains("ideals"))
    for (const auto& [i, I] : report["ideals"].items()) out << "  P_" << i << " = " << I.get<std::string>() << "\n";
  if (report.contains("witness") && !report["witness"].is_null()) {
    const Json& w = report["witness"];
    out << "  witness: degree " << w["index"].dump() << ", r = " << w["scalar"].get<std::string>() << ", m = [";
    for (std::size_t k = 0; k < w["element"].size(); ++k) out << (k ? ", " : "") << w["element"][k].get<std::string>();
    out << "]\n  replay: " << w["replay"].get<std::string>() << "\n";
  }
  for (const auto& [k, v] : report.items()) {
    if (k == "command" || k == "verdict" || k == "ideals" || k == "witness") continue;
    if (k == "timing" && v.is_null()) continue;
    renderValue(out, k, v, "  ");
  }
  return out.str();
}

}  // namespace primesub
