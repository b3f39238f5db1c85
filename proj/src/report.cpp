#include "hv/report.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "hv/error.hpp"
#include "hv/expr.hpp"

namespace hv {

Json make_report(const std::string& command, std::optional<CocycleSign> sign, const std::string& status, Json payload) {
  Json r;
  r["command"] = command;
  r["sign"] = sign ? Json(to_string(*sign)) : Json(nullptr);
  r["status"] = status;
  r["payload"] = std::move(payload);
  r["version"] = kEngineVersion;
  return r;
}

namespace {

void render(std::ostringstream& os, const Json& j, int depth) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_structured() && !v.empty()) {
        os << pad << k << ":\n";
        render(os, v, depth + 1);
      } else {
        os << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_structured() && !v.empty()) {
        os << pad << "-\n";
        render(os, v, depth + 1);
      } else {
        os << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else {
    os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace

std::string render_text(const Json& report) {
  std::ostringstream os;
  render(os, report, 0);
  return os.str();
}

Json to_json(const DerivationParams& p) {
  const auto q = p.modulo_center();
  return Json{{"inner", format(q.inner_element())},
              {"alpha", q.alpha.to_string()},
              {"beta", q.beta.to_string()},
              {"gamma", q.gamma.to_string()}};
}

Json to_json(const LeibnizViolation& v) {
  return Json{{"pair", Json::array({v.first.to_string(), v.second.to_string()})}, {"defect", format(v.defect)}};
}

Json to_json(const LeibnizReport& r) {
  Json vs = Json::array();
  for (const auto& v : r.violations) vs.push_back(to_json(v));
  return Json{{"checked", r.checked}, {"skipped", r.skipped}, {"violations", std::move(vs)}};
}

Json to_json(const JacobiReport& r) {
  Json vs = Json::array();
  for (const auto& v : r.violations)
    vs.push_back(Json{{"triple", Json::array({v.triple[0].to_string(), v.triple[1].to_string(), v.triple[2].to_string()})},
                      {"value", format(v.value)}});
  return Json{{"max_degree", r.max_degree}, {"triples_checked", r.triples_checked},
              {"violation_count", r.violations.size()}, {"violations", std::move(vs)}};
}

Json to_json(const AuditReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json j{{"derivation", to_string(e.kind)}, {"sign", to_string(e.sign)}, {"pass", e.pass},
           {"violations", e.violations},      {"checked", e.checked},       {"skipped", e.skipped}};
    j["first_violation"] = e.first_violation ? to_json(*e.first_violation) : Json(nullptr);
    entries.push_back(std::move(j));
  }
  Json central = Json::array();
  for (const auto& c : r.central_checks)
    central.push_back(Json{{"i", c.i},
                           {"sign", to_string(c.sign)},
                           {"computed", c.computed.to_string()},
                           {"reference", c.reference.to_string()},
                           {"match", c.computed == c.reference}});
  return Json{{"max_degree", r.max_degree},
              {"entries", std::move(entries)},
              {"expected_pattern_holds", r.expected_pattern_holds},
              {"central_checks", std::move(central)},
              {"notes", r.notes}};
}

Json to_json(const DecomposeResult& r) {
  Json j{{"leibniz", to_json(r.leibniz)}, {"unknown_window", r.unknown_window}};
  switch (r.status) {
    case DecomposeStatus::Ok: j["result"] = "derivation"; break;
    case DecomposeStatus::NotADerivation: j["result"] = "not-a-derivation"; break;
    case DecomposeStatus::InconsistentTable: j["result"] = "inconsistent-table"; break;
  }
  j["params"] = r.params ? to_json(*r.params) : Json(nullptr);
  return j;
}

Json to_json(const WitnessCertificate& w) {
  return Json{{"pair", Json::array({format(w.pair.first), format(w.pair.second)})},
              {"params", to_json(w.params)},
              {"window", w.window}};
}

Json to_json(const ReductionCertificate& c) {
  Json residuals = Json::array();
  std::size_t nonzero = 0;
  for (const auto& [s, r] : c.residual_report) {
    residuals.push_back(Json{{"sample", format(s)}, {"residual", format(r)}});
    nonzero += r.is_zero() ? 0 : 1;
  }
  Json j{{"witness01", to_json(c.witness01)},
         {"lambda", c.lambda.to_string()},
         {"verdict", c.certified() ? "certified" : "refuted"},
         {"keys_checked", c.keys_checked},
         {"nonzero_residuals", nonzero},
         {"residuals", std::move(residuals)},
         {"scope", "verified on the supplied keys and samples only"}};
  j["derivation"] = c.certified() ? to_json(c.derivation()) : Json(nullptr);
  if (c.refutation)
    j["refutation"] = Json{{"stage", to_string(c.refutation->stage)},
                           {"element", format(c.refutation->element)},
                           {"residual", format(c.refutation->residual)}};
  else
    j["refutation"] = nullptr;
  return j;
}

Json to_json(const LemmaKernelReport& r) {
  Json cases = Json::array();
  for (const auto& c : r.cases)
    cases.push_back(Json{{"constraint", c.label + " -> 0"},
                         {"dimension", c.dimension},
                         {"forced_zero", c.forced_zero},
                         {"passed", c.passed},
                         {"detail", c.detail}});
  return Json{{"window", r.window}, {"all_passed", r.ok()}, {"cases", std::move(cases)}};
}

Json to_json(const HomogeneityReport& r) {
  Json vs = Json::array();
  for (const auto& v : r.violations)
    vs.push_back(Json{{"k", v.k.to_string()}, {"x", format(v.x)}, {"expected", format(v.expected)},
                      {"actual", format(v.actual)}});
  return Json{{"checked", r.checked}, {"violations", std::move(vs)}};
}

namespace {

std::optional<CocycleSign> optional_sign(const Json& j) {
  if (!j.contains("sign") || j["sign"].is_null()) return std::nullopt;
  if (!j["sign"].is_string()) throw InputError("\"sign\" must be \"paper\" or \"consistent\"");
  auto s = parse_sign(j["sign"].get<std::string>());
  if (!s) throw InputError("\"sign\" must be \"paper\" or \"consistent\"");
  return s;
}

const std::string& string_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j[key].is_string())
    throw InputError(std::string("expected string field \"") + key + "\"");
  return j[key].get_ref<const std::string&>();
}

}  // namespace

LoadedTable table_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("table must be a JSON object");
  if (!j.contains("window") || !j["window"].is_number_integer() || j["window"].get<std::int64_t>() < 0)
    throw InputError("table needs a non-negative integer \"window\"");
  if (!j.contains("images") || !j["images"].is_array()) throw InputError("table needs an \"images\" array");
  LoadedTable out{DerivationTable(j["window"].get<std::int64_t>()), optional_sign(j)};
  std::set<BasisSymbol> seen;
  for (const auto& entry : j["images"]) {
    const BasisSymbol s = parse_symbol(string_field(entry, "basis"));
    if (!out.table.in_domain(s)) throw InputError(s.to_string() + " is outside the table window");
    if (!seen.insert(s).second) throw InputError("duplicate image for " + s.to_string());
    out.table.set_image(s, parse(string_field(entry, "image")));
  }
  if (seen.size() != out.table.images().size()) throw InputError("table is missing images for some window symbols");
  return out;
}

Json table_to_json(const DerivationTable& t, CocycleSign sign) {
  Json images = Json::array();
  for (const auto& [s, img] : t.images()) images.push_back(Json{{"basis", s.to_string()}, {"image", format(img)}});
  return Json{{"window", t.window()}, {"sign", to_string(sign)}, {"images", std::move(images)}};
}

LoadedAssignment assignment_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("assignment must be a JSON object");
  if (!j.contains("entries") || !j["entries"].is_array()) throw InputError("assignment needs an \"entries\" array");
  LoadedAssignment out{TwoLocalAssignment({Provenance::Kind::FromFile, ""}), optional_sign(j)};
  for (const auto& e : j["entries"]) out.assignment.insert(parse(string_field(e, "in")), parse(string_field(e, "out")));
  return out;
}

Json assignment_to_json(const TwoLocalAssignment& a, CocycleSign sign) {
  Json entries = Json::array();
  for (const auto& [k, v] : a.entries()) entries.push_back(Json{{"in", format(k)}, {"out", format(v)}});
  return Json{{"sign", to_string(sign)}, {"entries", std::move(entries)}};
}

std::vector<Element> samples_from_json(const Json& j) {
  const Json* arr = &j;
  if (j.is_object() && j.contains("samples")) arr = &j["samples"];
  if (!arr->is_array()) throw InputError("samples must be a JSON array of element expressions");
  std::vector<Element> out;
  for (const auto& s : *arr) {
    if (!s.is_string()) throw InputError("samples must be a JSON array of element expressions");
    out.push_back(parse(s.get<std::string>()));
  }
  return out;
}

Json samples_to_json(std::span<const Element> samples) {
  Json out = Json::array();
  for (const auto& s : samples) out.push_back(format(s));
  return out;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

}  // namespace hv
