#include "hmstab/serialization.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "hmstab/error.hpp"

namespace hmstab {

using nlohmann::json;

namespace {

[[noreturn]] void field_error(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::ParseError, "field '" + where + "': " + what);
}

const json& require(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) field_error(where, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) field_error(where + "." + key, "missing");
  return *it;
}

std::int64_t require_int(const json& j, const std::string& key, const std::string& where, std::int64_t fallback,
                         bool optional) {
  if (!j.is_object()) field_error(where, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) {
    if (optional) return fallback;
    field_error(where + "." + key, "missing");
  }
  if (!it->is_number_integer()) field_error(where + "." + key, "expected an integer");
  return it->get<std::int64_t>();
}

std::string require_string(const json& j, const std::string& key, const std::string& where) {
  const json& v = require(j, key, where);
  if (!v.is_string()) field_error(where + "." + key, "expected a string");
  return v.get<std::string>();
}

Rational rational_field(const json& j, const std::string& key, const std::string& where) {
  const json& v = require(j, key, where);
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (!v.is_string()) field_error(where + "." + key, "expected a \"p/q\" string");
  return Rational::parse(v.get<std::string>());
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // nlohmann reports "at line L, column C" in what().
    throw Error(ErrorCode::ParseError, e.what());
  }
}

json poly_to_json(const UniPoly& p) {
  json out = json::array();
  for (const auto& c : p.coefficients()) out.push_back(c.to_string());
  return out;
}

UniPoly poly_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) field_error(where, "expected an array of coefficients");
  std::vector<Rational> coeffs;
  for (const auto& c : j) {
    if (!c.is_string()) field_error(where, "coefficients must be \"p/q\" strings");
    coeffs.push_back(Rational::parse(c.get<std::string>()));
  }
  return UniPoly(std::move(coeffs));
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json config_to_json(const EmbeddingConfig& config) {
  return {{"g", config.g()}, {"nu", config.nu()}, {"d", config.d()}, {"n", config.n()},
          {"l", config.l()}, {"mode", to_string(config.mode())}};
}

EmbeddingConfig config_from_json(const json& j) {
  const auto g = require_int(j, "g", "embedding", 0, false);
  const auto nu = require_int(j, "nu", "embedding", 4, true);
  const EmbeddingMode mode = j.contains("mode") ? mode_from_string(require_string(j, "mode", "embedding"))
                                                : EmbeddingMode::canonical;
  const auto d = require_int(j, "d", "embedding", 2 * nu * (g - 1), mode == EmbeddingMode::canonical);
  EmbeddingConfig config = EmbeddingConfig::from_parts(g, nu, d, mode);
  if (j.contains("n") && require_int(j, "n", "embedding", 0, false) != config.n())
    field_error("embedding.n", "must equal d - g + 1");
  if (j.contains("l") && require_int(j, "l", "embedding", 0, false) != config.l())
    field_error("embedding.l", "must equal n - nu + 1");
  return config;
}

CurveDocument parse_curve_document(const std::string& text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) field_error("$", "expected an object");
  if (doc.contains("schema") && doc["schema"] != kCurveSchema)
    field_error("schema", "unsupported schema, expected " + std::string(kCurveSchema));
  const json& comps = require(doc, "components", "$");
  if (!comps.is_array()) field_error("components", "expected an array");
  std::vector<ComponentDecl> components;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const std::string where = "components[" + std::to_string(i) + "]";
    ComponentDecl c;
    c.label = require_string(comps[i], "label", where);
    c.geometric_genus = require_int(comps[i], "genus", where, 0, false);
    c.internal_nodes = require_int(comps[i], "nodes", where, 0, true);
    c.internal_cusps = require_int(comps[i], "cusps", where, 0, true);
    components.push_back(std::move(c));
  }
  std::vector<CurveEdge> edges;
  if (doc.contains("edges")) {
    const json& es = doc["edges"];
    if (!es.is_array()) field_error("edges", "expected an array");
    for (std::size_t i = 0; i < es.size(); ++i) {
      const auto& e = es[i];
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
        field_error("edges[" + std::to_string(i) + "]", "expected [\"a\", \"b\"]");
      edges.push_back({e[0].get<std::string>(), e[1].get<std::string>()});
    }
  }
  CurveDocument out;
  try {
    out.curve = CurveGraph(std::move(components), std::move(edges));
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, e.detail());
  }
  if (doc.contains("embedding")) out.embedding = config_from_json(doc["embedding"]);
  return out;
}

CurveDocument load_curve_document(const std::string& path) {
  try {
    return parse_curve_document(read_file(path));
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.detail());
  }
}

json curve_to_json(const CurveGraph& curve) {
  json comps = json::array();
  for (const auto& c : curve.components())
    comps.push_back({{"label", c.label}, {"genus", c.geometric_genus}, {"nodes", c.internal_nodes},
                     {"cusps", c.internal_cusps}});
  json edges = json::array();
  for (const auto& e : curve.edges()) edges.push_back({e.a, e.b});
  return {{"schema", kCurveSchema}, {"components", comps}, {"edges", edges}};
}

ParamTail parse_tail(const std::string& text) {
  const json doc = parse_json(text);
  const json& coords = require(doc, "coords", "$");
  if (!coords.is_array() || coords.empty()) field_error("coords", "expected a nonempty array");
  std::vector<TailCoordinate> out;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const std::string where = "coords[" + std::to_string(i) + "]";
    TailCoordinate c;
    c.weight = require_int(coords[i], "weight", where, 0, false);
    const json& pb = require(coords[i], "pullback", where);
    if (pb.contains("terms")) {
      // General binary form: {"terms": [{"s": a, "t": b, "coeff": "p/q"}, ...]}
      const json& terms = pb["terms"];
      if (!terms.is_array() || terms.empty()) field_error(where + ".pullback.terms", "expected a nonempty array");
      std::int64_t degree = -1;
      std::vector<Rational> coeffs;
      for (std::size_t k = 0; k < terms.size(); ++k) {
        const std::string tw = where + ".pullback.terms[" + std::to_string(k) + "]";
        const auto s = require_int(terms[k], "s", tw, 0, false);
        const auto t = require_int(terms[k], "t", tw, 0, false);
        if (s < 0 || t < 0) field_error(tw, "negative exponent");
        if (degree < 0) {
          degree = s + t;
          coeffs.assign(static_cast<std::size_t>(degree + 1), Rational(0));
        } else if (s + t != degree) {
          field_error(tw, "terms must be homogeneous");
        }
        coeffs[static_cast<std::size_t>(t)] += terms[k].contains("coeff") ? rational_field(terms[k], "coeff", tw)
                                                                           : Rational(1);
      }
      c.pullback = BinaryForm(degree, std::move(coeffs));
    } else {
      const auto s = require_int(pb, "s", where + ".pullback", 0, false);
      const auto t = require_int(pb, "t", where + ".pullback", 0, false);
      if (s < 0 || t < 0) field_error(where + ".pullback", "negative exponent");
      c.pullback = BinaryForm::monomial(s, t);
    }
    out.push_back(std::move(c));
  }
  try {
    return ParamTail(std::move(out));
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, e.detail());
  }
}

json tail_to_json(const ParamTail& tail) {
  json coords = json::array();
  for (const auto& c : tail.coords()) {
    json pb;
    if (c.pullback.is_monomial()) {
      pb = {{"s", c.pullback.degree() - c.pullback.t_degree()}, {"t", c.pullback.t_degree()}};
    } else {
      json terms = json::array();
      for (std::size_t t = 0; t < c.pullback.coeffs().size(); ++t) {
        const auto& coeff = c.pullback.coeffs()[t];
        if (coeff.sign() == 0) continue;
        const auto ti = static_cast<std::int64_t>(t);
        terms.push_back({{"s", c.pullback.degree() - ti}, {"t", ti}, {"coeff", coeff.to_string()}});
      }
      pb = {{"terms", terms}};
    }
    coords.push_back({{"weight", c.weight}, {"pullback", pb}});
  }
  return {{"schema", kTailSchema}, {"coords", coords}};
}

json report_to_json(const StabilityReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"m", row.m},
                    {"w", row.w.get_str()},
                    {"mpa", row.mpa.to_string()},
                    {"mu", row.mu.to_string()},
                    {"hilbert", to_string(row.hilbert)},
                    {"source", row.source}});
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  json out = {{"schema", kReportSchema},
              {"scenario", to_string(r.scenario)},
              {"g", r.g},
              {"nu", r.nu},
              {"d", r.d},
              {"n", r.n},
              {"one_ps", r.one_ps},
              {"average_weight", r.average_weight.to_string()},
              {"rows", rows},
              {"w_poly", poly_to_json(r.w_poly)},
              {"mpa_poly", poly_to_json(r.mpa_poly)},
              {"chow_quadratic_coefficient", r.chow_quadratic_coefficient.to_string()},
              {"chow_verdict", to_string(r.chow_verdict)},
              {"interpolation", nullptr},
              {"checks", checks},
              {"notes", r.notes}};
  if (r.interpolation) out["interpolation"] = {{"a", r.interpolation->a.to_string()}, {"b", r.interpolation->b.to_string()}};
  return out;
}

StabilityReport report_from_json(const json& j) {
  if (!j.is_object()) field_error("$", "expected an object");
  if (j.value("schema", std::string()) != kReportSchema) field_error("schema", "expected " + std::string(kReportSchema));
  StabilityReport r;
  r.scenario = scenario_from_string(require_string(j, "scenario", "$"));
  r.g = require_int(j, "g", "$", 0, false);
  r.nu = require_int(j, "nu", "$", 0, false);
  r.d = require_int(j, "d", "$", 0, false);
  r.n = require_int(j, "n", "$", 0, false);
  r.one_ps = require_string(j, "one_ps", "$");
  r.average_weight = rational_field(j, "average_weight", "$");
  const json& rows = require(j, "rows", "$");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string where = "rows[" + std::to_string(i) + "]";
    StabilityRow row;
    row.m = require_int(rows[i], "m", where, 0, false);
    row.w = BigInt(require_string(rows[i], "w", where));
    row.mpa = rational_field(rows[i], "mpa", where);
    row.mu = rational_field(rows[i], "mu", where);
    row.hilbert = verdict_from_string(require_string(rows[i], "hilbert", where));
    row.source = require_string(rows[i], "source", where);
    r.rows.push_back(std::move(row));
  }
  r.w_poly = poly_from_json(require(j, "w_poly", "$"), "w_poly");
  r.mpa_poly = poly_from_json(require(j, "mpa_poly", "$"), "mpa_poly");
  r.chow_quadratic_coefficient = rational_field(j, "chow_quadratic_coefficient", "$");
  r.chow_verdict = verdict_from_string(require_string(j, "chow_verdict", "$"));
  if (j.contains("interpolation") && !j["interpolation"].is_null())
    r.interpolation = Interpolation{rational_field(j["interpolation"], "a", "interpolation"),
                                    rational_field(j["interpolation"], "b", "interpolation")};
  for (const auto& c : require(j, "checks", "$"))
    r.checks.push_back({require_string(c, "name", "checks"), require(c, "passed", "checks").get<bool>(),
                        require_string(c, "detail", "checks")});
  for (const auto& note : require(j, "notes", "$")) r.notes.push_back(note.get<std::string>());
  return r;
}

std::string render_report_table(const StabilityReport& r) {
  std::ostringstream os;
  os << "scenario " << to_string(r.scenario) << " (1-ps " << r.one_ps << ")\n";
  os << "g=" << r.g << " nu=" << r.nu << " d=" << r.d << " n=" << r.n << " average weight " << r.average_weight
     << "\n";
  os << std::setw(4) << "m" << std::setw(12) << "w" << std::setw(14) << "mPalpha" << std::setw(10) << "mu"
     << "  " << std::left << std::setw(18) << "hilbert" << "source" << std::right << "\n";
  for (const auto& row : r.rows) {
    os << std::setw(4) << row.m << std::setw(12) << row.w.get_str() << std::setw(14) << row.mpa.to_string()
       << std::setw(10) << row.mu.to_string() << "  " << std::left << std::setw(18) << to_string(row.hilbert)
       << row.source << std::right << "\n";
  }
  os << "w(m)        = " << r.w_poly.to_string() << "\n";
  os << "mPalpha(m)  = " << r.mpa_poly.to_string() << "\n";
  os << "chow coefficient " << r.chow_quadratic_coefficient << " (" << to_string(r.chow_verdict) << ")\n";
  if (r.interpolation)
    os << "interpolation mu(m) = -(m-1)(a m + b) with a=" << r.interpolation->a << " b=" << r.interpolation->b
       << "\n";
  for (const auto& c : r.checks) {
    os << (c.passed ? "  ok   " : "  FAIL ") << c.name;
    if (!c.passed && !c.detail.empty()) os << " [" << c.detail << "]";
    os << "\n";
  }
  for (const auto& note : r.notes) os << "note: " << note << "\n";
  return os.str();
}

std::string filtration_csv(const WeightFiltration& f) {
  std::ostringstream os;
  os << "r,dim\n";
  for (std::size_t r = 0; r < f.dims.size(); ++r) os << r << "," << f.dims[r] << "\n";
  return os.str();
}

json filtration_to_json(const WeightFiltration& f) {
  return {{"m", f.m}, {"max_weight", f.max_weight}, {"dims", f.dims}, {"basis_weight", basis_weight(f).get_str()}};
}

std::string describe_curve(const CurveGraph& curve) {
  std::ostringstream os;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    const auto& c = curve.components()[i];
    if (i) os << ", ";
    os << c.label << "(g=" << c.geometric_genus << ", nodes=" << c.internal_nodes << ", cusps=" << c.internal_cusps
       << ")";
  }
  for (const auto& e : curve.edges()) os << "; " << e.a << "-" << e.b;
  return os.str();
}

}  // namespace hmstab
