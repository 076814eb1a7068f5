#include "hmstab/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "hmstab/curve_model.hpp"
#include "hmstab/error.hpp"
#include "hmstab/filtration_engine.hpp"
#include "hmstab/linear_series.hpp"
#include "hmstab/monomial_engine.hpp"
#include "hmstab/serialization.hpp"
#include "hmstab/stability_engine.hpp"
#include "hmstab/sweep.hpp"

namespace hmstab {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string g;
  std::string g_range;
  std::string m;
  std::string m_range;
  std::int64_t nu = 4;
  std::optional<std::int64_t> d;
  std::string mode = "canonical";
  std::string format = "table";
  std::string out_path;

  std::vector<std::string> files;
  std::string at;
  std::optional<std::int64_t> wx;
  std::vector<std::int64_t> tangents;
  std::string scenario = "elliptic";
  std::string tail_path;
};

std::vector<std::int64_t> genus_list(const Options& o, const std::string& fallback) {
  const std::string& text = !o.g_range.empty() ? o.g_range : (!o.g.empty() ? o.g : fallback);
  const auto gs = parse_range(text);
  for (auto g : gs)
    if (g < 3) throw UsageError("genus must be at least 3, got " + std::to_string(g) + "; lower genus is not supported");
  return gs;
}

std::vector<std::int64_t> degree_list(const Options& o, const std::string& fallback) {
  const std::string& text = !o.m_range.empty() ? o.m_range : (!o.m.empty() ? o.m : fallback);
  const auto ms = parse_range(text);
  for (auto m : ms)
    if (m < 2) throw UsageError("m must be at least 2, got " + std::to_string(m));
  return ms;
}

std::int64_t single_degree(const Options& o, std::int64_t fallback) {
  if (o.m.empty() && o.m_range.empty()) return fallback;
  const auto ms = degree_list(o, "");
  if (ms.size() != 1) throw UsageError("this command takes a single --m");
  return ms.front();
}

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (o.format == f) return;
  throw UsageError("unsupported --format '" + o.format + "' for this command");
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string spaced(std::string s) {
  std::replace(s.begin(), s.end(), '_', ' ');
  return s;
}

// ---- scenario reports -------------------------------------------------------

std::string report_csv(const StabilityReport& r) {
  std::ostringstream os;
  os << "g,nu,m,w,mpa,mu,hilbert,source\n";
  for (const auto& row : r.rows)
    os << r.g << "," << r.nu << "," << row.m << "," << row.w.get_str() << "," << row.mpa << "," << row.mu << ","
       << to_string(row.hilbert) << "," << row.source << "\n";
  return os.str();
}

EmbeddingConfig scenario_config(const Options& o, std::int64_t g) {
  const EmbeddingMode mode = mode_from_string(o.mode);
  if (mode == EmbeddingMode::canonical) {
    if (o.d && *o.d != 2 * o.nu * (g - 1)) throw UsageError("--d conflicts with --mode canonical");
    return EmbeddingConfig::canonical(g, o.nu);
  }
  if (!o.d) throw UsageError("--mode general needs --d");
  return EmbeddingConfig::general(g, o.nu, *o.d);
}

int cmd_scenario(const std::string& name, const Options& o, std::string& text) {
  require_format(o, {"table", "json", "csv"});
  const auto gs = genus_list(o, "3");
  const auto ms = degree_list(o, "2..5");
  std::vector<StabilityReport> reports;
  for (auto g : gs) {
    if (name == "elliptic-tail") {
      reports.push_back(elliptic_tail_report(scenario_config(o, g), ms));
    } else if (name == "general") {
      const auto config = o.d ? EmbeddingConfig::general(g, o.nu, *o.d) : generalized_tail_config(o.nu, g);
      reports.push_back(generalized_report(config, ms));
    } else if (name == "cuspidal-tail") {
      reports.push_back(cuspidal_tail_report(scenario_config(o, g), ms));
    } else if (name == "cusp") {
      reports.push_back(cusp_report(scenario_config(o, g), ms));
    } else {
      throw Error(ErrorCode::UnknownScenario, "unknown scenario '" + name + "'");
    }
  }
  std::ostringstream os;
  if (o.format == "json") {
    if (reports.size() == 1) {
      os << report_to_json(reports.front()).dump(2) << "\n";
    } else {
      json arr = json::array();
      for (const auto& r : reports) arr.push_back(report_to_json(r));
      os << arr.dump(2) << "\n";
    }
  } else {
    for (std::size_t i = 0; i < reports.size(); ++i) {
      if (o.format == "csv") {
        std::string csv = report_csv(reports[i]);
        if (i > 0) csv = csv.substr(csv.find('\n') + 1);
        os << csv;
      } else {
        if (i > 0) os << "\n";
        os << render_report_table(reports[i]);
      }
    }
  }
  text = os.str();
  const bool ok =
      std::all_of(reports.begin(), reports.end(), [](const StabilityReport& r) { return r.all_checks_pass(); });
  return ok ? kExitOk : kExitMismatch;
}

// ---- repro ------------------------------------------------------------------

struct MatrixRow {
  std::string name;
  std::vector<bool> per_genus;
};

std::vector<GridCell> cells_for(const std::vector<GridCell>& cells, std::int64_t g) {
  std::vector<GridCell> out;
  std::copy_if(cells.begin(), cells.end(), std::back_inserter(out), [g](const GridCell& c) { return c.g == g; });
  return out;
}

bool tail_table_holds() {
  const ParamTail tail = cuspidal_tail();
  auto t_degrees = [&tail](std::int64_t m) {
    std::set<std::int64_t> out;
    for (const auto& b : initial_ideal_complement(tail, m)) out.insert(b.t);
    return out;
  };
  auto expected = [](std::int64_t top) {
    std::set<std::int64_t> out{0};
    for (std::int64_t t = 2; t <= top; ++t) out.insert(t);
    return out;
  };
  return min_weight_spanning_set(tail, 2).total_weight == 35 && min_weight_spanning_set(tail, 3).total_weight == 77 &&
         t_degrees(2) == expected(8) && t_degrees(3) == expected(12);
}

bool basins_hold(std::int64_t g) {
  const auto config = EmbeddingConfig::canonical(g, 4);
  const auto rho = build_rho(config);
  const auto cusp = cusp_deformation_weights(cusp_local_weight(config, rho));
  const auto [ta, tb] = node_tangent_weights(config, rho);
  const auto node = node_deformation_weights(ta, tb);
  return cusp.parameter_weights == std::vector<std::int64_t>{4, 6} && node.parameter_weights == std::vector<std::int64_t>{-1} &&
         basin_membership(cusp, false) == BasinMembership::in_basin &&
         basin_membership(cusp, true) == BasinMembership::not_in_basin &&
         basin_membership(node, false) == BasinMembership::not_in_basin &&
         basin_membership(node, true) == BasinMembership::in_basin;
}

bool generalized_holds(std::int64_t g) {
  bool ok = true;
  for (std::int64_t nu : {3, 4, 5, 6, 8}) {
    if ((g - 1) % (nu - 2) != 0) continue;
    const auto config = generalized_tail_config(nu, g);
    const auto report = generalized_report(config, {2, 3, 4});
    ok = ok && is_chow_critical(config) && report.chow_quadratic_coefficient.sign() == 0 && report.all_checks_pass();
    if (nu == 4) ok = ok && Rational(config.d(), config.n()) == Rational(8, 7);
  }
  const auto five = elliptic_tail_report(EmbeddingConfig::canonical(g, 5), {2, 3, 4});
  return ok && five.chow_quadratic_coefficient.sign() != 0 && !is_chow_critical(EmbeddingConfig::canonical(g, 5));
}

bool curve_model_holds(std::int64_t g) {
  const auto x = elliptic_tail_curve(g);
  const auto y = cuspidal_tail_curve(g);
  const auto z = cuspidal_curve(g);
  return graphs_isomorphic(pseudostabilize(x), z) && graphs_isomorphic(pseudostabilize(y), z) &&
         chow_identified(x, y) && chow_identified(x, z) && chow_identified(y, z);
}

template <typename F>
bool guarded(F&& f) {
  try {
    return f();
  } catch (const Error&) {
    return false;
  }
}

int cmd_repro(const Options& o, std::string& text) {
  require_format(o, {"table", "json"});
  const auto gs = genus_list(o, "3..6");
  const auto ms = degree_list(o, "2..5");
  std::vector<std::int64_t> ms_div = ms;
  for (std::int64_t m : {2, 3, 4})
    if (std::find(ms_div.begin(), ms_div.end(), m) == ms_div.end()) ms_div.push_back(m);
  std::sort(ms_div.begin(), ms_div.end());

  const auto elliptic = elliptic_sweep(gs, {3, 4}, ms, Execution::parallel);
  const auto cusp = cusp_sweep(gs, ms, Execution::parallel);
  const auto tail = cuspidal_tail_sweep(gs, ms, Execution::parallel);
  const bool tail_table = guarded(tail_table_holds);

  std::vector<MatrixRow> matrix{{"elliptic weight closed form (nu=3,4)", {}},
                                {"elliptic mu = -(m-1), chow 0 (nu=4)", {}},
                                {"cuspidal tail assembly and interpolation", {}},
                                {"cusp weight, mu = m-1, chow 0", {}},
                                {"divisibility by m-1", {}},
                                {"basins under rho and rho^-1", {}},
                                {"generalized family chow coefficient", {}},
                                {"pseudostabilization and identification", {}}};
  for (auto g : gs) {
    const auto config = EmbeddingConfig::canonical(g, 4);
    const auto ell = cells_for(elliptic, g);
    const auto cu = cells_for(cusp, g);
    const auto ta = cells_for(tail, g);
    matrix[0].per_genus.push_back(std::all_of(ell.begin(), ell.end(), [](const GridCell& c) {
      return c.error.empty() && Rational(c.w) == c.expected_w;
    }));
    matrix[1].per_genus.push_back(all_passed(ell) && guarded([&] {
      const auto r = elliptic_tail_report(config, ms);
      return r.all_checks_pass() && r.chow_quadratic_coefficient.sign() == 0;
    }));
    matrix[2].per_genus.push_back(tail_table && all_passed(ta) && guarded([&] {
      const auto r = cuspidal_tail_report(config, ms);
      return r.all_checks_pass() && r.interpolation && *r.interpolation == Interpolation{Rational(0), Rational(1)};
    }));
    matrix[3].per_genus.push_back(all_passed(cu) && guarded([&] {
      const auto r = cusp_report(config, ms);
      return r.all_checks_pass() && r.chow_quadratic_coefficient.sign() == 0;
    }));
    matrix[4].per_genus.push_back(guarded([&] {
      return divisibility_check(elliptic_tail_report(config, ms_div)) &&
             divisibility_check(cuspidal_tail_report(config, ms_div)) && divisibility_check(cusp_report(config, ms_div));
    }));
    matrix[5].per_genus.push_back(guarded([&] { return basins_hold(g); }));
    matrix[6].per_genus.push_back(guarded([&] { return generalized_holds(g); }));
    matrix[7].per_genus.push_back(guarded([&] { return curve_model_holds(g); }));
  }
  bool all = true;
  for (const auto& row : matrix)
    for (bool b : row.per_genus) all = all && b;

  std::vector<const GridCell*> rows;
  for (const auto& c : elliptic)
    if (c.nu == 4) rows.push_back(&c);

  std::ostringstream os;
  if (o.format == "json") {
    json jrows = json::array();
    for (const auto* c : rows) {
      json row = {{"g", c->g}, {"m", c->m}, {"w", c->w.get_str()}};
      if (c->error.empty()) {
        row["mpa"] = (Rational(c->w) + c->mu).to_string();
        row["mu"] = c->mu.to_string();
      } else {
        row["error"] = c->error;
      }
      jrows.push_back(row);
    }
    json jm = json::array();
    for (const auto& row : matrix) {
      json per = json::object();
      for (std::size_t i = 0; i < gs.size(); ++i) per[std::to_string(gs[i])] = static_cast<bool>(row.per_genus[i]);
      jm.push_back({{"check", row.name}, {"results", per}});
    }
    os << json{{"schema", "hmstab.repro/1"}, {"elliptic_rows", jrows}, {"matrix", jm}, {"passed", all}}.dump(2)
       << "\n";
  } else {
    os << "elliptic tail, 4-canonical model, 1-ps rho\n";
    os << pad("g", 4) << pad("m", 4) << pad("w", 10) << pad("mPalpha", 10) << pad("mu", 6) << "\n";
    for (const auto* c : rows) {
      os << pad(std::to_string(c->g), 4) << pad(std::to_string(c->m), 4) << pad(c->w.get_str(), 10);
      if (c->error.empty())
        os << pad((Rational(c->w) + c->mu).to_string(), 10) << pad(c->mu.to_string(), 6);
      else
        os << "  error: " << c->error;
      os << "\n";
    }
    os << "\n";
    std::size_t width = 0;
    for (const auto& row : matrix) width = std::max(width, row.name.size());
    os << std::left << std::setw(static_cast<int>(width)) << "check" << std::right;
    for (auto g : gs) os << pad("g=" + std::to_string(g), 6);
    os << "\n";
    for (const auto& row : matrix) {
      os << std::left << std::setw(static_cast<int>(width)) << row.name << std::right;
      for (bool b : row.per_genus) os << pad(b ? "ok" : "FAIL", 6);
      os << "\n";
    }
    os << "\n" << (all ? "all checks pass" : "some checks FAIL") << "\n";
  }
  text = os.str();
  return all ? kExitOk : kExitMismatch;
}

// ---- curve specs ------------------------------------------------------------

int cmd_identify(const Options& o, std::string& text) {
  require_format(o, {"table", "json"});
  if (o.files.size() != 2) throw UsageError("identify takes exactly two curve spec files");
  const auto a = load_curve_document(o.files[0]);
  const auto b = load_curve_document(o.files[1]);
  bool identified = false;
  std::string reason;
  try {
    identified = chow_identified(a.curve, b.curve);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::GenusMismatch) throw;
    reason = "different arithmetic genus";
  }
  const auto pa = pseudostabilize(a.curve);
  const auto pb = pseudostabilize(b.curve);
  std::ostringstream os;
  if (o.format == "json") {
    json j = {{"identified", identified},
              {"a", {{"curve", curve_to_json(a.curve)}, {"pseudostabilization", curve_to_json(pa)}}},
              {"b", {{"curve", curve_to_json(b.curve)}, {"pseudostabilization", curve_to_json(pb)}}}};
    if (!reason.empty()) j["reason"] = reason;
    os << j.dump(2) << "\n";
  } else {
    os << (identified ? "identified" : "not identified");
    if (!reason.empty()) os << " (" << reason << ")";
    os << "\n";
    os << o.files[0] << ": " << describe_curve(a.curve) << "\n  -> " << describe_curve(pa) << "\n";
    os << o.files[1] << ": " << describe_curve(b.curve) << "\n  -> " << describe_curve(pb) << "\n";
  }
  text = os.str();
  return kExitOk;
}

std::string tails_text(const std::vector<Subcurve>& tails) {
  std::string out;
  for (const auto& t : tails) {
    if (!out.empty()) out += " ";
    out += "{";
    bool first = true;
    for (const auto& l : t.labels) {
      if (!first) out += ",";
      out += l;
      first = false;
    }
    out += "}";
  }
  return out.empty() ? "none" : out;
}

int cmd_classify(const Options& o, std::string& text) {
  require_format(o, {"table", "json"});
  if (o.files.size() != 1) throw UsageError("classify takes exactly one curve spec file");
  const auto doc = load_curve_document(o.files[0]);
  const auto& curve = doc.curve;
  const auto pa = arithmetic_genus(curve);
  const auto tails = find_genus_one_tails(curve);
  const bool dm = is_dm_stable(curve);
  const bool weak = pa >= 3 && is_weakly_pseudostable(curve);
  const bool pseudo = pa >= 3 && is_pseudostable(curve);
  std::optional<CurveGraph> stabilized;
  if (weak) stabilized = pseudostabilize(curve);
  std::ostringstream os;
  if (o.format == "json") {
    json jt = json::array();
    for (const auto& t : tails) jt.push_back(t.labels);
    json j = {{"arithmetic_genus", pa},     {"dm_stable", dm},         {"weakly_pseudostable", weak},
              {"pseudostable", pseudo},     {"genus_one_tails", jt},   {"cusps", curve.total_cusps()},
              {"pseudostabilization", nullptr}};
    if (stabilized) j["pseudostabilization"] = curve_to_json(*stabilized);
    if (doc.embedding) j["embedding"] = config_to_json(*doc.embedding);
    os << j.dump(2) << "\n";
  } else {
    os << "curve: " << describe_curve(curve) << "\n";
    os << "arithmetic genus: " << pa << "\n";
    os << "cusps: " << curve.total_cusps() << "\n";
    os << "genus-one tails: " << tails_text(tails) << "\n";
    os << "DM stable: " << yes_no(dm) << "\n";
    os << "weakly pseudostable: " << yes_no(weak) << "\n";
    os << "pseudostable: " << yes_no(pseudo) << "\n";
    if (stabilized) os << "pseudostabilization: " << describe_curve(*stabilized) << "\n";
    if (doc.embedding) {
      const auto& e = *doc.embedding;
      os << "embedding: g=" << e.g() << " nu=" << e.nu() << " d=" << e.d() << " n=" << e.n() << " l=" << e.l()
         << " (" << to_string(e.mode()) << ")\n";
    }
  }
  text = os.str();
  return kExitOk;
}

// ---- basins, filtrations, tails ---------------------------------------------

int cmd_basin(const Options& o, std::string& text) {
  require_format(o, {"table", "json"});
  const auto gs = genus_list(o, "3");
  if (gs.size() != 1) throw UsageError("basin takes a single --g");
  const auto config = EmbeddingConfig::canonical(gs.front(), 4);
  const auto rho = build_rho(config);
  DeformationWeights dw;
  if (o.at == "cusp") {
    if (!o.tangents.empty()) throw UsageError("--tangents applies to --at node");
    dw = cusp_deformation_weights(o.wx ? *o.wx : cusp_local_weight(config, rho));
  } else if (o.at == "node") {
    if (o.wx) throw UsageError("--wx applies to --at cusp");
    if (!o.tangents.empty() && o.tangents.size() != 2) throw UsageError("--tangents takes two weights");
    const auto t = o.tangents.empty() ? node_tangent_weights(config, rho) : std::pair{o.tangents[0], o.tangents[1]};
    dw = node_deformation_weights(t.first, t.second);
  } else {
    throw UsageError("--at must be cusp or node");
  }
  const auto under_rho = basin_membership(dw, false);
  const auto under_inverse = basin_membership(dw, true);
  std::ostringstream os;
  if (o.format == "json") {
    os << json{{"singularity", o.at},
               {"local_weights", dw.local_weights},
               {"parameter_weights", dw.parameter_weights},
               {"rho", to_string(under_rho)},
               {"rho_inverse", to_string(under_inverse)}}
              .dump(2)
       << "\n";
  } else {
    auto join = [](const std::vector<std::int64_t>& v) {
      std::string s;
      for (auto x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
      return s;
    };
    if (o.at == "cusp")
      os << "cusp y^2 = x^3 + a x + b: weight(x) = " << dw.local_weights[0] << ", weights(a, b) = "
         << join(dw.parameter_weights) << "\n";
    else
      os << "node xy = t: tangent weights " << join(dw.local_weights) << ", weight(t) = "
         << join(dw.parameter_weights) << "\n";
    os << "rho: " << spaced(to_string(under_rho)) << "; rho^-1: " << spaced(to_string(under_inverse)) << "\n";
  }
  text = os.str();
  return kExitOk;
}

int cmd_filtration_dump(const Options& o, std::string& text) {
  require_format(o, {"table", "json", "csv"});
  const auto gs = genus_list(o, "3");
  if (gs.size() != 1) throw UsageError("filtration-dump takes a single --g");
  const std::int64_t m = single_degree(o, 2);
  WeightFiltration f;
  if (o.scenario == "elliptic") {
    f = elliptic_tail_filtration(scenario_config(o, gs.front()), m);
  } else if (o.scenario == "cusp") {
    f = cusp_filtration(scenario_config(o, gs.front()), m);
  } else {
    throw Error(ErrorCode::UnknownScenario, "unknown filtration scenario '" + o.scenario + "'");
  }
  if (o.format == "csv") {
    text = filtration_csv(f);
  } else if (o.format == "json") {
    text = filtration_to_json(f).dump(2) + "\n";
  } else {
    std::ostringstream os;
    os << pad("r", 6) << pad("dim", 8) << "\n";
    for (std::size_t r = 0; r < f.dims.size(); ++r)
      os << pad(std::to_string(r), 6) << pad(std::to_string(f.dims[r]), 8) << "\n";
    os << "basis weight " << basis_weight(f).get_str() << "\n";
    text = os.str();
  }
  return kExitOk;
}

int cmd_standard_monomials(const Options& o, std::string& text) {
  require_format(o, {"table", "json"});
  const ParamTail tail = o.tail_path.empty() ? cuspidal_tail() : parse_tail(read_file(o.tail_path));
  const std::int64_t m = single_degree(o, 2);
  const SpanningSet set = min_weight_spanning_set(tail, m);
  std::vector<Bidegree> bidegrees;
  if (tail.is_monomial()) bidegrees = initial_ideal_complement(tail, m);
  std::ostringstream os;
  if (o.format == "json") {
    json basis = json::array();
    for (std::size_t i = 0; i < set.basis.size(); ++i)
      basis.push_back({{"exponents", set.basis[i]}, {"weight", set.weights[i]}});
    json j = {{"m", m}, {"basis", basis}, {"total_weight", set.total_weight.get_str()}};
    if (tail.is_monomial()) {
      json ts = json::array();
      for (const auto& b : bidegrees) ts.push_back(b.t);
      j["t_degrees"] = ts;
    }
    os << j.dump(2) << "\n";
  } else {
    os << "degree " << m << " minimal-weight basis (" << set.basis.size() << " monomials)\n";
    for (std::size_t i = 0; i < set.basis.size(); ++i) {
      std::string e;
      for (auto x : set.basis[i]) e += (e.empty() ? "" : ",") + std::to_string(x);
      const BinaryForm img = pullback(set.basis[i], tail);
      os << "  (" << e << ")  weight " << set.weights[i];
      if (img.is_monomial()) os << "  s^" << img.degree() - img.t_degree() << " t^" << img.t_degree();
      os << "\n";
    }
    os << "total weight " << set.total_weight.get_str() << "\n";
    if (tail.is_monomial()) {
      std::string ts;
      for (const auto& b : bidegrees) ts += (ts.empty() ? "" : ",") + std::to_string(b.t);
      os << "t-degrees {" << ts << "}\n";
    }
  }
  text = os.str();
  return kExitOk;
}

void add_genus_flags(CLI::App* sub, Options& o) {
  sub->add_option("--g", o.g, "genus or range a..b");
  sub->add_option("--g-range", o.g_range, "genus range a..b");
}

void add_degree_flags(CLI::App* sub, Options& o) {
  sub->add_option("--m", o.m, "Hilbert degree or range a..b");
  sub->add_option("--m-range", o.m_range, "Hilbert degree range a..b");
}

void add_output_flags(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "table, json or csv");
  sub->add_option("--out", o.out_path, "write output to this file");
}

void add_config_flags(CLI::App* sub, Options& o) {
  sub->add_option("--nu", o.nu, "tail twist nu");
  sub->add_option("--mode", o.mode, "canonical or general");
  sub->add_option("--d", o.d, "degree (general mode)");
}

}  // namespace

std::vector<std::int64_t> parse_range(const std::string& text) {
  auto to_int = [&text](const std::string& s) -> std::int64_t {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (s.empty() || used != s.size()) throw Error(ErrorCode::ParseError, "bad range '" + text + "', expected a or a..b");
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) return {to_int(text)};
  const auto lo = to_int(text.substr(0, dots));
  const auto hi = to_int(text.substr(dots + 2));
  if (hi < lo) throw Error(ErrorCode::ParseError, "empty range '" + text + "'");
  return inclusive_range(lo, hi);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hilbert-Mumford weights and indices for curves with tails and cusps", "hmstab"};
  app.require_subcommand(1);
  Options o;

  struct Entry {
    std::string name;
    CLI::App* app;
  };
  std::vector<Entry> subs;
  auto scenario = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    add_genus_flags(sub, o);
    add_degree_flags(sub, o);
    add_output_flags(sub, o);
    add_config_flags(sub, o);
    subs.push_back({name, sub});
  };
  {
    auto* sub = app.add_subcommand("repro", "run every scenario and print a pass/fail matrix");
    add_genus_flags(sub, o);
    add_degree_flags(sub, o);
    add_output_flags(sub, o);
    subs.push_back({"repro", sub});
  }
  scenario("elliptic-tail", "elliptic tail under rho");
  scenario("cuspidal-tail", "rational cuspidal tail under rho (4-canonical)");
  scenario("cusp", "cuspidal curve under the inverse of rho (4-canonical)");
  scenario("general", "elliptic tail in the generalized degree family");
  {
    auto* sub = app.add_subcommand("identify", "compare two curve specs after pseudostabilization");
    sub->add_option("files", o.files, "two curve spec files")->required()->expected(2);
    add_output_flags(sub, o);
    subs.push_back({"identify", sub});
  }
  {
    auto* sub = app.add_subcommand("classify", "stability classes of one curve spec");
    sub->add_option("file", o.files, "curve spec file")->required()->expected(1);
    add_output_flags(sub, o);
    subs.push_back({"classify", sub});
  }
  {
    auto* sub = app.add_subcommand("basin", "deformation weights and basin membership at a cusp or node");
    sub->add_option("--at", o.at, "cusp or node")->required();
    sub->add_option("--wx", o.wx, "weight of x at the cusp");
    sub->add_option("--tangents", o.tangents, "two tangent weights at the node")->expected(2);
    add_genus_flags(sub, o);
    add_output_flags(sub, o);
    subs.push_back({"basin", sub});
  }
  {
    auto* sub = app.add_subcommand("filtration-dump", "dimensions of the weight filtration");
    sub->add_option("--scenario", o.scenario, "elliptic or cusp");
    add_genus_flags(sub, o);
    add_degree_flags(sub, o);
    add_output_flags(sub, o);
    add_config_flags(sub, o);
    subs.push_back({"filtration-dump", sub});
  }
  {
    auto* sub = app.add_subcommand("standard-monomials", "minimal-weight basis on a parameterized tail");
    sub->add_option("--tail", o.tail_path, "tail spec file (default: the cuspidal quartic)");
    add_degree_flags(sub, o);
    add_output_flags(sub, o);
    subs.push_back({"standard-monomials", sub});
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::string chosen;
  for (const auto& s : subs)
    if (s.app->parsed()) chosen = s.name;

  std::string text;
  int code = kExitOk;
  try {
    if (chosen == "repro") code = cmd_repro(o, text);
    else if (chosen == "identify") code = cmd_identify(o, text);
    else if (chosen == "classify") code = cmd_classify(o, text);
    else if (chosen == "basin") code = cmd_basin(o, text);
    else if (chosen == "filtration-dump") code = cmd_filtration_dump(o, text);
    else if (chosen == "standard-monomials") code = cmd_standard_monomials(o, text);
    else code = cmd_scenario(chosen, o, text);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::VerificationFailure ? kExitMismatch : kExitUsage;
  }

  if (o.out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(o.out_path);
    if (!file) {
      err << "error: cannot write '" << o.out_path << "'\n";
      return kExitUsage;
    }
    file << text;
  }
  return code;
}

}  // namespace hmstab
