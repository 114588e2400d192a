#include "sdres/report.hpp"

#include <sstream>

#include "json.hpp"
#include "sdres/error.hpp"

namespace sdres {

using Json = nlohmann::ordered_json;

namespace {

Json ord_json(const Ord& o) { return o.finite() ? Json(o.value()) : Json("-inf"); }

Ord ord_from(const Json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() != "-inf") throw Error(ErrorKind::InvalidArgument, "bad order value");
    return Ord::neg_inf();
  }
  return Ord(j.get<int>());
}

Json ords_json(const std::vector<Ord>& v) {
  Json a = Json::array();
  for (const auto& o : v) a.push_back(ord_json(o));
  return a;
}

std::vector<Ord> ords_from(const Json& j) {
  std::vector<Ord> out;
  for (const auto& e : j) out.push_back(ord_from(e));
  return out;
}

Json var_json(const VarRef& v) { return Json::array({v.var, v.shift}); }
VarRef var_from(const Json& j) { return VarRef{j.at(0).get<int>(), j.at(1).get<int>()}; }

Json resultant_json(const MultiPoly& p) {
  Json terms = Json::array();
  for (const auto& t : p.terms()) {
    Json factors = Json::array();
    for (const auto& [s, e] : t.mono.factors()) {
      const CoeffRef c = coeff_from_symbol(s);
      factors.push_back({{"u", {c.poly, c.term}}, {"shift", c.shift}, {"exp", e}});
    }
    terms.push_back({{"coeff", t.coeff.get_str()}, {"factors", factors}});
  }
  return {{"terms", terms}};
}

MultiPoly resultant_from(const Json& j) {
  std::vector<Term> terms;
  for (const auto& t : j.at("terms")) {
    std::vector<Monomial::Factor> f;
    for (const auto& x : t.at("factors")) {
      const CoeffRef c{x.at("u").at(0).get<int>(), x.at("u").at(1).get<int>(), x.at("shift").get<int>()};
      f.emplace_back(coeff_symbol(c), x.at("exp").get<std::uint32_t>());
    }
    terms.push_back({Monomial(std::move(f)), BigInt(t.at("coeff").get<std::string>())});
  }
  return MultiPoly::from_terms(std::move(terms));
}

Stage stage_from(const std::string& s) {
  for (Stage st : {Stage::Check, Stage::Super, Stage::Bounds, Stage::Resultant})
    if (to_string(st) == s) return st;
  throw Error(ErrorKind::InvalidArgument, "unknown stage '" + s + "'");
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += (s.empty() ? "" : ", ") + std::to_string(x);
  return s;
}

std::string join_vars(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += (s.empty() ? "y" : ", y") + std::to_string(x);
  return s;
}

std::string join(const std::vector<Ord>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ", ") + x.to_string();
  return s;
}

Json to_json(const PipelineReport& r) {
  Json j;
  j["essential"] = r.essential;
  j["stage"] = std::string(to_string(r.stage));
  j["n"] = r.n;
  j["rank"] = r.rank;
  if (!r.super_essential.empty()) j["super_essential"] = r.super_essential;
  if (!r.kept_vars.empty()) j["kept_vars"] = r.kept_vars;
  if (!r.dropped_vars.empty()) j["dropped_vars"] = r.dropped_vars;
  if (r.order_matrix.num_rows() > 0) {
    Json m = Json::array();
    for (const auto& row : r.order_matrix.entries) m.push_back(ords_json(row));
    j["order_matrix"] = m;
  }
  if (!r.jacobi.empty()) j["jacobi"] = ords_json(r.jacobi);
  if (!r.column_gcd_degrees.empty()) j["column_gcd_degrees"] = r.column_gcd_degrees;
  if (!r.modified_jacobi.empty()) j["modified_jacobi"] = ords_json(r.modified_jacobi);
  if (r.prolonged > 0) {
    j["prolonged"] = r.prolonged;
    j["p_offset"] = r.p_offset;
  }
  if (!r.alg_essential.empty()) {
    Json a = Json::array();
    for (const auto& [poly, sh] : r.alg_essential) a.push_back({{"poly", poly}, {"shift", sh}});
    j["alg_essential"] = a;
  }
  if (!r.z_kept.empty()) {
    Json k = Json::array();
    for (const auto& v : r.z_kept) k.push_back(var_json(v));
    j["alg_kept_vars"] = k;
  }
  if (!r.z_dropped.empty()) {
    Json d = Json::array();
    for (const auto& v : r.z_dropped) d.push_back(var_json(v));
    j["alg_dropped_vars"] = d;
  }
  if (!r.lattice.basis.empty()) {
    Json vars = Json::array();
    for (const auto& v : r.lattice.vars) vars.push_back(var_json(v));
    j["lattice"] = {{"vars", vars}, {"basis", r.lattice.basis}};
  }
  if (!r.z_system.empty()) j["z_system"] = r.z_system;
  if (r.m1_dim > 0) {
    j["m1_dim"] = r.m1_dim;
    j["m2_dim"] = r.m2_dim;
    j["lifting_attempts"] = r.lifting_attempts;
  }
  if (r.resultant) j["resultant"] = resultant_json(*r.resultant);
  if (!r.order_profile.empty()) {
    Json o = Json::array();
    for (const auto& [poly, ord] : r.order_profile) o.push_back({{"poly", poly}, {"ord", ord_json(ord)}});
    j["order_profile"] = o;
  }
  if (!r.verification.empty()) {
    Json v = Json::object();
    for (const auto& [name, ok] : r.verification) v[name] = ok;
    j["verification"] = v;
  }
  j["seed"] = r.seed;
  return j;
}

std::string to_text(const PipelineReport& r) {
  std::ostringstream os;
  os << "rank(D_P) = " << r.rank << " (n = " << r.n << ")\n";
  if (!r.essential) {
    os << "No SDResultant\n";
    os << "seed: " << r.seed << "\n";
    return os.str();
  }
  os << "Laurent transformally essential: yes\n";
  if (!r.super_essential.empty()) os << "super-essential T = {" << join(r.super_essential) << "}\n";
  if (!r.kept_vars.empty()) {
    os << "kept variables: " << join_vars(r.kept_vars) << "\n";
    if (!r.dropped_vars.empty()) os << "set to 1: " << join_vars(r.dropped_vars) << "\n";
  }
  if (r.order_matrix.num_rows() > 0) os << "order matrix:\n" << r.order_matrix.to_string();
  if (!r.jacobi.empty()) os << "Jacobi numbers J = (" << join(r.jacobi) << ")\n";
  if (!r.column_gcd_degrees.empty()) os << "column gcd degrees: (" << join(r.column_gcd_degrees) << ")\n";
  if (!r.modified_jacobi.empty()) os << "modified bounds J~ = (" << join(r.modified_jacobi) << ")\n";
  if (r.prolonged > 0) os << "prolonged polynomials: " << r.prolonged << ", p = " << r.p_offset << "\n";
  if (!r.alg_essential.empty()) {
    os << "algebraic essential system:";
    for (const auto& [poly, sh] : r.alg_essential) {
      os << " ";
      if (sh == 1) os << "δ";
      else if (sh > 1) os << "δ^" << sh;
      os << "P" << poly;
    }
    os << "\n";
  }
  if (!r.z_dropped.empty()) {
    os << "algebraic variables set to 1:";
    for (const auto& v : r.z_dropped) os << " " << to_string(v);
    os << "\n";
  }
  if (!r.lattice.basis.empty()) os << "substitution:\n" << r.lattice.to_string();
  if (!r.z_system.empty()) os << "z-system:\n" << r.z_system;
  if (r.m1_dim > 0) os << "M1: " << r.m1_dim << "x" << r.m1_dim << ", M2: " << r.m2_dim << "x" << r.m2_dim << "\n";
  if (r.resultant) {
    os << "SR (" << r.resultant->size() << " terms):\n" << format_resultant(*r.resultant, true);
  }
  if (!r.order_profile.empty()) {
    os << "ord(SR, u_i):";
    for (const auto& [poly, ord] : r.order_profile) os << " " << poly << ":" << ord.to_string();
    os << "\n";
  }
  if (!r.verification.empty()) {
    os << "checks:";
    for (const auto& [name, ok] : r.verification) os << " " << name << "=" << (ok ? "ok" : "FAILED");
    os << "\n";
  }
  if (!r.timing.empty()) {
    os << "timing (ms):";
    for (const auto& [stage, ms] : r.timing) os << " " << stage << "=" << static_cast<long>(ms + 0.5);
    os << "\n";
  }
  os << "seed: " << r.seed << "\n";
  return os.str();
}

}  // namespace

std::string format_resultant(const MultiPoly& p, bool per_line) {
  if (p.is_zero()) return per_line ? "0\n" : "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    std::string term;
    const BigInt a = abs(t.coeff);
    if (first) term += t.coeff < 0 ? "-" : "";
    else term += t.coeff < 0 ? (per_line ? "- " : " - ") : (per_line ? "+ " : " + ");
    bool need_star = false;
    if (a != 1 || t.mono.is_one()) {
      term += a.get_str();
      need_star = true;
    }
    for (const auto& [s, e] : t.mono.factors()) {
      if (need_star) term += "*";
      term += coeff_symbol_name(s);
      if (e != 1) term += "^" + std::to_string(e);
      need_star = true;
    }
    out += term;
    if (per_line) out += "\n";
    first = false;
  }
  return out;
}

std::string serialize(const PipelineReport& report, Format format) {
  if (format == Format::Text) return to_text(report);
  return to_json(report).dump(2) + "\n";
}

PipelineReport deserialize(std::string_view text) {
  PipelineReport r;
  try {
    const Json j = Json::parse(text);
    r.essential = j.at("essential").get<bool>();
    r.stage = stage_from(j.at("stage").get<std::string>());
    r.n = j.at("n").get<int>();
    r.rank = j.at("rank").get<int>();
    r.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("super_essential")) r.super_essential = j["super_essential"].get<std::vector<int>>();
    if (j.contains("kept_vars")) r.kept_vars = j["kept_vars"].get<std::vector<int>>();
    if (j.contains("dropped_vars")) r.dropped_vars = j["dropped_vars"].get<std::vector<int>>();
    if (j.contains("order_matrix"))
      for (const auto& row : j["order_matrix"]) r.order_matrix.entries.push_back(ords_from(row));
    if (j.contains("jacobi")) r.jacobi = ords_from(j["jacobi"]);
    if (j.contains("column_gcd_degrees")) r.column_gcd_degrees = j["column_gcd_degrees"].get<std::vector<int>>();
    if (j.contains("modified_jacobi")) r.modified_jacobi = ords_from(j["modified_jacobi"]);
    if (j.contains("prolonged")) {
      r.prolonged = j["prolonged"].get<int>();
      r.p_offset = j.at("p_offset").get<int>();
    }
    if (j.contains("alg_essential"))
      for (const auto& a : j["alg_essential"])
        r.alg_essential.emplace_back(a.at("poly").get<int>(), a.at("shift").get<int>());
    if (j.contains("alg_kept_vars"))
      for (const auto& v : j["alg_kept_vars"]) r.z_kept.push_back(var_from(v));
    if (j.contains("alg_dropped_vars"))
      for (const auto& v : j["alg_dropped_vars"]) r.z_dropped.push_back(var_from(v));
    if (j.contains("lattice")) {
      for (const auto& v : j["lattice"].at("vars")) r.lattice.vars.push_back(var_from(v));
      r.lattice.basis = j["lattice"].at("basis").get<IntMatrix>();
    }
    if (j.contains("z_system")) r.z_system = j["z_system"].get<std::string>();
    if (j.contains("m1_dim")) {
      r.m1_dim = j["m1_dim"].get<std::size_t>();
      r.m2_dim = j.at("m2_dim").get<std::size_t>();
      r.lifting_attempts = j.at("lifting_attempts").get<int>();
    }
    if (j.contains("resultant")) r.resultant = resultant_from(j["resultant"]);
    if (j.contains("order_profile"))
      for (const auto& o : j["order_profile"]) r.order_profile[o.at("poly").get<int>()] = ord_from(o.at("ord"));
    if (j.contains("verification"))
      for (const auto& [name, ok] : j["verification"].items()) r.verification[name] = ok.get<bool>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("malformed report: ") + e.what());
  }
  return r;
}

}  // namespace sdres
