// Copyright 2026 The resform Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command pipelines of the resform driver. Every command turns an Options
// record into a JSON report; the text summary is rendered from the report.

#ifndef RESFORM_TOOLS_REPORT_HPP_
#define RESFORM_TOOLS_REPORT_HPP_

#include <cstdint>
#include <fstream>
#include <functional>
#include <future>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "resform/epsilon.hpp"
#include "resform/homog.hpp"
#include "resform/milnor.hpp"
#include "resform/residue.hpp"
#include "support/acceptance.hpp"

namespace resform::cli {

using json = nlohmann::ordered_json;

inline const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"milnor", "gram", "disc",   "arf",   "epsilon",
                                              "verify", "fermat", "homog2", "corpus"};
  return names;
}

struct Options {
  std::string command;
  int p = 0;
  int m = 1;
  std::optional<std::vector<int>> modulus;
  std::vector<std::string> vars;
  std::string poly;
  std::string scale = "1";
  std::string lift_perturbation;  // W_3 polynomial text, "random", or empty
  Convention convention = Convention::kCalibrated;
  std::uint64_t seed = acceptance::kDefaultSeed;
  int d = 0;
  int n = 0;
  std::vector<std::string> a;
  std::vector<std::string> coeffs;
  std::string corpus;
  bool acceptance = true;
};

inline Convention parse_convention(const std::string& s) {
  if (s == "calibrated") return Convention::kCalibrated;
  if (s == "literal") return Convention::kLiteral;
  fail(ErrorCode::kInvalidArgument, "convention must be calibrated or literal, got '" + s + "'");
}

// Splits at commas outside brackets, so "1,[0,1],1" has three entries.
inline std::vector<std::string> split_top_level(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  return out;
}

// --- JSON encodings --------------------------------------------------------

inline json field_json(const Field& k) { return {{"p", k.p()}, {"m", k.m()}, {"modulus", k.modulus()}}; }

inline json elem_json(const Field& k, FieldElem a) { return k.coeffs(a); }

inline json elem_json(const GaloisRing& gr, const GaloisElem& a) { return gr.coeffs(a); }

template <CoefficientRing R>
json matrix_json(const R& ring, const Matrix<typename R::Elem>& m) {
  json rows = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& x : row) r.push_back(elem_json(ring, x));
    rows.push_back(std::move(r));
  }
  return rows;
}

inline std::string monomial_string(const Exponent& e, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += names[i];
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

inline json basis_json(const std::vector<Exponent>& basis, const std::vector<std::string>& names) {
  json out = json::array();
  for (const auto& e : basis) out.push_back(monomial_string(e, names));
  return out;
}

inline json square_class_json(const Field& k, const SquareClass& c) {
  return {{"legendre", c.legendre}, {"representative", elem_json(k, c.representative)}};
}

inline json witt_class_json(const GaloisRing& gr, const WittDiscClass& c) {
  const Field& k = gr.residue_field();
  return {{"a_part", elem_json(k, c.cls.a_part)},
          {"b_part", elem_json(k, c.cls.b_part)},
          {"b_trace", c.cls.b_trace},
          {"canonical", c.cls.canonical},
          {"representative", elem_json(gr, c.representative)}};
}

inline json arf_json(const ArfReport& r) {
  const Field& k = r.gram.ring.residue_field();
  return {{"value", elem_json(k, r.arf.value)}, {"trace_bit", r.arf.trace_bit}};
}

// sign * q^e as a reduced fraction, when no tau factor is present.
inline std::string rational_string(int sign, std::int64_t q, long long e) {
  const std::int64_t pw = checked_pow(q, static_cast<unsigned>(e < 0 ? -e : e));
  const std::string s = sign < 0 ? "-" : "";
  return e < 0 ? s + "1/" + std::to_string(pw) : s + std::to_string(pw);
}

inline json epsilon_json(const EpsilonValue& v) {
  json out{{"sign", v.sign}, {"tau_exp", v.tau_exp}, {"q_exp", v.q_exp}, {"twist", v.twist}, {"text", v.to_string()}};
  out["value"] = v.tau_exp ? json(nullptr) : json(rational_string(v.sign, v.field.q(), v.q_exp));
  if (v.witness)
    out["witness"] = {{"num", v.witness->num.coeffs()}, {"qpow", v.witness->qpow}};
  else
    out["witness"] = nullptr;
  return out;
}

// --- input handling ---------------------------------------------------------

inline Field make_field(const Options& o) {
  require(o.p != 0, ErrorCode::kInvalidArgument, "--p is required");
  require(o.m >= 1, ErrorCode::kInvalidArgument, "--m must be at least 1");
  return Field::create(o.p, o.m, o.modulus);
}

template <CoefficientRing R>
typename R::Elem parse_elem(const std::string& text, const R& ring) {
  const auto c = parse_poly(text, ring, {});
  return c.is_zero() ? ring.zero() : c.terms().begin()->second;
}

inline MultiPoly<Field> make_poly(const Options& o, const Field& k) {
  require(!o.poly.empty(), ErrorCode::kInvalidArgument, "--poly is required");
  require(!o.vars.empty(), ErrorCode::kInvalidArgument, "--vars is required");
  return parse_poly(o.poly, k, o.vars);
}

inline std::optional<MultiPoly<GaloisRing>> make_perturbation(const Options& o, const GaloisRing& gr) {
  if (o.lift_perturbation.empty()) return std::nullopt;
  if (o.lift_perturbation == "random") {
    acceptance::Rng rng(o.seed);
    return acceptance::random_perturbation(gr, static_cast<int>(o.vars.size()), rng);
  }
  return parse_poly(o.lift_perturbation, gr, o.vars);
}

inline json base_report(const Options& o) {
  json r{{"command", o.command}, {"convention", convention_name(o.convention)}};
  return r;
}

inline json poly_input(const Options& o, const Field& k) {
  return {{"field", field_json(k)}, {"vars", o.vars}, {"poly", o.poly}};
}

// --- commands ---------------------------------------------------------------

inline json run_milnor(const Options& o) {
  const Field k = make_field(o);
  const auto f = make_poly(o, k);
  const auto alg = milnor_algebra(f);
  json r = base_report(o);
  r["input"] = poly_input(o, k);
  r["mu"] = alg.mu();
  r["basis"] = basis_json(alg.basis(), o.vars);
  r["D"] = alg.truncation();
  r["dimtot"] = dimtot_from_mu(f.n_vars(), alg.mu());
  return r;
}

// Odd p: the form over k. p = 2: the form of the lift over W_3.
inline json gram_common(const Options& o, bool with_matrix) {
  const Field k = make_field(o);
  const auto f = make_poly(o, k);
  json r = base_report(o);
  r["input"] = poly_input(o, k);
  r["input"]["scale"] = o.scale;
  if (k.p() != 2) {
    auto alg = std::make_shared<const MilnorAlgebra<Field>>(milnor_algebra(f));
    const auto g = gram_matrix(alg, f, parse_elem(o.scale, k));
    r["mu"] = alg->mu();
    r["basis"] = basis_json(g.basis, o.vars);
    if (with_matrix) r["gram"] = matrix_json(k, g.matrix);
    r["disc"] = elem_json(k, discriminant(g));
    r["disc_class"] = square_class_json(k, disc_square_class(g));
    r["arf"] = nullptr;
    return r;
  }
  const GaloisRing gr = GaloisRing::create(k);
  const auto pert = make_perturbation(o, gr);
  auto lift = teichmuller_lift(gr, f);
  if (pert) lift = lift + pert->scaled(gr.from_int(2));
  auto alg = std::make_shared<const MilnorAlgebra<GaloisRing>>(milnor_algebra(lift));
  const auto g = gram_matrix(alg, lift, parse_elem(o.scale, gr));
  r["mu"] = alg->mu();
  r["basis"] = basis_json(g.basis, o.vars);
  if (with_matrix) r["gram"] = matrix_json(gr, g.matrix);
  r["disc"] = elem_json(gr, discriminant(g));
  r["disc_class"] = witt_class_json(gr, disc_square_class(g));
  const long long nmu = static_cast<long long>(f.n_vars()) * alg->mu();
  r["arf"] = nmu % 2 ? json(nullptr) : arf_json(arf_invariant(f, pert));
  return r;
}

inline json run_gram(const Options& o) { return gram_common(o, true); }

inline json run_disc(const Options& o) { return gram_common(o, false); }

inline json run_arf(const Options& o) {
  const Field k = make_field(o);
  const auto f = make_poly(o, k);
  require(k.p() == 2, ErrorCode::kOddCharacteristic, "arf needs --p 2");
  const GaloisRing gr = GaloisRing::create(k);
  const auto rep = arf_invariant(f, make_perturbation(o, gr));
  json r = base_report(o);
  r["input"] = poly_input(o, k);
  r["input"]["lift_perturbation"] = o.lift_perturbation;
  r["mu"] = rep.mu;
  r["N"] = rep.n_sign;
  r["disc"] = elem_json(gr, rep.disc);
  r["disc_class"] = witt_class_json(gr, disc_square_class(rep.gram));
  r["arf"] = arf_json(rep);
  return r;
}

inline json geometric_json(const GeometricSide& g) {
  const Field& k = g.value.field;
  json out{{"value", epsilon_json(g.value)}, {"mu", g.mu}, {"dimtot", g.dimtot},
           {"convention_exponent", g.convention_exponent}};
  out["disc_class"] = g.disc ? square_class_json(k, *g.disc) : json(nullptr);
  out["arf"] = g.arf ? arf_json(*g.arf) : json(nullptr);
  return out;
}

inline json arithmetic_json(const ArithmeticSide& a, const std::vector<std::string>& names) {
  const Field& k = a.value.field;
  json blocks = json::array();
  for (const auto& b : a.blocks) {
    json vars = json::array();
    for (int v : b.vars) vars.push_back(names[v]);
    const auto e0 = block_epsilon0(b, k, a.value.twist);
    blocks.push_back({{"kind", block_kind_name(b.kind)},
                      {"coefficient", elem_json(k, b.coefficient)},
                      {"vars", vars},
                      {"dimtot", b.dimtot},
                      {"epsilon0", epsilon_json(e0)}});
  }
  return {{"value", epsilon_json(a.value)}, {"dimtot", a.dimtot}, {"blocks", blocks}};
}

inline json run_epsilon(const Options& o) {
  const Field k = make_field(o);
  const auto f = make_poly(o, k);
  const auto geo = geometric_side(f, o.convention);
  json r = base_report(o);
  r["input"] = poly_input(o, k);
  r["mu"] = geo.mu;
  r["dimtot"] = geo.dimtot;
  r["geometric"] = geometric_json(geo);
  try {
    r["arithmetic"] = arithmetic_json(arithmetic_side(f, 1, geo.mu), o.vars);
    r["catalog_miss"] = nullptr;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kCatalogMiss) throw;
    r["arithmetic"] = nullptr;
    r["catalog_miss"] = e.detail();
  }
  if (k.p() != 2) {
    const auto tau = gauss_sum(k);
    const auto sq = tau * tau;
    r["gauss_sum"] = {{"tau", tau.coeffs()}, {"tau_squared", sq.coeffs()[0]}};
  } else {
    r["gauss_sum"] = nullptr;
  }
  return r;
}

inline json run_verify(const Options& o) {
  const Field k = make_field(o);
  const auto f = make_poly(o, k);
  const auto rep = verify_identity(f, o.convention);
  json r = base_report(o);
  r["input"] = poly_input(o, k);
  r["mu"] = rep.geometric.mu;
  r["dimtot"] = rep.geometric.dimtot;
  r["geometric"] = geometric_json(rep.geometric);
  r["arithmetic"] = rep.arithmetic ? arithmetic_json(*rep.arithmetic, o.vars) : json(nullptr);
  r["catalog_miss"] = rep.catalog_miss.empty() ? json(nullptr) : json(rep.catalog_miss);
  r["psi_twists_checked"] = rep.psi_twists_checked;
  r["failed_twists"] = rep.failed_twists;
  r["verdict"] = verdict_name(rep.verdict);
  return r;
}

inline std::vector<long long> parse_integers(const std::vector<std::string>& items, const char* flag) {
  std::vector<long long> out;
  for (const auto& s : items) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    require(used == s.size() && !s.empty(), ErrorCode::kInvalidArgument,
            std::string(flag) + " expects integers, got '" + s + "'");
    out.push_back(v);
  }
  return out;
}

inline json optional_integer(const std::function<std::int64_t()>& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kOverflow) throw;
    return nullptr;
  }
}

inline json run_fermat(const Options& o) {
  const auto ff = fermat_formulas(o.d, o.n);
  const auto a = parse_integers(o.a, "--a");
  require(static_cast<int>(a.size()) == o.n + 2, ErrorCode::kInvalidArgument,
          "--a needs n + 2 = " + std::to_string(o.n + 2) + " coefficients");
  const IntegerRing zz;
  const std::vector<std::int64_t> az(a.begin(), a.end());
  json r = base_report(o);
  r["input"] = {{"d", o.d}, {"n", o.n}, {"a", a}};
  r["a_exponent"] = a_exponent(o.n, o.d);
  r["mu"] = ff.mu;
  r["disc_d"] = {{"d_exp", ff.disc_d_d_exp},
                 {"a_exp", ff.disc_d_a_exp},
                 {"value", optional_integer([&] { return fermat_disc_d(zz, ff, az); })}};
  r["disc_b"] = {{"sign_exp", ff.disc_b_sign_exp},
                 {"d_exp", ff.disc_b_d_exp},
                 {"a_exp", ff.disc_b_a_exp},
                 {"value", optional_integer([&] { return fermat_disc_b(zz, ff, az); })}};
  if (o.n == 0) {
    // The binary case against the Sylvester computation.
    std::vector<std::int64_t> c(o.d + 1, 0);
    c.front() = a[0];
    c.back() = a[1];
    const auto bin = optional_integer([&] { return divided_disc_binary(make_binary_form(zz, c)); });
    r["sylvester_disc_d"] = bin;
    if (!bin.is_null() && !r["disc_d"]["value"].is_null()) r["sylvester_agrees"] = bin == r["disc_d"]["value"];
  }
  if (o.p == 0) {
    r["field"] = nullptr;
    return r;
  }
  // Engine cross-check over F_q on sum a_i x_i^d.
  const Field k = make_field(o);
  require(k.p() != 2 && o.d % k.p() != 0, ErrorCode::kInvalidArgument, "the engine check needs p not dividing 2d");
  const int vars = o.n + 2;
  MultiPoly<Field> f(k, vars);
  std::vector<FieldElem> ak;
  for (int i = 0; i < vars; ++i) {
    ak.push_back(k.from_int(a[i]));
    require(!k.is_zero(ak.back()), ErrorCode::kZeroCoefficient, "Fermat coefficients must be units in the field");
    Exponent e(vars, 0);
    e[i] = o.d;
    f.add_term(e, ak.back());
  }
  const auto g = gram_matrix(f, k.one());
  const auto engine = disc_square_class(g);
  const FieldElem closed = fermat_disc_b(k, ff, ak);
  r["field"] = field_json(k);
  r["engine"] = {{"mu", static_cast<int>(g.basis.size())}, {"disc_class", square_class_json(k, engine)}};
  r["closed_form_class"] = {{"legendre", legendre(k, closed)}, {"representative", elem_json(k, closed)}};
  const bool ok = engine.legendre == legendre(k, closed) && static_cast<long long>(g.basis.size()) == ff.mu;
  r["verdict"] = ok ? "PASS" : "FAIL";
  return r;
}

inline json run_homog2(const Options& o) {
  const Field k = make_field(o);
  require(o.coeffs.size() >= 2, ErrorCode::kInvalidArgument, "--coeffs needs at least two entries");
  std::vector<FieldElem> c;
  for (const auto& s : o.coeffs) c.push_back(parse_elem(s, k));
  const auto f = make_binary_form(k, c);
  const int d = f.degree();
  json r = base_report(o);
  r["input"] = {{"field", field_json(k)}, {"coeffs", o.coeffs}};
  r["degree"] = d;
  r["a_exponent"] = a_exponent(0, d);
  r["disc_d"] = elem_json(k, divided_disc_binary(f));
  r["resultant"] = elem_json(k, binary_resultant_of_partials(f));
  if (k.p() == 2) {
    const auto rep = verify_homog_char2(f);
    r["mu"] = rep.mu;
    r["arf"] = {{"value", elem_json(k, rep.arf.value)}, {"trace_bit", rep.arf.trace_bit}};
    r["frobenius_sign"] = rep.frobenius_sign;
    r["epsilon_sign"] = rep.epsilon_sign;
    r["verdict"] = rep.pass ? "PASS" : "FAIL";
    return r;
  }
  const auto predicted = predicted_binary_disc_class(f);
  const auto g = gram_matrix(binary_form_poly(f), k.one());
  const auto engine = disc_square_class(g);
  r["mu"] = static_cast<int>(g.basis.size());
  r["predicted_class"] = square_class_json(k, predicted);
  r["engine_class"] = square_class_json(k, engine);
  r["verdict"] = predicted.legendre == engine.legendre ? "PASS" : "FAIL";
  return r;
}

// --- corpus -----------------------------------------------------------------

inline Options options_from_json(const std::string& command, const json& flags) {
  Options o;
  o.command = command;
  for (const auto& [key, v] : flags.items()) {
    if (key == "p") o.p = v.get<int>();
    else if (key == "m") o.m = v.get<int>();
    else if (key == "modulus") o.modulus = v.get<std::vector<int>>();
    else if (key == "vars") o.vars = v.get<std::vector<std::string>>();
    else if (key == "poly") o.poly = v.get<std::string>();
    else if (key == "scale") o.scale = v.get<std::string>();
    else if (key == "lift_perturbation") o.lift_perturbation = v.get<std::string>();
    else if (key == "convention") o.convention = parse_convention(v.get<std::string>());
    else if (key == "seed") o.seed = v.get<std::uint64_t>();
    else if (key == "d") o.d = v.get<int>();
    else if (key == "n") o.n = v.get<int>();
    else if (key == "a") o.a = v.get<std::vector<std::string>>();
    else if (key == "coeffs") o.coeffs = v.get<std::vector<std::string>>();
    else fail(ErrorCode::kInvalidArgument, "unknown corpus flag '" + key + "'");
  }
  return o;
}

json run_command(const Options& o);

inline json error_json(const Options& o, ErrorCode code, const std::string& detail) {
  json r = base_report(o);
  r["error"] = {{"code", std::string(error_name(code))}, {"detail", detail}};
  return r;
}

// Runs a command, turning library errors into error records.
inline json run_guarded(const Options& o) {
  try {
    return run_command(o);
  } catch (const Error& e) {
    return error_json(o, e.code(), e.detail());
  } catch (const json::exception& e) {
    return error_json(o, ErrorCode::kInvalidArgument, e.what());
  }
}

inline json run_case(const json& c) {
  const std::string id = c.at("id").get<std::string>();
  json out{{"id", id}, {"command", c.at("command")}, {"mismatches", json::array()}};
  json rep;
  try {
    rep = run_guarded(options_from_json(c.at("command").get<std::string>(), c.value("flags", json::object())));
  } catch (const std::exception& e) {
    out["mismatches"].push_back({{"pointer", ""}, {"expected", "a report"}, {"actual", e.what()}});
    out["verdict"] = "FAIL";
    return out;
  }
  const json expect = c.value("expect", json::object());
  for (const auto& [ptr, want] : expect.items()) {
    const json::json_pointer jp(ptr);
    const json got = rep.contains(jp) ? rep.at(jp) : json("<missing>");
    if (got != want) out["mismatches"].push_back({{"pointer", ptr}, {"expected", want}, {"actual", got}});
  }
  out["verdict"] = out["mismatches"].empty() ? "PASS" : "FAIL";
  return out;
}

#ifndef RESFORM_CORPUS_PATH
#define RESFORM_CORPUS_PATH "corpus/examples.json"
#endif

inline json run_corpus(const Options& o) {
  const std::string path = o.corpus.empty() ? RESFORM_CORPUS_PATH : o.corpus;
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorCode::kInvalidArgument, "cannot open corpus file " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    fail(ErrorCode::kSyntaxError, path + ": " + e.what());
  }
  const json& cases = doc.at("cases");
  std::vector<std::future<json>> jobs;
  for (const auto& c : cases) jobs.push_back(std::async(std::launch::async, [&c] { return run_case(c); }));
  json r = base_report(o);
  r["input"] = {{"corpus", path}, {"seed", o.seed}, {"acceptance", o.acceptance}};
  r["cases"] = json::array();
  bool ok = true;
  for (auto& j : jobs) {
    json res = j.get();
    ok = ok && res["verdict"] == "PASS";
    r["cases"].push_back(std::move(res));
  }
  r["acceptance"] = json::array();
  if (o.acceptance) {
    for (const auto& a : acceptance::run_all(o.seed)) {
      ok = ok && a.pass;
      r["acceptance"].push_back(
          {{"id", a.id}, {"title", a.title}, {"verdict", a.pass ? "PASS" : "FAIL"}, {"cases", a.cases}, {"detail", a.detail}});
    }
  }
  r["verdict"] = ok ? "PASS" : "FAIL";
  return r;
}

inline json run_command(const Options& o) {
  if (o.command == "milnor") return run_milnor(o);
  if (o.command == "gram") return run_gram(o);
  if (o.command == "disc") return run_disc(o);
  if (o.command == "arf") return run_arf(o);
  if (o.command == "epsilon") return run_epsilon(o);
  if (o.command == "verify") return run_verify(o);
  if (o.command == "fermat") return run_fermat(o);
  if (o.command == "homog2") return run_homog2(o);
  if (o.command == "corpus") return run_corpus(o);
  fail(ErrorCode::kInvalidArgument, "unknown command '" + o.command + "'");
}

// 0 when nothing failed, 1 on a FAIL verdict or an internal error, 2 on bad
// input.
inline int exit_code(const json& r) {
  if (r.contains("error")) return r["error"]["code"] == "Internal" ? 1 : 2;
  if (r.contains("verdict") && r["verdict"] == "FAIL") return 1;
  return 0;
}

}  // namespace resform::cli

#endif  // RESFORM_TOOLS_REPORT_HPP_
