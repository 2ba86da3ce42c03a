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

// resform: command-line driver. See README.md for the subcommands.

#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "report.hpp"

namespace {

using resform::cli::json;

std::string elem_text(const json& e) {
  if (e.is_null()) return "-";
  if (e.size() == 1) return e[0].dump();
  std::string s = "[";
  for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + e[i].dump();
  return s + "]";
}

std::string eps_text(const json& v) {
  std::string s = v["text"].get<std::string>();
  if (v["value"].is_string()) s += " = " + v["value"].get<std::string>();
  return s;
}

std::string join(const json& list) {
  std::string s;
  for (std::size_t i = 0; i < list.size(); ++i) s += (i ? ", " : "") + list[i].get<std::string>();
  return s;
}

void print_disc_class(std::ostream& os, const json& c) {
  if (c.contains("legendre")) {
    os << "disc class: " << (c["legendre"].get<int>() > 0 ? "square" : "non-square") << " ("
       << elem_text(c["representative"]) << ")\n";
  } else {
    os << "disc class over W_3: a = " << elem_text(c["a_part"]) << ", Tr b = " << c["b_trace"] << " ("
       << elem_text(c["representative"]) << ")\n";
  }
}

void print_sides(std::ostream& os, const json& r) {
  os << "geometric: " << eps_text(r["geometric"]["value"]) << '\n';
  if (r["arithmetic"].is_null()) {
    os << "arithmetic: catalog miss (" << r["catalog_miss"].get<std::string>() << ")\n";
    return;
  }
  os << "arithmetic: " << eps_text(r["arithmetic"]["value"]) << '\n';
  for (const auto& b : r["arithmetic"]["blocks"])
    os << "  block " << b["kind"].get<std::string>() << " in " << join(b["vars"]) << ", a = " << elem_text(b["coefficient"])
       << ", eps0 = " << eps_text(b["epsilon0"]) << '\n';
}

void print_text(std::ostream& os, const json& r) {
  const std::string cmd = r["command"];
  if (r.contains("error")) {
    os << "error " << r["error"]["code"].get<std::string>() << ": " << r["error"]["detail"].get<std::string>() << '\n';
    return;
  }
  os << cmd << " [convention " << r["convention"].get<std::string>() << "]\n";
  if (cmd == "milnor") {
    os << "mu = " << r["mu"] << ", D = " << r["D"] << ", dimtot = " << r["dimtot"] << '\n';
    os << "basis: " << join(r["basis"]) << '\n';
  } else if (cmd == "gram" || cmd == "disc") {
    os << "mu = " << r["mu"] << ", basis: " << join(r["basis"]) << '\n';
    if (r.contains("gram"))
      for (const auto& row : r["gram"]) {
        os << " ";
        for (const auto& x : row) os << ' ' << elem_text(x);
        os << '\n';
      }
    os << "disc = " << elem_text(r["disc"]) << '\n';
    print_disc_class(os, r["disc_class"]);
    if (!r["arf"].is_null()) os << "Arf = " << elem_text(r["arf"]["value"]) << ", trace bit " << r["arf"]["trace_bit"] << '\n';
  } else if (cmd == "arf") {
    os << "mu = " << r["mu"] << ", N = " << r["N"] << ", disc = " << elem_text(r["disc"]) << '\n';
    os << "Arf = " << elem_text(r["arf"]["value"]) << ", trace bit " << r["arf"]["trace_bit"] << '\n';
  } else if (cmd == "epsilon") {
    os << "mu = " << r["mu"] << ", dimtot = " << r["dimtot"] << '\n';
    print_sides(os, r);
    if (!r["gauss_sum"].is_null()) os << "tau^2 = " << r["gauss_sum"]["tau_squared"] << '\n';
  } else if (cmd == "verify") {
    os << "mu = " << r["mu"] << ", dimtot = " << r["dimtot"] << ", twists checked " << r["psi_twists_checked"] << '\n';
    print_sides(os, r);
  } else if (cmd == "fermat") {
    auto val = [](const json& v) { return v.is_null() ? std::string("(overflows 64 bits)") : v.dump(); };
    os << "a(n,d) = " << r["a_exponent"] << ", mu = " << r["mu"] << '\n';
    os << "disc_d = " << val(r["disc_d"]["value"]) << " = d^" << r["disc_d"]["d_exp"] << " prod a_i^" << r["disc_d"]["a_exp"]
       << '\n';
    os << "disc_B = " << val(r["disc_b"]["value"]) << " = (-1)^" << r["disc_b"]["sign_exp"] << " d^" << r["disc_b"]["d_exp"]
       << " prod a_i^" << r["disc_b"]["a_exp"] << '\n';
    if (r.contains("sylvester_disc_d")) os << "Sylvester disc_d = " << val(r["sylvester_disc_d"]) << '\n';
    if (!r["field"].is_null()) {
      os << "engine mu = " << r["engine"]["mu"] << ", ";
      print_disc_class(os, r["engine"]["disc_class"]);
    }
  } else if (cmd == "homog2") {
    os << "degree " << r["degree"] << ", disc_d = " << elem_text(r["disc_d"]) << ", Res(F_0, F_1) = "
       << elem_text(r["resultant"]) << ", mu = " << r["mu"] << '\n';
    if (r.contains("arf")) {
      os << "Arf trace bit " << r["arf"]["trace_bit"] << ", Frobenius sign " << r["frobenius_sign"] << ", epsilon sign "
         << r["epsilon_sign"] << '\n';
    } else {
      os << "predicted: ";
      print_disc_class(os, r["predicted_class"]);
      os << "engine: ";
      print_disc_class(os, r["engine_class"]);
    }
  } else if (cmd == "corpus") {
    for (const auto& c : r["cases"]) {
      os << c["verdict"].get<std::string>() << "  " << c["id"].get<std::string>() << '\n';
      for (const auto& mm : c["mismatches"])
        os << "    " << mm["pointer"].get<std::string>() << ": expected " << mm["expected"].dump() << ", got "
           << mm["actual"].dump() << '\n';
    }
    for (const auto& a : r["acceptance"])
      os << a["verdict"].get<std::string>() << "  " << a["id"].get<std::string>() << ' ' << a["title"].get<std::string>()
         << " (" << a["detail"].get<std::string>() << ")\n";
  }
  if (r.contains("verdict")) os << "verdict: " << r["verdict"].get<std::string>() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  using namespace resform::cli;
  CLI::App app{"resform: residue forms, Arf invariants and epsilon factors over finite fields"};
  app.require_subcommand(1, 1);

  Options o;
  std::string convention = "calibrated";
  std::string modulus, a_list, coeff_list;
  bool as_json = false;
  bool no_acceptance = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--p", o.p, "characteristic");
    sub->add_option("--m", o.m, "extension degree");
    sub->add_option("--modulus", modulus, "modulus coefficients, little-endian, comma separated");
    sub->add_option("--vars", o.vars, "variable names, comma separated")->delimiter(',');
    sub->add_option("--poly", o.poly, "polynomial text");
    sub->add_option("--scale", o.scale, "unit alpha of the differential alpha*dt");
    sub->add_option("--lift-perturbation", o.lift_perturbation, "g in the lift [f] + 2g (W_3 text, or 'random')");
    sub->add_option("--convention", convention, "calibrated or literal")->check(CLI::IsMember({"calibrated", "literal"}));
    sub->add_option("--seed", o.seed, "seed for randomized steps");
    sub->add_flag("--json", as_json, "print the JSON report");
    sub->add_option("--d", o.d, "degree of the form");
    sub->add_option("--n", o.n, "dimension n; the form has n + 2 variables");
    sub->add_option("--a", a_list, "Fermat coefficients a_0,...,a_{n+1}");
    sub->add_option("--coeffs", coeff_list, "binary form coefficients, highest T0 power first");
  };
  const std::map<std::string, std::string> help{
      {"milnor", "Milnor algebra: mu, monomial basis, truncation degree"},
      {"gram", "Gram matrix of the residue form and its discriminant"},
      {"disc", "discriminant square class of the residue form"},
      {"arf", "Arf invariant in characteristic 2"},
      {"epsilon", "both sides of the epsilon-factor identity"},
      {"verify", "check the epsilon-factor identity for every character twist"},
      {"fermat", "closed forms for diagonal forms sum a_i T_i^d"},
      {"homog2", "binary-form discriminants and the characteristic-2 check"},
      {"corpus", "run the shipped example corpus and the acceptance suite"}};
  for (const auto& name : command_names()) {
    auto* sub = app.add_subcommand(name, help.at(name));
    add_common(sub);
    if (name == "corpus") {
      sub->add_option("--corpus", o.corpus, "corpus file");
      sub->add_flag("--no-acceptance", no_acceptance, "skip the acceptance suite");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  o.command = app.get_subcommands().front()->get_name();
  o.acceptance = !no_acceptance;

  json report;
  try {
    o.convention = parse_convention(convention);
    if (!modulus.empty()) {
      const auto mod = parse_integers(split_top_level(modulus), "--modulus");
      o.modulus = std::vector<int>(mod.begin(), mod.end());
    }
    if (!a_list.empty()) o.a = split_top_level(a_list);
    if (!coeff_list.empty()) o.coeffs = split_top_level(coeff_list);
    report = run_guarded(o);
  } catch (const resform::Error& e) {
    report = error_json(o, e.code(), e.detail());
  }
  if (as_json) {
    std::cout << report.dump(2) << '\n';
  } else {
    print_text(report.contains("error") ? std::cerr : std::cout, report);
  }
  return exit_code(report);
}
