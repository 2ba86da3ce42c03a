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

// The acceptance criteria, shared by the acceptance test binary and the
// corpus subcommand of the CLI.

#ifndef RESFORM_TESTS_SUPPORT_ACCEPTANCE_HPP_
#define RESFORM_TESTS_SUPPORT_ACCEPTANCE_HPP_

#include <chrono>
#include <cstdint>
#include <functional>
#include <future>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "resform/epsilon.hpp"
#include "resform/homog.hpp"
#include "resform/milnor.hpp"
#include "resform/residue.hpp"
#include "support/oracles.hpp"

namespace resform::acceptance {

struct CriterionResult {
  std::string id;
  std::string title;
  bool pass = false;
  int cases = 0;
  std::string detail;  // first mismatch, or a summary
  double seconds = 0;
  double budget = 0;
};

namespace detail {

using Rng = std::mt19937_64;

inline FieldElem random_elem(const Field& k, Rng& rng) { return {static_cast<std::uint32_t>(rng() % k.q())}; }

inline FieldElem random_unit(const Field& k, Rng& rng) {
  return {static_cast<std::uint32_t>(1 + rng() % (k.q() - 1))};
}

inline MultiPoly<Field> diagonal_quadric(const Field& k, const std::vector<FieldElem>& a) {
  const int n = static_cast<int>(a.size());
  MultiPoly<Field> f(k, n);
  for (int i = 0; i < n; ++i) {
    Exponent e(n, 0);
    e[i] = 2;
    f.add_term(e, a[i]);
  }
  return f;
}

// A univariate polynomial c_2 x^2 + ... + c_deg x^deg with c_deg != 0.
inline MultiPoly<Field> random_univariate(const Field& k, int deg, Rng& rng, int low) {
  MultiPoly<Field> f(k, 1);
  for (int e = low; e < deg; ++e) f.add_term({e}, random_elem(k, rng));
  f.add_term({deg}, random_unit(k, rng));
  return f;
}

inline std::vector<int> odd_prime_powers_up_to(int bound) {
  std::vector<int> out;
  for (int q = 3; q <= bound; ++q) {
    const auto f = prime_factors(q);
    if (f.size() == 1 && f[0] != 2) out.push_back(q);
  }
  return out;
}

inline Field field_of_order(int q) {
  const int p = static_cast<int>(prime_factors(q)[0]);
  int m = 0;
  for (int v = q; v > 1; v /= p) ++m;
  return Field::create(p, m);
}

// Collects the outcome of many cases; keeps the first failure message.
class Tally {
 public:
  void check(bool ok, const std::function<std::string()>& what) {
    ++cases_;
    if (ok || !first_.empty()) {
      if (!ok) ++failures_;
      return;
    }
    ++failures_;
    first_ = what();
  }
  int cases() const { return cases_; }
  bool ok() const { return failures_ == 0; }
  std::string summary() const {
    if (ok()) return std::to_string(cases_) + " cases";
    return std::to_string(failures_) + "/" + std::to_string(cases_) + " failed; first: " + first_;
  }

 private:
  int cases_ = 0;
  int failures_ = 0;
  std::string first_;
};

inline std::string str(const Field& k, FieldElem a) { return k.to_string(a); }

}  // namespace detail

using detail::Rng;
using detail::Tally;

inline Tally a1_gauss_sums(Rng&) {
  Tally t;
  for (int p : {3, 5, 7, 11, 13})
    for (int m = 1; m <= 3; ++m) {
      const Field k = Field::create(p, m);
      const auto expect = CycloInt::from_int(p, minus_one_character(k) * static_cast<std::int64_t>(k.q()));
      for (int c = 1; c < p; ++c) {
        const auto tau = gauss_sum(k, c);
        t.check(tau * tau == expect, [&] { return k.describe() + " twist " + std::to_string(c); });
      }
    }
  return t;
}

inline Tally a2_quadratic_base_case(Rng& rng) {
  Tally t;
  for (int q : detail::odd_prime_powers_up_to(49)) {
    const Field k = detail::field_of_order(q);
    for (int n = 1; n <= 4; ++n)
      for (int rep = 0; rep < 3; ++rep) {
        std::vector<FieldElem> a;
        for (int i = 0; i < n; ++i) a.push_back(detail::random_unit(k, rng));
        const auto f = detail::diagonal_quadric(k, a);
        const auto alg = milnor_algebra(f);
        const bool mu_ok = alg.mu() == 1;
        const auto lambda = residue_functional(alg, f);
        t.check(mu_ok && lambda.size() == 1 && lambda[0] == oracle::diagonal_lambda(k, a),
                [&] { return render(f, default_var_names(n)) + " over " + k.describe(); });
      }
  }
  return t;
}

inline Tally a3_main_theorem_odd(Rng& rng) {
  Tally t;
  const int e = calibrate();
  t.check(e == 1, [&] { return "calibrate() returned " + std::to_string(e); });
  const std::vector<std::pair<int, int>> fields{{3, 1}, {5, 1}, {7, 1}, {11, 1}, {13, 1},
                                                {3, 2}, {5, 2}, {7, 2}, {11, 2}, {13, 2}};
  for (int i = 0; i < 200; ++i) {
    const auto [p, m] = fields[i % fields.size()];
    const Field k = Field::create(p, m);
    const int n = 1 + static_cast<int>(rng() % 4);
    std::vector<FieldElem> a;
    for (int j = 0; j < n; ++j) a.push_back(detail::random_unit(k, rng));
    const auto f = detail::diagonal_quadric(k, a);
    const auto rep = verify_identity(f);
    t.check(rep.verdict == Verdict::kPass && rep.psi_twists_checked == p - 1, [&] {
      return render(f, default_var_names(n)) + " over " + k.describe() + ": " + verdict_name(rep.verdict);
    });
  }
  return t;
}

inline Tally a4_fermat(Rng& rng) {
  Tally t;
  for (int q : detail::odd_prime_powers_up_to(25)) {
    const Field k = detail::field_of_order(q);
    for (int d = 3; d <= 5; ++d) {
      if ((2 * d) % k.p() == 0) continue;
      for (int vars = 1; vars <= 3; ++vars) {
        const auto ff = fermat_formulas(d, vars - 2);
        std::vector<FieldElem> a;
        MultiPoly<Field> f(k, vars);
        for (int i = 0; i < vars; ++i) {
          a.push_back(detail::random_unit(k, rng));
          Exponent ex(vars, 0);
          ex[i] = d;
          f.add_term(ex, a.back());
        }
        const auto g = gram_matrix(f, k.one());
        const bool mu_ok = static_cast<long long>(g.basis.size()) == ff.mu &&
                           ff.mu == checked_pow(d - 1, static_cast<unsigned>(vars));
        const int engine = disc_square_class(g).legendre;
        const int closed = legendre(k, fermat_disc_b(k, ff, a));
        t.check(mu_ok && engine == closed, [&] {
          return render(f, default_var_names(vars)) + " over " + k.describe() + ": engine " + std::to_string(engine) +
                 " closed form " + std::to_string(closed);
        });
      }
    }
  }
  return t;
}

inline Tally a5_char2_ordinary(Rng&) {
  Tally t;
  for (int m = 1; m <= 4; ++m) {
    const Field k = Field::create(2, m);
    for (FieldElem a : k.elements()) {
      MultiPoly<Field> f(k, 2);
      f.add_term({2, 0}, k.one());
      f.add_term({1, 1}, k.one());
      f.add_term({0, 2}, a);
      const auto arf = arf_invariant(f);
      // same class in k / wp(k) as a
      const bool cls = k.trace_int(k.add(arf.arf.value, a)) == 0 && arf.arf.trace_bit == k.trace_int(a);
      const auto rep = verify_identity(f);
      t.check(cls && rep.verdict == Verdict::kPass,
              [&] { return "a = " + detail::str(k, a) + " over " + k.describe(); });
    }
  }
  return t;
}

inline Tally a6_char2_wild(Rng&) {
  Tally t;
  for (int m = 1; m <= 3; ++m) {
    const Field k = Field::create(2, m);
    const GaloisRing gr = GaloisRing::create(k);
    const auto f = parse_poly("u^2 + u^3", k, {"u"});
    const auto arf = arf_invariant(f);
    const auto disc = disc_square_class(arf.gram, 0);
    const bool minus_one = disc.cls == square_class_normalize(gr, gr.from_int(-1));
    const auto rep = verify_identity(f);
    bool eps_q = false;
    if (rep.arithmetic) {
      const auto& b = rep.arithmetic->blocks;
      const auto e0 = b.size() == 1 ? block_epsilon0(b[0], k, 1) : eps_make(k, 0, 0, 0);
      eps_q = e0.sign == 1 && e0.q_exp == 1;
    }
    t.check(minus_one && arf.arf.trace_bit == 0 && rep.verdict == Verdict::kPass && eps_q,
            [&] { return "u^2 + u^3 over " + k.describe(); });
  }
  return t;
}

inline MultiPoly<GaloisRing> random_perturbation(const GaloisRing& gr, int n, Rng& rng) {
  MultiPoly<GaloisRing> g(gr, n);
  for (int s = 0; s < 4; ++s) {
    GaloisElem c{};
    for (int i = 0; i < gr.m(); ++i) c.c[i] = static_cast<std::uint8_t>(rng() % 8);
    Exponent e(n);
    for (int i = 0; i < n; ++i) e[i] = static_cast<int>(rng() % 4);
    g.add_term(e, c);
  }
  return g;
}

inline Tally a7_lift_independence(Rng& rng) {
  Tally t;
  for (int m : {1, 2}) {
    const Field k = Field::create(2, m);
    const GaloisRing gr = GaloisRing::create(k);
    int accepted = 0;
    for (int attempt = 0; accepted < 10 && attempt < 2000; ++attempt) {
      const int n = 1 + static_cast<int>(rng() % 2);
      MultiPoly<Field> f(k, n);
      if (n == 1) {
        f = detail::random_univariate(k, 3 + static_cast<int>(rng() % 6), rng, 2);
      } else {
        for (int s = 0; s < 5; ++s) {
          const int i = static_cast<int>(rng() % 5);
          const int j = 2 + static_cast<int>(rng() % 3) - i;
          if (j < 0) continue;
          f.add_term({i, j}, detail::random_elem(k, rng));
        }
      }
      int mu = 0;
      try {
        mu = milnor_algebra(f, 8).mu();
      } catch (const Error& e) {
        if (e.code() == ErrorCode::kNotIsolated || e.code() == ErrorCode::kInvalidArgument) continue;
        throw;
      }
      if (mu > 8 || (n * mu) % 2 != 0 || mu == 0) continue;
      ++accepted;
      const auto base = arf_invariant(f).arf;
      bool same = true;
      for (int r = 0; r < 2; ++r) same = same && arf_invariant(f, random_perturbation(gr, n, rng)).arf.trace_bit == base.trace_bit;
      t.check(same, [&] { return render(f, default_var_names(n)) + " over " + k.describe(); });
    }
    t.check(accepted == 10, [&] { return "only " + std::to_string(accepted) + " inputs over " + k.describe(); });
  }
  return t;
}

inline Tally a8_parity_and_triviality(Rng&) {
  Tally t;
  const std::vector<std::string> one{"u"}, three{"x", "y", "z"};
  for (int m = 1; m <= 3; ++m) {
    const Field k = Field::create(2, m);
    for (const char* text : {"u^2 + u^3", "u^3", "u^5", "u^2 + u^5", "u^4 + u^5 + u^7", "u^6 + u^7"}) {
      const auto f = parse_poly(text, k, one);
      const int mu = milnor_algebra(f).mu();
      t.check(mu % 2 == 0, [&] { return std::string(text) + " has odd mu"; });
    }
    for (const char* text : {"x*y + z^2 + z^3", "x^2 + x*y + y^2 + z^3", "x*y + z^3 + x^3", "x^3 + y^3 + z^3",
                             "x^2 + y*z + x^3 + y^3 + z^3"}) {
      const auto f = parse_poly(text, k, three);
      const int mu = milnor_algebra(f).mu();
      t.check(mu % 2 == 0, [&] { return std::string(text) + " has odd mu over " + k.describe(); });
    }
    for (int kk = 0; kk <= 3; ++kk) {
      MultiPoly<Field> f(k, 1);
      f.add_term({2 * kk + 1}, k.one());
      const auto arf = arf_invariant(f);
      t.check(arf.arf.trace_bit == 0, [&] { return "u^" + std::to_string(2 * kk + 1) + " over " + k.describe(); });
    }
  }
  return t;
}

inline Tally a9_convolution(Rng& rng) {
  Tally t;
  const std::vector<int> primes{3, 5, 7, 11};
  int done = 0;
  while (done < 30) {
    const Field k = Field::create(primes[done % primes.size()], 1);
    const int d1 = 2 + static_cast<int>(rng() % 4), d2 = 2 + static_cast<int>(rng() % 4);
    if (d1 % k.p() == 0 || d2 % k.p() == 0) continue;
    const auto f = detail::random_univariate(k, d1, rng, d1);
    const auto g = detail::random_univariate(k, d2, rng, 2);
    MultiPoly<Field> sum(k, 2);
    for (const auto& [e, c] : f.terms()) sum.add_term({e[0], 0}, c);
    for (const auto& [e, c] : g.terms()) sum.add_term({0, e[0]}, c);
    GramForm<Field> gf = gram_matrix(f, k.one()), gg = gram_matrix(g, k.one());
    if (gf.basis.size() > 4 || gg.basis.size() > 4) continue;
    ++done;
    const auto direct = gram_matrix(sum, k.one());
    const auto prod = tensor_gram(gf, gg);
    t.check(direct.basis == prod.basis && direct.matrix == prod.matrix,
            [&] { return render(sum, {"x", "y"}) + " over " + k.describe(); });
  }
  return t;
}

inline Tally a10_residue_oracle(Rng& rng) {
  Tally t;
  const std::vector<int> qs{3, 5, 7, 9, 11, 13, 17, 19, 23, 25};
  int done = 0;
  for (int attempt = 0; done < 50 && attempt < 5000; ++attempt) {
    const Field k = detail::field_of_order(qs[attempt % qs.size()]);
    const int deg = 3 + static_cast<int>(rng() % 2);
    if (deg % k.p() == 0) continue;
    if (static_cast<long long>(k.q()) * k.q() * k.q() > 20000 && deg == 4) continue;
    const auto f = detail::random_univariate(k, deg, rng, 0);
    UPoly d1 = oracle::derivative(k, oracle::coefficients(f));
    upoly::trim(d1);
    if (upoly::deg(upoly::gcd(k, d1, upoly::derivative(k, d1))) > 0) continue;
    const auto g = detail::random_univariate(k, 1 + static_cast<int>(rng() % 4), rng, 0);
    const auto alg = milnor_algebra_global(f);
    const auto lambda = residue_functional(alg, f);
    const FieldElem engine = apply_functional(k, lambda, alg.normal_form(g));
    const FieldElem roots = oracle::root_sum_residue(f, g);
    ++done;
    t.check(engine == roots, [&] {
      return "f = " + render(f, {"x"}) + ", g = " + render(g, {"x"}) + " over " + k.describe() + ": " +
             k.to_string(engine) + " vs " + k.to_string(roots);
    });
  }
  t.check(done == 50, [&] { return "only " + std::to_string(done) + " separable cases"; });
  return t;
}

inline Tally a11_trace_pushforward(Rng& rng) {
  Tally t;
  for (int q : {3, 5, 9})
    for (int r : {2, 3}) {
      const Field k = detail::field_of_order(q);
      const FieldExtension ext(k, r);
      const Field& l = ext.extension();
      int done = 0;
      while (done < 8) {
        const int rank = 1 + static_cast<int>(rng() % 3);
        Matrix<FieldElem> b(rank, std::vector<FieldElem>(rank));
        for (int i = 0; i < rank; ++i)
          for (int j = i; j < rank; ++j) b[i][j] = b[j][i] = detail::random_elem(l, rng);
        const FieldElem d = determinant(l, b);
        if (l.is_zero(d)) continue;
        ++done;
        const auto formula = pushforward_disc(ext, d, rank);
        const auto direct = trace_form_disc_direct(ext, b);
        t.check(formula.legendre == direct.legendre,
                [&] { return "rank " + std::to_string(rank) + " over " + l.describe() + " / " + k.describe(); });
      }
    }
  return t;
}

inline Tally a12_milnor_conservation(Rng&) {
  Tally t;
  const Field k = Field::create(7, 1);
  const std::vector<std::string> xa{"x", "a"};
  for (auto [text, total] : std::vector<std::pair<const char*, int>>{{"x^3 + a*x^2", 2}, {"x^5 + a*x^3", 4}, {"x^2", 1}}) {
    const auto fam = parse_poly(text, k, xa);
    const auto profiles = family_milnor_profile(fam, k.elements());
    for (const auto& pr : profiles)
      t.check(pr.total == total, [&] {
        return std::string(text) + " at a = " + k.to_string(pr.parameter) + ": total " + std::to_string(pr.total);
      });
  }
  return t;
}

inline Tally a13_binary_forms_char2(Rng&) {
  Tally t;
  for (int m : {1, 2}) {
    const Field k = Field::create(2, m);
    const auto elems = k.elements();
    for (FieldElem c0 : elems)
      for (FieldElem c1 : elems)
        for (FieldElem c2 : elems)
          for (FieldElem c3 : elems) {
            const std::vector<FieldElem> c{c0, c1, c2, c3};
            if (std::all_of(c.begin(), c.end(), [&](FieldElem x) { return k.is_zero(x); })) continue;
            const auto f = make_binary_form(k, c);
            if (k.is_zero(divided_disc_binary(f))) continue;
            const auto rep = verify_homog_char2(f);
            t.check(rep.pass, [&] {
              std::string s = "[";
              for (FieldElem x : c) s += k.to_string(x) + " ";
              return s + "] over " + k.describe();
            });
          }
  }
  for (int d = 2; d <= 5; ++d) {
    const auto res = generic_binary_resultant(d);
    const std::int64_t scale = checked_pow(d, static_cast<unsigned>(a_exponent(0, d)));
    std::int64_t g = 0;
    for (const auto& [e, c] : res.terms()) g = std::gcd(g, c);
    t.check(res == generic_divided_disc(d).scaled(scale) && g == scale,
            [&] { return "resultant identity at d = " + std::to_string(d); });
  }
  return t;
}

struct Criterion {
  const char* id;
  const char* title;
  double budget;
  Tally (*run)(Rng&);
};

inline const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {"A1", "Gauss sum square", 1, a1_gauss_sums},
      {"A2", "quadratic base case", 2, a2_quadratic_base_case},
      {"A3", "main identity, odd p", 10, a3_main_theorem_odd},
      {"A4", "Fermat discriminants", 10, a4_fermat},
      {"A5", "char 2 ordinary quadratic", 2, a5_char2_ordinary},
      {"A6", "char 2 wild mu = 2", 2, a6_char2_wild},
      {"A7", "lift independence", 10, a7_lift_independence},
      {"A8", "parity and odd-dimension triviality", 2, a8_parity_and_triviality},
      {"A9", "convolution law", 5, a9_convolution},
      {"A10", "residue oracle", 5, a10_residue_oracle},
      {"A11", "trace pushforward", 2, a11_trace_pushforward},
      {"A12", "Milnor conservation", 1, a12_milnor_conservation},
      {"A13", "binary forms in char 2", 30, a13_binary_forms_char2},
  };
  return all;
}

inline CriterionResult run_one(const Criterion& c, std::uint64_t seed, std::size_t index) {
  Rng rng(seed + 0x9e3779b97f4a7c15ULL * (index + 1));
  CriterionResult out{c.id, c.title, false, 0, "", 0, c.budget};
  const auto t0 = std::chrono::steady_clock::now();
  try {
    const Tally t = c.run(rng);
    out.pass = t.ok();
    out.cases = t.cases();
    out.detail = t.summary();
  } catch (const Error& e) {
    out.detail = std::string("error: ") + e.what();
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (out.pass && out.seconds > out.budget) {
    out.pass = false;
    out.detail += "; over the " + std::to_string(out.budget) + " s budget";
  }
  return out;
}

// Runs every criterion; with parallel set, criteria run concurrently and the
// results are returned in criterion order.
inline std::vector<CriterionResult> run_all(std::uint64_t seed, bool parallel = false) {
  const auto& cs = criteria();
  std::vector<CriterionResult> out;
  if (!parallel) {
    for (std::size_t i = 0; i < cs.size(); ++i) out.push_back(run_one(cs[i], seed, i));
    return out;
  }
  std::vector<std::future<CriterionResult>> jobs;
  for (std::size_t i = 0; i < cs.size(); ++i) jobs.push_back(std::async(std::launch::async, run_one, cs[i], seed, i));
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

inline std::string format_line(const CriterionResult& r) {
  std::ostringstream os;
  os << r.id << ' ' << (r.pass ? "PASS" : "FAIL") << "  " << r.title << " (" << r.detail << ", ";
  os.precision(3);
  os << std::fixed << r.seconds << " s)";
  return os.str();
}

inline constexpr std::uint64_t kDefaultSeed = 20261014;

}  // namespace resform::acceptance

#endif  // RESFORM_TESTS_SUPPORT_ACCEPTANCE_HPP_
