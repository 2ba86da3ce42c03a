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

#ifndef RESFORM_MPOLY_HPP_
#define RESFORM_MPOLY_HPP_

#include <cctype>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "resform/error.hpp"
#include "resform/ring.hpp"

namespace resform {

using Exponent = std::vector<int>;

inline int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

// Graded lexicographic order with x_0 > x_1 > ...; this is "less than".
struct GradedLexLess {
  bool operator()(const Exponent& a, const Exponent& b) const {
    const int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
  }
};

template <CoefficientRing R>
class MultiPoly {
 public:
  using Ring = R;
  using Elem = typename R::Elem;
  using Terms = std::map<Exponent, Elem, GradedLexLess>;

  MultiPoly(R ring, int n_vars) : ring_(std::move(ring)), n_(n_vars) {
    require(n_vars >= 0, ErrorCode::kInvalidArgument, "negative variable count");
  }

  static MultiPoly constant(const R& ring, int n_vars, const Elem& c) {
    MultiPoly f(ring, n_vars);
    f.add_term(Exponent(n_vars, 0), c);
    return f;
  }

  static MultiPoly monomial(const R& ring, const Exponent& e, const Elem& c) {
    MultiPoly f(ring, static_cast<int>(e.size()));
    f.add_term(e, c);
    return f;
  }

  static MultiPoly variable(const R& ring, int n_vars, int i) {
    Exponent e(n_vars, 0);
    e.at(i) = 1;
    return monomial(ring, e, ring.one());
  }

  const R& ring() const { return ring_; }
  int n_vars() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  int degree() const { return terms_.empty() ? -1 : total_degree(terms_.rbegin()->first); }

  int low_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      const int t = total_degree(e);
      if (d < 0 || t < d) d = t;
    }
    return d;
  }

  Elem coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? ring_.zero() : it->second;
  }

  void add_term(const Exponent& e, const Elem& c) {
    require(static_cast<int>(e.size()) == n_, ErrorCode::kInvalidArgument, "exponent length mismatch");
    if (ring_.is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) return;
    it->second = ring_.add(it->second, c);
    if (ring_.is_zero(it->second)) terms_.erase(it);
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) {
    a.check_compatible(b);
    for (const auto& [e, c] : b.terms_) a.add_term(e, c);
    return a;
  }

  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) {
    a.check_compatible(b);
    for (const auto& [e, c] : b.terms_) a.add_term(e, a.ring_.neg(c));
    return a;
  }

  friend MultiPoly operator-(const MultiPoly& a) { return MultiPoly(a.ring_, a.n_) - a; }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_compatible(b);
    MultiPoly r(a.ring_, a.n_);
    Exponent e(a.n_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (int i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, a.ring_.mul(ca, cb));
      }
    return r;
  }

  MultiPoly scaled(const Elem& s) const {
    MultiPoly r(ring_, n_);
    for (const auto& [e, c] : terms_) r.add_term(e, ring_.mul(c, s));
    return r;
  }

  MultiPoly pow(unsigned e) const {
    MultiPoly r = constant(ring_, n_, ring_.one()), b = *this;
    while (e) {
      if (e & 1U) r = r * b;
      e >>= 1U;
      if (e) b = b * b;
    }
    return r;
  }

  // Drops every term of total degree >= bound.
  MultiPoly truncated(int bound) const {
    MultiPoly r(ring_, n_);
    for (const auto& [e, c] : terms_)
      if (total_degree(e) < bound) r.terms_.emplace(e, c);
    return r;
  }

  Elem evaluate(const std::vector<Elem>& point) const {
    require(static_cast<int>(point.size()) == n_, ErrorCode::kInvalidArgument, "evaluation point size");
    Elem acc = ring_.zero();
    for (const auto& [e, c] : terms_) {
      Elem t = c;
      for (int i = 0; i < n_; ++i)
        for (int k = 0; k < e[i]; ++k) t = ring_.mul(t, point[i]);
      acc = ring_.add(acc, t);
    }
    return acc;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.n_ == b.n_ && a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const MultiPoly& o) const {
    require(n_ == o.n_, ErrorCode::kInvalidArgument, "polynomials in different variable counts");
    require(ring_ == o.ring_, ErrorCode::kRingMismatch, "polynomials over different rings");
  }

  R ring_;
  int n_;
  Terms terms_;
};

template <CoefficientRing R2, CoefficientRing R1, class Fn>
MultiPoly<R2> map_coefficients(const MultiPoly<R1>& f, const R2& target, Fn fn) {
  MultiPoly<R2> out(target, f.n_vars());
  for (const auto& [e, c] : f.terms()) out.add_term(e, fn(c));
  return out;
}

// Polynomials with a fixed number of variables, as a coefficient ring in
// their own right (used for determinants with symbolic entries).
template <CoefficientRing R>
class PolyRing {
 public:
  using Elem = MultiPoly<R>;

  PolyRing(R base, int n_vars) : base_(std::move(base)), n_(n_vars) {}

  const R& base() const { return base_; }
  int n_vars() const { return n_; }

  Elem zero() const { return Elem(base_, n_); }
  Elem one() const { return Elem::constant(base_, n_, base_.one()); }
  Elem from_int(long long v) const { return Elem::constant(base_, n_, base_.from_int(v)); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  bool is_unit(const Elem& a) const {
    return a.size() == 1 && a.degree() == 0 && base_.is_unit(a.terms().begin()->second);
  }
  Elem inv(const Elem& a) const {
    require(is_unit(a), ErrorCode::kNonUnit, "polynomial is not a unit");
    return Elem::constant(base_, n_, base_.inv(a.terms().begin()->second));
  }
  std::string to_string(const Elem& a) const;
  bool operator==(const PolyRing& o) const { return n_ == o.n_ && base_ == o.base_; }

 private:
  R base_;
  int n_;
};

inline std::vector<std::string> default_var_names(int n) {
  std::vector<std::string> v;
  for (int i = 0; i < n; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

template <CoefficientRing R>
std::string render(const MultiPoly<R>& f, const std::vector<std::string>& names) {
  require(static_cast<int>(names.size()) == f.n_vars(), ErrorCode::kInvalidArgument, "variable name count");
  if (f.is_zero()) return "0";
  const R& ring = f.ring();
  std::ostringstream os;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    std::string cs = ring.to_string(c);
    bool negative = !cs.empty() && cs[0] == '-';
    if (negative) cs = cs.substr(1);
    if (first) os << (negative ? "-" : "");
    else os << (negative ? " - " : " + ");
    first = false;
    std::vector<std::string> factors;
    if (cs != "1" || total_degree(e) == 0) factors.push_back(cs);
    for (int i = 0; i < f.n_vars(); ++i) {
      if (e[i] == 0) continue;
      factors.push_back(e[i] == 1 ? names[i] : names[i] + "^" + std::to_string(e[i]));
    }
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
  }
  return os.str();
}

template <CoefficientRing R>
std::string PolyRing<R>::to_string(const Elem& a) const {
  return render(a, default_var_names(n_));
}

namespace detail {

template <CoefficientRing R>
class PolyParser {
 public:
  using P = MultiPoly<R>;

  PolyParser(std::string_view text, const R& ring, const std::vector<std::string>& names)
      : s_(text), ring_(ring), names_(names), n_(static_cast<int>(names.size())) {}

  P parse() {
    P f = expr();
    skip_ws();
    if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::kSyntaxError, what + " at offset " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  P expr() {
    skip_ws();
    P acc(ring_, n_);
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    P t = term();
    acc = negate ? acc - t : acc + t;
    for (;;) {
      if (accept('+')) acc = acc + term();
      else if (accept('-')) acc = acc - term();
      else return acc;
    }
  }

  P term() {
    P acc = power();
    while (accept('*')) acc = acc * power();
    return acc;
  }

  P power() {
    P base = primary();
    if (accept('^')) {
      skip_ws();
      const long long e = integer();
      if (e > 1000) error("exponent too large");
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  long long integer() {
    skip_ws();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) error("expected an integer");
    long long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > (1LL << 40)) error("integer literal too large");
      ++pos_;
    }
    return v;
  }

  P primary() {
    skip_ws();
    if (pos_ >= s_.size()) error("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      P inner = expr();
      if (!accept(')')) error("expected ')'");
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return -power();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return P::constant(ring_, n_, ring_.from_int(integer()));
    }
    if (c == '[') {
      ++pos_;
      std::vector<long long> coeffs;
      if (!accept(']')) {
        do {
          skip_ws();
          bool neg = accept('-');
          long long v = integer();
          coeffs.push_back(neg ? -v : v);
        } while (accept(','));
        if (!accept(']')) error("expected ']'");
      }
      if constexpr (requires { ring_.from_coeffs(coeffs); }) {
        return P::constant(ring_, n_, ring_.from_coeffs(coeffs));
      } else {
        error("element literals are not supported over this ring");
      }
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string name(s_.substr(start, pos_ - start));
      for (int i = 0; i < n_; ++i)
        if (names_[i] == name) return P::variable(ring_, n_, i);
      fail(ErrorCode::kUnknownVariable, "unknown variable '" + name + "'");
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  const R& ring_;
  const std::vector<std::string>& names_;
  int n_;
};

}  // namespace detail

template <CoefficientRing R>
MultiPoly<R> parse_poly(std::string_view text, const R& ring, const std::vector<std::string>& names) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    require(!names[i].empty(), ErrorCode::kInvalidArgument, "empty variable name");
    for (std::size_t j = 0; j < i; ++j)
      require(names[i] != names[j], ErrorCode::kInvalidArgument, "duplicate variable '" + names[i] + "'");
  }
  return detail::PolyParser<R>(text, ring, names).parse();
}

template <CoefficientRing R>
MultiPoly<R> partial(const MultiPoly<R>& f, int i) {
  const R& ring = f.ring();
  MultiPoly<R> r(ring, f.n_vars());
  for (const auto& [e, c] : f.terms()) {
    if (e[i] == 0) continue;
    Exponent d = e;
    --d[i];
    r.add_term(d, ring.mul(ring.from_int(e[i]), c));
  }
  return r;
}

template <CoefficientRing R>
std::vector<MultiPoly<R>> partials(const MultiPoly<R>& f) {
  std::vector<MultiPoly<R>> out;
  for (int i = 0; i < f.n_vars(); ++i) out.push_back(partial(f, i));
  return out;
}

template <CoefficientRing R>
std::vector<std::vector<MultiPoly<R>>> hessian(const MultiPoly<R>& f) {
  std::vector<std::vector<MultiPoly<R>>> h;
  for (int i = 0; i < f.n_vars(); ++i) {
    const auto fi = partial(f, i);
    std::vector<MultiPoly<R>> row;
    for (int j = 0; j < f.n_vars(); ++j) row.push_back(partial(fi, j));
    h.push_back(std::move(row));
  }
  return h;
}

enum class SubstitutionOrder {
  kForward,  // y fills positions 0..j
  kReverse,  // y fills positions j..n-1
};

// The exact quotient a_j in 2n variables (x_0..x_{n-1}, y_0..y_{n-1}) with
// sum_j a_j (y_j - x_j) = g(y) - g(x).
template <CoefficientRing R>
MultiPoly<R> divided_difference(const MultiPoly<R>& g, int j,
                                SubstitutionOrder order = SubstitutionOrder::kForward) {
  const int n = g.n_vars();
  require(j >= 0 && j < n, ErrorCode::kInvalidArgument, "divided difference index out of range");
  MultiPoly<R> out(g.ring(), 2 * n);
  for (const auto& [e, c] : g.terms()) {
    if (e[j] == 0) continue;
    Exponent base(2 * n, 0);
    for (int i = 0; i < n; ++i) {
      if (i == j) continue;
      const bool in_y = order == SubstitutionOrder::kForward ? i < j : i > j;
      base[in_y ? n + i : i] = e[i];
    }
    // (y^e - x^e) / (y - x) = sum_k x^{e-1-k} y^k
    for (int k = 0; k < e[j]; ++k) {
      Exponent t = base;
      t[j] = e[j] - 1 - k;
      t[n + j] = k;
      out.add_term(t, c);
    }
  }
  return out;
}

}  // namespace resform

#endif  // RESFORM_MPOLY_HPP_
