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

#ifndef RESFORM_GFIELD_HPP_
#define RESFORM_GFIELD_HPP_

#include <algorithm>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "resform/error.hpp"
#include "resform/ring.hpp"

namespace resform {

inline bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<long long> prime_factors(long long n) {
  std::vector<long long> out;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline long long mod_floor(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

namespace detail {

// Dense polynomials over F_p, little-endian, no trailing zeros.
using FpPoly = std::vector<int>;

inline void fp_trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int fp_inv(int a, int p) {
  int r = 1;
  for (int i = 0; i < p - 2; ++i) r = r * a % p;
  return r;
}

inline FpPoly fp_mod(FpPoly a, const FpPoly& f, int p) {
  fp_trim(a);
  const int df = static_cast<int>(f.size()) - 1;
  const int lead_inv = fp_inv(f.back(), p);
  while (static_cast<int>(a.size()) - 1 >= df && !a.empty()) {
    const int shift = static_cast<int>(a.size()) - 1 - df;
    const int c = a.back() * lead_inv % p;
    for (int i = 0; i <= df; ++i) a[shift + i] = mod_floor(a[shift + i] - c * f[i], p);
    fp_trim(a);
  }
  return a;
}

inline FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& f, int p) {
  if (a.empty() || b.empty()) return {};
  FpPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return fp_mod(std::move(c), f, p);
}

inline FpPoly fp_powmod(FpPoly base, long long e, const FpPoly& f, int p) {
  FpPoly r{1};
  base = fp_mod(std::move(base), f, p);
  while (e > 0) {
    if (e & 1) r = fp_mulmod(r, base, f, p);
    e >>= 1;
    if (e) base = fp_mulmod(base, base, f, p);
  }
  return r;
}

inline FpPoly fp_gcd(FpPoly a, FpPoly b, int p) {
  fp_trim(a);
  fp_trim(b);
  while (!b.empty()) {
    FpPoly r = fp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Rabin's test for a monic polynomial of degree m >= 1.
inline bool fp_is_irreducible(const FpPoly& f, int p) {
  const int m = static_cast<int>(f.size()) - 1;
  if (m <= 0) return false;
  if (m == 1) return true;
  auto x_pow_p_iter = [&](int k) {
    FpPoly z{0, 1};
    for (int i = 0; i < k; ++i) z = fp_powmod(z, p, f, p);
    return z;
  };
  auto minus_x = [&](FpPoly z) {
    if (z.size() < 2) z.resize(2, 0);
    z[1] = mod_floor(z[1] - 1, p);
    fp_trim(z);
    return z;
  };
  if (!minus_x(x_pow_p_iter(m)).empty()) return false;
  for (long long r : prime_factors(m)) {
    FpPoly g = fp_gcd(minus_x(x_pow_p_iter(m / static_cast<int>(r))), f, p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace detail

// An element of F_{p^m}, encoded as the integer sum c_i p^i of its
// coefficients on the power basis of the modulus.
struct FieldElem {
  std::uint32_t v = 0;
  friend bool operator==(FieldElem, FieldElem) = default;
  friend auto operator<=>(FieldElem, FieldElem) = default;
};

class Field {
 public:
  using Elem = FieldElem;

  static constexpr std::uint32_t kMaxOrder = 1U << 20;
  static constexpr int kMaxPrime = 47;

  // Lexicographically smallest monic irreducible of degree m, comparing the
  // coefficient of x^{m-1} first.
  static std::vector<int> default_modulus(int p, int m) {
    require(is_prime(p) && p <= kMaxPrime, ErrorCode::kUnsupportedPrime, "p = " + std::to_string(p));
    require(m >= 1, ErrorCode::kInvalidArgument, "extension degree must be >= 1");
    long long count = 1;
    for (int i = 0; i < m; ++i) count *= p;
    for (long long n = 0; n < count; ++n) {
      std::vector<int> f(m + 1, 0);
      long long t = n;
      for (int i = 0; i < m; ++i) {
        f[i] = static_cast<int>(t % p);
        t /= p;
      }
      f[m] = 1;
      if (detail::fp_is_irreducible(f, p)) return f;
    }
    fail(ErrorCode::kInternal, "no irreducible polynomial found");
  }

  static Field create(int p, int m, std::optional<std::vector<int>> modulus = std::nullopt) {
    require(is_prime(p) && p <= kMaxPrime, ErrorCode::kUnsupportedPrime,
            "supported primes are 2..47, got " + std::to_string(p));
    require(m >= 1, ErrorCode::kInvalidArgument, "extension degree must be >= 1");
    std::uint64_t q = 1;
    for (int i = 0; i < m; ++i) {
      q *= static_cast<std::uint64_t>(p);
      require(q <= kMaxOrder, ErrorCode::kInvalidArgument, "field order exceeds 2^20");
    }
    std::vector<int> f;
    if (modulus) {
      f = *modulus;
      require(static_cast<int>(f.size()) == m + 1, ErrorCode::kInvalidArgument,
              "modulus must have m + 1 coefficients");
      for (int& c : f) c = static_cast<int>(mod_floor(c, p));
      require(f.back() == 1, ErrorCode::kInvalidArgument, "modulus must be monic");
      require(detail::fp_is_irreducible(f, p), ErrorCode::kReducibleModulus,
              "modulus is reducible over F_" + std::to_string(p));
    } else {
      f = default_modulus(p, m);
    }
    auto d = std::make_shared<Data>();
    d->p = p;
    d->m = m;
    d->q = static_cast<std::uint32_t>(q);
    d->modulus = f;
    d->pow_p.resize(m + 1);
    d->pow_p[0] = 1;
    for (int i = 1; i <= m; ++i) d->pow_p[i] = d->pow_p[i - 1] * static_cast<std::uint32_t>(p);
    build_tables(*d);
    return Field(std::move(d));
  }

  int p() const { return d_->p; }
  int m() const { return d_->m; }
  std::uint32_t q() const { return d_->q; }
  const std::vector<int>& modulus() const { return d_->modulus; }

  FieldElem zero() const { return {0}; }
  FieldElem one() const { return {1}; }
  FieldElem from_int(long long n) const { return {static_cast<std::uint32_t>(mod_floor(n, d_->p))}; }

  FieldElem from_coeffs(const std::vector<long long>& c) const {
    require(static_cast<int>(c.size()) <= d_->m, ErrorCode::kInvalidArgument,
            "element literal has more than m coefficients");
    std::uint32_t v = 0;
    for (std::size_t i = 0; i < c.size(); ++i)
      v += static_cast<std::uint32_t>(mod_floor(c[i], d_->p)) * d_->pow_p[i];
    return {v};
  }

  std::vector<int> coeffs(FieldElem a) const {
    std::vector<int> c(d_->m);
    std::uint32_t v = a.v;
    for (int i = 0; i < d_->m; ++i) {
      c[i] = static_cast<int>(v % d_->p);
      v /= d_->p;
    }
    return c;
  }

  FieldElem add(FieldElem a, FieldElem b) const {
    if (d_->p == 2) return {a.v ^ b.v};
    if (d_->m == 1) return {(a.v + b.v) % d_->p};
    std::uint32_t r = 0, x = a.v, y = b.v;
    const std::uint32_t p = d_->p;
    for (int i = 0; i < d_->m; ++i) {
      r += ((x % p + y % p) % p) * d_->pow_p[i];
      x /= p;
      y /= p;
    }
    return {r};
  }

  FieldElem neg(FieldElem a) const {
    if (d_->p == 2) return a;
    if (d_->m == 1) return {(d_->p - a.v) % d_->p};
    std::uint32_t r = 0, x = a.v;
    const std::uint32_t p = d_->p;
    for (int i = 0; i < d_->m; ++i) {
      r += ((p - x % p) % p) * d_->pow_p[i];
      x /= p;
    }
    return {r};
  }

  FieldElem sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }

  FieldElem mul(FieldElem a, FieldElem b) const {
    if (a.v == 0 || b.v == 0) return {0};
    return {d_->exp[d_->log[a.v] + d_->log[b.v]]};
  }

  bool is_zero(FieldElem a) const { return a.v == 0; }
  bool is_unit(FieldElem a) const { return a.v != 0; }

  FieldElem inv(FieldElem a) const {
    require(a.v != 0, ErrorCode::kNonUnit, "inverse of zero");
    const std::uint32_t l = d_->log[a.v];
    return {d_->exp[l == 0 ? 0 : (d_->q - 1) - l]};
  }

  FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }

  FieldElem pow(FieldElem a, long long e) const {
    if (a.v == 0) {
      require(e >= 0, ErrorCode::kNonUnit, "negative power of zero");
      return {e == 0 ? 1U : 0U};
    }
    const long long order = d_->q - 1;
    const long long l = mod_floor(static_cast<long long>(d_->log[a.v]) * mod_floor(e, order), order);
    return {d_->exp[l]};
  }

  FieldElem frobenius(FieldElem a) const { return pow(a, d_->p); }

  FieldElem trace(FieldElem a) const {
    FieldElem s = zero(), x = a;
    for (int i = 0; i < d_->m; ++i) {
      s = add(s, x);
      x = frobenius(x);
    }
    return s;
  }

  int trace_int(FieldElem a) const { return static_cast<int>(trace(a).v); }

  FieldElem norm(FieldElem a) const { return pow(a, (d_->q - 1) / (d_->p - 1)); }

  // The residue class of x modulo the defining polynomial.
  FieldElem generator() const {
    if (d_->m > 1) return {static_cast<std::uint32_t>(d_->p)};
    return from_int(-d_->modulus[0]);
  }

  FieldElem primitive_element() const { return {d_->exp[1]}; }

  // Discrete logarithm base primitive_element(); a must be nonzero.
  std::uint32_t log(FieldElem a) const {
    require(a.v != 0, ErrorCode::kNonUnit, "log of zero");
    return d_->log[a.v];
  }

  std::vector<FieldElem> elements() const {
    std::vector<FieldElem> out(d_->q);
    for (std::uint32_t i = 0; i < d_->q; ++i) out[i].v = i;
    return out;
  }

  bool in_prime_field(FieldElem a) const { return a.v < static_cast<std::uint32_t>(d_->p); }

  std::string to_string(FieldElem a) const {
    if (in_prime_field(a)) return std::to_string(a.v);
    std::ostringstream os;
    os << '[';
    auto c = coeffs(a);
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << ']';
    return os.str();
  }

  std::string describe() const {
    std::ostringstream os;
    os << "F_" << d_->q;
    if (d_->m > 1) {
      os << " mod [";
      for (std::size_t i = 0; i < d_->modulus.size(); ++i) os << (i ? "," : "") << d_->modulus[i];
      os << "]";
    }
    return os.str();
  }

  bool operator==(const Field& o) const {
    return d_ == o.d_ || (d_->p == o.d_->p && d_->m == o.d_->m && d_->modulus == o.d_->modulus);
  }

 private:
  struct Data {
    int p = 0;
    int m = 0;
    std::uint32_t q = 0;
    std::vector<int> modulus;
    std::vector<std::uint32_t> pow_p;
    std::vector<std::uint32_t> exp;  // length 2(q-1), so log sums need no reduction
    std::vector<std::uint32_t> log;
  };

  explicit Field(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

  static detail::FpPoly to_poly(const Data& d, std::uint32_t v) {
    detail::FpPoly c(d.m);
    for (int i = 0; i < d.m; ++i) {
      c[i] = static_cast<int>(v % d.p);
      v /= d.p;
    }
    detail::fp_trim(c);
    return c;
  }

  static std::uint32_t from_poly(const Data& d, const detail::FpPoly& c) {
    std::uint32_t v = 0;
    for (std::size_t i = 0; i < c.size(); ++i) v += static_cast<std::uint32_t>(c[i]) * d.pow_p[i];
    return v;
  }

  static void build_tables(Data& d) {
    const std::uint32_t order = d.q - 1;
    d.exp.assign(2 * static_cast<std::size_t>(order) + 1, 0);
    d.log.assign(d.q, 0);
    if (d.q == 2) {
      d.exp = {1, 1, 1};
      return;
    }
    const auto factors = prime_factors(order);
    for (std::uint32_t cand = 2; cand < d.q; ++cand) {
      const auto g = to_poly(d, cand);
      bool primitive = true;
      for (long long r : factors) {
        const auto t = detail::fp_powmod(g, order / r, d.modulus, d.p);
        if (t.size() == 1 && t[0] == 1) {
          primitive = false;
          break;
        }
      }
      if (!primitive) continue;
      detail::FpPoly cur{1};
      for (std::uint32_t i = 0; i < order; ++i) {
        const std::uint32_t v = from_poly(d, cur);
        d.exp[i] = v;
        d.log[v] = i;
        cur = detail::fp_mulmod(cur, g, d.modulus, d.p);
      }
      for (std::uint32_t i = order; i < d.exp.size(); ++i) d.exp[i] = d.exp[i - order];
      return;
    }
    fail(ErrorCode::kInternal, "no primitive element found");
  }

  std::shared_ptr<const Data> d_;
};

// An element of Z[zeta_p] = Z[x]/Phi_p(x), stored on the basis 1..zeta^{p-2}.
class CycloInt {
 public:
  CycloInt() = default;
  explicit CycloInt(int p) : p_(p), c_(static_cast<std::size_t>(std::max(p - 1, 1)), 0) {
    require(is_prime(p), ErrorCode::kInvalidArgument, "cyclotomic ring needs a prime");
  }

  static CycloInt from_int(int p, std::int64_t n) {
    CycloInt z(p);
    z.c_[0] = n;
    return z;
  }

  static CycloInt zeta_pow(int p, long long k) {
    CycloInt z(p);
    const auto e = static_cast<std::size_t>(mod_floor(k, p));
    if (e < static_cast<std::size_t>(p - 1)) {
      z.c_[e] = 1;
    } else {
      for (auto& x : z.c_) x = -1;
    }
    return z;
  }

  static CycloInt from_coeffs(int p, std::vector<std::int64_t> c) {
    CycloInt z(p);
    require(c.size() == z.c_.size(), ErrorCode::kInvalidArgument, "wrong cyclotomic length");
    z.c_ = std::move(c);
    return z;
  }

  int p() const { return p_; }
  const std::vector<std::int64_t>& coeffs() const { return c_; }

  bool is_integer() const {
    return std::all_of(c_.begin() + 1, c_.end(), [](std::int64_t x) { return x == 0; });
  }

  friend CycloInt operator+(const CycloInt& a, const CycloInt& b) {
    a.same_prime(b);
    CycloInt r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = checked_add(r.c_[i], b.c_[i]);
    return r;
  }

  friend CycloInt operator-(const CycloInt& a, const CycloInt& b) {
    a.same_prime(b);
    CycloInt r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = checked_sub(r.c_[i], b.c_[i]);
    return r;
  }

  friend CycloInt operator-(const CycloInt& a) { return CycloInt::from_int(a.p_, 0) - a; }

  friend CycloInt operator*(const CycloInt& a, const CycloInt& b) {
    a.same_prime(b);
    const int p = a.p_;
    std::vector<std::int64_t> acc(static_cast<std::size_t>(p), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        const std::size_t k = (i + j) % static_cast<std::size_t>(p);
        acc[k] = checked_add(acc[k], checked_mul(a.c_[i], b.c_[j]));
      }
    }
    return reduce(p, acc);
  }

  CycloInt scaled(std::int64_t s) const {
    CycloInt r = *this;
    for (auto& x : r.c_) x = checked_mul(x, s);
    return r;
  }

  // Divides every coefficient by s; the division must be exact.
  CycloInt divided(std::int64_t s) const {
    CycloInt r = *this;
    for (auto& x : r.c_) {
      require(x % s == 0, ErrorCode::kNonIntegral, "inexact cyclotomic division");
      x /= s;
    }
    return r;
  }

  bool divisible_by(std::int64_t s) const {
    return std::all_of(c_.begin(), c_.end(), [s](std::int64_t x) { return x % s == 0; });
  }

  // Complex conjugation zeta -> zeta^{-1}.
  CycloInt conj() const {
    std::vector<std::int64_t> acc(static_cast<std::size_t>(p_), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) acc[(p_ - i) % p_] = c_[i];
    return reduce(p_, acc);
  }

  CycloInt pow(unsigned e) const {
    CycloInt r = from_int(p_, 1), b = *this;
    while (e) {
      if (e & 1U) r = r * b;
      e >>= 1U;
      if (e) b = b * b;
    }
    return r;
  }

  friend bool operator==(const CycloInt& a, const CycloInt& b) { return a.p_ == b.p_ && a.c_ == b.c_; }

  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      const std::int64_t c = c_[i];
      if (!first) os << (c < 0 ? " - " : " + ");
      else if (c < 0) os << "-";
      first = false;
      const std::int64_t a = c < 0 ? -c : c;
      if (i == 0) {
        os << a;
      } else {
        if (a != 1) os << a << "*";
        os << "z";
        if (i > 1) os << "^" << i;
      }
    }
    return first ? "0" : os.str();
  }

 private:
  static CycloInt reduce(int p, std::vector<std::int64_t>& acc) {
    CycloInt r(p);
    const std::int64_t top = p >= 2 ? acc[static_cast<std::size_t>(p - 1)] : 0;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = checked_sub(acc[i], top);
    return r;
  }

  void same_prime(const CycloInt& o) const {
    require(p_ == o.p_, ErrorCode::kRingMismatch, "cyclotomic integers over different primes");
  }

  int p_ = 2;
  std::vector<std::int64_t> c_{0};
};

// psi_c(Tr x) = zeta_p^{c Tr x}, the fixed additive character and its twists.
inline CycloInt additive_character(const Field& k, FieldElem x, int twist = 1) {
  return CycloInt::zeta_pow(k.p(), static_cast<long long>(twist) * k.trace_int(x));
}

inline int legendre(const Field& k, FieldElem a) {
  require(k.p() != 2, ErrorCode::kEvenCharacteristic, "Legendre symbol needs odd characteristic");
  if (k.is_zero(a)) return 0;
  return k.pow(a, (k.q() - 1) / 2) == k.one() ? 1 : -1;
}

struct WpClass {
  int trace_bit = 0;
  std::optional<FieldElem> solution;  // some y with y^2 + y = a
};

inline WpClass wp_class(const Field& k, FieldElem a) {
  require(k.p() == 2, ErrorCode::kOddCharacteristic, "Artin-Schreier classes need characteristic 2");
  WpClass out;
  out.trace_bit = k.trace_int(a);
  if (out.trace_bit == 0) {
    for (FieldElem y : k.elements())
      if (k.add(k.mul(y, y), y) == a) {
        out.solution = y;
        break;
      }
    require(out.solution.has_value(), ErrorCode::kInternal, "trace zero but no Artin-Schreier root");
  }
  return out;
}

// tau = -sum_{a in k} psi_c(a^2), summed directly.
inline CycloInt gauss_sum(const Field& k, int twist = 1) {
  require(k.p() != 2, ErrorCode::kEvenCharacteristic, "quadratic Gauss sums need odd characteristic");
  require(mod_floor(twist, k.p()) != 0, ErrorCode::kInvalidArgument, "twist must be a unit mod p");
  std::vector<std::int64_t> hits(k.p(), 0);
  for (FieldElem a : k.elements()) ++hits[k.trace_int(k.mul(a, a))];
  CycloInt tau(k.p());
  for (int t = 0; t < k.p(); ++t)
    tau = tau - CycloInt::zeta_pow(k.p(), static_cast<long long>(twist) * t).scaled(hits[t]);
  const auto expect = CycloInt::from_int(k.p(), legendre(k, k.from_int(-1)) * static_cast<std::int64_t>(k.q()));
  require(tau * tau == expect, ErrorCode::kInternal, "Gauss sum square identity failed");
  return tau;
}

}  // namespace resform

#endif  // RESFORM_GFIELD_HPP_
