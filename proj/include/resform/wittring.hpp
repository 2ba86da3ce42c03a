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

#ifndef RESFORM_WITTRING_HPP_
#define RESFORM_WITTRING_HPP_

#include <array>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "resform/error.hpp"
#include "resform/gfield.hpp"

namespace resform {

// An element of Z/8[x]/(h), coefficients little-endian in [0, 8).
struct GaloisElem {
  static constexpr int kMaxDegree = 8;
  std::array<std::uint8_t, kMaxDegree> c{};
  friend bool operator==(const GaloisElem&, const GaloisElem&) = default;
  friend auto operator<=>(const GaloisElem&, const GaloisElem&) = default;
};

// W_3(F_{2^m}) realized as the Galois ring Z/8[x]/(h), where h is the lift of
// the residue field modulus with coefficients in {0, 1}.
class GaloisRing {
 public:
  using Elem = GaloisElem;

  static GaloisRing create(const Field& k) {
    require(k.p() == 2, ErrorCode::kOddCharacteristic, "Galois ring lifts need characteristic 2");
    require(k.m() <= GaloisElem::kMaxDegree, ErrorCode::kInvalidArgument, "residue degree above 8");
    return GaloisRing(k);
  }

  const Field& residue_field() const { return k_; }
  int m() const { return m_; }
  const std::vector<int>& modulus() const { return h_; }

  Elem zero() const { return {}; }
  Elem one() const { return from_int(1); }

  Elem from_int(long long n) const {
    Elem e;
    e.c[0] = static_cast<std::uint8_t>(mod_floor(n, 8));
    return e;
  }

  Elem from_coeffs(const std::vector<long long>& c) const {
    require(static_cast<int>(c.size()) <= m_, ErrorCode::kInvalidArgument,
            "element literal has more than m coefficients");
    Elem e;
    for (std::size_t i = 0; i < c.size(); ++i) e.c[i] = static_cast<std::uint8_t>(mod_floor(c[i], 8));
    return e;
  }

  std::vector<int> coeffs(const Elem& a) const { return std::vector<int>(a.c.begin(), a.c.begin() + m_); }

  Elem add(const Elem& a, const Elem& b) const {
    Elem r;
    for (int i = 0; i < m_; ++i) r.c[i] = static_cast<std::uint8_t>((a.c[i] + b.c[i]) & 7);
    return r;
  }

  Elem sub(const Elem& a, const Elem& b) const {
    Elem r;
    for (int i = 0; i < m_; ++i) r.c[i] = static_cast<std::uint8_t>((a.c[i] - b.c[i]) & 7);
    return r;
  }

  Elem neg(const Elem& a) const { return sub(zero(), a); }

  Elem mul(const Elem& a, const Elem& b) const {
    int t[2 * GaloisElem::kMaxDegree] = {};
    for (int i = 0; i < m_; ++i) {
      if (!a.c[i]) continue;
      for (int j = 0; j < m_; ++j) t[i + j] += a.c[i] * b.c[j];
    }
    for (int i = 2 * m_ - 2; i >= m_; --i) {
      const int c = t[i] & 7;
      if (!c) continue;
      for (int j = 0; j < m_; ++j) t[i - m_ + j] -= c * h_[j];
      t[i] = 0;
    }
    Elem r;
    for (int i = 0; i < m_; ++i) r.c[i] = static_cast<std::uint8_t>(t[i] & 7);
    return r;
  }

  Elem pow(Elem base, unsigned long long e) const { return ring_pow(*this, base, e); }

  bool is_zero(const Elem& a) const { return a == Elem{}; }
  bool is_unit(const Elem& a) const { return !k_.is_zero(reduce(a)); }

  // Coefficientwise lift with digits in {0, 1}.
  Elem lift(FieldElem a) const {
    Elem e;
    const auto c = k_.coeffs(a);
    for (int i = 0; i < m_; ++i) e.c[i] = static_cast<std::uint8_t>(c[i]);
    return e;
  }

  FieldElem reduce(const Elem& a) const {
    std::vector<long long> c(m_);
    for (int i = 0; i < m_; ++i) c[i] = a.c[i] & 1;
    return k_.from_coeffs(c);
  }

  Elem inv(const Elem& a) const {
    require(is_unit(a), ErrorCode::kNonUnit, to_string(a) + " is not a unit in W_3");
    // Newton iteration z <- z(2 - az) doubles 2-adic precision.
    Elem z = lift(k_.inv(reduce(a)));
    const Elem two = from_int(2);
    for (int i = 0; i < 2; ++i) z = mul(z, sub(two, mul(a, z)));
    return z;
  }

  Elem teichmuller(FieldElem a) const {
    Elem z = lift(a);
    const unsigned long long q = k_.q();
    for (int iter = 0; iter < 4; ++iter) {
      Elem next = pow(z, q);
      if (next == z) return z;
      z = next;
    }
    fail(ErrorCode::kInternal, "Teichmuller iteration did not stabilize");
  }

  // Requires every coefficient divisible by 2^s; divides them.
  Elem shift_down(const Elem& a, int s) const {
    Elem r;
    for (int i = 0; i < m_; ++i) {
      require(a.c[i] % (1 << s) == 0, ErrorCode::kInternal, "element not divisible");
      r.c[i] = static_cast<std::uint8_t>(a.c[i] >> s);
    }
    return r;
  }

  std::string to_string(const Elem& a) const {
    bool scalar = true;
    for (int i = 1; i < m_; ++i) scalar = scalar && a.c[i] == 0;
    if (scalar) return std::to_string(a.c[0]);
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < m_; ++i) os << (i ? "," : "") << static_cast<int>(a.c[i]);
    os << ']';
    return os.str();
  }

  std::string describe() const { return "W_3(" + k_.describe() + ")"; }

  bool operator==(const GaloisRing& o) const { return k_ == o.k_; }

 private:
  explicit GaloisRing(const Field& k) : k_(k), m_(k.m()), h_(k.modulus()) {}

  Field k_;
  int m_;
  std::vector<int> h_;
};

// The class of a unit modulo squares, written as 1 + 2[a] + 4[b] after
// dividing by the Teichmuller lift of its residue. (a, Tr b) is a complete
// invariant; b itself is only defined modulo the Artin-Schreier image.
struct WittSquareClass {
  FieldElem a_part;
  FieldElem b_part;
  int b_trace = 0;
  bool canonical = true;  // a_part == 0

  friend bool operator==(const WittSquareClass& x, const WittSquareClass& y) {
    return x.a_part == y.a_part && x.b_trace == y.b_trace;
  }
};

inline WittSquareClass square_class_normalize(const GaloisRing& gr, const GaloisElem& u) {
  require(gr.is_unit(u), ErrorCode::kNonUnit, gr.to_string(u) + " is not a unit");
  const Field& k = gr.residue_field();
  const GaloisElem unit = gr.mul(u, gr.inv(gr.teichmuller(gr.reduce(u))));
  const GaloisElem w = gr.shift_down(gr.sub(unit, gr.one()), 1);
  WittSquareClass cls;
  cls.a_part = gr.reduce(w);
  const GaloisElem rest = gr.shift_down(gr.sub(w, gr.teichmuller(cls.a_part)), 1);
  cls.b_part = gr.reduce(rest);
  cls.b_trace = k.trace_int(cls.b_part);
  cls.canonical = k.is_zero(cls.a_part);
  return cls;
}

struct ArfClass {
  FieldElem value;
  int trace_bit = 0;
};

// Reads the Arf class off (-1)^N u = (square) * (1 + 4[b]).
inline ArfClass arf_from_unit(const GaloisRing& gr, const GaloisElem& u, long long n_sign) {
  require(n_sign >= 0, ErrorCode::kInvalidArgument, "N must be non-negative");
  const GaloisElem v = (n_sign % 2) ? gr.neg(u) : u;
  const auto cls = square_class_normalize(gr, v);
  require(cls.canonical, ErrorCode::kRamifiedClass,
          "signed discriminant " + gr.to_string(v) + " is not of the form square * (1 + 4[b])");
  return {cls.b_part, cls.b_trace};
}

}  // namespace resform

#endif  // RESFORM_WITTRING_HPP_
