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

#ifndef RESFORM_HOMOG_HPP_
#define RESFORM_HOMOG_HPP_

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "resform/error.hpp"
#include "resform/gfield.hpp"
#include "resform/mpoly.hpp"
#include "resform/residue.hpp"
#include "resform/ring.hpp"
#include "resform/upoly.hpp"

namespace resform {

// sum_i c_i T0^{d-i} T1^i, coefficients listed highest T0-power first.
template <CoefficientRing R>
struct BinaryForm {
  using Elem = typename R::Elem;
  R ring;
  std::vector<Elem> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

template <CoefficientRing R>
BinaryForm<R> make_binary_form(const R& ring, std::vector<typename R::Elem> coeffs) {
  require(coeffs.size() >= 2, ErrorCode::kInvalidArgument, "binary form needs degree at least 1");
  bool any = false;
  for (const auto& c : coeffs) any = any || !ring.is_zero(c);
  require(any, ErrorCode::kInvalidArgument, "binary form is zero");
  return {ring, std::move(coeffs)};
}

// F as a polynomial in (T0, T1).
template <CoefficientRing R>
MultiPoly<R> binary_form_poly(const BinaryForm<R>& f) {
  const int d = f.degree();
  MultiPoly<R> p(f.ring, 2);
  for (int i = 0; i <= d; ++i) p.add_term({d - i, i}, f.coeffs[i]);
  return p;
}

namespace detail {

// Determinant by expansion over column subsets: 2^n n products, no division.
template <CoefficientRing R>
typename R::Elem det_by_minors(const R& ring, const Matrix<typename R::Elem>& a) {
  using Elem = typename R::Elem;
  const std::size_t n = a.size();
  if (n == 0) return ring.one();
  require(n <= 20, ErrorCode::kInvalidArgument, "matrix too large for minor expansion");
  std::vector<Elem> minors(std::size_t{1} << n, ring.zero());
  minors[0] = ring.one();
  for (std::size_t s = 1; s < minors.size(); ++s) {
    const int row = __builtin_popcountll(s) - 1;
    Elem acc = ring.zero();
    for (std::size_t j = 0; j < n; ++j) {
      if (!(s >> j & 1U)) continue;
      const auto& entry = a[row][j];
      const auto& minor = minors[s & ~(std::size_t{1} << j)];
      if (ring.is_zero(entry) || ring.is_zero(minor)) continue;
      // sign from the number of chosen columns to the right of j
      const int right = __builtin_popcountll(s >> (j + 1));
      const Elem t = ring.mul(entry, minor);
      acc = (right % 2) ? ring.sub(acc, t) : ring.add(acc, t);
    }
    minors[s] = acc;
  }
  return minors.back();
}

}  // namespace detail

// Res_{m,n}(g, h) as the Sylvester determinant; g, h are listed by ascending
// power and padded to the declared degree bounds.
template <CoefficientRing R>
typename R::Elem sylvester_resultant(const R& ring, std::vector<typename R::Elem> g, std::vector<typename R::Elem> h,
                                     int m, int n) {
  require(m >= 0 && n >= 0, ErrorCode::kInvalidArgument, "negative degree bound");
  require(static_cast<int>(g.size()) <= m + 1 && static_cast<int>(h.size()) <= n + 1, ErrorCode::kInvalidArgument,
          "polynomial exceeds its declared degree bound");
  g.resize(m + 1, ring.zero());
  h.resize(n + 1, ring.zero());
  const int size = m + n;
  auto s = zero_matrix(ring, size, size);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) s[i][i + j] = g[m - j];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) s[n + i][i + j] = h[n - j];
  return detail::det_by_minors(ring, s);
}

// a(n, d) = ((d-1)^{n+2} - (-1)^{n+2}) / d; n = -1 is the one-variable case.
inline long long a_exponent(int n, int d) {
  require(d >= 2 && n >= -1, ErrorCode::kInvalidArgument, "a(n, d) needs d >= 2 and n >= -1");
  const std::int64_t num = checked_pow(d - 1, static_cast<unsigned>(n + 2)) - ((n % 2 == 0) ? 1 : -1);
  require(num % d == 0, ErrorCode::kNonIntegral, "a(n, d) is not an integer");
  return num / d;
}

// Res(dF/dT0, dF/dT1) on the generic binary form of degree d, in the
// variables c_0..c_d of Z[c].
inline MultiPoly<IntegerRing> generic_binary_resultant(int d) {
  require(d >= 2, ErrorCode::kInvalidArgument, "binary form degree must be at least 2");
  const IntegerRing z;
  const PolyRing<IntegerRing> pr(z, d + 1);
  std::vector<MultiPoly<IntegerRing>> d0(d, pr.zero()), d1(d, pr.zero());
  // ascending in T0 for the dehomogenized forms
  for (int i = 0; i < d; ++i) d0[d - 1 - i] = MultiPoly<IntegerRing>::variable(z, d + 1, i).scaled(d - i);
  for (int i = 1; i <= d; ++i) d1[d - i] = MultiPoly<IntegerRing>::variable(z, d + 1, i).scaled(i);
  return sylvester_resultant(pr, d0, d1, d - 1, d - 1);
}

// disc_d of the generic binary form, cached per degree.
inline const MultiPoly<IntegerRing>& generic_divided_disc(int d) {
  static std::mutex mu;
  static std::map<int, MultiPoly<IntegerRing>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  const auto res = generic_binary_resultant(d);
  const std::int64_t div = checked_pow(d, static_cast<unsigned>(a_exponent(0, d)));
  MultiPoly<IntegerRing> out(IntegerRing{}, d + 1);
  for (const auto& [e, c] : res.terms()) {
    require(c % div == 0, ErrorCode::kNonIntegral, "resultant is not divisible by d^a(0,d)");
    out.add_term(e, c / div);
  }
  return cache.emplace(d, std::move(out)).first->second;
}

// Specialization of the integer polynomial disc_d at the coefficients of F.
template <CoefficientRing R>
typename R::Elem divided_disc_binary(const BinaryForm<R>& f) {
  const R& ring = f.ring;
  require(f.degree() >= 2, ErrorCode::kInvalidArgument, "divided discriminant needs degree at least 2");
  const auto& gen = generic_divided_disc(f.degree());
  const auto mapped = map_coefficients(gen, ring, [&](std::int64_t c) { return ring.from_int(c); });
  return mapped.evaluate(f.coeffs);
}

template <CoefficientRing R>
typename R::Elem binary_resultant_of_partials(const BinaryForm<R>& f) {
  const int d = f.degree();
  const R& ring = f.ring;
  std::vector<typename R::Elem> d0(d, ring.zero()), d1(d, ring.zero());
  for (int i = 0; i < d; ++i) d0[d - 1 - i] = ring.mul(ring.from_int(d - i), f.coeffs[i]);
  for (int i = 1; i <= d; ++i) d1[d - i] = ring.mul(ring.from_int(i), f.coeffs[i]);
  return sylvester_resultant(ring, d0, d1, d - 1, d - 1);
}

// The closed forms for F = sum a_i T_i^d in n + 2 variables, kept as
// exponents: disc_d = d^{e} prod a^{e'}, disc_B = (-1)^s d^{f} prod a^{f'}.
struct FermatFormulas {
  int d = 0;
  int n = 0;
  long long disc_d_d_exp = 0;
  long long disc_d_a_exp = 0;
  long long disc_b_sign_exp = 0;
  long long disc_b_d_exp = 0;
  long long disc_b_a_exp = 0;
  long long mu = 0;
};

inline FermatFormulas fermat_formulas(int d, int n) {
  require(d >= 2 && n >= -1, ErrorCode::kInvalidArgument, "Fermat formulas need d >= 2 and n >= -1");
  FermatFormulas out;
  out.d = d;
  out.n = n;
  const std::int64_t pw1 = checked_pow(d - 1, static_cast<unsigned>(n + 1));
  const std::int64_t pw2 = checked_pow(d - 1, static_cast<unsigned>(n + 2));
  out.disc_d_d_exp = checked_mul(n + 2, pw1) - a_exponent(n, d);
  out.disc_d_a_exp = pw1;
  out.disc_b_sign_exp = checked_mul(checked_mul(d - 2, pw2), n + 2) / 2;
  out.disc_b_d_exp = checked_mul(pw2, n + 2);
  out.disc_b_a_exp = pw2;
  out.mu = pw2;
  return out;
}

template <CoefficientRing R>
typename R::Elem fermat_eval(const R& ring, long long sign_exp, long long d_exp, long long a_exp, int d,
                             const std::vector<typename R::Elem>& a) {
  require(d_exp >= 0 && a_exp >= 0, ErrorCode::kInvalidArgument, "negative exponent in a closed form");
  auto acc = ring_pow(ring, ring.from_int(d), static_cast<unsigned long long>(d_exp));
  for (const auto& ai : a) acc = ring.mul(acc, ring_pow(ring, ai, static_cast<unsigned long long>(a_exp)));
  return (sign_exp % 2) ? ring.neg(acc) : acc;
}

template <CoefficientRing R>
typename R::Elem fermat_disc_d(const R& ring, const FermatFormulas& ff, const std::vector<typename R::Elem>& a) {
  require(static_cast<int>(a.size()) == ff.n + 2, ErrorCode::kInvalidArgument, "Fermat form needs n + 2 coefficients");
  return fermat_eval(ring, 0, ff.disc_d_d_exp, ff.disc_d_a_exp, ff.d, a);
}

template <CoefficientRing R>
typename R::Elem fermat_disc_b(const R& ring, const FermatFormulas& ff, const std::vector<typename R::Elem>& a) {
  require(static_cast<int>(a.size()) == ff.n + 2, ErrorCode::kInvalidArgument, "Fermat form needs n + 2 coefficients");
  return fermat_eval(ring, ff.disc_b_sign_exp, ff.disc_b_d_exp, ff.disc_b_a_exp, ff.d, a);
}

// Sign of Frobenius on the d points of {F = 0} in P^1: (-1)^{d - #orbits}.
inline int frobenius_sign_binary(const BinaryForm<Field>& f) {
  const Field& k = f.ring;
  const int d = f.degree();
  require(!k.is_zero(divided_disc_binary(f)), ErrorCode::kSingularForm, "binary form has a repeated root");
  UPoly g(d + 1);
  for (int i = 0; i <= d; ++i) g[d - i] = f.coeffs[i];
  upoly::trim(g);
  int orbits = k.is_zero(f.coeffs[0]) ? 1 : 0;  // the point [1 : 0]
  if (upoly::deg(g) > 0)
    for (const auto& fac : upoly::factor(k, g)) orbits += fac.multiplicity;
  return ((d - orbits) % 2 == 0) ? 1 : -1;
}

// (-1)^{(d^2-1)/8} unless F_4 lies in F_q.
inline int epsilon_sign_char2(const Field& k, int d) {
  require(k.p() == 2 && d % 2 == 1, ErrorCode::kInvalidArgument, "the sign is defined for odd d in characteristic 2");
  if (k.m() % 2 == 0) return 1;
  return (((d * d - 1) / 8) % 2 == 0) ? 1 : -1;
}

struct HomogReport {
  FieldElem disc;  // divided discriminant
  int mu = 0;
  ArfClass arf;
  int frobenius_sign = 1;
  int epsilon_sign = 1;
  bool pass = false;
};

// Arf(F, 0) is trivial iff epsilon(F_q, d) times the Frobenius sign is 1.
inline HomogReport verify_homog_char2(const BinaryForm<Field>& f) {
  const Field& k = f.ring;
  const int d = f.degree();
  require(k.p() == 2, ErrorCode::kOddCharacteristic, "the binary-form check is for characteristic 2");
  require(d >= 3 && d % 2 == 1, ErrorCode::kInvalidArgument, "binary form degree must be odd and at least 3");
  HomogReport rep;
  rep.disc = divided_disc_binary(f);
  require(!k.is_zero(rep.disc), ErrorCode::kSingularForm, "binary form has a repeated root");
  const auto arf = arf_invariant(binary_form_poly(f));
  rep.mu = arf.mu;
  rep.arf = arf.arf;
  rep.frobenius_sign = frobenius_sign_binary(f);
  rep.epsilon_sign = epsilon_sign_char2(k, d);
  rep.pass = (rep.arf.trace_bit == 0) == (rep.frobenius_sign * rep.epsilon_sign == 1);
  return rep;
}

// Square class that disc B_{F,dt} takes for a binary form over an odd field
// with p not dividing d: [d] + [disc_d] for odd d, [disc_d] for even d.
inline SquareClass predicted_binary_disc_class(const BinaryForm<Field>& f) {
  const Field& k = f.ring;
  require(k.p() != 2, ErrorCode::kEvenCharacteristic, "square classes need odd characteristic");
  const int d = f.degree();
  require(d % k.p() != 0, ErrorCode::kInvalidArgument, "p divides the degree");
  FieldElem v = divided_disc_binary(f);
  require(!k.is_zero(v), ErrorCode::kSingularForm, "binary form has a repeated root");
  if (d % 2) v = k.mul(v, k.from_int(d));
  return {legendre(k, v), v};
}

}  // namespace resform

#endif  // RESFORM_HOMOG_HPP_
