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

#ifndef RESFORM_UPOLY_HPP_
#define RESFORM_UPOLY_HPP_

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "resform/gfield.hpp"

namespace resform {

// Dense univariate polynomials over a finite field, little-endian, with no
// trailing zero coefficients (the zero polynomial is empty).
using UPoly = std::vector<FieldElem>;

namespace upoly {

inline void trim(UPoly& a) {
  while (!a.empty() && a.back().v == 0) a.pop_back();
}

inline int deg(const UPoly& a) { return static_cast<int>(a.size()) - 1; }

inline UPoly constant(FieldElem c) {
  UPoly r{c};
  trim(r);
  return r;
}

inline UPoly x_poly(const Field& k) { return {k.zero(), k.one()}; }

inline UPoly add(const Field& k, const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), k.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = k.add(r[i], b[i]);
  trim(r);
  return r;
}

inline UPoly sub(const Field& k, const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), k.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = k.sub(r[i], b[i]);
  trim(r);
  return r;
}

inline UPoly scale(const Field& k, const UPoly& a, FieldElem c) {
  UPoly r = a;
  for (auto& x : r) x = k.mul(x, c);
  trim(r);
  return r;
}

inline UPoly mul(const Field& k, const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, k.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].v == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = k.add(r[i + j], k.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

// Returns (quotient, remainder).
inline std::pair<UPoly, UPoly> divmod(const Field& k, UPoly a, const UPoly& b) {
  require(!b.empty(), ErrorCode::kInvalidArgument, "polynomial division by zero");
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  UPoly quo(a.size() - b.size() + 1, k.zero());
  const FieldElem lead_inv = k.inv(b.back());
  for (int i = deg(a); i >= deg(b); --i) {
    const FieldElem c = k.mul(a[i], lead_inv);
    if (c.v == 0) continue;
    const int shift = i - deg(b);
    quo[shift] = c;
    for (int j = 0; j <= deg(b); ++j) a[shift + j] = k.sub(a[shift + j], k.mul(c, b[j]));
  }
  trim(a);
  trim(quo);
  return {quo, a};
}

inline UPoly mod(const Field& k, const UPoly& a, const UPoly& b) { return divmod(k, a, b).second; }

inline UPoly exact_div(const Field& k, const UPoly& a, const UPoly& b) {
  auto [q, r] = divmod(k, a, b);
  require(r.empty(), ErrorCode::kInternal, "inexact polynomial division");
  return q;
}

inline UPoly monic(const Field& k, const UPoly& a) {
  if (a.empty()) return a;
  return scale(k, a, k.inv(a.back()));
}

inline UPoly gcd(const Field& k, UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = mod(k, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(k, a);
}

inline UPoly mulmod(const Field& k, const UPoly& a, const UPoly& b, const UPoly& f) {
  return mod(k, mul(k, a, b), f);
}

inline UPoly powmod(const Field& k, UPoly base, unsigned long long e, const UPoly& f) {
  UPoly r = mod(k, constant(k.one()), f);
  base = mod(k, base, f);
  while (e > 0) {
    if (e & 1ULL) r = mulmod(k, r, base, f);
    e >>= 1ULL;
    if (e) base = mulmod(k, base, base, f);
  }
  return r;
}

inline UPoly derivative(const Field& k, const UPoly& a) {
  if (a.size() <= 1) return {};
  UPoly r(a.size() - 1, k.zero());
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = k.mul(k.from_int(static_cast<long long>(i)), a[i]);
  trim(r);
  return r;
}

inline FieldElem eval(const Field& k, const UPoly& a, FieldElem x) {
  FieldElem acc = k.zero();
  for (int i = deg(a); i >= 0; --i) acc = k.add(k.mul(acc, x), a[i]);
  return acc;
}

inline bool is_one(const UPoly& a) { return a.size() == 1 && a[0].v == 1; }

struct Factor {
  UPoly poly;  // monic irreducible
  int multiplicity = 0;
};

struct DegreeGroup {
  int degree = 0;
  UPoly product;  // product of all monic irreducible factors of this degree
};

// Squarefree decomposition: pairs (g_i, i) with f = lead * prod g_i^i, each
// g_i squarefree and pairwise coprime.
inline std::vector<std::pair<UPoly, int>> squarefree_decomposition(const Field& k, const UPoly& f_in) {
  std::vector<std::pair<UPoly, int>> out;
  UPoly f = monic(k, f_in);
  if (deg(f) <= 0) return out;
  const UPoly df = derivative(k, f);
  UPoly c = gcd(k, f, df);
  UPoly w = exact_div(k, f, c);
  int i = 1;
  while (!is_one(w)) {
    UPoly y = gcd(k, w, c);
    UPoly z = exact_div(k, w, y);
    if (deg(z) > 0) out.emplace_back(z, i);
    ++i;
    w = y;
    c = exact_div(k, c, y);
  }
  if (deg(c) > 0) {
    // c is a polynomial in x^p; take coefficientwise p-th roots.
    const int p = k.p();
    UPoly root((c.size() - 1) / p + 1, k.zero());
    const long long root_exp = static_cast<long long>(k.q() / p);
    for (std::size_t j = 0; j < root.size(); ++j) root[j] = k.pow(c[j * p], root_exp);
    for (auto& [g, e] : squarefree_decomposition(k, root)) out.emplace_back(g, e * p);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
  return out;
}

// For a squarefree monic f, groups its irreducible factors by degree.
inline std::vector<DegreeGroup> distinct_degree_factorization(const Field& k, UPoly f) {
  std::vector<DegreeGroup> out;
  f = monic(k, f);
  UPoly h = mod(k, x_poly(k), f);
  for (int d = 1; 2 * d <= deg(f); ++d) {
    h = powmod(k, h, k.q(), f);
    UPoly g = gcd(k, f, sub(k, h, x_poly(k)));
    if (deg(g) > 0) {
      out.push_back({d, g});
      f = exact_div(k, f, g);
      h = mod(k, h, f);
    }
  }
  if (deg(f) > 0) out.push_back({deg(f), f});
  return out;
}

// Splits a product of distinct monic irreducibles of common degree d.
inline std::vector<UPoly> equal_degree_factorization(const Field& k, const UPoly& g, int d,
                                                     std::mt19937_64& rng) {
  if (deg(g) == d) return {monic(k, g)};
  for (;;) {
    UPoly a(static_cast<std::size_t>(deg(g)), k.zero());
    for (auto& c : a) c.v = static_cast<std::uint32_t>(rng() % k.q());
    trim(a);
    if (deg(a) <= 0) continue;
    UPoly b;
    if (k.p() == 2) {
      // Absolute trace map from F_{q^d} to F_2.
      UPoly t = mod(k, a, g), acc = t;
      for (int i = 1; i < k.m() * d; ++i) {
        t = mulmod(k, t, t, g);
        acc = add(k, acc, t);
      }
      b = acc;
    } else {
      UPoly t = mod(k, a, g), nrm = t;
      for (int i = 1; i < d; ++i) {
        t = powmod(k, t, k.q(), g);
        nrm = mulmod(k, nrm, t, g);
      }
      b = sub(k, powmod(k, nrm, (k.q() - 1) / 2, g), constant(k.one()));
    }
    UPoly h = gcd(k, g, b);
    if (deg(h) <= 0 || deg(h) == deg(g)) continue;
    auto left = equal_degree_factorization(k, h, d, rng);
    auto right = equal_degree_factorization(k, exact_div(k, g, h), d, rng);
    left.insert(left.end(), right.begin(), right.end());
    return left;
  }
}

// Complete factorization into monic irreducibles, sorted by degree then
// coefficients; the leading coefficient is dropped.
inline std::vector<Factor> factor(const Field& k, const UPoly& f) {
  require(!f.empty(), ErrorCode::kInvalidArgument, "factorization of the zero polynomial");
  std::mt19937_64 rng(0x5eed);
  std::vector<Factor> out;
  for (auto& [part, mult] : squarefree_decomposition(k, f))
    for (auto& grp : distinct_degree_factorization(k, part))
      for (auto& h : equal_degree_factorization(k, grp.product, grp.degree, rng))
        out.push_back({h, mult});
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
    if (a.poly.size() != b.poly.size()) return a.poly.size() < b.poly.size();
    if (a.poly != b.poly)
      return std::lexicographical_compare(a.poly.rbegin(), a.poly.rend(), b.poly.rbegin(), b.poly.rend());
    return a.multiplicity < b.multiplicity;
  });
  return out;
}

}  // namespace upoly
}  // namespace resform

#endif  // RESFORM_UPOLY_HPP_
