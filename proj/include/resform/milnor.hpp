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

#ifndef RESFORM_MILNOR_HPP_
#define RESFORM_MILNOR_HPP_

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "resform/error.hpp"
#include "resform/gfield.hpp"
#include "resform/mpoly.hpp"
#include "resform/ring.hpp"
#include "resform/upoly.hpp"
#include "resform/wittring.hpp"

namespace resform {

// Order of basis listings: by total degree, then x_0 before x_1 within a
// degree (so 1, x, y, xy, ...).
struct BasisOrderLess {
  bool operator()(const Exponent& a, const Exponent& b) const {
    const int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a > b;
  }
};

// All exponents in n variables of total degree < bound, descending graded-lex.
inline std::vector<Exponent> monomials_below(int n, int bound) {
  std::vector<Exponent> out;
  if (bound <= 0) return out;
  Exponent e(n, 0);
  // Enumerate by recursion over the first variable.
  auto rec = [&](auto&& self, int i, int remaining) -> void {
    if (i == n - 1 || n == 0) {
      if (n > 0) {
        for (int k = 0; k <= remaining; ++k) {
          e[i] = k;
          out.push_back(e);
        }
        e[i] = 0;
      } else {
        out.push_back(e);
      }
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      e[i] = k;
      self(self, i + 1, remaining - k);
    }
    e[i] = 0;
  };
  rec(rec, 0, bound - 1);
  std::sort(out.begin(), out.end(), [](const Exponent& a, const Exponent& b) { return GradedLexLess()(b, a); });
  return out;
}

namespace detail {

// Online reduced row echelon form over a ring whose non-units form an ideal
// (a field or W_3). Pivots are taken at the first unit entry in column order.
template <CoefficientRing R>
class Echelon {
 public:
  using Elem = typename R::Elem;

  Echelon(const R& ring, std::size_t ncols) : ring_(ring), ncols_(ncols), pivot_row_(ncols, -1) {}

  void insert(std::vector<Elem> row) {
    reduce(row);
    std::size_t c = 0;
    while (c < ncols_ && !ring_.is_unit(row[c])) ++c;
    if (c == ncols_) {
      if (!is_zero_row(row)) leftovers_.push_back(std::move(row));
      return;
    }
    const Elem inv = ring_.inv(row[c]);
    for (auto& x : row) x = ring_.mul(x, inv);
    for (auto& other : rows_) {
      if (ring_.is_zero(other[c])) continue;
      const Elem f = other[c];
      for (std::size_t j = 0; j < ncols_; ++j)
        if (!ring_.is_zero(row[j])) other[j] = ring_.sub(other[j], ring_.mul(f, row[j]));
    }
    pivot_row_[c] = static_cast<int>(rows_.size());
    pivot_cols_.push_back(c);
    rows_.push_back(std::move(row));
  }

  void reduce(std::vector<Elem>& row) const {
    for (std::size_t c : pivot_cols_) {
      if (ring_.is_zero(row[c])) continue;
      const Elem f = row[c];
      const auto& p = rows_[pivot_row_[c]];
      for (std::size_t j = 0; j < ncols_; ++j)
        if (!ring_.is_zero(p[j])) row[j] = ring_.sub(row[j], ring_.mul(f, p[j]));
    }
  }

  // True when every row that never produced a pivot now reduces to zero.
  bool leftovers_vanish() const {
    for (auto row : leftovers_) {
      reduce(row);
      if (!is_zero_row(row)) return false;
    }
    return true;
  }

  bool is_pivot(std::size_t c) const { return pivot_row_[c] >= 0; }
  const std::vector<Elem>& pivot_row(std::size_t c) const { return rows_[pivot_row_[c]]; }

 private:
  bool is_zero_row(const std::vector<Elem>& row) const {
    return std::all_of(row.begin(), row.end(), [&](const Elem& x) { return ring_.is_zero(x); });
  }

  const R& ring_;
  std::size_t ncols_;
  std::vector<int> pivot_row_;
  std::vector<std::size_t> pivot_cols_;
  std::vector<std::vector<Elem>> rows_;
  std::vector<std::vector<Elem>> leftovers_;
};

// Feeds the truncations (below bound) of m * g for all monomials m.
template <CoefficientRing R>
void feed_ideal_rows(Echelon<R>& ech, const std::vector<MultiPoly<R>>& gens, int n, int bound,
                     const std::vector<Exponent>& cols, const std::map<Exponent, std::size_t, GradedLexLess>& index) {
  const R* ring = nullptr;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    ring = &g.ring();
    const int low = g.low_degree();
    for (const auto& m : cols) {
      if (total_degree(m) + low >= bound) continue;
      std::vector<typename R::Elem> row(cols.size(), ring->zero());
      bool any = false;
      for (const auto& [e, c] : g.terms()) {
        Exponent t(n);
        int d = 0;
        for (int i = 0; i < n; ++i) {
          t[i] = e[i] + m[i];
          d += t[i];
        }
        if (d >= bound) continue;
        row[index.at(t)] = c;
        any = true;
      }
      if (any) ech.insert(std::move(row));
    }
  }
}

}  // namespace detail

// Smallest D0 with every monomial of degree D0 in J + m^{D0+1}; then m^{D0}
// lies in J in the completed local ring at the origin.
inline int degree_bound(const MultiPoly<Field>& f, int cap = 24) {
  require(f.degree() > 0, ErrorCode::kInvalidArgument, "degree bound of a constant polynomial");
  const int n = f.n_vars();
  const auto gens = partials(f);
  const Field& k = f.ring();
  for (int d0 = 0; d0 <= cap; ++d0) {
    const auto cols = monomials_below(n, d0 + 1);
    std::map<Exponent, std::size_t, GradedLexLess> index;
    for (std::size_t i = 0; i < cols.size(); ++i) index.emplace(cols[i], i);
    detail::Echelon<Field> ech(k, cols.size());
    detail::feed_ideal_rows(ech, gens, n, d0 + 1, cols, index);
    bool ok = true;
    for (std::size_t c = 0; c < cols.size() && ok; ++c) {
      if (total_degree(cols[c]) != d0) continue;
      if (!ech.is_pivot(c)) {
        ok = false;
        break;
      }
      const auto& row = ech.pivot_row(c);
      for (std::size_t j = 0; j < cols.size(); ++j)
        if (j != c && !k.is_zero(row[j])) {
          ok = false;
          break;
        }
    }
    if (ok) return d0;
  }
  fail(ErrorCode::kNotIsolated, "Jacobian ideal is not primary to the origin within degree " + std::to_string(cap));
}

template <CoefficientRing R>
class MilnorAlgebra {
 public:
  using Elem = typename R::Elem;
  using Vec = std::vector<Elem>;

  const R& ring() const { return ring_; }
  int n_vars() const { return n_; }
  // Truncation degree for the local presentation; 0 for the global one.
  int truncation() const { return d_; }
  bool is_local() const { return local_; }
  int mu() const { return static_cast<int>(basis_.size()); }
  const std::vector<Exponent>& basis() const { return basis_; }
  const Vec& one() const { return one_; }
  const Matrix<Elem>& multiplication_matrix(int i) const { return mult_.at(i); }

  std::optional<std::size_t> basis_index(const Exponent& e) const {
    auto it = basis_index_.find(e);
    if (it == basis_index_.end()) return std::nullopt;
    return it->second;
  }

  Vec normal_form(const Exponent& e) const {
    require(static_cast<int>(e.size()) == n_, ErrorCode::kInvalidArgument, "exponent length mismatch");
    auto it = table_.find(e);
    if (it != table_.end()) return it->second;
    if (local_) {
      require(total_degree(e) >= d_, ErrorCode::kInternal, "missing normal form");
      return Vec(basis_.size(), ring_.zero());
    }
    // Global univariate: walk up from the largest tabulated power.
    Vec v = table_.rbegin()->second;
    for (int k = total_degree(table_.rbegin()->first); k < e[0]; ++k) v = mat_vec(ring_, mult_[0], v);
    return v;
  }

  Vec normal_form(const MultiPoly<R>& g) const {
    Vec out(basis_.size(), ring_.zero());
    for (const auto& [e, c] : g.terms()) {
      const Vec v = normal_form(e);
      for (std::size_t i = 0; i < out.size(); ++i) out[i] = ring_.add(out[i], ring_.mul(c, v[i]));
    }
    return out;
  }

  Vec multiply(const Vec& a, const Vec& b) const {
    Vec out(basis_.size(), ring_.zero());
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (ring_.is_zero(a[i])) continue;
      // basis_[i] as a product of variables applied to b.
      Vec t = b;
      for (int v = 0; v < n_; ++v)
        for (int k = 0; k < basis_[i][v]; ++k) t = mat_vec(ring_, mult_[v], t);
      for (std::size_t j = 0; j < out.size(); ++j) out[j] = ring_.add(out[j], ring_.mul(a[i], t[j]));
    }
    return out;
  }

  template <CoefficientRing S>
  friend MilnorAlgebra<S> milnor_algebra_truncated(const MultiPoly<S>& f, int truncation);
  template <CoefficientRing S>
  friend MilnorAlgebra<S> milnor_algebra_global(const MultiPoly<S>& f);

 private:
  explicit MilnorAlgebra(const R& ring) : ring_(ring) {}

  void finish() {
    for (std::size_t i = 0; i < basis_.size(); ++i) basis_index_.emplace(basis_[i], i);
    mult_.assign(n_, zero_matrix(ring_, basis_.size(), basis_.size()));
    for (int v = 0; v < n_; ++v)
      for (std::size_t j = 0; j < basis_.size(); ++j) {
        Exponent e = basis_[j];
        ++e[v];
        const Vec col = normal_form(e);
        for (std::size_t i = 0; i < basis_.size(); ++i) mult_[v][i][j] = col[i];
      }
    one_ = basis_.empty() ? Vec{} : normal_form(Exponent(n_, 0));
  }

  R ring_;
  int n_ = 0;
  int d_ = 0;
  bool local_ = true;
  std::vector<Exponent> basis_;
  std::map<Exponent, std::size_t> basis_index_;
  std::map<Exponent, Vec, GradedLexLess> table_;
  std::vector<Matrix<Elem>> mult_;
  Vec one_;
};

// R[x]/(J + m^D) for an explicit truncation degree D.
template <CoefficientRing R>
MilnorAlgebra<R> milnor_algebra_truncated(const MultiPoly<R>& f, int truncation) {
  using Elem = typename R::Elem;
  const R& ring = f.ring();
  const int n = f.n_vars();
  MilnorAlgebra<R> a(ring);
  a.n_ = n;
  a.d_ = truncation;
  a.local_ = true;
  const auto cols = monomials_below(n, truncation);
  std::map<Exponent, std::size_t, GradedLexLess> index;
  for (std::size_t i = 0; i < cols.size(); ++i) index.emplace(cols[i], i);
  detail::Echelon<R> ech(ring, cols.size());
  detail::feed_ideal_rows(ech, partials(f), n, truncation, cols, index);
  require(ech.leftovers_vanish(), ErrorCode::kNotFlat, "the truncated Milnor algebra is not free");
  std::vector<std::size_t> basis_cols;
  for (std::size_t c = 0; c < cols.size(); ++c)
    if (!ech.is_pivot(c)) basis_cols.push_back(c);
  std::sort(basis_cols.begin(), basis_cols.end(),
            [&](std::size_t x, std::size_t y) { return BasisOrderLess()(cols[x], cols[y]); });
  for (std::size_t c : basis_cols) a.basis_.push_back(cols[c]);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    std::vector<Elem> v(basis_cols.size(), ring.zero());
    if (ech.is_pivot(c)) {
      const auto& row = ech.pivot_row(c);
      for (std::size_t i = 0; i < basis_cols.size(); ++i) v[i] = ring.neg(row[basis_cols[i]]);
    } else {
      const auto pos = std::find(basis_cols.begin(), basis_cols.end(), c) - basis_cols.begin();
      v[pos] = ring.one();
    }
    a.table_.emplace(cols[c], std::move(v));
  }
  a.finish();
  return a;
}

inline MultiPoly<Field> reduce_mod2(const GaloisRing& gr, const MultiPoly<GaloisRing>& f) {
  return map_coefficients(f, gr.residue_field(), [&](const GaloisElem& c) { return gr.reduce(c); });
}

inline MultiPoly<GaloisRing> teichmuller_lift(const GaloisRing& gr, const MultiPoly<Field>& f) {
  return map_coefficients(f, gr, [&](FieldElem c) { return gr.teichmuller(c); });
}

// The local Milnor algebra at the origin. Over a field the truncation is the
// degree bound; over W_3 it is three times the bound of the reduction.
template <CoefficientRing R>
MilnorAlgebra<R> milnor_algebra(const MultiPoly<R>& f, int cap = 24) {
  if constexpr (std::is_same_v<R, GaloisRing>) {
    const GaloisRing& gr = f.ring();
    const auto fbar = reduce_mod2(gr, f);
    const int d0 = degree_bound(fbar, cap);
    auto a = milnor_algebra_truncated(f, 3 * d0);
    const auto abar = milnor_algebra_truncated(fbar, d0);
    require(a.basis() == abar.basis(), ErrorCode::kNotFlat, "basis differs from the basis mod 2");
    for (int v = 0; v < f.n_vars(); ++v)
      for (int i = 0; i < a.mu(); ++i)
        for (int j = 0; j < a.mu(); ++j)
          require(gr.reduce(a.multiplication_matrix(v)[i][j]) == abar.multiplication_matrix(v)[i][j],
                  ErrorCode::kNotFlat, "structure constants differ mod 2");
    return a;
  } else {
    return milnor_algebra_truncated(f, degree_bound(f, cap));
  }
}

// R[x]/(f') for univariate f whose derivative has a unit leading coefficient;
// this is the sum of the local algebras over all critical points.
template <CoefficientRing R>
MilnorAlgebra<R> milnor_algebra_global(const MultiPoly<R>& f) {
  using Elem = typename R::Elem;
  require(f.n_vars() == 1, ErrorCode::kInvalidArgument, "global Milnor algebra needs one variable");
  const R& ring = f.ring();
  const auto df = partial(f, 0);
  require(!df.is_zero(), ErrorCode::kDegenerateFiber, "derivative vanishes identically");
  const int mu = df.degree();
  const Elem lead = df.coeff(Exponent{mu});
  require(ring.is_unit(lead), ErrorCode::kNonUnit, "derivative has a non-unit leading coefficient");
  std::vector<Elem> g(mu + 1, ring.zero());
  for (const auto& [e, c] : df.terms()) g[e[0]] = c;
  const Elem lead_inv = ring.inv(lead);
  MilnorAlgebra<R> a(ring);
  a.n_ = 1;
  a.d_ = 0;
  a.local_ = false;
  for (int i = 0; i < mu; ++i) a.basis_.push_back(Exponent{i});
  // x^k mod f' for k < 2 mu, by the recurrence x^{k} = x * x^{k-1}.
  std::vector<Elem> cur(mu, ring.zero());
  for (int k = 0; k < std::max(2 * mu - 1, 1); ++k) {
    std::vector<Elem> v(mu, ring.zero());
    if (k < mu) {
      v[k] = ring.one();
    } else {
      // shift cur by one and reduce the overflow using x^mu = -(g/lead).
      const Elem top = cur[mu - 1];
      for (int i = mu - 1; i >= 1; --i) v[i] = cur[i - 1];
      v[0] = ring.zero();
      for (int i = 0; i < mu; ++i) v[i] = ring.sub(v[i], ring.mul(top, ring.mul(g[i], lead_inv)));
    }
    cur = v;
    if (mu > 0) a.table_.emplace(Exponent{k}, v);
  }
  if (mu == 0) a.table_.emplace(Exponent{0}, std::vector<Elem>{});
  a.finish();
  return a;
}

struct ClosedPoint {
  UPoly factor;      // monic irreducible factor of df/dx
  int degree = 0;    // residue degree of the point
  int multiplicity = 0;  // local Milnor number at each geometric point
  bool at_origin = false;
};

struct FiberProfile {
  FieldElem parameter;
  std::vector<ClosedPoint> points;
  int total = 0;  // sum of degree * multiplicity over closed points
};

// Critical points of x -> f(x, a) for each parameter a, where family has
// variables (x, a).
inline std::vector<FiberProfile> family_milnor_profile(const MultiPoly<Field>& family,
                                                       const std::vector<FieldElem>& values) {
  require(family.n_vars() == 2, ErrorCode::kInvalidArgument, "family must be in variables (x, a)");
  const Field& k = family.ring();
  std::vector<FiberProfile> out;
  for (FieldElem a : values) {
    UPoly fiber;
    for (const auto& [e, c] : family.terms()) {
      const auto idx = static_cast<std::size_t>(e[0]);
      if (fiber.size() <= idx) fiber.resize(idx + 1, k.zero());
      fiber[idx] = k.add(fiber[idx], k.mul(c, k.pow(a, e[1])));
    }
    upoly::trim(fiber);
    const UPoly df = upoly::derivative(k, fiber);
    require(!df.empty(), ErrorCode::kDegenerateFiber, "df/dx vanishes identically at a = " + k.to_string(a));
    FiberProfile prof;
    prof.parameter = a;
    for (const auto& fac : upoly::factor(k, df)) {
      ClosedPoint pt;
      pt.factor = fac.poly;
      pt.degree = upoly::deg(fac.poly);
      pt.multiplicity = fac.multiplicity;
      pt.at_origin = pt.degree == 1 && fac.poly[0].v == 0;
      prof.total += pt.degree * pt.multiplicity;
      prof.points.push_back(std::move(pt));
    }
    out.push_back(std::move(prof));
  }
  return out;
}

}  // namespace resform

#endif  // RESFORM_MILNOR_HPP_
