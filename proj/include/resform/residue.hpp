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

#ifndef RESFORM_RESIDUE_HPP_
#define RESFORM_RESIDUE_HPP_

#include <algorithm>
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "resform/error.hpp"
#include "resform/gfield.hpp"
#include "resform/milnor.hpp"
#include "resform/mpoly.hpp"
#include "resform/ring.hpp"
#include "resform/wittring.hpp"

namespace resform {

namespace detail {

// Cofactor expansion of a matrix of polynomials, dropping after every
// product the terms that vanish in A (x) A anyway.
template <CoefficientRing R>
MultiPoly<R> det_pruned(const std::vector<std::vector<MultiPoly<R>>>& a,
                        const std::function<MultiPoly<R>(const MultiPoly<R>&)>& prune) {
  const std::size_t n = a.size();
  if (n == 1) return prune(a[0][0]);
  MultiPoly<R> total(a[0][0].ring(), a[0][0].n_vars());
  for (std::size_t j = 0; j < n; ++j) {
    if (a[0][j].is_zero()) continue;
    std::vector<std::vector<MultiPoly<R>>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<MultiPoly<R>> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(a[r][c]);
      minor.push_back(std::move(row));
    }
    const auto term = prune(a[0][j] * det_pruned(minor, prune));
    total = (j % 2 == 0) ? total + term : total - term;
  }
  return total;
}

}  // namespace detail

// C[e][e'] = coefficient of e(x) (x) e'(y) in the reduction of
// det(divided_difference(df/dx_i, j)) to A (x) A.
template <CoefficientRing R>
Matrix<typename R::Elem> bezoutian(const MilnorAlgebra<R>& alg, const MultiPoly<R>& f,
                                   SubstitutionOrder order = SubstitutionOrder::kForward) {
  using Elem = typename R::Elem;
  const R& ring = f.ring();
  const int n = f.n_vars();
  const int mu = alg.mu();
  auto c = zero_matrix(ring, mu, mu);
  if (mu == 0) return c;
  if (n == 0) return c;
  const auto d = partials(f);
  std::vector<std::vector<MultiPoly<R>>> entries(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) entries[i].push_back(divided_difference(d[i], j, order));
  const int bound = alg.is_local() ? alg.truncation() : 0;
  std::function<MultiPoly<R>(const MultiPoly<R>&)> prune = [&](const MultiPoly<R>& p) {
    if (bound == 0) return p;
    MultiPoly<R> out(ring, 2 * n);
    for (const auto& [e, coef] : p.terms()) {
      int dx = 0, dy = 0;
      for (int i = 0; i < n; ++i) {
        dx += e[i];
        dy += e[n + i];
      }
      if (dx < bound && dy < bound) out.add_term(e, coef);
    }
    return out;
  };
  const auto delta = detail::det_pruned(entries, prune);
  for (const auto& [e, coef] : delta.terms()) {
    const Exponent ex(e.begin(), e.begin() + n), ey(e.begin() + n, e.end());
    const auto vx = alg.normal_form(ex);
    const auto vy = alg.normal_form(ey);
    for (int a = 0; a < mu; ++a) {
      if (ring.is_zero(vx[a])) continue;
      const Elem ca = ring.mul(coef, vx[a]);
      for (int b = 0; b < mu; ++b)
        if (!ring.is_zero(vy[b])) c[a][b] = ring.add(c[a][b], ring.mul(ca, vy[b]));
    }
  }
  return c;
}

// The functional lambda on A with (lambda (x) id)(Delta) = 1.
template <CoefficientRing R>
std::vector<typename R::Elem> residue_functional(const MilnorAlgebra<R>& alg, const Matrix<typename R::Elem>& c) {
  std::vector<typename R::Elem> lambda;
  if (alg.mu() == 0) return lambda;
  require(solve_linear(alg.ring(), transpose(c), alg.one(), lambda), ErrorCode::kSingularBezoutian,
          "the Bezoutian matrix is not invertible");
  return lambda;
}

template <CoefficientRing R>
std::vector<typename R::Elem> residue_functional(const MilnorAlgebra<R>& alg, const MultiPoly<R>& f,
                                                 SubstitutionOrder order = SubstitutionOrder::kForward) {
  return residue_functional(alg, bezoutian(alg, f, order));
}

template <CoefficientRing R>
typename R::Elem apply_functional(const R& ring, const std::vector<typename R::Elem>& lambda,
                                  const std::vector<typename R::Elem>& v) {
  auto acc = ring.zero();
  for (std::size_t i = 0; i < v.size(); ++i) acc = ring.add(acc, ring.mul(lambda[i], v[i]));
  return acc;
}

template <CoefficientRing R>
struct GramForm {
  using Elem = typename R::Elem;
  R ring;
  int n_vars = 0;
  std::vector<Exponent> basis;
  Matrix<Elem> matrix;
  Elem alpha;  // the differential is alpha * dt
  std::shared_ptr<const MilnorAlgebra<R>> algebra;  // absent for tensor products
};

template <CoefficientRing R>
void check_gram_invariants(const GramForm<R>& g) {
  const R& ring = g.ring;
  const std::size_t mu = g.basis.size();
  for (std::size_t i = 0; i < mu; ++i)
    for (std::size_t j = 0; j < mu; ++j)
      require(g.matrix[i][j] == g.matrix[j][i], ErrorCode::kInternal, "residue form is not symmetric");
  require(ring.is_unit(determinant(ring, g.matrix)), ErrorCode::kInternal, "residue form is degenerate");
  if (!g.algebra) return;
  for (int v = 0; v < g.n_vars; ++v) {
    const auto& m = g.algebra->multiplication_matrix(v);
    require(mat_mul(ring, transpose(m), g.matrix) == mat_mul(ring, g.matrix, m), ErrorCode::kInternal,
            "residue form is not equivariant");
  }
}

// Gram[e][e'] = alpha^n lambda(e e').
template <CoefficientRing R>
GramForm<R> gram_matrix(std::shared_ptr<const MilnorAlgebra<R>> alg, const MultiPoly<R>& f,
                        const typename R::Elem& alpha, SubstitutionOrder order = SubstitutionOrder::kForward) {
  const R& ring = f.ring();
  require(ring.is_unit(alpha), ErrorCode::kNonUnitScale, "scale " + ring.to_string(alpha) + " is not a unit");
  const auto lambda = residue_functional(*alg, f, order);
  const int mu = alg->mu();
  GramForm<R> g{ring, f.n_vars(), alg->basis(), zero_matrix(ring, mu, mu), alpha, alg};
  const auto scale = ring_pow(ring, alpha, static_cast<unsigned long long>(f.n_vars()));
  for (int a = 0; a < mu; ++a)
    for (int b = a; b < mu; ++b) {
      Exponent e = alg->basis()[a];
      for (int i = 0; i < f.n_vars(); ++i) e[i] += alg->basis()[b][i];
      const auto val = ring.mul(scale, apply_functional(ring, lambda, alg->normal_form(e)));
      g.matrix[a][b] = val;
      g.matrix[b][a] = val;
    }
  check_gram_invariants(g);
  return g;
}

template <CoefficientRing R>
GramForm<R> gram_matrix(const MultiPoly<R>& f, const typename R::Elem& alpha) {
  auto alg = std::make_shared<const MilnorAlgebra<R>>(milnor_algebra(f));
  return gram_matrix(alg, f, alpha);
}

template <CoefficientRing R>
typename R::Elem discriminant(const GramForm<R>& g) {
  return determinant(g.ring, g.matrix);
}

struct SquareClass {
  int legendre = 0;
  FieldElem representative;
};

inline SquareClass disc_square_class(const GramForm<Field>& g, long long n_sign = 0) {
  const Field& k = g.ring;
  require(k.p() != 2, ErrorCode::kEvenCharacteristic, "square classes of F_{2^m} are trivial; use a W_3 lift");
  FieldElem d = discriminant(g);
  if (n_sign % 2) d = k.neg(d);
  return {legendre(k, d), d};
}

struct WittDiscClass {
  WittSquareClass cls;
  GaloisElem representative;
};

inline WittDiscClass disc_square_class(const GramForm<GaloisRing>& g, long long n_sign = 0) {
  GaloisElem d = discriminant(g);
  if (n_sign % 2) d = g.ring.neg(d);
  return {square_class_normalize(g.ring, d), d};
}

// The form on A1 (x) A2, reindexed so the product basis is in basis order.
template <CoefficientRing R>
GramForm<R> tensor_gram(const GramForm<R>& g1, const GramForm<R>& g2) {
  require(g1.ring == g2.ring, ErrorCode::kRingMismatch, "tensor product of forms over different rings");
  require(g1.alpha == g2.alpha, ErrorCode::kRingMismatch, "tensor product of forms with different scales");
  const R& ring = g1.ring;
  const auto kron = kronecker(ring, g1.matrix, g2.matrix);
  std::vector<Exponent> prod;
  for (const auto& a : g1.basis)
    for (const auto& b : g2.basis) {
      Exponent e = a;
      e.insert(e.end(), b.begin(), b.end());
      prod.push_back(std::move(e));
    }
  std::vector<std::size_t> perm(prod.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) { return BasisOrderLess()(prod[x], prod[y]); });
  GramForm<R> out{ring, g1.n_vars + g2.n_vars, {}, zero_matrix(ring, prod.size(), prod.size()), g1.alpha, nullptr};
  for (std::size_t i = 0; i < perm.size(); ++i) {
    out.basis.push_back(prod[perm[i]]);
    for (std::size_t j = 0; j < perm.size(); ++j) out.matrix[i][j] = kron[perm[i]][perm[j]];
  }
  return out;
}

// F_{q^r} over F_q, with F_q embedded as a subfield.
class FieldExtension {
 public:
  FieldExtension(const Field& base, int r) : base_(base), big_(Field::create(base.p(), base.m() * r)), r_(r) {
    require(r >= 1, ErrorCode::kInvalidArgument, "extension degree must be >= 1");
    // Image of the generator of the base: a root of its modulus.
    const auto& mod = base.modulus();
    std::optional<FieldElem> root;
    for (FieldElem z : big_.elements()) {
      FieldElem acc = big_.zero();
      for (int i = static_cast<int>(mod.size()) - 1; i >= 0; --i) acc = big_.add(big_.mul(acc, z), big_.from_int(mod[i]));
      if (big_.is_zero(acc)) {
        root = z;
        break;
      }
    }
    require(root.has_value(), ErrorCode::kInternal, "base modulus has no root in the extension");
    embed_.resize(base.q());
    back_.assign(big_.q(), -1);
    for (FieldElem a : base.elements()) {
      const auto c = base.coeffs(a);
      FieldElem img = big_.zero(), pw = big_.one();
      for (int ci : c) {
        img = big_.add(img, big_.mul(big_.from_int(ci), pw));
        pw = big_.mul(pw, *root);
      }
      embed_[a.v] = img;
      back_[img.v] = static_cast<int>(a.v);
    }
  }

  const Field& base() const { return base_; }
  const Field& extension() const { return big_; }
  int degree() const { return r_; }

  FieldElem embed(FieldElem a) const { return embed_.at(a.v); }

  FieldElem restrict(FieldElem x) const {
    const int v = back_.at(x.v);
    require(v >= 0, ErrorCode::kInternal, "element is not in the base field");
    return {static_cast<std::uint32_t>(v)};
  }

  FieldElem trace(FieldElem x) const {
    FieldElem s = big_.zero();
    for (int i = 0; i < r_; ++i) {
      s = big_.add(s, x);
      x = big_.pow(x, base_.q());
    }
    return restrict(s);
  }

  FieldElem norm(FieldElem x) const {
    unsigned long long e = 0, qi = 1;
    for (int i = 0; i < r_; ++i) {
      e += qi;
      qi *= base_.q();
    }
    return restrict(big_.pow(x, static_cast<long long>(e)));
  }

  // 1, theta, ..., theta^{r-1} with theta the generator of the big field.
  std::vector<FieldElem> power_basis() const {
    std::vector<FieldElem> b{big_.one()};
    for (int i = 1; i < r_; ++i) b.push_back(big_.mul(b.back(), big_.generator()));
    return b;
  }

  FieldElem trace_form_disc() const {
    const auto b = power_basis();
    auto m = zero_matrix(base_, r_, r_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < r_; ++j) m[i][j] = trace(big_.mul(b[i], b[j]));
    return determinant(base_, m);
  }

 private:
  Field base_;
  Field big_;
  int r_;
  std::vector<FieldElem> embed_;
  std::vector<int> back_;
};

// Class of disc(L/K)^rank * N(disc) for a form of the given rank over L.
inline SquareClass pushforward_disc(const FieldExtension& ext, FieldElem disc_over_l, int rank) {
  const Field& k = ext.base();
  require(k.p() != 2, ErrorCode::kEvenCharacteristic, "pushforward of square classes needs odd characteristic");
  const FieldElem d = k.mul(k.pow(ext.trace_form_disc(), rank), ext.norm(disc_over_l));
  return {legendre(k, d), d};
}

// The trace form Tr(B'(x, y)) written on the K-basis theta^a e_i, and its
// determinant.
inline SquareClass trace_form_disc_direct(const FieldExtension& ext, const Matrix<FieldElem>& form) {
  const Field& k = ext.base();
  const Field& l = ext.extension();
  const int r = ext.degree();
  const int rk = static_cast<int>(form.size());
  const auto b = ext.power_basis();
  auto m = zero_matrix(k, r * rk, r * rk);
  for (int a = 0; a < r; ++a)
    for (int i = 0; i < rk; ++i)
      for (int c = 0; c < r; ++c)
        for (int j = 0; j < rk; ++j)
          m[a * rk + i][c * rk + j] = ext.trace(l.mul(l.mul(b[a], b[c]), form[i][j]));
  const FieldElem d = determinant(k, m);
  return {legendre(k, d), d};
}

struct ArfReport {
  int mu = 0;
  int n_vars = 0;
  long long n_sign = 0;  // N = n mu / 2
  GaloisElem disc;
  ArfClass arf;
  GramForm<GaloisRing> gram;
};

// Arf invariant of f over F_{2^m} from the W_3 lift f_2 = [f] + 2 g.
inline ArfReport arf_invariant(const MultiPoly<Field>& f,
                               const std::optional<MultiPoly<GaloisRing>>& perturbation = std::nullopt) {
  const Field& k = f.ring();
  require(k.p() == 2, ErrorCode::kOddCharacteristic, "Arf invariants are defined in characteristic 2");
  const GaloisRing gr = GaloisRing::create(k);
  auto lift = teichmuller_lift(gr, f);
  if (perturbation) {
    require(perturbation->n_vars() == f.n_vars(), ErrorCode::kInvalidArgument, "perturbation variable count");
    lift = lift + perturbation->scaled(gr.from_int(2));
  }
  auto alg = std::make_shared<const MilnorAlgebra<GaloisRing>>(milnor_algebra(lift));
  const int mu = alg->mu();
  const long long prod = static_cast<long long>(f.n_vars()) * mu;
  require(prod % 2 == 0, ErrorCode::kOddProduct,
          "n * mu = " + std::to_string(prod) + " is odd; the Milnor number must be even in odd dimension");
  auto g = gram_matrix(alg, lift, gr.one());
  const GaloisElem det = discriminant(g);
  const ArfClass arf = arf_from_unit(gr, det, prod / 2);
  return {mu, f.n_vars(), prod / 2, det, arf, std::move(g)};
}

}  // namespace resform

#endif  // RESFORM_RESIDUE_HPP_
