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

#ifndef RESFORM_RING_HPP_
#define RESFORM_RING_HPP_

#include <concepts>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "resform/error.hpp"

namespace resform {

// A coefficient ring is a small descriptor object; elements are plain values
// and every operation goes through the descriptor.
template <class R>
concept CoefficientRing = requires(const R& r, typename R::Elem a, long long n) {
  { r.zero() } -> std::same_as<typename R::Elem>;
  { r.one() } -> std::same_as<typename R::Elem>;
  { r.from_int(n) } -> std::same_as<typename R::Elem>;
  { r.add(a, a) } -> std::same_as<typename R::Elem>;
  { r.sub(a, a) } -> std::same_as<typename R::Elem>;
  { r.mul(a, a) } -> std::same_as<typename R::Elem>;
  { r.neg(a) } -> std::same_as<typename R::Elem>;
  { r.is_zero(a) } -> std::same_as<bool>;
  { r.is_unit(a) } -> std::same_as<bool>;
  { r.inv(a) } -> std::same_as<typename R::Elem>;
  { r.to_string(a) } -> std::same_as<std::string>;
  { a == a } -> std::same_as<bool>;
  { r == r } -> std::same_as<bool>;
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorCode::kOverflow, "int64 addition");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) fail(ErrorCode::kOverflow, "int64 subtraction");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorCode::kOverflow, "int64 multiplication");
  return r;
}

inline std::int64_t checked_pow(std::int64_t base, unsigned exp) {
  std::int64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

// The integers, with overflow turned into an error instead of wrapping.
class IntegerRing {
 public:
  using Elem = std::int64_t;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long long n) const { return n; }
  Elem add(Elem a, Elem b) const { return checked_add(a, b); }
  Elem sub(Elem a, Elem b) const { return checked_sub(a, b); }
  Elem mul(Elem a, Elem b) const { return checked_mul(a, b); }
  Elem neg(Elem a) const { return checked_sub(0, a); }
  bool is_zero(Elem a) const { return a == 0; }
  bool is_unit(Elem a) const { return a == 1 || a == -1; }
  Elem inv(Elem a) const {
    require(is_unit(a), ErrorCode::kNonUnit, std::to_string(a) + " is not a unit in Z");
    return a;
  }
  std::string to_string(Elem a) const { return std::to_string(a); }
  bool operator==(const IntegerRing&) const { return true; }
};

template <class E>
using Matrix = std::vector<std::vector<E>>;

template <class R>
Matrix<typename R::Elem> zero_matrix(const R& ring, std::size_t rows, std::size_t cols) {
  return Matrix<typename R::Elem>(rows, std::vector<typename R::Elem>(cols, ring.zero()));
}

template <class R>
Matrix<typename R::Elem> identity_matrix(const R& ring, std::size_t n) {
  auto m = zero_matrix(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = ring.one();
  return m;
}

template <class E>
Matrix<E> transpose(const Matrix<E>& a) {
  if (a.empty()) return {};
  Matrix<E> t(a[0].size(), std::vector<E>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

template <class R>
Matrix<typename R::Elem> mat_mul(const R& ring, const Matrix<typename R::Elem>& a,
                                 const Matrix<typename R::Elem>& b) {
  const std::size_t n = a.size();
  const std::size_t k = b.size();
  const std::size_t m = k == 0 ? 0 : b[0].size();
  auto c = zero_matrix(ring, n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (ring.is_zero(a[i][l])) continue;
      for (std::size_t j = 0; j < m; ++j)
        c[i][j] = ring.add(c[i][j], ring.mul(a[i][l], b[l][j]));
    }
  return c;
}

template <class R>
std::vector<typename R::Elem> mat_vec(const R& ring, const Matrix<typename R::Elem>& a,
                                      const std::vector<typename R::Elem>& v) {
  std::vector<typename R::Elem> out(a.size(), ring.zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!ring.is_zero(v[j])) out[i] = ring.add(out[i], ring.mul(a[i][j], v[j]));
  return out;
}

template <class R>
Matrix<typename R::Elem> mat_scale(const R& ring, const Matrix<typename R::Elem>& a,
                                   const typename R::Elem& s) {
  auto out = a;
  for (auto& row : out)
    for (auto& x : row) x = ring.mul(x, s);
  return out;
}

template <class R>
Matrix<typename R::Elem> kronecker(const R& ring, const Matrix<typename R::Elem>& a,
                                   const Matrix<typename R::Elem>& b) {
  const std::size_t ra = a.size(), rb = b.size();
  const std::size_t ca = ra ? a[0].size() : 0, cb = rb ? b[0].size() : 0;
  auto out = zero_matrix(ring, ra * rb, ca * cb);
  for (std::size_t i = 0; i < ra; ++i)
    for (std::size_t j = 0; j < ca; ++j)
      for (std::size_t k = 0; k < rb; ++k)
        for (std::size_t l = 0; l < cb; ++l)
          out[i * rb + k][j * cb + l] = ring.mul(a[i][j], b[k][l]);
  return out;
}

namespace detail {

template <class R>
typename R::Elem laplace_det(const R& ring, const Matrix<typename R::Elem>& a);

// Elimination with unit pivots; when a column has no unit, the remaining
// block is expanded by cofactors instead.
template <class R>
typename R::Elem det_impl(const R& ring, Matrix<typename R::Elem> a) {
  using E = typename R::Elem;
  const std::size_t n = a.size();
  E acc = ring.one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = n;
    for (std::size_t r = col; r < n; ++r)
      if (ring.is_unit(a[r][col])) {
        piv = r;
        break;
      }
    if (piv == n) {
      Matrix<E> rest(n - col, std::vector<E>(n - col));
      for (std::size_t i = col; i < n; ++i)
        for (std::size_t j = col; j < n; ++j) rest[i - col][j - col] = a[i][j];
      return ring.mul(acc, laplace_det(ring, rest));
    }
    if (piv != col) {
      std::swap(a[piv], a[col]);
      acc = ring.neg(acc);
    }
    acc = ring.mul(acc, a[col][col]);
    const E pinv = ring.inv(a[col][col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (ring.is_zero(a[r][col])) continue;
      const E factor = ring.mul(a[r][col], pinv);
      for (std::size_t j = col; j < n; ++j)
        a[r][j] = ring.sub(a[r][j], ring.mul(factor, a[col][j]));
    }
  }
  return acc;
}

template <class R>
typename R::Elem laplace_det(const R& ring, const Matrix<typename R::Elem>& a) {
  using E = typename R::Elem;
  const std::size_t n = a.size();
  if (n == 0) return ring.one();
  if (n == 1) return a[0][0];
  // Expand along the column with the most zeros.
  std::size_t best = 0, best_zeros = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t z = 0;
    for (std::size_t i = 0; i < n; ++i) z += ring.is_zero(a[i][j]) ? 1 : 0;
    if (j == 0 || z > best_zeros) {
      best = j;
      best_zeros = z;
    }
  }
  E total = ring.zero();
  for (std::size_t i = 0; i < n; ++i) {
    if (ring.is_zero(a[i][best])) continue;
    Matrix<E> minor;
    minor.reserve(n - 1);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == i) continue;
      std::vector<E> row;
      row.reserve(n - 1);
      for (std::size_t c = 0; c < n; ++c)
        if (c != best) row.push_back(a[r][c]);
      minor.push_back(std::move(row));
    }
    E term = ring.mul(a[i][best], det_impl(ring, std::move(minor)));
    total = ((i + best) % 2 == 0) ? ring.add(total, term) : ring.sub(total, term);
  }
  return total;
}

}  // namespace detail

template <class R>
typename R::Elem determinant(const R& ring, const Matrix<typename R::Elem>& a) {
  for (const auto& row : a)
    require(row.size() == a.size(), ErrorCode::kInvalidArgument, "determinant of a non-square matrix");
  return detail::det_impl(ring, a);
}

// Solves a x = b when a is square with unit determinant. Returns false if the
// elimination meets a column without a unit pivot.
template <class R>
bool solve_linear(const R& ring, Matrix<typename R::Elem> a, std::vector<typename R::Elem> b,
                  std::vector<typename R::Elem>& x) {
  using E = typename R::Elem;
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = n;
    for (std::size_t r = col; r < n; ++r)
      if (ring.is_unit(a[r][col])) {
        piv = r;
        break;
      }
    if (piv == n) return false;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    const E pinv = ring.inv(a[col][col]);
    for (std::size_t j = col; j < n; ++j) a[col][j] = ring.mul(a[col][j], pinv);
    b[col] = ring.mul(b[col], pinv);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || ring.is_zero(a[r][col])) continue;
      const E factor = a[r][col];
      for (std::size_t j = col; j < n; ++j) a[r][j] = ring.sub(a[r][j], ring.mul(factor, a[col][j]));
      b[r] = ring.sub(b[r], ring.mul(factor, b[col]));
    }
  }
  x = std::move(b);
  return true;
}

template <class R>
typename R::Elem ring_pow(const R& ring, typename R::Elem base, unsigned long long exp) {
  auto result = ring.one();
  while (exp > 0) {
    if (exp & 1U) result = ring.mul(result, base);
    exp >>= 1U;
    if (exp) base = ring.mul(base, base);
  }
  return result;
}

}  // namespace resform

#endif  // RESFORM_RING_HPP_
