#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ammann/golden.hpp"

namespace ammann {

/// Fixed-size exact vector over Q(phi).
template <std::size_t N>
struct GVec {
  std::array<Golden, N> c{};

  static constexpr std::size_t size() { return N; }

  Golden& operator[](std::size_t i) { return c[i]; }
  const Golden& operator[](std::size_t i) const { return c[i]; }

  auto begin() { return c.begin(); }
  auto end() { return c.end(); }
  auto begin() const { return c.begin(); }
  auto end() const { return c.end(); }

  bool is_zero() const {
    for (const auto& x : c)
      if (!x.is_zero()) return false;
    return true;
  }

  GVec operator-() const {
    GVec r;
    for (std::size_t i = 0; i < N; ++i) r.c[i] = -c[i];
    return r;
  }
  GVec& operator+=(const GVec& o) {
    for (std::size_t i = 0; i < N; ++i) c[i] += o.c[i];
    return *this;
  }
  GVec& operator-=(const GVec& o) {
    for (std::size_t i = 0; i < N; ++i) c[i] -= o.c[i];
    return *this;
  }
  GVec& operator*=(const Golden& s) {
    for (auto& x : c) x *= s;
    return *this;
  }
  friend GVec operator+(GVec x, const GVec& y) { return x += y; }
  friend GVec operator-(GVec x, const GVec& y) { return x -= y; }
  friend GVec operator*(GVec x, const Golden& s) { return x *= s; }
  friend GVec operator*(const Golden& s, GVec x) { return x *= s; }

  friend bool operator==(const GVec&, const GVec&) = default;
  /// Lexicographic in the real order of the coordinates.
  friend std::strong_ordering operator<=>(const GVec& x, const GVec& y) {
    for (std::size_t i = 0; i < N; ++i) {
      if (auto o = x.c[i] <=> y.c[i]; o != 0) return o;
    }
    return std::strong_ordering::equal;
  }
};

using GVec3 = GVec<3>;
using GVec6 = GVec<6>;

template <std::size_t N>
Golden dot(const GVec<N>& u, const GVec<N>& v) {
  Golden s;
  for (std::size_t i = 0; i < N; ++i) s += u[i] * v[i];
  return s;
}

template <std::size_t N>
Golden norm_sq(const GVec<N>& u) {
  return dot(u, u);
}

template <std::size_t N>
GVec<N> conj(const GVec<N>& u) {
  GVec<N> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = u[i].conj();
  return r;
}

template <std::size_t N>
std::string to_string(const GVec<N>& u) {
  std::string s = "(";
  for (std::size_t i = 0; i < N; ++i) {
    if (i) s += ", ";
    s += u[i].str();
  }
  return s + ")";
}

GVec3 cross(const GVec3& u, const GVec3& v);
Golden det3(const GVec3& a, const GVec3& b, const GVec3& c);

/// Dense row-major matrix over Q(phi).
class GMat {
 public:
  GMat() = default;
  GMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  GMat(std::initializer_list<std::initializer_list<Golden>> rows);

  static GMat identity(std::size_t n);
  template <std::size_t N>
  static GMat from_columns(std::span<const GVec<N>> cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Golden& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Golden& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  GMat transpose() const;
  std::vector<Golden> apply(std::span<const Golden> x) const;
  template <std::size_t N, std::size_t M>
  GVec<M> apply(const GVec<N>& x) const;

  friend GMat operator*(const GMat& a, const GMat& b);
  friend bool operator==(const GMat&, const GMat&) = default;

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Golden> data_;
};

/// Reduced row echelon form plus the pivot columns, computed exactly.
struct EchelonForm {
  GMat reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

EchelonForm rref(GMat m);

/// Result of solving A x = b.
///
/// `particular` is the solution with all free variables zero; `kernel` is a
/// basis of ker A with one vector per free column (that entry set to 1),
/// read off the reduced echelon form. Unique solutions have an empty kernel.
struct LinearSolution {
  std::vector<Golden> particular;
  std::vector<std::vector<Golden>> kernel;
  bool unique() const { return kernel.empty(); }
};

/// Exact Gaussian elimination; nullopt when the system is inconsistent.
std::optional<LinearSolution> solve(const GMat& a, std::span<const Golden> b);

std::vector<std::vector<Golden>> kernel(const GMat& a);
std::optional<GMat> inverse(const GMat& a);
Golden determinant(const GMat& a);

/// Row-style Hermite normal form of the Z-module spanned by rational row
/// vectors: upper echelon, positive pivots, entries above each pivot reduced
/// into [0, pivot). Zero rows are dropped. Two generating sets span the same
/// module iff their forms are equal.
std::vector<std::vector<Rational>> hermite_basis(const std::vector<std::vector<Rational>>& generators);

template <std::size_t N>
GMat GMat::from_columns(std::span<const GVec<N>> cols) {
  GMat m(N, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < N; ++i) m(i, j) = cols[j][i];
  return m;
}

template <std::size_t N, std::size_t M>
GVec<M> GMat::apply(const GVec<N>& x) const {
  if (cols_ != N || rows_ != M) throw std::invalid_argument("GMat::apply: dimension mismatch");
  GVec<M> r;
  for (std::size_t i = 0; i < M; ++i)
    for (std::size_t j = 0; j < N; ++j) r[i] += (*this)(i, j) * x[j];
  return r;
}

}  // namespace ammann
