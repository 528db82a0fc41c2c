#include "ammann/exactlin.hpp"

#include <sstream>
#include <stdexcept>

namespace ammann {

GVec3 cross(const GVec3& u, const GVec3& v) {
  return GVec3{{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]}};
}

Golden det3(const GVec3& a, const GVec3& b, const GVec3& c) { return dot(a, cross(b, c)); }

GMat::GMat(std::initializer_list<std::initializer_list<Golden>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("GMat: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

GMat GMat::identity(std::size_t n) {
  GMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

GMat GMat::transpose() const {
  GMat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::vector<Golden> GMat::apply(std::span<const Golden> x) const {
  if (x.size() != cols_) throw std::invalid_argument("GMat::apply: dimension mismatch");
  std::vector<Golden> r(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * x[j];
  return r;
}

GMat operator*(const GMat& a, const GMat& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("GMat product: dimension mismatch");
  GMat r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Golden& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

std::string GMat::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << "[";
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).str();
    os << "]\n";
  }
  return os.str();
}

EchelonForm rref(GMat m) {
  EchelonForm out;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
    const Golden inv = *m(r, c).inverse();
    for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Golden f = m(i, c);
      for (std::size_t j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

std::optional<LinearSolution> solve(const GMat& a, std::span<const Golden> b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: rhs dimension mismatch");
  const std::size_t n = a.cols();
  GMat aug(a.rows(), n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  EchelonForm e = rref(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == n) return std::nullopt;

  LinearSolution sol;
  sol.particular.assign(n, Golden{});
  std::vector<bool> is_pivot(n, false);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    sol.particular[e.pivots[r]] = e.reduced(r, n);
    is_pivot[e.pivots[r]] = true;
  }
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Golden> k(n);
    k[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) k[e.pivots[r]] = -e.reduced(r, f);
    sol.kernel.push_back(std::move(k));
  }
  return sol;
}

std::vector<std::vector<Golden>> kernel(const GMat& a) {
  std::vector<Golden> zero(a.rows());
  return solve(a, zero)->kernel;
}

std::optional<GMat> inverse(const GMat& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  const std::size_t n = a.rows();
  GMat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  EchelonForm e = rref(std::move(aug));
  if (e.rank() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  GMat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

Golden determinant(const GMat& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: non-square matrix");
  GMat m = a;
  const std::size_t n = m.rows();
  Golden det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return Golden{};
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    const Golden inv = *m(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      const Golden f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

std::vector<std::vector<Rational>> hermite_basis(const std::vector<std::vector<Rational>>& generators) {
  if (generators.empty()) return {};
  const std::size_t n = generators.front().size();
  mpz_class den = 1;
  for (const auto& g : generators) {
    if (g.size() != n) throw std::invalid_argument("hermite_basis: ragged generators");
    for (const auto& q : g) den = lcm(den, mpz_class(q.get_den()));
  }
  std::vector<std::vector<mpz_class>> a;
  for (const auto& g : generators) {
    std::vector<mpz_class> row(n);
    for (std::size_t j = 0; j < n; ++j) {
      Rational s = g[j] * den;
      row[j] = s.get_num();
    }
    a.push_back(std::move(row));
  }

  const std::size_t m = a.size();
  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    // Euclid down column c until at most row r is nonzero.
    while (true) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i)
        if (a[i][c] != 0 && (best == m || abs(a[i][c]) < abs(a[best][c]))) best = i;
      if (best == m) break;
      std::swap(a[r], a[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (a[i][c] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
        for (std::size_t j = c; j < n; ++j) a[i][j] -= q * a[r][j];
        if (a[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (a[r][c] == 0) continue;
    if (a[r][c] < 0)
      for (std::size_t j = c; j < n; ++j) a[r][j] = -a[r][j];
    for (std::size_t i = 0; i < r; ++i) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
      if (q != 0)
        for (std::size_t j = c; j < n; ++j) a[i][j] -= q * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }

  std::vector<std::vector<Rational>> out;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<Rational> row(n);
    for (std::size_t j = 0; j < n; ++j) {
      row[j] = Rational(a[i][j], den);
      row[j].canonicalize();
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace ammann
