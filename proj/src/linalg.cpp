#include "fgeom/linalg.hpp"

#include <stdexcept>

namespace fgeom {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Fe> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) throw std::invalid_argument("Matrix: data size mismatch");
}

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
  return m;
}

Matrix Matrix::from_rows(std::span<const Vec> rows, std::size_t cols) {
  Matrix m(0, cols);
  for (const Vec& r : rows) m.append_row(r);
  return m;
}

void Matrix::append_row(std::span<const Fe> r) {
  if (r.size() != cols_) throw std::invalid_argument("append_row: length mismatch");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

bool Matrix::is_zero() const {
  for (Fe x : data_)
    if (x.v != 0) return false;
  return true;
}

Matrix mat_mul(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: shape mismatch");
  Matrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Fe x = a.at(i, k);
      if (x.v == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) r.at(i, j) = f.add(r.at(i, j), f.mul(x, b.at(k, j)));
    }
  return r;
}

Matrix mat_add(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("mat_add: shape mismatch");
  Matrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = f.add(a.at(i, j), b.at(i, j));
  return r;
}

Matrix mat_sub(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("mat_sub: shape mismatch");
  Matrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = f.sub(a.at(i, j), b.at(i, j));
  return r;
}

Matrix mat_scale(const Field& f, Fe s, const Matrix& a) {
  Matrix r = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = f.mul(s, a.at(i, j));
  return r;
}

Matrix transpose(const Matrix& a) {
  Matrix r(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(j, i) = a.at(i, j);
  return r;
}

Matrix mat_frobenius(const Field& f, const Matrix& a, long l) {
  Matrix r = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = f.frobenius(a.at(i, j), l);
  return r;
}

Vec vec_mat(const Field& f, std::span<const Fe> v, const Matrix& m) {
  if (v.size() != m.rows()) throw std::invalid_argument("vec_mat: length mismatch");
  Vec r(m.cols(), f.zero());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].v == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) r[j] = f.add(r[j], f.mul(v[i], m.at(i, j)));
  }
  return r;
}

Matrix rref(const Field& f, Matrix a, std::vector<std::size_t>* pivots) {
  std::vector<std::size_t> piv;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < a.cols() && lead_row < a.rows(); ++c) {
    std::size_t sel = lead_row;
    while (sel < a.rows() && a.at(sel, c).v == 0) ++sel;
    if (sel == a.rows()) continue;
    if (sel != lead_row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(sel, j), a.at(lead_row, j));
    const Fe s = f.inv(a.at(lead_row, c));
    for (std::size_t j = 0; j < a.cols(); ++j) a.at(lead_row, j) = f.mul(s, a.at(lead_row, j));
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == lead_row) continue;
      const Fe x = a.at(i, c);
      if (x.v == 0) continue;
      for (std::size_t j = 0; j < a.cols(); ++j) a.at(i, j) = f.sub(a.at(i, j), f.mul(x, a.at(lead_row, j)));
    }
    piv.push_back(c);
    ++lead_row;
  }
  std::vector<Fe> data(a.data().begin(), a.data().begin() + static_cast<std::ptrdiff_t>(lead_row * a.cols()));
  if (pivots) *pivots = std::move(piv);
  return Matrix(lead_row, a.cols(), std::move(data));
}

std::size_t rank(const Field& f, const Matrix& a) { return rref(f, a).rows(); }

Matrix null_space(const Field& f, const Matrix& a) {
  std::vector<std::size_t> piv;
  Matrix r = rref(f, a, &piv);
  const std::size_t n = a.cols();
  std::vector<bool> is_piv(n, false);
  for (std::size_t c : piv) is_piv[c] = true;
  Matrix ns(0, n);
  for (std::size_t free = 0; free < n; ++free) {
    if (is_piv[free]) continue;
    Vec v(n, f.zero());
    v[free] = f.one();
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = f.neg(r.at(i, free));
    ns.append_row(v);
  }
  return rref(f, ns);
}

Matrix inverse(const Field& f, const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse: matrix not square");
  const std::size_t n = a.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n + i) = f.one();
  }
  std::vector<std::size_t> piv;
  Matrix r = rref(f, aug, &piv);
  if (r.rows() < n || piv[n - 1] != n - 1) throw std::domain_error("inverse: singular matrix");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.at(i, n + j);
  return inv;
}

bool is_invertible(const Field& f, const Matrix& a) { return a.rows() == a.cols() && rank(f, a) == a.rows(); }

std::vector<Fe> solve_in_rowspace(const Field& f, const Matrix& basis, std::span<const Fe> v, bool* ok) {
  // Solve x * basis = v through the transposed system.
  const std::size_t k = basis.rows();
  const std::size_t n = basis.cols();
  Matrix aug(n, k + 1);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < k; ++i) aug.at(j, i) = basis.at(i, j);
    aug.at(j, k) = v[j];
  }
  std::vector<std::size_t> piv;
  Matrix r = rref(f, aug, &piv);
  if (!piv.empty() && piv.back() == k) {
    if (ok) *ok = false;
    return {};
  }
  std::vector<Fe> x(k, f.zero());
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = r.at(i, k);
  if (ok) *ok = true;
  return x;
}

std::vector<Matrix> enumerate_gl(const Field& f, std::size_t n) {
  const unsigned q = f.order();
  unsigned long long total = 1;
  for (std::size_t i = 0; i < n * n; ++i) {
    total *= q;
    if (total > 50'000'000ULL) throw BudgetExceeded("enumerate_gl: too many matrices");
  }
  std::vector<Matrix> out;
  std::vector<Fe> data(n * n);
  for (unsigned long long v = 0; v < total; ++v) {
    unsigned long long r = v;
    for (std::size_t i = n * n; i-- > 0;) {
      data[i] = Fe{static_cast<std::uint16_t>(r % q)};
      r /= q;
    }
    Matrix m(n, n, data);
    if (is_invertible(f, m)) out.push_back(std::move(m));
  }
  return out;
}

}  // namespace fgeom
