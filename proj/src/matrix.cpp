/*
   Copyright 2026 The LGS Toolkit Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "lgs/matrix.hpp"

#include <algorithm>
#include <string>

#include "lgs/error.hpp"

#ifdef LGS_HAVE_OPENMP
#include <omp.h>
#endif

namespace lgs {

namespace {

void require(bool cond, const char* what) {
  if (!cond) throw ParamError(std::string("shape mismatch: ") + what);
}

// Below this many entries the parallel region costs more than it saves.
constexpr std::size_t kParallelThreshold = std::size_t{1} << 14;

}  // namespace

MatFq::MatFq(std::size_t rows, std::size_t cols, VecFq data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  require(data_.size() == rows_ * cols_, "entries length != rows * cols");
}

MatFq MatFq::identity(std::size_t n) {
  MatFq m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

MatFq MatFq::row_vector(std::span<const fq_t> v) { return MatFq(1, v.size(), VecFq(v.begin(), v.end())); }

MatFq MatFq::from_rows(const std::vector<VecFq>& rows, std::size_t cols) {
  MatFq m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

bool MatFq::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](fq_t x) { return x == 0; });
}

void MatFq::append_row(std::span<const fq_t> r) {
  require(r.size() == cols_, "appended row length");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

void MatFq::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(data_.begin() + a * cols_, data_.begin() + (a + 1) * cols_, data_.begin() + b * cols_);
}

MatFq MatFq::block(std::size_t begin, std::size_t end, std::size_t cbegin, std::size_t cend) const {
  require(begin <= end && end <= rows_ && cbegin <= cend && cend <= cols_, "block bounds");
  MatFq out(end - begin, cend - cbegin);
  for (std::size_t r = begin; r < end; ++r)
    std::copy(data_.begin() + r * cols_ + cbegin, data_.begin() + r * cols_ + cend, out.row(r - begin).begin());
  return out;
}

MatFq MatrixCodeBasis::unfolded() const {
  MatFq out(0, m * n);
  for (const auto& g : gens) out.append_row(unfold(g));
  return out;
}

MatrixCodeBasis MatrixCodeBasis::from_unfolded(const MatFq& rows, std::size_t m) {
  require(m > 0 && rows.cols() % m == 0, "unfolded width not divisible by m");
  MatrixCodeBasis c{m, rows.cols() / m, {}};
  for (std::size_t i = 0; i < rows.rows(); ++i) c.gens.push_back(fold(rows.row(i), m));
  return c;
}

MatrixCodeBasis MatrixCodeBasis::transposed() const {
  MatrixCodeBasis t{n, m, {}};
  for (const auto& g : gens) t.gens.push_back(transpose(g));
  return t;
}

// ---- elementary operations -------------------------------------------------

MatFq mul(const BaseField& f, const MatFq& a, const MatFq& b) {
  require(a.cols() == b.rows(), "mul inner dimension");
  MatFq c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) f.axpy(c.row(i), a(i, k), b.row(k));
  return c;
}

MatFq add(const BaseField& f, const MatFq& a, const MatFq& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "add");
  MatFq c = a;
  for (std::size_t i = 0; i < c.data().size(); ++i) c.data()[i] = f.add(c.data()[i], b.data()[i]);
  return c;
}

MatFq sub(const BaseField& f, const MatFq& a, const MatFq& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "sub");
  MatFq c = a;
  for (std::size_t i = 0; i < c.data().size(); ++i) c.data()[i] = f.sub(c.data()[i], b.data()[i]);
  return c;
}

MatFq scale(const BaseField& f, fq_t c, const MatFq& a) {
  MatFq r = a;
  f.scale(r.data(), c);
  return r;
}

MatFq transpose(const MatFq& a) {
  MatFq t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

VecFq vec_mul(const BaseField& f, std::span<const fq_t> x, const MatFq& a) {
  require(x.size() == a.rows(), "vector-matrix product");
  VecFq out(a.cols(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) f.axpy(out, x[i], a.row(i));
  return out;
}

VecFq vec_add(const BaseField& f, std::span<const fq_t> a, std::span<const fq_t> b) {
  require(a.size() == b.size(), "vector add");
  VecFq out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
  return out;
}

VecFq vec_sub(const BaseField& f, std::span<const fq_t> a, std::span<const fq_t> b) {
  require(a.size() == b.size(), "vector sub");
  VecFq out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.sub(a[i], b[i]);
  return out;
}

fq_t dot(const BaseField& f, std::span<const fq_t> a, std::span<const fq_t> b) {
  require(a.size() == b.size(), "dot");
  fq_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = f.add(s, f.mul(a[i], b[i]));
  return s;
}

MatFq vstack(const MatFq& a, const MatFq& b) {
  require(a.cols() == b.cols(), "vstack");
  MatFq out = a;
  out.data().insert(out.data().end(), b.data().begin(), b.data().end());
  return MatFq(a.rows() + b.rows(), a.cols(), std::move(out.data()));
}

// ---- elimination -----------------------------------------------------------

Rref rref_serial(const BaseField& f, MatFq m) {
  Rref out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    m.swap_rows(piv, r);
    const fq_t inv = f.inv(m(r, c));
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = f.mul(inv, m(r, j));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      const fq_t factor = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

Rref rref(const BaseField& f, MatFq m) {
  Rref out;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  [[maybe_unused]] const bool parallel = rows * cols >= kParallelThreshold;
  VecFq pivot_row(cols);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    m.swap_rows(piv, r);
    f.scale(m.row(r), f.inv(m(r, c)));
    // Columns left of c are zero in the pivot row.
    std::copy(m.row(r).begin() + c, m.row(r).end(), pivot_row.begin() + c);
    const std::span<const fq_t> tail(pivot_row.data() + c, cols - c);
    const auto n_rows = static_cast<std::ptrdiff_t>(rows);
#pragma omp parallel for schedule(static) if (parallel)
    for (std::ptrdiff_t i = 0; i < n_rows; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      if (ui == r) continue;
      const fq_t factor = m(ui, c);
      if (factor == 0) continue;
      f.axpy(m.row(ui).subspan(c), f.neg(factor), tail);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const BaseField& f, const MatFq& m) {
  if (m.empty()) return 0;
  EchelonBuilder eb(f, m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    eb.add(m.row(i));
    if (eb.rank() == m.cols()) break;
  }
  return eb.rank();
}

namespace {

MatFq kernel_from_rref(const BaseField& f, const Rref& rr, std::size_t cols) {
  std::vector<bool> is_pivot(cols, false);
  for (auto p : rr.pivots) is_pivot[p] = true;
  MatFq k(0, cols);
  VecFq v(cols);
  for (std::size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    std::fill(v.begin(), v.end(), 0);
    v[c] = 1;
    for (std::size_t r = 0; r < rr.pivots.size(); ++r) v[rr.pivots[r]] = f.neg(rr.reduced(r, c));
    k.append_row(v);
  }
  return k;
}

}  // namespace

MatFq kernel_basis(const BaseField& f, const MatFq& m) {
  if (m.rows() == 0) return MatFq::identity(m.cols());
  return kernel_from_rref(f, rref(f, m), m.cols());
}

MatFq left_kernel_basis(const BaseField& f, const MatFq& m) { return kernel_basis(f, transpose(m)); }

std::optional<VecFq> solve(const BaseField& f, const MatFq& a, std::span<const fq_t> b) {
  require(b.size() == a.rows(), "solve right-hand side");
  MatFq aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::copy(a.row(i).begin(), a.row(i).end(), aug.row(i).begin());
    aug(i, a.cols()) = b[i];
  }
  const Rref rr = rref(f, std::move(aug));
  if (!rr.pivots.empty() && rr.pivots.back() == a.cols()) return std::nullopt;
  VecFq x(a.cols(), 0);
  for (std::size_t r = 0; r < rr.pivots.size(); ++r) x[rr.pivots[r]] = rr.reduced(r, a.cols());
  return x;
}

std::optional<VecFq> solve_left(const BaseField& f, const MatFq& a, std::span<const fq_t> b) {
  return solve(f, transpose(a), b);
}

std::optional<MatFq> inverse(const BaseField& f, const MatFq& a) {
  require(a.rows() == a.cols(), "inverse of non-square matrix");
  const std::size_t n = a.rows();
  MatFq aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    std::copy(a.row(i).begin(), a.row(i).end(), aug.row(i).begin());
    aug(i, n + i) = 1;
  }
  const Rref rr = rref(f, std::move(aug));
  if (rr.rank() < n || rr.pivots[n - 1] != n - 1) return std::nullopt;
  return rr.reduced.block(0, n, n, 2 * n);
}

MatFq row_basis(const BaseField& f, const MatFq& m) {
  Rref rr = rref(f, m);
  return rr.reduced.block(0, rr.rank(), 0, m.cols());
}

bool same_row_space(const BaseField& f, const MatFq& a, const MatFq& b) {
  require(a.cols() == b.cols(), "row-space comparison");
  return row_basis(f, a) == row_basis(f, b);
}

bool in_row_space(const BaseField& f, const MatFq& a, std::span<const fq_t> v) {
  EchelonBuilder eb(f, a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) eb.add(a.row(i));
  return !eb.add(v);
}

bool EchelonBuilder::add(std::span<const fq_t> row) {
  require(row.size() == cols_, "echelon row length");
  VecFq v(row.begin(), row.end());
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const fq_t c = v[pivots_[k]];
    if (c != 0) f_->axpy(v, f_->neg(c), rows_[k]);
  }
  const auto it = std::find_if(v.begin(), v.end(), [](fq_t x) { return x != 0; });
  if (it == v.end()) return false;
  const auto piv = static_cast<std::size_t>(it - v.begin());
  f_->scale(v, f_->inv(v[piv]));
  rows_.push_back(std::move(v));
  pivots_.push_back(piv);
  return true;
}

MatFq EchelonBuilder::basis() const { return MatFq::from_rows(rows_, cols_); }

MatFq EchelonBuilder::kernel() const {
  if (rows_.empty()) return MatFq::identity(cols_);
  return kernel_basis(*f_, basis());
}

// ---- folding, vectorisation, traces ----------------------------------------

MatFq fold(std::span<const fq_t> v, std::size_t m) {
  require(m > 0 && v.size() % m == 0, "fold length not divisible by m");
  const std::size_t n = v.size() / m;
  MatFq out(m, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) out(j, i) = v[i * m + j];
  return out;
}

VecFq unfold(const MatFq& mat) {
  VecFq v(mat.rows() * mat.cols());
  for (std::size_t i = 0; i < mat.cols(); ++i)
    for (std::size_t j = 0; j < mat.rows(); ++j) v[i * mat.rows() + j] = mat(j, i);
  return v;
}

MatFq vec_col(const MatFq& mat) {
  MatFq out(mat.rows() * mat.cols(), 1);
  for (std::size_t c = 0; c < mat.cols(); ++c)
    for (std::size_t r = 0; r < mat.rows(); ++r) out(c * mat.rows() + r, 0) = mat(r, c);
  return out;
}

MatFq unvec_col(std::span<const fq_t> v, std::size_t m, std::size_t n) {
  require(v.size() == m * n, "unvec length");
  MatFq out(m, n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < m; ++r) out(r, c) = v[c * m + r];
  return out;
}

MatFq kron(const BaseField& f, const MatFq& a, const MatFq& b) {
  MatFq out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const fq_t x = a(i, j);
      if (x == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = f.mul(x, b(k, l));
    }
  return out;
}

fq_t trace_pairing(const BaseField& f, const MatFq& m, const MatFq& n) {
  require(m.rows() == n.rows() && m.cols() == n.cols(), "trace pairing");
  return dot(f, m.data(), n.data());
}

MatrixCodeBasis matrix_code_dual(const BaseField& f, const MatrixCodeBasis& c) {
  const MatFq k = c.gens.empty() ? MatFq::identity(c.m * c.n) : kernel_basis(f, c.unfolded());
  MatrixCodeBasis d{c.m, c.n, {}};
  for (std::size_t i = 0; i < k.rows(); ++i) d.gens.push_back(fold(k.row(i), c.m));
  return d;
}

}  // namespace lgs
