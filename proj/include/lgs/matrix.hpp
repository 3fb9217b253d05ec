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

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "lgs/base_field.hpp"

namespace lgs {

/// A word over F_q.
using VecFq = std::vector<fq_t>;

/// Dense row-major matrix over F_q.
class MatFq {
 public:
  MatFq() = default;
  MatFq(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  MatFq(std::size_t rows, std::size_t cols, VecFq data);

  static MatFq identity(std::size_t n);
  /// Single-row matrix.
  static MatFq row_vector(std::span<const fq_t> v);
  static MatFq from_rows(const std::vector<VecFq>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  fq_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  fq_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<fq_t> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const fq_t> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  VecFq row_copy(std::size_t r) const { return {row(r).begin(), row(r).end()}; }

  const VecFq& data() const { return data_; }
  VecFq& data() { return data_; }

  bool is_zero() const;
  void append_row(std::span<const fq_t> r);
  void swap_rows(std::size_t a, std::size_t b);

  /// Rows [begin, end) and columns [cbegin, cend).
  MatFq block(std::size_t begin, std::size_t end, std::size_t cbegin, std::size_t cend) const;

  bool operator==(const MatFq& o) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  VecFq data_;
};

/// F_q-basis of a matrix code of m x n matrices.
struct MatrixCodeBasis {
  std::size_t m = 0;
  std::size_t n = 0;
  std::vector<MatFq> gens;

  std::size_t dim() const { return gens.size(); }
  /// k' x mn matrix whose rows are Unfold(G_i).
  MatFq unfolded() const;
  static MatrixCodeBasis from_unfolded(const MatFq& rows, std::size_t m);
  MatrixCodeBasis transposed() const;
};

/// Reduced row echelon form with its pivot columns (ascending).
struct Rref {
  MatFq reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

// ---- elementary operations -------------------------------------------------

MatFq mul(const BaseField& f, const MatFq& a, const MatFq& b);
MatFq add(const BaseField& f, const MatFq& a, const MatFq& b);
MatFq sub(const BaseField& f, const MatFq& a, const MatFq& b);
MatFq scale(const BaseField& f, fq_t c, const MatFq& a);
MatFq transpose(const MatFq& a);
/// Row vector times matrix.
VecFq vec_mul(const BaseField& f, std::span<const fq_t> x, const MatFq& a);
VecFq vec_add(const BaseField& f, std::span<const fq_t> a, std::span<const fq_t> b);
VecFq vec_sub(const BaseField& f, std::span<const fq_t> a, std::span<const fq_t> b);
fq_t dot(const BaseField& f, std::span<const fq_t> a, std::span<const fq_t> b);
/// Stacks a on top of b (equal column counts).
MatFq vstack(const MatFq& a, const MatFq& b);

// ---- elimination -----------------------------------------------------------

/// Textbook Gauss-Jordan elimination; the reference the kernels are tested
/// against. Pivot choice: leftmost nonzero column, first row with a nonzero
/// entry.
Rref rref_serial(const BaseField& f, MatFq m);
/// Same result as rref_serial; row updates run in parallel with OpenMP when
/// the matrix is large enough.
Rref rref(const BaseField& f, MatFq m);

std::size_t rank(const BaseField& f, const MatFq& m);
/// Rows form a basis of {x : M x^T = 0}, in canonical (RREF) form.
MatFq kernel_basis(const BaseField& f, const MatFq& m);
/// Rows form a basis of {y : y M = 0}.
MatFq left_kernel_basis(const BaseField& f, const MatFq& m);
/// Canonical solution of A x = b (free variables zero), or nullopt.
std::optional<VecFq> solve(const BaseField& f, const MatFq& a, std::span<const fq_t> b);
/// Canonical solution of x A = b, or nullopt.
std::optional<VecFq> solve_left(const BaseField& f, const MatFq& a, std::span<const fq_t> b);
std::optional<MatFq> inverse(const BaseField& f, const MatFq& a);
/// RREF basis of the row space with zero rows dropped.
MatFq row_basis(const BaseField& f, const MatFq& m);
bool same_row_space(const BaseField& f, const MatFq& a, const MatFq& b);
bool in_row_space(const BaseField& f, const MatFq& a, std::span<const fq_t> v);

/// Incremental row echelon basis. Rows are reduced against the current pivots
/// as they arrive; dependent rows are discarded.
class EchelonBuilder {
 public:
  EchelonBuilder(const BaseField& f, std::size_t cols) : f_(&f), cols_(cols) {}

  /// Returns true when the row enlarged the span.
  bool add(std::span<const fq_t> row);
  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  /// Basis of the orthogonal complement {x : r . x = 0 for all added r}.
  MatFq kernel() const;
  MatFq basis() const;

 private:
  const BaseField* f_;
  std::size_t cols_;
  std::vector<VecFq> rows_;           // each normalised at its pivot
  std::vector<std::size_t> pivots_;   // parallel to rows_
};

// ---- folding, vectorisation, traces ----------------------------------------

/// Word of length mn -> m x n matrix; m consecutive entries form one column.
MatFq fold(std::span<const fq_t> v, std::size_t m);
/// Inverse of fold: the columns of M concatenated.
VecFq unfold(const MatFq& m);
/// Column-stacking vectorisation as an mn x 1 matrix.
MatFq vec_col(const MatFq& m);
/// Inverse of vec_col for an m x n target shape.
MatFq unvec_col(std::span<const fq_t> v, std::size_t m, std::size_t n);
MatFq kron(const BaseField& f, const MatFq& a, const MatFq& b);
/// Tr(M N^T).
fq_t trace_pairing(const BaseField& f, const MatFq& m, const MatFq& n);
/// Basis of {A : Tr(A B^T) = 0 for all B in C}.
MatrixCodeBasis matrix_code_dual(const BaseField& f, const MatrixCodeBasis& c);

}  // namespace lgs
