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

#include "lgs/stab_algebra.hpp"

#include <algorithm>

#include "lgs/error.hpp"

namespace lgs {

std::string to_string(Side s) { return s == Side::Left ? "left" : "right"; }
std::string to_string(AlgebraKind k) { return k == AlgebraKind::Stabilizer ? "stabilizer" : "annihilator"; }

namespace {

// Pairs (i, j) are enumerated with j (code generator) outer, i (dual) inner.
constexpr std::size_t kBlockPairs = 256;

void stab_row(const BaseField& f, const MatFq& h, const MatFq& g, std::span<fq_t> out) {
  const std::size_t m = h.rows();
  const std::size_t n = h.cols();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      fq_t s = 0;
      for (std::size_t c = 0; c < n; ++c) s = f.add(s, f.mul(h(a, c), g(b, c)));
      out[a + m * b] = s;
    }
}

void fill_stab_rows(const BaseField& f, const MatrixCodeBasis& code, const MatrixCodeBasis& dual,
                    std::size_t first, std::size_t count, MatFq& out, bool parallel) {
  const std::size_t nd = dual.dim();
  const auto n_pairs = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
  for (std::ptrdiff_t t = 0; t < n_pairs; ++t) {
    const std::size_t pair = first + static_cast<std::size_t>(t);
    stab_row(f, dual.gens[pair % nd], code.gens[pair / nd], out.row(static_cast<std::size_t>(t)));
  }
}

MatFq build_stab_system(const BaseField& f, const MatrixCodeBasis& code, const MatrixCodeBasis& dual,
                        bool parallel) {
  const std::size_t m = code.m;
  const std::size_t pairs = code.dim() * dual.dim();
  MatFq out(pairs, m * m);
  if (pairs > 0) fill_stab_rows(f, code, dual, 0, pairs, out, parallel);
  return out;
}

std::vector<MatFq> canonical_gens(const BaseField& f, const std::vector<VecFq>& vecs, std::size_t rows,
                                  std::size_t cols) {
  if (vecs.empty()) return {};
  const MatFq basis = row_basis(f, MatFq::from_rows(vecs, rows * cols));
  std::vector<MatFq> out;
  for (std::size_t i = 0; i < basis.rows(); ++i) out.push_back(unvec_col(basis.row(i), rows, cols));
  return out;
}

std::vector<VecFq> kernel_rows(const BaseField& f, const MatFq& system, std::size_t cols) {
  EchelonBuilder eb(f, cols);
  for (std::size_t i = 0; i < system.rows() && eb.rank() < cols; ++i) eb.add(system.row(i));
  const MatFq k = eb.kernel();
  std::vector<VecFq> out;
  for (std::size_t i = 0; i < k.rows(); ++i) out.push_back(k.row_copy(i));
  return out;
}

std::vector<VecFq> vecs_of(const std::vector<MatFq>& mats) {
  std::vector<VecFq> out;
  for (const auto& m : mats) out.push_back(unfold(m));  // unfold is column stacking
  return out;
}

AlgebraBasis left_algebra(const BaseField& f, const MatrixCodeBasis& code, AlgebraKind kind) {
  const std::size_t m = code.m;
  AlgebraBasis out{Side::Left, kind, {}};
  MatFq system;
  if (kind == AlgebraKind::Stabilizer) {
    system = left_stab_system(f, code, matrix_code_dual(f, code));
  } else {
    system = left_ann_system(f, code);
  }
  out.gens = canonical_gens(f, kernel_rows(f, system, m * m), m, m);
  return out;
}

}  // namespace

MatFq left_stab_system_kron(const BaseField& f, const MatrixCodeBasis& code, const MatrixCodeBasis& dual) {
  const std::size_t m = code.m;
  const MatFq im = MatFq::identity(m);
  MatFq out(0, m * m);
  for (const auto& g : code.gens) {
    const MatFq k = kron(f, transpose(g), im);
    for (const auto& h : dual.gens) out.append_row(vec_mul(f, unfold(h), k));
  }
  return out;
}

MatFq left_stab_system_serial(const BaseField& f, const MatrixCodeBasis& code, const MatrixCodeBasis& dual) {
  return build_stab_system(f, code, dual, false);
}

MatFq left_stab_system(const BaseField& f, const MatrixCodeBasis& code, const MatrixCodeBasis& dual) {
  return build_stab_system(f, code, dual, true);
}

MatFq left_ann_system(const BaseField& f, const MatrixCodeBasis& code) {
  const std::size_t m = code.m;
  const MatFq im = MatFq::identity(m);
  MatFq out(0, m * m);
  for (const auto& g : code.gens) out = vstack(out, kron(f, transpose(g), im));
  return out;
}

AlgebraBasis algebra(const BaseField& f, const MatrixCodeBasis& code, Side side, AlgebraKind kind) {
  if (side == Side::Left) return left_algebra(f, code, kind);
  AlgebraBasis t = left_algebra(f, code.transposed(), kind);
  std::vector<MatFq> back;
  for (const auto& g : t.gens) back.push_back(transpose(g));
  return {Side::Right, kind, canonical_gens(f, vecs_of(back), code.n, code.n)};
}

AlgebraBasis left_annihilator_direct(const BaseField& f, const MatrixCodeBasis& code) {
  const std::size_t m = code.m;
  MatFq wide(m, code.n * code.dim());
  for (std::size_t j = 0; j < code.dim(); ++j)
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t c = 0; c < code.n; ++c) wide(a, j * code.n + c) = code.gens[j](a, c);
  const MatFq y = left_kernel_basis(f, wide);
  std::vector<VecFq> vecs;
  for (std::size_t r = 0; r < y.rows(); ++r)
    for (std::size_t l = 0; l < m; ++l) {
      MatFq a(m, m);
      std::copy(y.row(r).begin(), y.row(r).end(), a.row(l).begin());
      vecs.push_back(unfold(a));
    }
  return {Side::Left, AlgebraKind::Annihilator, canonical_gens(f, vecs, m, m)};
}

bool is_trivial_stab(const BaseField& f, const MatrixCodeBasis& code, Side side) {
  if (code.dim() == 0) return false;
  const MatrixCodeBasis c = side == Side::Left ? code : code.transposed();
  const std::size_t m = c.m;
  const std::size_t target = m * m - 1;
  const MatrixCodeBasis dual = matrix_code_dual(f, c);
  const std::size_t pairs = c.dim() * dual.dim();
  EchelonBuilder eb(f, m * m);
  if (eb.rank() == target) return true;
  MatFq block(kBlockPairs, m * m);
  for (std::size_t first = 0; first < pairs; first += kBlockPairs) {
    const std::size_t count = std::min(kBlockPairs, pairs - first);
    fill_stab_rows(f, c, dual, first, count, block, true);
    for (std::size_t t = 0; t < count; ++t) {
      eb.add(block.row(t));
      if (eb.rank() == target) return true;
    }
  }
  return false;
}

bool is_trivial_stab_serial(const BaseField& f, const MatrixCodeBasis& code, Side side) {
  if (code.dim() == 0) return false;
  const MatrixCodeBasis c = side == Side::Left ? code : code.transposed();
  const std::size_t m = c.m;
  const MatFq system = left_stab_system_serial(f, c, matrix_code_dual(f, c));
  return m * m - rank(f, system) == 1;
}

bool in_algebra(const BaseField& f, const MatrixCodeBasis& code, Side side, AlgebraKind kind, const MatFq& a) {
  const MatrixCodeBasis c = side == Side::Left ? code : code.transposed();
  const MatFq op = side == Side::Left ? a : transpose(a);
  if (op.rows() != c.m || op.cols() != c.m) throw ParamError("algebra element has the wrong shape");
  if (kind == AlgebraKind::Annihilator) {
    return std::all_of(c.gens.begin(), c.gens.end(), [&](const MatFq& g) { return mul(f, op, g).is_zero(); });
  }
  const MatrixCodeBasis dual = matrix_code_dual(f, c);
  for (const auto& g : c.gens) {
    const MatFq img = mul(f, op, g);
    for (const auto& h : dual.gens)
      if (trace_pairing(f, img, h) != 0) return false;
  }
  return true;
}

MatFq multiplication_witness(const ExtField& f, const ExtWord& g, const ExtElement& alpha) {
  if (g.size() != f.m()) throw ParamError("multiplication witness needs n = m");
  const QBasis gb = make_basis(f, g);
  const std::size_t n = g.size();
  MatFq out(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const VecFq c = to_basis_coords(f, gb, f.mul(alpha, g[j]));
    for (std::size_t l = 0; l < n; ++l) out(l, j) = c[l];
  }
  return out;
}

std::vector<MatFq> annihilator_witnesses(const BaseField& f, const MatFq& span_rows) {
  const std::size_t m = span_rows.cols();
  const MatFq s = row_basis(f, span_rows);
  const std::size_t r = s.rows();
  EchelonBuilder eb(f, m);
  std::vector<VecFq> cols;
  for (std::size_t i = 0; i < r; ++i) {
    eb.add(s.row(i));
    cols.push_back(s.row_copy(i));
  }
  for (std::size_t u = 0; u < m && cols.size() < m; ++u) {
    VecFq e(m, 0);
    e[u] = 1;
    if (eb.add(e)) cols.push_back(std::move(e));
  }
  // E has the adapted basis as columns.
  const MatFq e_mat = transpose(MatFq::from_rows(cols, m));
  const MatFq e_inv = *inverse(f, e_mat);
  std::vector<MatFq> out;
  for (std::size_t j = r; j < m; ++j)
    for (std::size_t l = 0; l < m; ++l) {
      MatFq w(m, m);
      std::copy(e_inv.row(j).begin(), e_inv.row(j).end(), w.row(l).begin());
      out.push_back(std::move(w));
    }
  return out;
}

StructuralReport verify_structural_bounds(const BaseField& f, const MatrixCodeBasis& code, const MatFq& span_rows,
                                          const std::vector<MatFq>& right_witnesses, bool expect_right_field) {
  StructuralReport rep;
  rep.m = code.m;
  rep.r = rank(f, span_rows);
  const AlgebraBasis lstab = algebra(f, code, Side::Left, AlgebraKind::Stabilizer);
  const AlgebraBasis lann = algebra(f, code, Side::Left, AlgebraKind::Annihilator);
  const AlgebraBasis rstab = algebra(f, code, Side::Right, AlgebraKind::Stabilizer);
  rep.left_stab_dim = lstab.dim();
  rep.left_ann_dim = lann.dim();
  rep.right_stab_dim = rstab.dim();
  const std::size_t bound = rep.m * (rep.m - rep.r);
  rep.left_ann_bound = rep.left_ann_dim >= bound;
  rep.left_stab_bound = rep.left_stab_dim >= bound + 1;
  if (expect_right_field) rep.right_stab_bound = rep.right_stab_dim >= rep.m;
  rep.ann_in_stab = std::all_of(lann.gens.begin(), lann.gens.end(), [&](const MatFq& a) {
    return in_algebra(f, code, Side::Left, AlgebraKind::Stabilizer, a);
  });
  rep.witnesses_ok = true;
  for (const auto& w : right_witnesses) {
    ++rep.witnesses_checked;
    rep.witnesses_ok = rep.witnesses_ok && in_algebra(f, code, Side::Right, AlgebraKind::Stabilizer, w);
  }
  for (const auto& w : annihilator_witnesses(f, span_rows)) {
    ++rep.witnesses_checked;
    rep.witnesses_ok = rep.witnesses_ok && in_algebra(f, code, Side::Left, AlgebraKind::Annihilator, w);
  }
  return rep;
}

}  // namespace lgs
