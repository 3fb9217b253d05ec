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
#include <string>
#include <vector>

#include "lgs/field.hpp"
#include "lgs/matrix.hpp"

namespace lgs {

enum class Side { Left, Right };
enum class AlgebraKind { Stabilizer, Annihilator };

std::string to_string(Side s);
std::string to_string(AlgebraKind k);

/// F_q-basis of a stabilizer or annihilator algebra. Generators are listed in
/// RREF order of their column-stacked vectorisations.
struct AlgebraBasis {
  Side side = Side::Left;
  AlgebraKind kind = AlgebraKind::Stabilizer;
  std::vector<MatFq> gens;

  std::size_t dim() const { return gens.size(); }
};

/// Rows Unfold(H_i)(G_j^T ⊗ I_m) acting on vec(A), one per pair (i, j), with H
/// a basis of the dual code. Literal Kronecker construction; test reference.
MatFq left_stab_system_kron(const BaseField& f, const MatrixCodeBasis& code, const MatrixCodeBasis& dual);
/// Same rows, entry a + m*b of row (i, j) computed as (H_i G_j^T)(a, b).
MatFq left_stab_system_serial(const BaseField& f, const MatrixCodeBasis& code, const MatrixCodeBasis& dual);
/// Parallel assembly of left_stab_system_serial; identical output.
MatFq left_stab_system(const BaseField& f, const MatrixCodeBasis& code, const MatrixCodeBasis& dual);
/// Stacked G_j^T ⊗ I_m.
MatFq left_ann_system(const BaseField& f, const MatrixCodeBasis& code);

/// Kernel method for any side and kind. Right-side algebras are computed on
/// the transposed code and transposed back.
AlgebraBasis algebra(const BaseField& f, const MatrixCodeBasis& code, Side side, AlgebraKind kind);
/// Left annihilator from the row kernel of [G_1 | ... | G_k']: dimension
/// m (m - rank). Used to cross-check the Kronecker system.
AlgebraBasis left_annihilator_direct(const BaseField& f, const MatrixCodeBasis& code);

/// True iff the stabilizer on that side is the scalars. Rows of the linear
/// system are added incrementally and the scan stops once the kernel is
/// forced down to dimension one, so large codes are cheap when trivial.
bool is_trivial_stab(const BaseField& f, const MatrixCodeBasis& code, Side side);
/// Reference: full system, no early exit.
bool is_trivial_stab_serial(const BaseField& f, const MatrixCodeBasis& code, Side side);

/// Direct check that M stabilizes (or annihilates) the code on that side.
bool in_algebra(const BaseField& f, const MatrixCodeBasis& code, Side side, AlgebraKind kind, const MatFq& a);

/// N_α for n = m: column j holds the coordinates of α g_j in the basis g.
MatFq multiplication_witness(const ExtField& f, const ExtWord& g, const ExtElement& alpha);
/// e_l · (E^{-1})_{j,:} for an adapted basis E whose first r columns span the
/// row space of `span_rows`; m (m - r) matrices annihilating that space.
std::vector<MatFq> annihilator_witnesses(const BaseField& f, const MatFq& span_rows);

struct StructuralReport {
  std::size_t m = 0;
  std::size_t r = 0;  // dimension of the coordinate span (s for subspace subcodes)
  std::size_t left_stab_dim = 0;
  std::size_t left_ann_dim = 0;
  std::size_t right_stab_dim = 0;
  bool left_ann_bound = false;   // left_ann_dim >= m (m - r)
  bool left_stab_bound = false;  // left_stab_dim >= m (m - r) + 1
  bool right_stab_bound = true;  // right_stab_dim >= m, when requested
  bool ann_in_stab = false;
  std::size_t witnesses_checked = 0;
  bool witnesses_ok = false;

  bool ok() const { return left_ann_bound && left_stab_bound && right_stab_bound && ann_in_stab && witnesses_ok; }
};

/// Computes the algebras of `code` (m x n matrices whose columns lie in the
/// row space of `span_rows`, an r x m matrix) and checks the lower bounds and
/// witnesses. `right_witnesses` are candidate right stabilizers (N_α); when
/// `expect_right_field` is set, right_stab_dim >= m is also required.
StructuralReport verify_structural_bounds(const BaseField& f, const MatrixCodeBasis& code, const MatFq& span_rows,
                                          const std::vector<MatFq>& right_witnesses, bool expect_right_field);

}  // namespace lgs
