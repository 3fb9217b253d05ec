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
#include <vector>

#include "lgs/gabidulin.hpp"
#include "lgs/matrix.hpp"

namespace lgs {

/// F_q-basis of a subspace of F_{q^m}.
using Subspace = std::vector<ExtElement>;

/// F_q-basis (canonical: RREF of the power-basis expansion) of the code
/// generated over F_{q^m} by `gen`, intersected with V_1 x ... x V_n.
std::vector<ExtWord> intersect_restriction(const ExtField& f, const ExtMatrix& gen,
                                           const std::vector<Subspace>& spaces);

/// C ∩ V^n, generic intersection.
std::vector<ExtWord> subspace_subcode(const LambdaGabCode& code, const Subspace& v);
/// Gabidulin case with m = n: words ((Q∘A)(g_1), ..., (Q∘A)(g_n)) where Q is
/// the cofactor of the subspace polynomial of V and qdeg A < k - (m - s).
std::vector<ExtWord> subspace_subcode_qpoly(const GabCode& code, const Subspace& v);
/// G_λ ∩ (V_1 x ... x V_n) via G ∩ Π λ_i^{-1} V_i, scaled back by Δ.
std::vector<ExtWord> generalized_subcode(const LambdaGabCode& code, const std::vector<Subspace>& spaces);

/// Exponents (base q) of the cardinality bounds for G_λ ∩ W. The upper bound
/// is only stated when max s_i - d + 1 > 0; otherwise it is empty.
struct CardinalityBounds {
  long long lower = 0;
  std::optional<long long> upper;
};
CardinalityBounds cardinality_bounds(std::size_t m, std::size_t n, std::size_t k,
                                     const std::vector<std::size_t>& s_list);

/// Same span test for lists of words over F_{q^m}.
bool same_span(const ExtField& f, const std::vector<ExtWord>& a, const std::vector<ExtWord>& b);

/// Random F_q-subcode with generator P G^vec.
struct RandomSubcode {
  MatFq p_matrix;  // k' x km, full rank
  MatFq gen;       // k' x mn
  std::size_t attempts = 1;

  /// The subcode as m x n matrices (rows of gen folded).
  MatrixCodeBasis matrix_code(std::size_t m) const { return MatrixCodeBasis::from_unfolded(gen, m); }
};

/// Uniform full-rank P by rejection. Requires 1 <= k' < km and m ∤ k' unless
/// `allow_divisible` (then k' = km is also accepted).
RandomSubcode random_subcode(const BaseField& f, const MatFq& parent_gen_vec, std::size_t m, std::size_t k_prime,
                             Rng& rng, bool allow_divisible = false);

/// Draws subcodes from subseeds derive(seed, "filter", attempt) until both
/// stabilizers of the matrix image are trivial. Throws RetryExhausted after
/// `budget` attempts.
RandomSubcode filtered_random_subcode(const BaseField& f, const MatFq& parent_gen_vec, std::size_t m,
                                      std::size_t k_prime, const Seed& seed, std::size_t budget = 16);

}  // namespace lgs
