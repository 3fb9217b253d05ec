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

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "lgs/base_field.hpp"
#include "lgs/matrix.hpp"
#include "lgs/random.hpp"

namespace lgs {

/// Description of the tower F_p ⊂ F_q ⊂ F_{q^m}.
struct FieldParams {
  std::uint32_t p = 2;
  std::uint32_t e = 1;
  std::uint32_t m = 1;
  std::vector<std::uint32_t> base_modulus;  // degree e over F_p, low first, monic
  VecFq top_modulus;                        // degree m over F_q, low first, monic

  std::uint32_t q() const;
  bool operator==(const FieldParams&) const = default;
};

/// Both moduli are the lexicographically smallest monic irreducibles.
FieldParams make_field(std::uint32_t p, std::uint32_t e, std::uint32_t m);
/// Same, with q given as a prime power.
FieldParams make_field_q(std::uint64_t q, std::uint32_t m);

/// Element of F_{q^m} on the power basis 1, α, ..., α^{m-1}.
struct ExtElement {
  VecFq c;
  bool operator==(const ExtElement&) const = default;
};

using ExtWord = std::vector<ExtElement>;
/// Row-major matrix over F_{q^m}, one ExtWord per row.
using ExtMatrix = std::vector<ExtWord>;

class ExtField {
 public:
  /// Validates both moduli.
  explicit ExtField(FieldParams params);

  static std::shared_ptr<const ExtField> create(std::uint64_t q, std::uint32_t m) {
    return std::make_shared<const ExtField>(make_field_q(q, m));
  }

  const FieldParams& params() const { return params_; }
  const BaseField& base() const { return base_; }
  std::uint32_t m() const { return params_.m; }
  std::uint32_t q() const { return base_.q(); }

  ExtElement zero() const { return {VecFq(params_.m, 0)}; }
  ExtElement one() const;
  /// The class of x modulo the top modulus.
  ExtElement alpha() const;
  ExtElement from_base(fq_t a) const;
  bool is_zero(const ExtElement& x) const;
  /// True when x lies in F_q.
  bool in_base(const ExtElement& x) const;

  ExtElement add(const ExtElement& a, const ExtElement& b) const;
  ExtElement sub(const ExtElement& a, const ExtElement& b) const;
  ExtElement neg(const ExtElement& a) const;
  ExtElement mul(const ExtElement& a, const ExtElement& b) const;
  ExtElement scale(fq_t c, const ExtElement& a) const;
  ExtElement inv(const ExtElement& a) const;
  ExtElement div(const ExtElement& a, const ExtElement& b) const { return mul(a, inv(b)); }
  ExtElement pow(ExtElement a, std::uint64_t k) const;
  /// a^{q^i}.
  ExtElement frobenius(const ExtElement& a, std::uint64_t i) const;

  ExtElement random(Rng& rng) const;
  ExtElement random_nonzero(Rng& rng) const;

  /// Matrix of x -> x^{q^i} acting on power-basis column vectors.
  const MatFq& frobenius_matrix(std::uint64_t i) const { return frob_[i % params_.m]; }

 private:
  FieldParams params_;
  BaseField base_;
  std::vector<MatFq> frob_;  // frob_[i] represents x -> x^{q^i}, i < m
};

using FieldPtr = std::shared_ptr<const ExtField>;

// ---- words -----------------------------------------------------------------

ExtWord zero_word(const ExtField& f, std::size_t n);
ExtWord word_add(const ExtField& f, const ExtWord& a, const ExtWord& b);
ExtWord word_sub(const ExtField& f, const ExtWord& a, const ExtWord& b);
ExtWord word_scale(const ExtField& f, const ExtElement& c, const ExtWord& a);
bool word_is_zero(const ExtField& f, const ExtWord& a);
/// n x m matrix whose rows are the power-basis coordinates of the entries.
MatFq coordinate_rows(const ExtWord& x, std::size_t m);
/// F_q-dimension of the span of the coordinates of x.
std::size_t rank_weight(const ExtField& f, const ExtWord& x);

// ---- bases and expansion ---------------------------------------------------

/// Ordered F_q-basis of F_{q^m}. from_coords has column j equal to the power
/// coordinates of b_j; to_coords is its inverse.
struct QBasis {
  std::vector<ExtElement> elements;
  MatFq to_coords;
  MatFq from_coords;
};

QBasis power_basis(const ExtField& f);
/// Throws ParamError if the elements are not a basis.
QBasis make_basis(const ExtField& f, std::vector<ExtElement> elements);
/// Uniform over ordered bases (rejection until independent).
QBasis random_basis(const ExtField& f, Rng& rng);

VecFq to_basis_coords(const ExtField& f, const QBasis& b, const ExtElement& x);
ExtElement from_basis_coords(const ExtField& f, const QBasis& b, std::span<const fq_t> v);

/// φ_B^vec: entry i of x occupies positions i*m ... i*m+m-1.
VecFq expand_vec(const ExtField& f, const QBasis& b, const ExtWord& x);
ExtWord contract_vec(const ExtField& f, const QBasis& b, std::span<const fq_t> v);
/// φ_B^mat: column i is the B-expansion of x_i.
MatFq expand_mat(const ExtField& f, const QBasis& b, const ExtWord& x);
ExtWord contract_mat(const ExtField& f, const QBasis& b, const MatFq& m);

// ---- linear algebra over F_{q^m} -------------------------------------------

/// Row vector times matrix.
ExtWord ext_vec_mul(const ExtField& f, const ExtWord& x, const ExtMatrix& a);
std::size_t ext_rank(const ExtField& f, ExtMatrix a);
/// Basis of {x : A x^T = 0} for an A with the given column count.
ExtMatrix ext_kernel(const ExtField& f, ExtMatrix a, std::size_t cols);

}  // namespace lgs
