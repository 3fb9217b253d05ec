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

#include "lgs/field.hpp"
#include "lgs/qpoly.hpp"

namespace lgs {

/// Gabidulin code G(g, k) over F_{q^m}: evaluations of q-polynomials of
/// q-degree < k on the support g.
struct GabCode {
  FieldPtr field;
  ExtWord g;
  std::size_t k = 0;

  std::size_t n() const { return g.size(); }
  /// Minimum rank distance n - k + 1.
  std::size_t d() const { return n() - k + 1; }
  /// Unique decoding radius floor((n - k) / 2).
  std::size_t radius() const { return (n() - k) / 2; }
};

/// G_λ(g, k) = G(g, k) Diag(λ).
struct LambdaGabCode {
  GabCode base;
  ExtWord lambda;
  /// Rank weight of (λ_1^{-1}, ..., λ_n^{-1}).
  std::size_t delta = 1;

  std::size_t n() const { return base.n(); }
  std::size_t k() const { return base.k; }
  const ExtField& field() const { return *base.field; }
};

/// Validates n <= m, 1 <= k <= n and F_q-independence of g.
GabCode make_gab(FieldPtr field, ExtWord g, std::size_t k);
/// Validates nonzero multipliers and computes delta.
LambdaGabCode make_lambda_gab(GabCode base, ExtWord lambda);
/// Multipliers all equal to one.
LambdaGabCode plain_lambda_gab(GabCode base);

/// floor((n - k) / (2 delta)).
std::size_t t_pub(std::size_t n, std::size_t k, std::size_t delta);

/// Row i is (g_1^{q^i}, ..., g_n^{q^i}).
ExtMatrix gen_matrix(const GabCode& code);
ExtMatrix lambda_gen_matrix(const LambdaGabCode& code);

ExtWord encode(const GabCode& code, const ExtWord& msg);
ExtWord encode(const LambdaGabCode& code, const ExtWord& msg);

struct Decoded {
  ExtWord message;   // q-polynomial coefficients, length k
  ExtWord codeword;
  ExtWord error;     // y - codeword
};

/// Welch-Berlekamp style interpolation decoder for rank errors up to
/// floor((n - k) / 2). Throws DecodeFailure otherwise.
Decoded decode(const GabCode& code, const ExtWord& y);
/// Decodes y Δ^{-1} in the base code and rescales. The error radius is
/// floor(floor((n - k) / 2) / delta).
Decoded lambda_decode(const LambdaGabCode& code, const ExtWord& y);

/// n entries of F_{q^m} that are F_q-linearly independent (n <= m).
ExtWord sample_support(const ExtField& f, std::size_t n, Rng& rng);
/// Nonzero multipliers whose inverses span a space of dimension exactly delta.
ExtWord sample_lambda(const ExtField& f, std::size_t n, std::size_t delta, Rng& rng);
/// E = A B with A (m x t) and B (t x n) of full rank t, so rank(E) = t.
MatFq sample_error(const BaseField& f, std::size_t m, std::size_t n, std::size_t t, Rng& rng);

/// G^vec: row j*m + i is φ_B^vec(b_i times row j of G_λ); shape km x mn.
MatFq expanded_generator(const LambdaGabCode& code, const QBasis& basis);

}  // namespace lgs
