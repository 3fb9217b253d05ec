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

#include <utility>
#include <vector>

#include "lgs/field.hpp"

namespace lgs {

/// Linearized polynomial sum a_i x^{q^i}, coefficients low first, no trailing
/// zeros. The zero polynomial has no coefficients and q-degree -1.
struct QPoly {
  std::vector<ExtElement> coeffs;

  int qdeg() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  bool operator==(const QPoly&) const = default;
};

struct QDivision {
  QPoly quotient;
  QPoly remainder;
};

QPoly qp_trim(const ExtField& f, QPoly p);
/// c x^{q^i}.
QPoly qp_monomial(const ExtField& f, std::size_t i, const ExtElement& c);
/// The identity map x.
QPoly qp_identity(const ExtField& f);
/// x^{q^m} - x.
QPoly qp_field_poly(const ExtField& f);

QPoly qp_add(const ExtField& f, const QPoly& a, const QPoly& b);
QPoly qp_sub(const ExtField& f, const QPoly& a, const QPoly& b);
/// c * P (scales every coefficient).
QPoly qp_scale(const ExtField& f, const ExtElement& c, const QPoly& p);
/// Divides by the leading coefficient; zero stays zero.
QPoly qp_monic(const ExtField& f, const QPoly& p);

ExtElement qp_eval(const ExtField& f, const QPoly& p, const ExtElement& x);
ExtWord qp_eval(const ExtField& f, const QPoly& p, const ExtWord& xs);
/// P∘Q, formal (not reduced modulo x^{q^m} - x).
QPoly compose(const ExtField& f, const QPoly& p, const QPoly& q);

/// A = quotient∘B + remainder with qdeg(remainder) < qdeg(B).
QDivision skew_divide(const ExtField& f, const QPoly& a, const QPoly& b);
/// A = B∘quotient + remainder with qdeg(remainder) < qdeg(B).
QDivision skew_divide_left(const ExtField& f, const QPoly& a, const QPoly& b);

/// Monic q-polynomial of q-degree s whose roots are exactly the F_q-span of
/// the s given elements. Requires 0 < s < m and independent inputs.
QPoly subspace_poly(const ExtField& f, const std::vector<ExtElement>& v);
/// Q with Q∘P = x^{q^m} - x. Throws if P does not divide it.
QPoly cofactor(const ExtField& f, const QPoly& p);

/// m x m matrix of the induced F_q-linear map on power-basis column vectors.
MatFq qp_map_matrix(const ExtField& f, const QPoly& p);

}  // namespace lgs
