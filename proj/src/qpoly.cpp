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

#include "lgs/qpoly.hpp"

#include <algorithm>

#include "lgs/error.hpp"

namespace lgs {

QPoly qp_trim(const ExtField& f, QPoly p) {
  while (!p.coeffs.empty() && f.is_zero(p.coeffs.back())) p.coeffs.pop_back();
  return p;
}

QPoly qp_monomial(const ExtField& f, std::size_t i, const ExtElement& c) {
  if (f.is_zero(c)) return {};
  QPoly p{std::vector<ExtElement>(i + 1, f.zero())};
  p.coeffs[i] = c;
  return p;
}

QPoly qp_identity(const ExtField& f) { return qp_monomial(f, 0, f.one()); }

QPoly qp_field_poly(const ExtField& f) {
  QPoly p = qp_monomial(f, f.m(), f.one());
  p.coeffs[0] = f.neg(f.one());
  return p;
}

QPoly qp_add(const ExtField& f, const QPoly& a, const QPoly& b) {
  QPoly r = a;
  if (r.coeffs.size() < b.coeffs.size()) r.coeffs.resize(b.coeffs.size(), f.zero());
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) r.coeffs[i] = f.add(r.coeffs[i], b.coeffs[i]);
  return qp_trim(f, std::move(r));
}

QPoly qp_sub(const ExtField& f, const QPoly& a, const QPoly& b) {
  QPoly r = a;
  if (r.coeffs.size() < b.coeffs.size()) r.coeffs.resize(b.coeffs.size(), f.zero());
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) r.coeffs[i] = f.sub(r.coeffs[i], b.coeffs[i]);
  return qp_trim(f, std::move(r));
}

QPoly qp_scale(const ExtField& f, const ExtElement& c, const QPoly& p) {
  QPoly r = p;
  for (auto& a : r.coeffs) a = f.mul(c, a);
  return qp_trim(f, std::move(r));
}

QPoly qp_monic(const ExtField& f, const QPoly& p) {
  if (p.is_zero()) return p;
  return qp_scale(f, f.inv(p.coeffs.back()), p);
}

ExtElement qp_eval(const ExtField& f, const QPoly& p, const ExtElement& x) {
  ExtElement acc = f.zero();
  ExtElement xi = x;
  for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
    if (i > 0) xi = f.frobenius(xi, 1);
    if (!f.is_zero(p.coeffs[i])) acc = f.add(acc, f.mul(p.coeffs[i], xi));
  }
  return acc;
}

ExtWord qp_eval(const ExtField& f, const QPoly& p, const ExtWord& xs) {
  ExtWord out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(qp_eval(f, p, x));
  return out;
}

QPoly compose(const ExtField& f, const QPoly& p, const QPoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  QPoly r{std::vector<ExtElement>(p.coeffs.size() + q.coeffs.size() - 1, f.zero())};
  for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
    if (f.is_zero(p.coeffs[i])) continue;
    for (std::size_t j = 0; j < q.coeffs.size(); ++j) {
      if (f.is_zero(q.coeffs[j])) continue;
      r.coeffs[i + j] = f.add(r.coeffs[i + j], f.mul(p.coeffs[i], f.frobenius(q.coeffs[j], i)));
    }
  }
  return qp_trim(f, std::move(r));
}

QDivision skew_divide(const ExtField& f, const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw ParamError("skew division by the zero q-polynomial");
  const int s = b.qdeg();
  QDivision out{{}, a};
  QPoly& r = out.remainder;
  while (r.qdeg() >= s) {
    const auto d = static_cast<std::size_t>(r.qdeg() - s);
    // (c x^{q^d})∘B has leading coefficient c * b_s^{q^d}.
    const ExtElement c = f.div(r.coeffs.back(), f.frobenius(b.coeffs.back(), d));
    const QPoly term = qp_monomial(f, d, c);
    out.quotient = qp_add(f, out.quotient, term);
    r = qp_sub(f, r, compose(f, term, b));
  }
  return out;
}

QDivision skew_divide_left(const ExtField& f, const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw ParamError("skew division by the zero q-polynomial");
  const int s = b.qdeg();
  const std::uint32_t m = f.m();
  const std::uint64_t undo = (m - static_cast<std::uint64_t>(s) % m) % m;
  QDivision out{{}, a};
  QPoly& r = out.remainder;
  while (r.qdeg() >= s) {
    const auto d = static_cast<std::size_t>(r.qdeg() - s);
    // B∘(c x^{q^d}) has leading coefficient b_s * c^{q^s}.
    const ExtElement c = f.frobenius(f.div(r.coeffs.back(), b.coeffs.back()), undo);
    const QPoly term = qp_monomial(f, d, c);
    out.quotient = qp_add(f, out.quotient, term);
    r = qp_sub(f, r, compose(f, b, term));
  }
  return out;
}

QPoly subspace_poly(const ExtField& f, const std::vector<ExtElement>& v) {
  if (v.empty() || v.size() >= f.m()) throw ParamError("subspace dimension must satisfy 0 < s < m");
  const QPoly xq = qp_monomial(f, 1, f.one());
  const std::uint64_t qm1 = f.q() - 1;
  QPoly p = qp_identity(f);
  for (const auto& vi : v) {
    const ExtElement w = qp_eval(f, p, vi);
    if (f.is_zero(w)) throw ParamError("subspace generators are F_q-linearly dependent");
    p = qp_sub(f, compose(f, xq, p), qp_scale(f, f.pow(w, qm1), p));
  }
  return p;
}

QPoly cofactor(const ExtField& f, const QPoly& p) {
  if (p.is_zero() || p.qdeg() < 1 || static_cast<std::uint32_t>(p.qdeg()) >= f.m())
    throw ParamError("cofactor needs a subspace polynomial of q-degree 0 < s < m");
  QDivision d = skew_divide(f, qp_field_poly(f), p);
  if (!d.remainder.is_zero()) throw ParamError("q-polynomial does not divide x^{q^m} - x");
  return d.quotient;
}

MatFq qp_map_matrix(const ExtField& f, const QPoly& p) {
  const std::uint32_t m = f.m();
  MatFq out(m, m);
  const QBasis pb = power_basis(f);
  for (std::uint32_t j = 0; j < m; ++j) {
    const ExtElement img = qp_eval(f, p, pb.elements[j]);
    for (std::uint32_t i = 0; i < m; ++i) out(i, j) = img.c[i];
  }
  return out;
}

}  // namespace lgs
