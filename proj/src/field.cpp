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

#include "lgs/field.hpp"

#include <algorithm>
#include <string>

#include "lgs/error.hpp"

namespace lgs {

std::uint32_t FieldParams::q() const {
  std::uint32_t r = 1;
  for (std::uint32_t i = 0; i < e; ++i) r *= p;
  return r;
}

FieldParams make_field(std::uint32_t p, std::uint32_t e, std::uint32_t m) {
  if (m < 1) throw ParamError("extension degree m must be >= 1");
  BaseField base(p, e);
  FieldParams fp;
  fp.p = p;
  fp.e = e;
  fp.m = m;
  fp.base_modulus = base.modulus();
  fp.top_modulus = smallest_irreducible<BaseField, fq_t>(base, base.q(), m,
                                                         [](std::uint64_t i) { return static_cast<fq_t>(i); });
  return fp;
}

FieldParams make_field_q(std::uint64_t q, std::uint32_t m) {
  std::uint32_t p = 0, e = 0;
  if (q < 2 || !split_prime_power(q, p, e)) throw ParamError("q = " + std::to_string(q) + " is not a prime power");
  return make_field(p, e, m);
}

namespace {

// A x for a column vector x.
VecFq apply(const BaseField& f, const MatFq& a, std::span<const fq_t> x) {
  VecFq out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) out[i] = dot(f, a.row(i), x);
  return out;
}

}  // namespace

ExtField::ExtField(FieldParams params) : params_(std::move(params)), base_(params_.p, params_.base_modulus) {
  const std::uint32_t m = params_.m;
  if (m < 1) throw ParamError("extension degree m must be >= 1");
  if (params_.e != base_.e()) throw ParamError("base modulus degree does not match e");
  if (params_.top_modulus.size() != m + 1 || params_.top_modulus.back() != 1)
    throw ParamError("top modulus must be monic of degree m");
  for (auto c : params_.top_modulus)
    if (c >= base_.q()) throw ParamError("top modulus coefficient outside F_q");
  PolyRing<BaseField, fq_t> ring{base_};
  if (!ring.is_irreducible(params_.top_modulus, base_.q())) throw ParamError("top modulus is not irreducible");

  MatFq f1(m, m);
  ExtElement aj = one();
  const ExtElement a = alpha();
  for (std::uint32_t j = 0; j < m; ++j) {
    const ExtElement img = pow(aj, base_.q());
    for (std::uint32_t i = 0; i < m; ++i) f1(i, j) = img.c[i];
    aj = mul(aj, a);
  }
  frob_.reserve(m);
  frob_.push_back(MatFq::identity(m));
  for (std::uint32_t i = 1; i < m; ++i) frob_.push_back(lgs::mul(base_, f1, frob_.back()));
}

ExtElement ExtField::one() const {
  ExtElement r = zero();
  r.c[0] = 1;
  return r;
}

ExtElement ExtField::alpha() const {
  ExtElement r = zero();
  if (params_.m > 1) {
    r.c[1] = 1;
  } else {
    r.c[0] = base_.neg(params_.top_modulus[0]);
  }
  return r;
}

ExtElement ExtField::from_base(fq_t a) const {
  ExtElement r = zero();
  r.c[0] = a;
  return r;
}

bool ExtField::is_zero(const ExtElement& x) const {
  return std::all_of(x.c.begin(), x.c.end(), [](fq_t v) { return v == 0; });
}

bool ExtField::in_base(const ExtElement& x) const {
  return std::all_of(x.c.begin() + 1, x.c.end(), [](fq_t v) { return v == 0; });
}

ExtElement ExtField::add(const ExtElement& a, const ExtElement& b) const {
  ExtElement r = a;
  for (std::uint32_t i = 0; i < params_.m; ++i) r.c[i] = base_.add(r.c[i], b.c[i]);
  return r;
}

ExtElement ExtField::sub(const ExtElement& a, const ExtElement& b) const {
  ExtElement r = a;
  for (std::uint32_t i = 0; i < params_.m; ++i) r.c[i] = base_.sub(r.c[i], b.c[i]);
  return r;
}

ExtElement ExtField::neg(const ExtElement& a) const {
  ExtElement r = a;
  for (auto& v : r.c) v = base_.neg(v);
  return r;
}

ExtElement ExtField::mul(const ExtElement& a, const ExtElement& b) const {
  const std::size_t m = params_.m;
  VecFq prod(2 * m - 1, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (a.c[i] == 0) continue;
    base_.axpy(std::span<fq_t>(prod.data() + i, m), a.c[i], b.c);
  }
  const auto& mod = params_.top_modulus;
  for (std::size_t d = 2 * m - 1; d-- > m;) {
    const fq_t c = prod[d];
    if (c == 0) continue;
    base_.axpy(std::span<fq_t>(prod.data() + d - m, m), base_.neg(c), std::span<const fq_t>(mod.data(), m));
    prod[d] = 0;
  }
  prod.resize(m);
  return {std::move(prod)};
}

ExtElement ExtField::scale(fq_t c, const ExtElement& a) const {
  ExtElement r = a;
  base_.scale(r.c, c);
  return r;
}

ExtElement ExtField::pow(ExtElement a, std::uint64_t k) const {
  ExtElement r = one();
  while (k > 0) {
    if (k & 1) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

ExtElement ExtField::frobenius(const ExtElement& a, std::uint64_t i) const {
  if (i % params_.m == 0) return a;
  return {apply(base_, frob_[i % params_.m], a.c)};
}

ExtElement ExtField::inv(const ExtElement& a) const {
  if (is_zero(a)) throw ParamError("inverse of zero in F_{q^m}");
  // r = a^{q + q^2 + ... + q^{m-1}}; a * r is the norm, which lies in F_q.
  ExtElement r = one();
  ExtElement conj = a;
  for (std::uint32_t i = 1; i < params_.m; ++i) {
    conj = frobenius(conj, 1);
    r = mul(r, conj);
  }
  const ExtElement norm = mul(a, r);
  return scale(base_.inv(norm.c[0]), r);
}

ExtElement ExtField::random(Rng& rng) const {
  ExtElement r = zero();
  for (auto& v : r.c) v = static_cast<fq_t>(rng.uniform(base_.q()));
  return r;
}

ExtElement ExtField::random_nonzero(Rng& rng) const {
  for (;;) {
    ExtElement r = random(rng);
    if (!is_zero(r)) return r;
  }
}

// ---- words -----------------------------------------------------------------

ExtWord zero_word(const ExtField& f, std::size_t n) { return ExtWord(n, f.zero()); }

ExtWord word_add(const ExtField& f, const ExtWord& a, const ExtWord& b) {
  if (a.size() != b.size()) throw ParamError("word length mismatch");
  ExtWord r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
  return r;
}

ExtWord word_sub(const ExtField& f, const ExtWord& a, const ExtWord& b) {
  if (a.size() != b.size()) throw ParamError("word length mismatch");
  ExtWord r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.sub(a[i], b[i]);
  return r;
}

ExtWord word_scale(const ExtField& f, const ExtElement& c, const ExtWord& a) {
  ExtWord r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(c, a[i]);
  return r;
}

bool word_is_zero(const ExtField& f, const ExtWord& a) {
  return std::all_of(a.begin(), a.end(), [&](const ExtElement& x) { return f.is_zero(x); });
}

MatFq coordinate_rows(const ExtWord& x, std::size_t m) {
  MatFq out(x.size(), m);
  for (std::size_t i = 0; i < x.size(); ++i) std::copy(x[i].c.begin(), x[i].c.end(), out.row(i).begin());
  return out;
}

std::size_t rank_weight(const ExtField& f, const ExtWord& x) {
  return rank(f.base(), coordinate_rows(x, f.m()));
}

// ---- bases and expansion ---------------------------------------------------

QBasis power_basis(const ExtField& f) {
  std::vector<ExtElement> els;
  for (std::uint32_t i = 0; i < f.m(); ++i) {
    ExtElement e = f.zero();
    e.c[i] = 1;
    els.push_back(std::move(e));
  }
  return make_basis(f, std::move(els));
}

QBasis make_basis(const ExtField& f, std::vector<ExtElement> elements) {
  const std::size_t m = f.m();
  if (elements.size() != m) throw ParamError("a basis of F_{q^m} needs exactly m elements");
  MatFq from(m, m);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < m; ++i) from(i, j) = elements[j].c[i];
  auto to = inverse(f.base(), from);
  if (!to) throw ParamError("basis elements are F_q-linearly dependent");
  return {std::move(elements), std::move(*to), std::move(from)};
}

QBasis random_basis(const ExtField& f, Rng& rng) {
  for (;;) {
    std::vector<ExtElement> els;
    for (std::uint32_t i = 0; i < f.m(); ++i) els.push_back(f.random(rng));
    if (rank_weight(f, els) == f.m()) return make_basis(f, std::move(els));
  }
}

VecFq to_basis_coords(const ExtField& f, const QBasis& b, const ExtElement& x) {
  return apply(f.base(), b.to_coords, x.c);
}

ExtElement from_basis_coords(const ExtField& f, const QBasis& b, std::span<const fq_t> v) {
  if (v.size() != f.m()) throw ParamError("coordinate vector length != m");
  return {apply(f.base(), b.from_coords, v)};
}

VecFq expand_vec(const ExtField& f, const QBasis& b, const ExtWord& x) {
  const std::size_t m = f.m();
  VecFq out(x.size() * m);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const VecFq c = to_basis_coords(f, b, x[i]);
    std::copy(c.begin(), c.end(), out.begin() + i * m);
  }
  return out;
}

ExtWord contract_vec(const ExtField& f, const QBasis& b, std::span<const fq_t> v) {
  const std::size_t m = f.m();
  if (v.size() % m != 0) throw ParamError("expanded word length not divisible by m");
  ExtWord out;
  out.reserve(v.size() / m);
  for (std::size_t i = 0; i < v.size() / m; ++i) out.push_back(from_basis_coords(f, b, v.subspan(i * m, m)));
  return out;
}

MatFq expand_mat(const ExtField& f, const QBasis& b, const ExtWord& x) { return fold(expand_vec(f, b, x), f.m()); }

ExtWord contract_mat(const ExtField& f, const QBasis& b, const MatFq& m) {
  if (m.rows() != f.m()) throw ParamError("matrix row count != m");
  return contract_vec(f, b, unfold(m));
}

// ---- linear algebra over F_{q^m} -------------------------------------------

ExtWord ext_vec_mul(const ExtField& f, const ExtWord& x, const ExtMatrix& a) {
  if (x.size() != a.size()) throw ParamError("vector-matrix product over F_{q^m}: shape mismatch");
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  ExtWord out = zero_word(f, cols);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (f.is_zero(x[i])) continue;
    for (std::size_t j = 0; j < cols; ++j) out[j] = f.add(out[j], f.mul(x[i], a[i][j]));
  }
  return out;
}

namespace {

/// In-place Gauss-Jordan; returns pivot columns.
std::vector<std::size_t> ext_rref(const ExtField& f, ExtMatrix& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && f.is_zero(a[piv][c])) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r]);
    const ExtElement inv = f.inv(a[r][c]);
    for (auto& x : a[r]) x = f.mul(inv, x);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || f.is_zero(a[i][c])) continue;
      const ExtElement factor = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] = f.sub(a[i][j], f.mul(factor, a[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t ext_rank(const ExtField& f, ExtMatrix a) {
  if (a.empty()) return 0;
  return ext_rref(f, a, a[0].size()).size();
}

ExtMatrix ext_kernel(const ExtField& f, ExtMatrix a, std::size_t cols) {
  for (const auto& row : a)
    if (row.size() != cols) throw ParamError("kernel over F_{q^m}: ragged matrix");
  const auto pivots = ext_rref(f, a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  ExtMatrix out;
  for (std::size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    ExtWord v = zero_word(f, cols);
    v[c] = f.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(a[r][c]);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace lgs
