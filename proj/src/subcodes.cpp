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

#include "lgs/subcodes.hpp"

#include <algorithm>
#include <string>

#include "lgs/error.hpp"
#include "lgs/qpoly.hpp"
#include "lgs/stab_algebra.hpp"

namespace lgs {

namespace {

VecFq power_expand(const ExtWord& w) {
  VecFq out;
  for (const auto& x : w) out.insert(out.end(), x.c.begin(), x.c.end());
  return out;
}

ExtWord power_contract(std::span<const fq_t> v, std::size_t m) {
  ExtWord out;
  for (std::size_t i = 0; i < v.size() / m; ++i) out.push_back({VecFq(v.begin() + i * m, v.begin() + (i + 1) * m)});
  return out;
}

MatFq expand_rows(const std::vector<ExtWord>& words, std::size_t cols) {
  MatFq out(0, cols);
  for (const auto& w : words) out.append_row(power_expand(w));
  return out;
}

std::vector<ExtWord> canonical_words(const ExtField& f, const MatFq& rows) {
  const MatFq basis = row_basis(f.base(), rows);
  std::vector<ExtWord> out;
  for (std::size_t i = 0; i < basis.rows(); ++i) out.push_back(power_contract(basis.row(i), f.m()));
  return out;
}

}  // namespace

std::vector<ExtWord> intersect_restriction(const ExtField& f, const ExtMatrix& gen,
                                           const std::vector<Subspace>& spaces) {
  const std::size_t m = f.m();
  if (gen.empty()) return {};
  const std::size_t n = gen[0].size();
  if (spaces.size() != n) throw ParamError("need one subspace per coordinate");
  const QBasis pb = power_basis(f);

  // F_q-basis of the code: b_i times each generator row.
  std::vector<ExtWord> code_rows;
  for (const auto& row : gen)
    for (const auto& b : pb.elements) code_rows.push_back(word_scale(f, b, row));
  std::vector<ExtWord> w_rows;
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& v : spaces[i]) {
      ExtWord w = zero_word(f, n);
      w[i] = v;
      w_rows.push_back(std::move(w));
    }
  if (w_rows.empty()) return {};

  const MatFq c = expand_rows(code_rows, n * m);
  const MatFq w = expand_rows(w_rows, n * m);
  // x C = y W  <=>  (x, -y) lies in the left kernel of [C; W].
  const MatFq ker = left_kernel_basis(f.base(), vstack(c, w));
  MatFq inter(0, n * m);
  for (std::size_t r = 0; r < ker.rows(); ++r) {
    const auto x = ker.row(r).subspan(0, c.rows());
    inter.append_row(vec_mul(f.base(), x, c));
  }
  return canonical_words(f, inter);
}

std::vector<ExtWord> subspace_subcode(const LambdaGabCode& code, const Subspace& v) {
  return intersect_restriction(code.field(), lambda_gen_matrix(code), std::vector<Subspace>(code.n(), v));
}

std::vector<ExtWord> subspace_subcode_qpoly(const GabCode& code, const Subspace& v) {
  const ExtField& f = *code.field;
  const std::size_t m = f.m();
  if (code.n() != m) throw ParamError("q-polynomial parametrization needs n = m");
  const std::size_t s = v.size();
  const QPoly q = cofactor(f, subspace_poly(f, v));
  if (code.k + s <= m) return {};
  const std::size_t deg_bound = code.k + s - m;
  const QBasis pb = power_basis(f);
  MatFq rows(0, code.n() * m);
  for (std::size_t i = 0; i < deg_bound; ++i)
    for (const auto& b : pb.elements) {
      const QPoly qa = compose(f, q, qp_monomial(f, i, b));
      rows.append_row(power_expand(qp_eval(f, qa, code.g)));
    }
  return canonical_words(f, rows);
}

std::vector<ExtWord> generalized_subcode(const LambdaGabCode& code, const std::vector<Subspace>& spaces) {
  const ExtField& f = code.field();
  if (spaces.size() != code.n()) throw ParamError("need one subspace per coordinate");
  std::vector<Subspace> scaled(spaces.size());
  for (std::size_t i = 0; i < spaces.size(); ++i) {
    const ExtElement li = f.inv(code.lambda[i]);
    for (const auto& x : spaces[i]) scaled[i].push_back(f.mul(li, x));
  }
  const std::vector<ExtWord> inner = intersect_restriction(f, gen_matrix(code.base), scaled);
  MatFq rows(0, code.n() * f.m());
  for (const auto& w : inner) {
    ExtWord back = w;
    for (std::size_t i = 0; i < back.size(); ++i) back[i] = f.mul(back[i], code.lambda[i]);
    rows.append_row(power_expand(back));
  }
  return canonical_words(f, rows);
}

CardinalityBounds cardinality_bounds(std::size_t m, std::size_t n, std::size_t k,
                                     const std::vector<std::size_t>& s_list) {
  if (s_list.size() != n || k > n) throw ParamError("cardinality bounds: need n subspace dimensions and k <= n");
  long long sum = 0;
  std::size_t smax = 0;
  for (auto s : s_list) {
    sum += static_cast<long long>(s);
    smax = std::max(smax, s);
  }
  CardinalityBounds b;
  const auto mm = static_cast<long long>(m);
  b.lower = sum - mm * static_cast<long long>(n - k);
  const long long d = static_cast<long long>(n - k + 1);
  const long long slack = static_cast<long long>(smax) - d + 1;
  if (slack > 0) b.upper = mm * slack;
  return b;
}

bool same_span(const ExtField& f, const std::vector<ExtWord>& a, const std::vector<ExtWord>& b) {
  if (a.empty() && b.empty()) return true;
  const std::size_t cols = (a.empty() ? b : a)[0].size() * f.m();
  return same_row_space(f.base(), expand_rows(a, cols), expand_rows(b, cols));
}

RandomSubcode random_subcode(const BaseField& f, const MatFq& parent_gen_vec, std::size_t m, std::size_t k_prime,
                             Rng& rng, bool allow_divisible) {
  const std::size_t km = parent_gen_vec.rows();
  if (k_prime < 1 || k_prime > km || (k_prime == km && !allow_divisible))
    throw ParamError("subcode dimension must satisfy 1 <= k' < km");
  if (!allow_divisible && k_prime % m == 0)
    throw ParamError("k' = " + std::to_string(k_prime) + " is divisible by m");
  for (;;) {
    MatFq p(k_prime, km);
    for (auto& x : p.data()) x = static_cast<fq_t>(rng.uniform(f.q()));
    if (rank(f, p) != k_prime) continue;
    MatFq gen = mul(f, p, parent_gen_vec);
    return {std::move(p), std::move(gen), 1};
  }
}

RandomSubcode filtered_random_subcode(const BaseField& f, const MatFq& parent_gen_vec, std::size_t m,
                                      std::size_t k_prime, const Seed& seed, std::size_t budget) {
  for (std::size_t attempt = 0; attempt < budget; ++attempt) {
    Rng rng(Rng::derive(seed, "filter", attempt));
    RandomSubcode sc = random_subcode(f, parent_gen_vec, m, k_prime, rng);
    const MatrixCodeBasis code = sc.matrix_code(m);
    if (is_trivial_stab(f, code, Side::Left) && is_trivial_stab(f, code, Side::Right)) {
      sc.attempts = attempt + 1;
      return sc;
    }
  }
  throw RetryExhausted("no subcode with trivial stabilizers after " + std::to_string(budget) + " attempts");
}

}  // namespace lgs
