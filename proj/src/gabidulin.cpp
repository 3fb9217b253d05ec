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

#include "lgs/gabidulin.hpp"

#include <algorithm>
#include <string>

#include "lgs/error.hpp"

namespace lgs {

GabCode make_gab(FieldPtr field, ExtWord g, std::size_t k) {
  if (!field) throw ParamError("Gabidulin code without a field");
  const std::size_t n = g.size();
  if (n == 0 || n > field->m()) throw ParamError("Gabidulin length must satisfy 1 <= n <= m");
  if (k < 1 || k > n) throw ParamError("Gabidulin dimension must satisfy 1 <= k <= n");
  if (rank_weight(*field, g) != n) throw ParamError("support entries are not F_q-linearly independent");
  return {std::move(field), std::move(g), k};
}

LambdaGabCode make_lambda_gab(GabCode base, ExtWord lambda) {
  const ExtField& f = *base.field;
  if (lambda.size() != base.n()) throw ParamError("multiplier length != n");
  ExtWord inv;
  for (const auto& l : lambda) {
    if (f.is_zero(l)) throw ParamError("multipliers must be nonzero");
    inv.push_back(f.inv(l));
  }
  const std::size_t delta = rank_weight(f, inv);
  return {std::move(base), std::move(lambda), delta};
}

LambdaGabCode plain_lambda_gab(GabCode base) {
  ExtWord ones(base.n(), base.field->one());
  return make_lambda_gab(std::move(base), std::move(ones));
}

std::size_t t_pub(std::size_t n, std::size_t k, std::size_t delta) {
  if (delta == 0 || k > n) throw ParamError("t_pub needs delta >= 1 and k <= n");
  return (n - k) / (2 * delta);
}

ExtMatrix gen_matrix(const GabCode& code) {
  const ExtField& f = *code.field;
  ExtMatrix g;
  ExtWord row = code.g;
  for (std::size_t i = 0; i < code.k; ++i) {
    g.push_back(row);
    for (auto& x : row) x = f.frobenius(x, 1);
  }
  return g;
}

ExtMatrix lambda_gen_matrix(const LambdaGabCode& code) {
  const ExtField& f = code.field();
  ExtMatrix g = gen_matrix(code.base);
  for (auto& row : g)
    for (std::size_t j = 0; j < row.size(); ++j) row[j] = f.mul(row[j], code.lambda[j]);
  return g;
}

ExtWord encode(const GabCode& code, const ExtWord& msg) {
  if (msg.size() != code.k) throw ParamError("message length != k");
  return ext_vec_mul(*code.field, msg, gen_matrix(code));
}

ExtWord encode(const LambdaGabCode& code, const ExtWord& msg) {
  if (msg.size() != code.k()) throw ParamError("message length != k");
  return ext_vec_mul(code.field(), msg, lambda_gen_matrix(code));
}

Decoded decode(const GabCode& code, const ExtWord& y) {
  const ExtField& f = *code.field;
  const std::size_t n = code.n();
  const std::size_t k = code.k;
  const std::size_t t = code.radius();
  if (y.size() != n) throw ParamError("received word length != n");

  // Unknowns: V = sum_{j<=t} v_j x^{q^j}, N = sum_{l<k+t} n_l x^{q^l};
  // equations V(y_i) - N(g_i) = 0.
  const std::size_t nv = t + 1;
  const std::size_t nn = k + t;
  ExtMatrix sys(n, ExtWord(nv + nn, f.zero()));
  for (std::size_t i = 0; i < n; ++i) {
    ExtElement yp = y[i];
    for (std::size_t j = 0; j < nv; ++j) {
      sys[i][j] = yp;
      yp = f.frobenius(yp, 1);
    }
    ExtElement gp = code.g[i];
    for (std::size_t l = 0; l < nn; ++l) {
      sys[i][nv + l] = f.neg(gp);
      gp = f.frobenius(gp, 1);
    }
  }
  const ExtMatrix ker = ext_kernel(f, std::move(sys), nv + nn);
  for (const auto& sol : ker) {
    QPoly v{ExtWord(sol.begin(), sol.begin() + static_cast<std::ptrdiff_t>(nv))};
    QPoly nq{ExtWord(sol.begin() + static_cast<std::ptrdiff_t>(nv), sol.end())};
    v = qp_trim(f, std::move(v));
    nq = qp_trim(f, std::move(nq));
    if (v.is_zero()) continue;
    const QDivision div = skew_divide_left(f, nq, v);
    if (!div.remainder.is_zero() || div.quotient.qdeg() >= static_cast<int>(k)) continue;
    ExtWord msg = div.quotient.coeffs;
    msg.resize(k, f.zero());
    ExtWord c = encode(code, msg);
    ExtWord e = word_sub(f, y, c);
    if (rank_weight(f, e) > t) continue;
    return {std::move(msg), std::move(c), std::move(e)};
  }
  throw DecodeFailure("no codeword within rank distance " + std::to_string(t));
}

Decoded lambda_decode(const LambdaGabCode& code, const ExtWord& y) {
  const ExtField& f = code.field();
  if (y.size() != code.n()) throw ParamError("received word length != n");
  ExtWord scaled(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) scaled[i] = f.div(y[i], code.lambda[i]);
  Decoded d = decode(code.base, scaled);
  for (std::size_t i = 0; i < y.size(); ++i) d.codeword[i] = f.mul(d.codeword[i], code.lambda[i]);
  d.error = word_sub(f, y, d.codeword);
  return d;
}

ExtWord sample_support(const ExtField& f, std::size_t n, Rng& rng) {
  if (n > f.m()) throw ParamError("support length exceeds m");
  for (;;) {
    ExtWord g;
    for (std::size_t i = 0; i < n; ++i) g.push_back(f.random(rng));
    if (rank_weight(f, g) == n) return g;
  }
}

ExtWord sample_lambda(const ExtField& f, std::size_t n, std::size_t delta, Rng& rng) {
  if (delta < 1 || delta > n || delta > f.m()) throw ParamError("delta must satisfy 1 <= delta <= min(n, m)");
  const BaseField& bf = f.base();
  const ExtWord mu = sample_support(f, delta, rng);
  for (;;) {
    ExtWord inv(n);
    for (std::size_t i = 0; i < n; ++i) {
      do {
        inv[i] = f.zero();
        for (std::size_t j = 0; j < delta; ++j)
          inv[i] = f.add(inv[i], f.scale(static_cast<fq_t>(rng.uniform(bf.q())), mu[j]));
      } while (f.is_zero(inv[i]));
    }
    if (rank_weight(f, inv) != delta) continue;
    ExtWord lambda;
    for (const auto& x : inv) lambda.push_back(f.inv(x));
    return lambda;
  }
}

namespace {

MatFq random_full_rank(const BaseField& f, std::size_t rows, std::size_t cols, Rng& rng) {
  const std::size_t r = std::min(rows, cols);
  for (;;) {
    MatFq a(rows, cols);
    for (auto& x : a.data()) x = static_cast<fq_t>(rng.uniform(f.q()));
    if (rank(f, a) == r) return a;
  }
}

}  // namespace

MatFq sample_error(const BaseField& f, std::size_t m, std::size_t n, std::size_t t, Rng& rng) {
  if (t > m || t > n) throw ParamError("error rank exceeds min(m, n)");
  if (t == 0) return MatFq(m, n);
  const MatFq a = random_full_rank(f, m, t, rng);
  const MatFq b = random_full_rank(f, t, n, rng);
  return mul(f, a, b);
}

MatFq expanded_generator(const LambdaGabCode& code, const QBasis& basis) {
  const ExtField& f = code.field();
  const ExtMatrix g = lambda_gen_matrix(code);
  const std::size_t m = f.m();
  MatFq out(code.k() * m, code.n() * m);
  for (std::size_t j = 0; j < g.size(); ++j)
    for (std::size_t i = 0; i < m; ++i) {
      const VecFq row = expand_vec(f, basis, word_scale(f, basis.elements[i], g[j]));
      std::copy(row.begin(), row.end(), out.row(j * m + i).begin());
    }
  return out;
}

}  // namespace lgs
