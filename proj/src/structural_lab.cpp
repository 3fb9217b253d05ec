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

#include "lgs/structural_lab.hpp"

#include <cmath>
#include <limits>

#include "lgs/error.hpp"
#include "lgs/stab_algebra.hpp"

namespace lgs {

MatFq NormalForm::q_matrix() const {
  MatFq q(km, km);
  for (std::size_t t = 0; t < km; ++t) q(t, order[t]) = 1;
  return q;
}

MatFq NormalForm::generator() const {
  const std::size_t kp = k_prime();
  MatFq g(kp, km + a2.cols());
  for (std::size_t i = 0; i < kp; ++i) {
    g(i, order[i]) = 1;
    for (std::size_t t = 0; t < a1.cols(); ++t) g(i, order[kp + t]) = a1(i, t);
    for (std::size_t c = 0; c < a2.cols(); ++c) g(i, km + c) = a2(i, c);
  }
  return g;
}

NormalForm normal_form(const BaseField& f, const MatFq& gen, std::size_t km) {
  if (km > gen.cols()) throw ParamError("normal form: km exceeds the code length");
  const std::size_t kp = gen.rows();
  if (rank(f, gen.block(0, kp, 0, km)) != kp) throw ParamError("first km columns do not have rank k'");
  // Leftmost pivots, so they all land inside the prefix.
  const Rref r = rref(f, gen);

  NormalForm nf;
  nf.km = km;
  std::vector<bool> is_pivot(km, false);
  for (std::size_t c : r.pivots) {
    is_pivot[c] = true;
    nf.order.push_back(c);
  }
  for (std::size_t c = 0; c < km; ++c)
    if (!is_pivot[c]) nf.order.push_back(c);

  nf.a1 = MatFq(kp, km - kp);
  for (std::size_t i = 0; i < kp; ++i)
    for (std::size_t t = 0; t < km - kp; ++t) nf.a1(i, t) = r.reduced(i, nf.order[kp + t]);
  nf.a2 = r.reduced.block(0, kp, km, gen.cols());
  return nf;
}

ParentOracle parent_oracle(const BaseField& f, const MatFq& parent_gen) {
  const std::size_t km = parent_gen.rows();
  MatFq prefix = parent_gen.block(0, km, 0, km);
  if (rank(f, prefix) != km) throw ParamError("parent oracle: first km columns are not an information set");
  return [&f, prefix = std::move(prefix), parent_gen](const VecFq& v) {
    const auto x = solve_left(f, prefix, v);
    if (!x) throw ParamError("parent oracle: prefix outside the projection");
    return vec_mul(f, *x, parent_gen);
  };
}

Completion complete(const BaseField& f, const NormalForm& nf, const ParentOracle& oracle) {
  (void)f;
  const std::size_t kp = nf.k_prime(), km = nf.km;
  const std::size_t tail = nf.a2.cols();
  Completion c;
  c.a3 = MatFq(km - kp, tail);
  for (std::size_t t = 0; t < km - kp; ++t) {
    VecFq prefix(km, 0);
    prefix[nf.order[kp + t]] = 1;
    const VecFq word = oracle(prefix);
    for (std::size_t j = 0; j < tail; ++j) c.a3(t, j) = word[km + j];
  }
  return c;
}

MatFq completed_generator(const NormalForm& nf, const MatFq& a3) {
  const std::size_t kp = nf.k_prime(), km = nf.km;
  if (a3.rows() != km - kp) throw ParamError("A_3 must have km - k' rows");
  const std::size_t width = km + a3.cols();
  MatFq top = nf.generator().block(0, kp, 0, width);
  MatFq bottom(km - kp, width);
  for (std::size_t t = 0; t < km - kp; ++t) {
    bottom(t, nf.order[kp + t]) = 1;
    for (std::size_t j = 0; j < a3.cols(); ++j) bottom(t, km + j) = a3(t, j);
  }
  return vstack(top, bottom);
}

double completion_space_bits(std::uint32_t q, std::size_t m, std::size_t n, std::size_t k, std::size_t k_prime,
                             bool punctured) {
  const std::size_t km = k * m;
  const std::size_t cols = punctured ? m : m * n - km;
  return static_cast<double>((km - k_prime) * cols) * std::log2(static_cast<double>(q));
}

SearchResult completion_search_toy(const BaseField& f, const NormalForm& nf, std::size_t m, bool punctured,
                                   const CandidateValidator& validator, unsigned max_bits) {
  const std::size_t rows = nf.km - nf.k_prime();
  const std::size_t cols = punctured ? m : nf.a2.cols();
  if (cols > nf.a2.cols()) throw ParamError("punctured search needs at least k + 1 coordinates");
  const std::size_t unknowns = rows * cols;
  const double bits = static_cast<double>(unknowns) * std::log2(static_cast<double>(f.q()));
  if (bits > max_bits) throw ParamError("completion search space too large");

  std::uint64_t total = 1;
  for (std::size_t i = 0; i < unknowns; ++i) total *= f.q();

  SearchResult res;
  MatFq a3(rows, cols);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t v = idx;
    for (std::size_t i = 0; i < unknowns; ++i) {
      a3.data()[i] = static_cast<fq_t>(v % f.q());
      v /= f.q();
    }
    ++res.visited;
    if (validator(completed_generator(nf, a3))) {
      ++res.accepted;
      if (!res.found) res.found = a3;
    }
  }
  return res;
}

CandidateValidator equality_validator(const BaseField& f, MatFq target) {
  return [&f, target = std::move(target)](const MatFq& g) {
    if (g.cols() != target.cols()) return false;
    return same_row_space(f, g, target);
  };
}

CandidateValidator stabilizer_validator(const BaseField& f, std::size_t m) {
  return [&f, m](const MatFq& g) {
    const MatrixCodeBasis code = MatrixCodeBasis::from_unfolded(row_basis(f, g), m);
    return algebra(f, code, Side::Right, AlgebraKind::Stabilizer).dim() >= m;
  };
}

std::size_t overbeck_statistic(const BaseField& f, const MatrixCodeBasis& code, const MatFq& u) {
  if (u.rows() != code.m || u.cols() != code.m) throw ParamError("overbeck: u must be m x m");
  EchelonBuilder eb(f, code.m * code.n);
  for (const MatFq& g : code.gens) eb.add(unfold(g));
  for (const MatFq& g : code.gens) eb.add(unfold(mul(f, u, g)));
  return eb.rank();
}

MatFq frobenius_matrix(const ExtField& f, const QBasis& basis) {
  const std::size_t m = f.m();
  MatFq out(m, m);
  for (std::size_t j = 0; j < m; ++j) {
    const VecFq c = to_basis_coords(f, basis, f.frobenius(basis.elements[j], 1));
    for (std::size_t i = 0; i < m; ++i) out(i, j) = c[i];
  }
  return out;
}

MatrixCodeBasis expand_code(const ExtField& f, const QBasis& basis, const std::vector<ExtWord>& words) {
  MatrixCodeBasis code;
  code.m = f.m();
  code.n = words.empty() ? 0 : words[0].size();
  for (const ExtWord& w : words) code.gens.push_back(expand_mat(f, basis, w));
  return code;
}

namespace {

struct Parent {
  FieldPtr field;
  QBasis basis;
  LambdaGabCode code;
  MatFq gvec;
};

Parent make_parent(const CensusParams& p, const Seed& seed) {
  if (p.k == 0 || p.k >= p.m) throw ParamError("census: need 0 < k < m");
  const Seed ps = Rng::derive(seed, "parent");
  Rng basis_rng(Rng::derive(ps, "basis"));
  Rng support_rng(Rng::derive(ps, "support"));
  Rng lambda_rng(Rng::derive(ps, "lambda"));
  Parent par;
  par.field = ExtField::create(p.q, static_cast<std::uint32_t>(p.m));
  par.basis = random_basis(*par.field, basis_rng);
  ExtWord g = sample_support(*par.field, p.m, support_rng);
  ExtWord lambda = sample_lambda(*par.field, p.m, p.delta, lambda_rng);
  par.code = make_lambda_gab(make_gab(par.field, std::move(g), p.k), std::move(lambda));
  par.gvec = expanded_generator(par.code, par.basis);
  return par;
}

CensusTrial measure(const BaseField& f, const MatrixCodeBasis& code) {
  CensusTrial t;
  t.left_dim = algebra(f, code, Side::Left, AlgebraKind::Stabilizer).dim();
  t.right_dim = algebra(f, code, Side::Right, AlgebraKind::Stabilizer).dim();
  return t;
}

CensusTrial random_trial(const Parent& par, const CensusParams& p, const Seed& seed, std::size_t i) {
  Rng rng(Rng::derive(seed, "trial", i));
  const RandomSubcode sc = random_subcode(par.field->base(), par.gvec, p.m, p.k_prime, rng);
  return measure(par.field->base(), sc.matrix_code(p.m));
}

Subspace random_subspace(const ExtField& f, std::size_t s, Rng& rng) {
  EchelonBuilder eb(f.base(), f.m());
  Subspace v;
  while (v.size() < s) {
    ExtElement x = f.random(rng);
    if (eb.add(x.c)) v.push_back(std::move(x));
  }
  return v;
}

CensusResult tally(std::vector<CensusTrial> trials) {
  CensusResult r;
  r.trials = std::move(trials);
  for (const CensusTrial& t : r.trials) {
    if (t.trivial()) ++r.trivial_count;
    ++r.left_hist[t.left_dim];
    ++r.right_hist[t.right_dim];
  }
  return r;
}

}  // namespace

CensusResult stabilizer_census(const CensusParams& p, std::size_t trials, const Seed& seed) {
  const Parent par = make_parent(p, seed);
  std::vector<CensusTrial> out(trials);
  const long long count = static_cast<long long>(trials);
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < count; ++i)
    out[static_cast<std::size_t>(i)] = random_trial(par, p, seed, static_cast<std::size_t>(i));
  return tally(std::move(out));
}

CensusResult stabilizer_census_serial(const CensusParams& p, std::size_t trials, const Seed& seed) {
  const Parent par = make_parent(p, seed);
  std::vector<CensusTrial> out;
  for (std::size_t i = 0; i < trials; ++i) out.push_back(random_trial(par, p, seed, i));
  return tally(std::move(out));
}

CensusResult structured_census(const CensusParams& p, std::size_t s, std::size_t trials, const Seed& seed) {
  if (s == 0 || s > p.m) throw ParamError("census: need 0 < s <= m");
  const Parent par = make_parent(p, seed);
  std::vector<CensusTrial> out(trials);
  const long long count = static_cast<long long>(trials);
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < count; ++i) {
    Rng rng(Rng::derive(seed, "subspace", static_cast<std::uint64_t>(i)));
    const Subspace v = random_subspace(*par.field, s, rng);
    const MatrixCodeBasis code = expand_code(*par.field, par.basis, subspace_subcode(par.code, v));
    out[static_cast<std::size_t>(i)] = measure(par.field->base(), code);
  }
  return tally(std::move(out));
}

}  // namespace lgs
