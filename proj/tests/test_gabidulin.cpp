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

#include "doctest.h"
#include "lgs/error.hpp"
#include "lgs/gabidulin.hpp"
#include "oracles.hpp"

using namespace lgs;

namespace {

GabCode random_code(const FieldPtr& f, std::size_t n, std::size_t k, Rng& rng) {
  return make_gab(f, sample_support(*f, n, rng), k);
}

ExtWord error_word(const ExtField& f, std::size_t n, std::size_t t, Rng& rng) {
  const QBasis pb = power_basis(f);
  return contract_mat(f, pb, sample_error(f.base(), f.m(), n, t, rng));
}

/// All codewords of a small code.
std::vector<ExtWord> all_codewords(const GabCode& code) {
  const ExtField& f = *code.field;
  std::vector<ExtWord> rows;
  const QBasis pb = power_basis(f);
  for (const auto& row : gen_matrix(code))
    for (const auto& b : pb.elements) rows.push_back(word_scale(f, b, row));
  return oracle::span_elements(f, rows, code.n());
}

}  // namespace

TEST_CASE("generator matrix entries are Frobenius powers") {
  FieldPtr f = ExtField::create(2, 7);
  Rng rng(Rng::from_u64(31));
  const GabCode c1 = random_code(f, 5, 1, rng);
  CHECK(gen_matrix(c1) == ExtMatrix{c1.g});
  const GabCode c = random_code(f, 6, 4, rng);
  const ExtMatrix g = gen_matrix(c);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 6; ++j) CHECK(g[i][j] == f->frobenius(c.g[j], i));
  CHECK_THROWS_AS(make_gab(f, ExtWord(3, f->one()), 2), ParamError);
  CHECK_THROWS_AS(make_gab(f, sample_support(*f, 3, rng), 4), ParamError);
}

TEST_CASE("MRD property by exhaustive enumeration") {
  FieldPtr f = ExtField::create(2, 4);
  Rng rng(Rng::from_u64(32));
  for (std::size_t k = 1; k <= 2; ++k) {
    const GabCode c = random_code(f, 4, k, rng);
    std::size_t min_rank = 99;
    for (const auto& w : all_codewords(c))
      if (!word_is_zero(*f, w)) min_rank = std::min(min_rank, rank_weight(*f, w));
    CHECK(min_rank == c.d());
  }
  FieldPtr f5 = ExtField::create(2, 3);
  for (std::size_t k = 1; k <= 3; ++k) {
    const GabCode c = random_code(f5, 3, k, rng);
    std::size_t min_rank = 99;
    for (const auto& w : all_codewords(c))
      if (!word_is_zero(*f5, w)) min_rank = std::min(min_rank, rank_weight(*f5, w));
    CHECK(min_rank == c.d());
  }
}

TEST_CASE("lambda generator matrix") {
  FieldPtr f = ExtField::create(2, 6);
  Rng rng(Rng::from_u64(33));
  const GabCode c = random_code(f, 6, 3, rng);
  CHECK(lambda_gen_matrix(plain_lambda_gab(c)) == gen_matrix(c));
  const ExtElement mu = f->random_nonzero(rng);
  const LambdaGabCode constant = make_lambda_gab(c, ExtWord(6, mu));
  CHECK(constant.delta == 1);
  CHECK(ext_rank(*f, [&] {
          ExtMatrix both = gen_matrix(c);
          for (auto& r : lambda_gen_matrix(constant)) both.push_back(r);
          return both;
        }()) == 3);
  const ExtWord lambda = sample_lambda(*f, 6, 2, rng);
  const LambdaGabCode lc = make_lambda_gab(c, lambda);
  CHECK(lc.delta == 2);
  const ExtMatrix g = gen_matrix(c), gl = lambda_gen_matrix(lc);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 6; ++j) CHECK(gl[i][j] == f->mul(g[i][j], lambda[j]));
}

TEST_CASE("encoding equals q-polynomial evaluation") {
  FieldPtr f = ExtField::create(2, 8);
  Rng rng(Rng::from_u64(34));
  const GabCode c = random_code(f, 8, 4, rng);
  CHECK(word_is_zero(*f, encode(c, zero_word(*f, 4))));
  ExtWord e1 = zero_word(*f, 4);
  e1[0] = f->one();
  CHECK(encode(c, e1) == c.g);
  for (int t = 0; t < 100; ++t) {
    const ExtWord msg = oracle::random_word(*f, 4, rng);
    CHECK(encode(c, msg) == qp_eval(*f, qp_trim(*f, QPoly{msg}), c.g));
  }
}

TEST_CASE("decoding round trips at q = 2, m = n = 8, k = 4, t = 2") {
  FieldPtr f = ExtField::create(2, 8);
  Rng rng(Rng::from_u64(35));
  const GabCode c = random_code(f, 8, 4, rng);
  const ExtWord cw = encode(c, oracle::random_word(*f, 4, rng));
  const Decoded clean = decode(c, cw);
  CHECK(clean.codeword == cw);
  CHECK(word_is_zero(*f, clean.error));
  for (int t = 0; t < 1000; ++t) {
    const ExtWord msg = oracle::random_word(*f, 4, rng);
    const ExtWord e = error_word(*f, 8, 2, rng);
    CHECK(rank_weight(*f, e) == 2);
    const Decoded d = decode(c, word_add(*f, encode(c, msg), e));
    CHECK(d.message == msg);
    CHECK(d.error == e);
  }
}

TEST_CASE("beyond the radius the decoder fails or returns the nearest codeword") {
  FieldPtr f = ExtField::create(2, 4);
  Rng rng(Rng::from_u64(36));
  const GabCode c = random_code(f, 4, 2, rng);
  const auto words = all_codewords(c);
  int failures = 0;
  for (int t = 0; t < 100; ++t) {
    const ExtWord y = word_add(*f, encode(c, oracle::random_word(*f, 2, rng)), error_word(*f, 4, 2, rng));
    std::size_t best = 99;
    for (const auto& w : words) best = std::min(best, rank_weight(*f, word_sub(*f, y, w)));
    try {
      const Decoded d = decode(c, y);
      CHECK(rank_weight(*f, d.error) == best);
      CHECK(best <= c.radius());
    } catch (const DecodeFailure&) {
      ++failures;
      CHECK(best > c.radius());
    }
  }
  CHECK(failures > 0);
}

TEST_CASE("lambda decoding at q = 2, m = n = 10, k = 4, delta = 2, t = 1") {
  FieldPtr f = ExtField::create(2, 10);
  Rng rng(Rng::from_u64(37));
  const LambdaGabCode lc = make_lambda_gab(random_code(f, 10, 4, rng), sample_lambda(*f, 10, 2, rng));
  REQUIRE(lc.delta == 2);
  REQUIRE(t_pub(10, 4, 2) == 1);
  for (int t = 0; t < 200; ++t) {
    const ExtWord msg = oracle::random_word(*f, 4, rng);
    const ExtWord e = error_word(*f, 10, 1, rng);
    const Decoded d = lambda_decode(lc, word_add(*f, encode(lc, msg), e));
    CHECK(d.message == msg);
    CHECK(d.error == e);
  }
  // Rank inflation through Δ^{-1} is bounded by delta.
  for (int t = 0; t < 50; ++t) {
    const ExtWord e = error_word(*f, 10, 2, rng);
    ExtWord scaled(10);
    for (std::size_t i = 0; i < 10; ++i) scaled[i] = f->div(e[i], lc.lambda[i]);
    CHECK(rank_weight(*f, scaled) <= 2 * lc.delta);
  }
}

TEST_CASE("delta = 1 lambda decoding reduces to plain decoding") {
  FieldPtr f = ExtField::create(2, 8);
  Rng rng(Rng::from_u64(38));
  const GabCode c = random_code(f, 8, 4, rng);
  const LambdaGabCode lc = make_lambda_gab(c, sample_lambda(*f, 8, 1, rng));
  CHECK(lc.delta == 1);
  for (int t = 0; t < 20; ++t) {
    const ExtWord msg = oracle::random_word(*f, 4, rng);
    const ExtWord e = error_word(*f, 8, 2, rng);
    CHECK(lambda_decode(lc, word_add(*f, encode(lc, msg), e)).error == e);
  }
}

TEST_CASE("multiplier sampling") {
  FieldPtr f = ExtField::create(2, 8);
  Rng rng(Rng::from_u64(39));
  for (std::size_t delta = 1; delta <= 4; ++delta) {
    const ExtWord l = sample_lambda(*f, 8, delta, rng);
    ExtWord inv;
    for (const auto& x : l) {
      CHECK_FALSE(f->is_zero(x));
      inv.push_back(f->inv(x));
    }
    CHECK(rank_weight(*f, inv) == delta);
  }
  CHECK_THROWS_AS(sample_lambda(*f, 8, 9, rng), ParamError);
  CHECK_THROWS_AS(sample_lambda(*f, 8, 0, rng), ParamError);
  FieldPtr big = ExtField::create(2, 46);
  CHECK(sample_lambda(*big, 46, 2, rng).size() == 46);
  Rng a(Rng::from_u64(5)), b(Rng::from_u64(5));
  CHECK(sample_lambda(*f, 8, 2, a) == sample_lambda(*f, 8, 2, b));
}

TEST_CASE("error sampling") {
  FieldPtr f = ExtField::create(2, 8);
  Rng rng(Rng::from_u64(40));
  CHECK(sample_error(f->base(), 8, 8, 0, rng).is_zero());
  const QBasis pb = power_basis(*f);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t tt = 1 + rng.uniform(4);
    const MatFq e = sample_error(f->base(), 8, 8, tt, rng);
    CHECK(rank(f->base(), e) == tt);
    if (t < 50) CHECK(rank_weight(*f, contract_mat(*f, pb, e)) == tt);
  }
}

TEST_CASE("public error bound") {
  CHECK(t_pub(38, 30, 1) == 4);
  CHECK(t_pub(46, 30, 2) == 4);
  CHECK(t_pub(30, 18, 2) == 3);
  CHECK(t_pub(8, 4, 1) == 2);
  CHECK(t_pub(10, 4, 2) == 1);
}

TEST_CASE("expanded generator rows") {
  FieldPtr f = ExtField::create(2, 5);
  Rng rng(Rng::from_u64(41));
  const LambdaGabCode lc = make_lambda_gab(random_code(f, 5, 2, rng), sample_lambda(*f, 5, 1, rng));
  const QBasis b = random_basis(*f, rng);
  const MatFq g = expanded_generator(lc, b);
  CHECK(g.rows() == 10);
  CHECK(g.cols() == 25);
  CHECK(rank(f->base(), g) == 10);
  for (std::size_t r = 0; r < g.rows(); ++r) {
    const ExtWord w = contract_vec(*f, b, g.row(r));
    CHECK(word_is_zero(*f, lambda_decode(lc, w).error));
  }
}
