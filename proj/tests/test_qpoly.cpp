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
#include "lgs/qpoly.hpp"
#include "oracles.hpp"

using namespace lgs;

namespace {

QPoly random_qpoly(const ExtField& f, std::size_t deg, Rng& rng) {
  QPoly p;
  for (std::size_t i = 0; i < deg; ++i) p.coeffs.push_back(f.random(rng));
  p.coeffs.push_back(f.random_nonzero(rng));
  return p;
}

}  // namespace

TEST_CASE("evaluation") {
  ExtField f(make_field_q(4, 3));
  Rng rng(Rng::from_u64(21));
  const QPoly zero;
  CHECK(f.is_zero(qp_eval(f, zero, f.random(rng))));
  // x^q - x vanishes on F_q.
  const QPoly xq_minus_x = qp_sub(f, qp_monomial(f, 1, f.one()), qp_identity(f));
  for (fq_t c = 0; c < 4; ++c) CHECK(f.is_zero(qp_eval(f, xq_minus_x, f.from_base(c))));
  for (int t = 0; t < 50; ++t) {
    const QPoly p = random_qpoly(f, 2, rng);
    const ExtElement x = f.random(rng), y = f.random(rng);
    const fq_t a = static_cast<fq_t>(rng.uniform(4)), b = static_cast<fq_t>(rng.uniform(4));
    CHECK(qp_eval(f, p, f.add(f.scale(a, x), f.scale(b, y))) ==
          f.add(f.scale(a, qp_eval(f, p, x)), f.scale(b, qp_eval(f, p, y))));
  }
}

TEST_CASE("composition") {
  ExtField f(make_field(2, 1, 5));
  Rng rng(Rng::from_u64(22));
  const QBasis pb = power_basis(f);
  for (int t = 0; t < 30; ++t) {
    const QPoly p = random_qpoly(f, rng.uniform(4), rng);
    const QPoly q = random_qpoly(f, rng.uniform(4), rng);
    CHECK(compose(f, qp_identity(f), q) == q);
    CHECK(compose(f, p, qp_identity(f)) == p);
    const QPoly pq = compose(f, p, q);
    CHECK(pq.qdeg() == p.qdeg() + q.qdeg());
    for (const auto& b : pb.elements) CHECK(qp_eval(f, pq, b) == qp_eval(f, p, qp_eval(f, q, b)));
    // x^{q^m} - x is central.
    const QPoly x = qp_field_poly(f);
    CHECK(compose(f, x, p) == compose(f, p, x));
    CHECK_FALSE(pq.is_zero());
  }
}

TEST_CASE("skew division both directions") {
  ExtField f(make_field_q(8, 3));
  Rng rng(Rng::from_u64(23));
  const QPoly b0 = random_qpoly(f, 2, rng);
  const QDivision self = skew_divide(f, b0, b0);
  CHECK(self.quotient == qp_identity(f));
  CHECK(self.remainder.is_zero());
  const QPoly small = random_qpoly(f, 1, rng);
  const QDivision low = skew_divide(f, small, b0);
  CHECK(low.quotient.is_zero());
  CHECK(low.remainder == small);
  CHECK_THROWS_AS(skew_divide(f, b0, QPoly{}), ParamError);
  for (int t = 0; t < 50; ++t) {
    const QPoly a = random_qpoly(f, rng.uniform(7), rng);
    const QPoly b = random_qpoly(f, rng.uniform(4), rng);
    const QDivision r = skew_divide(f, a, b);
    CHECK(qp_add(f, compose(f, r.quotient, b), r.remainder) == a);
    CHECK(r.remainder.qdeg() < b.qdeg());
    const QDivision l = skew_divide_left(f, a, b);
    CHECK(qp_add(f, compose(f, b, l.quotient), l.remainder) == a);
    CHECK(l.remainder.qdeg() < b.qdeg());
  }
}

TEST_CASE("subspace polynomials") {
  ExtField f(make_field(2, 1, 4));
  // Annihilator of F_2 is x^2 + x.
  const QPoly p1 = subspace_poly(f, {f.one()});
  CHECK(p1 == qp_sub(f, qp_monomial(f, 1, f.one()), qp_identity(f)));
  Rng rng(Rng::from_u64(24));
  for (int t = 0; t < 30; ++t) {
    const std::size_t s = 1 + rng.uniform(3);
    const auto v = oracle::random_subspace(f, s, rng);
    const QPoly p = subspace_poly(f, v);
    CHECK(p.qdeg() == static_cast<int>(s));
    CHECK(p.coeffs.back() == f.one());
    CHECK(p == subspace_poly(f, v));
    CHECK(p == oracle::moore_subspace_poly(f, v));
    // Kernel is exactly the span: count roots over the whole field.
    std::size_t roots = 0;
    for (std::uint32_t x = 0; x < 16; ++x) {
      ExtElement e{{static_cast<fq_t>(x & 1), static_cast<fq_t>((x >> 1) & 1), static_cast<fq_t>((x >> 2) & 1),
                    static_cast<fq_t>((x >> 3) & 1)}};
      if (f.is_zero(qp_eval(f, p, e))) ++roots;
    }
    CHECK(roots == (std::size_t{1} << s));
    for (const auto& x : oracle::span_of(f, v)) CHECK(f.is_zero(qp_eval(f, p, x)));
    CHECK(kernel_basis(f.base(), qp_map_matrix(f, p)).rows() == s);
  }
  CHECK_THROWS_AS(subspace_poly(f, {f.one(), f.one()}), ParamError);
  CHECK_THROWS_AS(subspace_poly(f, {}), ParamError);
}

TEST_CASE("cofactor identities") {
  {
    ExtField f(make_field(2, 1, 4));
    const QPoly p = subspace_poly(f, {f.one()});
    const QPoly q = cofactor(f, p);
    CHECK(q.qdeg() == 3);
    CHECK(compose(f, q, p) == qp_field_poly(f));
    CHECK_THROWS_AS(cofactor(f, qp_field_poly(f)), ParamError);
    // x^2 does not divide x^16 - x.
    CHECK_THROWS_AS(cofactor(f, qp_monomial(f, 1, f.alpha())), ParamError);
  }
  for (auto [q, m] : {std::pair{2u, 6u}, std::pair{4u, 4u}, std::pair{8u, 3u}}) {
    ExtField f(make_field_q(q, m));
    Rng rng(Rng::from_u64(q * 31 + m));
    for (int t = 0; t < 20; ++t) {
      const std::size_t s = 1 + rng.uniform(m - 1);
      const QPoly p = subspace_poly(f, oracle::random_subspace(f, s, rng));
      const QPoly c = cofactor(f, p);
      CHECK(c.qdeg() == static_cast<int>(m - s));
      CHECK(compose(f, c, p) == qp_field_poly(f));
      CHECK(compose(f, p, c) == compose(f, c, p));
    }
  }
}
