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

#include <array>
#include <cstdint>

#include "doctest.h"
#include "lgs/stab_algebra.hpp"
#include "oracles.hpp"

using namespace lgs;

namespace {

// 4x4 binary matrices packed into 16 bits, bit 4i + j holding entry (i, j).
using Bits = std::uint16_t;

Bits pack(const MatFq& a) {
  Bits b = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (a(i, j)) b |= Bits(1u << (4 * i + j));
  return b;
}

Bits mul_bits(Bits a, Bits b) {
  Bits out = 0;
  for (int i = 0; i < 4; ++i)
    for (int l = 0; l < 4; ++l)
      if ((a >> (4 * i + l)) & 1) out ^= Bits(((b >> (4 * l)) & 0xF) << (4 * i));
  return out;
}

struct Brute {
  std::size_t left_stab = 0, right_stab = 0, left_ann = 0, right_ann = 0;
};

/// Counts the four algebras by testing all 2^16 candidates.
Brute brute_force(const MatrixCodeBasis& code) {
  std::vector<Bits> gens;
  for (const auto& g : code.gens) gens.push_back(pack(g));
  std::vector<bool> member(1 << 16, false);
  for (std::uint32_t c = 0; c < (1u << gens.size()); ++c) {
    Bits w = 0;
    for (std::size_t i = 0; i < gens.size(); ++i)
      if ((c >> i) & 1) w ^= gens[i];
    member[w] = true;
  }
  Brute out;
  for (std::uint32_t a = 0; a < (1u << 16); ++a) {
    bool ls = true, rs = true, la = true, ra = true;
    for (Bits g : gens) {
      const Bits l = mul_bits(Bits(a), g), r = mul_bits(g, Bits(a));
      ls = ls && member[l];
      rs = rs && member[r];
      la = la && l == 0;
      ra = ra && r == 0;
    }
    out.left_stab += ls;
    out.right_stab += rs;
    out.left_ann += la;
    out.right_ann += ra;
  }
  return out;
}

MatrixCodeBasis random_code(const BaseField& f, std::size_t m, std::size_t n, std::size_t k, Rng& rng) {
  MatFq rows;
  do rows = oracle::random_matrix(f, k, m * n, rng);
  while (rank(f, rows) != k);
  return MatrixCodeBasis::from_unfolded(rows, m);
}

bool is_scalar_stab(const AlgebraBasis& a) {
  return a.dim() == 1 && a.gens[0] == MatFq::identity(a.gens[0].rows());
}

}  // namespace

TEST_CASE("full space and zero code") {
  BaseField f(2, 1);
  Rng rng(Rng::from_u64(61));
  const MatrixCodeBasis full = random_code(f, 3, 3, 9, rng);
  for (Side s : {Side::Left, Side::Right}) {
    CHECK(algebra(f, full, s, AlgebraKind::Stabilizer).dim() == 9);
    CHECK(algebra(f, full, s, AlgebraKind::Annihilator).dim() == 0);
    CHECK_FALSE(is_trivial_stab(f, full, s));
  }
  const MatrixCodeBasis zero{3, 4, {}};
  CHECK(algebra(f, zero, Side::Left, AlgebraKind::Stabilizer).dim() == 9);
  CHECK(algebra(f, zero, Side::Right, AlgebraKind::Stabilizer).dim() == 16);
  CHECK(algebra(f, zero, Side::Left, AlgebraKind::Annihilator).dim() == 9);
  CHECK_FALSE(is_trivial_stab(f, zero, Side::Left));
  CHECK_FALSE(is_trivial_stab_serial(f, zero, Side::Left));
}

TEST_CASE("Kronecker, serial and parallel systems agree") {
  for (auto [p, e] : {std::pair{2u, 1u}, std::pair{3u, 1u}, std::pair{2u, 2u}}) {
    BaseField f(p, e);
    Rng rng(Rng::from_u64(62 + p * e));
    for (int t = 0; t < 10; ++t) {
      const std::size_t m = 2 + rng.uniform(3), n = 2 + rng.uniform(3);
      const MatrixCodeBasis c = random_code(f, m, n, 1 + rng.uniform(m * n - 1), rng);
      const MatrixCodeBasis d = matrix_code_dual(f, c);
      const MatFq k = left_stab_system_kron(f, c, d);
      CHECK(k == left_stab_system_serial(f, c, d));
      CHECK(k == left_stab_system(f, c, d));
    }
  }
}

TEST_CASE("kernel method equals brute force over F_2^{4x4}") {
  BaseField f(2, 1);
  Rng rng(Rng::from_u64(63));
  for (std::size_t k = 0; k <= 16; ++k) {
    const int reps = (k == 0 || k == 16) ? 1 : 3;
    for (int t = 0; t < reps; ++t) {
      const MatrixCodeBasis c = k == 0 ? MatrixCodeBasis{4, 4, {}} : random_code(f, 4, 4, k, rng);
      const Brute b = brute_force(c);
      const auto ls = algebra(f, c, Side::Left, AlgebraKind::Stabilizer);
      const auto rs = algebra(f, c, Side::Right, AlgebraKind::Stabilizer);
      const auto la = algebra(f, c, Side::Left, AlgebraKind::Annihilator);
      const auto ra = algebra(f, c, Side::Right, AlgebraKind::Annihilator);
      CHECK(b.left_stab == (std::size_t{1} << ls.dim()));
      CHECK(b.right_stab == (std::size_t{1} << rs.dim()));
      CHECK(b.left_ann == (std::size_t{1} << la.dim()));
      CHECK(b.right_ann == (std::size_t{1} << ra.dim()));
      for (const auto& a : ls.gens) CHECK(in_algebra(f, c, Side::Left, AlgebraKind::Stabilizer, a));
      for (const auto& a : ra.gens) CHECK(in_algebra(f, c, Side::Right, AlgebraKind::Annihilator, a));
      CHECK(is_trivial_stab(f, c, Side::Left) == (b.left_stab == 2));
      CHECK(is_trivial_stab(f, c, Side::Right) == (b.right_stab == 2));
      CHECK(is_trivial_stab_serial(f, c, Side::Left) == (b.left_stab == 2));
    }
  }
}

TEST_CASE("algebra structure") {
  BaseField f(3, 1);
  Rng rng(Rng::from_u64(64));
  for (int t = 0; t < 15; ++t) {
    const std::size_t m = 3, n = 2 + rng.uniform(3);
    // Codes whose columns share a proper span have large annihilators.
    const MatFq span = oracle::random_matrix(f, 1 + rng.uniform(2), m, rng);
    MatFq rows(0, m * n);
    for (int g = 0; g < 3; ++g) rows.append_row(unfold(mul(f, transpose(span), oracle::random_matrix(f, span.rows(), n, rng))));
    const MatrixCodeBasis c = MatrixCodeBasis::from_unfolded(row_basis(f, rows), m);
    for (Side s : {Side::Left, Side::Right}) {
      const auto st = algebra(f, c, s, AlgebraKind::Stabilizer);
      const auto an = algebra(f, c, s, AlgebraKind::Annihilator);
      const std::size_t dim = s == Side::Left ? m : n;
      CHECK(in_algebra(f, c, s, AlgebraKind::Stabilizer, MatFq::identity(dim)));
      for (const auto& a : an.gens) CHECK(in_algebra(f, c, s, AlgebraKind::Stabilizer, a));
      for (const auto& a : st.gens)
        for (const auto& b : st.gens) CHECK(in_algebra(f, c, s, AlgebraKind::Stabilizer, mul(f, a, b)));
      // The annihilator is a two-sided ideal of the stabilizer.
      for (const auto& a : an.gens)
        for (const auto& b : st.gens) {
          CHECK(in_algebra(f, c, s, AlgebraKind::Annihilator, mul(f, b, a)));
          CHECK(in_algebra(f, c, s, AlgebraKind::Annihilator, mul(f, a, b)));
        }
    }
    const auto direct = left_annihilator_direct(f, c);
    const auto kr = algebra(f, c, Side::Left, AlgebraKind::Annihilator);
    CHECK(direct.dim() == m * (m - rank(f, span)));
    MatFq a(0, m * m), b(0, m * m);
    for (const auto& g : direct.gens) a.append_row(unfold(g));
    for (const auto& g : kr.gens) b.append_row(unfold(g));
    CHECK(same_row_space(f, a, b));
  }
}

TEST_CASE("trivial stabilizer checks agree") {
  for (auto [p, e] : {std::pair{2u, 1u}, std::pair{2u, 3u}}) {
    BaseField f(p, e);
    Rng rng(Rng::from_u64(65 + e));
    for (int t = 0; t < 30; ++t) {
      const std::size_t m = 2 + rng.uniform(4), n = 2 + rng.uniform(4);
      const MatrixCodeBasis c = random_code(f, m, n, 1 + rng.uniform(m * n - 1), rng);
      for (Side s : {Side::Left, Side::Right}) {
        const bool scalar = is_scalar_stab(algebra(f, c, s, AlgebraKind::Stabilizer));
        CHECK(is_trivial_stab(f, c, s) == scalar);
        CHECK(is_trivial_stab_serial(f, c, s) == scalar);
      }
    }
    // Large enough to use several parallel blocks.
    const MatrixCodeBasis big = random_code(f, 8, 8, 17, rng);
    CHECK(is_trivial_stab(f, big, Side::Left) == is_trivial_stab_serial(f, big, Side::Left));
  }
}

TEST_CASE("multiplication witnesses stabilize F_{q^m}-linear codes") {
  FieldPtr f = ExtField::create(2, 5);
  Rng rng(Rng::from_u64(66));
  const QBasis pb = power_basis(*f);
  ExtWord g;
  do g = oracle::random_word(*f, 5, rng);
  while (rank_weight(*f, g) != 5);
  const QBasis gb = make_basis(*f, g);
  const MatFq n1 = multiplication_witness(*f, g, f->one());
  CHECK(n1 == MatFq::identity(5));
  // The code spanned by two random words, expanded in the power basis.
  const ExtMatrix gen{oracle::random_word(*f, 5, rng), oracle::random_word(*f, 5, rng)};
  MatFq rows(0, 25);
  for (const auto& w : gen)
    for (const auto& b : pb.elements) rows.append_row(unfold(expand_mat(*f, pb, word_scale(*f, b, w))));
  const MatrixCodeBasis code = MatrixCodeBasis::from_unfolded(row_basis(f->base(), rows), 5);
  for (int t = 0; t < 10; ++t) {
    const ExtElement a = f->random_nonzero(rng);
    const MatFq na = multiplication_witness(*f, g, a);
    for (std::size_t j = 0; j < 5; ++j)
      CHECK(from_basis_coords(*f, gb, transpose(na).row_copy(j)) == f->mul(a, g[j]));
  }
  // F_{q^m}-scaling acts on the left of the expanded code.
  CHECK(algebra(f->base(), code, Side::Left, AlgebraKind::Stabilizer).dim() >= 5);
}

TEST_CASE("annihilator witnesses") {
  BaseField f(2, 1);
  Rng rng(Rng::from_u64(67));
  for (int t = 0; t < 20; ++t) {
    const std::size_t m = 5, r = 1 + rng.uniform(4);
    MatFq span;
    do span = oracle::random_matrix(f, r, m, rng);
    while (rank(f, span) != r);
    const auto w = annihilator_witnesses(f, span);
    CHECK(w.size() == m * (m - r));
    MatFq stacked(0, m * m);
    for (const auto& a : w) {
      CHECK(mul(f, a, transpose(span)).is_zero());
      stacked.append_row(unfold(a));
    }
    CHECK(rank(f, stacked) == w.size());
  }
}

TEST_CASE("structural bounds on column-restricted codes") {
  BaseField f(2, 1);
  Rng rng(Rng::from_u64(68));
  for (int t = 0; t < 10; ++t) {
    const std::size_t m = 5, n = 5, r = 2 + rng.uniform(2);
    MatFq span;
    do span = oracle::random_matrix(f, r, m, rng);
    while (rank(f, span) != r);
    MatFq rows(0, m * n);
    for (int g = 0; g < 4; ++g) rows.append_row(unfold(mul(f, transpose(span), oracle::random_matrix(f, r, n, rng))));
    const MatrixCodeBasis c = MatrixCodeBasis::from_unfolded(row_basis(f, rows), m);
    const StructuralReport rep = verify_structural_bounds(f, c, span, {}, false);
    CHECK(rep.ok());
    CHECK(rep.r == r);
    CHECK(rep.left_ann_dim == m * (m - r));
    CHECK(rep.witnesses_checked == m * (m - r));
  }
}
