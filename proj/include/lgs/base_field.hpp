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
#include <cstdint>
#include <span>
#include <vector>

namespace lgs {

/// Element of F_q, q <= 2^16. The integer value sum d_i p^i encodes the
/// polynomial sum d_i y^i over F_p reduced modulo the base modulus.
using fq_t = std::uint16_t;

/// Integers modulo a prime p.
struct PrimeField {
  std::uint32_t p;

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % p; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return (a + p - b) % p; }
  std::uint32_t neg(std::uint32_t a) const { return (p - a) % p; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
  }
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t zero() const { return 0; }
  std::uint32_t one() const { return 1 % p; }
};

bool is_prime(std::uint64_t n);
/// Distinct prime factors of n, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
/// Writes q = p^e; returns false if q is not a prime power.
bool split_prime_power(std::uint64_t q, std::uint32_t& p, std::uint32_t& e);

/// The finite field F_q = F_p[y]/(base_modulus).
///
/// Multiplication goes through log/antilog tables over a primitive element;
/// addition is XOR for p = 2 and digit-wise otherwise.
class BaseField {
 public:
  /// Picks the lexicographically smallest monic irreducible of degree e.
  BaseField(std::uint32_t p, std::uint32_t e);
  /// Uses the given monic modulus (e+1 coefficients, low first).
  BaseField(std::uint32_t p, std::vector<std::uint32_t> modulus);

  std::uint32_t p() const { return p_; }
  std::uint32_t e() const { return e_; }
  std::uint32_t q() const { return q_; }
  /// Bits needed to store one element: ceil(log2 q).
  std::uint32_t bits() const { return bits_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  fq_t add(fq_t a, fq_t b) const {
    if (p_ == 2) return static_cast<fq_t>(a ^ b);
    return add_slow(a, b);
  }
  fq_t sub(fq_t a, fq_t b) const {
    if (p_ == 2) return static_cast<fq_t>(a ^ b);
    return add_slow(a, neg(b));
  }
  fq_t neg(fq_t a) const;
  fq_t mul(fq_t a, fq_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  fq_t inv(fq_t a) const;
  fq_t div(fq_t a, fq_t b) const { return mul(a, inv(b)); }
  fq_t pow(fq_t a, std::uint64_t k) const;

  fq_t zero() const { return 0; }
  fq_t one() const { return 1; }
  /// Image of the integer n under Z -> F_p -> F_q.
  fq_t from_int(std::uint64_t n) const { return static_cast<fq_t>(n % p_); }
  /// A fixed generator of the multiplicative group.
  fq_t primitive() const { return exp_[1]; }

  /// a[i] += c * b[i] over the whole span.
  void axpy(std::span<fq_t> a, fq_t c, std::span<const fq_t> b) const;
  /// a[i] *= c.
  void scale(std::span<fq_t> a, fq_t c) const;

  bool operator==(const BaseField& o) const { return p_ == o.p_ && modulus_ == o.modulus_; }

 private:
  void build_tables();
  fq_t add_slow(fq_t a, fq_t b) const;
  fq_t mul_slow(fq_t a, fq_t b) const;

  std::uint32_t p_;
  std::uint32_t e_;
  std::uint32_t q_;
  std::uint32_t bits_;
  std::vector<std::uint32_t> modulus_;
  std::vector<fq_t> exp_;           // size 2(q-1)
  std::vector<std::uint32_t> log_;  // size q
};

/// Dense univariate polynomials over a field type F exposing
/// add/sub/mul/inv/zero/one on an element type. Coefficients are stored low
/// degree first with no trailing zeros.
template <typename F, typename T>
struct PolyRing {
  const F& f;

  using Poly = std::vector<T>;

  void trim(Poly& a) const {
    while (!a.empty() && a.back() == f.zero()) a.pop_back();
  }
  int degree(const Poly& a) const { return static_cast<int>(a.size()) - 1; }

  Poly sub(Poly a, const Poly& b) const {
    if (a.size() < b.size()) a.resize(b.size(), f.zero());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = f.sub(a[i], b[i]);
    trim(a);
    return a;
  }

  Poly mul(const Poly& a, const Poly& b) const {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, f.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == f.zero()) continue;
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    }
    trim(r);
    return r;
  }

  /// a mod b, b nonzero.
  Poly mod(Poly a, const Poly& b) const {
    const int db = degree(b);
    const T lead_inv = f.inv(b.back());
    while (degree(a) >= db) {
      const int shift = degree(a) - db;
      const T c = f.mul(a.back(), lead_inv);
      for (int i = 0; i <= db; ++i) a[shift + i] = f.sub(a[shift + i], f.mul(c, b[i]));
      trim(a);
    }
    return a;
  }

  Poly mulmod(const Poly& a, const Poly& b, const Poly& m) const { return mod(mul(a, b), m); }

  Poly powmod(Poly base, std::uint64_t k, const Poly& m) const {
    Poly r{f.one()};
    base = mod(base, m);
    while (k > 0) {
      if (k & 1) r = mulmod(r, base, m);
      base = mulmod(base, base, m);
      k >>= 1;
    }
    return r;
  }

  Poly gcd(Poly a, Poly b) const {
    trim(a);
    trim(b);
    while (!b.empty()) {
      Poly r = mod(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    if (!a.empty()) {
      const T li = f.inv(a.back());
      for (auto& c : a) c = f.mul(c, li);
    }
    return a;
  }

  /// Rabin's test for a monic polynomial g of degree d over a field of size q.
  bool is_irreducible(const Poly& g, std::uint64_t q) const {
    const int d = degree(g);
    if (d < 1) return false;
    if (d == 1) return true;
    if (g[0] == f.zero()) return false;
    const Poly x{f.zero(), f.one()};
    // frob[i] = x^{q^i} mod g for i = 0..d
    std::vector<Poly> frob{mod(x, g)};
    for (int i = 1; i <= d; ++i) frob.push_back(powmod(frob.back(), q, g));
    if (sub(frob[d], mod(x, g)) != Poly{}) return false;
    for (auto ell : prime_factors(static_cast<std::uint64_t>(d))) {
      const Poly h = sub(frob[d / ell], x);
      if (degree(gcd(g, h)) != 0) return false;
    }
    return true;
  }
};

/// Lexicographically smallest monic irreducible of the given degree over a
/// field of size q whose elements are enumerated by `element(i)`, i < q.
/// Monic polynomials x^d + sum a_i x^i are visited in increasing order of
/// sum index(a_i) q^i.
template <typename F, typename T, typename ElementAt>
std::vector<T> smallest_irreducible(const F& f, std::uint64_t q, std::uint32_t degree,
                                    ElementAt element) {
  PolyRing<F, T> ring{f};
  std::vector<std::uint64_t> digits(degree, 0);
  for (;;) {
    std::vector<T> g(degree + 1);
    for (std::uint32_t i = 0; i < degree; ++i) g[i] = element(digits[i]);
    g[degree] = f.one();
    if (ring.is_irreducible(g, q)) return g;
    std::uint32_t i = 0;
    while (i < degree && ++digits[i] == q) digits[i++] = 0;
    if (i == degree) break;
  }
  return {};
}

}  // namespace lgs
