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

#include "lgs/base_field.hpp"

#include <bit>
#include <string>

#include "lgs/error.hpp"

namespace lgs {

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a % p == 0) throw ParamError("inverse of zero in F_p");
  std::uint64_t r = 1, b = a % p, k = p - 2;
  while (k > 0) {
    if (k & 1) r = r * b % p;
    b = b * b % p;
    k >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool split_prime_power(std::uint64_t q, std::uint32_t& p, std::uint32_t& e) {
  const auto f = prime_factors(q);
  if (f.size() != 1) return false;
  p = static_cast<std::uint32_t>(f[0]);
  e = 0;
  while (q > 1) {
    q /= p;
    ++e;
  }
  return true;
}

namespace {

std::uint32_t checked_q(std::uint32_t p, std::uint32_t e) {
  if (!is_prime(p)) throw ParamError("characteristic " + std::to_string(p) + " is not prime");
  if (e < 1) throw ParamError("extension exponent e must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > (1u << 16)) throw ParamError("q = p^e must not exceed 2^16");
  }
  return static_cast<std::uint32_t>(q);
}

}  // namespace

BaseField::BaseField(std::uint32_t p, std::uint32_t e)
    : BaseField(p, [&] {
        checked_q(p, e);
        PrimeField fp{p};
        return smallest_irreducible<PrimeField, std::uint32_t>(
            fp, p, e, [](std::uint64_t i) { return static_cast<std::uint32_t>(i); });
      }()) {}

BaseField::BaseField(std::uint32_t p, std::vector<std::uint32_t> modulus)
    : p_(p), modulus_(std::move(modulus)) {
  if (modulus_.size() < 2 || modulus_.back() != 1)
    throw ParamError("base modulus must be monic of degree >= 1");
  e_ = static_cast<std::uint32_t>(modulus_.size() - 1);
  q_ = checked_q(p, e_);
  PrimeField fp{p};
  PolyRing<PrimeField, std::uint32_t> ring{fp};
  if (!ring.is_irreducible(modulus_, p)) throw ParamError("base modulus is not irreducible");
  bits_ = static_cast<std::uint32_t>(std::bit_width(q_ - 1));
  if (q_ == 2) bits_ = 1;
  build_tables();
}

fq_t BaseField::add_slow(fq_t a, fq_t b) const {
  std::uint32_t r = 0, scale = 1;
  std::uint32_t x = a, y = b;
  for (std::uint32_t i = 0; i < e_; ++i) {
    r += ((x % p_ + y % p_) % p_) * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return static_cast<fq_t>(r);
}

fq_t BaseField::neg(fq_t a) const {
  if (p_ == 2) return a;
  std::uint32_t r = 0, scale = 1, x = a;
  for (std::uint32_t i = 0; i < e_; ++i) {
    r += ((p_ - x % p_) % p_) * scale;
    x /= p_;
    scale *= p_;
  }
  return static_cast<fq_t>(r);
}

fq_t BaseField::mul_slow(fq_t a, fq_t b) const {
  PrimeField fp{p_};
  PolyRing<PrimeField, std::uint32_t> ring{fp};
  auto digits = [&](std::uint32_t v) {
    std::vector<std::uint32_t> d(e_);
    for (std::uint32_t i = 0; i < e_; ++i) {
      d[i] = v % p_;
      v /= p_;
    }
    ring.trim(d);
    return d;
  };
  const auto prod = ring.mod(ring.mul(digits(a), digits(b)), modulus_);
  std::uint32_t r = 0, scale = 1;
  for (auto c : prod) {
    r += c * scale;
    scale *= p_;
  }
  return static_cast<fq_t>(r);
}

void BaseField::build_tables() {
  const std::uint32_t order = q_ - 1;
  exp_.assign(2 * std::max<std::uint32_t>(order, 1), 0);
  log_.assign(q_, 0);
  if (q_ == 2) {
    exp_ = {1, 1};
    log_ = {0, 0};
    return;
  }
  const auto factors = prime_factors(order);
  auto slow_pow = [&](fq_t g, std::uint64_t k) {
    fq_t r = 1;
    while (k > 0) {
      if (k & 1) r = mul_slow(r, g);
      g = mul_slow(g, g);
      k >>= 1;
    }
    return r;
  };
  fq_t gen = 0;
  for (std::uint32_t cand = 2; cand < q_ && gen == 0; ++cand) {
    bool primitive = true;
    for (auto ell : factors) {
      if (slow_pow(static_cast<fq_t>(cand), order / ell) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) gen = static_cast<fq_t>(cand);
  }
  if (gen == 0) throw ParamError("no primitive element found");
  fq_t x = 1;
  for (std::uint32_t i = 0; i < order; ++i) {
    exp_[i] = x;
    exp_[i + order] = x;
    log_[x] = i;
    x = mul_slow(x, gen);
  }
}

fq_t BaseField::inv(fq_t a) const {
  if (a == 0) throw ParamError("inverse of zero in F_q");
  const std::uint32_t order = q_ - 1;
  return exp_[(order - log_[a]) % order];
}

fq_t BaseField::pow(fq_t a, std::uint64_t k) const {
  if (k == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t order = q_ - 1;
  return exp_[static_cast<std::size_t>((log_[a] * (k % order)) % order)];
}

void BaseField::axpy(std::span<fq_t> a, fq_t c, std::span<const fq_t> b) const {
  if (c == 0) return;
  if (p_ == 2) {
    if (q_ == 2) {
      for (std::size_t i = 0; i < a.size(); ++i) a[i] ^= b[i];
      return;
    }
    const std::uint32_t lc = log_[c];
    for (std::size_t i = 0; i < a.size(); ++i)
      if (b[i] != 0) a[i] ^= exp_[lc + log_[b[i]]];
    return;
  }
  for (std::size_t i = 0; i < a.size(); ++i)
    if (b[i] != 0) a[i] = add(a[i], mul(c, b[i]));
}

void BaseField::scale(std::span<fq_t> a, fq_t c) const {
  if (c == 1) return;
  for (auto& x : a) x = mul(c, x);
}

}  // namespace lgs
