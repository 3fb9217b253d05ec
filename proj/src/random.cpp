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

#include "lgs/random.hpp"

#include <sodium.h>

#include <algorithm>
#include <cstring>
#include <stdexcept>

#include "lgs/error.hpp"

namespace lgs {

namespace {

void ensure_sodium() {
  static const bool ok = sodium_init() >= 0;
  if (!ok) throw Error("libsodium initialisation failed");
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

Rng::Rng(const Seed& seed) : seed_(seed) { ensure_sodium(); }

Seed Rng::derive(const Seed& parent, std::string_view label) {
  ensure_sodium();
  Seed out{};
  crypto_generichash(out.data(), out.size(), reinterpret_cast<const unsigned char*>(label.data()),
                     label.size(), parent.data(), parent.size());
  return out;
}

Seed Rng::derive(const Seed& parent, std::string_view label, std::uint64_t index) {
  std::string buf(label);
  buf.push_back('#');
  for (int i = 0; i < 8; ++i) buf.push_back(static_cast<char>((index >> (8 * i)) & 0xff));
  return derive(parent, buf);
}

Seed Rng::from_u64(std::uint64_t value) {
  Seed s{};
  for (int i = 0; i < 8; ++i) s[i] = static_cast<std::uint8_t>((value >> (8 * i)) & 0xff);
  return s;
}

Seed Rng::from_hex(std::string_view hex) {
  if (hex.size() > 2 && hex[0] == '0' && (hex[1] == 'x' || hex[1] == 'X')) hex.remove_prefix(2);
  if (hex.empty() || hex.size() > 64 || hex.size() % 2 != 0)
    throw ParamError("seed must be 1 to 32 bytes of hex");
  Seed s{};
  for (std::size_t i = 0; i < hex.size() / 2; ++i) {
    const int hi = hex_value(hex[2 * i]);
    const int lo = hex_value(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) throw ParamError("seed contains a non-hex character");
    s[i] = static_cast<std::uint8_t>(hi * 16 + lo);
  }
  return s;
}

std::string Rng::to_hex(const Seed& seed) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(64);
  for (auto b : seed) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 15]);
  }
  return out;
}

Seed Rng::system() {
  ensure_sodium();
  Seed s{};
  randombytes_buf(s.data(), s.size());
  return s;
}

void Rng::refill() {
  const Seed key = derive(seed_, "stream", block_++);
  randombytes_buf_deterministic(buffer_.data(), buffer_.size(), key.data());
  pos_ = 0;
}

void Rng::fill(std::uint8_t* out, std::size_t len) {
  while (len > 0) {
    if (pos_ == buffer_.size()) refill();
    const std::size_t take = std::min(len, buffer_.size() - pos_);
    std::memcpy(out, buffer_.data() + pos_, take);
    pos_ += take;
    out += take;
    len -= take;
  }
}

std::uint64_t Rng::next_u64() {
  std::uint8_t b[8];
  fill(b, 8);
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  return v;
}

std::uint64_t Rng::uniform(std::uint64_t bound) {
  if (bound == 0) throw ParamError("uniform: empty range");
  if ((bound & (bound - 1)) == 0) return next_u64() & (bound - 1);
  // 2^64 mod bound; values at or above 2^64 - rem would bias the result.
  const std::uint64_t rem = (max() % bound + 1) % bound;
  const std::uint64_t limit = std::uint64_t{0} - rem;
  for (;;) {
    const std::uint64_t v = next_u64();
    if (rem == 0 || v < limit) return v % bound;
  }
}

}  // namespace lgs
