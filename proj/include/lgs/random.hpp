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

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace lgs {

using Seed = std::array<std::uint8_t, 32>;

/// Deterministic random stream keyed by a 32-byte seed.
///
/// The stream is a sequence of ChaCha20 blocks, each keyed by a BLAKE2b
/// derivation of (seed, block index). Integer sampling uses rejection so the
/// output is identical on every platform.
class Rng {
 public:
  explicit Rng(const Seed& seed);

  /// Independent child seed for a named purpose ("basis", "support", ...).
  static Seed derive(const Seed& parent, std::string_view label);
  static Seed derive(const Seed& parent, std::string_view label, std::uint64_t index);

  static Seed from_u64(std::uint64_t value);
  static Seed from_hex(std::string_view hex);
  static std::string to_hex(const Seed& seed);
  /// Fresh seed from system entropy.
  static Seed system();

  Rng fork(std::string_view label) const { return Rng(derive(seed_, label)); }
  const Seed& seed() const { return seed_; }

  std::uint64_t next_u64();
  /// Uniform integer in [0, bound). bound must be nonzero.
  std::uint64_t uniform(std::uint64_t bound);
  void fill(std::uint8_t* out, std::size_t len);

  // UniformRandomBitGenerator surface.
  using result_type = std::uint64_t;
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }
  result_type operator()() { return next_u64(); }

 private:
  void refill();

  Seed seed_;
  std::uint64_t block_ = 0;
  std::array<std::uint8_t, 512> buffer_{};
  std::size_t pos_ = 512;
};

}  // namespace lgs
