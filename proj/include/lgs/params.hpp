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
#include <optional>
#include <string>
#include <vector>

namespace lgs {

/// Scheme parameters with n = m.
struct SchemeParams {
  std::string name;  // empty for ad-hoc sets
  std::uint32_t q = 2;
  std::size_t delta = 1;
  std::size_t m = 0;
  std::size_t k = 0;
  std::size_t k_prime = 0;

  std::size_t n() const { return m; }
  std::size_t t_pub() const;
  /// K = k' + 1 for the MinRank instance.
  std::size_t minrank_k() const { return k_prime + 1; }
  /// Throws ParamError unless 1 <= k < n, 1 <= k' < km, m ∤ k', 1 <= delta <= m
  /// and q is a prime power.
  void validate() const;
  std::string describe() const;
};

/// A named set together with its published reference values.
struct RegistryEntry {
  SchemeParams params;
  unsigned level = 0;  // 128, 192 or 256
  std::size_t t_pub = 0;
  unsigned c_f = 0;
  double pk_kb = 0;
  std::size_t ct_bytes = 0;
};

/// LGS-128-a ... LGS-128-g, LGS-192-a ... LGS-192-f, LGS-256-a ... LGS-256-f.
const std::vector<RegistryEntry>& registry();
const RegistryEntry* find_entry(const std::string& name);
/// Throws ParamError for unknown names.
SchemeParams named_params(const std::string& name);

/// JSON object {"set"?, "q", "delta", "m", "k", "k_prime"}; fields given
/// explicitly override those of "set". Throws IOError on malformed input.
SchemeParams params_from_json(const std::string& text);
SchemeParams load_params(const std::string& path);

}  // namespace lgs
