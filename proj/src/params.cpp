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

#include "lgs/params.hpp"

#include <json.hpp>

#include "lgs/base_field.hpp"
#include "lgs/error.hpp"
#include "lgs/gabidulin.hpp"
#include "lgs/serialize.hpp"

namespace lgs {

std::size_t SchemeParams::t_pub() const { return lgs::t_pub(n(), k, delta); }

void SchemeParams::validate() const {
  std::uint32_t pp = 0, ee = 0;
  if (!split_prime_power(q, pp, ee)) throw ParamError("q = " + std::to_string(q) + " is not a prime power");
  if (m < 2) throw ParamError("m must be at least 2");
  if (k < 1 || k >= n()) throw ParamError("need 1 <= k < n");
  if (k_prime < 1 || k_prime >= k * m) throw ParamError("need 1 <= k' < km");
  if (k_prime % m == 0) throw ParamError("k' must not be divisible by m");
  if (delta < 1 || delta > m) throw ParamError("need 1 <= delta <= m");
}

std::string SchemeParams::describe() const {
  std::string s = name.empty() ? "" : name + " ";
  return s + "(q=" + std::to_string(q) + ", delta=" + std::to_string(delta) + ", m=n=" + std::to_string(m) +
         ", k=" + std::to_string(k) + ", k'=" + std::to_string(k_prime) + ", t_pub=" + std::to_string(t_pub()) + ")";
}

namespace {

RegistryEntry row(const char* name, unsigned level, std::uint32_t q, std::size_t delta, std::size_t m, std::size_t k,
                  std::size_t kp, std::size_t t, unsigned cf, double pk, std::size_t ct) {
  return {{name, q, delta, m, k, kp}, level, t, cf, pk, ct};
}

}  // namespace

const std::vector<RegistryEntry>& registry() {
  static const std::vector<RegistryEntry> rows = {
      row("LGS-128-a", 128, 2, 1, 38, 30, 1125, 4, 131, 44.86, 40),
      row("LGS-128-b", 128, 8, 1, 20, 14, 270, 3, 135, 13.16, 49),
      row("LGS-128-c", 128, 2, 1, 34, 24, 800, 5, 131, 35.60, 45),
      row("LGS-128-d", 128, 16, 1, 17, 11, 183, 3, 142, 9.70, 53),
      row("LGS-128-e", 128, 2, 1, 32, 18, 564, 7, 137, 32.43, 58),
      row("LGS-128-f", 128, 2, 2, 46, 30, 1360, 4, 132, 128.52, 95),
      row("LGS-128-g", 128, 8, 2, 30, 18, 528, 3, 145, 73.66, 140),
      row("LGS-192-a", 192, 8, 1, 27, 21, 557, 3, 199, 35.93, 65),
      row("LGS-192-b", 192, 16, 1, 23, 17, 381, 3, 213, 28.19, 74),
      row("LGS-192-c", 192, 2, 1, 39, 23, 880, 8, 195, 70.51, 81),
      row("LGS-192-d", 192, 16, 1, 21, 11, 221, 5, 213, 24.31, 110),
      row("LGS-192-e", 192, 2, 2, 62, 46, 2822, 4, 196, 360.51, 128),
      row("LGS-192-f", 192, 8, 2, 37, 25, 910, 3, 203, 156.63, 173),
      row("LGS-256-a", 256, 2, 1, 59, 49, 2881, 5, 259, 216.07, 75),
      row("LGS-256-b", 256, 2, 1, 47, 31, 1434, 8, 260, 138.92, 97),
      row("LGS-256-c", 256, 2, 1, 49, 35, 1695, 7, 257, 149.58, 89),
      row("LGS-256-d", 256, 8, 1, 27, 17, 447, 5, 265, 47.27, 106),
      row("LGS-256-e", 256, 16, 1, 24, 14, 324, 5, 276, 40.82, 126),
      row("LGS-256-f", 256, 8, 2, 44, 32, 1388, 3, 269, 285.23, 206),
  };
  return rows;
}

const RegistryEntry* find_entry(const std::string& name) {
  for (const auto& e : registry())
    if (e.params.name == name) return &e;
  return nullptr;
}

SchemeParams named_params(const std::string& name) {
  const RegistryEntry* e = find_entry(name);
  if (!e) throw ParamError("unknown parameter set '" + name + "'");
  return e->params;
}

SchemeParams params_from_json(const std::string& text) {
  using nlohmann::json;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& ex) {
    throw IOError(std::string("config: ") + ex.what());
  }
  if (!j.is_object()) throw IOError("config: expected a JSON object");
  SchemeParams p;
  try {
    if (j.contains("set")) p = named_params(j.at("set").get<std::string>());
    const bool overridden = j.contains("q") || j.contains("delta") || j.contains("m") || j.contains("k") ||
                            j.contains("k_prime");
    if (j.contains("q")) p.q = j.at("q").get<std::uint32_t>();
    if (j.contains("delta")) p.delta = j.at("delta").get<std::size_t>();
    if (j.contains("m")) p.m = j.at("m").get<std::size_t>();
    if (j.contains("k")) p.k = j.at("k").get<std::size_t>();
    if (j.contains("k_prime")) p.k_prime = j.at("k_prime").get<std::size_t>();
    if (j.contains("name")) p.name = j.at("name").get<std::string>();
    else if (overridden) p.name.clear();
  } catch (const json::exception& ex) {
    throw IOError(std::string("config: ") + ex.what());
  }
  return p;
}

SchemeParams load_params(const std::string& path) {
  const Bytes b = read_file(path);
  return params_from_json(std::string(b.begin(), b.end()));
}

}  // namespace lgs
