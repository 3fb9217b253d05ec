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

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lgs/params.hpp"

namespace lgs {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr double kDefaultOmega = 2.38;

/// MinRank instance: K matrices of size m x n over F_q, target rank r.
struct MinRankParams {
  std::uint32_t q = 2;
  long long m = 0;
  long long n = 0;
  long long K = 0;
  long long r = 0;
};

/// Scheme instance: r = t_pub, K = k' + 1.
MinRankParams minrank_params(const SchemeParams& p);

/// Exact binomial; zero when k < 0, n < 0 or k > n.
BigInt binomial(long long n, long long k);
/// log2 of a positive integer; -inf for x <= 0.
double log2_big(const BigInt& x);

/// r ceil(K/m) log2 q + omega log2 K.
double kernel_cost(const MinRankParams& p, double omega = kDefaultOmega);

struct MonomialCounts {
  BigInt e;
  BigInt u;
};
/// E_b and U_b, using the q = 2 variants when q == 2.
MonomialCounts sm_monomial_counts(const MinRankParams& p, long long b);
/// U_b - 1 <= E_b with E_b > 0.
bool sm_feasible(const MonomialCounts& c);
/// Smallest b in [1, r + 2) that is feasible.
std::optional<long long> sm_smallest_b(const MinRankParams& p);

struct SmCost {
  long long b = 0;
  double branch1 = 0;  // E U^{omega-1}
  double branch2 = 0;  // K (r+1) E U
  double log2() const { return branch1 < branch2 ? branch1 : branch2; }
};
/// Empty when no b is feasible.
std::optional<SmCost> sm_cost(const MinRankParams& p, double omega = kDefaultOmega);

enum class Solver { Kernel, SupportMinors };
std::string to_string(Solver s);

/// A minimised cost with the (a, b, h) that attains it. `feasible` is false
/// when every candidate was infeasible; log2 is then +inf.
struct Argmin {
  double log2 = 0;
  long long a = 0;
  long long b = 0;
  long long h = 0;
  bool feasible = false;
};

/// min over 0 <= a < ceil(K/m) of q^{ar} TC(q, m, n - a, K - am, r).
Argmin hybrid_cost(const MinRankParams& p, Solver s, double omega = kDefaultOmega);

struct SubsupportCosts {
  Argmin kernel;
  Argmin sm1;
  Argmin sm2;
  Argmin sm() const { return sm1.log2 <= sm2.log2 ? sm1 : sm2; }
};
/// Subsupport-reduction hybrid over (a, h) in {0..ceil(K/m)-1} x {0..r-1}, and
/// for support minors every feasible b with 1 <= b < r - h + 2.
SubsupportCosts subsupport_hybrid_cost(const MinRankParams& p, double omega = kDefaultOmega);
/// Serial reference with a plain triple loop.
SubsupportCosts subsupport_hybrid_cost_serial(const MinRankParams& p, double omega = kDefaultOmega);

/// m (km - k') log2 q.
double dist_cost(std::uint32_t q, std::size_t m, std::size_t k, std::size_t k_prime);

struct ComplexityReport {
  SchemeParams params;
  MinRankParams minrank;
  double omega = kDefaultOmega;
  double kernel_log2 = 0;
  std::optional<SmCost> sm;
  Argmin hybrid_kernel;
  Argmin hybrid_sm;
  SubsupportCosts subsupport;
  double dist_log2 = 0;
  double c_f_log2 = 0;
  std::string c_f_source;  // "subsupport-sm", "subsupport-kernel" or "dist"

  /// Reported integer value: ceiling of the log2, as in the published tables.
  long long c_f() const;
};

ComplexityReport c_f(const SchemeParams& p, double omega = kDefaultOmega);

struct ScanRow {
  ComplexityReport report;
  std::uint64_t pk_bytes = 0;
  std::uint64_t ct_bytes = 0;
};

/// Evaluates every valid candidate in parallel and keeps those with
/// C_f >= target, sorted by ciphertext then public-key size.
std::vector<ScanRow> table_scan(unsigned target, const std::vector<SchemeParams>& candidates,
                                double omega = kDefaultOmega);
std::vector<ScanRow> table_scan_serial(unsigned target, const std::vector<SchemeParams>& candidates,
                                       double omega = kDefaultOmega);

/// Candidates with m, k, k' within the given distances of `center` (same q
/// and delta); invalid combinations are dropped.
std::vector<SchemeParams> neighbourhood(const SchemeParams& center, std::size_t dm, std::size_t dk,
                                        std::size_t dkp);

}  // namespace lgs
