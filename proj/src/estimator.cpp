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

#include "lgs/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>

#include "lgs/error.hpp"
#include "lgs/schemes.hpp"

namespace lgs {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

/// Strictly better cost, ties broken towards the smaller (a, h, b).
bool better(const Argmin& x, const Argmin& y) {
  if (!x.feasible) return false;
  if (!y.feasible) return true;
  if (x.log2 != y.log2) return x.log2 < y.log2;
  return std::tie(x.a, x.h, x.b) < std::tie(y.a, y.h, y.b);
}

Argmin infeasible() { return {kInf, 0, 0, 0, false}; }

}  // namespace

MinRankParams minrank_params(const SchemeParams& p) {
  return {p.q, static_cast<long long>(p.m), static_cast<long long>(p.n()), static_cast<long long>(p.minrank_k()),
          static_cast<long long>(p.t_pub())};
}

BigInt binomial(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

double log2_big(const BigInt& x) {
  if (x <= 0) return -kInf;
  const std::size_t top = boost::multiprecision::msb(x);
  if (top < 53) return std::log2(x.convert_to<double>());
  const std::size_t shift = top - 52;
  const BigInt head = x >> shift;
  return std::log2(head.convert_to<double>()) + static_cast<double>(shift);
}

double kernel_cost(const MinRankParams& p, double omega) {
  if (p.K < 1 || p.m < 1) throw ParamError("kernel cost needs K >= 1 and m >= 1");
  return static_cast<double>(p.r * ceil_div(p.K, p.m)) * std::log2(static_cast<double>(p.q)) +
         omega * std::log2(static_cast<double>(p.K));
}

MonomialCounts sm_monomial_counts(const MinRankParams& p, long long b) {
  MonomialCounts c;
  const long long n = p.n, m = p.m, K = p.K, r = p.r;
  if (p.q > 2) {
    for (long long i = 1; i <= b; ++i) {
      const BigInt term = binomial(n, r + i) * binomial(m + i - 1, i) * binomial(K + b - i - 1, b - i);
      if (i % 2 == 1) c.e += term;
      else c.e -= term;
    }
    c.u = binomial(K + b - 1, b) * binomial(n, r);
  } else {
    for (long long j = 1; j <= b; ++j) {
      for (long long i = 1; i <= j; ++i) {
        const BigInt term = binomial(n, r + i) * binomial(m + i - 1, i) * binomial(K, j - i);
        if (i % 2 == 1) c.e += term;
        else c.e -= term;
      }
      c.u += binomial(n, r) * binomial(K, j);
    }
  }
  return c;
}

bool sm_feasible(const MonomialCounts& c) { return c.e > 0 && c.u - 1 <= c.e; }

std::optional<long long> sm_smallest_b(const MinRankParams& p) {
  for (long long b = 1; b < p.r + 2; ++b)
    if (sm_feasible(sm_monomial_counts(p, b))) return b;
  return std::nullopt;
}

namespace {

SmCost sm_branches(const MinRankParams& p, long long b, const MonomialCounts& c, double omega) {
  const double le = log2_big(c.e), lu = log2_big(c.u);
  SmCost s;
  s.b = b;
  s.branch1 = le + (omega - 1) * lu;
  s.branch2 = std::log2(static_cast<double>(p.K * (p.r + 1))) + le + lu;
  return s;
}

}  // namespace

std::optional<SmCost> sm_cost(const MinRankParams& p, double omega) {
  for (long long b = 1; b < p.r + 2; ++b) {
    const MonomialCounts c = sm_monomial_counts(p, b);
    if (sm_feasible(c)) return sm_branches(p, b, c, omega);
  }
  return std::nullopt;
}

std::string to_string(Solver s) { return s == Solver::Kernel ? "kernel" : "sm"; }

Argmin hybrid_cost(const MinRankParams& p, Solver s, double omega) {
  Argmin best = infeasible();
  const double lq = std::log2(static_cast<double>(p.q));
  for (long long a = 0; a < ceil_div(p.K, p.m); ++a) {
    const MinRankParams sub{p.q, p.m, p.n - a, p.K - a * p.m, p.r};
    Argmin c{0, a, 0, 0, true};
    if (s == Solver::Kernel) {
      c.log2 = static_cast<double>(a * p.r) * lq + kernel_cost(sub, omega);
    } else {
      const auto sm = sm_cost(sub, omega);
      if (!sm) continue;
      c.log2 = static_cast<double>(a * p.r) * lq + sm->log2();
      c.b = sm->b;
    }
    if (better(c, best)) best = c;
  }
  return best;
}

namespace {

/// All candidates with fixed (a, h).
SubsupportCosts subsupport_cell(const MinRankParams& p, long long a, long long h, double omega) {
  SubsupportCosts out{infeasible(), infeasible(), infeasible()};
  const double lq = std::log2(static_cast<double>(p.q));
  const long long kp = p.K - a * p.m, rr = p.r - h, nn = p.n - h - a;
  const double pre = static_cast<double>(h * (p.n - p.r) + a * (p.r - h)) * lq;
  out.kernel = {pre + static_cast<double>(rr * ceil_div(kp, p.m)) * lq + omega * std::log2(static_cast<double>(kp)),
                a, 0, h, true};
  const MinRankParams sub{p.q, p.m, nn, kp, rr};
  for (long long b = 1; b < rr + 2; ++b) {
    const MonomialCounts c = sm_monomial_counts(sub, b);
    if (!sm_feasible(c)) continue;
    const SmCost s = sm_branches(sub, b, c, omega);
    const Argmin c1{pre + s.branch1, a, b, h, true}, c2{pre + s.branch2, a, b, h, true};
    if (better(c1, out.sm1)) out.sm1 = c1;
    if (better(c2, out.sm2)) out.sm2 = c2;
  }
  return out;
}

void merge(SubsupportCosts& into, const SubsupportCosts& c) {
  if (better(c.kernel, into.kernel)) into.kernel = c.kernel;
  if (better(c.sm1, into.sm1)) into.sm1 = c.sm1;
  if (better(c.sm2, into.sm2)) into.sm2 = c.sm2;
}

void check_minrank(const MinRankParams& p) {
  if (p.K < 1 || p.m < 1 || p.r < 1 || p.r > std::min(p.m, p.n))
    throw ParamError("MinRank parameters need K >= 1 and 1 <= r <= min(m, n)");
}

}  // namespace

SubsupportCosts subsupport_hybrid_cost_serial(const MinRankParams& p, double omega) {
  check_minrank(p);
  SubsupportCosts best{infeasible(), infeasible(), infeasible()};
  for (long long a = 0; a < ceil_div(p.K, p.m); ++a)
    for (long long h = 0; h < p.r; ++h) merge(best, subsupport_cell(p, a, h, omega));
  return best;
}

SubsupportCosts subsupport_hybrid_cost(const MinRankParams& p, double omega) {
  check_minrank(p);
  const long long na = ceil_div(p.K, p.m), cells = na * p.r;
  std::vector<SubsupportCosts> part(static_cast<std::size_t>(cells));
#pragma omp parallel for schedule(dynamic)
  for (long long c = 0; c < cells; ++c) part[c] = subsupport_cell(p, c / p.r, c % p.r, omega);
  SubsupportCosts best{infeasible(), infeasible(), infeasible()};
  for (const auto& c : part) merge(best, c);
  return best;
}

double dist_cost(std::uint32_t q, std::size_t m, std::size_t k, std::size_t k_prime) {
  if (k_prime >= k * m) throw ParamError("dist cost needs k' < km");
  return static_cast<double>(m * (k * m - k_prime)) * std::log2(static_cast<double>(q));
}

long long ComplexityReport::c_f() const { return static_cast<long long>(std::ceil(c_f_log2)); }

namespace {

ComplexityReport report(const SchemeParams& p, double omega, bool parallel) {
  p.validate();
  ComplexityReport r;
  r.params = p;
  r.minrank = minrank_params(p);
  r.omega = omega;
  r.kernel_log2 = kernel_cost(r.minrank, omega);
  r.sm = sm_cost(r.minrank, omega);
  r.hybrid_kernel = hybrid_cost(r.minrank, Solver::Kernel, omega);
  r.hybrid_sm = hybrid_cost(r.minrank, Solver::SupportMinors, omega);
  r.subsupport = parallel ? subsupport_hybrid_cost(r.minrank, omega) : subsupport_hybrid_cost_serial(r.minrank, omega);
  r.dist_log2 = dist_cost(p.q, p.m, p.k, p.k_prime);
  r.c_f_log2 = r.subsupport.sm().log2;
  r.c_f_source = "subsupport-sm";
  if (r.subsupport.kernel.log2 < r.c_f_log2) {
    r.c_f_log2 = r.subsupport.kernel.log2;
    r.c_f_source = "subsupport-kernel";
  }
  if (r.dist_log2 < r.c_f_log2) {
    r.c_f_log2 = r.dist_log2;
    r.c_f_source = "dist";
  }
  return r;
}

void sort_rows(std::vector<ScanRow>& rows) {
  std::stable_sort(rows.begin(), rows.end(), [](const ScanRow& x, const ScanRow& y) {
    return std::tie(x.ct_bytes, x.pk_bytes) < std::tie(y.ct_bytes, y.pk_bytes);
  });
}

bool valid(const SchemeParams& p) {
  try {
    p.validate();
    return p.t_pub() >= 1;
  } catch (const ParamError&) {
    return false;
  }
}

}  // namespace

ComplexityReport c_f(const SchemeParams& p, double omega) { return report(p, omega, true); }

std::vector<ScanRow> table_scan(unsigned target, const std::vector<SchemeParams>& candidates, double omega) {
  std::vector<std::optional<ScanRow>> out(candidates.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (!valid(candidates[i])) continue;
    ScanRow row{report(candidates[i], omega, false), 0, 0};
    if (row.report.c_f() < static_cast<long long>(target)) continue;
    const Sizes s = sizes(candidates[i]);
    row.pk_bytes = s.pk_bytes;
    row.ct_bytes = s.ct_bytes;
    out[i] = std::move(row);
  }
  std::vector<ScanRow> rows;
  for (auto& r : out)
    if (r) rows.push_back(std::move(*r));
  sort_rows(rows);
  return rows;
}

std::vector<ScanRow> table_scan_serial(unsigned target, const std::vector<SchemeParams>& candidates, double omega) {
  std::vector<ScanRow> rows;
  for (const auto& c : candidates) {
    if (!valid(c)) continue;
    ScanRow row{report(c, omega, false), 0, 0};
    if (row.report.c_f() < static_cast<long long>(target)) continue;
    const Sizes s = sizes(c);
    row.pk_bytes = s.pk_bytes;
    row.ct_bytes = s.ct_bytes;
    rows.push_back(std::move(row));
  }
  sort_rows(rows);
  return rows;
}

std::vector<SchemeParams> neighbourhood(const SchemeParams& center, std::size_t dm, std::size_t dk,
                                        std::size_t dkp) {
  auto range = [](std::size_t c, std::size_t d) {
    return std::pair{c > d ? c - d : std::size_t{1}, c + d};
  };
  std::vector<SchemeParams> out;
  const auto [m0, m1] = range(center.m, dm);
  const auto [k0, k1] = range(center.k, dk);
  const auto [p0, p1] = range(center.k_prime, dkp);
  for (std::size_t m = m0; m <= m1; ++m)
    for (std::size_t k = k0; k <= k1; ++k)
      for (std::size_t kp = p0; kp <= p1; ++kp) {
        SchemeParams p = center;
        p.m = m;
        p.k = k;
        p.k_prime = kp;
        p.name = (m == center.m && k == center.k && kp == center.k_prime) ? center.name : "";
        if (valid(p)) out.push_back(p);
      }
  return out;
}

}  // namespace lgs
