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
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "lgs/gabidulin.hpp"
#include "lgs/matrix.hpp"
#include "lgs/random.hpp"
#include "lgs/subcodes.hpp"

namespace lgs {

// ---- generator completion ------------------------------------------------------

/// G~ = ((I_{k'} A_1) Q | A_2) for a k' x mn subcode generator whose first km
/// columns are an information set of the parent.
struct NormalForm {
  std::size_t km = 0;
  /// Column order of the first km coordinates: pivots, then the rest. Column
  /// t of (I A_1) lands on coordinate order[t].
  std::vector<std::size_t> order;
  MatFq a1;  // k' x (km - k')
  MatFq a2;  // k' x (mn - km)

  std::size_t k_prime() const { return a1.rows(); }
  /// km x km permutation Q with (X Q)(:, order[t]) = X(:, t).
  MatFq q_matrix() const;
  /// ((I A_1) Q | A_2).
  MatFq generator() const;
};

/// Pivots are taken greedily left to right inside the first km columns.
/// ParamError if those columns do not have rank k'.
NormalForm normal_form(const BaseField& f, const MatFq& gen, std::size_t km);

/// Returns the unique parent codeword (length mn) with the given first-km
/// projection.
using ParentOracle = std::function<VecFq(const VecFq&)>;
/// White-box oracle from a km x mn parent generator.
ParentOracle parent_oracle(const BaseField& f, const MatFq& parent_gen);

struct Completion {
  MatFq a3;  // (km - k') x (mn - km)
};

Completion complete(const BaseField& f, const NormalForm& nf, const ParentOracle& oracle);
/// The stacked km x mn generator [((I A_1) Q | A_2); ((0 I) Q | A_3)].
MatFq completed_generator(const NormalForm& nf, const MatFq& a3);

using CandidateValidator = std::function<bool(const MatFq& completed)>;

struct SearchResult {
  std::optional<MatFq> found;  // first accepted A_3
  std::uint64_t visited = 0;
  std::uint64_t accepted = 0;
};

/// Exhaustive search over every A_3. The punctured variant keeps the first
/// k + 1 extension coordinates, so A_3 has m columns and the space is
/// q^{m(km - k')}. Throws ParamError when the space exceeds 2^max_bits.
SearchResult completion_search_toy(const BaseField& f, const NormalForm& nf, std::size_t m, bool punctured,
                                   const CandidateValidator& validator, unsigned max_bits = 24);

/// log2 of the number of candidates the search would visit.
double completion_space_bits(std::uint32_t q, std::size_t m, std::size_t n, std::size_t k, std::size_t k_prime,
                             bool punctured);

/// Accepts candidates whose row space equals that of `target` (already
/// truncated to the candidate width).
CandidateValidator equality_validator(const BaseField& f, MatFq target);
/// Accepts candidates whose m x (width/m) matrix code has right stabilizer
/// dimension >= m.
CandidateValidator stabilizer_validator(const BaseField& f, std::size_t m);

// ---- Overbeck-like statistic ----------------------------------------------------

/// dim(C + uC) for an m x n matrix code and an m x m matrix u.
std::size_t overbeck_statistic(const BaseField& f, const MatrixCodeBasis& code, const MatFq& u);
/// The Frobenius x -> x^q as an m x m matrix acting on coordinates in basis B.
MatFq frobenius_matrix(const ExtField& f, const QBasis& basis);

// ---- stabilizer census -----------------------------------------------------------

struct CensusParams {
  std::uint32_t q = 2;
  std::size_t m = 8;  // n = m
  std::size_t k = 4;
  std::size_t k_prime = 17;
  std::size_t delta = 1;
};

struct CensusTrial {
  std::size_t left_dim = 0;
  std::size_t right_dim = 0;
  bool trivial() const { return left_dim == 1 && right_dim == 1; }
};

struct CensusResult {
  std::vector<CensusTrial> trials;
  std::size_t trivial_count = 0;
  std::map<std::size_t, std::size_t> left_hist;
  std::map<std::size_t, std::size_t> right_hist;

  double trivial_fraction() const {
    return trials.empty() ? 0.0 : static_cast<double>(trivial_count) / static_cast<double>(trials.size());
  }
};

/// Fixed parent from derive(seed, "parent"); trial i draws an unfiltered
/// subcode from derive(seed, "trial", i).
CensusResult stabilizer_census(const CensusParams& p, std::size_t trials, const Seed& seed);
CensusResult stabilizer_census_serial(const CensusParams& p, std::size_t trials, const Seed& seed);
/// Same parent, but each trial uses the expanded subspace subcode C ∩ V^n for
/// a random s-dimensional V.
CensusResult structured_census(const CensusParams& p, std::size_t s, std::size_t trials, const Seed& seed);

/// Matrix code φ_B^mat of an F_q-basis of words.
MatrixCodeBasis expand_code(const ExtField& f, const QBasis& basis, const std::vector<ExtWord>& words);

}  // namespace lgs
