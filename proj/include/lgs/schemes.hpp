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
#include <vector>

#include "lgs/gabidulin.hpp"
#include "lgs/params.hpp"
#include "lgs/serialize.hpp"
#include "lgs/subcodes.hpp"

namespace lgs {

struct SecretKey {
  FieldPtr field;
  QBasis basis;
  ExtWord g;
  ExtWord lambda;
  std::size_t k = 0;

  LambdaGabCode code() const;
};

/// k' generators G_i, stored as the rows Unfold(G_i) of a k' x mn matrix.
struct PublicKeyMcE {
  FieldParams field;
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t t_pub = 0;
  MatFq gen;

  std::size_t k_prime() const { return gen.rows(); }
  MatrixCodeBasis matrix_code() const { return MatrixCodeBasis::from_unfolded(gen, m); }
};

/// Systematic parity-check matrix. `info` lists the k' information columns of
/// the subcode (its RREF pivots); the identity block sits on the remaining
/// columns in increasing order and `block` holds the (mn - k') x k' entries on
/// the information columns.
struct PublicKeyNied {
  FieldParams field;
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t t_pub = 0;
  std::vector<std::size_t> info;
  MatFq block;

  std::size_t k_prime() const { return info.size(); }
  std::size_t redundancy() const { return m * n - info.size(); }
  /// True iff info = {0, ..., k'-1}; then no pivot list is serialized.
  bool canonical() const;
  std::vector<std::size_t> redundancy_columns() const;
  MatFq h_matrix() const;
};

struct KeyMaterial {
  SchemeParams params;
  SecretKey sk;
  PublicKeyMcE mce;
  PublicKeyNied nied;
  RandomSubcode subcode;
};

/// Deterministic in (params, seed). Subseeds "basis", "support", "lambda" and
/// "P" feed the respective samplers; the stabilizer filter draws its attempts
/// from the "P" subseed.
KeyMaterial keygen(const SchemeParams& params, const Seed& seed);

PublicKeyNied nied_public_key(const BaseField& f, const FieldParams& fp, std::size_t m, std::size_t t_pub,
                              const MatFq& gen);

struct CiphertextMcE {
  MatFq y;
};
struct CiphertextNied {
  VecFq s;
};

CiphertextMcE encrypt_mce(const PublicKeyMcE& pk, const VecFq& x, Rng& rng);
/// Y = sum x_i G_i + E for a caller-supplied E (no rank check).
CiphertextMcE encrypt_mce_with_error(const PublicKeyMcE& pk, const VecFq& x, const MatFq& e);

struct DecryptedMcE {
  VecFq x;
  std::size_t error_rank = 0;
};
/// DecodeFailure when no codeword lies within t_pub; InconsistentCiphertext
/// when the decoded codeword is not in the public subcode.
DecryptedMcE decrypt_mce(const SecretKey& sk, const PublicKeyMcE& pk, const CiphertextMcE& ct);

/// ParamError unless rank(Fold(e)) <= t_pub.
CiphertextNied encrypt_nied(const PublicKeyNied& pk, const VecFq& e);
VecFq decrypt_nied(const SecretKey& sk, const PublicKeyNied& pk, const CiphertextNied& ct);

struct Sizes {
  std::uint64_t pk_bits = 0;
  std::uint64_t pk_bytes = 0;
  std::uint64_t ct_bits = 0;
  std::uint64_t ct_bytes = 0;

  double pk_kb() const { return static_cast<double>(pk_bytes) / 1000.0; }
};
/// k'(mn - k') and (mn - k') elements at ceil(log2 q) bits each.
Sizes sizes(const SchemeParams& params);

// ---- file formats ------------------------------------------------------------
// "LGS1", version, kind, field descriptor (p u32, e u8, m u16), payload.

enum class FileKind : std::uint8_t {
  SecretKey = 1,
  PublicKeyMcE = 2,
  PublicKeyNied = 3,
  CiphertextMcE = 4,
  CiphertextNied = 5,
};

inline constexpr std::uint8_t kFormatVersion = 1;
/// Magic, version, kind and field descriptor.
inline constexpr std::size_t kHeaderBytes = 4 + 1 + 1 + 7;

Bytes serialize(const SecretKey& sk);
Bytes serialize(const PublicKeyMcE& pk);
Bytes serialize(const PublicKeyNied& pk);
Bytes serialize(const CiphertextMcE& ct, const FieldParams& fp);
Bytes serialize(const CiphertextNied& ct, const FieldParams& fp);

/// Kind of a serialized object; IOError on a bad header.
FileKind peek_kind(std::span<const std::uint8_t> data);
SecretKey parse_secret_key(std::span<const std::uint8_t> data);
PublicKeyMcE parse_public_key_mce(std::span<const std::uint8_t> data);
PublicKeyNied parse_public_key_nied(std::span<const std::uint8_t> data);
CiphertextMcE parse_ciphertext_mce(std::span<const std::uint8_t> data);
CiphertextNied parse_ciphertext_nied(std::span<const std::uint8_t> data);

/// Reads binary or hex text (detected by the absence of the magic).
Bytes load_object(const std::string& path);
void store_object(const std::string& path, std::span<const std::uint8_t> data, bool hex);

}  // namespace lgs
