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

#include "lgs/schemes.hpp"

#include <algorithm>
#include <cstring>

#include "lgs/error.hpp"

namespace lgs {

LambdaGabCode SecretKey::code() const { return make_lambda_gab(make_gab(field, g, k), lambda); }

bool PublicKeyNied::canonical() const {
  for (std::size_t i = 0; i < info.size(); ++i)
    if (info[i] != i) return false;
  return true;
}

std::vector<std::size_t> PublicKeyNied::redundancy_columns() const {
  std::vector<std::size_t> out;
  std::size_t next = 0;
  for (std::size_t c = 0; c < m * n; ++c) {
    if (next < info.size() && info[next] == c) {
      ++next;
      continue;
    }
    out.push_back(c);
  }
  return out;
}

MatFq PublicKeyNied::h_matrix() const {
  const std::vector<std::size_t> red = redundancy_columns();
  MatFq h(red.size(), m * n);
  for (std::size_t j = 0; j < red.size(); ++j) {
    h(j, red[j]) = 1;
    for (std::size_t l = 0; l < info.size(); ++l) h(j, info[l]) = block(j, l);
  }
  return h;
}

PublicKeyNied nied_public_key(const BaseField& f, const FieldParams& fp, std::size_t m, std::size_t t_pub,
                              const MatFq& gen) {
  const Rref r = rref(f, gen);
  if (r.rank() != gen.rows()) throw ParamError("subcode generator is not full rank");
  PublicKeyNied pk;
  pk.field = fp;
  pk.m = m;
  pk.n = gen.cols() / m;
  pk.t_pub = t_pub;
  pk.info = r.pivots;
  const std::vector<std::size_t> red = pk.redundancy_columns();
  pk.block = MatFq(red.size(), pk.info.size());
  for (std::size_t j = 0; j < red.size(); ++j)
    for (std::size_t l = 0; l < pk.info.size(); ++l) pk.block(j, l) = f.neg(r.reduced(l, red[j]));
  return pk;
}

KeyMaterial keygen(const SchemeParams& params, const Seed& seed) {
  params.validate();
  const std::size_t m = params.m, n = params.n();
  FieldPtr f = ExtField::create(params.q, static_cast<std::uint32_t>(m));

  Rng basis_rng(Rng::derive(seed, "basis"));
  Rng support_rng(Rng::derive(seed, "support"));
  Rng lambda_rng(Rng::derive(seed, "lambda"));
  KeyMaterial km;
  km.params = params;
  km.sk.field = f;
  km.sk.basis = random_basis(*f, basis_rng);
  km.sk.g = sample_support(*f, n, support_rng);
  km.sk.lambda = sample_lambda(*f, n, params.delta, lambda_rng);
  km.sk.k = params.k;

  const LambdaGabCode code = km.sk.code();
  const MatFq gvec = expanded_generator(code, km.sk.basis);
  km.subcode = filtered_random_subcode(f->base(), gvec, m, params.k_prime, Rng::derive(seed, "P"));

  const std::size_t t = t_pub(n, params.k, code.delta);
  km.mce.field = f->params();
  km.mce.m = m;
  km.mce.n = n;
  km.mce.t_pub = t;
  km.mce.gen = km.subcode.gen;
  km.nied = nied_public_key(f->base(), f->params(), m, t, km.subcode.gen);
  return km;
}

namespace {

void check_field(const SecretKey& sk, const FieldParams& fp) {
  if (!(sk.field->params() == fp)) throw ParamError("secret and public keys use different fields");
}

}  // namespace

CiphertextMcE encrypt_mce_with_error(const PublicKeyMcE& pk, const VecFq& x, const MatFq& e) {
  if (x.size() != pk.k_prime()) throw ParamError("plaintext length must be k'");
  if (e.rows() != pk.m || e.cols() != pk.n) throw ParamError("error matrix must be m x n");
  const BaseField f(pk.field.p, pk.field.base_modulus);
  VecFq y = vec_mul(f, x, pk.gen);
  return {add(f, fold(y, pk.m), e)};
}

CiphertextMcE encrypt_mce(const PublicKeyMcE& pk, const VecFq& x, Rng& rng) {
  const BaseField f(pk.field.p, pk.field.base_modulus);
  return encrypt_mce_with_error(pk, x, sample_error(f, pk.m, pk.n, pk.t_pub, rng));
}

DecryptedMcE decrypt_mce(const SecretKey& sk, const PublicKeyMcE& pk, const CiphertextMcE& ct) {
  check_field(sk, pk.field);
  const ExtField& f = *sk.field;
  if (ct.y.rows() != pk.m || ct.y.cols() != pk.n) throw ParamError("ciphertext must be m x n");
  const Decoded d = lambda_decode(sk.code(), contract_mat(f, sk.basis, ct.y));
  const std::size_t r = rank(f.base(), expand_mat(f, sk.basis, d.error));
  if (r > pk.t_pub) throw DecodeFailure("decoded error rank " + std::to_string(r) + " exceeds t_pub");
  const auto x = solve_left(f.base(), pk.gen, expand_vec(f, sk.basis, d.codeword));
  if (!x) throw InconsistentCiphertext("decoded codeword is not in the public code");
  return {*x, r};
}

CiphertextNied encrypt_nied(const PublicKeyNied& pk, const VecFq& e) {
  if (e.size() != pk.m * pk.n) throw ParamError("error vector length must be mn");
  const BaseField f(pk.field.p, pk.field.base_modulus);
  if (rank(f, fold(e, pk.m)) > pk.t_pub) throw ParamError("rank(Fold(e)) exceeds t_pub");
  const std::vector<std::size_t> red = pk.redundancy_columns();
  VecFq s(red.size());
  for (std::size_t j = 0; j < red.size(); ++j) {
    fq_t acc = e[red[j]];
    for (std::size_t l = 0; l < pk.info.size(); ++l) acc = f.add(acc, f.mul(e[pk.info[l]], pk.block(j, l)));
    s[j] = acc;
  }
  return {s};
}

VecFq decrypt_nied(const SecretKey& sk, const PublicKeyNied& pk, const CiphertextNied& ct) {
  check_field(sk, pk.field);
  const ExtField& f = *sk.field;
  const std::vector<std::size_t> red = pk.redundancy_columns();
  if (ct.s.size() != red.size()) throw ParamError("syndrome length must be mn - k'");
  // y H^T = s with y zero on the information columns.
  VecFq y(pk.m * pk.n, 0);
  for (std::size_t j = 0; j < red.size(); ++j) y[red[j]] = ct.s[j];
  const Decoded d = lambda_decode(sk.code(), contract_vec(f, sk.basis, y));
  const VecFq e = expand_vec(f, sk.basis, d.error);
  const std::size_t r = rank(f.base(), fold(e, pk.m));
  if (r > pk.t_pub) throw DecodeFailure("decoded error rank " + std::to_string(r) + " exceeds t_pub");
  // Checked here rather than through encrypt_nied to report the right category.
  VecFq check(red.size());
  for (std::size_t j = 0; j < red.size(); ++j) {
    fq_t acc = e[red[j]];
    for (std::size_t l = 0; l < pk.info.size(); ++l)
      acc = f.base().add(acc, f.base().mul(e[pk.info[l]], pk.block(j, l)));
    check[j] = acc;
  }
  if (check != ct.s) throw InconsistentCiphertext("recovered error does not match the syndrome");
  return e;
}

Sizes sizes(const SchemeParams& params) {
  const std::uint64_t bits = element_bits(params.q);
  const std::uint64_t red = params.m * params.n() - params.k_prime;
  Sizes s;
  s.pk_bits = params.k_prime * red * bits;
  s.ct_bits = red * bits;
  s.pk_bytes = (s.pk_bits + 7) / 8;
  s.ct_bytes = (s.ct_bits + 7) / 8;
  return s;
}

// ---- file formats ------------------------------------------------------------

namespace {

constexpr char kMagic[4] = {'L', 'G', 'S', '1'};

ByteWriter header(FileKind kind, const FieldParams& fp) {
  ByteWriter w;
  w.raw({reinterpret_cast<const std::uint8_t*>(kMagic), 4});
  w.u8(kFormatVersion);
  w.u8(static_cast<std::uint8_t>(kind));
  w.field(fp);
  return w;
}

struct Header {
  FileKind kind;
  FieldParams field;
};

Header read_header(ByteReader& r) {
  const Bytes magic = r.raw(4);
  if (std::memcmp(magic.data(), kMagic, 4) != 0) throw IOError("bad magic");
  if (r.u8() != kFormatVersion) throw IOError("unsupported format version");
  const std::uint8_t kind = r.u8();
  if (kind < 1 || kind > 5) throw IOError("unknown object kind");
  return {static_cast<FileKind>(kind), r.field()};
}

ByteReader open(std::span<const std::uint8_t> data, FileKind want, FieldParams& fp) {
  ByteReader r(data);
  const Header h = read_header(r);
  if (h.kind != want) throw IOError("object has the wrong kind");
  fp = h.field;
  return r;
}

void finish(const ByteReader& r) {
  if (!r.done()) throw IOError("trailing bytes");
}

VecFq element_coords(const std::vector<ExtElement>& v) {
  VecFq out;
  for (const auto& x : v) out.insert(out.end(), x.c.begin(), x.c.end());
  return out;
}

std::vector<ExtElement> elements(const VecFq& coords, std::size_t m) {
  std::vector<ExtElement> out;
  for (std::size_t i = 0; i < coords.size(); i += m) out.push_back({VecFq(coords.begin() + i, coords.begin() + i + m)});
  return out;
}

}  // namespace

Bytes serialize(const SecretKey& sk) {
  const FieldParams& fp = sk.field->params();
  const unsigned bits = element_bits(fp.q());
  ByteWriter w = header(FileKind::SecretKey, fp);
  w.u16(static_cast<std::uint16_t>(sk.g.size()));
  w.u16(static_cast<std::uint16_t>(sk.k));
  VecFq all = element_coords(sk.basis.elements);
  for (const auto* v : {&sk.g, &sk.lambda}) {
    const VecFq c = element_coords(*v);
    all.insert(all.end(), c.begin(), c.end());
  }
  w.packed(all, bits);
  return w.take();
}

Bytes serialize(const PublicKeyMcE& pk) {
  ByteWriter w = header(FileKind::PublicKeyMcE, pk.field);
  w.u16(static_cast<std::uint16_t>(pk.n));
  w.u16(static_cast<std::uint16_t>(pk.t_pub));
  w.matrix(pk.gen, element_bits(pk.field.q()));
  return w.take();
}

Bytes serialize(const PublicKeyNied& pk) {
  ByteWriter w = header(FileKind::PublicKeyNied, pk.field);
  w.u16(static_cast<std::uint16_t>(pk.n));
  w.u16(static_cast<std::uint16_t>(pk.t_pub));
  w.u32(static_cast<std::uint32_t>(pk.k_prime()));
  if (pk.canonical()) {
    w.u8(0);
  } else {
    w.u8(1);
    for (std::size_t c : pk.info) w.u32(static_cast<std::uint32_t>(c));
  }
  w.packed(pk.block.data(), element_bits(pk.field.q()));
  return w.take();
}

Bytes serialize(const CiphertextMcE& ct, const FieldParams& fp) {
  ByteWriter w = header(FileKind::CiphertextMcE, fp);
  w.u16(static_cast<std::uint16_t>(ct.y.cols()));
  w.packed(ct.y.data(), element_bits(fp.q()));
  return w.take();
}

Bytes serialize(const CiphertextNied& ct, const FieldParams& fp) {
  ByteWriter w = header(FileKind::CiphertextNied, fp);
  w.u32(static_cast<std::uint32_t>(ct.s.size()));
  w.packed(ct.s, element_bits(fp.q()));
  return w.take();
}

FileKind peek_kind(std::span<const std::uint8_t> data) {
  ByteReader r(data);
  return read_header(r).kind;
}

SecretKey parse_secret_key(std::span<const std::uint8_t> data) {
  FieldParams fp;
  ByteReader r = open(data, FileKind::SecretKey, fp);
  const std::size_t m = fp.m, n = r.u16(), k = r.u16();
  const VecFq all = r.packed(m * m + 2 * n * m, element_bits(fp.q()), fp.q());
  finish(r);
  SecretKey sk;
  sk.field = std::make_shared<const ExtField>(fp);
  sk.k = k;
  const auto els = elements(all, m);
  try {
    sk.basis = make_basis(*sk.field, {els.begin(), els.begin() + m});
    sk.g.assign(els.begin() + m, els.begin() + m + n);
    sk.lambda.assign(els.begin() + m + n, els.end());
    sk.code();
  } catch (const ParamError& ex) {
    throw IOError(std::string("invalid secret key: ") + ex.what());
  }
  return sk;
}

PublicKeyMcE parse_public_key_mce(std::span<const std::uint8_t> data) {
  PublicKeyMcE pk;
  ByteReader r = open(data, FileKind::PublicKeyMcE, pk.field);
  pk.m = pk.field.m;
  pk.n = r.u16();
  pk.t_pub = r.u16();
  pk.gen = r.matrix(element_bits(pk.field.q()), pk.field.q());
  finish(r);
  if (pk.gen.cols() != pk.m * pk.n) throw IOError("generator width is not mn");
  return pk;
}

PublicKeyNied parse_public_key_nied(std::span<const std::uint8_t> data) {
  PublicKeyNied pk;
  ByteReader r = open(data, FileKind::PublicKeyNied, pk.field);
  pk.m = pk.field.m;
  pk.n = r.u16();
  pk.t_pub = r.u16();
  const std::size_t kp = r.u32();
  if (kp == 0 || kp >= pk.m * pk.n) throw IOError("invalid k'");
  const std::uint8_t explicit_info = r.u8();
  if (explicit_info > 1) throw IOError("invalid pivot flag");
  for (std::size_t i = 0; i < kp; ++i) {
    const std::size_t c = explicit_info ? r.u32() : i;
    if (c >= pk.m * pk.n || (i > 0 && c <= pk.info.back())) throw IOError("invalid pivot list");
    pk.info.push_back(c);
  }
  const std::size_t red = pk.m * pk.n - kp;
  pk.block = MatFq(red, kp, r.packed(red * kp, element_bits(pk.field.q()), pk.field.q()));
  finish(r);
  return pk;
}

CiphertextMcE parse_ciphertext_mce(std::span<const std::uint8_t> data) {
  FieldParams fp;
  ByteReader r = open(data, FileKind::CiphertextMcE, fp);
  const std::size_t n = r.u16();
  CiphertextMcE ct{MatFq(fp.m, n, r.packed(fp.m * n, element_bits(fp.q()), fp.q()))};
  finish(r);
  return ct;
}

CiphertextNied parse_ciphertext_nied(std::span<const std::uint8_t> data) {
  FieldParams fp;
  ByteReader r = open(data, FileKind::CiphertextNied, fp);
  const std::size_t len = r.u32();
  if (len > r.remaining() * 8) throw IOError("syndrome length exceeds file size");
  CiphertextNied ct{r.packed(len, element_bits(fp.q()), fp.q())};
  finish(r);
  return ct;
}

Bytes load_object(const std::string& path) {
  Bytes data = read_file(path);
  if (data.size() >= 4 && std::memcmp(data.data(), kMagic, 4) == 0) return data;
  return from_hex_text(std::string_view(reinterpret_cast<const char*>(data.data()), data.size()));
}

void store_object(const std::string& path, std::span<const std::uint8_t> data, bool hex) {
  if (!hex) {
    write_file(path, data);
    return;
  }
  const std::string text = to_hex_text(data);
  write_file(path, {reinterpret_cast<const std::uint8_t*>(text.data()), text.size()});
}

}  // namespace lgs
