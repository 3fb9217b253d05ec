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

#include "lgs/serialize.hpp"

#include <sodium.h>

#include <fstream>
#include <iterator>

#include "lgs/error.hpp"

namespace lgs {

unsigned element_bits(std::uint32_t q) {
  unsigned b = 0;
  while ((std::uint64_t{1} << b) < q) ++b;
  return b;
}

std::size_t packed_bytes(std::size_t count, unsigned bits) { return (count * bits + 7) / 8; }

void ByteWriter::u16(std::uint16_t v) {
  u8(static_cast<std::uint8_t>(v));
  u8(static_cast<std::uint8_t>(v >> 8));
}

void ByteWriter::u32(std::uint32_t v) {
  for (int i = 0; i < 4; ++i) u8(static_cast<std::uint8_t>(v >> (8 * i)));
}

void ByteWriter::packed(std::span<const fq_t> v, unsigned bits) {
  const std::size_t start = out_.size();
  out_.resize(start + packed_bytes(v.size(), bits), 0);
  std::size_t pos = 0;
  for (fq_t x : v) {
    for (unsigned b = 0; b < bits; ++b, ++pos)
      if ((x >> b) & 1) out_[start + pos / 8] |= static_cast<std::uint8_t>(1u << (pos % 8));
  }
}

void ByteWriter::matrix(const MatFq& a, unsigned bits) {
  u32(static_cast<std::uint32_t>(a.rows()));
  u32(static_cast<std::uint32_t>(a.cols()));
  packed(a.data(), bits);
}

void ByteWriter::field(const FieldParams& p) {
  u32(p.p);
  u8(static_cast<std::uint8_t>(p.e));
  u16(static_cast<std::uint16_t>(p.m));
}

void ByteReader::need(std::size_t n) const {
  if (in_.size() - pos_ < n) throw IOError("truncated input");
}

std::uint8_t ByteReader::u8() {
  need(1);
  return in_[pos_++];
}

std::uint16_t ByteReader::u16() {
  const std::uint16_t lo = u8();
  return static_cast<std::uint16_t>(lo | (u8() << 8));
}

std::uint32_t ByteReader::u32() {
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= std::uint32_t{u8()} << (8 * i);
  return v;
}

Bytes ByteReader::raw(std::size_t n) {
  need(n);
  Bytes out(in_.begin() + pos_, in_.begin() + pos_ + n);
  pos_ += n;
  return out;
}

VecFq ByteReader::packed(std::size_t count, unsigned bits, std::uint32_t q) {
  const std::size_t len = packed_bytes(count, bits);
  need(len);
  VecFq out(count, 0);
  std::size_t pos = 0;
  for (auto& x : out) {
    std::uint32_t v = 0;
    for (unsigned b = 0; b < bits; ++b, ++pos)
      if ((in_[pos_ + pos / 8] >> (pos % 8)) & 1) v |= 1u << b;
    if (v >= q) throw IOError("packed element out of range");
    x = static_cast<fq_t>(v);
  }
  pos_ += len;
  return out;
}

MatFq ByteReader::matrix(unsigned bits, std::uint32_t q) {
  const std::size_t r = u32(), c = u32();
  if (r != 0 && c > (std::size_t{1} << 26) / r) throw IOError("matrix too large");
  MatFq a(r, c);
  a.data() = packed(r * c, bits, q);
  return a;
}

FieldParams ByteReader::field() {
  const std::uint32_t p = u32();
  const std::uint32_t e = u8();
  const std::uint32_t m = u16();
  try {
    return make_field(p, e, m);
  } catch (const ParamError& ex) {
    throw IOError(std::string("bad field descriptor: ") + ex.what());
  }
}

std::string to_hex_text(std::span<const std::uint8_t> data) {
  std::string hex(2 * data.size() + 1, '\0');
  sodium_bin2hex(hex.data(), hex.size(), data.data(), data.size());
  hex.pop_back();
  std::string out;
  for (std::size_t i = 0; i < hex.size(); i += 64) {
    out.append(hex, i, 64);
    out.push_back('\n');
  }
  return out;
}

Bytes from_hex_text(std::string_view text) {
  Bytes out(text.size() / 2 + 1);
  std::size_t len = 0;
  const char* end = nullptr;
  if (sodium_hex2bin(out.data(), out.size(), text.data(), text.size(), " \t\r\n", &len, &end) != 0 ||
      end != text.data() + text.size())
    throw IOError("invalid hex text");
  out.resize(len);
  return out;
}

Bytes read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IOError("cannot open " + path);
  return Bytes(std::istreambuf_iterator<char>(in), {});
}

void write_file(const std::string& path, std::span<const std::uint8_t> data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IOError("cannot write " + path);
  out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
  if (!out) throw IOError("write failed: " + path);
}

}  // namespace lgs
