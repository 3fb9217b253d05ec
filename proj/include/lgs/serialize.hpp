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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lgs/field.hpp"
#include "lgs/matrix.hpp"

namespace lgs {

using Bytes = std::vector<std::uint8_t>;

/// ceil(log2 q): bits used per packed F_q element.
unsigned element_bits(std::uint32_t q);

/// Little-endian writer. Packed element runs are byte-aligned at both ends.
class ByteWriter {
 public:
  void u8(std::uint8_t v) { out_.push_back(v); }
  void u16(std::uint16_t v);
  void u32(std::uint32_t v);
  void raw(std::span<const std::uint8_t> v) { out_.insert(out_.end(), v.begin(), v.end()); }
  /// Elements LSB-first, `bits` bits each.
  void packed(std::span<const fq_t> v, unsigned bits);
  void matrix(const MatFq& a, unsigned bits);
  void field(const FieldParams& p);

  const Bytes& bytes() const { return out_; }
  Bytes take() { return std::move(out_); }

 private:
  Bytes out_;
};

class ByteReader {
 public:
  explicit ByteReader(std::span<const std::uint8_t> in) : in_(in) {}
  std::uint8_t u8();
  std::uint16_t u16();
  std::uint32_t u32();
  Bytes raw(std::size_t n);
  /// Throws IOError if a decoded element is >= q.
  VecFq packed(std::size_t count, unsigned bits, std::uint32_t q);
  MatFq matrix(unsigned bits, std::uint32_t q);
  FieldParams field();

  bool done() const { return pos_ == in_.size(); }
  std::size_t remaining() const { return in_.size() - pos_; }

 private:
  void need(std::size_t n) const;
  std::span<const std::uint8_t> in_;
  std::size_t pos_ = 0;
};

/// Bytes of a packed run of `count` elements.
std::size_t packed_bytes(std::size_t count, unsigned bits);

/// Lowercase hex, 64 characters per line.
std::string to_hex_text(std::span<const std::uint8_t> data);
/// Accepts any whitespace between hex digits.
Bytes from_hex_text(std::string_view text);

Bytes read_file(const std::string& path);
void write_file(const std::string& path, std::span<const std::uint8_t> data);

}  // namespace lgs
