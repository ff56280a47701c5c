/*
 * Copyright 2026 The cca2ta Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef CCA2TA_SERIALIZATION_HPP_
#define CCA2TA_SERIALIZATION_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cca2ta/errors.hpp"
#include "cca2ta/natural.hpp"

namespace cca2ta {

// Canonical wire encoding for keys, plaintexts and ciphertexts:
//
//   tag      := u32be length || UTF-8 scheme name
//   natural  := u32be length || minimal big-endian magnitude
//   count    := u32be
//
// Every record starts with the scheme tag. Encodings are stable within one
// library version.
class ByteWriter {
 public:
  explicit ByteWriter(std::string_view tag) { put_string(tag); }

  ByteWriter& put_u32(std::uint32_t v) {
    for (int shift = 24; shift >= 0; shift -= 8) {
      out_.push_back(static_cast<std::uint8_t>(v >> shift));
    }
    return *this;
  }

  ByteWriter& put_string(std::string_view s) {
    put_u32(static_cast<std::uint32_t>(s.size()));
    out_.insert(out_.end(), s.begin(), s.end());
    return *this;
  }

  ByteWriter& put_natural(const Natural& n) {
    const Bytes raw = to_bytes(n);
    put_u32(static_cast<std::uint32_t>(raw.size()));
    out_.insert(out_.end(), raw.begin(), raw.end());
    return *this;
  }

  ByteWriter& put_naturals(std::span<const Natural> values) {
    put_u32(static_cast<std::uint32_t>(values.size()));
    for (const Natural& v : values) put_natural(v);
    return *this;
  }

  const Bytes& bytes() const& { return out_; }
  Bytes bytes() && { return std::move(out_); }

 private:
  Bytes out_;
};

class ByteReader {
 public:
  ByteReader(std::span<const std::uint8_t> in, std::string_view expected_tag)
      : in_(in) {
    if (get_string() != expected_tag) {
      throw DomainError("ByteReader: scheme tag mismatch, expected " +
                        std::string(expected_tag));
    }
  }

  std::uint32_t get_u32() {
    need(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v = (v << 8) | in_[pos_++];
    return v;
  }

  std::string get_string() {
    const std::uint32_t len = get_u32();
    need(len);
    std::string s(in_.begin() + pos_, in_.begin() + pos_ + len);
    pos_ += len;
    return s;
  }

  Natural get_natural() {
    const std::uint32_t len = get_u32();
    need(len);
    if (len > 0 && in_[pos_] == 0) throw DomainError("ByteReader: non-canonical natural");
    Natural n = from_bytes(in_.subspan(pos_, len));
    pos_ += len;
    return n;
  }

  std::vector<Natural> get_naturals() {
    const std::uint32_t count = get_u32();
    std::vector<Natural> out;
    for (std::uint32_t i = 0; i < count; ++i) out.push_back(get_natural());
    return out;
  }

  bool done() const { return pos_ == in_.size(); }

  void expect_done() const {
    if (!done()) throw DomainError("ByteReader: trailing bytes");
  }

 private:
  void need(std::size_t n) const {
    if (in_.size() - pos_ < n) throw DomainError("ByteReader: truncated input");
  }

  std::span<const std::uint8_t> in_;
  std::size_t pos_ = 0;
};

}  // namespace cca2ta

#endif  // CCA2TA_SERIALIZATION_HPP_
