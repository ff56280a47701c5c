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

#ifndef CCA2TA_DIGEST_HPP_
#define CCA2TA_DIGEST_HPP_

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include <openssl/evp.h>

#include "cca2ta/natural.hpp"

namespace cca2ta {

using Sha256Digest = std::array<std::uint8_t, 32>;

// Incremental SHA-256 over OpenSSL's EVP interface.
class Sha256 {
 public:
  Sha256() : ctx_(EVP_MD_CTX_new(), &EVP_MD_CTX_free) {
    if (!ctx_ || EVP_DigestInit_ex(ctx_.get(), EVP_sha256(), nullptr) != 1) {
      throw std::runtime_error("Sha256: EVP initialisation failed");
    }
  }

  Sha256& update(std::span<const std::uint8_t> data) {
    if (EVP_DigestUpdate(ctx_.get(), data.data(), data.size()) != 1) {
      throw std::runtime_error("Sha256: update failed");
    }
    return *this;
  }

  Sha256& update(std::string_view data) {
    return update(std::span<const std::uint8_t>(
        reinterpret_cast<const std::uint8_t*>(data.data()), data.size()));
  }

  Sha256Digest finish() {
    Sha256Digest out{};
    unsigned int len = 0;
    if (EVP_DigestFinal_ex(ctx_.get(), out.data(), &len) != 1 || len != out.size()) {
      throw std::runtime_error("Sha256: final failed");
    }
    return out;
  }

 private:
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx_;
};

inline Sha256Digest sha256(std::span<const std::uint8_t> data) {
  return Sha256().update(data).finish();
}

inline std::string sha256_hex(std::span<const std::uint8_t> data) {
  const Sha256Digest d = sha256(data);
  return to_hex(d);
}

inline std::string sha256_hex(std::string_view data) {
  const Sha256Digest d = Sha256().update(data).finish();
  return to_hex(d);
}

}  // namespace cca2ta

#endif  // CCA2TA_DIGEST_HPP_
