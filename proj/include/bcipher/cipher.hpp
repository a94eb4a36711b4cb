#pragma once

// XOR stream encryption with the dual-generator keystream.
//
// There is no nonce, no authentication and no key schedule. Encrypting two
// messages under one key leaks their XOR.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <vector>

#include "bcipher/key.hpp"

namespace bcipher {

/// Read or write failure; `offset` is the number of bytes already processed.
class IoError : public std::runtime_error {
public:
    IoError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at byte offset " + std::to_string(offset)),
          offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

std::vector<std::uint8_t> encrypt(const CipherKey& key, std::span<const std::uint8_t> input,
                                  KeyPolicy policy = {});

inline std::vector<std::uint8_t> decrypt(const CipherKey& key, std::span<const std::uint8_t> input,
                                         KeyPolicy policy = {}) {
    return encrypt(key, input, policy);
}

/// Streams `in` to `out` in fixed-size chunks. The key is validated before
/// anything is read or written. Returns the number of bytes processed.
std::size_t encrypt_stream(const CipherKey& key, std::istream& in, std::ostream& out,
                           KeyPolicy policy = {});

inline std::size_t decrypt_stream(const CipherKey& key, std::istream& in, std::ostream& out,
                                  KeyPolicy policy = {}) {
    return encrypt_stream(key, in, out, policy);
}

} // namespace bcipher
