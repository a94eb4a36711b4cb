#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "bcipher/prng.hpp"

namespace bcipher {

/// The full 80-bit secret: two (seed, mu) pairs, one per generator.
struct CipherKey {
    Word32 seed1 = 0;
    Mu8 mu1;
    Word32 seed2 = 0;
    Mu8 mu2;

    friend bool operator==(const CipherKey&, const CipherKey&) = default;
};

/// Smallest mu accepted by default (mu > 1/2, the expansive regime).
inline constexpr std::uint8_t kMinStrongMu = 129;

struct KeyPolicy {
    /// Lifts the mu >= 129 guard. Identical generators are always refused.
    bool allow_weak_mu = false;
};

class KeyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Text is not 20 hex digits.
class KeyFormatError : public KeyError {
public:
    using KeyError::KeyError;
};

/// Well-formed key that would produce a degenerate keystream.
class DegenerateKeyError : public KeyError {
public:
    using KeyError::KeyError;
};

/// Throws DegenerateKeyError when the key violates the policy.
void validate_key(const CipherKey& key, KeyPolicy policy = {});

/// Decodes seed1(8 hex) | mu1(2) | seed2(8) | mu2(2), case-insensitive,
/// then validates. Surrounding whitespace is ignored.
CipherKey parse_key(std::string_view text, KeyPolicy policy = {});

/// Upper-case 20-character encoding, inverse of parse_key.
std::string format_key(const CipherKey& key);

} // namespace bcipher
