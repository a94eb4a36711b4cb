#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "bcipher/key.hpp"
#include "bcipher/prng.hpp"

namespace bcipher {

/// The four byte sections of a word, most significant first.
struct ByteQuad {
    std::uint8_t b3 = 0;
    std::uint8_t b2 = 0;
    std::uint8_t b1 = 0;
    std::uint8_t b0 = 0;

    friend bool operator==(const ByteQuad&, const ByteQuad&) = default;
};

constexpr ByteQuad operator^(ByteQuad a, ByteQuad b) {
    return {static_cast<std::uint8_t>(a.b3 ^ b.b3), static_cast<std::uint8_t>(a.b2 ^ b.b2),
            static_cast<std::uint8_t>(a.b1 ^ b.b1), static_cast<std::uint8_t>(a.b0 ^ b.b0)};
}

/// Splits a `width`-bit value into its upper and lower halves
/// (quotient and remainder by 2^(width/2)).
/// Throws std::invalid_argument for odd or out-of-range widths and for
/// values that do not fit in `width` bits.
std::pair<std::uint32_t, std::uint32_t> split_half(std::uint32_t x, unsigned width);

/// 32 -> 16 -> 8 bit split.
ByteQuad split_word(Word32 x);

Word32 reassemble(ByteQuad q);

/// Eight-input XOR array: every output bit is the parity of the eight
/// corresponding input bits.
constexpr std::uint8_t combine(ByteQuad a, ByteQuad b) {
    return static_cast<std::uint8_t>(a.b3 ^ a.b2 ^ a.b1 ^ a.b0 ^ b.b3 ^ b.b2 ^ b.b1 ^ b.b0);
}

/// Two generators clocked in lockstep; one keystream byte per clock.
class KeystreamGenerator {
public:
    KeystreamGenerator(BernoulliGenerator a, BernoulliGenerator b) : a_(a), b_(b) {}

    /// Validates the key before building the generators.
    explicit KeystreamGenerator(const CipherKey& key, KeyPolicy policy = {});

    std::uint8_t next_byte() {
        const Word32 wa = a_.next_word();
        const Word32 wb = b_.next_word();
        return combine(split_word(wa), split_word(wb));
    }

    void fill(std::span<std::uint8_t> out);

    /// XORs the keystream into `data` in place.
    void apply(std::span<std::uint8_t> data);

    const BernoulliGenerator& first() const { return a_; }
    const BernoulliGenerator& second() const { return b_; }

private:
    BernoulliGenerator a_;
    BernoulliGenerator b_;
};

std::vector<std::uint8_t> keystream_bytes(const CipherKey& key, std::size_t n,
                                          KeyPolicy policy = {});

} // namespace bcipher
