#include "bcipher/keystream.hpp"

#include <stdexcept>
#include <string>

namespace bcipher {

std::pair<std::uint32_t, std::uint32_t> split_half(std::uint32_t x, unsigned width) {
    if (width % 2 != 0 || width == 0 || width > 32) {
        throw std::invalid_argument("split_half: width must be even and in [2, 32], got " +
                                    std::to_string(width));
    }
    if (width < 32 && (x >> width) != 0) {
        throw std::invalid_argument("split_half: value does not fit in " +
                                    std::to_string(width) + " bits");
    }
    const std::uint64_t divisor = std::uint64_t{1} << (width / 2);
    return {static_cast<std::uint32_t>(x / divisor), static_cast<std::uint32_t>(x % divisor)};
}

ByteQuad split_word(Word32 x) {
    const auto [hi, lo] = split_half(x, 32);
    const auto [b3, b2] = split_half(hi, 16);
    const auto [b1, b0] = split_half(lo, 16);
    return {static_cast<std::uint8_t>(b3), static_cast<std::uint8_t>(b2),
            static_cast<std::uint8_t>(b1), static_cast<std::uint8_t>(b0)};
}

Word32 reassemble(ByteQuad q) {
    return (Word32{q.b3} << 24) | (Word32{q.b2} << 16) | (Word32{q.b1} << 8) | Word32{q.b0};
}

namespace {

BernoulliGenerator checked_first(const CipherKey& key, KeyPolicy policy) {
    validate_key(key, policy);
    return {key.seed1, key.mu1};
}

} // namespace

KeystreamGenerator::KeystreamGenerator(const CipherKey& key, KeyPolicy policy)
    : a_(checked_first(key, policy)), b_(key.seed2, key.mu2) {}

void KeystreamGenerator::fill(std::span<std::uint8_t> out) {
    for (auto& b : out) {
        b = next_byte();
    }
}

void KeystreamGenerator::apply(std::span<std::uint8_t> data) {
    for (auto& b : data) {
        b ^= next_byte();
    }
}

std::vector<std::uint8_t> keystream_bytes(const CipherKey& key, std::size_t n, KeyPolicy policy) {
    KeystreamGenerator ks(key, policy);
    std::vector<std::uint8_t> out(n);
    ks.fill(out);
    return out;
}

} // namespace bcipher
