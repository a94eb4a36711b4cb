#pragma once

// Fixed-point Bernoulli-map generator.
//
// The state is a 32-bit register holding the fraction x = value / 2^32.
// One step of the map mirrors the hardware datapath:
//
//   t  = 2x mod 2^32          (the 33rd bit of the doubler is thrown away)
//   p  = t * mu               (40-bit product, mu is an 8-bit fraction)
//   x' = floor(p / 2^8) + 2^23 * (256 - mu)
//
// The additive constant is 2^32 * (1 - mu/256) / 2, which keeps every
// orbit inside [offset, offset + mu * 2^24).

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace bcipher {

using Word32 = std::uint32_t;

inline constexpr unsigned kWordBits = 32;

/// Feedback factor. The real parameter is value / 256.
struct Mu8 {
    std::uint8_t value = 0;

    constexpr Mu8() = default;
    constexpr explicit Mu8(std::uint8_t v) : value(v) {}

    constexpr double real() const { return value / 256.0; }

    friend constexpr bool operator==(Mu8, Mu8) = default;
};

constexpr Word32 generalization_factor(Mu8 mu) {
    return Word32{1u << 23} * (256u - mu.value);
}

constexpr Word32 step(Word32 x, Mu8 mu) {
    const std::uint32_t doubled = x << 1;
    const std::uint64_t product = std::uint64_t{doubled} * mu.value;
    return static_cast<Word32>(product >> 8) + generalization_factor(mu);
}

/// Largest value step() can produce for a given mu.
constexpr Word32 step_upper_bound(Mu8 mu) {
    return generalization_factor(mu) +
           static_cast<Word32>((std::uint64_t{0xFFFFFFFEu} * mu.value) >> 8);
}

/// One PRNG: the state register plus the seed-injection flip-flop.
///
/// Until the first clock the register holds the seed. Every clock latches
/// the adder output, so the seed itself never appears at the output.
class BernoulliGenerator {
public:
    BernoulliGenerator(Word32 seed, Mu8 mu) : x_(seed), mu_(mu) {}

    Word32 state() const { return x_; }
    Mu8 mu() const { return mu_; }
    bool started() const { return started_; }

    Word32 next_word() {
        x_ = step(x_, mu_);
        started_ = true;
        return x_;
    }

    void fill(std::span<Word32> out);
    std::vector<Word32> iterate(std::size_t n);

    friend bool operator==(const BernoulliGenerator&, const BernoulliGenerator&) = default;

private:
    Word32 x_;
    Mu8 mu_;
    bool started_ = false;
};

inline BernoulliGenerator new_generator(Word32 seed, Mu8 mu) { return {seed, mu}; }

} // namespace bcipher
