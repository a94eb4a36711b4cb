#pragma once

// Frequency, block frequency, runs, cumulative sums and spectral tests
// from the NIST SP 800-22 statistical test suite.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bcipher::stats {

inline constexpr double kSignificance = 0.01;
inline constexpr std::size_t kRecommendedBits = 100;

/// Non-empty sequence of 0/1 values.
class BitSequence {
public:
    /// Throws std::invalid_argument if empty or any element is not 0 or 1.
    explicit BitSequence(std::vector<std::uint8_t> bits);

    /// Parses a string of '0'/'1' characters.
    static BitSequence from_string(std::string_view text);

    std::size_t size() const { return bits_.size(); }
    std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
    std::span<const std::uint8_t> bits() const { return bits_; }

    BitSequence reversed() const;

private:
    std::vector<std::uint8_t> bits_;
};

/// Each byte expands to 8 bits, most significant first.
BitSequence bits_from_bytes(std::span<const std::uint8_t> data);

struct TestReport {
    std::string test;
    double statistic = 0.0;
    double p_value = 0.0;
    bool pass = false;
    std::vector<std::pair<std::string, double>> params;
    std::string note;

    double param(std::string_view name) const;
};

enum class CusumMode { forward, reverse };

TestReport frequency_test(const BitSequence& s);

/// Throws std::invalid_argument when block_size is 0 or exceeds n.
TestReport block_frequency_test(const BitSequence& s, std::size_t block_size);

TestReport runs_test(const BitSequence& s);

TestReport cusum_test(const BitSequence& s, CusumMode mode);

/// Spectral test. An odd trailing bit is dropped (recorded in the note).
/// Throws std::invalid_argument for n < 2.
TestReport fft_test(const BitSequence& s);

struct SuiteConfig {
    std::size_t block_size = 128;
};

inline constexpr std::size_t kMinSuiteBytes = 13;

/// Frequency, block frequency, runs, cusum forward, cusum reverse, FFT,
/// in that order. Needs at least 13 bytes. A block size larger than the
/// bit count is reduced to the bit count.
std::vector<TestReport> run_suite(std::span<const std::uint8_t> data, const SuiteConfig& config = {});

/// JSON array of {test, statistic, p_value, pass, params}.
std::string to_json(const std::vector<TestReport>& reports);

std::string to_text(const std::vector<TestReport>& reports);

} // namespace bcipher::stats
