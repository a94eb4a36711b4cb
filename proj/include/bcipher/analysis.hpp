#pragma once

// Orbit analysis for the fixed-point map: bifurcation data per byte
// section, byte-value coverage and finite-precision cycle structure.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "bcipher/prng.hpp"

namespace bcipher::analysis {

/// Section 1 is the most significant byte of the word, section 4 the least.
enum class Section : int { first = 1, second = 2, third = 3, fourth = 4 };

/// Throws std::invalid_argument for values outside 1..4.
Section section_from_int(int s);

std::uint8_t section_byte(Word32 w, Section s);

struct BifurcationRecord {
    Mu8 mu;
    Section section = Section::first;
    std::uint8_t value = 0;

    friend bool operator==(const BifurcationRecord&, const BifurcationRecord&) = default;
};

struct ScanParams {
    Mu8 mu_min;
    Mu8 mu_max;
    Word32 x0 = 0;
    std::size_t transient = 1000;
    std::size_t samples = 200;
    Section section = Section::first;
};

/// For every mu in [mu_min, mu_max]: iterate from x0, drop `transient`
/// outputs, record the selected byte of the next `samples` outputs.
/// Records are ordered by mu, then by orbit position.
std::vector<BifurcationRecord> bifurcation_scan(const ScanParams& params);

/// Header `mu,section,value`, decimal fields, one record per row.
void write_csv(std::ostream& out, const std::vector<BifurcationRecord>& records);

/// Inclusive range that the section-1 byte of any step() output can take.
struct ByteBand {
    std::uint8_t lo;
    std::uint8_t hi;
};
ByteBand section1_band(Mu8 mu);

/// Fraction of the 256 byte values seen in `section` over n outputs.
double coverage(Word32 seed, Mu8 mu, Section section, std::size_t n);

struct CycleResult {
    bool found = false;
    std::uint64_t tail = 0;
    std::uint64_t period = 0;
    std::uint64_t steps_examined = 0;
};

/// Brent's cycle detection on the orbit x0 = seed, x_{k+1} = step(x_k).
/// `tail` counts the states visited before the first state on the cycle.
/// If no cycle is confirmed within `max_steps` map evaluations during the
/// period search, returns found = false.
CycleResult cycle_length(Word32 seed, Mu8 mu, std::uint64_t max_steps);

} // namespace bcipher::analysis
