#include "bcipher/analysis.hpp"

#include <bitset>
#include <ostream>
#include <stdexcept>
#include <string>

#include "bcipher/keystream.hpp"

namespace bcipher::analysis {

Section section_from_int(int s) {
    if (s < 1 || s > 4) {
        throw std::invalid_argument("section must be 1..4, got " + std::to_string(s));
    }
    return static_cast<Section>(s);
}

std::uint8_t section_byte(Word32 w, Section s) {
    const ByteQuad q = split_word(w);
    switch (s) {
    case Section::first: return q.b3;
    case Section::second: return q.b2;
    case Section::third: return q.b1;
    case Section::fourth: return q.b0;
    }
    throw std::invalid_argument("invalid section");
}

std::vector<BifurcationRecord> bifurcation_scan(const ScanParams& p) {
    if (p.mu_min.value > p.mu_max.value) {
        throw std::invalid_argument("bifurcation_scan: mu_min > mu_max");
    }
    if (p.samples == 0) {
        throw std::invalid_argument("bifurcation_scan: samples must be >= 1");
    }
    std::vector<BifurcationRecord> out;
    out.reserve((p.mu_max.value - p.mu_min.value + 1u) * p.samples);
    for (unsigned m = p.mu_min.value; m <= p.mu_max.value; ++m) {
        const Mu8 mu(static_cast<std::uint8_t>(m));
        BernoulliGenerator gen(p.x0, mu);
        for (std::size_t i = 0; i < p.transient; ++i) {
            gen.next_word();
        }
        for (std::size_t i = 0; i < p.samples; ++i) {
            out.push_back({mu, p.section, section_byte(gen.next_word(), p.section)});
        }
    }
    return out;
}

void write_csv(std::ostream& out, const std::vector<BifurcationRecord>& records) {
    out << "mu,section,value\n";
    for (const auto& r : records) {
        out << static_cast<unsigned>(r.mu.value) << ',' << static_cast<int>(r.section) << ','
            << static_cast<unsigned>(r.value) << '\n';
    }
}

ByteBand section1_band(Mu8 mu) {
    return {static_cast<std::uint8_t>(generalization_factor(mu) >> 24),
            static_cast<std::uint8_t>(step_upper_bound(mu) >> 24)};
}

double coverage(Word32 seed, Mu8 mu, Section section, std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("coverage: n must be >= 1");
    }
    std::bitset<256> seen;
    BernoulliGenerator gen(seed, mu);
    for (std::size_t i = 0; i < n; ++i) {
        seen.set(section_byte(gen.next_word(), section));
    }
    return static_cast<double>(seen.count()) / 256.0;
}

CycleResult cycle_length(Word32 seed, Mu8 mu, std::uint64_t max_steps) {
    if (max_steps == 0) {
        throw std::invalid_argument("cycle_length: max_steps must be >= 1");
    }
    CycleResult result;

    // Period search: the hare runs ahead, the tortoise teleports to it at
    // every power of two.
    std::uint64_t power = 1;
    std::uint64_t period = 1;
    Word32 tortoise = seed;
    Word32 hare = step(seed, mu);
    std::uint64_t steps = 1;
    while (tortoise != hare) {
        if (steps >= max_steps) {
            result.steps_examined = steps;
            return result;
        }
        if (power == period) {
            tortoise = hare;
            power *= 2;
            period = 0;
        }
        hare = step(hare, mu);
        ++period;
        ++steps;
    }

    // Tail search: two pointers `period` apart meet at the cycle entry.
    tortoise = seed;
    hare = seed;
    for (std::uint64_t i = 0; i < period; ++i) {
        hare = step(hare, mu);
    }
    steps += period;
    std::uint64_t tail = 0;
    while (tortoise != hare) {
        tortoise = step(tortoise, mu);
        hare = step(hare, mu);
        ++tail;
        steps += 2;
    }

    result.found = true;
    result.tail = tail;
    result.period = period;
    result.steps_examined = steps;
    return result;
}

} // namespace bcipher::analysis
