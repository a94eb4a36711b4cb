#include "bcipher/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

#include "bcipher/special_functions.hpp"
#include "bcipher/spectrum.hpp"

namespace bcipher::stats {

using special::erfc;
using special::igamc;
using special::normal_cdf;

BitSequence::BitSequence(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    if (bits_.empty()) {
        throw std::invalid_argument("BitSequence: empty sequence");
    }
    if (std::any_of(bits_.begin(), bits_.end(), [](std::uint8_t b) { return b > 1; })) {
        throw std::invalid_argument("BitSequence: elements must be 0 or 1");
    }
}

BitSequence BitSequence::from_string(std::string_view text) {
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument(std::string("BitSequence: invalid character '") + c + "'");
        }
        bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return BitSequence(std::move(bits));
}

BitSequence BitSequence::reversed() const {
    return BitSequence(std::vector<std::uint8_t>(bits_.rbegin(), bits_.rend()));
}

BitSequence bits_from_bytes(std::span<const std::uint8_t> data) {
    if (data.empty()) {
        throw std::invalid_argument("bits_from_bytes: empty input");
    }
    std::vector<std::uint8_t> bits;
    bits.reserve(data.size() * 8);
    for (std::uint8_t byte : data) {
        for (int i = 7; i >= 0; --i) {
            bits.push_back(static_cast<std::uint8_t>((byte >> i) & 1u));
        }
    }
    return BitSequence(std::move(bits));
}

double TestReport::param(std::string_view name) const {
    for (const auto& [key, value] : params) {
        if (key == name) return value;
    }
    throw std::out_of_range("TestReport: no parameter '" + std::string(name) + "'");
}

namespace {

TestReport make_report(std::string name, double statistic, double p, const BitSequence& s) {
    TestReport r;
    r.test = std::move(name);
    r.statistic = statistic;
    r.p_value = std::clamp(p, 0.0, 1.0);
    r.pass = r.p_value >= kSignificance;
    r.params.emplace_back("n", static_cast<double>(s.size()));
    if (s.size() < kRecommendedBits) {
        r.note = "n below recommended minimum of 100";
    }
    return r;
}

void append_note(TestReport& r, std::string_view text) {
    if (!r.note.empty()) r.note += "; ";
    r.note += text;
}

std::size_t count_ones(std::span<const std::uint8_t> bits) {
    return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), std::uint8_t{1}));
}

} // namespace

TestReport frequency_test(const BitSequence& s) {
    const double n = static_cast<double>(s.size());
    const double ones = static_cast<double>(count_ones(s.bits()));
    const double sum = 2.0 * ones - n;
    const double s_obs = std::fabs(sum) / std::sqrt(n);
    auto r = make_report("frequency", s_obs, erfc(s_obs / std::sqrt(2.0)), s);
    r.params.emplace_back("S_n", sum);
    return r;
}

TestReport block_frequency_test(const BitSequence& s, std::size_t block_size) {
    if (block_size == 0 || block_size > s.size()) {
        throw std::invalid_argument("block_frequency_test: block size must be in [1, n]");
    }
    const std::size_t blocks = s.size() / block_size;
    const auto bits = s.bits();
    double chi2 = 0.0;
    for (std::size_t i = 0; i < blocks; ++i) {
        const double pi =
            static_cast<double>(count_ones(bits.subspan(i * block_size, block_size))) /
            static_cast<double>(block_size);
        chi2 += (pi - 0.5) * (pi - 0.5);
    }
    chi2 *= 4.0 * static_cast<double>(block_size);
    auto r = make_report("block_frequency", chi2, igamc(blocks / 2.0, chi2 / 2.0), s);
    r.params.emplace_back("M", static_cast<double>(block_size));
    r.params.emplace_back("N", static_cast<double>(blocks));
    return r;
}

TestReport runs_test(const BitSequence& s) {
    const std::size_t n = s.size();
    const double nd = static_cast<double>(n);
    const double pi = static_cast<double>(count_ones(s.bits())) / nd;
    const double tau = 2.0 / std::sqrt(nd);

    std::size_t runs = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        runs += s[k] != s[k + 1];
    }
    const double v = static_cast<double>(runs);

    if (std::fabs(pi - 0.5) >= tau) {
        auto r = make_report("runs", v, 0.0, s);
        r.params.emplace_back("pi", pi);
        append_note(r, "frequency prerequisite failed");
        return r;
    }
    const double spread = pi * (1.0 - pi);
    const double p = erfc(std::fabs(v - 2.0 * nd * spread) / (2.0 * std::sqrt(2.0 * nd) * spread));
    auto r = make_report("runs", v, p, s);
    r.params.emplace_back("pi", pi);
    return r;
}

TestReport cusum_test(const BitSequence& s, CusumMode mode) {
    const std::size_t n = s.size();
    const auto bits = s.bits();
    long long partial = 0;
    long long z = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint8_t b = mode == CusumMode::forward ? bits[i] : bits[n - 1 - i];
        partial += b ? 1 : -1;
        z = std::max(z, std::llabs(partial));
    }

    const double nd = static_cast<double>(n);
    const double zd = static_cast<double>(z);
    const double root_n = std::sqrt(nd);

    double sum1 = 0.0;
    const auto k1_lo = static_cast<long long>(std::floor((-nd / zd + 1.0) / 4.0));
    const auto k_hi = static_cast<long long>(std::floor((nd / zd - 1.0) / 4.0));
    for (long long k = k1_lo; k <= k_hi; ++k) {
        const double kd = static_cast<double>(k);
        sum1 += normal_cdf((4.0 * kd + 1.0) * zd / root_n) - normal_cdf((4.0 * kd - 1.0) * zd / root_n);
    }
    double sum2 = 0.0;
    const auto k2_lo = static_cast<long long>(std::floor((-nd / zd - 3.0) / 4.0));
    for (long long k = k2_lo; k <= k_hi; ++k) {
        const double kd = static_cast<double>(k);
        sum2 += normal_cdf((4.0 * kd + 3.0) * zd / root_n) - normal_cdf((4.0 * kd + 1.0) * zd / root_n);
    }

    auto r = make_report(mode == CusumMode::forward ? "cumulative_sums_forward"
                                                    : "cumulative_sums_reverse",
                         zd, 1.0 - sum1 + sum2, s);
    r.params.emplace_back("z", zd);
    return r;
}

TestReport fft_test(const BitSequence& s) {
    std::size_t n = s.size();
    const bool truncated = n % 2 != 0;
    n -= truncated ? 1 : 0;
    if (n < 2) {
        throw std::invalid_argument("fft_test: need at least 2 bits");
    }

    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = s[i] ? 1.0 : -1.0;
    }
    const auto moduli = dft_moduli(x, n / 2);

    const double nd = static_cast<double>(n);
    const double threshold = std::sqrt(std::log(1.0 / 0.05) * nd);
    const double expected = 0.95 * nd / 2.0;
    const auto below = static_cast<double>(
        std::count_if(moduli.begin(), moduli.end(), [&](double m) { return m < threshold; }));
    const double d = (below - expected) / std::sqrt(nd * 0.95 * 0.05 / 4.0);

    auto r = make_report("fft", d, erfc(std::fabs(d) / std::sqrt(2.0)), s);
    r.params.front().second = nd;
    r.params.emplace_back("T", threshold);
    r.params.emplace_back("N0", expected);
    r.params.emplace_back("N1", below);
    if (truncated) {
        append_note(r, "odd length: trailing bit dropped");
    }
    return r;
}

std::vector<TestReport> run_suite(std::span<const std::uint8_t> data, const SuiteConfig& config) {
    if (data.size() < kMinSuiteBytes) {
        throw std::invalid_argument("run_suite: need at least 13 bytes (100 bits), got " +
                                    std::to_string(data.size()));
    }
    const auto s = bits_from_bytes(data);
    std::vector<TestReport> out;
    out.reserve(6);
    out.push_back(frequency_test(s));
    // Short inputs use a single block spanning the whole sequence.
    out.push_back(block_frequency_test(s, std::min(config.block_size, s.size())));
    out.push_back(runs_test(s));
    out.push_back(cusum_test(s, CusumMode::forward));
    out.push_back(cusum_test(s, CusumMode::reverse));
    out.push_back(fft_test(s));
    return out;
}

std::string to_json(const std::vector<TestReport>& reports) {
    auto arr = nlohmann::json::array();
    for (const auto& r : reports) {
        nlohmann::json params = nlohmann::json::object();
        for (const auto& [key, value] : r.params) {
            params[key] = value;
        }
        nlohmann::json entry = {
            {"test", r.test},       {"statistic", r.statistic}, {"p_value", r.p_value},
            {"pass", r.pass},       {"params", params},
        };
        if (!r.note.empty()) {
            entry["note"] = r.note;
        }
        arr.push_back(std::move(entry));
    }
    return arr.dump(2) + "\n";
}

std::string to_text(const std::vector<TestReport>& reports) {
    std::string out;
    char line[160];
    std::snprintf(line, sizeof line, "%-26s %14s %10s  %s\n", "test", "statistic", "p_value", "status");
    out += line;
    for (const auto& r : reports) {
        std::snprintf(line, sizeof line, "%-26s %14.6f %10.6f  %s", r.test.c_str(), r.statistic,
                      r.p_value, r.pass ? "OK" : "FAIL");
        out += line;
        if (!r.note.empty()) {
            out += "  (" + r.note + ")";
        }
        out += '\n';
    }
    return out;
}

} // namespace bcipher::stats
