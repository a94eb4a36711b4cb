#include "bcipher/cipher.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>

#include "bcipher/keystream.hpp"

namespace bcipher {

void validate_key(const CipherKey& key, KeyPolicy policy) {
    if (key.seed1 == key.seed2 && key.mu1 == key.mu2) {
        throw DegenerateKeyError(
            "degenerate key: both generators share seed and mu, keystream would be all zeros");
    }
    if (!policy.allow_weak_mu) {
        if (key.mu1.value < kMinStrongMu || key.mu2.value < kMinStrongMu) {
            throw DegenerateKeyError("weak key: mu1 and mu2 must both be >= 0x81 (mu > 0.5); "
                                     "got mu1=" + std::to_string(key.mu1.value) +
                                     " mu2=" + std::to_string(key.mu2.value));
        }
    }
}

namespace {

template <typename T>
T parse_hex_field(std::string_view field) {
    T value{};
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value, 16);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
        throw KeyFormatError("key: invalid hex field '" + std::string(field) + "'");
    }
    return value;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

} // namespace

CipherKey parse_key(std::string_view text, KeyPolicy policy) {
    text = trim(text);
    if (text.size() != 20) {
        throw KeyFormatError("key: expected 20 hex characters, got " + std::to_string(text.size()));
    }
    for (char c : text) {
        if (!std::isxdigit(static_cast<unsigned char>(c))) {
            throw KeyFormatError(std::string("key: non-hex character '") + c + "'");
        }
    }
    CipherKey key;
    key.seed1 = parse_hex_field<std::uint32_t>(text.substr(0, 8));
    key.mu1 = Mu8(parse_hex_field<std::uint8_t>(text.substr(8, 2)));
    key.seed2 = parse_hex_field<std::uint32_t>(text.substr(10, 8));
    key.mu2 = Mu8(parse_hex_field<std::uint8_t>(text.substr(18, 2)));
    validate_key(key, policy);
    return key;
}

std::string format_key(const CipherKey& key) {
    std::array<char, 21> buf{};
    std::snprintf(buf.data(), buf.size(), "%08X%02X%08X%02X", static_cast<unsigned>(key.seed1),
                  static_cast<unsigned>(key.mu1.value), static_cast<unsigned>(key.seed2),
                  static_cast<unsigned>(key.mu2.value));
    return std::string(buf.data(), 20);
}

std::vector<std::uint8_t> encrypt(const CipherKey& key, std::span<const std::uint8_t> input,
                                  KeyPolicy policy) {
    KeystreamGenerator ks(key, policy);
    std::vector<std::uint8_t> out(input.begin(), input.end());
    ks.apply(out);
    return out;
}

std::size_t encrypt_stream(const CipherKey& key, std::istream& in, std::ostream& out,
                           KeyPolicy policy) {
    KeystreamGenerator ks(key, policy);
    std::array<char, 1 << 16> buf;
    std::size_t total = 0;
    while (in) {
        in.read(buf.data(), buf.size());
        const auto got = static_cast<std::size_t>(in.gcount());
        if (in.bad()) {
            throw IoError("read failed", total);
        }
        if (got == 0) {
            break;
        }
        auto* bytes = reinterpret_cast<std::uint8_t*>(buf.data());
        ks.apply({bytes, got});
        out.write(buf.data(), static_cast<std::streamsize>(got));
        if (!out) {
            throw IoError("write failed", total);
        }
        total += got;
    }
    out.flush();
    if (!out) {
        throw IoError("flush failed", total);
    }
    return total;
}

} // namespace bcipher
