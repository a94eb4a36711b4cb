#pragma once

#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "bcipher/key.hpp"

namespace bcipher::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kDegenerateKey = 2,
    kIo = 3,
    kTestFailed = 4,
};

/// Draws keys until one passes the default policy.
template <typename Urbg>
CipherKey random_key(Urbg& rng) {
    std::uniform_int_distribution<std::uint32_t> word;
    std::uniform_int_distribution<unsigned> byte(0, 255);
    for (;;) {
        CipherKey key{word(rng), Mu8(static_cast<std::uint8_t>(byte(rng))), word(rng),
                      Mu8(static_cast<std::uint8_t>(byte(rng)))};
        try {
            validate_key(key);
            return key;
        } catch (const DegenerateKeyError&) {
        }
    }
}

/// Runs one command line (args excludes the program name). `in`/`out`
/// stand in for stdin/stdout when a path is "-"; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

} // namespace bcipher::cli
