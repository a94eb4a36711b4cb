#include "bcipher/prng.hpp"

namespace bcipher {

void BernoulliGenerator::fill(std::span<Word32> out) {
    for (auto& w : out) {
        w = next_word();
    }
}

std::vector<Word32> BernoulliGenerator::iterate(std::size_t n) {
    std::vector<Word32> out(n);
    fill(out);
    return out;
}

} // namespace bcipher
