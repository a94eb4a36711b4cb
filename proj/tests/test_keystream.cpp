#include <doctest.h>

#include <random>
#include <stdexcept>

#include "bcipher/keystream.hpp"
#include "oracles.hpp"

using namespace bcipher;

namespace {

const CipherKey kFigureKey{0xAAAAAAAAu, Mu8{0xAA}, 0xBBBBBBBBu, Mu8{0xBB}};

// First 16 keystream bytes for kFigureKey from an independent script.
constexpr std::uint8_t kFigureKeystream[16] = {0x70, 0x41, 0xa1, 0xad, 0xe3, 0x71, 0x5f, 0xc2,
                                               0xcc, 0x67, 0xf8, 0xb0, 0xae, 0x1e, 0x0b, 0x4a};

} // namespace

TEST_CASE("split_half") {
    CHECK(split_half(0x12345678u, 32) == std::pair<std::uint32_t, std::uint32_t>{0x1234, 0x5678});
    CHECK(split_half(0, 32) == std::pair<std::uint32_t, std::uint32_t>{0, 0});
    CHECK(split_half(0xFFFF, 16) == std::pair<std::uint32_t, std::uint32_t>{0xFF, 0xFF});
    CHECK(split_half(0xAB, 8) == std::pair<std::uint32_t, std::uint32_t>{0xA, 0xB});

    CHECK_THROWS_AS(split_half(1, 15), std::invalid_argument);
    CHECK_THROWS_AS(split_half(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(split_half(0x10000, 16), std::invalid_argument);
}

TEST_CASE("split_word") {
    CHECK(split_word(0x12345678u) == ByteQuad{0x12, 0x34, 0x56, 0x78});
    CHECK(split_word(0) == ByteQuad{0, 0, 0, 0});
    // 1672129193 = 0x63AAAAA9
    CHECK(split_word(1672129193u) == ByteQuad{0x63, 0xAA, 0xAA, 0xA9});
    CHECK(reassemble(split_word(1672129193u)) == 1672129193u);
}

TEST_CASE("split/reassemble round trip") {
    std::mt19937 rng(1);
    for (int i = 0; i < 100000; ++i) {
        const Word32 w = rng();
        REQUIRE(reassemble(split_word(w)) == w);
    }
    for (Word32 w : {0u, 1u, 0xFFu, 0x100u, 0x7FFFFFFFu, 0x80000000u, 0xFFFFFFFFu}) {
        CHECK(reassemble(split_word(w)) == w);
    }
}

TEST_CASE("combine") {
    const ByteQuad a{1, 2, 4, 8};
    CHECK(combine(a, a) == 0x00);
    CHECK(combine(a, ByteQuad{16, 32, 64, 128}) == 0xFF);
    const ByteQuad aa{0xAA, 0xAA, 0xAA, 0xAA};
    CHECK(combine(aa, aa) == 0x00);
    CHECK(combine(ByteQuad{0xAA, 0, 0, 0}, ByteQuad{}) == 0xAA);
}

TEST_CASE("combine equals bitwise parity of the eight inputs") {
    std::mt19937 rng(2);
    for (int i = 0; i < 20000; ++i) {
        const ByteQuad a = split_word(rng());
        const ByteQuad b = split_word(rng());
        const std::uint8_t bytes[8] = {a.b3, a.b2, a.b1, a.b0, b.b3, b.b2, b.b1, b.b0};
        REQUIRE(combine(a, b) == oracle::parity_byte(bytes));
    }
}

TEST_CASE("combine is XOR-linear") {
    std::mt19937 rng(3);
    for (int i = 0; i < 20000; ++i) {
        const ByteQuad a = split_word(rng());
        const ByteQuad b = split_word(rng());
        const ByteQuad c = split_word(rng());
        REQUIRE(combine(a ^ c, b) == (combine(a, b) ^ combine(c, ByteQuad{})));
    }
}

TEST_CASE("next_byte on the simulation key") {
    KeystreamGenerator ks(kFigureKey);
    const auto wa = step(0xAAAAAAAAu, Mu8{0xAA});
    const auto wb = step(0xBBBBBBBBu, Mu8{0xBB});
    const std::uint8_t first = ks.next_byte();
    CHECK(first == combine(split_word(wa), split_word(wb)));
    CHECK(first == kFigureKeystream[0]);
    for (int i = 1; i < 16; ++i) {
        CHECK(ks.next_byte() == kFigureKeystream[i]);
    }
}

TEST_CASE("identical generators cancel") {
    KeystreamGenerator ks(BernoulliGenerator(0x1234u, Mu8{200}), BernoulliGenerator(0x1234u, Mu8{200}));
    for (int i = 0; i < 1000; ++i) {
        REQUIRE(ks.next_byte() == 0);
    }
}

TEST_CASE("generators advance in lockstep") {
    KeystreamGenerator ks(kFigureKey);
    auto a = new_generator(kFigureKey.seed1, kFigureKey.mu1);
    auto b = new_generator(kFigureKey.seed2, kFigureKey.mu2);
    std::vector<std::uint8_t> buf(777);
    ks.fill(buf);
    a.iterate(777);
    b.iterate(777);
    CHECK(ks.first() == a);
    CHECK(ks.second() == b);
}

TEST_CASE("statefulness") {
    KeystreamGenerator ks(kFigureKey);
    const KeystreamGenerator stale = ks;
    ks.next_byte();
    KeystreamGenerator again = stale;
    // the advanced generator continues where the stale copy would restart
    CHECK(ks.next_byte() != again.next_byte());
}

TEST_CASE("keystream_bytes") {
    CHECK(keystream_bytes(kFigureKey, 0).empty());

    const auto short_run = keystream_bytes(kFigureKey, 100);
    const auto long_run = keystream_bytes(kFigureKey, 250);
    CHECK(std::equal(short_run.begin(), short_run.end(), long_run.begin()));

    const CipherKey table_key{1288500000u, Mu8{192}, 858990000u, Mu8{205}};
    CHECK(keystream_bytes(table_key, 500000).size() == 500000);

    const CipherKey same{0x1u, Mu8{200}, 0x1u, Mu8{200}};
    CHECK_THROWS_AS(keystream_bytes(same, 1), DegenerateKeyError);
}
