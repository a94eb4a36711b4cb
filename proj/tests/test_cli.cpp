#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "bcipher/cipher.hpp"
#include "bcipher/keystream.hpp"
#include "cli.hpp"

using namespace bcipher;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = {}) {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("bcipher_test_" + name);
}

std::string random_blob(std::size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    std::string s(n, '\0');
    for (auto& c : s) c = static_cast<char>(rng());
    return s;
}

} // namespace

TEST_CASE("keygen") {
    const auto r = run({"keygen"});
    CHECK(r.code == 0);
    CHECK(r.out.size() == 21);
    CHECK_NOTHROW(parse_key(r.out));

    std::mt19937 rng(123);
    for (int i = 0; i < 1000; ++i) {
        const auto key = cli::random_key(rng);
        CHECK_NOTHROW(validate_key(key));
        CHECK(format_key(key).size() == 20);
    }
}

TEST_CASE("keystream command") {
    const auto r = run({"keystream", "--key", "AAAAAAAAAABBBBBBBBBB", "--bytes", "16"});
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    const std::string want = "\x70\x41\xa1\xad\xe3\x71\x5f\xc2\xcc\x67\xf8\xb0\xae\x1e\x0b\x4a";
    CHECK(r.out == want);

    const auto big = run({"keystream", "--key", "AAAAAAAAAABBBBBBBBBB", "--bytes", "200000"});
    const auto lib = keystream_bytes(parse_key("AAAAAAAAAABBBBBBBBBB"), 200000);
    CHECK(big.out == std::string(lib.begin(), lib.end()));
}

TEST_CASE("encrypt/decrypt through streams") {
    const std::string plain = random_blob(100000, 4);
    const auto enc = run({"encrypt", "--key", "0123456789ABCDEF0199"}, plain);
    REQUIRE(enc.code == 0);
    CHECK(enc.out.size() == plain.size());
    CHECK(enc.out != plain);
    const auto dec = run({"decrypt", "--key", "0123456789ABCDEF0199"}, enc.out);
    CHECK(dec.code == 0);
    CHECK(dec.out == plain);
}

TEST_CASE("key file and file paths") {
    const auto key_path = temp_path("key.txt");
    const auto in_path = temp_path("plain.bin");
    const auto out_path = temp_path("cipher.bin");
    std::ofstream(key_path) << "AAAAAAAAAABBBBBBBBBB\n";
    const std::string plain = random_blob(5000, 5);
    std::ofstream(in_path, std::ios::binary) << plain;

    const auto r = run({"encrypt", "--key-file", key_path.string(), "--in", in_path.string(), "--out",
                        out_path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(out_path, std::ios::binary);
    const std::string cipher{std::istreambuf_iterator<char>(f), {}};
    const auto expect = encrypt(parse_key("AAAAAAAAAABBBBBBBBBB"),
                                std::vector<std::uint8_t>(plain.begin(), plain.end()));
    CHECK(cipher == std::string(expect.begin(), expect.end()));

    std::filesystem::remove(key_path);
    std::filesystem::remove(in_path);
    std::filesystem::remove(out_path);
}

TEST_CASE("exit codes") {
    const auto degenerate = run({"encrypt", "--key", "AAAAAAAAAAAAAAAAAAAA"}, "secret");
    CHECK(degenerate.code == 2);
    CHECK(degenerate.out.empty());
    CHECK_FALSE(degenerate.err.empty());

    CHECK(run({"encrypt", "--key", "AAAAAAAA10BBBBBBBB20"}, "x").code == 2);
    CHECK(run({"encrypt", "--key", "AAAAAAAA10BBBBBBBB20", "--allow-weak-mu"}, "x").code == 0);

    CHECK(run({"encrypt", "--key", "0000000000"}).code == 1);
    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"keystream", "--key", "AAAAAAAAAABBBBBBBBBB", "--bytes", "4", "--bogus"}).code == 1);
    CHECK(run({"keystream", "--bytes", "4"}).code == 1);
    CHECK(run({"keystream", "--key", "AAAAAAAAAABBBBBBBBBB", "--bytes", "-4"}).code == 1);
    CHECK(run({"keygen", "keystream"}).code == 1);

    CHECK(run({"encrypt", "--key", "AAAAAAAAAABBBBBBBBBB", "--in", "/nonexistent/file"}).code == 3);
    CHECK(run({"encrypt", "--key-file", "/nonexistent/key"}).code == 3);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("test command") {
    const auto sample = keystream_bytes(CipherKey{1288500000u, Mu8{192}, 858990000u, Mu8{205}}, 125000);
    const std::string data(sample.begin(), sample.end());
    const auto r = run({"test", "--report", "json"}, data);
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.size() == 6);

    const auto text = run({"test"}, data);
    CHECK(text.code == 0);
    CHECK(text.out.find("fft") != std::string::npos);

    const auto bad = run({"test"}, std::string(13, '\xAA'));
    CHECK(bad.code == 4);
    CHECK(run({"test"}, "short").code == 1);
    CHECK(run({"test", "--report", "xml"}, data).code == 1);
}

TEST_CASE("bifurcate command") {
    const auto r = run({"bifurcate", "--mu-min", "170", "--mu-max", "171", "--section", "1", "--transient",
                        "10", "--samples", "3"});
    CHECK(r.code == 0);
    std::istringstream is(r.out);
    std::string line;
    std::getline(is, line);
    CHECK(line == "mu,section,value");
    int rows = 0;
    while (std::getline(is, line)) ++rows;
    CHECK(rows == 6);

    CHECK(run({"bifurcate", "--section", "5"}).code == 1);
    CHECK(run({"bifurcate", "--mu-min", "300"}).code == 1);
    CHECK(run({"bifurcate", "--mu-min", "20", "--mu-max", "10"}).code == 1);
}

TEST_CASE("cycle command") {
    const auto r = run({"cycle", "--seed", "0x80000000", "--mu", "170"});
    CHECK(r.code == 0);
    CHECK(r.out.find("tail 39396\n") != std::string::npos);
    CHECK(r.out.find("period 168564\n") != std::string::npos);

    const auto budget = run({"cycle", "--seed", "0x80000000", "--mu", "170", "--max-steps", "10"});
    CHECK(budget.out.find("found 0") != std::string::npos);
}

#ifdef BCIPHER_EXE
TEST_CASE("encrypt | decrypt pipe is the identity on binary data") {
    const auto in_path = temp_path("pipe_in.bin");
    const auto out_path = temp_path("pipe_out.bin");
    const std::string plain = random_blob(300000, 77) + std::string("\0\n\r\x1a", 4);
    std::ofstream(in_path, std::ios::binary) << plain;

    const std::string exe = BCIPHER_EXE;
    const std::string cmd = "'" + exe + "' encrypt --key AAAAAAAAAABBBBBBBBBB < '" + in_path.string() + "' | '" +
                            exe + "' decrypt --key AAAAAAAAAABBBBBBBBBB > '" + out_path.string() + "'";
    REQUIRE(std::system(cmd.c_str()) == 0);

    std::ifstream f(out_path, std::ios::binary);
    const std::string round{std::istreambuf_iterator<char>(f), {}};
    CHECK(round == plain);

    std::filesystem::remove(in_path);
    std::filesystem::remove(out_path);
}
#endif
