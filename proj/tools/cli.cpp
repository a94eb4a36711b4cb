#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "bcipher/analysis.hpp"
#include "bcipher/cipher.hpp"
#include "bcipher/keystream.hpp"
#include "bcipher/stats.hpp"

namespace bcipher::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct KeyOptions {
    std::string hex;
    std::string file;
    bool allow_weak_mu = false;

    void attach(CLI::App* cmd) {
        auto* k = cmd->add_option("--key", hex, "key as 20 hex digits: seed1 mu1 seed2 mu2");
        auto* f = cmd->add_option("--key-file", file, "file holding the hex key on one line");
        k->excludes(f);
        cmd->add_flag("--allow-weak-mu", allow_weak_mu, "accept mu values below 0x81");
    }

    KeyPolicy policy() const { return {allow_weak_mu}; }

    CipherKey load() const {
        if (hex.empty() && file.empty()) {
            throw UsageError("one of --key or --key-file is required");
        }
        if (!file.empty()) {
            std::ifstream f(file);
            if (!f) {
                throw IoError("cannot open key file '" + file + "'", 0);
            }
            std::string line;
            std::getline(f, line);
            if (f.bad()) {
                throw IoError("cannot read key file '" + file + "'", 0);
            }
            return parse_key(line, policy());
        }
        return parse_key(hex, policy());
    }
};

// Accepts decimal or 0x-prefixed hex.
std::uint64_t parse_number(const std::string& text, std::uint64_t max, const char* what) {
    std::size_t used = 0;
    std::uint64_t v = 0;
    try {
        v = std::stoull(text, &used, 0);
    } catch (const std::exception&) {
        throw UsageError(std::string(what) + ": not a number: '" + text + "'");
    }
    if (used != text.size() || text.front() == '-') {
        throw UsageError(std::string(what) + ": not a number: '" + text + "'");
    }
    if (v > max) {
        throw UsageError(std::string(what) + ": value out of range: " + text);
    }
    return v;
}

class InputSource {
public:
    InputSource(const std::string& path, std::istream& stdin_stream) {
        if (path == "-") {
            stream_ = &stdin_stream;
        } else {
            file_.open(path, std::ios::binary);
            if (!file_) {
                throw IoError("cannot open input '" + path + "'", 0);
            }
            stream_ = &file_;
        }
    }
    std::istream& get() { return *stream_; }

private:
    std::ifstream file_;
    std::istream* stream_ = nullptr;
};

class OutputSink {
public:
    OutputSink(const std::string& path, std::ostream& stdout_stream) {
        if (path == "-") {
            stream_ = &stdout_stream;
        } else {
            file_.open(path, std::ios::binary | std::ios::trunc);
            if (!file_) {
                throw IoError("cannot open output '" + path + "'", 0);
            }
            stream_ = &file_;
        }
    }
    std::ostream& get() { return *stream_; }

    void finish(std::size_t written) {
        stream_->flush();
        if (!*stream_) {
            throw IoError("write failed", written);
        }
    }

private:
    std::ofstream file_;
    std::ostream* stream_ = nullptr;
};

std::vector<std::uint8_t> read_all(std::istream& in) {
    std::vector<std::uint8_t> data{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    if (in.bad()) {
        throw IoError("read failed", data.size());
    }
    return data;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"Dual Bernoulli-map stream cipher, keystream generator and analysis tools",
                 "bcipher"};
    app.require_subcommand(1, 1);

    // keygen
    auto* keygen = app.add_subcommand("keygen", "print a random key");

    // keystream
    KeyOptions ks_key;
    std::string ks_bytes;
    std::string ks_out = "-";
    auto* keystream = app.add_subcommand("keystream", "write raw keystream bytes");
    ks_key.attach(keystream);
    keystream->add_option("--bytes", ks_bytes, "number of bytes")->required();
    keystream->add_option("--out", ks_out, "output path or - for stdout")->capture_default_str();

    // encrypt / decrypt
    KeyOptions enc_key;
    std::string enc_in = "-";
    std::string enc_out = "-";
    auto* encrypt_cmd = app.add_subcommand("encrypt", "XOR input with the keystream");
    auto* decrypt_cmd = app.add_subcommand("decrypt", "inverse of encrypt (same operation)");
    for (auto* cmd : {encrypt_cmd, decrypt_cmd}) {
        enc_key.attach(cmd);
        cmd->add_option("--in", enc_in, "input path or - for stdin")->capture_default_str();
        cmd->add_option("--out", enc_out, "output path or - for stdout")->capture_default_str();
    }

    // test
    std::string test_in = "-";
    std::size_t block_size = 128;
    std::string report = "text";
    auto* test_cmd = app.add_subcommand("test", "run the six randomness tests on a binary file");
    test_cmd->add_option("--in", test_in, "input path or - for stdin")->capture_default_str();
    test_cmd->add_option("--block-size", block_size, "block frequency block size M")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    test_cmd->add_option("--report", report, "report format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();

    // bifurcate
    std::string bif_mu_min = "0";
    std::string bif_mu_max = "255";
    std::string bif_seed = "0xAAAAAAAA";
    int bif_section = 1;
    std::size_t bif_transient = 1000;
    std::size_t bif_samples = 200;
    std::string bif_out = "-";
    auto* bifurcate = app.add_subcommand("bifurcate", "bifurcation data as CSV (mu,section,value)");
    bifurcate->add_option("--mu-min", bif_mu_min, "first mu (0..255)")->capture_default_str();
    bifurcate->add_option("--mu-max", bif_mu_max, "last mu (0..255)")->capture_default_str();
    bifurcate->add_option("--seed", bif_seed, "initial state x0")->capture_default_str();
    bifurcate->add_option("--section", bif_section, "byte section, 1 = most significant")
        ->check(CLI::Range(1, 4))
        ->capture_default_str();
    bifurcate->add_option("--transient", bif_transient, "outputs discarded per mu")->capture_default_str();
    bifurcate->add_option("--samples", bif_samples, "outputs recorded per mu")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    bifurcate->add_option("--out", bif_out, "output path or - for stdout")->capture_default_str();

    // cycle
    std::string cyc_seed;
    std::string cyc_mu;
    std::uint64_t cyc_max_steps = 10'000'000;
    auto* cycle = app.add_subcommand("cycle", "tail and period of one orbit (Brent)");
    cycle->add_option("--seed", cyc_seed, "initial state")->required();
    cycle->add_option("--mu", cyc_mu, "feedback factor 0..255")->required();
    cycle->add_option("--max-steps", cyc_max_steps, "step budget")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "bcipher: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (keygen->parsed()) {
            std::random_device rd;
            out << format_key(random_key(rd)) << "\n";
            return kOk;
        }

        if (keystream->parsed()) {
            const auto n = parse_number(ks_bytes, std::numeric_limits<std::uint64_t>::max(), "--bytes");
            KeystreamGenerator gen(ks_key.load(), ks_key.policy());
            OutputSink sink(ks_out, out);
            std::vector<std::uint8_t> buf(1 << 16);
            std::uint64_t written = 0;
            while (written < n) {
                const auto chunk = static_cast<std::size_t>(std::min<std::uint64_t>(buf.size(), n - written));
                gen.fill({buf.data(), chunk});
                sink.get().write(reinterpret_cast<const char*>(buf.data()),
                                 static_cast<std::streamsize>(chunk));
                if (!sink.get()) {
                    throw IoError("write failed", written);
                }
                written += chunk;
            }
            sink.finish(written);
            return kOk;
        }

        if (encrypt_cmd->parsed() || decrypt_cmd->parsed()) {
            const CipherKey key = enc_key.load();
            InputSource src(enc_in, in);
            OutputSink sink(enc_out, out);
            const auto n = encrypt_stream(key, src.get(), sink.get(), enc_key.policy());
            sink.finish(n);
            return kOk;
        }

        if (test_cmd->parsed()) {
            InputSource src(test_in, in);
            const auto data = read_all(src.get());
            const auto reports = stats::run_suite(data, {block_size});
            out << (report == "json" ? stats::to_json(reports) : stats::to_text(reports));
            const bool all_pass =
                std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
            return all_pass ? kOk : kTestFailed;
        }

        if (bifurcate->parsed()) {
            analysis::ScanParams p;
            p.mu_min = Mu8(static_cast<std::uint8_t>(parse_number(bif_mu_min, 255, "--mu-min")));
            p.mu_max = Mu8(static_cast<std::uint8_t>(parse_number(bif_mu_max, 255, "--mu-max")));
            p.x0 = static_cast<Word32>(parse_number(bif_seed, 0xFFFFFFFFu, "--seed"));
            p.section = analysis::section_from_int(bif_section);
            p.transient = bif_transient;
            p.samples = bif_samples;
            const auto records = analysis::bifurcation_scan(p);
            OutputSink sink(bif_out, out);
            analysis::write_csv(sink.get(), records);
            sink.finish(0);
            return kOk;
        }

        if (cycle->parsed()) {
            const auto seed = static_cast<Word32>(parse_number(cyc_seed, 0xFFFFFFFFu, "--seed"));
            const Mu8 mu(static_cast<std::uint8_t>(parse_number(cyc_mu, 255, "--mu")));
            const auto r = analysis::cycle_length(seed, mu, cyc_max_steps);
            if (r.found) {
                out << "found 1\ntail " << r.tail << "\nperiod " << r.period << "\n";
            } else {
                out << "found 0\n";
            }
            out << "steps_examined " << r.steps_examined << "\n";
            return kOk;
        }
    } catch (const DegenerateKeyError& e) {
        err << "bcipher: " << e.what() << "\n";
        return kDegenerateKey;
    } catch (const KeyFormatError& e) {
        err << "bcipher: " << e.what() << "\n";
        return kUsage;
    } catch (const IoError& e) {
        err << "bcipher: " << e.what() << "\n";
        return kIo;
    } catch (const UsageError& e) {
        err << "bcipher: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "bcipher: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

} // namespace bcipher::cli
