#include "cryptobench/cli.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "cryptobench/caesar.hpp"
#include "cryptobench/cryptanalysis.hpp"
#include "cryptobench/error.hpp"
#include "cryptobench/rsa.hpp"
#include "cryptobench/vigenere.hpp"

namespace cryptobench::cli {

namespace {

// File or stream failures that are not library errors but still exit 2.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_all(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    return read_all(in);
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out || !(out << contents) || !out.flush()) throw IoError("cannot write '" + path + "'");
}

BigInt parse_big(const std::string& text, const char* flag) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
        throw CLI::ValidationError(flag, "expected an unsigned decimal integer, got '" + text + "'");
    }
    return BigInt(text);
}

std::string format_score(double score) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", score);
    return buf;
}

template <typename Key, typename KeyText>
void print_report(std::ostream& out, std::ostream& err, const CrackReport<Key>& report,
                  std::size_t top, KeyText key_text) {
    const std::size_t shown = top == 0 ? report.candidates.size() : std::min(top, report.candidates.size());
    for (std::size_t i = 0; i < shown; ++i) {
        out << (i + 1) << ' ' << key_text(report.candidates[i].key) << ' '
            << format_score(report.candidates[i].score) << '\n';
    }
    out << '\n' << report.plaintext.str() << '\n';
    if (report.low_confidence) {
        err << "warning: fewer than " << kReliableSampleLetters
            << " letters per scored sample; ranking is unreliable\n";
    }
}

// Options shared by every subcommand that reads text.
struct InputOption {
    std::string path;

    void attach(CLI::App* cmd) {
        cmd->add_option("--input", path, "Read text from this file instead of standard input");
    }
    std::string read(std::istream& in) const { return path.empty() ? read_all(in) : read_file(path); }
};

const FrequencyTable& load_table(const std::string& path, std::optional<FrequencyTable>& storage) {
    if (path.empty()) return FrequencyTable::english();
    storage = FrequencyTable::parse(read_file(path));
    return *storage;
}

}  // namespace

int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{
        "Classical and textbook public-key cryptography workbench.\n"
        "Input text is normalized before processing: ASCII letters are uppercased and\n"
        "every other character is dropped.",
        "cryptobench"};
    app.require_subcommand(1);

    std::function<void()> action;
    InputOption input;

    // caesar
    auto* caesar = app.add_subcommand("caesar", "Caesar shift cipher (A=1..Z=26)");
    caesar->require_subcommand(1);
    long long shift = 0;
    bool trace = false;
    std::size_t top = 0;
    std::string table_path;

    for (const char* verb : {"encrypt", "decrypt"}) {
        auto* cmd = caesar->add_subcommand(verb, std::string(verb) + " with a fixed shift");
        cmd->add_option("--shift", shift, "Shift amount (reduced mod 26)")->required();
        cmd->add_flag("--trace", trace, "Print the per-letter worked table before the result");
        input.attach(cmd);
        const bool encrypt = std::string(verb) == "encrypt";
        cmd->callback([&, encrypt] {
            action = [&, encrypt] {
                const NormalizedText text = normalize(input.read(in));
                const CaesarKey key(shift);
                if (trace) {
                    const auto rows = encrypt ? caesar_encrypt_trace(text, key) : caesar_decrypt_trace(text, key);
                    for (const auto& r : rows) {
                        out << r.input << ' ' << r.input_value << ' ' << r.output_value << ' ' << r.output << '\n';
                    }
                    out << '\n';
                }
                out << (encrypt ? caesar_encrypt(text, key) : caesar_decrypt(text, key)).str() << '\n';
            };
        });
    }
    {
        auto* cmd = caesar->add_subcommand("crack", "Recover the shift by frequency analysis");
        cmd->add_option("--top", top, "Show only the best N candidates (default: all 26)");
        cmd->add_option("--freq-table", table_path, "File of 26 lines '<letter> <proportion>'");
        input.attach(cmd);
        cmd->callback([&] {
            action = [&] {
                std::optional<FrequencyTable> storage;
                const auto report = crack_caesar(normalize(input.read(in)), load_table(table_path, storage));
                print_report(out, err, report, top, [](CaesarKey k) { return std::to_string(k.shift()); });
            };
        });
    }

    // vigenere
    auto* vigenere = app.add_subcommand("vigenere", "Vigenère polyalphabetic cipher (A=0..Z=25)");
    vigenere->require_subcommand(1);
    std::string keyword;
    std::size_t key_length = 0;
    std::size_t max_key_length = 20;
    for (const char* verb : {"encrypt", "decrypt"}) {
        auto* cmd = vigenere->add_subcommand(verb, std::string(verb) + " with a keyword");
        cmd->add_option("--key", keyword, "Keyword (normalized; must contain a letter)")->required();
        cmd->add_flag("--trace", trace, "Print the per-letter worked table before the result");
        input.attach(cmd);
        const bool encrypt = std::string(verb) == "encrypt";
        cmd->callback([&, encrypt] {
            action = [&, encrypt] {
                const NormalizedText text = normalize(input.read(in));
                const VigenereKey key(keyword);
                if (trace) {
                    const auto rows =
                        encrypt ? vigenere_encrypt_trace(text, key) : vigenere_decrypt_trace(text, key);
                    for (const auto& r : rows) {
                        out << r.key_letter << ' ' << r.key_value << ' ' << r.input << ' ' << r.input_value << ' '
                            << r.raw << ' ' << r.reduced << ' ' << r.output << '\n';
                    }
                    out << '\n';
                }
                out << (encrypt ? vigenere_encrypt(text, key) : vigenere_decrypt(text, key)).str() << '\n';
            };
        });
    }
    {
        auto* cmd = vigenere->add_subcommand("crack", "Recover the keyword (Kasiski + per-column frequency analysis)");
        cmd->add_option("--key-length", key_length, "Known key length; estimated when omitted")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--max-key-length", max_key_length, "Longest key length considered when estimating")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--top", top, "Show only the best N candidates");
        cmd->add_option("--freq-table", table_path, "File of 26 lines '<letter> <proportion>'");
        input.attach(cmd);
        cmd->callback([&] {
            action = [&] {
                const NormalizedText text = normalize(input.read(in));
                std::size_t length = key_length;
                if (length == 0) length = estimate_key_length(text, max_key_length).front();
                std::optional<FrequencyTable> storage;
                const auto report = crack_vigenere(text, length, load_table(table_path, storage));
                print_report(out, err, report, top, [](const VigenereKey& k) { return k.keyword().str(); });
            };
        });
    }
    {
        auto* cmd = vigenere->add_subcommand("square", "Print the 26x26 Vigenère square");
        cmd->callback([&] {
            action = [&] {
                const VigenereSquare& square = build_square();
                for (char row = 'A'; row <= 'Z'; ++row) out << square.row(row) << '\n';
            };
        });
    }

    // rsa
    auto* rsa = app.add_subcommand("rsa", "Textbook RSA on small integers and single letters (A=1..Z=26)");
    rsa->require_subcommand(1);
    std::string p_text, q_text, e_text, d_text, prefix, key_file, value_text;
    std::string bound_text = kDefaultFactorBound.str();
    {
        auto* cmd = rsa->add_subcommand("keygen", "Build a key pair from two distinct primes");
        cmd->add_option("--p", p_text, "First prime")->required();
        cmd->add_option("--q", q_text, "Second prime")->required();
        cmd->add_option("--e", e_text, "Public exponent (default: smallest valid)");
        cmd->add_option("--d", d_text, "Private exponent (default: least inverse of e)");
        cmd->add_option("--out-prefix", prefix, "Writes <prefix>.pub and <prefix>.priv")->required();
        cmd->callback([&] {
            const BigInt p = parse_big(p_text, "--p");
            const BigInt q = parse_big(q_text, "--q");
            std::optional<BigInt> e, d;
            if (!e_text.empty()) e = parse_big(e_text, "--e");
            if (!d_text.empty()) d = parse_big(d_text, "--d");
            action = [&, p, q, e, d] {
                const RsaKeyPair pair = generate_keypair(p, q, e, d);
                write_file(prefix + ".pub", format_key_file(pair.public_key));
                write_file(prefix + ".priv", format_key_file(pair.private_key));
                out << "p " << pair.p << "\nq " << pair.q << "\nn " << pair.n << "\nphi " << pair.phi << "\ne "
                    << pair.public_key.e << "\nd " << pair.private_key.d << '\n';
            };
        });
    }
    for (const char* verb : {"encrypt", "decrypt"}) {
        const bool encrypt = std::string(verb) == "encrypt";
        auto* cmd = rsa->add_subcommand(
            verb, encrypt ? "Encrypt letters (or one integer with --value) under a public key"
                          : "Decrypt space-separated integers (or one with --value) under a private key");
        cmd->add_option("--key-file", key_file, encrypt ? "rsa-public key file" : "rsa-private key file")
            ->required();
        cmd->add_option("--value", value_text, "Integer mode: process this one value");
        input.attach(cmd);
        cmd->callback([&, encrypt] {
            std::optional<BigInt> value;
            if (!value_text.empty()) value = parse_big(value_text, "--value");
            action = [&, encrypt, value] {
                const std::string key_text = read_file(key_file);
                if (encrypt) {
                    const RsaPublicKey key = parse_public_key_file(key_text);
                    if (value) {
                        out << rsa_encrypt_value(*value, key) << '\n';
                    } else {
                        out << format_cipher_stream(rsa_encrypt_text(normalize(input.read(in)), key)) << '\n';
                    }
                } else {
                    const RsaPrivateKey key = parse_private_key_file(key_text);
                    if (value) {
                        out << rsa_decrypt_value(*value, key) << '\n';
                    } else {
                        out << rsa_decrypt_text(parse_cipher_stream(input.read(in)), key).str() << '\n';
                    }
                }
            };
        });
    }
    {
        auto* cmd = rsa->add_subcommand("break", "Recover the private key by factoring n");
        cmd->add_option("--key-file", key_file, "rsa-public key file")->required();
        cmd->add_option("--bound", bound_text, "Refuse moduli above this value");
        cmd->callback([&] {
            const BigInt bound = parse_big(bound_text, "--bound");
            action = [&, bound] {
                out << format_key_file(break_rsa(parse_public_key_file(read_file(key_file)), bound));
            };
        });
    }

    // freq
    auto* freq = app.add_subcommand("freq", "Letter frequency statistics");
    freq->require_subcommand(1);
    {
        auto* cmd = freq->add_subcommand("analyze", "Print '<letter> <count> <proportion>' for A..Z");
        input.attach(cmd);
        cmd->callback([&] {
            action = [&] {
                const NormalizedText text = normalize(input.read(in));
                const FrequencyTable observed = observed_frequencies(text);
                std::vector<std::size_t> counts(kAlphabetSize, 0);
                for (char c : text) ++counts[c - 'A'];
                for (int i = 0; i < kAlphabetSize; ++i) {
                    char buf[32];
                    std::snprintf(buf, sizeof buf, "%.6f", observed.proportions()[i]);
                    out << static_cast<char>('A' + i) << ' ' << counts[i] << ' ' << buf << '\n';
                }
            };
        });
    }

    std::vector<const char*> argv{"cryptobench"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (action) action();
    } catch (const CryptoError& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    }
    out.flush();
    return kExitOk;
}

}  // namespace cryptobench::cli
