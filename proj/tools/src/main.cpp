// Command-line lifecycle for encrypted container files: key generation,
// container creation, extraction, content updates, recipient management and
// public-header inspection. Every mutation writes to a temp file and renames
// into place, so a crash never leaves a half-written container behind.

#include <termios.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "CLI11.hpp"
#include "ecf/container.hpp"
#include "ecf/crypto.hpp"
#include "ecf/error.hpp"
#include "ecf/format.hpp"
#include "ecf/keystore.hpp"
#include "ecf/random.hpp"
#include "ecf/secure.hpp"
#include "ecf/suite.hpp"

namespace fs = std::filesystem;

namespace {

// Stable, script-facing exit codes. Documented in the README; tests pin them.
//   0 success            6 not a recipient
//   1 usage / internal   7 tampered or unauthentic data
//   2 I/O                8 recipient-set conflict (exists / missing / ambiguous)
//   3 empty password     9 self-removal not confirmed
//   4 bad signature     10 malformed file
//   5 no recipients
int exit_code_for(ecf::Errc code) {
    using ecf::Errc;
    switch (code) {
        case Errc::io_error:
            return 2;
        case Errc::empty_password:
            return 3;
        case Errc::invalid_signature:
        case Errc::invalid_name_signature:
            return 4;
        case Errc::no_recipients:
            return 5;
        case Errc::not_a_recipient:
            return 6;
        case Errc::tampered_public_part:
        case Errc::tampered_private_part:
        case Errc::authentication_failed:
        case Errc::duplicate_recipient:
        case Errc::invalid_point:
        case Errc::low_order_point:
            return 7;
        case Errc::already_recipient:
        case Errc::not_found:
        case Errc::ambiguous_name:
        case Errc::duplicate_name:
            return 8;
        case Errc::self_removal_not_confirmed:
            return 9;
        case Errc::truncated:
        case Errc::trailing_data:
        case Errc::length_mismatch:
        case Errc::unsupported_version:
        case Errc::unsupported_suite:
        case Errc::unsupported_content_type:
        case Errc::invalid_utf8:
        case Errc::oversize_string:
        case Errc::oversize_name:
        case Errc::content_too_large:
        case Errc::bad_magic:
        case Errc::unsupported_kdf_parameters:
            return 10;
        default:
            return 1;
    }
}

struct Config {
    std::string keystore_path;
    std::string kdf_profile = "default";
    bool non_interactive = false;
};

std::string default_keystore_path() {
    const char* home = std::getenv("HOME");
    const fs::path base = (home != nullptr && *home != '\0') ? fs::path(home) : fs::path(".");
    return (base / ".ecf" / "identity.ecfk").string();
}

ecf::KdfParameters kdf_from_profile(const std::string& profile) {
    if (profile == "default") {
        return ecf::KdfParameters::production();
    }
    if (profile == "ci") {
        return ecf::KdfParameters::ci();
    }
    throw std::runtime_error("unknown KDF profile: " + profile);
}

ecf::Bytes read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        ecf::raise(ecf::Errc::io_error, "cannot open " + path.string());
    }
    ecf::Bytes data{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    if (in.bad()) {
        ecf::raise(ecf::Errc::io_error, "cannot read " + path.string());
    }
    return data;
}

void write_file_atomic(const fs::path& path, ecf::ByteView bytes) {
    fs::path dir = path.parent_path();
    if (dir.empty()) {
        dir = ".";
    }
    const fs::path tmp = dir / (path.filename().string() + ".tmp" + std::to_string(::getpid()));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            ecf::raise(ecf::Errc::io_error, "cannot write " + tmp.string());
        }
        out.write(reinterpret_cast<const char*>(bytes.data()),
                  static_cast<std::streamsize>(bytes.size()));
        out.flush();
        if (!out) {
            std::error_code ec;
            fs::remove(tmp, ec);
            ecf::raise(ecf::Errc::io_error, "short write to " + tmp.string());
        }
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        std::error_code ignored;
        fs::remove(tmp, ignored);
        ecf::raise(ecf::Errc::io_error, "cannot replace " + path.string() + ": " + ec.message());
    }
}

void refuse_existing(const fs::path& path, bool force) {
    std::error_code ec;
    if (!force && fs::exists(path, ec)) {
        ecf::raise(ecf::Errc::io_error, path.string() + " exists; pass --force to overwrite");
    }
}

// "-" or the empty string selects the standard stream.
ecf::Bytes read_content(const std::string& source) {
    if (source.empty() || source == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        const std::string& data = buffer.str();
        return {data.begin(), data.end()};
    }
    return read_file(source);
}

void write_content(const std::string& destination, ecf::ByteView bytes, bool force) {
    if (destination.empty() || destination == "-") {
        if (std::fwrite(bytes.data(), 1, bytes.size(), stdout) != bytes.size() ||
            std::fflush(stdout) != 0) {
            ecf::raise(ecf::Errc::io_error, "cannot write to standard output");
        }
        return;
    }
    refuse_existing(destination, force);
    write_file_atomic(destination, bytes);
}

// Reads one line with echo disabled. Falls back to a plain line from stdin
// when no terminal is attached.
std::string prompt_password(const char* label) {
    std::string line;
    std::FILE* tty = std::fopen("/dev/tty", "r+e");
    if (tty != nullptr) {
        termios before{};
        const bool have_termios = tcgetattr(fileno(tty), &before) == 0;
        if (have_termios) {
            termios hidden = before;
            hidden.c_lflag &= ~static_cast<tcflag_t>(ECHO);
            tcsetattr(fileno(tty), TCSAFLUSH, &hidden);
        }
        std::fputs(label, tty);
        std::fflush(tty);
        int c = 0;
        while ((c = std::fgetc(tty)) != EOF && c != '\n') {
            line.push_back(static_cast<char>(c));
        }
        if (have_termios) {
            tcsetattr(fileno(tty), TCSAFLUSH, &before);
        }
        std::fputs("\n", tty);
        std::fclose(tty);
        return line;
    }
    if (!std::getline(std::cin, line)) {
        line.clear();
    }
    return line;
}

std::string obtain_password(const Config& config, bool confirm) {
    if (const char* env = std::getenv("ECF_PASSWORD")) {
        return env;
    }
    if (config.non_interactive) {
        ecf::raise(ecf::Errc::empty_password, "ECF_PASSWORD is not set and prompting is disabled");
    }
    std::string first = prompt_password("Password: ");
    if (confirm) {
        std::string second = prompt_password("Confirm password: ");
        const bool match = first == second;
        ecf::secure_erase(second.data(), second.size());
        if (!match) {
            ecf::secure_erase(first.data(), first.size());
            throw std::runtime_error("passwords do not match");
        }
    }
    return first;
}

ecf::Identity open_keystore(const Config& config) {
    const ecf::Bytes file = read_file(config.keystore_path);
    std::string password = obtain_password(config, false);
    const ecf::EraseGuard wipe(password.data(), password.size());
    return ecf::load_identity(ecf::as_view(file), password);
}

// First 16 hex characters of the public key's SHA-256.
std::string fingerprint(const std::array<std::uint8_t, 32>& public_key) {
    const auto& sha256 = ecf::suite_from_id(ecf::kSuiteAesGcmSha256);
    return ecf::to_hex(ecf::as_view(ecf::hash(sha256, ecf::as_view(public_key)))).substr(0, 16);
}

std::optional<ecf::RecipientDescriptor> read_own_descriptor(const Config& config) {
    const fs::path pub(config.keystore_path + ".pub");
    std::error_code ec;
    if (!fs::exists(pub, ec)) {
        return std::nullopt;
    }
    try {
        return ecf::RecipientDescriptor::parse(ecf::as_view(read_file(pub)));
    } catch (const ecf::Error&) {
        return std::nullopt;
    }
}

ecf::WriteOptions write_options(bool full_obfuscation) {
    ecf::WriteOptions options;
    options.obfuscation =
        full_obfuscation ? ecf::ObfuscationMode::full : ecf::ObfuscationMode::fast;
    return options;
}

int run_keygen(const Config& config, const std::string& name, std::string out, bool force) {
    if (out.empty()) {
        out = config.keystore_path;
    }
    const fs::path keystore_path(out);
    const fs::path descriptor_path(out + ".pub");
    refuse_existing(keystore_path, force);
    refuse_existing(descriptor_path, force);

    std::string password = obtain_password(config, true);
    const ecf::EraseGuard wipe(password.data(), password.size());

    auto& rng = ecf::system_randomness();
    const ecf::Identity identity = ecf::generate_identity(rng);
    const ecf::Bytes keystore =
        ecf::save_identity(identity, password, kdf_from_profile(config.kdf_profile), rng);
    const ecf::RecipientDescriptor descriptor = ecf::export_descriptor(identity, name);

    if (!keystore_path.parent_path().empty()) {
        std::error_code ec;
        fs::create_directories(keystore_path.parent_path(), ec);
        if (ec) {
            ecf::raise(ecf::Errc::io_error,
                       "cannot create " + keystore_path.parent_path().string());
        }
    }
    write_file_atomic(keystore_path, ecf::as_view(keystore));
    write_file_atomic(descriptor_path, ecf::as_view(descriptor.serialize()));

    std::cout << "wrote keystore " << keystore_path.string() << "\n";
    std::cout << "wrote descriptor " << descriptor_path.string() << "\n";
    std::cout << "fingerprint: " << fingerprint(identity.public_key()) << "\n";
    return 0;
}

int run_create(const Config& config, const std::vector<std::string>& recipient_paths,
               bool add_self, std::string self_name, const std::string& in,
               const std::string& out, std::uint32_t suite_id, bool full_obfuscation,
               bool force) {
    refuse_existing(out, force);

    std::vector<ecf::RecipientDescriptor> descriptors;
    descriptors.reserve(recipient_paths.size() + 1);
    for (const auto& path : recipient_paths) {
        descriptors.push_back(ecf::RecipientDescriptor::parse(ecf::as_view(read_file(path))));
    }

    if (add_self) {
        const ecf::Identity identity = open_keystore(config);
        if (self_name.empty()) {
            const auto own = read_own_descriptor(config);
            if (own && own->public_key == identity.public_key()) {
                self_name = own->name;
            } else {
                throw std::runtime_error("cannot determine your recipient name; pass --self-name");
            }
        }
        descriptors.push_back(ecf::export_descriptor(identity, self_name));
    } else {
        const auto own = read_own_descriptor(config);
        const bool covered = own && std::any_of(descriptors.begin(), descriptors.end(),
                                                [&](const ecf::RecipientDescriptor& d) {
                                                    return d.public_key == own->public_key;
                                                });
        if (!covered) {
            std::cerr << "warning: the keystore identity is not a recipient; "
                         "the new file will not be readable with "
                      << config.keystore_path << "\n";
        }
    }

    ecf::EncryptedContainer container =
        ecf::EncryptedContainer::create(suite_id, ecf::kContentTypeBlob);
    for (const auto& descriptor : descriptors) {
        container.add_recipient(descriptor);
    }
    container.set_content(read_content(in));

    const ecf::Bytes file =
        container.write(ecf::system_randomness(), write_options(full_obfuscation));
    write_file_atomic(out, ecf::as_view(file));
    return 0;
}

int run_extract(const Config& config, const std::string& file, const std::string& out,
                bool no_verify_names, bool force) {
    const ecf::Bytes bytes = read_file(file);
    const ecf::Identity identity = open_keystore(config);
    ecf::LoadOptions options;
    options.verify_name_signatures = !no_verify_names;
    const ecf::EncryptedContainer container =
        ecf::EncryptedContainer::load(ecf::as_view(bytes), identity, options);
    write_content(out, ecf::as_view(container.content()), force);
    return 0;
}

int run_update(const Config& config, const std::string& file, const std::string& in,
               bool full_obfuscation) {
    const ecf::Bytes bytes = read_file(file);
    const ecf::Identity identity = open_keystore(config);
    ecf::EncryptedContainer container =
        ecf::EncryptedContainer::load(ecf::as_view(bytes), identity);
    container.set_content(read_content(in));
    write_file_atomic(file, ecf::as_view(container.write(ecf::system_randomness(),
                                                         write_options(full_obfuscation))));
    return 0;
}

int run_recipients_list(const Config& config, const std::string& file) {
    const ecf::Bytes bytes = read_file(file);
    const ecf::Identity identity = open_keystore(config);
    // Verification is done per entry here so a broken signature is reported
    // as a status instead of aborting the listing.
    ecf::LoadOptions options;
    options.verify_name_signatures = false;
    const ecf::EncryptedContainer container =
        ecf::EncryptedContainer::load(ecf::as_view(bytes), identity, options);
    for (const auto& recipient : container.recipients()) {
        const bool ok = ecf::verify_name(recipient.public_key,
                                         ecf::as_view(std::string_view(recipient.name)),
                                         recipient.name_signature);
        std::cout << fingerprint(recipient.public_key) << "  " << (ok ? "ok     " : "INVALID")
                  << "  " << recipient.name << "\n";
    }
    return 0;
}

int run_recipients_add(const Config& config, const std::string& file,
                       const std::string& descriptor_path, bool allow_duplicate_name,
                       bool full_obfuscation) {
    const ecf::Bytes bytes = read_file(file);
    const ecf::Identity identity = open_keystore(config);
    ecf::EncryptedContainer container =
        ecf::EncryptedContainer::load(ecf::as_view(bytes), identity);
    container.add_recipient(
        ecf::RecipientDescriptor::parse(ecf::as_view(read_file(descriptor_path))),
        allow_duplicate_name);
    write_file_atomic(file, ecf::as_view(container.write(ecf::system_randomness(),
                                                         write_options(full_obfuscation))));
    return 0;
}

int run_recipients_remove(const Config& config, const std::string& file,
                          const std::string& name, const std::string& key_hex,
                          bool confirm_self_removal, bool full_obfuscation) {
    if (name.empty() == key_hex.empty()) {
        throw std::runtime_error("pass exactly one of --name or --key");
    }
    const ecf::Bytes bytes = read_file(file);
    const ecf::Identity identity = open_keystore(config);
    ecf::EncryptedContainer container =
        ecf::EncryptedContainer::load(ecf::as_view(bytes), identity);
    if (!key_hex.empty()) {
        const ecf::Bytes raw = ecf::from_hex(key_hex);
        if (raw.size() != 32) {
            throw std::runtime_error("--key expects 64 hex characters");
        }
        std::array<std::uint8_t, 32> key{};
        std::copy(raw.begin(), raw.end(), key.begin());
        container.remove_recipient_by_key(key, identity, confirm_self_removal);
    } else {
        container.remove_recipient_by_name(name, identity, confirm_self_removal);
    }
    write_file_atomic(file, ecf::as_view(container.write(ecf::system_randomness(),
                                                         write_options(full_obfuscation))));
    return 0;
}

int run_inspect(const std::string& file) {
    const ecf::Bytes bytes = read_file(file);
    const ecf::PublicHeader header = ecf::parse_public_header(ecf::as_view(bytes));
    const std::uint64_t body = bytes.size() - header.serialized_size();
    if (body < header.private_length) {
        ecf::raise(ecf::Errc::truncated, "file is shorter than the recorded private length");
    }
    if (body > header.private_length) {
        ecf::raise(ecf::Errc::trailing_data, "file is longer than the recorded private length");
    }
    const ecf::CipherSuite& suite = ecf::suite_from_id(header.cipher_suite_id);
    std::cout << "version:          " << header.container_version << "\n";
    std::cout << "suite:            " << suite.id << " (" << suite.key_agreement << ", "
              << suite.aead << ", " << suite.signature << ", " << suite.hash << ")\n";
    std::cout << "recipient blocks: " << header.recipient_count()
              << " (includes obfuscation; the true recipient count is hidden)\n";
    std::cout << "public bytes:     " << header.serialized_size() << "\n";
    std::cout << "private bytes:    " << header.private_length << "\n";
    std::cout << "total bytes:      " << bytes.size() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    Config config;
    config.keystore_path = default_keystore_path();

    CLI::App app{"Encrypted container files: multi-recipient encryption with a hidden "
                 "recipient count"};
    app.require_subcommand(1);
    app.fallthrough();

    app.add_option("--keystore", config.keystore_path, "Identity keystore file")
        ->envname("ECF_KEYSTORE")
        ->capture_default_str();
    app.add_option("--kdf-profile", config.kdf_profile,
                   "Key-derivation cost profile for new keystores")
        ->envname("ECF_KDF_PROFILE")
        ->check(CLI::IsMember({"default", "ci"}))
        ->capture_default_str();
    app.add_flag("--non-interactive", config.non_interactive,
                 "Never prompt; the password must come from ECF_PASSWORD");

    std::function<int()> action;

    auto* keygen = app.add_subcommand("keygen", "Create a new identity and signed descriptor");
    keygen->fallthrough();
    struct {
        std::string name;
        std::string out;
        bool force = false;
    } kg;
    keygen->add_option("--name", kg.name, "Recipient name recorded in the descriptor")
        ->required();
    keygen->add_option("--out", kg.out,
                       "Keystore output path (default: the --keystore path); the "
                       "descriptor goes to <out>.pub");
    keygen->add_flag("--force", kg.force, "Overwrite existing files");
    keygen->callback([&] { action = [&] { return run_keygen(config, kg.name, kg.out, kg.force); }; });

    auto* create = app.add_subcommand("create", "Encrypt content for a set of recipients");
    create->fallthrough();
    struct {
        std::vector<std::string> recipients;
        bool add_self = false;
        std::string self_name;
        std::string in;
        std::string out;
        std::uint32_t suite = ecf::kSuiteAesGcmSha512;
        bool full_obfuscation = false;
        bool force = false;
    } cr;
    create->add_option("-r,--recipient", cr.recipients, "Recipient descriptor file (repeatable)");
    create->add_flag("--add-self", cr.add_self, "Also encrypt to the keystore identity");
    create->add_option("--self-name", cr.self_name,
                       "Name recorded with --add-self (default: taken from <keystore>.pub)");
    create->add_option("-i,--in", cr.in, "Content file (default: stdin)");
    create->add_option("-o,--out", cr.out, "Container output path")->required();
    create->add_option("--suite", cr.suite, "Cipher suite id (1: SHA-512, 2: SHA-256)")
        ->check(CLI::IsMember({1, 2}))
        ->capture_default_str();
    create->add_flag("--full-obfuscation", cr.full_obfuscation,
                     "Build obfuscation blocks as complete throwaway key wraps");
    create->add_flag("--force", cr.force, "Overwrite an existing output file");
    create->callback([&] {
        action = [&] {
            return run_create(config, cr.recipients, cr.add_self, cr.self_name, cr.in, cr.out,
                              cr.suite, cr.full_obfuscation, cr.force);
        };
    });

    auto* extract = app.add_subcommand("extract", "Decrypt a container's content");
    extract->fallthrough();
    struct {
        std::string file;
        std::string out = "-";
        bool no_verify_names = false;
        bool force = false;
    } ex;
    extract->add_option("file", ex.file, "Container path")->required();
    extract->add_option("-o,--out", ex.out, "Output file (default: stdout)")
        ->capture_default_str();
    extract->add_flag("--no-verify-names", ex.no_verify_names,
                      "Skip recipient name signature checks");
    extract->add_flag("--force", ex.force, "Overwrite an existing output file");
    extract->callback([&] {
        action = [&] {
            return run_extract(config, ex.file, ex.out, ex.no_verify_names, ex.force);
        };
    });

    auto* update = app.add_subcommand("update",
                                      "Replace the content, re-encrypting the whole file");
    update->fallthrough();
    struct {
        std::string file;
        std::string in;
        bool full_obfuscation = false;
    } up;
    update->add_option("file", up.file, "Container path")->required();
    update->add_option("-i,--in", up.in, "New content file (default: stdin)");
    update->add_flag("--full-obfuscation", up.full_obfuscation,
                     "Build obfuscation blocks as complete throwaway key wraps");
    update->callback([&] {
        action = [&] { return run_update(config, up.file, up.in, up.full_obfuscation); };
    });

    auto* recipients =
        app.add_subcommand("recipients", "List or change who can read a container");
    recipients->fallthrough();
    recipients->require_subcommand(1);

    auto* list = recipients->add_subcommand(
        "list", "Show fingerprint, signature status and name per recipient");
    list->fallthrough();
    struct {
        std::string file;
    } li;
    list->add_option("file", li.file, "Container path")->required();
    list->callback([&] { action = [&] { return run_recipients_list(config, li.file); }; });

    auto* add = recipients->add_subcommand("add", "Encrypt to one more recipient");
    add->fallthrough();
    struct {
        std::string file;
        std::string descriptor;
        bool allow_duplicate_name = false;
        bool full_obfuscation = false;
    } ad;
    add->add_option("file", ad.file, "Container path")->required();
    add->add_option("descriptor", ad.descriptor, "Recipient descriptor file")->required();
    add->add_flag("--allow-duplicate-name", ad.allow_duplicate_name,
                  "Permit a second recipient with the same name");
    add->add_flag("--full-obfuscation", ad.full_obfuscation,
                  "Build obfuscation blocks as complete throwaway key wraps");
    add->callback([&] {
        action = [&] {
            return run_recipients_add(config, ad.file, ad.descriptor, ad.allow_duplicate_name,
                                      ad.full_obfuscation);
        };
    });

    auto* remove = recipients->add_subcommand(
        "remove", "Remove a recipient; the content key is rotated");
    remove->fallthrough();
    struct {
        std::string file;
        std::string name;
        std::string key;
        bool confirm_self_removal = false;
        bool full_obfuscation = false;
    } rm;
    remove->add_option("file", rm.file, "Container path")->required();
    remove->add_option("--name", rm.name, "Remove the unique recipient with this name");
    remove->add_option("--key", rm.key, "Remove by full public key (64 hex characters)");
    remove->add_flag("--confirm-self-removal", rm.confirm_self_removal,
                     "Allow locking this keystore out of the file");
    remove->add_flag("--full-obfuscation", rm.full_obfuscation,
                     "Build obfuscation blocks as complete throwaway key wraps");
    remove->callback([&] {
        action = [&] {
            return run_recipients_remove(config, rm.file, rm.name, rm.key,
                                         rm.confirm_self_removal, rm.full_obfuscation);
        };
    });

    auto* inspect = app.add_subcommand(
        "inspect", "Print the public header; needs no identity or password");
    inspect->fallthrough();
    struct {
        std::string file;
    } is;
    inspect->add_option("file", is.file, "Container path")->required();
    inspect->callback([&] { action = [&] { return run_inspect(is.file); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        return action ? action() : 1;
    } catch (const ecf::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
