#include "ecf/keystore.hpp"

#include <cstring>
#include <limits>
#include <stdexcept>

#include "ecf/error.hpp"
#include "ecf/format.hpp"
#include "ecf/wire.hpp"

// Argon2id v1.3 from the reference implementation's stable ABI; only the
// raw-output entry point is needed.
extern "C" int argon2id_hash_raw(std::uint32_t t_cost, std::uint32_t m_cost_kib,
                                 std::uint32_t parallelism, const void* pwd,
                                 std::size_t pwdlen, const void* salt,
                                 std::size_t saltlen, void* hash, std::size_t hashlen);

namespace ecf {

namespace {

constexpr int kArgon2Ok = 0;
constexpr int kArgon2MemoryAllocationError = -22;

constexpr std::uint64_t kMiB = 1024 * 1024;
constexpr std::uint64_t kMinMemoryBytes = 8 * kMiB;

}  // namespace

void KdfParameters::validate() const {
    if (parallelism < 1) {
        raise(Errc::unsupported_kdf_parameters, "parallelism must be at least 1");
    }
    if (memory_bytes < kMinMemoryBytes) {
        raise(Errc::unsupported_kdf_parameters, "memory must be at least 8 MiB");
    }
    if (memory_bytes % kMiB != 0 ||
        memory_bytes / kMiB > std::numeric_limits<std::uint32_t>::max()) {
        raise(Errc::unsupported_kdf_parameters,
              "memory must be a whole number of MiB representable as u32");
    }
    if (iterations < 1) {
        raise(Errc::unsupported_kdf_parameters, "iterations must be at least 1");
    }
}

Identity generate_identity(Randomness& rng) { return Identity::generate(rng); }

SecretBytes<32> derive_keystore_key(std::string_view password,
                                    const std::array<std::uint8_t, kSaltSize>& salt,
                                    const KdfParameters& params) {
    params.validate();
    SecretBytes<32> key;
    const int result = argon2id_hash_raw(
        params.iterations, static_cast<std::uint32_t>(params.memory_bytes / 1024),
        params.parallelism, password.data(), password.size(), salt.data(), salt.size(),
        key.data(), key.size());
    if (result == kArgon2MemoryAllocationError) {
        throw std::runtime_error("Argon2id derivation ran out of memory");
    }
    if (result != kArgon2Ok) {
        // Everything else the backend rejects is a cost-parameter problem,
        // e.g. more lanes than the memory budget can feed.
        raise(Errc::unsupported_kdf_parameters,
              "Argon2id rejected the cost parameters (code " + std::to_string(result) + ")");
    }
    return key;
}

Bytes save_identity(const Identity& identity, std::string_view password,
                    const KdfParameters& params, Randomness& rng) {
    if (password.empty()) {
        raise(Errc::empty_password, "keystore passwords must be non-empty");
    }
    params.validate();

    std::array<std::uint8_t, kSaltSize> salt{};
    std::array<std::uint8_t, kNonceSize> nonce{};
    rng.fill(salt);
    rng.fill(nonce);

    const SecretBytes<32> key = derive_keystore_key(password, salt, params);
    Bytes sealed = aead_encrypt(key, nonce, identity.seed().view());

    ByteWriter w;
    w.bytes(as_view(kKeystoreMagic));
    w.u32(kKeystoreVersion);
    w.u32(params.parallelism);
    w.u32(static_cast<std::uint32_t>(params.memory_bytes / kMiB));
    w.u32(params.iterations);
    w.bytes(as_view(salt));
    w.bytes(as_view(nonce));
    w.bytes(as_view(sealed));
    Bytes file = w.take();
    if (file.size() != kKeystoreFileSize) {
        throw std::runtime_error("keystore serialization produced a wrong size");
    }
    return file;
}

Identity load_identity(ByteView file, std::string_view password) {
    if (file.size() < kKeystoreFileSize) {
        raise(Errc::truncated, "keystore files are exactly 96 bytes");
    }
    if (file.size() > kKeystoreFileSize) {
        raise(Errc::trailing_data, "keystore files are exactly 96 bytes");
    }
    ByteReader r(file);
    const auto magic = r.array<4>();
    if (magic != kKeystoreMagic) {
        raise(Errc::bad_magic, "not a keystore file");
    }
    const std::uint32_t version = r.u32();
    if (version != kKeystoreVersion) {
        raise(Errc::unsupported_version, "keystore version " + std::to_string(version));
    }
    KdfParameters params;
    params.parallelism = r.u32();
    params.memory_bytes = std::uint64_t(r.u32()) * kMiB;
    params.iterations = r.u32();
    const auto salt = r.array<kSaltSize>();
    const auto nonce = r.array<kNonceSize>();
    const Bytes sealed = r.bytes(32 + kAeadTagSize);

    const SecretBytes<32> key = derive_keystore_key(password, salt, params);
    Bytes seed_bytes = aead_decrypt(key, nonce, as_view(sealed));
    EraseGuard seed_guard(seed_bytes.data(), seed_bytes.size());

    SecretBytes<32> seed;
    std::memcpy(seed.data(), seed_bytes.data(), seed.size());
    return Identity::from_seed(seed);
}

RecipientDescriptor export_descriptor(const Identity& identity, std::string_view name) {
    if (name.empty()) {
        raise(Errc::empty_name, "recipient names must be non-empty");
    }
    if (name.size() > kMaxNameBytes) {
        raise(Errc::oversize_name,
              "recipient name exceeds " + std::to_string(kMaxNameBytes) + " bytes");
    }
    if (!is_valid_utf8(as_view(name))) {
        raise(Errc::invalid_utf8, "recipient name is not valid UTF-8");
    }
    RecipientDescriptor d;
    d.public_key = identity.public_key();
    d.name = std::string(name);
    d.name_signature = sign_name(identity, as_view(name));
    return d;
}

}  // namespace ecf
