#ifndef ECF_KEYSTORE_HPP
#define ECF_KEYSTORE_HPP

#include <cstdint>
#include <string_view>

#include "ecf/bytes.hpp"
#include "ecf/container.hpp"
#include "ecf/crypto.hpp"
#include "ecf/random.hpp"

namespace ecf {

/// Argon2id cost settings. Memory is in bytes and must be a whole number of
/// MiB (the file stores MiB as a u32).
struct KdfParameters {
    std::uint32_t parallelism = 1;
    std::uint64_t memory_bytes = 2048ull * 1024 * 1024;
    std::uint32_t iterations = 5;

    /// Interactive-grade production profile: (1, 2 GiB, 5).
    static KdfParameters production() { return {}; }

    /// Cheap profile for test suites: (1, 16 MiB, 2).
    static KdfParameters ci() { return {1, 16ull * 1024 * 1024, 2}; }

    /// Enforces the floors: parallelism >= 1, memory >= 8 MiB and a whole
    /// MiB count, iterations >= 1. Throws Errc::unsupported_kdf_parameters.
    void validate() const;

    bool operator==(const KdfParameters&) const = default;
};

inline constexpr std::array<std::uint8_t, 4> kKeystoreMagic = {0x45, 0x43, 0x46, 0x4B};  // "ECFK"
inline constexpr std::uint32_t kKeystoreVersion = 1;
inline constexpr std::size_t kKeystoreFileSize = 96;

/// Fresh Ed25519 identity with derived X25519 pair.
Identity generate_identity(Randomness& rng);

/// Seals the identity seed with AES-256-GCM under an Argon2id-derived key.
/// The parameters are recorded in the file, so later loads never need
/// external configuration. Always 96 bytes.
Bytes save_identity(const Identity& identity, std::string_view password,
                    const KdfParameters& params, Randomness& rng);

/// Throws Errc::bad_magic / unsupported_version / truncated on malformed
/// files and Errc::authentication_failed on a wrong password.
Identity load_identity(ByteView file, std::string_view password);

/// Derives the 32-byte keystore sealing key. Exposed so the derivation can
/// be pinned against independent Argon2id implementations.
SecretBytes<32> derive_keystore_key(std::string_view password,
                                    const std::array<std::uint8_t, kSaltSize>& salt,
                                    const KdfParameters& params);

/// Signed public descriptor for recipient exchange. The name must be
/// non-empty UTF-8 of at most 64 KiB.
RecipientDescriptor export_descriptor(const Identity& identity, std::string_view name);

}  // namespace ecf

#endif
