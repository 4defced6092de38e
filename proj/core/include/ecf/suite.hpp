#ifndef ECF_SUITE_HPP
#define ECF_SUITE_HPP

#include <cstdint>
#include <cstddef>

namespace ecf {

/// Algorithm bundle identified by the 32-bit suite field in the container
/// header. Suites 1 and 2 share X25519, AES-256-GCM and Ed25519 and differ
/// only in the hash function (SHA-512 vs SHA-256).
struct CipherSuite {
    std::uint32_t id;
    std::size_t hash_length;
    const char* key_agreement;
    const char* aead;
    const char* signature;
    const char* hash;
};

inline constexpr std::uint32_t kSuiteAesGcmSha512 = 1;
inline constexpr std::uint32_t kSuiteAesGcmSha256 = 2;

bool suite_supported(std::uint32_t id) noexcept;

/// Throws Errc::unsupported_suite for unknown ids.
const CipherSuite& suite_from_id(std::uint32_t id);

}  // namespace ecf

#endif
