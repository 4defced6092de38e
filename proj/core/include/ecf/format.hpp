#ifndef ECF_FORMAT_HPP
#define ECF_FORMAT_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ecf/bytes.hpp"
#include "ecf/suite.hpp"

namespace ecf {

inline constexpr std::uint32_t kContainerVersion = 1;

inline constexpr std::size_t kSaltSize = 16;
inline constexpr std::size_t kNonceSize = 12;
inline constexpr std::size_t kTagSize = 16;
inline constexpr std::size_t kKeySize = 32;
inline constexpr std::size_t kSignatureSize = 64;
inline constexpr std::size_t kAeadTagSize = 16;

/// General public fields: five u32 plus salt plus nonce.
inline constexpr std::size_t kGeneralHeaderSize = 5 * 4 + kSaltSize + kNonceSize;
/// Identification tag plus key agreement information (suites 1 and 2).
inline constexpr std::size_t kRecipientBlockSize = kTagSize + 2 * kKeySize;

/// Byte offset of the public-header-length field inside the public part.
inline constexpr std::size_t kHeaderLengthFieldOffset = 8;
/// Stands in for the public-header-length field while the public part is
/// hashed, and before the real length is patched in.
inline constexpr std::uint32_t kHeaderLengthPlaceholder = 0xECFFC0DE;

/// Parse-time cap on recipient names, to bound allocations.
inline constexpr std::size_t kMaxNameBytes = 64 * 1024;

/// One public per-recipient entry: routing tag plus the key material needed
/// to reconstruct the content key. Obfuscation entries share the layout.
struct RecipientBlock {
    std::array<std::uint8_t, kTagSize> identification_tag{};
    std::array<std::uint8_t, kKeySize> ephemeral_public_key{};
    std::array<std::uint8_t, kKeySize> aes_pre_key_1{};

    bool operator==(const RecipientBlock&) const = default;
};

/// Cleartext prefix of a container file.
struct PublicHeader {
    std::uint32_t container_version = kContainerVersion;
    std::uint32_t cipher_suite_id = kSuiteAesGcmSha512;
    /// Total size of the public part in bytes; may hold
    /// kHeaderLengthPlaceholder before finalization.
    std::uint32_t public_header_length = 0;
    /// Ciphertext size including the AEAD tag.
    std::uint32_t private_length = 0;
    std::array<std::uint8_t, kSaltSize> salt{};
    std::array<std::uint8_t, kNonceSize> symmetric_nonce{};
    std::vector<RecipientBlock> blocks;

    std::uint32_t recipient_count() const noexcept {
        return static_cast<std::uint32_t>(blocks.size());
    }
    std::size_t serialized_size() const noexcept {
        return kGeneralHeaderSize + blocks.size() * kRecipientBlockSize;
    }

    bool operator==(const PublicHeader&) const = default;
};

/// Private per-recipient record.
struct RecipientInfo {
    std::array<std::uint8_t, kKeySize> public_key{};
    std::string name;
    std::array<std::uint8_t, kSignatureSize> name_signature{};

    bool operator==(const RecipientInfo&) const = default;
};

/// Plaintext layout of the encrypted part.
struct PrivateBody {
    std::uint32_t content_type = 0;
    Bytes public_header_hash;  // suite digest length
    std::vector<RecipientInfo> recipients;
    Bytes content;
    Bytes private_hash;  // suite digest length

    bool operator==(const PrivateBody&) const = default;
};

Bytes serialize_public_header(const PublicHeader& header);

/// Reads one public header from the front of `bytes`; additional input
/// (normally the ciphertext) may follow and is left untouched. The consumed
/// size equals the header's public_header_length.
PublicHeader parse_public_header(ByteView bytes);

Bytes serialize_private_body(const PrivateBody& body, const CipherSuite& suite);

/// Everything before the private hash field; this is the region the
/// private hash is computed over.
Bytes serialize_private_body_prefix(const PrivateBody& body, const CipherSuite& suite);

/// Parses a full private part; rejects trailing bytes.
PrivateBody parse_private_body(ByteView bytes, const CipherSuite& suite);

}  // namespace ecf

#endif
