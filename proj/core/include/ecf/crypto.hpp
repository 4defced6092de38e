#ifndef ECF_CRYPTO_HPP
#define ECF_CRYPTO_HPP

#include <array>
#include <cstdint>

#include "ecf/bytes.hpp"
#include "ecf/format.hpp"
#include "ecf/random.hpp"
#include "ecf/secure.hpp"
#include "ecf/suite.hpp"

namespace ecf {

/// A user: an Ed25519 key pair plus the X25519 pair derived from it.
/// Immutable once constructed; secret halves are wiped on destruction.
class Identity {
public:
    static Identity generate(Randomness& rng);
    static Identity from_seed(const SecretBytes<32>& seed);

    const std::array<std::uint8_t, 32>& public_key() const noexcept { return ed_public_; }
    const std::array<std::uint8_t, 32>& x25519_public_key() const noexcept { return x_public_; }

    const SecretBytes<32>& seed() const noexcept { return seed_; }
    const SecretBytes<32>& x25519_secret_key() const noexcept { return x_secret_; }
    const SecretBytes<64>& ed25519_secret_key() const noexcept { return ed_secret_; }

private:
    Identity() = default;

    SecretBytes<32> seed_;
    SecretBytes<64> ed_secret_;
    SecretBytes<32> x_secret_;
    std::array<std::uint8_t, 32> ed_public_{};
    std::array<std::uint8_t, 32> x_public_{};
};

/// Symmetric key plus nonce for the single AEAD pass over the private part.
struct ContentKey {
    SecretBytes<32> key;
    std::array<std::uint8_t, kNonceSize> nonce{};
};

/// Per-recipient share of the content key: an ephemeral public key and the
/// XOR of the content key with a hash of the agreed secret.
struct KeyWrap {
    std::array<std::uint8_t, 32> ephemeral_public_key{};
    std::array<std::uint8_t, 32> aes_pre_key_1{};
};

/// Digest with the suite's hash function; output length is
/// suite.hash_length.
Bytes hash(const CipherSuite& suite, ByteView data);

/// Birational-map conversion of an Ed25519 public key to its X25519
/// counterpart. Throws Errc::invalid_point for points off the curve or of
/// small order.
std::array<std::uint8_t, 32> ed25519_public_to_x25519(
    const std::array<std::uint8_t, 32>& ed_public);

/// X25519 scalar multiplication. Throws Errc::low_order_point when the
/// peer point is of small order (all-zero shared secrets are never
/// produced).
SecretBytes<32> key_agreement(const SecretBytes<32>& scalar,
                              const std::array<std::uint8_t, 32>& point);

/// Second pre key: hash(shared || recipient_public_x || ephemeral_public_x)
/// truncated to 32 bytes.
SecretBytes<32> derive_pre_key_2(const CipherSuite& suite,
                                 const SecretBytes<32>& shared,
                                 const std::array<std::uint8_t, 32>& recipient_public_x,
                                 const std::array<std::uint8_t, 32>& ephemeral_public_x);

/// Routing tag: hash(recipient_public_ed || salt) truncated to 16 bytes.
std::array<std::uint8_t, kTagSize> compute_identification_tag(
    const CipherSuite& suite,
    const std::array<std::uint8_t, 32>& recipient_public_ed,
    const std::array<std::uint8_t, kSaltSize>& salt);

/// Wraps the content key for one recipient: generates an ephemeral X25519
/// pair, agrees with the recipient's converted public key, and XORs the
/// content key with the derived pre key. The ephemeral secret never leaves
/// this function.
KeyWrap wrap_content_key(const CipherSuite& suite,
                         const ContentKey& content_key,
                         const std::array<std::uint8_t, 32>& recipient_public_ed,
                         Randomness& rng);

/// Inverse of wrap_content_key for the holder of the matching identity.
SecretBytes<32> unwrap_content_key(const CipherSuite& suite,
                                   const KeyWrap& wrap,
                                   const Identity& identity);

/// AES-256-GCM. Ciphertext carries the 16-byte tag appended; no associated
/// data is used.
Bytes aead_encrypt(const SecretBytes<32>& key,
                   const std::array<std::uint8_t, kNonceSize>& nonce,
                   ByteView plaintext);

/// Throws Errc::authentication_failed before releasing any plaintext.
Bytes aead_decrypt(const SecretBytes<32>& key,
                   const std::array<std::uint8_t, kNonceSize>& nonce,
                   ByteView ciphertext_and_tag);

/// Ed25519 signature over the raw UTF-8 name bytes (no length prefix).
std::array<std::uint8_t, kSignatureSize> sign_name(const Identity& identity,
                                                   ByteView name_utf8);

bool verify_name(const std::array<std::uint8_t, 32>& public_ed,
                 ByteView name_utf8,
                 const std::array<std::uint8_t, kSignatureSize>& signature);

}  // namespace ecf

#endif
