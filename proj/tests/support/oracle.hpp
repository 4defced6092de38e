#ifndef ECF_TESTS_SUPPORT_ORACLE_HPP
#define ECF_TESTS_SUPPORT_ORACLE_HPP

// Second implementations of the primitives, used to cross-check the library.
// Everything here is built on OpenSSL (plus a bignum birational map), never
// on the backend the library itself uses for the same operation.

#include <array>
#include <cstdint>
#include <string_view>

#include "ecf/bytes.hpp"
#include "ecf/suite.hpp"

namespace oracle {

ecf::Bytes sha256(ecf::ByteView data);
ecf::Bytes sha512(ecf::ByteView data);
ecf::Bytes hash(const ecf::CipherSuite& suite, ecf::ByteView data);

std::array<std::uint8_t, 32> x25519(const std::array<std::uint8_t, 32>& scalar,
                                    const std::array<std::uint8_t, 32>& point);

std::array<std::uint8_t, 32> ed25519_seed_to_public(
    const std::array<std::uint8_t, 32>& seed);

std::array<std::uint8_t, 64> ed25519_sign(const std::array<std::uint8_t, 32>& seed,
                                          ecf::ByteView message);

bool ed25519_verify(const std::array<std::uint8_t, 32>& public_key,
                    ecf::ByteView message,
                    const std::array<std::uint8_t, 64>& signature);

/// Birational map u = (1 + y) / (1 - y) over GF(2^255 - 19), implemented
/// with boost::multiprecision integers. Input is a compressed Edwards point;
/// the sign bit is ignored, as the map uses only the y coordinate.
std::array<std::uint8_t, 32> edwards_to_montgomery(
    const std::array<std::uint8_t, 32>& ed_public);

/// Straight-line recomputation of the key-unwrap path from the recipient's
/// converted key pair: shared = X25519(x_secret, ephemeral_public),
/// key = pre_key_1 XOR hash(shared || x_public || ephemeral_public)[0:32].
std::array<std::uint8_t, 32> unwrap_content_key(
    const ecf::CipherSuite& suite,
    const std::array<std::uint8_t, 32>& ephemeral_public,
    const std::array<std::uint8_t, 32>& aes_pre_key_1,
    const std::array<std::uint8_t, 32>& x_secret,
    const std::array<std::uint8_t, 32>& x_public);

/// AES-256-GCM through libsodium's AES-NI implementation (the library's own
/// AEAD runs on OpenSSL). Returns ciphertext with the tag appended.
ecf::Bytes aes256gcm_seal(const std::array<std::uint8_t, 32>& key,
                          const std::array<std::uint8_t, 12>& nonce,
                          ecf::ByteView plaintext);

/// Single-lane Argon2id through libsodium (the library's own KDF runs on
/// the Argon2 reference code). 32-byte output; memory given in bytes.
std::array<std::uint8_t, 32> argon2id_single_lane(std::string_view password,
                                                  const std::array<std::uint8_t, 16>& salt,
                                                  std::uint32_t iterations,
                                                  std::uint64_t memory_bytes);

}  // namespace oracle

#endif
