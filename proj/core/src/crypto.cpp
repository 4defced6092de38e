#include "ecf/crypto.hpp"

#include <sodium.h>

#include <openssl/evp.h>

#include <cstring>
#include <memory>
#include <stdexcept>

#include "ecf/error.hpp"
#include "internal.hpp"

namespace ecf {

namespace {

using CipherCtx = std::unique_ptr<EVP_CIPHER_CTX, decltype(&EVP_CIPHER_CTX_free)>;

[[noreturn]] void fail_cipher(const char* what) {
    throw std::runtime_error(std::string("AES-256-GCM: ") + what);
}

/// Digest into a caller-owned buffer of at least suite.hash_length bytes,
/// so secret-dependent digests never pass through the heap.
void hash_into(const CipherSuite& suite, ByteView data, std::uint8_t* out) {
    detail::ensure_sodium();
    if (suite.hash_length == 64) {
        crypto_hash_sha512(out, data.data(), data.size());
    } else {
        crypto_hash_sha256(out, data.data(), data.size());
    }
}

}  // namespace

Identity Identity::generate(Randomness& rng) {
    SecretBytes<32> seed;
    rng.fill(seed.mutable_view());
    return from_seed(seed);
}

Identity Identity::from_seed(const SecretBytes<32>& seed) {
    detail::ensure_sodium();
    Identity id;
    id.seed_ = seed;
    if (crypto_sign_seed_keypair(id.ed_public_.data(), id.ed_secret_.data(),
                                 seed.data()) != 0) {
        throw std::runtime_error("Ed25519 key derivation failed");
    }
    if (crypto_sign_ed25519_sk_to_curve25519(id.x_secret_.data(),
                                             id.ed_secret_.data()) != 0) {
        throw std::runtime_error("Ed25519 secret key conversion failed");
    }
    if (crypto_sign_ed25519_pk_to_curve25519(id.x_public_.data(),
                                             id.ed_public_.data()) != 0) {
        raise(Errc::invalid_point, "generated public key does not convert");
    }
    return id;
}

Bytes hash(const CipherSuite& suite, ByteView data) {
    Bytes out(suite.hash_length);
    hash_into(suite, data, out.data());
    return out;
}

std::array<std::uint8_t, 32> ed25519_public_to_x25519(
    const std::array<std::uint8_t, 32>& ed_public) {
    detail::ensure_sodium();
    std::array<std::uint8_t, 32> x_public{};
    if (crypto_sign_ed25519_pk_to_curve25519(x_public.data(), ed_public.data()) != 0) {
        raise(Errc::invalid_point, "Ed25519 public key is not a valid curve point");
    }
    return x_public;
}

SecretBytes<32> key_agreement(const SecretBytes<32>& scalar,
                              const std::array<std::uint8_t, 32>& point) {
    detail::ensure_sodium();
    SecretBytes<32> shared;
    if (crypto_scalarmult(shared.data(), scalar.data(), point.data()) != 0) {
        raise(Errc::low_order_point, "X25519 peer point is of small order");
    }
    return shared;
}

SecretBytes<32> derive_pre_key_2(const CipherSuite& suite,
                                 const SecretBytes<32>& shared,
                                 const std::array<std::uint8_t, 32>& recipient_public_x,
                                 const std::array<std::uint8_t, 32>& ephemeral_public_x) {
    std::array<std::uint8_t, 96> input{};
    EraseGuard input_guard(input.data(), input.size());
    std::memcpy(input.data(), shared.data(), 32);
    std::memcpy(input.data() + 32, recipient_public_x.data(), 32);
    std::memcpy(input.data() + 64, ephemeral_public_x.data(), 32);

    std::array<std::uint8_t, 64> digest{};
    EraseGuard digest_guard(digest.data(), digest.size());
    hash_into(suite, as_view(input), digest.data());

    SecretBytes<32> pre_key_2;
    std::memcpy(pre_key_2.data(), digest.data(), 32);
    return pre_key_2;
}

std::array<std::uint8_t, kTagSize> compute_identification_tag(
    const CipherSuite& suite,
    const std::array<std::uint8_t, 32>& recipient_public_ed,
    const std::array<std::uint8_t, kSaltSize>& salt) {
    std::array<std::uint8_t, 32 + kSaltSize> input{};
    std::memcpy(input.data(), recipient_public_ed.data(), 32);
    std::memcpy(input.data() + 32, salt.data(), kSaltSize);

    std::array<std::uint8_t, 64> digest{};
    hash_into(suite, as_view(input), digest.data());

    std::array<std::uint8_t, kTagSize> tag{};
    std::memcpy(tag.data(), digest.data(), kTagSize);
    return tag;
}

KeyWrap wrap_content_key(const CipherSuite& suite,
                         const ContentKey& content_key,
                         const std::array<std::uint8_t, 32>& recipient_public_ed,
                         Randomness& rng) {
    detail::ensure_sodium();
    const auto recipient_public_x = ed25519_public_to_x25519(recipient_public_ed);

    SecretBytes<32> ephemeral_secret;
    rng.fill(ephemeral_secret.mutable_view());

    KeyWrap wrap;
    crypto_scalarmult_base(wrap.ephemeral_public_key.data(), ephemeral_secret.data());

    const SecretBytes<32> shared = key_agreement(ephemeral_secret, recipient_public_x);
    const SecretBytes<32> pre_key_2 =
        derive_pre_key_2(suite, shared, recipient_public_x, wrap.ephemeral_public_key);

    for (std::size_t i = 0; i < 32; ++i) {
        wrap.aes_pre_key_1[i] = content_key.key.data()[i] ^ pre_key_2.data()[i];
    }
    return wrap;
}

SecretBytes<32> unwrap_content_key(const CipherSuite& suite,
                                   const KeyWrap& wrap,
                                   const Identity& identity) {
    const SecretBytes<32> shared =
        key_agreement(identity.x25519_secret_key(), wrap.ephemeral_public_key);
    const SecretBytes<32> pre_key_2 = derive_pre_key_2(
        suite, shared, identity.x25519_public_key(), wrap.ephemeral_public_key);

    SecretBytes<32> content_key;
    for (std::size_t i = 0; i < 32; ++i) {
        content_key.data()[i] = wrap.aes_pre_key_1[i] ^ pre_key_2.data()[i];
    }
    return content_key;
}

Bytes aead_encrypt(const SecretBytes<32>& key,
                   const std::array<std::uint8_t, kNonceSize>& nonce,
                   ByteView plaintext) {
    CipherCtx ctx(EVP_CIPHER_CTX_new(), EVP_CIPHER_CTX_free);
    if (!ctx) fail_cipher("context allocation failed");
    if (EVP_EncryptInit_ex(ctx.get(), EVP_aes_256_gcm(), nullptr, nullptr, nullptr) != 1)
        fail_cipher("init failed");
    if (EVP_CIPHER_CTX_ctrl(ctx.get(), EVP_CTRL_GCM_SET_IVLEN,
                            static_cast<int>(nonce.size()), nullptr) != 1)
        fail_cipher("nonce length rejected");
    if (EVP_EncryptInit_ex(ctx.get(), nullptr, nullptr, key.data(), nonce.data()) != 1)
        fail_cipher("key setup failed");

    Bytes out(plaintext.size() + kAeadTagSize);
    int written = 0;
    if (!plaintext.empty()) {
        if (EVP_EncryptUpdate(ctx.get(), out.data(), &written, plaintext.data(),
                              static_cast<int>(plaintext.size())) != 1)
            fail_cipher("encrypt failed");
    }
    int trailing = 0;
    if (EVP_EncryptFinal_ex(ctx.get(), out.data() + written, &trailing) != 1)
        fail_cipher("finalization failed");
    if (static_cast<std::size_t>(written + trailing) != plaintext.size())
        fail_cipher("unexpected ciphertext length");
    if (EVP_CIPHER_CTX_ctrl(ctx.get(), EVP_CTRL_GCM_GET_TAG, kAeadTagSize,
                            out.data() + plaintext.size()) != 1)
        fail_cipher("tag retrieval failed");
    return out;
}

Bytes aead_decrypt(const SecretBytes<32>& key,
                   const std::array<std::uint8_t, kNonceSize>& nonce,
                   ByteView ciphertext_and_tag) {
    if (ciphertext_and_tag.size() < kAeadTagSize) {
        raise(Errc::truncated, "ciphertext shorter than the AEAD tag");
    }
    const std::size_t body_size = ciphertext_and_tag.size() - kAeadTagSize;

    CipherCtx ctx(EVP_CIPHER_CTX_new(), EVP_CIPHER_CTX_free);
    if (!ctx) fail_cipher("context allocation failed");
    if (EVP_DecryptInit_ex(ctx.get(), EVP_aes_256_gcm(), nullptr, nullptr, nullptr) != 1)
        fail_cipher("init failed");
    if (EVP_CIPHER_CTX_ctrl(ctx.get(), EVP_CTRL_GCM_SET_IVLEN,
                            static_cast<int>(nonce.size()), nullptr) != 1)
        fail_cipher("nonce length rejected");
    if (EVP_DecryptInit_ex(ctx.get(), nullptr, nullptr, key.data(), nonce.data()) != 1)
        fail_cipher("key setup failed");

    Bytes out(body_size);
    int written = 0;
    if (body_size > 0) {
        if (EVP_DecryptUpdate(ctx.get(), out.data(), &written,
                              ciphertext_and_tag.data(),
                              static_cast<int>(body_size)) != 1)
            fail_cipher("decrypt failed");
    }

    std::array<std::uint8_t, kAeadTagSize> tag{};
    std::memcpy(tag.data(), ciphertext_and_tag.data() + body_size, kAeadTagSize);
    if (EVP_CIPHER_CTX_ctrl(ctx.get(), EVP_CTRL_GCM_SET_TAG, kAeadTagSize,
                            tag.data()) != 1)
        fail_cipher("tag setup failed");

    int trailing = 0;
    if (EVP_DecryptFinal_ex(ctx.get(), out.data() + written, &trailing) != 1) {
        secure_erase(out.data(), out.size());
        raise(Errc::authentication_failed, "AEAD tag does not match");
    }
    if (static_cast<std::size_t>(written + trailing) != body_size)
        fail_cipher("unexpected plaintext length");
    return out;
}

std::array<std::uint8_t, kSignatureSize> sign_name(const Identity& identity,
                                                   ByteView name_utf8) {
    detail::ensure_sodium();
    std::array<std::uint8_t, kSignatureSize> signature{};
    crypto_sign_detached(signature.data(), nullptr, name_utf8.data(), name_utf8.size(),
                         identity.ed25519_secret_key().data());
    return signature;
}

bool verify_name(const std::array<std::uint8_t, 32>& public_ed,
                 ByteView name_utf8,
                 const std::array<std::uint8_t, kSignatureSize>& signature) {
    detail::ensure_sodium();
    return crypto_sign_verify_detached(signature.data(), name_utf8.data(),
                                       name_utf8.size(), public_ed.data()) == 0;
}

}  // namespace ecf
