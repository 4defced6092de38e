#include "ecf/container.hpp"

#include <sodium.h>

#include <algorithm>
#include <cstring>
#include <limits>
#include <set>
#include <utility>

#include "ecf/error.hpp"
#include "ecf/wire.hpp"
#include "internal.hpp"

namespace ecf {

namespace {

void patch_u32(Bytes& buffer, std::size_t offset, std::uint32_t value) {
    const auto encoded = encode_u32(value);
    std::memcpy(buffer.data() + offset, encoded.data(), encoded.size());
}

/// Digest of the public part with the length field replaced by the
/// placeholder, as used for the in-body public header hash.
Bytes hash_public_part(const CipherSuite& suite, ByteView public_part) {
    Bytes masked(public_part.begin(), public_part.end());
    patch_u32(masked, kHeaderLengthFieldOffset, kHeaderLengthPlaceholder);
    return hash(suite, as_view(masked));
}

void check_name(std::string_view name) {
    if (name.size() > kMaxNameBytes) {
        raise(Errc::oversize_name, "recipient name exceeds " +
                                       std::to_string(kMaxNameBytes) + " bytes");
    }
    if (!is_valid_utf8(as_view(name))) {
        raise(Errc::invalid_utf8, "recipient name is not valid UTF-8");
    }
}

}  // namespace

bool RecipientDescriptor::verify() const {
    return verify_name(public_key, as_view(std::string_view(name)), name_signature);
}

Bytes RecipientDescriptor::serialize() const {
    check_name(name);
    ByteWriter w;
    w.bytes(as_view(public_key));
    w.str(name);
    w.bytes(as_view(name_signature));
    return w.take();
}

RecipientDescriptor RecipientDescriptor::parse(ByteView bytes) {
    ByteReader r(bytes);
    RecipientDescriptor d;
    d.public_key = r.array<kKeySize>();
    d.name = r.str(kMaxNameBytes);
    d.name_signature = r.array<kSignatureSize>();
    if (!r.done()) {
        raise(Errc::length_mismatch, "trailing bytes after recipient descriptor");
    }
    return d;
}

EncryptedContainer EncryptedContainer::create(std::uint32_t suite_id,
                                              std::uint32_t content_type) {
    const CipherSuite& suite = suite_from_id(suite_id);
    if (content_type != kContentTypeBlob) {
        raise(Errc::unsupported_content_type,
              "content type " + std::to_string(content_type));
    }
    return EncryptedContainer(suite, content_type);
}

void EncryptedContainer::set_content(Bytes content) {
    if (!content_size_ok(content.size())) {
        raise(Errc::content_too_large, "content exceeds 32-bit length");
    }
    content_ = std::move(content);
}

void EncryptedContainer::add_recipient(const RecipientDescriptor& descriptor,
                                       bool allow_duplicate_name) {
    check_name(descriptor.name);
    if (!descriptor.verify()) {
        raise(Errc::invalid_signature, "descriptor name signature does not verify");
    }
    for (const auto& existing : recipients_) {
        if (existing.public_key == descriptor.public_key) {
            raise(Errc::already_recipient, "public key is already a recipient");
        }
    }
    if (!allow_duplicate_name) {
        for (const auto& existing : recipients_) {
            if (existing.name == descriptor.name) {
                raise(Errc::duplicate_name,
                      "name \"" + descriptor.name + "\" is already taken");
            }
        }
    }
    RecipientInfo info;
    info.public_key = descriptor.public_key;
    info.name = descriptor.name;
    info.name_signature = descriptor.name_signature;
    recipients_.push_back(std::move(info));
}

void EncryptedContainer::remove_at(std::size_t index, const Identity& acting_identity,
                                   bool confirm_self_removal) {
    if (recipients_[index].public_key == acting_identity.public_key() &&
        !confirm_self_removal) {
        raise(Errc::self_removal_not_confirmed,
              "removing your own access requires confirmation");
    }
    recipients_.erase(recipients_.begin() + static_cast<std::ptrdiff_t>(index));
}

void EncryptedContainer::remove_recipient_by_key(
    const std::array<std::uint8_t, 32>& public_key, const Identity& acting_identity,
    bool confirm_self_removal) {
    for (std::size_t i = 0; i < recipients_.size(); ++i) {
        if (recipients_[i].public_key == public_key) {
            remove_at(i, acting_identity, confirm_self_removal);
            return;
        }
    }
    raise(Errc::not_found, "no recipient with that public key");
}

void EncryptedContainer::remove_recipient_by_name(std::string_view name,
                                                  const Identity& acting_identity,
                                                  bool confirm_self_removal) {
    std::size_t match = 0;
    std::size_t matches = 0;
    for (std::size_t i = 0; i < recipients_.size(); ++i) {
        if (recipients_[i].name == name) {
            match = i;
            ++matches;
        }
    }
    if (matches == 0) {
        raise(Errc::not_found, "no recipient named \"" + std::string(name) + "\"");
    }
    if (matches > 1) {
        raise(Errc::ambiguous_name,
              "name \"" + std::string(name) + "\" matches several recipients");
    }
    remove_at(match, acting_identity, confirm_self_removal);
}

std::uint32_t choose_m(std::uint32_t n, Randomness& rng) {
    const std::uint64_t upper =
        std::min<std::uint64_t>(std::max<std::uint64_t>(8, 2 * std::uint64_t(n)),
                                std::numeric_limits<std::uint32_t>::max());
    const std::uint32_t span = static_cast<std::uint32_t>(upper - n + 1);
    return n + rng.uniform(span);
}

RecipientBlock make_obfuscation_block_full(const CipherSuite& suite,
                                           const std::array<std::uint8_t, kSaltSize>& salt,
                                           Randomness& rng) {
    const Identity throwaway = Identity::generate(rng);
    ContentKey random_key;
    rng.fill(random_key.key.mutable_view());

    RecipientBlock block;
    block.identification_tag =
        compute_identification_tag(suite, throwaway.public_key(), salt);
    const KeyWrap wrap =
        wrap_content_key(suite, random_key, throwaway.public_key(), rng);
    block.ephemeral_public_key = wrap.ephemeral_public_key;
    block.aes_pre_key_1 = wrap.aes_pre_key_1;
    return block;
}

RecipientBlock make_obfuscation_block_fast(Randomness& rng) {
    detail::ensure_sodium();
    SecretBytes<32> ephemeral_secret;
    rng.fill(ephemeral_secret.mutable_view());

    RecipientBlock block;
    crypto_scalarmult_base(block.ephemeral_public_key.data(), ephemeral_secret.data());
    rng.fill(block.identification_tag);
    rng.fill(block.aes_pre_key_1);
    return block;
}

Bytes EncryptedContainer::write(Randomness& rng, const WriteOptions& options) const {
    if (recipients_.empty() && !options.allow_no_recipients) {
        raise(Errc::no_recipients, "nobody would be able to read this container");
    }

    ContentKey content_key;
    rng.fill(content_key.key.mutable_view());
    rng.fill(content_key.nonce);

    PublicHeader header;
    header.container_version = kContainerVersion;
    header.cipher_suite_id = suite_->id;
    header.symmetric_nonce = content_key.nonce;
    rng.fill(header.salt);

    const std::uint32_t n = static_cast<std::uint32_t>(recipients_.size());
    const std::uint32_t m = choose_m(n, rng);
    header.blocks.reserve(m);
    for (const auto& recipient : recipients_) {
        RecipientBlock block;
        block.identification_tag =
            compute_identification_tag(*suite_, recipient.public_key, header.salt);
        const KeyWrap wrap =
            wrap_content_key(*suite_, content_key, recipient.public_key, rng);
        block.ephemeral_public_key = wrap.ephemeral_public_key;
        block.aes_pre_key_1 = wrap.aes_pre_key_1;
        header.blocks.push_back(block);
    }
    for (std::uint32_t i = n; i < m; ++i) {
        header.blocks.push_back(options.obfuscation == ObfuscationMode::fast
                                    ? make_obfuscation_block_fast(rng)
                                    : make_obfuscation_block_full(*suite_, header.salt, rng));
    }
    for (std::size_t i = header.blocks.size(); i > 1; --i) {
        const std::uint32_t j = rng.uniform(static_cast<std::uint32_t>(i));
        std::swap(header.blocks[i - 1], header.blocks[j]);
    }

    PrivateBody body;
    body.content_type = content_type_;
    body.recipients = recipients_;
    body.content = content_;

    std::uint64_t prefix_size = 4 + suite_->hash_length + 4;
    for (const auto& recipient : recipients_) {
        prefix_size += kKeySize + 4 + recipient.name.size() + kSignatureSize;
    }
    prefix_size += 4 + content_.size();
    const std::uint64_t private_length = prefix_size + suite_->hash_length + kAeadTagSize;
    if (private_length > std::numeric_limits<std::uint32_t>::max()) {
        raise(Errc::content_too_large, "private part exceeds 32-bit length");
    }
    header.private_length = static_cast<std::uint32_t>(private_length);

    const std::uint64_t public_length = header.serialized_size();
    if (public_length > std::numeric_limits<std::uint32_t>::max()) {
        raise(Errc::length_mismatch, "public part exceeds 32-bit length");
    }

    header.public_header_length = kHeaderLengthPlaceholder;
    Bytes file = serialize_public_header(header);
    body.public_header_hash = hash(*suite_, as_view(file));
    patch_u32(file, kHeaderLengthFieldOffset, static_cast<std::uint32_t>(public_length));

    Bytes plaintext = serialize_private_body_prefix(body, *suite_);
    body.private_hash = hash(*suite_, as_view(plaintext));
    plaintext.insert(plaintext.end(), body.private_hash.begin(), body.private_hash.end());

    const Bytes ciphertext =
        aead_encrypt(content_key.key, content_key.nonce, as_view(plaintext));
    file.insert(file.end(), ciphertext.begin(), ciphertext.end());
    return file;
}

EncryptedContainer EncryptedContainer::load(ByteView file, const Identity& identity,
                                            const LoadOptions& options) {
    const PublicHeader header = parse_public_header(file);
    const CipherSuite& suite = suite_from_id(header.cipher_suite_id);
    const std::size_t header_size = header.serialized_size();
    const ByteView ciphertext = file.subspan(header_size);
    if (ciphertext.size() < header.private_length) {
        raise(Errc::truncated, "private part shorter than declared length");
    }
    if (ciphertext.size() > header.private_length) {
        raise(Errc::trailing_data, "bytes after the private part");
    }

    const auto my_tag =
        compute_identification_tag(suite, identity.public_key(), header.salt);
    bool any_tag_match = false;
    bool decrypted = false;
    Bytes plaintext;
    for (const auto& block : header.blocks) {
        if (block.identification_tag != my_tag) continue;
        any_tag_match = true;
        try {
            KeyWrap wrap;
            wrap.ephemeral_public_key = block.ephemeral_public_key;
            wrap.aes_pre_key_1 = block.aes_pre_key_1;
            const SecretBytes<32> key = unwrap_content_key(suite, wrap, identity);
            plaintext = aead_decrypt(key, header.symmetric_nonce, ciphertext);
            decrypted = true;
            break;
        } catch (const Error& e) {
            // A corrupted or colliding candidate falls through to the next
            // matching block.
            if (e.code() == Errc::authentication_failed ||
                e.code() == Errc::low_order_point) {
                continue;
            }
            throw;
        }
    }
    if (!any_tag_match) {
        raise(Errc::not_a_recipient, "no public block is addressed to this identity");
    }
    if (!decrypted) {
        raise(Errc::authentication_failed,
              "no matching block yields a key that authenticates");
    }

    PrivateBody body = parse_private_body(as_view(plaintext), suite);

    const ByteView hashed_region(plaintext.data(), plaintext.size() - suite.hash_length);
    const Bytes private_digest = hash(suite, hashed_region);
    if (!ct_equal(as_view(private_digest), as_view(body.private_hash))) {
        raise(Errc::tampered_private_part, "private hash mismatch");
    }

    const Bytes public_digest = hash_public_part(suite, file.first(header_size));
    if (!ct_equal(as_view(public_digest), as_view(body.public_header_hash))) {
        raise(Errc::tampered_public_part, "public header hash mismatch");
    }

    if (body.content_type != kContentTypeBlob) {
        raise(Errc::unsupported_content_type,
              "content type " + std::to_string(body.content_type));
    }

    std::set<std::array<std::uint8_t, kKeySize>> seen;
    for (const auto& recipient : body.recipients) {
        if (!seen.insert(recipient.public_key).second) {
            raise(Errc::duplicate_recipient,
                  "recipient public key listed more than once");
        }
    }
    if (options.verify_name_signatures) {
        for (const auto& recipient : body.recipients) {
            if (!verify_name(recipient.public_key,
                             as_view(std::string_view(recipient.name)),
                             recipient.name_signature)) {
                raise(Errc::invalid_name_signature,
                      "signature over name \"" + recipient.name + "\" does not verify");
            }
        }
    }

    EncryptedContainer container(suite, body.content_type);
    container.recipients_ = std::move(body.recipients);
    container.content_ = std::move(body.content);
    return container;
}

}  // namespace ecf
