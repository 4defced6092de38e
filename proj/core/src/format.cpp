#include "ecf/format.hpp"

#include <limits>

#include "ecf/error.hpp"
#include "ecf/wire.hpp"

namespace ecf {

namespace {

void check_digest_length(const Bytes& digest, const CipherSuite& suite, const char* field) {
    if (digest.size() != suite.hash_length) {
        raise(Errc::length_mismatch,
              std::string(field) + " must be " + std::to_string(suite.hash_length) + " bytes");
    }
}

void write_recipient_block(ByteWriter& w, const RecipientBlock& block) {
    w.bytes(as_view(block.identification_tag));
    w.bytes(as_view(block.ephemeral_public_key));
    w.bytes(as_view(block.aes_pre_key_1));
}

}  // namespace

Bytes serialize_public_header(const PublicHeader& header) {
    ByteWriter w;
    w.u32(header.container_version);
    w.u32(header.cipher_suite_id);
    w.u32(header.public_header_length);
    w.u32(header.private_length);
    w.u32(header.recipient_count());
    w.bytes(as_view(header.salt));
    w.bytes(as_view(header.symmetric_nonce));
    for (const auto& block : header.blocks) {
        write_recipient_block(w, block);
    }
    return w.take();
}

PublicHeader parse_public_header(ByteView bytes) {
    if (bytes.size() < kGeneralHeaderSize) {
        raise(Errc::truncated, "public part needs at least " +
                                   std::to_string(kGeneralHeaderSize) + " bytes");
    }
    ByteReader r(bytes);
    PublicHeader h;
    h.container_version = r.u32();
    if (h.container_version != kContainerVersion) {
        raise(Errc::unsupported_version,
              "container version " + std::to_string(h.container_version));
    }
    h.cipher_suite_id = r.u32();
    if (!suite_supported(h.cipher_suite_id)) {
        raise(Errc::unsupported_suite,
              "cipher suite id " + std::to_string(h.cipher_suite_id));
    }
    h.public_header_length = r.u32();
    h.private_length = r.u32();
    const std::uint32_t m = r.u32();
    h.salt = r.array<kSaltSize>();
    h.symmetric_nonce = r.array<kNonceSize>();

    const std::uint64_t expected =
        kGeneralHeaderSize + static_cast<std::uint64_t>(m) * kRecipientBlockSize;
    if (h.public_header_length != expected) {
        raise(Errc::length_mismatch, "declared public header length " +
                                         std::to_string(h.public_header_length) +
                                         ", blocks imply " + std::to_string(expected));
    }
    if (bytes.size() < expected) {
        raise(Errc::truncated, "public part shorter than declared length");
    }
    h.blocks.reserve(m);
    for (std::uint32_t i = 0; i < m; ++i) {
        RecipientBlock block;
        block.identification_tag = r.array<kTagSize>();
        block.ephemeral_public_key = r.array<kKeySize>();
        block.aes_pre_key_1 = r.array<kKeySize>();
        h.blocks.push_back(block);
    }
    return h;
}

Bytes serialize_private_body_prefix(const PrivateBody& body, const CipherSuite& suite) {
    check_digest_length(body.public_header_hash, suite, "public header hash");
    if (body.content.size() > std::numeric_limits<std::uint32_t>::max()) {
        raise(Errc::content_too_large, "content exceeds 32-bit length");
    }
    if (body.recipients.size() > std::numeric_limits<std::uint32_t>::max()) {
        raise(Errc::length_mismatch, "recipient count exceeds 32-bit field");
    }
    ByteWriter w;
    w.u32(body.content_type);
    w.bytes(as_view(body.public_header_hash));
    w.u32(static_cast<std::uint32_t>(body.recipients.size()));
    for (const auto& r : body.recipients) {
        w.bytes(as_view(r.public_key));
        w.str(r.name);
        w.bytes(as_view(r.name_signature));
    }
    w.u32(static_cast<std::uint32_t>(body.content.size()));
    w.bytes(as_view(body.content));
    return w.take();
}

Bytes serialize_private_body(const PrivateBody& body, const CipherSuite& suite) {
    check_digest_length(body.private_hash, suite, "private hash");
    Bytes out = serialize_private_body_prefix(body, suite);
    out.insert(out.end(), body.private_hash.begin(), body.private_hash.end());
    return out;
}

PrivateBody parse_private_body(ByteView bytes, const CipherSuite& suite) {
    ByteReader r(bytes);
    PrivateBody body;
    body.content_type = r.u32();
    body.public_header_hash = r.bytes(suite.hash_length);
    const std::uint32_t n = r.u32();
    for (std::uint32_t i = 0; i < n; ++i) {
        RecipientInfo info;
        info.public_key = r.array<kKeySize>();
        info.name = r.str(kMaxNameBytes);
        info.name_signature = r.array<kSignatureSize>();
        body.recipients.push_back(std::move(info));
    }
    const std::uint32_t content_length = r.u32();
    body.content = r.bytes(content_length);
    body.private_hash = r.bytes(suite.hash_length);
    if (!r.done()) {
        raise(Errc::length_mismatch,
              std::to_string(r.remaining()) + " unexpected bytes after private hash");
    }
    return body;
}

}  // namespace ecf
