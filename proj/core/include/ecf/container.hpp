#ifndef ECF_CONTAINER_HPP
#define ECF_CONTAINER_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ecf/bytes.hpp"
#include "ecf/crypto.hpp"
#include "ecf/format.hpp"
#include "ecf/random.hpp"
#include "ecf/suite.hpp"

namespace ecf {

inline constexpr std::uint32_t kContentTypeBlob = 0;

/// Public information needed to add someone as a recipient: their key, a
/// self-chosen name, and their signature over the raw name bytes.
struct RecipientDescriptor {
    std::array<std::uint8_t, 32> public_key{};
    std::string name;
    std::array<std::uint8_t, kSignatureSize> name_signature{};

    bool verify() const;

    Bytes serialize() const;
    static RecipientDescriptor parse(ByteView bytes);
};

enum class ObfuscationMode {
    fast,  // random tag and pre key, real ephemeral key
    full,  // complete wrap against a throwaway identity
};

struct WriteOptions {
    bool allow_no_recipients = false;
    ObfuscationMode obfuscation = ObfuscationMode::fast;
};

struct LoadOptions {
    bool verify_name_signatures = true;
};

/// True when a content size fits the 32-bit length field.
constexpr bool content_size_ok(std::uint64_t size) noexcept {
    return size <= 0xFFFFFFFFull;
}

/// Decrypted container: suite, content type, recipient set and payload.
/// Encrypting is a pure function of this value plus fresh randomness.
class EncryptedContainer {
public:
    /// Throws Errc::unsupported_suite / unsupported_content_type.
    static EncryptedContainer create(std::uint32_t suite_id, std::uint32_t content_type);

    /// Full decryption: locates the caller's block by identification tag,
    /// reconstructs the content key, authenticates, then checks the private
    /// hash, the public-header hash, recipient-set validity and (unless
    /// disabled) every name signature.
    static EncryptedContainer load(ByteView file, const Identity& identity,
                                   const LoadOptions& options = {});

    /// Full encryption with fresh key, salt, nonce and ephemerals; picks the
    /// public block count m, appends obfuscation blocks and shuffles.
    Bytes write(Randomness& rng, const WriteOptions& options = {}) const;

    const CipherSuite& suite() const noexcept { return *suite_; }
    std::uint32_t content_type() const noexcept { return content_type_; }
    const std::vector<RecipientInfo>& recipients() const noexcept { return recipients_; }
    const Bytes& content() const noexcept { return content_; }

    /// Replaces the payload; the recipient set is untouched. Persisting the
    /// change requires write().
    void set_content(Bytes content);

    /// Verifies the descriptor's signature, rejects duplicates by key (and
    /// by name unless allow_duplicate_name), then appends.
    void add_recipient(const RecipientDescriptor& descriptor,
                       bool allow_duplicate_name = false);

    /// Removal by exact public key. Removing the acting identity's own key
    /// requires confirm_self_removal.
    void remove_recipient_by_key(const std::array<std::uint8_t, 32>& public_key,
                                 const Identity& acting_identity,
                                 bool confirm_self_removal = false);

    /// Removal by name; the name must identify exactly one recipient.
    void remove_recipient_by_name(std::string_view name,
                                  const Identity& acting_identity,
                                  bool confirm_self_removal = false);

private:
    EncryptedContainer(const CipherSuite& suite, std::uint32_t content_type)
        : suite_(&suite), content_type_(content_type) {}

    void remove_at(std::size_t index, const Identity& acting_identity,
                   bool confirm_self_removal);

    const CipherSuite* suite_;
    std::uint32_t content_type_;
    std::vector<RecipientInfo> recipients_;
    Bytes content_;
};

/// Public block count: uniform over [n, max(8, 2n)].
std::uint32_t choose_m(std::uint32_t n, Randomness& rng);

/// Obfuscation block built like a real one, against a throwaway identity;
/// every generated secret is erased before returning.
RecipientBlock make_obfuscation_block_full(const CipherSuite& suite,
                                           const std::array<std::uint8_t, kSaltSize>& salt,
                                           Randomness& rng);

/// Shortened generation: fresh ephemeral public key, random tag, random pre
/// key.
RecipientBlock make_obfuscation_block_fast(Randomness& rng);

}  // namespace ecf

#endif
