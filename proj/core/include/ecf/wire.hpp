#ifndef ECF_WIRE_HPP
#define ECF_WIRE_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include "ecf/bytes.hpp"

namespace ecf {

/// Integers are stored as 4 bytes, little endian. Strings as a 4-byte
/// little-endian byte length followed by UTF-8 data, no BOM. Byte arrays
/// are stored as-is.

std::array<std::uint8_t, 4> encode_u32(std::uint32_t value) noexcept;
std::uint32_t decode_u32(ByteView bytes);  // requires exactly >= 4 bytes at caller's offset

/// Length-prefixed UTF-8 string. Throws Errc::oversize_string when the
/// encoded form cannot fit a 32-bit length.
Bytes encode_string(std::string_view text);

/// True when the byte sequence is well-formed UTF-8 (RFC 3629: no overlong
/// forms, no surrogates, nothing above U+10FFFF).
bool is_valid_utf8(ByteView bytes) noexcept;

/// Appends primitives to a growing buffer.
class ByteWriter {
public:
    void u32(std::uint32_t value);
    void bytes(ByteView data);
    void str(std::string_view text);

    std::size_t size() const noexcept { return buf_.size(); }
    Bytes take() { return std::move(buf_); }
    const Bytes& view() const noexcept { return buf_; }

private:
    Bytes buf_;
};

/// Reads primitives from a fixed buffer. Every read checks the remaining
/// length and throws Errc::truncated instead of reading past the end.
class ByteReader {
public:
    explicit ByteReader(ByteView input) noexcept : input_(input) {}

    std::uint32_t u32();
    Bytes bytes(std::size_t count);
    template <std::size_t N>
    std::array<std::uint8_t, N> array() {
        std::array<std::uint8_t, N> out{};
        copy(out.data(), N);
        return out;
    }

    /// Length-prefixed UTF-8 string; rejects invalid UTF-8 and lengths
    /// above max_bytes.
    std::string str(std::size_t max_bytes);

    std::size_t position() const noexcept { return pos_; }
    std::size_t remaining() const noexcept { return input_.size() - pos_; }
    bool done() const noexcept { return pos_ == input_.size(); }

private:
    void copy(std::uint8_t* out, std::size_t count);
    void require(std::size_t count) const;

    ByteView input_;
    std::size_t pos_ = 0;
};

}  // namespace ecf

#endif
