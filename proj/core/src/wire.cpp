#include "ecf/wire.hpp"

#include <cstring>
#include <limits>

#include "ecf/error.hpp"

namespace ecf {

std::array<std::uint8_t, 4> encode_u32(std::uint32_t value) noexcept {
    return {static_cast<std::uint8_t>(value),
            static_cast<std::uint8_t>(value >> 8),
            static_cast<std::uint8_t>(value >> 16),
            static_cast<std::uint8_t>(value >> 24)};
}

std::uint32_t decode_u32(ByteView bytes) {
    if (bytes.size() < 4) {
        raise(Errc::truncated, "u32 field needs 4 bytes");
    }
    return static_cast<std::uint32_t>(bytes[0]) |
           static_cast<std::uint32_t>(bytes[1]) << 8 |
           static_cast<std::uint32_t>(bytes[2]) << 16 |
           static_cast<std::uint32_t>(bytes[3]) << 24;
}

Bytes encode_string(std::string_view text) {
    if (text.size() > std::numeric_limits<std::uint32_t>::max()) {
        raise(Errc::oversize_string, "string exceeds 32-bit length");
    }
    ByteWriter w;
    w.str(text);
    return w.take();
}

bool is_valid_utf8(ByteView bytes) noexcept {
    std::size_t i = 0;
    const std::size_t n = bytes.size();
    while (i < n) {
        std::uint8_t b0 = bytes[i];
        if (b0 < 0x80) {
            ++i;
            continue;
        }
        std::size_t len;
        std::uint32_t cp;
        if ((b0 & 0xE0) == 0xC0) {
            len = 2;
            cp = b0 & 0x1F;
        } else if ((b0 & 0xF0) == 0xE0) {
            len = 3;
            cp = b0 & 0x0F;
        } else if ((b0 & 0xF8) == 0xF0) {
            len = 4;
            cp = b0 & 0x07;
        } else {
            return false;
        }
        if (i + len > n) {
            return false;
        }
        for (std::size_t k = 1; k < len; ++k) {
            std::uint8_t c = bytes[i + k];
            if ((c & 0xC0) != 0x80) {
                return false;
            }
            cp = cp << 6 | (c & 0x3F);
        }
        // Overlong encodings, UTF-16 surrogates and values past U+10FFFF
        // are not UTF-8.
        if (len == 2 && cp < 0x80) return false;
        if (len == 3 && cp < 0x800) return false;
        if (len == 4 && cp < 0x10000) return false;
        if (cp >= 0xD800 && cp <= 0xDFFF) return false;
        if (cp > 0x10FFFF) return false;
        i += len;
    }
    return true;
}

void ByteWriter::u32(std::uint32_t value) {
    auto enc = encode_u32(value);
    buf_.insert(buf_.end(), enc.begin(), enc.end());
}

void ByteWriter::bytes(ByteView data) {
    buf_.insert(buf_.end(), data.begin(), data.end());
}

void ByteWriter::str(std::string_view text) {
    if (text.size() > std::numeric_limits<std::uint32_t>::max()) {
        raise(Errc::oversize_string, "string exceeds 32-bit length");
    }
    u32(static_cast<std::uint32_t>(text.size()));
    bytes(as_view(text));
}

void ByteReader::require(std::size_t count) const {
    if (remaining() < count) {
        raise(Errc::truncated, "input ends inside a field");
    }
}

void ByteReader::copy(std::uint8_t* out, std::size_t count) {
    require(count);
    std::memcpy(out, input_.data() + pos_, count);
    pos_ += count;
}

std::uint32_t ByteReader::u32() {
    require(4);
    std::uint32_t v = decode_u32(input_.subspan(pos_, 4));
    pos_ += 4;
    return v;
}

Bytes ByteReader::bytes(std::size_t count) {
    require(count);
    Bytes out(input_.begin() + static_cast<std::ptrdiff_t>(pos_),
              input_.begin() + static_cast<std::ptrdiff_t>(pos_ + count));
    pos_ += count;
    return out;
}

std::string ByteReader::str(std::size_t max_bytes) {
    std::uint32_t len = u32();
    if (len > max_bytes) {
        raise(Errc::oversize_name, "declared string length exceeds limit");
    }
    require(len);
    std::string out(reinterpret_cast<const char*>(input_.data() + pos_), len);
    pos_ += len;
    if (!is_valid_utf8(as_view(out))) {
        raise(Errc::invalid_utf8, "string payload is not UTF-8");
    }
    return out;
}

}  // namespace ecf
