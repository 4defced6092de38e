#ifndef ECF_BYTES_HPP
#define ECF_BYTES_HPP

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ecf {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

/// Lowercase hex encoding.
std::string to_hex(ByteView data);

/// Decodes a hex string; throws Errc::invalid_argument style std::invalid_argument
/// on odd length or non-hex characters.
Bytes from_hex(std::string_view hex);

/// Constant-time equality for equal-length buffers; false if lengths differ.
bool ct_equal(ByteView a, ByteView b);

inline ByteView as_view(const Bytes& b) { return ByteView{b.data(), b.size()}; }

template <std::size_t N>
ByteView as_view(const std::array<std::uint8_t, N>& a) {
    return ByteView{a.data(), a.size()};
}

ByteView as_view(std::string_view s);

/// Concatenates any number of byte views.
Bytes concat(std::initializer_list<ByteView> parts);

}  // namespace ecf

#endif
