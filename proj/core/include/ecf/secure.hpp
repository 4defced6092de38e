#ifndef ECF_SECURE_HPP
#define ECF_SECURE_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

namespace ecf {

/// Overwrites the region with zeros in a way the compiler must not elide,
/// and bumps the process-wide erasure counter.
void secure_erase(void* data, std::size_t size) noexcept;

/// Number of secure_erase calls performed so far in this process.
/// Lets tests observe that secrets going out of scope really get wiped.
std::uint64_t erasure_count() noexcept;

/// Fixed-size secret value. Zeroed on construction, wiped on destruction.
/// Copyable: a copy is an independent secret that wipes itself too.
template <std::size_t N>
class SecretBytes {
public:
    SecretBytes() noexcept : data_{} {}
    explicit SecretBytes(const std::array<std::uint8_t, N>& data) noexcept : data_(data) {}

    SecretBytes(const SecretBytes&) = default;
    SecretBytes& operator=(const SecretBytes&) = default;

    ~SecretBytes() { secure_erase(data_.data(), data_.size()); }

    std::uint8_t* data() noexcept { return data_.data(); }
    const std::uint8_t* data() const noexcept { return data_.data(); }
    static constexpr std::size_t size() noexcept { return N; }

    std::span<const std::uint8_t> view() const noexcept { return {data_.data(), N}; }
    std::span<std::uint8_t> mutable_view() noexcept { return {data_.data(), N}; }

private:
    std::array<std::uint8_t, N> data_;
};

/// Wipes a caller-owned buffer when the guard leaves scope.
class EraseGuard {
public:
    EraseGuard(void* data, std::size_t size) noexcept : data_(data), size_(size) {}
    EraseGuard(const EraseGuard&) = delete;
    EraseGuard& operator=(const EraseGuard&) = delete;
    ~EraseGuard() { secure_erase(data_, size_); }

private:
    void* data_;
    std::size_t size_;
};

}  // namespace ecf

#endif
