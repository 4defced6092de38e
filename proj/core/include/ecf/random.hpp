#ifndef ECF_RANDOM_HPP
#define ECF_RANDOM_HPP

#include <array>
#include <cstdint>
#include <span>

namespace ecf {

/// Source of randomness for every randomized operation in the library.
/// Production code uses SystemRandomness; tests and fixture generation
/// inject DeterministicRandomness.
class Randomness {
public:
    virtual ~Randomness() = default;

    virtual void fill(std::span<std::uint8_t> out) = 0;

    /// Uniform value in [0, upper_bound); returns 0 when upper_bound <= 1.
    virtual std::uint32_t uniform(std::uint32_t upper_bound) = 0;

    template <std::size_t N>
    std::array<std::uint8_t, N> bytes() {
        std::array<std::uint8_t, N> out{};
        fill(out);
        return out;
    }
};

/// Operating-system CSPRNG.
class SystemRandomness final : public Randomness {
public:
    void fill(std::span<std::uint8_t> out) override;
    std::uint32_t uniform(std::uint32_t upper_bound) override;
};

/// Returns a process-wide SystemRandomness instance.
SystemRandomness& system_randomness();

/// ChaCha20 keystream expanded from a 32-byte seed. Identical byte stream on
/// every platform for a given seed; used for reproducible fixtures and tests.
class DeterministicRandomness final : public Randomness {
public:
    explicit DeterministicRandomness(const std::array<std::uint8_t, 32>& seed);

    void fill(std::span<std::uint8_t> out) override;
    std::uint32_t uniform(std::uint32_t upper_bound) override;

private:
    std::array<std::uint8_t, 32> seed_;
    std::uint64_t offset_ = 0;
};

}  // namespace ecf

#endif
