#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ramseyforge {

// Unbounded nonnegative integer. Just enough arithmetic for tower values:
// powers of two, small multiplication and addition, comparison, and
// decimal conversion. Limbs are 32-bit, little-endian, normalized (no
// trailing zero limbs; zero is the empty limb vector).
class BigNat {
public:
    BigNat() = default;
    BigNat(std::uint64_t v);

    static BigNat pow2(std::uint64_t exponent);
    static BigNat from_decimal(std::string_view s);  // throws on malformed input

    bool is_zero() const { return limbs_.empty(); }
    // Number of bits in the binary representation; 0 for zero.
    std::uint64_t bit_length() const;
    bool fits_u64() const { return limbs_.size() <= 2; }
    std::uint64_t to_u64() const;  // pre: fits_u64

    bool is_power_of_two() const;
    std::uint64_t log2_exact() const;  // pre: is_power_of_two

    BigNat& mul_u64(std::uint64_t m);
    BigNat& add_u64(std::uint64_t a);

    std::string to_decimal() const;

    friend bool operator==(const BigNat& a, const BigNat& b) { return a.limbs_ == b.limbs_; }
    friend bool operator!=(const BigNat& a, const BigNat& b) { return !(a == b); }
    friend bool operator<(const BigNat& a, const BigNat& b);
    friend bool operator<=(const BigNat& a, const BigNat& b) { return !(b < a); }
    friend bool operator>(const BigNat& a, const BigNat& b) { return b < a; }
    friend bool operator>=(const BigNat& a, const BigNat& b) { return !(a < b); }

private:
    void trim();
    std::vector<std::uint32_t> limbs_;
};

}  // namespace ramseyforge
