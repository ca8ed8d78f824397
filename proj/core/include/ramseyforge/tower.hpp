#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "ramseyforge/bignat.hpp"

namespace ramseyforge {

// Exact evaluation is abandoned once a value would exceed this many bits.
inline constexpr std::uint64_t kExactBitCap = 1ull << 24;

// A tower-function value: either an exact integer, or scale * T where T is
// `height` applications of x -> 2^x on an exact seed that is already too
// large to exponentiate under the bit cap. Values render as right-nested
// towers "2^2^65536"; a leading "4*" appears only when a scaled tower can
// no longer be folded into an exponent.
class TowerValue {
public:
    TowerValue() = default;  // exact zero

    static TowerValue from_exact(BigNat v);
    static TowerValue from_u64(std::uint64_t v) { return from_exact(BigNat(v)); }

    bool is_exact() const { return height_ == 0; }
    const BigNat& exact_value() const;  // pre: is_exact
    int height() const { return height_; }
    const BigNat& seed() const { return seed_; }
    std::uint64_t scale() const { return scale_; }

    // 2^value. Stays exact while the result fits under the bit cap.
    TowerValue exp2() const;
    // value * m for a small positive factor.
    TowerValue times(std::uint64_t m) const;

    std::string str() const;
    static TowerValue parse(std::string_view s);

    friend bool operator==(const TowerValue& a, const TowerValue& b);
    friend bool operator!=(const TowerValue& a, const TowerValue& b) { return !(a == b); }
    friend bool operator<(const TowerValue& a, const TowerValue& b);

private:
    static TowerValue make(std::uint64_t scale, int height, BigNat seed);

    BigNat seed_;                 // the exact part
    std::uint64_t scale_ = 1;     // multiplier; 1 whenever height_ == 0
    int height_ = 0;              // applications of 2^ above the seed
};

// tw_1(x) = x, tw_{i+1}(x) = 2^{tw_i(x)}.
TowerValue tw(int i, std::uint64_t x);

// s(k) >= 4 * tw_{k-3}(2); defined for k >= 4.
TowerValue s_lower(int k);

// s_4(k) >= 4 * tw_k(2); defined for k >= 1.
TowerValue s4_lower(int k);

enum class BoundKind { diag, k1k2, k2k2, k1_2k1 };

// Lower bounds on R_k(k+1,k+1), R_k(k+1,k+2), R_k(k+2,k+2) and
// R_k(k+1,2k+1), each reduced to s_lower. Throws std::domain_error when k
// is below the least value that keeps the tower height >= 1.
TowerValue bound_table(int k, BoundKind kind);

}  // namespace ramseyforge
