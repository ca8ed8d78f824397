#include "ramseyforge/bignat.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace ramseyforge {

namespace {
constexpr std::uint64_t kDecChunk = 1000000000ull;  // 10^9 per division pass
}

BigNat::BigNat(std::uint64_t v) {
    while (v) {
        limbs_.push_back(static_cast<std::uint32_t>(v & 0xffffffffu));
        v >>= 32;
    }
}

void BigNat::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigNat BigNat::pow2(std::uint64_t exponent) {
    BigNat out;
    out.limbs_.assign(static_cast<std::size_t>(exponent / 32) + 1, 0);
    out.limbs_.back() = 1u << (exponent % 32);
    return out;
}

std::uint64_t BigNat::bit_length() const {
    if (limbs_.empty()) return 0;
    const std::uint64_t top = std::bit_width(limbs_.back());
    return (static_cast<std::uint64_t>(limbs_.size()) - 1) * 32 + top;
}

std::uint64_t BigNat::to_u64() const {
    if (!fits_u64()) throw std::logic_error("BigNat::to_u64: value exceeds 64 bits");
    std::uint64_t v = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        v = (v << 32) | limbs_[i];
    }
    return v;
}

bool BigNat::is_power_of_two() const {
    if (limbs_.empty()) return false;
    if (!std::has_single_bit(limbs_.back())) return false;
    for (std::size_t i = 0; i + 1 < limbs_.size(); ++i) {
        if (limbs_[i] != 0) return false;
    }
    return true;
}

std::uint64_t BigNat::log2_exact() const {
    if (!is_power_of_two()) throw std::logic_error("BigNat::log2_exact: not a power of two");
    return bit_length() - 1;
}

BigNat& BigNat::mul_u64(std::uint64_t m) {
    if (m == 0 || limbs_.empty()) {
        limbs_.clear();
        return *this;
    }
    const std::uint32_t lo = static_cast<std::uint32_t>(m & 0xffffffffu);
    const std::uint32_t hi = static_cast<std::uint32_t>(m >> 32);
    std::vector<std::uint32_t> out(limbs_.size() + 2, 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        const std::uint64_t x = limbs_[i];
        {
            const std::uint64_t t = x * lo + out[i];
            out[i] = static_cast<std::uint32_t>(t);
            carry = t >> 32;
        }
        {
            const std::uint64_t t = x * hi + out[i + 1] + carry;
            out[i + 1] = static_cast<std::uint32_t>(t);
            carry = t >> 32;
        }
        std::size_t j = i + 2;
        while (carry) {
            const std::uint64_t t = static_cast<std::uint64_t>(out[j]) + carry;
            out[j] = static_cast<std::uint32_t>(t);
            carry = t >> 32;
            ++j;
        }
    }
    limbs_ = std::move(out);
    trim();
    return *this;
}

BigNat& BigNat::add_u64(std::uint64_t a) {
    std::uint64_t carry = a;
    for (std::size_t i = 0; i < limbs_.size() && carry; ++i) {
        const std::uint64_t t = limbs_[i] + (carry & 0xffffffffu);
        limbs_[i] = static_cast<std::uint32_t>(t);
        carry = (carry >> 32) + (t >> 32);
    }
    while (carry) {
        limbs_.push_back(static_cast<std::uint32_t>(carry & 0xffffffffu));
        carry >>= 32;
    }
    return *this;
}

bool operator<(const BigNat& a, const BigNat& b) {
    if (a.limbs_.size() != b.limbs_.size()) return a.limbs_.size() < b.limbs_.size();
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i];
    }
    return false;
}

std::string BigNat::to_decimal() const {
    if (limbs_.empty()) return "0";
    std::vector<std::uint32_t> work(limbs_);
    std::vector<std::uint32_t> chunks;  // base 10^9, little-endian
    while (!work.empty()) {
        std::uint64_t rem = 0;
        for (std::size_t i = work.size(); i-- > 0;) {
            const std::uint64_t cur = (rem << 32) | work[i];
            work[i] = static_cast<std::uint32_t>(cur / kDecChunk);
            rem = cur % kDecChunk;
        }
        chunks.push_back(static_cast<std::uint32_t>(rem));
        while (!work.empty() && work.back() == 0) work.pop_back();
    }
    std::string out = std::to_string(chunks.back());
    for (std::size_t i = chunks.size() - 1; i-- > 0;) {
        std::string part = std::to_string(chunks[i]);
        out += std::string(9 - part.size(), '0');
        out += part;
    }
    return out;
}

BigNat BigNat::from_decimal(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("BigNat::from_decimal: empty string");
    BigNat out;
    for (char ch : s) {
        if (ch < '0' || ch > '9') {
            throw std::invalid_argument("BigNat::from_decimal: non-digit character");
        }
        out.mul_u64(10);
        out.add_u64(static_cast<std::uint64_t>(ch - '0'));
    }
    return out;
}

}  // namespace ramseyforge
