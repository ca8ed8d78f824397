#include "ramseyforge/tower.hpp"

#include <bit>
#include <stdexcept>

namespace ramseyforge {

namespace {

// Largest exponent e such that 2^e still fits under the bit cap.
constexpr std::uint64_t kMaxExactExponent = kExactBitCap - 1;

bool exponentiable(const BigNat& v) {
    return v.fits_u64() && v.to_u64() <= kMaxExactExponent;
}

}  // namespace

TowerValue TowerValue::make(std::uint64_t scale, int height, BigNat seed) {
    // Lower the height while the seed can be exponentiated exactly.
    while (height > 0 && exponentiable(seed)) {
        seed = BigNat::pow2(seed.to_u64());
        --height;
    }
    if (height == 0) {
        if (scale != 1) seed.mul_u64(scale);
        scale = 1;
    } else if (height == 1 && scale != 1 && std::has_single_bit(scale)) {
        // scale * 2^seed = 2^(seed + log2 scale)
        seed.add_u64(static_cast<std::uint64_t>(std::countr_zero(scale)));
        scale = 1;
    }
    TowerValue out;
    out.seed_ = std::move(seed);
    out.scale_ = scale;
    out.height_ = height;
    return out;
}

TowerValue TowerValue::from_exact(BigNat v) { return make(1, 0, std::move(v)); }

const BigNat& TowerValue::exact_value() const {
    if (!is_exact()) throw std::logic_error("TowerValue::exact_value: value is symbolic");
    return seed_;
}

TowerValue TowerValue::exp2() const {
    if (is_exact()) {
        if (exponentiable(seed_)) return from_exact(BigNat::pow2(seed_.to_u64()));
        return make(1, 1, seed_);
    }
    if (scale_ != 1) {
        throw std::logic_error("TowerValue::exp2: cannot exponentiate a scaled tower");
    }
    return make(1, height_ + 1, seed_);
}

TowerValue TowerValue::times(std::uint64_t m) const {
    if (m == 0) throw std::invalid_argument("TowerValue::times: factor must be positive");
    if (is_exact()) {
        BigNat v = seed_;
        v.mul_u64(m);
        return from_exact(std::move(v));
    }
    return make(scale_ * m, height_, seed_);
}

bool operator==(const TowerValue& a, const TowerValue& b) {
    return a.height_ == b.height_ && a.scale_ == b.scale_ && a.seed_ == b.seed_;
}

bool operator<(const TowerValue& a, const TowerValue& b) {
    // Normalized symbolic values always exceed every exact value, and among
    // symbolic values a greater height dominates any seed or scale.
    if (a.height_ != b.height_) return a.height_ < b.height_;
    if (a.seed_ != b.seed_) return a.seed_ < b.seed_;
    return a.scale_ < b.scale_;
}

namespace {

std::string render_exact(const BigNat& v) {
    if (v.bit_length() > 64 && v.is_power_of_two()) {
        return "2^" + render_exact(BigNat(v.log2_exact()));
    }
    return v.to_decimal();
}

}  // namespace

std::string TowerValue::str() const {
    std::string out;
    if (scale_ != 1) {
        out += std::to_string(scale_);
        out += '*';
    }
    for (int i = 0; i < height_; ++i) out += "2^";
    out += render_exact(seed_);
    return out;
}

TowerValue TowerValue::parse(std::string_view s) {
    std::uint64_t scale = 1;
    if (const auto star = s.find('*'); star != std::string_view::npos) {
        const std::string_view head = s.substr(0, star);
        if (head.empty()) throw std::invalid_argument("TowerValue::parse: empty scale");
        scale = BigNat::from_decimal(head).to_u64();
        s.remove_prefix(star + 1);
    }
    std::vector<std::string_view> parts;
    while (true) {
        const auto caret = s.find('^');
        if (caret == std::string_view::npos) {
            parts.push_back(s);
            break;
        }
        parts.push_back(s.substr(0, caret));
        s.remove_prefix(caret + 1);
    }
    for (const auto part : parts) {
        if (part.empty()) throw std::invalid_argument("TowerValue::parse: empty component");
    }
    TowerValue v = from_exact(BigNat::from_decimal(parts.back()));
    for (std::size_t i = parts.size() - 1; i-- > 0;) {
        if (parts[i] != "2") {
            throw std::invalid_argument("TowerValue::parse: tower base must be 2");
        }
        v = v.exp2();
    }
    return v.times(scale);
}

TowerValue tw(int i, std::uint64_t x) {
    if (i < 1) throw std::invalid_argument("tw: height must be >= 1");
    if (x < 1) throw std::invalid_argument("tw: base must be >= 1");
    TowerValue v = TowerValue::from_u64(x);
    for (int step = 1; step < i; ++step) v = v.exp2();
    return v;
}

TowerValue s_lower(int k) {
    if (k < 4) throw std::domain_error("s_lower: defined for k >= 4");
    return tw(k - 3, 2).times(4);
}

TowerValue s4_lower(int k) {
    if (k < 1) throw std::domain_error("s4_lower: defined for k >= 1");
    return tw(k, 2).times(4);
}

TowerValue bound_table(int k, BoundKind kind) {
    switch (kind) {
        case BoundKind::diag:
            if (k < 16) throw std::domain_error("bound_table: diag requires k >= 16");
            return s_lower(k / 4);
        case BoundKind::k1k2:
            if (k < 8) throw std::domain_error("bound_table: k1k2 requires k >= 8");
            return s_lower(k - 4);
        case BoundKind::k2k2:
            if (k < 5) throw std::domain_error("bound_table: k2k2 requires k >= 5");
            return s_lower(k - 1);
        case BoundKind::k1_2k1:
            if (k < 4) throw std::domain_error("bound_table: k1_2k1 requires k >= 4");
            return s_lower(k);
    }
    throw std::invalid_argument("bound_table: unknown kind");
}

}  // namespace ramseyforge
