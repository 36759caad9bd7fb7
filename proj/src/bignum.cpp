#include "tclass/bignum.hpp"

#include <array>
#include <cstdio>

namespace tclass {

namespace {
constexpr std::uint64_t kBase = 1'000'000'000;
}

BigUint::BigUint(std::uint64_t v) {
    do {
        limbs_.push_back(static_cast<std::uint32_t>(v % kBase));
        v /= kBase;
    } while (v);
}

void BigUint::trim() {
    while (limbs_.size() > 1 && limbs_.back() == 0) limbs_.pop_back();
}

BigUint& BigUint::operator*=(std::uint64_t f) {
    unsigned __int128 carry = 0;
    for (auto& limb : limbs_) {
        const unsigned __int128 p = static_cast<unsigned __int128>(limb) * f + carry;
        limb = static_cast<std::uint32_t>(p % kBase);
        carry = p / kBase;
    }
    while (carry) {
        limbs_.push_back(static_cast<std::uint32_t>(carry % kBase));
        carry /= kBase;
    }
    trim();
    return *this;
}

std::string BigUint::str() const {
    std::string out = std::to_string(limbs_.back());
    std::array<char, 16> buf{};
    for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
        std::snprintf(buf.data(), buf.size(), "%09u", limbs_[i]);
        out += buf.data();
    }
    return out;
}

std::optional<std::uint64_t> BigUint::to_u64() const {
    unsigned __int128 acc = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        acc = acc * kBase + limbs_[i];
        if (acc > ~std::uint64_t{0}) return std::nullopt;
    }
    return static_cast<std::uint64_t>(acc);
}

bool exceeds(const BigUint& v, std::uint64_t cap) {
    const auto u = v.to_u64();
    return !u || *u > cap;
}

}  // namespace tclass
