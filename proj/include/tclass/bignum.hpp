#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tclass {

/// Unsigned big integer, base 10^9 limbs. Just enough arithmetic for exact
/// group-order formulas; orders are reported as decimal strings.
class BigUint {
public:
    BigUint() : limbs_{0} {}
    BigUint(std::uint64_t v);  // NOLINT: implicit by design

    BigUint& operator*=(std::uint64_t f);

    std::string str() const;
    std::optional<std::uint64_t> to_u64() const;

    friend bool operator==(const BigUint&, const BigUint&) = default;

private:
    // little-endian, base 1e9
    std::vector<std::uint32_t> limbs_;
    void trim();
};

/// true when v cannot be represented in, or exceeds, the 64-bit cap.
bool exceeds(const BigUint& v, std::uint64_t cap);

}  // namespace tclass
