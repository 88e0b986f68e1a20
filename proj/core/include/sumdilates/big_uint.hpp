#pragma once

#include <cstdint>
#include <vector>

namespace sumdilates {

/// Minimal arbitrary-width unsigned integer: just enough to evaluate
/// |S| * den^E <= |A| * num^E without rounding. Little-endian 64-bit limbs,
/// no trailing zero limbs, empty vector means zero.
class BigUint {
public:
    BigUint() = default;

    static BigUint from(std::uint64_t v) {
        BigUint b;
        if (v != 0) b.limbs_.push_back(v);
        return b;
    }

    static BigUint pow(std::uint64_t base, std::uint64_t exp) {
        BigUint b = from(1);
        for (std::uint64_t i = 0; i < exp; ++i) b *= base;
        return b;
    }

    BigUint& operator*=(std::uint64_t m) {
        if (m == 0) {
            limbs_.clear();
            return *this;
        }
        using u128 = unsigned __int128;
        std::uint64_t carry = 0;
        for (auto& limb : limbs_) {
            const u128 prod = static_cast<u128>(limb) * m + carry;
            limb = static_cast<std::uint64_t>(prod);
            carry = static_cast<std::uint64_t>(prod >> 64);
        }
        if (carry) limbs_.push_back(carry);
        return *this;
    }

    /// Sign of a - b.
    static int compare(const BigUint& a, const BigUint& b) {
        if (a.limbs_.size() != b.limbs_.size()) {
            return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
        }
        for (std::size_t i = a.limbs_.size(); i-- > 0;) {
            if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
        }
        return 0;
    }

    const std::vector<std::uint64_t>& limbs() const { return limbs_; }

private:
    std::vector<std::uint64_t> limbs_;
};

} // namespace sumdilates
