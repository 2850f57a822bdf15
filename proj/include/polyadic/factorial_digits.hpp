#pragma once

#include "polyadic/bigint.hpp"

#include <cstdint>
#include <vector>

namespace polyadic {

/// Mixed-radix digits of the factorial number system. digits()[r-1] is the
/// digit of weight r!, constrained to 0 <= digit <= r. A vector of K digits
/// encodes exactly the integers in [0, (K+1)!).
class FactorialDigits {
public:
    FactorialDigits() = default;

    /// Validates the digit bounds; throws digit_out_of_range on violation.
    explicit FactorialDigits(std::vector<std::uint32_t> digits);

    unsigned depth() const { return static_cast<unsigned>(digits_.size()); }
    const std::vector<std::uint32_t>& digits() const { return digits_; }

    /// The represented value: sum of digit_r * r!, in [0, (depth+1)! - 1].
    BigInt value() const;

    /// Digits of value v (which must lie in [0, (depth+1)!)) at the given depth.
    static FactorialDigits of_value(const BigInt& v, unsigned depth);

    bool operator==(const FactorialDigits& other) const = default;

private:
    std::vector<std::uint32_t> digits_;
};

} // namespace polyadic
