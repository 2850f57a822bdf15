#include "polyadic/factorial_digits.hpp"

#include "polyadic/errors.hpp"

#include <stdexcept>
#include <string>

namespace polyadic {

FactorialDigits::FactorialDigits(std::vector<std::uint32_t> digits) : digits_(std::move(digits)) {
    for (std::size_t i = 0; i < digits_.size(); ++i) {
        const auto radix = static_cast<std::uint32_t>(i + 1);
        if (digits_[i] > radix) {
            throw digit_out_of_range("factorial digit nu_" + std::to_string(i + 1) + " = " +
                                     std::to_string(digits_[i]) + " exceeds its bound " +
                                     std::to_string(radix));
        }
    }
}

BigInt FactorialDigits::value() const {
    BigInt acc = 0;
    BigInt weight = 1; // r!
    for (std::size_t i = 0; i < digits_.size(); ++i) {
        weight *= (i + 1);
        acc += weight * digits_[i];
    }
    return acc;
}

FactorialDigits FactorialDigits::of_value(const BigInt& v, unsigned depth) {
    if (v < 0) {
        throw std::invalid_argument("FactorialDigits::of_value: value must be non-negative");
    }
    // Peeling remainders in radix r+1 yields the unique digit vector.
    std::vector<std::uint32_t> digits(depth);
    BigInt rest = v;
    for (unsigned r = 1; r <= depth; ++r) {
        const BigInt radix = r + 1;
        digits[r - 1] = static_cast<std::uint32_t>(rest % radix);
        rest /= radix;
    }
    if (rest != 0) {
        throw std::invalid_argument("FactorialDigits::of_value: value does not fit in depth " +
                                    std::to_string(depth));
    }
    return FactorialDigits(std::move(digits));
}

} // namespace polyadic
