#pragma once

#include "polyadic/bigint.hpp"
#include "polyadic/factorial_digits.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace polyadic {

/// A polyadic integer truncated at depth K: the residue class mod (K+1)!,
/// stored in its canonical factorial-digit form. Values are immutable;
/// arithmetic on operands of unequal depth truncates to the shallower one,
/// and the result's depth records the truncation.
class PolyadicInt {
public:
    /// Depth-0 zero (the class mod 1! -- a single point).
    PolyadicInt() : PolyadicInt(FactorialDigits{}) {}

    explicit PolyadicInt(FactorialDigits digits);

    /// Canonical embedding of an integer: the class of m mod (depth+1)!.
    /// Negative integers reduce modularly, so embed(-1, K) has all digits
    /// maximal.
    static PolyadicInt embed(const BigInt& m, unsigned depth);

    /// Inverse of to_digits; digit bounds are enforced by FactorialDigits.
    static PolyadicInt from_digits(const FactorialDigits& digits) { return PolyadicInt(digits); }

    unsigned depth() const { return digits_.depth(); }
    const FactorialDigits& to_digits() const { return digits_; }

    /// Canonical residue in [0, (depth+1)!).
    const BigInt& value() const { return value_; }

    /// (depth+1)!, the modulus of this truncation level.
    BigInt modulus() const { return factorial(depth() + 1); }

    /// Residue in [0, n). Defined exactly when n | (depth+1)!; otherwise the
    /// class does not determine the residue and insufficient_depth is thrown.
    BigInt residue_mod(const BigInt& n) const;

    /// Restriction to a shallower depth d <= depth (digit prefix).
    PolyadicInt truncated(unsigned d) const;

    /// True iff the residues mod (d+1)! agree. Requires d <= both depths.
    bool eq_at_depth(const PolyadicInt& other, unsigned d) const;

    /// Division with remainder by a positive integer n: alpha = n*gamma + r
    /// with 0 <= r < n. gamma is returned at the deepest depth Kp for which
    /// n*(Kp+1)! divides (depth+1)!; throws insufficient_depth if no such
    /// depth exists.
    std::pair<PolyadicInt, BigInt> div_rem(const BigInt& n) const;

    /// The k low digits of the base-p expansion of this class, least
    /// significant first. Requires p >= 2 and p^k | (depth+1)!.
    std::vector<std::uint32_t> padic_digits(const BigInt& p, unsigned k) const;

    PolyadicInt operator+(const PolyadicInt& other) const;
    PolyadicInt operator-() const;
    PolyadicInt operator-(const PolyadicInt& other) const { return *this + (-other); }
    PolyadicInt operator*(const PolyadicInt& other) const;

    /// Canonical-form equality: same depth and same digits.
    bool operator==(const PolyadicInt& other) const = default;

private:
    FactorialDigits digits_;
    BigInt value_; // cached digits_.value(); the two never diverge
};

} // namespace polyadic
