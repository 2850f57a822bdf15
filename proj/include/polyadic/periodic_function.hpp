#pragma once

#include "polyadic/bigint.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace polyadic {

using Complex = std::complex<double>;

/// A periodic complex function on the integers, given by its period p >= 1
/// and the p values on [0, p). The stored period need not be minimal;
/// equality is decided after rebasing both sides to the lcm period.
class PeriodicFunction {
public:
    /// Period caps keep lcm rebasing from allocating unboundedly.
    static constexpr std::int64_t max_period = std::int64_t{1} << 22;

    PeriodicFunction(std::int64_t period, std::vector<Complex> values);

    /// Indicator of the residue class m mod p.
    static PeriodicFunction indicator(std::int64_t p, std::int64_t m);

    /// The residue map k -> k mod p, i.e. values [0, 1, ..., p-1].
    static PeriodicFunction res_function(std::int64_t p);

    static PeriodicFunction constant(std::int64_t p, Complex z);

    /// The unit of the algebra: constant 1 with period 1.
    static PeriodicFunction unit() { return constant(1, Complex{1.0, 0.0}); }

    std::int64_t period() const { return period_; }
    const std::vector<Complex>& values() const { return values_; }

    /// Value at any integer argument, negative included.
    Complex value_at(std::int64_t k) const;
    Complex value_at(const BigInt& k) const;

    /// Coefficients in the indicator basis; identical to the value list.
    std::vector<Complex> decompose() const { return values_; }

    /// The same function re-indexed over a period q that p divides.
    PeriodicFunction rebased(std::int64_t q) const;

    /// sup |u(k)|.
    double uniform_norm() const;

    PeriodicFunction conjugate() const;
    PeriodicFunction operator+(const PeriodicFunction& other) const;
    PeriodicFunction operator-(const PeriodicFunction& other) const;
    PeriodicFunction operator*(const PeriodicFunction& other) const;
    PeriodicFunction operator*(Complex scalar) const;

private:
    std::int64_t period_;
    std::vector<Complex> values_;
};

inline PeriodicFunction operator*(Complex scalar, const PeriodicFunction& u) { return u * scalar; }

/// Pointwise comparison over the common (lcm) period, with absolute
/// tolerance per component.
bool approx_equal(const PeriodicFunction& u, const PeriodicFunction& v, double tol = 1e-9);

} // namespace polyadic
