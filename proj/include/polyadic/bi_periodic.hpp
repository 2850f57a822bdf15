#pragma once

#include "polyadic/periodic_function.hpp"

#include <cstdint>
#include <vector>

namespace polyadic {

/// A function on Z x Z, p-periodic in each argument and symmetric under
/// swapping them: w(j, k) = w(k, j). Stored as the p x p value matrix.
class SymmetricBiPeriodicFunction {
public:
    /// Validates symmetry of the matrix (row-major, p*p entries).
    SymmetricBiPeriodicFunction(std::int64_t period, std::vector<Complex> values);

    std::int64_t period() const { return period_; }
    const std::vector<Complex>& values() const { return values_; }

    Complex value_at(std::int64_t j, std::int64_t k) const;
    Complex value_at(const BigInt& j, const BigInt& k) const;

    SymmetricBiPeriodicFunction rebased(std::int64_t q) const;

    /// Pointwise product; periods are rebased to their lcm.
    SymmetricBiPeriodicFunction operator*(const SymmetricBiPeriodicFunction& other) const;

private:
    std::int64_t period_;
    std::vector<Complex> values_; // row-major period_ x period_
};

/// (s u)(x, y) = u(x + y).
SymmetricBiPeriodicFunction sym_from_sum(const PeriodicFunction& u);

/// (p u)(x, y) = u(x * y).
SymmetricBiPeriodicFunction sym_from_product(const PeriodicFunction& u);

/// (n u)(x) = u(-x).
PeriodicFunction reflect_fn(const PeriodicFunction& u);

/// Coefficients of w in the product-indicator basis e_j^p(x) e_k^p(y); these
/// are exactly the matrix entries w(j, k).
std::vector<Complex> sym_basis_expand(const SymmetricBiPeriodicFunction& w);

} // namespace polyadic
