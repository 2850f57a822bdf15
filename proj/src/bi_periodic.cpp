#include "polyadic/bi_periodic.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace polyadic {

namespace {

std::size_t idx(std::int64_t p, std::int64_t j, std::int64_t k) {
    return static_cast<std::size_t>(j * p + k);
}

std::int64_t wrap(std::int64_t k, std::int64_t p) {
    std::int64_t r = k % p;
    return r < 0 ? r + p : r;
}

} // namespace

SymmetricBiPeriodicFunction::SymmetricBiPeriodicFunction(std::int64_t period,
                                                         std::vector<Complex> values)
    : period_(period), values_(std::move(values)) {
    if (period_ < 1 || period_ > PeriodicFunction::max_period) {
        throw std::invalid_argument("SymmetricBiPeriodicFunction: period must be in [1, 2^22]");
    }
    if (values_.size() != static_cast<std::size_t>(period_) * static_cast<std::size_t>(period_)) {
        throw std::invalid_argument("SymmetricBiPeriodicFunction: need a p x p value matrix");
    }
    for (std::int64_t j = 0; j < period_; ++j) {
        for (std::int64_t k = j + 1; k < period_; ++k) {
            if (values_[idx(period_, j, k)] != values_[idx(period_, k, j)]) {
                throw std::invalid_argument("SymmetricBiPeriodicFunction: matrix is not symmetric");
            }
        }
    }
}

Complex SymmetricBiPeriodicFunction::value_at(std::int64_t j, std::int64_t k) const {
    return values_[idx(period_, wrap(j, period_), wrap(k, period_))];
}

Complex SymmetricBiPeriodicFunction::value_at(const BigInt& j, const BigInt& k) const {
    return values_[idx(period_, mod_floor(j, period_).convert_to<std::int64_t>(),
                       mod_floor(k, period_).convert_to<std::int64_t>())];
}

SymmetricBiPeriodicFunction SymmetricBiPeriodicFunction::rebased(std::int64_t q) const {
    if (q < 1 || q % period_ != 0) {
        throw std::invalid_argument("rebased: target period must be a multiple of the period");
    }
    std::vector<Complex> values(static_cast<std::size_t>(q) * static_cast<std::size_t>(q));
    for (std::int64_t j = 0; j < q; ++j) {
        for (std::int64_t k = 0; k < q; ++k) {
            values[idx(q, j, k)] = values_[idx(period_, j % period_, k % period_)];
        }
    }
    return SymmetricBiPeriodicFunction(q, std::move(values));
}

SymmetricBiPeriodicFunction
SymmetricBiPeriodicFunction::operator*(const SymmetricBiPeriodicFunction& other) const {
    const std::int64_t l = std::lcm(period_, other.period_);
    if (l > PeriodicFunction::max_period) {
        throw std::length_error("common period " + std::to_string(l) + " exceeds the cap");
    }
    std::vector<Complex> values(static_cast<std::size_t>(l) * static_cast<std::size_t>(l));
    for (std::int64_t j = 0; j < l; ++j) {
        for (std::int64_t k = 0; k < l; ++k) {
            values[idx(l, j, k)] = value_at(j, k) * other.value_at(j, k);
        }
    }
    return SymmetricBiPeriodicFunction(l, std::move(values));
}

SymmetricBiPeriodicFunction sym_from_sum(const PeriodicFunction& u) {
    const std::int64_t p = u.period();
    std::vector<Complex> values(static_cast<std::size_t>(p) * static_cast<std::size_t>(p));
    for (std::int64_t j = 0; j < p; ++j) {
        for (std::int64_t k = 0; k < p; ++k) {
            values[idx(p, j, k)] = u.value_at(j + k);
        }
    }
    return SymmetricBiPeriodicFunction(p, std::move(values));
}

SymmetricBiPeriodicFunction sym_from_product(const PeriodicFunction& u) {
    const std::int64_t p = u.period();
    std::vector<Complex> values(static_cast<std::size_t>(p) * static_cast<std::size_t>(p));
    for (std::int64_t j = 0; j < p; ++j) {
        for (std::int64_t k = 0; k < p; ++k) {
            values[idx(p, j, k)] = u.value_at(j * k);
        }
    }
    return SymmetricBiPeriodicFunction(p, std::move(values));
}

PeriodicFunction reflect_fn(const PeriodicFunction& u) {
    const std::int64_t p = u.period();
    std::vector<Complex> values(static_cast<std::size_t>(p));
    for (std::int64_t k = 0; k < p; ++k) {
        values[static_cast<std::size_t>(k)] = u.value_at(-k);
    }
    return PeriodicFunction(p, std::move(values));
}

std::vector<Complex> sym_basis_expand(const SymmetricBiPeriodicFunction& w) {
    return w.values();
}

} // namespace polyadic
