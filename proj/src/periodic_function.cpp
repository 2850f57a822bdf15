#include "polyadic/periodic_function.hpp"

#include "polyadic/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace polyadic {

namespace {

std::int64_t common_period(std::int64_t p, std::int64_t q) {
    const std::int64_t l = std::lcm(p, q);
    if (l > PeriodicFunction::max_period) {
        throw std::length_error("common period " + std::to_string(l) + " exceeds the cap");
    }
    return l;
}

} // namespace

PeriodicFunction::PeriodicFunction(std::int64_t period, std::vector<Complex> values)
    : period_(period), values_(std::move(values)) {
    if (period_ < 1 || period_ > max_period) {
        throw std::invalid_argument("PeriodicFunction: period must be in [1, 2^22]");
    }
    if (static_cast<std::int64_t>(values_.size()) != period_) {
        throw std::invalid_argument("PeriodicFunction: need exactly one value per residue");
    }
}

PeriodicFunction PeriodicFunction::indicator(std::int64_t p, std::int64_t m) {
    if (m < 0 || m >= p) {
        throw index_out_of_range("indicator: residue " + std::to_string(m) +
                                 " outside [0, " + std::to_string(p) + ")");
    }
    std::vector<Complex> values(static_cast<std::size_t>(p), Complex{0.0, 0.0});
    values[static_cast<std::size_t>(m)] = Complex{1.0, 0.0};
    return PeriodicFunction(p, std::move(values));
}

PeriodicFunction PeriodicFunction::res_function(std::int64_t p) {
    std::vector<Complex> values(static_cast<std::size_t>(p));
    for (std::int64_t k = 0; k < p; ++k) {
        values[static_cast<std::size_t>(k)] = Complex{static_cast<double>(k), 0.0};
    }
    return PeriodicFunction(p, std::move(values));
}

PeriodicFunction PeriodicFunction::constant(std::int64_t p, Complex z) {
    return PeriodicFunction(p, std::vector<Complex>(static_cast<std::size_t>(p), z));
}

Complex PeriodicFunction::value_at(std::int64_t k) const {
    std::int64_t r = k % period_;
    if (r < 0) {
        r += period_;
    }
    return values_[static_cast<std::size_t>(r)];
}

Complex PeriodicFunction::value_at(const BigInt& k) const {
    return values_[static_cast<std::size_t>(mod_floor(k, period_).convert_to<std::int64_t>())];
}

PeriodicFunction PeriodicFunction::rebased(std::int64_t q) const {
    if (q < 1 || q % period_ != 0) {
        throw std::invalid_argument("rebased: target period must be a multiple of the period");
    }
    std::vector<Complex> values(static_cast<std::size_t>(q));
    for (std::int64_t k = 0; k < q; ++k) {
        values[static_cast<std::size_t>(k)] = values_[static_cast<std::size_t>(k % period_)];
    }
    return PeriodicFunction(q, std::move(values));
}

double PeriodicFunction::uniform_norm() const {
    double best = 0.0;
    for (const Complex& z : values_) {
        best = std::max(best, std::abs(z));
    }
    return best;
}

PeriodicFunction PeriodicFunction::conjugate() const {
    std::vector<Complex> values(values_.size());
    std::transform(values_.begin(), values_.end(), values.begin(),
                   [](const Complex& z) { return std::conj(z); });
    return PeriodicFunction(period_, std::move(values));
}

PeriodicFunction PeriodicFunction::operator+(const PeriodicFunction& other) const {
    const std::int64_t l = common_period(period_, other.period_);
    std::vector<Complex> values(static_cast<std::size_t>(l));
    for (std::int64_t k = 0; k < l; ++k) {
        values[static_cast<std::size_t>(k)] = value_at(k) + other.value_at(k);
    }
    return PeriodicFunction(l, std::move(values));
}

PeriodicFunction PeriodicFunction::operator-(const PeriodicFunction& other) const {
    return *this + (other * Complex{-1.0, 0.0});
}

PeriodicFunction PeriodicFunction::operator*(const PeriodicFunction& other) const {
    const std::int64_t l = common_period(period_, other.period_);
    std::vector<Complex> values(static_cast<std::size_t>(l));
    for (std::int64_t k = 0; k < l; ++k) {
        values[static_cast<std::size_t>(k)] = value_at(k) * other.value_at(k);
    }
    return PeriodicFunction(l, std::move(values));
}

PeriodicFunction PeriodicFunction::operator*(Complex scalar) const {
    std::vector<Complex> values(values_.size());
    std::transform(values_.begin(), values_.end(), values.begin(),
                   [scalar](const Complex& z) { return scalar * z; });
    return PeriodicFunction(period_, std::move(values));
}

bool approx_equal(const PeriodicFunction& u, const PeriodicFunction& v, double tol) {
    const std::int64_t l = common_period(u.period(), v.period());
    for (std::int64_t k = 0; k < l; ++k) {
        if (std::abs(u.value_at(k) - v.value_at(k)) > tol) {
            return false;
        }
    }
    return true;
}

} // namespace polyadic
