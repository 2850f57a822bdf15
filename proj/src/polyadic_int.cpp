#include "polyadic/polyadic_int.hpp"

#include "polyadic/errors.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace polyadic {

namespace {

std::string describe(const BigInt& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

} // namespace

PolyadicInt::PolyadicInt(FactorialDigits digits)
    : digits_(std::move(digits)), value_(digits_.value()) {}

PolyadicInt PolyadicInt::embed(const BigInt& m, unsigned depth) {
    return PolyadicInt(FactorialDigits::of_value(mod_floor(m, factorial(depth + 1)), depth));
}

BigInt PolyadicInt::residue_mod(const BigInt& n) const {
    if (n < 1) {
        throw std::invalid_argument("residue_mod: modulus must be positive");
    }
    if (modulus() % n != 0) {
        throw insufficient_depth("residue mod " + describe(n) + " is not determined at depth " +
                                 std::to_string(depth()));
    }
    return value_ % n;
}

PolyadicInt PolyadicInt::truncated(unsigned d) const {
    if (d > depth()) {
        throw insufficient_depth("cannot truncate depth " + std::to_string(depth()) +
                                 " to deeper level " + std::to_string(d));
    }
    const auto& ds = digits_.digits();
    return PolyadicInt(FactorialDigits(std::vector<std::uint32_t>(ds.begin(), ds.begin() + d)));
}

bool PolyadicInt::eq_at_depth(const PolyadicInt& other, unsigned d) const {
    if (d > depth() || d > other.depth()) {
        throw insufficient_depth("eq_at_depth: level " + std::to_string(d) +
                                 " exceeds an operand depth");
    }
    const auto& a = digits_.digits();
    const auto& b = other.digits_.digits();
    return std::equal(a.begin(), a.begin() + d, b.begin(), b.begin() + d);
}

std::pair<PolyadicInt, BigInt> PolyadicInt::div_rem(const BigInt& n) const {
    if (n < 1) {
        throw std::invalid_argument("div_rem: divisor must be positive");
    }
    const BigInt mod = modulus();
    if (mod % n != 0) {
        throw insufficient_depth("div_rem by " + describe(n) + " needs " + describe(n) +
                                 " | (K+1)!; depth " + std::to_string(depth()) +
                                 " is too shallow");
    }
    // Deepest Kp with n*(Kp+1)! | (K+1)!.
    const BigInt quota = mod / n;
    unsigned out_depth = 0;
    BigInt fact = 1;
    while (true) {
        BigInt next = fact * (out_depth + 2);
        if (quota % next != 0) {
            break;
        }
        fact = next;
        ++out_depth;
    }
    BigInt r = value_ % n;
    BigInt q = (value_ - r) / n;
    return {embed(q, out_depth), r};
}

std::vector<std::uint32_t> PolyadicInt::padic_digits(const BigInt& p, unsigned k) const {
    if (p < 2) {
        throw std::invalid_argument("padic_digits: radix must be at least 2");
    }
    BigInt pk = 1;
    for (unsigned i = 0; i < k; ++i) {
        pk *= p;
    }
    if (modulus() % pk != 0) {
        throw insufficient_depth(describe(p) + "^" + std::to_string(k) +
                                 " does not divide (K+1)! at depth " + std::to_string(depth()));
    }
    BigInt rest = value_ % pk;
    std::vector<std::uint32_t> out(k);
    for (unsigned i = 0; i < k; ++i) {
        out[i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
    }
    return out;
}

PolyadicInt PolyadicInt::operator+(const PolyadicInt& other) const {
    const unsigned d = std::min(depth(), other.depth());
    return embed(value_ + other.value_, d);
}

PolyadicInt PolyadicInt::operator-() const {
    return embed(-value_, depth());
}

PolyadicInt PolyadicInt::operator*(const PolyadicInt& other) const {
    const unsigned d = std::min(depth(), other.depth());
    return embed(value_ * other.value_, d);
}

} // namespace polyadic
