#include "polyadic/bigint.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace polyadic {

BigInt factorial(unsigned n) {
    BigInt result = 1;
    for (unsigned i = 2; i <= n; ++i) {
        result *= i;
    }
    return result;
}

BigInt mod_floor(const BigInt& a, const BigInt& m) {
    if (m < 1) {
        throw std::invalid_argument("mod_floor: modulus must be positive");
    }
    BigInt r = a % m;
    if (r < 0) {
        r += m;
    }
    return r;
}

BigInt extended_gcd(const BigInt& a, const BigInt& b, BigInt& x, BigInt& y) {
    BigInt old_r = a, r = b;
    BigInt old_x = 1, cur_x = 0;
    BigInt old_y = 0, cur_y = 1;
    while (r != 0) {
        BigInt q = old_r / r;
        BigInt tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_x - q * cur_x;
        old_x = cur_x;
        cur_x = tmp;
        tmp = old_y - q * cur_y;
        old_y = cur_y;
        cur_y = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_x = -old_x;
        old_y = -old_y;
    }
    x = old_x;
    y = old_y;
    return old_r;
}

std::optional<unsigned> min_depth_for_modulus(const BigInt& n, unsigned max_depth) {
    if (n < 1) {
        throw std::invalid_argument("min_depth_for_modulus: modulus must be positive");
    }
    BigInt fact = 1; // (K+1)! for K = 0
    for (unsigned depth = 0; depth <= max_depth; ++depth) {
        fact *= (depth + 1);
        if (fact % n == 0) {
            return depth;
        }
    }
    return std::nullopt;
}

bool fits_int64(const BigInt& v) {
    static const BigInt lo = std::numeric_limits<std::int64_t>::min();
    static const BigInt hi = std::numeric_limits<std::int64_t>::max();
    return v >= lo && v <= hi;
}

std::vector<BigInt> factorial_divisors(unsigned n) {
    const BigInt fact = factorial(n);
    std::vector<BigInt> divisors{1};
    for (unsigned p = 2; p <= n; ++p) {
        bool is_prime = true;
        for (unsigned q = 2; q * q <= p; ++q) {
            if (p % q == 0) {
                is_prime = false;
                break;
            }
        }
        if (!is_prime) {
            continue;
        }
        unsigned exponent = 0;
        for (BigInt pw = p; fact % pw == 0; pw *= p) {
            ++exponent;
        }
        const std::size_t base_count = divisors.size();
        BigInt pw = 1;
        for (unsigned e = 1; e <= exponent; ++e) {
            pw *= p;
            for (std::size_t i = 0; i < base_count; ++i) {
                divisors.push_back(divisors[i] * pw);
            }
        }
    }
    std::sort(divisors.begin(), divisors.end());
    return divisors;
}

} // namespace polyadic
