#include "polyadic/residue_claim.hpp"

#include "polyadic/errors.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace polyadic {

ResidueClaim::ResidueClaim(BigInt modulus, BigInt residue) : modulus_(std::move(modulus)) {
    if (modulus_ < 1) {
        throw std::invalid_argument("ResidueClaim: modulus must be positive");
    }
    residue_ = mod_floor(residue, modulus_);
}

ResidueClaim ResidueClaim::reduced(const BigInt& d) const {
    if (d < 1 || modulus_ % d != 0) {
        throw std::invalid_argument("ResidueClaim::reduced: divisor does not divide modulus");
    }
    return ResidueClaim(d, residue_ % d);
}

ResidueClaim crt_lift(const ResidueClaim& a, const ResidueClaim& b) {
    const BigInt& m = a.modulus();
    const BigInt& n = b.modulus();
    BigInt u, v;
    const BigInt g = extended_gcd(m, n, u, v);
    const BigInt diff = b.residue() - a.residue();
    if (diff % g != 0) {
        std::ostringstream os;
        os << "crt_lift: " << a.residue() << " mod " << m << " and " << b.residue() << " mod "
           << n << " disagree mod gcd = " << g;
        throw incompatible_residues(os.str());
    }
    const BigInt l = m / g * n;
    // x = a + m*t with t = (diff/g)*u mod (n/g) solves both congruences.
    const BigInt t = mod_floor(diff / g * u, n / g);
    return ResidueClaim(l, a.residue() + m * t);
}

} // namespace polyadic
