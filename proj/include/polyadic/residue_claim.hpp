#pragma once

#include "polyadic/bigint.hpp"

namespace polyadic {

/// A single congruence "x = residue (mod modulus)". The lattice of claims
/// under crt_lift carries the coherence structure of a residue tower.
class ResidueClaim {
public:
    /// Normalizes the residue into [0, modulus); modulus must be positive.
    ResidueClaim(BigInt modulus, BigInt residue);

    const BigInt& modulus() const { return modulus_; }
    const BigInt& residue() const { return residue_; }

    /// The induced claim mod d, for d | modulus.
    ResidueClaim reduced(const BigInt& d) const;

    bool operator==(const ResidueClaim& other) const = default;

private:
    BigInt modulus_;
    BigInt residue_;
};

/// Merges two claims into one mod lcm(m, n). Throws incompatible_residues
/// iff the residues disagree mod gcd(m, n).
ResidueClaim crt_lift(const ResidueClaim& a, const ResidueClaim& b);

} // namespace polyadic
