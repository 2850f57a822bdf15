#pragma once

#include "polyadic/bi_periodic.hpp"
#include "polyadic/periodic_function.hpp"
#include "polyadic/polyadic_int.hpp"

namespace polyadic {

/// A multiplicative linear functional on the algebra of periodic functions,
/// truncated at finite depth. The residue tower kappa(n) for n | (K+1)! is a
/// complete invariant, so the character is stored as its tower and
/// evaluation is derived: psi(u) = u(kappa(period)).
class Character {
public:
    explicit Character(PolyadicInt tower) : tower_(std::move(tower)) {}

    /// The ring isomorphism from truncated polyadic integers to characters.
    static Character char_of(const PolyadicInt& alpha) { return Character(alpha); }

    /// Additive neutral: evaluation at 0.
    static Character theta(unsigned depth) { return Character(PolyadicInt::embed(0, depth)); }

    /// Multiplicative neutral: evaluation at 1.
    static Character epsilon(unsigned depth) { return Character(PolyadicInt::embed(1, depth)); }

    /// Inverse of char_of.
    const PolyadicInt& tower_of() const { return tower_; }

    unsigned depth() const { return tower_.depth(); }

    /// The unique k in [0, n) with psi = delta_k on n-periodic functions.
    BigInt kappa(const BigInt& n) const { return tower_.residue_mod(n); }

    /// psi(u) = u(kappa(p)). Requires u.period | (depth+1)!.
    Complex eval(const PeriodicFunction& u) const { return u.value_at(kappa(u.period())); }

    /// True iff the two characters coincide on all n-periodic functions.
    bool cluster_equal(const Character& other, const BigInt& n) const {
        return kappa(n) == other.kappa(n);
    }

    bool operator==(const Character& other) const = default;

private:
    PolyadicInt tower_;
};

/// Plus-convolution: (phi (+) psi)(u) = phi_x psi_y u(x + y). On towers this
/// is addition; operands of unequal depth truncate to the shallower one.
Character conv_plus(const Character& phi, const Character& psi);

/// Dot-convolution: (phi (.) psi)(u) = phi_x psi_y u(x * y); tower product.
Character conv_dot(const Character& phi, const Character& psi);

/// Reflection: (-psi)(u) = psi_x u(-x); tower negation.
Character reflect(const Character& psi);

/// The direct product applied to a symmetric bi-periodic function:
/// (phi (x) psi) w = w(kappa_phi(p), kappa_psi(p)), equal to the expansion
/// sum over w(j, k) phi(e_j^p) psi(e_k^p).
Complex direct_product_apply(const Character& phi, const Character& psi,
                             const SymmetricBiPeriodicFunction& w);

/// A subbasic Gelfand neighborhood of `anchor`: all characters phi with
/// |phi(test_function) - anchor(test_function)| < radius.
class GelfandNeighborhood {
public:
    GelfandNeighborhood(Character anchor, PeriodicFunction test_function, double radius);

    const Character& anchor() const { return anchor_; }
    const PeriodicFunction& test_function() const { return test_function_; }
    double radius() const { return radius_; }

private:
    Character anchor_;
    PeriodicFunction test_function_;
    double radius_;
};

/// Strict-inequality membership test |phi(u) - psi(u)| < R.
bool gelfand_contains(const GelfandNeighborhood& nbhd, const Character& phi);

} // namespace polyadic
