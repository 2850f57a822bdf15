#include "polyadic/character.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace polyadic {

Character conv_plus(const Character& phi, const Character& psi) {
    return Character(phi.tower_of() + psi.tower_of());
}

Character conv_dot(const Character& phi, const Character& psi) {
    return Character(phi.tower_of() * psi.tower_of());
}

Character reflect(const Character& psi) {
    return Character(-psi.tower_of());
}

Complex direct_product_apply(const Character& phi, const Character& psi,
                             const SymmetricBiPeriodicFunction& w) {
    const BigInt p = w.period();
    return w.value_at(phi.kappa(p), psi.kappa(p));
}

GelfandNeighborhood::GelfandNeighborhood(Character anchor, PeriodicFunction test_function,
                                         double radius)
    : anchor_(std::move(anchor)), test_function_(std::move(test_function)), radius_(radius) {
    if (!(radius_ > 0.0)) {
        throw std::invalid_argument("GelfandNeighborhood: radius must be positive");
    }
}

bool gelfand_contains(const GelfandNeighborhood& nbhd, const Character& phi) {
    return std::abs(phi.eval(nbhd.test_function()) - nbhd.anchor().eval(nbhd.test_function())) <
           nbhd.radius();
}

} // namespace polyadic
