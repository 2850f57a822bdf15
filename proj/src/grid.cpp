#include "polyadic/grid.hpp"

#include "polyadic/errors.hpp"
#include "polyadic/residue_claim.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace polyadic {

namespace {

unsigned depth_for(const BigInt& modulus) {
    const auto depth = min_depth_for_modulus(modulus);
    if (!depth) {
        std::ostringstream os;
        os << "modulus " << modulus << " needs an impractically deep tower";
        throw insufficient_depth(os.str());
    }
    return *depth;
}

} // namespace

Grid::Grid(BigInt width, PolyadicInt center) : width_(std::move(width)), center_(std::move(center)) {
    if (width_ < 1) {
        throw std::invalid_argument("Grid: width must be positive");
    }
    center_residue_ = center_.residue_mod(width_); // throws if the center is too shallow
}

bool Grid::contains(const PolyadicInt& x) const {
    return (x - center_).residue_mod(width_) == 0;
}

std::vector<Grid> partition(const BigInt& n, std::optional<unsigned> depth) {
    if (n < 1) {
        throw std::invalid_argument("partition: width must be positive");
    }
    const unsigned d = depth ? *depth : depth_for(n);
    std::vector<Grid> grids;
    for (BigInt r = 0; r < n; ++r) {
        grids.emplace_back(n, PolyadicInt::embed(r, d));
    }
    return grids;
}

std::vector<Grid> refine(unsigned n, const BigInt& k) {
    const BigInt base = factorial(n);
    if (k < 0 || k >= base) {
        std::ostringstream os;
        os << "refine: center " << k << " outside [0, " << n << "!)";
        throw index_out_of_range(os.str());
    }
    const BigInt width = factorial(n + 1);
    std::vector<Grid> grids;
    for (unsigned m = 0; m <= n; ++m) {
        grids.emplace_back(width, PolyadicInt::embed(k + base * m, n));
    }
    return grids;
}

GridRelation grids_relation(const Grid& outer, const Grid& inner) {
    if (inner.width() % outer.width() != 0) {
        std::ostringstream os;
        os << "grids_relation: outer width " << outer.width() << " does not divide inner width "
           << inner.width();
        throw width_mismatch(os.str());
    }
    return outer.contains(inner.center()) ? GridRelation::Absorbed : GridRelation::Disjoint;
}

std::optional<Grid> intersect(const Grid& a, const Grid& b) {
    ResidueClaim lifted(1, 0);
    try {
        lifted = crt_lift(ResidueClaim(a.width(), a.center_residue()),
                          ResidueClaim(b.width(), b.center_residue()));
    } catch (const incompatible_residues&) {
        return std::nullopt;
    }
    return Grid(lifted.modulus(), PolyadicInt::embed(lifted.residue(), depth_for(lifted.modulus())));
}

} // namespace polyadic
