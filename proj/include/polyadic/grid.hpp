#pragma once

#include "polyadic/bigint.hpp"
#include "polyadic/polyadic_int.hpp"

#include <optional>
#include <vector>

namespace polyadic {

/// A coset of the width-n principal ideal: all x with x = center (mod n).
/// Only the center's residue mod the width matters; equality is defined
/// accordingly. Construction requires the center deep enough to determine
/// that residue.
class Grid {
public:
    Grid(BigInt width, PolyadicInt center);

    const BigInt& width() const { return width_; }
    const PolyadicInt& center() const { return center_; }

    /// The center's residue mod the width; the canonical identifier.
    const BigInt& center_residue() const { return center_residue_; }

    /// Membership: (x - center) = 0 mod width. Throws insufficient_depth if
    /// x is too shallow for the width.
    bool contains(const PolyadicInt& x) const;

    /// Same width and congruent centers.
    bool operator==(const Grid& other) const {
        return width_ == other.width_ && center_residue_ == other.center_residue_;
    }

private:
    BigInt width_;
    PolyadicInt center_;
    BigInt center_residue_;
};

/// The N disjoint width-N grids centered at 0..N-1 that jointly cover
/// everything. Centers are embedded at the shallowest depth whose factorial
/// N divides unless a deeper one is requested.
std::vector<Grid> partition(const BigInt& n, std::optional<unsigned> depth = std::nullopt);

/// Splits the width-n! grid centered at k into the n+1 width-(n+1)! grids
/// centered at k + n!*m, m = 0..n. Requires 0 <= k < n!.
std::vector<Grid> refine(unsigned n, const BigInt& k);

enum class GridRelation { Absorbed, Disjoint };

/// For an inner grid whose width is a multiple of the outer's: Absorbed iff
/// the inner center lies in the outer grid (then the whole inner grid does),
/// Disjoint otherwise. Throws width_mismatch if the widths do not divide.
GridRelation grids_relation(const Grid& outer, const Grid& inner);

/// Intersection of two grids: empty iff the centers disagree mod the gcd of
/// the widths; otherwise the lcm-width grid through the common point.
std::optional<Grid> intersect(const Grid& a, const Grid& b);

} // namespace polyadic
