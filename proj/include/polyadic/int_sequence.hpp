#pragma once

#include "polyadic/bigint.hpp"
#include "polyadic/polyadic_int.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace polyadic {

/// A deterministic integer sequence alpha(1), alpha(2), ... given by a pure
/// generator. Finite sequences carry their length, which caps any horizon.
class IntSequence {
public:
    using Generator = std::function<BigInt(std::uint64_t)>;

    IntSequence(Generator generator, std::string description,
                std::optional<std::uint64_t> length = std::nullopt);

    /// alpha(index); index is 1-based.
    BigInt at(std::uint64_t index) const;

    const std::string& description() const { return description_; }
    std::optional<std::uint64_t> length() const { return length_; }

    /// The shifted sequence (S alpha)(k) = alpha(k + 1).
    IntSequence shifted() const;

    static IntSequence constant(const BigInt& m);
    static IntSequence factorial();     // alpha(k) = k!
    static IntSequence factorial_sum(); // alpha(k) = 1! + 2! + ... + k!
    static IntSequence affine(const BigInt& a, const BigInt& b); // alpha(k) = a*k + b
    static IntSequence from_list(std::vector<BigInt> values);

private:
    Generator generator_;
    std::string description_;
    std::optional<std::uint64_t> length_;
};

enum class StabilizationStatus { Stable, NotYetStable };

/// Finite evidence that a sequence's residues mod (K+1)! have settled: the
/// residue is constant on [witness_index, checked_upto] and that tail is at
/// least the required window long.
struct StabilizationReport {
    unsigned target_depth = 0;
    std::uint64_t witness_index = 0; // 0 when NotYetStable
    std::uint64_t checked_upto = 0;
    StabilizationStatus status = StabilizationStatus::NotYetStable;
    std::uint64_t window = 0; // evidence window actually required
};

/// Scans alpha(1..horizon) mod (depth+1)! and reports the stable tail, if
/// any. window = 0 selects the default 2*(depth+1). Never throws on an
/// unstable sequence; see limit_upto for the throwing form.
StabilizationReport stabilize(const IntSequence& alpha, unsigned depth, std::uint64_t horizon,
                              std::uint64_t window = 0);

struct LimitResult {
    PolyadicInt value;
    StabilizationReport report;
};

/// The truncated polyadic number represented by the sequence, with the
/// stabilization evidence. Throws not_yet_stable if no qualifying tail
/// window exists up to the horizon (which proves nothing about divergence).
LimitResult limit_upto(const IntSequence& alpha, unsigned depth, std::uint64_t horizon,
                       std::uint64_t window = 0);

/// True iff the stabilized residue mod (depth+1)! is zero.
bool is_zero_sequence_upto(const IntSequence& alpha, unsigned depth, std::uint64_t horizon,
                           std::uint64_t window = 0);

/// The candidate integer value of the sequence at this depth: the m of least
/// absolute value with embed(m, depth) equal to the limit, provided
/// |m| <= max_abs (0 selects the horizon). nullopt means no such small
/// integer exists at this depth.
std::optional<BigInt> classify_absolute_upto(const IntSequence& alpha, unsigned depth,
                                             std::uint64_t horizon, std::uint64_t window = 0,
                                             const BigInt& max_abs = 0);

/// True iff the sequence stabilizes, at the shallowest depth whose factorial
/// p divides, on a residue divisible by p.
bool is_prezero_upto(const IntSequence& alpha, const BigInt& p, std::uint64_t horizon,
                     std::uint64_t window = 0);

/// Finite-list convergence test: for every divisor m of (depth+1)!, the
/// consecutive differences must vanish mod m from their first vanishing
/// onward (and vanish at least once).
bool converges_check(const std::vector<PolyadicInt>& terms, unsigned depth);

} // namespace polyadic
