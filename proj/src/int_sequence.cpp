#include "polyadic/int_sequence.hpp"

#include "polyadic/errors.hpp"

#include <algorithm>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace polyadic {

IntSequence::IntSequence(Generator generator, std::string description,
                         std::optional<std::uint64_t> length)
    : generator_(std::move(generator)), description_(std::move(description)), length_(length) {
    if (!generator_) {
        throw std::invalid_argument("IntSequence: generator must be callable");
    }
}

BigInt IntSequence::at(std::uint64_t index) const {
    if (index == 0) {
        throw index_out_of_range("IntSequence: indices are 1-based");
    }
    if (length_ && index > *length_) {
        throw index_out_of_range("IntSequence: index " + std::to_string(index) +
                                 " beyond finite length " + std::to_string(*length_));
    }
    return generator_(index);
}

IntSequence IntSequence::shifted() const {
    Generator base = generator_;
    std::optional<std::uint64_t> len;
    if (length_) {
        if (*length_ == 0) {
            throw std::invalid_argument("IntSequence::shifted: empty sequence");
        }
        len = *length_ - 1;
    }
    return IntSequence([base](std::uint64_t k) { return base(k + 1); },
                       "shift(" + description_ + ")", len);
}

IntSequence IntSequence::constant(const BigInt& m) {
    std::ostringstream os;
    os << "constant:" << m;
    return IntSequence([m](std::uint64_t) { return m; }, os.str());
}

IntSequence IntSequence::factorial() {
    return IntSequence([](std::uint64_t k) { return polyadic::factorial(static_cast<unsigned>(k)); },
                       "factorial");
}

IntSequence IntSequence::factorial_sum() {
    return IntSequence(
        [](std::uint64_t k) {
            BigInt acc = 0;
            BigInt fact = 1;
            for (std::uint64_t j = 1; j <= k; ++j) {
                fact *= j;
                acc += fact;
            }
            return acc;
        },
        "factorial-sum");
}

IntSequence IntSequence::affine(const BigInt& a, const BigInt& b) {
    std::ostringstream os;
    os << "affine:" << a << "," << b;
    return IntSequence([a, b](std::uint64_t k) { return a * BigInt(k) + b; }, os.str());
}

IntSequence IntSequence::from_list(std::vector<BigInt> values) {
    const auto len = static_cast<std::uint64_t>(values.size());
    auto shared = std::make_shared<std::vector<BigInt>>(std::move(values));
    return IntSequence([shared](std::uint64_t k) { return (*shared)[k - 1]; }, "list", len);
}

StabilizationReport stabilize(const IntSequence& alpha, unsigned depth, std::uint64_t horizon,
                              std::uint64_t window) {
    if (window == 0) {
        window = 2 * (static_cast<std::uint64_t>(depth) + 1);
    }
    std::uint64_t upto = horizon;
    if (alpha.length()) {
        upto = std::min(upto, *alpha.length());
    }
    StabilizationReport report;
    report.target_depth = depth;
    report.checked_upto = upto;
    report.window = window;
    if (upto == 0) {
        return report;
    }

    const BigInt mod = factorial(depth + 1);
    // Walk forward keeping the start of the current constant-residue run.
    std::uint64_t run_start = 1;
    BigInt run_residue = mod_floor(alpha.at(1), mod);
    for (std::uint64_t k = 2; k <= upto; ++k) {
        BigInt r = mod_floor(alpha.at(k), mod);
        if (r != run_residue) {
            run_start = k;
            run_residue = std::move(r);
        }
    }
    if (upto - run_start + 1 >= window) {
        report.witness_index = run_start;
        report.status = StabilizationStatus::Stable;
    }
    return report;
}

namespace {

PolyadicInt stable_value(const IntSequence& alpha, const StabilizationReport& report) {
    return PolyadicInt::embed(alpha.at(report.witness_index), report.target_depth);
}

StabilizationReport stabilize_or_throw(const IntSequence& alpha, unsigned depth,
                                       std::uint64_t horizon, std::uint64_t window) {
    StabilizationReport report = stabilize(alpha, depth, horizon, window);
    if (report.status != StabilizationStatus::Stable) {
        throw not_yet_stable("sequence '" + alpha.description() + "' shows no residue tail of >= " +
                             std::to_string(report.window) + " agreeing terms mod (" +
                             std::to_string(depth + 1) + ")! within horizon " +
                             std::to_string(report.checked_upto));
    }
    return report;
}

} // namespace

LimitResult limit_upto(const IntSequence& alpha, unsigned depth, std::uint64_t horizon,
                       std::uint64_t window) {
    StabilizationReport report = stabilize_or_throw(alpha, depth, horizon, window);
    return LimitResult{stable_value(alpha, report), report};
}

bool is_zero_sequence_upto(const IntSequence& alpha, unsigned depth, std::uint64_t horizon,
                           std::uint64_t window) {
    return limit_upto(alpha, depth, horizon, window).value.value() == 0;
}

std::optional<BigInt> classify_absolute_upto(const IntSequence& alpha, unsigned depth,
                                             std::uint64_t horizon, std::uint64_t window,
                                             const BigInt& max_abs) {
    const LimitResult limit = limit_upto(alpha, depth, horizon, window);
    const BigInt bound = max_abs > 0 ? max_abs : BigInt(horizon);
    const BigInt mod = factorial(depth + 1);
    const BigInt& v = limit.value.value();
    // The two integer representatives nearest zero are v and v - (K+1)!.
    const BigInt candidates[2] = {v, v - mod};
    const BigInt* best = nullptr;
    for (const BigInt& c : candidates) {
        if (abs(c) > bound) {
            continue;
        }
        if (best == nullptr || abs(c) < abs(*best)) {
            best = &c;
        }
    }
    if (best == nullptr) {
        return std::nullopt;
    }
    return *best;
}

bool is_prezero_upto(const IntSequence& alpha, const BigInt& p, std::uint64_t horizon,
                     std::uint64_t window) {
    const auto depth = min_depth_for_modulus(p);
    if (!depth) {
        throw insufficient_depth("is_prezero_upto: modulus needs an impractically deep tower");
    }
    const LimitResult limit = limit_upto(alpha, *depth, horizon, window);
    return limit.value.residue_mod(p) == 0;
}

bool converges_check(const std::vector<PolyadicInt>& terms, unsigned depth) {
    for (const PolyadicInt& t : terms) {
        if (t.depth() < depth) {
            throw insufficient_depth("converges_check: a term is shallower than the requested depth");
        }
    }
    if (terms.size() < 2) {
        return true;
    }
    const BigInt mod = factorial(depth + 1);
    std::vector<BigInt> diffs;
    diffs.reserve(terms.size() - 1);
    for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
        diffs.push_back((terms[i] - terms[i + 1]).residue_mod(mod));
    }

    for (const BigInt& m : factorial_divisors(depth + 1)) {
        std::size_t first_zero = diffs.size();
        for (std::size_t i = 0; i < diffs.size(); ++i) {
            if (diffs[i] % m == 0) {
                first_zero = i;
                break;
            }
        }
        if (first_zero == diffs.size()) {
            return false;
        }
        for (std::size_t i = first_zero; i < diffs.size(); ++i) {
            if (diffs[i] % m != 0) {
                return false;
            }
        }
    }
    return true;
}

} // namespace polyadic
