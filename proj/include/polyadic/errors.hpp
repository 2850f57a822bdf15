#pragma once

#include <stdexcept>
#include <string>

namespace polyadic {

/// Base class for all domain errors raised by the library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

/// A modulus or period is not supported by the available tower depth.
class insufficient_depth : public error {
public:
    explicit insufficient_depth(const std::string& what_arg) : error(what_arg) {}
};

/// A factorial digit violates the bound 0 <= digit_r <= r.
class digit_out_of_range : public error {
public:
    explicit digit_out_of_range(const std::string& what_arg) : error(what_arg) {}
};

/// Two residue claims disagree modulo the gcd of their moduli.
class incompatible_residues : public error {
public:
    explicit incompatible_residues(const std::string& what_arg) : error(what_arg) {}
};

class index_out_of_range : public error {
public:
    explicit index_out_of_range(const std::string& what_arg) : error(what_arg) {}
};

/// Grid widths do not satisfy the required divisibility.
class width_mismatch : public error {
public:
    explicit width_mismatch(const std::string& what_arg) : error(what_arg) {}
};

/// A sequence has not exhibited a stable residue tail within the horizon.
/// This is evidence of absence, not proof of divergence.
class not_yet_stable : public error {
public:
    explicit not_yet_stable(const std::string& what_arg) : error(what_arg) {}
};

class unknown_suite : public error {
public:
    explicit unknown_suite(const std::string& what_arg) : error(what_arg) {}
};

} // namespace polyadic
