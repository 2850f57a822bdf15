#include "polyadic/verify.hpp"

#include "polyadic/character.hpp"
#include "polyadic/errors.hpp"
#include "polyadic/grid.hpp"
#include "polyadic/int_sequence.hpp"
#include "polyadic/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <sstream>
#include <type_traits>
#include <utility>

namespace polyadic::verify {

namespace {

using Rng = std::mt19937_64;

/// Accumulates one pass/fail verdict per named property, keeping the first
/// counterexample. The witness may be a string or a lazy callable; callables
/// are only invoked on the first failure.
class SuiteBuilder {
public:
    explicit SuiteBuilder(std::string suite) { result_.suite = std::move(suite); }

    template <typename Witness = const char*>
    void require(const std::string& property, bool ok, Witness&& witness = "") {
        PropertyResult& slot = slot_for(property);
        if (!ok && slot.passed) {
            slot.passed = false;
            if constexpr (std::is_invocable_v<Witness>) {
                slot.counterexample = witness();
            } else {
                slot.counterexample = std::string(witness);
            }
        }
    }

    SuiteResult finish() { return std::move(result_); }

private:
    PropertyResult& slot_for(const std::string& property) {
        for (PropertyResult& existing : result_.properties) {
            if (existing.property == property) {
                return existing;
            }
        }
        result_.properties.push_back(PropertyResult{property, true, ""});
        return result_.properties.back();
    }

    SuiteResult result_;
};

PolyadicInt random_tower(Rng& rng, unsigned depth) {
    // Uniform digits give a uniform residue mod (depth+1)!.
    std::vector<std::uint32_t> digits(depth);
    for (unsigned r = 1; r <= depth; ++r) {
        digits[r - 1] = std::uniform_int_distribution<std::uint32_t>(0, r)(rng);
    }
    return PolyadicInt::from_digits(FactorialDigits(std::move(digits)));
}

Complex random_complex(Rng& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    return Complex{dist(rng), dist(rng)};
}

PeriodicFunction random_function(Rng& rng, std::int64_t period) {
    std::vector<Complex> values(static_cast<std::size_t>(period));
    for (Complex& z : values) {
        z = random_complex(rng);
    }
    return PeriodicFunction(period, std::move(values));
}

std::string show(const BigInt& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

std::string show_tower(const PolyadicInt& alpha) {
    return to_json(alpha).dump();
}

/// The convolution evaluated through its definition: the double sum over the
/// indicator basis. Independent of the tower arithmetic it cross-checks.
Complex double_sum_eval(const Character& phi, const Character& psi, const PeriodicFunction& u,
                        bool multiplicative) {
    const std::int64_t p = u.period();
    Complex acc{0.0, 0.0};
    for (std::int64_t j = 0; j < p; ++j) {
        const Complex phi_ej = phi.eval(PeriodicFunction::indicator(p, j));
        if (phi_ej == Complex{0.0, 0.0}) {
            continue;
        }
        for (std::int64_t k = 0; k < p; ++k) {
            const Complex psi_ek = psi.eval(PeriodicFunction::indicator(p, k));
            if (psi_ek == Complex{0.0, 0.0}) {
                continue;
            }
            acc += u.value_at(multiplicative ? j * k : j + k) * phi_ej * psi_ek;
        }
    }
    return acc;
}

std::int64_t random_small_divisor(Rng& rng, unsigned depth, std::int64_t cap) {
    const std::vector<BigInt> all = factorial_divisors(depth + 1);
    std::vector<std::int64_t> small;
    for (const BigInt& d : all) {
        if (d <= cap) {
            small.push_back(d.convert_to<std::int64_t>());
        }
    }
    return small[std::uniform_int_distribution<std::size_t>(0, small.size() - 1)(rng)];
}

// --- Suite 1: factorial representation -----------------------------------

SuiteResult suite_factorial_roundtrip(const Options& options) {
    SuiteBuilder b("factorial-roundtrip");
    const unsigned depth = options.depth;
    const BigInt mod = factorial(depth + 1);
    for (BigInt v = 0; v < mod; ++v) {
        const FactorialDigits digits = FactorialDigits::of_value(v, depth);
        bool bounds = true;
        for (std::size_t i = 0; i < digits.digits().size(); ++i) {
            bounds = bounds && digits.digits()[i] <= i + 1;
        }
        b.require("digit-bounds", bounds, [&] { return "value " + show(v); });
        b.require("value-of-digits-roundtrip", digits.value() == v,
                  [&] { return "value " + show(v); });
        const PolyadicInt alpha = PolyadicInt::embed(v, depth);
        b.require("embed-digits-agree", alpha.to_digits() == digits,
                  [&] { return "value " + show(v); });
        b.require("from-digits-roundtrip", PolyadicInt::from_digits(digits) == alpha,
                  [&] { return "value " + show(v); });
    }
    return b.finish();
}

// --- Suite 2: base-p digit extraction -------------------------------------

SuiteResult suite_padic_digits(const Options& options) {
    SuiteBuilder b("padic-digits");
    Rng rng(options.seed);
    const unsigned depth = options.depth;
    const BigInt mod = factorial(depth + 1);
    const unsigned trials = options.trials ? options.trials : 1000;
    std::uniform_int_distribution<std::int64_t> dist(-1000000000, 1000000000);
    for (const unsigned p : {2u, 3u, 5u}) {
        unsigned kmax = 0;
        for (BigInt pw = p; mod % pw == 0; pw *= p) {
            ++kmax;
        }
        for (unsigned t = 0; t < trials; ++t) {
            const std::int64_t m = dist(rng);
            const PolyadicInt alpha = PolyadicInt::embed(m, depth);
            for (unsigned k = 0; k <= kmax; ++k) {
                // Direct base-p expansion, straight from the integer.
                BigInt pk = 1;
                for (unsigned i = 0; i < k; ++i) {
                    pk *= p;
                }
                BigInt rest = mod_floor(m, pk);
                std::vector<std::uint32_t> expected(k);
                for (unsigned i = 0; i < k; ++i) {
                    expected[i] = static_cast<std::uint32_t>(rest % p);
                    rest /= p;
                }
                b.require("matches-direct-expansion", alpha.padic_digits(p, k) == expected, [&] {
                    return "m = " + std::to_string(m) + ", p = " + std::to_string(p) +
                           ", k = " + std::to_string(k);
                });
            }
        }
    }
    return b.finish();
}

// --- Suite 3: indicator basis ---------------------------------------------

SuiteResult suite_indicator_basis(const Options& options) {
    SuiteBuilder b("indicator-basis");
    Rng rng(options.seed);
    for (std::int64_t p = 1; p <= 8; ++p) {
        for (std::int64_t m = 0; m < p; ++m) {
            const PeriodicFunction em = PeriodicFunction::indicator(p, m);
            for (std::int64_t n = 0; n < p; ++n) {
                const PeriodicFunction en = PeriodicFunction::indicator(p, n);
                const PeriodicFunction expected =
                    m == n ? em : PeriodicFunction::constant(p, Complex{0.0, 0.0});
                b.require("orthogonal-idempotents", approx_equal(em * en, expected), [&] {
                    return "p = " + std::to_string(p) + ", m = " + std::to_string(m) +
                           ", n = " + std::to_string(n);
                });
            }
        }
        PeriodicFunction sum = PeriodicFunction::constant(p, Complex{0.0, 0.0});
        for (std::int64_t m = 0; m < p; ++m) {
            sum = sum + PeriodicFunction::indicator(p, m);
        }
        b.require("indicators-sum-to-unit", approx_equal(sum, PeriodicFunction::unit()),
                  "p = " + std::to_string(p));

        const PeriodicFunction u = random_function(rng, p);
        PeriodicFunction rebuilt = PeriodicFunction::constant(p, Complex{0.0, 0.0});
        const std::vector<Complex> coeffs = u.decompose();
        for (std::int64_t m = 0; m < p; ++m) {
            rebuilt = rebuilt + PeriodicFunction::indicator(p, m) * coeffs[static_cast<std::size_t>(m)];
        }
        b.require("expansion-reconstructs", approx_equal(rebuilt, u), "p = " + std::to_string(p));
        bool coeffs_are_values = true;
        for (std::int64_t m = 0; m < p; ++m) {
            coeffs_are_values =
                coeffs_are_values && coeffs[static_cast<std::size_t>(m)] == u.value_at(m);
        }
        b.require("coefficients-are-values", coeffs_are_values, "p = " + std::to_string(p));

        // Independence: a random combination decomposes back to its own
        // coefficients, so only the zero combination vanishes.
        std::vector<Complex> weights(static_cast<std::size_t>(p));
        PeriodicFunction combo = PeriodicFunction::constant(p, Complex{0.0, 0.0});
        for (std::int64_t m = 0; m < p; ++m) {
            weights[static_cast<std::size_t>(m)] = random_complex(rng);
            combo = combo +
                    PeriodicFunction::indicator(p, m) * weights[static_cast<std::size_t>(m)];
        }
        bool unique = true;
        const std::vector<Complex> back = combo.decompose();
        for (std::int64_t m = 0; m < p; ++m) {
            unique = unique && std::abs(back[static_cast<std::size_t>(m)] -
                                        weights[static_cast<std::size_t>(m)]) <= 1e-9;
        }
        b.require("basis-independence", unique, "p = " + std::to_string(p));

        bool separates = true;
        for (std::int64_t j = 0; j < p && separates; ++j) {
            for (std::int64_t k = j + 1; k < p && separates; ++k) {
                bool found = false;
                for (std::int64_t m = 0; m < p; ++m) {
                    const PeriodicFunction e = PeriodicFunction::indicator(p, m);
                    if (e.value_at(j) != e.value_at(k)) {
                        found = true;
                        break;
                    }
                }
                separates = found;
            }
        }
        b.require("separates-points", separates, "p = " + std::to_string(p));
    }
    return b.finish();
}

// --- Suite 4: residue-tower coherence --------------------------------------

SuiteResult suite_kappa_consistency(const Options& options) {
    SuiteBuilder b("kappa-consistency");
    Rng rng(options.seed);
    const unsigned depth = options.depth;
    const unsigned trials = options.trials ? options.trials : 500;
    const std::vector<BigInt> divisors = factorial_divisors(depth + 1);
    const std::size_t count = divisors.size();
    std::vector<std::vector<BigInt>> gcd_table(count);
    for (std::size_t i = 0; i < count; ++i) {
        gcd_table[i].resize(i + 1);
        for (std::size_t j = 0; j <= i; ++j) {
            gcd_table[i][j] = gcd(divisors[i], divisors[j]);
        }
    }
    for (unsigned t = 0; t < trials; ++t) {
        const Character psi(random_tower(rng, depth));
        std::vector<BigInt> kappas(count);
        for (std::size_t i = 0; i < count; ++i) {
            kappas[i] = psi.kappa(divisors[i]);
        }
        for (std::size_t i = 0; i < count; ++i) {
            for (std::size_t j = 0; j <= i; ++j) {
                const bool ok = (kappas[i] - kappas[j]) % gcd_table[i][j] == 0;
                b.require("kappa-coherent-mod-gcd", ok, [&] {
                    return "tower " + show_tower(psi.tower_of()) + ", m = " + show(divisors[i]) +
                           ", n = " + show(divisors[j]);
                });
            }
        }
    }
    return b.finish();
}

// --- Suite 5: the ring of characters ---------------------------------------

SuiteResult suite_ring_axioms(const Options& options) {
    SuiteBuilder b("ring-axioms");
    Rng rng(options.seed);
    const unsigned depth = options.depth;
    const unsigned trials = options.trials ? options.trials : 1000;
    const Character zero = Character::theta(depth);
    const Character one = Character::epsilon(depth);
    for (unsigned t = 0; t < trials; ++t) {
        const Character phi(random_tower(rng, depth));
        const Character psi(random_tower(rng, depth));
        const Character chi(random_tower(rng, depth));
        const auto witness = [&] {
            return "phi = " + show_tower(phi.tower_of()) + ", psi = " + show_tower(psi.tower_of()) +
                   ", chi = " + show_tower(chi.tower_of());
        };
        b.require("plus-commutative", conv_plus(phi, psi) == conv_plus(psi, phi), witness);
        b.require("dot-commutative", conv_dot(phi, psi) == conv_dot(psi, phi), witness);
        b.require("plus-associative",
                  conv_plus(conv_plus(phi, psi), chi) == conv_plus(phi, conv_plus(psi, chi)),
                  witness);
        b.require("dot-associative",
                  conv_dot(conv_dot(phi, psi), chi) == conv_dot(phi, conv_dot(psi, chi)), witness);
        b.require("theta-neutral", conv_plus(phi, zero) == phi, witness);
        b.require("epsilon-neutral", conv_dot(phi, one) == phi, witness);
        b.require("additive-inverse", conv_plus(phi, reflect(phi)) == zero, witness);
        b.require("distributive",
                  conv_dot(conv_plus(phi, psi), chi) ==
                      conv_plus(conv_dot(phi, chi), conv_dot(psi, chi)),
                  witness);

        // Evaluation route: the same identities through the defining double
        // sum on a random periodic function.
        const std::int64_t p = random_small_divisor(rng, depth, 60);
        const PeriodicFunction u = random_function(rng, p);
        b.require("plus-matches-double-sum",
                  std::abs(conv_plus(phi, psi).eval(u) - double_sum_eval(phi, psi, u, false)) <=
                      1e-9,
                  witness);
        b.require("dot-matches-double-sum",
                  std::abs(conv_dot(phi, psi).eval(u) - double_sum_eval(phi, psi, u, true)) <= 1e-9,
                  witness);
        b.require("reflect-matches-eval",
                  std::abs(reflect(phi).eval(u) - u.value_at(-phi.kappa(p))) <= 1e-9, witness);
    }
    return b.finish();
}

// --- Suite 6: the isomorphism ----------------------------------------------

SuiteResult suite_isomorphism(const Options& options) {
    SuiteBuilder b("isomorphism");
    Rng rng(options.seed);
    const unsigned max_depth = std::max(1u, options.depth);
    const unsigned pair_trials = options.trials ? options.trials : 100;
    for (unsigned depth = 1; depth <= max_depth; ++depth) {
        for (unsigned t = 0; t < pair_trials; ++t) {
            const PolyadicInt alpha = random_tower(rng, depth);
            const PolyadicInt beta = random_tower(rng, depth);
            const auto witness = [&] {
                return "depth " + std::to_string(depth) + ", alpha = " + show_tower(alpha) +
                       ", beta = " + show_tower(beta);
            };
            b.require("round-trip-identity",
                      Character::char_of(alpha).tower_of() == alpha &&
                          Character(alpha).tower_of() == alpha,
                      witness);
            b.require("preserves-addition",
                      Character::char_of(alpha + beta) ==
                          conv_plus(Character::char_of(alpha), Character::char_of(beta)),
                      witness);
            b.require("preserves-multiplication",
                      Character::char_of(alpha * beta) ==
                          conv_dot(Character::char_of(alpha), Character::char_of(beta)),
                      witness);
            b.require("preserves-negation",
                      Character::char_of(-alpha) == reflect(Character::char_of(alpha)), witness);
        }
    }

    const unsigned cluster_trials = options.trials ? options.trials : 500;
    const std::vector<BigInt> divisors = factorial_divisors(options.depth + 1);
    for (unsigned t = 0; t < cluster_trials; ++t) {
        const Character phi(random_tower(rng, options.depth));
        const Character psi(random_tower(rng, options.depth));
        for (const BigInt& p : divisors) {
            const Grid grid(p, psi.tower_of());
            const bool ok = phi.cluster_equal(psi, p) == grid.contains(phi.tower_of());
            b.require("cluster-matches-grid", ok, [&] {
                return "p = " + show(p) + ", phi = " + show_tower(phi.tower_of()) +
                       ", psi = " + show_tower(psi.tower_of());
            });
        }
    }
    return b.finish();
}

// --- Suite 7: Gelfand neighborhoods against clusters ------------------------

SuiteResult suite_gelfand_cluster(const Options& options) {
    SuiteBuilder b("gelfand-cluster");
    for (std::int64_t n = 1; n <= static_cast<std::int64_t>(options.cluster_n); ++n) {
        const auto depth = min_depth_for_modulus(n);
        for (const double radius : {options.radius, 0.99}) {
            for (std::int64_t a = 0; a < n; ++a) {
                const Character phi(PolyadicInt::embed(a, *depth));
                for (std::int64_t r = 0; r < n; ++r) {
                    const Character psi(PolyadicInt::embed(r, *depth));
                    bool in_all = true;
                    for (std::int64_t j = 0; j < n; ++j) {
                        const GelfandNeighborhood nbhd(psi, PeriodicFunction::indicator(n, j),
                                                       radius);
                        in_all = in_all && gelfand_contains(nbhd, phi);
                    }
                    const bool ok = in_all == phi.cluster_equal(psi, n);
                    b.require("indicator-intersection-equals-cluster", ok, [&] {
                        return "n = " + std::to_string(n) + ", R = " + std::to_string(radius) +
                               ", residues (" + std::to_string(a) + ", " + std::to_string(r) + ")";
                    });
                }
            }
        }
    }
    return b.finish();
}

// --- Suite 8: division with remainder ---------------------------------------

SuiteResult suite_division(const Options& options) {
    SuiteBuilder b("division");
    const unsigned depth = 18; // 19! admits every divisor up to 20
    (void)options;
    for (std::int64_t m = -1000; m <= 1000; ++m) {
        const PolyadicInt alpha = PolyadicInt::embed(m, depth);
        for (std::int64_t n = 1; n <= 20; ++n) {
            const auto [gamma, r] = alpha.div_rem(n);
            const auto witness = [&] {
                return "alpha = " + std::to_string(m) + ", n = " + std::to_string(n);
            };
            // Floor-division oracle on plain integers.
            std::int64_t q_floor = m / n;
            std::int64_t r_floor = m % n;
            if (r_floor < 0) {
                r_floor += n;
                q_floor -= 1;
            }
            b.require("remainder-matches-floor-oracle", r == r_floor, witness);
            b.require("quotient-matches-floor-oracle",
                      gamma == PolyadicInt::embed(q_floor, gamma.depth()), witness);
            const PolyadicInt rebuilt = PolyadicInt::embed(n, gamma.depth()) * gamma +
                                        PolyadicInt::embed(r, gamma.depth());
            b.require("reconstructs-dividend",
                      rebuilt == PolyadicInt::embed(m, gamma.depth()), witness);
            unsigned admissible = 0;
            for (std::int64_t rp = 0; rp < n; ++rp) {
                if (mod_floor(BigInt(m) - rp, n) == 0) {
                    ++admissible;
                }
            }
            b.require("remainder-unique", admissible == 1 && mod_floor(BigInt(m), n) == r, witness);
        }
    }
    return b.finish();
}

// --- Suite 9: grid combinatorics --------------------------------------------

SuiteResult suite_grids(const Options& options) {
    SuiteBuilder b("grids");
    (void)options;

    for (std::int64_t n = 1; n <= 24; ++n) {
        const std::vector<Grid> grids = partition(n);
        const unsigned probe_depth = grids.front().center().depth();
        for (std::int64_t m = -50; m <= 50; ++m) {
            const PolyadicInt probe = PolyadicInt::embed(m, probe_depth);
            unsigned hits = 0;
            const Grid* hit = nullptr;
            for (const Grid& g : grids) {
                if (g.contains(probe)) {
                    ++hits;
                    hit = &g;
                }
            }
            const auto witness = [&] {
                return "N = " + std::to_string(n) + ", probe = " + std::to_string(m);
            };
            b.require("partition-covers-once", hits == 1, witness);
            b.require("partition-cell-is-residue",
                      hits == 1 && hit->center_residue() == mod_floor(m, n), witness);
        }
    }

    for (unsigned n = 1; n <= 3; ++n) {
        const BigInt base = factorial(n);
        for (BigInt k = 0; k < base; ++k) {
            const Grid parent(base, PolyadicInt::embed(k, n));
            const std::vector<Grid> children = refine(n, k);
            for (std::int64_t m = -50; m <= 50; ++m) {
                const PolyadicInt probe = PolyadicInt::embed(m, n);
                unsigned hits = 0;
                for (const Grid& child : children) {
                    if (child.contains(probe)) {
                        ++hits;
                    }
                }
                const bool ok = parent.contains(probe) ? hits == 1 : hits == 0;
                b.require("refinement-splits-exactly", ok, [&] {
                    return "n = " + std::to_string(n) + ", k = " + show(k) +
                           ", probe = " + std::to_string(m);
                });
            }
        }
    }

    for (std::int64_t p = 1; p <= 8; ++p) {
        for (std::int64_t q = 1; q <= 6; ++q) {
            const auto depth = min_depth_for_modulus(p * q);
            for (std::int64_t a = 0; a < p; ++a) {
                for (std::int64_t c = 0; c < p * q; ++c) {
                    const Grid outer(p, PolyadicInt::embed(a, *depth));
                    const Grid inner(p * q, PolyadicInt::embed(c, *depth));
                    const GridRelation rel = grids_relation(outer, inner);
                    const bool expect_absorbed = mod_floor(c, p) == mod_floor(a, p);
                    const auto witness = [&] {
                        return "outer (" + std::to_string(p) + ", " + std::to_string(a) +
                               "), inner (" + std::to_string(p * q) + ", " + std::to_string(c) +
                               ")";
                    };
                    b.require("relation-decided-by-residue",
                              (rel == GridRelation::Absorbed) == expect_absorbed, witness);
                    bool probes_agree = true;
                    for (std::int64_t m = -30; m <= 30; ++m) {
                        const PolyadicInt probe = PolyadicInt::embed(m, *depth);
                        if (inner.contains(probe)) {
                            probes_agree =
                                probes_agree &&
                                outer.contains(probe) == (rel == GridRelation::Absorbed);
                        }
                    }
                    b.require("relation-confirmed-on-probes", probes_agree, witness);
                }
            }
        }
    }

    for (std::int64_t m = 1; m <= 24; ++m) {
        for (std::int64_t n = 1; n <= 24; ++n) {
            const std::int64_t l = std::lcm(m, n);
            const auto depth_m = min_depth_for_modulus(m);
            const auto depth_n = min_depth_for_modulus(n);
            for (std::int64_t a = 0; a < m; ++a) {
                for (std::int64_t c = 0; c < n; ++c) {
                    std::int64_t found = -1;
                    for (std::int64_t x = 0; x < l; ++x) {
                        if (x % m == a && x % n == c) {
                            found = x;
                            break;
                        }
                    }
                    const Grid ga(m, PolyadicInt::embed(a, *depth_m));
                    const Grid gc(n, PolyadicInt::embed(c, *depth_n));
                    const std::optional<Grid> meet = intersect(ga, gc);
                    const auto witness = [&] {
                        return "(" + std::to_string(m) + ", " + std::to_string(a) + ") vs (" +
                               std::to_string(n) + ", " + std::to_string(c) + ")";
                    };
                    if (found < 0) {
                        b.require("intersection-matches-brute-force", !meet.has_value(), witness);
                    } else {
                        b.require("intersection-matches-brute-force",
                                  meet.has_value() && meet->width() == l &&
                                      meet->center_residue() == found,
                                  witness);
                    }
                }
            }
        }
    }
    return b.finish();
}

// --- Suite 10: stabilizers ---------------------------------------------------

SuiteResult suite_stabilizers(const Options& options) {
    SuiteBuilder b("stabilizers");
    const std::uint64_t horizon = options.horizon;

    const LimitResult sum_limit = limit_upto(IntSequence::factorial_sum(), 6, horizon);
    b.require("factorial-sum-has-unit-digits",
              sum_limit.value.to_digits().digits() == std::vector<std::uint32_t>{1, 1, 1, 1, 1, 1},
              show_tower(sum_limit.value));

    for (const std::int64_t c : {-3, 0, 7, 42}) {
        const IntSequence seq = IntSequence::constant(c);
        const auto value = classify_absolute_upto(seq, 6, horizon);
        b.require("constant-classifies-absolute", value.has_value() && *value == c,
                  "c = " + std::to_string(c));
        b.require("constant-witness-is-first-index",
                  limit_upto(seq, 6, horizon).report.witness_index == 1,
                  "c = " + std::to_string(c));
    }

    for (unsigned depth = 1; depth <= 6; ++depth) {
        b.require("factorial-is-zero-stabilizer",
                  is_zero_sequence_upto(IntSequence::factorial(), depth, horizon),
                  "depth " + std::to_string(depth));
    }

    const IntSequence four = IntSequence::constant(4);
    b.require("constant-4-is-2-prezero", is_prezero_upto(four, 2, horizon));
    b.require("constant-4-is-4-prezero", is_prezero_upto(four, 4, horizon));
    b.require("constant-4-is-not-3-prezero", !is_prezero_upto(four, 3, horizon));

    const auto shifted_value = classify_absolute_upto(
        IntSequence([](std::uint64_t k) { return BigInt(3) + factorial(static_cast<unsigned>(k)); },
                    "3+k!"),
        6, horizon);
    b.require("offset-factorial-has-value-3", shifted_value.has_value() && *shifted_value == 3);

    b.require("factorial-sum-not-integer-at-depth-6",
              !classify_absolute_upto(IntSequence::factorial_sum(), 6, horizon).has_value());

    bool diverges = false;
    try {
        limit_upto(IntSequence::affine(1, 0), 1, horizon);
    } catch (const not_yet_stable&) {
        diverges = true;
    }
    b.require("identity-sequence-never-stabilizes", diverges);
    return b.finish();
}

// --- Suite 11: convergence criterion ----------------------------------------

SuiteResult suite_convergence(const Options& options) {
    SuiteBuilder b("convergence");
    (void)options;
    std::vector<PolyadicInt> partial_sums;
    BigInt acc = 0;
    for (unsigned n = 1; n <= 10; ++n) {
        acc += factorial(n);
        partial_sums.push_back(PolyadicInt::embed(acc, 5));
    }
    b.require("factorial-partial-sums-converge", converges_check(partial_sums, 5));

    const std::vector<PolyadicInt> constants(8, PolyadicInt::embed(5, 5));
    b.require("constant-list-converges", converges_check(constants, 5));

    std::vector<PolyadicInt> naturals;
    for (unsigned n = 1; n <= 10; ++n) {
        naturals.push_back(PolyadicInt::embed(n, 5));
    }
    b.require("naturals-do-not-converge", !converges_check(naturals, 5));
    return b.finish();
}

using SuiteFn = SuiteResult (*)(const Options&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> suites = {
        {"factorial-roundtrip", suite_factorial_roundtrip},
        {"padic-digits", suite_padic_digits},
        {"indicator-basis", suite_indicator_basis},
        {"kappa-consistency", suite_kappa_consistency},
        {"ring-axioms", suite_ring_axioms},
        {"isomorphism", suite_isomorphism},
        {"gelfand-cluster", suite_gelfand_cluster},
        {"division", suite_division},
        {"grids", suite_grids},
        {"stabilizers", suite_stabilizers},
        {"convergence", suite_convergence},
    };
    return suites;
}

} // namespace

bool SuiteResult::all_passed() const {
    return std::all_of(properties.begin(), properties.end(),
                       [](const PropertyResult& r) { return r.passed; });
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry()) {
            out.push_back(name);
        }
        return out;
    }();
    return names;
}

SuiteResult run_suite(const std::string& name, const Options& options) {
    for (const auto& [suite, fn] : registry()) {
        if (suite == name) {
            return fn(options);
        }
    }
    throw unknown_suite("unknown verification suite '" + name + "'");
}

std::vector<SuiteResult> run_all(const Options& options) {
    std::vector<SuiteResult> out;
    for (const auto& [name, fn] : registry()) {
        out.push_back(fn(options));
    }
    return out;
}

} // namespace polyadic::verify
