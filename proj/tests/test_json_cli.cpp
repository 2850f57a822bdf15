#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyadic/cli.hpp"
#include "polyadic/int_sequence.hpp"
#include "polyadic/json_io.hpp"

#include <random>
#include <sstream>

using namespace polyadic;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("json round trips") {
    std::mt19937_64 rng(3);
    for (unsigned depth : {0u, 1u, 4u, 8u, 25u}) {
        std::vector<std::uint32_t> digits(depth);
        for (unsigned r = 1; r <= depth; ++r) {
            digits[r - 1] = std::uniform_int_distribution<std::uint32_t>(0, r)(rng);
        }
        const PolyadicInt alpha = PolyadicInt::from_digits(FactorialDigits(digits));
        CHECK(polyadic_int_from_json(to_json(alpha)) == alpha);

        const Character psi(alpha);
        const Json cj = to_json(psi);
        CHECK(cj.at("kind") == "character");
        CHECK(character_from_json(cj) == psi);
    }

    // Depth 25 residues exceed 64 bits and serialize as decimal strings.
    const ResidueClaim big(factorial(26), factorial(26) - 1);
    const Json bj = to_json(big);
    CHECK(bj.at("mod").is_string());
    CHECK(residue_claim_from_json(bj) == big);
    const ResidueClaim small(6, 5);
    CHECK(to_json(small).at("mod").is_number_integer());
    CHECK(residue_claim_from_json(to_json(small)) == small);

    const PeriodicFunction u(3, {{0.5, -1}, {2, 0}, {0, 3}});
    const PeriodicFunction v = periodic_function_from_json(to_json(u));
    CHECK(v.period() == u.period());
    CHECK(v.values() == u.values());

    const Grid g(6, PolyadicInt::embed(5, 4));
    CHECK(grid_from_json(to_json(g)) == g);
}

TEST_CASE("digits and res commands match their documented outputs") {
    auto digits = run_cli({"digits", "23", "--depth", "3"});
    CHECK(digits.code == 0);
    CHECK(Json::parse(digits.out) == Json::parse(R"({"digits":[1,2,3]})"));

    auto res = run_cli({"res", "--mod", "5", "13"});
    CHECK(res.code == 0);
    CHECK(Json::parse(res.out) == Json::parse(R"({"res":3})"));
}

TEST_CASE("char-eval picks the right value") {
    const std::string tower = to_json(PolyadicInt::embed(9, 6)).dump();
    auto r = run_cli({"char-eval", "--tower", tower,
                      "--fn", R"({"period":4,"values":[[0,0],[1,0],[2,0],[3,0]]})"});
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j[0].get<double>() == doctest::Approx(1.0));
    CHECK(j[1].get<double>() == doctest::Approx(0.0));
}

TEST_CASE("cli round trip: digits then embed --from-digits") {
    for (std::int64_t m = -5000; m <= 5000; ++m) {
        auto digits = run_cli({"digits", std::to_string(m), "--depth", "6"});
        REQUIRE(digits.code == 0);
        const std::string ds = Json::parse(digits.out).at("digits").dump();
        auto embedded = run_cli({"embed", "--from-digits", ds});
        REQUIRE(embedded.code == 0);
        const Json j = Json::parse(embedded.out);
        CHECK(big_from_json(j.at("value")) == mod_floor(m, factorial(7)));
        CHECK(j.at("depth") == 6);
    }
}

TEST_CASE("identical inputs give byte-identical outputs") {
    const std::vector<std::string> args = {"limit", "--seq", "factorial-sum", "--depth", "5",
                                           "--horizon", "60"};
    const auto first = run_cli(args);
    const auto second = run_cli(args);
    CHECK(first.code == 0);
    CHECK(first.out == second.out);

    const Json j = Json::parse(first.out);
    CHECK(j.at("report").at("status") == "stable");
    CHECK(j.at("value") == to_json(limit_upto(IntSequence::factorial_sum(), 5, 60).value));
}

TEST_CASE("arithmetic verbs") {
    auto sum = run_cli({"add", "2", "3", "--depth", "4"});
    CHECK(Json::parse(sum.out) == to_json(PolyadicInt::embed(5, 4)));

    auto prod = run_cli({"mul", "-1", "-1", "--depth", "4"});
    CHECK(Json::parse(prod.out) == to_json(PolyadicInt::embed(1, 4)));

    auto neg = run_cli({"neg", "1", "--depth", "4"});
    CHECK(Json::parse(neg.out) == to_json(PolyadicInt::embed(-1, 4)));

    auto divrem = run_cli({"divrem", "7", "--n", "2", "--depth", "5"});
    const Json dj = Json::parse(divrem.out);
    CHECK(dj.at("rem") == 1);
    CHECK(dj.at("gamma") == to_json(PolyadicInt::embed(3, 4)));

    auto padic = run_cli({"padic", "10", "--p", "2", "--k", "3", "--depth", "4"});
    CHECK(Json::parse(padic.out) == Json::parse(R"({"digits":[0,1,0]})"));

    auto conv = run_cli({"conv", "--op", "plus", "4", "5", "--depth", "6"});
    const Json cj = Json::parse(conv.out);
    CHECK(cj.at("kind") == "character");
    CHECK(polyadic_int_from_json(cj) == PolyadicInt::embed(9, 6));

    auto cluster = run_cli({"cluster", "2", "8", "--n", "6", "--depth", "6"});
    CHECK(Json::parse(cluster.out) == Json::parse(R"({"equal":true})"));
}

TEST_CASE("grid verbs") {
    auto contains = run_cli({"grid", "contains", "--width", "5", "--center", "3",
                             "--probe", "13", "--depth", "6"});
    CHECK(Json::parse(contains.out) == Json::parse(R"({"contains":true})"));

    const std::string g1 = to_json(Grid(2, PolyadicInt::embed(1, 4))).dump();
    const std::string g2 = to_json(Grid(3, PolyadicInt::embed(2, 4))).dump();
    auto meet = run_cli({"grid", "intersect", "--a", g1, "--b", g2});
    const Json mj = Json::parse(meet.out);
    CHECK(mj.at("empty") == false);
    CHECK(grid_from_json(mj.at("grid")) == Grid(6, PolyadicInt::embed(5, 4)));

    const std::string outer = to_json(Grid(2, PolyadicInt::embed(0, 4))).dump();
    const std::string inner = to_json(Grid(6, PolyadicInt::embed(4, 4))).dump();
    auto rel = run_cli({"grid", "relation", "--outer", outer, "--inner", inner});
    CHECK(Json::parse(rel.out) == Json::parse(R"({"relation":"absorbed"})"));

    auto part = run_cli({"partition", "--n", "3"});
    CHECK(Json::parse(part.out).at("grids").size() == 3);

    auto ref = run_cli({"refine", "--n", "2", "--k", "1"});
    const Json rj = Json::parse(ref.out);
    REQUIRE(rj.at("grids").size() == 3);
    CHECK(grid_from_json(rj.at("grids")[1]) == Grid(6, PolyadicInt::embed(3, 2)));
}

TEST_CASE("sequence payloads: json arrays, generators and stdin") {
    auto finite = run_cli({"limit", "--seq", "[4,4,4,4,4,4,4,4]", "--depth", "1", "--horizon",
                           "100"});
    CHECK(finite.code == 0);
    CHECK(Json::parse(finite.out).at("value") == to_json(PolyadicInt::embed(4, 1)));

    auto piped = run_cli({"limit", "--seq", "-", "--depth", "1", "--horizon", "100"},
                         "[4,4,4,4,4,4,4,4]");
    CHECK(piped.code == 0);
    CHECK(piped.out == finite.out);

    auto classify = run_cli({"classify", "--seq", "constant:4", "--horizon", "50", "--depth", "4",
                             "--prezero", "2", "--prezero", "3", "--prezero", "4"});
    CHECK(classify.code == 0);
    const Json j = Json::parse(classify.out);
    CHECK(j.at("absolute") == true);
    CHECK(j.at("value") == 4);
    CHECK(j.at("zero") == false);
    CHECK(j.at("prezero").at("2") == true);
    CHECK(j.at("prezero").at("3") == false);
    CHECK(j.at("prezero").at("4") == true);
}

TEST_CASE("exit codes distinguish domain and usage errors") {
    // Insufficient depth: 7 does not divide 5!.
    auto domain = run_cli({"res", "--mod", "7", "13", "--depth", "4"});
    CHECK(domain.code == 1);
    CHECK(domain.out.empty());
    CHECK(!domain.err.empty());

    // Unstable sequence.
    auto unstable = run_cli({"limit", "--seq", "affine:1,0", "--depth", "2", "--horizon", "50"});
    CHECK(unstable.code == 1);

    // Usage: unknown subcommand / missing arguments / malformed payload.
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({"digits"}).code == 2);
    CHECK(run_cli({"res", "--mod", "5", "not-json"}).code == 2);
    CHECK(run_cli({"limit", "--seq", "mystery:1", "--depth", "1"}).code == 2);

    // Unknown verify suite is a domain error from the suite registry.
    CHECK(run_cli({"verify", "nonesuch"}).code == 1);

    // embed rejects contradictory or missing inputs.
    CHECK(run_cli({"embed", "9", "--from-digits", "[1,2]"}).code == 2);
    CHECK(run_cli({"embed"}).code == 2);

    // Help succeeds.
    CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("malformed payloads are usage errors on every verb, never crashes") {
    const std::vector<std::vector<std::string>> bad = {
        {"add", "{broken", "2"},
        {"mul", "2", "{\"depth\":2}"},
        {"neg", "{\"depth\":2,\"digits\":[9,9]}"},
        {"divrem", "xyz", "--n", "2"},
        {"res", "{\"digits\":[0]}", "--mod", "2"},
        {"padic", "{]", "--p", "2", "--k", "1"},
        {"limit", "--seq", "[1,", "--depth", "1"},
        {"classify", "--seq", "affine:1", "--depth", "1"},
        {"char-eval", "--tower", "nope", "--fn", "{}"},
        {"char-eval", "--tower", "{\"depth\":1,\"digits\":[0]}", "--fn", "{\"period\":2}"},
        {"conv", "--op", "weird", "1", "2"},
        {"conv", "--op", "plus", "1"},
        {"conv", "--op", "reflect", "1", "2"},
        {"cluster", "oops", "2", "--n", "2"},
        {"grid", "contains", "--width", "x", "--center", "0", "--probe", "0"},
        {"grid", "intersect", "--a", "{}", "--b", "{}"},
        {"grid", "relation", "--outer", "junk", "--inner", "{}"},
        {"partition", "--n", "zero"},
        {"refine", "--n", "2", "--k", "junk"},
    };
    for (const auto& args : bad) {
        const auto r = run_cli(args);
        CHECK(r.code == 2);
        CHECK(!r.err.empty());
    }

    // Digit bounds in payloads are a domain error, surfaced as usage here
    // only when the JSON itself is malformed; a valid JSON with an invalid
    // digit vector is rejected either way without crashing.
    CHECK(run_cli({"embed", "--from-digits", "[9]"}).code != 0);
}

TEST_CASE("verify command reports per-property lines and json") {
    auto lines = run_cli({"verify", "convergence"});
    CHECK(lines.code == 0);
    CHECK(lines.out.find("PASS convergence/") != std::string::npos);
    CHECK(lines.out.find("FAIL") == std::string::npos);

    auto machine = run_cli({"verify", "indicator-basis", "--json"});
    CHECK(machine.code == 0);
    const Json j = Json::parse(machine.out);
    CHECK(j.at("suites")[0].at("suite") == "indicator-basis");
    CHECK(j.at("suites")[0].at("passed") == true);
}
