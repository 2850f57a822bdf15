#include "polyadic/cli.hpp"

#include "polyadic/errors.hpp"
#include "polyadic/json_io.hpp"
#include "polyadic/polyadic.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace polyadic::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp_if_stdin(const std::string& arg, std::istream& in) {
    if (arg != "-") {
        return arg;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("invalid JSON payload: ") + e.what());
    }
}

bool looks_like_integer(const std::string& s) {
    if (s.empty()) {
        return false;
    }
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) {
        return false;
    }
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            return false;
        }
    }
    return true;
}

BigInt parse_bigint(const std::string& s) {
    if (!looks_like_integer(s)) {
        throw UsageError("expected an integer, got '" + s + "'");
    }
    return BigInt(s);
}

/// A tower argument: a bare integer (embedded at the ambient depth) or a
/// PolyadicInt / Character JSON object.
PolyadicInt parse_tower(const std::string& arg, unsigned depth, std::istream& in) {
    const std::string text = slurp_if_stdin(arg, in);
    if (looks_like_integer(text)) {
        return PolyadicInt::embed(BigInt(text), depth);
    }
    const Json j = parse_json(text);
    try {
        return polyadic_int_from_json(j);
    } catch (const std::exception& e) {
        throw UsageError(std::string("invalid tower payload: ") + e.what());
    }
}

PeriodicFunction parse_function(const std::string& arg, std::istream& in) {
    const Json j = parse_json(slurp_if_stdin(arg, in));
    try {
        return periodic_function_from_json(j);
    } catch (const std::exception& e) {
        throw UsageError(std::string("invalid periodic function payload: ") + e.what());
    }
}

Grid parse_grid(const std::string& arg, std::istream& in) {
    const Json j = parse_json(slurp_if_stdin(arg, in));
    try {
        return grid_from_json(j);
    } catch (const polyadic::error&) {
        throw;
    } catch (const std::exception& e) {
        throw UsageError(std::string("invalid grid payload: ") + e.what());
    }
}

IntSequence parse_sequence(const std::string& arg, std::istream& in) {
    const std::string text = slurp_if_stdin(arg, in);
    if (!text.empty() && text[0] == '[') {
        const Json j = parse_json(text);
        std::vector<BigInt> values;
        for (const Json& entry : j) {
            values.push_back(big_from_json(entry));
        }
        return IntSequence::from_list(std::move(values));
    }
    const std::size_t colon = text.find(':');
    const std::string name = text.substr(0, colon);
    const std::string params = colon == std::string::npos ? "" : text.substr(colon + 1);
    if (name == "constant") {
        return IntSequence::constant(parse_bigint(params));
    }
    if (name == "factorial-sum") {
        return IntSequence::factorial_sum();
    }
    if (name == "factorial") {
        if (!params.empty() && params != "k!") {
            throw UsageError("generator 'factorial' takes no parameters");
        }
        return IntSequence::factorial();
    }
    if (name == "affine") {
        const std::size_t comma = params.find(',');
        if (comma == std::string::npos) {
            throw UsageError("generator 'affine' needs two parameters a,b");
        }
        return IntSequence::affine(parse_bigint(params.substr(0, comma)),
                                   parse_bigint(params.substr(comma + 1)));
    }
    throw UsageError("unknown sequence '" + text +
                     "' (expected a JSON array or constant:m, factorial, factorial-sum, affine:a,b)");
}

Json report_to_json(const StabilizationReport& report) {
    Json j;
    j["target_depth"] = report.target_depth;
    j["witness_index"] = report.witness_index;
    j["checked_upto"] = report.checked_upto;
    j["status"] =
        report.status == StabilizationStatus::Stable ? "stable" : "not-yet-stable";
    j["window"] = report.window;
    return j;
}

Json complex_to_json(const Complex& z) {
    return Json::array({z.real(), z.imag()});
}

void emit(std::ostream& out, const Json& j) {
    out << j.dump() << "\n";
}

int run_checked(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                std::ostream& err) {
    CLI::App app{"exact arithmetic on truncated polyadic integers and the ring of characters "
                 "of periodic functions on Z"};
    app.require_subcommand(1);

    unsigned depth = 8;
    std::uint64_t horizon = 200;
    std::uint64_t window = 0;

    // digits
    auto* cmd_digits = app.add_subcommand("digits", "factorial digits of an integer");
    std::string digits_m;
    cmd_digits->add_option("m", digits_m, "integer to convert")->required();
    cmd_digits->add_option("--depth", depth, "tower depth");

    // embed
    auto* cmd_embed = app.add_subcommand("embed", "embed an integer or digit vector as a tower");
    std::string embed_m;
    std::string embed_digits;
    cmd_embed->add_option("m", embed_m, "integer to embed");
    cmd_embed->add_option("--from-digits", embed_digits, "JSON array of factorial digits");
    cmd_embed->add_option("--depth", depth, "tower depth");

    // add / mul / neg
    auto* cmd_add = app.add_subcommand("add", "sum of two towers");
    auto* cmd_mul = app.add_subcommand("mul", "product of two towers");
    auto* cmd_neg = app.add_subcommand("neg", "additive inverse of a tower");
    std::string lhs, rhs, single;
    for (auto* cmd : {cmd_add, cmd_mul}) {
        cmd->add_option("a", lhs, "tower JSON or integer")->required();
        cmd->add_option("b", rhs, "tower JSON or integer")->required();
        cmd->add_option("--depth", depth, "embedding depth for integer operands");
    }
    cmd_neg->add_option("a", single, "tower JSON or integer")->required();
    cmd_neg->add_option("--depth", depth, "embedding depth for integer operands");

    // divrem
    auto* cmd_divrem = app.add_subcommand("divrem", "division with remainder by an integer");
    std::string divrem_a, divrem_n;
    cmd_divrem->add_option("a", divrem_a, "tower JSON or integer")->required();
    cmd_divrem->add_option("--n", divrem_n, "positive divisor")->required();
    cmd_divrem->add_option("--depth", depth, "embedding depth for integer operands");

    // res
    auto* cmd_res = app.add_subcommand("res", "residue of a tower modulo n");
    std::string res_a, res_mod;
    cmd_res->add_option("a", res_a, "tower JSON or integer")->required();
    cmd_res->add_option("--mod", res_mod, "modulus")->required();
    cmd_res->add_option("--depth", depth, "embedding depth for integer operands");

    // padic
    auto* cmd_padic = app.add_subcommand("padic", "base-p digits of a tower");
    std::string padic_a, padic_p;
    unsigned padic_k = 0;
    cmd_padic->add_option("a", padic_a, "tower JSON or integer")->required();
    cmd_padic->add_option("--p", padic_p, "radix >= 2")->required();
    cmd_padic->add_option("--k", padic_k, "digit count")->required();
    cmd_padic->add_option("--depth", depth, "embedding depth for integer operands");

    // limit
    auto* cmd_limit = app.add_subcommand("limit", "stabilized tower of an integer sequence");
    std::string limit_seq;
    cmd_limit->add_option("--seq", limit_seq, "sequence (JSON array or named generator)")
        ->required();
    cmd_limit->add_option("--depth", depth, "tower depth");
    cmd_limit->add_option("--horizon", horizon, "number of terms to inspect");
    cmd_limit->add_option("--window", window, "required agreeing tail length (0 = 2*(depth+1))");

    // classify
    auto* cmd_classify = app.add_subcommand("classify", "classify a sequence's stabilized value");
    std::string classify_seq;
    std::string classify_max_abs = "0";
    std::vector<std::string> classify_prezero;
    cmd_classify->add_option("--seq", classify_seq, "sequence (JSON array or named generator)")
        ->required();
    cmd_classify->add_option("--depth", depth, "tower depth");
    cmd_classify->add_option("--horizon", horizon, "number of terms to inspect");
    cmd_classify->add_option("--window", window, "required agreeing tail length");
    cmd_classify->add_option("--max-abs", classify_max_abs,
                             "largest |value| accepted as integer (0 = horizon)");
    cmd_classify->add_option("--prezero", classify_prezero, "also report p-prezero status");

    // char-eval
    auto* cmd_char_eval = app.add_subcommand("char-eval", "evaluate a character on a function");
    std::string char_tower, char_fn;
    cmd_char_eval->add_option("--tower", char_tower, "character or tower JSON")->required();
    cmd_char_eval->add_option("--fn", char_fn, "periodic function JSON")->required();

    // conv
    auto* cmd_conv = app.add_subcommand("conv", "convolution of characters");
    std::string conv_op, conv_a, conv_b;
    cmd_conv->add_option("--op", conv_op, "plus | dot | reflect")->required();
    cmd_conv->add_option("a", conv_a, "character/tower JSON or integer")->required();
    cmd_conv->add_option("b", conv_b, "second operand (not for reflect)");
    cmd_conv->add_option("--depth", depth, "embedding depth for integer operands");

    // cluster
    auto* cmd_cluster = app.add_subcommand("cluster", "test agreement on n-periodic functions");
    std::string cluster_a, cluster_b, cluster_n;
    cmd_cluster->add_option("a", cluster_a, "character/tower JSON or integer")->required();
    cmd_cluster->add_option("b", cluster_b, "character/tower JSON or integer")->required();
    cmd_cluster->add_option("--n", cluster_n, "width")->required();
    cmd_cluster->add_option("--depth", depth, "embedding depth for integer operands");

    // grid
    auto* cmd_grid = app.add_subcommand("grid", "grid membership, intersection, relation");
    auto* cmd_grid_contains = cmd_grid->add_subcommand("contains", "membership test");
    std::string grid_width, grid_center, grid_probe;
    cmd_grid_contains->add_option("--width", grid_width, "grid width")->required();
    cmd_grid_contains->add_option("--center", grid_center, "tower JSON or integer")->required();
    cmd_grid_contains->add_option("--probe", grid_probe, "tower JSON or integer")->required();
    cmd_grid_contains->add_option("--depth", depth, "embedding depth for integer operands");
    auto* cmd_grid_intersect = cmd_grid->add_subcommand("intersect", "intersection of two grids");
    std::string grid_a, grid_b;
    cmd_grid_intersect->add_option("--a", grid_a, "grid JSON")->required();
    cmd_grid_intersect->add_option("--b", grid_b, "grid JSON")->required();
    auto* cmd_grid_relation =
        cmd_grid->add_subcommand("relation", "absorbed-or-disjoint for nested widths");
    std::string grid_outer, grid_inner;
    cmd_grid_relation->add_option("--outer", grid_outer, "grid JSON")->required();
    cmd_grid_relation->add_option("--inner", grid_inner, "grid JSON")->required();
    cmd_grid->require_subcommand(1);

    // partition
    auto* cmd_partition = app.add_subcommand("partition", "split everything into width-N grids");
    std::string partition_n;
    std::optional<unsigned> partition_depth;
    cmd_partition->add_option("--n", partition_n, "number of grids / width")->required();
    cmd_partition->add_option("--depth", partition_depth, "center depth (default: minimal)");

    // refine
    auto* cmd_refine = app.add_subcommand("refine", "split a width-n! grid into width-(n+1)! grids");
    unsigned refine_n = 0;
    std::string refine_k;
    cmd_refine->add_option("--n", refine_n, "factorial level")->required();
    cmd_refine->add_option("--k", refine_k, "center in [0, n!)")->required();

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "run a named property suite");
    std::string verify_suite;
    bool verify_json = false;
    verify::Options vopts;
    cmd_verify->add_option("suite", verify_suite, "suite name or 'all'")->required();
    cmd_verify->add_option("--depth", vopts.depth, "tower depth");
    cmd_verify->add_option("--seed", vopts.seed, "random seed");
    cmd_verify->add_option("--horizon", vopts.horizon, "sequence horizon");
    cmd_verify->add_option("--n", vopts.cluster_n, "largest width for neighborhood suites");
    cmd_verify->add_option("--radius", vopts.radius, "neighborhood radius");
    cmd_verify->add_option("--trials", vopts.trials, "randomized trial count (0 = suite default)");
    cmd_verify->add_flag("--json", verify_json, "machine-readable report");

    try {
        // CLI11's vector overload consumes the arguments back to front.
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::Success& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    if (cmd_digits->parsed()) {
        Json j;
        j["digits"] = PolyadicInt::embed(parse_bigint(digits_m), depth).to_digits().digits();
        emit(out, j);
        return 0;
    }
    if (cmd_embed->parsed()) {
        PolyadicInt alpha;
        if (!embed_digits.empty()) {
            if (!embed_m.empty()) {
                throw UsageError("embed takes either an integer or --from-digits, not both");
            }
            const Json array = parse_json(slurp_if_stdin(embed_digits, in));
            std::vector<std::uint32_t> ds;
            for (const Json& entry : array) {
                ds.push_back(entry.get<std::uint32_t>());
            }
            alpha = PolyadicInt::from_digits(FactorialDigits(std::move(ds)));
        } else if (!embed_m.empty()) {
            alpha = PolyadicInt::embed(parse_bigint(embed_m), depth);
        } else {
            throw UsageError("embed needs an integer or --from-digits");
        }
        Json j = to_json(alpha);
        j["value"] = big_to_json(alpha.value());
        emit(out, j);
        return 0;
    }
    if (cmd_add->parsed() || cmd_mul->parsed()) {
        const PolyadicInt a = parse_tower(lhs, depth, in);
        const PolyadicInt b = parse_tower(rhs, depth, in);
        emit(out, to_json(cmd_add->parsed() ? a + b : a * b));
        return 0;
    }
    if (cmd_neg->parsed()) {
        emit(out, to_json(-parse_tower(single, depth, in)));
        return 0;
    }
    if (cmd_divrem->parsed()) {
        const auto [gamma, r] = parse_tower(divrem_a, depth, in).div_rem(parse_bigint(divrem_n));
        Json j;
        j["gamma"] = to_json(gamma);
        j["rem"] = big_to_json(r);
        emit(out, j);
        return 0;
    }
    if (cmd_res->parsed()) {
        Json j;
        j["res"] = big_to_json(parse_tower(res_a, depth, in).residue_mod(parse_bigint(res_mod)));
        emit(out, j);
        return 0;
    }
    if (cmd_padic->parsed()) {
        Json j;
        j["digits"] = parse_tower(padic_a, depth, in).padic_digits(parse_bigint(padic_p), padic_k);
        emit(out, j);
        return 0;
    }
    if (cmd_limit->parsed()) {
        const LimitResult limit = limit_upto(parse_sequence(limit_seq, in), depth, horizon, window);
        Json j;
        j["value"] = to_json(limit.value);
        j["report"] = report_to_json(limit.report);
        emit(out, j);
        return 0;
    }
    if (cmd_classify->parsed()) {
        const IntSequence seq = parse_sequence(classify_seq, in);
        const auto value =
            classify_absolute_upto(seq, depth, horizon, window, parse_bigint(classify_max_abs));
        Json j;
        j["absolute"] = value.has_value();
        j["value"] = value ? big_to_json(*value) : Json(nullptr);
        j["zero"] = is_zero_sequence_upto(seq, depth, horizon, window);
        if (!classify_prezero.empty()) {
            Json pz = Json::object();
            for (const std::string& p : classify_prezero) {
                pz[p] = is_prezero_upto(seq, parse_bigint(p), horizon, window);
            }
            j["prezero"] = std::move(pz);
        }
        emit(out, j);
        return 0;
    }
    if (cmd_char_eval->parsed()) {
        const Json tower_json = parse_json(slurp_if_stdin(char_tower, in));
        const Character psi = character_from_json(tower_json);
        emit(out, complex_to_json(psi.eval(parse_function(char_fn, in))));
        return 0;
    }
    if (cmd_conv->parsed()) {
        const Character a(parse_tower(conv_a, depth, in));
        if (conv_op == "reflect") {
            if (!conv_b.empty()) {
                throw UsageError("reflect takes a single operand");
            }
            emit(out, to_json(reflect(a)));
            return 0;
        }
        if (conv_b.empty()) {
            throw UsageError("conv --op " + conv_op + " needs two operands");
        }
        const Character b(parse_tower(conv_b, depth, in));
        if (conv_op == "plus") {
            emit(out, to_json(conv_plus(a, b)));
        } else if (conv_op == "dot") {
            emit(out, to_json(conv_dot(a, b)));
        } else {
            throw UsageError("unknown convolution '" + conv_op + "' (plus, dot, reflect)");
        }
        return 0;
    }
    if (cmd_cluster->parsed()) {
        const Character a(parse_tower(cluster_a, depth, in));
        const Character b(parse_tower(cluster_b, depth, in));
        Json j;
        j["equal"] = a.cluster_equal(b, parse_bigint(cluster_n));
        emit(out, j);
        return 0;
    }
    if (cmd_grid->parsed()) {
        if (cmd_grid_contains->parsed()) {
            const Grid g(parse_bigint(grid_width), parse_tower(grid_center, depth, in));
            Json j;
            j["contains"] = g.contains(parse_tower(grid_probe, depth, in));
            emit(out, j);
            return 0;
        }
        if (cmd_grid_intersect->parsed()) {
            const auto meet = intersect(parse_grid(grid_a, in), parse_grid(grid_b, in));
            Json j;
            if (meet) {
                j["empty"] = false;
                j["grid"] = to_json(*meet);
            } else {
                j["empty"] = true;
            }
            emit(out, j);
            return 0;
        }
        const GridRelation rel =
            grids_relation(parse_grid(grid_outer, in), parse_grid(grid_inner, in));
        Json j;
        j["relation"] = rel == GridRelation::Absorbed ? "absorbed" : "disjoint";
        emit(out, j);
        return 0;
    }
    if (cmd_partition->parsed()) {
        Json grids = Json::array();
        for (const Grid& g : partition(parse_bigint(partition_n), partition_depth)) {
            grids.push_back(to_json(g));
        }
        Json j;
        j["grids"] = std::move(grids);
        emit(out, j);
        return 0;
    }
    if (cmd_refine->parsed()) {
        Json grids = Json::array();
        for (const Grid& g : refine(refine_n, parse_bigint(refine_k))) {
            grids.push_back(to_json(g));
        }
        Json j;
        j["grids"] = std::move(grids);
        emit(out, j);
        return 0;
    }
    if (cmd_verify->parsed()) {
        std::vector<verify::SuiteResult> results;
        if (verify_suite == "all") {
            results = verify::run_all(vopts);
        } else {
            results.push_back(verify::run_suite(verify_suite, vopts));
        }
        bool all_ok = true;
        if (verify_json) {
            Json suites = Json::array();
            for (const verify::SuiteResult& suite : results) {
                Json properties = Json::array();
                for (const verify::PropertyResult& prop : suite.properties) {
                    Json p;
                    p["property"] = prop.property;
                    p["passed"] = prop.passed;
                    if (!prop.passed) {
                        p["counterexample"] = prop.counterexample;
                    }
                    properties.push_back(std::move(p));
                }
                Json s;
                s["suite"] = suite.suite;
                s["passed"] = suite.all_passed();
                s["properties"] = std::move(properties);
                suites.push_back(std::move(s));
                all_ok = all_ok && suite.all_passed();
            }
            emit(out, Json{{"suites", std::move(suites)}});
        } else {
            for (const verify::SuiteResult& suite : results) {
                for (const verify::PropertyResult& prop : suite.properties) {
                    if (prop.passed) {
                        out << "PASS " << suite.suite << "/" << prop.property << "\n";
                    } else {
                        out << "FAIL " << suite.suite << "/" << prop.property << ": "
                            << prop.counterexample << "\n";
                        all_ok = false;
                    }
                }
            }
        }
        return all_ok ? 0 : 1;
    }
    throw UsageError("no command given");
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    try {
        return run_checked(args, in, out, err);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const polyadic::error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace polyadic::cli
