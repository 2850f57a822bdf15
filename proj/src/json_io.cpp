#include "polyadic/json_io.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace polyadic {

Json big_to_json(const BigInt& v) {
    if (fits_int64(v)) {
        return v.convert_to<std::int64_t>();
    }
    return v.str();
}

BigInt big_from_json(const Json& j) {
    if (j.is_number_integer()) {
        return BigInt(j.get<std::int64_t>());
    }
    if (j.is_string()) {
        return BigInt(j.get<std::string>());
    }
    throw std::invalid_argument("expected an integer or a decimal string");
}

Json to_json(const PolyadicInt& alpha) {
    Json j;
    j["depth"] = alpha.depth();
    j["digits"] = alpha.to_digits().digits();
    return j;
}

PolyadicInt polyadic_int_from_json(const Json& j) {
    const auto depth = j.at("depth").get<unsigned>();
    auto digits = j.at("digits").get<std::vector<std::uint32_t>>();
    if (digits.size() != depth) {
        throw std::invalid_argument("PolyadicInt JSON: digit count must equal depth");
    }
    return PolyadicInt::from_digits(FactorialDigits(std::move(digits)));
}

Json to_json(const ResidueClaim& claim) {
    Json j;
    j["mod"] = big_to_json(claim.modulus());
    j["res"] = big_to_json(claim.residue());
    return j;
}

ResidueClaim residue_claim_from_json(const Json& j) {
    return ResidueClaim(big_from_json(j.at("mod")), big_from_json(j.at("res")));
}

Json to_json(const PeriodicFunction& u) {
    Json j;
    j["period"] = u.period();
    Json values = Json::array();
    for (const Complex& z : u.values()) {
        values.push_back(Json::array({z.real(), z.imag()}));
    }
    j["values"] = std::move(values);
    return j;
}

PeriodicFunction periodic_function_from_json(const Json& j) {
    const auto period = j.at("period").get<std::int64_t>();
    std::vector<Complex> values;
    for (const Json& entry : j.at("values")) {
        if (!entry.is_array() || entry.size() != 2) {
            throw std::invalid_argument("PeriodicFunction JSON: values must be [re, im] pairs");
        }
        values.emplace_back(entry[0].get<double>(), entry[1].get<double>());
    }
    return PeriodicFunction(period, std::move(values));
}

Json to_json(const Character& psi) {
    Json j;
    j["kind"] = "character";
    const Json tower = to_json(psi.tower_of());
    j["depth"] = tower.at("depth");
    j["digits"] = tower.at("digits");
    return j;
}

Character character_from_json(const Json& j) {
    if (j.contains("kind") && j.at("kind").get<std::string>() != "character") {
        throw std::invalid_argument("Character JSON: kind must be \"character\"");
    }
    return Character(polyadic_int_from_json(j));
}

Json to_json(const Grid& grid) {
    Json j;
    j["width"] = big_to_json(grid.width());
    j["center"] = to_json(grid.center());
    return j;
}

Grid grid_from_json(const Json& j) {
    return Grid(big_from_json(j.at("width")), polyadic_int_from_json(j.at("center")));
}

} // namespace polyadic
