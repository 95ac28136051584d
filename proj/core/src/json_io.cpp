#include "conisym/json_io.hpp"

#include "conisym/poly_io.hpp"

#include <json.hpp>

#include <stdexcept>

namespace conisym {

using nlohmann::ordered_json;

GradingData PoissonBundle::grading() const {
    GradingData g;
    g.s = s;
    g.degrees = degrees;
    g.w = w;
    return g;
}

std::string poisson_bundle_to_json(const PoissonBundle& bundle, int indent) {
    ordered_json j;
    j["vars"] = bundle.vars;
    j["s"] = bundle.s;
    j["d"] = bundle.degrees;
    if (bundle.w) {
        std::vector<std::string> w;
        for (const auto& r : *bundle.w) w.push_back(to_string(r));
        j["w"] = w;
    }
    if (bundle.theta.size() != bundle.vars.size()) j["n"] = bundle.theta.size();
    ordered_json entries = ordered_json::object();
    for (std::size_t i = 0; i < bundle.theta.size(); ++i)
        for (std::size_t k = i + 1; k < bundle.theta.size(); ++k) {
            const Polynomial& e = bundle.theta.entry(i, k);
            if (e.is_zero()) continue;
            std::string key = std::to_string(i + 1) + "," + std::to_string(k + 1);
            entries[key] = format_polynomial(e, bundle.vars);
        }
    j["entries"] = entries;
    if (bundle.f) j["f"] = format_polynomial(*bundle.f, bundle.vars);
    return j.dump(indent) + "\n";
}

PoissonBundle poisson_bundle_from_json(std::string_view text) {
    ordered_json j = ordered_json::parse(text);
    PoissonBundle bundle;
    bundle.vars = j.at("vars").get<std::vector<std::string>>();
    bundle.s = j.at("s").get<long>();
    bundle.degrees = j.at("d").get<std::vector<long>>();
    if (j.contains("w")) {
        std::vector<Rational> w;
        for (const auto& item : j.at("w")) w.push_back(rational_from_string(item.get<std::string>()));
        bundle.w = std::move(w);
    }
    std::size_t n = j.contains("n") ? j.at("n").get<std::size_t>() : bundle.vars.size();
    if (bundle.degrees.size() != n)
        throw std::invalid_argument("poisson JSON: d must list one degree per generator");
    bundle.theta = PoissonMatrix(n, bundle.vars.size());
    for (const auto& [key, value] : j.at("entries").items()) {
        auto comma = key.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("poisson JSON: entry key must be \"i,j\"");
        std::size_t i = std::stoul(key.substr(0, comma));
        std::size_t k = std::stoul(key.substr(comma + 1));
        if (i < 1 || k <= i || k > n)
            throw std::invalid_argument("poisson JSON: entry key out of range: " + key);
        bundle.theta.set_entry(i - 1, k - 1,
                               parse_polynomial(value.get<std::string>(), bundle.vars));
    }
    if (j.contains("f"))
        bundle.f = parse_polynomial(j.at("f").get<std::string>(), bundle.vars);
    return bundle;
}

std::string substitution_to_json(const TriangularSubstitution& sub,
                                 std::span<const std::string> vars, int indent) {
    if (vars.size() != sub.arity())
        throw std::invalid_argument("substitution_to_json: variable list arity mismatch");
    ordered_json j;
    j["vars"] = std::vector<std::string>(vars.begin(), vars.end());
    ordered_json images = ordered_json::object();
    for (std::size_t i = 0; i < sub.arity(); ++i)
        images[vars[i]] = format_polynomial(sub.image(i), vars);
    j["images"] = images;
    return j.dump(indent) + "\n";
}

TriangularSubstitution substitution_from_json(std::string_view text) {
    ordered_json j = ordered_json::parse(text);
    auto vars = j.at("vars").get<std::vector<std::string>>();
    std::vector<Polynomial> images;
    images.reserve(vars.size());
    for (const auto& name : vars)
        images.push_back(parse_polynomial(j.at("images").at(name).get<std::string>(), vars));
    return TriangularSubstitution(std::move(images));
}

std::string groebner_to_json(const GroebnerBasis& gb, std::span<const std::string> vars,
                             int indent) {
    ordered_json j;
    j["order"] = gb.order().describe();
    j["vars"] = std::vector<std::string>(vars.begin(), vars.end());
    ordered_json gens = ordered_json::array();
    for (const auto& g : gb.generators()) gens.push_back(format_polynomial(g, vars));
    j["generators"] = gens;
    return j.dump(indent) + "\n";
}

} // namespace conisym
