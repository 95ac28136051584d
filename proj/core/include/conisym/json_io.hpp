#pragma once

#include "conisym/grading.hpp"
#include "conisym/groebner.hpp"
#include "conisym/poisson.hpp"
#include "conisym/subst.hpp"

#include <optional>
#include <string>
#include <vector>

namespace conisym {

// Serialized form of a Poisson matrix with its grading:
//   {"vars": [...], "s": int, "d": [...], "entries": {"i,j": "<poly>"}, "f"?}
// Only entries with i < j are stored (1-based keys). "d" lists one degree per
// Poisson generator; extra ring variables (parameters) carry no degree.
struct PoissonBundle {
    std::vector<std::string> vars;     // full ring, length = ring arity
    long s = 1;
    std::vector<long> degrees;         // length = matrix size
    std::optional<std::vector<Rational>> w;
    PoissonMatrix theta{1, 1};
    std::optional<Polynomial> f;

    GradingData grading() const;       // degrees extended by the w-weights
};

std::string poisson_bundle_to_json(const PoissonBundle& bundle, int indent = 2);
PoissonBundle poisson_bundle_from_json(std::string_view text);

// {"vars": [...], "images": {"x": "<poly>", ...}}
std::string substitution_to_json(const TriangularSubstitution& sub,
                                 std::span<const std::string> vars, int indent = 2);
TriangularSubstitution substitution_from_json(std::string_view text);

// {"order": "...", "vars": [...], "generators": [...]}
std::string groebner_to_json(const GroebnerBasis& gb, std::span<const std::string> vars,
                             int indent = 2);

} // namespace conisym
