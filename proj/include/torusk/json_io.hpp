#pragma once

#include "torusk/cocycle.hpp"
#include "torusk/ktheory.hpp"
#include "torusk/lattice.hpp"
#include "torusk/spectral.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace torusk::json_io {

using json = nlohmann::json;

// Integers outside the int64 range travel as decimal strings.
json to_json(const Integer& x);
Integer integer_from_json(const json& j);

// Rationals travel as "p/q" strings (plain integers accepted on input).
json to_json(const Rational& x);
Rational rational_from_json(const json& j);

json to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const json& j);

/// { "d": int, "terms": [ { "subset": [ints], "coeff": int } ] }
json to_json(const KClass& k);
json terms_to_json(const KClass& k);
/// Accepts the object form, or a bare terms array when `d` is supplied.
KClass kclass_from_json(const json& j, std::optional<int> d = std::nullopt);

/// { "d": int, "basis": [[int]], "orientation": ±1 }
json to_json(const Subtorus& t);
Subtorus subtorus_from_json(const json& j);

/// { "d": int, "n": int, "param": [[int]], "offset": [ "p/q" ] }
json to_json(const GeometricCocycle& c);
GeometricCocycle cocycle_from_json(const json& j);

/// { "A": [[int]], "U": [[int]] }
std::pair<IntMatrix, IntMatrix> equations_from_json(const json& j);

json to_json(const SmithForm& s);
json to_json(const CokernelInvariants& c);
json to_json(const TorsionOrder& t);

/// Rounds to 12 significant digits.
double round12(double x);

struct SpectralReport {
    std::string name;
    std::map<std::string, double> params;
    int cutoff = 0;
    std::optional<long> index;
    std::vector<double> singular_values_head;
    std::optional<double> weyl_slope;
    std::map<std::string, double> commutator_norms;
};

/// { "name", "params", "N", "index", "singular_values_head", "weyl_slope",
///   "commutator_norms" }; absent optionals serialize as null.
json to_json(const SpectralReport& r);

} // namespace torusk::json_io
