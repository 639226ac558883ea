#include "torusk/json_io.hpp"

#include "torusk/errors.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

namespace torusk::json_io {

json to_json(const Integer& x) {
    if (x.fits_slong_p())
        return static_cast<std::int64_t>(x.get_si());
    return x.get_str();
}

Integer integer_from_json(const json& j) {
    if (j.is_number_integer())
        return j.is_number_unsigned() ? Integer(std::to_string(j.get<std::uint64_t>()))
                                      : Integer(std::to_string(j.get<std::int64_t>()));
    if (j.is_string()) {
        Integer x;
        if (x.set_str(j.get<std::string>(), 10) != 0)
            throw ValidationError("expected an integer, got \"" + j.get<std::string>() + "\"");
        return x;
    }
    throw ValidationError("expected an integer, got " + j.dump());
}

json to_json(const Rational& x) { return x.get_num().get_str() + "/" + x.get_den().get_str(); }

Rational rational_from_json(const json& j) {
    if (j.is_number_integer())
        return Rational(integer_from_json(j));
    if (!j.is_string())
        throw ValidationError("expected a rational \"p/q\", got " + j.dump());
    Rational q;
    if (q.set_str(j.get<std::string>(), 10) != 0 || q.get_den() == 0)
        throw ValidationError("malformed rational \"" + j.get<std::string>() + "\"");
    q.canonicalize();
    return q;
}

json to_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix matrix_from_json(const json& j) {
    if (!j.is_array())
        throw ValidationError("matrix must be an array of rows");
    std::vector<std::vector<Integer>> rows;
    for (const auto& row : j) {
        if (!row.is_array())
            throw ValidationError("matrix row must be an array");
        std::vector<Integer> r;
        for (const auto& x : row)
            r.push_back(integer_from_json(x));
        rows.push_back(std::move(r));
    }
    return IntMatrix::from_rows(rows);
}

json terms_to_json(const KClass& k) {
    json terms = json::array();
    for (const auto& [subset, coeff] : k.terms())
        terms.push_back({{"subset", subset}, {"coeff", to_json(coeff)}});
    return terms;
}

json to_json(const KClass& k) { return {{"d", k.ambient_dim()}, {"terms", terms_to_json(k)}}; }

namespace {

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw ValidationError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

int int_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_number_integer())
        throw ValidationError(std::string("field \"") + key + "\" must be an integer");
    return v.get<int>();
}

} // namespace

KClass kclass_from_json(const json& j, std::optional<int> d) {
    const json* terms = &j;
    if (j.is_object()) {
        d = int_field(j, "d");
        terms = &field(j, "terms");
    }
    if (!d)
        throw ValidationError("class given as a bare term list needs an ambient dimension (--d)");
    if (!terms->is_array())
        throw ValidationError("\"terms\" must be an array");
    KClass k(*d);
    for (const auto& t : *terms) {
        const json& subset = field(t, "subset");
        if (!subset.is_array())
            throw ValidationError("\"subset\" must be an array of integers");
        Subset s;
        for (const auto& x : subset) {
            if (!x.is_number_integer())
                throw ValidationError("\"subset\" must be an array of integers");
            s.push_back(x.get<int>());
        }
        k.add(s, integer_from_json(field(t, "coeff")));
    }
    return k;
}

json to_json(const Subtorus& t) {
    return {{"d", t.ambient_dim}, {"basis", to_json(t.basis)}, {"orientation", t.orientation}};
}

Subtorus subtorus_from_json(const json& j) {
    const int d = int_field(j, "d");
    IntMatrix basis = matrix_from_json(field(j, "basis"));
    if (basis.rows() == 0 && d > 0)
        basis = IntMatrix(static_cast<std::size_t>(d), 0);
    const int orientation = j.contains("orientation") ? int_field(j, "orientation") : 1;
    return Subtorus::make(d, std::move(basis), orientation);
}

json to_json(const GeometricCocycle& c) {
    json offset = json::array();
    for (const auto& x : c.offset)
        offset.push_back(to_json(x));
    return {{"d", c.base_dim}, {"n", c.fibre_dim}, {"param", to_json(c.param)}, {"offset", offset}};
}

GeometricCocycle cocycle_from_json(const json& j) {
    const int d = int_field(j, "d");
    const int n = int_field(j, "n");
    IntMatrix param = matrix_from_json(field(j, "param"));
    if (param.rows() == 0 && d + n > 0)
        param = IntMatrix(static_cast<std::size_t>(d + n), 0);
    std::vector<Rational> offset;
    if (j.contains("offset")) {
        if (!j.at("offset").is_array())
            throw ValidationError("\"offset\" must be an array");
        for (const auto& x : j.at("offset"))
            offset.push_back(rational_from_json(x));
    }
    return GeometricCocycle::make(d, n, std::move(param), std::move(offset));
}

std::pair<IntMatrix, IntMatrix> equations_from_json(const json& j) {
    return {matrix_from_json(field(j, "A")), matrix_from_json(field(j, "U"))};
}

json to_json(const SmithForm& s) {
    json divisors = json::array();
    for (const auto& d : s.diagonal())
        divisors.push_back(to_json(d));
    return {{"U", to_json(s.U)}, {"D", to_json(s.D)}, {"V", to_json(s.V)}, {"rank", s.rank()}, {"divisors", divisors}};
}

json to_json(const CokernelInvariants& c) {
    json divisors = json::array();
    for (const auto& d : c.divisors)
        divisors.push_back(to_json(d));
    return {{"divisors", divisors}, {"cardinality", c.cardinality ? to_json(*c.cardinality) : json("infinite")}};
}

json to_json(const TorsionOrder& t) {
    if (t.is_finite())
        return {{"kind", "finite"}, {"order", to_json(*t.order)}};
    return {{"kind", "infinite"}};
}

double round12(double x) {
    if (!std::isfinite(x) || x == 0.0)
        return x;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

json to_json(const SpectralReport& r) {
    json params = json::object();
    for (const auto& [k, v] : r.params)
        params[k] = round12(v);
    json head = json::array();
    for (double v : r.singular_values_head)
        head.push_back(round12(v));
    json norms = json::object();
    for (const auto& [k, v] : r.commutator_norms)
        norms[k] = round12(v);
    return {{"name", r.name},
            {"params", params},
            {"N", r.cutoff},
            {"index", r.index ? json(*r.index) : json(nullptr)},
            {"singular_values_head", head},
            {"weyl_slope", r.weyl_slope ? json(round12(*r.weyl_slope)) : json(nullptr)},
            {"commutator_norms", norms}};
}

} // namespace torusk::json_io
