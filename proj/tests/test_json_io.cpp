#include "oracles.hpp"

#include "torusk/errors.hpp"
#include "torusk/json_io.hpp"

#include <doctest.h>

using namespace torusk;
using namespace torusk::json_io;

TEST_CASE("integers and rationals") {
    CHECK(to_json(Integer(-7)) == json(-7));
    const Integer big("340282366920938463463374607431768211456");
    CHECK(to_json(big) == json("340282366920938463463374607431768211456"));
    CHECK(integer_from_json(to_json(big)) == big);
    CHECK_THROWS_AS(integer_from_json(json(1.5)), ValidationError);
    CHECK_THROWS_AS(integer_from_json(json("12a")), ValidationError);

    CHECK(to_json(Rational(6, 4)) == json("6/4")); // not canonicalized by construction
    CHECK(rational_from_json(json("6/4")) == Rational(3, 2));
    CHECK(rational_from_json(json(5)) == Rational(5));
    CHECK_THROWS_AS(rational_from_json(json("1/0")), ValidationError);
}

TEST_CASE("KClass schema") {
    const json j = json::parse(R"({"d": 3, "terms": [{"subset": [1, 3], "coeff": 2}, {"subset": [], "coeff": -1}]})");
    const KClass k = kclass_from_json(j);
    CHECK(k.coefficient({1, 3}) == 2);
    CHECK(k.coefficient({}) == -1);
    CHECK(kclass_from_json(to_json(k)) == k);

    const json bare = json::parse(R"([{"subset": [], "coeff": 1}])");
    CHECK(kclass_from_json(bare, 1) == KClass::basis(1, {}));
    CHECK_THROWS_AS(kclass_from_json(bare), ValidationError);
    CHECK_THROWS_AS(kclass_from_json(json::parse(R"({"d": 2, "terms": [{"subset": [3], "coeff": 1}]})")),
                    ValidationError);
    CHECK_THROWS_AS(kclass_from_json(json::parse(R"({"d": 2})")), ValidationError);
}

TEST_CASE("round trip of random classes through the schema") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> coeff(-50, 50);
    for (int trial = 0; trial < 200; ++trial) {
        const int d = 1 + trial % 6;
        KClass k(d);
        for (unsigned mask = 0; mask < (1u << d); ++mask) {
            Subset s;
            for (int i = 0; i < d; ++i)
                if (mask & (1u << i))
                    s.push_back(i + 1);
            k.add(s, coeff(rng) % 3 == 0 ? coeff(rng) : 0);
        }
        REQUIRE(kclass_from_json(json::parse(to_json(k).dump())) == k);
    }
}

TEST_CASE("subtorus and cocycle schemas") {
    const Subtorus t = subtorus_from_json(json::parse(R"({"d": 2, "basis": [[1], [1]], "orientation": -1})"));
    CHECK(t.orientation == -1);
    CHECK(t.basis == IntMatrix{{1}, {1}});
    CHECK(subtorus_from_json(to_json(t)).basis == t.basis);
    CHECK_THROWS_AS(subtorus_from_json(json::parse(R"({"d": 2, "basis": [[2], [2]]})")), PreconditionError);
    const Subtorus point = subtorus_from_json(json::parse(R"({"d": 2, "basis": [[], []]})"));
    CHECK(point.dim() == 0);

    const auto c = cocycle_from_json(json::parse(R"({"d": 1, "n": 1, "param": [[3], [2]], "offset": ["1/2", "0/1"]})"));
    CHECK(c.offset[0] == Rational(1, 2));
    const auto c2 = cocycle_from_json(to_json(c));
    CHECK(c2.param == c.param);
    CHECK(c2.offset == c.offset);
    CHECK_THROWS_AS(cocycle_from_json(json::parse(R"({"d": 1, "param": [[3], [2]]})")), ValidationError);

    const auto [a, u] = equations_from_json(json::parse(R"({"A": [[1, 0], [0, 1]], "U": [[2, 0], [0, 3]]})"));
    CHECK(u == IntMatrix{{2, 0}, {0, 3}});
    CHECK(a == IntMatrix::identity(2));
}

TEST_CASE("spectral report") {
    SpectralReport r;
    r.name = "dolbeault_torus";
    r.cutoff = 4;
    r.index = 0;
    r.singular_values_head = {0.0, 1.0 / 3.0};
    r.commutator_norms["U"] = 6.283185307179586;
    const json j = to_json(r);
    CHECK(j.at("weyl_slope").is_null());
    CHECK(j.at("singular_values_head")[1].get<double>() == 0.333333333333);
    CHECK(j.at("commutator_norms").at("U").get<double>() == 6.28318530718);
    for (const char* key : {"name", "params", "N", "index", "singular_values_head", "weyl_slope", "commutator_norms"})
        CHECK(j.contains(key));
}
