#include "oracles.hpp"

#include "torusk/errors.hpp"
#include "torusk/ktheory.hpp"

#include <doctest.h>

using namespace torusk;

namespace {

KClass e(int d, Subset k) { return KClass::basis(d, std::move(k)); }

std::vector<Subset> all_subsets(int d) {
    std::vector<Subset> out;
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
        Subset s;
        for (int i = 0; i < d; ++i)
            if (mask & (1u << i))
                s.push_back(i + 1);
        out.push_back(s);
    }
    return out;
}

int sign_formula(int d, int r) { return ((d * r + r * (r - 1) / 2) % 2 == 0) ? 1 : -1; }

Subset concat(const Subset& a, const Subset& b) {
    Subset c = a;
    c.insert(c.end(), b.begin(), b.end());
    return c;
}

} // namespace

TEST_CASE("KClass canonical form") {
    KClass a(3);
    a.add({1, 2}, 2);
    a.add({1, 2}, -2);
    CHECK(a.is_zero());
    CHECK_THROWS_AS(a.add({2, 1}, 1), ValidationError);
    CHECK_THROWS_AS(a.add({4}, 1), ValidationError);
    CHECK_THROWS_AS(a.add({1, 1}, 1), ValidationError);
    const KClass mixed = e(3, {1}) + e(3, {1, 2});
    CHECK_FALSE(mixed.parity());
    CHECK_FALSE(mixed.degree());
    CHECK(*(e(3, {1}) + e(3, {1, 2, 3})).parity() == 1);
    CHECK(e(2, {1}) + e(2, {2}) == e(2, {2}) + e(2, {1}));
}

TEST_CASE("wedge product") {
    CHECK(wedge(e(2, {1}), e(2, {2})) == e(2, {1, 2}));
    CHECK(wedge(e(2, {2}), e(2, {1})) == -e(2, {1, 2}));
    CHECK(wedge(e(2, {1}), e(2, {1})).is_zero());
    CHECK_THROWS_AS(wedge(e(2, {1}), e(3, {1})), ValidationError);

    SUBCASE("shuffle sign matches bubble sort") {
        const auto subsets = all_subsets(5);
        for (const auto& k : subsets)
            for (const auto& l : subsets)
                REQUIRE(shuffle_sign(k, l) == oracle::bubble_sign(concat(k, l)));
    }
    SUBCASE("associative and graded commutative") {
        const int d = 5;
        const auto subsets = all_subsets(d);
        for (const auto& k : subsets)
            for (const auto& l : subsets) {
                const KClass a = e(d, k), b = e(d, l);
                const int s = (k.size() * l.size()) % 2 == 0 ? 1 : -1;
                REQUIRE(wedge(a, b) == Integer(s) * wedge(b, a));
                for (const auto& m : subsets)
                    REQUIRE(wedge(wedge(a, b), e(d, m)) == wedge(a, wedge(b, e(d, m))));
            }
    }
}

TEST_CASE("Fourier-Mukai transform") {
    SUBCASE("d = 1") {
        CHECK(fm_transform(e(1, {})) == e(1, {1}));
        CHECK(fm_transform(e(1, {1})) == -e(1, {}));
    }
    SUBCASE("d = 2") {
        CHECK(fm_transform(e(2, {1})) == e(2, {2}));
        CHECK(fm_transform(e(2, {1, 2})) == -e(2, {}));
    }
    SUBCASE("inverse, d = 1") {
        CHECK(fm_inverse(e(1, {1})) == e(1, {}));
        CHECK(fm_inverse(e(1, {})) == -e(1, {1}));
    }
    SUBCASE("sign table against the closed formula") {
        for (int d = 1; d <= 6; ++d)
            for (const auto& k : all_subsets(d)) {
                const Subset kc = complement(d, k);
                const KClass dual = Integer(oracle::bubble_sign(concat(k, kc))) * e(d, kc);
                REQUIRE(dual_coordinate_class(d, k) == dual);
                REQUIRE(pairing(e(d, k), dual) == 1);
                REQUIRE(fm_transform(e(d, k)) == Integer(sign_formula(d, static_cast<int>(k.size()))) * dual);
            }
    }
    SUBCASE("involution and degree shift") {
        for (int d = 0; d <= 8; ++d)
            for (const auto& k : all_subsets(d)) {
                const KClass a = e(d, k);
                const KClass f = fm_transform(a);
                REQUIRE(*f.degree() == d - static_cast<int>(k.size()));
                REQUIRE(f.terms().size() == 1);
                REQUIRE(fm_inverse(f) == a);
                REQUIRE(fm_transform(fm_inverse(a)) == a);
            }
    }
    SUBCASE("linear") {
        const KClass a = Integer(3) * e(3, {1}) - e(3, {2, 3}) + Integer(5) * e(3, {});
        CHECK(fm_transform(a) == Integer(3) * fm_transform(e(3, {1})) - fm_transform(e(3, {2, 3})) +
                                     Integer(5) * fm_transform(e(3, {})));
        CHECK(fm_inverse(fm_transform(a)) == a);
    }
}

TEST_CASE("pushforward") {
    CHECK(pushforward(IntMatrix::identity(3), e(3, {1, 3})) == e(3, {1, 3}));
    CHECK(pushforward(IntMatrix{{1}, {1}}, e(1, {1})) == e(2, {1}) + e(2, {2}));
    CHECK(pushforward(IntMatrix{{1, 0}, {0, 1}, {0, 0}}, e(2, {1, 2})) == e(3, {1, 2}));
    CHECK_THROWS_AS(pushforward(IntMatrix{{1, 0}}, e(3, {1})), ValidationError);

    SUBCASE("top-class coefficients are maximal minors") {
        std::mt19937_64 rng(5);
        for (int trial = 0; trial < 100; ++trial) {
            const std::size_t j = 1 + trial % 3;
            const std::size_t d = j + trial % 3;
            const IntMatrix a = oracle::random_matrix(rng, d, j, -5, 5);
            const KClass img = pushforward(a, KClass::top(static_cast<int>(j)));
            for (const auto& rows : all_subsets(static_cast<int>(d))) {
                if (rows.size() != j)
                    continue;
                std::vector<std::size_t> r0;
                for (int r : rows)
                    r0.push_back(static_cast<std::size_t>(r - 1));
                REQUIRE(img.coefficient(rows) == oracle::leibniz_det(a.select_rows(r0)));
            }
        }
    }
}

TEST_CASE("subtorus classes") {
    CHECK(class_of_subtorus(Subtorus::make(2, IntMatrix{{1}, {0}})) == e(2, {1}));
    CHECK(class_of_subtorus(Subtorus::make(2, IntMatrix{{1}, {1}})) == e(2, {1}) + e(2, {2}));
    CHECK(class_of_subtorus(Subtorus::make(2, IntMatrix(2, 0))) == e(2, {}));
    CHECK(class_of_subtorus(Subtorus::make(2, IntMatrix{{1}, {0}}, -1)) == -e(2, {1}));
    CHECK_THROWS_AS(Subtorus::make(2, IntMatrix{{2}, {2}}), PreconditionError);
    CHECK_THROWS_AS(Subtorus::make(2, IntMatrix{{1}, {0}}, 0), ValidationError);

    SUBCASE("Plücker covariance") {
        std::mt19937_64 rng(17);
        for (int trial = 0; trial < 100; ++trial) {
            const std::size_t d = 1 + trial % 5;
            const std::size_t j = trial % (d + 1);
            const IntMatrix v = oracle::random_primitive(rng, d, j);
            const IntMatrix g = oracle::random_unimodular(rng, j);
            const auto t = Subtorus::make(static_cast<int>(d), v);
            const auto tg = Subtorus::make(static_cast<int>(d), v * g);
            REQUIRE(class_of_subtorus(tg) == oracle::leibniz_det(g) * class_of_subtorus(t));
        }
    }
}

TEST_CASE("perp subtorus") {
    SUBCASE("coordinate circle in T^3") {
        const Subtorus p = perp_subtorus(Subtorus::make(3, IntMatrix{{1}, {0}, {0}}));
        CHECK(p.basis == IntMatrix{{0, 0}, {1, 0}, {0, 1}});
        CHECK(class_of_subtorus(p) == e(3, {2, 3}));
    }
    SUBCASE("diagonal circle in T^2") {
        const Subtorus p = perp_subtorus(Subtorus::make(2, IntMatrix{{1}, {1}}));
        CHECK(((p.basis == IntMatrix{{1}, {-1}}) || (p.basis == IntMatrix{{-1}, {1}})));
        CHECK(sgn(determinant(IntMatrix{{1}, {1}}.hconcat(p.basis))) > 0);
    }
    SUBCASE("full torus") {
        const Subtorus p = perp_subtorus(Subtorus::make(2, IntMatrix::identity(2)));
        CHECK(p.dim() == 0);
        CHECK(class_of_subtorus(p) == e(2, {}));
    }
    SUBCASE("duality: FM maps [T] to ±[T-perp]") {
        std::mt19937_64 rng(23);
        for (int trial = 0; trial < 100; ++trial) {
            const std::size_t d = 1 + trial % 5;
            const std::size_t j = trial % (d + 1);
            const auto t = Subtorus::make(static_cast<int>(d), oracle::random_primitive(rng, d, j));
            const Subtorus p = perp_subtorus(t);
            REQUIRE(p.dim() == static_cast<int>(d - j));
            REQUIRE(oracle::product(t.basis.transpose(), p.basis).is_zero());
            const KClass lhs = fm_transform(class_of_subtorus(t));
            const KClass rhs = class_of_subtorus(p);
            REQUIRE(((lhs == rhs) || (lhs == -rhs)));
        }
    }
}

TEST_CASE("intersection pairing") {
    CHECK(pairing(e(2, {1}), e(2, {2})) == 1);
    CHECK(pairing(e(2, {1}), e(2, {1})) == 0);
    CHECK(pairing(e(2, {1}) + e(2, {2}), e(2, {1}) - e(2, {2})) == -2);
    CHECK_THROWS_AS(pairing(e(2, {1}), e(3, {2})), ValidationError);
    for (int d = 1; d <= 6; ++d) {
        const auto subsets = all_subsets(d);
        for (const auto& k : subsets)
            for (const auto& l : subsets) {
                const Integer p = pairing(e(d, k), e(d, l));
                if (l == complement(d, k))
                    REQUIRE(abs(p) == 1);
                else
                    REQUIRE(p == 0);
                REQUIRE(p == wedge(e(d, k), e(d, l)).coefficient(complement(d, {})));
            }
    }
}
