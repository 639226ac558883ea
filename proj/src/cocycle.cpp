#include "torusk/cocycle.hpp"

#include "torusk/errors.hpp"

#include <numeric>
#include <set>

namespace torusk {

GeometricCocycle GeometricCocycle::make(int base_dim, int fibre_dim, IntMatrix param, std::vector<Rational> offset) {
    if (base_dim < 0 || fibre_dim < 0)
        throw ValidationError("cocycle: negative dimension");
    const auto total = static_cast<std::size_t>(base_dim + fibre_dim);
    if (param.rows() != total || param.cols() != static_cast<std::size_t>(base_dim))
        throw ValidationError("cocycle: param must be (d+n) x d");
    if (offset.empty())
        offset.assign(total, Rational(0));
    if (offset.size() != total)
        throw ValidationError("cocycle: offset must have length d+n");
    if (!is_primitive_basis(param))
        throw PreconditionError("cocycle: param columns are not a primitive basis of full rank");
    return GeometricCocycle{base_dim, fibre_dim, std::move(param), std::move(offset)};
}

IntMatrix GeometricCocycle::base_block() const {
    std::vector<std::size_t> rows(static_cast<std::size_t>(base_dim));
    std::iota(rows.begin(), rows.end(), std::size_t{0});
    return param.select_rows(rows);
}

GeometricCocycle equations_to_parametrization(const IntMatrix& a, const IntMatrix& u) {
    const std::size_t n = u.rows();
    if (u.cols() != n)
        throw ValidationError("equations: U must be square");
    if (a.rows() != n)
        throw ValidationError("equations: A must have as many rows as U");
    if (sgn(determinant(u)) == 0)
        throw PreconditionError("equations: U is singular over Q");
    const IntMatrix system = a.hconcat(u);
    if (rank(system) != n)
        throw PreconditionError("equations: [A | U] is rank deficient");
    IntMatrix param = kernel_lattice(system);
    const int d = static_cast<int>(a.cols());
    if (param.cols() != a.cols())
        throw PreconditionError("equations: kernel rank differs from base dimension");
    return GeometricCocycle::make(d, static_cast<int>(n), std::move(param));
}

Integer intersection_index(const GeometricCocycle& c) { return determinant(c.base_block()); }

namespace {

Rational frac(const Rational& x) {
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    Rational r = x - Rational(fl);
    r.canonicalize();
    return r;
}

} // namespace

Integer intersection_index_oracle(const GeometricCocycle& c, const std::vector<Rational>& base_point) {
    const auto d = static_cast<std::size_t>(c.base_dim);
    if (base_point.size() != d)
        throw ValidationError("oracle: base point must have length d");
    const IntMatrix b = c.base_block();
    const SmithForm s = smith_normal_form(b);
    if (s.rank() != d)
        throw PreconditionError("oracle: base block is singular, the cocycle is not transverse");

    std::vector<Rational> target(d);
    for (std::size_t i = 0; i < d; ++i)
        target[i] = base_point[i] - c.offset[i];

    // B = U^{-1} D V^{-1}; with y = V^{-1} s the congruence B s ≡ target
    // becomes D y ≡ U target, which splits coordinatewise.
    std::vector<Rational> rhs(d, Rational(0));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            rhs[i] += Rational(s.U(i, j)) * target[j];

    std::set<std::vector<Rational>> solutions;
    std::vector<Integer> counter(d, Integer(0));
    for (;;) {
        std::vector<Rational> y(d);
        for (std::size_t i = 0; i < d; ++i) {
            y[i] = (rhs[i] + Rational(counter[i])) / Rational(s.D(i, i));
            y[i].canonicalize();
        }
        std::vector<Rational> x(d, Rational(0));
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j)
                x[i] += Rational(s.V(i, j)) * y[j];
            x[i] = frac(x[i]);
        }
        // confirm the candidate really solves the original congruence
        for (std::size_t i = 0; i < d; ++i) {
            Rational lhs = -target[i];
            for (std::size_t j = 0; j < d; ++j)
                lhs += Rational(b(i, j)) * x[j];
            lhs.canonicalize();
            if (lhs.get_den() != 1)
                throw NumericalError("oracle: enumerated point fails the congruence");
        }
        solutions.insert(std::move(x));

        std::size_t k = 0;
        while (k < d) {
            if (++counter[k] < s.D(k, k))
                break;
            counter[k] = 0;
            ++k;
        }
        if (k == d)
            break;
    }
    return Integer(static_cast<unsigned long>(solutions.size()));
}

Integer dirac_index(const GeometricCocycle& c) { return intersection_index(c); }

KClass cocycle_class(const GeometricCocycle& c) { return pushforward(c.param, KClass::top(c.base_dim)); }

KClass fibre_class(int base_dim, int fibre_dim) {
    if (base_dim < 0 || fibre_dim < 0)
        throw ValidationError("fibre_class: negative dimension");
    Subset fibre(static_cast<std::size_t>(fibre_dim));
    std::iota(fibre.begin(), fibre.end(), base_dim + 1);
    return KClass::basis(base_dim + fibre_dim, std::move(fibre));
}

TorsionOrder euler_torsion_order(const Integer& chi) {
    if (sgn(chi) == 0)
        return TorsionOrder{};
    return TorsionOrder{abs(chi)};
}

} // namespace torusk
