#pragma once

#include "torusk/ktheory.hpp"
#include "torusk/lattice.hpp"

#include <optional>
#include <vector>

namespace torusk {

/// A d-dimensional rational subtorus of the mapping torus T^{d+n} of a
/// Z^d translation action on T^n. Rows 0..d-1 of `param` are the base
/// directions, rows d..d+n-1 the fibre directions.
struct GeometricCocycle {
    int base_dim = 0;
    int fibre_dim = 0;
    IntMatrix param;              // (d+n) × d, primitive
    std::vector<Rational> offset; // length d+n

    /// Checks shape and primitivity. An empty offset means the origin.
    static GeometricCocycle make(int base_dim, int fibre_dim, IntMatrix param, std::vector<Rational> offset = {});

    /// Top d×d block of `param`.
    IntMatrix base_block() const;
};

/// Order of a torsion class; nullopt means non-torsion.
struct TorsionOrder {
    std::optional<Integer> order;

    bool is_finite() const { return order.has_value(); }
    bool operator==(const TorsionOrder&) const = default;
};

/// Cocycle cut out by A·(x) + U·(t) = 0, A n×d, U n×n nonsingular.
GeometricCocycle equations_to_parametrization(const IntMatrix& a, const IntMatrix& u);

/// Signed degree of the base projection: det of the base block (0 when
/// the cocycle is not transverse to the fibres).
Integer intersection_index(const GeometricCocycle& c);

/// Counts points of the cocycle torus lying over `base_point` by explicit
/// enumeration of the solutions of B·s ≡ base_point − offset (mod Z^d).
/// Throws PreconditionError when the base block is singular.
Integer intersection_index_oracle(const GeometricCocycle& c, const std::vector<Rational>& base_point);

/// Analytic index of the Dirac class paired with the cocycle; equal to the
/// intersection index by the index theorem.
Integer dirac_index(const GeometricCocycle& c);

/// Pushforward of the fundamental class of T^d into Λ(Z^{d+n}).
KClass cocycle_class(const GeometricCocycle& c);

/// e_{d+1..d+n} in Λ(Z^{d+n}).
KClass fibre_class(int base_dim, int fibre_dim);

TorsionOrder euler_torsion_order(const Integer& chi);

} // namespace torusk
