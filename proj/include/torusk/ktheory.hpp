#pragma once

#include "torusk/lattice.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace torusk {

/// Strictly increasing 1-based coordinate indices.
using Subset = std::vector<int>;

/// Orders subsets by size, then lexicographically.
struct SubsetOrder {
    bool operator()(const Subset& a, const Subset& b) const {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    }
};

/// A class in K_*(T^d), modelled as an element of the exterior algebra
/// Λ(Z^d) in the basis e_k, k ⊆ {1..d}. Zero coefficients are never stored,
/// so two classes are equal iff their term maps are equal.
class KClass {
public:
    using Terms = std::map<Subset, Integer, SubsetOrder>;

    explicit KClass(int ambient_dim);

    static KClass basis(int ambient_dim, Subset subset);
    static KClass top(int ambient_dim);

    int ambient_dim() const { return dim_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Adds coeff·e_subset; throws ValidationError for an unsorted or
    /// out-of-range subset.
    void add(const Subset& subset, const Integer& coeff);
    Integer coefficient(const Subset& subset) const;

    /// Degree if every term has the same |k|.
    std::optional<int> degree() const;
    /// 0 or 1 if all terms share |k| mod 2; nullopt for mixed (or zero) classes.
    std::optional<int> parity() const;

    KClass& operator+=(const KClass& other);
    KClass& operator-=(const KClass& other);
    KClass operator-() const;
    friend KClass operator+(KClass a, const KClass& b) { return a += b; }
    friend KClass operator-(KClass a, const KClass& b) { return a -= b; }
    friend KClass operator*(const Integer& s, const KClass& a);
    bool operator==(const KClass& other) const = default;

    std::string to_string() const;

private:
    void check_compatible(const KClass& other, const char* op) const;

    int dim_;
    Terms terms_;
};

/// Rational linear subtorus of T^d given by a primitive basis of its lattice.
struct Subtorus {
    int ambient_dim = 0;
    IntMatrix basis; // ambient_dim × j
    int orientation = 1;

    /// Validates the invariants (primitive, full column rank, orientation ±1).
    static Subtorus make(int ambient_dim, IntMatrix basis, int orientation = 1);
    int dim() const { return static_cast<int>(basis.cols()); }
};

/// Sign of the permutation sorting the concatenation (k, l); 0 if they overlap.
int shuffle_sign(const Subset& k, const Subset& l);

Subset complement(int ambient_dim, const Subset& k);

KClass wedge(const KClass& a, const KClass& b);

/// Sign in e_k ↦ (−1)^{d·r + r(r−1)/2} [k^⊥], r = |k|.
int fm_sign(int ambient_dim, int degree);

/// [k^⊥] in the exterior basis: the dual coordinate embedding, oriented so
/// that e_k ∧ [k^⊥] = +e_{1..d}.
KClass dual_coordinate_class(int ambient_dim, const Subset& k);

KClass fm_transform(const KClass& a);
KClass fm_inverse(const KClass& a);

/// Λ(A) applied to a; A is target_dim × a.ambient_dim().
KClass pushforward(const IntMatrix& a, const KClass& cls);

KClass class_of_subtorus(const Subtorus& t);

/// Annihilator subtorus. Kernel basis in column Hermite form, last column
/// negated if needed so det[T.basis | T⊥.basis] > 0. A 0-dimensional perp
/// carries orientation sign(det T.basis)·T.orientation.
Subtorus perp_subtorus(const Subtorus& t);

/// Coefficient of e_{1..d} in a ∧ b.
Integer pairing(const KClass& a, const KClass& b);

} // namespace torusk
