#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace torusk {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense matrix of arbitrary-precision integers, row-major.
/// Empty shapes (0×n, n×0) are valid.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols_if_empty = 0);
    static IntMatrix column(const std::vector<Integer>& entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntMatrix transpose() const;
    IntMatrix select_columns(const std::vector<std::size_t>& cols) const;
    IntMatrix select_rows(const std::vector<std::size_t>& rows) const;
    IntMatrix hconcat(const IntMatrix& right) const;
    std::vector<Integer> col(std::size_t c) const;

    bool is_zero() const;
    bool operator==(const IntMatrix& other) const;

    std::string to_string() const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

/// U·A·V = D, U and V unimodular, D diagonal with d_1 | d_2 | ... and d_i >= 0.
struct SmithForm {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;

    std::size_t rank() const;
    std::vector<Integer> diagonal() const;
};

/// Exact determinant (fraction-free Bareiss). 0×0 has determinant 1.
Integer determinant(const IntMatrix& a);

std::size_t rank(const IntMatrix& a);

SmithForm smith_normal_form(const IntMatrix& a);

/// Row-style Hermite normal form of the row lattice: upper echelon, positive
/// pivots, entries above each pivot reduced into [0, pivot). Zero rows dropped.
IntMatrix hermite_normal_form(const IntMatrix& a);

/// Basis of {x in Z^cols : A x = 0} as columns, in column Hermite form.
IntMatrix kernel_lattice(const IntMatrix& a);

struct CokernelInvariants {
    std::vector<Integer> divisors;      // nonzero diagonal of the Smith form
    std::optional<Integer> cardinality; // nullopt: infinite
};

CokernelInvariants cokernel_invariants(const IntMatrix& a);

/// Columns independent and extendable to a Z-basis.
bool is_primitive_basis(const IntMatrix& v);

} // namespace torusk
