#pragma once

#include <Eigen/SparseCore>

#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace torusk {

using Complex = std::complex<double>;
using SparseMatrix = Eigen::SparseMatrix<Complex>;
using ModeLabel = std::vector<int>;

enum class OperatorForm {
    Hermitian, // square, M = M†, optional ±1 grading
    Square,    // square, no symmetry assumed (e.g. unitaries of the algebra)
    Block,     // odd part B: H+ -> H- of a graded operator [[0, B†], [B, 0]]
};

struct OperatorMeta {
    std::string name;
    std::map<std::string, double> params;
};

/// Finite section of an operator on a Fourier/Hermite mode space.
///
/// For Block form, `domain_labels` index H+ (columns) and `codomain_labels`
/// index H- (rows). For square forms the two label lists coincide.
struct TruncatedOperator {
    OperatorForm form = OperatorForm::Square;
    std::vector<ModeLabel> domain_labels;
    std::vector<ModeLabel> codomain_labels;
    SparseMatrix matrix;
    std::vector<int> grading; // Hermitian form only; empty when ungraded
    int cutoff = 0;
    OperatorMeta meta;

    Eigen::Index rows() const { return matrix.rows(); }
    Eigen::Index cols() const { return matrix.cols(); }
    bool is_graded() const { return form == OperatorForm::Block || !grading.empty(); }
};

/// Full self-adjoint operator [[0, B†], [B, 0]] on H+ ⊕ H-, grading +1 on
/// H+ and -1 on H-. Labels get a trailing 0 (H+) or 1 (H-).
TruncatedOperator assemble_hermitian(const TruncatedOperator& block);

/// The H+ -> H- part of a graded Hermitian operator.
TruncatedOperator odd_block(const TruncatedOperator& graded);

bool is_hermitian(const TruncatedOperator& op, double tol = 0.0);
/// P+ M P+ = 0 and P- M P- = 0 (up to tol).
bool is_graded_odd(const TruncatedOperator& op, double tol = 0.0);

/// Singular values, ascending, min(rows, cols) of them.
std::vector<double> singular_values(const SparseMatrix& m);
/// Eigenvalues of a Hermitian matrix, ascending.
std::vector<double> hermitian_eigenvalues(const SparseMatrix& m);
double operator_norm(const SparseMatrix& m);

/// Deformed Dolbeault operator on the (2N+1)^2 Fourier modes e_{m,n} of
/// L^2(A_θ) ≅ l^2(Z^2); returned as its block δ1 + iδ2 with symbol 2πm + i n.
/// θ does not enter.
TruncatedOperator build_dolbeault_torus(int cutoff);

/// U: e_{m,n} -> e_{m+1,n};  V: e_{m,n} -> e^{-2πiθm} e_{m,n+1}.
/// On interior modes U V = e^{2πiθ} V U.
std::pair<TruncatedOperator, TruncatedOperator> representation_generators(double theta, int cutoff);

struct IndexReport {
    long index = 0;
    long kernel_dim = 0;
    long cokernel_dim = 0;
    double sigma_max = 0.0;
    std::vector<double> singular_values; // ascending
};

/// dim ker B - dim ker B*, counting singular values below tol·σ_max.
IndexReport index_report(const TruncatedOperator& op, double tol = 1e-8);
long numerical_index(const TruncatedOperator& op, double tol = 1e-8);

/// q copies of the Hermite lowering operator e_k -> sqrt(k) e_{k-1},
/// domain modes 0..N, codomain 0..N-1. Requires gcd(p, q) = 1, q >= 1.
TruncatedOperator heisenberg_model(long p, long q, int cutoff, double theta = 0.6180339887498949);

/// θ' = (pθ + q)/(rθ + s) where ps - qr = 1.
double rotated_angle(long p, long q, double theta);

/// Product spectral triple for Z^d (d = 1, 2) acting on T^n by translations.
/// d = 1, n odd:  block D_X⊗1 - i(1⊗δ).
/// d = 1, n even: ungraded Hermitian D_X⊗1 + γ_X⊗δ.
/// d = 2, n odd:  block ∂̄⊗1 - i(1⊗D_X).
/// d = 2, n even: block of the graded product ∂̄⊗1 + γ⊗D_X.
TruncatedOperator build_schrodinger_product(int fibre_dim, int base_dim, int cutoff);

/// Diagonal Hermitian operator with the given eigenvalues (labels (k)).
TruncatedOperator diagonal_operator(const std::vector<double>& eigenvalues, int cutoff);

/// ‖op·gen − gen·op‖₂ restricted to modes whose label coordinates are all
/// at most N−1 in absolute value.
double commutator_norm(const TruncatedOperator& op, const TruncatedOperator& gen);

/// Spectrum magnitudes used for counting: singular values of a block or
/// a square operator, |eigenvalues| of a Hermitian one. Ascending.
std::vector<double> spectrum_magnitudes(const TruncatedOperator& op);

/// Least-squares slope of log N(λ) against log λ over the spectrum
/// magnitudes lying in [lo, hi]. Requires 0 < lo, lo >= hi/4, hi <= π·N.
double weyl_exponent(const TruncatedOperator& op, double lo, double hi);

} // namespace torusk
