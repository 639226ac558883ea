#include "torusk/spectral.hpp"

#include "torusk/errors.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <unordered_map>

namespace torusk {

namespace {

using Triplet = Eigen::Triplet<Complex>;
using Index = Eigen::Index;

constexpr double two_pi = 2.0 * std::numbers::pi;
constexpr std::size_t max_modes = 4'000'000;

SparseMatrix from_triplets(Index rows, Index cols, const std::vector<Triplet>& t) {
    SparseMatrix m(rows, cols);
    m.setFromTriplets(t.begin(), t.end());
    m.makeCompressed();
    return m;
}

/// A labelled factor of a tensor-product mode space.
struct Factor {
    std::vector<ModeLabel> labels;
    SparseMatrix op;
};

std::vector<ModeLabel> label_product(const std::vector<ModeLabel>& a, const std::vector<ModeLabel>& b) {
    if (a.size() * b.size() > max_modes)
        throw ValidationError("mode space too large for dense-block analysis");
    std::vector<ModeLabel> out;
    out.reserve(a.size() * b.size());
    for (const auto& la : a)
        for (const auto& lb : b) {
            ModeLabel l = la;
            l.insert(l.end(), lb.begin(), lb.end());
            out.push_back(std::move(l));
        }
    return out;
}

SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b) {
    std::vector<Triplet> t;
    t.reserve(static_cast<std::size_t>(a.nonZeros() * b.nonZeros()));
    for (Index ka = 0; ka < a.outerSize(); ++ka)
        for (SparseMatrix::InnerIterator ia(a, ka); ia; ++ia)
            for (Index kb = 0; kb < b.outerSize(); ++kb)
                for (SparseMatrix::InnerIterator ib(b, kb); ib; ++ib)
                    t.emplace_back(ia.row() * b.rows() + ib.row(), ia.col() * b.cols() + ib.col(),
                                   ia.value() * ib.value());
    return from_triplets(a.rows() * b.rows(), a.cols() * b.cols(), t);
}

SparseMatrix identity(Index n) {
    SparseMatrix m(n, n);
    m.setIdentity();
    return m;
}

SparseMatrix diagonal(const std::vector<Complex>& d) {
    std::vector<Triplet> t;
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] != Complex(0.0))
            t.emplace_back(static_cast<Index>(i), static_cast<Index>(i), d[i]);
    const auto n = static_cast<Index>(d.size());
    return from_triplets(n, n, t);
}

std::vector<ModeLabel> range_labels(int lo, int hi) {
    std::vector<ModeLabel> l;
    for (int k = lo; k <= hi; ++k)
        l.push_back({k});
    return l;
}

// Fourier modes of T^n truncated to |k_j| <= N, lexicographic.
std::vector<ModeLabel> torus_modes(int dim, int cutoff) {
    std::vector<ModeLabel> labels{ModeLabel{}};
    for (int j = 0; j < dim; ++j)
        labels = label_product(labels, range_labels(-cutoff, cutoff));
    return labels;
}

// Symbol 2πm + i·n of δ1 + iδ2 on the T^2 modes.
SparseMatrix dolbeault_symbol(const std::vector<ModeLabel>& modes) {
    std::vector<Complex> d;
    d.reserve(modes.size());
    for (const auto& l : modes)
        d.emplace_back(two_pi * l[0], static_cast<double>(l[1]));
    return diagonal(d);
}

const SparseMatrix& pauli(char which) {
    static const SparseMatrix x = from_triplets(2, 2, {{0, 1, 1.0}, {1, 0, 1.0}});
    static const SparseMatrix y = from_triplets(2, 2, {{0, 1, Complex(0, -1)}, {1, 0, Complex(0, 1)}});
    static const SparseMatrix z = from_triplets(2, 2, {{0, 0, 1.0}, {1, 1, -1.0}});
    return which == 'x' ? x : which == 'y' ? y : z;
}

struct Clifford {
    std::vector<SparseMatrix> gammas; // n anticommuting self-adjoint involutions
    SparseMatrix chirality;           // anticommutes with all gammas when n is even
    Index dim = 1;
};

// Jordan–Wigner construction on floor(n/2) qubits.
Clifford clifford(int n) {
    const int qubits = n / 2;
    Clifford c;
    c.dim = Index{1} << qubits;
    auto string_op = [&](int pos, char mid) {
        SparseMatrix m = identity(1);
        for (int q = 0; q < qubits; ++q)
            m = kron(m, q < pos ? pauli('z') : q == pos ? pauli(mid) : identity(2));
        return m;
    };
    for (int a = 0; a < qubits; ++a) {
        c.gammas.push_back(string_op(a, 'x'));
        c.gammas.push_back(string_op(a, 'y'));
    }
    SparseMatrix all_z = identity(1);
    for (int q = 0; q < qubits; ++q)
        all_z = kron(all_z, pauli('z'));
    if (n % 2 == 1)
        c.gammas.push_back(all_z);
    c.chirality = all_z;
    return c;
}

// Spinor Dirac operator Σ_j (2π k_j) ⊗ γ_j on Fourier(T^n) ⊗ S.
Factor torus_dirac(int n, int cutoff, const Clifford& cl) {
    Factor f;
    const auto modes = torus_modes(n, cutoff);
    f.labels = label_product(modes, range_labels(0, static_cast<int>(cl.dim) - 1));
    const auto size = static_cast<Index>(f.labels.size());
    f.op = SparseMatrix(size, size);
    for (int j = 0; j < n; ++j) {
        std::vector<Complex> d;
        d.reserve(modes.size());
        for (const auto& l : modes)
            d.emplace_back(two_pi * l[j]);
        f.op += kron(diagonal(d), cl.gammas[j]);
    }
    f.op.makeCompressed();
    return f;
}

struct Component {
    std::vector<Index> rows;
    std::vector<Index> cols;
};

// Connected components of the bipartite row/column graph of the nonzeros.
// With tie_diagonal, row i and column i always share a component.
std::vector<Component> components(const SparseMatrix& m, bool tie_diagonal = false) {
    const Index rows = m.rows();
    std::vector<Index> parent(static_cast<std::size_t>(rows + m.cols()));
    std::iota(parent.begin(), parent.end(), Index{0});
    auto find = [&](Index x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (Index k = 0; k < m.outerSize(); ++k)
        for (SparseMatrix::InnerIterator it(m, k); it; ++it) {
            if (it.value() == Complex(0.0))
                continue;
            const Index a = find(it.row());
            const Index b = find(rows + it.col());
            if (a != b)
                parent[std::max(a, b)] = std::min(a, b);
        }
    if (tie_diagonal)
        for (Index i = 0; i < std::min(rows, m.cols()); ++i) {
            const Index a = find(i);
            const Index b = find(rows + i);
            if (a != b)
                parent[std::max(a, b)] = std::min(a, b);
        }
    std::unordered_map<Index, std::size_t> slot;
    std::vector<Component> out;
    for (Index v = 0; v < static_cast<Index>(parent.size()); ++v) {
        const Index r = find(v);
        auto [it, inserted] = slot.try_emplace(r, out.size());
        if (inserted)
            out.emplace_back();
        auto& c = out[it->second];
        if (v < rows)
            c.rows.push_back(v);
        else
            c.cols.push_back(v - rows);
    }
    return out;
}

Eigen::MatrixXcd dense_block(const SparseMatrix& m, const Component& c) {
    std::unordered_map<Index, Index> row_pos;
    for (std::size_t i = 0; i < c.rows.size(); ++i)
        row_pos[c.rows[i]] = static_cast<Index>(i);
    Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(static_cast<Index>(c.rows.size()), static_cast<Index>(c.cols.size()));
    for (std::size_t j = 0; j < c.cols.size(); ++j)
        for (SparseMatrix::InnerIterator it(m, c.cols[j]); it; ++it)
            d(row_pos.at(it.row()), static_cast<Index>(j)) = it.value();
    return d;
}

void check_finite(double v, const char* what) {
    if (!std::isfinite(v))
        throw NumericalError(std::string(what) + ": non-finite value");
}

bool interior(const ModeLabel& l, int cutoff) {
    return std::all_of(l.begin(), l.end(), [&](int x) { return std::abs(x) <= cutoff - 1; });
}

} // namespace

std::vector<double> singular_values(const SparseMatrix& m) {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(std::min(m.rows(), m.cols())));
    for (const auto& c : components(m)) {
        if (c.rows.empty() || c.cols.empty())
            continue;
        if (c.rows.size() == 1 && c.cols.size() == 1) {
            out.push_back(std::abs(m.coeff(c.rows[0], c.cols[0])));
            continue;
        }
        Eigen::BDCSVD<Eigen::MatrixXcd> svd(dense_block(m, c));
        for (Index i = 0; i < svd.singularValues().size(); ++i)
            out.push_back(svd.singularValues()(i));
    }
    out.resize(static_cast<std::size_t>(std::min(m.rows(), m.cols())), 0.0);
    for (double v : out)
        check_finite(v, "singular_values");
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<double> hermitian_eigenvalues(const SparseMatrix& m) {
    if (m.rows() != m.cols())
        throw ValidationError("hermitian_eigenvalues: matrix is not square");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(m.rows()));
    for (const auto& c : components(m, true)) {
        if (c.rows != c.cols)
            throw ValidationError("hermitian_eigenvalues: matrix is not structurally symmetric");
        if (c.rows.size() == 1) {
            out.push_back(m.coeff(c.rows[0], c.cols[0]).real());
            continue;
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(dense_block(m, c), Eigen::EigenvaluesOnly);
        if (es.info() != Eigen::Success)
            throw NumericalError("hermitian_eigenvalues: eigensolver did not converge");
        for (Index i = 0; i < es.eigenvalues().size(); ++i)
            out.push_back(es.eigenvalues()(i));
    }
    for (double v : out)
        check_finite(v, "hermitian_eigenvalues");
    std::sort(out.begin(), out.end());
    return out;
}

double operator_norm(const SparseMatrix& m) {
    const auto sv = singular_values(m);
    return sv.empty() ? 0.0 : sv.back();
}

TruncatedOperator assemble_hermitian(const TruncatedOperator& block) {
    if (block.form != OperatorForm::Block)
        throw ValidationError("assemble_hermitian: operator is not in block form");
    const Index plus = block.cols();
    const Index minus = block.rows();
    std::vector<Triplet> t;
    t.reserve(static_cast<std::size_t>(2 * block.matrix.nonZeros()));
    for (Index k = 0; k < block.matrix.outerSize(); ++k)
        for (SparseMatrix::InnerIterator it(block.matrix, k); it; ++it) {
            t.emplace_back(plus + it.row(), it.col(), it.value());
            t.emplace_back(it.col(), plus + it.row(), std::conj(it.value()));
        }
    TruncatedOperator h;
    h.form = OperatorForm::Hermitian;
    h.matrix = from_triplets(plus + minus, plus + minus, t);
    for (auto l : block.domain_labels) {
        l.push_back(0);
        h.domain_labels.push_back(std::move(l));
    }
    for (auto l : block.codomain_labels) {
        l.push_back(1);
        h.domain_labels.push_back(std::move(l));
    }
    h.codomain_labels = h.domain_labels;
    h.grading.assign(static_cast<std::size_t>(plus), 1);
    h.grading.resize(static_cast<std::size_t>(plus + minus), -1);
    h.cutoff = block.cutoff;
    h.meta = block.meta;
    return h;
}

TruncatedOperator odd_block(const TruncatedOperator& graded) {
    if (graded.form != OperatorForm::Hermitian || graded.grading.empty())
        throw ValidationError("odd_block: operator is not graded Hermitian");
    std::vector<Index> pos(graded.grading.size(), -1);
    Index np = 0, nm = 0;
    TruncatedOperator b;
    b.form = OperatorForm::Block;
    for (std::size_t i = 0; i < graded.grading.size(); ++i) {
        if (graded.grading[i] > 0) {
            pos[i] = np++;
            b.domain_labels.push_back(graded.domain_labels[i]);
        } else {
            pos[i] = nm++;
            b.codomain_labels.push_back(graded.domain_labels[i]);
        }
    }
    std::vector<Triplet> t;
    for (Index k = 0; k < graded.matrix.outerSize(); ++k)
        for (SparseMatrix::InnerIterator it(graded.matrix, k); it; ++it)
            if (graded.grading[it.row()] < 0 && graded.grading[it.col()] > 0)
                t.emplace_back(pos[it.row()], pos[it.col()], it.value());
    b.matrix = from_triplets(nm, np, t);
    b.cutoff = graded.cutoff;
    b.meta = graded.meta;
    return b;
}

bool is_hermitian(const TruncatedOperator& op, double tol) {
    if (op.rows() != op.cols())
        return false;
    const SparseMatrix diff = op.matrix - SparseMatrix(op.matrix.adjoint());
    for (Index k = 0; k < diff.outerSize(); ++k)
        for (SparseMatrix::InnerIterator it(diff, k); it; ++it)
            if (std::abs(it.value()) > tol)
                return false;
    return true;
}

bool is_graded_odd(const TruncatedOperator& op, double tol) {
    if (op.form == OperatorForm::Block)
        return true;
    if (op.grading.size() != static_cast<std::size_t>(op.rows()))
        return false;
    for (Index k = 0; k < op.matrix.outerSize(); ++k)
        for (SparseMatrix::InnerIterator it(op.matrix, k); it; ++it)
            if (std::abs(it.value()) > tol && op.grading[it.row()] == op.grading[it.col()])
                return false;
    return true;
}

TruncatedOperator build_dolbeault_torus(int cutoff) {
    if (cutoff < 1)
        throw ValidationError("build_dolbeault_torus: cutoff must be >= 1");
    TruncatedOperator op;
    op.form = OperatorForm::Block;
    op.domain_labels = torus_modes(2, cutoff);
    op.codomain_labels = op.domain_labels;
    op.matrix = dolbeault_symbol(op.domain_labels);
    op.cutoff = cutoff;
    op.meta = {"dolbeault_torus", {{"N", cutoff}}};
    return op;
}

std::pair<TruncatedOperator, TruncatedOperator> representation_generators(double theta, int cutoff) {
    if (cutoff < 1)
        throw ValidationError("representation_generators: cutoff must be >= 1");
    const auto modes = torus_modes(2, cutoff);
    const int width = 2 * cutoff + 1;
    auto idx = [&](int m, int n) { return static_cast<Index>((m + cutoff) * width + (n + cutoff)); };
    std::vector<Triplet> tu, tv;
    for (int m = -cutoff; m <= cutoff; ++m)
        for (int n = -cutoff; n <= cutoff; ++n) {
            if (m < cutoff)
                tu.emplace_back(idx(m + 1, n), idx(m, n), 1.0);
            if (n < cutoff)
                tv.emplace_back(idx(m, n + 1), idx(m, n), std::polar(1.0, -two_pi * theta * m));
        }
    const auto size = static_cast<Index>(modes.size());
    auto make = [&](const char* name, const std::vector<Triplet>& t) {
        TruncatedOperator op;
        op.form = OperatorForm::Square;
        op.domain_labels = modes;
        op.codomain_labels = modes;
        op.matrix = from_triplets(size, size, t);
        op.cutoff = cutoff;
        op.meta = {name, {{"theta", theta}, {"N", cutoff}}};
        return op;
    };
    return {make("U", tu), make("V", tv)};
}

IndexReport index_report(const TruncatedOperator& op, double tol) {
    if (!(tol > 0.0))
        throw ValidationError("numerical_index: tol must be positive");
    if (op.form == OperatorForm::Hermitian && !op.grading.empty())
        return index_report(odd_block(op), tol);
    if (op.form != OperatorForm::Block)
        throw ValidationError("numerical_index: operator is not graded");
    if (op.rows() == 0 && op.cols() == 0)
        throw ValidationError("numerical_index: empty operator");
    IndexReport r;
    r.singular_values = singular_values(op.matrix);
    r.sigma_max = r.singular_values.empty() ? 0.0 : r.singular_values.back();
    const double threshold = tol * r.sigma_max;
    const auto rank = static_cast<long>(
        std::count_if(r.singular_values.begin(), r.singular_values.end(), [&](double s) { return s > threshold; }));
    r.kernel_dim = static_cast<long>(op.cols()) - rank;
    r.cokernel_dim = static_cast<long>(op.rows()) - rank;
    r.index = r.kernel_dim - r.cokernel_dim;
    return r;
}

long numerical_index(const TruncatedOperator& op, double tol) { return index_report(op, tol).index; }

double rotated_angle(long p, long q, double theta) {
    // extended Euclid: p·s − q·r = 1
    long old_r = p, r = q, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        const long quot = old_r / r;
        old_r = std::exchange(r, old_r - quot * r);
        old_s = std::exchange(s, old_s - quot * s);
        old_t = std::exchange(t, old_t - quot * t);
    }
    if (std::abs(old_r) != 1)
        throw PreconditionError("rotated_angle: p and q are not coprime");
    const long sgn = old_r;
    const long ss = old_s * sgn;
    const long rr = -old_t * sgn;
    return (static_cast<double>(p) * theta + static_cast<double>(q)) /
           (static_cast<double>(rr) * theta + static_cast<double>(ss));
}

TruncatedOperator heisenberg_model(long p, long q, int cutoff, double theta) {
    if (q < 1)
        throw PreconditionError("heisenberg_model: q must be positive");
    if (std::gcd(p, q) != 1)
        throw PreconditionError("heisenberg_model: gcd(p, q) != 1");
    if (cutoff < 1)
        throw ValidationError("heisenberg_model: cutoff must be >= 1");
    TruncatedOperator op;
    op.form = OperatorForm::Block;
    std::vector<Triplet> t;
    for (long c = 0; c < q; ++c) {
        const auto base_dom = static_cast<Index>(op.domain_labels.size());
        const auto base_cod = static_cast<Index>(op.codomain_labels.size());
        for (int k = 0; k <= cutoff; ++k)
            op.domain_labels.push_back({static_cast<int>(c), k});
        for (int k = 0; k < cutoff; ++k)
            op.codomain_labels.push_back({static_cast<int>(c), k});
        for (int k = 1; k <= cutoff; ++k)
            t.emplace_back(base_cod + k - 1, base_dom + k, std::sqrt(static_cast<double>(k)));
    }
    op.matrix = from_triplets(static_cast<Index>(op.codomain_labels.size()),
                              static_cast<Index>(op.domain_labels.size()), t);
    op.cutoff = cutoff;
    op.meta = {"heisenberg_module",
               {{"p", static_cast<double>(p)},
                {"q", static_cast<double>(q)},
                {"theta", theta},
                {"theta_prime", rotated_angle(p, q, theta)},
                {"N", cutoff}}};
    return op;
}

TruncatedOperator build_schrodinger_product(int fibre_dim, int base_dim, int cutoff) {
    if (base_dim != 1 && base_dim != 2)
        throw ValidationError("build_schrodinger_product: unsupported base dimension " + std::to_string(base_dim));
    if (fibre_dim < 0)
        throw ValidationError("build_schrodinger_product: negative fibre dimension");
    if (cutoff < 1)
        throw ValidationError("build_schrodinger_product: cutoff must be >= 1");
    const Clifford cl = clifford(fibre_dim);
    if (cl.dim - 1 > cutoff)
        throw ValidationError("build_schrodinger_product: cutoff smaller than spinor rank");
    const Factor dx = torus_dirac(fibre_dim, cutoff, cl);
    const Index fib = static_cast<Index>(dx.labels.size());
    const SparseMatrix gamma_x = kron(identity(static_cast<Index>(torus_modes(fibre_dim, cutoff).size())), cl.chirality);
    const bool odd = fibre_dim % 2 == 1;
    const Complex i(0.0, 1.0);

    TruncatedOperator op;
    op.cutoff = cutoff;
    op.meta = {"schrodinger_product", {{"n", fibre_dim}, {"d", base_dim}, {"N", cutoff}}};

    if (base_dim == 1) {
        const auto lattice = range_labels(-cutoff, cutoff);
        std::vector<Complex> numbers;
        for (int j = -cutoff; j <= cutoff; ++j)
            numbers.emplace_back(j);
        const SparseMatrix number_op = diagonal(numbers);
        const SparseMatrix id_l = identity(static_cast<Index>(lattice.size()));
        const auto labels = label_product(dx.labels, lattice);
        if (odd) {
            op.form = OperatorForm::Block;
            op.matrix = kron(dx.op, id_l) - i * kron(identity(fib), number_op);
        } else {
            op.form = OperatorForm::Hermitian;
            op.matrix = kron(dx.op, id_l) + kron(gamma_x, number_op);
        }
        op.matrix.makeCompressed();
        op.domain_labels = labels;
        op.codomain_labels = labels;
        return op;
    }

    // d = 2: H_T = C^2 ⊗ L^2(T^2) carrying ∂̄ = [[0, b†], [b, 0]].
    const auto t2 = torus_modes(2, cutoff);
    const SparseMatrix b = dolbeault_symbol(t2);
    const auto n2 = static_cast<Index>(t2.size());
    SparseMatrix dbar = kron(from_triplets(2, 2, {{1, 0, 1.0}}), b) + kron(from_triplets(2, 2, {{0, 1, 1.0}}), SparseMatrix(b.adjoint()));
    const SparseMatrix gamma_t = kron(pauli('z'), identity(n2));
    const auto labels = label_product(label_product(range_labels(0, 1), t2), dx.labels);
    if (odd) {
        op.form = OperatorForm::Block;
        op.matrix = kron(dbar, identity(fib)) - i * kron(identity(2 * n2), dx.op);
        op.matrix.makeCompressed();
        op.domain_labels = labels;
        op.codomain_labels = labels;
        return op;
    }
    TruncatedOperator full;
    full.form = OperatorForm::Hermitian;
    full.matrix = kron(dbar, identity(fib)) + kron(gamma_t, dx.op);
    full.matrix.makeCompressed();
    full.domain_labels = labels;
    full.codomain_labels = labels;
    const SparseMatrix grade = kron(gamma_t, gamma_x);
    full.grading.resize(labels.size());
    for (Index k = 0; k < grade.rows(); ++k)
        full.grading[static_cast<std::size_t>(k)] = grade.coeff(k, k).real() > 0 ? 1 : -1;
    full.cutoff = cutoff;
    full.meta = op.meta;
    return odd_block(full);
}

TruncatedOperator diagonal_operator(const std::vector<double>& eigenvalues, int cutoff) {
    TruncatedOperator op;
    op.form = OperatorForm::Hermitian;
    std::vector<Complex> d(eigenvalues.begin(), eigenvalues.end());
    op.matrix = diagonal(d);
    for (std::size_t k = 0; k < eigenvalues.size(); ++k)
        op.domain_labels.push_back({static_cast<int>(k)});
    op.codomain_labels = op.domain_labels;
    op.cutoff = cutoff;
    op.meta = {"diagonal", {{"N", cutoff}}};
    return op;
}

double commutator_norm(const TruncatedOperator& op, const TruncatedOperator& gen) {
    if (gen.rows() != gen.cols() || gen.domain_labels != gen.codomain_labels)
        throw ValidationError("commutator_norm: generator must be square");
    if (op.domain_labels != gen.domain_labels || op.codomain_labels != gen.codomain_labels)
        throw ValidationError("commutator_norm: operator and generator act on different mode spaces");
    const SparseMatrix c = op.matrix * gen.matrix - gen.matrix * op.matrix;
    const int cutoff = std::max(op.cutoff, gen.cutoff);
    std::vector<Index> keep(op.domain_labels.size(), -1);
    Index n = 0;
    for (std::size_t k = 0; k < op.domain_labels.size(); ++k)
        if (interior(op.domain_labels[k], cutoff))
            keep[k] = n++;
    std::vector<Triplet> t;
    for (Index k = 0; k < c.outerSize(); ++k)
        for (SparseMatrix::InnerIterator it(c, k); it; ++it)
            if (keep[it.row()] >= 0 && keep[it.col()] >= 0)
                t.emplace_back(keep[it.row()], keep[it.col()], it.value());
    return operator_norm(from_triplets(n, n, t));
}

std::vector<double> spectrum_magnitudes(const TruncatedOperator& op) {
    if (op.form == OperatorForm::Hermitian) {
        auto ev = hermitian_eigenvalues(op.matrix);
        for (double& v : ev)
            v = std::abs(v);
        std::sort(ev.begin(), ev.end());
        return ev;
    }
    return singular_values(op.matrix);
}

double weyl_exponent(const TruncatedOperator& op, double lo, double hi) {
    if (!(lo > 0.0) || !(hi > lo))
        throw ValidationError("weyl_exponent: window must satisfy 0 < lo < hi");
    if (lo < hi / 4.0 || hi > std::numbers::pi * op.cutoff)
        throw PreconditionError("weyl_exponent: window must satisfy lo >= hi/4 and hi <= pi*N");
    const auto spectrum = spectrum_magnitudes(op);
    std::vector<double> xs, ys;
    for (std::size_t k = 0; k < spectrum.size(); ++k) {
        const double s = spectrum[k];
        if (s < lo || s > hi)
            continue;
        // N(s) counts every value <= s, so take the last of a run of ties
        if (k + 1 < spectrum.size() && spectrum[k + 1] == s)
            continue;
        xs.push_back(std::log(s));
        ys.push_back(std::log(static_cast<double>(k + 1)));
    }
    if (xs.size() < 2)
        throw PreconditionError("weyl_exponent: window contains fewer than two distinct eigenvalues");
    const double n = static_cast<double>(xs.size());
    const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
    const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        sxy += (xs[k] - mx) * (ys[k] - my);
        sxx += (xs[k] - mx) * (xs[k] - mx);
    }
    if (sxx == 0.0)
        throw PreconditionError("weyl_exponent: degenerate window");
    return sxy / sxx;
}

} // namespace torusk
