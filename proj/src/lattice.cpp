#include "torusk/lattice.hpp"

#include "torusk/errors.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace torusk {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_)
            throw ValidationError("IntMatrix: ragged initializer");
        for (long v : row)
            data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols_if_empty) {
    const std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
    IntMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw ValidationError("IntMatrix: ragged rows");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

IntMatrix IntMatrix::column(const std::vector<Integer>& entries) {
    IntMatrix m(entries.size(), 1);
    for (std::size_t r = 0; r < entries.size(); ++r)
        m(r, 0) = entries[r];
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

IntMatrix IntMatrix::select_columns(const std::vector<std::size_t>& cols) const {
    IntMatrix m(rows_, cols.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t j = 0; j < cols.size(); ++j)
            m(r, j) = (*this)(r, cols[j]);
    return m;
}

IntMatrix IntMatrix::select_rows(const std::vector<std::size_t>& rows) const {
    IntMatrix m(rows.size(), cols_);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t c = 0; c < cols_; ++c)
            m(i, c) = (*this)(rows[i], c);
    return m;
}

IntMatrix IntMatrix::hconcat(const IntMatrix& right) const {
    if (rows_ != right.rows_)
        throw ValidationError("hconcat: row count mismatch");
    IntMatrix m(rows_, cols_ + right.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c)
            m(r, c) = (*this)(r, c);
        for (std::size_t c = 0; c < right.cols_; ++c)
            m(r, cols_ + c) = right(r, c);
    }
    return m;
}

std::vector<Integer> IntMatrix::col(std::size_t c) const {
    std::vector<Integer> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

bool IntMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return sgn(x) == 0; });
}

bool IntMatrix::operator==(const IntMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? ",[" : "[");
        for (std::size_t c = 0; c < cols_; ++c)
            os << (c ? "," : "") << (*this)(r, c).get_str();
        os << ']';
    }
    os << ']';
    return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_)
        throw ValidationError("matrix product: inner dimension mismatch");
    IntMatrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Integer& aik = a(i, k);
            if (sgn(aik) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                m(i, j) += aik * b(k, j);
        }
    return m;
}

std::size_t SmithForm::rank() const {
    std::size_t r = 0;
    const std::size_t n = std::min(D.rows(), D.cols());
    while (r < n && sgn(D(r, r)) != 0)
        ++r;
    return r;
}

std::vector<Integer> SmithForm::diagonal() const {
    std::vector<Integer> d;
    for (std::size_t i = 0; i < rank(); ++i)
        d.push_back(D(i, i));
    return d;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b)
        return;
    for (std::size_t c = 0; c < m.cols(); ++c)
        swap(m(a, c), m(b, c));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b)
        return;
    for (std::size_t r = 0; r < m.rows(); ++r)
        swap(m(r, a), m(r, b));
}

// row[dst] -= q * row[src]
void row_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (sgn(m(src, c)) != 0)
            m(dst, c) -= q * m(src, c);
}

void col_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t r = 0; r < m.rows(); ++r)
        if (sgn(m(r, src)) != 0)
            m(r, dst) -= q * m(r, src);
}

void negate_row(IntMatrix& m, std::size_t r) {
    for (std::size_t c = 0; c < m.cols(); ++c)
        m(r, c) = -m(r, c);
}

// Fraction-free elimination; returns rank and (for square input) the determinant.
std::pair<std::size_t, Integer> bareiss(IntMatrix m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    Integer prev = 1;
    int sign = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && sgn(m(p, c)) == 0)
            ++p;
        if (p == rows)
            continue;
        if (p != r) {
            swap_rows(m, p, r);
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                m(i, j) = m(r, c) * m(i, j) - m(i, c) * m(r, j);
                mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
            }
            m(i, c) = 0;
        }
        prev = m(r, c);
        ++r;
    }
    Integer det = 0;
    if (rows == cols && r == rows)
        det = sign * prev;
    return {r, det};
}

} // namespace

Integer determinant(const IntMatrix& a) {
    if (a.rows() != a.cols())
        throw ValidationError("determinant: matrix is not square");
    return bareiss(a).second;
}

std::size_t rank(const IntMatrix& a) { return bareiss(a).first; }

SmithForm smith_normal_form(const IntMatrix& a) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    SmithForm s{IntMatrix::identity(m), a, IntMatrix::identity(n)};
    IntMatrix& D = s.D;

    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        for (;;) {
            // smallest nonzero |entry| in the trailing block
            std::size_t pr = m, pc = n;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (sgn(D(i, j)) != 0 && (pr == m || mpz_cmpabs(D(i, j).get_mpz_t(), D(pr, pc).get_mpz_t()) < 0)) {
                        pr = i;
                        pc = j;
                    }
            if (pr == m)
                break;
            swap_rows(D, t, pr);
            swap_rows(s.U, t, pr);
            swap_cols(D, t, pc);
            swap_cols(s.V, t, pc);

            bool dirty = false;
            Integer q;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (sgn(D(i, t)) == 0)
                    continue;
                mpz_fdiv_q(q.get_mpz_t(), D(i, t).get_mpz_t(), D(t, t).get_mpz_t());
                row_axpy(D, i, t, q);
                row_axpy(s.U, i, t, q);
                dirty = dirty || sgn(D(i, t)) != 0;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (sgn(D(t, j)) == 0)
                    continue;
                mpz_fdiv_q(q.get_mpz_t(), D(t, j).get_mpz_t(), D(t, t).get_mpz_t());
                col_axpy(D, j, t, q);
                col_axpy(s.V, j, t, q);
                dirty = dirty || sgn(D(t, j)) != 0;
            }
            if (dirty)
                continue;

            // pivot must divide the remaining block
            std::size_t bad = m;
            for (std::size_t i = t + 1; i < m && bad == m; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (!mpz_divisible_p(D(i, j).get_mpz_t(), D(t, t).get_mpz_t())) {
                        bad = i;
                        break;
                    }
            if (bad == m)
                break;
            row_axpy(D, t, bad, Integer(-1));
            row_axpy(s.U, t, bad, Integer(-1));
        }
        if (sgn(D(t, t)) < 0) {
            negate_row(D, t);
            negate_row(s.U, t);
        }
    }
    return s;
}

IntMatrix hermite_normal_form(const IntMatrix& a) {
    IntMatrix h = a;
    const std::size_t rows = h.rows();
    std::size_t r = 0;
    Integer q;
    for (std::size_t c = 0; c < h.cols() && r < rows; ++c) {
        for (;;) {
            std::size_t p = rows;
            for (std::size_t i = r; i < rows; ++i)
                if (sgn(h(i, c)) != 0 && (p == rows || mpz_cmpabs(h(i, c).get_mpz_t(), h(p, c).get_mpz_t()) < 0))
                    p = i;
            if (p == rows)
                break;
            swap_rows(h, r, p);
            bool done = true;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (sgn(h(i, c)) == 0)
                    continue;
                mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
                row_axpy(h, i, r, q);
                done = done && sgn(h(i, c)) == 0;
            }
            if (done)
                break;
        }
        if (sgn(h(r, c)) == 0)
            continue;
        if (sgn(h(r, c)) < 0)
            negate_row(h, r);
        for (std::size_t i = 0; i < r; ++i) {
            mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
            if (sgn(q) != 0)
                row_axpy(h, i, r, q);
        }
        ++r;
    }
    std::vector<std::size_t> keep(r);
    for (std::size_t i = 0; i < r; ++i)
        keep[i] = i;
    return h.select_rows(keep);
}

IntMatrix kernel_lattice(const IntMatrix& a) {
    const std::size_t n = a.cols();
    const SmithForm s = smith_normal_form(a);
    const std::size_t r = s.rank();
    std::vector<std::size_t> free_cols;
    for (std::size_t j = r; j < n; ++j)
        free_cols.push_back(j);
    const IntMatrix basis = s.V.select_columns(free_cols);
    if (basis.cols() == 0)
        return IntMatrix(n, 0);
    return hermite_normal_form(basis.transpose()).transpose();
}

CokernelInvariants cokernel_invariants(const IntMatrix& a) {
    const SmithForm s = smith_normal_form(a);
    CokernelInvariants inv;
    inv.divisors = s.diagonal();
    if (inv.divisors.size() == a.rows()) {
        Integer card = 1;
        for (const auto& d : inv.divisors)
            card *= d;
        inv.cardinality = card;
    }
    return inv;
}

bool is_primitive_basis(const IntMatrix& v) {
    if (v.cols() == 0)
        return true;
    const SmithForm s = smith_normal_form(v);
    if (s.rank() != v.cols())
        return false;
    for (const auto& d : s.diagonal())
        if (d != 1)
            return false;
    return true;
}

} // namespace torusk
