#include "torusk/ktheory.hpp"

#include "torusk/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace torusk {

KClass::KClass(int ambient_dim) : dim_(ambient_dim) {
    if (ambient_dim < 0)
        throw ValidationError("KClass: negative ambient dimension");
}

KClass KClass::basis(int ambient_dim, Subset subset) {
    KClass k(ambient_dim);
    k.add(subset, 1);
    return k;
}

KClass KClass::top(int ambient_dim) {
    Subset all(ambient_dim);
    std::iota(all.begin(), all.end(), 1);
    return basis(ambient_dim, std::move(all));
}

void KClass::add(const Subset& subset, const Integer& coeff) {
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (subset[i] < 1 || subset[i] > dim_)
            throw ValidationError("KClass: index out of range 1.." + std::to_string(dim_));
        if (i > 0 && subset[i - 1] >= subset[i])
            throw ValidationError("KClass: subset must be strictly increasing");
    }
    if (sgn(coeff) == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(subset, coeff);
    if (!inserted) {
        it->second += coeff;
        if (sgn(it->second) == 0)
            terms_.erase(it);
    }
}

Integer KClass::coefficient(const Subset& subset) const {
    auto it = terms_.find(subset);
    return it == terms_.end() ? Integer(0) : it->second;
}

std::optional<int> KClass::degree() const {
    if (terms_.empty())
        return std::nullopt;
    const auto first = terms_.begin()->first.size();
    for (const auto& [k, c] : terms_)
        if (k.size() != first)
            return std::nullopt;
    return static_cast<int>(first);
}

std::optional<int> KClass::parity() const {
    if (terms_.empty())
        return std::nullopt;
    const int first = static_cast<int>(terms_.begin()->first.size() % 2);
    for (const auto& [k, c] : terms_)
        if (static_cast<int>(k.size() % 2) != first)
            return std::nullopt;
    return first;
}

void KClass::check_compatible(const KClass& other, const char* op) const {
    if (dim_ != other.dim_)
        throw ValidationError(std::string(op) + ": ambient dimension mismatch (" + std::to_string(dim_) +
                              " vs " + std::to_string(other.dim_) + ")");
}

KClass& KClass::operator+=(const KClass& other) {
    check_compatible(other, "add");
    for (const auto& [k, c] : other.terms_)
        add(k, c);
    return *this;
}

KClass& KClass::operator-=(const KClass& other) {
    check_compatible(other, "subtract");
    for (const auto& [k, c] : other.terms_)
        add(k, -c);
    return *this;
}

KClass KClass::operator-() const {
    KClass r(dim_);
    for (const auto& [k, c] : terms_)
        r.terms_.emplace(k, -c);
    return r;
}

KClass operator*(const Integer& s, const KClass& a) {
    KClass r(a.dim_);
    if (sgn(s) == 0)
        return r;
    for (const auto& [k, c] : a.terms_)
        r.terms_.emplace(k, s * c);
    return r;
}

std::string KClass::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first)
            os << (sgn(c) < 0 ? " - " : " + ");
        else if (sgn(c) < 0)
            os << "-";
        first = false;
        const Integer mag = abs(c);
        if (mag != 1)
            os << mag.get_str() << "*";
        os << "e{";
        for (std::size_t i = 0; i < k.size(); ++i)
            os << (i ? "," : "") << k[i];
        os << "}";
    }
    return os.str();
}

Subtorus Subtorus::make(int ambient_dim, IntMatrix basis, int orientation) {
    if (ambient_dim < 0 || basis.rows() != static_cast<std::size_t>(ambient_dim))
        throw ValidationError("Subtorus: basis must have ambient_dim rows");
    if (orientation != 1 && orientation != -1)
        throw ValidationError("Subtorus: orientation must be +1 or -1");
    if (!is_primitive_basis(basis))
        throw PreconditionError("Subtorus: basis is not primitive of full column rank");
    return Subtorus{ambient_dim, std::move(basis), orientation};
}

int shuffle_sign(const Subset& k, const Subset& l) {
    int inversions = 0;
    for (int a : k)
        for (int b : l) {
            if (a == b)
                return 0;
            if (a > b)
                ++inversions;
        }
    return inversions % 2 == 0 ? 1 : -1;
}

Subset complement(int ambient_dim, const Subset& k) {
    Subset c;
    std::size_t j = 0;
    for (int i = 1; i <= ambient_dim; ++i) {
        if (j < k.size() && k[j] == i)
            ++j;
        else
            c.push_back(i);
    }
    return c;
}

KClass wedge(const KClass& a, const KClass& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw ValidationError("wedge: ambient dimension mismatch");
    KClass out(a.ambient_dim());
    for (const auto& [k, ck] : a.terms())
        for (const auto& [l, cl] : b.terms()) {
            const int s = shuffle_sign(k, l);
            if (s == 0)
                continue;
            Subset u;
            u.reserve(k.size() + l.size());
            std::merge(k.begin(), k.end(), l.begin(), l.end(), std::back_inserter(u));
            out.add(u, s * ck * cl);
        }
    return out;
}

int fm_sign(int ambient_dim, int degree) {
    const long e = static_cast<long>(ambient_dim) * degree + static_cast<long>(degree) * (degree - 1) / 2;
    return e % 2 == 0 ? 1 : -1;
}

KClass dual_coordinate_class(int ambient_dim, const Subset& k) {
    const Subset kc = complement(ambient_dim, k);
    KClass out(ambient_dim);
    out.add(kc, shuffle_sign(k, kc));
    return out;
}

KClass fm_transform(const KClass& a) {
    const int d = a.ambient_dim();
    KClass out(d);
    for (const auto& [k, c] : a.terms()) {
        const Subset kc = complement(d, k);
        out.add(kc, fm_sign(d, static_cast<int>(k.size())) * shuffle_sign(k, kc) * c);
    }
    return out;
}

KClass fm_inverse(const KClass& a) {
    // fm_transform sends e_k to s·e_{k^c} with s = ±1, so the inverse sends
    // e_{k^c} back to s·e_k.
    const int d = a.ambient_dim();
    KClass out(d);
    for (const auto& [j, c] : a.terms()) {
        const Subset k = complement(d, j);
        out.add(k, fm_sign(d, static_cast<int>(k.size())) * shuffle_sign(k, j) * c);
    }
    return out;
}

namespace {

// Calls f on every r-subset of {1..n}, in lexicographic order.
template <typename F>
void for_each_subset(int n, int r, F&& f) {
    if (r < 0 || r > n)
        return;
    Subset s(r);
    std::iota(s.begin(), s.end(), 1);
    for (;;) {
        f(s);
        int i = r - 1;
        while (i >= 0 && s[i] == n - r + i + 1)
            --i;
        if (i < 0)
            return;
        ++s[i];
        for (int j = i + 1; j < r; ++j)
            s[j] = s[j - 1] + 1;
    }
}

std::vector<std::size_t> zero_based(const Subset& s) {
    std::vector<std::size_t> z(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        z[i] = static_cast<std::size_t>(s[i] - 1);
    return z;
}

} // namespace

KClass pushforward(const IntMatrix& a, const KClass& cls) {
    if (a.cols() != static_cast<std::size_t>(cls.ambient_dim()))
        throw ValidationError("pushforward: matrix has " + std::to_string(a.cols()) + " columns, class has dimension " +
                              std::to_string(cls.ambient_dim()));
    const int target = static_cast<int>(a.rows());
    KClass out(target);
    for (const auto& [k, c] : cls.terms()) {
        const IntMatrix cols = a.select_columns(zero_based(k));
        for_each_subset(target, static_cast<int>(k.size()), [&](const Subset& rows) {
            const Integer minor = determinant(cols.select_rows(zero_based(rows)));
            if (sgn(minor) != 0)
                out.add(rows, c * minor);
        });
    }
    return out;
}

KClass class_of_subtorus(const Subtorus& t) {
    return Integer(t.orientation) * pushforward(t.basis, KClass::top(t.dim()));
}

Subtorus perp_subtorus(const Subtorus& t) {
    IntMatrix w = kernel_lattice(t.basis.transpose());
    int orientation = t.orientation;
    if (w.cols() == 0) {
        orientation *= sgn(determinant(t.basis));
    } else if (sgn(determinant(t.basis.hconcat(w))) < 0) {
        const std::size_t last = w.cols() - 1;
        for (std::size_t r = 0; r < w.rows(); ++r)
            w(r, last) = -w(r, last);
    }
    return Subtorus{t.ambient_dim, std::move(w), orientation};
}

Integer pairing(const KClass& a, const KClass& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw ValidationError("pairing: ambient dimension mismatch");
    const int d = a.ambient_dim();
    Integer total = 0;
    for (const auto& [k, ck] : a.terms()) {
        const Subset kc = complement(d, k);
        const Integer cb = b.coefficient(kc);
        if (sgn(cb) != 0)
            total += shuffle_sign(k, kc) * ck * cb;
    }
    return total;
}

} // namespace torusk
