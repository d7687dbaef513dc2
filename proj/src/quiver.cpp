#include "qfano/quiver.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace qfano {

namespace {

void require_same_length(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        throw PreconditionError(std::string(what) + ": length mismatch (" + std::to_string(a) +
                                " vs " + std::to_string(b) + ")");
    }
}

}  // namespace

DimVector::DimVector(std::vector<Int> entries) : entries_(std::move(entries)) {
    for (Int v : entries_) {
        if (v < 0) throw PreconditionError("dimension vector entries must be nonnegative");
    }
}

DimVector DimVector::unit(std::size_t n, std::size_t i) {
    if (i >= n) throw IndexError("unit vector index out of range");
    std::vector<Int> v(n, 0);
    v[i] = 1;
    return DimVector(std::move(v));
}

bool DimVector::is_zero() const noexcept {
    return std::all_of(entries_.begin(), entries_.end(), [](Int v) { return v == 0; });
}

DimVector DimVector::minus(const DimVector& e) const {
    require_same_length(size(), e.size(), "DimVector::minus");
    std::vector<Int> out(size());
    for (std::size_t i = 0; i < size(); ++i) {
        if (e[i] > entries_[i]) throw PreconditionError("DimVector::minus: e is not <= d");
        out[i] = entries_[i] - e[i];
    }
    return DimVector(std::move(out));
}

LinearForm LinearForm::coordinate(std::size_t n, std::size_t i) {
    if (i >= n) throw IndexError("coordinate form index out of range");
    std::vector<Int> v(n, 0);
    v[i] = 1;
    return LinearForm(std::move(v));
}

Int LinearForm::operator()(const DimVector& e) const {
    require_same_length(size(), e.size(), "LinearForm evaluation");
    Int acc = 0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) acc = checked::fma(acc, coeffs_[i], e[i]);
    return acc;
}

LinearForm LinearForm::operator+(const LinearForm& other) const {
    require_same_length(size(), other.size(), "LinearForm addition");
    std::vector<Int> out(size());
    for (std::size_t i = 0; i < size(); ++i) out[i] = checked::add(coeffs_[i], other[i]);
    return LinearForm(std::move(out));
}

LinearForm LinearForm::operator-(const LinearForm& other) const {
    require_same_length(size(), other.size(), "LinearForm subtraction");
    std::vector<Int> out(size());
    for (std::size_t i = 0; i < size(); ++i) out[i] = checked::sub(coeffs_[i], other[i]);
    return LinearForm(std::move(out));
}

LinearForm LinearForm::operator-() const { return scaled(-1); }

LinearForm LinearForm::scaled(Int factor) const {
    std::vector<Int> out(size());
    for (std::size_t i = 0; i < size(); ++i) out[i] = checked::mul(coeffs_[i], factor);
    return LinearForm(std::move(out));
}

Quiver::Quiver(int n, std::span<const Arrow> arrows) : n_(n) {
    if (n < 1) throw PreconditionError("quiver needs at least one vertex");
    mult_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (const Arrow& a : arrows) {
        if (a.source < 0 || a.source >= n || a.target < 0 || a.target >= n) {
            throw IndexError("arrow " + std::to_string(a.source) + "->" + std::to_string(a.target) +
                             " out of range for " + std::to_string(n) + " vertices");
        }
        if (a.multiplicity < 0) throw PreconditionError("arrow multiplicity must be nonnegative");
        auto& slot = mult_[index(a.source, a.target)];
        slot = checked::add(slot, a.multiplicity);
    }
    // Kahn's algorithm visits every vertex iff the support is acyclic.
    if (topological_order(*this).size() != static_cast<std::size_t>(n)) {
        throw CycleError("quiver has an oriented cycle");
    }
}

Int Quiver::total_arrows() const {
    Int total = 0;
    for (Int m : mult_) total = checked::add(total, m);
    return total;
}

std::vector<Arrow> Quiver::arrows() const {
    std::vector<Arrow> out;
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            if (Int m = multiplicity(i, j); m > 0) out.push_back({i, j, m});
        }
    }
    return out;
}

Quiver make_quiver(int n, std::span<const Arrow> arrows) { return Quiver(n, arrows); }

std::vector<int> topological_order(const Quiver& q) {
    const int n = q.vertex_count();
    std::vector<int> indegree(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (q.multiplicity(i, j) > 0) ++indegree[static_cast<std::size_t>(j)];
        }
    }
    std::priority_queue<int, std::vector<int>, std::greater<>> ready;
    for (int i = 0; i < n; ++i) {
        if (indegree[static_cast<std::size_t>(i)] == 0) ready.push(i);
    }
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    while (!ready.empty()) {
        const int v = ready.top();
        ready.pop();
        order.push_back(v);
        for (int j = 0; j < n; ++j) {
            if (q.multiplicity(v, j) > 0 && --indegree[static_cast<std::size_t>(j)] == 0) ready.push(j);
        }
    }
    return order;
}

Int euler_form(const Quiver& q, const DimVector& d, const DimVector& e) {
    const auto n = static_cast<std::size_t>(q.vertex_count());
    require_same_length(n, d.size(), "euler_form(d)");
    require_same_length(n, e.size(), "euler_form(e)");
    Int acc = 0;
    for (std::size_t i = 0; i < n; ++i) acc = checked::fma(acc, d[i], e[i]);
    for (std::size_t i = 0; i < n; ++i) {
        if (d[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            const Int m = q.multiplicity(static_cast<int>(i), static_cast<int>(j));
            if (m == 0) continue;
            acc = checked::sub(acc, checked::mul(m, checked::mul(d[i], e[j])));
        }
    }
    return acc;
}

Int antisym_form(const Quiver& q, const DimVector& d, const DimVector& e) {
    return checked::sub(euler_form(q, d, e), euler_form(q, e, d));
}

Int moduli_dimension(const Quiver& q, const DimVector& d) {
    return checked::sub(1, euler_form(q, d, d));
}

bool is_indivisible(const DimVector& d) { return gcd_of(d.entries()) == 1; }

Int gcd_form(const LinearForm& theta) { return gcd_of(theta.coefficients()); }

namespace {

template <class Range>
std::string join(const Range& r) {
    std::ostringstream os;
    os << '(';
    bool first = true;
    for (Int v : r) {
        if (!first) os << ',';
        os << v;
        first = false;
    }
    os << ')';
    return os.str();
}

}  // namespace

std::string to_string(const DimVector& d) { return join(d); }
std::string to_string(const LinearForm& theta) { return join(theta); }

}  // namespace qfano
