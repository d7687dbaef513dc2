#include "qfano/stability.hpp"

#include <cstdlib>

namespace qfano {

namespace {

void require_section(const DimVector& d, const LinearForm& a) {
    if (a.size() != d.size()) throw PreconditionError("section length does not match d");
    if (a(d) != 1) throw PreconditionError("section a must satisfy a(d) = 1");
}

// Floor division for b > 0.
Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && (a < 0)) --q;
    return q;
}

}  // namespace

Stability::Stability(LinearForm theta, DimVector d) : theta_(std::move(theta)), d_(std::move(d)) {
    if (theta_.size() != d_.size()) throw PreconditionError("stability length does not match d");
    if (theta_(d_) != 0) {
        throw PreconditionError("stability " + to_string(theta_) + " does not vanish on " + to_string(d_));
    }
}

Stability canonical_stability(const Quiver& q, const DimVector& d) {
    const auto n = static_cast<std::size_t>(q.vertex_count());
    if (d.size() != n) throw PreconditionError("canonical_stability: length mismatch");
    std::vector<Int> theta(n);
    for (std::size_t i = 0; i < n; ++i) theta[i] = antisym_form(q, d, DimVector::unit(n, i));
    return Stability(LinearForm(std::move(theta)), d);
}

CoprimeVerdict is_coprime(const Stability& theta, const ScanOptions& opts) {
    const SubdimRange range(theta.dim(), opts.budget);
    const auto hit = find_first(range, opts.jobs, [&](const DimVector& e) { return theta(e) == 0; });
    if (!hit) return {true, std::nullopt};
    return {false, range.at(*hit)};
}

AmpleStabilityVerdict ample_stability_criterion(const Quiver& q, const Stability& theta,
                                                const ScanOptions& opts) {
    const DimVector& d = theta.dim();
    if (d.size() != static_cast<std::size_t>(q.vertex_count())) {
        throw PreconditionError("ample_stability_criterion: length mismatch");
    }
    const SubdimRange range(d, opts.budget);
    const auto hit = find_first(range, opts.jobs, [&](const DimVector& e) {
        return theta(e) >= 0 && euler_form(q, e, d.minus(e)) >= -1;
    });
    if (!hit) return {AmpleStatus::Certified, std::nullopt, range.size()};
    return {AmpleStatus::Inconclusive, range.at(*hit), *hit + 1};
}

LinearForm section_a(const DimVector& d) {
    if (!is_indivisible(d)) {
        throw NotIndivisible("dimension vector " + to_string(d) + " is not indivisible");
    }
    const std::size_t n = d.size();
    std::vector<Int> a(n, 0);

    // Fold: maintain sum_{j<=i} a_j d_j == g.
    Int g = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Bezout b = extended_gcd(g, d[i]);
        for (std::size_t j = 0; j < i; ++j) a[j] = checked::mul(a[j], b.x);
        a[i] = b.y;
        g = b.g;
    }

    // Backward reduction. For the pair (p, i) with d_p, d_i > 0 the kernel
    // direction is (+d_i / h at p, -d_p / h at i), h = gcd(d_p, d_i).
    for (std::size_t i = n; i-- > 1;) {
        if (d[i] == 0) continue;
        std::size_t p = i;
        while (p-- > 0 && d[p] == 0) {
        }
        if (p >= i) continue;  // no earlier positive vertex
        const Int h = gcd(d[p], d[i]);
        const Int step = d[p] / h;  // a_i moves in multiples of step
        // Choose t with a_i - t*step of minimal absolute value; prefer smaller |t| on ties.
        const Int lo = floor_div(a[i], step);
        Int best_t = 0;
        Int best_abs = std::llabs(a[i]);
        for (Int t : {lo, checked::add(lo, 1)}) {
            const Int v = std::llabs(checked::sub(a[i], checked::mul(t, step)));
            if (v < best_abs || (v == best_abs && std::llabs(t) < std::llabs(best_t))) {
                best_abs = v;
                best_t = t;
            }
        }
        a[i] = checked::sub(a[i], checked::mul(best_t, step));
        a[p] = checked::add(a[p], checked::mul(best_t, d[i] / h));
    }
    LinearForm section(std::move(a));
    if (section(d) != 1) throw Error("section_a: internal inconsistency");
    return section;
}

Stability retraction(const DimVector& d, const LinearForm& a, const LinearForm& theta) {
    require_section(d, a);
    if (theta.size() != d.size()) throw PreconditionError("retraction: length mismatch");
    return Stability(theta - a.scaled(theta(d)), d);
}

Stability det_tautological_class(const Quiver& q, const DimVector& d, const LinearForm& a, int vertex) {
    const auto n = static_cast<std::size_t>(q.vertex_count());
    if (vertex < 0 || static_cast<std::size_t>(vertex) >= n) throw IndexError("vertex out of range");
    const Stability r = retraction(d, a, LinearForm::coordinate(n, static_cast<std::size_t>(vertex)));
    return Stability(-r.theta(), d);
}

Stability anticanonical_class(const Quiver& q, const DimVector& d, const LinearForm& a) {
    const auto n = static_cast<std::size_t>(q.vertex_count());
    if (d.size() != n) throw PreconditionError("anticanonical_class: length mismatch");
    require_section(d, a);
    // c1(T) = sum over arrows i->j of (-d_j c1(V_i) + d_i c1(V_j)), regrouped per vertex.
    LinearForm acc = LinearForm::zero(n);
    for (std::size_t i = 0; i < n; ++i) {
        const DimVector unit = DimVector::unit(n, i);
        const Int coefficient = checked::sub(euler_form(q, unit, d), euler_form(q, d, unit));
        if (coefficient == 0) continue;
        const Stability det_i = det_tautological_class(q, d, a, static_cast<int>(i));
        acc = acc + det_i.theta().scaled(coefficient);
    }
    return Stability(std::move(acc), d);
}

}  // namespace qfano
