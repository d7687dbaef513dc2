#include "qfano/families.hpp"

namespace qfano {

namespace {

void require_positive(Int v, const char* what) {
    if (v < 1) throw PreconditionError(std::string(what) + " must be >= 1");
}

using namespace checked;

}  // namespace

Quiver thickened_quiver(int m, int k) {
    require_positive(m, "m");
    require_positive(k, "k");
    std::vector<Arrow> arrows;
    for (int l = 0; l < m; ++l) arrows.push_back({l, m, k});
    return Quiver(m + 1, arrows);
}

Quiver subspace_quiver(int m) { return thickened_quiver(m, 1); }

DimVector subspace_dim(int m, Int d) {
    require_positive(m, "m");
    require_positive(d, "d");
    std::vector<Int> v(static_cast<std::size_t>(m) + 1, 1);
    v.back() = d;
    return DimVector(std::move(v));
}

SubspacePrediction subspace_predict(int m, Int d) {
    require_positive(m, "m");
    require_positive(d, "d");
    std::vector<Int> theta(static_cast<std::size_t>(m), d);
    theta.push_back(-Int{m});
    SubspacePrediction p{LinearForm(std::move(theta)),
                         mul(sub(d, 1), sub(sub(m, d), 1)),
                         m,
                         gcd(m, d),
                         gcd(m, d) == 1,
                         m - 1 > d,
                         gcd(m, d) == 1 && d >= 2 && d <= Int{m} - 2};
    return p;
}

Quiver kronecker_quiver(int m) {
    require_positive(m, "m");
    return Quiver(2, {Arrow{0, 1, m}});
}

KroneckerPrediction kronecker_predict(int m, Int d, Int e) {
    require_positive(m, "m");
    if (d < 0 || e < 0) throw PreconditionError("kronecker_predict: d, e must be >= 0");
    const Int dim = add(sub(sub(mul(mul(m, d), e), mul(d, d)), mul(e, e)), 1);
    const bool fano = m >= 3 && d >= 1 && e >= 1 && gcd(d, e) == 1 && dim >= 1;
    return {LinearForm{mul(m, e), neg(mul(m, d))}, dim, 1, mul(m, gcd(d, e)), fano};
}

KroneckerMinDimReport kronecker_min_dim_check(int m, Int bound) {
    if (m < 3) throw PreconditionError("kronecker_min_dim_check requires m >= 3");
    KroneckerMinDimReport report;
    report.m = m;
    report.bound = bound;
    for (Int d = 1; d <= bound; ++d) {
        const Int e_max = std::min(bound, mul(m, d) / 2);
        for (Int e = d; e <= e_max; ++e) {
            if (gcd(d, e) != 1) continue;
            ++report.pairs_checked;
            const Int dim = kronecker_predict(m, d, e).dimension;
            if (dim == m - 1) report.equality_pairs.emplace_back(d, e);
            const bool unit_pair = d == 1 && e == 1;
            if (dim < m - 1 || (dim == m - 1) != unit_pair) report.counterexamples.emplace_back(d, e);
        }
    }
    report.pass = report.counterexamples.empty();
    return report;
}

ThickenedPrediction thickened_predict(int m, int k, Int d) {
    require_positive(m, "m");
    require_positive(k, "k");
    require_positive(d, "d");
    const Int km = mul(k, m);
    ThickenedPrediction p;
    std::vector<Int> theta(static_cast<std::size_t>(m), mul(k, d));
    theta.push_back(neg(km));
    p.theta = LinearForm(std::move(theta));
    p.dimension = add(mul(sub(sub(km, 1), d), sub(d, 1)), mul(sub(k, 1), m));
    p.picard_rank = m;
    p.index = mul(k, gcd(m, d));
    p.stable_exists = d <= km;
    p.excluded = false;
    if (gcd(m, d) != 1) {
        p.excluded = true;
        p.excluded_reason = "gcd(m, d) != 1";
    } else if (d > km - 1) {
        p.excluded = true;
        p.excluded_reason = "d > k m - 1";
    } else if (k == 1 && (d < 2 || d > m - 2)) {
        p.excluded = true;
        p.excluded_reason = "k = 1 requires 2 <= d <= m - 2";
    }
    return p;
}

MukaiReport mukai_check(int m, int k, Int d) {
    const ThickenedPrediction p = thickened_predict(m, k, d);
    MukaiReport r;
    r.lhs = mul(m, sub(k, 1));
    r.rhs = p.dimension;
    r.holds = r.lhs <= r.rhs;
    r.equality = r.lhs == r.rhs;
    r.equality_expected = d == 1 || d == sub(mul(k, m), 1);
    return r;
}

}  // namespace qfano
