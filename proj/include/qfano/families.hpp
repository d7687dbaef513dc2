#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qfano/quiver.hpp"

namespace qfano {

// Closed-form predictors for the subspace, Kronecker and thickened subspace
// families. Pure arithmetic: none of these call the enumerative machinery.

// m source vertices 0..m-1, each with one arrow into the sink m.
Quiver subspace_quiver(int m);
// (1, ..., 1, d) on the subspace quiver.
DimVector subspace_dim(int m, Int d);

struct SubspacePrediction {
    LinearForm theta;  // d * sum_k i_k - m * j
    Int dimension;     // (d - 1)(m - d - 1)
    Int picard_rank;   // m
    Int index;         // gcd(theta) = gcd(m, d)
    bool coprime;      // gcd(m, d) == 1
    bool nonempty;     // m - 1 > d: non-empty and not a point
    bool fano_expected;  // coprime and 2 <= d <= m - 2
};

SubspacePrediction subspace_predict(int m, Int d);

// Two vertices, m arrows 0 -> 1.
Quiver kronecker_quiver(int m);

struct KroneckerPrediction {
    LinearForm theta;  // (m e, -m d)
    Int dimension;     // m d e - d^2 - e^2 + 1
    Int picard_rank;   // 1
    Int index;         // m * gcd(d, e)
    // m >= 3, d, e >= 1 coprime and dimension >= 1 (non-empty, not a point).
    bool fano_expected;
};

KroneckerPrediction kronecker_predict(int m, Int d, Int e);

struct KroneckerMinDimReport {
    int m = 0;
    Int bound = 0;
    std::size_t pairs_checked = 0;
    // Pairs (d, e) with dimension == m - 1.
    std::vector<std::pair<Int, Int>> equality_pairs;
    // Pairs violating dim >= m - 1, or attaining equality away from (1, 1).
    std::vector<std::pair<Int, Int>> counterexamples;
    bool pass = false;
};

// Scans coprime 1 <= d <= e <= floor(m d / 2) with d, e <= bound and checks
// m d e - d^2 - e^2 + 1 >= m - 1 with equality exactly at (1, 1). Requires m >= 3.
KroneckerMinDimReport kronecker_min_dim_check(int m, Int bound);

// Subspace quiver with every arrow thickened to multiplicity k.
Quiver thickened_quiver(int m, int k);

struct ThickenedPrediction {
    LinearForm theta;      // k (d sum_l i_l - m j)
    Int dimension;         // (k m - 1 - d)(d - 1) + (k - 1) m
    Int picard_rank;       // m
    Int index;             // k * gcd(m, d)
    bool stable_exists;    // d <= k m
    bool excluded;         // outside the range of the Fano statement
    std::string excluded_reason;
};

// Excluded when gcd(m, d) != 1, when d > k m - 1, or, for k = 1, unless
// 2 <= d <= m - 2 (those cases are point moduli or belong to the subspace family).
ThickenedPrediction thickened_predict(int m, int k, Int d);

// Mukai-type inequality rank * (index - 1) <= dim for the thickened family.
// The index stands in as a lower bound for the pseudo-index; nothing stronger
// is claimed.
struct MukaiReport {
    Int lhs;  // m (k - 1)
    Int rhs;  // dimension
    bool holds;
    bool equality;
    bool equality_expected;  // d == 1 or d == k m - 1
};

MukaiReport mukai_check(int m, int k, Int d);

}  // namespace qfano
