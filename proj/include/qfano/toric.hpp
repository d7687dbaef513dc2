#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qfano/quiver.hpp"
#include "qfano/scan.hpp"

namespace qfano {

// Quiver with dimension vector (1, ..., 1) in topologically sorted form:
// a(k, l) arrows from k to l, zero unless k < l.
class ToricQuiverSpec {
public:
    ToricQuiverSpec(int n, std::vector<Int> matrix);  // row-major n x n
    // Packed strictly-upper-triangular entries, row-major: a01, a02, ..., a(n-2)(n-1).
    static ToricQuiverSpec from_upper(int n, std::span<const Int> upper);
    // Relabels q along its topological order.
    static ToricQuiverSpec from_quiver(const Quiver& q);

    int vertex_count() const noexcept { return n_; }
    Int at(int k, int l) const { return a_[static_cast<std::size_t>(k * n_ + l)]; }
    std::vector<Int> upper() const;
    Int total_arrows() const;
    Quiver to_quiver() const;

    friend bool operator==(const ToricQuiverSpec&, const ToricQuiverSpec&) = default;
    friend auto operator<=>(const ToricQuiverSpec& a, const ToricQuiverSpec& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return a.upper() <=> b.upper();
    }

private:
    int n_;
    std::vector<Int> a_;
};

// Theta_i = out-degree(i) - in-degree(i), counted with multiplicity.
LinearForm toric_theta(const ToricQuiverSpec& spec);

struct ToricConditions {
    bool ok = false;
    // Bitmask of the first failing subset K (bit k set iff vertex k in K).
    std::optional<std::uint64_t> failing_subset;
};

// For every proper nonempty K: a(K, K^c) != a(K^c, K) and
// max(a(K, K^c), a(K^c, K)) >= 2. Requires n <= 62.
ToricConditions toric_fano_conditions(const ToricQuiverSpec& spec);

struct ToricInvariants {
    Int dimension;    // a([n], [n]) - n + 1
    Int picard_rank;  // n - 1
    Int index;        // gcd of toric_theta
    friend bool operator==(const ToricInvariants&, const ToricInvariants&) = default;
};

ToricInvariants toric_invariants(const ToricQuiverSpec& spec);

// Lexicographically smallest packed upper triangle over all relabelings that
// keep every arrow pointing from a smaller to a larger index.
ToricQuiverSpec canonical_form(const ToricQuiverSpec& spec);

struct ToricCatalogEntry {
    ToricQuiverSpec spec;  // canonical form
    ToricInvariants invariants;
};

// Every spec on n vertices with at most max_arrows arrows passing
// toric_fano_conditions, one per relabeling class, sorted by canonical form.
// The number of multiplicity assignments examined is bounded by opts.budget.
std::vector<ToricCatalogEntry> enumerate_toric_fano(int n, Int max_arrows, const ScanOptions& opts = {});

struct ToricFixture {
    std::string_view name;
    std::string_view variety;
    ToricQuiverSpec spec;
};

// p1xp1, bl1p2, bl2p2, bl3p2, p1xp2, blp_p3, bll_p3, plus bl3p2_figure (the
// literal five-vertex path drawing, whose canonical stability lies on a wall).
const std::vector<ToricFixture>& toric_fixtures();
std::optional<ToricFixture> find_toric_fixture(std::string_view name);

}  // namespace qfano
