#include "qfano/toric.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

namespace qfano {

ToricQuiverSpec::ToricQuiverSpec(int n, std::vector<Int> matrix) : n_(n), a_(std::move(matrix)) {
    if (n < 1) throw PreconditionError("toric spec needs at least one vertex");
    if (a_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
        throw PreconditionError("toric spec matrix must be n x n");
    }
    for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
            const Int v = at(k, l);
            if (v < 0) throw PreconditionError("toric spec multiplicities must be nonnegative");
            if (l <= k && v != 0) {
                throw PreconditionError("toric spec must be strictly upper triangular");
            }
        }
    }
}

ToricQuiverSpec ToricQuiverSpec::from_upper(int n, std::span<const Int> upper) {
    if (n < 1) throw PreconditionError("toric spec needs at least one vertex");
    const auto slots = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
    if (upper.size() != slots) throw PreconditionError("packed upper triangle has wrong length");
    std::vector<Int> m(static_cast<std::size_t>(n * n), 0);
    std::size_t idx = 0;
    for (int k = 0; k < n; ++k) {
        for (int l = k + 1; l < n; ++l) m[static_cast<std::size_t>(k * n + l)] = upper[idx++];
    }
    return ToricQuiverSpec(n, std::move(m));
}

ToricQuiverSpec ToricQuiverSpec::from_quiver(const Quiver& q) {
    const int n = q.vertex_count();
    const std::vector<int> order = topological_order(q);
    std::vector<int> position(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) position[static_cast<std::size_t>(order[static_cast<std::size_t>(p)])] = p;
    std::vector<Int> m(static_cast<std::size_t>(n * n), 0);
    for (const Arrow& a : q.arrows()) {
        const int k = position[static_cast<std::size_t>(a.source)];
        const int l = position[static_cast<std::size_t>(a.target)];
        m[static_cast<std::size_t>(k * n + l)] = a.multiplicity;
    }
    return ToricQuiverSpec(n, std::move(m));
}

std::vector<Int> ToricQuiverSpec::upper() const {
    std::vector<Int> out;
    out.reserve(static_cast<std::size_t>(n_ * (n_ - 1) / 2));
    for (int k = 0; k < n_; ++k) {
        for (int l = k + 1; l < n_; ++l) out.push_back(at(k, l));
    }
    return out;
}

Int ToricQuiverSpec::total_arrows() const {
    Int total = 0;
    for (Int v : a_) total = checked::add(total, v);
    return total;
}

Quiver ToricQuiverSpec::to_quiver() const {
    std::vector<Arrow> arrows;
    for (int k = 0; k < n_; ++k) {
        for (int l = k + 1; l < n_; ++l) {
            if (at(k, l) > 0) arrows.push_back({k, l, at(k, l)});
        }
    }
    return Quiver(n_, arrows);
}

LinearForm toric_theta(const ToricQuiverSpec& spec) {
    const int n = spec.vertex_count();
    std::vector<Int> theta(static_cast<std::size_t>(n), 0);
    for (int k = 0; k < n; ++k) {
        for (int l = k + 1; l < n; ++l) {
            const Int a = spec.at(k, l);
            theta[static_cast<std::size_t>(k)] = checked::add(theta[static_cast<std::size_t>(k)], a);
            theta[static_cast<std::size_t>(l)] = checked::sub(theta[static_cast<std::size_t>(l)], a);
        }
    }
    return LinearForm(std::move(theta));
}

ToricConditions toric_fano_conditions(const ToricQuiverSpec& spec) {
    const int n = spec.vertex_count();
    if (n > 62) throw PreconditionError("toric_fano_conditions supports at most 62 vertices");
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t mask = 1; mask < full; ++mask) {
        Int out = 0;  // a(K, K^c)
        Int in = 0;   // a(K^c, K)
        for (int k = 0; k < n; ++k) {
            for (int l = k + 1; l < n; ++l) {
                const bool k_in = (mask >> k) & 1;
                const bool l_in = (mask >> l) & 1;
                if (k_in && !l_in) out = checked::add(out, spec.at(k, l));
                if (!k_in && l_in) in = checked::add(in, spec.at(k, l));
            }
        }
        if (out == in || std::max(out, in) < 2) return {false, mask};
    }
    return {true, std::nullopt};
}

ToricInvariants toric_invariants(const ToricQuiverSpec& spec) {
    const Int n = spec.vertex_count();
    return {checked::add(checked::sub(spec.total_arrows(), n), 1), n - 1, gcd_form(toric_theta(spec))};
}

ToricQuiverSpec canonical_form(const ToricQuiverSpec& spec) {
    const int n = spec.vertex_count();
    std::vector<int> perm(static_cast<std::size_t>(n));  // perm[old] = new
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Int> best = spec.upper();
    std::vector<Int> relabeled(static_cast<std::size_t>(n * n));
    do {
        bool valid = true;
        std::fill(relabeled.begin(), relabeled.end(), 0);
        for (int k = 0; k < n && valid; ++k) {
            for (int l = k + 1; l < n; ++l) {
                const Int a = spec.at(k, l);
                if (a == 0) continue;
                const int pk = perm[static_cast<std::size_t>(k)];
                const int pl = perm[static_cast<std::size_t>(l)];
                if (pk > pl) {
                    valid = false;
                    break;
                }
                relabeled[static_cast<std::size_t>(pk * n + pl)] = a;
            }
        }
        if (!valid) continue;
        std::vector<Int> packed;
        packed.reserve(best.size());
        for (int k = 0; k < n; ++k) {
            for (int l = k + 1; l < n; ++l) packed.push_back(relabeled[static_cast<std::size_t>(k * n + l)]);
        }
        if (packed < best) best = std::move(packed);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return ToricQuiverSpec::from_upper(n, best);
}

namespace {

// Number of nonnegative assignments to `slots` entries with total <= max,
// i.e. C(max + slots, slots); nullopt if it exceeds the budget.
std::optional<std::uint64_t> assignment_count(std::uint64_t slots, std::uint64_t max, std::uint64_t budget) {
    // Incremental binomial: C(max + i, i) = C(max + i - 1, i - 1) * (max + i) / i is
    // integral, and with g = gcd(c, i) the factor i / g divides max + i.
    std::uint64_t c = 1;
    for (std::uint64_t i = 1; i <= slots; ++i) {
        const std::uint64_t g = std::gcd(c, i);
        std::uint64_t next;
        if (__builtin_add_overflow(max, i, &next)) return std::nullopt;
        if (__builtin_mul_overflow(c / g, next / (i / g), &c)) return std::nullopt;
        if (c > budget) return std::nullopt;
    }
    return c;
}

// Visit every assignment of the packed slots [pos, end) with total <= remaining.
template <class Visit>
void for_each_assignment(std::vector<Int>& upper, std::size_t pos, Int remaining, Visit& visit) {
    if (pos == upper.size()) {
        visit(upper);
        return;
    }
    for (Int v = 0; v <= remaining; ++v) {
        upper[pos] = v;
        for_each_assignment(upper, pos + 1, remaining - v, visit);
    }
    upper[pos] = 0;
}

}  // namespace

std::vector<ToricCatalogEntry> enumerate_toric_fano(int n, Int max_arrows, const ScanOptions& opts) {
    if (n < 2) throw PreconditionError("enumerate_toric_fano requires n >= 2");
    if (n > 10) throw PreconditionError("enumerate_toric_fano canonicalizes over n! relabelings; n <= 10");
    if (max_arrows < 0) throw PreconditionError("max_arrows must be nonnegative");
    const auto slots = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
    if (!assignment_count(slots, static_cast<std::uint64_t>(max_arrows), opts.budget)) {
        throw BudgetExceeded("toric enumeration exceeds budget of " + std::to_string(opts.budget));
    }

    // Work is split on the value of the first slot; each worker keeps its own
    // set and the sets are merged, so the result does not depend on scheduling.
    const unsigned workers = std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(max_arrows) + 1));
    std::vector<std::set<ToricQuiverSpec>> found(workers);
    auto work = [&](unsigned w) {
        std::vector<Int> upper(slots, 0);
        auto visit = [&](const std::vector<Int>& u) {
            const ToricQuiverSpec spec = ToricQuiverSpec::from_upper(n, u);
            if (toric_fano_conditions(spec).ok) found[w].insert(canonical_form(spec));
        };
        for (Int first = w; first <= max_arrows; first += workers) {
            upper[0] = first;
            for_each_assignment(upper, 1, max_arrows - first, visit);
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    }

    std::set<ToricQuiverSpec> merged;
    for (auto& s : found) merged.merge(s);
    std::vector<ToricCatalogEntry> catalog;
    catalog.reserve(merged.size());
    for (const ToricQuiverSpec& spec : merged) catalog.push_back({spec, toric_invariants(spec)});
    return catalog;
}

namespace {

ToricQuiverSpec from_arrows(int n, std::initializer_list<Arrow> arrows) {
    return ToricQuiverSpec::from_quiver(Quiver(n, arrows));
}

}  // namespace

const std::vector<ToricFixture>& toric_fixtures() {
    // Vertex labels in the comments refer to the positions in the drawings
    // (T top, B bottom, L left, M middle, R right).
    static const std::vector<ToricFixture> fixtures = {
        // L => M <= R
        {"p1xp1", "P1 x P1", from_arrows(3, {{0, 2, 2}, {1, 2, 2}})},
        // T -> L, T -> R, L => R
        {"bl1p2", "Bl_1 P2", from_arrows(3, {{0, 1, 1}, {0, 2, 1}, {1, 2, 2}})},
        // T -> L, T -> R, B -> L, B -> R, L -> R
        {"bl2p2", "Bl_2 P2", from_arrows(4, {{0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, 1}})},
        // Three sources, each with one arrow to each of two sinks.
        {"bl3p2", "Bl_3 P2",
         from_arrows(5, {{0, 3, 1}, {0, 4, 1}, {1, 3, 1}, {1, 4, 1}, {2, 3, 1}, {2, 4, 1}})},
        // T -> L, T -> R, B -> L, B -> R, L -> M -> R. Theta vanishes at M.
        {"bl3p2_figure", "Bl_3 P2 (path drawing, on a wall)",
         from_arrows(5, {{0, 2, 1}, {0, 4, 1}, {1, 2, 1}, {1, 4, 1}, {2, 3, 1}, {3, 4, 1}})},
        // L => M <=(3) R
        {"p1xp2", "P1 x P2", from_arrows(3, {{0, 2, 2}, {1, 2, 3}})},
        // T -> L, T -> R, L =(3)=> R
        {"blp_p3", "Bl_p P3", from_arrows(3, {{0, 1, 1}, {0, 2, 1}, {1, 2, 3}})},
        // T => L, T => R, L -> R
        {"bll_p3", "Bl_l P3", from_arrows(3, {{0, 1, 2}, {0, 2, 2}, {1, 2, 1}})},
    };
    return fixtures;
}

std::optional<ToricFixture> find_toric_fixture(std::string_view name) {
    for (const ToricFixture& f : toric_fixtures()) {
        if (f.name == name) return f;
    }
    return std::nullopt;
}

}  // namespace qfano
