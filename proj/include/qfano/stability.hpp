#pragma once

#include <cstdint>
#include <optional>

#include "qfano/quiver.hpp"
#include "qfano/scan.hpp"

namespace qfano {

// A linear form together with the dimension vector it vanishes on.
class Stability {
public:
    // Throws PreconditionError unless theta(d) == 0 and the lengths agree.
    Stability(LinearForm theta, DimVector d);

    const LinearForm& theta() const noexcept { return theta_; }
    const DimVector& dim() const noexcept { return d_; }
    Int operator()(const DimVector& e) const { return theta_(e); }

    friend bool operator==(const Stability&, const Stability&) = default;

private:
    LinearForm theta_;
    DimVector d_;
};

// Theta_i = {d, i}.
Stability canonical_stability(const Quiver& q, const DimVector& d);

struct CoprimeVerdict {
    bool coprime = false;
    // Lexicographically first proper nonzero e <= d with theta(e) == 0.
    std::optional<DimVector> witness;
};

CoprimeVerdict is_coprime(const Stability& theta, const ScanOptions& opts = {});

enum class AmpleStatus { Certified, Inconclusive };

struct AmpleStabilityVerdict {
    AmpleStatus status = AmpleStatus::Inconclusive;
    // Present iff Inconclusive: 0 < e < d, theta(e) >= 0 and <e, d - e> >= -1.
    std::optional<DimVector> witness;
    // Stream positions examined, counting the witness itself.
    std::uint64_t scanned_count = 0;
};

// Sufficient test for ample stability: every proper nonzero e <= d with
// theta(e) >= 0 must satisfy <e, d - e> <= -2. Inconclusive is not a disproof.
AmpleStabilityVerdict ample_stability_criterion(const Quiver& q, const Stability& theta,
                                                const ScanOptions& opts = {});

// Deterministic integral section a with a(d) = 1. Extended Euclid is folded
// over the entries in vertex order; afterwards, walking from the last vertex
// backwards, each a_i with d_i > 0 is shifted along the kernel direction it
// shares with the nearest earlier vertex of positive dimension so that |a_i|
// is minimal (ties keep the smaller shift). Throws NotIndivisible if gcd(d) != 1.
LinearForm section_a(const DimVector& d);

// r(theta) = theta - theta(d) * a. Requires a(d) == 1.
Stability retraction(const DimVector& d, const LinearForm& a, const LinearForm& theta);

// -r(i) for the coordinate form i; the class of the determinant of the i-th
// tautological bundle.
Stability det_tautological_class(const Quiver& q, const DimVector& d, const LinearForm& a, int vertex);

// Sum over vertices of (<i, d> - <d, i>) * (-r(i)). Equals the canonical
// stability for every valid section a.
Stability anticanonical_class(const Quiver& q, const DimVector& d, const LinearForm& a);

}  // namespace qfano
