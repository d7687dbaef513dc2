#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "qfano/stability.hpp"

namespace qfano {

enum class FanoStatus { Certified, NotCoprime, Inconclusive };

std::string_view to_string(FanoStatus status);

// Outcome of running the Fano certificate on (Q, d).
//
// Certified: the moduli space of canonically stable representations is a
// smooth projective Fano variety (provided it is non-empty) with the listed
// dimension, Picard rank and index.
// NotCoprime: the canonical stability lies on a wall; witness has theta(e) = 0.
// Inconclusive: coprime, but the sufficient ample-stability inequality fails
// at witness (theta(e) >= 0, <e, d - e> >= -1). Nothing is asserted.
//
// dimension, picard_rank and index are filled for every status; they only
// carry geometric meaning when Certified.
struct FanoCertificate {
    FanoStatus status = FanoStatus::Inconclusive;
    Int dimension = 0;    // 1 - <d, d>
    Int picard_rank = 0;  // |Q_0| - 1
    Int index = 0;        // gcd of the canonical stability, 0 if it vanishes
    LinearForm canonical_theta;
    std::optional<DimVector> witness;
    std::string notes;
};

// Requires d nonzero with one entry per vertex.
FanoCertificate certify_fano(const Quiver& q, const DimVector& d, const ScanOptions& opts = {});

}  // namespace qfano
