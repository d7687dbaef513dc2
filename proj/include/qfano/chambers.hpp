#pragma once

#include <cstdint>
#include <vector>

#include "qfano/stability.hpp"

namespace qfano {

// Signs of theta(e) over all proper nonzero e <= d in lexicographic order,
// stored run-length encoded. Walls are not deduplicated.
class SignVector {
public:
    struct Run {
        int sign;  // -1, 0 or +1
        std::uint64_t length;
        friend bool operator==(const Run&, const Run&) = default;
    };

    SignVector(DimVector d, std::vector<Run> runs);

    const DimVector& dim() const noexcept { return d_; }
    const std::vector<Run>& runs() const noexcept { return runs_; }
    std::uint64_t size() const noexcept { return size_; }
    bool has_zero() const noexcept;
    // Sign at stream position pos.
    int at(std::uint64_t pos) const;

    friend bool operator==(const SignVector&, const SignVector&) = default;

private:
    DimVector d_;
    std::vector<Run> runs_;
    std::uint64_t size_ = 0;
};

SignVector sign_vector(const Stability& theta, const ScanOptions& opts = {});

// True iff theta lies on no wall, i.e. d is theta-coprime.
bool in_chamber_interior(const Stability& theta, const ScanOptions& opts = {});

// True iff both stabilities lie in the interior of one chamber: their sign
// vectors contain no zero and coincide.
bool same_chamber(const Stability& a, const Stability& b, const ScanOptions& opts = {});

enum class Ampleness { Ample, Unknown };

// Ample iff r(candidate) lies in the interior of the chamber of `base`.
// `base` must be coprime and certified by the ample-stability criterion
// (PreconditionError otherwise). Never claims non-ampleness.
Ampleness ample_check(const Quiver& q, const Stability& base, const LinearForm& candidate,
                      const LinearForm& a, const ScanOptions& opts = {});

}  // namespace qfano
