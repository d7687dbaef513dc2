#include "qfano/chambers.hpp"

#include <algorithm>

namespace qfano {

namespace {

int sign_of(Int v) { return (v > 0) - (v < 0); }

}  // namespace

SignVector::SignVector(DimVector d, std::vector<Run> runs) : d_(std::move(d)), runs_(std::move(runs)) {
    for (const Run& r : runs_) {
        if (r.sign < -1 || r.sign > 1 || r.length == 0) throw PreconditionError("malformed sign run");
        size_ += r.length;
    }
    const auto expected = subdim_count(d_);
    if (!expected || *expected != size_) throw PreconditionError("sign vector length does not match d");
}

bool SignVector::has_zero() const noexcept {
    return std::any_of(runs_.begin(), runs_.end(), [](const Run& r) { return r.sign == 0; });
}

int SignVector::at(std::uint64_t pos) const {
    for (const Run& r : runs_) {
        if (pos < r.length) return r.sign;
        pos -= r.length;
    }
    throw IndexError("sign vector position out of range");
}

SignVector sign_vector(const Stability& theta, const ScanOptions& opts) {
    const SubdimRange range(theta.dim(), opts.budget);
    std::vector<SignVector::Run> runs;
    for (const DimVector& e : range) {
        const int s = sign_of(theta(e));
        if (!runs.empty() && runs.back().sign == s) {
            ++runs.back().length;
        } else {
            runs.push_back({s, 1});
        }
    }
    return SignVector(theta.dim(), std::move(runs));
}

bool in_chamber_interior(const Stability& theta, const ScanOptions& opts) {
    return !sign_vector(theta, opts).has_zero();
}

bool same_chamber(const Stability& a, const Stability& b, const ScanOptions& opts) {
    if (a.dim() != b.dim()) throw PreconditionError("same_chamber: stabilities for different d");
    const SubdimRange range(a.dim(), opts.budget);
    const auto differs = find_first(range, opts.jobs, [&](const DimVector& e) {
        const int sa = sign_of(a(e));
        return sa == 0 || sa != sign_of(b(e));
    });
    return !differs.has_value();
}

Ampleness ample_check(const Quiver& q, const Stability& base, const LinearForm& candidate,
                      const LinearForm& a, const ScanOptions& opts) {
    if (!is_coprime(base, opts).coprime) throw PreconditionError("ample_check: base stability is not coprime");
    if (ample_stability_criterion(q, base, opts).status != AmpleStatus::Certified) {
        throw PreconditionError("ample_check: base stability is not certified amply stable");
    }
    const Stability retracted = retraction(base.dim(), a, candidate);
    return same_chamber(base, retracted, opts) ? Ampleness::Ample : Ampleness::Unknown;
}

}  // namespace qfano
