#include "qfano/fano.hpp"

namespace qfano {

std::string_view to_string(FanoStatus status) {
    switch (status) {
        case FanoStatus::Certified: return "Certified";
        case FanoStatus::NotCoprime: return "NotCoprime";
        case FanoStatus::Inconclusive: return "Inconclusive";
    }
    return "?";
}

FanoCertificate certify_fano(const Quiver& q, const DimVector& d, const ScanOptions& opts) {
    if (d.size() != static_cast<std::size_t>(q.vertex_count())) {
        throw PreconditionError("certify_fano: dimension vector length does not match quiver");
    }
    if (d.is_zero()) throw PreconditionError("certify_fano: dimension vector must be nonzero");

    const Stability theta = canonical_stability(q, d);
    FanoCertificate cert;
    cert.dimension = moduli_dimension(q, d);
    cert.picard_rank = q.vertex_count() - 1;
    cert.index = gcd_form(theta.theta());
    cert.canonical_theta = theta.theta();

    const CoprimeVerdict coprime = is_coprime(theta, opts);
    if (!coprime.coprime) {
        cert.status = FanoStatus::NotCoprime;
        cert.witness = coprime.witness;
        cert.notes = "canonical stability lies on the wall of " + to_string(*coprime.witness) +
                     "; stable and semistable loci may differ, no Fano claim";
        return cert;
    }

    const AmpleStabilityVerdict ample = ample_stability_criterion(q, theta, opts);
    if (ample.status == AmpleStatus::Inconclusive) {
        const DimVector& e = *ample.witness;
        cert.status = FanoStatus::Inconclusive;
        cert.witness = e;
        cert.notes = "coprime, but <e,d-e> = " + std::to_string(euler_form(q, e, d.minus(e))) +
                     " >= -1 with theta(e) = " + std::to_string(theta(e)) + " >= 0 at e = " +
                     to_string(e) + "; the ample-stability inequality is only sufficient, no claim";
        return cert;
    }

    cert.status = FanoStatus::Certified;
    cert.notes =
        "smooth projective Fano variety with canonical stability, provided stable representations "
        "exist (non-emptiness is not decided here); rationality and algebraic cohomology are not "
        "computed";
    if (cert.index == 0) {
        // Only reachable when d has no proper nonzero sub-vector, i.e. the moduli space is a point.
        cert.notes += "; canonical stability vanishes identically, index undefined (reported as 0)";
    }
    return cert;
}

}  // namespace qfano
