#include "quadcdr/cdr_check.hpp"

#include "quadcdr/error.hpp"

namespace quadcdr {

const char* verdict_name(Verdict v) {
    return v == Verdict::NotCdr ? "not_cdr" : "cdr_up_to_bound";
}

Int default_norm_bound(const RingSpec& ring) { return ring.is_maximal() ? 30 : 50; }

CdrReport check_cdr(const RingSpec& ring, const Int& norm_bound) {
    if (norm_bound < 1)
        throw Error(ErrorCode::InvalidArgument, "norm_bound must be >= 1");

    const IdealSet universe = enumerate_up_to(ring, norm_bound);
    CdrReport report{ring, norm_bound, universe.members.size(), 0, {}, Verdict::CdrUpToBound,
                     ring.is_maximal()};

    // Nested canonical iteration yields violations already in sorted order.
    for (const Ideal& I : universe.members) {
        for (const Ideal& J : universe.members) {
            ++report.pairs_checked;
            const bool contained = contains(J, I);
            const auto witness = divide_exact(I, J);
            if (witness) {
                if (!(mul(*witness, J) == I))
                    throw Error(ErrorCode::InternalArithmeticBug,
                                "witness " + render(*witness) + " times " + render(J) +
                                    " does not reproduce " + render(I));
                if (!contained)
                    throw Error(ErrorCode::InternalArithmeticBug,
                                render(J) + " divides " + render(I) + " but does not contain it");
            } else if (contained) {
                report.violations.push_back({I, J});
            }
        }
    }
    if (!report.violations.empty())
        report.verdict = Verdict::NotCdr;
    return report;
}

Classification classify_ring(const RingSpec& ring, const Int& norm_bound) {
    CdrReport report = check_cdr(ring, norm_bound);
    Classification out;
    out.dedekind = ring.is_maximal();
    out.cdr_verdict = report.verdict;
    out.consistent = out.dedekind == (report.verdict == Verdict::CdrUpToBound);
    out.report = std::move(report);
    return out;
}

}  // namespace quadcdr
