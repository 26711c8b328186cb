#ifndef QUADCDR_CDR_CHECK_HPP
#define QUADCDR_CDR_CHECK_HPP

#include <vector>

#include "quadcdr/ideal.hpp"

namespace quadcdr {

enum class Verdict { CdrUpToBound, NotCdr };

const char* verdict_name(Verdict v);

struct Violation {
    Ideal I;  // I is contained in J ...
    Ideal J;  // ... but J does not divide I
};

struct CdrReport {
    RingSpec ring;
    Int norm_bound;
    std::size_t universe_size = 0;
    std::size_t pairs_checked = 0;
    std::vector<Violation> violations;  // sorted by (I, J) canonical order
    Verdict verdict = Verdict::CdrUpToBound;
    bool dedekind_expected = false;
};

/// Default bound: 30 for maximal orders, 50 otherwise.
Int default_norm_bound(const RingSpec& ring);

/// Checks "I in J <=> J divides I" over every ordered pair of ideals with
/// norm <= norm_bound. The zero ideal is left out: (0) = (0)*J for every J.
///
/// A bounded check can only refute the property, hence CdrUpToBound.
/// Throws InternalArithmeticBug if a division witness fails to reproduce I
/// or I is divisible by J without being contained in it.
CdrReport check_cdr(const RingSpec& ring, const Int& norm_bound);

struct Classification {
    bool dedekind = false;
    Verdict cdr_verdict = Verdict::CdrUpToBound;
    /// dedekind <=> CdrUpToBound. False with f > 1 and no violation means
    /// the bound was too small.
    bool consistent = false;
    CdrReport report;
};

Classification classify_ring(const RingSpec& ring, const Int& norm_bound);

}  // namespace quadcdr

#endif
