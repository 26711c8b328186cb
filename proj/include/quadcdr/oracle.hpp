#ifndef QUADCDR_ORACLE_HPP
#define QUADCDR_ORACLE_HPP

#include <optional>
#include <vector>

#include "quadcdr/ideal.hpp"

// Brute-force counterparts of the fast paths. Slow on purpose: they share
// nothing with colon/divide_exact beyond mul and enumeration.

namespace quadcdr::oracle {

/// First ideal H (canonical order, norm <= search_norm_cap) with H*J = I.
/// Requires search_norm_cap >= norm(I).
std::optional<Ideal> brute_divide(const Ideal& I, const Ideal& J, const Int& search_norm_cap);

/// Number of ideals of norm n for n = 1..n_max.
std::vector<Int> count_ideals(const RingSpec& ring, const Int& n_max);

}  // namespace quadcdr::oracle

#endif
