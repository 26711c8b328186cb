#include "quadcdr/oracle.hpp"

#include "quadcdr/error.hpp"

namespace quadcdr::oracle {

std::optional<Ideal> brute_divide(const Ideal& I, const Ideal& J, const Int& search_norm_cap) {
    require_same_ring(I, J);
    if (search_norm_cap < I.norm())
        throw Error(ErrorCode::InvalidArgument,
                    "search cap " + to_string(search_norm_cap) + " is below norm(I) = " +
                        to_string(I.norm()));
    for (Int n = 1; n <= search_norm_cap; ++n) {
        for (const Ideal& H : enumerate_of_norm(I.ring(), n).members) {
            if (mul(H, J) == I)
                return H;
        }
    }
    return std::nullopt;
}

std::vector<Int> count_ideals(const RingSpec& ring, const Int& n_max) {
    if (n_max < 1)
        throw Error(ErrorCode::InvalidArgument, "n_max must be >= 1");
    std::vector<Int> out;
    for (Int n = 1; n <= n_max; ++n)
        out.emplace_back(static_cast<unsigned long>(enumerate_of_norm(ring, n).members.size()));
    return out;
}

}  // namespace quadcdr::oracle
