#pragma once

#include <vector>

#include "orbitflags/flags.hpp"

namespace orbitflags {

/// The dimensions and subfield positions that determine which distance
/// values a flag code orbit could take.
struct DistanceProfile {
    int n = 0;
    std::vector<int> type;       // strictly increasing, entries in [1, n-1]
    std::vector<int> field_dims; // subset of type forming a divisor chain of n
};

DistanceProfile profile_of(const Flag& f);

/// All values achievable by a per-dimension distance assignment d_i subject
/// to: d_i even in [0, 2*min(s_i, n-s_i)]; at a subfield dimension t only 0
/// or 2t, where 2t forces every smaller dimension to its cap and 0 forces
/// every larger subfield dimension to 0; and the adjacent-step bound
/// |d_i - d_(i+1)| <= 2*(s_(i+1) - s_i). Sorted ascending.
std::vector<int> potential_values(const DistanceProfile& profile);
std::vector<int> potential_values(int n, const std::vector<int>& type,
                                  const std::vector<int>& field_dims);

/// Min distances of the orbits of f under one beta per subgroup of
/// F_{q^n}^*, sorted ascending. Capped at q^n <= 2^20.
std::vector<int> attained_values(const Flag& f);

/// Flag distances d(F, F*c) over every nonzero c, sorted ascending. Always
/// contains 0 (c = 1 fixes the flag). Capped at q^n <= 2^20.
std::vector<int> pairwise_attained_values(const Flag& f);

} // namespace orbitflags
