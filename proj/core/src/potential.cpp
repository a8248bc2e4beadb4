#include "orbitflags/potential.hpp"

#include <algorithm>
#include <set>

#include "orbitflags/flagcodes.hpp"

namespace orbitflags {

namespace {

void check_profile(const DistanceProfile& p) {
    if (p.n < 2) throw InvalidArgument("n must be at least 2");
    if (p.type.empty()) throw InvalidArgument("type must be nonempty");
    for (std::size_t i = 0; i < p.type.size(); ++i) {
        if (p.type[i] < 1 || p.type[i] >= p.n) throw InvalidArgument("type entry out of range");
        if (i > 0 && p.type[i] <= p.type[i - 1])
            throw InvalidArgument("type must be strictly increasing");
    }
    for (std::size_t i = 0; i < p.field_dims.size(); ++i) {
        int t = p.field_dims[i];
        if (std::find(p.type.begin(), p.type.end(), t) == p.type.end())
            throw InvalidArgument("field dimension not present in the type");
        if (p.n % t != 0) throw InvalidArgument("field dimension must divide n");
        if (i > 0 && (t <= p.field_dims[i - 1] || t % p.field_dims[i - 1] != 0))
            throw InvalidArgument("field dimensions must form a divisor chain");
    }
}

struct Enumerator {
    const DistanceProfile& p;
    std::vector<bool> is_field;
    std::vector<int> cap;
    std::set<int>* out;

    void run() {
        descend(0, 0, /*prev=*/-1, /*all_max=*/true, /*field_zero_seen=*/false);
    }

    void descend(std::size_t i, int sum, int prev, bool all_max, bool field_zero_seen) {
        if (i == p.type.size()) {
            out->insert(sum);
            return;
        }
        const int gap = (i == 0) ? 0 : 2 * (p.type[i] - p.type[i - 1]);
        for (int d = 0; d <= cap[i]; d += 2) {
            if (i > 0 && std::abs(d - prev) > gap) continue;
            if (is_field[i]) {
                if (d != 0 && d != 2 * p.type[i]) continue;
                if (d == 2 * p.type[i] && !all_max) continue; // smaller dims must sit at cap
                if (d != 0 && field_zero_seen) continue;      // zero propagates upward
            }
            descend(i + 1, sum + d, d, all_max && d == cap[i],
                    field_zero_seen || (is_field[i] && d == 0));
        }
    }
};

} // namespace

DistanceProfile profile_of(const Flag& f) {
    DistanceProfile p;
    p.n = f.ctx().n();
    p.type = f.type();
    p.field_dims = classify_flag(f).underlying_type;
    return p;
}

std::vector<int> potential_values(const DistanceProfile& profile) {
    check_profile(profile);
    std::vector<bool> is_field(profile.type.size(), false);
    std::vector<int> cap(profile.type.size());
    for (std::size_t i = 0; i < profile.type.size(); ++i) {
        cap[i] = 2 * std::min(profile.type[i], profile.n - profile.type[i]);
        is_field[i] = std::find(profile.field_dims.begin(), profile.field_dims.end(),
                                profile.type[i]) != profile.field_dims.end();
    }
    std::set<int> values;
    Enumerator en{profile, std::move(is_field), std::move(cap), &values};
    en.run();
    return std::vector<int>(values.begin(), values.end());
}

std::vector<int> potential_values(int n, const std::vector<int>& type,
                                  const std::vector<int>& field_dims) {
    return potential_values(DistanceProfile{n, type, field_dims});
}

std::vector<int> attained_values(const Flag& f) {
    const FieldCtx& F = f.ctx();
    if (F.group_order() + 1 > (std::uint64_t(1) << 20))
        throw ResourceCap("field too large for exhaustive subgroup sweep");
    std::set<int> values;
    for (std::uint64_t d : divisors(F.group_order())) {
        FieldElement beta = F.alpha_pow(static_cast<std::int64_t>(F.group_order() / d));
        values.insert(code_min_distance(FlagCode(f, beta)));
    }
    return std::vector<int>(values.begin(), values.end());
}

std::vector<int> pairwise_attained_values(const Flag& f) {
    const FieldCtx& F = f.ctx();
    if (F.group_order() + 1 > (std::uint64_t(1) << 20))
        throw ResourceCap("field too large for exhaustive pair sweep");
    std::set<int> values;
    Flag cur = f;
    for (std::uint64_t j = 0; j < F.group_order(); ++j) {
        values.insert(flag_distance(f, cur));
        if (j + 1 < F.group_order()) cur = cur.scaled(F.alpha());
    }
    return std::vector<int>(values.begin(), values.end());
}

} // namespace orbitflags
