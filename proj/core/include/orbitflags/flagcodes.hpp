#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "orbitflags/flags.hpp"

namespace orbitflags {

/// The orbit of a generator flag under the cyclic group generated by a
/// nonzero element beta. Cardinality and stabilizer order are computed on
/// construction; the element list is materialized lazily and shared between
/// copies (thread safe, single fill).
class FlagCode {
public:
    FlagCode(Flag generator, FieldElement beta);

    const FieldCtx& ctx() const noexcept { return gen_.ctx(); }
    const Flag& generator() const noexcept { return gen_; }
    FieldElement beta() const noexcept { return beta_; }
    std::uint64_t size() const noexcept { return size_; }
    /// |<beta>| / size: the order of the subgroup fixing the generator.
    std::uint64_t stabilizer_order() const noexcept { return stab_; }

    /// Elements in the order F, F*beta, F*beta^2, ...
    const std::vector<Flag>& elements() const;

private:
    Flag gen_;
    FieldElement beta_;
    std::uint64_t size_ = 1;
    std::uint64_t stab_ = 1;

    struct Cache {
        std::once_flag once;
        std::vector<Flag> flags;
    };
    std::shared_ptr<Cache> cache_;
};

/// Minimum flag distance between distinct codewords; 0 for a singleton.
int code_min_distance(const FlagCode& c);

/// Orbit of the i-th subspace of the generator under the same beta
/// (0-based i).
SubspaceOrbit projected_code(const FlagCode& c, std::size_t i);

/// Every projected code has the same cardinality as the flag code.
bool is_disjoint(const FlagCode& c);

/// Disjoint, and the min distance equals the sum of the projected min
/// distances. A singleton code is consistent by convention.
bool is_consistent(const FlagCode& c);

/// Summary of a flag code: scalar facts plus one row per projection.
struct CodeReport {
    std::uint64_t cardinality = 0;
    int min_distance = 0;
    int best_friend = 0;
    bool disjoint = false;
    bool consistent = false;
    FlagKind kind = FlagKind::plain;
    std::vector<int> underlying_type;
    struct Projection {
        int dimension = 0;
        std::uint64_t size = 0;
        int min_distance = 0;
        int best_friend = 0;
    };
    std::vector<Projection> projections;
};

CodeReport make_report(const FlagCode& c);

/// The flag of nested subfields F_{q^t_1} < ... < F_{q^t_r}. Requires a
/// strictly increasing divisor chain: t_i | t_{i+1}, t_r | n, t_r < n.
Flag galois_flag(const FieldCtx& ctx, const std::vector<int>& type);

/// Min distance of the orbit of the subfield flag of the given type under
/// beta, predicted from stabilizer orders alone (no enumeration):
/// 0 when <beta> fixes everything, 2*sum(type) when the first and last
/// stabilizers agree but are proper, otherwise 2*sum of the leading run of
/// dimensions whose stabilizer equals that of F_{q^t_1}.
int predict_galois_distance(const FieldCtx& ctx, const std::vector<int>& type, FieldElement beta);

/// Flag of regular form subspaces U_{s_1} < ... < U_{s_r} where U_t is the
/// direct sum of F_{q^m} alpha^(l*j), j < t. Requires strictly increasing s
/// with s_r <= L (and s_r < L when m*L == n, since U_L would be the whole
/// field), and L >= 2 where L is the minimal polynomial degree of alpha^l
/// over F_{q^m}.
Flag basic_flag(const FieldCtx& ctx, int m, std::uint64_t l, const std::vector<int>& s);

/// Flag assembled along a divisor chain m_1 | m_2 | ... | m_k | n with
/// m_k < n and every quotient at least 2: for each level i the partial sums
/// F_{q^(m_i)} + ... + F_{q^(m_i)} alpha_(i+1)^j, j < L_(i+1), where
/// alpha_(i+1) generates F_{q^(m_(i+1))}. The type comes out as
/// (m_1, 2 m_1, ..., m_2 - m_1, m_2, ..., n - m_k).
Flag weaved_flag(const FieldCtx& ctx, const std::vector<int>& chain);

/// Lower and upper bounds for the min distance of the orbit of the weaved
/// flag under beta, from the ladder of stabilizer intersections. Requires
/// beta nonzero and outside F_{q^(m_1)}.
std::pair<int, int> weaved_distance_bounds(const FieldCtx& ctx, const std::vector<int>& chain,
                                           FieldElement beta);

/// 2 * m * (number of subspaces whose best friend equals the flag best
/// friend m), valid for any beta outside F_{q^m}.
int min_distance_lower_bound_by_bf_count(const Flag& f, FieldElement beta);

/// Deterministic search for one more subspace on top of a flag: scans
/// candidate generators alpha^j in increasing j, accumulating
/// F_{q^(required_bf)} alpha^j summands on top of the last subspace until
/// target_dim is reached, accepting only a final subspace whose best friend
/// is exactly required_bf. Requires the last subspace to be
/// F_{q^(required_bf)}-linear and the dimension gap to be a positive
/// multiple of required_bf.
Flag extend_flag_by_search(const Flag& f, int target_dim, int required_bf);

/// One row per beta: its order, the order of <beta> intersected with
/// F_{q^m}^*, and the resulting orbit cardinality order/intersection for a
/// flag with best friend m.
struct OrbitSizeRow {
    std::int64_t beta_exponent = 0;
    std::uint64_t order = 0;
    std::uint64_t intersection_order = 0;
    std::uint64_t orbit_size = 0;
};

std::vector<OrbitSizeRow> table_report(const FieldCtx& ctx, int m,
                                       const std::vector<FieldElement>& betas);

} // namespace orbitflags
