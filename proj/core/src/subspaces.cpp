#include "orbitflags/subspaces.hpp"

#include <algorithm>
#include <numeric>

namespace orbitflags {

Subspace Subspace::zero(const FieldCtx& ctx) { return Subspace(ctx, {}); }

Subspace Subspace::full(const FieldCtx& ctx) {
    std::vector<std::uint64_t> rows(ctx.n());
    for (int j = 0; j < ctx.n(); ++j) rows[j] = ctx.q_pow(j); // basis vector e_j
    return Subspace(ctx, std::move(rows));
}

Subspace Subspace::from_rows(const FieldCtx& ctx, const std::vector<std::uint64_t>& rows) {
    for (std::uint64_t v : rows)
        if (v >= ctx.q_pow(ctx.n())) throw InvalidArgument("packed vector out of range");
    return Subspace(ctx, rref(FqMatrix(ctx, ctx.n(), rows)).rows());
}

Subspace Subspace::from_elements(const FieldCtx& ctx, const std::vector<FieldElement>& gens) {
    std::vector<std::uint64_t> rows;
    rows.reserve(gens.size());
    for (FieldElement a : gens) rows.push_back(ctx.packed(a));
    return from_rows(ctx, rows);
}

Subspace Subspace::subfield(const FieldCtx& ctx, int m) {
    FieldElement g = ctx.subfield_generator(m);
    std::vector<std::uint64_t> rows;
    rows.reserve(m);
    FieldElement cur = ctx.one();
    for (int i = 0; i < m; ++i) {
        rows.push_back(ctx.packed(cur));
        cur = ctx.mul(cur, g);
    }
    Subspace out = from_rows(ctx, rows);
    if (out.dim() != m) throw Error("subfield basis degenerated");
    return out;
}

bool Subspace::contains_packed(std::uint64_t v) const {
    return space_contains(matrix(), v);
}

bool Subspace::contains_subspace(const Subspace& other) const {
    if (ctx_ != other.ctx_) throw InvalidArgument("subspaces over different fields");
    if (other.dim() > dim()) return false;
    for (std::uint64_t v : other.rows_)
        if (!contains_packed(v)) return false;
    return true;
}

Subspace Subspace::scaled(FieldElement b) const {
    if (b.is_zero()) throw InvalidArgument("scaling by zero collapses the subspace");
    const FieldCtx& F = *ctx_;
    std::vector<std::uint64_t> rows;
    rows.reserve(rows_.size());
    for (std::uint64_t v : rows_) rows.push_back(F.packed(F.mul(F.from_packed(v), b)));
    return Subspace(F, rref(FqMatrix(F, F.n(), rows)).rows());
}

std::vector<std::uint64_t> Subspace::enumerate_packed() const {
    return enumerate_space(matrix());
}

std::size_t Subspace::hash() const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (std::uint64_t v : rows_) {
        h ^= v;
        h *= 0x100000001b3ull;
    }
    return h;
}

Subspace sum(const Subspace& u, const Subspace& v) {
    if (&u.ctx() != &v.ctx()) throw InvalidArgument("subspaces over different fields");
    return Subspace::from_rows(u.ctx(), sum_spaces(u.matrix(), v.matrix()).rows());
}

Subspace intersect(const Subspace& u, const Subspace& v) {
    if (&u.ctx() != &v.ctx()) throw InvalidArgument("subspaces over different fields");
    return Subspace::from_rows(u.ctx(), intersect_spaces(u.matrix(), v.matrix()).rows());
}

int subspace_distance(const Subspace& u, const Subspace& v) {
    if (&u.ctx() != &v.ctx()) throw InvalidArgument("subspaces over different fields");
    // dim(U+V) - dim(U^V) = 2 dim(U+V) - dim U - dim V
    int s = rank_of_union(u.matrix(), v.matrix());
    return 2 * s - u.dim() - v.dim();
}

std::uint64_t stabilizer_order(const Subspace& u, FieldElement b) {
    if (b.is_zero()) throw InvalidArgument("orbit under zero is undefined");
    if (u.dim() < 1) throw InvalidArgument("stabilizer of the zero subspace is not tracked");
    const std::uint64_t ord = u.ctx().multiplicative_order(b);
    Subspace cur = u.scaled(b);
    std::uint64_t len = 1;
    while (!(cur == u)) {
        cur = cur.scaled(b);
        ++len;
    }
    return ord / len;
}

int best_friend(const Subspace& u) {
    if (u.dim() < 1) throw InvalidArgument("the zero subspace has no best friend");
    const FieldCtx& F = u.ctx();
    int g = std::gcd(u.dim(), F.n());
    std::vector<std::uint64_t> ms = divisors(static_cast<std::uint64_t>(g));
    for (auto it = ms.rbegin(); it != ms.rend(); ++it) {
        int m = static_cast<int>(*it);
        if (u.scaled(F.subfield_generator(m)) == u) return m;
    }
    return 1; // unreachable: m = 1 always qualifies
}

SubspaceOrbit orbit_subspace(const Subspace& u, FieldElement b) {
    if (b.is_zero()) throw InvalidArgument("orbit under zero is undefined");
    SubspaceOrbit orbit;
    orbit.beta = b;
    orbit.elements.push_back(u);
    Subspace cur = u.scaled(b);
    while (!(cur == u)) {
        orbit.elements.push_back(cur);
        cur = cur.scaled(b);
    }
    orbit.stab_order = u.ctx().multiplicative_order(b) / orbit.elements.size();
    return orbit;
}

int orbit_min_distance(const Subspace& u, FieldElement b) {
    if (b.is_zero()) throw InvalidArgument("orbit under zero is undefined");
    int best = -1;
    Subspace cur = u.scaled(b);
    while (!(cur == u)) {
        int d = subspace_distance(u, cur);
        if (best < 0 || d < best) best = d;
        cur = cur.scaled(b);
    }
    return best < 0 ? 0 : best;
}

int minpoly_degree(const FieldCtx& ctx, std::uint64_t l, int m) {
    if (m < 1 || ctx.n() % m != 0) throw InvalidArgument("m must divide n");
    const std::uint64_t N = ctx.group_order();
    if (N == 1) return 1;
    const std::uint64_t lr = l % N;
    std::uint64_t frob = 1;
    const std::uint64_t qm = ctx.q_pow(m);
    for (int d = 1; d <= ctx.n() / m; ++d) {
        frob = frob * (qm % N) % N;
        if (lr * frob % N == lr) return d;
    }
    throw Error("frobenius orbit did not close");
}

Subspace regular_form_subspace(const FieldCtx& ctx, int m, std::uint64_t l, int t) {
    if (m < 1 || ctx.n() % m != 0) throw InvalidArgument("m must divide n");
    const std::uint64_t c = ctx.group_order() / (ctx.q_pow(m) - 1);
    if (l < 1 || l >= c) throw InvalidArgument("l out of range [1, (q^n-1)/(q^m-1))");
    const int L = minpoly_degree(ctx, l, m);
    if (t < 1) throw InvalidArgument("t must be at least 1");
    if (t > L)
        throw Infeasible("t exceeds the minimal polynomial degree, the sum would degenerate");

    const std::int64_t gexp = static_cast<std::int64_t>(c);
    std::vector<std::uint64_t> rows;
    rows.reserve(static_cast<std::size_t>(m) * t);
    for (int j = 0; j < t; ++j)
        for (int i = 0; i < m; ++i)
            rows.push_back(ctx.packed(
                ctx.alpha_pow(gexp * i + static_cast<std::int64_t>(l) * j)));
    Subspace out = Subspace::from_rows(ctx, rows);
    if (out.dim() != m * t) throw Error("regular form degenerated below m*t");
    return out;
}

} // namespace orbitflags
