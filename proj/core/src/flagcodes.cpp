#include "orbitflags/flagcodes.hpp"

#include <algorithm>
#include <numeric>

namespace orbitflags {

namespace {

void check_galois_type(const FieldCtx& ctx, const std::vector<int>& type) {
    if (type.empty()) throw InvalidArgument("type must be nonempty");
    for (std::size_t i = 0; i < type.size(); ++i) {
        if (type[i] < 1) throw InvalidArgument("type entries must be positive");
        if (i > 0 && (type[i] <= type[i - 1] || type[i] % type[i - 1] != 0))
            throw Infeasible("type must be a strictly increasing divisor chain");
    }
    if (ctx.n() % type.back() != 0 || type.back() >= ctx.n())
        throw Infeasible("the largest dimension must be a proper divisor of n");
}

void check_weaved_chain(const FieldCtx& ctx, const std::vector<int>& chain) {
    // same shape requirement as a subfield chain; quotients of at least 2
    // follow from strict divisibility
    check_galois_type(ctx, chain);
}

} // namespace

FlagCode::FlagCode(Flag generator, FieldElement beta)
    : gen_(std::move(generator)), beta_(beta), cache_(std::make_shared<Cache>()) {
    if (beta.is_zero()) throw InvalidArgument("beta must be nonzero");
    Flag cur = gen_.scaled(beta_);
    size_ = 1;
    while (!(cur == gen_)) {
        cur = cur.scaled(beta_);
        ++size_;
    }
    stab_ = gen_.ctx().multiplicative_order(beta_) / size_;
}

const std::vector<Flag>& FlagCode::elements() const {
    std::call_once(cache_->once, [this] {
        std::vector<Flag> flags;
        flags.reserve(size_);
        Flag cur = gen_;
        for (std::uint64_t i = 0; i < size_; ++i) {
            flags.push_back(cur);
            if (i + 1 < size_) cur = cur.scaled(beta_);
        }
        cache_->flags = std::move(flags);
    });
    return cache_->flags;
}

int code_min_distance(const FlagCode& c) {
    if (c.size() == 1) return 0;
    int best = -1;
    Flag cur = c.generator().scaled(c.beta());
    for (std::uint64_t j = 1; j < c.size(); ++j) {
        int d = flag_distance(c.generator(), cur);
        if (best < 0 || d < best) best = d;
        if (j + 1 < c.size()) cur = cur.scaled(c.beta());
    }
    return best;
}

SubspaceOrbit projected_code(const FlagCode& c, std::size_t i) {
    if (i >= c.generator().length()) throw InvalidArgument("projection index out of range");
    return orbit_subspace(c.generator().at(i), c.beta());
}

bool is_disjoint(const FlagCode& c) {
    for (std::size_t i = 0; i < c.generator().length(); ++i) {
        std::uint64_t len = c.ctx().multiplicative_order(c.beta()) /
                            stabilizer_order(c.generator().at(i), c.beta());
        if (len != c.size()) return false;
    }
    return true;
}

bool is_consistent(const FlagCode& c) {
    if (!is_disjoint(c)) return false;
    int sum = 0;
    for (std::size_t i = 0; i < c.generator().length(); ++i)
        sum += orbit_min_distance(c.generator().at(i), c.beta());
    return code_min_distance(c) == sum;
}

CodeReport make_report(const FlagCode& c) {
    CodeReport out;
    out.cardinality = c.size();
    out.min_distance = code_min_distance(c);
    out.best_friend = best_friend_flag(c.generator());
    FlagClassification cls = classify_flag(c.generator());
    out.kind = cls.kind;
    out.underlying_type = cls.underlying_type;

    int proj_sum = 0;
    bool disjoint = true;
    for (std::size_t i = 0; i < c.generator().length(); ++i) {
        const Subspace& u = c.generator().at(i);
        CodeReport::Projection p;
        p.dimension = u.dim();
        p.size = c.ctx().multiplicative_order(c.beta()) / stabilizer_order(u, c.beta());
        p.min_distance = orbit_min_distance(u, c.beta());
        p.best_friend = best_friend(u);
        disjoint = disjoint && p.size == c.size();
        proj_sum += p.min_distance;
        out.projections.push_back(p);
    }
    out.disjoint = disjoint;
    out.consistent = disjoint && out.min_distance == proj_sum;
    return out;
}

Flag galois_flag(const FieldCtx& ctx, const std::vector<int>& type) {
    check_galois_type(ctx, type);
    std::vector<Subspace> subs;
    subs.reserve(type.size());
    for (int t : type) subs.push_back(Subspace::subfield(ctx, t));
    return Flag(ctx, std::move(subs));
}

int predict_galois_distance(const FieldCtx& ctx, const std::vector<int>& type,
                            FieldElement beta) {
    check_galois_type(ctx, type);
    if (beta.is_zero()) throw InvalidArgument("beta must be nonzero");
    const std::uint64_t ord = ctx.multiplicative_order(beta);
    std::vector<std::uint64_t> stab(type.size());
    for (std::size_t i = 0; i < type.size(); ++i)
        stab[i] = std::gcd(ord, ctx.q_pow(type[i]) - 1);

    if (stab.front() == stab.back()) {
        if (stab.front() == ord) return 0; // <beta> fixes every subfield
        int sum = 0;
        for (int t : type) sum += t;
        return 2 * sum;
    }
    int sum = 0;
    for (std::size_t i = 0; i < type.size() && stab[i] == stab.front(); ++i) sum += type[i];
    return 2 * sum;
}

Flag basic_flag(const FieldCtx& ctx, int m, std::uint64_t l, const std::vector<int>& s) {
    if (m < 1 || ctx.n() % m != 0) throw InvalidArgument("m must divide n");
    const std::uint64_t c = ctx.group_order() / (ctx.q_pow(m) - 1);
    if (l < 1 || l >= c) throw InvalidArgument("l out of range [1, (q^n-1)/(q^m-1))");
    const int L = minpoly_degree(ctx, l, m);
    if (L == 1) throw Infeasible("alpha^l lies in F_{q^m}, the tower degenerates");
    if (s.empty()) throw InvalidArgument("s must be nonempty");
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 1 || (i > 0 && s[i] <= s[i - 1]))
            throw InvalidArgument("s must be strictly increasing and positive");
    }
    const int cap = (m * L == ctx.n()) ? L - 1 : L;
    if (s.back() > cap) throw Infeasible("s_r too large for the minimal polynomial degree");

    std::vector<Subspace> subs;
    subs.reserve(s.size());
    for (int t : s) subs.push_back(regular_form_subspace(ctx, m, l, t));
    return Flag(ctx, std::move(subs));
}

Flag weaved_flag(const FieldCtx& ctx, const std::vector<int>& chain) {
    check_weaved_chain(ctx, chain);
    std::vector<Subspace> subs;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        const int mi = chain[i];
        const int next = (i + 1 < chain.size()) ? chain[i + 1] : ctx.n();
        const int quotient = next / mi;
        const std::uint64_t c_next = ctx.group_order() / (ctx.q_pow(next) - 1);
        for (int j = 1; j < quotient; ++j)
            subs.push_back(regular_form_subspace(ctx, mi, c_next, j));
    }
    return Flag(ctx, std::move(subs));
}

std::pair<int, int> weaved_distance_bounds(const FieldCtx& ctx, const std::vector<int>& chain,
                                           FieldElement beta) {
    check_weaved_chain(ctx, chain);
    if (beta.is_zero()) throw InvalidArgument("beta must be nonzero");
    const std::uint64_t ord = ctx.multiplicative_order(beta);
    const std::size_t k = chain.size();
    std::vector<std::uint64_t> stab(k);
    for (std::size_t i = 0; i < k; ++i) stab[i] = std::gcd(ord, ctx.q_pow(chain[i]) - 1);
    if (stab[0] == ord)
        throw InvalidArgument("beta lies in F_{q^(m_1)}, it fixes the whole flag");

    // cumulative contribution of the levels below a cut point
    auto level_sum = [&](std::size_t upto) {
        int sum = 0;
        for (std::size_t j = 0; j + 1 <= upto; ++j) {
            int quotient = chain[j + 1] / chain[j];
            sum += chain[j + 1] * (quotient - 1);
        }
        return sum;
    };

    std::size_t cut = 0; // first index with a strictly larger stabilizer, if any
    while (cut < k && stab[cut] == stab[0]) ++cut;

    int m_cut, quotient, base;
    if (cut == k) {
        m_cut = chain.back();
        quotient = ctx.n() / m_cut;
        base = level_sum(k - 1);
    } else {
        m_cut = chain[cut - 1];
        quotient = chain[cut] / m_cut;
        base = level_sum(cut - 1);
    }
    int lower = 2 * m_cut * (quotient - 1) + base;
    int upper = m_cut * (quotient * quotient / 2) + base;
    return {lower, upper};
}

int min_distance_lower_bound_by_bf_count(const Flag& f, FieldElement beta) {
    if (beta.is_zero()) throw InvalidArgument("beta must be nonzero");
    const int m = best_friend_flag(f);
    if ((f.ctx().q_pow(m) - 1) % f.ctx().multiplicative_order(beta) == 0)
        throw InvalidArgument("beta lies in F_{q^m}, it fixes the whole flag");
    int count = 0;
    for (const Subspace& s : f.subspaces())
        if (best_friend(s) == m) ++count;
    return 2 * m * count;
}

Flag extend_flag_by_search(const Flag& f, int target_dim, int required_bf) {
    const FieldCtx& F = f.ctx();
    const Subspace& last = f.subspaces().back();
    if (required_bf < 1 || F.n() % required_bf != 0)
        throw InvalidArgument("required_bf must divide n");
    if (target_dim <= last.dim() || target_dim >= F.n())
        throw InvalidArgument("target_dim must lie strictly between dim F_r and n");
    if ((target_dim - last.dim()) % required_bf != 0)
        throw InvalidArgument("dimension gap must be a multiple of required_bf");
    if (!(last.scaled(F.subfield_generator(required_bf)) == last))
        throw InvalidArgument("the last subspace is not F_{q^(required_bf)}-linear");

    const std::int64_t g = F.subfield_generator(required_bf).exponent();
    Subspace cur = last;
    for (std::uint64_t j = 0; j < F.group_order(); ++j) {
        std::vector<std::uint64_t> rows = cur.rows();
        for (int i = 0; i < required_bf; ++i)
            rows.push_back(F.packed(F.alpha_pow(g * i + static_cast<std::int64_t>(j))));
        Subspace cand = Subspace::from_rows(F, rows);
        if (cand.dim() != cur.dim() + required_bf) continue;
        if (cand.dim() < target_dim) {
            cur = cand;
            continue;
        }
        if (best_friend(cand) == required_bf) {
            std::vector<Subspace> subs = f.subspaces();
            subs.push_back(cand);
            return Flag(F, std::move(subs));
        }
        // keep scanning for a final summand that passes the test
    }
    throw Infeasible("no extension with the requested best friend was found");
}

std::vector<OrbitSizeRow> table_report(const FieldCtx& ctx, int m,
                                       const std::vector<FieldElement>& betas) {
    if (m < 1 || ctx.n() % m != 0) throw InvalidArgument("m must divide n");
    std::vector<OrbitSizeRow> out;
    out.reserve(betas.size());
    for (FieldElement b : betas) {
        if (b.is_zero()) throw InvalidArgument("beta must be nonzero");
        OrbitSizeRow row;
        row.beta_exponent = b.exponent();
        row.order = ctx.multiplicative_order(b);
        row.intersection_order = std::gcd(row.order, ctx.q_pow(m) - 1);
        row.orbit_size = row.order / row.intersection_order;
        out.push_back(row);
    }
    return out;
}

} // namespace orbitflags
