#include "orbitflags/flags.hpp"

#include <algorithm>
#include <numeric>

namespace orbitflags {

Flag::Flag(const FieldCtx& ctx, std::vector<Subspace> subspaces)
    : ctx_(&ctx), subs_(std::move(subspaces)) {
    if (subs_.empty()) throw InvalidArgument("a flag needs at least one subspace");
    for (const Subspace& s : subs_)
        if (&s.ctx() != ctx_) throw InvalidArgument("flag subspaces over different fields");
    if (subs_.front().dim() < 1) throw InvalidArgument("the zero subspace cannot appear in a flag");
    if (subs_.back().dim() >= ctx.n()) throw InvalidArgument("the full space cannot appear in a flag");
    for (std::size_t i = 0; i + 1 < subs_.size(); ++i) {
        if (subs_[i].dim() >= subs_[i + 1].dim() || !subs_[i + 1].contains_subspace(subs_[i]))
            throw InvalidArgument("flag subspaces must be strictly nested");
    }
}

std::vector<int> Flag::type() const {
    std::vector<int> t(subs_.size());
    for (std::size_t i = 0; i < subs_.size(); ++i) t[i] = subs_[i].dim();
    return t;
}

Flag Flag::scaled(FieldElement b) const {
    std::vector<Subspace> out;
    out.reserve(subs_.size());
    for (const Subspace& s : subs_) out.push_back(s.scaled(b));
    return Flag(*ctx_, std::move(out));
}

Flag Flag::subflag(const std::vector<std::size_t>& positions) const {
    if (positions.empty()) throw InvalidArgument("subflag needs at least one position");
    std::vector<Subspace> out;
    out.reserve(positions.size());
    for (std::size_t i = 0; i < positions.size(); ++i) {
        if (i > 0 && positions[i] <= positions[i - 1])
            throw InvalidArgument("subflag positions must be strictly increasing");
        if (positions[i] >= subs_.size()) throw InvalidArgument("subflag position out of range");
        out.push_back(subs_[positions[i]]);
    }
    return Flag(*ctx_, std::move(out));
}

std::size_t Flag::hash() const noexcept {
    std::size_t h = 0x811c9dc5u;
    for (const Subspace& s : subs_) h = (h ^ s.hash()) * 0x100000001b3ull;
    return h;
}

int flag_distance(const Flag& a, const Flag& b) {
    if (&a.ctx() != &b.ctx()) throw InvalidArgument("flags over different fields");
    if (a.length() != b.length()) throw InvalidArgument("flags of different types");
    int d = 0;
    for (std::size_t i = 0; i < a.length(); ++i) {
        if (a.at(i).dim() != b.at(i).dim()) throw InvalidArgument("flags of different types");
        d += subspace_distance(a.at(i), b.at(i));
    }
    return d;
}

int max_flag_distance(int n, const std::vector<int>& type) {
    int d = 0;
    for (int t : type) {
        if (t < 1 || t >= n) throw InvalidArgument("type entry out of range");
        d += 2 * std::min(t, n - t);
    }
    return d;
}

FlagClassification classify_flag(const Flag& f) {
    const FieldCtx& F = f.ctx();
    FlagClassification out;
    for (std::size_t i = 0; i < f.length(); ++i) {
        int t = f.at(i).dim();
        if (F.n() % t != 0) continue;
        if (f.at(i) == Subspace::subfield(F, t)) {
            out.field_positions.push_back(i);
            out.underlying_type.push_back(t);
        }
    }
    if (out.field_positions.empty())
        out.kind = FlagKind::plain;
    else if (out.field_positions.size() == f.length())
        out.kind = FlagKind::galois;
    else
        out.kind = FlagKind::generalized_galois;
    return out;
}

int best_friend_flag(const Flag& f) {
    int g = 0;
    for (const Subspace& s : f.subspaces()) g = std::gcd(g, best_friend(s));
    return g;
}

const char* to_string(FlagKind kind) {
    switch (kind) {
        case FlagKind::galois: return "galois";
        case FlagKind::generalized_galois: return "generalized_galois";
        case FlagKind::plain: return "plain";
    }
    return "?";
}

} // namespace orbitflags
