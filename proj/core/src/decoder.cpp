#include "orbitflags/decoder.hpp"

#include <algorithm>

namespace orbitflags {

namespace {

// self-contained splitmix64 stream so simulation output is reproducible
// independent of the standard library implementation
struct Stream {
    std::uint64_t state;

    explicit Stream(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t k) {
        const std::uint64_t limit = ~std::uint64_t(0) - ~std::uint64_t(0) % k;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % k;
    }
};

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    Stream s(seed * 0x2545f4914f6cdd1dull + index * 0x100000001b3ull + 1);
    return s.next();
}

// uniformly random element of the row space
std::uint64_t random_member(const FieldCtx& F, const Subspace& w, Stream& rng) {
    if (F.q() == 2) {
        std::uint64_t mask = rng.below(std::uint64_t(1) << w.dim());
        std::uint64_t v = 0;
        for (int i = 0; i < w.dim(); ++i)
            if (mask & (std::uint64_t(1) << i)) v ^= w.rows()[i];
        return v;
    }
    std::uint64_t v = 0;
    for (int i = 0; i < w.dim(); ++i) {
        std::uint32_t c = static_cast<std::uint32_t>(rng.below(F.q()));
        if (c != 0) v = F.vec_add(v, F.vec_scale(w.rows()[i], c));
    }
    return v;
}

// uniformly random d-dimensional subspace of w: keep drawing uniform
// members while they extend the span
Subspace random_subspace(const Subspace& w, int d, Stream& rng) {
    const FieldCtx& F = w.ctx();
    if (d > w.dim()) throw InvalidArgument("requested dimension exceeds the ambient subspace");
    std::vector<std::uint64_t> picked;
    while (static_cast<int>(picked.size()) < d) {
        std::uint64_t v = random_member(F, w, rng);
        std::vector<std::uint64_t> trial = picked;
        trial.push_back(v);
        if (rank(FqMatrix(F, F.n(), trial)) == static_cast<int>(picked.size()) + 1)
            picked.push_back(v);
    }
    return Subspace::from_rows(F, picked);
}

void enumerate_counts(const std::vector<int>& type, int remaining, std::size_t i,
                      std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (i == type.size()) {
        if (remaining != 0) return;
        // residual dimensions must be nondecreasing for a nested pattern
        for (std::size_t j = 0; j + 1 < type.size(); ++j)
            if (type[j] - cur[j] > type[j + 1] - cur[j + 1]) return;
        out.push_back(cur);
        return;
    }
    for (int e = 0; e <= std::min(type[i], remaining); ++e) {
        cur[i] = e;
        enumerate_counts(type, remaining - e, i + 1, cur, out);
    }
    cur[i] = 0;
}

} // namespace

StutteringFlag::StutteringFlag(std::vector<Subspace> received, std::vector<int> expected_dims)
    : subs_(std::move(received)), dims_(std::move(expected_dims)) {
    if (subs_.empty() || subs_.size() != dims_.size())
        throw InvalidArgument("received chain and expected dimensions disagree");
    for (std::size_t i = 0; i < subs_.size(); ++i) {
        if (subs_[i].dim() > dims_[i])
            throw InvalidArgument("received subspace larger than the expected dimension");
        if (i > 0 && !subs_[i].contains_subspace(subs_[i - 1]))
            throw InvalidArgument("received subspaces must be nested");
    }
}

int StutteringFlag::total_erasures() const {
    int e = 0;
    for (std::size_t i = 0; i < subs_.size(); ++i) e += erasures_at(i);
    return e;
}

StutteringFlag erase(const Flag& sent, const std::vector<int>& counts, std::uint64_t seed) {
    const std::vector<int> type = sent.type();
    if (counts.size() != type.size()) throw InvalidArgument("one erasure count per position");
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (counts[i] < 0 || counts[i] > type[i])
            throw InvalidArgument("erasure count out of range");
        if (i + 1 < counts.size() &&
            type[i] - counts[i] > type[i + 1] - counts[i + 1])
            throw InvalidArgument("erasure counts leave no nested chain");
    }

    const std::size_t r = type.size();
    Stream rng(derive_seed(seed, 0));
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<Subspace> xs(r, Subspace::zero(sent.ctx()));
        xs[r - 1] = random_subspace(sent.at(r - 1), type[r - 1] - counts[r - 1], rng);
        bool ok = true;
        for (std::size_t i = r - 1; i-- > 0;) {
            Subspace ambient = intersect(xs[i + 1], sent.at(i));
            if (ambient.dim() < type[i] - counts[i]) {
                ok = false; // this draw cannot be completed, redraw from the top
                break;
            }
            xs[i] = random_subspace(ambient, type[i] - counts[i], rng);
        }
        if (ok) return StutteringFlag(std::move(xs), type);
    }
    throw Error("erasure sampling did not converge");
}

std::optional<std::size_t> find_correctable_shot(const StutteringFlag& x, const FlagCode& c) {
    if (x.expected_dims() != c.generator().type())
        throw InvalidArgument("received flag does not match the code type");
    const int m = best_friend_flag(c.generator());
    const std::uint64_t ord = c.ctx().multiplicative_order(c.beta());
    for (std::size_t i = 0; i < x.length(); ++i) {
        if (x.erasures_at(i) > m - 1) continue;
        if (ord / stabilizer_order(c.generator().at(i), c.beta()) == c.size()) return i;
    }
    return std::nullopt;
}

DecodeOutcome decode(const StutteringFlag& x, const FlagCode& c) {
    DecodeOutcome out;
    std::optional<std::size_t> shot = find_correctable_shot(x, c);
    if (!shot) return out;
    const std::size_t i = *shot;
    const int m = best_friend_flag(c.generator());

    SubspaceOrbit orbit = orbit_subspace(c.generator().at(i), c.beta());
    std::optional<std::size_t> found;
    for (std::size_t j = 0; j < orbit.elements.size(); ++j) {
        if (subspace_distance(x.at(i), orbit.elements[j]) <= m - 1) {
            if (found) return out; // ambiguous, refuse to guess
            found = j;
        }
    }
    if (!found) return out;

    out.success = true;
    out.shot = i;
    out.decoded = c.elements()[*found];
    out.erasures_corrected = x.total_erasures();
    return out;
}

std::vector<ChannelStats> channel_sim(const FlagCode& c, std::uint64_t trials,
                                      int max_erasures, std::uint64_t seed) {
    if (trials < 1) throw InvalidArgument("at least one trial per erasure count");
    if (max_erasures < 0) throw InvalidArgument("max_erasures must be nonnegative");
    const std::vector<int> type = c.generator().type();
    int max_total = 0;
    for (int t : type) max_total += t;
    const int cap = std::min(max_erasures, max_total);

    std::vector<ChannelStats> out;
    for (int e = 0; e <= cap; ++e) {
        std::vector<std::vector<int>> patterns;
        std::vector<int> cur(type.size(), 0);
        enumerate_counts(type, e, 0, cur, patterns);
        ChannelStats stats;
        stats.total_erasures = e;
        stats.trials = trials;
        for (std::uint64_t t = 0; t < trials; ++t) {
            Stream rng(derive_seed(seed, static_cast<std::uint64_t>(e) * trials + t));
            const Flag& sent = c.elements()[rng.below(c.size())];
            const std::vector<int>& counts = patterns[rng.below(patterns.size())];
            StutteringFlag x = erase(sent, counts, rng.next());
            DecodeOutcome res = decode(x, c);
            if (res.success && *res.decoded == sent) ++stats.successes;
        }
        stats.rate = static_cast<double>(stats.successes) / static_cast<double>(trials);
        out.push_back(stats);
    }
    return out;
}

} // namespace orbitflags
