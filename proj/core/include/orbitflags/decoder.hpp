#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "orbitflags/flagcodes.hpp"

namespace orbitflags {

/// A received flag after erasures: a weakly nested chain X_1 <= ... <= X_r
/// with dim(X_i) <= t_i, where (t_1, ..., t_r) is the type of the
/// transmitted code. Position i is short by t_i - dim(X_i) erasures.
class StutteringFlag {
public:
    StutteringFlag(std::vector<Subspace> received, std::vector<int> expected_dims);

    const std::vector<Subspace>& received() const noexcept { return subs_; }
    const Subspace& at(std::size_t i) const { return subs_.at(i); }
    std::size_t length() const noexcept { return subs_.size(); }
    const std::vector<int>& expected_dims() const noexcept { return dims_; }
    int erasures_at(std::size_t i) const { return dims_.at(i) - subs_.at(i).dim(); }
    int total_erasures() const;

private:
    std::vector<Subspace> subs_;
    std::vector<int> dims_;
};

/// Apply an erasure pattern to a flag: position i keeps a random subspace
/// of dimension t_i - counts[i], drawn nested (top down, each level inside
/// the next one) and deterministically from the seed. The counts must be
/// feasible: 0 <= counts[i] <= t_i and residual dimensions nondecreasing.
StutteringFlag erase(const Flag& sent, const std::vector<int>& counts, std::uint64_t seed);

/// Smallest position i whose erasure count is below the flag best friend m
/// of the code and whose projected code is in bijection with the full code,
/// so a nearest-subspace lookup at i identifies the codeword. Empty when no
/// position qualifies.
std::optional<std::size_t> find_correctable_shot(const StutteringFlag& x, const FlagCode& c);

struct DecodeOutcome {
    bool success = false;
    std::optional<Flag> decoded;
    std::optional<std::size_t> shot; // position used for the lookup
    int erasures_corrected = 0;
};

/// Erasure decoding: pick a correctable position, find the unique projected
/// codeword within subspace distance m-1 of the received subspace there,
/// and return the codeword it belongs to. Fails (success = false) when no
/// position qualifies, no candidate is in range, or the candidate in range
/// is ambiguous; ambiguity is never resolved silently.
DecodeOutcome decode(const StutteringFlag& x, const FlagCode& c);

struct ChannelStats {
    int total_erasures = 0;
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    double rate = 0.0;
};

/// Monte Carlo erasure channel: for every total erasure count e up to
/// max_erasures (clamped to the largest feasible total), run the given
/// number of trials. Each trial draws its own random stream from (seed,
/// trial index): a uniformly random codeword, a uniformly random feasible
/// split of e over the positions, and a random erasure of that shape.
/// Success means decoding returned exactly the transmitted flag.
std::vector<ChannelStats> channel_sim(const FlagCode& c, std::uint64_t trials,
                                      int max_erasures, std::uint64_t seed);

} // namespace orbitflags
