#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "orbitflags/flagcodes.hpp"

namespace orbitflags {

enum class ConstructionKind { galois, basic, weaved, custom };

const char* to_string(ConstructionKind k);

/// Parsed form of a code description file: `key = value` lines, `#` starts
/// a comment, blank lines ignored. Field keys: p, e (default 1), n.
/// Construction keys: construction = galois|basic|weaved|custom, then
/// type= (galois), m=/l=/s= (basic), chain= (weaved), or one subspace= line
/// per position (custom) with basis rows separated by `;`, each row the sum
/// of alpha^j over a comma separated exponent list. Optional beta_exponent=
/// or beta_order= (at most one) selects the orbit generator.
struct CodeSpec {
    std::int64_t p = 0;
    int e = 1;
    int n = 0;
    ConstructionKind construction = ConstructionKind::galois;
    std::vector<int> type;
    int m = 0;
    std::uint64_t l = 0;
    std::vector<int> s;
    std::vector<int> chain;
    std::vector<std::vector<std::vector<std::int64_t>>> subspaces;
    std::optional<std::int64_t> beta_exponent;
    std::optional<std::uint64_t> beta_order;
};

/// Throws ParseError with a 1-based line number on any malformed, unknown,
/// duplicate or missing key.
CodeSpec parse_code_spec(const std::string& text);
CodeSpec load_code_spec(const std::string& path);

/// A code spec turned into objects. The field context owns the tables the
/// flag points into, so keep the struct together.
struct Realization {
    std::unique_ptr<FieldCtx> field;
    Flag flag;
    std::optional<FieldElement> beta;
};

Realization realize(const CodeSpec& spec);

} // namespace orbitflags
