#include "orbitflags/codespec.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <string_view>

#include "orbitflags/errors.hpp"

namespace orbitflags {

const char* to_string(ConstructionKind k) {
    switch (k) {
    case ConstructionKind::galois: return "galois";
    case ConstructionKind::basic: return "basic";
    case ConstructionKind::weaved: return "weaved";
    case ConstructionKind::custom: return "custom";
    }
    return "?";
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

std::int64_t parse_int(int line, std::string_view tok) {
    tok = trim(tok);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
    return v;
}

std::vector<std::int64_t> parse_int_list(int line, std::string_view value) {
    std::vector<std::int64_t> out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = value.find(',', start);
        std::string_view tok = value.substr(start, comma == std::string_view::npos
                                                       ? std::string_view::npos
                                                       : comma - start);
        out.push_back(parse_int(line, tok));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

std::vector<int> to_int_vec(int line, const std::vector<std::int64_t>& v) {
    std::vector<int> out;
    out.reserve(v.size());
    for (std::int64_t x : v) {
        if (x < 0 || x > 1 << 24)
            throw ParseError(line, "value out of range: " + std::to_string(x));
        out.push_back(static_cast<int>(x));
    }
    return out;
}

} // namespace

CodeSpec parse_code_spec(const std::string& text) {
    CodeSpec spec;
    std::map<std::string, int> seen; // key -> first line, for duplicate checks
    bool construction_set = false;

    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string_view sv = raw;
        if (std::size_t hash = sv.find('#'); hash != std::string_view::npos)
            sv = sv.substr(0, hash);
        sv = trim(sv);
        if (sv.empty())
            continue;

        std::size_t eq = sv.find('=');
        if (eq == std::string_view::npos)
            throw ParseError(line, "expected 'key = value'");
        std::string key(trim(sv.substr(0, eq)));
        std::string_view value = trim(sv.substr(eq + 1));
        if (key.empty())
            throw ParseError(line, "empty key");
        if (value.empty())
            throw ParseError(line, "empty value for key '" + key + "'");

        if (key != "subspace") {
            auto [it, fresh] = seen.emplace(key, line);
            if (!fresh)
                throw ParseError(line, "duplicate key '" + key + "' (first on line " +
                                           std::to_string(it->second) + ")");
        }

        if (key == "p") {
            spec.p = parse_int(line, value);
        } else if (key == "e") {
            spec.e = static_cast<int>(parse_int(line, value));
        } else if (key == "n") {
            spec.n = static_cast<int>(parse_int(line, value));
        } else if (key == "construction") {
            if (value == "galois")
                spec.construction = ConstructionKind::galois;
            else if (value == "basic")
                spec.construction = ConstructionKind::basic;
            else if (value == "weaved")
                spec.construction = ConstructionKind::weaved;
            else if (value == "custom")
                spec.construction = ConstructionKind::custom;
            else
                throw ParseError(line, "unknown construction '" + std::string(value) + "'");
            construction_set = true;
        } else if (key == "type") {
            spec.type = to_int_vec(line, parse_int_list(line, value));
        } else if (key == "m") {
            spec.m = static_cast<int>(parse_int(line, value));
        } else if (key == "l") {
            std::int64_t v = parse_int(line, value);
            if (v < 0)
                throw ParseError(line, "l must be nonnegative");
            spec.l = static_cast<std::uint64_t>(v);
        } else if (key == "s") {
            spec.s = to_int_vec(line, parse_int_list(line, value));
        } else if (key == "chain") {
            spec.chain = to_int_vec(line, parse_int_list(line, value));
        } else if (key == "subspace") {
            std::vector<std::vector<std::int64_t>> rows;
            std::size_t start = 0;
            std::string_view v = value;
            while (true) {
                std::size_t semi = v.find(';', start);
                std::string_view row = v.substr(start, semi == std::string_view::npos
                                                           ? std::string_view::npos
                                                           : semi - start);
                if (trim(row).empty())
                    throw ParseError(line, "empty basis row");
                rows.push_back(parse_int_list(line, row));
                if (semi == std::string_view::npos)
                    break;
                start = semi + 1;
            }
            spec.subspaces.push_back(std::move(rows));
        } else if (key == "beta_exponent") {
            spec.beta_exponent = parse_int(line, value);
        } else if (key == "beta_order") {
            std::int64_t v = parse_int(line, value);
            if (v < 1)
                throw ParseError(line, "beta_order must be positive");
            spec.beta_order = static_cast<std::uint64_t>(v);
        } else {
            throw ParseError(line, "unknown key '" + key + "'");
        }
    }

    auto require = [&](const char* key) {
        if (!seen.count(key))
            throw ParseError(line, std::string("missing key '") + key + "'");
    };
    auto forbid = [&](const char* key) {
        if (auto it = seen.find(key); it != seen.end())
            throw ParseError(it->second, std::string("key '") + key + "' is not used by the " +
                                             to_string(spec.construction) + " construction");
    };

    require("p");
    require("n");
    require("construction");
    if (seen.count("beta_exponent") && seen.count("beta_order"))
        throw ParseError(seen["beta_order"], "give beta_exponent or beta_order, not both");

    switch (spec.construction) {
    case ConstructionKind::galois:
        require("type");
        forbid("m"), forbid("l"), forbid("s"), forbid("chain");
        if (!spec.subspaces.empty())
            throw ParseError(line, "subspace lines are only used by the custom construction");
        break;
    case ConstructionKind::basic:
        require("m"), require("l"), require("s");
        forbid("type"), forbid("chain");
        if (!spec.subspaces.empty())
            throw ParseError(line, "subspace lines are only used by the custom construction");
        break;
    case ConstructionKind::weaved:
        require("chain");
        forbid("type"), forbid("m"), forbid("l"), forbid("s");
        if (!spec.subspaces.empty())
            throw ParseError(line, "subspace lines are only used by the custom construction");
        break;
    case ConstructionKind::custom:
        if (spec.subspaces.empty())
            throw ParseError(line, "custom construction needs at least one subspace line");
        forbid("type"), forbid("m"), forbid("l"), forbid("s"), forbid("chain");
        break;
    }
    if (!construction_set)
        throw ParseError(line, "missing key 'construction'");
    return spec;
}

CodeSpec load_code_spec(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open spec file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_code_spec(buf.str());
}

Realization realize(const CodeSpec& spec) {
    auto ctx = std::make_unique<FieldCtx>(spec.p, spec.e, spec.n);

    std::optional<FieldElement> beta;
    if (spec.beta_exponent) {
        beta = ctx->alpha_pow(*spec.beta_exponent);
    } else if (spec.beta_order) {
        std::uint64_t ord = *spec.beta_order;
        if (ctx->group_order() % ord != 0)
            throw Infeasible("beta_order " + std::to_string(ord) + " does not divide " +
                             std::to_string(ctx->group_order()));
        beta = ctx->alpha_pow(static_cast<std::int64_t>(ctx->group_order() / ord));
    }

    auto build_flag = [&]() -> Flag {
        switch (spec.construction) {
        case ConstructionKind::galois:
            return galois_flag(*ctx, spec.type);
        case ConstructionKind::basic:
            return basic_flag(*ctx, spec.m, spec.l, spec.s);
        case ConstructionKind::weaved:
            return weaved_flag(*ctx, spec.chain);
        case ConstructionKind::custom: {
            std::vector<Subspace> subs;
            subs.reserve(spec.subspaces.size());
            for (const auto& rows : spec.subspaces) {
                std::vector<FieldElement> gens;
                gens.reserve(rows.size());
                for (const auto& exps : rows) {
                    FieldElement g = ctx->zero();
                    for (std::int64_t j : exps)
                        g = ctx->add(g, ctx->alpha_pow(j));
                    if (g.is_zero())
                        throw Infeasible("a basis row sums to zero");
                    gens.push_back(g);
                }
                subs.push_back(Subspace::from_elements(*ctx, gens));
            }
            return Flag(*ctx, std::move(subs));
        }
        }
        throw Error("unreachable");
    };

    Flag flag = build_flag();
    return Realization{std::move(ctx), std::move(flag), beta};
}

} // namespace orbitflags
