#include <atomic>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "orbitflags/codespec.hpp"
#include "orbitflags/decoder.hpp"
#include "orbitflags/errors.hpp"
#include "orbitflags/potential.hpp"

namespace {

using namespace orbitflags;

/// Writes to --out when given (binary mode, LF endings), stdout otherwise.
class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_)
                throw Error("cannot open output file: " + path);
            os_ = &file_;
        }
    }
    std::ostream& stream() { return *os_; }

private:
    std::ofstream file_;
    std::ostream* os_ = &std::cout;
};

std::string format_rate(double rate) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", rate);
    return buf;
}

std::string join_ints(const std::vector<int>& v, const char* sep) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? sep : "") << v[i];
    return os.str();
}

/// Orbit generator: beta from the spec file, the primitive element by default.
FieldElement pick_beta(const Realization& r) {
    return r.beta ? *r.beta : r.field->alpha();
}

int cmd_report(const std::string& spec_path, const std::string& out_path) {
    Realization r = realize(load_code_spec(spec_path));
    const FieldCtx& ctx = *r.field;
    FieldElement beta = pick_beta(r);
    FlagCode code(r.flag, beta);
    CodeReport rep = make_report(code);
    DistanceProfile profile = profile_of(r.flag);
    std::vector<int> potential = potential_values(profile);

    std::ostringstream txt;
    txt << "field: GF(" << ctx.q() << "^" << ctx.n() << ")\n";
    txt << "beta: alpha^" << ctx.mod_order(beta.exponent()) << ", order "
        << ctx.multiplicative_order(beta) << "\n";
    txt << "type: (" << join_ints(r.flag.type(), ", ") << ")\n";
    txt << "classification: " << to_string(rep.kind) << "\n";
    txt << "underlying_type: ("
        << join_ints(rep.underlying_type, ", ") << ")\n";
    txt << "best_friend: " << rep.best_friend << "\n";
    txt << "cardinality: " << rep.cardinality << "\n";
    txt << "min_distance: " << rep.min_distance << "\n";
    txt << "max_distance_for_type: " << max_flag_distance(ctx.n(), r.flag.type()) << "\n";
    txt << "disjoint: " << (rep.disjoint ? "yes" : "no") << "\n";
    txt << "consistent: " << (rep.consistent ? "yes" : "no") << "\n";
    txt << "potential_distances: {" << join_ints(potential, ", ") << "}\n";
    txt << "projections (position, dimension, size, min_distance, best_friend):\n";
    for (std::size_t i = 0; i < rep.projections.size(); ++i) {
        const auto& p = rep.projections[i];
        txt << "  " << i + 1 << ", " << p.dimension << ", " << p.size << ", " << p.min_distance
            << ", " << p.best_friend << "\n";
    }
    std::cout << txt.str();

    if (!out_path.empty()) {
        Output out(out_path);
        auto& os = out.stream();
        os << "key,value\n";
        os << "field,GF(" << ctx.q() << "^" << ctx.n() << ")\n";
        os << "beta_exponent," << ctx.mod_order(beta.exponent()) << "\n";
        os << "beta_order," << ctx.multiplicative_order(beta) << "\n";
        os << "type," << join_ints(r.flag.type(), " ") << "\n";
        os << "classification," << to_string(rep.kind) << "\n";
        os << "underlying_type," << join_ints(rep.underlying_type, " ") << "\n";
        os << "best_friend," << rep.best_friend << "\n";
        os << "cardinality," << rep.cardinality << "\n";
        os << "min_distance," << rep.min_distance << "\n";
        os << "disjoint," << (rep.disjoint ? "yes" : "no") << "\n";
        os << "consistent," << (rep.consistent ? "yes" : "no") << "\n";
        os << "potential_distances," << join_ints(potential, " ") << "\n";
        for (std::size_t i = 0; i < rep.projections.size(); ++i) {
            const auto& p = rep.projections[i];
            os << "projection_" << i + 1 << "," << p.dimension << " " << p.size << " "
               << p.min_distance << " " << p.best_friend << "\n";
        }
    }
    return 0;
}

int cmd_table(const std::string& name, const std::string& out_path) {
    Output out(out_path);
    auto& os = out.stream();
    if (name == "table1") {
        FieldCtx ctx(2, 1, 12);
        std::vector<FieldElement> betas;
        for (std::int64_t exp : {1, 5, 9, 63})
            betas.push_back(ctx.alpha_pow(exp));
        os << "beta_exponent,order,intersection_order,orbit_size\n";
        for (const auto& row : table_report(ctx, 2, betas))
            os << row.beta_exponent << "," << row.order << "," << row.intersection_order << ","
               << row.orbit_size << "\n";
        return 0;
    }
    if (name == "table2") {
        FieldCtx ctx(2, 1, 10);
        Flag flag = weaved_flag(ctx, {1, 5});
        os << "order,distance\n";
        for (std::uint64_t d : divisors(ctx.group_order())) {
            FlagCode code(flag, ctx.alpha_pow(static_cast<std::int64_t>(ctx.group_order() / d)));
            os << d << "," << code_min_distance(code) << "\n";
        }
        return 0;
    }
    throw Error("unknown table '" + name + "' (expected table1 or table2)");
}

int cmd_sweep(const std::string& spec_path, const std::string& out_path, int threads) {
    Realization r = realize(load_code_spec(spec_path));
    const FieldCtx& ctx = *r.field;
    if (ctx.q_pow(ctx.n()) > (1u << 20))
        throw ResourceCap("sweep requires q^n <= 2^20");

    std::vector<std::uint64_t> divs = divisors(ctx.group_order());
    struct Row {
        std::uint64_t order = 0;
        std::uint64_t cardinality = 0;
        int distance = 0;
    };
    std::vector<Row> rows(divs.size());

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        try {
            for (std::size_t i; (i = next.fetch_add(1)) < divs.size();) {
                FlagCode code(r.flag, ctx.alpha_pow(static_cast<std::int64_t>(
                                          ctx.group_order() / divs[i])));
                rows[i] = {divs[i], code.size(), code_min_distance(code)};
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure)
                failure = std::current_exception();
        }
    };
    int pool_size = std::max(1, threads);
    std::vector<std::thread> pool;
    pool.reserve(pool_size);
    for (int t = 0; t < pool_size; ++t)
        pool.emplace_back(worker);
    for (auto& th : pool)
        th.join();
    if (failure)
        std::rethrow_exception(failure);

    Output out(out_path);
    auto& os = out.stream();
    os << "subgroup_order,cardinality,distance\n";
    for (const auto& row : rows)
        os << row.order << "," << row.cardinality << "," << row.distance << "\n";
    return 0;
}

int cmd_decode_sim(const std::string& spec_path, const std::string& out_path,
                   std::uint64_t trials, int max_e, std::uint64_t seed) {
    Realization r = realize(load_code_spec(spec_path));
    FlagCode code(r.flag, pick_beta(r));
    if (max_e < 0)
        max_e = (code_min_distance(code) - 1) / 2; // correctable radius
    std::vector<ChannelStats> stats = channel_sim(code, trials, max_e, seed);

    Output out(out_path);
    auto& os = out.stream();
    os << "total_erasures,trials,successes,rate\n";
    for (const auto& s : stats)
        os << s.total_erasures << "," << s.trials << "," << s.successes << ","
           << format_rate(s.rate) << "\n";
    return 0;
}

int cmd_potential(const std::string& spec_path, const std::string& out_path) {
    Realization r = realize(load_code_spec(spec_path));
    Output out(out_path);
    auto& os = out.stream();
    os << "distance\n";
    for (int d : potential_values(profile_of(r.flag)))
        os << d << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cyclic orbit flag codes over finite fields: reports, tables, "
                 "subgroup sweeps and erasure-channel simulations."};
    app.require_subcommand(1);

    std::string spec_path, out_path, table_name;
    std::uint64_t seed = 0, trials = 1000;
    int threads = 1, max_e = -1;

    auto* report = app.add_subcommand("report", "Parameter report for the code in a spec file");
    report->add_option("--spec", spec_path, "code spec file")->required();
    report->add_option("--out", out_path, "also write the report as CSV to this path");

    auto* table = app.add_subcommand("table", "Emit a reference table as CSV");
    table->add_option("name", table_name, "table1 (F_2^12 orbit sizes) or table2 "
                                          "(F_2^10 weaved distances)")
        ->required()
        ->check(CLI::IsMember({"table1", "table2"}));
    table->add_option("--out", out_path, "write CSV here instead of stdout");

    auto* sweep = app.add_subcommand("sweep", "Orbit parameters for every subgroup of F_q^n^*");
    sweep->add_option("--spec", spec_path, "code spec file")->required();
    sweep->add_option("--out", out_path, "write CSV here instead of stdout");
    sweep->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

    auto* sim = app.add_subcommand("decode-sim", "Monte Carlo erasure decoding");
    sim->add_option("--spec", spec_path, "code spec file")->required();
    sim->add_option("--seed", seed, "random seed (required: runs are reproducible)")->required();
    sim->add_option("--trials", trials, "trials per erasure count")->check(CLI::PositiveNumber);
    sim->add_option("--max-e", max_e, "largest total erasure count (default: correctable radius)");
    sim->add_option("--out", out_path, "write CSV here instead of stdout");

    auto* potential = app.add_subcommand("potential", "Potential distance values for a flag");
    potential->add_option("--spec", spec_path, "code spec file")->required();
    potential->add_option("--out", out_path, "write CSV here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (report->parsed())
            return cmd_report(spec_path, out_path);
        if (table->parsed())
            return cmd_table(table_name, out_path);
        if (sweep->parsed())
            return cmd_sweep(spec_path, out_path, threads);
        if (sim->parsed())
            return cmd_decode_sim(spec_path, out_path, trials, max_e, seed);
        if (potential->parsed())
            return cmd_potential(spec_path, out_path);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ResourceCap& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const Infeasible& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
