#include "abshift/cli.hpp"

#include "abshift/cantor.hpp"
#include "abshift/dynamics.hpp"
#include "abshift/error.hpp"
#include "abshift/report.hpp"
#include "abshift/shiftspace.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

namespace abshift::cli {

void validate(const SweepConfig& c) {
    if (c.ell < 3) throw InvalidInput("sweep needs ell >= 3, got " + std::to_string(c.ell));
    if (!(c.start < c.end)) throw InvalidInput("sweep needs start < end");
    // the grid stops short of `end`, so end = ell + 1 still keeps every beta inside (ell-1, ell+1)
    if (!(Rational(c.ell - 1) < c.start) || Rational(c.ell + 1) < c.end)
        throw InvalidInput("sweep needs ell-1 < start < end <= ell+1");
    if (c.steps == 0) throw InvalidInput("sweep needs steps >= 1");
    if (c.depth == 0) throw InvalidInput("sweep needs depth >= 1");
    if (c.workers == 0) throw InvalidInput("sweep needs at least one worker");
    if (c.format != "csv" && c.format != "json") throw InvalidInput("unknown sweep format '" + c.format + "'");
}

std::vector<Rational> sweep_grid(const SweepConfig& c) {
    const Rational h = (c.end - c.start) / Rational(static_cast<long>(c.steps));
    std::vector<Rational> grid;
    grid.reserve(c.steps);
    for (std::size_t k = 0; k < c.steps; ++k) grid.push_back(c.start + Rational(static_cast<long>(k)) * h);
    return grid;
}

SweepRow sweep_row(const SweepConfig& c, const Rational& beta) {
    SweepRow row;
    row.beta = beta;
    const IfsSpec lab = IfsSpec::laboratory(beta, c.ell);
    row.tau_rigorous = thickness(lambda_approx(lab, c.depth), c.depth).tau;
    row.tau_partition_formula = partition_thickness_formula(beta);
    row.newhouse = newhouse_bound(row.tau_rigorous).to_string(12, Round::Down);
    if (beta <= Rational(c.ell)) row.conditions = epsilon_conditions(beta, c.ell);

    row.witness_status = "skipped";
    if (row.conditions && row.conditions->all() && beta < Rational(c.ell)) {
        WitnessOptions opt;
        opt.ell = c.ell;
        opt.exact_search = false;
        try {
            row.witness_status = find_witness(beta, c.depth, opt).status();
        } catch (const SearchFailure&) {
            row.witness_status = "none";
        } catch (const CapExceeded&) {
            row.witness_status = "cap";
        }
    }
    return row;
}

std::vector<SweepRow> sweep_rows(const SweepConfig& c) {
    validate(c);
    const auto grid = sweep_grid(c);
    std::vector<SweepRow> rows(grid.size());
    std::vector<std::exception_ptr> errors(grid.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < grid.size(); i = next++) {
            try {
                rows[i] = sweep_row(c, grid[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const std::size_t n = std::min(c.workers, grid.size());
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < n; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return rows;
}

namespace {

const char* flag(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string render_sweep(const SweepConfig& c, const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    if (c.format == "csv") {
        out << kSweepHeader << '\n';
        for (const auto& r : rows) {
            out << r.beta.str() << ',' << r.tau_rigorous.str() << ',' << r.tau_partition_formula.str() << ','
                << r.newhouse << ',';
            if (r.conditions)
                out << flag(r.conditions->cantor_eq1) << ',' << flag(r.conditions->cantor_eq2) << ','
                    << flag(r.conditions->beta_1);
            else
                out << "na,na,na";
            out << ',' << r.witness_status << '\n';
        }
        return out.str();
    }
    Json table = Json::array();
    for (const auto& r : rows) {
        Json row = {{"beta", r.beta.str()},
                    {"tau_rigorous", r.tau_rigorous.str()},
                    {"tau_partition_formula", r.tau_partition_formula.str()},
                    {"newhouse", r.newhouse}};
        if (r.conditions) {
            row["cantor_eq1"] = r.conditions->cantor_eq1;
            row["cantor_eq2"] = r.conditions->cantor_eq2;
            row["beta_1"] = r.conditions->beta_1;
        } else {
            row["cantor_eq1"] = row["cantor_eq2"] = row["beta_1"] = nullptr;
        }
        row["witness_status"] = r.witness_status;
        table.push_back(std::move(row));
    }
    Json doc = {{"ell", c.ell},
                {"start", c.start.str()},
                {"end", c.end.str()},
                {"steps", c.steps},
                {"depth", c.depth},
                {"rows", std::move(table)}};
    out << doc.dump(2) << '\n';
    return out.str();
}

void run_sweep(const SweepConfig& c, std::ostream& out) {
    validate(c);
    if (c.output_path.empty()) {
        out << render_sweep(c, sweep_rows(c));
        return;
    }
    const std::filesystem::path path(c.output_path);
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw InvalidInput("cannot open output file '" + c.output_path + "'");
    try {
        file << render_sweep(c, sweep_rows(c));
        file.flush();
        if (!file) throw std::runtime_error("write to '" + c.output_path + "' failed");
    } catch (...) {
        file.close();
        std::error_code ec;
        std::filesystem::remove(path, ec);
        throw;
    }
}

int exit_code(const std::exception& e) {
    if (dynamic_cast<const InvalidInput*>(&e)) return 2;
    if (dynamic_cast<const UnsupportedRegime*>(&e)) return 3;
    if (dynamic_cast<const SearchFailure*>(&e) || dynamic_cast<const CapExceeded*>(&e)) return 4;
    return 1;
}

namespace {

void cmd_expand(const Rational& alpha, const Rational& beta, const Rational& x, std::size_t n, std::ostream& out) {
    if (n == 0) throw InvalidInput("n must be positive");
    const Params p(alpha, beta);
    const Coding c = itinerary(p, x, n);
    out << word_str(c.digits) << '\n';
    Word prefix;
    Rational sum;
    for (std::size_t k = 0; k < n; ++k) {
        prefix.push_back(c.digits[k]);
        sum = expansion_partial_sum(p, prefix);
        out << "S_" << (k + 1) << " = " << sum.str() << '\n';
    }
    const Rational bound = pow(beta, -static_cast<long>(n));
    out << "remainder 0 <= x - S_" << n << " = " << (x - sum).str() << " < beta^-" << n << " = " << bound.str()
        << '\n';
}

void write_json(const Json& j, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << j.dump(2) << '\n';
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw InvalidInput("cannot open output file '" + path + "'");
    file << j.dump(2) << '\n';
    if (!file) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact (alpha,beta)-shift toolkit"};
    app.require_subcommand(1);

    std::string alpha_s, beta_s, x_s, u_s, v_s, out_path, start_s, end_s;
    std::size_t n = 0;
    int ell = 0;
    std::optional<int> witness_ell;
    SweepConfig sweep;

    auto* expand = app.add_subcommand("expand", "Digits and partial sums of the (alpha,beta)-expansion of x");
    expand->add_option("--alpha", alpha_s, "alpha in [0,1), p/q")->required();
    expand->add_option("--beta", beta_s, "beta > 1, p/q")->required();
    expand->add_option("--x", x_s, "x in [0,1), p/q")->required();
    expand->add_option("--n", n, "number of digits")->required();

    std::size_t spec_depth = 100;
    auto* spec = app.add_subcommand("spec-check", "Specification verdict from the K(u), K(v) criterion");
    spec->add_option("--alpha", alpha_s, "alpha in [0,1), p/q");
    spec->add_option("--beta", beta_s, "beta > 2, p/q");
    spec->add_option("--u", u_s, "critical sequence u, e.g. 0,(1)");
    spec->add_option("--v", v_s, "critical sequence v, e.g. 3,(1)");
    spec->add_option("--depth", spec_depth, "n_max for the K-set search");
    spec->add_option("--out", out_path, "write the report JSON here");

    std::size_t witness_depth = 8;
    auto* witness = app.add_subcommand("witness", "Search R_beta and S~_beta for a common parameter");
    witness->add_option("--beta", beta_s, "beta, p/q")->required();
    witness->add_option("--depth", witness_depth, "refinement depth");
    witness->add_option("--ell", witness_ell, "stratum (default floor(beta)+1)");
    witness->add_option("--out", out_path, "write the WitnessReport JSON here");

    auto* sw = app.add_subcommand("sweep", "Thickness, conditions and witness status over a beta grid");
    sw->add_option("--ell", sweep.ell, "stratum")->required();
    sw->add_option("--start", start_s, "first beta, p/q")->required();
    sw->add_option("--end", end_s, "end of the grid (excluded), p/q")->required();
    sw->add_option("--steps", sweep.steps, "grid points")->required();
    sw->add_option("--depth", sweep.depth, "Cantor level and witness depth");
    sw->add_option("--workers", sweep.workers, "worker threads");
    sw->add_option("--format", sweep.format, "csv or json");
    sw->add_option("--out", sweep.output_path, "output file (default standard output)");

    auto* dim = app.add_subcommand("dim-bound", "Dimension lower bounds for stratum ell");
    dim->add_option("--ell", ell, "stratum, >= 3")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (*expand) {
            cmd_expand(Rational::parse(alpha_s), Rational::parse(beta_s), Rational::parse(x_s), n, out);
        } else if (*spec) {
            SpecReport r;
            const bool fixture = !u_s.empty() || !v_s.empty();
            if (fixture) {
                if (u_s.empty() || v_s.empty()) throw InvalidInput("--u and --v must be given together");
                if (!alpha_s.empty() || !beta_s.empty()) throw InvalidInput("give either --alpha/--beta or --u/--v");
                r = spec_check_sequences(SymbolSeq::parse(u_s), SymbolSeq::parse(v_s), spec_depth);
            } else {
                if (alpha_s.empty() || beta_s.empty()) throw InvalidInput("--alpha and --beta are required");
                r = spec_check(Params(Rational::parse(alpha_s), Rational::parse(beta_s)), spec_depth);
            }
            out << to_string(r.verdict);
            if (r.verdict == SpecVerdict::SpecLikely) out << '(' << r.depth << ')';
            out << '\n';
            write_json(to_json(r), out_path, out);
        } else if (*witness) {
            WitnessOptions opt;
            opt.ell = witness_ell;
            const WitnessReport r = find_witness(Rational::parse(beta_s), witness_depth, opt);
            write_json(to_json(r), out_path, out);
            if (!out_path.empty()) out << r.status() << '\n';
            if (!r.certified && r.enclosures.empty()) return 4;
        } else if (*sw) {
            sweep.start = Rational::parse(start_s);
            sweep.end = Rational::parse(end_s);
            run_sweep(sweep, out);
        } else if (*dim) {
            const DimBound b = dim_lower_bound(ell);
            out << "fiber   >= " << b.fiber.to_string(30, Round::Down) << '\n';
            out << "product >= " << b.product.to_string(30, Round::Down) << '\n';
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_code(e);
    }
    return 0;
}

}  // namespace abshift::cli
