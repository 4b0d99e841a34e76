#pragma once

/*
 * Command-line front end. Exit codes: 0 success, 2 invalid input,
 * 3 unsupported regime, 4 search failure (including exceeded caps).
 */

#include "abshift/paramlab.hpp"
#include "abshift/rational.hpp"

#include <cstddef>
#include <exception>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace abshift::cli {

struct SweepConfig {
    int ell = 0;
    Rational start;
    Rational end;
    std::size_t steps = 1;
    std::size_t depth = 2;  // thickness level and witness refinement depth
    std::size_t workers = 1;
    std::string format = "csv";
    std::string output_path;  // empty: standard output
};

struct SweepRow {
    Rational beta;
    Rational tau_rigorous;
    Rational tau_partition_formula;
    std::string newhouse;  // 12 significant digits, rounded down
    std::optional<EpsilonConditions> conditions;  // only for beta <= ell
    std::string witness_status;
};

inline constexpr const char* kSweepHeader =
    "beta,tau_rigorous,tau_partition_formula,newhouse,cantor_eq1,cantor_eq2,beta_1,witness_status";

/// Throws InvalidInput for ell < 3, unless ell-1 < start < end <= ell+1,
/// and for steps == 0, depth == 0, workers == 0 or an unknown format.
void validate(const SweepConfig& c);
/// beta_k = start + k (end - start)/steps, k = 0..steps-1.
std::vector<Rational> sweep_grid(const SweepConfig& c);
SweepRow sweep_row(const SweepConfig& c, const Rational& beta);
/// Rows in grid order, computed by c.workers threads.
std::vector<SweepRow> sweep_rows(const SweepConfig& c);
std::string render_sweep(const SweepConfig& c, const std::vector<SweepRow>& rows);
/// Computes and writes the table; a partially written output file is removed on failure.
void run_sweep(const SweepConfig& c, std::ostream& out);

/// Exit code for an exception escaping a command.
int exit_code(const std::exception& e);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace abshift::cli
