#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "geophase/matrix_core.hpp"
#include "geophase/phase_engine.hpp"
#include "geophase/state_model.hpp"

namespace geophase {

// On-disk problem description. Complex numbers are [re, im] pairs, matrices
// row-major nested arrays:
//   {"dimension": 2, "rho": [[[0.5,0],[0,0]], ...], "hamiltonian": [...]}
struct ProblemFile {
    int dimension = 0;
    ComplexMatrix rho;
    ComplexMatrix hamiltonian;
};

/// Shape checks only; physical validation happens in to_problem.
ProblemFile parse_problem(const nlohmann::json& doc);
ProblemFile parse_problem_text(std::string_view text);
ProblemFile read_problem_file(const std::string& path);

nlohmann::json to_json(const ProblemFile& file);

/// Canonical form: shortest round-trip decimal for every double.
std::string serialize_problem(const ProblemFile& file);

Problem to_problem(const ProblemFile& file, const Tolerances& tol = kDefaultTolerances);

ProblemFile to_problem_file(const Problem& problem);

nlohmann::ordered_json report_to_json(const PhaseReport& report);

std::string sweep_csv_header(Eigen::Index dim);
std::string sweep_csv_row(const PhaseReport& report);

/// Flat sweep row with the same columns as the CSV form; null for undefined.
nlohmann::ordered_json sweep_row_json(const PhaseReport& report);

}  // namespace geophase
