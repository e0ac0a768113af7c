#pragma once

#include <iosfwd>
#include <string>

#include "ptaplan/lp/problem.hpp"

namespace ptaplan::lp {

/// Fixed-format MPS with full-precision values (fields widen when a value
/// needs more than the classic column width; readers that split on
/// whitespace, including import_mps, handle both layouts).
std::string export_mps(const LpProblem& p, const std::string& name = "PTAPLAN");

/// Parses export_mps output and common fixed/free MPS files.
/// Throws DataError on malformed input. Round-trips export_mps exactly.
LpProblem import_mps(const std::string& text);

LpProblem read_mps_file(const std::string& path);
void write_mps_file(const LpProblem& p, const std::string& path, const std::string& name = "PTAPLAN");

}  // namespace ptaplan::lp
