#pragma once

// LP model files for external MILP solvers, and tabular benchmark reports.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cliquepart/formulations.hpp"

namespace cliquepart {

struct LpTerm {
  Weight coefficient = 0;
  std::string variable;
};

struct LpRow {
  std::string name;
  std::vector<LpTerm> terms;
  Weight rhs = 0;  // sense is always <=
};

struct LpModel {
  std::vector<std::string> comments;
  std::vector<LpTerm> objective;  // maximised
  std::vector<LpRow> rows;
  std::vector<std::string> binaries;
};

std::string lp_variable(int i, int j);  // x_<min>_<max>
std::string lp_row_name(const TransitivityConstraint& c);

LpModel make_lp_model(const ConstraintSet& cs);

// CPLEX LP dialect, LF line endings. Returns the number of bytes written.
std::size_t write_lp(const ConstraintSet& cs, std::ostream& out);
std::size_t write_lp(const LpModel& model, std::ostream& out);
std::string format_lp(const ConstraintSet& cs);

enum class ReportFormat { Csv, Markdown, Json };
ReportFormat parse_report_format(std::string_view text);

struct BenchRow {
  std::string instance_id;
  std::string family;
  int n = 0;
  std::string seed;  // "-" when unknown
  std::string kind;
  std::size_t constraint_count = 0;
  std::string solver;
  std::string status;
  Weight value = 0;
  double elapsed_seconds = 0.0;
};

// Column order of every report format.
const std::vector<std::string>& bench_columns();

// CSV and JSON are one record per row; markdown groups rows into one table per
// family with instances down the side and "elapsed (count)" per kind.
void write_report(const std::vector<BenchRow>& rows, ReportFormat format, std::ostream& out);

// Generic string table used by the count command.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

void write_table(const Table& table, ReportFormat format, std::ostream& out);

std::string csv_escape(const std::string& field);

}  // namespace cliquepart
