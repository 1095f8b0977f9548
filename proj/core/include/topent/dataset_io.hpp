#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "topent/sweep.hpp"

namespace topent {

// Run metadata serialized alongside the grid. No timestamps: files
// must be byte-identical across repeat runs.
struct RunMeta {
    std::string tool_version;
    GridFamily family;
    Algorithm algorithm;
    double epsilon;
    int n_max;
    int resolution;
};

std::string to_string(GridFamily f);
std::string to_string(Algorithm a);
std::string to_string(CellStatus s);

// Numbers rendered with 9 significant digits; NaN as the literal "nan".
std::string format_number(double v);

// CSV schema:
//   family,algorithm,param1,param2,coord1,coord2,entropy,iterations,status
void write_csv(std::ostream& os, const RunMeta& meta, const std::vector<GridResult>& rows);

// JSON mirror of the CSV with a metadata object.
void write_json(std::ostream& os, const RunMeta& meta, const std::vector<GridResult>& rows);

}  // namespace topent
