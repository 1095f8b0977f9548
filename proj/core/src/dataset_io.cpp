#include "topent/dataset_io.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace topent {

std::string to_string(GridFamily f) {
    switch (f) {
        case GridFamily::Quartic: return "quartic";
        case GridFamily::CubicPositive: return "cubic-positive";
        case GridFamily::CubicNegative: return "cubic-negative";
    }
    return "?";
}

std::string to_string(Algorithm a) {
    return a == Algorithm::Lap ? "lap" : "kneading";
}

std::string to_string(CellStatus s) {
    switch (s) {
        case CellStatus::Ok: return "ok";
        case CellStatus::Failed: return "failed";
        case CellStatus::Skipped: return "skipped";
    }
    return "?";
}

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

void write_csv(std::ostream& os, const RunMeta& meta, const std::vector<GridResult>& rows) {
    os << "family,algorithm,param1,param2,coord1,coord2,entropy,iterations,status\n";
    const std::string family = to_string(meta.family);
    const std::string algorithm = to_string(meta.algorithm);
    for (const auto& r : rows) {
        os << family << ',' << algorithm << ',' << format_number(r.param1) << ','
           << format_number(r.param2) << ',' << format_number(r.coord1) << ','
           << format_number(r.coord2) << ',' << format_number(r.entropy) << ','
           << r.iterations << ',' << to_string(r.status) << '\n';
    }
}

void write_json(std::ostream& os, const RunMeta& meta, const std::vector<GridResult>& rows) {
    os << "{\n  \"metadata\": {\n"
       << "    \"version\": \"" << meta.tool_version << "\",\n"
       << "    \"family\": \"" << to_string(meta.family) << "\",\n"
       << "    \"algorithm\": \"" << to_string(meta.algorithm) << "\",\n"
       << "    \"epsilon\": " << format_number(meta.epsilon) << ",\n"
       << "    \"n_max\": " << meta.n_max << ",\n"
       << "    \"resolution\": " << meta.resolution << "\n  },\n"
       << "  \"cells\": [\n";
    auto field = [&](double v) -> std::string {
        if (std::isnan(v)) return "\"nan\"";
        return format_number(v);
    };
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        os << "    {\"param1\": " << field(r.param1) << ", \"param2\": " << field(r.param2)
           << ", \"coord1\": " << field(r.coord1) << ", \"coord2\": " << field(r.coord2)
           << ", \"entropy\": " << field(r.entropy) << ", \"iterations\": " << r.iterations
           << ", \"status\": \"" << to_string(r.status) << "\"}"
           << (i + 1 < rows.size() ? ",\n" : "\n");
    }
    os << "  ]\n}\n";
}

}  // namespace topent
