#pragma once

// Long-format CSV shared by every sweep:
//   snr_o_db,snr_e_db,quantity,receiver_or_method,value,ci_lo,ci_hi,meta

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace acoofdm {

inline constexpr const char* kCsvHeader = "snr_o_db,snr_e_db,quantity,receiver_or_method,value,ci_lo,ci_hi,meta";

struct CsvRow {
    double snr_o_db = 0.0;
    double snr_e_db = 0.0;
    std::string quantity;
    std::string receiver_or_method;
    double value = 0.0;
    double ci_lo = 0.0;
    double ci_hi = 0.0;
    std::string meta;
};

inline std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

inline void write_csv(std::ostream& os, const std::vector<CsvRow>& rows) {
    os << kCsvHeader << '\n';
    for (const auto& r : rows) {
        os << format_number(r.snr_o_db) << ',' << format_number(r.snr_e_db) << ',' << r.quantity << ','
           << r.receiver_or_method << ',' << format_number(r.value) << ',' << format_number(r.ci_lo) << ','
           << format_number(r.ci_hi) << ',' << r.meta << '\n';
    }
}

}  // namespace acoofdm
