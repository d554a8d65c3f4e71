#pragma once

#include <ostream>

#include "cyclofact/elasticity.hpp"

namespace cyclofact {

/// CSV with columns value_num,value_den,min_len,max_len,elasticity and a
/// trailing manifest row "# status=<complete|partial>,rows=<n>".
inline void write_scan_csv(std::ostream& os, const ScanTable& table) {
    os << "value_num,value_den,min_len,max_len,elasticity\n";
    for (const auto& r : table.rows) {
        os << r.value.num() << ',' << r.value.den() << ',' << r.min_len << ',' << r.max_len << ','
           << r.elasticity << '\n';
    }
    os << "# status=" << (table.complete ? "complete" : "partial") << ",rows=" << table.rows.size() << '\n';
    os.flush();
}

}  // namespace cyclofact
