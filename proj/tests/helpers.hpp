#pragma once

#include <string>
#include <vector>

#include "lga/series.hpp"

namespace lga::testing {

inline TruncatedSeries series_of(std::initializer_list<long> values) {
    TruncatedSeries s(static_cast<int>(values.size()) - 1);
    int k = 0;
    for (long v : values) s[k++] = Rat(v);
    return s;
}

inline std::string render(const TruncatedSeries& s) {
    std::string out;
    for (int k = 0; k <= s.truncation_degree(); ++k) {
        if (k) out += " ";
        out += rat_to_string(s[k]);
    }
    return out;
}

}  // namespace lga::testing
