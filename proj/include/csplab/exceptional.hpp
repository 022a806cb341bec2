#pragma once

#include <string>
#include <vector>

#include "csplab/coxeter.hpp"

namespace csplab::cox {

/// One row of the exceptional sieving-polynomial tables, as shipped in
/// data/exceptional_tables.json.
struct ExceptionalRow {
    std::string label;
    std::vector<long> num;  // numerator q-integer indices
    std::vector<long> den;  // denominator q-integer indices
    bool starred = false;
};

struct ExceptionalTable {
    Family family;
    std::vector<long> divisors;  // the divisor sweep printed with the table
    std::vector<ExceptionalRow> rows;
};

const ExceptionalTable& exceptional_table(Family family);

/// Row lookup by label; nullptr when the label is not in the table.
const ExceptionalRow* find_exceptional_row(Family family, const std::string& label);

}  // namespace csplab::cox
