#include "csplab/exceptional.hpp"

#include <map>
#include <mutex>
#include <nlohmann/json.hpp>

#include "csplab/errors.hpp"

#include "csplab/exceptional_tables.inc"

namespace csplab::cox {

namespace {

std::map<Family, ExceptionalTable> load_tables() {
    const auto j = nlohmann::json::parse(kExceptionalTablesJson);
    const std::map<std::string, Family> names = {
        {"H3", Family::H3}, {"H4", Family::H4}, {"F4", Family::F4},
        {"E6", Family::E6}, {"E7", Family::E7}, {"E8", Family::E8},
    };
    std::map<Family, ExceptionalTable> tables;
    for (const auto& [name, fam] : names) {
        const auto& tj = j.at(name);
        ExceptionalTable t;
        t.family = fam;
        t.divisors = tj.at("divisors").get<std::vector<long>>();
        for (const auto& rj : tj.at("rows")) {
            ExceptionalRow row;
            row.label = rj.at("label").get<std::string>();
            row.num = rj.at("num").get<std::vector<long>>();
            row.den = rj.at("den").get<std::vector<long>>();
            row.starred = rj.at("starred").get<bool>();
            t.rows.push_back(std::move(row));
        }
        tables[fam] = std::move(t);
    }
    return tables;
}

const std::map<Family, ExceptionalTable>& tables() {
    static const std::map<Family, ExceptionalTable> t = load_tables();
    return t;
}

}  // namespace

const ExceptionalTable& exceptional_table(Family family) {
    auto it = tables().find(family);
    if (it == tables().end()) throw ModelAssertionError("no exceptional table for this family");
    return it->second;
}

const ExceptionalRow* find_exceptional_row(Family family, const std::string& label) {
    auto it = tables().find(family);
    if (it == tables().end()) return nullptr;
    for (const auto& row : it->second.rows) {
        if (row.label == label) return &row;
    }
    return nullptr;
}

}  // namespace csplab::cox
