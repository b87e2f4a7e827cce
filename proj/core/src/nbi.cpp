#include "bridgelife/nbi.hpp"

#include <algorithm>
#include <cstdlib>

namespace bridgelife::nbi {

ColumnMap default_columns() {
    return {
        {"structure_id", "8 Structure Number"},
        {"district", "2 District"},
        {"county", "3 County"},
        {"year_built", "27 Year Built"},
        {"aadt", "29 AADT"},
        {"design_load", "31 Design Load"},
        {"skew", "34 Skew"},
        {"span_type", "43 Span Type"},
        {"structure_length", "49 Str Lgth"},
        {"deck_width", "52 Deck Width"},
        {"structural_eval", "67 Str Eval"},
        {"inspection_year", "Inspection Year"},
    };
}

namespace {

double parse_number(const std::string& s, const std::string& field) {
    if (s.empty()) throw DomainError("empty " + field);
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0') {
        throw DomainError("non-numeric " + field + ": '" + s + "'");
    }
    return v;
}

int parse_int(const std::string& s, const std::string& field) {
    const double v = parse_number(s, field);
    const int i = static_cast<int>(v);
    if (static_cast<double>(i) != v) throw DomainError("non-integer " + field + ": '" + s + "'");
    return i;
}

} // namespace

InventoryTable ingest_nbi(const csv::Table& table, const ColumnMap& columns) {
    const ColumnMap defaults = default_columns();
    auto col_name = [&](const std::string& field) {
        auto it = columns.find(field);
        if (it != columns.end()) return it->second;
        auto dflt = defaults.find(field);
        if (dflt == defaults.end()) throw SchemaError("unknown logical field: " + field);
        return dflt->second;
    };

    // Resolve all columns up front: a missing column is a schema error, not a
    // per-row reject.
    std::map<std::string, std::size_t> idx;
    for (const auto& [field, unused] : defaults) {
        idx[field] = table.column(col_name(field));
    }

    InventoryTable out;
    out.rows_in = table.rows.size();
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const auto& row = table.rows[r];
        try {
            if (row.size() != table.header.size()) {
                throw DomainError("field count does not match header");
            }
            units::BridgeRecord rec;
            rec.structure_id = row[idx["structure_id"]];
            if (rec.structure_id.empty()) throw DomainError("empty structure id");
            rec.district = row[idx["district"]];
            rec.county = row[idx["county"]];
            rec.year_built = parse_int(row[idx["year_built"]], "year built");
            rec.aadt = parse_number(row[idx["aadt"]], "AADT");
            rec.design_load = row[idx["design_load"]];
            rec.span_type = row[idx["span_type"]];
            rec.skew_degrees = parse_number(row[idx["skew"]], "skew");
            rec.structure_length_ft = parse_number(row[idx["structure_length"]], "structure length");
            rec.deck_width_ft = parse_number(row[idx["deck_width"]], "deck width");
            rec.structural_eval = parse_int(row[idx["structural_eval"]], "structural evaluation");
            rec.inspection_year = parse_int(row[idx["inspection_year"]], "inspection year");

            if (rec.structural_eval < 0 || rec.structural_eval > 9) {
                throw DomainError("structural evaluation outside 0..9");
            }
            if (rec.year_built < 1700 || rec.year_built > rec.inspection_year) {
                throw DomainError("implausible year built");
            }
            if (rec.aadt < 0.0) throw DomainError("negative AADT");
            if (rec.structure_length_ft <= 0.0 || rec.deck_width_ft <= 0.0) {
                throw DomainError("non-positive dimensions");
            }
            out.records.push_back(std::move(rec));
        } catch (const DomainError& e) {
            out.rejects.push_back({r + 1, e.what()});
        }
    }
    return out;
}

DeteriorationPairs filter_deterioration_pairs(const InventoryTable& table) {
    std::vector<units::BridgeRecord> recs = table.records;
    std::stable_sort(recs.begin(), recs.end(),
                     [](const units::BridgeRecord& a, const units::BridgeRecord& b) {
                         if (a.structure_id != b.structure_id) {
                             return a.structure_id < b.structure_id;
                         }
                         return a.inspection_year < b.inspection_year;
                     });
    DeteriorationPairs out;
    for (std::size_t i = 1; i < recs.size(); ++i) {
        if (recs[i].structure_id != recs[i - 1].structure_id) continue;
        if (recs[i].structural_eval > recs[i - 1].structural_eval) {
            ++out.improvements_dropped;
            continue;
        }
        out.pairs.push_back({recs[i].structure_id, recs[i - 1].inspection_year,
                             recs[i - 1].structural_eval, recs[i].structural_eval});
    }
    return out;
}

} // namespace bridgelife::nbi
