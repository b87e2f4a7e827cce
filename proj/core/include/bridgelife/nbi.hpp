#pragma once

#include <map>
#include <string>
#include <vector>

#include "bridgelife/csv.hpp"
#include "bridgelife/errors.hpp"
#include "bridgelife/units.hpp"

namespace bridgelife::nbi {

// Logical field -> CSV header name. Defaults follow the federal inventory
// item numbering; real exports rename columns, so the map is configurable.
using ColumnMap = std::map<std::string, std::string>;

ColumnMap default_columns();

struct RejectedRow {
    std::size_t row_number = 0; // 1-based, excluding the header
    std::string reason;
};

struct InventoryTable {
    std::vector<units::BridgeRecord> records;
    std::vector<RejectedRow> rejects;
    std::size_t rows_in = 0; // rows_in == records.size() + rejects.size()
};

InventoryTable ingest_nbi(const csv::Table& table, const ColumnMap& columns = default_columns());

struct RatingPair {
    std::string structure_id;
    int year_from = 0;
    int rating_from = 0;
    int rating_to = 0;
};

struct DeteriorationPairs {
    std::vector<RatingPair> pairs;
    std::size_t improvements_dropped = 0;
};

// Consecutive-inspection rating pairs per structure; pairs where the rating
// improved are dropped (treated as repairs, not deterioration).
DeteriorationPairs filter_deterioration_pairs(const InventoryTable& table);

} // namespace bridgelife::nbi
