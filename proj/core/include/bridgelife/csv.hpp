#pragma once

#include <istream>
#include <string>
#include <vector>

#include "bridgelife/errors.hpp"

namespace bridgelife::csv {

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    // Column position by header name; throws SchemaError when absent.
    std::size_t column(const std::string& name) const;
};

// Comma-separated, double-quote quoting, first line is the header.
Table read(std::istream& in);
Table read_file(const std::string& path);

std::string escape(const std::string& field);
void write(std::ostream& out, const Table& t);

} // namespace bridgelife::csv
