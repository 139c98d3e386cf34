#include "fdcache/csv.hpp"

#include <cstdio>
#include <stdexcept>

namespace fdcache {

std::string csv_num(double x) {
    char b[64];
    std::snprintf(b, sizeof b, "%.12g", x);
    return b;
}

CsvWriter::CsvWriter(const std::string& path) : out_(path, std::ios::binary) {
    if (!out_) throw std::runtime_error("cannot open output file: " + path);
}

void CsvWriter::header(const std::vector<std::string>& cols) {
    write_row(cols);
}

void CsvWriter::row(const std::vector<std::string>& cells) {
    write_row(cells);
}

void CsvWriter::write_row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out_ << ',';
        out_ << cells[i];
    }
    out_ << '\n';
    if (!out_) throw std::runtime_error("write failure on CSV output");
}

}  // namespace fdcache
