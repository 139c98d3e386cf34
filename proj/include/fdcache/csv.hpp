#pragma once

#include <fstream>
#include <string>
#include <vector>

namespace fdcache {

// Locale-free "%.12g" formatting so repeated runs emit identical bytes.
std::string csv_num(double x);

class CsvWriter {
public:
    explicit CsvWriter(const std::string& path);  // throws on open failure
    void header(const std::vector<std::string>& cols);
    void row(const std::vector<std::string>& cells);

private:
    void write_row(const std::vector<std::string>& cells);
    std::ofstream out_;
};

}  // namespace fdcache
