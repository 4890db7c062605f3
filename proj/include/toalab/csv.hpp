#ifndef TOALAB_CSV_HPP
#define TOALAB_CSV_HPP

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "toalab/errors.hpp"

namespace toalab {

/// 17 significant digits, '.' decimal separator, locale-independent.
inline std::string csv_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

/// Writes a header row plus data rows; every row must match the column count.
inline void write_csv(const std::filesystem::path& file,
                      const std::vector<std::string>& columns,
                      const std::vector<std::vector<double>>& rows) {
  std::ofstream os(file, std::ios::binary);
  if (!os) throw io_error("cannot open for writing: " + file.string());

  for (std::size_t i = 0; i < columns.size(); ++i)
    os << (i ? "," : "") << columns[i];
  os << '\n';

  for (const auto& row : rows) {
    if (row.size() != columns.size())
      throw invalid_parameter("write_csv: row width does not match schema");
    for (std::size_t i = 0; i < row.size(); ++i)
      os << (i ? "," : "") << csv_value(row[i]);
    os << '\n';
  }
  if (!os) throw io_error("write failed: " + file.string());
}

} // namespace toalab

#endif
