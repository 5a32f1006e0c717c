#pragma once

#include <string>
#include <vector>

namespace singcbf {

/// Shortest representation with 9 significant digits (printf %.9g).
/// Every CSV writer goes through this so outputs are byte-reproducible.
std::string format_g9(double v);

struct CsvTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  int column_index(const std::string& name) const;  // -1 when absent
};

std::string to_csv(const CsvTable& table);
CsvTable parse_csv(const std::string& text);
CsvTable read_csv_file(const std::string& path);

}  // namespace singcbf
