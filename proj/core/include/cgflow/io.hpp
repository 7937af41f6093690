#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "cgflow/grid.hpp"

namespace cgflow {

// Grid snapshot format: magic "GFLM", u32 version, u32 n1, u32 n2, then
// n1*n2 little-endian IEEE doubles row-major (j outer, i inner).
inline constexpr unsigned kGflmVersion = 1;

void save_gflm(const Grid2& g, const std::string& path);
Grid2 load_gflm(const std::string& path);

// Minimal CSV emitter. Every file starts with '#'-prefixed provenance lines,
// then a header row naming all columns. Numeric cells are printed with
// enough digits to round-trip, so identical data gives identical bytes.
class CsvWriter {
 public:
  CsvWriter(std::ostream& out, std::vector<std::string> columns);
  void comment(const std::string& line);
  void header();
  void row(const std::vector<double>& cells);
  void row_mixed(const std::vector<std::string>& cells);

  static std::string format(double v);

 private:
  std::ostream& out_;
  std::vector<std::string> columns_;
  bool header_written_ = false;
};

}  // namespace cgflow
