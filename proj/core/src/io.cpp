#include "cgflow/io.hpp"

#include <bit>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace cgflow {

namespace {

void put_u32(std::ostream& out, std::uint32_t v) {
  unsigned char b[4] = {static_cast<unsigned char>(v & 0xff),
                        static_cast<unsigned char>((v >> 8) & 0xff),
                        static_cast<unsigned char>((v >> 16) & 0xff),
                        static_cast<unsigned char>((v >> 24) & 0xff)};
  out.write(reinterpret_cast<const char*>(b), 4);
}

std::uint32_t get_u32(std::istream& in) {
  unsigned char b[4];
  in.read(reinterpret_cast<char*>(b), 4);
  return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
         (static_cast<std::uint32_t>(b[2]) << 16) |
         (static_cast<std::uint32_t>(b[3]) << 24);
}

void put_f64(std::ostream& out, double v) {
  std::uint64_t u;
  std::memcpy(&u, &v, 8);
  unsigned char b[8];
  for (int k = 0; k < 8; ++k) b[k] = static_cast<unsigned char>((u >> (8 * k)) & 0xff);
  out.write(reinterpret_cast<const char*>(b), 8);
}

double get_f64(std::istream& in) {
  unsigned char b[8];
  in.read(reinterpret_cast<char*>(b), 8);
  std::uint64_t u = 0;
  for (int k = 0; k < 8; ++k) u |= static_cast<std::uint64_t>(b[k]) << (8 * k);
  double v;
  std::memcpy(&v, &u, 8);
  return v;
}

}  // namespace

void save_gflm(const Grid2& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out.write("GFLM", 4);
  put_u32(out, kGflmVersion);
  put_u32(out, static_cast<std::uint32_t>(g.n1()));
  put_u32(out, static_cast<std::uint32_t>(g.n2()));
  for (double v : g.values()) put_f64(out, v);
  if (!out) throw std::runtime_error("short write to " + path);
}

Grid2 load_gflm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, "GFLM", 4) != 0)
    throw std::runtime_error(path + ": bad magic, not a GFLM file");
  const std::uint32_t version = get_u32(in);
  if (version != kGflmVersion)
    throw std::runtime_error(path + ": unsupported GFLM version " +
                             std::to_string(version));
  const int n1 = static_cast<int>(get_u32(in));
  const int n2 = static_cast<int>(get_u32(in));
  Grid2 g(n1, n2);
  for (double& v : g.values()) v = get_f64(in);
  if (!in) throw std::runtime_error(path + ": truncated GFLM payload");
  return g;
}

CsvWriter::CsvWriter(std::ostream& out, std::vector<std::string> columns)
    : out_(out), columns_(std::move(columns)) {}

void CsvWriter::comment(const std::string& line) { out_ << "# " << line << "\n"; }

void CsvWriter::header() {
  for (std::size_t k = 0; k < columns_.size(); ++k)
    out_ << columns_[k] << (k + 1 == columns_.size() ? "\n" : ",");
  header_written_ = true;
}

std::string CsvWriter::format(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void CsvWriter::row(const std::vector<double>& cells) {
  if (!header_written_) header();
  for (std::size_t k = 0; k < cells.size(); ++k)
    out_ << format(cells[k]) << (k + 1 == cells.size() ? "\n" : ",");
}

void CsvWriter::row_mixed(const std::vector<std::string>& cells) {
  if (!header_written_) header();
  for (std::size_t k = 0; k < cells.size(); ++k)
    out_ << cells[k] << (k + 1 == cells.size() ? "\n" : ",");
}

}  // namespace cgflow
