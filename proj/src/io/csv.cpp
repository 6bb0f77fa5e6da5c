#include "tilted_ising/io/csv.hpp"

#include <cstdio>
#include <stdexcept>

namespace tilted_ising::io {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

CsvWriter::CsvWriter(const std::filesystem::path& path) : out_(path, std::ios::binary) {
  if (!out_) throw std::runtime_error("cannot open output file: " + path.string());
}

void CsvWriter::metadata(const Metadata& entries) {
  for (const auto& [key, value] : entries) {
    out_ << "# " << key << "=" << value << "\n";
  }
}

void CsvWriter::header(const std::vector<std::string>& columns) {
  bool first = true;
  for (const auto& c : columns) {
    if (!first) out_ << ",";
    out_ << c;
    first = false;
  }
  out_ << "\n";
}

void CsvWriter::begin_row() {
  row_open_ = true;
  first_cell_ = true;
}

void CsvWriter::separator() {
  if (!first_cell_) out_ << ",";
  first_cell_ = false;
}

void CsvWriter::cell(double v) {
  separator();
  out_ << format_double(v);
}

void CsvWriter::cell(int v) {
  separator();
  out_ << v;
}

void CsvWriter::cell(long v) {
  separator();
  out_ << v;
}

void CsvWriter::cell(std::size_t v) {
  separator();
  out_ << v;
}

void CsvWriter::cell(std::string_view v) {
  separator();
  out_ << v;
}

void CsvWriter::end_row() {
  out_ << "\n";
  row_open_ = false;
}

void CsvWriter::row(const std::vector<double>& values) {
  begin_row();
  for (double v : values) cell(v);
  end_row();
}

}  // namespace tilted_ising::io
