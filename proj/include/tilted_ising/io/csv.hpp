#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tilted_ising::io {

/// Formats a double with 17 significant digits (round-trip exact).
std::string format_double(double v);

using Metadata = std::vector<std::pair<std::string, std::string>>;

/// CSV emitter: a `# key=value` metadata block, one header row, then data.
/// UTF-8, comma separator, '.' decimal point.
class CsvWriter {
 public:
  explicit CsvWriter(const std::filesystem::path& path);

  void metadata(const Metadata& entries);
  void header(const std::vector<std::string>& columns);

  void begin_row();
  void cell(double v);
  void cell(int v);
  void cell(long v);
  void cell(std::size_t v);
  void cell(std::string_view v);
  void end_row();

  /// Convenience for purely numeric rows.
  void row(const std::vector<double>& values);

 private:
  std::ofstream out_;
  bool row_open_ = false;
  bool first_cell_ = true;

  void separator();
};

}  // namespace tilted_ising::io
