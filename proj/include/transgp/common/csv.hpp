#ifndef TRANSGP_COMMON_CSV_HPP_
#define TRANSGP_COMMON_CSV_HPP_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace transgp {

// Shortest text that parses back to exactly the same double.
std::string format_double(double value);

// Fixed-point text with `digits` decimals, for human-facing reports.
std::string format_fixed(double value, int digits);

double parse_double(std::string_view text);
long long parse_int(std::string_view text);

// Splits on `sep` without quoting rules; fields never contain separators here.
std::vector<std::string> split(std::string_view line, char sep);

std::string trim(std::string_view text);

// Reads the whole file; throws IoError when it cannot be opened.
std::string read_file(const std::filesystem::path& path);
std::vector<std::string> read_lines(const std::filesystem::path& path);

// Writes atomically enough for our purposes (truncate + write); throws IoError.
void write_file(const std::filesystem::path& path, std::string_view content);

// Accumulates comma-separated rows.
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header);
  void add_row(const std::vector<std::string>& fields);
  std::string str() const { return out_; }
  void save(const std::filesystem::path& path) const { write_file(path, out_); }

 private:
  std::size_t columns_;
  std::string out_;
};

}  // namespace transgp

#endif  // TRANSGP_COMMON_CSV_HPP_
