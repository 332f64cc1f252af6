#pragma once

// Machine-readable output rows shared by the CLI emitters.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "tripart/exact_math.hpp"

namespace tripart {

enum class OutputFormat { Plain, Json, Csv };

/// Throws InvalidInput for anything but "plain", "json" or "csv".
OutputFormat parse_format(std::string_view name);

struct OutputRecord {
  std::string quantity;
  std::uint32_t m = 0;
  std::uint32_t n = 0;
  std::uint32_t p = 0;
  std::optional<std::uint32_t> r;
  BigCount value;
  std::optional<BigCount> oracle_value;
  std::optional<bool> match;

  /// Sets oracle_value and match together.
  void set_oracle(const BigCount& oracle);

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

/// One JSON object, keys in the order quantity, m, n, p, r, value,
/// oracle_value, match. Counts are decimal strings.
std::string to_json(const OutputRecord& rec);
/// Inverse of to_json; throws InvalidInput on schema violations.
OutputRecord record_from_json(std::string_view text);

std::string csv_header();
std::string to_csv(const OutputRecord& rec);
std::string to_plain(const OutputRecord& rec);

/// Writes the records in the given format, one per line (CSV gets a header).
void emit_records(std::ostream& out, OutputFormat format, const std::vector<OutputRecord>& records);

}  // namespace tripart
