#include "tripart/records.hpp"

#include <json.hpp>
#include <sstream>

#include "tripart/errors.hpp"

namespace tripart {

using ordered_json = nlohmann::ordered_json;

OutputFormat parse_format(std::string_view name) {
  if (name == "plain") return OutputFormat::Plain;
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  throw InvalidInput("unknown format '" + std::string(name) + "'");
}

void OutputRecord::set_oracle(const BigCount& oracle) {
  oracle_value = oracle;
  match = (oracle == value);
}

std::string to_json(const OutputRecord& rec) {
  ordered_json j;
  j["quantity"] = rec.quantity;
  j["m"] = rec.m;
  j["n"] = rec.n;
  j["p"] = rec.p;
  j["r"] = rec.r ? ordered_json(*rec.r) : ordered_json(nullptr);
  j["value"] = rec.value.str();
  j["oracle_value"] = rec.oracle_value ? ordered_json(rec.oracle_value->str()) : ordered_json(nullptr);
  j["match"] = rec.match ? ordered_json(*rec.match) : ordered_json(nullptr);
  return j.dump();
}

OutputRecord record_from_json(std::string_view text) {
  try {
    const auto j = ordered_json::parse(text);
    OutputRecord rec;
    rec.quantity = j.at("quantity").get<std::string>();
    rec.m = j.at("m").get<std::uint32_t>();
    rec.n = j.at("n").get<std::uint32_t>();
    rec.p = j.at("p").get<std::uint32_t>();
    if (!j.at("r").is_null()) rec.r = j.at("r").get<std::uint32_t>();
    rec.value = BigCount::parse(j.at("value").get<std::string>());
    if (!j.at("oracle_value").is_null())
      rec.oracle_value = BigCount::parse(j.at("oracle_value").get<std::string>());
    if (!j.at("match").is_null()) rec.match = j.at("match").get<bool>();
    if (rec.oracle_value.has_value() != rec.match.has_value())
      throw InvalidInput("match must be present exactly when oracle_value is");
    return rec;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed record: ") + e.what());
  }
}

std::string csv_header() { return "quantity,m,n,p,r,value,oracle_value,match"; }

std::string to_csv(const OutputRecord& rec) {
  std::ostringstream os;
  os << rec.quantity << ',' << rec.m << ',' << rec.n << ',' << rec.p << ',';
  if (rec.r) os << *rec.r;
  os << ',' << rec.value << ',';
  if (rec.oracle_value) os << *rec.oracle_value;
  os << ',';
  if (rec.match) os << (*rec.match ? "true" : "false");
  return os.str();
}

std::string to_plain(const OutputRecord& rec) {
  std::ostringstream os;
  os << rec.quantity << " (m=" << rec.m << ", n=" << rec.n << ", p=" << rec.p;
  if (rec.r) os << ", r=" << *rec.r;
  os << "): " << rec.value;
  if (rec.oracle_value)
    os << "  oracle " << *rec.oracle_value << (*rec.match ? "  [match]" : "  [MISMATCH]");
  return os.str();
}

void emit_records(std::ostream& out, OutputFormat format, const std::vector<OutputRecord>& records) {
  if (format == OutputFormat::Csv) out << csv_header() << '\n';
  for (const auto& rec : records) {
    switch (format) {
      case OutputFormat::Plain: out << to_plain(rec) << '\n'; break;
      case OutputFormat::Json: out << to_json(rec) << '\n'; break;
      case OutputFormat::Csv: out << to_csv(rec) << '\n'; break;
    }
  }
}

}  // namespace tripart
