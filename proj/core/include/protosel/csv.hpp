#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "protosel/errors.hpp"
#include "protosel/eventlog.hpp"

namespace protosel {

/// Which CSV header columns carry the case id, the activity and, optionally,
/// the event timestamp.
struct CsvColumns {
    std::string case_id = "case:concept:name";
    std::string activity = "concept:name";
    std::optional<std::string> timestamp;
};

/// A mapped column is missing from the header.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Reads an RFC-4180 event table (header row mandatory). Events are grouped
/// by case id, cases appear in order of first occurrence; within a case
/// events are ordered by timestamp when mapped, otherwise by file order.
/// Ties keep file order.
///
/// Timestamps are ISO-8601 (`YYYY-MM-DD[T ]hh:mm:ss[.fff][Z|+hh:mm]`, date
/// alone also accepted) or plain numbers (seconds since epoch).
EventLog parse_csv(std::istream& in, const CsvColumns& columns);
EventLog parse_csv(std::string_view document, const CsvColumns& columns);
EventLog read_csv_file(const std::filesystem::path& path, const CsvColumns& columns);

/// Parses one timestamp cell into milliseconds since the Unix epoch.
/// Returns nullopt when the text is not a recognised timestamp.
std::optional<long long> parse_timestamp_ms(std::string_view text);

}  // namespace protosel
