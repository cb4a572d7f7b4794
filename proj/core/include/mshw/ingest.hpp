#pragma once

#include <chrono>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mshw {

using Timestamp = std::chrono::sys_seconds;
using MinuteStamp = std::chrono::sys_time<std::chrono::minutes>;

enum class DemandUnit { requests, cpu_units };

std::string_view to_string(DemandUnit unit);

/// Contiguous per-minute demand, one value per minute starting at start_minute.
struct DemandSeries {
	MinuteStamp start_minute{};
	std::vector<double> values;
	DemandUnit unit = DemandUnit::requests;
};

struct IngestReport {
	std::size_t lines_total = 0;
	std::size_t lines_parsed = 0;
	std::size_t lines_skipped = 0;
	std::optional<Timestamp> first_ts;
	std::optional<Timestamp> last_ts;
};

/// Inclusive minute range.
struct MinuteRange {
	MinuteStamp start;
	MinuteStamp end;
};

/// Extracts the bracketed `[dd/Mon/yyyy:HH:MM:SS +zzzz]` field of a Common
/// Log Format line and converts it to UTC. Returns nullopt on any
/// malformation.
std::optional<Timestamp> parse_clf_line(std::string_view line);

struct ClfScan {
	std::vector<Timestamp> timestamps;
	IngestReport report;
};

/// Parses every line of a CLF stream; malformed lines are counted and skipped.
ClfScan scan_clf(std::istream& in);

/// Request counts per UTC minute, zero-filled. Without a range the series
/// spans the first to the last observed minute; timestamps outside an
/// explicit range are ignored.
DemandSeries aggregate_per_minute(std::span<const Timestamp> timestamps,
                                  std::optional<MinuteRange> range = std::nullopt);

inline constexpr double kDefaultCapacityPerCpu = 60.0;

/// CPU units needed per minute: ceil(requests / capacity_per_cpu).
DemandSeries cpu_demand(const DemandSeries& requests, double capacity_per_cpu = kDefaultCapacityPerCpu);

/// Reads a pre-aggregated two-column series. The first column is either an
/// integer minute index or a `YYYY-MM-DDTHH:MM[:SS]Z` timestamp; an optional
/// header row is skipped. Gaps are zero-filled; non-increasing keys are an
/// error.
DemandSeries read_demand_csv(std::istream& in);

/// Writes `timestamp,value` rows with ISO-8601 UTC minute timestamps.
void write_demand_csv(std::ostream& out, const DemandSeries& series);

/// `YYYY-MM-DDTHH:MM:SSZ`.
std::string format_utc(Timestamp ts);

} // namespace mshw
