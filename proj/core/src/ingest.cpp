#include "mshw/ingest.hpp"

#include "mshw/error.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>

namespace mshw {

namespace {

using std::chrono::days;
using std::chrono::hours;
using std::chrono::minutes;
using std::chrono::seconds;

constexpr std::array<std::string_view, 12> kMonths = {"Jan", "Feb", "Mar", "Apr", "May", "Jun",
                                                      "Jul", "Aug", "Sep", "Oct", "Nov", "Dec"};

bool parse_digits(std::string_view s, int& out) {
	if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
		return false;
	}
	auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
	return ec == std::errc{} && ptr == s.data() + s.size();
}

std::string_view trim(std::string_view s) {
	while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
		s.remove_prefix(1);
	}
	while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
		s.remove_suffix(1);
	}
	return s;
}

std::optional<Timestamp> make_time(int y, unsigned mo, unsigned d, int hh, int mm, int ss) {
	const std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{mo}, std::chrono::day{d}};
	if (!ymd.ok() || hh > 23 || mm > 59 || ss > 59) {
		return std::nullopt;
	}
	return Timestamp{std::chrono::sys_days{ymd}} + hours{hh} + minutes{mm} + seconds{ss};
}

// YYYY-MM-DDTHH:MM[:SS]Z
std::optional<MinuteStamp> parse_iso_minute(std::string_view s) {
	if (s.size() != 17 && s.size() != 20) {
		return std::nullopt;
	}
	if (s[4] != '-' || s[7] != '-' || s[10] != 'T' || s[13] != ':' || s.back() != 'Z') {
		return std::nullopt;
	}
	int y = 0, mo = 0, d = 0, hh = 0, mm = 0, ss = 0;
	if (!parse_digits(s.substr(0, 4), y) || !parse_digits(s.substr(5, 2), mo) || !parse_digits(s.substr(8, 2), d) ||
	    !parse_digits(s.substr(11, 2), hh) || !parse_digits(s.substr(14, 2), mm)) {
		return std::nullopt;
	}
	if (s.size() == 20 && (s[16] != ':' || !parse_digits(s.substr(17, 2), ss) || ss != 0)) {
		return std::nullopt;
	}
	auto ts = make_time(y, static_cast<unsigned>(mo), static_cast<unsigned>(d), hh, mm, ss);
	if (!ts) {
		return std::nullopt;
	}
	return std::chrono::floor<minutes>(*ts);
}

bool parse_value(std::string_view s, double& out) {
	s = trim(s);
	auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
	return ec == std::errc{} && ptr == s.data() + s.size() && std::isfinite(out);
}

} // namespace

std::string_view to_string(DemandUnit unit) {
	return unit == DemandUnit::requests ? "requests" : "cpu_units";
}

std::optional<Timestamp> parse_clf_line(std::string_view line) {
	const auto open = line.find('[');
	if (open == std::string_view::npos) {
		return std::nullopt;
	}
	const auto close = line.find(']', open);
	if (close == std::string_view::npos) {
		return std::nullopt;
	}
	// dd/Mon/yyyy:HH:MM:SS +zzzz
	const auto f = line.substr(open + 1, close - open - 1);
	if (f.size() != 26 || f[2] != '/' || f[6] != '/' || f[11] != ':' || f[14] != ':' || f[17] != ':' || f[20] != ' ' ||
	    (f[21] != '+' && f[21] != '-')) {
		return std::nullopt;
	}
	int day = 0, year = 0, hh = 0, mm = 0, ss = 0, off_h = 0, off_m = 0;
	if (!parse_digits(f.substr(0, 2), day) || !parse_digits(f.substr(7, 4), year) ||
	    !parse_digits(f.substr(12, 2), hh) || !parse_digits(f.substr(15, 2), mm) ||
	    !parse_digits(f.substr(18, 2), ss) || !parse_digits(f.substr(22, 2), off_h) ||
	    !parse_digits(f.substr(24, 2), off_m)) {
		return std::nullopt;
	}
	const auto month_it = std::find(kMonths.begin(), kMonths.end(), f.substr(3, 3));
	if (month_it == kMonths.end() || off_m > 59 || off_h > 14) {
		return std::nullopt;
	}
	const auto month = static_cast<unsigned>(month_it - kMonths.begin() + 1);
	auto local = make_time(year, month, static_cast<unsigned>(day), hh, mm, ss);
	if (!local) {
		return std::nullopt;
	}
	const auto offset = hours{off_h} + minutes{off_m};
	return f[21] == '+' ? *local - offset : *local + offset;
}

ClfScan scan_clf(std::istream& in) {
	ClfScan out;
	std::string line;
	while (std::getline(in, line)) {
		++out.report.lines_total;
		auto ts = parse_clf_line(line);
		if (!ts) {
			++out.report.lines_skipped;
			continue;
		}
		++out.report.lines_parsed;
		out.timestamps.push_back(*ts);
		if (!out.report.first_ts || *ts < *out.report.first_ts) {
			out.report.first_ts = *ts;
		}
		if (!out.report.last_ts || *ts > *out.report.last_ts) {
			out.report.last_ts = *ts;
		}
	}
	if (in.bad()) {
		throw Error(Errc::io_error, "failed while reading log stream");
	}
	return out;
}

DemandSeries aggregate_per_minute(std::span<const Timestamp> timestamps, std::optional<MinuteRange> range) {
	if (!range) {
		if (timestamps.empty()) {
			throw Error(Errc::empty_input, "no timestamps and no explicit range to aggregate over");
		}
		const auto [lo, hi] = std::minmax_element(timestamps.begin(), timestamps.end());
		range = MinuteRange{std::chrono::floor<minutes>(*lo), std::chrono::floor<minutes>(*hi)};
	}
	if (range->end < range->start) {
		throw Error(Errc::invalid_argument, "minute range ends before it starts");
	}
	DemandSeries out;
	out.start_minute = range->start;
	out.unit = DemandUnit::requests;
	out.values.assign(static_cast<std::size_t>((range->end - range->start).count()) + 1, 0.0);
	for (const auto& ts : timestamps) {
		const auto m = std::chrono::floor<minutes>(ts);
		if (m < range->start || m > range->end) {
			continue;
		}
		out.values[static_cast<std::size_t>((m - range->start).count())] += 1.0;
	}
	return out;
}

DemandSeries cpu_demand(const DemandSeries& requests, double capacity_per_cpu) {
	if (!(capacity_per_cpu > 0.0)) {
		throw Error(Errc::invalid_argument, "capacity per CPU must be positive");
	}
	DemandSeries out{requests.start_minute, {}, DemandUnit::cpu_units};
	out.values.reserve(requests.values.size());
	for (double r : requests.values) {
		out.values.push_back(r <= 0.0 ? 0.0 : std::ceil(r / capacity_per_cpu));
	}
	return out;
}

DemandSeries read_demand_csv(std::istream& in) {
	DemandSeries out;
	std::optional<long long> first_key;
	std::optional<long long> last_key;
	std::string line;
	std::size_t line_no = 0;
	while (std::getline(in, line)) {
		++line_no;
		const std::string_view row = trim(line);
		if (row.empty()) {
			continue;
		}
		const auto comma = row.find(',');
		if (comma == std::string_view::npos) {
			throw Error(Errc::parse_error, "line " + std::to_string(line_no) + ": expected two columns");
		}
		const auto key_text = trim(row.substr(0, comma));
		const auto value_text = row.substr(comma + 1);

		long long key = 0;
		double value = 0.0;
		const bool numeric_key = [&] {
			auto [ptr, ec] = std::from_chars(key_text.data(), key_text.data() + key_text.size(), key);
			return ec == std::errc{} && ptr == key_text.data() + key_text.size();
		}();
		if (!numeric_key) {
			auto minute = parse_iso_minute(key_text);
			if (!minute) {
				if (line_no == 1 && !first_key) {
					continue; // header
				}
				throw Error(Errc::parse_error,
				            "line " + std::to_string(line_no) + ": bad key '" + std::string(key_text) + "'");
			}
			key = minute->time_since_epoch().count();
		}
		if (!parse_value(value_text, value) || value < 0.0) {
			throw Error(Errc::parse_error, "line " + std::to_string(line_no) + ": bad value");
		}
		if (last_key && key <= *last_key) {
			throw Error(Errc::parse_error, "line " + std::to_string(line_no) + ": keys must strictly increase");
		}
		if (!first_key) {
			first_key = key;
			out.start_minute = MinuteStamp{minutes{key}};
		} else {
			out.values.resize(out.values.size() + static_cast<std::size_t>(key - *last_key - 1), 0.0);
		}
		out.values.push_back(value);
		last_key = key;
	}
	if (in.bad()) {
		throw Error(Errc::io_error, "failed while reading series stream");
	}
	if (out.values.empty()) {
		throw Error(Errc::empty_input, "series file holds no rows");
	}
	return out;
}

std::string format_utc(Timestamp ts) {
	const auto day = std::chrono::floor<days>(ts);
	const std::chrono::year_month_day ymd{day};
	const std::chrono::hh_mm_ss hms{ts - day};
	char buf[32];
	std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02d:%02d:%02dZ", static_cast<int>(ymd.year()),
	              static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()),
	              static_cast<int>(hms.hours().count()), static_cast<int>(hms.minutes().count()),
	              static_cast<int>(hms.seconds().count()));
	return buf;
}

void write_demand_csv(std::ostream& out, const DemandSeries& series) {
	out << "timestamp,value\n";
	char buf[64];
	for (std::size_t i = 0; i < series.values.size(); ++i) {
		const auto ts = std::chrono::time_point_cast<seconds>(series.start_minute + minutes{i});
		auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, series.values[i]);
		out << format_utc(ts) << ',' << std::string_view(buf, static_cast<std::size_t>(ptr - buf)) << '\n';
	}
	if (!out) {
		throw Error(Errc::io_error, "failed while writing series stream");
	}
}

} // namespace mshw
