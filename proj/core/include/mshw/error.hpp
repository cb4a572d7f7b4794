#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mshw {

enum class Errc {
	invalid_argument,
	insufficient_history,
	degenerate_window,
	duplicate_cycle,
	lag_too_large,
	empty_input,
	empty_report,
	parse_error,
	io_error,
};

std::string_view to_string(Errc code);

/// Exception type thrown by every mshw component. The code identifies the
/// failure class; callers map it to exit statuses or retry decisions.
class Error : public std::runtime_error {
public:
	Error(Errc code, const std::string& message);

	Errc code() const noexcept {
		return code_;
	}

private:
	Errc code_;
};

} // namespace mshw
