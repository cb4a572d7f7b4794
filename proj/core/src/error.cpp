#include "mshw/error.hpp"

namespace mshw {

std::string_view to_string(Errc code) {
	switch (code) {
	case Errc::invalid_argument:
		return "InvalidArgument";
	case Errc::insufficient_history:
		return "InsufficientHistory";
	case Errc::degenerate_window:
		return "DegenerateWindow";
	case Errc::duplicate_cycle:
		return "DuplicateCycle";
	case Errc::lag_too_large:
		return "LagTooLarge";
	case Errc::empty_input:
		return "EmptyInput";
	case Errc::empty_report:
		return "EmptyReport";
	case Errc::parse_error:
		return "ParseError";
	case Errc::io_error:
		return "IoError";
	}
	return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

} // namespace mshw
