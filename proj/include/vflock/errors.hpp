#pragma once
#include <stdexcept>
#include <string>

namespace vflock {

// Named error conditions; all derive from std::runtime_error so the CLI can
// catch one type and report the message.
struct CoincidentAgents : std::runtime_error {
    explicit CoincidentAgents(const std::string& m) : std::runtime_error(m) {}
};
struct NoSignChange : std::runtime_error {
    explicit NoSignChange(const std::string& m) : std::runtime_error(m) {}
};
struct DegenerateInput : std::runtime_error {
    explicit DegenerateInput(const std::string& m) : std::runtime_error(m) {}
};
struct MalformedBox : std::runtime_error {
    explicit MalformedBox(const std::string& m) : std::runtime_error(m) {}
};
struct NumericBlowup : std::runtime_error {
    explicit NumericBlowup(const std::string& m) : std::runtime_error(m) {}
};
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& m) : std::runtime_error(m) {}
};
struct RangeError : std::runtime_error {
    explicit RangeError(const std::string& m) : std::runtime_error(m) {}
};
struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& m) : std::runtime_error(m) {}
};
struct EmptyGrid : std::runtime_error {
    explicit EmptyGrid(const std::string& m) : std::runtime_error(m) {}
};

} // namespace vflock
