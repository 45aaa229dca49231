#ifndef SCROLLREG_ERRORS_HPP
#define SCROLLREG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace scrollreg {

// Error taxonomy mirrors the CLI exit codes: input errors exit 1,
// certification failures exit 2, degenerate geometry exit 3.
enum class ErrorKind { input = 1, certification = 2, degenerate = 3 };

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

class ParseError : public Error {
  public:
    ParseError(std::size_t position, const std::string& message)
        : Error(ErrorKind::input,
                message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const noexcept { return position_; }

  private:
    std::size_t position_;
};

[[noreturn]] inline void throw_input(const std::string& msg) {
    throw Error(ErrorKind::input, msg);
}
[[noreturn]] inline void throw_certification(const std::string& msg) {
    throw Error(ErrorKind::certification, msg);
}
[[noreturn]] inline void throw_degenerate(const std::string& msg) {
    throw Error(ErrorKind::degenerate, msg);
}

} // namespace scrollreg

#endif
