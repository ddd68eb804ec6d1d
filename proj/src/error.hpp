#ifndef PLANAR2_ERROR_HPP
#define PLANAR2_ERROR_HPP

#include <stdexcept>
#include <string>

namespace planar2 {

// Error categories, mirrored one-to-one by the C API status codes and the
// CLI exit-code contract (all of these map to exit code 2).
enum class Errc {
    usage = 1,       // bad arguments, mismatched contexts, out-of-range encodings
    domain = 2,      // mathematically undefined input (inv(0), dlog(0), ...)
    capability = 3,  // operation needs a resource that was not built (dlog table)
    io = 4,          // file errors, corrupt or mismatched progress files
};

class Error : public std::runtime_error {
  public:
    Error(Errc code, std::string msg) : std::runtime_error(std::move(msg)), code_(code) {}
    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void throw_usage(const std::string& msg) { throw Error(Errc::usage, msg); }
[[noreturn]] inline void throw_domain(const std::string& msg) { throw Error(Errc::domain, msg); }
[[noreturn]] inline void throw_capability(const std::string& msg) { throw Error(Errc::capability, msg); }
[[noreturn]] inline void throw_io(const std::string& msg) { throw Error(Errc::io, msg); }

}  // namespace planar2

#endif
