#ifndef TENSKIT_ERROR_HPP
#define TENSKIT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace tenskit {

// Error categories double as process exit codes: 2 usage/parse, 3 domain
// (arithmetic, shape, label discipline), 4 file I/O.
enum class ErrCode : int { usage = 2, domain = 3, io = 4 };

class Error : public std::runtime_error {
public:
    Error(ErrCode code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    ErrCode code() const { return code_; }

private:
    ErrCode code_;
};

[[noreturn]] inline void fail_usage(const std::string& msg) { throw Error(ErrCode::usage, msg); }
[[noreturn]] inline void fail_domain(const std::string& msg) { throw Error(ErrCode::domain, msg); }
[[noreturn]] inline void fail_io(const std::string& msg) { throw Error(ErrCode::io, msg); }

} // namespace tenskit

#endif
