#ifndef DERLOG_ERRORS_HPP
#define DERLOG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace derlog {

// A mathematical invariant the computation relies on failed to hold on
// actual data. This is significant and must never be swallowed; the CLI maps
// it to exit code 2.
class invariant_error : public std::runtime_error {
public:
    explicit invariant_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace derlog

#endif
