#pragma once

#include <stdexcept>
#include <string>

namespace kummer {

/// Failure categories. The CLI maps each one to a distinct exit status.
enum class Errc {
    invalid_curve,
    invalid_place,
    invalid_selection,
    length_mismatch,
    not_coprime,
    precondition,
    window_violation,
    invalid_box,
    overflow,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace kummer
