#pragma once

#include <optional>

#include "dehnkit/errors.hpp"

namespace testing_helpers {

/// Kind of the dehnkit::Error thrown by f, or none when f returns normally.
template <class F>
std::optional<dehnkit::ErrorKind> error_kind(F&& f) {
    try {
        f();
    } catch (const dehnkit::Error& e) {
        return e.kind();
    }
    return std::nullopt;
}

}  // namespace testing_helpers
