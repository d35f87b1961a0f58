#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace gemforge::testing {

/// Checks that `html` starts with a doctype, has a single <html> root and
/// that every non-void element is closed in nesting order. Returns a
/// description of the first problem, or nullopt when the page is sound.
std::optional<std::string> check_html(std::string_view html);

}  // namespace gemforge::testing
