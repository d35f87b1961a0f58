#pragma once

#include <string>
#include <string_view>

namespace gemforge::etl {

/// Lowercase, accent-stripped (NFKD), whitespace and hyphen runs become a
/// single '-', every other non-alphanumeric code point is dropped. Returns
/// an empty string when nothing alphanumeric remains.
std::string slugify(std::string_view name);

}  // namespace gemforge::etl
