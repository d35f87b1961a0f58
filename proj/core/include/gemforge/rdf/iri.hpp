#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace gemforge::rdf {

/// True when `ref` carries its own scheme (`scheme ":" ...`).
bool has_scheme(std::string_view ref) noexcept;

/// Reference resolution per RFC 3986 section 5.2, including dot-segment
/// removal. `base` must be absolute.
std::string resolve_iri(std::string_view base, std::string_view ref);

}  // namespace gemforge::rdf
