#include "gemforge/etl/slug.hpp"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include <stdexcept>

namespace gemforge::etl {

std::string slugify(std::string_view name) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfkd = icu::Normalizer2::getNFKDInstance(status);
  if (U_FAILURE(status)) throw std::runtime_error(std::string("ICU NFKD unavailable: ") + u_errorName(status));

  icu::UnicodeString source = icu::UnicodeString::fromUTF8(icu::StringPiece(name.data(), static_cast<int32_t>(name.size())));
  icu::UnicodeString decomposed = nfkd->normalize(source, status);
  if (U_FAILURE(status)) throw std::runtime_error(std::string("NFKD normalisation failed: ") + u_errorName(status));

  icu::UnicodeString out;
  bool pending_dash = false;
  for (int32_t i = 0; i < decomposed.length();) {
    UChar32 c = decomposed.char32At(i);
    i += U16_LENGTH(c);
    if (u_charType(c) == U_NON_SPACING_MARK) continue;
    if (u_isUWhiteSpace(c) || c == '-') {
      pending_dash = !out.isEmpty();
      continue;
    }
    if (!u_isalnum(c)) continue;
    if (pending_dash) out.append(static_cast<UChar32>('-'));
    pending_dash = false;
    out.append(u_tolower(c));
  }
  std::string utf8;
  out.toUTF8String(utf8);
  return utf8;
}

}  // namespace gemforge::etl
