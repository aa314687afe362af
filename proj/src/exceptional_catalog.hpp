#pragma once

#include <cstddef>

namespace quivermut::detail {

// Build-time enumerated classes: canonical keys separated by newlines.
struct CatalogEntry {
  const char* designation;
  std::size_t size;
  const char* keys;
};

extern const CatalogEntry kExceptionalCatalog[];
extern const std::size_t kExceptionalCatalogSize;

}  // namespace quivermut::detail
