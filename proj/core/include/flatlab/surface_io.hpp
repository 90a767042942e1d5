#pragma once

#include <string>

#include "flatlab/surface.hpp"

namespace flatlab {

// Text format:
//   field sqrt(D) | field rational
//   polygon <name> (x,y) (x,y) ...
//   glue <name>.<edge> <name>.<edge>
// Scalars use the exact_real grammar; '#' starts a comment.  to_text and
// parse_surface round-trip byte-exactly on canonical output.
std::string to_text(const TranslationSurface& s);
TranslationSurface parse_surface(const std::string& text);

TranslationSurface load_surface(const std::string& path);
void save_surface(const TranslationSurface& s, const std::string& path);

// Path, builder spec ("golden-l", "origami (1 2) (1 3)", ...) or builder name.
TranslationSurface resolve_surface(const std::string& arg);

}  // namespace flatlab
