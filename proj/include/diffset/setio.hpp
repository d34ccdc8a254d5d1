#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "diffset/intset.hpp"

namespace diffset {

enum class SetFormat { list, bits };

// "list": one decimal integer per line; blank lines and lines starting with '#' are skipped.
// The window is [min, max] unless `window` is given. An empty list needs an explicit window.
IntSet parse_list(std::istream& in, std::optional<Window> window = std::nullopt);

// "bits": a header line "lo=<integer>", then one line of '0'/'1'; position i encodes lo + i.
IntSet parse_bits(std::istream& in);

// Detects the format from the first non-blank line ("lo=" prefix selects bits).
IntSet read_set_file(const std::string& path, std::optional<Window> window = std::nullopt);

void write_list(std::ostream& out, const IntSet& s);
void write_bits(std::ostream& out, const IntSet& s);
void write_set_file(const std::string& path, const IntSet& s, SetFormat format);

}  // namespace diffset
