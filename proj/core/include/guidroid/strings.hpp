#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace guidroid::strings {

std::string trim(std::string_view s);
std::string to_lower(std::string_view s);

/// Casefold + trim + collapse internal whitespace runs to single spaces.
std::string normalize(std::string_view s);

bool iequals(std::string_view a, std::string_view b);
bool icontains(std::string_view haystack, std::string_view needle);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

/// Quote with ASCII double quotes and join: "a", "b", "c"
std::string quote_join(const std::vector<std::string>& parts, std::string_view sep = ", ");

/// Split a free-text description into sentences on . ! ? boundaries.
std::vector<std::string> split_sentences(std::string_view text);

/// "1st", "2nd", "3rd", "4th", ..., "11th", "21st"
std::string ordinal(int n);

/// FNV-1a 64-bit, hex encoded. Used to key scripted backend answers.
std::string fnv1a_hex(std::string_view data);

} // namespace guidroid::strings
