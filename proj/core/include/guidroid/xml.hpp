#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace guidroid::xml {

/// Minimal DOM node for the view-hierarchy dialect and AndroidManifest files.
struct Node {
    std::string name;
    std::vector<std::pair<std::string, std::string>> attrs;
    std::vector<Node> children;

    /// First attribute with the given name, or nullptr.
    const std::string* attr(std::string_view key) const;
    std::string attr_or(std::string_view key, std::string_view fallback = "") const;
};

/// Parse a single-rooted XML document. Supports declarations, comments,
/// DOCTYPE, CDATA, self-closing elements, single/double quoted attributes
/// and the five predefined entities plus numeric character references.
/// Throws MalformedDocument on anything unparseable; never crashes on
/// arbitrary input. Element nesting is capped to keep recursion bounded.
Node parse(std::string_view document);

std::string escape_attr(std::string_view raw);
std::string escape_text(std::string_view raw);

} // namespace guidroid::xml
