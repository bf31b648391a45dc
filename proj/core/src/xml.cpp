#include "guidroid/xml.hpp"

#include "guidroid/errors.hpp"

#include <cctype>
#include <cstdlib>

namespace guidroid::xml {

namespace {

constexpr int kMaxDepth = 128;

struct Cursor {
    std::string_view doc;
    size_t pos = 0;

    bool eof() const { return pos >= doc.size(); }
    char peek() const { return doc[pos]; }
    bool starts_with(std::string_view s) const { return doc.compare(pos, s.size(), s) == 0; }

    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(doc[pos]))) ++pos;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw MalformedDocument("xml: " + what + " at offset " + std::to_string(pos));
    }
};

bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == ':' || c == '.';
}

std::string decode_entities(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    for (size_t i = 0; i < raw.size(); ++i) {
        if (raw[i] != '&') {
            out.push_back(raw[i]);
            continue;
        }
        size_t semi = raw.find(';', i + 1);
        if (semi == std::string_view::npos || semi - i > 10) {
            out.push_back('&');
            continue;
        }
        std::string_view entity = raw.substr(i + 1, semi - i - 1);
        if (entity == "amp") out.push_back('&');
        else if (entity == "lt") out.push_back('<');
        else if (entity == "gt") out.push_back('>');
        else if (entity == "quot") out.push_back('"');
        else if (entity == "apos") out.push_back('\'');
        else if (!entity.empty() && entity[0] == '#') {
            long code = 0;
            bool valid = false;
            if (entity.size() > 2 && (entity[1] == 'x' || entity[1] == 'X')) {
                char* end = nullptr;
                std::string digits(entity.substr(2));
                code = std::strtol(digits.c_str(), &end, 16);
                valid = end && *end == '\0' && !digits.empty();
            } else {
                char* end = nullptr;
                std::string digits(entity.substr(1));
                code = std::strtol(digits.c_str(), &end, 10);
                valid = end && *end == '\0' && !digits.empty();
            }
            if (valid && code > 0 && code < 128) {
                out.push_back(static_cast<char>(code));
            } else if (valid && code >= 128) {
                // Encode as UTF-8; counts above U+10FFFF collapse to U+FFFD.
                unsigned long cp = code > 0x10FFFF ? 0xFFFDul : static_cast<unsigned long>(code);
                if (cp < 0x800) {
                    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
                    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
                } else if (cp < 0x10000) {
                    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
                    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
                    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
                } else {
                    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
                    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
                    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
                    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
                }
            } else {
                out.push_back('&');
                continue;
            }
        } else {
            out.push_back('&');
            continue;
        }
        i = semi;
    }
    return out;
}

void skip_misc(Cursor& c) {
    for (;;) {
        c.skip_ws();
        if (c.starts_with("<?")) {
            size_t end = c.doc.find("?>", c.pos + 2);
            if (end == std::string_view::npos) c.fail("unterminated processing instruction");
            c.pos = end + 2;
        } else if (c.starts_with("<!--")) {
            size_t end = c.doc.find("-->", c.pos + 4);
            if (end == std::string_view::npos) c.fail("unterminated comment");
            c.pos = end + 3;
        } else if (c.starts_with("<!DOCTYPE") || c.starts_with("<!doctype")) {
            size_t end = c.doc.find('>', c.pos);
            if (end == std::string_view::npos) c.fail("unterminated DOCTYPE");
            c.pos = end + 1;
        } else {
            return;
        }
    }
}

std::string parse_name(Cursor& c) {
    size_t start = c.pos;
    while (!c.eof() && is_name_char(c.peek())) ++c.pos;
    if (c.pos == start) c.fail("expected name");
    return std::string(c.doc.substr(start, c.pos - start));
}

void parse_attrs(Cursor& c, Node& node) {
    for (;;) {
        c.skip_ws();
        if (c.eof()) c.fail("unterminated element");
        char ch = c.peek();
        if (ch == '>' || ch == '/' || ch == '?') return;
        std::string key = parse_name(c);
        c.skip_ws();
        if (c.eof() || c.peek() != '=') {
            // Attribute without value, tolerated as empty.
            node.attrs.emplace_back(std::move(key), "");
            continue;
        }
        ++c.pos;
        c.skip_ws();
        if (c.eof()) c.fail("unterminated attribute value");
        char quote = c.peek();
        if (quote != '"' && quote != '\'') c.fail("attribute value must be quoted");
        ++c.pos;
        size_t end = c.doc.find(quote, c.pos);
        if (end == std::string_view::npos) c.fail("unterminated attribute value");
        node.attrs.emplace_back(std::move(key), decode_entities(c.doc.substr(c.pos, end - c.pos)));
        c.pos = end + 1;
    }
}

Node parse_element(Cursor& c, int depth) {
    if (depth > kMaxDepth) c.fail("nesting too deep");
    if (c.eof() || c.peek() != '<') c.fail("expected element");
    ++c.pos;
    Node node;
    node.name = parse_name(c);
    parse_attrs(c, node);
    c.skip_ws();
    if (c.starts_with("/>")) {
        c.pos += 2;
        return node;
    }
    if (c.eof() || c.peek() != '>') c.fail("expected '>'");
    ++c.pos;

    for (;;) {
        // Text content is skipped: the hierarchy dialect keeps everything
        // in attributes. Stop at the next markup boundary.
        size_t lt = c.doc.find('<', c.pos);
        if (lt == std::string_view::npos) c.fail("unterminated element '" + node.name + "'");
        c.pos = lt;
        if (c.starts_with("</")) {
            c.pos += 2;
            std::string closing = parse_name(c);
            if (closing != node.name) c.fail("mismatched closing tag '" + closing + "'");
            c.skip_ws();
            if (c.eof() || c.peek() != '>') c.fail("expected '>' after closing tag");
            ++c.pos;
            return node;
        }
        if (c.starts_with("<!--")) {
            size_t end = c.doc.find("-->", c.pos + 4);
            if (end == std::string_view::npos) c.fail("unterminated comment");
            c.pos = end + 3;
            continue;
        }
        if (c.starts_with("<![CDATA[")) {
            size_t end = c.doc.find("]]>", c.pos + 9);
            if (end == std::string_view::npos) c.fail("unterminated CDATA");
            c.pos = end + 3;
            continue;
        }
        if (c.starts_with("<?")) {
            size_t end = c.doc.find("?>", c.pos + 2);
            if (end == std::string_view::npos) c.fail("unterminated processing instruction");
            c.pos = end + 2;
            continue;
        }
        node.children.push_back(parse_element(c, depth + 1));
    }
}

} // namespace

const std::string* Node::attr(std::string_view key) const {
    for (const auto& [k, v] : attrs) {
        if (k == key) return &v;
    }
    return nullptr;
}

std::string Node::attr_or(std::string_view key, std::string_view fallback) const {
    const std::string* v = attr(key);
    return v ? *v : std::string(fallback);
}

Node parse(std::string_view document) {
    Cursor c{document};
    skip_misc(c);
    if (c.eof()) c.fail("empty document");
    Node root = parse_element(c, 0);
    skip_misc(c);
    if (!c.eof()) c.fail("trailing content after root element");
    return root;
}

std::string escape_attr(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    for (char ch : raw) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out.push_back(ch);
        }
    }
    return out;
}

std::string escape_text(std::string_view raw) {
    return escape_attr(raw);
}

} // namespace guidroid::xml
