#pragma once

// Tiny XML reader for checking generated URDF documents in tests. Handles
// exactly the subset the exporter emits: a prolog, nested elements,
// attributes and entity-escaped values. Throws std::runtime_error on
// anything malformed, which doubles as the well-formedness check.

#include <cctype>
#include <cstring>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace xml_lite {

struct Element {
    std::string tag;
    std::map<std::string, std::string> attrs;
    std::vector<Element> children;

    const Element* first(const std::string& t) const {
        for (const Element& c : children) {
            if (c.tag == t) return &c;
        }
        return nullptr;
    }

    std::vector<const Element*> all(const std::string& t) const {
        std::vector<const Element*> out;
        for (const Element& c : children) {
            if (c.tag == t) out.push_back(&c);
        }
        return out;
    }

    std::string attr(const std::string& name) const {
        auto it = attrs.find(name);
        if (it == attrs.end()) throw std::runtime_error(tag + ": missing attribute " + name);
        return it->second;
    }
};

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    Element parse() {
        skip_ws();
        if (peek_starts("<?")) {
            const auto end = s_.find("?>", pos_);
            if (end == std::string::npos) fail("unterminated prolog");
            pos_ = end + 2;
        }
        skip_ws();
        Element root = element();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing content after root element");
        return root;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::runtime_error("xml error at offset " + std::to_string(pos_) + ": " + what);
    }

    bool peek_starts(const char* prefix) const { return s_.compare(pos_, std::strlen(prefix), prefix) == 0; }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    std::string name() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' ||
                s_[pos_] == '-' || s_[pos_] == ':')) {
            ++pos_;
        }
        if (pos_ == start) fail("expected a name");
        return s_.substr(start, pos_ - start);
    }

    std::string unescape(const std::string& v) {
        std::string out;
        for (std::size_t i = 0; i < v.size();) {
            if (v[i] != '&') {
                out += v[i++];
                continue;
            }
            const auto semi = v.find(';', i);
            if (semi == std::string::npos) fail("unterminated entity");
            const std::string ent = v.substr(i + 1, semi - i - 1);
            if (ent == "amp") out += '&';
            else if (ent == "lt") out += '<';
            else if (ent == "gt") out += '>';
            else if (ent == "quot") out += '"';
            else if (ent == "apos") out += '\'';
            else fail("unknown entity &" + ent + ";");
            i = semi + 1;
        }
        return out;
    }

    Element element() {
        if (pos_ >= s_.size() || s_[pos_] != '<') fail("expected '<'");
        ++pos_;
        Element e;
        e.tag = name();
        while (true) {
            skip_ws();
            if (pos_ >= s_.size()) fail("unterminated element " + e.tag);
            if (peek_starts("/>")) {
                pos_ += 2;
                return e;
            }
            if (s_[pos_] == '>') {
                ++pos_;
                break;
            }
            const std::string key = name();
            skip_ws();
            if (pos_ >= s_.size() || s_[pos_] != '=') fail("expected '=' after attribute " + key);
            ++pos_;
            skip_ws();
            if (pos_ >= s_.size() || s_[pos_] != '"') fail("expected '\"'");
            ++pos_;
            const auto end = s_.find('"', pos_);
            if (end == std::string::npos) fail("unterminated attribute value");
            if (!e.attrs.emplace(key, unescape(s_.substr(pos_, end - pos_))).second) {
                fail("duplicate attribute " + key);
            }
            pos_ = end + 1;
        }
        while (true) {
            skip_ws();
            if (peek_starts("</")) {
                pos_ += 2;
                const std::string closing = name();
                if (closing != e.tag) fail("mismatched closing tag " + closing + " for " + e.tag);
                skip_ws();
                if (pos_ >= s_.size() || s_[pos_] != '>') fail("expected '>'");
                ++pos_;
                return e;
            }
            e.children.push_back(element());
        }
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

inline Element parse(const std::string& text) { return Parser(text).parse(); }

} // namespace xml_lite
