#include "uigkit/json_writer.hpp"

#include <cstdio>
#include <fstream>

#include "uigkit/errors.hpp"

namespace uigkit::jsonw {

Value& Value::set(std::string key, Value v) {
    members_.emplace_back(std::move(key), std::move(v));
    return *this;
}

Value& Value::push(Value v) {
    elements_.push_back(std::move(v));
    return *this;
}

std::string escape_string(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (unsigned char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\b': out += "\\b"; break;
        case '\f': out += "\\f"; break;
        case '\n': out += "\\n"; break;
        case '\r': out += "\\r"; break;
        case '\t': out += "\\t"; break;
        default:
            if (c < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                out += buf;
            } else {
                out.push_back(static_cast<char>(c));
            }
        }
    }
    return out;
}

void Value::dump_to(std::string& out, int depth) const {
    const std::string pad(static_cast<size_t>(depth) * 2, ' ');
    const std::string inner(static_cast<size_t>(depth + 1) * 2, ' ');
    char buf[64];
    switch (kind_) {
    case Kind::string:
        out += '"';
        out += escape_string(str_);
        out += '"';
        break;
    case Kind::integer:
        std::snprintf(buf, sizeof(buf), "%lld", static_cast<long long>(int_));
        out += buf;
        break;
    case Kind::floating:
        std::snprintf(buf, sizeof(buf), "%.4f", dbl_);
        out += buf;
        break;
    case Kind::boolean:
        out += bool_ ? "true" : "false";
        break;
    case Kind::object:
        if (members_.empty()) {
            out += "{}";
            break;
        }
        out += "{\n";
        for (size_t i = 0; i < members_.size(); ++i) {
            out += inner;
            out += '"';
            out += escape_string(members_[i].first);
            out += "\": ";
            members_[i].second.dump_to(out, depth + 1);
            if (i + 1 < members_.size())
                out += ',';
            out += '\n';
        }
        out += pad;
        out += '}';
        break;
    case Kind::array:
        if (elements_.empty()) {
            out += "[]";
            break;
        }
        out += "[\n";
        for (size_t i = 0; i < elements_.size(); ++i) {
            out += inner;
            elements_[i].dump_to(out, depth + 1);
            if (i + 1 < elements_.size())
                out += ',';
            out += '\n';
        }
        out += pad;
        out += ']';
        break;
    }
}

std::string Value::dump() const {
    std::string out;
    dump_to(out, 0);
    return out;
}

void write_file(const std::string& path, const Value& value) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw DataError("cannot write file: " + path);
    out << value.dump() << '\n';
}

} // namespace uigkit::jsonw
