#include "uigkit/csv.hpp"

namespace uigkit::csv {

bool Reader::next(std::vector<std::string>& fields) {
    fields.clear();
    int c = in_.get();
    if (c == std::istream::traits_type::eof())
        return false;

    std::string field;
    bool in_quotes = false;
    while (true) {
        if (c == std::istream::traits_type::eof()) {
            fields.push_back(field);
            return true;
        }
        char ch = static_cast<char>(c);
        if (in_quotes) {
            if (ch == '"') {
                int peek = in_.peek();
                if (peek == '"') {
                    in_.get();
                    field.push_back('"');
                } else {
                    in_quotes = false;
                }
            } else {
                field.push_back(ch);
            }
        } else if (ch == '"' && field.empty()) {
            in_quotes = true;
        } else if (ch == ',') {
            fields.push_back(field);
            field.clear();
        } else if (ch == '\n') {
            fields.push_back(field);
            return true;
        } else if (ch == '\r') {
            if (in_.peek() == '\n')
                in_.get();
            fields.push_back(field);
            return true;
        } else {
            field.push_back(ch);
        }
        c = in_.get();
    }
}

std::string escape_field(const std::string& field) {
    bool needs_quotes = field.find_first_of(",\"\r\n") != std::string::npos;
    if (!needs_quotes)
        return field;
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"')
            out += "\"\"";
        else
            out.push_back(ch);
    }
    out.push_back('"');
    return out;
}

void write_row(std::ostream& out, const std::vector<std::string>& fields) {
    for (size_t i = 0; i < fields.size(); ++i) {
        if (i)
            out << ',';
        out << escape_field(fields[i]);
    }
    out << '\n';
}

} // namespace uigkit::csv
