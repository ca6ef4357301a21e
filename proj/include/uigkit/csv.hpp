#ifndef UIGKIT_CSV_HPP
#define UIGKIT_CSV_HPP

#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace uigkit::csv {

// Incremental RFC 4180 reader: quoted fields, escaped quotes, embedded
// commas and newlines. Accepts both \n and \r\n line endings.
class Reader {
public:
    explicit Reader(std::istream& in) : in_(in) {}

    // Reads one record into `fields`. Returns false on end of input.
    bool next(std::vector<std::string>& fields);

private:
    std::istream& in_;
};

std::string escape_field(const std::string& field);
void write_row(std::ostream& out, const std::vector<std::string>& fields);

} // namespace uigkit::csv

#endif
