#ifndef UIGKIT_JSON_WRITER_HPP
#define UIGKIT_JSON_WRITER_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace uigkit::jsonw {

// Minimal JSON value for byte-stable emission: objects keep insertion
// order and every floating-point number is printed as fixed %.4f. Output
// files produced from equal trees are identical byte-for-byte across
// runs and platforms.
class Value {
public:
    enum class Kind { object, array, string, integer, floating, boolean };

    static Value object() { return Value(Kind::object); }
    static Value array() { return Value(Kind::array); }

    Value(const char* s) : kind_(Kind::string), str_(s) {}
    Value(std::string s) : kind_(Kind::string), str_(std::move(s)) {}
    Value(std::int64_t v) : kind_(Kind::integer), int_(v) {}
    Value(std::uint64_t v) : kind_(Kind::integer), int_(static_cast<std::int64_t>(v)) {}
    Value(int v) : kind_(Kind::integer), int_(v) {}
    Value(unsigned v) : kind_(Kind::integer), int_(v) {}
    Value(double v) : kind_(Kind::floating), dbl_(v) {}
    Value(bool v) : kind_(Kind::boolean), bool_(v) {}

    Kind kind() const { return kind_; }

    // Object append. Keys are emitted in insertion order.
    Value& set(std::string key, Value v);
    // Array append.
    Value& push(Value v);

    std::string dump() const;

private:
    explicit Value(Kind k) : kind_(k) {}
    void dump_to(std::string& out, int depth) const;

    Kind kind_;
    std::string str_;
    std::int64_t int_ = 0;
    double dbl_ = 0.0;
    bool bool_ = false;
    std::vector<std::pair<std::string, Value>> members_;
    std::vector<Value> elements_;
};

std::string escape_string(const std::string& s);

// Writes dump() plus a trailing newline.
void write_file(const std::string& path, const Value& value);

} // namespace uigkit::jsonw

#endif
