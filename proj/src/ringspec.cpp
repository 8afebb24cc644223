#include "ringlab/ringspec.hpp"

#include <cctype>
#include <cstdint>

namespace ringlab {

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return done() ? '\0' : text[pos]; }
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("ring spec \"" + text + "\": " + why + " at offset " +
                         std::to_string(pos));
    }
    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos;
    }
    std::uint64_t number() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
        std::uint64_t n = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            n = n * 10 + static_cast<std::uint64_t>(text[pos] - '0');
            if (n > (std::uint64_t{1} << 40)) fail("number too large");
            ++pos;
        }
        return n;
    }
    std::string word() {
        std::size_t start = pos;
        while (std::isalpha(static_cast<unsigned char>(peek()))) ++pos;
        if (pos == start) fail("expected a ring constructor");
        return text.substr(start, pos - start);
    }
};

Ring parse_spec(Cursor& c, const Config& cfg) {
    std::string head = c.word();
    c.expect(':');
    if (head == "z") return z_mod(c.number(), cfg);
    if (head == "zmul") return zero_mult_ring(c.number(), cfg);
    if (head == "gf") {
        std::uint64_t p = c.number();
        c.expect(':');
        std::uint64_t n = c.number();
        if (n > 0xffffffffu) c.fail("degree too large");
        return galois_field(p, static_cast<std::uint32_t>(n), cfg);
    }
    if (head == "mat" || head == "tri") {
        Ring base = parse_spec(c, cfg);
        c.expect(':');
        std::uint64_t k = c.number();
        if (k == 0 || k > 0xffffffffu) c.fail("bad matrix size");
        return matrix_ring(base, static_cast<std::uint32_t>(k),
                           head == "mat" ? MatrixShape::full : MatrixShape::upper_triangular,
                           cfg);
    }
    if (head == "prod") {
        Ring left = parse_spec(c, cfg);
        c.expect(',');
        Ring right = parse_spec(c, cfg);
        return direct_product(left, right, cfg);
    }
    if (head == "table") {
        std::size_t start = c.pos;
        while (!c.done() && c.peek() != ',') ++c.pos;
        return ring_from_table_file(c.text.substr(start, c.pos - start), cfg);
    }
    c.fail("unknown ring constructor \"" + head + "\"");
}

}  // namespace

Ring parse_ring_spec(const std::string& spec, const Config& cfg) {
    Cursor c{spec};
    Ring r = parse_spec(c, cfg);
    if (!c.done()) c.fail("trailing characters");
    return r;
}

}  // namespace ringlab
