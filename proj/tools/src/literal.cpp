#include "bctk/cli/literal.hpp"

#include <cctype>
#include <charconv>

namespace bctk::cli {

namespace {

class Scanner {
public:
    explicit Scanner(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool done() const { return pos_ >= text_.size(); }
    char peek() const { return done() ? '\0' : text_[pos_]; }
    std::size_t pos() const { return pos_; }

    bool consume(char c) {
        if (!done() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        if (!consume(c)) {
            throw ParseError(std::string("expected '") + c + "' (" + what +
                                 ")",
                             pos_);
        }
    }

    double number() {
        double value = 0.0;
        const char* begin = text_.data() + pos_;
        const char* end = text_.data() + text_.size();
        const auto result =
            std::from_chars(begin, end, value, std::chars_format::general);
        if (result.ec != std::errc{} || result.ptr == begin) {
            throw ParseError("expected a number", pos_);
        }
        pos_ += static_cast<std::size_t>(result.ptr - begin);
        return value;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

bool is_number_start(char c) {
    return (c >= '0' && c <= '9') || c == '.';
}

struct TermSink {
    // Slot order: scalar, i, j, k.
    double value[4] = {0.0, 0.0, 0.0, 0.0};
    bool seen[4] = {false, false, false, false};

    void set(int slot, double v, std::size_t pos) {
        if (seen[slot]) {
            static const char* names[4] = {"scalar", "i", "j", "k"};
            throw ParseError(std::string("duplicate ") + names[slot] +
                                 " term",
                             pos);
        }
        seen[slot] = true;
        value[slot] = v;
    }
};

int unit_slot(char c, bool allow_jk) {
    if (c == 'i') return 1;
    if (allow_jk && c == 'j') return 2;
    if (allow_jk && c == 'k') return 3;
    return -1;
}

// Parses a signed-term sum: term {(+|-) term}. A term is a number with an
// optional unit suffix or a bare unit (coefficient 1).
TermSink parse_sum(Scanner& scan, bool allow_jk) {
    TermSink sink;
    bool first = true;
    for (;;) {
        scan.skip_ws();
        double sign = 1.0;
        if (first) {
            if (scan.consume('-')) {
                sign = -1.0;
            } else {
                scan.consume('+');
            }
        } else {
            if (scan.consume('-')) {
                sign = -1.0;
            } else if (scan.consume('+')) {
                sign = 1.0;
            } else {
                break;
            }
        }
        scan.skip_ws();
        const std::size_t term_pos = scan.pos();
        const char c = scan.peek();
        if (is_number_start(c)) {
            const double magnitude = scan.number();
            const int slot = unit_slot(scan.peek(), allow_jk);
            if (slot >= 0) {
                scan.consume(scan.peek());
                sink.set(slot, sign * magnitude, term_pos);
            } else {
                sink.set(0, sign * magnitude, term_pos);
            }
        } else if (unit_slot(c, allow_jk) >= 0) {
            const int slot = unit_slot(c, allow_jk);
            scan.consume(c);
            sink.set(slot, sign, term_pos);
        } else {
            throw ParseError(allow_jk ? "expected a number or unit (i, j, k)"
                                      : "expected a number or unit i",
                             term_pos);
        }
        first = false;
    }
    return sink;
}

Complex parse_complex(Scanner& scan) {
    const TermSink sink = parse_sum(scan, /*allow_jk=*/false);
    return {sink.value[0], sink.value[1]};
}

}  // namespace

Bicomplex parse_literal(std::string_view text) {
    Scanner scan(text);
    scan.skip_ws();
    Bicomplex result;
    if (scan.peek() == '[') {
        scan.expect('[', "idempotent literal");
        const Complex z1 = parse_complex(scan);
        scan.skip_ws();
        scan.expect(',', "idempotent literal");
        const Complex z2 = parse_complex(scan);
        scan.skip_ws();
        scan.expect(']', "idempotent literal");
        scan.expect('e', "idempotent literal");
        result = Bicomplex::idempotent(z1, z2);
    } else {
        const TermSink sink = parse_sum(scan, /*allow_jk=*/true);
        result = Bicomplex::cartesian(sink.value[0], sink.value[1],
                                      sink.value[2], sink.value[3]);
    }
    scan.skip_ws();
    if (!scan.done()) {
        throw ParseError("unexpected trailing characters", scan.pos());
    }
    return result;
}

std::string format_idempotent(const Bicomplex& w) {
    return to_string_idempotent(w);
}

std::string format_cartesian(const Bicomplex& w) {
    return to_string_cartesian(w);
}

}  // namespace bctk::cli
