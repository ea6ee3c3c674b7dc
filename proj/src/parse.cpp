#include "asl/parse.hpp"

#include <cctype>
#include <charconv>
#include <string>

#include "asl/errors.hpp"

namespace asl {

namespace {

class SeriesParser {
  public:
    SeriesParser(std::string_view text, const FieldPtr &field, std::int64_t precision)
        : text_(text), field_(field), prec_(precision) {}

    LaurentSeries parse() {
        skip_space();
        if (pos_ == text_.size()) {
            throw ParseError("empty expression", pos_);
        }
        LaurentSeries value = series();
        skip_space();
        if (pos_ != text_.size()) {
            throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        }
        return value.truncated(prec_);
    }

  private:
    LaurentSeries series() {
        LaurentSeries acc = term();
        for (;;) {
            skip_space();
            if (accept('+') || accept('-')) {
                acc = acc + term();
            } else {
                return acc;
            }
        }
    }

    LaurentSeries term() {
        LaurentSeries acc = factor();
        for (;;) {
            skip_space();
            if (accept('*')) {
                acc = acc * factor();
            } else {
                return acc;
            }
        }
    }

    LaurentSeries factor() {
        skip_space();
        const std::size_t start = pos_;
        if (peek_identifier() == "x") {
            pos_ += 1;
            skip_space();
            const std::int64_t e = accept('^') ? integer() : 1;
            return LaurentSeries::monomial(field_, field_->one(), e);
        }
        if (peek_identifier() == "g") {
            pos_ += 1;
            skip_space();
            const std::int64_t e = accept('^') ? integer() : 1;
            FqElem value = field_->pow(field_->gen(), static_cast<std::uint64_t>(e < 0 ? -e : e));
            if (e < 0) {
                if (value.is_zero()) {
                    throw DivisionByZero("negative power of g, which is zero in this field");
                }
                value = field_->inv(value);
            }
            return LaurentSeries::constant(field_, value);
        }
        LaurentSeries base = primary();
        skip_space();
        if (accept('^')) {
            const std::int64_t e = integer();
            if (e < 0 && base.is_exact() && base.terms().size() > 1) {
                base = base.truncated(prec_);
            }
            try {
                return power(base, e).truncated(prec_);
            } catch (const DivisionByZero &) {
                throw ParseError("negative power of zero", start);
            }
        }
        return base;
    }

    LaurentSeries primary() {
        skip_space();
        if (pos_ == text_.size()) {
            throw ParseError("unexpected end of input", pos_);
        }
        const char c = text_[pos_];
        if (accept('(')) {
            LaurentSeries inner = series();
            skip_space();
            if (!accept(')')) {
                throw ParseError("expected ')'", pos_);
            }
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            }
            const bool odd = ((text_[pos_ - 1] - '0') & 1) != 0;
            return LaurentSeries::constant(field_, odd ? field_->one() : field_->zero());
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            const std::string_view name = peek_identifier();
            pos_ += name.size();
            if (name == "a0") {
                return LaurentSeries::constant(field_, field_->trace_one_element());
            }
            throw UnknownSymbol(std::string(name), start);
        }
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    std::int64_t integer() {
        skip_space();
        const std::size_t start = pos_;
        bool negative = false;
        if (accept('-')) {
            negative = true;
            skip_space();
        }
        const std::size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (pos_ == digits) {
            throw ParseError("expected an integer exponent", start);
        }
        std::int64_t value = 0;
        const auto [ptr, ec] = std::from_chars(text_.data() + digits, text_.data() + pos_, value);
        if (ec != std::errc{} || value > (std::int64_t{1} << 30)) {
            throw ParseError("exponent out of range", digits);
        }
        (void)ptr;
        return negative ? -value : value;
    }

    std::string_view peek_identifier() const {
        std::size_t end = pos_;
        if (end < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) {
            ++end;
            while (end < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) {
                ++end;
            }
        }
        return text_.substr(pos_, end - pos_);
    }

    bool accept(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    std::string_view text_;
    const FieldPtr &field_;
    std::int64_t prec_;
    std::size_t pos_ = 0;
};

} // namespace

LaurentSeries parse_series(std::string_view text, const FieldPtr &field, std::int64_t precision) {
    return SeriesParser(text, field, precision).parse();
}

FqElem parse_element(std::string_view text, const FieldPtr &field) {
    const LaurentSeries s = SeriesParser(text, field, LaurentSeries::kExact).parse();
    const auto terms = s.terms();
    if (terms.empty()) {
        return field->zero();
    }
    if (terms.size() != 1 || terms.begin()->first != 0) {
        throw ParseError("expected a residue-field element", 0);
    }
    return terms.begin()->second;
}

std::uint32_t parse_modulus(std::string_view text) {
    std::string compact;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            compact += c;
        }
    }
    if (compact.size() > 2 && compact[0] == '0' && (compact[1] == 'x' || compact[1] == 'b')) {
        const int base = compact[1] == 'x' ? 16 : 2;
        std::uint32_t value = 0;
        const auto [ptr, ec] = std::from_chars(compact.data() + 2, compact.data() + compact.size(), value, base);
        if (ec != std::errc{} || ptr != compact.data() + compact.size()) {
            throw ParseError("malformed modulus literal", 0);
        }
        return value;
    }
    std::uint32_t value = 0;
    std::size_t pos = 0;
    while (pos < compact.size()) {
        int exponent = 0;
        if (compact[pos] == '1') {
            ++pos;
        } else if (compact[pos] == 'g') {
            ++pos;
            exponent = 1;
            if (pos < compact.size() && compact[pos] == '^') {
                ++pos;
                const auto [ptr, ec] = std::from_chars(compact.data() + pos, compact.data() + compact.size(), exponent);
                if (ec != std::errc{} || exponent < 0 || exponent > 31) {
                    throw ParseError("bad exponent in modulus", pos);
                }
                pos = static_cast<std::size_t>(ptr - compact.data());
            }
        } else {
            throw ParseError("bad term in modulus", pos);
        }
        value ^= std::uint32_t{1} << exponent;
        if (pos < compact.size()) {
            if (compact[pos] != '+') {
                throw ParseError("expected '+' in modulus", pos);
            }
            ++pos;
            if (pos == compact.size()) {
                throw ParseError("trailing '+' in modulus", pos);
            }
        }
    }
    if (value == 0) {
        throw ParseError("empty modulus", 0);
    }
    return value;
}

} // namespace asl
