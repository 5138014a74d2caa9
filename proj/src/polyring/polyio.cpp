#include "lexgb/polyio.hpp"

#include <cctype>
#include <stdexcept>

namespace lexgb {

namespace {

std::string monomial_text(const VarTable& vars, const Monomial& m, bool latex) {
    std::string out;
    for (std::size_t i = 0; i < vars.rank(); ++i) {
        const unsigned e = m[i];
        if (e == 0) continue;
        if (!out.empty() && !latex) out += '*';
        out += vars.display_name(i);
        if (e > 1) {
            const std::string es = std::to_string(e);
            out += latex && es.size() > 1 ? "^{" + es + "}" : "^" + es;
        }
    }
    return out;
}

std::string coeff_latex(const Rational& c) {
    if (c.is_integer()) return c.numerator().get_str();
    return "\\frac{" + c.numerator().get_str() + "}{" + c.denominator().get_str() + "}";
}

std::string render(const Polynomial& f, bool latex) {
    if (f.is_zero()) return "0";
    const VarTable& vars = *f.ring();
    std::string out;
    bool first = true;
    for (const auto& t : f.terms()) {
        const bool negative = t.coeff.sign() < 0;
        const Rational mag = t.coeff.abs();
        if (first)
            out += negative ? "-" : "";
        else
            out += latex ? (negative ? "-" : "+") : (negative ? " - " : " + ");
        first = false;
        const std::string mono = monomial_text(vars, t.mono, latex);
        if (mono.empty()) {
            out += latex ? coeff_latex(mag) : mag.to_string();
        } else if (mag.is_one()) {
            out += mono;
        } else {
            out += latex ? coeff_latex(mag) + mono : mag.to_string() + "*" + mono;
        }
    }
    return out;
}

class Parser {
public:
    Parser(std::string_view text, const Ring& ring) : s_(text), ring_(ring) {}

    Polynomial parse() {
        Polynomial acc(ring_);
        skip_ws();
        if (at_end()) fail("empty polynomial");
        bool first = true;
        while (!at_end()) {
            Rational sign(1);
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? Rational(-1) : Rational(1);
                ++pos_;
                skip_ws();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            acc += parse_term().scaled(sign);
            skip_ws();
        }
        return acc;
    }

private:
    Polynomial parse_term() {
        Rational coeff(1);
        Monomial mono(ring_->rank());
        bool any = false;
        while (true) {
            skip_ws();
            if (at_end() || peek() == '+' || peek() == '-') break;
            if (any && peek() == '*') {
                ++pos_;
                skip_ws();
            }
            if (at_end()) fail("dangling '*'");
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                coeff *= parse_number();
            } else if (std::isalpha(static_cast<unsigned char>(peek()))) {
                const std::size_t idx = parse_variable();
                const unsigned e = parse_exponent();
                Monomial factor(ring_->rank());
                factor.set(idx, e);
                mono = mono * factor;
            } else {
                fail(std::string("unexpected character '") + peek() + "'");
            }
            any = true;
        }
        if (!any) fail("missing term");
        return Polynomial::term(ring_, coeff, std::move(mono));
    }

    Rational parse_number() {
        const std::string num = digits();
        if (!at_end() && peek() == '/') {
            ++pos_;
            const std::string den = digits();
            if (den.empty()) fail("missing denominator");
            if (BigInt(den) == 0) fail("zero denominator");
            return Rational(BigInt(num), BigInt(den));
        }
        return Rational(BigInt(num));
    }

    std::size_t parse_variable() {
        std::string name;
        while (!at_end() && std::isalnum(static_cast<unsigned char>(peek()))) name += s_[pos_++];
        if (s_.substr(pos_, 3) == "_{-") {
            pos_ += 3;
            name += digits();
            expect('}');
        }
        const auto idx = ring_->index_of(name);
        if (!idx) fail("unknown variable '" + name + "'");
        return *idx;
    }

    unsigned parse_exponent() {
        if (at_end() || peek() != '^') return 1;
        ++pos_;
        const bool braced = !at_end() && peek() == '{';
        if (braced) ++pos_;
        const std::string e = digits();
        if (e.empty()) fail("missing exponent");
        if (braced) expect('}');
        if (e.size() > 5) fail("exponent too large");
        return static_cast<unsigned>(std::stoul(e));
    }

    std::string digits() {
        std::string d;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) d += s_[pos_++];
        return d;
    }

    void expect(char c) {
        if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
    }

    std::string_view s_;
    const Ring& ring_;
    std::size_t pos_ = 0;
};

}  // namespace

std::string to_text(const Polynomial& f) { return render(f, false); }

std::string to_latex(const Polynomial& f) { return render(f, true); }

Polynomial parse_polynomial(std::string_view text, const Ring& ring) { return Parser(text, ring).parse(); }

}  // namespace lexgb
