#include "conisym/poly_io.hpp"

#include <cctype>
#include <map>

namespace conisym {

namespace {

class Parser {
public:
    Parser(std::string_view text, std::span<const std::string> names)
        : text_(text), poly_(names.size()) {
        for (std::size_t i = 0; i < names.size(); ++i) vars_.emplace(names[i], i);
        if (vars_.size() != names.size())
            throw std::invalid_argument("duplicate variable name in declaration");
    }

    Polynomial run() {
        skip_ws();
        if (at_end()) throw ParseError("empty polynomial", pos_);
        bool negative = accept_sign();
        parse_term(negative);
        skip_ws();
        while (!at_end()) {
            char c = text_[pos_];
            if (c != '+' && c != '-') throw ParseError("expected '+' or '-'", pos_);
            ++pos_;
            skip_ws();
            parse_term(c == '-');
            skip_ws();
        }
        return poly_;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool accept_sign() {
        if (!at_end() && (text_[pos_] == '+' || text_[pos_] == '-')) {
            bool neg = text_[pos_] == '-';
            ++pos_;
            skip_ws();
            return neg;
        }
        return false;
    }

    void parse_term(bool negative) {
        Rational coeff = 1;
        Monomial mono(poly_.arity());
        bool saw_factor = false;

        if (at_end()) throw ParseError("expected a term", pos_);
        if (std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            coeff = parse_coeff();
        } else {
            parse_factor(mono);
            saw_factor = true;
        }
        skip_ws();
        while (!at_end() && text_[pos_] == '*') {
            ++pos_;
            skip_ws();
            parse_factor(mono);
            saw_factor = true;
            skip_ws();
        }
        (void)saw_factor;
        if (negative) coeff = -coeff;
        poly_.add_term(mono, coeff);
    }

    Rational parse_coeff() {
        Integer num = parse_integer();
        skip_ws();
        if (!at_end() && text_[pos_] == '/') {
            ++pos_;
            skip_ws();
            std::size_t at = pos_;
            Integer den = parse_integer();
            if (den <= 0) throw ParseError("denominator must be positive", at);
            Rational r(num, den);
            r.canonicalize();
            return r;
        }
        return Rational(num);
    }

    Integer parse_integer() {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError("expected an integer", start);
        return Integer(std::string(text_.substr(start, pos_ - start)), 10);
    }

    void parse_factor(Monomial& mono) {
        std::size_t start = pos_;
        if (at_end() || !(std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            throw ParseError("expected a variable name", pos_);
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        std::string name(text_.substr(start, pos_ - start));
        auto it = vars_.find(name);
        if (it == vars_.end()) throw ParseError("unknown variable '" + name + "'", start);
        unsigned power = 1;
        skip_ws();
        if (!at_end() && text_[pos_] == '^') {
            ++pos_;
            skip_ws();
            std::size_t at = pos_;
            Integer e = parse_integer();
            if (e <= 0 || !e.fits_uint_p()) throw ParseError("exponent must be a positive integer", at);
            power = static_cast<unsigned>(e.get_ui());
        }
        mono[it->second] += power;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::map<std::string, std::size_t, std::less<>> vars_;
    Polynomial poly_;
};

std::string format_monomial(const Monomial& m, std::span<const std::string> names) {
    std::string out;
    for (std::size_t i = 0; i < m.arity(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += names[i];
        if (m[i] > 1) {
            out += '^';
            out += std::to_string(m[i]);
        }
    }
    return out;
}

} // namespace

Polynomial parse_polynomial(std::string_view text, std::span<const std::string> var_names) {
    return Parser(text, var_names).run();
}

std::string format_polynomial(const Polynomial& p, std::span<const std::string> var_names) {
    if (var_names.size() != p.arity())
        throw std::invalid_argument("variable name list does not match arity");
    if (p.is_zero()) return "0";
    std::string out;
    // descending display order
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        Rational abs = c < 0 ? Rational(-c) : c;
        if (out.empty()) {
            if (c < 0) out += '-';
        } else {
            out += c < 0 ? " - " : " + ";
        }
        std::string mono = format_monomial(m, var_names);
        if (mono.empty()) {
            out += to_string(abs);
        } else if (abs == 1) {
            out += mono;
        } else {
            out += to_string(abs);
            out += '*';
            out += mono;
        }
    }
    return out;
}

std::vector<std::string> default_var_names(std::size_t arity) {
    std::vector<std::string> names;
    names.reserve(arity);
    for (std::size_t i = 1; i <= arity; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

} // namespace conisym
