#include "qconc/ketparse.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <vector>

namespace qconc {

namespace {

std::string fmt12(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

struct Term {
    Complex coeff;
    std::uint64_t bits = 0;
    int width = 0;
    std::size_t offset = 0; // byte position of the ket, for width diagnostics
};

class KetParser {
public:
    KetParser(std::string_view text, bool spin_letters, int max_qubits)
        : text_(text), spin_(spin_letters), max_qubits_(max_qubits) {}

    std::vector<Term> run() {
        skip_ws();
        if (at_end()) throw EmptyExpression("empty ket expression", 0);
        std::vector<Term> terms = parse_expr();
        skip_ws();
        if (!at_end()) fail("'+', '-' or end of input");
        return terms;
    }

private:
    std::string_view text_;
    bool spin_;
    int max_qubits_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& expected) const {
        const std::string got =
            at_end() ? "end of input" : "'" + std::string(1, text_[pos_]) + "'";
        throw SyntaxError("at byte " + std::to_string(pos_) + ": expected " + expected +
                              ", found " + got,
                          pos_);
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    bool consume(char c) {
        if (!at_end() && peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    static void append_scaled(std::vector<Term>& into, std::vector<Term> terms, Complex scale) {
        for (Term& t : terms) {
            t.coeff *= scale;
            into.push_back(t);
        }
    }

    std::vector<Term> parse_expr() {
        std::vector<Term> terms;
        skip_ws();
        Complex sign{1.0, 0.0};
        if (consume('-')) {
            sign = Complex{-1.0, 0.0};
        } else {
            consume('+');
        }
        append_scaled(terms, parse_term(), sign);
        while (true) {
            skip_ws();
            if (consume('+')) {
                append_scaled(terms, parse_term(), Complex{1.0, 0.0});
            } else if (consume('-')) {
                append_scaled(terms, parse_term(), Complex{-1.0, 0.0});
            } else {
                break;
            }
        }
        return terms;
    }

    std::vector<Term> parse_term() {
        skip_ws();
        if (at_end()) fail("a coefficient, '(' or '|'");
        Complex coeff{1.0, 0.0};
        const char c = peek();
        if (c == '-' || c == 'i' || c == 's' || c == '.' ||
            std::isdigit(static_cast<unsigned char>(c))) {
            coeff = parse_coeff();
        }
        skip_ws();
        if (!at_end() && peek() == '(') {
            ++pos_;
            std::vector<Term> inner = parse_expr();
            skip_ws();
            if (!consume(')')) fail("')'");
            for (Term& t : inner) t.coeff *= coeff;
            return inner;
        }
        if (!at_end() && peek() == '|') {
            Term t = parse_ket_literal();
            t.coeff = coeff;
            return {t};
        }
        fail("'(' or '|'");
    }

    Complex parse_coeff() {
        Complex value = parse_factor();
        while (true) {
            skip_ws();
            if (consume('/')) {
                value /= parse_factor();
                continue;
            }
            if (!at_end() && peek() == '*') {
                ++pos_;
                skip_ws();
                if (!at_end() && (peek() == '|' || peek() == '(')) break; // separator star
                value *= parse_factor();
                continue;
            }
            break;
        }
        return value;
    }

    Complex parse_factor() {
        skip_ws();
        if (at_end()) fail("a number, sqrt(...), 'i' or '-'");
        const char c = peek();
        if (c == '-') {
            ++pos_;
            return -parse_factor();
        }
        if (c == 'i') {
            ++pos_;
            return Complex{0.0, 1.0};
        }
        if (c == 's') {
            if (text_.substr(pos_, 4) != "sqrt") fail("'sqrt'");
            pos_ += 4;
            skip_ws();
            if (!consume('(')) fail("'(' after sqrt");
            skip_ws();
            const std::size_t number_at = pos_;
            const double x = parse_number();
            if (x < 0.0) {
                throw SyntaxError("at byte " + std::to_string(number_at) +
                                      ": sqrt needs a non-negative number",
                                  number_at);
            }
            skip_ws();
            if (!consume(')')) fail("')'");
            return Complex{std::sqrt(x), 0.0};
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            return Complex{parse_number(), 0.0};
        }
        fail("a number, sqrt(...), 'i' or '-'");
    }

    double parse_number() {
        const std::size_t start = pos_;
        bool digits = false;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            ++pos_;
            digits = true;
        }
        if (!at_end() && peek() == '.') {
            ++pos_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
                ++pos_;
                digits = true;
            }
        }
        if (!digits) {
            pos_ = start;
            fail("a number");
        }
        if (!at_end() && (peek() == 'e' || peek() == 'E')) {
            const std::size_t mark = pos_;
            ++pos_;
            if (!at_end() && (peek() == '+' || peek() == '-')) ++pos_;
            bool exp_digits = false;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
                ++pos_;
                exp_digits = true;
            }
            if (!exp_digits) pos_ = mark; // the 'e' was not an exponent
        }
        double value = 0.0;
        const auto result = std::from_chars(text_.data() + start, text_.data() + pos_, value);
        if (result.ec != std::errc{}) {
            pos_ = start;
            fail("a valid number");
        }
        return value;
    }

    Term parse_ket_literal() {
        skip_ws();
        const std::size_t start = pos_;
        if (!consume('|')) fail("'|'");
        std::uint64_t bits = 0;
        int width = 0;
        while (!at_end()) {
            const char c = peek();
            int bit = -1;
            if (spin_) {
                bit = c == 'u' ? 1 : (c == 'd' ? 0 : -1);
            } else {
                bit = c == '1' ? 1 : (c == '0' ? 0 : -1);
            }
            if (bit < 0) break;
            if (width >= max_qubits_) {
                throw CapacityExceeded("ket wider than the maximum of " +
                                       std::to_string(max_qubits_) + " qubits");
            }
            bits = (bits << 1) | static_cast<std::uint64_t>(bit);
            ++width;
            ++pos_;
        }
        if (width == 0) fail(spin_ ? "'u' or 'd' inside the ket" : "'0' or '1' inside the ket");
        if (!consume('>')) fail("'>'");
        return Term{Complex{1.0, 0.0}, bits, width, start};
    }
};

KetParseResult evaluate_terms(const std::vector<Term>& terms) {
    const int width = terms.front().width;
    for (const Term& t : terms) {
        if (t.width != width) {
            throw WidthMismatch("ket at byte " + std::to_string(t.offset) + " has width " +
                                    std::to_string(t.width) + ", expected " + std::to_string(width),
                                t.offset);
        }
    }
    std::vector<Complex> amps(std::uint64_t{1} << width, Complex{0.0, 0.0});
    for (const Term& t : terms) amps[t.bits] += t.coeff;

    PureState raw(width, std::move(amps));
    const double raw_norm = raw.norm();
    return KetParseResult{normalize(raw), std::abs(raw_norm - 1.0) > 1e-6, raw_norm};
}

void append_formatted_term(std::string& out, double magnitude, bool negative, bool imaginary,
                           const std::string& bits) {
    if (out.empty()) {
        if (negative) out += '-';
    } else {
        out += negative ? " - " : " + ";
    }
    out += fmt12(magnitude);
    if (imaginary) out += "*i";
    out += '|';
    out += bits;
    out += '>';
}

std::string bits_string(std::uint64_t index, int width) {
    std::string s(static_cast<std::size_t>(width), '0');
    for (int j = 0; j < width; ++j) {
        if ((index >> (width - 1 - j)) & 1u) s[static_cast<std::size_t>(j)] = '1';
    }
    return s;
}

} // namespace

KetParseResult parse_ket(std::string_view text, bool spin_letters, int max_qubits) {
    return evaluate_terms(KetParser(text, spin_letters, max_qubits).run());
}

std::string format_ket(const PureState& state, double threshold) {
    if (threshold < 0.0 || threshold >= 1.0) throw OutOfRange("threshold must be in [0, 1)");
    std::string out;
    for (std::uint64_t i = 0; i < state.dim(); ++i) {
        const Complex a = state[i];
        if (std::abs(a) <= threshold) continue;
        const std::string bits = bits_string(i, state.num_qubits());
        if (a.real() != 0.0) append_formatted_term(out, std::abs(a.real()), a.real() < 0.0, false, bits);
        if (a.imag() != 0.0) append_formatted_term(out, std::abs(a.imag()), a.imag() < 0.0, true, bits);
    }
    return out;
}

KetParseResult parse_amplitude_file(std::string_view text, int max_qubits) {
    int width = -1;
    std::vector<Complex> amps;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        const std::size_t line_start = pos;
        pos = eol + 1;

        if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }

        // Tokenize on whitespace, remembering offsets for diagnostics.
        std::vector<std::pair<std::string_view, std::size_t>> tokens;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            const std::size_t start = i;
            while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            if (i > start) tokens.emplace_back(line.substr(start, i - start), line_start + start);
        }
        if (tokens.empty()) continue;

        if (width < 0) {
            if (tokens[0].first != "qubits" || tokens.size() != 2) {
                throw SyntaxError("at byte " + std::to_string(tokens[0].second) +
                                      ": expected header 'qubits N'",
                                  tokens[0].second);
            }
            int n = 0;
            const auto [ptr, ec] = std::from_chars(
                tokens[1].first.data(), tokens[1].first.data() + tokens[1].first.size(), n);
            if (ec != std::errc{} || ptr != tokens[1].first.data() + tokens[1].first.size() || n < 1) {
                throw SyntaxError("at byte " + std::to_string(tokens[1].second) +
                                      ": expected a positive qubit count",
                                  tokens[1].second);
            }
            if (n > max_qubits) {
                throw CapacityExceeded("amplitude file declares " + std::to_string(n) +
                                       " qubits, maximum is " + std::to_string(max_qubits));
            }
            width = n;
            amps.assign(std::uint64_t{1} << width, Complex{0.0, 0.0});
            continue;
        }

        if (tokens.size() != 3) {
            throw SyntaxError("at byte " + std::to_string(tokens[0].second) +
                                  ": expected '<bitstring> <re> <im>'",
                              tokens[0].second);
        }
        const auto [bit_text, bit_at] = tokens[0];
        if (static_cast<int>(bit_text.size()) != width) {
            throw WidthMismatch("at byte " + std::to_string(bit_at) + ": bitstring width " +
                                    std::to_string(bit_text.size()) + ", expected " +
                                    std::to_string(width),
                                bit_at);
        }
        std::uint64_t index = 0;
        for (char c : bit_text) {
            if (c != '0' && c != '1') {
                throw SyntaxError("at byte " + std::to_string(bit_at) + ": bitstring must be 0/1",
                                  bit_at);
            }
            index = (index << 1) | static_cast<std::uint64_t>(c - '0');
        }
        double re = 0.0;
        double im = 0.0;
        for (int part = 0; part < 2; ++part) {
            const auto [value_text, value_at] = tokens[static_cast<std::size_t>(1 + part)];
            double value = 0.0;
            const auto [ptr, ec] =
                std::from_chars(value_text.data(), value_text.data() + value_text.size(), value);
            if (ec != std::errc{} || ptr != value_text.data() + value_text.size()) {
                throw SyntaxError("at byte " + std::to_string(value_at) + ": expected a number",
                                  value_at);
            }
            (part == 0 ? re : im) = value;
        }
        amps[index] += Complex{re, im};
    }
    if (width < 0) throw EmptyExpression("missing 'qubits N' header", text.size());

    PureState raw(width, std::move(amps));
    const double raw_norm = raw.norm();
    return KetParseResult{normalize(raw), std::abs(raw_norm - 1.0) > 1e-6, raw_norm};
}

std::string format_amplitude_file(const PureState& state, double threshold) {
    if (threshold < 0.0 || threshold >= 1.0) throw OutOfRange("threshold must be in [0, 1)");
    std::string out = "qubits " + std::to_string(state.num_qubits()) + "\n";
    for (std::uint64_t i = 0; i < state.dim(); ++i) {
        const Complex a = state[i];
        if (std::abs(a) <= threshold) continue;
        out += bits_string(i, state.num_qubits());
        out += ' ';
        out += fmt12(a.real());
        out += ' ';
        out += fmt12(a.imag());
        out += '\n';
    }
    return out;
}

KetParseResult parse_state_auto(std::string_view text, bool spin_letters, int max_qubits) {
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        } else if (text[pos] == '#') {
            const std::size_t eol = text.find('\n', pos);
            pos = eol == std::string_view::npos ? text.size() : eol + 1;
        } else {
            break;
        }
    }
    if (text.substr(pos).starts_with("qubits")) {
        return parse_amplitude_file(text, max_qubits);
    }
    return parse_ket(text, spin_letters, max_qubits);
}

} // namespace qconc
