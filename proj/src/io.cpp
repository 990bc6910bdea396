#include "bideal/io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace bideal {

namespace {

struct Token {
    enum class Type { Ident, Int, Caret, Star, Slash, Plus, Minus, End };
    Type type;
    std::string text;
    std::size_t column;  // 1-based
};

class LineLexer {
public:
    LineLexer(const std::string& line, std::size_t line_no)
        : s_(line), line_(line_no) {}

    Token next() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        std::size_t col = pos_ + 1;
        if (pos_ >= s_.size() || s_[pos_] == '#')
            return Token{Token::Type::End, "", col};
        char c = s_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                    s_[pos_] == '_' || s_[pos_] == '\''))
                ++pos_;
            return Token{Token::Type::Ident, s_.substr(start, pos_ - start), col};
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            return Token{Token::Type::Int, s_.substr(start, pos_ - start), col};
        }
        ++pos_;
        switch (c) {
            case '^': return Token{Token::Type::Caret, "^", col};
            case '*': return Token{Token::Type::Star, "*", col};
            case '/': return Token{Token::Type::Slash, "/", col};
            case '+': return Token{Token::Type::Plus, "+", col};
            case '-': return Token{Token::Type::Minus, "-", col};
            default:
                throw parse_error(std::string("unexpected character '") + c + "'",
                                  line_, col);
        }
    }

private:
    const std::string& s_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

struct TokenStream {
    std::vector<Token> toks;
    std::size_t line;
    std::size_t at = 0;

    TokenStream(const std::string& text, std::size_t line_no) : line(line_no) {
        LineLexer lex(text, line_no);
        for (;;) {
            Token t = lex.next();
            bool end = t.type == Token::Type::End;
            toks.push_back(std::move(t));
            if (end) break;
        }
    }
    const Token& peek() const { return toks[at]; }
    Token take() {
        Token t = toks[at];
        if (t.type != Token::Type::End) ++at;  // End is sticky
        return t;
    }
    bool done() const { return peek().type == Token::Type::End; }
    [[noreturn]] void fail(const std::string& msg) const {
        throw parse_error(msg, line, peek().column);
    }
};

struct RawTerm {
    mpq_class coeff;
    ExponentVector expo;
};

// factor := var [^ positive-integer]
void parse_factor(TokenStream& ts, const std::map<std::string, std::size_t>& vars,
                  ExponentVector& expo) {
    Token id = ts.take();
    auto it = vars.find(id.text);
    if (it == vars.end())
        throw parse_error("unknown variable '" + id.text + "'", ts.line, id.column);
    Natural e = 1;
    if (ts.peek().type == Token::Type::Caret) {
        ts.take();
        if (ts.peek().type != Token::Type::Int) ts.fail("expected exponent");
        Token ex = ts.take();
        e = Natural(ex.text);
        if (e <= 0)
            throw parse_error("exponent must be a positive integer", ts.line, ex.column);
    }
    expo[it->second] += e;
}

// term := coeff [* monomial] | monomial, with the literal 1 denoting x^0.
RawTerm parse_term(TokenStream& ts, const std::map<std::string, std::size_t>& vars,
                   std::size_t arity) {
    RawTerm t{1, ExponentVector(arity)};
    bool have_monomial = false;
    if (ts.peek().type == Token::Type::Int) {
        Token num = ts.take();
        t.coeff = mpq_class(num.text);
        if (ts.peek().type == Token::Type::Slash) {
            ts.take();
            if (ts.peek().type != Token::Type::Int) ts.fail("expected denominator");
            Token den = ts.take();
            mpz_class d(den.text);
            if (d == 0)
                throw parse_error("denominator must be a positive integer", ts.line,
                                  den.column);
            t.coeff /= d;
        }
        if (t.coeff == 0)
            throw parse_error("zero coefficient", ts.line, num.column);
        if (ts.peek().type == Token::Type::Star) {
            ts.take();
            if (ts.peek().type != Token::Type::Ident) ts.fail("expected variable");
        } else {
            return t;  // bare constant = coeff * x^0
        }
    }
    if (ts.peek().type != Token::Type::Ident) ts.fail("expected term");
    for (;;) {
        parse_factor(ts, vars, t.expo);
        have_monomial = true;
        if (ts.peek().type == Token::Type::Star) {
            ts.take();
            if (ts.peek().type != Token::Type::Ident) ts.fail("expected variable");
            continue;
        }
        break;
    }
    (void)have_monomial;
    return t;
}

// line := term | term SIGN term
BinomialElement parse_body_line(TokenStream& ts,
                                const std::map<std::string, std::size_t>& vars,
                                std::size_t arity, unsigned long characteristic,
                                const TermOrder& ambient) {
    RawTerm t1 = parse_term(ts, vars, arity);
    Scalar c1 = Scalar::from_rational(characteristic, t1.coeff);
    if (ts.done()) {
        BinomialElement e = normalize(c1, t1.expo, Scalar::zero(characteristic),
                                      ExponentVector(arity), ambient);
        if (e.is_zero())
            throw parse_error("generator vanishes in this field", ts.line,
                              ts.peek().column);
        return e;
    }
    Token sign = ts.take();
    if (sign.type != Token::Type::Plus && sign.type != Token::Type::Minus)
        throw parse_error("expected + or - between terms", ts.line, sign.column);
    RawTerm t2 = parse_term(ts, vars, arity);
    if (!ts.done()) ts.fail("expected end of line after second term");
    Scalar c2 = Scalar::from_rational(characteristic, t2.coeff);
    if (sign.type == Token::Type::Minus) c2 = -c2;
    BinomialElement e = normalize(c1, t1.expo, c2, t2.expo, ambient);
    if (e.is_zero())
        throw parse_error("generator vanishes in this field", ts.line, sign.column);
    return e;
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    lines.push_back(cur);
    return lines;
}

bool blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

IdealPresentation parse_ideal(const std::string& text,
                              std::optional<unsigned long> char_override) {
    std::vector<std::string> lines = split_lines(text);
    std::size_t ln = 0;
    unsigned long characteristic = 0;
    bool have_field = false, have_vars = false;
    std::vector<std::string> vars;
    std::map<std::string, std::size_t> var_index;
    std::vector<BinomialElement> gens;
    std::optional<TermOrder> ambient;

    for (std::size_t li = 0; li < lines.size(); ++li) {
        ln = li + 1;
        if (blank_or_comment(lines[li])) continue;
        TokenStream ts(lines[li], ln);
        if (!have_field) {
            Token t = ts.take();
            if (t.type != Token::Type::Ident || t.text != "field")
                throw parse_error("expected 'field Q' or 'field GF <p>'", ln, t.column);
            Token f = ts.take();
            if (f.type == Token::Type::Ident && f.text == "Q") {
                characteristic = 0;
            } else if (f.type == Token::Type::Ident && f.text == "GF") {
                if (ts.peek().type != Token::Type::Int) ts.fail("expected prime modulus");
                Token p = ts.take();
                mpz_class pz(p.text);
                if (!pz.fits_ulong_p())
                    throw parse_error("modulus too large", ln, p.column);
                characteristic = pz.get_ui();
                if (!is_prime(characteristic))
                    throw parse_error("modulus must be prime", ln, p.column);
            } else {
                throw parse_error("expected 'Q' or 'GF <p>'", ln, f.column);
            }
            if (!ts.done()) ts.fail("trailing tokens after field line");
            if (char_override) {
                if (*char_override != 0 && !is_prime(*char_override))
                    throw usage_error("characteristic override must be 0 or prime");
                characteristic = *char_override;
            }
            have_field = true;
            continue;
        }
        if (!have_vars) {
            Token t = ts.take();
            if (t.type != Token::Type::Ident || t.text != "vars")
                throw parse_error("expected 'vars ...' line", ln, t.column);
            while (!ts.done()) {
                Token v = ts.take();
                if (v.type != Token::Type::Ident)
                    throw parse_error("expected variable name", ln, v.column);
                if (var_index.count(v.text))
                    throw parse_error("duplicate variable '" + v.text + "'", ln,
                                      v.column);
                var_index[v.text] = vars.size();
                vars.push_back(v.text);
            }
            if (vars.empty()) throw parse_error("vars line lists no variables", ln, 1);
            have_vars = true;
            ambient = TermOrder::degrevlex(vars.size());
            continue;
        }
        gens.push_back(
            parse_body_line(ts, var_index, vars.size(), characteristic, *ambient));
    }
    if (!have_field) throw parse_error("missing field line", lines.size(), 1);
    if (!have_vars) throw parse_error("missing vars line", lines.size(), 1);
    return make_presentation(characteristic, std::move(vars), gens);
}

IdealPresentation parse_ideal_file(const std::string& path,
                                   std::optional<unsigned long> char_override) {
    return parse_ideal(read_file(path), char_override);
}

std::string monomial_str(const ExponentVector& e,
                         const std::vector<std::string>& vars) {
    if (e.arity() != vars.size())
        throw usage_error("monomial arity does not match variable names");
    std::string s;
    for (std::size_t i = 0; i < e.arity(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += vars[i];
        if (e[i] != 1) s += "^" + e[i].get_str();
    }
    return s.empty() ? "1" : s;
}

namespace {

// coefficient * monomial with the conventions: coefficient 1 prints as the
// bare monomial, a constant term prints as the bare coefficient.
std::string scaled_monomial_str(const Scalar& c, const ExponentVector& e,
                                const std::vector<std::string>& vars) {
    std::string m = monomial_str(e, vars);
    if (c.is_one()) return m;
    if (m == "1") return c.str();
    return c.str() + "*" + m;
}

}  // namespace

std::string term_str(const Term& t, const std::vector<std::string>& vars) {
    return scaled_monomial_str(t.coeff, t.expo, vars);
}

std::string element_str(const BinomialElement& b,
                        const std::vector<std::string>& vars) {
    switch (b.kind()) {
        case BinomialElement::Kind::Zero: return "0";
        case BinomialElement::Kind::Monomial: return monomial_str(b.lead(), vars);
        case BinomialElement::Kind::Binomial: {
            // Print x^lead SIGN |tc|*x^trail with the sign folded out so the
            // serialized coefficient is never negative.
            Scalar tc = b.trail_coeff();
            std::string lead = monomial_str(b.lead(), vars);
            if (tc.characteristic() == 0 && tc.rational() > 0)
                return lead + " + " + scaled_monomial_str(tc, b.trail(), vars);
            return lead + " - " + scaled_monomial_str(-tc, b.trail(), vars);
        }
    }
    return "0";
}

std::string serialize_ideal(const IdealPresentation& p) {
    std::string s;
    if (p.characteristic == 0)
        s += "field Q\n";
    else
        s += "field GF " + std::to_string(p.characteristic) + "\n";
    s += "vars";
    for (const auto& v : p.vars) s += " " + v;
    s += "\n";
    for (const auto& g : p.generators) s += element_str(g, p.vars) + "\n";
    return s;
}

BinomialElement parse_element(const std::string& text, const IdealPresentation& ctx) {
    std::map<std::string, std::size_t> var_index;
    for (std::size_t i = 0; i < ctx.vars.size(); ++i) var_index[ctx.vars[i]] = i;
    TokenStream ts(text, 1);
    TermOrder ambient = TermOrder::degrevlex(ctx.arity());
    BinomialElement e =
        parse_body_line(ts, var_index, ctx.arity(), ctx.characteristic, ambient);
    return e;
}

ExponentVector parse_monomial(const std::string& text, const IdealPresentation& ctx) {
    BinomialElement e = parse_element(text, ctx);
    if (!e.is_monomial())
        throw usage_error("expected a monomial expression: " + text);
    return e.lead();
}

IntegerMatrix parse_matrix(const std::string& text) {
    std::vector<std::string> lines = split_lines(text);
    std::vector<std::pair<std::string, std::size_t>> words;  // token, line
    for (std::size_t li = 0; li < lines.size(); ++li) {
        std::string line = lines[li];
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream in(line);
        std::string w;
        while (in >> w) words.emplace_back(w, li + 1);
    }
    if (words.size() < 2) throw parse_error("expected 'rows cols' header", 1, 1);
    auto parse_count = [&](const std::pair<std::string, std::size_t>& w) {
        try {
            mpz_class z(w.first);
            if (z < 0 || !z.fits_ulong_p()) throw std::invalid_argument("range");
            return static_cast<std::size_t>(z.get_ui());
        } catch (const std::exception&) {
            throw parse_error("bad dimension '" + w.first + "'", w.second, 1);
        }
    };
    std::size_t rows = parse_count(words[0]);
    std::size_t cols = parse_count(words[1]);
    if (words.size() != 2 + rows * cols)
        throw parse_error("expected " + std::to_string(rows * cols) +
                              " entries, found " + std::to_string(words.size() - 2),
                          words.back().second, 1);
    IntegerMatrix m(rows, cols);
    for (std::size_t k = 0; k < rows * cols; ++k) {
        const auto& w = words[2 + k];
        try {
            m.entries[k] = mpz_class(w.first);
        } catch (const std::exception&) {
            throw parse_error("bad integer '" + w.first + "'", w.second, 1);
        }
    }
    return m;
}

IntegerMatrix parse_matrix_file(const std::string& path) {
    return parse_matrix(read_file(path));
}

std::string serialize_matrix(const IntegerMatrix& m) {
    std::string s = std::to_string(m.rows) + " " + std::to_string(m.cols) + "\n";
    for (std::size_t r = 0; r < m.rows; ++r) {
        for (std::size_t c = 0; c < m.cols; ++c) {
            if (c) s += " ";
            s += m.at(r, c).get_str();
        }
        s += "\n";
    }
    return s;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw usage_error("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace bideal
