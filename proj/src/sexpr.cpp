/*
Copyright (c) 2026 vcforge contributors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include "vcforge/sexpr.hpp"

#include <cctype>
#include <sstream>

namespace vcforge {

namespace {

const std::string kEmpty;

struct Lexer {
    const std::string& src;
    std::size_t pos = 0;
    int line = 1;
    int col = 1;

    explicit Lexer(const std::string& s) : src(s) {}

    [[noreturn]] void fail(const std::string& msg) const { throw SexprError(msg, line, col); }

    int peek() const { return pos < src.size() ? static_cast<unsigned char>(src[pos]) : -1; }

    int get() {
        int c = peek();
        if (c < 0) return c;
        ++pos;
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        return c;
    }

    void skip_ws() {
        for (;;) {
            int c = peek();
            if (c == ';') {
                while (peek() >= 0 && peek() != '\n') get();
            } else if (c >= 0 && std::isspace(c)) {
                get();
            } else {
                return;
            }
        }
    }

    bool atom_char(int c) const {
        if (c < 0 || std::isspace(c)) return false;
        return c != '(' && c != ')' && c != '"' && c != ';';
    }

    Sexpr datum() {
        skip_ws();
        int l = line, c = col;
        int ch = peek();
        if (ch < 0) fail("unexpected end of input");
        if (ch == '(') {
            get();
            Sexpr e;
            e.kind = Sexpr::Kind::List;
            e.line = l;
            e.col = c;
            for (;;) {
                skip_ws();
                if (peek() == ')') {
                    get();
                    return e;
                }
                if (peek() < 0) throw SexprError("unclosed '('", l, c);
                e.items.push_back(datum());
            }
        }
        if (ch == ')') fail("unexpected ')'");
        if (ch == '"') {
            get();
            Sexpr e;
            e.kind = Sexpr::Kind::String;
            e.line = l;
            e.col = c;
            for (;;) {
                int d = get();
                if (d < 0) throw SexprError("unterminated string", l, c);
                if (d == '"') return e;
                if (d == '\\') {
                    int esc = get();
                    if (esc == 'n')
                        e.text.push_back('\n');
                    else if (esc == '\\' || esc == '"')
                        e.text.push_back(static_cast<char>(esc));
                    else
                        fail("bad escape in string");
                } else {
                    e.text.push_back(static_cast<char>(d));
                }
            }
        }
        Sexpr e;
        e.kind = Sexpr::Kind::Atom;
        e.line = l;
        e.col = c;
        while (atom_char(peek())) e.text.push_back(static_cast<char>(get()));
        return e;
    }
};

void print_rec(const Sexpr& e, std::ostream& out) {
    switch (e.kind) {
        case Sexpr::Kind::Atom:
            out << e.text;
            return;
        case Sexpr::Kind::String: {
            out << '"';
            for (char c : e.text) {
                if (c == '"' || c == '\\') out << '\\';
                if (c == '\n') {
                    out << "\\n";
                    continue;
                }
                out << c;
            }
            out << '"';
            return;
        }
        case Sexpr::Kind::List: {
            out << '(';
            for (std::size_t i = 0; i < e.items.size(); ++i) {
                if (i) out << ' ';
                print_rec(e.items[i], out);
            }
            out << ')';
            return;
        }
    }
}

}  // namespace

SexprError::SexprError(const std::string& msg, int line_, int col_)
    : std::runtime_error(msg + " at " + std::to_string(line_) + ":" + std::to_string(col_)),
      line(line_),
      col(col_) {}

const std::string& Sexpr::head() const {
    if (kind == Kind::List && !items.empty() && items[0].kind == Kind::Atom) return items[0].text;
    return kEmpty;
}

std::string Sexpr::where() const { return std::to_string(line) + ":" + std::to_string(col); }

Sexpr parse_sexpr(const std::string& input) {
    Lexer lx(input);
    Sexpr e = lx.datum();
    lx.skip_ws();
    if (lx.peek() >= 0) lx.fail("trailing input after datum");
    return e;
}

std::vector<Sexpr> parse_sexprs(const std::string& input) {
    Lexer lx(input);
    std::vector<Sexpr> out;
    for (;;) {
        lx.skip_ws();
        if (lx.peek() < 0) return out;
        out.push_back(lx.datum());
    }
}

std::string print_sexpr(const Sexpr& e) {
    std::ostringstream out;
    print_rec(e, out);
    return out.str();
}

Sexpr atom(std::string text) {
    Sexpr e;
    e.kind = Sexpr::Kind::Atom;
    e.text = std::move(text);
    return e;
}

Sexpr str(std::string text) {
    Sexpr e;
    e.kind = Sexpr::Kind::String;
    e.text = std::move(text);
    return e;
}

Sexpr list(std::vector<Sexpr> items) {
    Sexpr e;
    e.kind = Sexpr::Kind::List;
    e.items = std::move(items);
    return e;
}

}  // namespace vcforge
