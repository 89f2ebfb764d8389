/*
Copyright (c) 2026 vcforge contributors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace vcforge {

// Concrete syntax shared by problem files, tactic scripts, the term
// grammar and the SMT-LIB checker. Atoms keep their source location so
// errors can point at the offending form.
struct Sexpr {
    enum class Kind { Atom, String, List };

    Kind kind = Kind::List;
    std::string text;          // Atom spelling or String contents
    std::vector<Sexpr> items;  // List children
    int line = 0;
    int col = 0;

    bool is_atom() const { return kind == Kind::Atom; }
    bool is_string() const { return kind == Kind::String; }
    bool is_list() const { return kind == Kind::List; }
    bool is_atom(const std::string& s) const { return kind == Kind::Atom && text == s; }

    // Head atom of a list, or "" when this is not a headed list.
    const std::string& head() const;

    std::size_t size() const { return items.size(); }
    const Sexpr& operator[](std::size_t i) const { return items.at(i); }

    std::string where() const;  // "line:col" for diagnostics
};

struct SexprError : std::runtime_error {
    int line, col;
    SexprError(const std::string& msg, int line_, int col_);
};

// Parses a single datum; trailing input is an error.
Sexpr parse_sexpr(const std::string& input);

// Parses a whole file: zero or more top-level data. Comments run from
// ';' to end of line.
std::vector<Sexpr> parse_sexprs(const std::string& input);

std::string print_sexpr(const Sexpr& e);

Sexpr atom(std::string text);
Sexpr str(std::string text);
Sexpr list(std::vector<Sexpr> items);

}  // namespace vcforge
