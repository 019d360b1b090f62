/*
 *  Copyright (C) 2026  The coreshrink authors
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 *
 */

#include "coreshrink/AspParser.h"

#include <cctype>
#include <sstream>

namespace coreshrink {

namespace {

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) {}

    void skipLayout() {
        for (;;) {
            while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
            if (pos_ < text_.size() && text_[pos_] == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
                continue;
            }
            break;
        }
    }

    bool atEnd() {
        skipLayout();
        return pos_ >= text_.size();
    }

    char peek() {
        skipLayout();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool tryConsume(const std::string& token) {
        skipLayout();
        if (text_.compare(pos_, token.size(), token) != 0) return false;
        // keywords must not run into an identifier
        if (std::isalpha(static_cast<unsigned char>(token[0]))) {
            size_t after = pos_ + token.size();
            if (after < text_.size()) {
                char c = text_[after];
                if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') return false;
            }
        }
        for (size_t i = 0; i < token.size(); i++) advance();
        return true;
    }

    void expect(const std::string& token, const std::string& what) {
        if (!tryConsume(token)) fail("expected '" + token + "' " + what);
    }

    bool peekIdentifier() {
        skipLayout();
        if (pos_ >= text_.size()) return false;
        char c = text_[pos_];
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }

    std::string identifier() {
        skipLayout();
        if (!peekIdentifier()) fail("expected an atom name");
        size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            advance();
        return text_.substr(start, pos_ - start);
    }

    int64_t integer() {
        skipLayout();
        if (pos_ < text_.size() && text_[pos_] == '-') fail("negative numbers are not permitted");
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected a nonnegative integer");
        int64_t value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            int digit = text_[pos_] - '0';
            if (value > (INT64_MAX - digit) / 10) fail("integer literal too large");
            value = value * 10 + digit;
            advance();
        }
        return value;
    }

    [[noreturn]] void fail(const std::string& msg) {
        skipLayout();
        throw ParseError(line_, col_, msg);
    }

private:
    void advance() {
        if (pos_ >= text_.size()) return;
        if (text_[pos_] == '\n') { line_++; col_ = 1; }
        else col_++;
        pos_++;
    }

    const std::string& text_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

bool tryRelation(Lexer& lex, Rel& out) {
    if (lex.tryConsume("<=")) { out = Rel::Le; return true; }
    if (lex.tryConsume(">=")) { out = Rel::Ge; return true; }
    if (lex.tryConsume("!=")) { out = Rel::Ne; return true; }
    if (lex.tryConsume("<")) { out = Rel::Lt; return true; }
    if (lex.tryConsume(">")) { out = Rel::Gt; return true; }
    if (lex.tryConsume("=")) { out = Rel::Eq; return true; }
    return false;
}

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) {}

    ParsedInstance run() {
        while (!lex_.atEnd()) statement();
        std::sort(out_.visible.begin(), out_.visible.end());
        return std::move(out_);
    }

private:
    Lexer lex_;
    ParsedInstance out_;

    int atom() {
        std::string name = lex_.identifier();
        if (name == AtomTable::kFalseName) return AtomTable::kFalse;
        int id = out_.program.atoms.intern(name);
        if (std::find(out_.visible.begin(), out_.visible.end(), id) == out_.visible.end())
            out_.visible.push_back(id);
        return id;
    }

    Literal literal() {
        int depth = 0;
        while (lex_.tryConsume("not")) depth++;
        return Literal::make(atom(), depth);
    }

    Aggregate aggregate(bool isCount) {
        Aggregate agg;
        lex_.expect("{", "after the aggregate name");
        if (!lex_.tryConsume("}")) {
            do {
                AggregateElement e;
                if (isCount) {
                    e.weight = 1;
                } else {
                    e.weight = lex_.integer();
                    lex_.expect(":", "between an aggregate weight and its literal");
                }
                e.lit = literal();
                agg.elements.push_back(e);
            } while (lex_.tryConsume(","));
            lex_.expect("}", "to close the aggregate");
        }
        if (!tryRelation(lex_, agg.rel)) lex_.fail("expected a relation after the aggregate");
        agg.bound = lex_.integer();
        Rel extra;
        if (tryRelation(lex_, extra)) lex_.fail("duplicate relation in aggregate");
        if (isCount && !agg.isCount()) lex_.fail("count aggregates take unweighted literals");
        return agg;
    }

    BodyElement bodyElement() {
        if (lex_.tryConsume("sum")) return aggregate(false);
        if (lex_.tryConsume("count")) return aggregate(true);
        return literal();
    }

    std::vector<BodyElement> body() {
        std::vector<BodyElement> elems;
        if (lex_.peek() == '.') return elems;
        do {
            elems.push_back(bodyElement());
        } while (lex_.tryConsume(","));
        return elems;
    }

    void statement() {
        if (lex_.tryConsume(":~")) {
            WeakConstraint w;
            w.body = body();
            lex_.expect(".", "to end the weak constraint body");
            lex_.expect("[", "before the weight annotation");
            w.weight = lex_.integer();
            lex_.expect("@", "between weight and level");
            w.level = static_cast<int>(lex_.integer());
            lex_.expect("]", "after the weight annotation");
            if (w.weight < 1) lex_.fail("weak constraint weight must be positive");
            if (w.level < 1) lex_.fail("weak constraint level must be positive");
            out_.weak.items.push_back(std::move(w));
            return;
        }
        if (lex_.tryConsume(":-")) {
            Rule r = Rule::constraint(body());
            lex_.expect(".", "to end the constraint");
            out_.program.add(std::move(r));
            return;
        }
        Rule r;
        do {
            int a = atom();
            if (a == AtomTable::kFalse) {
                if (!r.head.empty()) lex_.fail("the false constant cannot appear in a disjunction");
            }
            if (std::find(r.head.begin(), r.head.end(), a) != r.head.end())
                lex_.fail("duplicate atom in rule head");
            r.head.push_back(a);
        } while (lex_.tryConsume("|"));
        if (lex_.tryConsume(":-")) r.body = body();
        lex_.expect(".", "to end the rule");
        if (r.head.size() == 1 && r.head[0] == AtomTable::kFalse) r = Rule::constraint(std::move(r.body));
        out_.program.add(std::move(r));
    }
};

std::string literalText(const AtomTable& atoms, const Literal& lit) {
    std::string s;
    for (int i = 0; i < lit.depth; i++) s += "not ";
    s += atoms.name(lit.atom);
    return s;
}

std::string aggregateText(const AtomTable& atoms, const Aggregate& agg) {
    std::ostringstream os;
    bool count = agg.isCount();
    os << (count ? "count{ " : "sum{ ");
    for (size_t i = 0; i < agg.elements.size(); i++) {
        if (i > 0) os << ", ";
        if (!count) os << agg.elements[i].weight << ": ";
        os << literalText(atoms, agg.elements[i].lit);
    }
    os << (agg.elements.empty() ? "}" : " }");
    os << " " << relText(agg.rel) << " " << agg.bound;
    return os.str();
}

} // namespace

std::string bodyText(const AtomTable& atoms, const std::vector<BodyElement>& body) {
    std::ostringstream os;
    for (size_t i = 0; i < body.size(); i++) {
        if (i > 0) os << ", ";
        if (isLiteral(body[i])) os << literalText(atoms, asLiteral(body[i]));
        else os << aggregateText(atoms, asAggregate(body[i]));
    }
    return os.str();
}

ParsedInstance parseGroundAsp(const std::string& text) {
    return Parser(text).run();
}

std::string serializeProgram(const ParsedInstance& instance) {
    const AtomTable& atoms = instance.program.atoms;
    std::ostringstream os;
    for (const auto& r : instance.program.rules) {
        if (r.isConstraint()) {
            os << ":- " << bodyText(atoms, r.body) << ".\n";
            continue;
        }
        for (size_t i = 0; i < r.head.size(); i++) {
            if (i > 0) os << " | ";
            os << atoms.name(r.head[i]);
        }
        if (!r.body.empty()) os << " :- " << bodyText(atoms, r.body);
        os << ".\n";
    }
    for (const auto& w : instance.weak.items)
        os << ":~ " << bodyText(atoms, w.body) << ". [" << w.weight << "@" << w.level << "]\n";
    return os.str();
}

} // namespace coreshrink
