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

#include "coreshrink/WcnfParser.h"

#include <sstream>

namespace coreshrink {

namespace {

struct WcnfReader {
    std::istringstream in;
    int line = 0;

    explicit WcnfReader(const std::string& text) : in(text) {}

    bool nextContentLine(std::string& out) {
        std::string raw;
        while (std::getline(in, raw)) {
            line++;
            size_t start = raw.find_first_not_of(" \t\r");
            if (start == std::string::npos) continue;
            if (raw[start] == 'c') continue;
            out = raw.substr(start);
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(line, 1, msg); }
};

} // namespace

bool looksLikeWcnf(const std::string& text) {
    WcnfReader reader(text);
    std::string l;
    while (reader.nextContentLine(l))
        if (l.rfind("p ", 0) == 0) return l.find("cnf") != std::string::npos;
    return false;
}

ParsedInstance parseWcnf(const std::string& text) {
    WcnfReader reader(text);
    ParsedInstance out;

    std::string headerLine;
    if (!reader.nextContentLine(headerLine)) reader.fail("missing wcnf header");
    std::istringstream header(headerLine);
    std::string p, fmt;
    int64_t vars = -1, clauses = -1, top = -1;
    header >> p >> fmt >> vars >> clauses >> top;
    if (p != "p" || fmt != "wcnf" || vars < 0 || clauses < 0 || top < 1 || header.fail())
        reader.fail("malformed header, expected 'p wcnf <vars> <clauses> <top>'");

    std::vector<int> varAtom(static_cast<size_t>(vars) + 1, -1);
    for (int64_t v = 1; v <= vars; v++) {
        int id = out.program.atoms.add("x" + std::to_string(v));
        varAtom[static_cast<size_t>(v)] = id;
        out.program.add(Rule::choice(id));
        out.visible.push_back(id);
    }

    std::string lineText;
    while (reader.nextContentLine(lineText)) {
        std::istringstream ls(lineText);
        int64_t weight;
        if (!(ls >> weight)) reader.fail("expected a clause weight");
        if (weight < 1) reader.fail("clause weight must be positive");
        if (weight > top) reader.fail("clause weight exceeds top");

        // The complement of each clause literal: the clause is falsified
        // exactly when the whole body holds.
        std::vector<BodyElement> body;
        int64_t lit;
        bool terminated = false;
        while (ls >> lit) {
            if (lit == 0) { terminated = true; break; }
            int64_t v = lit > 0 ? lit : -lit;
            if (v < 1 || v > vars) reader.fail("literal outside declared variable range");
            int atom = varAtom[static_cast<size_t>(v)];
            body.push_back(lit > 0 ? Literal{atom, 1} : Literal{atom, 0});
        }
        if (!terminated) reader.fail("clause not terminated by 0");

        if (weight == top) out.program.add(Rule::constraint(std::move(body)));
        else out.weak.items.push_back(WeakConstraint{std::move(body), weight, 1});
    }
    return out;
}

} // namespace coreshrink
