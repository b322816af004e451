//
// Copyright (c) 2026 The lnps authors
//
// This file is part of lnps.
//
// Permission is hereby granted, free of charge, to any person obtaining a copy
// of this software and associated documentation files (the "Software"), to
// deal in the Software without restriction, including without limitation the
// rights to use, copy, modify, merge, publish, distribute, sublicense, and/or
// sell copies of the Software, and to permit persons to whom the Software is
// furnished to do so, subject to the following conditions:
//
// The above copyright notice and this permission notice shall be included in
// all copies or substantial portions of the Software.
//
// THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
// IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
// FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
// AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
// LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
// FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS
// IN THE SOFTWARE.
//
#include <lnps/model.h>

#include <lnps/error.h>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <ostream>
#include <set>
#include <sstream>
#include <utility>

namespace lnps {

Lit Lit::fromInt(std::int64_t x) {
	if (x == 0 || x > INT32_MAX || x < -INT32_MAX) {
		throw UsageError("invalid literal " + std::to_string(x));
	}
	return x > 0 ? pos(static_cast<Var>(x)) : neg(static_cast<Var>(-x));
}

std::string toString(const Term& t) {
	if (const auto* i = std::get_if<std::int64_t>(&t)) {
		return std::to_string(*i);
	}
	return std::get<std::string>(t);
}

std::string SymbolicAtom::symbol() const {
	std::string out = predicate;
	if (!args.empty()) {
		out += '(';
		for (std::size_t i = 0; i != args.size(); ++i) {
			if (i) out += ',';
			out += toString(args[i]);
		}
		out += ')';
	}
	return out;
}

namespace {

bool isIdentStart(char c) { return std::islower(static_cast<unsigned char>(c)) || c == '_'; }
bool isIdentChar(char c)  { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

// Minimal cursor over a ground atom symbol.
struct AtomReader {
	std::string_view in;
	std::size_t      pos{0};

	void skipWs() {
		while (pos < in.size() && std::isspace(static_cast<unsigned char>(in[pos]))) ++pos;
	}
	bool eat(char c) {
		skipWs();
		if (pos < in.size() && in[pos] == c) { ++pos; return true; }
		return false;
	}
	std::string identifier() {
		skipWs();
		if (pos >= in.size() || !isIdentStart(in[pos])) throw ParseError(0, "expected identifier in '" + std::string(in) + "'");
		std::size_t start = pos;
		while (pos < in.size() && isIdentChar(in[pos])) ++pos;
		return std::string(in.substr(start, pos - start));
	}
	Term term() {
		skipWs();
		if (pos < in.size() && (in[pos] == '-' || std::isdigit(static_cast<unsigned char>(in[pos])))) {
			std::int64_t value = 0;
			auto [end, ec] = std::from_chars(in.data() + pos, in.data() + in.size(), value);
			if (ec != std::errc() || end == in.data() + pos) throw ParseError(0, "bad integer term in '" + std::string(in) + "'");
			pos = static_cast<std::size_t>(end - in.data());
			return value;
		}
		return identifier();
	}
};

std::int64_t parseInt(std::string_view tok, std::size_t line, const char* what) {
	std::int64_t value = 0;
	auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
	if (ec != std::errc() || end != tok.data() + tok.size()) {
		throw ParseError(line, std::string("expected ") + what + ", got '" + std::string(tok) + "'");
	}
	return value;
}

std::vector<std::string_view> tokenize(std::string_view line) {
	std::vector<std::string_view> out;
	std::size_t i = 0;
	while (i < line.size()) {
		while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
		std::size_t start = i;
		while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
		if (i > start) out.push_back(line.substr(start, i - start));
	}
	return out;
}

} // namespace

SymbolicAtom parseAtom(std::string_view text, Var var) {
	AtomReader r{text};
	SymbolicAtom atom;
	atom.var       = var;
	atom.predicate = r.identifier();
	if (r.eat('(')) {
		do { atom.args.push_back(r.term()); } while (r.eat(','));
		if (!r.eat(')')) throw ParseError(0, "expected ')' in '" + std::string(text) + "'");
	}
	r.skipWs();
	if (r.pos != text.size()) throw ParseError(0, "trailing characters in atom '" + std::string(text) + "'");
	return atom;
}

void Problem::validate() const {
	std::vector<bool> occurs(numVars + 1, false);
	auto checkLit = [&](Lit p) {
		if (p.var() == 0 || p.var() > numVars) throw Error("literal " + std::to_string(p.toInt()) + " out of range");
	};
	for (const auto& c : clauses) {
		if (c.empty()) throw Error("empty clause");
		for (Lit p : c) { checkLit(p); occurs[p.var()] = true; }
	}
	std::set<Var> vars;
	std::set<std::pair<std::string, std::vector<Term>>> symbols;
	for (const auto& a : atoms) {
		if (a.var == 0 || a.var > numVars) throw Error("atom variable " + std::to_string(a.var) + " out of range");
		if (!vars.insert(a.var).second) throw Error("duplicate atom variable " + std::to_string(a.var));
		if (!symbols.emplace(a.predicate, a.args).second) throw Error("duplicate atom symbol " + a.symbol());
		occurs[a.var] = true;
	}
	for (const auto& t : objective) {
		checkLit(t.lit);
		if (t.weight <= 0) throw Error("objective weight must be positive");
		if (!occurs[t.lit.var()]) {
			throw Error("objective variable " + std::to_string(t.lit.var()) + " occurs in no clause or atom");
		}
	}
}

Problem parseInstance(std::string_view text) {
	Problem     prob;
	bool        seenHeader = false;
	std::size_t declaredClauses = 0;
	std::size_t lineNo = 0;
	std::set<std::string> symbols;
	std::set<Var>         atomVars;

	auto checkLit = [&](std::int64_t x, std::size_t line) {
		if (x == 0 || x > std::int64_t(prob.numVars) || x < -std::int64_t(prob.numVars)) {
			throw ParseError(line, "literal " + std::to_string(x) + " out of range");
		}
		return Lit::fromInt(x);
	};

	while (!text.empty()) {
		++lineNo;
		std::size_t nl = text.find('\n');
		std::string_view line = text.substr(0, nl);
		text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
		auto toks = tokenize(line);
		if (toks.empty() || toks[0][0] == '#') continue;

		std::string_view kind = toks[0];
		if (kind == "p") {
			if (seenHeader) throw ParseError(lineNo, "duplicate header");
			if (toks.size() != 4 || toks[1] != "lnps") throw ParseError(lineNo, "expected 'p lnps <vars> <clauses>'");
			auto nv = parseInt(toks[2], lineNo, "variable count");
			auto nc = parseInt(toks[3], lineNo, "clause count");
			if (nv < 0 || nv > INT32_MAX || nc < 0) throw ParseError(lineNo, "negative or oversized count in header");
			prob.numVars    = static_cast<std::uint32_t>(nv);
			declaredClauses = static_cast<std::size_t>(nc);
			seenHeader      = true;
			continue;
		}
		if (!seenHeader) throw ParseError(lineNo, "missing header before '" + std::string(kind) + "' line");
		if (kind == "a") {
			if (toks.size() < 3) throw ParseError(lineNo, "expected 'a <var> <symbol>'");
			auto v = parseInt(toks[1], lineNo, "variable");
			if (v <= 0 || v > std::int64_t(prob.numVars)) throw ParseError(lineNo, "atom variable " + std::to_string(v) + " out of range");
			std::size_t symStart = static_cast<std::size_t>(toks[2].data() - line.data());
			SymbolicAtom atom;
			try {
				atom = parseAtom(line.substr(symStart), static_cast<Var>(v));
			}
			catch (const ParseError& e) {
				throw ParseError(lineNo, e.detail());
			}
			if (!atomVars.insert(atom.var).second) throw ParseError(lineNo, "duplicate atom variable " + std::to_string(v));
			if (!symbols.insert(atom.symbol()).second) throw ParseError(lineNo, "duplicate atom symbol " + atom.symbol());
			prob.atoms.push_back(std::move(atom));
		}
		else if (kind == "c") {
			std::vector<Lit> clause;
			bool terminated = false;
			for (std::size_t i = 1; i != toks.size(); ++i) {
				if (terminated) throw ParseError(lineNo, "literal after terminating 0");
				auto x = parseInt(toks[i], lineNo, "literal");
				if (x == 0) { terminated = true; continue; }
				clause.push_back(checkLit(x, lineNo));
			}
			if (!terminated) throw ParseError(lineNo, "clause not terminated by 0");
			if (clause.empty()) throw ParseError(lineNo, "empty clause");
			prob.clauses.push_back(std::move(clause));
		}
		else if (kind == "m") {
			if (toks.size() != 3) throw ParseError(lineNo, "expected 'm <weight> <lit>'");
			auto w = parseInt(toks[1], lineNo, "weight");
			if (w == 0) throw ParseError(lineNo, "zero weight");
			if (w < 0) throw ParseError(lineNo, "negative weight");
			prob.objective.push_back({w, checkLit(parseInt(toks[2], lineNo, "literal"), lineNo)});
		}
		else {
			throw ParseError(lineNo, "unknown line type '" + std::string(kind) + "'");
		}
	}
	if (!seenHeader) throw ParseError(lineNo, "missing header");
	if (prob.clauses.size() != declaredClauses) {
		throw ParseError(lineNo, "header declares " + std::to_string(declaredClauses) + " clauses, found " + std::to_string(prob.clauses.size()));
	}
	std::sort(prob.atoms.begin(), prob.atoms.end(), [](const SymbolicAtom& a, const SymbolicAtom& b) { return a.var < b.var; });
	try {
		prob.validate();
	}
	catch (const Error& e) {
		throw ParseError(lineNo, e.what());
	}
	return prob;
}

void writeInstance(std::ostream& os, const Problem& p) {
	os << "p lnps " << p.numVars << ' ' << p.clauses.size() << '\n';
	for (const auto& a : p.atoms) os << "a " << a.var << ' ' << a.symbol() << '\n';
	for (const auto& c : p.clauses) {
		os << 'c';
		for (Lit x : c) os << ' ' << x.toInt();
		os << " 0\n";
	}
	for (const auto& t : p.objective) os << "m " << t.weight << ' ' << t.lit.toInt() << '\n';
}

std::string toText(const Problem& p) {
	std::ostringstream os;
	writeInstance(os, p);
	return os.str();
}

Cost evaluateCost(const Problem& p, const Assignment& a) {
	Cost sum = 0;
	for (const auto& t : p.objective) {
		if (a.isTrue(t.lit)) sum += t.weight;
	}
	return sum;
}

bool satisfiesClauses(const Problem& p, const Assignment& a) {
	return std::all_of(p.clauses.begin(), p.clauses.end(), [&](const std::vector<Lit>& c) {
		return std::any_of(c.begin(), c.end(), [&](Lit x) { return a.isTrue(x); });
	});
}

std::vector<SymbolicAtom> projectedAtoms(const Problem& p, std::string_view predicate, std::uint32_t arity) {
	std::vector<SymbolicAtom> out;
	for (const auto& a : p.atoms) {
		if (a.matches(predicate, arity)) out.push_back(a);
	}
	std::sort(out.begin(), out.end(), [](const SymbolicAtom& x, const SymbolicAtom& y) { return x.var < y.var; });
	return out;
}

} // namespace lnps
