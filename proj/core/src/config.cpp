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
#include <lnps/config.h>

#include <lnps/error.h>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>

namespace lnps {

PriorityWeight PriorityWeight::level(int lvl) {
	if (lvl < 1) throw UsageError("priority level must be at least 1");
	return PriorityWeight(lvl);
}

bool LnpsConfig::isProjected(std::string_view pred, std::uint32_t arity) const {
	return std::any_of(projects.begin(), projects.end(),
	                   [&](const ProjectSpec& p) { return p.predicate == pred && p.arity == arity; });
}

void LnpsConfig::validate() const {
	if (projects.empty()) throw ConfigError("configuration has no _lnps_project fact");
	for (const auto& d : destroys) {
		if (!isProjected(d.predicate, d.arity)) throw ConfigError("destroy of unprojected " + d.predicate + "/" + std::to_string(d.arity));
		if (d.argMask == 0) throw ConfigError("empty argument mask");
		if (d.argMask > d.fullMask()) throw ConfigError("argument mask out of range");
		if (d.percent < 0 || d.percent > 100) throw ConfigError("percentage out of range");
	}
	for (const auto& p : prioritizes) {
		if (!isProjected(p.predicate, p.arity)) throw ConfigError("prioritize of unprojected " + p.predicate + "/" + std::to_string(p.arity));
	}
}

namespace {

// A term of the fact language: integer, constant, or function term f(t1,...,tn).
struct FactTerm {
	enum Kind { integer, function } kind{integer};
	std::int64_t          num{0};
	std::string           name;
	std::vector<FactTerm> args;

	bool isConstant() const { return kind == function && args.empty(); }
	std::string str() const {
		if (kind == integer) return std::to_string(num);
		std::string s = name;
		if (!args.empty()) {
			s += '(';
			for (std::size_t i = 0; i != args.size(); ++i) s += (i ? "," : "") + args[i].str();
			s += ')';
		}
		return s;
	}
};

class FactReader {
public:
	explicit FactReader(std::string_view in) : in_(in) {}

	bool atEnd() {
		skip();
		return pos_ >= in_.size();
	}
	std::size_t line() const { return line_; }

	FactTerm term() {
		skip();
		if (pos_ >= in_.size()) fail("unexpected end of input");
		char c = in_[pos_];
		if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
			FactTerm t;
			auto [end, ec] = std::from_chars(in_.data() + pos_, in_.data() + in_.size(), t.num);
			if (ec != std::errc() || end == in_.data() + pos_) fail("malformed integer");
			pos_ = static_cast<std::size_t>(end - in_.data());
			return t;
		}
		if (!(std::islower(static_cast<unsigned char>(c)) || c == '_')) fail(std::string("unexpected character '") + c + "'");
		FactTerm t;
		t.kind = FactTerm::function;
		std::size_t start = pos_;
		while (pos_ < in_.size() && (std::isalnum(static_cast<unsigned char>(in_[pos_])) || in_[pos_] == '_' || in_[pos_] == '\'')) ++pos_;
		t.name = std::string(in_.substr(start, pos_ - start));
		if (eat('(')) {
			do { t.args.push_back(term()); } while (eat(','));
			if (!eat(')')) fail("expected ')'");
		}
		return t;
	}
	bool eat(char c) {
		skip();
		if (pos_ < in_.size() && in_[pos_] == c) {
			++pos_;
			return true;
		}
		return false;
	}
	[[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, msg); }

private:
	void skip() {
		while (pos_ < in_.size()) {
			char c = in_[pos_];
			if (c == '%') {
				while (pos_ < in_.size() && in_[pos_] != '\n') ++pos_;
			}
			else if (std::isspace(static_cast<unsigned char>(c))) {
				if (c == '\n') ++line_;
				++pos_;
			}
			else {
				break;
			}
		}
	}
	std::string_view in_;
	std::size_t      pos_{0};
	std::size_t      line_{1};
};

std::string identifierArg(const FactTerm& fact, std::size_t i, std::size_t line) {
	if (!fact.args[i].isConstant()) throw ParseError(line, "expected predicate name in '" + fact.str() + "'");
	return fact.args[i].name;
}

std::int64_t integerArg(const FactTerm& fact, std::size_t i, std::size_t line, const char* what) {
	if (fact.args[i].kind != FactTerm::integer) throw ParseError(line, std::string("expected ") + what + " in '" + fact.str() + "'");
	return fact.args[i].num;
}

std::uint32_t arityArg(const FactTerm& fact, std::size_t line) {
	auto n = integerArg(fact, 1, line, "arity");
	if (n < 0 || n > 31) throw ParseError(line, "arity out of range in '" + fact.str() + "'");
	return static_cast<std::uint32_t>(n);
}

template <class T>
void addUnique(std::vector<T>& vec, T x) {
	if (std::find(vec.begin(), vec.end(), x) == vec.end()) vec.push_back(std::move(x));
}

} // namespace

LnpsConfig parseConfig(std::string_view text) {
	LnpsConfig cfg;
	struct Ref { std::string pred; std::uint32_t arity; std::size_t line; std::string fact; };
	std::vector<Ref> refs;
	FactReader r(text);
	while (!r.atEnd()) {
		std::size_t line = r.line();
		FactTerm    fact = r.term();
		if (!r.eat('.')) r.fail("expected '.' after '" + fact.str() + "'");
		if (fact.kind != FactTerm::function) throw ParseError(line, "fact must be an atom, got '" + fact.str() + "'");
		const std::size_t n = fact.args.size();
		auto expectArity = [&](std::size_t want) {
			if (n != want) {
				throw ParseError(line, "wrong arity of '" + fact.name + "': expected " + std::to_string(want) + " arguments in '" + fact.str() + "'");
			}
		};
		if (fact.name == "_lnps_project") {
			expectArity(2);
			addUnique(cfg.projects, ProjectSpec{identifierArg(fact, 0, line), arityArg(fact, line)});
		}
		else if (fact.name == "_lnps_destroy") {
			expectArity(4);
			DestroySpec d;
			d.predicate = identifierArg(fact, 0, line);
			d.arity     = arityArg(fact, line);
			auto mask   = integerArg(fact, 2, line, "argument mask");
			if (mask == 0) throw ParseError(line, "empty argument mask in '" + fact.str() + "'");
			if (mask < 0 || mask > std::int64_t(d.fullMask())) throw ParseError(line, "argument mask out of range in '" + fact.str() + "'");
			d.argMask = static_cast<std::uint32_t>(mask);
			const FactTerm& amount = fact.args[3];
			if (amount.kind != FactTerm::function || amount.name != "p" || amount.args.size() != 1 || amount.args[0].kind != FactTerm::integer) {
				throw ParseError(line, "amount must be p(<percent>) in '" + fact.str() + "'");
			}
			if (amount.args[0].num < 0 || amount.args[0].num > 100) throw ParseError(line, "percentage out of range in '" + fact.str() + "'");
			d.percent = static_cast<int>(amount.args[0].num);
			refs.push_back({d.predicate, d.arity, line, fact.str()});
			addUnique(cfg.destroys, std::move(d));
		}
		else if (fact.name == "_lnps_prioritize") {
			expectArity(4);
			PrioritizeSpec p;
			p.predicate = identifierArg(fact, 0, line);
			p.arity     = arityArg(fact, line);
			const FactTerm& w = fact.args[2];
			if (w.isConstant() && w.name == "inf") {
				p.weight = PriorityWeight::inf();
			}
			else if (w.kind == FactTerm::integer && w.num >= 1 && w.num <= INT32_MAX) {
				p.weight = PriorityWeight::level(static_cast<int>(w.num));
			}
			else {
				throw ParseError(line, "weight must be a positive integer or inf in '" + fact.str() + "'");
			}
			const FactTerm& m = fact.args[3];
			if (!m.isConstant() || (m.name != "true" && m.name != "false")) {
				throw ParseError(line, "modifier must be true or false in '" + fact.str() + "'");
			}
			p.sign = m.name == "true";
			refs.push_back({p.predicate, p.arity, line, fact.str()});
			addUnique(cfg.prioritizes, std::move(p));
		}
		else {
			throw ParseError(line, "unknown predicate '" + fact.name + "/" + std::to_string(n) + "'");
		}
	}
	for (const auto& ref : refs) {
		if (!cfg.isProjected(ref.pred, ref.arity)) {
			throw ParseError(ref.line, "no matching _lnps_project for '" + ref.fact + "'");
		}
	}
	if (cfg.projects.empty()) throw ParseError(r.line(), "configuration has no _lnps_project fact");
	return cfg;
}

std::string toText(const LnpsConfig& cfg) {
	std::ostringstream os;
	for (const auto& p : cfg.projects) os << "_lnps_project(" << p.predicate << ',' << p.arity << ").\n";
	for (const auto& d : cfg.destroys) {
		os << "_lnps_destroy(" << d.predicate << ',' << d.arity << ',' << d.argMask << ",p(" << d.percent << ")).\n";
	}
	for (const auto& p : cfg.prioritizes) {
		os << "_lnps_prioritize(" << p.predicate << ',' << p.arity << ',' << p.weight.toString() << ','
		   << (p.sign ? "true" : "false") << ").\n";
	}
	return os.str();
}

bool checkVariability(const LnpsConfig& cfg) {
	return std::none_of(cfg.prioritizes.begin(), cfg.prioritizes.end(),
	                    [](const PrioritizeSpec& p) { return p.weight.isInf(); });
}

void validateAgainst(const LnpsConfig& cfg, const Problem& p) {
	cfg.validate();
	for (const auto& proj : cfg.projects) {
		bool found = std::any_of(p.atoms.begin(), p.atoms.end(),
		                         [&](const SymbolicAtom& a) { return a.matches(proj.predicate, proj.arity); });
		if (!found) throw ConfigError("projected predicate " + proj.predicate + "/" + std::to_string(proj.arity) + " has no atoms in the instance");
	}
}

} // namespace lnps
