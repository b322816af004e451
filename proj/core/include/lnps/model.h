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
#ifndef LNPS_MODEL_H_INCLUDED
#define LNPS_MODEL_H_INCLUDED

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

/*!
 * \file
 * Ground problem representation: clauses over propositional variables, a
 * linear minimization objective, and a table binding variables to named
 * ground atoms such as \c cycle(1,2).
 */
namespace lnps {

using Var    = std::uint32_t;
using Weight = std::int64_t;
using Cost   = std::int64_t;

//! A propositional literal, i.e. a variable together with a sign.
class Lit {
public:
	constexpr Lit() = default;
	static constexpr Lit pos(Var v) { return Lit(v << 1); }
	static constexpr Lit neg(Var v) { return Lit((v << 1) | 1u); }
	//! Builds a literal from a signed, non-zero integer (e.g. -3 is the negation of variable 3).
	static Lit fromInt(std::int64_t x);

	constexpr Var      var()      const { return code_ >> 1; }
	constexpr bool     negative() const { return (code_ & 1u) != 0; }
	constexpr bool     positive() const { return !negative(); }
	//! Dense index suitable for per-literal arrays.
	constexpr uint32_t index()    const { return code_; }
	constexpr std::int64_t toInt() const { return negative() ? -std::int64_t(var()) : std::int64_t(var()); }

	constexpr Lit operator~() const { return Lit(code_ ^ 1u); }
	constexpr auto operator<=>(const Lit&) const = default;
private:
	constexpr explicit Lit(std::uint32_t c) : code_(c) {}
	std::uint32_t code_{0};
};

//! A ground term: an integer or a constant identifier.
using Term = std::variant<std::int64_t, std::string>;

std::string toString(const Term& t);

//! A named ground atom p(c1,...,cn) bound to a propositional variable.
struct SymbolicAtom {
	Var               var{0};
	std::string       predicate;
	std::vector<Term> args;

	std::uint32_t arity() const { return static_cast<std::uint32_t>(args.size()); }
	std::string   symbol() const;
	bool matches(std::string_view pred, std::uint32_t n) const { return predicate == pred && arity() == n; }
	bool operator==(const SymbolicAtom&) const = default;
};

//! Parses a ground atom such as \c cycle(1,2) or \c done. Throws ParseError (line 0) on malformed input.
SymbolicAtom parseAtom(std::string_view text, Var var);

struct WeightedLit {
	Weight weight{0};
	Lit    lit;
	bool operator==(const WeightedLit&) const = default;
};

//! Total truth assignment over variables 1..n.
class Assignment {
public:
	Assignment() = default;
	explicit Assignment(std::uint32_t numVars) : values_(numVars + 1, false) {}

	std::uint32_t numVars() const { return values_.empty() ? 0 : static_cast<std::uint32_t>(values_.size() - 1); }
	bool value(Var v) const { return values_[v]; }
	bool isTrue(Lit p) const { return values_[p.var()] != p.negative(); }
	void set(Var v, bool b) { values_[v] = b; }
	bool operator==(const Assignment&) const = default;
private:
	std::vector<bool> values_;
};

//! A ground minimization problem. Immutable once parsed and safe to share read-only.
struct Problem {
	std::uint32_t                 numVars{0};
	std::vector<std::vector<Lit>> clauses;
	std::vector<WeightedLit>      objective;
	std::vector<SymbolicAtom>     atoms;

	//! Throws Error if any structural invariant is violated.
	void validate() const;
	bool operator==(const Problem&) const = default;
};

struct Solution {
	Assignment assignment;
	Cost       cost{0};
	bool operator==(const Solution&) const = default;
};

//! Parses the line-oriented instance format (see README).
Problem parseInstance(std::string_view text);
//! Writes \p p in the format accepted by parseInstance().
void    writeInstance(std::ostream& os, const Problem& p);
std::string toText(const Problem& p);

//! Sum of weights of objective terms whose literal is true; feasibility is not checked.
Cost evaluateCost(const Problem& p, const Assignment& a);
bool satisfiesClauses(const Problem& p, const Assignment& a);
//! All atom-table entries with the given predicate and arity, in variable order.
std::vector<SymbolicAtom> projectedAtoms(const Problem& p, std::string_view predicate, std::uint32_t arity);

} // namespace lnps
#endif
