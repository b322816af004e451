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
#ifndef LNPS_CONFIG_H_INCLUDED
#define LNPS_CONFIG_H_INCLUDED

#include <lnps/model.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lnps {

//! Priority of a heuristic atom: a finite level >= 1 or INF, which fixes the atom instead of preferring it.
class PriorityWeight {
public:
	static PriorityWeight inf() { return PriorityWeight(0); }
	static PriorityWeight level(int lvl);

	bool isInf() const { return level_ == 0; }
	//! Requires !isInf().
	int  level() const { return level_; }
	std::string toString() const { return isInf() ? "inf" : std::to_string(level_); }
	bool operator==(const PriorityWeight&) const = default;
private:
	explicit PriorityWeight(int l) : level_(l) {}
	int level_;
};

//! \c _lnps_project(P,N): atoms of P/N characterize a solution.
struct ProjectSpec {
	std::string   predicate;
	std::uint32_t arity{0};
	bool operator==(const ProjectSpec&) const = default;
};

//! \c _lnps_destroy(P,N,Mask,p(Percent)).
//!
//! Bit i of the mask (least significant first) selects argument position i+1.
struct DestroySpec {
	std::string   predicate;
	std::uint32_t arity{0};
	std::uint32_t argMask{0};
	int           percent{0};

	std::uint32_t fullMask() const { return arity >= 32 ? ~0u : (1u << arity) - 1u; }
	bool isFullMask() const { return argMask == fullMask(); }
	bool selects(std::uint32_t argIndex) const { return argIndex < 32 && ((argMask >> argIndex) & 1u) != 0; }
	bool operator==(const DestroySpec&) const = default;
};

//! \c _lnps_prioritize(P,N,Weight,Modifier) with Modifier in {true, false}.
struct PrioritizeSpec {
	std::string    predicate;
	std::uint32_t  arity{0};
	PriorityWeight weight{PriorityWeight::level(1)};
	bool           sign{true};
	bool operator==(const PrioritizeSpec&) const = default;
};

struct LnpsConfig {
	std::vector<ProjectSpec>    projects;
	std::vector<DestroySpec>    destroys;
	std::vector<PrioritizeSpec> prioritizes;

	bool isProjected(std::string_view pred, std::uint32_t arity) const;
	//! Throws ConfigError if an invariant is violated.
	void validate() const;
	bool operator==(const LnpsConfig&) const = default;
};

/*!
 * Parses period-terminated \c _lnps_project/2, \c _lnps_destroy/4 and
 * \c _lnps_prioritize/4 facts. \c % starts a line comment. Identical facts
 * are merged.
 *
 * Throws ParseError naming the offending fact.
 */
LnpsConfig  parseConfig(std::string_view text);
std::string toText(const LnpsConfig& cfg);

//! False iff some prioritization fixes atoms (weight INF), i.e. the configuration describes plain LNS.
bool checkVariability(const LnpsConfig& cfg);

//! Throws ConfigError if a projected predicate has no atom in \p p.
void validateAgainst(const LnpsConfig& cfg, const Problem& p);

} // namespace lnps
#endif
