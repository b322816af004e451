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
#include <lnps/destroy.h>

#include <algorithm>
#include <map>
#include <set>

namespace lnps {

ProjectionView makeProjectionView(const Problem& p, const Assignment& a, std::string_view pred, std::uint32_t arity) {
	ProjectionView view;
	for (auto& atom : projectedAtoms(p, pred, arity)) {
		if (a.value(atom.var)) view.atoms.push_back(std::move(atom));
	}
	return view;
}

std::size_t destroyCount(int percent, std::size_t n) {
	return (static_cast<std::size_t>(percent) * n + 50) / 100;
}

namespace {

DestroyOutcome split(const ProjectionView& view, const std::vector<bool>& hit) {
	DestroyOutcome out;
	for (std::size_t i = 0; i != view.atoms.size(); ++i) {
		(hit[i] ? out.destroyed : out.undestroyed).push_back(view.atoms[i]);
	}
	return out;
}

} // namespace

DestroyOutcome destroyRandomAtoms(const ProjectionView& view, const DestroySpec& spec, Rng& rng) {
	std::vector<bool> hit(view.atoms.size(), false);
	for (std::size_t i : rng.sample(view.atoms.size(), destroyCount(spec.percent, view.atoms.size()))) hit[i] = true;
	return split(view, hit);
}

DestroyOutcome destroyRandomConstants(const ProjectionView& view, const DestroySpec& spec, Rng& rng) {
	std::set<Term> constants;
	for (const auto& atom : view.atoms) {
		for (std::uint32_t i = 0; i != atom.arity(); ++i) {
			if (spec.selects(i)) constants.insert(atom.args[i]);
		}
	}
	std::vector<Term> pool(constants.begin(), constants.end());
	std::set<Term>    chosen;
	for (std::size_t i : rng.sample(pool.size(), destroyCount(spec.percent, pool.size()))) chosen.insert(pool[i]);

	std::vector<bool> hit(view.atoms.size(), false);
	for (std::size_t k = 0; k != view.atoms.size(); ++k) {
		const auto& atom = view.atoms[k];
		for (std::uint32_t i = 0; i != atom.arity() && !hit[k]; ++i) {
			hit[k] = spec.selects(i) && chosen.count(atom.args[i]) != 0;
		}
	}
	return split(view, hit);
}

bool partitionCheck(const DestroyOutcome& outcome, const ProjectionView& view) {
	std::map<Var, int> count;
	for (const auto& a : view.atoms) count[a.var] = 0;
	for (const auto* part : {&outcome.destroyed, &outcome.undestroyed}) {
		for (const auto& a : *part) {
			auto it = count.find(a.var);
			if (it == count.end() || ++it->second > 1) return false;
		}
	}
	return std::all_of(count.begin(), count.end(), [](const auto& kv) { return kv.second == 1; });
}

} // namespace lnps
