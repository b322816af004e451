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
#ifndef LNPS_DESTROY_H_INCLUDED
#define LNPS_DESTROY_H_INCLUDED

#include <lnps/config.h>
#include <lnps/model.h>
#include <lnps/random.h>

#include <cstddef>
#include <vector>

namespace lnps {

//! Projected atoms that are true in some solution.
struct ProjectionView {
	std::vector<SymbolicAtom> atoms;
};

//! Atoms of \p p matching (pred, arity) that are true under \p a, in variable order.
ProjectionView makeProjectionView(const Problem& p, const Assignment& a, std::string_view pred, std::uint32_t arity);

struct DestroyOutcome {
	std::vector<SymbolicAtom> destroyed;
	std::vector<SymbolicAtom> undestroyed;
};

//! round_half_up(percent * n / 100).
std::size_t destroyCount(int percent, std::size_t n);

//! Destroys round_half_up(percent% of |view|) atoms drawn uniformly without replacement.
DestroyOutcome destroyRandomAtoms(const ProjectionView& view, const DestroySpec& spec, Rng& rng);

/*!
 * Samples round_half_up(percent% of |C|) terms from the set C of terms found
 * at mask-selected argument positions of the view, then destroys every atom
 * carrying a sampled term at a selected position.
 */
DestroyOutcome destroyRandomConstants(const ProjectionView& view, const DestroySpec& spec, Rng& rng);

//! True iff destroyed and undestroyed partition the view's atoms.
bool partitionCheck(const DestroyOutcome& outcome, const ProjectionView& view);

} // namespace lnps
#endif
