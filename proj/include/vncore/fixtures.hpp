#pragma once

#include <string>
#include <vector>

#include "vncore/specfile.hpp"

namespace vncore {

/// One object with hom(I,I) = k and every structure map the scalar 1.
SpecData make_trivial();

/// Character category of an exponent-2 abelian group (rank 1 or 2): all
/// irreducibles are 1-dimensional over the rationals, the forgetful functor
/// is strong monoidal with r = i = identities.
SpecData make_rep_group(std::size_t rank);

/// The Haering-Oldenburg style separable functor on the rep-c2 category:
/// U(C) is the sum of hom(a, C (x) b) over a,b in {1,s}, r restricts to the
/// equal-twist summands with i its adjoint, r0 the diagonal.
SpecData make_ho_c2();

std::vector<std::string> fixture_names();

/// Dispatch by name ("trivial", "rep-c2", "rep-c2c2", "ho-c2").
SpecData make_fixture(const std::string& name);

void emit_fixture(const std::string& name, const std::string& path);

}  // namespace vncore
