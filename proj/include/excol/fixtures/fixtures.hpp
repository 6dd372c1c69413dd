#pragma once

#include <string>
#include <vector>

#include "excol/model/collection.hpp"

namespace excol::fixtures {

// Names of the shipped fixtures, sorted.
std::vector<std::string> names();

// Throws FormatError for an unknown name.
model::CollectionSpec make(const std::string& name);

// O, O(1), ..., O(n-1) on P^{n-1}: A(i,j) = S^{j-i}V in degree 0 and
// N(i,j) = S^{i+n-j}V in degree n-1, all products polynomial
// multiplication in the monomial basis. Carries the antisymmetric tensor on
// the full chain and the determinant pairing. 2 <= n <= 6.
model::CollectionSpec beilinson(int n);

model::CollectionSpec point();
model::CollectionSpec burniat();
model::CollectionSpec beauville_i0();
model::CollectionSpec beauville_i1();
model::CollectionSpec godeaux();

// Monomials of degree d in `vars` variables, lexicographically decreasing
// exponent vectors (x1^d first). Index i of S^1 is the variable x_{i+1}.
std::vector<std::vector<int>> monomials(int vars, int d);

}  // namespace excol::fixtures
