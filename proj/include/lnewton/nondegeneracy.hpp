#pragma once

#include <optional>
#include <vector>

#include "lnewton/ffield.hpp"
#include "lnewton/laurent.hpp"

namespace lnewton {

/// A univariate polynomial is nondegenerate exactly when p does not divide its degree.
bool is_nondegenerate_1var(const LaurentPoly& f);

struct DegeneracyWitness {
  std::vector<Term> face_terms;  ///< restriction of f to the offending face
  unsigned extension = 1;        ///< the common zero lives in F_{p^extension}
  std::vector<FqElem> point;
};

/// Searches faces of the Newton polytope not containing the origin for a
/// common zero of the partial derivatives of the face polynomial in the torus
/// over F_{p^e}, e <= e_max. Supports n <= 2.
std::optional<DegeneracyWitness> degeneracy_witness_search(const LaurentPoly& f, unsigned e_max);

}  // namespace lnewton
