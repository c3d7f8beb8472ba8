#pragma once

#include <utility>
#include <vector>

#include "sumgrowth/int_poly.hpp"

namespace sumgrowth {

/// content * prod(factor^multiplicity). Every factor is primitive, irreducible
/// over Z, has positive leading coefficient, and the list is sorted by
/// canonical_compare; factors are pairwise distinct.
struct Factorization {
    Integer content;
    std::vector<std::pair<IntPolynomial, unsigned>> factors;

    IntPolynomial expand() const;
};

/// Yun's square-free decomposition of a nonzero polynomial: returns
/// (s_i, i) with f = content * prod s_i^i, each s_i primitive and square-free.
std::vector<std::pair<IntPolynomial, unsigned>> square_free_decomposition(const IntPolynomial& f);

bool is_square_free(const IntPolynomial& f);

/// Complete factorization over the integers (Zassenhaus: modular factoring,
/// Hensel lifting, recombination). Throws InvalidInput for the zero polynomial.
Factorization factor_over_integers(const IntPolynomial& f);

/// Irreducible over Z in the sense used for heights: primitive, nonconstant,
/// and with no nontrivial factorization.
bool is_irreducible(const IntPolynomial& f);

}  // namespace sumgrowth
