#pragma once

#include "gridhom/generators.hpp"
#include "gridhom/grid.hpp"
#include "gridhom/module.hpp"
#include "gridhom/poly.hpp"

namespace gridhom {

// Minus the Alexander grading of the tower generator.
int tau(const UModuleDecomposition& m);

// Shifts p to be symmetric under t -> 1/t and fixes the sign so that p(1) = 1.
// Throws ConsistencyError if no shift makes p symmetric or p(1) != +-1.
LaurentPolynomial symmetrize(const LaurentPolynomial& p);

// Sum over generators of (-1)^M t^A divided exactly by (1 - t^-1)^(n-1),
// before symmetrization.
LaurentPolynomial generator_euler_quotient(const GeneratorTable& gens);

// Alexander polynomial from the gradings alone (no differentials).
LaurentPolynomial alexander_from_generators(const GeneratorTable& gens);
LaurentPolynomial alexander_from_generators(const GridDiagram& d, const EnumerationOptions& options = {});

// Euler characteristic of the hat homology, symmetrized.
LaurentPolynomial alexander_from_homology(const PoincarePolynomial& hat);

// Half the width of the Alexander support of the hat homology; the support
// must be symmetric about 0.
int genus(const PoincarePolynomial& hat);

}  // namespace gridhom
