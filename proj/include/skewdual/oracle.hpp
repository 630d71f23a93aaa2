#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skewdual/geometry.hpp"
#include "skewdual/ore.hpp"

// Brute-force ground truth for tiny instances. Nothing here calls the
// decomposition, the enumerators or the Ore gcd machinery.
namespace skewdual::oracle {

struct IsotropicReport {
  std::uint64_t scanned = 0;
  std::vector<Matrix> witnesses;  // RREF bases
  std::size_t count() const { return witnesses.size(); }
};

// all totally isotropic subspaces of dimension dim/2; output order does not
// depend on the thread count
IsotropicReport brute_isotropic(const SesquiSpace& V, std::uint64_t budget = 1'000'000, unsigned threads = 1);

struct CodeReport {
  std::string params;
  std::uint64_t subspaces = 0;  // K-subspaces scanned
  std::uint64_t ideals = 0;     // X-stable ones
  std::uint64_t selforthogonal = 0;
  std::vector<Matrix> selfdual;  // RREF bases over K of the selfdual codes
};

// every K-subspace of K^n (n = length of E), filtered by stability under
// left multiplication by X and by the coordinatewise form
CodeReport brute_codes(const QuotientAlgebra& E, std::uint64_t budget = 1'000'000, unsigned threads = 1);

// every monic f of degree n/2 that right-divides the modulus and spans a
// selfdual code; |K|^(n/2) candidates
std::vector<OrePoly> brute_generators(const QuotientAlgebra& E, std::uint64_t budget = 1'000'000);

// RREF basis over K of the coefficient vectors of E f
Matrix code_matrix(const QuotientAlgebra& E, const OrePoly& f);

// lambda(E f) equals its coordinatewise orthogonal
bool coordinatewise_selfdual(const QuotientAlgebra& E, const OrePoly& f);
bool coordinatewise_selforthogonal(const QuotientAlgebra& E, const OrePoly& f);

// minimum Hamming weight of a nonzero vector in the row space of
// code_matrix(E, f), by listing every combination; nullopt for the zero code
std::optional<std::size_t> min_weight(const QuotientAlgebra& E, const OrePoly& f, std::uint64_t budget = 1'000'000);

}  // namespace skewdual::oracle
