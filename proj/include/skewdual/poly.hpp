#pragma once

#include <utility>
#include <vector>

#include "skewdual/field.hpp"

namespace skewdual {

// Dense univariate polynomial over a GaloisField, constant term first,
// no trailing zeros. The zero polynomial is empty.
using Poly = std::vector<Fe>;

namespace fpoly {

void trim(Poly& a);
int degree(const Poly& a);
Poly constant(Fe c);
Poly x_power(const GaloisField& F, std::size_t n);
Poly from_ints(const GaloisField& F, const std::vector<long long>& c);

Poly add(const GaloisField& F, const Poly& a, const Poly& b);
Poly sub(const GaloisField& F, const Poly& a, const Poly& b);
Poly scale(const GaloisField& F, const Poly& a, Fe c);
Poly mul(const GaloisField& F, const Poly& a, const Poly& b);
std::pair<Poly, Poly> divmod(const GaloisField& F, const Poly& a, const Poly& b);
Poly rem(const GaloisField& F, const Poly& a, const Poly& b);
Poly monic(const GaloisField& F, const Poly& a);
Poly gcd(const GaloisField& F, Poly a, Poly b);
// s with s*a = 1 mod m, when gcd(a, m) = 1
std::optional<Poly> inverse_mod(const GaloisField& F, const Poly& a, const Poly& m);
Poly mulmod(const GaloisField& F, const Poly& a, const Poly& b, const Poly& m);
Poly powmod(const GaloisField& F, Poly base, const BigInt& e, const Poly& m);
Poly derivative(const GaloisField& F, const Poly& a);
Fe eval(const GaloisField& F, const Poly& a, Fe x);
// x^deg(a) a(1/x)
Poly reciprocal(const Poly& a);
bool is_squarefree(const GaloisField& F, const Poly& a);

// Distinct monic irreducible factors of a squarefree f, sorted by
// (degree, coefficient encodings).
std::vector<Poly> factor_squarefree(const GaloisField& F, const Poly& f, Rng& rng);
// Distinct roots in F, sorted by encoding.
std::vector<Fe> roots(const GaloisField& F, const Poly& f, Rng& rng);
bool is_irreducible(const GaloisField& F, const Poly& f);

// Order used for canonical sorting of factors.
bool canonical_less(const GaloisField& F, const Poly& a, const Poly& b);

}  // namespace fpoly
}  // namespace skewdual
