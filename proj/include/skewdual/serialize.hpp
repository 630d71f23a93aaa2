#pragma once

#include <json.hpp>
#include <string>

#include "skewdual/codes.hpp"
#include "skewdual/oracle.hpp"

// JSON forms of fields, elements, generators and reports. Field elements are
// coordinate lists over GF(p), constant term first; exact integers that may
// exceed 64 bits are decimal strings.
namespace skewdual::serialize {

using json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

json field(const GaloisField& F);
json element(const GaloisField& F, Fe a);
// accepts a coordinate list or a nonnegative integer < p
Fe parse_element(const GaloisField& F, const json& j);

json poly(const GaloisField& F, const Poly& P);
json ore_poly(const OrePoly& f);
OrePoly parse_ore_poly(const OreRingRef& ring, const json& j);
json matrix(const GaloisField& F, const Matrix& m);
json big(const BigInt& n);

json params(const CodeParameters& p);
CodeParameters parse_params(const json& j);

// {params, generator, dim, selfdual}; optional generator matrix over K
json code(const CodeParameters& p, const QuotientAlgebra& E, const OrePoly& f, bool with_matrix = false);
json decomposition(const Decomposition& D);
json oracle_report(const GaloisField& K, const oracle::CodeReport& rep);
// first record of every stream
json header(const std::string& command, const json& params);

}  // namespace skewdual::serialize
