#include "skewdual/serialize.hpp"

#include <stdexcept>

namespace skewdual::serialize {

json field(const GaloisField& F) {
  return {{"p", F.characteristic()}, {"degree", F.degree()}, {"modulus", F.modulus()}};
}

json element(const GaloisField& F, Fe a) { return F.coords(a); }

Fe parse_element(const GaloisField& F, const json& j) {
  const long long p = F.characteristic();
  if (j.is_number_integer()) {
    const long long v = j.get<long long>();
    if (v < 0 || v >= p) throw std::invalid_argument("field element out of range");
    return F.from_int(v);
  }
  if (!j.is_array() || j.size() > F.degree()) throw std::invalid_argument("malformed field element");
  std::vector<std::uint32_t> c(F.degree(), 0);
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer()) throw std::invalid_argument("malformed field element");
    const long long v = j[i].get<long long>();
    if (v < 0 || v >= p) throw std::invalid_argument("coordinate out of range");
    c[i] = static_cast<std::uint32_t>(v);
  }
  return F.from_coords(c);
}

json poly(const GaloisField& F, const Poly& P) {
  json out = json::array();
  for (Fe a : P) out.push_back(element(F, a));
  return out;
}

json ore_poly(const OrePoly& f) { return poly(f.ring()->K(), f.coeffs()); }

OrePoly parse_ore_poly(const OreRingRef& ring, const json& j) {
  if (!j.is_array()) throw std::invalid_argument("generator must be a list of coefficients");
  std::vector<Fe> c;
  for (const auto& a : j) c.push_back(parse_element(ring->K(), a));
  return OrePoly(ring, std::move(c));
}

json matrix(const GaloisField& F, const Matrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols; ++j) row.push_back(element(F, m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

json big(const BigInt& n) { return n.str(); }

json params(const CodeParameters& p) {
  json out = {{"q", p.q}, {"r", p.r}};
  if (p.modulus) {
    out["modulus"] = *p.modulus;
  } else {
    out["k"] = p.k;
  }
  if (p.field_modulus) out["field_modulus"] = *p.field_modulus;
  return out;
}

CodeParameters parse_params(const json& j) {
  CodeParameters p;
  p.q = j.at("q").get<std::uint64_t>();
  p.r = j.at("r").get<unsigned>();
  if (j.contains("k")) p.k = j.at("k").get<unsigned>();
  if (j.contains("modulus")) p.modulus = j.at("modulus").get<std::vector<long long>>();
  if (j.contains("field_modulus")) p.field_modulus = j.at("field_modulus").get<std::vector<std::uint32_t>>();
  p.validate();
  return p;
}

json code(const CodeParameters& p, const QuotientAlgebra& E, const OrePoly& f, bool with_matrix) {
  const std::size_t n = E.length();
  json out = {{"params", params(p)},
              {"generator", ore_poly(f)},
              {"length", n},
              {"dim", n - static_cast<std::size_t>(f.degree())},
              {"selfdual", is_selfdual(E, f)}};
  if (with_matrix) {
    // rows X^i f, i < n - deg f
    const GaloisField& K = E.ring()->K();
    Matrix m(0, n);
    OrePoly row = f;
    const OrePoly X = OrePoly::monomial(E.ring(), K.one(), 1);
    for (std::size_t i = 0; i + static_cast<std::size_t>(f.degree()) < n; ++i) {
      std::vector<Fe> c = row.coeffs();
      c.resize(n, K.zero());
      m.append_row(c);
      row = E.mul(X, row);
    }
    out["generator_matrix"] = matrix(K, m);
  }
  return out;
}

namespace {

json alg(const FactorComponent& c, const AlgElem& a) { return poly(*c.L, a.c); }

}  // namespace

json decomposition(const Decomposition& D) {
  json comps = json::array();
  for (const auto& c : D.components()) {
    comps.push_back({{"index", c.index},
                     {"P", poly(D.F(), c.shape.P)},
                     {"q_l", c.L->order()},
                     {"symmetry_class", to_string(c.cls())},
                     {"tau_partner", c.tau()},
                     {"field", field(*c.L)},
                     {"y", element(*c.L, c.y)},
                     {"sigma_exponent", c.sigma_exp},
                     {"x", alg(c, c.x)},
                     {"zeta", alg(c, c.zeta)}});
  }
  return {{"F", field(D.F())},
          {"K", field(D.K())},
          {"central_modulus", poly(D.F(), D.central_modulus())},
          {"length", D.length()},
          {"components", std::move(comps)}};
}

json oracle_report(const GaloisField& K, const oracle::CodeReport& rep) {
  json codes = json::array();
  for (const auto& m : rep.selfdual) codes.push_back(matrix(K, m));
  return {{"instance", rep.params},
          {"subspaces", rep.subspaces},
          {"ideals", rep.ideals},
          {"selforthogonal", rep.selforthogonal},
          {"selfdual", rep.selfdual.size()},
          {"witnesses", std::move(codes)}};
}

json header(const std::string& command, const json& params) {
  return {{"schema", "skewdual"}, {"version", schema_version}, {"command", command}, {"params", params}};
}

}  // namespace skewdual::serialize
