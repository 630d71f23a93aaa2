#pragma once

#include <optional>
#include <vector>

#include "skewdual/linalg.hpp"
#include "skewdual/poly.hpp"

namespace skewdual {

// Ring map src -> dst sending the generator t of src to a root of src's
// modulus in dst (the root with the smallest encoding).
class Embedding {
 public:
  Embedding() = default;
  Embedding(FieldRef src, FieldRef dst);

  Fe operator()(Fe a) const;
  Fe root() const { return root_; }
  const FieldRef& src() const { return src_; }
  const FieldRef& dst() const { return dst_; }

 private:
  FieldRef src_, dst_;
  Fe root_;
  std::vector<Fe> images_;  // images of t^i
};

// A basis of `big` over a subfield `small` (given by an embedding), with
// coordinates computed by a precomputed GF(p)-linear inverse.
class RelativeBasis {
 public:
  RelativeBasis() = default;
  RelativeBasis(Embedding emb, std::vector<Fe> basis);
  // power basis 1, b, b^2, ...
  static RelativeBasis power(Embedding emb, Fe b);

  std::vector<Fe> coords(Fe x) const;
  Fe combine(const std::vector<Fe>& c) const;
  // the preimage of x in `small`, if x lies in the subfield (basis[0] = 1)
  std::optional<Fe> restrict(Fe x) const;

  const Embedding& embedding() const { return emb_; }
  const std::vector<Fe>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }
  const GaloisField& big() const { return *emb_.dst(); }
  const GaloisField& small() const { return *emb_.src(); }

 private:
  Embedding emb_;
  std::vector<Fe> basis_;
  FieldRef prime_;
  Matrix inverse_;  // GF(p) matrix: big coords -> (small coords, basis index)
};

}  // namespace skewdual
