#include "skewdual/extension.hpp"

#include <stdexcept>

namespace skewdual {

Embedding::Embedding(FieldRef src, FieldRef dst) : src_(std::move(src)), dst_(std::move(dst)) {
  if (src_->characteristic() != dst_->characteristic()) throw std::invalid_argument("characteristic mismatch");
  if (dst_->degree() % src_->degree() != 0) throw std::invalid_argument("no embedding between these fields");
  const GaloisField& L = *dst_;
  Poly m;
  for (auto c : src_->modulus()) m.push_back(L.from_int(c));
  Fe rho;
  if (src_->same_as(L)) {
    rho = src_->degree() > 1 ? L.var() : L.one();  // identity
  } else {
    Rng rng(0x5eedULL);
    auto rts = fpoly::roots(L, m, rng);
    if (rts.empty()) throw std::logic_error("modulus has no root in the target field");
    rho = rts.front();
  }
  root_ = rho;
  images_.resize(src_->degree());
  Fe pw = L.one();
  for (unsigned i = 0; i < src_->degree(); ++i) {
    images_[i] = pw;
    pw = L.mul(pw, rho);
  }
}

Fe Embedding::operator()(Fe a) const {
  const GaloisField& L = *dst_;
  auto c = src_->coords(a);
  Fe s = L.zero();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i]) s = L.add(s, L.mul(L.from_int(c[i]), images_[i]));
  }
  return s;
}

RelativeBasis::RelativeBasis(Embedding emb, std::vector<Fe> basis) : emb_(std::move(emb)), basis_(std::move(basis)) {
  const GaloisField& L = *emb_.dst();
  const GaloisField& S = *emb_.src();
  const unsigned nl = L.degree(), ns = S.degree();
  if (basis_.size() * ns != nl) throw std::invalid_argument("basis has the wrong size");
  prime_ = GaloisField::prime(L.characteristic());
  const GaloisField& P = *prime_;
  // column (j*ns + i) = coords of emb(t^i) * b_j
  Matrix m(nl, nl);
  Fe ti = S.one();
  std::vector<Fe> tpow(ns);
  for (unsigned i = 0; i < ns; ++i) {
    tpow[i] = emb_(ti);
    ti = S.mul(ti, S.var());
  }
  for (std::size_t j = 0; j < basis_.size(); ++j) {
    for (unsigned i = 0; i < ns; ++i) {
      auto c = L.coords(L.mul(tpow[i], basis_[j]));
      for (unsigned r = 0; r < nl; ++r) m(r, j * ns + i) = P.from_int(c[r]);
    }
  }
  auto inv = linalg::inverse(P, m);
  if (!inv) throw std::invalid_argument("vectors do not form a basis");
  inverse_ = std::move(*inv);
}

RelativeBasis RelativeBasis::power(Embedding emb, Fe b) {
  const GaloisField& L = *emb.dst();
  const std::size_t d = emb.dst()->degree() / emb.src()->degree();
  std::vector<Fe> basis(d);
  Fe pw = L.one();
  for (std::size_t i = 0; i < d; ++i) {
    basis[i] = pw;
    pw = L.mul(pw, b);
  }
  return RelativeBasis(std::move(emb), std::move(basis));
}

std::vector<Fe> RelativeBasis::coords(Fe x) const {
  const GaloisField& L = *emb_.dst();
  const GaloisField& S = *emb_.src();
  const GaloisField& P = *prime_;
  const unsigned nl = L.degree(), ns = S.degree();
  auto c = L.coords(x);
  std::vector<Fe> v(nl);
  for (unsigned i = 0; i < nl; ++i) v[i] = P.from_int(c[i]);
  auto w = linalg::mul_vec(P, inverse_, v);
  std::vector<Fe> out(basis_.size());
  std::vector<std::uint32_t> sc(ns);
  for (std::size_t j = 0; j < basis_.size(); ++j) {
    for (unsigned i = 0; i < ns; ++i) sc[i] = static_cast<std::uint32_t>(P.encode(w[j * ns + i]));
    out[j] = S.from_coords(sc);
  }
  return out;
}

Fe RelativeBasis::combine(const std::vector<Fe>& c) const {
  const GaloisField& L = *emb_.dst();
  if (c.size() != basis_.size()) throw std::invalid_argument("coordinate vector has the wrong size");
  Fe s = L.zero();
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] != Fe{0}) s = L.add(s, L.mul(emb_(c[j]), basis_[j]));
  }
  return s;
}

std::optional<Fe> RelativeBasis::restrict(Fe x) const {
  auto c = coords(x);
  for (std::size_t j = 1; j < c.size(); ++j)
    if (c[j] != Fe{0}) return std::nullopt;
  return c[0];
}

}  // namespace skewdual
