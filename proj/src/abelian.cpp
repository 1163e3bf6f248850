#include "pcpg/abelian.hpp"

#include <stdexcept>

namespace pcpg {

std::vector<Int> AbelianCanon::normalize(std::vector<Int> coords) const {
  if (coords.size() != dim()) throw std::invalid_argument("AbelianCanon: bad coordinate size");
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    Int &v = coords[free_rank + i];
    v %= torsion[i];
    if (v < 0) v += torsion[i];
  }
  return coords;
}

std::vector<Int> AbelianCanon::project(const std::vector<Int> &orig_exponents) const {
  return normalize(to_canonical.apply(orig_exponents));
}

bool AbelianCanon::is_trivial_element(const std::vector<Int> &coords) const {
  for (const Int &v : normalize(coords))
    if (v != 0) return false;
  return true;
}

std::vector<Int> AbelianCanon::add(const std::vector<Int> &a, const std::vector<Int> &b) const {
  std::vector<Int> r(dim());
  for (std::size_t i = 0; i < dim(); ++i) r[i] = a[i] + b[i];
  return normalize(std::move(r));
}

std::vector<Int> AbelianCanon::neg(const std::vector<Int> &a) const {
  std::vector<Int> r(dim());
  for (std::size_t i = 0; i < dim(); ++i) r[i] = -a[i];
  return normalize(std::move(r));
}

Word AbelianCanon::lift_word(const std::vector<Int> &coords) const {
  if (coords.size() != dim()) throw std::invalid_argument("AbelianCanon: bad coordinate size");
  std::vector<Int> x(original_gens());
  for (std::size_t j = 0; j < original_gens(); ++j)
    for (std::size_t i = 0; i < dim(); ++i)
      x[j] += from_canonical.at(j, i) * coords[i];
  Word w;
  for (std::size_t j = 0; j < original_gens(); ++j) {
    long long e = static_cast<long long>(x[j]);
    w = w * Word::letter(static_cast<int>(j)).pow(e);
  }
  return w;
}

AbelianCanon canonicalize(std::size_t ngens, const IntMatrix &relator_rows) {
  if (relator_rows.rows() > 0 && relator_rows.cols() != ngens)
    throw std::invalid_argument("canonicalize: relator width does not match generators");
  // Relators as columns: the relation lattice is the image of M = R^T.
  IntMatrix M = relator_rows.cols() == ngens
                    ? relator_rows.transpose()
                    : IntMatrix(ngens, 0);
  SmithDecomposition s = smith_normal_form(M);
  IntMatrix Uinv = unimodular_inverse(s.U);

  // In coordinates y = U x the lattice is spanned by d_i e_i.
  std::vector<std::size_t> free_idx, tor_idx;
  for (std::size_t i = 0; i < ngens; ++i) {
    if (i >= s.rank)
      free_idx.push_back(i);
    else if (s.D.at(i, i) >= 2)
      tor_idx.push_back(i);
  }

  AbelianCanon c;
  c.free_rank = free_idx.size();
  for (std::size_t i : tor_idx) c.torsion.push_back(s.D.at(i, i));

  std::vector<std::size_t> order = free_idx;
  order.insert(order.end(), tor_idx.begin(), tor_idx.end());
  c.to_canonical = IntMatrix(order.size(), ngens);
  c.from_canonical = IntMatrix(ngens, order.size());
  for (std::size_t k = 0; k < order.size(); ++k)
    for (std::size_t j = 0; j < ngens; ++j) {
      c.to_canonical.at(k, j) = s.U.at(order[k], j);
      c.from_canonical.at(j, k) = Uinv.at(j, order[k]);
    }
  return c;
}

bool AbelianHom::respects_torsion() const {
  if (matrix.rows() != target.dim() || matrix.cols() != source.dim()) return false;
  for (std::size_t j = 0; j < source.torsion.size(); ++j) {
    const Int &d = source.torsion[j];
    std::size_t col = source.free_rank + j;
    for (std::size_t i = 0; i < target.free_rank; ++i)
      if (d * matrix.at(i, col) != 0) return false;
    for (std::size_t i = 0; i < target.torsion.size(); ++i)
      if ((d * matrix.at(target.free_rank + i, col)) % target.torsion[i] != 0)
        return false;
  }
  return true;
}

std::vector<Int> AbelianHom::apply(const std::vector<Int> &src_coords) const {
  return target.normalize(matrix.apply(src_coords));
}

AbelianHom hom_difference(const AbelianHom &phi, const AbelianHom &psi) {
  if (phi.source.dim() != psi.source.dim() || phi.target.dim() != psi.target.dim() ||
      phi.source.torsion != psi.source.torsion || phi.target.torsion != psi.target.torsion)
    throw std::invalid_argument("hom_difference: mismatched source/target canons");
  AbelianHom xi = phi;
  for (std::size_t i = 0; i < xi.matrix.rows(); ++i)
    for (std::size_t j = 0; j < xi.matrix.cols(); ++j)
      xi.matrix.at(i, j) -= psi.matrix.at(i, j);
  return xi;
}

std::vector<std::vector<Int>> hom_kernel(const AbelianHom &phi) {
  if (!phi.respects_torsion())
    throw std::invalid_argument("hom_kernel: homomorphism does not respect torsion");
  std::vector<Int> moduli(phi.target.dim(), 0), zero(phi.target.dim(), 0);
  for (std::size_t i = 0; i < phi.target.torsion.size(); ++i)
    moduli[phi.target.free_rank + i] = phi.target.torsion[i];
  auto sol = solve_mixed(phi.matrix, moduli, zero);
  // homogeneous systems are always solvable
  return sol->kernel;
}

std::vector<std::vector<Int>> hom_equalizer(const AbelianHom &phi, const AbelianHom &psi) {
  return hom_kernel(hom_difference(phi, psi));
}

std::vector<std::vector<Int>>
mixed_kernel(const AbelianCanon &B, const std::vector<std::vector<Int>> &targets) {
  IntMatrix M(B.dim(), targets.size());
  for (std::size_t j = 0; j < targets.size(); ++j) {
    if (targets[j].size() != B.dim())
      throw std::invalid_argument("mixed_kernel: target coordinate size mismatch");
    for (std::size_t i = 0; i < B.dim(); ++i) M.at(i, j) = targets[j][i];
  }
  std::vector<Int> moduli(B.dim(), 0), zero(B.dim(), 0);
  for (std::size_t i = 0; i < B.torsion.size(); ++i)
    moduli[B.free_rank + i] = B.torsion[i];
  return solve_mixed(M, moduli, zero)->kernel;
}

} // namespace pcpg
