#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "eschur/composition.hpp"
#include "eschur/exact_linalg.hpp"
#include "eschur/hecke.hpp"
#include "eschur/qsym.hpp"
#include "eschur/tableau.hpp"

namespace eschur {

using ActionMatrix = DenseMatrix<int>;

/// X_alpha realized on the filtration basis T_1, ..., T_m. mats[i-1] is the
/// matrix of pi_i; its column j holds the image of T_j.
struct ModuleMatrices {
  Composition alpha;
  Filtration order;
  std::vector<ActionMatrix> mats;

  std::size_t dim() const noexcept { return order.size(); }
  const ActionMatrix& pi(int i) const { return mats.at(static_cast<std::size_t>(i - 1)); }
};

inline ModuleMatrices matrices(const Composition& alpha) {
  Filtration order = filtration(alpha);
  const std::size_t m = order.size();
  const int n = alpha.weight();
  std::vector<ActionMatrix> mats;
  for (int i = 1; i < n; ++i) {
    ActionMatrix p(m, m, 0);
    for (std::size_t j = 0; j < m; ++j) {
      const ActionResult r = pi_quotient(i, order[j]);
      if (!r.is_zero()) p(order.index_of(*r.image), j) = 1;
    }
    mats.push_back(std::move(p));
  }
  return ModuleMatrices{alpha, std::move(order), std::move(mats)};
}

/// Exact matrix check of idempotence, far commutation and braid relations.
inline bool satisfies_hecke_relations(const ModuleMatrices& mm) {
  const int n = mm.alpha.weight();
  for (int i = 1; i < n; ++i) {
    const ActionMatrix& a = mm.pi(i);
    if (!(a * a == a)) return false;
    for (int j = i + 2; j < n; ++j) {
      const ActionMatrix& b = mm.pi(j);
      if (!(a * b == b * a)) return false;
    }
    if (i + 1 < n) {
      const ActionMatrix& b = mm.pi(i + 1);
      if (!(a * b * a == b * a * b)) return false;
    }
  }
  return true;
}

/// Every nonzero entry lies at row <= column, and columns hold at most one 1.
inline bool is_triangular(const ModuleMatrices& mm) {
  for (const ActionMatrix& p : mm.mats) {
    for (std::size_t c = 0; c < p.cols(); ++c) {
      int nonzero = 0;
      for (std::size_t r = 0; r < p.rows(); ++r) {
        if (p(r, c) == 0) continue;
        if (p(r, c) != 1 || r > c) return false;
        ++nonzero;
      }
      if (nonzero > 1) return false;
    }
  }
  return true;
}

/// Factor compositions of the series X_0 < X_1 < ... < X_m, read off the
/// diagonals: on X_j / X_{j-1}, pi_i either fixes T_j or kills it.
inline std::vector<Composition> composition_factors(const ModuleMatrices& mm) {
  const int n = mm.alpha.weight();
  std::vector<Composition> factors;
  factors.reserve(mm.dim());
  for (std::size_t j = 0; j < mm.dim(); ++j) {
    std::vector<int> killed;
    for (int i = 1; i < n; ++i) {
      if (mm.pi(i)(j, j) != 1) killed.push_back(i);
    }
    factors.push_back(composition_of_subset(DescentSubset(n, std::move(killed))));
  }
  return factors;
}

inline std::vector<Composition> composition_factors(const Composition& alpha) {
  return composition_factors(matrices(alpha));
}

/// Quasisymmetric characteristic: the sum of F over the composition factors.
inline QSymElement characteristic(const ModuleMatrices& mm) {
  QSymElement out(mm.alpha.weight(), Basis::fundamental);
  for (const Composition& beta : composition_factors(mm)) out.add_term(beta, 1);
  return out;
}

inline QSymElement characteristic(const Composition& alpha) {
  return characteristic(matrices(alpha));
}

/// Basis of the endomorphisms of X_alpha: matrices E with E P_i = P_i E for all i.
struct EndomorphismSpace {
  Composition alpha;
  std::vector<DenseMatrix<Rational>> basis;

  std::size_t dimension() const noexcept { return basis.size(); }
};

/// The system E P_i - P_i E = 0 has m^2 unknowns E(r, c), flattened r*m + c.
/// Every column of P_i has at most one nonzero, which keeps each equation short.
inline std::vector<SparseRow> commutation_equations(const ModuleMatrices& mm) {
  const std::size_t m = mm.dim();
  std::vector<SparseRow> eqs;
  for (const ActionMatrix& p : mm.mats) {
    std::vector<std::optional<std::size_t>> image(m);
    std::vector<std::vector<std::size_t>> preimages(m);
    for (std::size_t c = 0; c < m; ++c) {
      for (std::size_t r = 0; r < m; ++r) {
        if (p(r, c) != 0) {
          image[c] = r;
          preimages[r].push_back(c);
        }
      }
    }
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t c = 0; c < m; ++c) {
        // (E P)(r, c) = E(r, image(c));  (P E)(r, c) = sum over k with image(k) = r of E(k, c).
        SparseRow eq;
        if (image[c]) eq.emplace_back(r * m + *image[c], Integer(1));
        for (std::size_t k : preimages[r]) eq.emplace_back(k * m + c, Integer(-1));
        eq = detail::canonical(std::move(eq));
        if (!eq.empty()) eqs.push_back(std::move(eq));
      }
    }
  }
  return eqs;
}

inline EndomorphismSpace commutant_basis(const ModuleMatrices& mm) {
  const std::size_t m = mm.dim();
  EndomorphismSpace space{mm.alpha, {}};
  for (const auto& vec : nullspace(commutation_equations(mm), m * m)) {
    DenseMatrix<Rational> e(m, m);
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t c = 0; c < m; ++c) e(r, c) = vec[r * m + c];
    }
    space.basis.push_back(std::move(e));
  }
  return space;
}

inline EndomorphismSpace commutant_basis(const Composition& alpha) {
  return commutant_basis(matrices(alpha));
}

/// Indecomposable when the commutant is 1-dimensional (scalars only, so the
/// only idempotents are 0 and the identity). A larger commutant is reported as
/// inconclusive; no decomposition is attempted.
struct Verdict {
  bool indecomposable;
  std::size_t commutant_dimension;
};

inline Verdict is_indecomposable(const EndomorphismSpace& space) {
  return Verdict{space.dimension() == 1, space.dimension()};
}

inline Verdict is_indecomposable(const Composition& alpha) {
  return is_indecomposable(commutant_basis(alpha));
}

/// The span of NSET(alpha) is closed under every pi_i acting on V_alpha.
inline bool verify_submodule_closure(const Composition& alpha) {
  const int n = alpha.weight();
  for (const Tableau& t : enumerate_srit(alpha)) {
    if (is_standard_extended(t)) continue;
    for (int i = 1; i < n; ++i) {
      if (is_standard_extended(pi_full(i, t))) return false;
    }
  }
  return true;
}

}  // namespace eschur
