#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liesurf/lie_core.hpp"
#include "liesurf/roots_weyl.hpp"

namespace liesurf {

enum class TripleKind { partition, rho1, rho2, custom };
std::string to_string(TripleKind k);

/// Images (H, E, F) of a standard sl(2,R)-triple h = A0, e, f.
struct Sl2Triple {
  Algebra alg;
  Torus torus;
  CMatrix H, E, F;
  TripleKind kind = TripleKind::custom;
  std::string label;
  std::vector<int> partition;  // only for TripleKind::partition
  /// Torus coordinates of H moved into the closed chamber, when H is diagonal in a.
  std::optional<TorusVector> dominant;
};

/// Formats a partition as "[3,1^2]".
std::string partition_symbol(const std::vector<int>& parts);
/// All parts share the same parity.
bool parity_rule_even(const std::vector<int>& parts);
/// Partitions of n in reverse lexicographic order, parts non-increasing.
std::vector<std::vector<int>> partitions_of(int n);

// The Torus overloads reuse an existing split torus of the same algebra.
Sl2Triple sl2_from_partition(const Torus& torus, const std::vector<int>& parts);
Sl2Triple sl2_from_partition(const Algebra& sl_n, const std::vector<int>& parts);
Sl2Triple rho1_su(const Torus& torus);
Sl2Triple rho1_su(const Algebra& su_pq);
/// Throws ParameterError ("undefined") for p == q.
Sl2Triple rho2_su(const Torus& torus);
Sl2Triple rho2_su(const Algebra& su_pq);
/// Validates membership; fills `dominant` when H lies in a.
Sl2Triple custom_triple(const Torus& torus, const CMatrix& H, const CMatrix& E, const CMatrix& F,
                        const std::string& label = "custom", const Tolerances& tol = {});

struct TripleCheck {
  bool ok = false;
  double r_he = 0, r_hf = 0, r_ef = 0;  // relative bracket residuals
  double membership = 0;                // worst of H, E, F
};
TripleCheck verify_sl2_triple(const Sl2Triple& t, const Tolerances& tol = {});

/// Weight -> multiplicity of ad H on g (or on the invariant subspace S).
/// Throws NumericalError when an eigenvalue is not within weight_rounding of an integer.
std::map<int, int> weight_multiplicities(const Sl2Triple& t, const Tolerances& tol = {});
std::map<int, int> weight_multiplicities(const Sl2Triple& t, const SubspaceOfG& S,
                                         const Tolerances& tol = {});

bool is_even(const Sl2Triple& t, const Tolerances& tol = {});

/// exp(pi i H), built from an eigenbasis of H. Real, with entries of the
/// form +-1 on each H-eigenspace.
CMatrix sigma(const Sl2Triple& t, const Tolerances& tol = {});
/// Sum of the even ad H eigenspaces.
SubspaceOfG g_even(const Sl2Triple& t, const Tolerances& tol = {});
/// +1 eigenspace of Ad(sigma).
SubspaceOfG ad_sigma_fixed(const Sl2Triple& t, const Tolerances& tol = {});
/// Common kernel of ad H, ad E, ad F.
SubspaceOfG triple_centralizer(const Sl2Triple& t, const Tolerances& tol = {});

/// One irreducible piece: chain v_0 = highest weight vector, v_k = (ad F)^k v_0.
struct IsotypicPiece {
  int dimension = 0;  // k + 1 for highest weight k
  int index = 0;      // j, 1-based within pieces of the same dimension
  RMatrix chain;      // algebra coordinates, one column per v_k
};

struct IsotypicData {
  std::map<int, int> weight_mult;    // m_j
  std::map<int, int> module_mult;    // [S : V_k], k >= 1
  std::vector<IsotypicPiece> pieces; // descending highest weight, then canonical order
  /// (i, j) of the odd-dimensional pieces, i.e. V_{2i+1}; same order as pieces.
  std::vector<std::pair<int, int>> lambda;
  std::vector<int> lambda_piece;     // index into pieces for each lambda entry
  RMatrix coefficient_map;           // coordinates in the concatenated chains
  std::vector<int> offsets;          // first column of each piece in that concatenation

  int piece_of(int i, int j) const;  // -1 if absent
  /// q_{i,j}(p_{i,j}(x)) for algebra coordinates x.
  RVector model_coefficients(int piece, const RVector& x) const;
  /// p_{i,j}(x) in algebra coordinates.
  RVector project(int piece, const RVector& x) const;
};

/// Decomposition of g, or of an ad-invariant subspace S.
IsotypicData module_multiplicities(const Sl2Triple& t, const Tolerances& tol = {});
IsotypicData module_multiplicities(const Sl2Triple& t, const SubspaceOfG& S, const Tolerances& tol = {});

/// Sum over i of [S : V_{2i+1}].
int genus_bound(const Sl2Triple& t, const SubspaceOfG& S, const Tolerances& tol = {});

/// Even triples whose dominant vectors form a basis of b (sl(n,R) only).
std::vector<Sl2Triple> even_sl2_basis_of_b(const Torus& torus);
std::vector<Sl2Triple> even_sl2_basis_of_b(const Algebra& sl_n);

struct StarElement {
  CMatrix X;
  ElementKind kind = ElementKind::mixed;
  double period_residual = 0;  // |exp(X) - 1|, elliptic members only
};

/// Basis of a theta-stable centralizer in which every elliptic member has
/// exp(X) = 1. Throws UnsupportedError when no such basis is found among
/// the rescaled compact candidates.
std::vector<StarElement> property_star_basis(const SubspaceOfG& z, const Tolerances& tol = {});

}  // namespace liesurf
