#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "liesurf/exact.hpp"
#include "liesurf/lie_core.hpp"

namespace liesurf {

/// Exact coordinates of an element of the split torus a.
///
/// sl(n,R): the n diagonal entries (trace zero).
/// su(p,q): (a_1, ..., a_q) for diag(a_1..a_q, 0..0, -a_q..-a_1).
using TorusVector = QVector;

/// Signed permutation acting by (w.v)_i = s_i * v_{perm_i}. Elements of the
/// Weyl group of sl(n,R) never carry signs.
struct WeylElement {
  std::array<std::int8_t, 9> perm{};
  std::uint16_t negate = 0;  // bit i set: s_i = -1
  std::int8_t size = 0;

  static WeylElement identity(int n);
  bool is_identity() const;
  int sign(int i) const { return (negate >> i) & 1 ? -1 : 1; }
  QVector apply(const QVector& v) const;
  RVector apply(const RVector& v) const;
  /// One-line signed notation, 1-based: "[2,-1,3]".
  std::string to_string() const;
  bool operator==(const WeylElement& o) const {
    return perm == o.perm && negate == o.negate && size == o.size;
  }
};

struct Root {
  std::vector<int> coeffs;  // integer functional on the torus coordinates
  int multiplicity = 0;
  bool positive = false;
  bool simple = false;
};

class SplitTorusData {
 public:
  Algebra parent;
  int rank = 0;
  int coord_count = 0;  // n for sl(n,R), q for su(p,q)
  std::vector<Root> roots;
  QMatrix chamber;  // rows r: v is dominant iff r.v >= 0 for every row
  std::vector<WeylElement> weyl;
  int w0_index = -1;
  QMatrix iota;  // matrix of iota = -w0 on torus coordinates
  QMatrix b_basis;

  bool in_torus(const TorusVector& v) const;
  bool in_chamber(const TorusVector& v) const;
  bool in_chamber(const RVector& v, double tol) const;
  bool in_b(const TorusVector& v) const;
  bool in_b_plus(const TorusVector& v) const { return in_b(v) && in_chamber(v); }
  TorusVector apply_iota(const TorusVector& v) const;
  RVector apply_iota(const RVector& v) const;
  /// Full diagonal of the ambient matrix.
  RVector diagonal(const RVector& v) const;
  CMatrix matrix(const RVector& v) const;
  /// Torus coordinates of H if H is a real diagonal element of a with
  /// rational entries (denominator <= 64), else nullopt.
  std::optional<TorusVector> coordinates_of(const CMatrix& H, double tol = 1e-9) const;
  RVector float_coordinates_of(const CMatrix& H) const;
  /// A fixed strictly dominant integral point.
  TorusVector strictly_dominant_point() const;
  const WeylElement& w0() const { return weyl.at(w0_index); }
  std::vector<const Root*> positive_roots() const;
  std::vector<const Root*> simple_roots() const;
  static std::string positivity_convention();
};

using Torus = std::shared_ptr<const SplitTorusData>;

/// Capped at rank 8.
Torus split_torus(const Algebra& alg);

struct DominantResult {
  TorusVector v_plus;
  WeylElement w;
};

DominantResult dominant_representative(const SplitTorusData& torus, const TorusVector& v);
RVector dominant_representative(const SplitTorusData& torus, const RVector& v);

struct BSpace {
  QMatrix basis;
  QMatrix inequalities;  // b_+ = b intersected with these half-spaces
};

BSpace b_space(const SplitTorusData& torus);

std::vector<std::string> to_strings(const TorusVector& v);
RVector to_double(const TorusVector& v);

}  // namespace liesurf
