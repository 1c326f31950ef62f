#pragma once

// Exact rational linear algebra over GMP rationals. Used for torus vectors,
// Weyl group combinatorics and every properness decision.

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace liesurf {

using Rational = mpq_class;
using QVector = std::vector<Rational>;
using QMatrix = std::vector<QVector>;  // row-major list of rows

std::string to_string(const Rational& x);
/// Accepts "3", "-3/2", "0". Throws ParameterError on malformed input.
Rational parse_rational(const std::string& text);

/// Closest rational with denominator <= max_den, accepted only if within tol.
std::optional<Rational> rationalize(double x, double tol = 1e-9, long max_den = 1000000);

Rational dot(const QVector& a, const QVector& b);
bool is_zero(const QVector& v);

struct RowEchelon {
  QMatrix rows;              // reduced row echelon form, zero rows dropped
  std::vector<int> pivots;   // pivot column of each row
};

RowEchelon rref(QMatrix rows);
int rank(const QMatrix& rows);
/// Basis of {x : A x = 0} where A is given by `rows` with `cols` columns.
/// The basis is the standard one read off the reduced echelon form.
std::vector<QVector> nullspace(const QMatrix& rows, int cols);
/// True iff v lies in the row span of `basis`.
bool in_span(const QMatrix& basis, const QVector& v);

/// Primitive integer multiple of v (gcd 1, same direction); zero stays zero.
std::vector<mpz_class> primitive_integer_vector(const QVector& v);

}  // namespace liesurf
