// q-deformed cosine and sine: exact series coefficients and numeric values.
#pragma once

#include "qheis/fieldcalc.hpp"
#include "qheis/qarith.hpp"

namespace qheis {

enum class TrigKind { Cos, Sin };

const char* to_string(TrigKind k);

struct QTrigCoeff {
  TrigKind kind;
  long k;
  QScalar value;
};

// cos: (-1)^k q^-k / ([2k]! lambda^2k), multiplies x^2k
// sin: (-1)^k q^(k+1) / ([2k+1]! lambda^(2k+1)), multiplies x^(2k+1)
QScalar trig_coeff(TrigKind kind, long k);
QTrigCoeff trig_term(TrigKind kind, long k);

// prod_{j=1..m} (q^j - q^-j) = [m]! lambda^m
QScalar lambda_factorial(long m);

// Symmetric Gaussian binomial [n]! / ([k]! [n-k]!), built by Pascal recursion.
QScalar qbinomial(long n, long k);

// Truncated series of the function x -> K(k_scale * x), powers < degree_cap.
FieldElem trig_series(TrigKind kind, const QScalar& k_scale, int degree_cap);

// Partial sums until the next term is below tol * (1 + |sum|). The sum is
// carried out in MPFR with enough bits to absorb the cancellation between
// the large intermediate terms.
double trig_eval(TrigKind kind, double x0, double q0, double tol = 1e-16, int term_cap = 500);

// Same sum at the lattice point x = q0^n, formed at working precision. The
// series cancels so strongly that rounding x to a double first destroys the
// decay on the even lattice.
double trig_eval_lattice(TrigKind kind, long n, double q0, double tol = 1e-16, int term_cap = 500);

// Coefficient of x^(2n) in cos_q(x)cos_q(qx) + q^-1 sin_q(x)sin_q(x/q).
QScalar pythagoras_coeff(long n);

// nabla of the series minus the closed-form derivative, both exact below
// degree_cap:
//   cos: nabla cos_q(kx) + k/(q lambda) sin_q(kx/q)
//   sin: nabla sin_q(kx) - k q/lambda cos_q(qkx)
FieldElem trig_nabla_residual(TrigKind kind, const QScalar& k_scale, int degree_cap);

// nabla^2 of the series minus its eigenvalue times the series:
//   cos: -k^2/(q lambda^2), sin: -k^2 q/lambda^2
FieldElem trig_laplace_residual(TrigKind kind, const QScalar& k_scale, int degree_cap);
QScalar trig_laplace_eigenvalue(TrigKind kind, const QScalar& k_scale);

}  // namespace qheis
