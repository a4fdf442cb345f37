// Integer polynomial helpers backing QScalar. Not installed.
#pragma once

#include <gmpxx.h>

#include <vector>

namespace qheis::detail {

// c[0] + c[1] t + ... ; empty means zero. Callers keep it trimmed.
using ZPoly = std::vector<mpz_class>;

void trim(ZPoly& a);
int degree(const ZPoly& a);  // -1 for zero
mpz_class content(const ZPoly& a);
ZPoly mul(const ZPoly& a, const ZPoly& b);

// true and sets quo when b divides a exactly over Z
bool div_exact(const ZPoly& a, const ZPoly& b, ZPoly& quo);

// gcd over Z[t] (content included), positive leading coefficient.
ZPoly gcd(const ZPoly& a, const ZPoly& b);

}  // namespace qheis::detail
