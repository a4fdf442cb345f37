#include "zpoly.hpp"

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <stdexcept>

namespace qheis::detail {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

u64 prime_at(size_t i) {
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  static std::vector<u64> ps;
  static mpz_class next = mpz_class(1) << 62;
  while (ps.size() <= i) {
    mpz_nextprime(next.get_mpz_t(), next.get_mpz_t());
    ps.push_back(next.get_ui());
  }
  return ps[i];
}

using PPoly = std::vector<u64>;

void ptrim(PPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

u64 reduce(const mpz_class& c, u64 p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), p);
  return r.get_ui();
}

PPoly to_p(const ZPoly& a, u64 p) {
  PPoly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = reduce(a[i], p);
  ptrim(r);
  return r;
}

// a mod b in place; b monic
void prem(PPoly& a, const PPoly& b, u64 p) {
  const size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    u64 f = a.back();
    if (f != 0) {
      size_t off = a.size() - 1 - db;
      for (size_t i = 0; i < db; ++i) {
        u64 s = mulmod(f, b[i], p);
        a[off + i] = a[off + i] >= s ? a[off + i] - s : a[off + i] + p - s;
      }
    }
    a.pop_back();
    ptrim(a);
  }
}

void make_monic(PPoly& a, u64 p) {
  u64 inv = invmod(a.back(), p);
  for (auto& c : a) c = mulmod(c, inv, p);
}

PPoly pgcd(PPoly a, PPoly b, u64 p) {
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    make_monic(b, p);
    prem(a, b, p);
    std::swap(a, b);
  }
  if (!a.empty()) make_monic(a, p);
  return a;
}

ZPoly primitive(const ZPoly& a) {
  mpz_class c = content(a);
  ZPoly r(a);
  if (c != 1)
    for (auto& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  if (!r.empty() && r.back() < 0)
    for (auto& x : r) x = -x;
  return r;
}

}  // namespace

void trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

mpz_class content(const ZPoly& a) {
  mpz_class g = 0;
  for (const auto& x : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  auto nonzero = [](const ZPoly& p) {
    std::vector<size_t> idx;
    for (size_t i = 0; i < p.size(); ++i)
      if (sgn(p[i]) != 0) idx.push_back(i);
    return idx;
  };
  std::vector<size_t> ia = nonzero(a), ib = nonzero(b);
  ZPoly r(a.size() + b.size() - 1);
  for (size_t i : ia)
    for (size_t j : ib) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  trim(r);
  return r;
}

bool div_exact(const ZPoly& a, const ZPoly& b, ZPoly& quo) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  quo.clear();
  if (a.empty()) return true;
  if (a.size() < b.size()) return false;
  ZPoly r(a);
  const size_t db = b.size() - 1;
  quo.assign(a.size() - db, 0);
  mpz_class f;
  for (size_t k = a.size(); k-- > db;) {
    if (r[k] == 0) continue;
    if (!mpz_divisible_p(r[k].get_mpz_t(), b.back().get_mpz_t())) return false;
    mpz_divexact(f.get_mpz_t(), r[k].get_mpz_t(), b.back().get_mpz_t());
    quo[k - db] = f;
    for (size_t i = 0; i <= db; ++i) mpz_submul(r[k - db + i].get_mpz_t(), f.get_mpz_t(), b[i].get_mpz_t());
  }
  for (size_t i = 0; i < db; ++i)
    if (r[i] != 0) return false;
  trim(quo);
  return true;
}

ZPoly gcd(const ZPoly& a0, const ZPoly& b0) {
  if (a0.empty() || b0.empty()) {
    ZPoly r = a0.empty() ? b0 : a0;
    if (!r.empty() && r.back() < 0)
      for (auto& x : r) x = -x;
    return r;
  }

  mpz_class cg;
  {
    mpz_class ca = content(a0), cb = content(b0);
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  }
  if (a0.size() == 1 || b0.size() == 1) return {cg};

  ZPoly a = primitive(a0), b = primitive(b0);
  mpz_class gamma;
  mpz_gcd(gamma.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());

  int best = std::min(degree(a), degree(b)) + 1;
  ZPoly h;
  mpz_class m = 1;
  for (size_t pi = 0; pi < 4096; ++pi) {
    const u64 p = prime_at(pi);
    if (reduce(a.back(), p) == 0 || reduce(b.back(), p) == 0) continue;
    PPoly g = pgcd(to_p(a, p), to_p(b, p), p);
    int dg = static_cast<int>(g.size()) - 1;
    if (dg == 0) return {cg};
    if (dg > best) continue;
    u64 gm = reduce(gamma, p);
    for (auto& c : g) c = mulmod(c, gm, p);

    if (dg < best) {
      best = dg;
      h.assign(g.size(), 0);
      for (size_t i = 0; i < g.size(); ++i) h[i] = mpz_class(static_cast<unsigned long>(g[i]));
      m = mpz_class(static_cast<unsigned long>(p));
      for (auto& c : h)
        if (c > m / 2) c -= m;
      continue;
    }

    // CRT: h mod m, g mod p
    mpz_class pz(static_cast<unsigned long>(p));
    mpz_class minv;
    mpz_invert(minv.get_mpz_t(), m.get_mpz_t(), pz.get_mpz_t());
    mpz_class m2 = m * pz;
    bool same = true;
    for (size_t i = 0; i < h.size(); ++i) {
      mpz_class gi(static_cast<unsigned long>(g[i]));
      mpz_class diff = gi - h[i];
      mpz_class k = diff * minv;
      mpz_fdiv_r(k.get_mpz_t(), k.get_mpz_t(), pz.get_mpz_t());
      if (k != 0) {
        mpz_class nv = h[i] + k * m;
        mpz_fdiv_r(nv.get_mpz_t(), nv.get_mpz_t(), m2.get_mpz_t());
        if (nv > m2 / 2) nv -= m2;
        h[i] = nv;
        same = false;
      } else {
        mpz_class nv = h[i];
        mpz_fdiv_r(nv.get_mpz_t(), nv.get_mpz_t(), m2.get_mpz_t());
        if (nv > m2 / 2) nv -= m2;
        if (nv != h[i]) same = false;
        h[i] = nv;
      }
    }
    m = m2;
    if (same) {
      ZPoly cand = primitive(h);
      ZPoly qa, qb;
      if (div_exact(a, cand, qa) && div_exact(b, cand, qb)) {
        for (auto& c : cand) c *= cg;
        return cand;
      }
    }
  }
  throw std::runtime_error("modular gcd did not converge");
}

}  // namespace qheis::detail
