#include "schar/cyclotomic.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace schar {

namespace {

constexpr long kConductorCap = 20000000L;

struct PrimePower {
  long p;
  long q;  // p^v
  int v;
};

std::vector<PrimePower> factorize(long n) {
  std::vector<PrimePower> out;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    long q = 1;
    int v = 0;
    while (m % p == 0) {
      m /= p;
      q *= p;
      ++v;
    }
    out.push_back({p, q, v});
  }
  if (m > 1) out.push_back({m, m, 1});
  return out;
}

long mod_inverse(long a, long m) {
  long t = 0, nt = 1, r = m, nr = a % m;
  if (nr < 0) nr += m;
  while (nr != 0) {
    long qt = r / nr;
    t -= qt * nt;
    std::swap(t, nt);
    r -= qt * nr;
    std::swap(r, nr);
  }
  if (r != 1) throw std::invalid_argument("element not invertible");
  return t < 0 ? t + m : t;
}

// CRT bookkeeping for a fixed conductor n.
struct CrtContext {
  long n = 1;
  std::vector<PrimePower> pp;
  std::vector<long> cofactor;  // inverse of (n/q) mod q
  std::vector<long> unit;      // (n/q) * cofactor mod n

  explicit CrtContext(long conductor) : n(conductor), pp(factorize(conductor)) {
    cofactor.reserve(pp.size());
    unit.reserve(pp.size());
    for (const auto& f : pp) {
      long nq = n / f.q;
      long c = mod_inverse(nq % f.q, f.q);
      cofactor.push_back(c);
      unit.push_back((nq % n) * c % n);
    }
  }

  long local_exponent(long e, size_t i) const {
    return (e % pp[i].q) * cofactor[i] % pp[i].q;
  }

  // Global exponent with the given local exponents u_i at each prime power.
  long combine(const std::vector<long>& u) const {
    long x = 0;
    for (size_t i = 0; i < pp.size(); ++i) {
      long nq = n / pp[i].q;
      long r = u[i] * (nq % pp[i].q) % pp[i].q;
      x = (x + r * unit[i]) % n;
    }
    return x;
  }
};

bool local_in_basis(const PrimePower& f, long u) {
  if (f.p == 2) return u < f.q / 2;
  return u / (f.q / f.p) <= f.p - 2;
}

// Rewrite zeta_q^u as a signed sum of basis powers at the same prime power.
std::vector<std::pair<int, long>> expand_local(const PrimePower& f, long u) {
  if (local_in_basis(f, u)) return {{1, u}};
  if (f.p == 2) return {{-1, u - f.q / 2}};
  long step = f.q / f.p;
  long rest = u - (f.p - 1) * step;
  std::vector<std::pair<int, long>> out;
  out.reserve(f.p - 1);
  for (long s = 0; s <= f.p - 2; ++s) out.push_back({-1, rest + s * step});
  return out;
}

void add_term(std::map<long, Rational>& m, long e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = m.emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) m.erase(it);
}

}  // namespace

Cyclotomic::Cyclotomic(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  if (v != 0) terms_.emplace(0, v);
}

Cyclotomic::Cyclotomic(long value) {
  if (value != 0) terms_.emplace(0, Rational(value));
}

Cyclotomic Cyclotomic::root_of_unity(long n, long e) {
  return from_terms(n, {{e, Rational(1)}});
}

Cyclotomic Cyclotomic::from_terms(
    long n, const std::vector<std::pair<long, Rational>>& terms) {
  if (n <= 0) throw std::invalid_argument("conductor must be positive");
  if (n > kConductorCap) throw std::invalid_argument("conductor too large");
  Cyclotomic a;
  a.n_ = n;
  std::map<long, Rational> raw;
  for (const auto& [e, c] : terms) {
    long r = e % n;
    if (r < 0) r += n;
    Rational v = c;
    v.canonicalize();
    add_term(raw, r, v);
  }
  a.reduce_(std::move(raw));
  return a;
}

// Full canonicalization: fold conductors 2 mod 4, rewrite every term into the
// local basis, then drop primes from the conductor while the value lies in the
// smaller field.
void Cyclotomic::reduce_(std::map<long, Rational>&& raw) {
  terms_ = std::move(raw);
  for (;;) {
    while (n_ % 4 == 2) {
      long m = n_ / 2;
      long half = (m + 1) / 2;
      std::map<long, Rational> t;
      for (const auto& [e, c] : terms_)
        add_term(t, (e * half) % m, e % 2 == 0 ? c : Rational(-c));
      terms_.swap(t);
      n_ = m;
    }
    if (n_ == 1) break;

    CrtContext ctx(n_);

    // Local basis rewrite, one pass.
    {
      std::map<long, Rational> t;
      for (const auto& [e, c] : terms_) {
        bool basis = true;
        for (size_t i = 0; i < ctx.pp.size() && basis; ++i)
          basis = local_in_basis(ctx.pp[i], ctx.local_exponent(e, i));
        if (basis) {
          add_term(t, e, c);
          continue;
        }
        std::vector<std::vector<std::pair<int, long>>> exp(ctx.pp.size());
        for (size_t i = 0; i < ctx.pp.size(); ++i)
          exp[i] = expand_local(ctx.pp[i], ctx.local_exponent(e, i));
        std::vector<size_t> idx(ctx.pp.size(), 0);
        std::vector<long> u(ctx.pp.size());
        for (;;) {
          int sg = 1;
          for (size_t i = 0; i < ctx.pp.size(); ++i) {
            sg *= exp[i][idx[i]].first;
            u[i] = exp[i][idx[i]].second;
          }
          add_term(t, ctx.combine(u), sg > 0 ? c : Rational(-c));
          size_t i = 0;
          while (i < idx.size() && ++idx[i] == exp[i].size()) idx[i++] = 0;
          if (i == idx.size()) break;
        }
      }
      terms_.swap(t);
    }

    // Conductor minimization: drop one prime factor if possible, then restart.
    bool dropped = false;
    for (size_t i = 0; i < ctx.pp.size() && !dropped; ++i) {
      const auto& f = ctx.pp[i];
      bool can = true;
      for (const auto& [e, c] : terms_) {
        long u = ctx.local_exponent(e, i);
        if (f.v == 1 ? u != 0 : u % f.p != 0) {
          can = false;
          break;
        }
      }
      if (!can) continue;
      long nn = n_ / f.p;
      CrtContext nctx(nn);
      std::map<long, Rational> t;
      for (const auto& [e, c] : terms_) {
        std::vector<long> u(nctx.pp.size());
        for (size_t j = 0; j < nctx.pp.size(); ++j) {
          const auto& g = nctx.pp[j];
          // Locate g's counterpart among the old prime powers.
          size_t k = 0;
          while (ctx.pp[k].p != g.p) ++k;
          long old_u = ctx.local_exponent(e, k);
          u[j] = (g.p == f.p) ? old_u / f.p : old_u;
        }
        add_term(t, nctx.combine(u), c);
      }
      terms_.swap(t);
      n_ = nn;
      dropped = true;
    }
    if (!dropped) break;
  }
  if (terms_.empty()) n_ = 1;
}

bool Cyclotomic::is_real() const { return conjugate() == *this; }

std::optional<Rational> Cyclotomic::as_rational() const {
  if (terms_.empty()) return Rational(0);
  if (n_ == 1) return terms_.begin()->second;
  return std::nullopt;
}

Cyclotomic Cyclotomic::conjugate() const {
  if (n_ == 1) return *this;
  return galois(n_ - 1);
}

Cyclotomic Cyclotomic::galois(long k) const {
  k %= n_;
  if (k < 0) k += n_;
  if (std::gcd(k, n_) != 1)
    throw std::invalid_argument("galois exponent not coprime to conductor");
  if (n_ == 1) return *this;
  Cyclotomic out;
  out.n_ = n_;
  std::map<long, Rational> raw;
  for (const auto& [e, c] : terms_) add_term(raw, e * k % n_, c);
  out.reduce_(std::move(raw));
  return out;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (n_ == 1) return Cyclotomic(Rational(1) / terms_.begin()->second);
  // 1/a = (product of the other distinct Galois conjugates) / norm.
  std::vector<Cyclotomic> distinct;
  for (long k = 1; k < n_; ++k) {
    if (std::gcd(k, n_) != 1) continue;
    Cyclotomic g = galois(k);
    bool seen = false;
    for (const auto& d : distinct)
      if (d == g) {
        seen = true;
        break;
      }
    if (!seen) distinct.push_back(std::move(g));
  }
  Cyclotomic prod(1);
  bool skipped_self = false;
  for (const auto& d : distinct) {
    if (!skipped_self && d == *this) {
      skipped_self = true;
      continue;
    }
    prod *= d;
  }
  Cyclotomic norm = prod * (*this);
  auto r = norm.as_rational();
  if (!r || *r == 0) throw std::domain_error("norm computation failed");
  return prod * Cyclotomic(Rational(1) / *r);
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out;
  out.n_ = n_;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) {
    *this = rhs;
    return *this;
  }
  long g = std::gcd(n_, rhs.n_);
  long nn = n_ / g;
  if (nn > kConductorCap / rhs.n_)
    throw std::invalid_argument("conductor too large");
  nn *= rhs.n_;
  long sl = nn / n_, sr = nn / rhs.n_;
  std::map<long, Rational> raw;
  for (const auto& [e, c] : terms_) add_term(raw, e * sl, c);
  for (const auto& [e, c] : rhs.terms_) add_term(raw, e * sr, c);
  n_ = nn;
  reduce_(std::move(raw));
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) {
  *this += -rhs;
  return *this;
}

Cyclotomic operator*(const Cyclotomic& lhs, const Cyclotomic& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return Cyclotomic();
  long g = std::gcd(lhs.n_, rhs.n_);
  long nn = lhs.n_ / g;
  if (nn > kConductorCap / rhs.n_)
    throw std::invalid_argument("conductor too large");
  nn *= rhs.n_;
  long sl = nn / lhs.n_, sr = nn / rhs.n_;
  std::map<long, Rational> raw;
  for (const auto& [e1, c1] : lhs.terms_)
    for (const auto& [e2, c2] : rhs.terms_)
      add_term(raw, (e1 * sl + e2 * sr) % nn, c1 * c2);
  Cyclotomic out;
  out.n_ = nn;
  out.reduce_(std::move(raw));
  return out;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
  *this = *this * rhs;
  return *this;
}

bool Cyclotomic::operator<(const Cyclotomic& rhs) const {
  if (n_ != rhs.n_) return n_ < rhs.n_;
  auto it = terms_.begin();
  auto jt = rhs.terms_.begin();
  for (; it != terms_.end() && jt != rhs.terms_.end(); ++it, ++jt) {
    if (it->first != jt->first) return it->first < jt->first;
    if (it->second != jt->second) return it->second < jt->second;
  }
  return jt != rhs.terms_.end();
}

std::string Cyclotomic::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first && c > 0) os << "+";
    if (e == 0) {
      os << c;
    } else {
      if (c == -1)
        os << "-";
      else if (c != 1)
        os << c << "*";
      os << "z" << n_;
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

int compare_real(const Cyclotomic& a, const Cyclotomic& b) {
  return real_sign(a - b);
}

}  // namespace schar
