#include "runiv/numbertheory.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace runiv {

namespace {

Int powm(Int base, Int exp, const Int& mod) {
  return boost::multiprecision::powm(base % mod, exp, mod);
}

}  // namespace

// -- Place -------------------------------------------------------------------

Place Place::finite(const Int& p) {
  if (p < 2 || !is_prime(p)) throw std::domain_error("not a prime: " + p.str());
  return Place(p);
}

const Int& Place::prime() const {
  if (is_infinite()) throw std::domain_error("infinite place has no prime");
  return p_;
}

std::string Place::str() const { return is_infinite() ? "inf" : p_.str(); }

// -- QuadExt -----------------------------------------------------------------

QuadExt::QuadExt(const Int& d) : d_(d) {
  if (d == 0 || d == 1) throw std::domain_error("d must be a nonzero non-unit");
  auto [s, t] = squarefree_part(Rational(d));
  if (s != d) throw std::domain_error("d must be squarefree: " + d.str());
}

Int QuadExt::field_discriminant() const {
  Int m = d_ % 4;
  if (m < 0) m += 4;
  return m == 1 ? d_ : 4 * d_;
}

// -- BrauerClass -------------------------------------------------------------

BrauerClass::BrauerClass(std::map<Place, Rational> invariants) {
  Rational total = 0;
  for (auto& [v, x] : invariants) {
    Rational y = x - Int(numerator(x) / denominator(x));  // reduce mod 1
    if (y < 0) y += 1;
    total += y;
    if (y == 0) continue;
    if (v.is_infinite() && y != Rational(1, 2))
      throw std::domain_error("infinite invariant must be 0 or 1/2");
    inv_.emplace(v, y);
  }
  if (denominator(total) != 1)
    throw std::domain_error("local invariants must sum to an integer");
}

Rational BrauerClass::at(const Place& v) const {
  auto it = inv_.find(v);
  return it == inv_.end() ? Rational(0) : it->second;
}

bool BrauerClass::two_torsion() const {
  return std::all_of(inv_.begin(), inv_.end(),
                     [](const auto& e) { return e.second == Rational(1, 2); });
}

std::string BrauerClass::str() const {
  if (inv_.empty()) return "{}";
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [v, x] : inv_) {
    if (!first) os << ", ";
    first = false;
    os << v.str() << ": " << to_string(x);
  }
  os << "}";
  return os.str();
}

// -- integer plumbing --------------------------------------------------------

bool is_prime(const Int& n) {
  if (n < 2) return false;
  for (Int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  // Deterministic Miller-Rabin for n < 3.3 * 10^24 with the base set above.
  Int d = n - 1;
  int r = 0;
  while (d % 2 == 0) { d /= 2; ++r; }
  for (Int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    Int x = powm(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 0; i + 1 < r; ++i) {
      x = x * x % n;
      if (x == n - 1) { witness = false; break; }
    }
    if (witness) return false;
  }
  return true;
}

namespace {

// Pollard's rho (Floyd cycle) for a composite n with no factors <= 10^3.
Int rho_factor(const Int& n) {
  for (unsigned long long c = 1;; ++c) {
    Int x = 2, y = 2, d = 1;
    auto step = [&](Int v) { return (v * v + c) % n; };
    while (d == 1) {
      x = step(x);
      y = step(step(y));
      if (x == y) break;  // cycle without a factor: retry with another c
      d = gcd(x >= y ? Int(x - y) : Int(y - x), n);
    }
    if (d != 1 && d != n) return d;
  }
}

void factor_into(Int n, std::map<Int, int>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  Int d = rho_factor(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::vector<std::pair<Int, int>> factorize(Int n) {
  if (n == 0) throw std::domain_error("cannot factor zero");
  if (n < 0) n = -n;
  std::map<Int, int> acc;
  for (Int p = 2; p <= 1000 && p * p <= n; ++p)
    while (n % p == 0) {
      n /= p;
      ++acc[p];
    }
  factor_into(n, acc);
  return {acc.begin(), acc.end()};
}

std::pair<Int, Rational> squarefree_part(const Rational& r) {
  if (r == 0) throw std::domain_error("squarefree_part of zero");
  // r = n/d = (n*d)/d^2, so the squarefree part of r is that of n*d.
  Int nd = numerator(r) * denominator(r);
  Int s = nd < 0 ? -1 : 1;
  for (const auto& [p, e] : factorize(nd))
    if (e % 2) s *= p;
  Rational t2 = r / s;
  Int tn = isqrt(numerator(t2)), td = isqrt(denominator(t2));
  Rational t(tn, td);
  if (t * t != t2) throw std::logic_error("squarefree_part: inexact cofactor");
  return {s, t};
}

int legendre(const Int& a, const Int& p) {
  Int m = a % p;
  if (m < 0) m += p;
  if (m == 0) return 0;
  Int e = powm(m, (p - 1) / 2, p);
  return e == 1 ? 1 : -1;
}

// -- Hilbert symbols ---------------------------------------------------------

namespace {

// Valuation-unit split a = p^alpha * u at a finite prime.
std::pair<int, Int> val_unit(const Int& a, const Int& p) {
  Int u = a;
  int alpha = 0;
  while (u % p == 0) { u /= p; ++alpha; }
  return {alpha, u};
}

int eps2(const Int& u) { return static_cast<int>((u - 1) / 2 % 2 ? 1 : 0); }
int omega2(const Int& u) { return static_cast<int>((u * u - 1) / 8 % 2 ? 1 : 0); }

}  // namespace

int hilbert_symbol(const Rational& a, const Rational& b, const Place& v) {
  if (a == 0 || b == 0) throw std::domain_error("hilbert_symbol of zero");
  Int sa = squarefree_part(a).first;
  Int sb = squarefree_part(b).first;
  if (v.is_infinite()) return (sa < 0 && sb < 0) ? -1 : 1;
  const Int& p = v.prime();
  auto [alpha, u] = val_unit(sa, p);
  auto [beta, w] = val_unit(sb, p);
  if (p == 2) {
    int e = eps2(u) * eps2(w) + alpha * omega2(w) + beta * omega2(u);
    return e % 2 ? -1 : 1;
  }
  // Tame formula at odd p.
  int sym = 1;
  if (alpha % 2 && beta % 2 && (p - 1) / 2 % 2) sym = -sym;
  if (beta % 2) sym *= legendre(u, p);
  if (alpha % 2) sym *= legendre(w, p);
  return sym;
}

BrauerClass quaternion_class(const Rational& a, const Rational& b) {
  if (a == 0 || b == 0) throw std::domain_error("quaternion_class of zero");
  Int sa = squarefree_part(a).first;
  Int sb = squarefree_part(b).first;
  std::set<Int> primes = {2};
  for (const auto& [p, e] : factorize(sa)) primes.insert(p);
  for (const auto& [p, e] : factorize(sb)) primes.insert(p);
  std::map<Place, Rational> inv;
  if (hilbert_symbol(sa, sb, Place::infinite()) == -1)
    inv.emplace(Place::infinite(), Rational(1, 2));
  for (const Int& p : primes)
    if (hilbert_symbol(sa, sb, Place::finite(p)) == -1)
      inv.emplace(Place::finite(p), Rational(1, 2));
  return BrauerClass(std::move(inv));  // even support enforced by reciprocity
}

BrauerClass brauer_combine(const BrauerClass& c1, const BrauerClass& c2) {
  std::map<Place, Rational> inv = c1.invariants();
  for (const auto& [v, x] : c2.invariants()) inv[v] += x;
  return BrauerClass(std::move(inv));
}

Int brauer_index(const BrauerClass& c) {
  Int idx = 1;
  for (const auto& [v, x] : c.invariants())
    idx = boost::multiprecision::lcm(idx, denominator(x));
  return idx;
}

// -- conic oracle ------------------------------------------------------------

bool conic_has_point(const Rational& a, const Rational& b) {
  if (a == 0 || b == 0) throw std::domain_error("conic_has_point of zero");
  // a x^2 + b y^2 = z^2 as the ternary form <A, B, C> = 0.
  Int A = squarefree_part(a).first;
  Int B = squarefree_part(b).first;
  Int C = -1;
  // Reduce to pairwise coprime squarefree coefficients: if p divides two
  // coefficients, divide those and multiply the third by p.
  for (bool reduced = false; !reduced;) {
    reduced = true;
    auto step = [&](Int& x, Int& y, Int& z) {
      Int g = boost::multiprecision::gcd(boost::multiprecision::abs(x),
                                         boost::multiprecision::abs(y));
      if (g > 1) {
        Int p = factorize(g).front().first;
        x /= p;
        y /= p;
        z = squarefree_part(Rational(z * p)).first;
        reduced = false;
      }
    };
    step(A, B, C);
    step(A, C, B);
    step(B, C, A);
  }
  if ((A > 0) == (B > 0) && (B > 0) == (C > 0)) return false;  // definite
  // Holzer: a solvable form has a solution with |x| <= sqrt|BC|,
  // |y| <= sqrt|AC|, |z| <= sqrt|AB|; search is exhaustive to that bound.
  using boost::multiprecision::abs;
  Int bx = isqrt(abs(B * C)), by = isqrt(abs(A * C));
  for (Int x = 0; x <= bx; ++x) {
    for (Int y = 0; y <= by; ++y) {
      Int rhs = -(A * x * x + B * y * y);
      if (C == 0 || rhs % C != 0) continue;
      Int z2 = rhs / C;
      if (z2 < 0 || !is_square(z2)) continue;
      if (x != 0 || y != 0 || z2 != 0) return true;
    }
  }
  return false;
}

bool is_norm(const QuadExt& L, const Rational& b) {
  if (b == 0) throw std::domain_error("is_norm of zero");
  return quaternion_class(Rational(L.d()), b).trivial();
}

Splitting prime_splitting(const QuadExt& L, const Place& v) {
  if (v.is_infinite()) return L.d() > 0 ? Splitting::Split : Splitting::Inert;
  const Int& p = v.prime();
  Int disc = L.field_discriminant();
  if (disc % p == 0) return Splitting::Ramified;
  if (p == 2) {
    Int m = L.d() % 8;
    if (m < 0) m += 8;
    return m == 1 ? Splitting::Split : Splitting::Inert;
  }
  return legendre(L.d(), p) == 1 ? Splitting::Split : Splitting::Inert;
}

bool restricts_trivially(const BrauerClass& c, const QuadExt& L) {
  if (!c.two_torsion())
    throw std::domain_error("restriction supported only for 2-torsion classes");
  for (const auto& [v, x] : c.invariants())
    if (prime_splitting(L, v) == Splitting::Split) return false;
  return true;
}

}  // namespace runiv
