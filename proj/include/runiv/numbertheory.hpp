#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "runiv/rational.hpp"

namespace runiv {

/// A place of Q: the archimedean place or a finite prime.
class Place {
 public:
  static Place infinite() { return Place(0); }
  static Place finite(const Int& p);  // verifies primality

  bool is_infinite() const { return p_ == 0; }
  const Int& prime() const;  // throws if infinite

  // Infinite sorts first, then primes ascending.
  friend bool operator==(const Place& a, const Place& b) { return a.p_ == b.p_; }
  friend bool operator<(const Place& a, const Place& b) { return a.p_ < b.p_; }

  std::string str() const;  // "inf" or the prime in base 10

 private:
  explicit Place(Int p) : p_(std::move(p)) {}
  Int p_;  // 0 encodes the infinite place
};

/// The quadratic field Q(sqrt(d)), d squarefree, d != 0, 1.
class QuadExt {
 public:
  explicit QuadExt(const Int& d);  // verifies squarefree-ness

  const Int& d() const { return d_; }
  bool imaginary() const { return d_ < 0; }
  Int field_discriminant() const;  // d or 4d

 private:
  Int d_;
};

enum class Splitting { Split, Inert, Ramified };

/// A central simple algebra class over Q, represented by its local
/// invariants. Entries are fractions in (0,1); zero invariants are absent.
class BrauerClass {
 public:
  BrauerClass() = default;
  /// Canonicalizes (reduces mod 1, drops zeros) and checks the
  /// reciprocity constraint: the invariants sum to an integer, and the
  /// infinite invariant is 0 or 1/2.
  explicit BrauerClass(std::map<Place, Rational> invariants);

  bool trivial() const { return inv_.empty(); }
  const std::map<Place, Rational>& invariants() const { return inv_; }
  Rational at(const Place& v) const;
  bool two_torsion() const;  // every invariant in {0, 1/2}

  friend bool operator==(const BrauerClass&, const BrauerClass&) = default;

  std::string str() const;

 private:
  std::map<Place, Rational> inv_;
};

// -- integer plumbing --------------------------------------------------------

bool is_prime(const Int& n);

/// Prime factorization by trial division, adequate for |n| <= 10^12.
/// Returns (prime, exponent) pairs, primes ascending; sign is dropped.
std::vector<std::pair<Int, int>> factorize(Int n);

/// Squarefree part: r = s * t^2 with s a squarefree integer, t > 0 rational.
std::pair<Int, Rational> squarefree_part(const Rational& r);

/// Legendre symbol (a|p) for odd prime p; a need not be reduced.
int legendre(const Int& a, const Int& p);

// -- Hilbert symbols and Brauer classes --------------------------------------

/// (a,b)_v: +1 iff the quaternion algebra (a,b) splits at v.
int hilbert_symbol(const Rational& a, const Rational& b, const Place& v);

/// The Brauer class of the quaternion algebra (a,b): invariant 1/2 at
/// every place where the Hilbert symbol is -1.
BrauerClass quaternion_class(const Rational& a, const Rational& b);

/// Tensor product of algebra classes = pointwise addition of invariants.
BrauerClass brauer_combine(const BrauerClass& c1, const BrauerClass& c2);

/// Degree of the underlying division algebra (lcm of the denominators of
/// the local invariants); 1 iff the class is trivial.
Int brauer_index(const BrauerClass& c);

/// Independent oracle: does a x^2 + b y^2 = z^2 have a nonzero rational
/// point? Exhaustive search within the Holzer bound after reduction to a
/// pairwise-coprime squarefree ternary form, hence exact.
bool conic_has_point(const Rational& a, const Rational& b);

/// b in N_{L/Q}(L^x)? Evaluated as triviality of the class (L.d, b).
bool is_norm(const QuadExt& L, const Rational& b);

Splitting prime_splitting(const QuadExt& L, const Place& v);

/// c tensor L trivial? Requires c two-torsion. True iff no place in the
/// support of c splits in L (split places keep their local invariant).
bool restricts_trivially(const BrauerClass& c, const QuadExt& L);

}  // namespace runiv
