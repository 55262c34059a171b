#pragma once

#include <vector>

#include "runiv/numbertheory.hpp"

namespace runiv {

/// Nondegenerate diagonal quadratic form <a_1, ..., a_n> over Q.
class DiagonalForm {
 public:
  explicit DiagonalForm(std::vector<Rational> entries);

  int dim() const { return static_cast<int>(entries_.size()); }
  const std::vector<Rational>& entries() const { return entries_; }

  friend bool operator==(const DiagonalForm&, const DiagonalForm&) = default;

 private:
  std::vector<Rational> entries_;
};

/// Symmetric invertible rational matrix.
class SymMatrix {
 public:
  SymMatrix(int n, std::vector<std::vector<Rational>> entries);

  int dim() const { return n_; }
  const Rational& at(int i, int j) const { return m_[i][j]; }
  Rational determinant() const;

 private:
  int n_;
  std::vector<std::vector<Rational>> m_;
};

enum class EvenCenter { Q, QplusQ, Quad };

struct EvenCliffordClass {
  EvenCenter center;
  std::optional<QuadExt> center_field;  // set iff center == Quad
  BrauerClass q_class;     // class at the level of Q (of C0, resp. of C+-)
  bool split_over_center;
};

struct FormInvariants {
  int dim;
  Int det_mod_squares;  // squarefree part of det
  Int disc;             // squarefree part of (-1)^{n(n-1)/2} det
  int positive;
  int negative;
  std::map<Place, int> hasse;  // -1 entries only; finite support
  BrauerClass witt_class;      // full (n even) / even (n odd) Clifford class
  EvenCliffordClass even;
};

/// Congruence diagonalization by symmetric elimination, exact throughout.
DiagonalForm diagonalize(const SymMatrix& m);

int hasse_invariant(const DiagonalForm& f, const Place& v);

/// Witt (Clifford) invariant: Brauer class of the full Clifford algebra
/// for even dimension, of the even Clifford algebra for odd dimension.
BrauerClass witt_class(const DiagonalForm& f);

/// Even Clifford data via the drop-last-entry scaling recursion
/// C0(<a_1..a_n>) = C(<-a_n a_1, ..., -a_n a_{n-1}>).
EvenCliffordClass even_clifford_class(const DiagonalForm& f);

FormInvariants invariants(const DiagonalForm& f);

/// Real rule: C0 of a signature-(p,q) form is nonsplit over R iff
/// 2p - (p+q) is congruent to 3, 4 or 5 mod 8.
bool real_even_clifford_nonsplit(int p, int q);

}  // namespace runiv
