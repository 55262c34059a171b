#include "runiv/quadform.hpp"

#include <set>

namespace runiv {

DiagonalForm::DiagonalForm(std::vector<Rational> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::domain_error("empty diagonal form");
  for (const auto& a : entries_)
    if (a == 0) throw std::domain_error("diagonal form entry is zero");
}

SymMatrix::SymMatrix(int n, std::vector<std::vector<Rational>> entries)
    : n_(n), m_(std::move(entries)) {
  if (n_ < 1 || static_cast<int>(m_.size()) != n_)
    throw std::domain_error("bad matrix dimension");
  for (const auto& row : m_)
    if (static_cast<int>(row.size()) != n_)
      throw std::domain_error("bad matrix dimension");
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (m_[i][j] != m_[j][i]) throw std::domain_error("matrix not symmetric");
  if (determinant() == 0) throw std::domain_error("matrix is singular");
}

Rational SymMatrix::determinant() const {
  auto a = m_;
  Rational det = 1;
  for (int i = 0; i < n_; ++i) {
    int pivot = -1;
    for (int r = i; r < n_; ++r)
      if (a[r][i] != 0) { pivot = r; break; }
    if (pivot < 0) return 0;
    if (pivot != i) { std::swap(a[pivot], a[i]); det = -det; }
    det *= a[i][i];
    for (int r = i + 1; r < n_; ++r) {
      Rational f = a[r][i] / a[i][i];
      for (int c = i; c < n_; ++c) a[r][c] -= f * a[i][c];
    }
  }
  return det;
}

DiagonalForm diagonalize(const SymMatrix& m) {
  int n = m.dim();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j);

  auto add_row_col = [&](int dst, int src, const Rational& f) {
    for (int c = 0; c < n; ++c) a[dst][c] += f * a[src][c];
    for (int r = 0; r < n; ++r) a[r][dst] += f * a[r][src];
  };

  for (int i = 0; i < n; ++i) {
    if (a[i][i] == 0) {
      int j = -1;
      for (int r = i + 1; r < n; ++r)
        if (a[r][r] != 0) { j = r; break; }
      if (j >= 0) {
        std::swap(a[i], a[j]);
        for (int r = 0; r < n; ++r) std::swap(a[r][i], a[r][j]);
      } else {
        for (int r = i + 1; r < n && j < 0; ++r)
          if (a[i][r] != 0) j = r;
        if (j < 0) throw std::domain_error("degenerate block in diagonalization");
        add_row_col(i, j, 1);  // creates 2*a[i][j] on the diagonal
      }
    }
    for (int r = i + 1; r < n; ++r)
      if (a[r][i] != 0) add_row_col(r, i, -a[r][i] / a[i][i]);
  }

  std::vector<Rational> d(n);
  for (int i = 0; i < n; ++i) d[i] = a[i][i];
  return DiagonalForm(std::move(d));
}

namespace {

std::set<Int> relevant_primes(const DiagonalForm& f) {
  std::set<Int> primes = {2};
  for (const auto& a : f.entries())
    for (const auto& [p, e] : factorize(squarefree_part(a).first))
      primes.insert(p);
  return primes;
}

}  // namespace

int hasse_invariant(const DiagonalForm& f, const Place& v) {
  int s = 1;
  const auto& e = f.entries();
  for (size_t i = 0; i < e.size(); ++i)
    for (size_t j = i + 1; j < e.size(); ++j)
      s *= hilbert_symbol(e[i], e[j], v);
  return s;
}

BrauerClass witt_class(const DiagonalForm& f) {
  BrauerClass c;
  const auto& e = f.entries();
  for (size_t i = 0; i < e.size(); ++i)
    for (size_t j = i + 1; j < e.size(); ++j)
      c = brauer_combine(c, quaternion_class(e[i], e[j]));
  Rational det = 1;
  for (const auto& a : e) det *= a;
  Int d = squarefree_part(det).first;
  switch (f.dim() % 8) {
    case 1: case 2: break;
    case 3: case 4: c = brauer_combine(c, quaternion_class(-1, Rational(-d))); break;
    case 5: case 6: c = brauer_combine(c, quaternion_class(-1, -1)); break;
    default:        c = brauer_combine(c, quaternion_class(-1, Rational(d))); break;
  }
  return c;
}

EvenCliffordClass even_clifford_class(const DiagonalForm& f) {
  int n = f.dim();
  if (n % 2) {
    BrauerClass c = witt_class(f);
    return {EvenCenter::Q, std::nullopt, c, c.trivial()};
  }
  // C0(f) = C(g) with g the scaled drop-last form; for n = even, C(g) is
  // central over Q(sqrt(disc f)) with underlying Q-class witt_class(g).
  const auto& e = f.entries();
  std::vector<Rational> ge(e.begin(), e.end() - 1);
  for (auto& a : ge) a *= -e.back();
  BrauerClass c = witt_class(DiagonalForm(ge));

  Rational det = 1;
  for (const auto& a : e) det *= a;
  Int disc = squarefree_part((n / 2) % 2 ? -det : det).first;
  if (disc == 1)
    return {EvenCenter::QplusQ, std::nullopt, c, c.trivial()};
  QuadExt L(disc);
  return {EvenCenter::Quad, L, c, restricts_trivially(c, L)};
}

FormInvariants invariants(const DiagonalForm& f) {
  FormInvariants out;
  out.dim = f.dim();
  Rational det = 1;
  out.positive = out.negative = 0;
  for (const auto& a : f.entries()) {
    det *= a;
    (a > 0 ? out.positive : out.negative)++;
  }
  out.det_mod_squares = squarefree_part(det).first;
  int n = f.dim();
  bool flip = (Int(n) * (n - 1) / 2) % 2 != 0;
  out.disc = squarefree_part(flip ? -det : det).first;
  for (const Int& p : relevant_primes(f)) {
    Place v = Place::finite(p);
    if (hasse_invariant(f, v) == -1) out.hasse.emplace(v, -1);
  }
  if (hasse_invariant(f, Place::infinite()) == -1)
    out.hasse.emplace(Place::infinite(), -1);
  out.witt_class = witt_class(f);
  out.even = even_clifford_class(f);
  return out;
}

bool real_even_clifford_nonsplit(int p, int q) {
  if (p < 0 || q < 0 || p + q < 1) throw std::domain_error("bad signature");
  int m = (2 * p - (p + q)) % 8;
  if (m < 0) m += 8;
  return m == 3 || m == 4 || m == 5;
}

}  // namespace runiv
