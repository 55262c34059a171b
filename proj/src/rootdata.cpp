#include "runiv/rootdata.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace runiv {

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
    case Family::E: return 'E';
    case Family::F: return 'F';
    case Family::G: return 'G';
  }
  throw std::logic_error("bad family");
}

Family family_from_letter(char c) {
  switch (c) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    case 'E': return Family::E;
    case 'F': return Family::F;
    case 'G': return Family::G;
    default: throw std::domain_error(std::string("unknown family: ") + c);
  }
}

RootSystem::RootSystem(Family family, int rank) : family_(family), rank_(rank) {
  bool ok = false;
  switch (family) {
    case Family::A: ok = rank >= 1; break;
    case Family::B: ok = rank >= 1; break;  // B1 = A1, kept for so(3) forms
    case Family::C: ok = rank >= 1; break;
    case Family::D: ok = rank >= 3; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
    case Family::F: ok = rank == 4; break;
    case Family::G: ok = rank == 2; break;
  }
  if (!ok)
    throw std::domain_error("illegal rank " + std::to_string(rank) +
                            " for family " + family_letter(family));
}

std::string RootSystem::str() const {
  return std::string(1, family_letter(family_)) + std::to_string(rank_);
}

const std::vector<std::vector<long long>>& RootSystem::cartan() const {
  if (!cartan_.empty()) return cartan_;
  int n = rank_;
  std::vector<std::vector<long long>> a(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto edge = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  switch (family_) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      break;
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      if (n >= 2) a[n - 2][n - 1] = -2;  // node n short
      break;
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      if (n >= 2) a[n - 1][n - 2] = -2;  // node n long
      break;
    case Family::D:
      for (int i = 0; i + 1 < n - 1; ++i) edge(i, i + 1);
      edge(n - 3, n - 1);
      a[n - 2][n - 1] = a[n - 1][n - 2] = 0;
      break;
    case Family::E:
      edge(0, 2); edge(2, 3); edge(3, 4); edge(4, 5); edge(1, 3);
      if (n >= 7) edge(5, 6);
      if (n >= 8) edge(6, 7);
      break;
    case Family::F:
      edge(0, 1); edge(1, 2); edge(2, 3);
      a[1][2] = -2;  // nodes 1,2 long; 3,4 short
      break;
    case Family::G:
      a[0][1] = -1;
      a[1][0] = -3;  // node 1 short
      break;
  }
  cartan_ = std::move(a);
  return cartan_;
}

const std::vector<long long>& RootSystem::symmetrizer() const {
  if (!symm_.empty()) return symm_;
  const auto& a = cartan();
  int n = rank_;
  // Solve d[j] a[i][j] = d[i] a[j][i] by propagation over the diagram.
  std::vector<Rational> d(n, 0);
  d[0] = 1;
  std::queue<int> q;
  q.push(0);
  while (!q.empty()) {
    int i = q.front();
    q.pop();
    for (int j = 0; j < n; ++j) {
      if (i == j || a[i][j] == 0 || d[j] != 0) continue;
      d[j] = d[i] * a[j][i] / a[i][j];
      q.push(j);
    }
  }
  Int lcm_den = 1;
  for (const auto& x : d)
    lcm_den = boost::multiprecision::lcm(lcm_den, denominator(x));
  std::vector<Int> di(n);
  Int g = 0;
  for (int i = 0; i < n; ++i) {
    di[i] = numerator(Rational(d[i] * lcm_den));
    g = boost::multiprecision::gcd(g, di[i]);
  }
  symm_.resize(n);
  for (int i = 0; i < n; ++i) symm_[i] = static_cast<long long>(di[i] / g);
  return symm_;
}

const std::vector<std::vector<long long>>& RootSystem::positive_roots() const {
  if (!posroots_.empty()) return posroots_;
  const auto& a = cartan();
  int n = rank_;
  std::set<std::vector<long long>> roots;
  for (int i = 0; i < n; ++i) {
    std::vector<long long> e(n, 0);
    e[i] = 1;
    roots.insert(e);
  }
  // Closure via root strings: beta + alpha_i is a root iff
  // p - <beta, alpha_i^vee> > 0, with p the depth of the string below beta.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<long long>> snapshot(roots.begin(), roots.end());
    for (const auto& beta : snapshot) {
      for (int i = 0; i < n; ++i) {
        long long pairing = 0;
        for (int j = 0; j < n; ++j) pairing += beta[j] * a[j][i];
        long long p = 0;
        std::vector<long long> down = beta;
        for (;;) {
          down[i] -= 1;
          bool nonneg = std::all_of(down.begin(), down.end(),
                                    [](long long c) { return c >= 0; });
          if (!nonneg || !roots.count(down)) break;
          ++p;
        }
        if (p - pairing > 0) {
          std::vector<long long> up = beta;
          up[i] += 1;
          if (roots.insert(up).second) grew = true;
        }
      }
    }
  }
  posroots_.assign(roots.begin(), roots.end());
  return posroots_;
}

bool RootSystem::has_diagram_involution() const {
  return (family_ == Family::A && rank_ >= 2) || family_ == Family::D ||
         (family_ == Family::E && rank_ == 6);
}

std::vector<int> RootSystem::diagram_involution() const {
  if (!has_diagram_involution())
    throw std::domain_error(str() + " has no diagram involution");
  std::vector<int> perm(rank_);
  std::iota(perm.begin(), perm.end(), 0);
  if (family_ == Family::A) {
    std::reverse(perm.begin(), perm.end());
  } else if (family_ == Family::D) {
    std::swap(perm[rank_ - 2], perm[rank_ - 1]);
  } else {  // E6
    perm = {5, 1, 4, 3, 2, 0};
  }
  return perm;
}

Weight::Weight(std::vector<long long> c) : coords(std::move(c)) {
  for (long long x : coords)
    if (x < 0) throw std::domain_error("weight coordinates must be dominant");
}

std::string Weight::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < coords.size(); ++i)
    os << (i ? "," : "") << coords[i];
  return os.str();
}

bool CenterCharacter::trivial() const {
  return std::all_of(residues.begin(), residues.end(),
                     [](long long r) { return r == 0; });
}

std::string CenterCharacter::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < residues.size(); ++i)
    os << (i ? "," : "") << residues[i] << " mod " << orders[i];
  os << ")";
  return os.str();
}

// -- Smith normal form of the root-lattice inclusion -------------------------

namespace {

struct CenterData {
  std::vector<long long> orders;          // invariant factors > 1
  std::vector<int> rows;                  // rows of U they live in
  std::vector<std::vector<Int>> u;        // row-op accumulator: U * A^T * V = S
  std::vector<std::vector<Int>> u_inv;
};

// SNF with tracked row operations. Column operations do not affect the
// quotient map Z^r / (A^T Z^r), so only U is kept.
CenterData smith_data(const RootSystem& sys) {
  int n = sys.rank();
  const auto& a = sys.cartan();
  std::vector<std::vector<Int>> m(n, std::vector<Int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = a[j][i];  // A^T
  std::vector<std::vector<Int>> u(n, std::vector<Int>(n, 0));
  for (int i = 0; i < n; ++i) u[i][i] = 1;

  auto row_add = [&](int dst, int src, const Int& f) {
    for (int c = 0; c < n; ++c) {
      m[dst][c] += f * m[src][c];
      u[dst][c] += f * u[src][c];
    }
  };
  auto col_add = [&](int dst, int src, const Int& f) {
    for (int r = 0; r < n; ++r) m[r][dst] += f * m[r][src];
  };

  using boost::multiprecision::abs;
  for (int k = 0; k < n; ++k) {
    for (;;) {
      int pr = -1, pc = -1;
      for (int r = k; r < n; ++r)
        for (int c = k; c < n; ++c)
          if (m[r][c] != 0 && (pr < 0 || abs(m[r][c]) < abs(m[pr][pc]))) {
            pr = r;
            pc = c;
          }
      if (pr < 0) throw std::logic_error("singular Cartan matrix");
      if (pr != k) { std::swap(m[pr], m[k]); std::swap(u[pr], u[k]); }
      if (pc != k)
        for (int r = 0; r < n; ++r) std::swap(m[r][pc], m[r][k]);
      bool clean = true;
      for (int r = k + 1; r < n; ++r)
        if (m[r][k] != 0) {
          row_add(r, k, -(m[r][k] / m[k][k]));
          if (m[r][k] != 0) clean = false;
        }
      for (int c = k + 1; c < n; ++c)
        if (m[k][c] != 0) {
          col_add(c, k, -(m[k][c] / m[k][k]));
          if (m[k][c] != 0) clean = false;
        }
      if (!clean) continue;
      // Divisibility fix-up so the diagonal gives invariant factors.
      bool fixed = true;
      for (int r = k + 1; r < n && fixed; ++r)
        for (int c = k + 1; c < n && fixed; ++c)
          if (m[r][c] % m[k][k] != 0) {
            row_add(k, r, 1);
            fixed = false;
          }
      if (fixed) break;
    }
    if (m[k][k] < 0) {
      for (int c = 0; c < n; ++c) { m[k][c] = -m[k][c]; u[k][c] = -u[k][c]; }
    }
  }

  CenterData out;
  for (int k = 0; k < n; ++k)
    if (m[k][k] > 1) {
      out.orders.push_back(static_cast<long long>(m[k][k]));
      out.rows.push_back(k);
    }
  out.u = u;

  // Invert the unimodular U exactly.
  std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(2 * n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug[i][j] = Rational(u[i][j]);
    aug[i][n + i] = 1;
  }
  for (int i = 0; i < n; ++i) {
    int p = i;
    while (aug[p][i] == 0) ++p;
    std::swap(aug[p], aug[i]);
    Rational piv = aug[i][i];
    for (int c = 0; c < 2 * n; ++c) aug[i][c] /= piv;
    for (int r = 0; r < n; ++r)
      if (r != i && aug[r][i] != 0) {
        Rational f = aug[r][i];
        for (int c = 0; c < 2 * n; ++c) aug[r][c] -= f * aug[i][c];
      }
  }
  out.u_inv.assign(n, std::vector<Int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (denominator(aug[i][n + j]) != 1)
        throw std::logic_error("U not unimodular");
      out.u_inv[i][j] = numerator(aug[i][n + j]);
    }
  return out;
}

const CenterData& center_data(const RootSystem& sys) {
  static std::map<std::pair<int, int>, CenterData> cache;
  auto key = std::make_pair(static_cast<int>(sys.family()), sys.rank());
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, smith_data(sys)).first;
  return it->second;
}

}  // namespace

std::vector<long long> fundamental_group(const RootSystem& sys) {
  return center_data(sys).orders;
}

CenterCharacter center_character(const RootSystem& sys,
                                 const std::vector<long long>& coords) {
  if (static_cast<int>(coords.size()) != sys.rank())
    throw std::domain_error("weight/rank mismatch");
  const CenterData& cd = center_data(sys);
  CenterCharacter c;
  c.orders = cd.orders;
  for (size_t k = 0; k < cd.orders.size(); ++k) {
    Int acc = 0;
    int row = cd.rows[k];
    for (int j = 0; j < sys.rank(); ++j) acc += cd.u[row][j] * coords[j];
    Int r = acc % cd.orders[k];
    if (r < 0) r += cd.orders[k];
    c.residues.push_back(static_cast<long long>(r));
  }
  return c;
}

CenterCharacter center_character(const RootSystem& sys, const Weight& w) {
  return center_character(sys, w.coords);
}

std::vector<CenterCharacter> all_characters(const RootSystem& sys) {
  auto orders = fundamental_group(sys);
  long long total = 1;
  for (long long o : orders) total *= o;
  std::vector<CenterCharacter> out;
  for (long long idx = 0; idx < total; ++idx)
    out.push_back(character_by_index(sys, idx));
  return out;
}

CenterCharacter character_by_index(const RootSystem& sys, long long index) {
  auto orders = fundamental_group(sys);
  long long total = 1;
  for (long long o : orders) total *= o;
  if (index < 0 || index >= total)
    throw std::domain_error("character index out of range");
  CenterCharacter c;
  c.orders = orders;
  for (long long o : orders) {
    c.residues.push_back(index % o);
    index /= o;
  }
  return c;
}

Weight star_action(const RootSystem& sys, bool outer, const Weight& w) {
  if (static_cast<int>(w.coords.size()) != sys.rank())
    throw std::domain_error("weight/rank mismatch");
  if (!outer) return w;
  auto perm = sys.diagram_involution();
  std::vector<long long> out(w.coords.size());
  for (int i = 0; i < sys.rank(); ++i) out[perm[i]] = w.coords[i];
  return Weight(std::move(out));
}

CenterCharacter star_on_character(const RootSystem& sys, bool outer,
                                  const CenterCharacter& c) {
  if (!outer) return c;
  const CenterData& cd = center_data(sys);
  if (c.orders != cd.orders) throw std::domain_error("character/system mismatch");
  int n = sys.rank();
  // Lift to the weight lattice through U^{-1}, permute, project back.
  std::vector<Int> y(n, 0);
  for (size_t k = 0; k < cd.orders.size(); ++k) y[cd.rows[k]] = c.residues[k];
  std::vector<long long> lambda(n, 0);
  for (int i = 0; i < n; ++i) {
    Int acc = 0;
    for (int j = 0; j < n; ++j) acc += cd.u_inv[i][j] * y[j];
    lambda[i] = static_cast<long long>(acc);
  }
  auto perm = sys.diagram_involution();
  std::vector<long long> permuted(n);
  for (int i = 0; i < n; ++i) permuted[perm[i]] = lambda[i];
  return center_character(sys, permuted);
}

Int weyl_dimension(const RootSystem& sys, const Weight& w) {
  if (static_cast<int>(w.coords.size()) != sys.rank())
    throw std::domain_error("weight/rank mismatch");
  const auto& d = sys.symmetrizer();
  Int num = 1, den = 1;
  for (const auto& alpha : sys.positive_roots()) {
    Int top = 0, bot = 0;
    for (int j = 0; j < sys.rank(); ++j) {
      top += Int(alpha[j]) * d[j] * (w.coords[j] + 1);
      bot += Int(alpha[j]) * d[j];
    }
    num *= top;
    den *= bot;
  }
  if (num % den != 0) throw std::logic_error("non-integral Weyl dimension");
  return num / den;
}

bool in_root_lattice(const RootSystem& sys, const Weight& w) {
  return center_character(sys, w).trivial();
}

Weight dominant_representative(const RootSystem& sys, const CenterCharacter& c) {
  // BFS over sums of fundamental weights; small and deterministic.
  int n = sys.rank();
  std::map<std::vector<long long>, std::vector<long long>> seen;  // residues -> coords
  std::queue<std::vector<long long>> q;
  std::vector<long long> zero(n, 0);
  seen.emplace(center_character(sys, zero).residues, zero);
  q.push(zero);
  while (!q.empty()) {
    auto cur = q.front();
    q.pop();
    if (center_character(sys, cur).residues == c.residues)
      return Weight(cur);
    for (int i = 0; i < n; ++i) {
      auto next = cur;
      next[i] += 1;
      auto key = center_character(sys, next).residues;
      if (seen.emplace(key, next).second) q.push(next);
    }
  }
  throw std::logic_error("character has no representative");
}

}  // namespace runiv
