#pragma once

#include <string>
#include <vector>

#include "runiv/rational.hpp"

namespace runiv {

enum class Family { A, B, C, D, E, F, G };

char family_letter(Family f);
Family family_from_letter(char c);

/// Irreducible root system in Bourbaki numbering. For the asymmetric
/// families: B_n has the short root at node n, C_n the long root at node n,
/// F_4 short roots at nodes 3,4, G_2 the short root at node 1.
class RootSystem {
 public:
  RootSystem(Family family, int rank);  // validates the family/rank range

  Family family() const { return family_; }
  int rank() const { return rank_; }

  /// Cartan matrix with the convention A[i][j] = <alpha_i, alpha_j^vee>.
  const std::vector<std::vector<long long>>& cartan() const;
  /// Symmetrizer d with d[j] * A[i][j] symmetric (half square lengths,
  /// shortest root normalized to 1).
  const std::vector<long long>& symmetrizer() const;
  /// Positive roots in simple-root coordinates.
  const std::vector<std::vector<long long>>& positive_roots() const;

  bool has_diagram_involution() const;
  /// Node permutation of the order-2 diagram symmetry (identity positions
  /// for fixed nodes); throws if the system has none. D4 triality maps are
  /// not offered.
  std::vector<int> diagram_involution() const;

  std::string str() const;

  friend bool operator==(const RootSystem& a, const RootSystem& b) {
    return a.family_ == b.family_ && a.rank_ == b.rank_;
  }

 private:
  Family family_;
  int rank_;
  mutable std::vector<std::vector<long long>> cartan_;
  mutable std::vector<long long> symm_;
  mutable std::vector<std::vector<long long>> posroots_;
};

/// Dominant weight in fundamental-weight coordinates.
struct Weight {
  std::vector<long long> coords;  // all >= 0

  explicit Weight(std::vector<long long> c);
  friend bool operator==(const Weight&, const Weight&) = default;
  std::string str() const;
};

/// Element of the fundamental group Z* = P/Q, stored against its cyclic
/// decomposition (residues reduced mod the orders; trivial group = empty).
struct CenterCharacter {
  std::vector<long long> orders;    // invariant factors > 1
  std::vector<long long> residues;  // same length, 0 <= r < order

  bool trivial() const;
  friend bool operator==(const CenterCharacter&, const CenterCharacter&) = default;
  std::string str() const;
};

/// Cyclic decomposition of Z* (invariant factors > 1, ascending).
std::vector<long long> fundamental_group(const RootSystem& sys);

/// Image of a weight-lattice element in Z*; a group homomorphism with
/// kernel exactly the root lattice. Accepts arbitrary integer coordinates.
CenterCharacter center_character(const RootSystem& sys,
                                 const std::vector<long long>& coords);
CenterCharacter center_character(const RootSystem& sys, const Weight& w);

/// All |Z*| characters, mixed-radix order (index 0 = identity).
std::vector<CenterCharacter> all_characters(const RootSystem& sys);
CenterCharacter character_by_index(const RootSystem& sys, long long index);

/// Diagram involution on weights; outer = false is the identity.
Weight star_action(const RootSystem& sys, bool outer, const Weight& w);

/// Induced involution on Z*.
CenterCharacter star_on_character(const RootSystem& sys, bool outer,
                                  const CenterCharacter& c);

/// Product over positive roots of <w + rho, alpha> / <rho, alpha>, exact.
Int weyl_dimension(const RootSystem& sys, const Weight& w);

bool in_root_lattice(const RootSystem& sys, const Weight& w);

/// A dominant representative of the given character (small coordinates,
/// deterministic choice; zero weight for the identity).
Weight dominant_representative(const RootSystem& sys, const CenterCharacter& c);

}  // namespace runiv
