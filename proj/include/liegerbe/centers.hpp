#pragma once

// The center Z(G) = coweight lattice / coroot lattice, its subgroups Z with
// their integral lattices and basic levels, characters of Z, and H^2(Z, U(1)).

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "liegerbe/lattice.hpp"
#include "liegerbe/phase.hpp"
#include "liegerbe/rootsys.hpp"

namespace liegerbe {

struct CentralElement {
  QVec rep;              // 0, or lambda_i^vee for the special node i
  std::size_t node = 0;  // 0 for the identity
  bool is_identity() const { return node == 0; }
};

/// Multiplication table of a finite group on 0..n-1, identity 0.
struct FiniteGroupTable {
  std::vector<std::vector<std::size_t>> mult;

  std::size_t order() const { return mult.size(); }
  std::size_t operator()(std::size_t a, std::size_t b) const { return mult[a][b]; }
  std::size_t inverse(std::size_t a) const;
};

class Center {
 public:
  explicit Center(const RootSystem& rs);

  const FiniteAbelianGroup& group() const { return group_; }
  std::size_t order() const { return elements_.size(); }
  /// Identity first, then special nodes in increasing order.
  const std::vector<CentralElement>& elements() const { return elements_; }
  const CentralElement& element(std::size_t a) const { return elements_.at(a); }
  std::size_t multiply(std::size_t a, std::size_t b) const { return table_(a, b); }
  std::size_t inverse(std::size_t a) const { return table_.inverse(a); }
  const FiniteGroupTable& table() const { return table_; }

  /// Element whose coset contains v; throws InvalidInput if v is not a coweight.
  std::size_t index_of(const QVec& v) const;
  /// Element exp(lambda_i^vee) for the special node i.
  std::size_t index_of_node(std::size_t node) const;

 private:
  FiniteAbelianGroup group_;
  std::vector<CentralElement> elements_;
  FiniteGroupTable table_;
};

struct CenterSubgroup {
  std::vector<std::size_t> members;  // indices into Center::elements(), ascending, members[0] == 0
  Lattice integral_lattice;          // Lambda_Z
  Integer ell_b;

  std::size_t order() const { return members.size(); }
  bool is_trivial() const { return members.size() == 1; }
  bool contains(std::size_t a) const;
  /// Position of a center element inside `members`.
  std::size_t local_index(std::size_t a) const;
};

/// Canonical subgroup id: "trivial", or the special nodes of the nonidentity
/// members joined by '+', e.g. "1+2+3".
std::string subgroup_id(const Center& c, const CenterSubgroup& z);

/// Builds the subgroup on a member set; rejects sets that are not subgroups.
CenterSubgroup make_subgroup(const RootSystem& rs, const Center& c, std::vector<std::size_t> members);
CenterSubgroup trivial_subgroup(const RootSystem& rs, const Center& c);
CenterSubgroup full_subgroup(const RootSystem& rs, const Center& c);
/// All subgroups, ordered by (order, members).
std::vector<CenterSubgroup> subgroups(const RootSystem& rs, const Center& c);

/// Lambda_Z: the coroot lattice together with the members' representatives.
Lattice integral_lattice(const RootSystem& rs, const Center& c, const std::vector<std::size_t>& members);
/// Least l with l<zeta, zeta'> integral on Lambda_Z.
Integer basic_level(const RootSystem& rs, const Lattice& integral_lattice);
/// The same by direct search over l = 1..max_level on all basis pairs; 0 if none found.
Integer basic_level_search(const RootSystem& rs, const Lattice& integral_lattice, int max_level = 64);

/// Multiplication table of Z, indexed by local member position.
FiniteGroupTable subgroup_table(const Center& c, const CenterSubgroup& z);

/// A character of Z given by a functional integral on the coroot lattice.
struct Character {
  QVec functional;
  PhaseExponent evaluate(const QVec& zeta) const { return PhaseExponent(dot(functional, zeta)); }
  bool operator==(const Character&) const = default;
};

/// Coset representatives of (Lambda_coroot)^* / (Lambda_Z)^*, trivial character first.
std::vector<Character> character_group(const RootSystem& rs, const CenterSubgroup& z);

/// Normalized 2-cochain alpha(a, b) on a finite group, a, b local indices.
using Cochain2 = std::vector<std::vector<PhaseExponent>>;

bool is_normalized(const Cochain2& alpha);
/// (d alpha)(a, b, c) = alpha(b,c) - alpha(ab,c) + alpha(a,bc) - alpha(a,b).
PhaseExponent coboundary(const FiniteGroupTable& g, const Cochain2& alpha, std::size_t a, std::size_t b,
                         std::size_t c);
bool is_cocycle(const FiniteGroupTable& g, const Cochain2& alpha);

struct H2Result {
  FiniteAbelianGroup group;
  /// Normalized cocycles representing the generators of `group`.
  std::vector<Cochain2> representatives;
};

/// H^2(G, Q/Z) with trivial action, for |G| <= 16.
H2Result h2_u1(const FiniteGroupTable& g);

struct FundamentalLevelRecord {
  LieType type;
  std::string subgroup;
  int ell_f = 0;
  std::string source;
};

/// Fundamental levels read from a data file of records
/// `family rank subgroup_id ell_f source-tag`; '#' starts a comment.
class FundamentalLevelTable {
 public:
  FundamentalLevelTable() = default;
  /// Parses and validates: ell_f in {1,2}, ell_f | ell_b, subgroup id resolvable.
  static FundamentalLevelTable parse(std::istream& in, const std::string& origin);
  static FundamentalLevelTable load(const std::string& path);

  const std::vector<FundamentalLevelRecord>& records() const { return records_; }
  std::optional<FundamentalLevelRecord> find(const LieType& t, const std::string& subgroup) const;

 private:
  std::vector<FundamentalLevelRecord> records_;
};

/// Path of the bundled fundamental-level data file.
std::string default_ell_f_path();

}  // namespace liegerbe
