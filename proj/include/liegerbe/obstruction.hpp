#pragma once

// Equivariant-extension predicate, obstruction order, the SU(N)/Z_k arithmetic
// condition and the table comparing basic levels with the classical list.

#include <optional>
#include <string>
#include <vector>

#include "liegerbe/centers.hpp"

namespace liegerbe {

/// ell_b | level.
bool admits_equivariant_extension(const Integer& ell_b, const Integer& level);
/// ell_b / gcd(level, ell_b).
Integer obstruction_order(const Integer& ell_b, const Integer& level);

/// k^2 | N, or k^2 | 2N with N = k = 2 mod 4. Requires k | N, N >= 2, k >= 1.
bool su_condition(long N, long k);

struct ObstructionReport {
  LieType type;
  std::string subgroup;
  Integer ell_b;
  std::optional<FundamentalLevelRecord> ell_f;
  Integer level;
  bool admits = false;
  Integer order;
};

ObstructionReport obstruction_report(const RootSystem& rs, const Center& c, const CenterSubgroup& z,
                                     const Integer& level, const FundamentalLevelTable* ell_f = nullptr);

/// Classical name of G/Z, e.g. "SO(7)", "PO(10)", "Ss(8)", "SU(6)/Z_2".
std::string classical_name(const LieType& t, const Center& c, const CenterSubgroup& z);
/// Whether G/Z appears on the classical list of groups whose basic gerbe admits an
/// equivariant extension. std::nullopt for simply connected groups outside type A.
std::optional<bool> on_classical_list(const LieType& t, const Center& c, const CenterSubgroup& z);

struct CorollaryRow {
  LieType type;
  std::string subgroup;
  std::string name;
  std::size_t order = 1;
  Integer ell_b;
  std::optional<bool> listed;
  std::optional<int> ell_f;
  std::string ell_f_source;
  std::optional<bool> su;  // type A only
  bool basic_gerbe_admits = false;  // ell_f == ell_b, when ell_f is known
};

struct CorollaryTable {
  std::vector<CorollaryRow> rows;
  bool ell_f_loaded = false;
  /// (a) su_condition => ell_b <= 2, (b) ell_b == 1 => su_condition, type A.
  std::vector<std::string> su_violations;
  /// (c) listed <=> ell_f == ell_b, over rows with a list verdict.
  std::vector<std::string> list_mismatches;
};

/// Rows for types A_{N-1} with N <= max_N, and B, C, D, E, F, G of rank <= max_rank.
CorollaryTable corollary_table(int max_rank, int max_N, const FundamentalLevelTable* ell_f = nullptr);

std::string to_markdown(const CorollaryTable& t);

/// Subgroup named by a selector: "trivial", "full", "order:<d>" (a cyclic
/// subgroup of order d), "gen:<v>;<v>.." with each v a comma-separated list of
/// coweight coordinates, a subgroup id such as "1+5+6", or a classical name
/// such as "SO(10)". InvalidInput unless exactly one subgroup matches.
CenterSubgroup resolve_subgroup(const RootSystem& rs, const Center& c, const std::string& selector);

}  // namespace liegerbe
