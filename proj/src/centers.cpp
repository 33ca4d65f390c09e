#include "liegerbe/centers.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

#ifndef LIEGERBE_DATA_DIR
#define LIEGERBE_DATA_DIR "data"
#endif

namespace liegerbe {

std::size_t FiniteGroupTable::inverse(std::size_t a) const {
  for (std::size_t b = 0; b < order(); ++b)
    if (mult[a][b] == 0) return b;
  throw InternalError("group table without inverse");
}

Center::Center(const RootSystem& rs) {
  const std::size_t r = rs.rank();
  std::vector<QVec> cw;
  for (std::size_t j = 1; j <= r; ++j) cw.push_back(rs.fundamental_coweight(j));
  group_ = quotient_group(Lattice(QMat::from_columns(cw, r)), Lattice::standard(r));

  elements_.push_back(CentralElement{QVec(r), 0});
  for (auto i : rs.special_nodes()) elements_.push_back(CentralElement{rs.fundamental_coweight(i), i});
  if (Integer(elements_.size()) != group_.order())
    throw InternalError("special nodes do not account for the center of " + rs.type().name());
  for (std::size_t a = 0; a < elements_.size(); ++a)
    for (std::size_t b = 0; b < a; ++b)
      if (is_integral(elements_[a].rep - elements_[b].rep))
        throw InternalError("two special nodes give the same central element");

  const std::size_t n = elements_.size();
  table_.mult.assign(n, std::vector<std::size_t>(n, 0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table_.mult[a][b] = index_of(elements_[a].rep + elements_[b].rep);
}

std::size_t Center::index_of(const QVec& v) const {
  for (std::size_t c = 0; c < elements_.size(); ++c)
    if (v.size() == elements_[c].rep.size() && is_integral(v - elements_[c].rep)) return c;
  throw InvalidInput("vector is not a coweight");
}

std::size_t Center::index_of_node(std::size_t node) const {
  for (std::size_t c = 1; c < elements_.size(); ++c)
    if (elements_[c].node == node) return c;
  throw InvalidInput("node " + std::to_string(node) + " is not special");
}

bool CenterSubgroup::contains(std::size_t a) const {
  return std::binary_search(members.begin(), members.end(), a);
}

std::size_t CenterSubgroup::local_index(std::size_t a) const {
  auto it = std::lower_bound(members.begin(), members.end(), a);
  if (it == members.end() || *it != a) throw InvalidInput("element not in subgroup");
  return static_cast<std::size_t>(it - members.begin());
}

std::string subgroup_id(const Center& c, const CenterSubgroup& z) {
  if (z.is_trivial()) return "trivial";
  std::string id;
  for (std::size_t k = 1; k < z.members.size(); ++k) {
    if (!id.empty()) id += '+';
    id += std::to_string(c.element(z.members[k]).node);
  }
  return id;
}

Lattice integral_lattice(const RootSystem& rs, const Center& c, const std::vector<std::size_t>& members) {
  std::vector<QVec> gens;
  for (std::size_t i = 0; i < rs.rank(); ++i) gens.push_back(unit(rs.rank(), i));
  for (auto a : members) gens.push_back(c.element(a).rep);
  return Lattice::from_generators(gens, rs.rank());
}

Integer basic_level(const RootSystem& rs, const Lattice& lz) {
  return min_integer_scale(lz.gram(rs.basic_gram()));
}

Integer basic_level_search(const RootSystem& rs, const Lattice& lz, int max_level) {
  const QMat g = lz.gram(rs.basic_gram());
  for (int l = 1; l <= max_level; ++l) {
    bool ok = true;
    for (std::size_t i = 0; i < g.rows() && ok; ++i)
      for (std::size_t j = 0; j < g.cols() && ok; ++j) ok = is_integral(Rational(l) * g(i, j));
    if (ok) return l;
  }
  return 0;
}

CenterSubgroup make_subgroup(const RootSystem& rs, const Center& c, std::vector<std::size_t> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty() || members.front() != 0) throw InvalidInput("subgroup must contain the identity");
  if (members.back() >= c.order()) throw InvalidInput("subgroup element out of range");
  for (auto a : members)
    for (auto b : members)
      if (!std::binary_search(members.begin(), members.end(), c.multiply(a, b)))
        throw InvalidInput("element set is not closed under multiplication");
  Lattice lz = integral_lattice(rs, c, members);
  Integer lb = basic_level(rs, lz);
  return CenterSubgroup{std::move(members), std::move(lz), lb};
}

CenterSubgroup trivial_subgroup(const RootSystem& rs, const Center& c) { return make_subgroup(rs, c, {0}); }

CenterSubgroup full_subgroup(const RootSystem& rs, const Center& c) {
  std::vector<std::size_t> all(c.order());
  for (std::size_t a = 0; a < all.size(); ++a) all[a] = a;
  return make_subgroup(rs, c, all);
}

std::vector<CenterSubgroup> subgroups(const RootSystem& rs, const Center& c) {
  const std::size_t n = c.order();
  std::vector<std::vector<std::size_t>> sets;
  for (unsigned long mask = 0; mask < (1ul << (n - 1)); ++mask) {
    std::vector<std::size_t> s{0};
    for (std::size_t a = 1; a < n; ++a)
      if (mask & (1ul << (a - 1))) s.push_back(a);
    bool closed = true;
    for (auto a : s)
      for (auto b : s)
        if (closed && !std::binary_search(s.begin(), s.end(), c.multiply(a, b))) closed = false;
    if (closed) sets.push_back(std::move(s));
  }
  std::sort(sets.begin(), sets.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  std::vector<CenterSubgroup> out;
  for (auto& s : sets) out.push_back(make_subgroup(rs, c, std::move(s)));
  return out;
}

FiniteGroupTable subgroup_table(const Center& c, const CenterSubgroup& z) {
  const std::size_t n = z.order();
  FiniteGroupTable t;
  t.mult.assign(n, std::vector<std::size_t>(n, 0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t.mult[a][b] = z.local_index(c.multiply(z.members[a], z.members[b]));
  return t;
}

std::vector<Character> character_group(const RootSystem& rs, const CenterSubgroup& z) {
  const std::size_t r = rs.rank();
  // Functionals pairing integrally with Lambda_Z, inside the functionals integral on coroots.
  const Lattice dual_z = dual_lattice(z.integral_lattice, QMat::identity(r));
  const FiniteAbelianGroup q = quotient_group(Lattice::standard(r), dual_z);
  std::vector<Character> out;
  for (const auto& coords : q.element_coordinates()) {
    QVec f(r);
    for (std::size_t k = 0; k < coords.size(); ++k) f = f + Rational(coords[k]) * q.generators[k];
    out.push_back(Character{std::move(f)});
  }
  return out;
}

bool is_normalized(const Cochain2& alpha) {
  for (std::size_t a = 0; a < alpha.size(); ++a)
    if (!alpha[0][a].is_trivial() || !alpha[a][0].is_trivial()) return false;
  return true;
}

PhaseExponent coboundary(const FiniteGroupTable& g, const Cochain2& alpha, std::size_t a, std::size_t b,
                         std::size_t c) {
  return alpha[b][c] - alpha[g(a, b)][c] + alpha[a][g(b, c)] - alpha[a][b];
}

bool is_cocycle(const FiniteGroupTable& g, const Cochain2& alpha) {
  const std::size_t n = g.order();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (!coboundary(g, alpha, a, b, c).is_trivial()) return false;
  return true;
}

namespace {

// Generators of the full-rank lattice {y : A y = 0 mod n} in Z^cols.
std::vector<QVec> kernel_mod(const IMat& a, const Integer& n) {
  const SmithForm f = smith_normal_form(a);
  const auto d = f.diagonal();
  std::vector<QVec> gens;
  for (std::size_t i = 0; i < a.cols(); ++i) {
    Integer scale = 1;
    if (i < d.size()) scale = n / gcd(d[i], n);
    gens.push_back(Rational(scale) * to_rational(f.V.column(i)));
  }
  return gens;
}

}  // namespace

H2Result h2_u1(const FiniteGroupTable& g) {
  const std::size_t n = g.order();
  if (n > 16) throw InvalidInput("h2_u1: group order exceeds 16");
  if (n <= 1) return {};
  const std::size_t k = n - 1;  // nonidentity elements 1..n-1
  const std::size_t d2 = k * k, d3 = k * k * k;
  auto idx2 = [k](std::size_t a, std::size_t b) { return (a - 1) * k + (b - 1); };

  // Normalized coboundary maps; entries touching the identity vanish.
  IMat delta1(d2, k);
  for (std::size_t a = 1; a < n; ++a)
    for (std::size_t b = 1; b < n; ++b) {
      const std::size_t row = idx2(a, b);
      delta1(row, a - 1) += 1;
      delta1(row, b - 1) += 1;
      if (g(a, b) != 0) delta1(row, g(a, b) - 1) -= 1;
    }
  IMat delta2(d3, d2);
  std::size_t row = 0;
  for (std::size_t a = 1; a < n; ++a)
    for (std::size_t b = 1; b < n; ++b)
      for (std::size_t c = 1; c < n; ++c, ++row) {
        delta2(row, idx2(b, c)) += 1;
        if (g(a, b) != 0) delta2(row, idx2(g(a, b), c)) -= 1;
        if (g(b, c) != 0) delta2(row, idx2(a, g(b, c))) += 1;
        delta2(row, idx2(a, b)) -= 1;
      }

  // Values live in (1/M)Z/Z with M = n^2: cocycles with values in (1/n)Z/Z
  // modulo coboundaries of Q/Z-valued cochains; the latter take values in (1/M)Z.
  const Integer m = static_cast<unsigned long>(n);
  const Integer big = m * m;
  std::vector<QVec> cgens;
  for (const auto& y : kernel_mod(delta2, m)) cgens.push_back(Rational(m) * y);
  std::vector<QVec> bgens;
  const QMat d1 = to_rational(delta1);
  for (const auto& y : kernel_mod(delta1, m)) bgens.push_back(d1 * y);
  for (std::size_t i = 0; i < d2; ++i) {
    cgens.push_back(Rational(big) * unit(d2, i));
    bgens.push_back(Rational(big) * unit(d2, i));
  }
  const Lattice cocycles = Lattice::from_generators(cgens, d2);
  const Lattice coboundaries = Lattice::from_generators(bgens, d2);

  H2Result out;
  out.group = quotient_group(cocycles, coboundaries);
  for (const auto& x : out.group.generators) {
    Cochain2 alpha(n, std::vector<PhaseExponent>(n));
    for (std::size_t a = 1; a < n; ++a)
      for (std::size_t b = 1; b < n; ++b) alpha[a][b] = PhaseExponent(x[idx2(a, b)] / Rational(big));
    if (!is_cocycle(g, alpha)) throw InternalError("h2_u1 produced a non-cocycle");
    out.representatives.push_back(std::move(alpha));
  }
  return out;
}

FundamentalLevelTable FundamentalLevelTable::parse(std::istream& in, const std::string& origin) {
  FundamentalLevelTable t;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string fam, id, source, extra;
    int rank = 0, ell_f = 0;
    if (!(ls >> fam)) continue;
    const std::string where = origin + ":" + std::to_string(lineno) + ": ";
    if (!(ls >> rank >> id >> ell_f >> source) || (ls >> extra) || fam.size() != 1)
      throw InvalidInput(where + "expected `family rank subgroup_id ell_f source-tag`");
    FundamentalLevelRecord rec{LieType::parse(fam[0], rank), id, ell_f, source};
    if (ell_f != 1 && ell_f != 2) throw InvalidInput(where + "ell_f must be 1 or 2");

    const RootSystem rs(rec.type);
    const Center c(rs);
    bool found = false;
    for (const auto& z : subgroups(rs, c)) {
      if (subgroup_id(c, z) != id) continue;
      found = true;
      if (z.ell_b % ell_f != 0)
        throw InvalidInput(where + "ell_f = " + std::to_string(ell_f) + " does not divide ell_b = " +
                           z.ell_b.get_str());
    }
    if (!found) throw InvalidInput(where + "unknown subgroup '" + id + "' for " + rec.type.name());
    if (t.find(rec.type, id)) throw InvalidInput(where + "duplicate record");
    t.records_.push_back(std::move(rec));
  }
  return t;
}

FundamentalLevelTable FundamentalLevelTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open fundamental-level data file " + path);
  return parse(in, path);
}

std::optional<FundamentalLevelRecord> FundamentalLevelTable::find(const LieType& t,
                                                                  const std::string& subgroup) const {
  for (const auto& r : records_)
    if (r.type == t && r.subgroup == subgroup) return r;
  return std::nullopt;
}

std::string default_ell_f_path() { return std::string(LIEGERBE_DATA_DIR) + "/fundamental_levels.txt"; }

}  // namespace liegerbe
