#include "liegerbe/obstruction.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>

namespace liegerbe {

bool admits_equivariant_extension(const Integer& ell_b, const Integer& level) {
  if (level < 1) throw InvalidInput("level must be positive");
  return level % ell_b == 0;
}

Integer obstruction_order(const Integer& ell_b, const Integer& level) {
  if (level < 1) throw InvalidInput("level must be positive");
  return ell_b / gcd(level, ell_b);
}

bool su_condition(long N, long k) {
  if (N < 2 || k < 1) throw InvalidInput("su_condition: need N >= 2 and k >= 1");
  if (N % k != 0) throw InvalidInput("su_condition: k does not divide N");
  const long k2 = k * k;
  if (N % k2 == 0) return true;
  return (2 * N) % k2 == 0 && N % 4 == 2 && k % 4 == 2;
}

ObstructionReport obstruction_report(const RootSystem& rs, const Center& c, const CenterSubgroup& z,
                                     const Integer& level, const FundamentalLevelTable* ell_f) {
  ObstructionReport r{rs.type(), subgroup_id(c, z), z.ell_b, std::nullopt, level, false, 1};
  if (ell_f) r.ell_f = ell_f->find(rs.type(), r.subgroup);
  r.admits = admits_equivariant_extension(z.ell_b, level);
  r.order = obstruction_order(z.ell_b, level);
  return r;
}

namespace {

enum class DKind { Trivial, Vector, Spinor, Full };

DKind d_kind(const Center& c, const CenterSubgroup& z) {
  if (z.is_trivial()) return DKind::Trivial;
  if (z.order() == c.order()) return DKind::Full;
  // index-2 subgroups (or Z2 inside Z4): vector iff generated by lambda_1
  return c.element(z.members[1]).node == 1 ? DKind::Vector : DKind::Spinor;
}

}  // namespace

std::string classical_name(const LieType& t, const Center& c, const CenterSubgroup& z) {
  const int n = t.rank;
  const bool triv = z.is_trivial();
  switch (t.family) {
    case Family::A: {
      const int N = n + 1, k = static_cast<int>(z.order());
      if (k == 1) return "SU(" + std::to_string(N) + ")";
      if (k == N) return "PSU(" + std::to_string(N) + ")";
      return "SU(" + std::to_string(N) + ")/Z_" + std::to_string(k);
    }
    case Family::B: return (triv ? "Spin(" : "SO(") + std::to_string(2 * n + 1) + ")";
    case Family::C: return (triv ? "Sp(" : "PSp(") + std::to_string(n) + ")";
    case Family::D:
      switch (d_kind(c, z)) {
        case DKind::Trivial: return "Spin(" + std::to_string(2 * n) + ")";
        case DKind::Vector: return "SO(" + std::to_string(2 * n) + ")";
        case DKind::Spinor: return "Ss(" + std::to_string(2 * n) + ")";
        case DKind::Full: return "PO(" + std::to_string(2 * n) + ")";
      }
      break;
    case Family::E: return (triv ? "E" : "PE") + std::to_string(n);
    case Family::F: return "F4";
    case Family::G: return "G2";
  }
  return t.name();
}

std::optional<bool> on_classical_list(const LieType& t, const Center& c, const CenterSubgroup& z) {
  const int n = t.rank;
  if (t.family == Family::A) return su_condition(n + 1, static_cast<long>(z.order()));
  if (z.is_trivial()) return std::nullopt;
  switch (t.family) {
    case Family::B: return true;  // SO(2n+1)
    case Family::C: return true;  // PSp(n)
    case Family::D:
      switch (d_kind(c, z)) {
        case DKind::Vector: return true;                  // SO(2n)
        case DKind::Spinor: return true;                  // Ss(4m)
        case DKind::Full: return (2 * n) % 8 == 2;        // PO(8m+2)
        case DKind::Trivial: return std::nullopt;
      }
      break;
    case Family::E: return n == 7;  // PE7
    default: break;
  }
  return std::nullopt;
}

CorollaryTable corollary_table(int max_rank, int max_N, const FundamentalLevelTable* ell_f) {
  if (max_rank < 2 || max_N < 2) throw InvalidInput("corollary_table: bounds must be >= 2");
  CorollaryTable table;
  table.ell_f_loaded = ell_f != nullptr;
  std::vector<LieType> types;
  for (int N = 2; N <= max_N; ++N) types.push_back(LieType{Family::A, N - 1});
  for (const auto& t : all_types(max_rank))
    if (t.family != Family::A) types.push_back(t);

  for (const auto& t : types) {
    const RootSystem rs(t);
    const Center c(rs);
    for (const auto& z : subgroups(rs, c)) {
      CorollaryRow row;
      row.type = t;
      row.subgroup = subgroup_id(c, z);
      row.name = classical_name(t, c, z);
      row.order = z.order();
      row.ell_b = z.ell_b;
      row.listed = on_classical_list(t, c, z);
      if (t.family == Family::A) row.su = row.listed;
      if (ell_f) {
        if (auto rec = ell_f->find(t, row.subgroup)) {
          row.ell_f = rec->ell_f;
          row.ell_f_source = rec->source;
          row.basic_gerbe_admits = row.ell_b == rec->ell_f;
        }
      }

      if (row.su) {
        if (*row.su && row.ell_b > 2) table.su_violations.push_back(row.name + ": su_condition holds but ell_b > 2");
        if (row.ell_b == 1 && !*row.su) table.su_violations.push_back(row.name + ": ell_b = 1 but su_condition fails");
      }
      if (ell_f && row.listed) {
        if (!row.ell_f)
          table.list_mismatches.push_back(row.name + ": no fundamental-level datum");
        else if (*row.listed != row.basic_gerbe_admits)
          table.list_mismatches.push_back(row.name + ": listed=" + (*row.listed ? "yes" : "no") +
                                          " but ell_f=" + std::to_string(*row.ell_f) +
                                          ", ell_b=" + row.ell_b.get_str());
      }
      table.rows.push_back(std::move(row));
    }
  }
  return table;
}

std::string to_markdown(const CorollaryTable& t) {
  std::ostringstream out;
  out << "| group | type | subgroup | |Z| | ell_b | listed | ell_f | verdict |\n";
  out << "|---|---|---|---|---|---|---|---|\n";
  for (const auto& r : t.rows) {
    out << "| " << r.name << " | " << r.type.name() << " | " << r.subgroup << " | " << r.order << " | " << r.ell_b
        << " | " << (r.listed ? (*r.listed ? "yes" : "no") : "-") << " | "
        << (r.ell_f ? std::to_string(*r.ell_f) : "-") << " | ";
    if (r.ell_b == 1)
      out << "admits";
    else if (r.ell_f)
      out << (r.basic_gerbe_admits ? "admits" : "no equivariant extension of the basic gerbe");
    else if (r.ell_b > 2)
      out << "no equivariant extension of the basic gerbe";
    else
      out << "needs ell_f";
    out << " |\n";
  }
  return out.str();
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

bool is_cyclic(const Center& c, const CenterSubgroup& z) {
  for (auto a : z.members) {
    std::size_t x = a, n = 1;
    while (x != 0) {
      x = c.multiply(x, a);
      ++n;
    }
    if (n == z.order()) return true;
  }
  return false;
}

CenterSubgroup unique_match(const RootSystem& rs, const Center& c, const std::string& selector,
                            const std::function<bool(const CenterSubgroup&)>& pred) {
  std::vector<CenterSubgroup> hits;
  for (auto& z : subgroups(rs, c))
    if (pred(z)) hits.push_back(std::move(z));
  if (hits.size() == 1) return hits.front();
  if (hits.empty()) throw InvalidInput("no subgroup of the center of " + rs.type().name() + " matches '" + selector + "'");
  std::string ids;
  for (const auto& z : hits) ids += (ids.empty() ? "" : ", ") + subgroup_id(c, z);
  throw InvalidInput("selector '" + selector + "' is ambiguous for " + rs.type().name() + ": " + ids);
}

}  // namespace

CenterSubgroup resolve_subgroup(const RootSystem& rs, const Center& c, const std::string& selector) {
  if (selector == "trivial") return trivial_subgroup(rs, c);
  if (selector == "full") return full_subgroup(rs, c);
  if (selector.rfind("order:", 0) == 0) {
    std::size_t d = 0;
    try {
      d = std::stoul(selector.substr(6));
    } catch (const std::exception&) {
      throw InvalidInput("bad order selector '" + selector + "'");
    }
    return unique_match(rs, c, selector,
                        [&](const CenterSubgroup& z) { return z.order() == d && is_cyclic(c, z); });
  }
  if (selector.rfind("gen:", 0) == 0) {
    std::set<std::size_t> members{0};
    for (const auto& g : split(selector.substr(4), ';')) {
      QVec v;
      for (const auto& x : split(g, ',')) v.push_back(parse_rational(x));
      if (v.size() != rs.rank()) throw InvalidInput("generator '" + g + "' has the wrong number of coordinates");
      members.insert(c.index_of(v));
    }
    // close under multiplication
    bool grew = true;
    while (grew) {
      grew = false;
      for (auto a : std::vector<std::size_t>(members.begin(), members.end()))
        for (auto b : std::vector<std::size_t>(members.begin(), members.end()))
          grew = members.insert(c.multiply(a, b)).second || grew;
    }
    return make_subgroup(rs, c, std::vector<std::size_t>(members.begin(), members.end()));
  }
  const bool id_like = !selector.empty() && std::all_of(selector.begin(), selector.end(), [](char ch) {
    return std::isdigit(static_cast<unsigned char>(ch)) || ch == '+';
  });
  if (id_like) return unique_match(rs, c, selector, [&](const CenterSubgroup& z) { return subgroup_id(c, z) == selector; });
  return unique_match(rs, c, selector,
                      [&](const CenterSubgroup& z) { return classical_name(rs.type(), c, z) == selector; });
}

}  // namespace liegerbe
