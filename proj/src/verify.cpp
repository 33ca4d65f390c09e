#include "liegerbe/verify.hpp"

#include <chrono>
#include <random>

#include "liegerbe/center_action.hpp"
#include "liegerbe/gerbe_data.hpp"
#include "liegerbe/tits.hpp"

namespace liegerbe {

Json SuiteReport::to_json() const {
  Json j;
  j["suite"] = suite;
  j["passed"] = ok();
  j["checks"] = checks;
  j["failures"] = failures;
  j["seconds"] = seconds;
  j["details"] = details;
  return j;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"lattices", "characters", "action", "tits", "descent", "forms"};
  return names;
}

namespace {

struct Checker {
  SuiteReport& rep;
  void operator()(bool ok, const std::string& what) {
    ++rep.checks;
    if (!ok) rep.failures.push_back(what);
  }
};

IMat random_int_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> d(-6, 6);
  IMat m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

QVec random_alcove_point(const RootSystem& rs, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(1, 50);
  QVec xi(rs.rank());
  Rational total = 0;
  std::vector<Rational> w;
  for (std::size_t j = 0; j <= rs.rank(); ++j) {
    w.emplace_back(d(rng));
    total += w.back();
  }
  for (std::size_t j = 0; j <= rs.rank(); ++j) xi = xi + (w[j] / total) * rs.alcove_vertex(j);
  return xi;
}

void suite_lattices(SuiteReport& rep, const VerifyOptions& o) {
  Checker check{rep};
  std::mt19937_64 rng(o.seed);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<int> dim(1, 5);
    const IMat a = random_int_matrix(rng, dim(rng), dim(rng));
    const SmithForm s = smith_normal_form(a);
    check(s.U * a * s.V == s.S, "SNF: U A V != S");
    const IVec d = s.diagonal();
    for (std::size_t i = 1; i < d.size(); ++i)
      check(d[i - 1] == 0 ? d[i] == 0 : d[i] % d[i - 1] == 0, "SNF: divisibility chain broken");
  }
  for (const auto& t : all_types(o.max_rank)) {
    const RootSystem rs(t);
    const std::string name = t.name();
    for (const auto& v : rs.check_invariants()) check(false, name + ": " + v);
    check(rs.num_roots() == RootSystem::expected_root_count(t), name + ": root count");
    const Center c(rs);
    check(Rational(static_cast<long>(c.order())) == determinant(to_rational(rs.cartan())),
          name + ": |Z(G)| != det(Cartan)");
    const Lattice coroot = Lattice::standard(rs.rank());
    check(dual_lattice(dual_lattice(coroot, rs.basic_gram()), rs.basic_gram()) == coroot, name + ": double dual");
    for (const auto& z : subgroups(rs, c)) {
      const std::string id = name + "/" + subgroup_id(c, z);
      check(basic_level(rs, z.integral_lattice) == basic_level_search(rs, z.integral_lattice), id + ": ell_b search");
      check(quotient_group(z.integral_lattice, coroot).order() == z.order(), id + ": [Lambda_Z : coroot] != |Z|");
      const QMat g = z.integral_lattice.gram(rs.basic_gram());
      bool integral = true;
      for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) integral = integral && is_integral(Rational(z.ell_b) * g(i, j));
      check(integral, id + ": ell_b Gram not integral");
      rep.details.push_back({{"type", name}, {"subgroup", subgroup_id(c, z)}, {"order", z.order()},
                             {"ell_b", z.ell_b.get_si()}});
    }
  }
}

void suite_characters(SuiteReport& rep, const VerifyOptions& o) {
  Checker check{rep};
  for (const auto& t : all_types(o.max_rank)) {
    const RootSystem rs(t);
    const Center c(rs);
    for (const auto& z : subgroups(rs, c)) {
      const std::string id = t.name() + "/" + subgroup_id(c, z);
      const auto chars = character_group(rs, z);
      check(chars.size() == z.order(), id + ": |characters| != |Z|");
      check(!chars.empty() && chars[0].evaluate(z.integral_lattice.basis_vectors()[0]).is_trivial(),
            id + ": first character not trivial");
      for (std::size_t a : z.members) {
        if (a == 0) continue;
        bool separated = false;
        for (const auto& chi : chars) separated = separated || !chi.evaluate(c.element(a).rep).is_trivial();
        check(separated, id + ": characters do not separate element " + std::to_string(a));
      }
      if (z.order() <= 16) {
        const FiniteGroupTable table = subgroup_table(c, z);
        const H2Result h = h2_u1(table);
        const bool cyclic =
            quotient_group(z.integral_lattice, Lattice::standard(rs.rank())).invariant_factors.size() <= 1;
        if (cyclic) check(h.group.is_trivial(), id + ": H^2 of a cyclic group is not trivial");
        for (const auto& alpha : h.representatives)
          check(is_normalized(alpha) && is_cocycle(table, alpha), id + ": H^2 representative is not a cocycle");
        rep.details.push_back({{"type", t.name()}, {"subgroup", subgroup_id(c, z)}, {"h2", to_json(h.group)}});
      }
    }
  }
}

void suite_action(SuiteReport& rep, const VerifyOptions& o) {
  Checker check{rep};
  std::mt19937_64 rng(o.seed);
  for (const auto& t : all_types(o.max_rank)) {
    const RootSystem rs(t);
    const Center c(rs);
    if (c.order() == 1) continue;
    const std::string name = t.name();
    const CenterAction act(rs, c);
    check(act.check_homomorphism(full_subgroup(rs, c)), name + ": z -> w_z is not a homomorphism");
    for (std::size_t z = 0; z < c.order(); ++z) {
      for (std::size_t j = 0; j <= rs.rank(); ++j)
        check(act.vertex_translation_identity(z, j), name + ": vertex identity fails");
      for (int k = 0; k < 3; ++k) check(rs.in_alcove(act.act(z, random_alcove_point(rs, rng))), name + ": z.xi leaves the alcove");
    }
    for (const auto& zs : subgroups(rs, c))
      for (auto z : zs.members)
        check(act.lattice_stable(z, zs.integral_lattice), name + "/" + subgroup_id(c, zs) + ": Lambda_Z not stable");
  }
}

void suite_tits(SuiteReport& rep, const VerifyOptions& o) {
  Checker check{rep};
  std::mt19937_64 rng(o.seed);
  for (const auto& t : all_types(o.max_rank)) {
    const RootSystem rs(t);
    const TitsGroup g(rs);
    const std::string name = t.name();
    std::uniform_int_distribution<std::size_t> letter(1, rs.rank());
    auto random_element = [&] {
      std::vector<std::size_t> word(6);
      for (auto& l : word) l = letter(rng);
      return g.from_word(word);
    };
    for (int k = 0; k < 5; ++k) {
      const auto a = random_element(), b = random_element(), x = random_element();
      check(g.multiply(g.multiply(a, b), x) == g.multiply(a, g.multiply(b, x)), name + ": Tits product not associative");
      check(g.multiply(a, g.inverse(a)) == g.identity(), name + ": Tits inverse");
    }
    for (std::size_t i = 1; i <= rs.rank(); ++i) {
      const auto s = g.simple(i);
      const auto s2 = g.multiply(s, s);
      check(s2.w.is_identity() && g.multiply(s2, s2) == g.identity(), name + ": sigma_i^2 not of order 2 in T");
    }
    const Center c(rs);
    if (c.order() == 1) continue;
    const CenterAction act_c(rs, c);
    const CenterSubgroup full = full_subgroup(rs, c);
    for (auto z : full.members)
      for (auto y : full.members)
        check(is_integral(Rational(2) * center_cocycle(g, act_c, z, y).xi), name + ": cocycle not 2-torsion");
    check(twisted_cocycle_identity(g, act_c, full), name + ": twisted cocycle identity");
  }
}

void suite_descent(SuiteReport& rep, const VerifyOptions& o) {
  Checker check{rep};
  for (const auto& t : all_types(o.max_rank)) {
    const RootSystem rs(t);
    const Center c(rs);
    const CenterAction act(rs, c);
    const CheckReport chars = check_character_cocycles(rs, 1);
    rep.checks += chars.checked;
    for (const auto& v : chars.violations) rep.failures.push_back(t.name() + ": " + v);
    for (const auto& z : subgroups(rs, c)) {
      const std::string id = subgroup_id(c, z);
      const auto lvl = minimal_descent_level(act, z);
      check(lvl.has_value() && *lvl == z.ell_b, t.name() + "/" + id + ": minimal descent level != ell_b");
      for (std::size_t i = 0; i <= rs.rank(); ++i)
        for (std::size_t j = 0; j <= rs.rank(); ++j)
          if (i != j) check(z2_lift_welldefined(rs, c, z, z.ell_b, i, j), t.name() + "/" + id + ": Z x Z lift");
      rep.details.push_back({{"type", t.name()},
                             {"subgroup", id},
                             {"ell_b", z.ell_b.get_si()},
                             {"minimal_descent_level", lvl ? Json(lvl->get_si()) : Json(nullptr)}});
    }
  }
}

void suite_forms(SuiteReport& rep, const VerifyOptions& o) {
  Checker check{rep};
  NumericsConfig cfg;
  cfg.seed = o.seed;
  if (o.tol) cfg.cocycle_tol = *o.tol;
  int sign = 0;
  for (int N : {2, 3}) {
    cfg.sample_count = N == 2 ? 100 : 50;
    const auto r = check_cocycle(MatrixGroup(N), cfg);
    check(r.passed, r.group + ": cocycle check failed" +
                        (r.witness ? " at sample " + std::to_string(r.witness->second) + " (" + r.witness->first + ")"
                                   : std::string()));
    if (sign == 0) sign = r.sign;
    check(r.sign == sign, r.group + ": sign differs between groups");
    std::optional<double> integral;
    if (N == 2) {
      integral = integrate_eta_su2(64);
      check(std::abs(std::abs(*integral) - 1) <= cfg.integral_tol, "integral of eta over SU(2) is not +-1");
    }
    rep.details.push_back(liegerbe::to_json(r, integral));
  }
}

}  // namespace

SuiteReport run_suite(const std::string& name, const VerifyOptions& opts) {
  SuiteReport rep;
  rep.suite = name;
  const auto start = std::chrono::steady_clock::now();
  if (name == "lattices")
    suite_lattices(rep, opts);
  else if (name == "characters")
    suite_characters(rep, opts);
  else if (name == "action")
    suite_action(rep, opts);
  else if (name == "tits")
    suite_tits(rep, opts);
  else if (name == "descent")
    suite_descent(rep, opts);
  else if (name == "forms")
    suite_forms(rep, opts);
  else
    throw InvalidInput("unknown suite '" + name + "'");
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace liegerbe
