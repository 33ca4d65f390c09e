#include "liegerbe/rootsys.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <utility>

namespace liegerbe {

bool is_valid_type(Family family, int rank) {
  switch (family) {
    case Family::A: return rank >= 1;
    case Family::B: return rank >= 2;
    case Family::C: return rank >= 2;
    case Family::D: return rank >= 3;
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
  }
  return false;
}

LieType LieType::make(Family family, int rank) {
  if (!is_valid_type(family, rank)) {
    LieType bad{family, rank};
    throw InvalidInput("invalid Lie type " + bad.name());
  }
  return LieType{family, rank};
}

LieType LieType::parse(char family, int rank) {
  switch (family) {
    case 'A': case 'a': return make(Family::A, rank);
    case 'B': case 'b': return make(Family::B, rank);
    case 'C': case 'c': return make(Family::C, rank);
    case 'D': case 'd': return make(Family::D, rank);
    case 'E': case 'e': return make(Family::E, rank);
    case 'F': case 'f': return make(Family::F, rank);
    case 'G': case 'g': return make(Family::G, rank);
    default: throw InvalidInput(std::string("unknown Lie family '") + family + "'");
  }
}

char LieType::letter() const { return "ABCDEFG"[static_cast<int>(family)]; }

std::string LieType::name() const { return std::string(1, letter()) + std::to_string(rank); }

std::vector<LieType> all_types(int max_rank) {
  std::vector<LieType> out;
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G})
    for (int r = 1; r <= max_rank; ++r)
      if (is_valid_type(f, r)) out.push_back(LieType{f, r});
  return out;
}

namespace {

struct Dynkin {
  QVec norms;  // squared lengths of simple roots, long roots = 2
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // 0-based
};

Dynkin dynkin(LieType t) {
  const std::size_t n = static_cast<std::size_t>(t.rank);
  Dynkin d;
  d.norms.assign(n, Rational(2));
  auto chain = [&](std::size_t upto) {
    for (std::size_t i = 0; i + 1 < upto; ++i) d.edges.emplace_back(i, i + 1);
  };
  switch (t.family) {
    case Family::A: chain(n); break;
    case Family::B:
      chain(n);
      d.norms[n - 1] = 1;
      break;
    case Family::C:
      chain(n);
      for (std::size_t i = 0; i + 1 < n; ++i) d.norms[i] = 1;
      break;
    case Family::D:
      chain(n - 1);
      d.edges.emplace_back(n - 3, n - 1);
      break;
    case Family::E:
      // Bourbaki: 1-3-4-5-6-7-8 with 2 attached to 4.
      d.edges.emplace_back(0, 2);
      for (std::size_t i = 2; i + 1 < n; ++i) d.edges.emplace_back(i, i + 1);
      d.edges.emplace_back(1, 3);
      break;
    case Family::F:
      chain(4);
      d.norms[2] = d.norms[3] = 1;
      break;
    case Family::G:
      chain(2);
      d.norms[0] = Rational(2, 3);
      break;
  }
  return d;
}

int height_of(const IVec& c) {
  Integer h = 0;
  for (const auto& x : c) h += x;
  return static_cast<int>(h.get_si());
}

}  // namespace

RootSystem::RootSystem(LieType t) : type_(LieType::make(t.family, t.rank)), rank_(t.rank) {
  const Dynkin d = dynkin(type_);
  const std::size_t n = rank_;
  root_norms_ = d.norms;

  QMat ip(n, n);  // (alpha_i, alpha_j)
  for (std::size_t i = 0; i < n; ++i) ip(i, i) = d.norms[i];
  for (auto [i, j] : d.edges) {
    Rational v = -std::max(d.norms[i], d.norms[j]) / 2;
    ip(i, j) = ip(j, i) = v;
  }
  cartan_ = IMat(n, n);
  gram_ = QMat(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational a = 2 * ip(i, j) / ip(i, i);
      if (!is_integral(a)) throw InternalError("non-integral Cartan entry");
      cartan_(i, j) = a.get_num();
      gram_(i, j) = 4 * ip(i, j) / (ip(i, i) * ip(j, j));
    }

  // Positive roots by closure of the simple roots under simple reflections.
  std::set<IVec> positive;
  std::vector<IVec> frontier;
  for (std::size_t i = 0; i < n; ++i) {
    IVec e(n, Integer(0));
    e[i] = 1;
    positive.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<IVec> next;
    for (const auto& beta : frontier)
      for (std::size_t i = 0; i < n; ++i) {
        Integer c = 0;  // <beta, alpha_i^vee>
        for (std::size_t j = 0; j < n; ++j) c += cartan_(i, j) * beta[j];
        if (c == 0) continue;
        IVec img(beta);
        img[i] -= c;
        if (std::any_of(img.begin(), img.end(), [](const Integer& x) { return x < 0; })) continue;
        if (positive.insert(img).second) next.push_back(img);
      }
    frontier = std::move(next);
  }
  for (const auto& p : positive) {
    roots_.push_back(p);
    IVec neg(p);
    for (auto& x : neg) x = -x;
    roots_.push_back(neg);
  }
  std::sort(roots_.begin(), roots_.end(), [](const IVec& a, const IVec& b) {
    const int ha = height_of(a), hb = height_of(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });

  for (const auto& c : roots_) {
    QVec f(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) f[i] += cartan_(i, j) * c[j];
    root_functionals_.push_back(f);
    Rational norm = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) norm += Rational(c[i]) * Rational(c[j]) * ip(i, j);
    QVec cr(n);
    for (std::size_t j = 0; j < n; ++j) cr[j] = Rational(c[j]) * ip(j, j) / norm;
    coroots_.push_back(cr);
  }

  simple_index_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    IVec e(n, Integer(0));
    e[i] = 1;
    simple_index_[i] = index_of_root(e);
  }
  highest_ = roots_.size() - 1;  // unique root of maximal height sorts last

  const QMat cw = inverse(to_rational(cartan_).transpose());
  for (std::size_t j = 0; j < n; ++j) coweights_.push_back(cw.column(j));
}

QVec RootSystem::root_vector(std::size_t k) const { return inverse(gram_) * root_functionals_[k]; }

int RootSystem::height(std::size_t k) const { return height_of(roots_[k]); }

std::size_t RootSystem::index_of_root(const IVec& coefficients) const {
  const int h = height_of(coefficients);
  auto it = std::lower_bound(roots_.begin(), roots_.end(), coefficients,
                             [](const IVec& a, const IVec& b) {
                               const int ha = height_of(a), hb = height_of(b);
                               if (ha != hb) return ha < hb;
                               return a < b;
                             });
  if (it == roots_.end() || *it != coefficients || height_of(*it) != h)
    throw InvalidInput("not a root");
  return static_cast<std::size_t>(it - roots_.begin());
}

std::size_t RootSystem::index_of_coroot(const QVec& v) const {
  for (std::size_t k = 0; k < coroots_.size(); ++k)
    if (coroots_[k] == v) return k;
  return coroots_.size();
}

std::vector<std::size_t> RootSystem::special_nodes() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < rank_; ++i)
    if (marks()[i] == 1) s.push_back(i + 1);
  return s;
}

QVec RootSystem::fundamental_weight(std::size_t i) const {
  return inverse(gram_) * unit(rank_, i - 1);
}

WeylElement RootSystem::simple_reflection(std::size_t i) const {
  // s_i(e_k) = e_k - <alpha_i, alpha_k^vee> e_i
  IMat m = IMat::identity(rank_);
  for (std::size_t k = 0; k < rank_; ++k) m(i - 1, k) -= cartan_(k, i - 1);
  WeylElement w(std::move(m));
  w.set_word({i});
  return w;
}

WeylElement RootSystem::reflection(std::size_t k) const {
  const QVec& f = root_functionals_[k];
  const QVec& cr = coroots_[k];
  IMat m = IMat::identity(rank_);
  for (std::size_t col = 0; col < rank_; ++col)
    for (std::size_t row = 0; row < rank_; ++row) {
      Rational v = f[col] * cr[row];
      m(row, col) -= v.get_num();
    }
  return WeylElement(std::move(m));
}

Alcove RootSystem::alcove() const {
  Alcove a;
  for (std::size_t j = 0; j <= rank_; ++j) a.vertices.push_back(alcove_vertex(j));
  return a;
}

QVec RootSystem::alcove_vertex(std::size_t j) const {
  if (j > rank_) throw InvalidInput("alcove vertex index out of range");
  if (j == 0) return QVec(rank_);
  return Rational(1, marks()[j - 1]) * coweights_[j - 1];
}

bool RootSystem::in_alcove(const QVec& xi) const {
  if (xi.size() != rank_) throw InvalidInput("alcove test: dimension mismatch");
  for (std::size_t i = 1; i <= rank_; ++i)
    if (dot(simple_root(i), xi) < 0) return false;
  return dot(highest_root_functional(), xi) <= 1;
}

AlcoveReduction RootSystem::reduce_to_alcove(const QVec& xi) const {
  if (xi.size() != rank_) throw InvalidInput("alcove reduction: dimension mismatch");
  AlcoveReduction r{xi, identity(), QVec(rank_)};
  if (in_alcove(xi)) return r;

  // Translate into the unit cell of the coroot lattice, then walk through walls.
  for (std::size_t i = 0; i < rank_; ++i) r.translation[i] = -Rational(floor_q(xi[i]));
  r.point = xi + r.translation;
  const WeylElement s_theta = reflection(highest_);
  const QVec& theta_vee = highest_coroot();
  for (;;) {
    std::size_t neg = 0;
    for (std::size_t i = 1; i <= rank_ && neg == 0; ++i)
      if (dot(simple_root(i), r.point) < 0) neg = i;
    if (neg != 0) {
      const WeylElement s = simple_reflection(neg);
      r.point = s.apply(r.point);
      r.translation = s.apply(r.translation);
      r.w = s * r.w;
      continue;
    }
    if (dot(highest_root_functional(), r.point) > 1) {
      r.point = s_theta.apply(r.point) + theta_vee;
      r.translation = s_theta.apply(r.translation) + theta_vee;
      r.w = s_theta * r.w;
      continue;
    }
    break;
  }
  r.w.set_word(reduced_word(r.w));
  return r;
}

std::vector<std::size_t> RootSystem::face_subsystem(const std::vector<std::size_t>& J) const {
  if (J.empty()) throw InvalidInput("face_subsystem: empty index set");
  std::vector<QVec> mus;
  for (auto j : J) mus.push_back(alcove_vertex(j));
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < roots_.size(); ++k) {
    const Rational m = dot(root_functionals_[k], mus[0]);
    if (!is_integral(m)) continue;
    bool common = true;
    for (std::size_t a = 1; a < mus.size() && common; ++a)
      common = dot(root_functionals_[k], mus[a]) == m;
    if (common) out.push_back(k);
  }
  return out;
}

bool RootSystem::is_positive(const QVec& coroot) {
  bool any = false;
  for (const auto& x : coroot) {
    if (x < 0) return false;
    if (x > 0) any = true;
  }
  return any;
}

bool RootSystem::is_right_descent(const WeylElement& w, std::size_t i) const {
  // l(w s_i) < l(w)  iff  w(alpha_i^vee) < 0
  for (std::size_t r = 0; r < rank_; ++r)
    if (w.matrix()(r, i - 1) > 0) return false;
  return true;
}

std::vector<std::size_t> RootSystem::reduced_word(const WeylElement& w) const {
  std::vector<std::size_t> rev;
  WeylElement cur = w;
  while (!cur.is_identity()) {
    std::size_t d = 0;
    for (std::size_t i = 1; i <= rank_ && d == 0; ++i)
      if (is_right_descent(cur, i)) d = i;
    if (d == 0) throw InternalError("reduced_word: element has no descent");
    cur = cur * simple_reflection(d);
    rev.push_back(d);
    if (rev.size() > roots_.size()) throw InternalError("reduced_word: length exceeds positive roots");
  }
  return {rev.rbegin(), rev.rend()};
}

WeylElement RootSystem::from_word(const std::vector<std::size_t>& word) const {
  WeylElement w = identity();
  for (auto i : word) {
    if (i < 1 || i > rank_) throw InvalidInput("word letter out of range");
    w = w * simple_reflection(i);
  }
  w.set_word(word);
  return w;
}

std::size_t RootSystem::expected_root_count(LieType t) {
  const std::size_t n = static_cast<std::size_t>(t.rank);
  switch (t.family) {
    case Family::A: return n * (n + 1);
    case Family::B:
    case Family::C: return 2 * n * n;
    case Family::D: return 2 * n * (n - 1);
    case Family::E: return n == 6 ? 72 : n == 7 ? 126 : 240;
    case Family::F: return 48;
    case Family::G: return 12;
  }
  return 0;
}

std::vector<std::string> RootSystem::check_invariants() const {
  std::vector<std::string> bad;
  if (roots_.size() != expected_root_count(type_))
    bad.push_back("root count " + std::to_string(roots_.size()));

  Rational min_norm = -1;
  for (const auto& c : coroots_) {
    Rational nrm = inner(c, c);
    if (min_norm < 0 || nrm < min_norm) min_norm = nrm;
  }
  if (min_norm != 2) bad.push_back("short coroot squared length " + to_string(min_norm));

  for (std::size_t i = 1; i <= rank_; ++i)
    for (std::size_t j = 1; j <= rank_; ++j)
      if (dot(simple_root(i), fundamental_coweight(j)) != (i == j ? 1 : 0))
        bad.push_back("<alpha_" + std::to_string(i) + ", lambda_" + std::to_string(j) + "^vee>");

  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < rank_; ++j)
      if (Rational(cartan_(i, j)) != dot(simple_root(j + 1), simple_coroot(i + 1)))
        bad.push_back("cartan entry mismatch");

  std::set<IVec> all(roots_.begin(), roots_.end());
  for (const auto& beta : roots_)
    for (std::size_t i = 0; i < rank_; ++i) {
      Integer c = 0;
      for (std::size_t j = 0; j < rank_; ++j) c += cartan_(i, j) * beta[j];
      IVec img(beta);
      img[i] -= c;
      if (!all.count(img)) {
        bad.push_back("root set not closed under s_" + std::to_string(i + 1));
        return bad;
      }
    }

  for (std::size_t k = 0; k < roots_.size(); ++k)
    if (dot(root_functionals_[k], coroots_[k]) != 2) bad.push_back("<alpha, alpha^vee> != 2");
  return bad;
}

}  // namespace liegerbe
