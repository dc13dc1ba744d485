#include "thetapos/weyl.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "thetapos/classify.hpp"

namespace thetapos {
namespace weyl {

QMat simple_reflection(const RootSystem& rs, int i) {
  if (i < 0 || i >= rs.rank) throw std::invalid_argument("simple root index out of range");
  QMat m(rs.dim, rs.dim);
  for (int col = 0; col < rs.dim; ++col) {
    QVec e(rs.dim, Rat(0));
    e[col] = 1;
    QVec img = rs.reflect(rs.simple[i], e);
    for (int row = 0; row < rs.dim; ++row) m.at(row, col) = img[row];
  }
  return m;
}

QMat word_matrix(const RootSystem& rs, const WeylWord& w) {
  QMat m = QMat::identity(rs.dim);
  for (int letter : w) m = m * simple_reflection(rs, letter);
  return m;
}

void check_weyl(const RootSystem& rs, const QMat& w) {
  if (w.rows() != rs.dim || w.cols() != rs.dim) throw std::invalid_argument("not a Weyl element");
  for (const auto& r : rs.roots)
    if (!rs.is_root(w.apply(r))) throw std::invalid_argument("not a Weyl element");
}

int length(const RootSystem& rs, const QMat& w) {
  check_weyl(rs, w);
  int inv = 0;
  for (size_t i = 0; i < rs.roots.size(); ++i) {
    if (!rs.positive[i]) continue;
    QVec img = w.apply(rs.roots[i]);
    int j = rs.root_index(img);
    if (j < 0) throw std::invalid_argument("not a Weyl element");
    if (!rs.positive[j]) ++inv;
  }
  return inv;
}

WeylWord reduced_word(const RootSystem& rs, const QMat& w) {
  check_weyl(rs, w);
  WeylWord out;
  QMat cur = w;
  const QMat id = QMat::identity(rs.dim);
  while (cur != id) {
    int descent = -1;
    for (int i = 0; i < rs.rank; ++i) {
      QVec img = cur.apply(rs.simple[i]);
      int j = rs.root_index(img);
      if (j < 0) throw std::invalid_argument("not a Weyl element");
      if (!rs.positive[j]) {
        descent = i;
        break;
      }
    }
    if (descent < 0) throw std::logic_error("non-identity element without descent");
    out.insert(out.begin(), descent);
    cur = cur * simple_reflection(rs, descent);
  }
  return out;
}

QMat longest_element(const RootSystem& rs, const std::vector<int>& S) {
  QMat w = QMat::identity(rs.dim);
  bool grew = true;
  while (grew) {
    grew = false;
    for (int i : S) {
      if (i < 0 || i >= rs.rank) throw std::invalid_argument("subset node index out of range");
      QVec img = w.apply(rs.simple[i]);
      int j = rs.root_index(img);
      if (j >= 0 && rs.positive[j]) {
        w = w * simple_reflection(rs, i);
        grew = true;
      }
    }
  }
  return w;
}

int element_order(const QMat& m, int cap) {
  QMat id = QMat::identity(m.rows());
  QMat p = m;
  for (int k = 1; k <= cap; ++k) {
    if (p == id) return k;
    p = p * m;
  }
  throw std::invalid_argument("element order exceeds cap");
}

namespace {

// Level-synchronous closure under right multiplication by the generators.
std::vector<QMat> closure(const std::vector<QMat>& gens, const QMat& id, Exec exec, size_t cap) {
  std::set<QMat> seen{id};
  std::vector<QMat> frontier{id};
  while (!frontier.empty()) {
    std::vector<QMat> produced;
    if (exec == Exec::Parallel) {
#ifdef _OPENMP
      int nt = omp_get_max_threads();
      std::vector<std::vector<QMat>> local(nt);
#pragma omp parallel for schedule(dynamic)
      for (size_t i = 0; i < frontier.size(); ++i) {
        auto& bucket = local[omp_get_thread_num()];
        for (const auto& g : gens) bucket.push_back(frontier[i] * g);
      }
      for (auto& b : local)
        for (auto& m : b) produced.push_back(std::move(m));
#else
      exec = Exec::Serial;
#endif
    }
    if (exec == Exec::Serial) {
      for (const auto& f : frontier)
        for (const auto& g : gens) produced.push_back(f * g);
    }
    std::sort(produced.begin(), produced.end());
    produced.erase(std::unique(produced.begin(), produced.end(),
                               [](const QMat& a, const QMat& b) { return a == b; }),
                   produced.end());
    frontier.clear();
    for (auto& m : produced)
      if (seen.insert(m).second) frontier.push_back(std::move(m));
    if (seen.size() > cap) throw std::invalid_argument("group closure exceeds cap");
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

std::vector<QMat> enumerate_group(const RootSystem& rs, Exec exec) {
  std::vector<QMat> gens;
  for (int i = 0; i < rs.rank; ++i) gens.push_back(simple_reflection(rs, i));
  return closure(gens, QMat::identity(rs.dim), exec, 2000000);
}

std::vector<QMat> enumerate_subgroup(const std::vector<QMat>& gens, Exec exec, size_t cap) {
  if (gens.empty()) throw std::invalid_argument("no generators");
  return closure(gens, QMat::identity(gens[0].rows()), exec, cap);
}

std::set<WeylWord> all_reduced_words(const RootSystem& rs, const QMat& w, int cap, Exec exec) {
  if (length(rs, w) > cap) throw std::invalid_argument("element too long");

  // Coxeter orders m_ij drive the braid rewrites.
  std::vector<std::vector<int>> order(rs.rank, std::vector<int>(rs.rank, 2));
  for (int i = 0; i < rs.rank; ++i)
    for (int j = i + 1; j < rs.rank; ++j) {
      int m = element_order(simple_reflection(rs, i) * simple_reflection(rs, j), 8);
      order[i][j] = order[j][i] = m;
    }

  auto braid_neighbors = [&](const WeylWord& word, std::vector<WeylWord>& out) {
    const int n = static_cast<int>(word.size());
    for (int pos = 0; pos < n; ++pos) {
      for (int j = 0; j < rs.rank; ++j) {
        int a = word[pos];
        if (j == a) continue;
        int m = order[a][j];
        if (pos + m > n) continue;
        bool alt = true;
        for (int k = 0; k < m; ++k)
          if (word[pos + k] != ((k % 2 == 0) ? a : j)) {
            alt = false;
            break;
          }
        if (!alt) continue;
        WeylWord next = word;
        for (int k = 0; k < m; ++k) next[pos + k] = (k % 2 == 0) ? j : a;
        out.push_back(std::move(next));
      }
    }
  };

  std::set<WeylWord> seen{reduced_word(rs, w)};
  std::vector<WeylWord> frontier{*seen.begin()};
  while (!frontier.empty()) {
    std::vector<WeylWord> produced;
    bool parallel = exec == Exec::Parallel;
#ifdef _OPENMP
    if (parallel) {
      int nt = omp_get_max_threads();
      std::vector<std::vector<WeylWord>> local(nt);
#pragma omp parallel for schedule(dynamic)
      for (size_t i = 0; i < frontier.size(); ++i) braid_neighbors(frontier[i], local[omp_get_thread_num()]);
      for (auto& b : local)
        for (auto& word : b) produced.push_back(std::move(word));
    }
#else
    parallel = false;
#endif
    if (!parallel)
      for (const auto& f : frontier) braid_neighbors(f, produced);
    std::sort(produced.begin(), produced.end());
    produced.erase(std::unique(produced.begin(), produced.end()), produced.end());
    frontier.clear();
    for (auto& word : produced)
      if (seen.insert(word).second) frontier.push_back(std::move(word));
  }
  return seen;
}

}  // namespace weyl

std::vector<int> ThetaStructure::complement() const {
  std::vector<int> out;
  for (int i = 0; i < diagram.rank(); ++i)
    if (!in_theta(i)) out.push_back(i);
  return out;
}

bool ThetaStructure::in_theta(int node) const {
  return std::find(theta.begin(), theta.end(), node) != theta.end();
}

namespace weyl {

ThetaStructure theta_structure(const DynkinDiagram& d, const std::vector<int>& theta) {
  Verdict v = admits_theta_positive(d, theta);
  if (!v.admits) throw std::invalid_argument("no Theta-positive structure: " + v.reason_string(d));

  ThetaStructure ts;
  ts.diagram = d;
  ts.rs = roots_from_diagram(d);
  ts.theta = theta;
  std::sort(ts.theta.begin(), ts.theta.end());
  ts.special_root = v.special_root;

  for (int a : ts.theta) {
    if (ts.special_root && a == *ts.special_root) continue;
    ts.sigma_words[a] = WeylWord{a};
    ts.sigma_elems[a] = simple_reflection(ts.rs, a);
  }
  if (ts.special_root) {
    int a = *ts.special_root;
    std::vector<int> comp = ts.complement();
    std::vector<int> ext = comp;
    ext.push_back(a);
    QMat w_ext = longest_element(ts.rs, ext);
    QMat w_comp = longest_element(ts.rs, comp);
    QMat sigma = w_ext * w_comp;  // w_comp is an involution
    if (length(ts.rs, w_ext) != length(ts.rs, sigma) + length(ts.rs, w_comp))
      throw std::logic_error("sigma length decomposition failed");
    ts.sigma_words[a] = reduced_word(ts.rs, sigma);
    ts.sigma_elems[a] = sigma;
  }
  return ts;
}

QMat w_max_theta(const ThetaStructure& ts) {
  std::vector<int> all(ts.diagram.rank());
  for (int i = 0; i < ts.diagram.rank(); ++i) all[i] = i;
  QMat w_delta = longest_element(ts.rs, all);
  QMat w_comp = longest_element(ts.rs, ts.complement());
  return w_delta * w_comp;
}

std::string coxeter_type_of_wtheta(const ThetaStructure& ts) {
  if (static_cast<int>(ts.theta.size()) == ts.diagram.rank()) return "same-as-G";
  const size_t p = ts.theta.size();
  if (p == 1) return "A1";
  // Coxeter matrix of (W(Theta), R(Theta)).
  std::vector<std::vector<int>> m(p, std::vector<int>(p, 2));
  std::vector<QMat> gens;
  for (int a : ts.theta) gens.push_back(ts.sigma_elems.at(a));
  int max_order = 2;
  for (size_t i = 0; i < p; ++i)
    for (size_t j = i + 1; j < p; ++j) {
      m[i][j] = m[j][i] = element_order(gens[i] * gens[j], 16);
      max_order = std::max(max_order, m[i][j]);
    }
  if (p == 2 && m[0][1] == 6) return "G2";
  // B_p: a path with orders 3 along it and one 4 at the end.
  int fours = 0, threes = 0;
  for (size_t i = 0; i < p; ++i)
    for (size_t j = i + 1; j < p; ++j) {
      if (m[i][j] == 4) ++fours;
      if (m[i][j] == 3) ++threes;
    }
  if (max_order == 4 && fours == 1 && threes == static_cast<int>(p) - 2) return "B" + std::to_string(p);
  throw std::logic_error("unrecognized W(Theta) Coxeter type");
}

int theta_length(const ThetaStructure& ts, const QMat& w) {
  WeylWord word = reduced_word(ts.rs, w);
  int count = 0;
  for (int letter : word)
    if (ts.in_theta(letter)) ++count;
  return count;
}

std::map<QMat, int> wtheta_length_table(const ThetaStructure& ts) {
  std::vector<QMat> gens;
  for (int a : ts.theta) gens.push_back(ts.sigma_elems.at(a));
  std::map<QMat, int> dist;
  QMat id = QMat::identity(ts.rs.dim);
  dist[id] = 0;
  std::vector<QMat> frontier{id};
  int level = 0;
  while (!frontier.empty()) {
    ++level;
    std::vector<QMat> next;
    for (const auto& f : frontier)
      for (const auto& g : gens) {
        QMat m = f * g;
        if (dist.emplace(m, level).second) next.push_back(std::move(m));
      }
    frontier = std::move(next);
  }
  return dist;
}

WeylWord expand_theta_word(const ThetaStructure& ts, const std::vector<int>& theta_word) {
  QMat elem = QMat::identity(ts.rs.dim);
  WeylWord expanded;
  for (int a : theta_word) {
    if (!ts.in_theta(a)) throw std::invalid_argument("letter outside Theta");
    elem = elem * ts.sigma_elems.at(a);
    const WeylWord& piece = ts.sigma_words.at(a);
    expanded.insert(expanded.end(), piece.begin(), piece.end());
  }
  auto table = wtheta_length_table(ts);
  auto it = table.find(elem);
  if (it == table.end() || it->second != static_cast<int>(theta_word.size()))
    throw std::invalid_argument("word is not reduced in (W(Theta), R(Theta))");
  if (length(ts.rs, elem) != static_cast<int>(expanded.size()))
    throw std::logic_error("expanded word is not reduced in (W, Delta)");
  return expanded;
}

}  // namespace weyl
}  // namespace thetapos
