#include "thetapos/rootsys.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace thetapos {

namespace {

QVec unit(int dim, int i, const Rat& v = Rat(1)) {
  QVec e(dim, Rat(0));
  e[i] = v;
  return e;
}

// Orders the nodes of a path graph from one endpoint to the other.
std::vector<int> path_order(const DynkinDiagram& d) {
  auto adj = d.adjacency();
  int start = -1;
  for (int i = 0; i < d.rank(); ++i)
    if (adj[i].size() <= 1) {
      start = i;
      break;
    }
  if (start < 0) throw std::invalid_argument("infinite-type diagram");
  std::vector<int> order{start};
  int prev = -1, cur = start;
  while (static_cast<int>(order.size()) < d.rank()) {
    int next = -1;
    for (int w : adj[cur])
      if (w != prev) {
        next = w;
        break;
      }
    if (next < 0) throw std::invalid_argument("diagram is not a path");
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  return order;
}

struct Realization {
  int dim;
  std::vector<QVec> simple;  // per diagram node
  QMat gram;
};

// Simple-root basis realization with the symmetrized Cartan matrix as Gram.
Realization generic_realization(const DynkinDiagram& d) {
  const int n = d.rank();
  QMat c = d.cartan_matrix();
  auto norm = d.norms();
  QMat b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b.at(i, j) = c.at(j, i) * norm[i] / 2;
  Realization r{n, {}, b};
  for (int i = 0; i < n; ++i) r.simple.push_back(unit(n, i));
  return r;
}

Realization euclidean_realization(const DynkinDiagram& d) {
  const int n = d.rank();
  auto adj = d.adjacency();
  int max_deg = 0, max_bond = 1, n_multi = 0;
  const DynkinEdge* multi = nullptr;
  for (const auto& v : adj) max_deg = std::max(max_deg, static_cast<int>(v.size()));
  for (const auto& e : d.edges) {
    max_bond = std::max(max_bond, e.bond);
    if (e.bond > 1) {
      ++n_multi;
      multi = &e;
    }
  }

  auto place = [&](const std::vector<int>& order, const std::vector<QVec>& vecs, int dim) {
    Realization r{dim, std::vector<QVec>(n), QMat::identity(dim)};
    for (int k = 0; k < n; ++k) r.simple[order[k]] = vecs[k];
    return r;
  };

  if (max_deg >= 3) {
    // D-type fork: two leaves hang off the node adjacent to the path's end.
    if (max_bond != 1 || n < 4) return generic_realization(d);
    int center = -1;
    for (int i = 0; i < n; ++i)
      if (adj[i].size() == 3) center = i;
    if (center < 0) return generic_realization(d);
    std::vector<int> leaves;
    for (int w : adj[center])
      if (adj[w].size() == 1) leaves.push_back(w);
    if (leaves.size() < 2) return generic_realization(d);
    // Walk the tail from its far endpoint down to the center.
    std::vector<int> order;
    if (leaves.size() == 3) {
      order = {leaves[0]};  // D4
    } else {
      int far = -1;
      for (int i = 0; i < n; ++i)
        if (adj[i].size() == 1 && i != leaves[0] && i != leaves[1]) far = i;
      if (far < 0) return generic_realization(d);
      int prev = -1, cur = far;
      while (cur != center) {
        order.push_back(cur);
        int next = -1;
        for (int w : adj[cur])
          if (w != prev) {
            next = w;
            break;
          }
        prev = cur;
        cur = next;
      }
    }
    order.push_back(center);
    order.push_back(leaves[leaves.size() - 2]);
    order.push_back(leaves[leaves.size() - 1]);
    if (static_cast<int>(order.size()) != n) return generic_realization(d);
    std::vector<QVec> vecs;
    for (int k = 0; k + 1 < n; ++k) {
      QVec v = unit(n, k);
      v[k + 1] = -1;
      vecs.push_back(v);
    }
    QVec last = unit(n, n - 2);
    last[n - 1] = 1;
    vecs.push_back(last);
    return place(order, vecs, n);
  }

  if (max_bond == 3) {
    if (n != 2) return generic_realization(d);
    // G2 in Bourbaki coordinates; node order (long, short): arrow points at short.
    int short_node = multi->arrow_toward;
    int long_node = short_node == multi->from ? multi->to : multi->from;
    Realization r{3, std::vector<QVec>(2), QMat::identity(3)};
    r.simple[short_node] = QVec{Rat(1), Rat(-1), Rat(0)};
    r.simple[long_node] = QVec{Rat(-2), Rat(1), Rat(1)};
    return r;
  }

  if (n_multi == 0) {
    // A-type path: e_k - e_{k+1} in R^{n+1}.
    auto order = path_order(d);
    std::vector<QVec> vecs;
    for (int k = 0; k < n; ++k) {
      QVec v = unit(n + 1, k);
      v[k + 1] = -1;
      vecs.push_back(v);
    }
    return place(order, vecs, n + 1);
  }

  if (n_multi == 1) {
    auto order = path_order(d);
    // Locate the double bond along the path.
    int pos = -1;
    for (int k = 0; k + 1 < n; ++k) {
      const DynkinEdge* e = d.edge_between(order[k], order[k + 1]);
      if (e && e->bond == 2) pos = k;
    }
    if (pos < 0) return generic_realization(d);
    if (pos == n - 2 || pos == 0) {
      // End bond: orient the path so the double bond joins the last two nodes.
      if (pos == 0 && n > 2) std::reverse(order.begin(), order.end());
      const DynkinEdge* e = d.edge_between(order[n - 2], order[n - 1]);
      bool arrow_at_end = (e->arrow_toward == order[n - 1]);
      std::vector<QVec> vecs;
      for (int k = 0; k + 1 < n; ++k) {
        QVec v = unit(n, k);
        v[k + 1] = -1;
        vecs.push_back(v);
      }
      // B: alpha_n = e_n (short); C: alpha_n = 2 e_n (long).
      vecs.push_back(unit(n, n - 1, arrow_at_end ? Rat(1) : Rat(2)));
      return place(order, vecs, n);
    }
    if (n == 4 && pos == 1) {
      // F4: the fixture coordinate system, long pair first.
      const DynkinEdge* e = d.edge_between(order[1], order[2]);
      if (e->arrow_toward == order[1]) std::reverse(order.begin(), order.end());
      std::vector<QVec> vecs(4);
      vecs[0] = QVec{Rat(0), Rat(-1), Rat(1), Rat(0)};
      vecs[1] = QVec{Rat(-1), Rat(1), Rat(0), Rat(0)};
      vecs[2] = QVec{Rat(1), Rat(0), Rat(0), Rat(0)};
      vecs[3] = QVec{Rat(-1, 2), Rat(-1, 2), Rat(-1, 2), Rat(1, 2)};
      return place(order, vecs, 4);
    }
  }
  return generic_realization(d);
}

}  // namespace

Rat RootSystem::inner(const QVec& u, const QVec& v) const {
  Rat s = 0;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      if (!is_zero(gram.at(i, j))) s += u[i] * gram.at(i, j) * v[j];
  return s;
}

Rat RootSystem::pairing(const QVec& u, const QVec& v) const { return 2 * inner(u, v) / inner(v, v); }

QVec RootSystem::reflect(const QVec& root, const QVec& v) const {
  return v - pairing(v, root) * root;
}

void RootSystem::build_index() const {
  if (!index_.empty() || roots.empty()) return;
  for (size_t i = 0; i < roots.size(); ++i) index_[roots[i]] = static_cast<int>(i);
}

bool RootSystem::is_root(const QVec& v) const { return root_index(v) >= 0; }

int RootSystem::root_index(const QVec& v) const {
  build_index();
  auto it = index_.find(v);
  return it == index_.end() ? -1 : it->second;
}

int RootSystem::num_positive() const {
  int c = 0;
  for (bool p : positive) c += p;
  return c;
}

QVec RootSystem::simple_coefficients(const QVec& root) const {
  auto x = solve(from_columns(simple), root);
  if (!x) throw std::invalid_argument("vector outside the root lattice span");
  return *x;
}

std::vector<QVec> RootSystem::sigma_theta_plus(const std::vector<int>& theta) const {
  std::vector<bool> in_theta(rank, false);
  for (int t : theta) in_theta[t] = true;
  std::vector<QVec> out;
  for (size_t i = 0; i < roots.size(); ++i) {
    if (!positive[i]) continue;
    QVec c = simple_coefficients(roots[i]);
    bool meets_theta = false;
    for (int k = 0; k < rank; ++k)
      if (in_theta[k] && !is_zero(c[k])) meets_theta = true;
    if (meets_theta) out.push_back(roots[i]);
  }
  return out;
}

RootSystem roots_from_diagram(const DynkinDiagram& d) {
  d.validate();
  if (d.non_reduced) throw std::invalid_argument("non-reduced (BC) system: root generation unsupported");
  if (!d.is_finite_type()) throw std::invalid_argument("infinite-type diagram");

  Realization real = euclidean_realization(d);
  RootSystem rs;
  rs.rank = d.rank();
  rs.dim = real.dim;
  rs.simple = real.simple;
  rs.gram = real.gram;

  std::set<QVec> all(rs.simple.begin(), rs.simple.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<QVec> batch(all.begin(), all.end());
    for (const auto& r : batch)
      for (const auto& s : rs.simple) {
        QVec img = rs.reflect(s, r);
        if (all.insert(img).second) grew = true;
      }
  }
  rs.roots.assign(all.begin(), all.end());

  QMat basis = from_columns(rs.simple);
  for (const auto& r : rs.roots) {
    auto coeff = solve(basis, r);
    if (!coeff) throw std::logic_error("root outside simple span");
    int sign = 0;
    for (const auto& c : coeff.value()) {
      if (sgn(c) > 0) sign |= 1;
      if (sgn(c) < 0) sign |= 2;
      if (c.get_den() != 1) throw std::logic_error("non-integral root coefficient");
    }
    if (sign == 3) throw std::logic_error("mixed-sign root coefficients");
    rs.positive.push_back(sign != 2);
  }
  return rs;
}

std::pair<int, int> alpha_chain(const RootSystem& rs, const QVec& alpha, const QVec& beta) {
  if (!rs.is_root(alpha) || !rs.is_root(beta)) throw std::invalid_argument("alpha_chain: inputs must be roots");
  int p = 0, q = 0;
  QVec v = beta - alpha;
  while (rs.is_root(v)) {
    ++p;
    v = v - alpha;
  }
  v = beta + alpha;
  while (rs.is_root(v)) {
    ++q;
    v = v + alpha;
  }
  return {p, q};
}

}  // namespace thetapos
