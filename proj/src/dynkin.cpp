#include "thetapos/dynkin.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "thetapos/json_io.hpp"

namespace thetapos {

int DynkinDiagram::index_of(const std::string& label) const {
  for (size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i] == label) return static_cast<int>(i);
  return -1;
}

std::vector<std::vector<int>> DynkinDiagram::adjacency() const {
  std::vector<std::vector<int>> adj(nodes.size());
  for (const auto& e : edges) {
    adj[e.from].push_back(e.to);
    adj[e.to].push_back(e.from);
  }
  return adj;
}

const DynkinEdge* DynkinDiagram::edge_between(int i, int j) const {
  for (const auto& e : edges)
    if ((e.from == i && e.to == j) || (e.from == j && e.to == i)) return &e;
  return nullptr;
}

void DynkinDiagram::validate() const {
  const int n = rank();
  if (n == 0) throw std::invalid_argument("empty diagram");
  if (static_cast<int>(mult.size()) != n) throw std::invalid_argument("mult/node count mismatch");
  for (int m : mult)
    if (m < 1) throw std::invalid_argument("node multiplicity must be >= 1");
  for (const auto& e : edges) {
    if (e.from < 0 || e.from >= n || e.to < 0 || e.to >= n || e.from == e.to)
      throw std::invalid_argument("edge endpoints out of range");
    if (e.bond < 1 || e.bond > 3) throw std::invalid_argument("bond multiplicity must be 1, 2, or 3");
    if (e.bond == 1 && e.arrow_toward != -1)
      throw std::invalid_argument("single bond must not carry an arrow");
    if (e.bond > 1 && e.arrow_toward != e.from && e.arrow_toward != e.to)
      throw std::invalid_argument("multiple bond must point at one of its endpoints");
  }
  // connectivity
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  auto adj = adjacency();
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
  }
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
    throw std::invalid_argument("diagram is not connected");
}

QMat DynkinDiagram::cartan_matrix() const {
  const int n = rank();
  QMat c(n, n);
  for (int i = 0; i < n; ++i) c.at(i, i) = 2;
  for (const auto& e : edges) {
    // <long, short^vee> = -bond, <short, long^vee> = -1
    int shorter = (e.bond == 1) ? -1 : e.arrow_toward;
    int longer = (shorter == e.from) ? e.to : e.from;
    if (e.bond == 1) {
      c.at(e.from, e.to) = -1;
      c.at(e.to, e.from) = -1;
    } else {
      c.at(longer, shorter) = -e.bond;
      c.at(shorter, longer) = -1;
    }
  }
  return c;
}

std::vector<Rat> DynkinDiagram::norms() const {
  const int n = rank();
  std::vector<Rat> norm(n, Rat(0));
  std::vector<bool> fixed(n, false);
  norm[0] = 2;
  fixed[0] = true;
  std::vector<int> stack{0};
  auto adj = adjacency();
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v]) {
      const DynkinEdge* e = edge_between(v, w);
      Rat nw;
      if (e->bond == 1) {
        nw = norm[v];
      } else {
        int shorter = e->arrow_toward;
        Rat ratio(e->bond);
        nw = (w == shorter) ? Rat(norm[v] / ratio) : Rat(norm[v] * ratio);
      }
      if (fixed[w]) {
        if (norm[w] != nw) throw std::invalid_argument("inconsistent bond arrows");
      } else {
        norm[w] = nw;
        fixed[w] = true;
        stack.push_back(w);
      }
    }
  }
  return norm;
}

bool DynkinDiagram::is_finite_type() const {
  // Symmetrize: B[i][j] = (alpha_i, alpha_j) = c[j][i] * norm_i / 2.
  QMat c = cartan_matrix();
  std::vector<Rat> norm;
  try {
    norm = norms();
  } catch (const std::invalid_argument&) {
    return false;
  }
  const int n = rank();
  QMat b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b.at(i, j) = c.at(j, i) * norm[i] / 2;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (b.at(i, j) != b.at(j, i)) return false;
  return is_positive_definite(b);
}

std::vector<std::pair<std::string, DynkinDiagram>> catalog() {
  std::string text;
  if (const char* path = std::getenv("THETA_POS_CATALOG")) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument(std::string("cannot open catalog file: ") + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  } else {
    text = builtin_catalog_json();
  }
  return parse_catalog_json(text);
}

DynkinDiagram catalog_entry(const std::string& name) {
  for (auto& [n, d] : catalog())
    if (n == name) return d;
  throw std::invalid_argument("unknown catalog diagram: " + name);
}

}  // namespace thetapos
