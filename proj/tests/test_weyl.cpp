#include <doctest.h>

#include <algorithm>
#include <deque>

#include "thetapos/classify.hpp"
#include "thetapos/sweep.hpp"
#include "thetapos/weyl.hpp"

using namespace thetapos;
using namespace thetapos::weyl;

namespace {

DynkinDiagram type_b(int n, int short_mult = 1) {
  DynkinDiagram d;
  d.name = "B" + std::to_string(n);
  for (int i = 0; i < n; ++i) {
    d.nodes.push_back("a" + std::to_string(i + 1));
    d.mult.push_back(i == n - 1 ? short_mult : 1);
  }
  for (int i = 0; i + 1 < n; ++i)
    d.edges.push_back({i, i + 1, i + 2 == n ? 2 : 1, i + 2 == n ? i + 1 : -1});
  return d;
}

std::vector<int> all_nodes(const RootSystem& rs) {
  std::vector<int> v(rs.rank);
  for (int i = 0; i < rs.rank; ++i) v[i] = i;
  return v;
}

QMat neg_identity(int n) { return Rat(-1) * QMat::identity(n); }

// Word of s_{p+1}^{s_p ... s_k} = [k..p] ++ [p+1] ++ [p..k], 0-based letters.
WeylWord conjugated_last(int p, int k) {
  WeylWord w;
  for (int i = k; i <= p; ++i) w.push_back(i - 1);
  w.push_back(p);
  for (int i = p; i >= k; --i) w.push_back(i - 1);
  return w;
}

}  // namespace

TEST_CASE("length and reduced words: identity and simple cases") {
  auto rs = roots_from_diagram(catalog_entry("split-A2"));
  QMat id = QMat::identity(rs.dim);
  CHECK(length(rs, id) == 0);
  CHECK(reduced_word(rs, id).empty());
  CHECK(longest_element(rs, {}) == id);

  QMat s0 = simple_reflection(rs, 0);
  CHECK(length(rs, s0) == 1);
  CHECK(reduced_word(rs, s0) == WeylWord{0});

  QMat bad = QMat::identity(rs.dim);
  bad.at(0, 0) = 2;
  CHECK_THROWS_WITH_AS(length(rs, bad), "not a Weyl element", std::invalid_argument);
}

TEST_CASE("reduced words multiply back and have minimal length") {
  auto rs = roots_from_diagram(catalog_entry("split-B3"));
  auto group = enumerate_group(rs, Exec::Serial);
  CHECK(group.size() == 48);
  for (const auto& w : group) {
    WeylWord word = reduced_word(rs, w);
    CHECK(static_cast<int>(word.size()) == length(rs, w));
    CHECK(word_matrix(rs, word) == w);
  }
}

TEST_CASE("B_{p+1} longest element: length, factorization, w_max action") {
  for (int p = 1; p <= 5; ++p) {
    auto rs = roots_from_diagram(type_b(p + 1));
    QMat w_delta = longest_element(rs, all_nodes(rs));
    CHECK(w_delta == neg_identity(p + 1));
    CHECK(length(rs, w_delta) == (p + 1) * (p + 1));

    // w_Delta = s_{p+1}^{s_p..s_1} s_{p+1}^{s_p..s_2} ... s_{p+1}^{s_p} s_{p+1}
    WeylWord whole;
    for (int k = 1; k <= p + 1; ++k) {
      WeylWord f = conjugated_last(p, k);
      whole.insert(whole.end(), f.begin(), f.end());
    }
    CHECK(static_cast<int>(whole.size()) == (p + 1) * (p + 1));  // additive lengths
    CHECK(word_matrix(rs, whole) == w_delta);

    // dropping the final factor gives w_max^Theta
    WeylWord prefix;
    for (int k = 1; k <= p; ++k) {
      WeylWord f = conjugated_last(p, k);
      prefix.insert(prefix.end(), f.begin(), f.end());
    }
    QMat wmax = word_matrix(rs, prefix);
    CHECK(length(rs, wmax) == static_cast<int>(prefix.size()));

    std::vector<int> theta;
    for (int i = 0; i < p; ++i) theta.push_back(i);
    auto ts = theta_structure(type_b(p + 1, 2), theta);
    QMat wmax_ts = w_max_theta(ts);
    CHECK(wmax_ts == wmax);
    // acts as (x_1..x_p, x_{p+1}) -> (-x_1..-x_p, x_{p+1})
    QMat expect = neg_identity(p + 1);
    expect.at(p, p) = 1;
    CHECK(wmax_ts == expect);
  }
}

TEST_CASE("sigma_p = s_p s_{p+1} s_p negates the p-th coordinate in B_{p+1}") {
  for (int p = 1; p <= 4; ++p) {
    std::vector<int> theta;
    for (int i = 0; i < p; ++i) theta.push_back(i);
    auto ts = theta_structure(type_b(p + 1, 2), theta);
    REQUIRE(ts.special_root.has_value());
    CHECK(*ts.special_root == p - 1);
    WeylWord expected{p - 1, p, p - 1};
    const WeylWord& got = ts.sigma_words.at(p - 1);
    CHECK(got.size() == 3);
    CHECK(word_matrix(ts.rs, got) == word_matrix(ts.rs, expected));
    QMat expect = QMat::identity(p + 1);
    expect.at(p - 1, p - 1) = -1;
    CHECK(ts.sigma_elems.at(p - 1) == expect);
  }
}

TEST_CASE("F4 longest element and sigma_2 fixtures") {
  auto rs = roots_from_diagram(catalog_entry("split-F4"));
  QMat w_delta = longest_element(rs, all_nodes(rs));
  CHECK(w_delta == neg_identity(4));
  CHECK(length(rs, w_delta) == 24);

  auto ts = theta_structure(catalog_entry("e6-f4"), {0, 1});
  REQUIRE(ts.special_root.has_value());
  CHECK(*ts.special_root == 1);

  // sigma_2 = s2 s3 s4 s2 s3 s2, length 6, with the printed half-integer matrix
  QMat sigma2 = ts.sigma_elems.at(1);
  CHECK(ts.sigma_words.at(1).size() == 6);
  CHECK(sigma2 == word_matrix(ts.rs, WeylWord{1, 2, 3, 1, 2, 1}));
  QMat printed(4, 4,
               {Rat(-1, 2), Rat(-1, 2), Rat(-1, 2), Rat(1, 2),
                Rat(-1, 2), Rat(-1, 2), Rat(1, 2), Rat(-1, 2),
                Rat(-1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2),
                Rat(1, 2), Rat(-1, 2), Rat(1, 2), Rat(1, 2)});
  CHECK(sigma2 == printed);

  // (sigma_1 sigma_2)^2 is the printed signed permutation, and the product has order 6
  QMat s1s2 = ts.sigma_elems.at(0) * sigma2;
  QMat sq = s1s2 * s1s2;
  QMat printed_sq(4, 4,
                  {Rat(1), Rat(0), Rat(0), Rat(0),
                   Rat(0), Rat(0), Rat(1), Rat(0),
                   Rat(0), Rat(0), Rat(0), Rat(-1),
                   Rat(0), Rat(-1), Rat(0), Rat(0)});
  CHECK(sq == printed_sq);
  CHECK(element_order(s1s2) == 6);

  // (sigma_1 sigma_2)^3 * s3 s4 s3 = -id
  QMat cube = sq * s1s2;
  QMat s343 = word_matrix(ts.rs, WeylWord{2, 3, 2});
  CHECK(cube * s343 == neg_identity(4));

  CHECK(coxeter_type_of_wtheta(ts) == "G2");
}

TEST_CASE("theta structure rejects inadmissible pairs") {
  CHECK_THROWS(theta_structure(catalog_entry("split-A2"), {0}));
  CHECK_THROWS(theta_structure(catalog_entry("su(2,3)"), {0, 1}));
}

TEST_CASE("split Theta = Delta: every sigma is a simple reflection") {
  auto d = catalog_entry("split-A2");
  auto ts = theta_structure(d, {0, 1});
  CHECK(!ts.special_root.has_value());
  CHECK(ts.sigma_words.at(0) == WeylWord{0});
  CHECK(ts.sigma_words.at(1) == WeylWord{1});
  CHECK(coxeter_type_of_wtheta(ts) == "same-as-G");
  CHECK(w_max_theta(ts) == longest_element(ts.rs, {0, 1}));
}

TEST_CASE("SO(3,q) pattern: sigma_2 = s2 s3 s2 and w_max^Theta identities") {
  auto ts = theta_structure(catalog_entry("so(3,5)"), {0, 1});
  CHECK(ts.sigma_words.at(1) == WeylWord{1, 2, 1});
  CHECK(coxeter_type_of_wtheta(ts) == "B2");

  QMat s1 = ts.sigma_elems.at(0), s2 = ts.sigma_elems.at(1);
  QMat wmax = w_max_theta(ts);
  CHECK(wmax == s1 * s2 * s1 * s2);
  CHECK(wmax == s2 * s1 * s2 * s1);
}

TEST_CASE("hermitian tube type has W(Theta) of type A1") {
  auto ts = theta_structure(catalog_entry("su(3,3)"), {2});
  CHECK(coxeter_type_of_wtheta(ts) == "A1");
  QMat sigma = ts.sigma_elems.at(2);
  CHECK(sigma * sigma == QMat::identity(ts.rs.dim));
  CHECK(w_max_theta(ts) == sigma);
}

TEST_CASE("SO(p+1,p+k) family has W(Theta) of type B_p") {
  auto ts = theta_structure(catalog_entry("so(4,6)"), {0, 1, 2});
  CHECK(coxeter_type_of_wtheta(ts) == "B3");
}

TEST_CASE("involutivity and commutation of the distinguished elements") {
  for (const char* name : {"so(3,5)", "e6-f4", "split-F4", "su(2,2)"}) {
    auto d = catalog_entry(name);
    auto thetas = enumerate_positive_thetas(d);
    for (auto& theta : thetas) {
      auto ts = theta_structure(d, theta);
      QMat id = QMat::identity(ts.rs.dim);
      QMat w_delta = longest_element(ts.rs, all_nodes(ts.rs));
      QMat w_comp = longest_element(ts.rs, ts.complement());
      QMat wmax = w_max_theta(ts);
      CHECK(w_delta * w_delta == id);
      CHECK(w_comp * w_comp == id);
      CHECK(wmax * wmax == id);
      CHECK(wmax * w_comp == w_comp * wmax);
      CHECK(length(ts.rs, w_delta) ==
            length(ts.rs, wmax) + length(ts.rs, w_comp));
      if (ts.special_root) {
        QMat sigma = ts.sigma_elems.at(*ts.special_root);
        CHECK(sigma * sigma == id);
      }
    }
  }
}

TEST_CASE("W(Theta) normalizes W_{Delta minus Theta}") {
  for (const char* name : {"so(3,5)", "e6-f4", "su(3,3)"}) {
    auto d = catalog_entry(name);
    auto theta = enumerate_positive_thetas(d).at(0);
    auto ts = theta_structure(d, theta);
    std::vector<QMat> gens;
    for (int i : ts.complement()) gens.push_back(simple_reflection(ts.rs, i));
    std::vector<QMat> levi;
    if (gens.empty())
      levi.push_back(QMat::identity(ts.rs.dim));
    else
      levi = enumerate_subgroup(gens, Exec::Serial);
    for (auto& [a, sigma] : ts.sigma_elems) {
      auto inv = inverse(sigma).value();
      for (const auto& x : levi) {
        QMat conj = sigma * x * inv;
        CHECK(std::find(levi.begin(), levi.end(), conj) != levi.end());
      }
    }
  }
}

TEST_CASE("theta length: zero on the Levi part, letter count elsewhere") {
  auto ts = theta_structure(catalog_entry("e6-f4"), {0, 1});
  QMat id = QMat::identity(4);
  CHECK(theta_length(ts, id) == 0);
  for (int i : ts.complement()) CHECK(theta_length(ts, simple_reflection(ts.rs, i)) == 0);
  // sigma_2 has three Theta-letters in s2 s3 s4 s2 s3 s2
  CHECK(theta_length(ts, ts.sigma_elems.at(1)) == 3);

  // w_j = s0 s0^{s1} s0^{s1 s2}: l_Theta(w_j) = j for j = 0..d+1 (d = 2 here)
  // with s0 = s_{alpha_2}, s1 = s_{alpha_3}, s2 = s_{alpha_4}.
  QMat s0 = simple_reflection(ts.rs, 1);
  QMat s1 = simple_reflection(ts.rs, 2);
  QMat s2 = simple_reflection(ts.rs, 3);
  std::vector<QMat> factors{s0, s1 * s0 * s1, s2 * s1 * s0 * s1 * s2};
  QMat w = id;
  CHECK(theta_length(ts, w) == 0);
  for (int j = 1; j <= 3; ++j) {
    w = w * factors[j - 1];
    CHECK(theta_length(ts, w) == j);
  }
}

TEST_CASE("theta length is W_{Delta minus Theta}-bi-invariant on all of W(F4)") {
  auto ts = theta_structure(catalog_entry("e6-f4"), {0, 1});
  auto group = enumerate_group(ts.rs, Exec::Serial);
  CHECK(group.size() == 1152);
  CHECK(sweep::theta_length_invariance_violations(ts, Exec::Serial) == 0);
}

TEST_CASE("parallel kernels agree with the serial reference") {
  auto ts = theta_structure(catalog_entry("e6-f4"), {0, 1});
  auto serial = enumerate_group(ts.rs, Exec::Serial);
  auto parallel = enumerate_group(ts.rs, Exec::Parallel);
  CHECK(serial == parallel);
  CHECK(sweep::theta_lengths(ts, serial, Exec::Serial) ==
        sweep::theta_lengths(ts, parallel, Exec::Parallel));

  auto rs_a2 = roots_from_diagram(catalog_entry("split-A2"));
  QMat w0 = longest_element(rs_a2, {0, 1});
  CHECK(all_reduced_words(rs_a2, w0, 12, Exec::Serial) ==
        all_reduced_words(rs_a2, w0, 12, Exec::Parallel));
}

TEST_CASE("theta length is subadditive on random pairs") {
  auto ts = theta_structure(catalog_entry("e6-f4"), {0, 1});
  auto group = enumerate_group(ts.rs, Exec::Serial);
  std::mt19937_64 eng(7);
  std::uniform_int_distribution<size_t> pick(0, group.size() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    const QMat& a = group[pick(eng)];
    const QMat& b = group[pick(eng)];
    CHECK(theta_length(ts, a * b) <= theta_length(ts, a) + theta_length(ts, b));
  }
}

TEST_CASE("expand_theta_word") {
  auto ts = theta_structure(catalog_entry("so(3,5)"), {0, 1});
  CHECK(expand_theta_word(ts, {1}) == WeylWord{1, 2, 1});
  CHECK(expand_theta_word(ts, {}).empty());

  WeylWord expanded = expand_theta_word(ts, {0, 1, 0, 1});
  CHECK(expanded.size() == 8);
  CHECK(word_matrix(ts.rs, expanded) == w_max_theta(ts));

  // sigma_1 sigma_1 is not reduced in W(Theta)
  CHECK_THROWS(expand_theta_word(ts, {0, 0}));
  CHECK_THROWS(expand_theta_word(ts, {2}));
}

TEST_CASE("all_reduced_words") {
  auto a2 = roots_from_diagram(catalog_entry("split-A2"));
  QMat id = QMat::identity(a2.dim);
  CHECK(all_reduced_words(a2, id) == std::set<WeylWord>{{}});

  QMat w121 = word_matrix(a2, WeylWord{0, 1, 0});
  auto words = all_reduced_words(a2, w121);
  CHECK(words == std::set<WeylWord>{{0, 1, 0}, {1, 0, 1}});

  // w_max^Theta of SO(3,q) in W(Theta) = B2 has exactly 2 reduced words over
  // R(Theta); over Delta the expansions of both appear in the full set.
  auto ts = theta_structure(catalog_entry("so(3,5)"), {0, 1});
  QMat wmax = w_max_theta(ts);
  auto all = all_reduced_words(ts.rs, wmax);
  CHECK(all.count(expand_theta_word(ts, {0, 1, 0, 1})) == 1);
  CHECK(all.count(expand_theta_word(ts, {1, 0, 1, 0})) == 1);

  QMat w_delta = longest_element(ts.rs, all_nodes(ts.rs));
  CHECK_THROWS_WITH_AS(all_reduced_words(ts.rs, w_delta, 8), "element too long",
                       std::invalid_argument);

  // brute-force braid search in B2: the longest element has exactly 2 words
  auto b2 = roots_from_diagram(catalog_entry("split-B2"));
  QMat w0b2 = longest_element(b2, {0, 1});
  CHECK(all_reduced_words(b2, w0b2).size() == 2);
}

TEST_CASE("theta letter count is reduced-word independent on all of W(B3)") {
  auto ts = theta_structure(catalog_entry("so(3,5)"), {0, 1});
  auto group = enumerate_group(ts.rs, Exec::Serial);
  for (const auto& w : group) {
    auto words = all_reduced_words(ts.rs, w);
    int expect = theta_length(ts, w);
    for (const auto& word : words) {
      int count = 0;
      for (int letter : word) count += ts.in_theta(letter);
      CHECK(count == expect);
    }
  }
}

TEST_CASE("W(Theta) length table matches B2 structure for SO(3,q)") {
  auto ts = theta_structure(catalog_entry("so(3,5)"), {0, 1});
  auto table = wtheta_length_table(ts);
  CHECK(table.size() == 8);  // |W(B2)|
  int max_len = 0;
  for (auto& [m, len] : table) max_len = std::max(max_len, len);
  CHECK(max_len == 4);
  CHECK(table.at(w_max_theta(ts)) == 4);
}

TEST_CASE("length and theta length agree with Cayley-graph shortest paths") {
  // Independent oracle: breadth-first distances from the identity, with
  // letter weights 1 (plain length) or {1 on Theta, 0 off Theta} (theta
  // length, straight from the minimum-over-all-expressions definition).
  auto zero_one_bfs = [](const std::vector<QMat>& gens, const std::vector<int>& weight,
                         const QMat& id) {
    std::map<QMat, int> dist;
    dist[id] = 0;
    std::deque<QMat> queue{id};
    while (!queue.empty()) {
      QMat cur = queue.front();
      queue.pop_front();
      int dcur = dist.at(cur);
      for (size_t k = 0; k < gens.size(); ++k) {
        QMat next = cur * gens[k];
        int nd = dcur + weight[k];
        auto it = dist.find(next);
        if (it == dist.end() || nd < it->second) {
          dist[next] = nd;
          if (weight[k] == 0)
            queue.push_front(next);
          else
            queue.push_back(next);
        }
      }
    }
    return dist;
  };

  auto ts = theta_structure(catalog_entry("so(3,5)"), {0, 1});
  std::vector<QMat> gens;
  for (int i = 0; i < ts.rs.rank; ++i) gens.push_back(simple_reflection(ts.rs, i));
  QMat id = QMat::identity(ts.rs.dim);

  auto plain = zero_one_bfs(gens, std::vector<int>(ts.rs.rank, 1), id);
  std::vector<int> tweight(ts.rs.rank);
  for (int i = 0; i < ts.rs.rank; ++i) tweight[i] = ts.in_theta(i) ? 1 : 0;
  auto theta = zero_one_bfs(gens, tweight, id);

  auto group = enumerate_group(ts.rs, Exec::Serial);
  CHECK(group.size() == plain.size());
  for (const auto& w : group) {
    CHECK(length(ts.rs, w) == plain.at(w));
    CHECK(theta_length(ts, w) == theta.at(w));
  }

  // same oracle over the full 1152-element group of the F4 family
  auto tsf = theta_structure(catalog_entry("e6-f4"), {0, 1});
  std::vector<QMat> gf;
  for (int i = 0; i < 4; ++i) gf.push_back(simple_reflection(tsf.rs, i));
  std::vector<int> twf{1, 1, 0, 0};
  auto thetaf = zero_one_bfs(gf, twf, QMat::identity(4));
  auto groupf = enumerate_group(tsf.rs, Exec::Serial);
  for (size_t i = 0; i < groupf.size(); i += 7)  // spot-check a spread
    CHECK(theta_length(tsf, groupf[i]) == thetaf.at(groupf[i]));
}
