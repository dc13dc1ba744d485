#include "thetapos/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "thetapos/classify.hpp"
#include "thetapos/flags.hpp"
#include "thetapos/json_io.hpp"
#include "thetapos/semigroup.hpp"
#include "thetapos/somodel.hpp"
#include "thetapos/weyl.hpp"

namespace thetapos::cli {

namespace {

DynkinDiagram load_diagram(const std::string& spec) {
  for (auto& [name, d] : catalog())
    if (name == spec) return d;
  std::ifstream in(spec);
  if (!in) throw std::invalid_argument("unknown diagram (no catalog entry or file): " + spec);
  json j = json::parse(in);
  return diagram_from_json(j);
}

std::vector<int> parse_theta(const DynkinDiagram& d, const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    int idx = d.index_of(item);
    if (idx < 0) throw std::invalid_argument("unknown node label: " + item);
    out.push_back(idx);
  }
  return out;
}

WeylWord parse_word(const std::string& csv) {
  WeylWord out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    int letter = std::stoi(item);
    if (letter < 1) throw std::invalid_argument("word letters are 1-based");
    out.push_back(letter - 1);
  }
  return out;
}

json word_json(const WeylWord& w) {
  json out = json::array();
  for (int letter : w) out.push_back(letter + 1);
  return out;
}

json ucoord_json(const sg::UCoord& c) {
  return json{{"s1", rat_json(c.s1)},
              {"v1", vec_json(c.v1)},
              {"s2", rat_json(c.s2)},
              {"v2", vec_json(c.v2)},
              {"order", c.order == sg::Order::O1212 ? "1212" : "2121"}};
}

sg::UCoord ucoord_from_json(const som::SOModel& m, const json& j) {
  sg::UCoord c;
  c.s1 = rat_from_json(j.at("s1"));
  c.s2 = rat_from_json(j.at("s2"));
  c.v1 = vec_from_json(j.at("v1"));
  c.v2 = vec_from_json(j.at("v2"));
  std::string order = j.value("order", "1212");
  if (order == "1212")
    c.order = sg::Order::O1212;
  else if (order == "2121")
    c.order = sg::Order::O2121;
  else
    throw std::invalid_argument("order must be 1212 or 2121");
  if (static_cast<int>(c.v1.size()) != m.q - 1 || static_cast<int>(c.v2.size()) != m.q - 1)
    throw std::invalid_argument("cone vectors must have length q-1");
  return c;
}

json flag_json(const fl::Flag& f) {
  json plane = json::array();
  plane.push_back(vec_json(f.plane.row(0)));
  plane.push_back(vec_json(f.plane.row(1)));
  return json{{"line", vec_json(f.line)}, {"plane", plane}};
}

fl::Flag flag_from_json(const som::SOModel& m, const json& j) {
  QVec line = vec_from_json(j.at("line"));
  const json& plane = j.at("plane");
  if (!plane.is_array() || plane.size() != 2)
    throw std::invalid_argument("plane must hold two rows");
  QVec p1 = vec_from_json(plane[0]);
  QVec p2 = vec_from_json(plane[1]);
  if (!in_span({p1, p2}, line).has_value())
    throw std::invalid_argument("line is not contained in the plane");
  QMat pair(2, m.n);
  for (int k = 0; k < m.n; ++k) {
    pair.at(0, k) = line[k];
    pair.at(1, k) = p1[k];
  }
  return fl::flag_from(m, line, rank(pair) == 2 ? p1 : p2);
}

json parse_inline_json(const std::string& text) { return json::parse(text); }

void emit(std::ostream& out, const json& j, const std::string& format) {
  if (format == "table") {
    std::function<void(const json&, const std::string&)> walk =
        [&](const json& node, const std::string& prefix) {
          if (node.is_object()) {
            for (auto& [k, v] : node.items()) walk(v, prefix.empty() ? k : prefix + "." + k);
          } else if (node.is_array() && !node.empty() && (node[0].is_object() || node[0].is_array())) {
            for (size_t i = 0; i < node.size(); ++i)
              walk(node[i], prefix + "[" + std::to_string(i) + "]");
          } else {
            out << prefix << ": " << (node.is_string() ? node.get<std::string>() : node.dump())
                << "\n";
          }
        };
    walk(j, "");
  } else {
    out << j.dump(2) << "\n";
  }
}

std::string family_of(const DynkinDiagram& d, const std::vector<int>& theta) {
  Verdict v = admits_theta_positive(d, theta);
  if (!v.admits) return "none";
  if (v.reason == Reason::SplitTotalPositivity) return "split";
  auto ts = weyl::theta_structure(d, theta);
  std::string type = weyl::coxeter_type_of_wtheta(ts);
  if (type == "A1") return "hermitian-tube";
  if (type == "G2") return "f4-family";
  return "so(p+1,p+k)";
}

int report_classification(std::ostream& out, const std::string& format) {
  json rows = json::array();
  for (auto& [name, d] : catalog()) {
    json entry;
    entry["diagram"] = name;
    json structures = json::array();
    for (auto& theta : enumerate_positive_thetas(d)) {
      json st;
      json labels = json::array();
      for (int t : theta) labels.push_back(d.nodes[t]);
      st["theta"] = labels;
      st["family"] = family_of(d, theta);
      auto v = admits_theta_positive(d, theta);
      if (v.special_root) st["specialRoot"] = d.nodes[*v.special_root];
      structures.push_back(st);
    }
    entry["structures"] = structures;
    entry["count"] = structures.size();
    rows.push_back(entry);
  }
  if (format == "table") {
    for (const auto& row : rows) {
      out << row["diagram"].get<std::string>() << ": " << row["count"].get<size_t>()
          << " structure(s)";
      for (const auto& st : row["structures"]) {
        out << "  [";
        bool first = true;
        for (const auto& l : st["theta"]) {
          if (!first) out << ",";
          out << l.get<std::string>();
          first = false;
        }
        out << "] " << st["family"].get<std::string>();
      }
      out << "\n";
    }
  } else {
    emit(out, json{{"classification", rows}}, format);
  }
  return 0;
}

int report_appendix(std::ostream& out, const std::string& format) {
  json checks = json::array();
  auto add = [&checks](const std::string& name, bool ok) {
    checks.push_back(json{{"check", name}, {"pass", ok}});
  };

  for (int p = 1; p <= 5; ++p) {
    DynkinDiagram d;
    d.name = "B" + std::to_string(p + 1);
    for (int i = 0; i <= p; ++i) {
      d.nodes.push_back("a" + std::to_string(i + 1));
      d.mult.push_back(1);
    }
    for (int i = 0; i < p; ++i)
      d.edges.push_back({i, i + 1, i + 1 == p ? 2 : 1, i + 1 == p ? i + 1 : -1});
    auto rs = roots_from_diagram(d);
    std::vector<int> all(p + 1);
    for (int i = 0; i <= p; ++i) all[i] = i;
    QMat w_delta = weyl::longest_element(rs, all);
    add(d.name + ": l(w_Delta) = (p+1)^2", weyl::length(rs, w_delta) == (p + 1) * (p + 1));
    WeylWord whole, prefix;
    for (int k = 1; k <= p + 1; ++k) {
      WeylWord f;
      for (int i = k; i <= p; ++i) f.push_back(i - 1);
      f.push_back(p);
      for (int i = p; i >= k; --i) f.push_back(i - 1);
      whole.insert(whole.end(), f.begin(), f.end());
      if (k <= p) prefix.insert(prefix.end(), f.begin(), f.end());
    }
    add(d.name + ": factorized longest word multiplies and is reduced",
        weyl::word_matrix(rs, whole) == w_delta &&
            static_cast<int>(whole.size()) == (p + 1) * (p + 1));
    QMat expect = Rat(-1) * QMat::identity(p + 1);
    expect.at(p, p) = 1;
    add(d.name + ": w_max^Theta negates the first p coordinates",
        weyl::word_matrix(rs, prefix) == expect);
  }

  auto f4 = catalog_entry("split-F4");
  auto ts = weyl::theta_structure(f4, {0, 1});
  QMat w_delta = weyl::longest_element(ts.rs, {0, 1, 2, 3});
  add("F4: l(w_Delta) = 24", weyl::length(ts.rs, w_delta) == 24);
  QMat sigma2 = ts.sigma_elems.at(1);
  QMat printed(4, 4,
               {Rat(-1, 2), Rat(-1, 2), Rat(-1, 2), Rat(1, 2), Rat(-1, 2), Rat(-1, 2), Rat(1, 2),
                Rat(-1, 2), Rat(-1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(-1, 2),
                Rat(1, 2), Rat(1, 2)});
  add("F4: sigma_2 equals the half-integer matrix", sigma2 == printed);
  QMat s1s2 = ts.sigma_elems.at(0) * sigma2;
  add("F4: (sigma_1 sigma_2)^6 = id", weyl::element_order(s1s2) == 6);
  QMat s343 = weyl::word_matrix(ts.rs, WeylWord{2, 3, 2});
  add("F4: (sigma_1 sigma_2)^3 s3 s4 s3 = -id",
      s1s2 * s1s2 * s1s2 * s343 == Rat(-1) * QMat::identity(4));

  bool all_ok = true;
  for (const auto& c : checks) all_ok = all_ok && c["pass"].get<bool>();
  emit(out, json{{"fixtures", checks}, {"allPass", all_ok}}, format);
  return all_ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for Theta-positive structures"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand
  std::string format = "json";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "table"}));

  auto* cls = app.add_subcommand("classify", "decide Theta-positivity from diagram data");
  std::string cls_diagram, cls_theta;
  cls->add_option("--diagram", cls_diagram, "catalog name or JSON file")->required();
  cls->add_option("--theta", cls_theta, "comma-separated node labels");
  bool cls_enumerate = false;
  cls->add_flag("--enumerate", cls_enumerate, "list all admissible Theta");

  auto* wy = app.add_subcommand("weyl", "Weyl group computations");
  wy->require_subcommand(1);
  std::string wy_diagram, wy_theta, wy_word, wy_subset;
  for (const char* name : {"longest", "sigma", "theta-length", "reduced", "type"}) {
    auto* sub = wy->add_subcommand(name);
    sub->add_option("--diagram", wy_diagram)->required();
    sub->add_option("--theta", wy_theta);
    sub->add_option("--word", wy_word);
    if (std::string(name) == "longest") sub->add_option("--subset", wy_subset);
  }

  auto* sm = app.add_subcommand("som", "SO(3,q) matrix model reports");
  sm->require_subcommand(1);
  int som_q = 4;
  for (const char* name : {"theta-base", "serre", "sl2", "weights"})
    sm->add_subcommand(name)->add_option("--q", som_q)->required();

  auto* sgc = app.add_subcommand("semigroup", "unipotent semigroup operations");
  sgc->require_subcommand(1);
  int sg_q = 4;
  std::string sg_coords, sg_elem, sg_order = "1212", sg_x, sg_y, sg_r = "1";
  int sg_check = 0;
  long sg_seed = -1;
  for (const char* name : {"eval", "decode", "member", "braid", "stratify"}) {
    auto* sub = sgc->add_subcommand(name);
    sub->add_option("--q", sg_q)->required();
    if (std::string(name) == "eval" || std::string(name) == "braid")
      sub->add_option("--coords", sg_coords);
    if (std::string(name) != "eval") sub->add_option("--elem", sg_elem);
    if (std::string(name) == "decode") sub->add_option("--order", sg_order);
    if (std::string(name) == "braid") {
      sub->add_option("--check", sg_check, "verify N seeded random samples");
      sub->add_option("--seed", sg_seed);
    }
  }
  {
    auto* sub = sgc->add_subcommand("ur");
    sub->add_option("--r", sg_r)->required();
    sub->add_option("--x", sg_x)->required();
    sub->add_option("--y", sg_y)->required();
  }

  auto* flc = app.add_subcommand("flags", "flag variety operations");
  flc->require_subcommand(1);
  int fl_q = 4;
  std::string fl_f, fl_g, fl_x, fl_a, fl_b, fl_flags, fl_t;
  double fl_tol = 1e-9;
  for (const char* name : {"position", "transverse", "triple", "tuple", "circle"}) {
    auto* sub = flc->add_subcommand(name);
    sub->add_option("--q", fl_q)->required();
    if (std::string(name) == "position" || std::string(name) == "transverse") {
      sub->add_option("--f", fl_f)->required();
      sub->add_option("--g", fl_g)->required();
    }
    if (std::string(name) == "triple") {
      sub->add_option("--x", fl_x)->required();
      sub->add_option("--a", fl_a);
      sub->add_option("--b", fl_b);
      sub->add_option("--tol", fl_tol);
    }
    if (std::string(name) == "tuple") sub->add_option("--flags", fl_flags)->required();
    if (std::string(name) == "circle") sub->add_option("--t", fl_t)->required();
  }

  auto* rep = app.add_subcommand("report", "reproduce the classification and fixtures");
  rep->require_subcommand(1);
  rep->add_subcommand("classification-table");
  rep->add_subcommand("appendix-fixtures");

  std::vector<const char*> argv;
  argv.push_back("theta-cli");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help() << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (cls->parsed()) {
      DynkinDiagram d = load_diagram(cls_diagram);
      if (cls_enumerate) {
        json list = json::array();
        for (auto& theta : enumerate_positive_thetas(d)) {
          json labels = json::array();
          for (int t : theta) labels.push_back(d.nodes[t]);
          list.push_back(labels);
        }
        emit(out, json{{"diagram", d.name}, {"admissibleThetas", list}}, format);
        return 0;
      }
      if (cls_theta.empty()) throw std::invalid_argument("--theta required (or --enumerate)");
      Verdict v = admits_theta_positive(d, parse_theta(d, cls_theta));
      json j{{"admits", v.admits}, {"reason", v.reason_string(d)}};
      if (v.special_root) j["specialRoot"] = d.nodes[*v.special_root];
      emit(out, j, format);
      return v.admits ? 0 : 1;
    }

    if (wy->parsed()) {
      DynkinDiagram d = load_diagram(wy_diagram);
      auto rs = roots_from_diagram(d);
      const std::string name = wy->get_subcommands().front()->get_name();
      if (name == "longest") {
        std::vector<int> subset;
        if (wy_subset.empty())
          for (int i = 0; i < rs.rank; ++i) subset.push_back(i);
        else
          subset = parse_theta(d, wy_subset);
        QMat w = weyl::longest_element(rs, subset);
        emit(out,
             json{{"matrix", mat_json(w)},
                  {"length", weyl::length(rs, w)},
                  {"word", word_json(weyl::reduced_word(rs, w))}},
             format);
        return 0;
      }
      if (name == "reduced") {
        if (wy_word.empty()) throw std::invalid_argument("--word required");
        QMat w = weyl::word_matrix(rs, parse_word(wy_word));
        emit(out,
             json{{"word", word_json(weyl::reduced_word(rs, w))}, {"length", weyl::length(rs, w)}},
             format);
        return 0;
      }
      if (wy_theta.empty()) throw std::invalid_argument("--theta required");
      auto ts = weyl::theta_structure(d, parse_theta(d, wy_theta));
      if (name == "sigma") {
        json words;
        for (auto& [node, word] : ts.sigma_words) words[d.nodes[node]] = word_json(word);
        json j{{"sigmaWords", words}};
        if (ts.special_root) j["specialRoot"] = d.nodes[*ts.special_root];
        j["wMaxTheta"] = mat_json(weyl::w_max_theta(ts));
        emit(out, j, format);
        return 0;
      }
      if (name == "theta-length") {
        if (wy_word.empty()) throw std::invalid_argument("--word required");
        QMat w = weyl::word_matrix(rs, parse_word(wy_word));
        emit(out, json{{"thetaLength", weyl::theta_length(ts, w)}}, format);
        return 0;
      }
      if (name == "type") {
        emit(out, json{{"type", weyl::coxeter_type_of_wtheta(ts)}}, format);
        return 0;
      }
    }

    if (sm->parsed()) {
      auto m = som::model(som_q);
      const std::string name = sm->get_subcommands().front()->get_name();
      if (name == "theta-base") {
        auto base = som::theta_base(m);
        QVec coords = som::u_alpha2_coordinates(m, base.E2);
        emit(out,
             json{{"E1", mat_json(base.E1.m)},
                  {"F1", mat_json(base.F1.m)},
                  {"D1", mat_json(base.D1.m)},
                  {"E2", mat_json(base.E2.m)},
                  {"F2", mat_json(base.F2.m)},
                  {"D2", mat_json(base.D2.m)},
                  {"Z0", mat_json(base.Z0.m)},
                  {"Z1", mat_json(base.Z1.m)},
                  {"E2coneCoords", vec_json(coords)},
                  {"E2coneInterior", sg::cone_status(m, coords) == sg::ConeStatus::Interior}},
             format);
        return 0;
      }
      if (name == "serre") {
        auto repn = som::serre_check(m, som::theta_base(m));
        json lines = json::array();
        for (const auto& l : repn.lines)
          lines.push_back(json{{"id", l.id}, {"statement", l.statement}, {"pass", l.pass}});
        emit(out,
             json{{"relations", lines}, {"allPass", repn.all_pass}, {"conclusion", repn.conclusion}},
             format);
        return repn.all_pass ? 0 : 1;
      }
      if (name == "sl2") {
        auto p = som::principal_sl2(m, som::theta_base(m));
        emit(out,
             json{{"q1", p.q1},
                  {"q2", p.q2},
                  {"E", mat_json(p.E.m)},
                  {"F", mat_json(p.F.m)},
                  {"D", mat_json(p.D.m)}},
             format);
        return 0;
      }
      if (name == "weights") {
        json ws = json::array();
        size_t total = 0;
        for (auto& [w, basis] : som::weight_spaces(m)) {
          ws.push_back(json{{"weight", vec_json(w)}, {"dim", basis.size()}});
          total += basis.size();
        }
        emit(out, json{{"weights", ws}, {"totalDim", total}}, format);
        return 0;
      }
    }

    if (sgc->parsed()) {
      const std::string name = sgc->get_subcommands().front()->get_name();
      if (name == "ur") {
        auto parse_ur = [&](const std::string& csv) {
          std::stringstream ss(csv);
          std::string a, b, c;
          if (!std::getline(ss, a, ',') || !std::getline(ss, b, ',') || !std::getline(ss, c, ','))
            throw std::invalid_argument("U_r element needs a,b,c");
          return sg::UrElem{parse_rat(a), parse_rat(b), parse_rat(c), parse_rat(sg_r)};
        };
        auto p = sg::ur_product(parse_ur(sg_x), parse_ur(sg_y));
        emit(out,
             json{{"a", rat_json(p.a)},
                  {"b", rat_json(p.b)},
                  {"c", rat_json(p.c)},
                  {"r", rat_json(p.r)},
                  {"member", sg::ur_member(p)}},
             format);
        return 0;
      }
      auto m = som::model(sg_q);
      if (name == "eval") {
        if (sg_coords.empty()) throw std::invalid_argument("--coords required");
        auto c = ucoord_from_json(m, parse_inline_json(sg_coords));
        emit(out, json{{"matrix", mat_json(sg::F_gamma(m, c).g)}}, format);
        return 0;
      }
      if (name == "braid") {
        if (sg_check > 0) {
          if (sg_seed < 0) throw std::invalid_argument("--seed is required with --check");
          int failures = sg::braid_identity_sweep(m, sg_check, static_cast<std::uint64_t>(sg_seed));
          emit(out, json{{"checked", sg_check}, {"failures", failures}}, format);
          return failures == 0 ? 0 : 1;
        }
        if (sg_coords.empty()) throw std::invalid_argument("--coords required");
        auto c = ucoord_from_json(m, parse_inline_json(sg_coords));
        emit(out, ucoord_json(sg::braid_change(m, c)), format);
        return 0;
      }
      if (sg_elem.empty()) throw std::invalid_argument("--elem required");
      som::GroupElem g{mat_from_json(parse_inline_json(sg_elem))};
      if (name == "decode") {
        sg::Order order = sg_order == "2121" ? sg::Order::O2121 : sg::Order::O1212;
        auto c = sg::decode(m, g, order);
        if (!c) {
          emit(out, json{{"notInChart", true}}, format);
          return 1;
        }
        emit(out, ucoord_json(*c), format);
        return 0;
      }
      if (name == "member") {
        bool pos = sg::is_positive(m, g);
        emit(out, json{{"positive", pos}}, format);
        return pos ? 0 : 1;
      }
      if (name == "stratify") {
        auto st = sg::stratify(m, g);
        if (!st) {
          emit(out, json{{"nonNegative", false}}, format);
          return 1;
        }
        emit(out, json{{"stratum", st->label}, {"coords", ucoord_json(st->coords)}}, format);
        return 0;
      }
    }

    if (flc->parsed()) {
      auto m = som::model(fl_q);
      const std::string name = flc->get_subcommands().front()->get_name();
      if (name == "position" || name == "transverse") {
        auto f = flag_from_json(m, parse_inline_json(fl_f));
        auto g = flag_from_json(m, parse_inline_json(fl_g));
        if (name == "position") {
          auto p = fl::relative_position(m, f, g);
          json sig = json::array();
          for (int s : p.signature) sig.push_back(s);
          emit(out, json{{"label", p.label}, {"signature", sig}}, format);
          return 0;
        }
        bool t = fl::is_transverse(m, f, g);
        emit(out, json{{"transverse", t}}, format);
        return t ? 0 : 1;
      }
      if (name == "triple") {
        auto x = flag_from_json(m, parse_inline_json(fl_x));
        bool pos;
        if (!fl_a.empty() || !fl_b.empty()) {
          if (fl_a.empty() || fl_b.empty())
            throw std::invalid_argument("general triples need both --a and --b");
          pos = fl::positive_triple_general(m, flag_from_json(m, parse_inline_json(fl_a)), x,
                                            flag_from_json(m, parse_inline_json(fl_b)), fl_tol);
        } else {
          pos = fl::positive_triple_std(m, x);
        }
        emit(out, json{{"positive", pos}}, format);
        return pos ? 0 : 1;
      }
      if (name == "tuple") {
        json arr = parse_inline_json(fl_flags);
        if (!arr.is_array()) throw std::invalid_argument("--flags must be a JSON array");
        std::vector<fl::Flag> fs;
        for (const auto& fj : arr) fs.push_back(flag_from_json(m, fj));
        bool pos = fl::positive_tuple_std(m, fs);
        emit(out, json{{"positive", pos}}, format);
        return pos ? 0 : 1;
      }
      if (name == "circle") {
        auto p = som::principal_sl2(m, som::theta_base(m));
        std::optional<Rat> t;
        if (fl_t != "inf") t = parse_rat(fl_t);
        emit(out, flag_json(fl::circle_point(m, p, t)), format);
        return 0;
      }
    }

    if (rep->parsed()) {
      const std::string name = rep->get_subcommands().front()->get_name();
      if (name == "classification-table") return report_classification(out, format);
      if (name == "appendix-fixtures") return report_appendix(out, format);
    }
  } catch (const std::exception& e) {
    emit(out, json{{"error", e.what()}}, format);
    return 1;
  }
  err << "no subcommand executed\n";
  return 2;
}

}  // namespace thetapos::cli
