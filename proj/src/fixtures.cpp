#include "mono/fixtures.hpp"

#include "mono/morcat.hpp"

namespace mono {

ModulePtr quiver_module(const AlgebraPtr& a, const std::map<std::string, int>& spaces,
                        const std::map<std::string, Matrix>& maps) {
  if (!a->provenance) throw InputError("quiver_module: algebra has no quiver presentation");
  const QuiverPresentation& q = *a->provenance;
  std::map<std::string, int> voff;
  int total = 0;
  for (const auto& v : q.vertices) {
    auto it = spaces.find(v);
    int d = it == spaces.end() ? 0 : it->second;
    voff[v] = total;
    total += d;
  }
  auto vdim = [&](const std::string& v) {
    auto it = spaces.find(v);
    return it == spaces.end() ? 0 : it->second;
  };
  std::map<std::string, Matrix> arrow_mats;
  for (const auto& ar : q.arrows) {
    auto it = maps.find(ar.name);
    Matrix m = it == maps.end() ? Matrix(vdim(ar.to), vdim(ar.from)) : it->second;
    if (m.rows() != vdim(ar.to) || m.cols() != vdim(ar.from))
      throw InputError("quiver_module: matrix for arrow " + ar.name + " has wrong shape");
    arrow_mats[ar.name] = m;
  }
  std::map<std::string, std::string> arrow_from, arrow_to;
  for (const auto& ar : q.arrows) {
    arrow_from[ar.name] = ar.from;
    arrow_to[ar.name] = ar.to;
  }

  // Each algebra basis label is either a trivial path "e_v" or a composite
  // "a_k*...*a_1" written in composition order.
  std::vector<Matrix> action;
  for (const auto& label : a->basis_labels) {
    Matrix act(total, total);
    if (label.rfind("e_", 0) == 0) {
      std::string v = label.substr(2);
      if (!voff.count(v)) throw InputError("quiver_module: unknown vertex label " + v);
      for (int i = 0; i < vdim(v); ++i) act.at(voff[v] + i, voff[v] + i) = 1;
    } else {
      // split on '*' and reverse to application order
      std::vector<std::string> names;
      std::string cur;
      for (char c : label) {
        if (c == '*') {
          names.push_back(cur);
          cur.clear();
        } else
          cur += c;
      }
      names.push_back(cur);
      std::reverse(names.begin(), names.end());
      std::string src = arrow_from.at(names.front());
      Matrix m = Matrix::identity(vdim(src));
      for (const auto& nm : names) m = arrow_mats.at(nm) * m;
      std::string dst = arrow_to.at(names.back());
      act.set_block(voff[dst], voff[src], m);
    }
    action.push_back(act);
  }
  return make_module(a, std::move(action), /*validate=*/true);
}

namespace fixtures {

QuiverPresentation kA2_quiver() {
  QuiverPresentation q;
  q.name = "kA2";
  q.vertices = {"1", "2"};
  q.arrows = {{"a", "1", "2"}};
  return q;
}

QuiverPresentation lambda2_quiver() {
  QuiverPresentation q;
  q.name = "lambda2";
  q.vertices = {"1"};
  q.arrows = {{"x", "1", "1"}};
  q.relations = {{RelTerm{Rational(1), {"x", "x"}}}};
  return q;
}

QuiverPresentation rem310_quiver() {
  QuiverPresentation q;
  q.name = "rem310";
  q.vertices = {"1", "2", "3", "4"};
  q.arrows = {{"alpha", "1", "2"}, {"beta", "2", "4"}, {"gamma", "1", "3"}, {"delta", "3", "4"}};
  q.relations = {{RelTerm{Rational(1), {"alpha", "beta"}}, RelTerm{Rational(-1), {"gamma", "delta"}}}};
  return q;
}

AlgebraPtr kA2() { return path_algebra(kA2_quiver()); }
AlgebraPtr lambda2() { return path_algebra(lambda2_quiver()); }

ModulePtr kA2_S1(const AlgebraPtr& a) {
  return quiver_module(a, {{"1", 1}}, {});
}

ModulePtr kA2_S2(const AlgebraPtr& a) {
  return quiver_module(a, {{"2", 1}}, {});
}

ModulePtr kA2_P1(const AlgebraPtr& a) {
  Matrix m(1, 1);
  m.at(0, 0) = 1;
  return quiver_module(a, {{"1", 1}, {"2", 1}}, {{"a", m}});
}

ModulePtr lambda2_S(const AlgebraPtr& a) {
  return quiver_module(a, {{"1", 1}}, {});
}

ModulePtr lambda2_J(const AlgebraPtr& a) {
  Matrix m(2, 2);
  m.at(1, 0) = 1;  // x maps 1 |-> x, x |-> 0
  return quiver_module(a, {{"1", 2}}, {{"x", m}});
}

std::vector<NamedMor> rem310_objects(const AlgebraPtr& a, Env& env) {
  ModulePtr S1 = kA2_S1(a), S2 = kA2_S2(a), P1 = kA2_P1(a);
  ModulePtr Z = zero_module(a);
  auto obj = [&](const std::string& name, ModulePtr x1, ModulePtr x2, const Matrix& phi) {
    MorObject m;
    m.algebra = a;
    m.n = 2;
    m.branches = {x1, x2};
    m.phi = {ModuleMap{x2, x1, phi}};
    return NamedMor{name, std::make_shared<const MorObject>(std::move(m)), false, false};
  };
  Matrix sigma(2, 1);
  sigma.at(1, 0) = 1;  // S(2) onto the socle of P(1)
  Matrix p(1, 2);
  p.at(0, 0) = 1;  // P(1) onto its top S(1)
  std::vector<NamedMor> out;
  out.push_back(obj("(P1,0)", P1, Z, Matrix(2, 0)));
  out.push_back(obj("(S2,0)", S2, Z, Matrix(1, 0)));
  out.push_back(obj("(S1,0)", S1, Z, Matrix(1, 0)));
  out.push_back(obj("(P1,P1)", P1, P1, Matrix::identity(2)));
  out.push_back(obj("(S2,S2)", S2, S2, Matrix::identity(1)));
  out.push_back(obj("(S1,S1)", S1, S1, Matrix::identity(1)));
  out.push_back(obj("(P1,S2)_sigma", P1, S2, sigma));
  out.push_back(obj("(S1,P1)_p", S1, P1, p));
  out.push_back(obj("(0,S1)", Z, S1, Matrix(0, 1)));
  out.push_back(obj("(0,S2)", Z, S2, Matrix(0, 1)));
  out.push_back(obj("(0,P1)", Z, P1, Matrix(0, 2)));
  // flag projectives and injectives against the classification
  auto [projs, injs] = classify_projinj(a, 2, env);
  for (auto& nm : out) {
    ModulePtr flat = to_flat(*nm.obj, env);
    for (const auto& pr : projs)
      if (is_isomorphic(flat, to_flat(*pr, env), env).iso) nm.projective = true;
    for (const auto& in : injs)
      if (is_isomorphic(flat, to_flat(*in, env), env).iso) nm.injective = true;
  }
  return out;
}

}  // namespace fixtures
}  // namespace mono
