#include "mono/morcat.hpp"

#include <cassert>

namespace mono {

int MorObject::total_dim() const {
  int d = 0;
  for (const auto& b : branches) d += b->dim;
  return d;
}

MorPtr make_mor(AlgebraPtr a, std::vector<ModulePtr> branches, std::vector<ModuleMap> phi,
                bool validate) {
  MorObject x;
  x.algebra = std::move(a);
  x.n = static_cast<int>(branches.size());
  x.branches = std::move(branches);
  x.phi = std::move(phi);
  if (x.n < 1 || static_cast<int>(x.phi.size()) != x.n - 1)
    throw InputError("mor object: need n branches and n-1 connecting maps");
  if (validate) {
    for (const auto& b : x.branches)
      if (!same_algebra(*b->algebra, *x.algebra))
        throw InputError("mor object: branch over a different algebra");
    for (int i = 0; i < x.n - 1; ++i) {
      const ModuleMap& f = x.phi[i];
      if (f.source->dim != x.branches[i + 1]->dim || f.target->dim != x.branches[i]->dim ||
          f.m.rows() != f.target->dim || f.m.cols() != f.source->dim)
        throw InputError("mor object: phi_" + std::to_string(i + 1) + " has wrong shape");
      ModuleMap g{x.branches[i + 1], x.branches[i], f.m};
      if (!is_intertwiner(g))
        throw InputError("mor object: phi_" + std::to_string(i + 1) + " is not an A-map");
    }
  }
  return std::make_shared<const MorObject>(std::move(x));
}

MorPtr zero_mor(AlgebraPtr a, int n) {
  ModulePtr z = zero_module(a);
  std::vector<ModulePtr> br(n, z);
  std::vector<ModuleMap> phi(n - 1, zero_map(z, z));
  return make_mor(std::move(a), std::move(br), std::move(phi), false);
}

bool is_mor_map(const MorMap& f) {
  const MorObject& s = *f.source;
  const MorObject& t = *f.target;
  if (s.n != t.n || static_cast<int>(f.comp.size()) != s.n) return false;
  for (int i = 0; i < s.n; ++i) {
    ModuleMap fi{s.branches[i], t.branches[i], f.comp[i]};
    if (f.comp[i].rows() != t.branches[i]->dim || f.comp[i].cols() != s.branches[i]->dim)
      return false;
    if (!is_intertwiner(fi)) return false;
  }
  for (int i = 0; i < s.n - 1; ++i) {
    // theta_i f_{i+1} = f_i phi_i  (maps X_{i+2} -> Y_{i+1} in 1-based terms)
    Matrix lhs = t.phi[i].m * f.comp[i + 1];
    Matrix rhs = f.comp[i] * s.phi[i].m;
    if (!(lhs == rhs)) return false;
  }
  return true;
}

MorMap mor_identity(const MorPtr& x) {
  MorMap f{x, x, {}};
  for (const auto& b : x->branches) f.comp.push_back(Matrix::identity(b->dim));
  return f;
}

MorMap mor_zero(const MorPtr& source, const MorPtr& target) {
  MorMap f{source, target, {}};
  for (int i = 0; i < source->n; ++i)
    f.comp.push_back(Matrix(target->branches[i]->dim, source->branches[i]->dim));
  return f;
}

MorMap mor_compose(const MorMap& g, const MorMap& f) {
  MorMap r{f.source, g.target, {}};
  for (size_t i = 0; i < f.comp.size(); ++i) r.comp.push_back(g.comp[i] * f.comp[i]);
  return r;
}

// --- functors -------------------------------------------------------------------

MorPtr m_i(const ModulePtr& M, int i, int n) {
  if (i < 1 || i > n) throw InputError("m_i: index out of range");
  ModulePtr z = zero_module(M->algebra);
  std::vector<ModulePtr> br;
  for (int j = 1; j <= n; ++j) br.push_back(j <= i ? M : z);
  std::vector<ModuleMap> phi;
  for (int j = 1; j <= n - 1; ++j) {
    if (j < i)
      phi.push_back(identity_map(M));
    else
      phi.push_back(zero_map(br[j], br[j - 1]));
  }
  return make_mor(M->algebra, std::move(br), std::move(phi), false);
}

MorPtr p_i(const ModulePtr& M, int i, int n) {
  if (i < 1 || i > n) throw InputError("p_i: index out of range");
  ModulePtr z = zero_module(M->algebra);
  std::vector<ModulePtr> br;
  for (int j = 1; j <= n; ++j) br.push_back(j >= n - i + 1 ? M : z);
  std::vector<ModuleMap> phi;
  for (int j = 1; j <= n - 1; ++j) {
    if (j >= n - i + 1)
      phi.push_back(identity_map(M));
    else
      phi.push_back(zero_map(br[j], br[j - 1]));
  }
  return make_mor(M->algebra, std::move(br), std::move(phi), false);
}

MorMap m_i_map(const ModuleMap& f, int i, int n) {
  MorPtr src = m_i(f.source, i, n), tgt = m_i(f.target, i, n);
  MorMap r{src, tgt, {}};
  for (int j = 1; j <= n; ++j)
    r.comp.push_back(j <= i ? f.m : Matrix(0, 0));
  return r;
}

MorMap p_i_map(const ModuleMap& f, int i, int n) {
  MorPtr src = p_i(f.source, i, n), tgt = p_i(f.target, i, n);
  MorMap r{src, tgt, {}};
  for (int j = 1; j <= n; ++j)
    r.comp.push_back(j >= n - i + 1 ? f.m : Matrix(0, 0));
  return r;
}

MorSum mor_direct_sum(const std::vector<MorPtr>& parts) {
  if (parts.empty()) throw InputError("mor_direct_sum: empty");
  const int n = parts.front()->n;
  AlgebraPtr a = parts.front()->algebra;
  std::vector<SumModule> sums;
  for (int j = 0; j < n; ++j) {
    std::vector<ModulePtr> branch;
    for (const auto& p : parts) {
      if (p->n != n) throw InputError("mor_direct_sum: mixed n");
      branch.push_back(p->branches[j]);
    }
    sums.push_back(direct_sum(branch));
  }
  std::vector<ModuleMap> phi;
  for (int j = 0; j < n - 1; ++j) {
    std::vector<Matrix> blocks;
    for (const auto& p : parts) blocks.push_back(p->phi[j].m);
    phi.push_back(ModuleMap{sums[j + 1].sum, sums[j].sum, Matrix::block_diag(blocks)});
  }
  MorSum r;
  std::vector<ModulePtr> br;
  for (auto& s : sums) br.push_back(s.sum);
  r.sum = make_mor(a, br, phi, false);
  for (size_t k = 0; k < parts.size(); ++k) {
    MorMap in{parts[k], r.sum, {}}, pr{r.sum, parts[k], {}};
    for (int j = 0; j < n; ++j) {
      in.comp.push_back(sums[j].inj[k].m);
      pr.comp.push_back(sums[j].proj[k].m);
    }
    r.inj.push_back(std::move(in));
    r.proj.push_back(std::move(pr));
  }
  return r;
}

MorPtr m_of(const ModulePtr& M, int n) {
  std::vector<MorPtr> parts;
  for (int i = 1; i <= n; ++i) parts.push_back(m_i(M, i, n));
  return mor_direct_sum(parts).sum;
}

MorPtr p_of(const ModulePtr& M, int n) {
  std::vector<MorPtr> parts;
  for (int i = 1; i <= n; ++i) parts.push_back(p_i(M, i, n));
  return mor_direct_sum(parts).sum;
}

// --- the flat equivalence ----------------------------------------------------------

namespace {

// slot layout must match triangular_algebra: (i,j) pairs lexicographic,
// each with dim(A) coordinates
int tn_slot(int i, int j, int k, int n, int da) {
  int pair = 0;
  for (int ii = 1; ii < i; ++ii) pair += n - ii + 1;
  pair += j - i;
  return pair * da + k;
}

}  // namespace

ModulePtr to_flat(const MorObject& x, Env& env) {
  AlgebraPtr tn = env.triangular_of(x.algebra, x.n);
  const int da = x.algebra->dim;
  const int n = x.n;
  int total = x.total_dim();
  std::vector<int> off(n + 1, 0);
  for (int j = 0; j < n; ++j) off[j + 1] = off[j] + x.branches[j]->dim;

  // chain[i][j]: X_{j+1} -> X_{i+1} composite of phi's (0-based, i <= j)
  std::vector<std::vector<Matrix>> chain(n, std::vector<Matrix>(n));
  for (int i = 0; i < n; ++i) {
    chain[i][i] = Matrix::identity(x.branches[i]->dim);
    for (int j = i + 1; j < n; ++j) chain[i][j] = chain[i][j - 1] * x.phi[j - 1].m;
  }

  std::vector<Matrix> action(tn->dim, Matrix(total, total));
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      for (int k = 0; k < da; ++k) {
        Matrix block = x.branches[i - 1]->action[k] * chain[i - 1][j - 1];
        action[tn_slot(i, j, k, n, da)].set_block(off[i - 1], off[j - 1], block);
      }
  return make_module(tn, std::move(action));
}

MorPtr from_flat(const ModulePtr& m, const AlgebraPtr& a, int n, Env& env) {
  AlgebraPtr tn = env.triangular_of(a, n);
  if (!same_algebra(*m->algebra, *tn))
    throw InputError("from_flat: module is not over T_n of the given algebra");
  const int da = a->dim;
  auto idem = [&](int i) {
    std::vector<Rational> v(tn->dim);
    for (int k = 0; k < da; ++k) v[tn_slot(i, i, k, n, da)] = a->unit[k];
    return v;
  };
  std::vector<Matrix> bases;
  std::vector<ModulePtr> branches;
  int total = 0;
  for (int i = 1; i <= n; ++i) {
    Matrix b = column_space_basis(m->action_of(idem(i)));
    total += b.cols();
    std::vector<Matrix> act;
    for (int k = 0; k < da; ++k) {
      std::vector<Rational> v(tn->dim);
      for (int t = 0; t < da; ++t) v[tn_slot(i, i, t, n, da)] = (t == k ? Rational(1) : Rational(0));
      auto coords = solve(b, m->action_of(v) * b);
      if (!coords) throw InputError("from_flat: branch space is not invariant");
      act.push_back(*coords);
    }
    bases.push_back(b);
    branches.push_back(make_module(a, std::move(act)));
  }
  if (total != m->dim) throw InputError("from_flat: branches do not exhaust the module");
  std::vector<ModuleMap> phi;
  for (int i = 1; i <= n - 1; ++i) {
    std::vector<Rational> conn(tn->dim);
    for (int k = 0; k < da; ++k) conn[tn_slot(i, i + 1, k, n, da)] = a->unit[k];
    auto coords = solve(bases[i - 1], m->action_of(conn) * bases[i]);
    if (!coords) throw InputError("from_flat: connecting map leaves the branch");
    phi.push_back(ModuleMap{branches[i], branches[i - 1], *coords});
  }
  return make_mor(a, std::move(branches), std::move(phi), false);
}

ModuleMap flat_map(const MorMap& f, Env& env) {
  ModulePtr fs = to_flat(*f.source, env);
  ModulePtr ft = to_flat(*f.target, env);
  std::vector<Matrix> blocks;
  for (const auto& c : f.comp) blocks.push_back(c);
  return ModuleMap{fs, ft, Matrix::block_diag(blocks)};
}

MorMap unflat_map(const Matrix& h, const MorPtr& src, const MorPtr& tgt) {
  MorMap f{src, tgt, {}};
  int ro = 0, co = 0;
  for (int i = 0; i < src->n; ++i) {
    int dr = tgt->branches[i]->dim, dc = src->branches[i]->dim;
    Matrix block(dr, dc);
    for (int r = 0; r < dr; ++r)
      for (int c = 0; c < dc; ++c) block.at(r, c) = h.at(ro + r, co + c);
    f.comp.push_back(block);
    ro += dr;
    co += dc;
  }
  return f;
}

int mor_hom_dim(const MorPtr& x, const MorPtr& y, Env& env) {
  return hom_dim(to_flat(*x, env), to_flat(*y, env));
}

std::vector<MorMap> mor_hom_basis(const MorPtr& x, const MorPtr& y, Env& env) {
  auto flats = hom_basis(to_flat(*x, env), to_flat(*y, env));
  std::vector<MorMap> out;
  for (const auto& h : flats) out.push_back(unflat_map(h.m, x, y));
  return out;
}

std::pair<std::vector<MorPtr>, std::vector<MorPtr>> classify_projinj(const AlgebraPtr& a,
                                                                     int n, Env& env) {
  const AlgebraFacts& f = env.facts_of(a);
  std::vector<MorPtr> projs, injs;
  for (int i = 1; i <= n; ++i)
    for (const auto& P : f.indec_projectives) projs.push_back(m_i(P, i, n));
  for (int i = 1; i <= n; ++i)
    for (const auto& I : f.indec_injectives) injs.push_back(p_i(I, i, n));
  return {projs, injs};
}

// --- subcategory specs ---------------------------------------------------------------

SubcatSpec SubcatSpec::all() { return SubcatSpec{}; }

SubcatSpec SubcatSpec::perp_left(ModulePtr T) {
  SubcatSpec s;
  s.kind = Kind::PerpLeft;
  s.T = std::move(T);
  return s;
}

SubcatSpec SubcatSpec::perp_right(ModulePtr T) {
  SubcatSpec s;
  s.kind = Kind::PerpRight;
  s.T = std::move(T);
  return s;
}

SubcatSpec SubcatSpec::add_of(const std::vector<ModulePtr>& mods, Env& env) {
  SubcatSpec s;
  s.kind = Kind::Add;
  for (const auto& m : mods)
    for (const auto& e : fitting_decompose(m, env)) {
      bool seen = false;
      for (const auto& r : s.add_indecs)
        if (is_isomorphic(e.rep, r, env).iso) {
          seen = true;
          break;
        }
      if (!seen) s.add_indecs.push_back(e.rep);
    }
  return s;
}

SubcatSpec SubcatSpec::named(std::string predicate) {
  SubcatSpec s;
  s.kind = Kind::Predicate;
  s.predicate = std::move(predicate);
  return s;
}

// SubcatSpec::contains is defined in cotilt.cpp (perpendicular tests live there).

MemberVerdict sn_membership(const MorObject& x, const SubcatSpec& spec, Env& env) {
  MemberVerdict v;
  for (int j = 0; j < x.n; ++j)
    if (!spec.contains(x.branches[j], env)) {
      v.member = false;
      v.failing_index = j + 1;
      v.reason = "branch " + std::to_string(j + 1) + " outside the subcategory";
      return v;
    }
  for (int i = 0; i < x.n - 1; ++i) {
    if (rank(x.phi[i].m) != x.branches[i + 1]->dim) {
      v.member = false;
      v.failing_index = i + 1;
      v.reason = "phi_" + std::to_string(i + 1) + " is not injective";
      return v;
    }
    auto kc = kernel_cokernel(x.phi[i]);
    if (!spec.contains(kc.coker, env)) {
      v.member = false;
      v.failing_index = i + 1;
      v.reason = "Coker phi_" + std::to_string(i + 1) + " outside the subcategory";
      return v;
    }
  }
  return v;
}

MemberVerdict fn_membership(const MorObject& x, const SubcatSpec& spec, Env& env) {
  MemberVerdict v;
  for (int j = 0; j < x.n; ++j)
    if (!spec.contains(x.branches[j], env)) {
      v.member = false;
      v.failing_index = j + 1;
      v.reason = "branch " + std::to_string(j + 1) + " outside the subcategory";
      return v;
    }
  for (int i = 0; i < x.n - 1; ++i) {
    if (rank(x.phi[i].m) != x.branches[i]->dim) {
      v.member = false;
      v.failing_index = i + 1;
      v.reason = "phi_" + std::to_string(i + 1) + " is not surjective";
      return v;
    }
    auto kc = kernel_cokernel(x.phi[i]);
    if (!spec.contains(kc.ker, env)) {
      v.member = false;
      v.failing_index = i + 1;
      v.reason = "Ker phi_" + std::to_string(i + 1) + " outside the subcategory";
      return v;
    }
  }
  return v;
}

// --- chains and the equivalence -----------------------------------------------------

std::vector<ChainEntry> coker_chain(const MorObject& x) {
  std::vector<ChainEntry> out;
  Matrix comp = x.n >= 2 ? x.phi[0].m : Matrix::identity(x.branches[0]->dim);
  for (int i = 1; i <= x.n - 1; ++i) {
    if (i > 1) comp = comp * x.phi[i - 1].m;
    ModuleMap f{x.branches[i], x.branches[0], comp};
    auto kc = kernel_cokernel(f);
    out.push_back(ChainEntry{kc.coker, kc.proj});
  }
  return out;
}

std::vector<ChainEntry> ker_chain(const MorObject& x) {
  // entry i (1-based): Ker(phi_i ... phi_{n-1}) with its mono into X_n
  std::vector<ChainEntry> out(x.n - 1);
  Matrix comp = x.n >= 2 ? x.phi[x.n - 2].m : Matrix::identity(x.branches[0]->dim);
  for (int i = x.n - 1; i >= 1; --i) {
    if (i < x.n - 1) comp = x.phi[i - 1].m * comp;
    ModuleMap f{x.branches[x.n - 1], x.branches[i - 1], comp};
    auto kc = kernel_cokernel(f);
    out[i - 1] = ChainEntry{kc.ker, kc.incl};
  }
  return out;
}

MorPtr sn_to_fn(const MorObject& x, Env& env) {
  auto sn = sn_membership(x, SubcatSpec::all(), env);
  if (!sn.member) throw InputError("sn_to_fn: input not in S_n: " + sn.reason);
  auto chain = coker_chain(x);
  const int n = x.n;
  std::vector<ModulePtr> br(n);
  for (int j = 1; j <= n - 1; ++j) br[j - 1] = chain[j - 1].mod;
  br[n - 1] = x.branches[0];
  std::vector<ModuleMap> phi(n - 1);
  for (int j = 1; j <= n - 2; ++j) {
    // canonical epi Coker(phi_1..phi_{j+1}) ->> Coker(phi_1..phi_j)
    const Matrix& pj = chain[j - 1].map.m;
    const Matrix& pj1 = chain[j].map.m;
    auto z = solve(pj1.transpose(), pj.transpose());
    if (!z) throw InputError("sn_to_fn: canonical epi failed");
    phi[j - 1] = ModuleMap{br[j], br[j - 1], z->transpose()};
  }
  if (n >= 2) phi[n - 2] = ModuleMap{br[n - 1], br[n - 2], chain[n - 2].map.m};
  return make_mor(x.algebra, std::move(br), std::move(phi), false);
}

MorPtr fn_to_sn(const MorObject& x, Env& env) {
  auto fn = fn_membership(x, SubcatSpec::all(), env);
  if (!fn.member) throw InputError("fn_to_sn: input not in F_n: " + fn.reason);
  auto chain = ker_chain(x);
  const int n = x.n;
  std::vector<ModulePtr> br(n);
  br[0] = x.branches[n - 1];
  for (int j = 2; j <= n; ++j) br[j - 1] = chain[j - 2].mod;
  std::vector<ModuleMap> phi(n - 1);
  if (n >= 2) phi[0] = ModuleMap{br[1], br[0], chain[0].map.m};
  for (int j = 2; j <= n - 1; ++j) {
    // canonical mono Ker(phi_j..phi_{n-1}) -> Ker(phi_{j-1}..phi_{n-1})
    const Matrix& kj = chain[j - 1].map.m;   // target branch j+1 content
    const Matrix& kjm = chain[j - 2].map.m;  // ambient of branch j
    auto c = solve(kjm, kj);
    if (!c) throw InputError("fn_to_sn: canonical mono failed");
    phi[j - 1] = ModuleMap{br[j], br[j - 1], *c};
  }
  return make_mor(x.algebra, std::move(br), std::move(phi), false);
}

// --- exactness and snake sequences ---------------------------------------------------

void check_exact(const ShortExactMor& ses) {
  const MorObject& A = *ses.incl.source;
  const MorObject& B = *ses.incl.target;
  const MorObject& C = *ses.proj.target;
  if (ses.proj.source.get() != ses.incl.target.get())
    throw InputError("short exact sequence: middle objects differ");
  if (!is_mor_map(ses.incl) || !is_mor_map(ses.proj))
    throw InputError("short exact sequence: maps are not morphisms");
  for (int i = 0; i < B.n; ++i) {
    const Matrix& f = ses.incl.comp[i];
    const Matrix& g = ses.proj.comp[i];
    bool ok = rank(f) == A.branches[i]->dim && rank(g) == C.branches[i]->dim &&
              (g * f).is_zero() && rank(f) + rank(g) == B.branches[i]->dim;
    if (!ok)
      throw InputError("sequence not exact at branch " + std::to_string(i + 1));
  }
}

std::pair<MorPtr, MorMap> mor_kernel(const MorMap& f) {
  const MorObject& S = *f.source;
  std::vector<KerCoker> kcs;
  for (int i = 0; i < S.n; ++i)
    kcs.push_back(kernel_cokernel(ModuleMap{S.branches[i], f.target->branches[i], f.comp[i]}));
  std::vector<ModulePtr> br;
  std::vector<ModuleMap> phi;
  for (int i = 0; i < S.n; ++i) br.push_back(kcs[i].ker);
  for (int i = 0; i < S.n - 1; ++i) {
    auto c = solve(kcs[i].incl.m, S.phi[i].m * kcs[i + 1].incl.m);
    if (!c) throw InputError("mor_kernel: kernel not phi-invariant");
    phi.push_back(ModuleMap{br[i + 1], br[i], *c});
  }
  MorPtr K = make_mor(S.algebra, br, phi, false);
  MorMap incl{K, f.source, {}};
  for (int i = 0; i < S.n; ++i) incl.comp.push_back(kcs[i].incl.m);
  return {K, incl};
}

std::pair<MorPtr, MorMap> mor_cokernel(const MorMap& f) {
  const MorObject& T = *f.target;
  std::vector<KerCoker> kcs;
  for (int i = 0; i < T.n; ++i)
    kcs.push_back(kernel_cokernel(ModuleMap{f.source->branches[i], T.branches[i], f.comp[i]}));
  std::vector<ModulePtr> br;
  std::vector<ModuleMap> phi;
  for (int i = 0; i < T.n; ++i) br.push_back(kcs[i].coker);
  for (int i = 0; i < T.n - 1; ++i) {
    // induced map on quotients: pi_i o phi_i factors through pi_{i+1}
    auto z = solve(kcs[i + 1].proj.m.transpose(), (kcs[i].proj.m * T.phi[i].m).transpose());
    if (!z) throw InputError("mor_cokernel: induced map failed");
    phi.push_back(ModuleMap{br[i + 1], br[i], z->transpose()});
  }
  MorPtr Q = make_mor(T.algebra, br, phi, false);
  MorMap proj{f.target, Q, {}};
  for (int i = 0; i < T.n; ++i) proj.comp.push_back(kcs[i].proj.m);
  return {Q, proj};
}

namespace {

// Builds the six-term sequence induced by vertical maps a, b, c (on the
// sub, middle and quotient objects) connected by horizontal components
// (f_top, g_top) upstairs and (f_bot, g_bot) downstairs.
SixTerm six_term(const ModuleMap& a, const ModuleMap& b, const ModuleMap& c,
                 const Matrix& f_top, const Matrix& g_top, const Matrix& f_bot,
                 const Matrix& g_bot) {
  SixTerm st;
  KerCoker ka = kernel_cokernel(a), kb = kernel_cokernel(b), kc = kernel_cokernel(c);
  st.terms = {ka.ker, kb.ker, kc.ker, ka.coker, kb.coker, kc.coker};

  auto induced_on_kernels = [](const KerCoker& from, const KerCoker& to, const Matrix& h) {
    auto m = solve(to.incl.m, h * from.incl.m);
    if (!m) throw InputError("snake: induced kernel map failed");
    return ModuleMap{from.ker, to.ker, *m};
  };
  ModuleMap k1 = induced_on_kernels(ka, kb, f_top);
  ModuleMap k2 = induced_on_kernels(kb, kc, g_top);

  // connecting map: lift along g_top, push down with b, pull back along f_bot
  Matrix delta(ka.coker->dim, kc.ker->dim);
  for (int j = 0; j < kc.ker->dim; ++j) {
    Matrix v = kc.incl.m.col(j);
    auto y = solve(g_top, v);
    if (!y) throw InputError("snake: lift failed");
    Matrix w = b.m * *y;
    auto z = solve(f_bot, w);
    if (!z) throw InputError("snake: pullback failed");
    Matrix q = ka.proj.m * *z;
    for (int r = 0; r < ka.coker->dim; ++r) delta.at(r, j) = q.at(r, 0);
  }
  ModuleMap dmap{kc.ker, ka.coker, delta};

  auto on_coker = [](const KerCoker& from, const KerCoker& to, const Matrix& h) {
    // want Z with Z * from.proj = to.proj * h
    auto z = solve(from.proj.m.transpose(), (to.proj.m * h).transpose());
    if (!z) throw InputError("snake: induced cokernel map failed");
    return ModuleMap{from.coker, to.coker, z->transpose()};
  };
  ModuleMap c1 = on_coker(ka, kb, f_bot);
  ModuleMap c2 = on_coker(kb, kc, g_bot);

  st.maps = {k1, k2, dmap, c1, c2};

  auto exact_at = [](const ModuleMap& in, const ModuleMap& out) {
    return (out.m * in.m).is_zero() && rank(in.m) + rank(out.m) == in.target->dim;
  };
  bool ok = rank(k1.m) == ka.ker->dim;                        // 0 -> ker a injective
  ok = ok && exact_at(k1, k2) && exact_at(k2, dmap) && exact_at(dmap, c1) && exact_at(c1, c2);
  ok = ok && rank(c2.m) == kc.coker->dim;                     // -> coker c -> 0
  st.exact = ok;
  return st;
}

}  // namespace

std::vector<SnakePair> snake_sequences(const ShortExactMor& ses, Env& env) {
  (void)env;
  check_exact(ses);
  const MorObject& Z = *ses.incl.source;   // sub
  const MorObject& Y = *ses.incl.target;   // middle
  const MorObject& X = *ses.proj.target;   // quotient
  const int n = Z.n;
  std::vector<SnakePair> out;
  for (int i = 1; i <= n - 1; ++i) {
    SnakePair pair;
    pair.i = i;
    // composite phi_1..phi_i : X_{i+1} -> X_1
    auto composite = [&](const MorObject& W) {
      Matrix m = W.phi[0].m;
      for (int t = 1; t < i; ++t) m = m * W.phi[t].m;
      return ModuleMap{W.branches[i], W.branches[0], m};
    };
    pair.composite = six_term(composite(Z), composite(Y), composite(X),
                              ses.incl.comp[i], ses.proj.comp[i],
                              ses.incl.comp[0], ses.proj.comp[0]);
    ModuleMap az{Z.branches[i], Z.branches[i - 1], Z.phi[i - 1].m};
    ModuleMap ay{Y.branches[i], Y.branches[i - 1], Y.phi[i - 1].m};
    ModuleMap ax{X.branches[i], X.branches[i - 1], X.phi[i - 1].m};
    pair.single = six_term(az, ay, ax, ses.incl.comp[i], ses.proj.comp[i],
                           ses.incl.comp[i - 1], ses.proj.comp[i - 1]);
    out.push_back(std::move(pair));
  }
  return out;
}

// --- adjunction tables -----------------------------------------------------------------

std::vector<AdjEntry> adjunction_dims(const MorObject& x, const ModulePtr& M, Env& env) {
  std::vector<AdjEntry> out;
  const int n = x.n;
  MorPtr xp = std::make_shared<const MorObject>(x);
  auto cokers = coker_chain(x);
  auto kers = ker_chain(x);
  for (int i = 1; i <= n; ++i)
    out.push_back(AdjEntry{"1.2", i, 0, mor_hom_dim(m_i(M, i, n), xp, env),
                           hom_dim(M, x.branches[i - 1])});
  for (int i = 1; i <= n - 1; ++i)
    out.push_back(AdjEntry{"1.3", i, 0, mor_hom_dim(xp, m_i(M, i, n), env),
                           hom_dim(cokers[i - 1].mod, M)});
  out.push_back(AdjEntry{"1.4", n, 0, mor_hom_dim(xp, m_i(M, n, n), env),
                         hom_dim(x.branches[0], M)});
  for (int i = 1; i <= n; ++i)
    out.push_back(AdjEntry{"1.5", i, 0, mor_hom_dim(xp, p_i(M, i, n), env),
                           hom_dim(x.branches[n - i], M)});
  for (int i = 1; i <= n - 1; ++i)
    out.push_back(AdjEntry{"1.6", i, 0, mor_hom_dim(p_i(M, i, n), xp, env),
                           hom_dim(M, kers[n - i - 1].mod)});
  out.push_back(AdjEntry{"1.7", n, 0, mor_hom_dim(p_i(M, n, n), xp, env),
                         hom_dim(M, x.branches[n - 1])});
  return out;
}

std::vector<AdjEntry> ext_adjunction_dims(const MorObject& x, const ModulePtr& M, int jmax,
                                          Env& env) {
  std::vector<AdjEntry> out;
  const int n = x.n;
  ModulePtr flat = to_flat(x, env);
  bool in_sn = sn_membership(x, SubcatSpec::all(), env).member;
  bool in_fn = fn_membership(x, SubcatSpec::all(), env).member;
  auto cokers = coker_chain(x);
  auto kers = ker_chain(x);
  for (int j = 0; j <= jmax; ++j) {
    for (int i = 1; i <= n; ++i)
      out.push_back(AdjEntry{"3.2", i, j, ext_dim(to_flat(*m_i(M, i, n), env), flat, j, env),
                             ext_dim(M, x.branches[i - 1], j, env)});
    out.push_back(AdjEntry{"3.3", n, j, ext_dim(flat, to_flat(*m_i(M, n, n), env), j, env),
                           ext_dim(x.branches[0], M, j, env)});
    for (int i = 1; i <= n; ++i)
      out.push_back(AdjEntry{"3.4", i, j, ext_dim(flat, to_flat(*p_i(M, i, n), env), j, env),
                             ext_dim(x.branches[n - i], M, j, env)});
    out.push_back(AdjEntry{"3.5", n, j, ext_dim(to_flat(*p_i(M, n, n), env), flat, j, env),
                           ext_dim(M, x.branches[n - 1], j, env)});
    if (in_sn)
      for (int i = 1; i <= n - 1; ++i)
        out.push_back(AdjEntry{"3.6", i, j, ext_dim(flat, to_flat(*m_i(M, i, n), env), j, env),
                               ext_dim(cokers[i - 1].mod, M, j, env)});
    if (in_fn)
      for (int i = 1; i <= n - 1; ++i)
        out.push_back(AdjEntry{"3.7", i, j, ext_dim(to_flat(*p_i(M, i, n), env), flat, j, env),
                               ext_dim(M, kers[n - i - 1].mod, j, env)});
  }
  return out;
}

// --- duality ----------------------------------------------------------------------------

MorPtr mor_dual(const MorObject& x, Env& env) {
  const int n = x.n;
  std::vector<ModulePtr> br(n);
  for (int j = 1; j <= n; ++j) br[j - 1] = dual_module(x.branches[n - j], env);
  std::vector<ModuleMap> phi(n - 1);
  for (int j = 1; j <= n - 1; ++j) {
    // psi_j = D(phi_{n-j}): D(X_{n-j}) -> D(X_{n-j+1})
    phi[j - 1] = ModuleMap{br[j], br[j - 1], x.phi[n - j - 1].m.transpose()};
  }
  AlgebraPtr opp = env.opposite_of(x.algebra);
  return make_mor(opp, std::move(br), std::move(phi), false);
}

MorMap mor_dual_map(const MorMap& f, Env& env) {
  MorPtr ds = mor_dual(*f.target, env);
  MorPtr dt = mor_dual(*f.source, env);
  MorMap r{ds, dt, {}};
  const int n = f.source->n;
  for (int j = 1; j <= n; ++j) r.comp.push_back(f.comp[n - j].transpose());
  return r;
}

}  // namespace mono
