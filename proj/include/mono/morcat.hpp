#pragma once

#include "mono/module.hpp"

namespace mono {

// Object of Mor_n(A): branches X_1..X_n and connecting maps
// phi[i]: X_{i+2-1} -> X_{i+1-1} in 0-based storage, i.e. phi[i] is the
// paper's phi_{i+1}: X_{i+2} -> X_{i+1}.
struct MorObject {
  AlgebraPtr algebra;
  int n = 2;
  std::vector<ModulePtr> branches;  // X_1 .. X_n
  std::vector<ModuleMap> phi;       // phi[i]: branches[i+1] -> branches[i]

  int total_dim() const;
};
using MorPtr = std::shared_ptr<const MorObject>;

MorPtr make_mor(AlgebraPtr a, std::vector<ModulePtr> branches,
                std::vector<ModuleMap> phi, bool validate = true);
MorPtr zero_mor(AlgebraPtr a, int n);

struct MorMap {
  MorPtr source, target;
  std::vector<Matrix> comp;  // comp[i]: source branch i+1 -> target branch i+1
};
bool is_mor_map(const MorMap& f);
MorMap mor_identity(const MorPtr& x);
MorMap mor_zero(const MorPtr& source, const MorPtr& target);
MorMap mor_compose(const MorMap& g, const MorMap& f);

// --- the functors m_i, p_i ---------------------------------------------------

MorPtr m_i(const ModulePtr& M, int i, int n);
MorPtr p_i(const ModulePtr& M, int i, int n);
MorMap m_i_map(const ModuleMap& f, int i, int n);
MorMap p_i_map(const ModuleMap& f, int i, int n);

struct MorSum {
  MorPtr sum;
  std::vector<MorMap> inj, proj;
};
MorSum mor_direct_sum(const std::vector<MorPtr>& parts);

MorPtr m_of(const ModulePtr& M, int n);  // direct sum of all m_i(M)
MorPtr p_of(const ModulePtr& M, int n);

// --- the flat equivalence with T_n(A)-mod ------------------------------------

ModulePtr to_flat(const MorObject& x, Env& env);
MorPtr from_flat(const ModulePtr& m, const AlgebraPtr& a, int n, Env& env);
ModuleMap flat_map(const MorMap& f, Env& env);
// Diagonal blocks of a T_n(A)-map between the flats of src and tgt.
MorMap unflat_map(const Matrix& h, const MorPtr& src, const MorPtr& tgt);

int mor_hom_dim(const MorPtr& x, const MorPtr& y, Env& env);
std::vector<MorMap> mor_hom_basis(const MorPtr& x, const MorPtr& y, Env& env);

std::pair<std::vector<MorPtr>, std::vector<MorPtr>> classify_projinj(const AlgebraPtr& a,
                                                                     int n, Env& env);

// --- subcategory specifications ------------------------------------------------

// A decidable full subcategory of the module category of a fixed algebra.
struct SubcatSpec {
  enum class Kind { All, PerpLeft, PerpRight, Add, Predicate };
  Kind kind = Kind::All;
  ModulePtr T;                                // PerpLeft / PerpRight
  std::vector<ModulePtr> add_indecs;          // Add (indecomposable reps)
  std::string predicate;                      // "projective" | "injective"

  static SubcatSpec all();
  static SubcatSpec perp_left(ModulePtr T);
  static SubcatSpec perp_right(ModulePtr T);
  static SubcatSpec add_of(const std::vector<ModulePtr>& mods, Env& env);
  static SubcatSpec named(std::string predicate);

  // Decides membership; throws Inconclusive when a perpendicular test
  // cannot be certified (infinite injective/projective dimension of T).
  bool contains(const ModulePtr& x, Env& env) const;
};

struct MemberVerdict {
  bool member = true;
  int failing_index = 0;  // 1-based branch/map index when member is false
  std::string reason;
};
MemberVerdict sn_membership(const MorObject& x, const SubcatSpec& spec, Env& env);
MemberVerdict fn_membership(const MorObject& x, const SubcatSpec& spec, Env& env);

// --- chains, the S_n <-> F_n equivalence ---------------------------------------

struct ChainEntry {
  ModulePtr mod;
  ModuleMap map;  // canonical epi X_1 ->> coker, resp. mono ker -> X_n
};
std::vector<ChainEntry> coker_chain(const MorObject& x);  // Coker(phi_1..phi_i)
std::vector<ChainEntry> ker_chain(const MorObject& x);    // Ker(phi_i..phi_{n-1})

MorPtr sn_to_fn(const MorObject& x, Env& env);
MorPtr fn_to_sn(const MorObject& x, Env& env);

// --- exact structure -------------------------------------------------------------

struct ShortExactMor {
  MorMap incl, proj;  // 0 -> A -> B -> C -> 0
};
// Branchwise exactness; throws InputError naming the failing branch.
void check_exact(const ShortExactMor& ses);

std::pair<MorPtr, MorMap> mor_kernel(const MorMap& f);
std::pair<MorPtr, MorMap> mor_cokernel(const MorMap& f);

struct SixTerm {
  std::vector<ModulePtr> terms;  // 6
  std::vector<ModuleMap> maps;   // 5
  bool exact = false;
};
struct SnakePair {
  int i = 1;
  SixTerm composite;  // for phi_1...phi_i
  SixTerm single;     // for phi_i
};
std::vector<SnakePair> snake_sequences(const ShortExactMor& ses, Env& env);

// --- dimension tables for the natural isomorphisms -------------------------------

struct AdjEntry {
  std::string id;
  int i = 0;  // functor index (0 when not applicable)
  int j = 0;  // Ext degree (0 for Hom tables)
  int lhs = 0, rhs = 0;
  bool equal() const { return lhs == rhs; }
};
std::vector<AdjEntry> adjunction_dims(const MorObject& x, const ModulePtr& M, Env& env);
std::vector<AdjEntry> ext_adjunction_dims(const MorObject& x, const ModulePtr& M, int jmax,
                                          Env& env);

// --- duality ----------------------------------------------------------------------

MorPtr mor_dual(const MorObject& x, Env& env);
MorMap mor_dual_map(const MorMap& f, Env& env);

}  // namespace mono
