#pragma once

#include <map>

#include "mono/module.hpp"

namespace mono {

struct MorObject;

// Expands a quiver representation (dims per vertex, matrix per arrow) into a
// module over a quiver-born algebra: each basis path acts by the composite
// of its arrow matrices. Validated against the structure constants.
ModulePtr quiver_module(const AlgebraPtr& a, const std::map<std::string, int>& spaces,
                        const std::map<std::string, Matrix>& maps);

namespace fixtures {

// path algebra of 1 -> 2 (arrow "a"); basis e_1, e_2, a
QuiverPresentation kA2_quiver();
// Q[x]/(x^2): one vertex, loop x, relation x^2; basis e_1, x
QuiverPresentation lambda2_quiver();
// the commutative square with relation beta*alpha - delta*gamma
QuiverPresentation rem310_quiver();

AlgebraPtr kA2();
AlgebraPtr lambda2();

ModulePtr kA2_S1(const AlgebraPtr& a);
ModulePtr kA2_S2(const AlgebraPtr& a);
ModulePtr kA2_P1(const AlgebraPtr& a);

ModulePtr lambda2_S(const AlgebraPtr& a);
ModulePtr lambda2_J(const AlgebraPtr& a);

// The eleven indecomposables of Mor_2(kA2) as displayed in the source
// AR quiver, with stable names.
struct NamedMor {
  std::string name;
  std::shared_ptr<const MorObject> obj;
  bool projective = false;
  bool injective = false;
};
std::vector<NamedMor> rem310_objects(const AlgebraPtr& kA2, Env& env);

}  // namespace fixtures
}  // namespace mono
