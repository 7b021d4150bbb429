#pragma once
// Named example algebras resolvable as "preset:<name>" from the CLI and
// reused across the test and reproduction suites.

#include <string>
#include <vector>

#include "finalg/constructions.hpp"
#include "finalg/modrep.hpp"
#include "finalg/presentation.hpp"

namespace finalg {

/// Presentation text of a built-in quiver algebra over F_2.
/// Names: kd8, lambda, gamma_printed, gamma_corrected, escalating.
const std::string& preset_presentation_text(const std::string& name);

/// The presented form (quiver, word basis, bound) of a presented preset.
PresentedAlgebra preset_presented(const std::string& name);

/// Resolve a named algebra:
///   kd8, lambda, gamma_printed, gamma_corrected  presented quiver algebras
///   escalating                                   commutative bound-escalation example
///   kd8_group                                    group algebra of the order-8 dihedral group
///   kc2                                          group algebra of C_2
///   dual_numbers                                 F_2[x]/(x^2)
///   t2k                                          lower-triangular 2x2 matrices over F_2
/// All over F_2.  Throws input_error for unknown names, listing valid ones.
AlgebraHandle preset_algebra(const std::string& name);

std::vector<std::string> preset_algebra_names();

/// The verified isomorphism from the presented algebra kd8 onto the group
/// algebra of the dihedral group of order 8, generated by a -> 1+s and
/// b -> 1+r*s.  Throws logic_error if verification fails.
LinearAlgebraMap dihedral_bridge();

/// Named modules over preset algebras:
///   S, X1, X2      over the presented kd8: the trivial simple module and
///                  the two length-3 uniserial direct summands of rad/rad^4
///                  (generated by the images of a and of b respectively)
///   S@group, X1@group, X2@group
///                  the same constructions over kd8_group, the X generators
///                  being the images of 1+s and of 1+r*s
/// Throws input_error for unknown names, listing the valid ones.
ModuleRep preset_module(const std::string& name);

std::vector<std::string> preset_module_names();

}  // namespace finalg
