#pragma once

// JSON documents for algebras, modules, and integer matrices, plus the CLI
// source resolver.  Schemas are versioned through a "schema" field
// ("finalg/algebra-v1", "finalg/module-v1"); key order and entry order are
// fixed, and no timestamps exist, so serialization is byte-identical across
// reruns.  Every loaded object passes the full semantic validation of its
// layer before it is returned.

#include <string>

#include "finalg/intmat.hpp"
#include "finalg/modrep.hpp"

namespace finalg {

/// Parse an algebra document.  Kinds:
///   "presentation"  field, vertices, arrows [[name,src,tgt]...],
///                   relations (strings in the rel grammar), optional bound
///   "table"         field, dim, basis, unit (dense row), table (sparse
///                   [i,j,k,coeff] entries of b_i b_j), optional idempotents
///   "group"         field, elements, table (index matrix), optional tag
/// Malformed documents raise input_error.
AlgebraHandle algebra_from_json(const std::string& text);

/// Serialize an algebra: group algebras as kind "group" (exact round-trip),
/// everything else as kind "table" with carried idempotents.  A carried
/// radical or grading is recomputable but not serialized.
std::string algebra_to_json(const AlgebraHandle& A);

/// Parse / serialize a module document ("finalg/module-v1"): the algebra
/// document embedded under "algebra", dim, sparse action entries
/// [g, row, col, value], tag.
ModuleRep module_from_json(const std::string& text);
std::string module_to_json(const ModuleRep& M);

/// Integer matrix from "[[8,1],[1,1]]" (a JSON array of equal-length rows).
IntMatrix int_matrix_from_text(const std::string& text);

/// Resolve a CLI algebra source: "preset:<name>", a path ending in .json
/// (algebra document), or a path to a presentation text file.
AlgebraHandle load_algebra_source(const std::string& src);

/// Read a whole file (input_error when unreadable).
std::string read_text_file(const std::string& path);

}  // namespace finalg
