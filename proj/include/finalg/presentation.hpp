#pragma once
// Quiver presentations: a quiver with relations, parsed from a small text
// grammar, and the finite-dimensional quotient algebra they present.
//
// Composition is right-to-left: in a product x*y the factor y acts first.  A
// path is stored in application order (arrows[0] acts first) and displayed in
// composition order (last applied arrow leftmost), so the displayed string
// "a*b" is the path that applies b, then a.
//
// The quotient is computed in a truncation: for a candidate bound N the path
// algebra is cut at paths of length <= N, the relation ideal is saturated by
// repeated arrow multiplication, and the bound is accepted once every path of
// length N already lies in the saturated ideal.  For an admissible ideal
// (J^m inside the ideal for some m) that acceptance condition implies J^N is
// inside the ideal, so the truncation is the honest quotient.  Otherwise N
// escalates up to a ceiling; an infinite-dimensional quotient (e.g. a free
// loop) never passes and raises limit_error there.  Admissibility itself is
// the caller's precondition and is not decidable by truncation: a
// non-admissible input such as x^2 = x^3 stabilizes on the quotient by the
// arrow-adic closure of its ideal (here k[x]/(x^2)) rather than the ideal
// itself.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "finalg/algebra.hpp"

namespace finalg {

struct Arrow {
  std::string name;
  std::size_t src = 0;
  std::size_t tgt = 0;
};

struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  std::size_t vertex_index(const std::string& name) const;  // throws input_error
  std::optional<std::size_t> find_arrow(const std::string& name) const;
};

/// A path: source vertex plus arrow indices in application order.  A vertex
/// idempotent e_v is the empty path at v.
struct Word {
  std::size_t start = 0;
  std::vector<std::uint32_t> arrows;

  std::size_t length() const { return arrows.size(); }
  bool operator==(const Word&) const = default;
};

std::size_t word_target(const Quiver& Q, const Word& w);
/// Length-first order; ties broken lexicographically on the displayed arrow
/// sequence (composition order).
bool word_less(const Word& a, const Word& b);
std::string word_display(const Quiver& Q, const Word& w);

struct Relation {
  // coefficient (reduced mod p) and path; the relation asserts sum = 0.
  std::vector<std::pair<std::uint64_t, Word>> terms;
};

struct Presentation {
  PrimeField F;
  Quiver quiver;
  std::vector<Relation> relations;
  /// Optional starting truncation bound (still verified and escalated).
  std::optional<std::size_t> bound_hint;
};

/// Parse one relation line: expr ('=' expr)*, expr := term (('+'|'-') term)*
/// or the literal 0, term := [integer ['*']] word, word := name ('*' name)*
/// or e_<vertex>.  A single expr asserts expr = 0; chains expand pairwise.
/// Enforces admissibility (every path length >= 2), real composable paths
/// (naming the offending arrow pair), and parallel terms.
std::vector<Relation> parse_relations(const PrimeField& F, const Quiver& Q,
                                      const std::string& line);

/// Parse a presentation document: lines `field p`, `vertices v...`,
/// `arrow name src tgt`, `rel <relation>`, optional `bound N`; blank lines
/// and `#` comments ignored.
Presentation parse_presentation(const std::string& text);

struct PresentedAlgebra {
  AlgebraHandle algebra;
  Quiver quiver;
  std::vector<Word> basis_words;  // ascending word order; matches algebra basis
  std::size_t bound_used = 0;
  std::vector<Row> vertex_coords;  // per quiver vertex
  std::vector<Row> arrow_coords;   // per quiver arrow
};

/// The finite-dimensional algebra presented by P (see file header for the
/// bound-escalation scheme).  `ceiling` defaults to the FINALG_BOUND_CEILING
/// environment variable, or 12.
PresentedAlgebra quotient_algebra(const Presentation& P,
                                  std::optional<std::size_t> ceiling = std::nullopt,
                                  const std::string& tag = "presentation");

/// Coordinates of a displayed word ("a*b*c" or "e_v") in the basis of PA.
/// Unknown names are input_error; a non-composable sequence is simply the
/// zero element, as in the path algebra.
Row word_coords(const PresentedAlgebra& PA, const std::string& text);

std::size_t resolve_bound_ceiling(std::optional<std::size_t> explicit_ceiling);

}  // namespace finalg
