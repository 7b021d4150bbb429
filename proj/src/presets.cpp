#include "finalg/presets.hpp"

#include <map>

#include "finalg/errors.hpp"

namespace finalg {

namespace {

const std::string kD8Text = R"(
field 2
vertices 1
arrow a 1 1
arrow b 1 1
rel a*a
rel b*b
rel a*b*a*b = b*a*b*a
)";

const std::string kLambdaText = R"(
field 2
vertices 1 2
arrow t1 1 1
arrow t2 1 1
arrow t3 1 2
arrow t4 2 1
rel t1*t1
rel t2*t2
rel t3*t4
rel t2*t4
rel t1*t4
rel t3*t1
rel t3*t2
rel t1*t2*t1*t2 = t2*t1*t2*t1 = t4*t3
)";

const std::string kGammaPrintedText = R"(
field 2
vertices 1 2
arrow s1 1 1
arrow s2 1 1
arrow s3 1 2
arrow s4 2 1
rel s1*s1
rel s2*s2
rel s3*s1
rel s2*s4
rel s2*s1 = s4*s3
rel s2*s1*s2*s1 = s1*s2*s1*s2 = s4*s3*s4*s3 = s1*s4*s3*s2
rel s3*s2*s1*s2
)";

const std::string kGammaCorrectedText = kGammaPrintedText +
                                        "rel s1*s2*s1*s4\n"
                                        "rel s3*s2*s1*s4\n";

const std::string kEscalatingText = R"(
# commutative, x^3 = y^2, y^4 = 0: the naive truncation bound is too small twice
field 2
vertices 1
arrow x 1 1
arrow y 1 1
rel x*y = y*x
rel x*x*x = y*y
rel y*y*y*y
)";

const std::map<std::string, const std::string*>& text_table() {
  static const std::map<std::string, const std::string*> t = {
      {"kd8", &kD8Text},
      {"lambda", &kLambdaText},
      {"gamma_printed", &kGammaPrintedText},
      {"gamma_corrected", &kGammaCorrectedText},
      {"escalating", &kEscalatingText},
  };
  return t;
}

}  // namespace

const std::string& preset_presentation_text(const std::string& name) {
  const auto& t = text_table();
  auto it = t.find(name);
  if (it == t.end()) {
    std::string names;
    for (const auto& [k, v] : t) names += (names.empty() ? "" : ", ") + k;
    throw input_error("unknown presented preset '" + name + "' (valid: " + names + ")");
  }
  return *it->second;
}

PresentedAlgebra preset_presented(const std::string& name) {
  return quotient_algebra(parse_presentation(preset_presentation_text(name)), std::nullopt, name);
}

AlgebraHandle preset_algebra(const std::string& name) {
  if (text_table().count(name)) return preset_presented(name).algebra;
  if (name == "kd8_group") return group_algebra(2, dihedral8_group(), "D8");
  if (name == "kc2") return cyclic_group_algebra(2, 2);
  if (name == "dual_numbers") return dual_numbers(2);
  if (name == "t2k") return triangular2(field_algebra(2));
  std::string names;
  for (const auto& n : preset_algebra_names()) names += (names.empty() ? "" : ", ") + n;
  throw input_error("unknown preset '" + name + "' (valid: " + names + ")");
}

std::vector<std::string> preset_algebra_names() {
  std::vector<std::string> names;
  for (const auto& [k, v] : text_table()) names.push_back(k);
  names.insert(names.end(), {"kd8_group", "kc2", "dual_numbers", "t2k"});
  return names;
}

LinearAlgebraMap dihedral_bridge() {
  const PresentedAlgebra P = preset_presented("kd8");
  const AlgebraHandle G = preset_algebra("kd8_group");
  const StructureAlgebra& g = *G;
  // generator images: a -> 1 + s, b -> 1 + r*s  (indices: 1=0, s=4, r*s=5)
  std::vector<Row> arrow_image(P.quiver.arrows.size());
  auto img = [&](std::size_t a, std::size_t b) {
    Row r(g.dim, 0);
    r[a] = 1;
    r[b] = 1;
    return r;
  };
  arrow_image[*P.quiver.find_arrow("a")] = img(0, 4);
  arrow_image[*P.quiver.find_arrow("b")] = img(0, 5);
  Mat rows(g.F, P.algebra->dim, g.dim);
  for (std::size_t i = 0; i < P.basis_words.size(); ++i) {
    const Word& w = P.basis_words[i];
    Row image = g.unit;
    // w.arrows[0] acts first, so it is the rightmost factor of the product
    for (std::size_t t = w.arrows.size(); t-- > 0;) {
      image = mult(g, image, arrow_image[w.arrows[t]]);
    }
    rows.set_row(i, image);
  }
  LinearAlgebraMap map{P.algebra, G, std::move(rows)};
  const auto fails = verify_algebra_map(map);
  if (!fails.empty()) {
    throw std::logic_error("dihedral bridge failed verification: " + fails.front());
  }
  return map;
}

namespace {

/// rad^4 of an algebra with a computable radical.
Subspace radical_fourth(const StructureAlgebra& A) {
  Subspace J = radical(A);
  Subspace P = J;
  for (int k = 0; k < 3; ++k) P = product_span(A, P, J);
  return P;
}

/// The uniserial summand of rad/rad^4 generated by the image of `gen`.
ModuleRep uniserial_summand(const AlgebraHandle& A, const Row& gen, const std::string& name) {
  ModuleRep reg = regular_module(A);
  Subspace R4 = radical_fourth(*A);
  ModuleRep Q = quotient_module(reg, R4, "regular/rad4");
  Subspace U = generated_submodule(Q, {quotient_coords(R4, gen)});
  return submodule(Q, U, name);
}

Row group_pair_row(const StructureAlgebra& g, const std::string& other) {
  Row r(g.dim, 0);
  for (std::size_t i = 0; i < g.dim; ++i) {
    if (g.labels[i] == "1" || g.labels[i] == other) r[i] = 1;
  }
  return r;
}

}  // namespace

ModuleRep preset_module(const std::string& name) {
  if (name == "S" || name == "X1" || name == "X2") {
    PresentedAlgebra P = preset_presented("kd8");
    if (name == "S") return quotient_module(regular_module(P.algebra), radical(*P.algebra), "S");
    return uniserial_summand(P.algebra, word_coords(P, name == "X1" ? "a" : "b"), name);
  }
  if (name == "S@group" || name == "X1@group" || name == "X2@group") {
    AlgebraHandle A = preset_algebra("kd8_group");
    if (name == "S@group") return quotient_module(regular_module(A), radical(*A), name);
    return uniserial_summand(A, group_pair_row(*A, name == "X1@group" ? "s" : "r*s"), name);
  }
  std::string known;
  for (const std::string& n : preset_module_names()) known += (known.empty() ? "" : ", ") + n;
  throw input_error("unknown module preset '" + name + "' (known: " + known + ")");
}

std::vector<std::string> preset_module_names() {
  return {"S", "X1", "X2", "S@group", "X1@group", "X2@group"};
}

}  // namespace finalg
