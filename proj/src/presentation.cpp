#include "finalg/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <memory>
#include <sstream>

namespace finalg {

std::size_t Quiver::vertex_index(const std::string& name) const {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] == name) return i;
  }
  throw input_error("unknown vertex '" + name + "'");
}

std::optional<std::size_t> Quiver::find_arrow(const std::string& name) const {
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    if (arrows[i].name == name) return i;
  }
  return std::nullopt;
}

std::size_t word_target(const Quiver& Q, const Word& w) {
  return w.arrows.empty() ? w.start : Q.arrows[w.arrows.back()].tgt;
}

bool word_less(const Word& a, const Word& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  // displayed order = reversed application order
  auto ita = a.arrows.rbegin(), itb = b.arrows.rbegin();
  for (; ita != a.arrows.rend(); ++ita, ++itb) {
    if (*ita != *itb) return *ita < *itb;
  }
  return a.start < b.start;
}

std::string word_display(const Quiver& Q, const Word& w) {
  if (w.arrows.empty()) return "e_" + Q.vertices[w.start];
  std::string s;
  for (auto it = w.arrows.rbegin(); it != w.arrows.rend(); ++it) {
    if (!s.empty()) s += "*";
    s += Q.arrows[*it].name;
  }
  return s;
}

namespace {

struct Token {
  enum Kind { Name, Int, Sym } kind;
  std::string text;
  std::uint64_t num = 0;
};

std::vector<Token> lex(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < line.size() && (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_'))
        ++j;
      out.push_back({Token::Name, line.substr(i, j - i), 0});
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      Token t{Token::Int, line.substr(i, j - i), 0};
      t.num = std::strtoull(t.text.c_str(), nullptr, 10);
      out.push_back(t);
      i = j;
    } else if (c == '+' || c == '-' || c == '=' || c == '*') {
      out.push_back({Token::Sym, std::string(1, c), 0});
      ++i;
    } else {
      throw input_error(std::string("unexpected character '") + c + "' in relation");
    }
  }
  return out;
}

// Build a Word from displayed, composition-order names (leftmost acts last).
Word word_from_display(const Quiver& Q, const std::vector<std::string>& names) {
  if (names.size() == 1 && names[0].rfind("e_", 0) == 0 && !Q.find_arrow(names[0])) {
    return Word{Q.vertex_index(names[0].substr(2)), {}};
  }
  std::vector<std::uint32_t> idx;
  for (const auto& n : names) {
    if (n.rfind("e_", 0) == 0 && !Q.find_arrow(n)) {
      throw input_error("vertex idempotent '" + n + "' cannot appear inside a path");
    }
    auto a = Q.find_arrow(n);
    if (!a) throw input_error("unknown arrow '" + n + "'");
    idx.push_back(static_cast<std::uint32_t>(*a));
  }
  for (std::size_t i = 0; i + 1 < names.size(); ++i) {
    // displayed pair x*y: y acts first, so target(y) must equal source(x)
    const Arrow& x = Q.arrows[idx[i]];
    const Arrow& y = Q.arrows[idx[i + 1]];
    if (y.tgt != x.src) {
      throw input_error("'" + names[i] + "*" + names[i + 1] + "' is not a path (target of '" +
                        names[i + 1] + "' is " + Q.vertices[y.tgt] + ", source of '" + names[i] +
                        "' is " + Q.vertices[x.src] + ")");
    }
  }
  Word w;
  w.arrows.assign(idx.rbegin(), idx.rend());  // application order
  w.start = Q.arrows[w.arrows.front()].src;
  return w;
}

struct RelParser {
  const PrimeField& F;
  const Quiver& Q;
  std::vector<Token> toks;
  std::size_t pos = 0;
  const std::string& line;

  bool at_sym(const char* s) const {
    return pos < toks.size() && toks[pos].kind == Token::Sym && toks[pos].text == s;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw input_error("cannot parse relation '" + line + "': " + why);
  }

  // term := [integer ['*']] word | 0;  returns empty terms for a literal 0
  std::vector<std::pair<std::uint64_t, Word>> term(std::uint64_t sign) {
    std::uint64_t coeff = sign;
    if (pos < toks.size() && toks[pos].kind == Token::Int) {
      std::uint64_t c = toks[pos].num % F.p();
      ++pos;
      bool word_follows = (pos < toks.size() && toks[pos].kind == Token::Name) ||
                          (at_sym("*") && pos + 1 < toks.size() && toks[pos + 1].kind == Token::Name);
      if (!word_follows) {
        if (toks[pos - 1].num == 0) return {};
        fail("numeric term '" + toks[pos - 1].text + "' without a path");
      }
      if (at_sym("*")) ++pos;
      coeff = F.mul(coeff, c);
    }
    std::vector<std::string> names;
    if (pos >= toks.size() || toks[pos].kind != Token::Name) fail("expected a path");
    names.push_back(toks[pos++].text);
    while (at_sym("*")) {
      if (pos + 1 >= toks.size() || toks[pos + 1].kind != Token::Name) fail("expected a name after '*'");
      names.push_back(toks[pos + 1].text);
      pos += 2;
    }
    if (coeff == 0) return {};
    return {{coeff, word_from_display(Q, names)}};
  }

  // expr := ['-'] term (('+'|'-') term)*
  std::vector<std::pair<std::uint64_t, Word>> expr() {
    std::vector<std::pair<std::uint64_t, Word>> terms;
    std::uint64_t sign = 1;
    if (at_sym("-")) {
      sign = F.neg(1);
      ++pos;
    }
    auto t = term(sign);
    terms.insert(terms.end(), t.begin(), t.end());
    while (at_sym("+") || at_sym("-")) {
      sign = (toks[pos].text == "+") ? 1 : F.neg(1);
      ++pos;
      t = term(sign);
      terms.insert(terms.end(), t.begin(), t.end());
    }
    return terms;
  }
};

void negate_into(const PrimeField& F, std::vector<std::pair<std::uint64_t, Word>>& dst,
                 const std::vector<std::pair<std::uint64_t, Word>>& src) {
  for (const auto& [c, w] : src) dst.emplace_back(F.neg(c), w);
}

}  // namespace

std::vector<Relation> parse_relations(const PrimeField& F, const Quiver& Q,
                                      const std::string& line) {
  RelParser P{F, Q, lex(line), 0, line};
  if (P.toks.empty()) P.fail("empty relation");
  std::vector<std::vector<std::pair<std::uint64_t, Word>>> exprs;
  exprs.push_back(P.expr());
  while (P.at_sym("=")) {
    ++P.pos;
    exprs.push_back(P.expr());
  }
  if (P.pos != P.toks.size()) P.fail("trailing tokens starting at '" + P.toks[P.pos].text + "'");

  std::vector<Relation> out;
  if (exprs.size() == 1) {
    if (!exprs[0].empty()) out.push_back(Relation{exprs[0]});
  } else {
    for (std::size_t i = 0; i + 1 < exprs.size(); ++i) {
      Relation r{exprs[i]};
      negate_into(F, r.terms, exprs[i + 1]);
      if (!r.terms.empty()) out.push_back(std::move(r));
    }
  }
  // admissibility and parallelism across the whole line
  std::optional<std::pair<std::size_t, std::size_t>> route;
  std::string route_witness;
  for (const auto& r : out) {
    for (const auto& [c, w] : r.terms) {
      (void)c;
      if (w.length() < 2) {
        throw input_error("relation term '" + word_display(Q, w) + "' in '" + line +
                          "' has length < 2; the relation ideal must be admissible");
      }
      std::pair<std::size_t, std::size_t> sr{w.start, word_target(Q, w)};
      if (!route) {
        route = sr;
        route_witness = word_display(Q, w);
      } else if (*route != sr) {
        throw input_error("relation terms in '" + line + "' are not parallel paths: '" +
                          route_witness + "' runs " + Q.vertices[route->first] + " -> " +
                          Q.vertices[route->second] + " but '" + word_display(Q, w) + "' runs " +
                          Q.vertices[sr.first] + " -> " + Q.vertices[sr.second]);
      }
    }
  }
  return out;
}

Presentation parse_presentation(const std::string& text) {
  std::optional<std::uint64_t> p;
  Quiver Q;
  std::vector<std::string> rel_lines;
  std::optional<std::size_t> bound;

  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    auto require = [&](bool ok, const std::string& why) {
      if (!ok) throw input_error("line " + std::to_string(lineno) + ": " + why);
    };
    if (head == "field") {
      std::uint64_t v = 0;
      require(static_cast<bool>(ls >> v), "expected 'field p'");
      p = v;
    } else if (head == "vertices") {
      std::string name;
      while (ls >> name) {
        require(std::find(Q.vertices.begin(), Q.vertices.end(), name) == Q.vertices.end(),
                "duplicate vertex '" + name + "'");
        Q.vertices.push_back(name);
      }
      require(!Q.vertices.empty(), "expected at least one vertex");
    } else if (head == "arrow") {
      std::string name, src, tgt;
      require(static_cast<bool>(ls >> name >> src >> tgt), "expected 'arrow name src tgt'");
      require(!Q.find_arrow(name).has_value(), "duplicate arrow '" + name + "'");
      require(name.rfind("e_", 0) != 0, "arrow names starting with 'e_' are reserved");
      Q.arrows.push_back(Arrow{name, Q.vertex_index(src), Q.vertex_index(tgt)});
    } else if (head == "rel") {
      std::string rest;
      std::getline(ls, rest);
      rel_lines.push_back(rest);
    } else if (head == "bound") {
      std::size_t v = 0;
      require(static_cast<bool>(ls >> v) && v >= 2, "expected 'bound N' with N >= 2");
      bound = v;
    } else {
      throw input_error("line " + std::to_string(lineno) + ": unknown directive '" + head + "'");
    }
  }
  if (!p) throw input_error("presentation is missing a 'field p' line");
  Presentation P{PrimeField(*p), std::move(Q), {}, bound};
  for (const auto& line : rel_lines) {
    auto rs = parse_relations(P.F, P.quiver, line);
    P.relations.insert(P.relations.end(), rs.begin(), rs.end());
  }
  return P;
}

std::size_t resolve_bound_ceiling(std::optional<std::size_t> explicit_ceiling) {
  if (explicit_ceiling) return *explicit_ceiling;
  if (const char* env = std::getenv("FINALG_BOUND_CEILING")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v < 2) {
      throw input_error("FINALG_BOUND_CEILING must be an integer >= 2");
    }
    return static_cast<std::size_t>(v);
  }
  return 12;
}

namespace {

// The path algebra cut at paths of length <= maxlen, with coordinates in
// descending word order so that row reduction eliminates the largest word of
// every relation.
struct Truncation {
  const Quiver& Q;
  std::size_t maxlen;
  std::vector<Word> words;  // descending
  std::map<std::vector<std::uint32_t>, std::size_t> cols;

  static std::vector<std::uint32_t> key(const Word& w) {
    std::vector<std::uint32_t> k;
    k.reserve(w.arrows.size() + 1);
    k.push_back(static_cast<std::uint32_t>(w.start));
    k.insert(k.end(), w.arrows.begin(), w.arrows.end());
    return k;
  }

  Truncation(const Quiver& q, std::size_t n) : Q(q), maxlen(n) {
    std::vector<Word> level;
    for (std::size_t v = 0; v < Q.vertices.size(); ++v) level.push_back(Word{v, {}});
    words = level;
    for (std::size_t len = 1; len <= maxlen; ++len) {
      std::vector<Word> next;
      for (const Word& w : level) {
        for (std::size_t a = 0; a < Q.arrows.size(); ++a) {
          if (Q.arrows[a].src != word_target(Q, w)) continue;
          Word nw = w;
          nw.arrows.push_back(static_cast<std::uint32_t>(a));
          next.push_back(std::move(nw));
        }
      }
      words.insert(words.end(), next.begin(), next.end());
      level = std::move(next);
    }
    std::sort(words.begin(), words.end(), [](const Word& a, const Word& b) { return word_less(b, a); });
    for (std::size_t c = 0; c < words.size(); ++c) cols.emplace(key(words[c]), c);
  }

  std::size_t col(const Word& w) const { return cols.at(key(w)); }

  Row row_of(const PrimeField& F, const Relation& r) const {
    Row out(words.size(), 0);
    for (const auto& [c, w] : r.terms) {
      if (w.length() <= maxlen) {
        std::size_t j = col(w);
        out[j] = F.add(out[j], c);
      }
    }
    return out;
  }

  // row * arrow (arrow acts first) and arrow * row (arrow acts last), inside
  // the truncation (words beyond maxlen vanish).
  Row arrow_mul(const PrimeField& F, const Row& r, std::size_t a, bool arrow_first) const {
    Row out(words.size(), 0);
    const Arrow& ar = Q.arrows[a];
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (r[c] == 0) continue;
      const Word& w = words[c];
      Word nw;
      if (arrow_first) {
        if (ar.tgt != w.start) continue;
        nw.start = ar.src;
        nw.arrows.reserve(w.arrows.size() + 1);
        nw.arrows.push_back(static_cast<std::uint32_t>(a));
        nw.arrows.insert(nw.arrows.end(), w.arrows.begin(), w.arrows.end());
      } else {
        if (ar.src != word_target(Q, w)) continue;
        nw = w;
        nw.arrows.push_back(static_cast<std::uint32_t>(a));
      }
      if (nw.length() > maxlen) continue;
      std::size_t j = col(nw);
      out[j] = F.add(out[j], r[c]);
    }
    return out;
  }
};

Subspace saturate(const PrimeField& F, const Truncation& T, const std::vector<Relation>& rels) {
  std::vector<Row> rows;
  for (const auto& r : rels) {
    Row v = T.row_of(F, r);
    if (!row_is_zero(v)) rows.push_back(std::move(v));
  }
  Subspace S = Subspace::span(F, T.words.size(), rows);
  for (;;) {
    std::vector<Row> all;
    for (std::size_t i = 0; i < S.dim(); ++i) {
      Row r = S.basis.row(i);
      all.push_back(r);
      for (std::size_t a = 0; a < T.Q.arrows.size(); ++a) {
        Row left = T.arrow_mul(F, r, a, false);
        Row right = T.arrow_mul(F, r, a, true);
        if (!row_is_zero(left)) all.push_back(std::move(left));
        if (!row_is_zero(right)) all.push_back(std::move(right));
      }
    }
    Subspace next = Subspace::span(F, T.words.size(), all);
    if (next.dim() == S.dim()) return S;
    S = std::move(next);
  }
}

}  // namespace

PresentedAlgebra quotient_algebra(const Presentation& P, std::optional<std::size_t> ceiling,
                                  const std::string& tag) {
  const std::size_t limit = resolve_bound_ceiling(ceiling);
  std::size_t longest = 1;
  for (const auto& r : P.relations) {
    for (const auto& [c, w] : r.terms) {
      (void)c;
      longest = std::max(longest, w.length());
    }
  }
  std::size_t N = std::max<std::size_t>(2, longest + 1);
  if (P.bound_hint) N = std::max(N, *P.bound_hint);

  for (; N <= limit; ++N) {
    Truncation T(P.quiver, N);
    Subspace S = saturate(P.F, T, P.relations);
    bool stable = true;
    for (std::size_t c = 0; c < T.words.size() && stable; ++c) {
      if (T.words[c].length() != N) continue;
      Row ind(T.words.size(), 0);
      ind[c] = 1;
      if (!member(S, ind)) stable = false;
    }
    if (!stable) continue;

    // Basis = non-pivot words (all of length < N), in ascending word order.
    std::vector<bool> is_pivot(T.words.size(), false);
    for (auto pv : S.pivots) is_pivot[pv] = true;
    std::vector<std::size_t> basis_cols;
    for (std::size_t c = T.words.size(); c-- > 0;) {
      if (!is_pivot[c]) basis_cols.push_back(c);
    }
    const std::size_t dim = basis_cols.size();
    std::vector<std::size_t> basis_index_of_col(T.words.size(), SIZE_MAX);
    for (std::size_t b = 0; b < dim; ++b) basis_index_of_col[basis_cols[b]] = b;

    auto project = [&](Row v) {
      v = reduce_mod(S, std::move(v));
      Row out(dim, 0);
      for (std::size_t b = 0; b < dim; ++b) out[b] = v[basis_cols[b]];
      return out;
    };
    auto coords_of_word = [&](const Word& w) {
      Row v(T.words.size(), 0);
      v[T.col(w)] = 1;
      return project(std::move(v));
    };

    StructureAlgebra B{P.F, dim, {}, Row(dim, 0), {}, std::nullopt, std::nullopt,
                       false, std::nullopt, std::nullopt, tag};
    std::vector<Word> basis_words;
    for (std::size_t b = 0; b < dim; ++b) {
      basis_words.push_back(T.words[basis_cols[b]]);
      B.labels.push_back(word_display(P.quiver, basis_words.back()));
    }

    std::vector<Idempotent> idems;
    std::vector<Row> vertex_coords;
    for (std::size_t v = 0; v < P.quiver.vertices.size(); ++v) {
      Row cv = coords_of_word(Word{v, {}});
      B.unit = row_add(P.F, B.unit, cv);
      idems.push_back(Idempotent{"e_" + P.quiver.vertices[v], cv});
      vertex_coords.push_back(std::move(cv));
    }
    B.idempotents = std::move(idems);

    B.table.reserve(dim * dim);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        const Word& wi = basis_words[i];
        const Word& wj = basis_words[j];  // acts first in b_i * b_j
        if (word_target(P.quiver, wj) != wi.start ||
            wi.length() + wj.length() > T.maxlen) {
          B.table.push_back(Row(dim, 0));
          continue;
        }
        Word prod;
        prod.start = wj.start;
        prod.arrows = wj.arrows;
        prod.arrows.insert(prod.arrows.end(), wi.arrows.begin(), wi.arrows.end());
        B.table.push_back(coords_of_word(prod));
      }
    }

    bool homogeneous = true;
    for (const auto& r : P.relations) {
      for (const auto& [c, w] : r.terms) {
        (void)c;
        if (w.length() != r.terms.front().second.length()) homogeneous = false;
      }
    }
    if (homogeneous) {
      std::vector<int> grading;
      for (const auto& w : basis_words) grading.push_back(static_cast<int>(w.length()));
      B.grading = std::move(grading);
      B.graded_radical_ok = true;  // degree zero = the complete vertex idempotents
    }
    {
      std::vector<Row> radrows;
      for (std::size_t b = 0; b < dim; ++b) {
        if (basis_words[b].length() >= 1) {
          Row r(dim, 0);
          r[b] = 1;
          radrows.push_back(std::move(r));
        }
      }
      B.radical_basis = Subspace::span(P.F, dim, radrows);
    }

    std::vector<Row> arrow_coords;
    for (std::size_t a = 0; a < P.quiver.arrows.size(); ++a) {
      arrow_coords.push_back(
          coords_of_word(Word{P.quiver.arrows[a].src, {static_cast<std::uint32_t>(a)}}));
    }

    require_valid(B, false);
    PresentedAlgebra out;
    out.algebra = std::make_shared<const StructureAlgebra>(std::move(B));
    out.quiver = P.quiver;
    out.basis_words = std::move(basis_words);
    out.bound_used = N;
    out.vertex_coords = std::move(vertex_coords);
    out.arrow_coords = std::move(arrow_coords);
    return out;
  }
  throw limit_error("presentation did not stabilize by truncation bound " + std::to_string(limit) +
                    "; the relation ideal may not be admissible (raise FINALG_BOUND_CEILING if a "
                    "finite basis is expected beyond this bound)");
}

Row word_coords(const PresentedAlgebra& PA, const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '*') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  for (const auto& s : parts) {
    if (s.empty()) throw input_error("malformed word '" + text + "'");
  }
  const Quiver& Q = PA.quiver;
  if (parts.size() == 1 && parts[0].rfind("e_", 0) == 0 && !Q.find_arrow(parts[0])) {
    return PA.vertex_coords[Q.vertex_index(parts[0].substr(2))];
  }
  std::vector<std::size_t> idx;
  for (const auto& s : parts) {
    auto a = Q.find_arrow(s);
    if (!a) throw input_error("unknown arrow '" + s + "' in word '" + text + "'");
    idx.push_back(*a);
  }
  // rightmost name acts first; non-composable sequences multiply to zero
  Row acc = PA.arrow_coords[idx.back()];
  for (std::size_t i = idx.size() - 1; i-- > 0;) {
    acc = mult(*PA.algebra, PA.arrow_coords[idx[i]], acc);
  }
  return acc;
}

}  // namespace finalg
