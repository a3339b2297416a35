#include "ybalg/presentations.hpp"

#include <algorithm>
#include <cctype>

#include "ybalg/error.hpp"

namespace ybalg {

std::string to_string(GenKind kind) {
  switch (kind) {
    case GenKind::R: return "r";
    case GenKind::T: return "t";
    case GenKind::Rho: return "rho";
    case GenKind::A: return "a";
    case GenKind::B: return "b";
  }
  return "?";
}

std::string to_string(const Generator& g) {
  return to_string(g.kind) + "(" + std::to_string(g.i) + "," + std::to_string(g.j) + ")";
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out += "*";
    out += to_string(w[k]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Element

Element Element::one() { return of(Word{}); }

Element Element::of(const Generator& g, const Rat& coeff) { return of(Word{g}, coeff); }

Element Element::of(const Word& w, const Rat& coeff) {
  Element e;
  e.add_term(w, coeff);
  return e;
}

std::optional<std::size_t> Element::degree() const {
  std::optional<std::size_t> d;
  for (const auto& [w, c] : terms_) {
    if (d && *d != w.size()) return std::nullopt;
    d = w.size();
  }
  return d;
}

Rat Element::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rat(0) : it->second;
}

void Element::add_term(const Word& w, const Rat& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Element& Element::operator+=(const Element& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

Element& Element::operator-=(const Element& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

Element& Element::operator*=(const Rat& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= scalar;
  return *this;
}

Element operator*(const Element& a, const Element& b) {
  Element out;
  for (const auto& [u, c] : a.terms_)
    for (const auto& [v, d] : b.terms_) {
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      out.add_term(w, c * d);
    }
  return out;
}

Element commutator(const Element& a, const Element& b) { return a * b - b * a; }

std::string to_string(const Element& e) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : e.terms()) {
    Rat mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (w.empty()) {
      out += to_string(mag);
      continue;
    }
    if (mag != 1) out += to_string(mag) + "*";
    out += to_string(w);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Generators and parsing

Element generator_element(GenKind kind, int i, int j, RConvention conv) {
  if (i == j) throw InvalidArgument("generator " + to_string(kind) + " needs distinct sites");
  if (i < 1 || j < 1 || i > 255 || j > 255) throw InvalidArgument("site index out of range");
  auto make = [&](int a, int b, int sign) {
    return Element::of(Generator{kind, static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)}, Rat(sign));
  };
  switch (kind) {
    case GenKind::T:
    case GenKind::B: return make(std::min(i, j), std::max(i, j), 1);
    case GenKind::Rho:
    case GenKind::A: return i < j ? make(i, j, 1) : make(j, i, -1);
    case GenKind::R:
      if (conv == RConvention::Quasi || i < j) return make(i, j, 1);
      return make(j, i, -1);
  }
  throw InvalidArgument("unknown generator kind");
}

namespace {

class ElementParser {
 public:
  ElementParser(std::string_view text, RConvention conv) : conv_(conv) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s_.push_back(c);
  }

  Element parse() {
    Element out;
    if (s_.empty()) fail("empty element");
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      Element term = parse_term();
      if (sign < 0) term *= Rat(-1);
      out += term;
    }
    return out;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidArgument("cannot parse element '" + s_ + "' at offset " + std::to_string(pos_) + ": " + what);
  }

  Element parse_term() {
    Rat coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = parse_coefficient();
      have_coeff = true;
      if (peek() == '*') {
        ++pos_;
      } else if (!std::isalpha(static_cast<unsigned char>(peek()))) {
        return Element::of(Word{}, coeff);
      }
    }
    if (!std::isalpha(static_cast<unsigned char>(peek()))) fail(have_coeff ? "expected generator" : "expected term");
    Element word = parse_token();
    while (peek() == '*') {
      ++pos_;
      word = word * parse_token();
    }
    return coeff * word;
  }

  Rat parse_coefficient() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (peek() == '/') {
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("bad denominator");
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    return parse_rat(std::string_view(s_).substr(start, pos_ - start));
  }

  int parse_int() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_ || pos_ - start > 3) fail("expected site index");
    return std::stoi(s_.substr(start, pos_ - start));
  }

  Element parse_token() {
    std::size_t start = pos_;
    while (std::isalpha(static_cast<unsigned char>(peek()))) ++pos_;
    std::string name = s_.substr(start, pos_ - start);
    GenKind kind;
    if (name == "r") kind = GenKind::R;
    else if (name == "t") kind = GenKind::T;
    else if (name == "rho") kind = GenKind::Rho;
    else if (name == "a") kind = GenKind::A;
    else if (name == "b") kind = GenKind::B;
    else fail("unknown generator '" + name + "'");
    if (peek() != '(') fail("expected '('");
    ++pos_;
    int i = parse_int();
    if (peek() != ',') fail("expected ','");
    ++pos_;
    int j = parse_int();
    if (peek() != ')') fail("expected ')'");
    ++pos_;
    return generator_element(kind, i, j, conv_);
  }

  std::string s_;
  std::size_t pos_ = 0;
  RConvention conv_;
};

}  // namespace

Element parse_element(std::string_view text, RConvention conv) { return ElementParser(text, conv).parse(); }

Word parse_word(std::string_view text, RConvention conv) {
  Element e = parse_element(text, conv);
  if (e.terms().size() != 1 || e.terms().begin()->second != 1)
    throw InvalidArgument("'" + std::string(text) + "' is not a single word with coefficient 1");
  return e.terms().begin()->first;
}

std::string to_string(AlgebraKind kind) {
  switch (kind) {
    case AlgebraKind::Tr: return "tr";
    case AlgebraKind::Qtr: return "qtr";
    case AlgebraKind::Qtr0: return "qtr0";
    case AlgebraKind::Pb: return "pb";
  }
  return "?";
}

AlgebraKind parse_algebra_kind(std::string_view text) {
  if (text == "tr") return AlgebraKind::Tr;
  if (text == "qtr") return AlgebraKind::Qtr;
  if (text == "qtr0") return AlgebraKind::Qtr0;
  if (text == "pb") return AlgebraKind::Pb;
  throw InvalidArgument("unknown algebra kind '" + std::string(text) + "'");
}

// ---------------------------------------------------------------------------
// Presentation

Presentation::Presentation(std::string name, int n, std::vector<Generator> generators,
                           std::vector<Element> raw_relations)
    : name_(std::move(name)), n_(n), generators_(std::move(generators)) {
  for (std::size_t k = 0; k < generators_.size(); ++k) {
    if (!index_.emplace(generators_[k], k).second)
      throw InvalidArgument("duplicate generator " + to_string(generators_[k]));
  }
  raw_relation_count_ = raw_relations.size();
  RowEchelon span(generators_.size() * generators_.size());
  for (auto& rel : raw_relations) {
    if (rel.is_zero()) continue;
    if (rel.degree() != 2) throw InvalidArgument("relation is not homogeneous of degree 2: " + to_string(rel));
    if (span.insert(encode(rel, 2))) relations_.push_back(std::move(rel));
  }
}

std::optional<std::size_t> Presentation::index_of(const Generator& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::uint32_t> Presentation::letters(const Word& w) const {
  std::vector<std::uint32_t> out;
  out.reserve(w.size());
  for (const auto& g : w) {
    auto idx = index_of(g);
    if (!idx) throw InvalidArgument("generator " + to_string(g) + " is not in " + name_);
    out.push_back(static_cast<std::uint32_t>(*idx));
  }
  return out;
}

Word Presentation::word(const std::vector<std::uint32_t>& letters) const {
  Word w;
  w.reserve(letters.size());
  for (auto l : letters) w.push_back(generators_.at(l));
  return w;
}

SparseVector<Rat> Presentation::encode(const Element& e, std::size_t d) const {
  SparseVector<Rat> v;
  const std::size_t m = generators_.size();
  for (const auto& [w, c] : e.terms()) {
    if (w.size() != d) throw InvalidArgument("element is not homogeneous of degree " + std::to_string(d));
    std::size_t col = 0;
    for (auto l : letters(w)) col = col * m + l;
    v.push_back({static_cast<std::uint32_t>(col), c});
  }
  canonicalize(v);
  return v;
}

Element Presentation::decode(const SparseVector<Rat>& v, std::size_t d) const {
  const std::size_t m = generators_.size();
  Element out;
  for (const auto& e : v) {
    std::vector<std::uint32_t> letters(d);
    std::size_t col = e.col;
    for (std::size_t k = d; k-- > 0;) {
      letters[k] = static_cast<std::uint32_t>(col % m);
      col /= m;
    }
    out.add_term(word(letters), e.value);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Concrete presentations

namespace {

Generator gen(GenKind kind, int i, int j) {
  return Generator{kind, static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)};
}

std::vector<Generator> upper_pairs(GenKind kind, int n) {
  std::vector<Generator> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.push_back(gen(kind, i, j));
  return out;
}

bool all_distinct(int a, int b, int c, int d) {
  return a != b && a != c && a != d && b != c && b != d && c != d;
}

Presentation make_tr(int n, const PresentationOptions& options) {
  const auto conv = RConvention::Triangular;
  auto R = [&](int i, int j) { return generator_element(GenKind::R, i, j, conv); };
  std::vector<Element> rels;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        int middle = (options.inject_fault && rels.empty()) ? -1 : 1;
        rels.push_back(commutator(R(i, j), R(i, k)) + Rat(middle) * commutator(R(i, j), R(j, k)) +
                       commutator(R(i, k), R(j, k)));
      }
  auto gens = upper_pairs(GenKind::R, n);
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b)
      if (all_distinct(gens[a].i, gens[a].j, gens[b].i, gens[b].j))
        rels.push_back(commutator(Element::of(gens[a]), Element::of(gens[b])));
  return Presentation("tr_" + std::to_string(n), n, std::move(gens), std::move(rels));
}

Presentation make_qtr(int n) {
  std::vector<Generator> gens;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) gens.push_back(gen(GenKind::R, i, j));
  std::vector<Element> rels;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        if (i != j && j != k && i != k) rels.push_back(cyb_element(i, j, k, RConvention::Quasi));
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b)
      if (all_distinct(gens[a].i, gens[a].j, gens[b].i, gens[b].j))
        rels.push_back(commutator(Element::of(gens[a]), Element::of(gens[b])));
  return Presentation("qtr_" + std::to_string(n), n, std::move(gens), std::move(rels));
}

Presentation make_qtr0(int n) {
  auto T = [](int i, int j) { return generator_element(GenKind::T, i, j); };
  auto P = [](int i, int j) { return generator_element(GenKind::Rho, i, j); };
  auto gens = upper_pairs(GenKind::T, n);
  auto rhos = upper_pairs(GenKind::Rho, n);
  gens.insert(gens.end(), rhos.begin(), rhos.end());
  std::vector<Element> rels;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        if (i == j || j == k || i == k) continue;
        rels.push_back(commutator(T(i, j), T(i, k) + T(j, k)));
        rels.push_back(commutator(T(i, j), P(i, k) + P(j, k)));
        rels.push_back(commutator(P(i, j), P(j, k)) + commutator(P(j, k), P(k, i)) + commutator(P(k, i), P(i, j)));
      }
  auto pairs = upper_pairs(GenKind::T, n);
  for (const auto& x : pairs)
    for (const auto& y : pairs) {
      if (!all_distinct(x.i, x.j, y.i, y.j)) continue;
      rels.push_back(commutator(P(x.i, x.j), T(y.i, y.j)));
      if (x < y) {
        rels.push_back(commutator(P(x.i, x.j), P(y.i, y.j)));
        rels.push_back(commutator(T(x.i, x.j), T(y.i, y.j)));
      }
    }
  return Presentation("qtr0_" + std::to_string(n), n, std::move(gens), std::move(rels));
}

Presentation make_pb(int n) {
  auto T = [](int i, int j) { return generator_element(GenKind::T, i, j); };
  auto gens = upper_pairs(GenKind::T, n);
  std::vector<Element> rels;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        if (i != j && j != k && i != k) rels.push_back(commutator(T(i, j), T(i, k) + T(j, k)));
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b)
      if (all_distinct(gens[a].i, gens[a].j, gens[b].i, gens[b].j))
        rels.push_back(commutator(Element::of(gens[a]), Element::of(gens[b])));
  return Presentation("pb_" + std::to_string(n), n, std::move(gens), std::move(rels));
}

}  // namespace

Element cyb_element(int i, int j, int k, RConvention conv) {
  auto R = [&](int a, int b) { return generator_element(GenKind::R, a, b, conv); };
  return commutator(R(i, j), R(i, k)) + commutator(R(i, j), R(j, k)) + commutator(R(i, k), R(j, k));
}

Presentation make_presentation(AlgebraKind kind, int n, const PresentationOptions& options) {
  if (n < 0 || n > 32) throw InvalidArgument("site count out of range");
  switch (kind) {
    case AlgebraKind::Tr: return make_tr(n, options);
    case AlgebraKind::Qtr: return make_qtr(n);
    case AlgebraKind::Qtr0: return make_qtr0(n);
    case AlgebraKind::Pb: return make_pb(n);
  }
  throw InvalidArgument("unknown algebra kind");
}

Presentation make_qtr_split(int n) {
  Presentation qtr = make_qtr(n);
  GeneratorMap split;
  for (const auto& g : qtr.generators())
    split[g] = generator_element(GenKind::T, g.i, g.j) + generator_element(GenKind::Rho, g.i, g.j);
  auto gens = upper_pairs(GenKind::T, n);
  auto rhos = upper_pairs(GenKind::Rho, n);
  gens.insert(gens.end(), rhos.begin(), rhos.end());
  std::vector<Element> rels;
  for (const auto& rel : qtr.relations()) rels.push_back(substitute(rel, split));
  return Presentation("qtr_split_" + std::to_string(n), n, std::move(gens), std::move(rels));
}

Element substitute(const Element& e, const GeneratorMap& map) {
  Element out;
  for (const auto& [w, c] : e.terms()) {
    Element term = Element::of(Word{}, c);
    for (const auto& g : w) {
      auto it = map.find(g);
      if (it == map.end()) throw InvalidArgument("generator map has no image for " + to_string(g));
      term = term * it->second;
    }
    out += term;
  }
  return out;
}

GeneratorMap psi_map(int n) {
  GeneratorMap map;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      map[gen(GenKind::T, i, j)] = generator_element(GenKind::R, i, j, RConvention::Quasi) +
                                   generator_element(GenKind::R, j, i, RConvention::Quasi);
  return map;
}

GeneratorMap cabling_map(const PartialFunction& f, AlgebraKind kind) {
  if (kind != AlgebraKind::Tr && kind != AlgebraKind::Qtr)
    throw InvalidArgument("cabling maps are defined for tr and qtr");
  if (static_cast<int>(f.image.size()) != f.n) throw InvalidArgument("partial function has wrong arity");
  for (int y : f.image)
    if (y < 0 || y > f.m) throw InvalidArgument("partial function value out of range");
  const auto conv = kind == AlgebraKind::Tr ? RConvention::Triangular : RConvention::Quasi;
  GeneratorMap map;
  for (int i = 1; i <= f.m; ++i)
    for (int j = 1; j <= f.m; ++j) {
      if (i == j || (kind == AlgebraKind::Tr && i > j)) continue;
      Element image;
      for (int x = 1; x <= f.n; ++x)
        for (int y = 1; y <= f.n; ++y)
          if (f.image[x - 1] == i && f.image[y - 1] == j) image += generator_element(GenKind::R, x, y, conv);
      map[gen(GenKind::R, i, j)] = image;
    }
  return map;
}

std::vector<PartialFunction> all_partial_functions(int n, int m) {
  std::vector<PartialFunction> out;
  PartialFunction f{n, m, std::vector<int>(static_cast<std::size_t>(n), 0)};
  while (true) {
    out.push_back(f);
    int k = 0;
    while (k < n && f.image[k] == m) f.image[k++] = 0;
    if (k == n) break;
    ++f.image[k];
  }
  return out;
}

}  // namespace ybalg
