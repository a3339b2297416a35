#include "ybalg/ncalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

#include "ybalg/error.hpp"

namespace ybalg {

// ---------------------------------------------------------------------------
// Relation spans

std::size_t slice_columns(std::size_t m, std::size_t d, const Caps& caps) {
  std::size_t cols = 1;
  for (std::size_t k = 0; k < d; ++k) {
    if (m != 0 && cols > caps.max_columns / m)
      throw ResourceLimitError("degree " + std::to_string(d) + " slice on " + std::to_string(m) +
                               " generators exceeds the column cap of " + std::to_string(caps.max_columns));
    cols *= m;
  }
  if (cols > caps.max_columns)
    throw ResourceLimitError("slice exceeds the column cap of " + std::to_string(caps.max_columns));
  return cols;
}

std::vector<SparseVector<Rat>> ideal_rows(const Presentation& p, std::size_t d, const Caps& caps) {
  const std::size_t m = p.generator_count();
  slice_columns(m, d, caps);
  std::vector<SparseVector<Rat>> rows;
  if (d < 2) return rows;
  std::vector<SparseVector<Rat>> rels;
  for (const auto& rel : p.relations()) rels.push_back(p.encode(rel, 2));
  std::vector<std::size_t> power(d + 1, 1);
  for (std::size_t k = 1; k <= d; ++k) power[k] = power[k - 1] * m;
  for (const auto& rel : rels)
    for (std::size_t left = 0; left + 2 <= d; ++left) {
      const std::size_t right = d - 2 - left;
      for (std::size_t x = 0; x < power[left]; ++x)
        for (std::size_t y = 0; y < power[right]; ++y) {
          SparseVector<Rat> row;
          row.reserve(rel.size());
          for (const auto& e : rel)
            row.push_back({static_cast<std::uint32_t>((x * m * m + e.col) * power[right] + y), e.value});
          rows.push_back(std::move(row));
        }
    }
  return rows;
}

namespace {

RowEchelon span_of(std::vector<SparseVector<Rat>> rows, std::size_t cols) {
  std::vector<std::uint32_t> weight(cols, 0);
  for (const auto& row : rows)
    for (const auto& e : row) ++weight[e.col];
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  RowEchelon ech(cols, std::move(weight));
  for (auto& row : rows) ech.insert(std::move(row));
  return ech;
}

}  // namespace

RelationSpan::RelationSpan(const Presentation& p, std::size_t d, const Caps& caps)
    : p_(p), d_(d), columns_(slice_columns(p.generator_count(), d, caps)),
      echelon_(span_of(ideal_rows(p, d, caps), columns_)) {}

bool RelationSpan::contains(const Element& e) const {
  if (e.is_zero()) return true;
  return echelon_.contains(p_.encode(e, d_));
}

std::size_t RelationSpan::rank_with(const std::vector<Element>& extra) const {
  RowEchelon ech = echelon_;
  for (const auto& e : extra)
    if (!e.is_zero()) ech.insert(p_.encode(e, d_));
  return ech.rank();
}

std::size_t graded_dimension(const Presentation& p, std::size_t d, const Caps& caps) {
  return RelationSpan(p, d, caps).quotient_dimension();
}

std::optional<std::size_t> default_degree_cap(AlgebraKind kind, int n) {
  if (kind == AlgebraKind::Tr) {
    if (n <= 3) return 8;
    if (n == 4) return 6;
    if (n == 5) return 4;
    return std::nullopt;
  }
  if (kind == AlgebraKind::Qtr || kind == AlgebraKind::Qtr0) {
    if (n <= 3) return 5;
    if (n == 4) return 4;
    return std::nullopt;
  }
  if (n <= 4) return 5;
  return std::nullopt;
}

std::string to_string(Convention c) { return c == Convention::Pro1 ? "pro1" : "sec6"; }

Convention parse_convention(std::string_view text) {
  if (text == "pro1") return Convention::Pro1;
  if (text == "sec6") return Convention::Sec6;
  throw InvalidArgument("unknown convention '" + std::string(text) + "'");
}

// ---------------------------------------------------------------------------
// Rewrite system

RewriteSystem::RewriteSystem(int n, Convention conv, std::vector<int> ordering)
    : n_(n), conv_(conv), order_(std::move(ordering)) {
  if (n < 0 || n > 32) throw InvalidArgument("site count out of range");
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) pairs_.emplace_back(i, j);
  const std::size_t m = pairs_.size();
  if (order_.empty()) {
    order_.resize(m);
    std::iota(order_.begin(), order_.end(), 0);
  }
  if (order_.size() != m) throw InvalidArgument("ordering has the wrong number of entries");
  {
    auto sorted = order_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw InvalidArgument("ordering is not injective");
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        if (order_[letter(i, j)] >= order_[letter(j, k)])
          throw InvalidArgument("ordering must satisfy N(i,j) < N(j,k) for i < j < k");

  forbidden_.assign(m * m, 0);
  rules_.assign(m * m, {});
  for (std::uint32_t a = 0; a < m; ++a)
    for (std::uint32_t b = 0; b < m; ++b) {
      auto& rule = rules_[a * m + b];
      // Written for pro1 as a factor (x, y) = (a, b); sec6 is its mirror image.
      auto [x, y] = conv == Convention::Pro1 ? std::pair{a, b} : std::pair{b, a};
      auto [xi, xj] = pairs_[x];
      auto [yi, yj] = pairs_[y];
      auto emit = [&](int c, std::uint32_t p, std::uint32_t q) {
        if (conv == Convention::Pro1) rule.push_back({c, p, q});
        else rule.push_back({c, q, p});
      };
      if (yj == xi) {
        // x = r_jk, y = r_ij
        const int i = yi, j = yj, k = xj;
        const auto ij = letter(i, j), ik = letter(i, k), jk = letter(j, k);
        emit(1, ij, jk);
        emit(1, ij, ik);
        emit(-1, ik, ij);
        emit(1, ik, jk);
        emit(-1, jk, ik);
      } else if (xi != yi && xi != yj && xj != yi && xj != yj && order_[x] > order_[y]) {
        emit(1, y, x);
      }
      forbidden_[a * m + b] = !rule.empty();
    }
}

std::uint32_t RewriteSystem::letter(int i, int j) const {
  if (i < 1 || j > n_ || i >= j) throw InvalidArgument("no letter r(" + std::to_string(i) + "," + std::to_string(j) + ")");
  // Index of (i, j) in the lexicographic list of pairs.
  const int before = (i - 1) * n_ - (i - 1) * i / 2;
  return static_cast<std::uint32_t>(before + (j - i - 1));
}

bool RewriteSystem::is_legal(const std::vector<std::uint32_t>& w) const {
  for (std::size_t s = 0; s + 1 < w.size(); ++s)
    if (forbidden(w[s], w[s + 1])) return false;
  return true;
}

const std::vector<RuleTerm>& RewriteSystem::rule(std::uint32_t a, std::uint32_t b) const {
  return rules_[a * pairs_.size() + b];
}

std::pair<long, long> RewriteSystem::measure(const std::vector<std::uint32_t>& w) const {
  long stretch = 0, weight = 0;
  const std::size_t len = w.size();
  for (std::size_t s = 0; s < len; ++s) {
    auto [i, j] = pairs_[w[s]];
    stretch += j - i;
    const long position = conv_ == Convention::Pro1 ? static_cast<long>(s + 1) : static_cast<long>(len - s);
    weight += position * order_[w[s]];
  }
  return {stretch, weight};
}

std::vector<std::uint32_t> RewriteSystem::letters(const Word& w) const {
  std::vector<std::uint32_t> out;
  out.reserve(w.size());
  for (const auto& g : w) {
    if (g.kind != GenKind::R || g.i >= g.j || g.j > n_)
      throw InvalidArgument("normal forms are only defined over tr_" + std::to_string(n_) + "; got " + to_string(g));
    out.push_back(letter(g.i, g.j));
  }
  return out;
}

Word RewriteSystem::word(const std::vector<std::uint32_t>& letters) const {
  Word w;
  w.reserve(letters.size());
  for (auto l : letters) {
    auto [i, j] = pairs_[l];
    w.push_back(Generator{GenKind::R, static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)});
  }
  return w;
}

// ---------------------------------------------------------------------------
// Normal forms

namespace {

using Letters = std::vector<std::uint32_t>;
using Combination = std::map<Letters, Rat>;

void accumulate(Combination& into, const Letters& w, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = into.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) into.erase(it);
  }
}

class Rewriter {
 public:
  Rewriter(const RewriteSystem& rs, const NormalFormOptions& options)
      : rs_(rs), options_(options), rng_(options.seed) {}

  Combination run(const Combination& input) {
    if (options_.strategy == Strategy::Leftmost) {
      Combination out;
      for (const auto& [w, c] : input)
        for (const auto& [v, d] : leftmost(w)) accumulate(out, v, c * d);
      return out;
    }
    Combination current = input;
    while (true) {
      auto it = std::find_if(current.begin(), current.end(), [&](const auto& t) { return !rs_.is_legal(t.first); });
      if (it == current.end()) return current;
      Letters w = it->first;
      Rat c = it->second;
      current.erase(it);
      for (const auto& [v, d] : step(w, pick_position(w))) accumulate(current, v, c * d);
    }
  }

 private:
  std::vector<std::size_t> forbidden_positions(const Letters& w) const {
    std::vector<std::size_t> out;
    for (std::size_t s = 0; s + 1 < w.size(); ++s)
      if (rs_.forbidden(w[s], w[s + 1])) out.push_back(s);
    return out;
  }

  std::size_t pick_position(const Letters& w) {
    auto positions = forbidden_positions(w);
    switch (options_.strategy) {
      case Strategy::Leftmost: return positions.front();
      case Strategy::Rightmost: return positions.back();
      case Strategy::Random: {
        std::uniform_int_distribution<std::size_t> pick(0, positions.size() - 1);
        return positions[pick(rng_)];
      }
    }
    return positions.front();
  }

  Combination step(const Letters& w, std::size_t s) const {
    Combination out;
    const auto before = rs_.measure(w);
    for (const auto& term : rs_.rule(w[s], w[s + 1])) {
      Letters v = w;
      v[s] = term.first;
      v[s + 1] = term.second;
      if (options_.check_measure && !(rs_.measure(v) > before))
        throw std::logic_error("rewrite step does not increase (stretch, weight)");
      accumulate(out, v, Rat(term.coeff));
    }
    return out;
  }

  const Combination& leftmost(const Letters& w) {
    auto found = memo_.find(w);
    if (found != memo_.end()) return found->second;
    Combination result;
    auto positions = forbidden_positions(w);
    if (positions.empty()) {
      result.emplace(w, Rat(1));
    } else {
      for (const auto& [v, c] : step(w, positions.front())) {
        const Combination& sub = leftmost(v);
        for (const auto& [u, d] : sub) accumulate(result, u, c * d);
      }
    }
    return memo_.emplace(w, std::move(result)).first->second;
  }

  const RewriteSystem& rs_;
  NormalFormOptions options_;
  std::mt19937_64 rng_;
  std::map<Letters, Combination> memo_;
};

}  // namespace

Element normal_form(const Element& e, const RewriteSystem& rs, const NormalFormOptions& options) {
  Combination input;
  for (const auto& [w, c] : e.terms()) accumulate(input, rs.letters(w), c);
  Rewriter rewriter(rs, options);
  Element out;
  for (const auto& [w, c] : rewriter.run(input)) out.add_term(rs.word(w), c);
  return out;
}

bool normal_form_is_sound(const Element& e, const Element& nf, int n, const Caps& caps) {
  std::map<std::size_t, Element> by_degree;
  const Element diff = e - nf;
  for (const auto& [w, c] : diff.terms()) by_degree[w.size()].add_term(w, c);
  Presentation tr = make_presentation(AlgebraKind::Tr, n);
  for (const auto& [d, part] : by_degree) {
    if (d < 2) return false;
    if (!RelationSpan(tr, d, caps).contains(part)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Legal words

Integer count_legal(int n, std::size_t d, Convention conv) {
  if (d == 0) return 1;
  RewriteSystem rs(n, conv);
  const std::size_t m = rs.letter_count();
  std::vector<Integer> ending(m, 1);
  for (std::size_t len = 1; len < d; ++len) {
    std::vector<Integer> next(m, 0);
    for (std::uint32_t a = 0; a < m; ++a)
      for (std::uint32_t b = 0; b < m; ++b)
        if (!rs.forbidden(a, b)) next[b] += ending[a];
    ending = std::move(next);
  }
  Integer total = 0;
  for (const auto& c : ending) total += c;
  return total;
}

std::vector<Word> enumerate_legal(int n, std::size_t d, Convention conv, std::size_t cap) {
  if (count_legal(n, d, conv) > cap)
    throw ResourceLimitError("more than " + std::to_string(cap) + " legal words");
  RewriteSystem rs(n, conv);
  const auto m = static_cast<std::uint32_t>(rs.letter_count());
  std::vector<Word> out;
  Letters w;
  auto dfs = [&](auto&& self) -> void {
    if (w.size() == d) {
      out.push_back(rs.word(w));
      return;
    }
    for (std::uint32_t a = 0; a < m; ++a) {
      if (!w.empty() && rs.forbidden(w.back(), a)) continue;
      w.push_back(a);
      self(self);
      w.pop_back();
    }
  };
  dfs(dfs);
  return out;
}

}  // namespace ybalg
