#include "ybalg/univ.hpp"

#include <set>
#include <sstream>

#include "ybalg/error.hpp"
#include "ybalg/ncalg.hpp"

namespace ybalg {

namespace {

void check_letters(const Word& w, int n) {
  for (const auto& g : w)
    if (g.kind != GenKind::R || g.i < 1 || g.i >= g.j || g.j > n)
      throw InvalidArgument("not a letter r_ij with i < j <= " + std::to_string(n) + ": " + to_string(g));
}

void print_tuple(std::ostringstream& os, const std::vector<int>& v) {
  os << '(';
  for (std::size_t s = 0; s < v.size(); ++s) os << (s ? "," : "") << v[s];
  os << ')';
}

}  // namespace

std::string to_string(const UnivLabel& label) {
  std::ostringstream os;
  os << "k=";
  print_tuple(os, label.k);
  os << " l=";
  print_tuple(os, label.l);
  os << " sigma=";
  print_tuple(os, label.sigma);
  return os.str();
}

UnivLabel label_word(const Word& w, int n) {
  if (n < 1) throw InvalidArgument("n must be positive");
  check_letters(w, n);
  UnivLabel out;
  std::vector<int> label_of(w.size(), 0);
  int next = 0;
  for (int f = 1; f <= n; ++f) {
    for (std::size_t p = 0; p < w.size(); ++p)
      if (w[p].i == f) label_of[p] = ++next;
    out.k.push_back(next);
  }
  for (int f = 1; f <= n; ++f) {
    for (std::size_t p = 0; p < w.size(); ++p)
      if (w[p].j == f) out.sigma.push_back(label_of[p]);
    out.l.push_back(static_cast<int>(out.sigma.size()));
  }
  return out;
}

bool satisfies_ab_condition(const Word& w, int n) {
  check_letters(w, n);
  for (int f = 1; f <= n; ++f) {
    bool seen_b = false;
    for (const auto& g : w) {
      if (g.j == f) seen_b = true;
      if (g.i == f && seen_b) return false;
    }
  }
  return true;
}

UnivLabel alpha(const Word& w, int n) {
  check_letters(w, n);
  RewriteSystem rs(n, Convention::Sec6);
  if (!rs.is_legal(rs.letters(w))) throw InvalidArgument("word is not sec6-legal: " + to_string(w));
  if (!satisfies_ab_condition(w, n))
    throw InvalidArgument("word needs reordering (an a follows a b in some factor): " + to_string(w));
  return label_word(w, n);
}

bool peel(const UnivLabel& label, int i, int j, UnivLabel& out) {
  const int n = static_cast<int>(label.k.size());
  if (i < 1 || i >= j || j > n) return false;
  const int k_before = i > 1 ? label.k[i - 2] : 0;
  const int l_before = label.l[j - 2];
  if (label.k[i - 1] == k_before || label.l[j - 1] == l_before) return false;
  if (label.k[j - 1] != label.k[j - 2]) return false;
  const int e = k_before + 1;
  const int f = l_before + 1;
  if (label.sigma[f - 1] != e) return false;
  out = label;
  for (int s = i - 1; s < n; ++s) --out.k[s];
  for (int s = j - 1; s < n; ++s) --out.l[s];
  out.sigma.erase(out.sigma.begin() + (f - 1));
  for (auto& v : out.sigma)
    if (v > e) --v;
  return true;
}

InjectivityReport check_injectivity(int n, std::size_t degree, std::size_t cap) {
  InjectivityReport report;
  report.n = n;
  report.degree = degree;
  const auto words = enumerate_legal(n, degree, Convention::Sec6, cap);
  report.legal_words = words.size();
  std::map<UnivLabel, std::size_t> seen;
  std::set<UnivLabel> alpha_domain;
  for (std::size_t s = 0; s < words.size(); ++s) {
    const bool ab = satisfies_ab_condition(words[s], n);
    if (!ab) ++report.ab_violations;
    else alpha_domain.insert(label_word(words[s], n));
    auto [it, fresh] = seen.emplace(label_word(words[s], n), s);
    if (!fresh && report.collisions.empty()) report.collisions.emplace_back(words[it->second], words[s]);
  }
  report.distinct_labels = seen.size();
  report.distinct_labels_ab = alpha_domain.size();
  return report;
}

DisjointnessReport check_rho_disjointness(int n, std::size_t degree, std::size_t cap) {
  DisjointnessReport report;
  report.n = n;
  report.degree = degree;
  const auto words = enumerate_legal(n, degree, Convention::Sec6, cap);
  std::map<UnivLabel, std::pair<int, int>> owner;
  std::map<UnivLabel, bool> counted;
  for (const auto& w : words) {
    const bool ab = satisfies_ab_condition(w, n);
    if (!ab) ++report.ab_violations;
    if (w.empty()) continue;
    const std::pair<int, int> first{w[0].i, w[0].j};
    ++report.class_sizes[first];
    const UnivLabel label = label_word(w, n);
    auto [it, fresh] = owner.emplace(label, first);
    if (!fresh && it->second != first && !counted[label]) {
      counted[label] = true;
      ++report.cross_class_collisions;
    }
    if (!ab) continue;
    UnivLabel peeled;
    const Word rest(w.begin() + 1, w.end());
    if (!peel(label, first.first, first.second, peeled) || peeled != label_word(rest, n)) ++report.peeling_failures;
  }
  return report;
}

}  // namespace ybalg
