#include <random>

#include "ybalg/cli.hpp"
#include "ybalg/dual.hpp"
#include "ybalg/liealg.hpp"
#include "ybalg/series.hpp"
#include "ybalg/topo.hpp"
#include "ybalg/univ.hpp"

namespace ybalg::cli {

namespace {

using Task = std::function<std::vector<Check>()>;

Json strings(const std::vector<Integer>& v) {
  Json out = Json::array();
  for (const auto& z : v) out.push_back(to_string(z));
  return out;
}

Json strings(const std::vector<std::size_t>& v) {
  Json out = Json::array();
  for (auto z : v) out.push_back(std::to_string(z));
  return out;
}

std::string tag(const std::string& what, int n) { return what + " n=" + std::to_string(n); }

SeriesKind series_kind(AlgebraKind kind) { return kind == AlgebraKind::Tr ? SeriesKind::Tr : SeriesKind::Qtr; }

std::vector<std::size_t> hilbert_dims(AlgebraKind kind, int n, std::size_t order) {
  const auto h = u_hilbert(series_kind(kind), n, order);
  std::vector<std::size_t> out;
  for (std::size_t d = 0; d <= order; ++d) out.push_back(h[d].get_num().get_ui());
  return out;
}

std::size_t lie_degree_cap(AlgebraKind kind, int n) {
  if (kind == AlgebraKind::Tr) return n <= 3 ? 5 : n == 4 ? 4 : 3;
  return n <= 3 ? 3 : 2;
}

std::size_t univ_degree_cap(int n) { return n <= 3 ? 5 : n == 4 ? 4 : 3; }

Element random_tr_element(int n, std::mt19937_64& rng) {
  std::vector<Generator> letters;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) letters.push_back({GenKind::R, static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)});
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  std::uniform_int_distribution<int> length(2, 4);
  std::uniform_int_distribution<int> coeff(-3, 3);
  Element e;
  for (int t = 0; t < 3; ++t) {
    Word w;
    for (int s = length(rng); s > 0; --s) w.push_back(letters[pick(rng)]);
    const int c = coeff(rng);
    if (c) e.add_term(w, Rat(c));
  }
  return e;
}

std::vector<Check> series_checks(int n) {
  std::vector<Check> out;
  for (auto kind : {SeriesKind::Tr, SeriesKind::Qtr}) {
    const std::string k = kind == SeriesKind::Tr ? "tr" : "qtr";
    out.push_back(make_check(tag("series/p_poly=egf " + k, n), coefficient_strings(p_poly(kind, n)),
                             coefficient_strings(p_poly_via_egf(kind, n))));
  }
  return out;
}

std::vector<Check> dims_checks(AlgebraKind kind, int n, const VerifyOptions& o) {
  const auto cap = default_degree_cap(kind, n).value_or(3);
  const auto p = make_presentation(kind, n, {o.inject_fault});
  std::vector<std::size_t> dims;
  for (std::size_t d = 0; d <= cap; ++d) dims.push_back(graded_dimension(p, d, o.caps));
  return {make_check(tag("ncalg/dims=1/P(-t) " + to_string(kind), n), strings(hilbert_dims(kind, n, cap)),
                     strings(dims))};
}

std::vector<Check> legal_checks(int n) {
  const auto cap = default_degree_cap(AlgebraKind::Tr, n).value_or(3);
  const auto expected = strings(hilbert_dims(AlgebraKind::Tr, n, cap));
  std::vector<Check> out;
  for (auto conv : {Convention::Pro1, Convention::Sec6}) {
    std::vector<Integer> counts;
    for (std::size_t d = 0; d <= cap; ++d) counts.push_back(count_legal(n, d, conv));
    out.push_back(make_check(tag("ncalg/count_legal " + to_string(conv), n), expected, strings(counts)));
  }
  return out;
}

std::vector<Check> normal_form_checks(int n, const VerifyOptions& o) {
  RewriteSystem rs(n, Convention::Pro1);
  std::mt19937_64 rng(20260 + n);
  std::size_t idempotent = 0, independent = 0, sound = 0;
  const std::size_t samples = 10;
  for (std::size_t s = 0; s < samples; ++s) {
    const Element e = random_tr_element(n, rng);
    const Element nf = normal_form(e, rs);
    if (normal_form(nf, rs) == nf) ++idempotent;
    if (normal_form(e, rs, {Strategy::Rightmost}) == nf && normal_form(e, rs, {Strategy::Random, 7 + s}) == nf)
      ++independent;
    if (normal_form_is_sound(e, nf, n, o.caps)) ++sound;
  }
  const Json all = std::to_string(samples);
  return {make_check(tag("ncalg/normal_form idempotent", n), all, std::to_string(idempotent)),
          make_check(tag("ncalg/normal_form strategy-independent", n), all, std::to_string(independent)),
          make_check(tag("ncalg/normal_form sound", n), all, std::to_string(sound))};
}

std::vector<Check> dual_checks(int n, const VerifyOptions& o) {
  std::vector<Check> out;
  const auto basis = a_basis(n);
  std::vector<Integer> stirling, counts;
  std::vector<std::size_t> ranks;
  for (int k = 0; k < n; ++k) {
    stirling.push_back(stirling2(n, n - k));
    counts.push_back(k < static_cast<int>(basis.size()) ? basis[k].size() : 0);
    ranks.push_back(dual_dimension_by_rank(DualKind::A, n, k, o.caps));
  }
  out.push_back(make_check(tag("dual/a_basis=stirling2", n), strings(stirling), strings(counts)));
  out.push_back(make_check(tag("dual/rank A=stirling2", n), strings(stirling), strings(ranks)));

  const auto qa0 = qa0_counts_by_degree(n);
  out.push_back(make_check(tag("dual/qa0 count=P_qtr", n), coefficient_strings(p_poly(SeriesKind::Qtr, n)),
                           strings(qa0)));
  if (n <= 4) {
    std::vector<std::size_t> qa0_ranks;
    for (std::size_t k = 0; k < qa0.size(); ++k) qa0_ranks.push_back(dual_dimension_by_rank(DualKind::QA0, n, k, o.caps));
    out.push_back(make_check(tag("dual/rank QA0=count", n), strings(qa0), strings(qa0_ranks)));
    out.push_back(make_check(tag("dual/qa0 basis spans and is independent", n), true, qa0_basis_is_basis(n, o.caps)));
  }
  if (n <= 5) {
    Json refined = Json::array(), tri = Json::array();
    for (const auto& row : qa0_counts_refined(n)) refined.push_back(strings(row));
    for (const auto& row : trivariate_F(n)) tri.push_back(strings(row));
    out.push_back(make_check(tag("dual/qa0 b-degree refinement=trivariate", n), tri, refined));
  }
  if (n >= 2 && n <= 4)
    for (auto kind : {DualKind::A, DualKind::QA0, DualKind::QA})
      out.push_back(make_check(tag("dual/orthogonality " + to_string(kind), n), true, orthogonality_check(kind, n).ok()));
  return out;
}

std::vector<Check> lie_checks(AlgebraKind kind, int n, const VerifyOptions& o) {
  const auto cap = lie_degree_cap(kind, n);
  const auto p = make_presentation(kind, n, {o.inject_fault});
  std::vector<std::size_t> dims;
  for (std::size_t d = 1; d <= cap; ++d) dims.push_back(lie_graded_dim(p, d, Bracketing::Left, o.caps));
  const auto witt = witt_inversion(u_hilbert(series_kind(kind), n, cap), cap);
  return {make_check(tag("liealg/lie dims=witt " + to_string(kind), n), strings(witt), strings(dims))};
}

std::vector<Check> morphism_checks(int n_max, const VerifyOptions& o) {
  std::vector<Check> out;
  for (int n = 2; n <= n_max; ++n) {
    const auto pb = make_presentation(AlgebraKind::Pb, n);
    const auto qtr = make_presentation(AlgebraKind::Qtr, n);
    out.push_back(make_check(tag("liealg/psi morphism", n), true, check_morphism(pb, qtr, psi_map(n))));
    if (n < 3) continue;  // pb_2 has no relations
    GeneratorMap broken;
    for (const auto& g : pb.generators()) broken[g] = generator_element(GenKind::R, g.i, g.j, RConvention::Quasi);
    out.push_back(make_check(tag("liealg/broken map t->r rejected", n), false, check_morphism(pb, qtr, broken)));
  }
  const int top = std::min(n_max, 3);
  for (auto kind : {AlgebraKind::Tr, AlgebraKind::Qtr}) {
    std::size_t total = 0, passed = 0;
    for (int n = 1; n <= top; ++n)
      for (int m = 1; m <= top; ++m) {
        const auto src = make_presentation(kind, m, {o.inject_fault && kind == AlgebraKind::Tr});
        const auto dst = make_presentation(kind, n, {o.inject_fault && kind == AlgebraKind::Tr});
        for (const auto& f : all_partial_functions(n, m)) {
          ++total;
          if (check_morphism(src, dst, cabling_map(f, kind))) ++passed;
        }
      }
    out.push_back(make_check("liealg/cabling maps " + to_string(kind) + " n,m<=" + std::to_string(top),
                             std::to_string(total), std::to_string(passed)));
  }
  return out;
}

std::vector<Check> qtr0_checks(int n, const VerifyOptions& o) {
  const std::size_t d = n <= 3 ? 4 : 3;
  return {make_check(tag("liealg/qtr0 dims=qtr d<=" + std::to_string(d), n), true, qtr0_dims_equal_qtr(n, d, o.caps))};
}

std::vector<Check> topo_checks(int n, const VerifyOptions& o) {
  std::vector<Check> out;
  const auto p = build_complex(Space::P, n, o.caps);
  out.push_back(make_check(tag("topo/P boundary^2=0", n), true, p.boundary_squares_to_zero()));
  Json point = Json::array();
  for (int k = 0; k < n; ++k) point.push_back({{"rank", k == 0 ? "1" : "0"}, {"torsion", Json::array()}});
  auto table = [](const std::vector<HomologyGroup>& h) {
    Json t = Json::array();
    for (const auto& g : h) t.push_back({{"rank", std::to_string(g.rank)}, {"torsion", strings(g.torsion)}});
    return t;
  };
  out.push_back(make_check(tag("topo/H(P)=point", n), point, table(homology(p))));
  for (auto space : {Space::C, Space::QC}) {
    const auto cc = build_complex(space, n, o.caps);
    const std::string s = to_string(space);
    out.push_back(make_check(tag("topo/" + s + " minimal", n), true, cc.is_minimal()));
    Json expected = Json::array();
    const auto poly = p_poly(space == Space::C ? SeriesKind::Tr : SeriesKind::Qtr, n);
    for (int r = 0; r < n; ++r) {
      const Integer count = space == Space::C ? stirling2(n, n - r) : lah(n, n - r);
      if (count != poly[r]) throw std::logic_error("cell counts disagree with the Hilbert polynomial");
      expected.push_back({{"rank", to_string(count)}, {"torsion", Json::array()}});
    }
    out.push_back(make_check(tag("topo/H(" + s + ")=P_" + (space == Space::C ? "tr" : "qtr"), n), expected,
                             table(homology(cc))));
  }
  out.push_back(make_check(tag("topo/opposite faces cancel", n), true, opposite_faces_cancel(n)));
  out.push_back(make_check(tag("topo/orbit orientation consistent", n), true, orbit_orientation_consistent(n)));
  out.push_back(make_check(tag("topo/euler characteristic", n), "1", to_string(euler_characteristic(n))));
  if (n <= 4) {
    const auto lit = literal_qc_check(n);
    std::vector<Integer> lah_row;
    for (int r = 0; r < n; ++r) lah_row.push_back(lah(n, n - r));
    out.push_back(make_check(tag("topo/literal QC cells=lah", n), strings(lah_row), strings(lit.cell_counts)));
    out.push_back(make_check(tag("topo/literal QC classes", n), true, lit.classes_match_canonical && lit.boundary_matches));
  }
  return out;
}

Json label_json(const UnivLabel& l) { return {{"k", l.k}, {"l", l.l}, {"sigma", l.sigma}}; }

std::vector<Check> univ_checks(int n_max) {
  std::vector<Check> out;
  out.push_back(make_check("univ/alpha worked example",
                           label_json({{3, 5, 6, 6}, {0, 1, 3, 6}, {1, 5, 2, 6, 4, 3}}),
                           label_json(alpha(parse_word("r(3,4)*r(2,4)*r(2,3)*r(1,2)*r(1,3)*r(1,4)"), 4))));
  out.push_back(make_check("univ/alpha r13*r12", label_json({{2, 2, 2}, {0, 1, 2}, {2, 1}}),
                           label_json(alpha(parse_word("r(1,3)*r(1,2)"), 3))));
  for (int n = 2; n <= n_max; ++n)
    for (std::size_t d = 1; d <= univ_degree_cap(n); ++d) {
      const auto inj = check_injectivity(n, d);
      const auto dis = check_rho_disjointness(n, d);
      const std::string suffix = " n=" + std::to_string(n) + " N=" + std::to_string(d);
      out.push_back(make_check("univ/injective" + suffix, std::to_string(inj.legal_words),
                               std::to_string(inj.distinct_labels)));
      out.push_back(make_check("univ/rho classes disjoint" + suffix, "0", std::to_string(dis.cross_class_collisions)));
      out.push_back(make_check("univ/peeling" + suffix, "0", std::to_string(dis.peeling_failures)));
    }
  return out;
}

}  // namespace

Report verify_suite(const VerifyOptions& o) {
  if (o.n_max < 1) throw std::invalid_argument("n_max must be positive");
  std::vector<Task> tasks;
  for (int n = 1; n <= o.n_max; ++n) tasks.push_back([n] { return series_checks(n); });
  for (int n = 2; n <= o.n_max; ++n) {
    for (auto kind : {AlgebraKind::Tr, AlgebraKind::Qtr}) {
      if (kind == AlgebraKind::Qtr && n > 4) continue;
      tasks.push_back([kind, n, &o] { return dims_checks(kind, n, o); });
      tasks.push_back([kind, n, &o] { return lie_checks(kind, n, o); });
    }
    tasks.push_back([n] { return legal_checks(n); });
    if (n >= 3 && n <= 4) tasks.push_back([n, &o] { return qtr0_checks(n, o); });
  }
  for (int n = 3; n <= std::min(o.n_max, 4); ++n) tasks.push_back([n, &o] { return normal_form_checks(n, o); });
  for (int n = 1; n <= std::min(o.n_max, 6); ++n) {
    tasks.push_back([n, &o] { return dual_checks(n, o); });
    tasks.push_back([n, &o] { return topo_checks(n, o); });
  }
  tasks.push_back([&o] { return morphism_checks(std::min(o.n_max, 5), o); });
  tasks.push_back([&o] { return univ_checks(o.n_max); });

  Report report;
  report.command = "verify";
  report.parameters = {{"n", o.n_max}, {"jobs", o.jobs}};
  report.checks = run_tasks(tasks, o.jobs);
  std::size_t passed = 0;
  for (const auto& c : report.checks) passed += c.pass;
  report.results = {{"checks", report.checks.size()}, {"passed", passed}};
  return report;
}

}  // namespace ybalg::cli
