#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "ybalg/cli.hpp"
#include "ybalg/dual.hpp"
#include "ybalg/error.hpp"
#include "ybalg/liealg.hpp"
#include "ybalg/series.hpp"
#include "ybalg/topo.hpp"
#include "ybalg/univ.hpp"

namespace ybalg::cli {

namespace {

struct Options {
  int n = 3;
  std::optional<std::size_t> degree;
  int m = 2;
  std::string algebra = "tr";
  std::string convention = "pro1";
  std::string space = "P";
  std::string format = "json";
  std::string strategy = "leftmost";
  std::string what = "a-basis";
  std::string kind = "A";
  std::string map = "psi";
  std::string sites;
  std::string input;
  std::uint64_t seed = 1;
  std::size_t max_cells = Caps{}.max_cells;
  std::size_t max_columns = Caps{}.max_columns;
  std::size_t max_words = Caps{}.max_words;
  unsigned jobs = 1;
  bool timing = false;
  bool inject_fault = false;
  bool lie = false;
  bool total = false;

  Caps caps() const { return {max_columns, max_words, max_cells}; }
};

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

SeriesKind series_kind(AlgebraKind kind) {
  if (kind == AlgebraKind::Tr) return SeriesKind::Tr;
  if (kind == AlgebraKind::Qtr) return SeriesKind::Qtr;
  throw InvalidArgument("Hilbert series are available for tr and qtr only");
}

void require_n(int n, int lo = 1) {
  if (n < lo) throw InvalidArgument("--n must be at least " + std::to_string(lo));
}

Json label_json(const UnivLabel& l) { return {{"k", l.k}, {"l", l.l}, {"sigma", l.sigma}}; }

Json element_terms(const Element& e) {
  Json out = Json::array();
  for (const auto& [w, c] : e.terms()) out.push_back({{"word", to_string(w)}, {"coeff", to_string(c)}});
  return out;
}

Strategy parse_strategy(const std::string& s) {
  if (s == "leftmost") return Strategy::Leftmost;
  if (s == "rightmost") return Strategy::Rightmost;
  if (s == "random") return Strategy::Random;
  throw InvalidArgument("unknown strategy '" + s + "'");
}

Report hilbert(const Options& o) {
  require_n(o.n);
  const auto kind = series_kind(parse_algebra_kind(o.algebra));
  const std::size_t order = o.degree.value_or(5);
  Report r;
  r.parameters = {{"algebra", o.algebra}, {"n", o.n}, {"degree", order}};
  const auto p = coefficient_strings(p_poly(kind, o.n));
  const auto egf = coefficient_strings(p_poly_via_egf(kind, o.n));
  r.results = {{"coeffs", coefficient_strings(u_hilbert(kind, o.n, order), static_cast<long>(order))},
               {"p_poly", p},
               {"p_poly_egf", egf}};
  r.checks.push_back(make_check("p_poly = egf expansion", p, egf));
  return r;
}

Report dims(const Options& o) {
  require_n(o.n);
  const auto kind = parse_algebra_kind(o.algebra);
  const std::size_t top = o.degree.value_or(3);
  const auto p = make_presentation(kind, o.n, {o.inject_fault});
  Report r;
  r.parameters = {{"algebra", o.algebra}, {"n", o.n}, {"degree", top}};
  std::vector<std::size_t> d_dims;
  for (std::size_t d = 0; d <= top; ++d) d_dims.push_back(graded_dimension(p, d, o.caps()));
  r.results["dims"] = strings(d_dims);
  if (kind != AlgebraKind::Pb) {
    // qtr0 shares the Hilbert series of qtr.
    const auto sk = kind == AlgebraKind::Tr ? SeriesKind::Tr : SeriesKind::Qtr;
    const auto series = coefficient_strings(u_hilbert(sk, o.n, top), static_cast<long>(top));
    r.results["series"] = series;
    r.checks.push_back(make_check("dims = 1/P(-t)", series, r.results["dims"]));
  }
  if (o.lie && top >= 1) {
    std::vector<Integer> as_int;
    for (auto v : d_dims) as_int.push_back(Integer(static_cast<unsigned long>(v)));
    const auto witt = witt_inversion(PolySeries::from_integers(as_int), top);
    std::vector<std::size_t> lie;
    for (std::size_t d = 1; d <= top; ++d) lie.push_back(lie_graded_dim(p, d, Bracketing::Left, o.caps()));
    r.results["lie"] = strings(lie);
    r.results["witt"] = strings(witt);
    r.checks.push_back(make_check("lie dims = witt inversion of dims", strings(witt), strings(lie)));
  }
  return r;
}

Report normal_form_cmd(const Options& o) {
  require_n(o.n, 2);
  if (o.input.empty()) throw InvalidArgument("normal-form needs an element");
  const Element e = parse_element(o.input);
  RewriteSystem rs(o.n, parse_convention(o.convention));
  const Element nf = normal_form(e, rs, {parse_strategy(o.strategy), o.seed});
  Report r;
  r.parameters = {{"n", o.n}, {"convention", o.convention}, {"strategy", o.strategy}, {"element", o.input}};
  r.results = {{"normal_form", to_string(nf)}, {"terms", element_terms(nf)}};
  r.checks.push_back(make_check("difference lies in the relation ideal", true, normal_form_is_sound(e, nf, o.n, o.caps())));
  return r;
}

Report count_legal_cmd(const Options& o) {
  require_n(o.n);
  const std::size_t top = o.degree.value_or(5);
  const auto conv = parse_convention(o.convention);
  Report r;
  r.parameters = {{"n", o.n}, {"degree", top}, {"convention", o.convention}};
  std::vector<Integer> counts;
  for (std::size_t d = 0; d <= top; ++d) counts.push_back(count_legal(o.n, d, conv));
  r.results["counts"] = strings(counts);
  const auto series = coefficient_strings(u_hilbert(SeriesKind::Tr, o.n, top), static_cast<long>(top));
  r.results["dims"] = series;
  r.checks.push_back(make_check("legal words = dims of U(tr_n)", series, r.results["counts"]));
  return r;
}

Report enumerate_legal_cmd(const Options& o) {
  require_n(o.n);
  const std::size_t d = o.degree.value_or(2);
  Report r;
  r.parameters = {{"n", o.n}, {"degree", d}, {"convention", o.convention}};
  const auto words = enumerate_legal(o.n, d, parse_convention(o.convention), o.max_words);
  Json list = Json::array();
  for (const auto& w : words) list.push_back(to_string(w));
  r.results = {{"count", std::to_string(words.size())}, {"words", std::move(list)}};
  return r;
}

Report dual_cmd(const Options& o) {
  require_n(o.n);
  Report r;
  r.parameters = {{"what", o.what}, {"n", o.n}};
  if (o.what == "a-basis") {
    Json by_degree = Json::array();
    std::vector<Integer> counts, expected;
    const auto basis = a_basis(o.n);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      Json level = Json::array();
      for (const auto& m : basis[k]) level.push_back(to_string(m));
      by_degree.push_back(std::move(level));
      counts.push_back(basis[k].size());
      expected.push_back(stirling2(o.n, o.n - static_cast<long>(k)));
    }
    r.results = {{"counts", strings(counts)}, {"basis", std::move(by_degree)}};
    r.checks.push_back(make_check("counts = stirling2(n, n-k)", strings(expected), strings(counts)));
  } else if (o.what == "qa0") {
    Json blocks = Json::array();
    for (const auto& b : qa0_basis(o.n)) {
      Json elems = Json::array();
      for (const auto& m : b.elements) elems.push_back(to_string(m));
      blocks.push_back({{"partition", to_string(b.partition)}, {"elements", std::move(elems)}});
    }
    const auto counts = strings(qa0_counts_by_degree(o.n));
    r.results = {{"counts", counts}, {"blocks", std::move(blocks)}};
    r.checks.push_back(make_check("counts = P_qtr coefficients", coefficient_strings(p_poly(SeriesKind::Qtr, o.n)), counts));
  } else if (o.what == "nbc") {
    std::vector<int> sites;
    if (o.sites.empty()) {
      for (int s = 1; s <= o.n; ++s) sites.push_back(s);
    } else {
      std::stringstream ss(o.sites);
      for (std::string tok; std::getline(ss, tok, ',');) sites.push_back(std::stoi(tok));
    }
    Json list = Json::array();
    const auto basis = nbc_top_basis(sites);
    for (const auto& m : basis) list.push_back(to_string(m));
    r.parameters["sites"] = sites;
    r.results = {{"basis", std::move(list)}};
    r.checks.push_back(make_check("count = (|T|-1)!", to_string(factorial(static_cast<long>(sites.size()) - 1)),
                                  std::to_string(basis.size())));
  } else if (o.what == "orthogonality") {
    const auto kind = parse_dual_kind(o.kind);
    r.parameters["kind"] = o.kind;
    const auto rep = orthogonality_check(kind, o.n);
    r.results = {{"relation_rank", rep.relation_rank},
                 {"dual_relation_rank", rep.dual_relation_rank},
                 {"space_dimension", rep.space_dimension},
                 {"pairings_vanish", rep.pairings_vanish}};
    r.checks.push_back(make_check("relations are orthogonal complements", true, rep.ok()));
  } else if (o.what == "dims") {
    const auto kind = parse_dual_kind(o.kind);
    const std::size_t top = o.degree.value_or(static_cast<std::size_t>(o.n - 1));
    r.parameters["kind"] = o.kind;
    r.parameters["degree"] = top;
    std::vector<std::size_t> dims;
    for (std::size_t k = 0; k <= top; ++k) dims.push_back(dual_dimension_by_rank(kind, o.n, k, o.caps()));
    r.results = {{"dims", strings(dims)}};
  } else {
    throw InvalidArgument("unknown --what '" + o.what + "' (a-basis, qa0, nbc, orthogonality, dims)");
  }
  return r;
}

Report complex_cmd(const Options& o) {
  require_n(o.n);
  const Space space = parse_space(o.space);
  const auto cc = build_complex(space, o.n, o.caps());
  Report r;
  r.parameters = {{"space", o.space}, {"n", o.n}};
  Json boundary = Json::array();
  for (std::size_t k = 1; k < cc.boundary.size(); ++k) {
    Json triplets = Json::array();
    const auto& b = cc.boundary[k];
    for (std::size_t row = 0; row < b.rows(); ++row)
      for (const auto& e : b.row(row)) triplets.push_back({row, e.col, to_string(e.value)});
    boundary.push_back({{"dimension", k}, {"entries", std::move(triplets)}});
  }
  Json table = Json::array();
  std::vector<std::size_t> ranks;
  for (const auto& g : homology(cc)) {
    ranks.push_back(g.rank);
    table.push_back({{"rank", std::to_string(g.rank)}, {"torsion", strings(g.torsion)}});
  }
  r.results = {{"cell_counts", strings(cc.cell_counts())},
               {"homology_ranks", strings(ranks)},
               {"homology", std::move(table)},
               {"cells", cc.cells},
               {"boundary", std::move(boundary)}};
  r.checks.push_back(make_check("boundary squares to zero", true, cc.boundary_squares_to_zero()));
  if (space != Space::P) r.checks.push_back(make_check("complex is minimal", true, cc.is_minimal()));
  return r;
}

Report univ_cmd(const Options& o) {
  require_n(o.n);
  Report r;
  r.parameters = {{"n", o.n}};
  if (!o.input.empty()) {
    r.parameters["word"] = o.input;
    const Word w = parse_word(o.input);
    r.results["label"] = label_json(o.total ? label_word(w, o.n) : alpha(w, o.n));
    return r;
  }
  const std::size_t d = o.degree.value_or(3);
  r.parameters["degree"] = d;
  const auto inj = check_injectivity(o.n, d, o.max_words);
  const auto dis = check_rho_disjointness(o.n, d, o.max_words);
  Json classes = Json::array();
  for (const auto& [ij, size] : dis.class_sizes)
    classes.push_back({{"first", "r(" + std::to_string(ij.first) + "," + std::to_string(ij.second) + ")"},
                       {"size", std::to_string(size)}});
  r.results = {{"legal_words", std::to_string(inj.legal_words)},
               {"distinct_labels", std::to_string(inj.distinct_labels)},
               {"ab_violations", std::to_string(inj.ab_violations)},
               {"distinct_labels_ab", std::to_string(inj.distinct_labels_ab)},
               {"classes", std::move(classes)}};
  if (!inj.collisions.empty())
    r.results["first_collision"] = {to_string(inj.collisions[0].first), to_string(inj.collisions[0].second)};
  r.checks.push_back(make_check("labels are distinct", std::to_string(inj.legal_words), std::to_string(inj.distinct_labels)));
  r.checks.push_back(make_check("first-letter classes are label-disjoint", "0", std::to_string(dis.cross_class_collisions)));
  r.checks.push_back(make_check("peeling recovers the tail label", "0", std::to_string(dis.peeling_failures)));
  return r;
}

Report morphism_cmd(const Options& o) {
  require_n(o.n);
  Report r;
  r.parameters = {{"map", o.map}, {"n", o.n}};
  if (o.map == "psi" || o.map == "broken") {
    const auto pb = make_presentation(AlgebraKind::Pb, o.n);
    const auto qtr = make_presentation(AlgebraKind::Qtr, o.n);
    GeneratorMap g = psi_map(o.n);
    if (o.map == "broken")
      for (auto& [gen, img] : g) img = generator_element(GenKind::R, gen.i, gen.j, RConvention::Quasi);
    const bool ok = check_morphism(pb, qtr, g);
    r.results = {{"is_morphism", ok}};
    r.checks.push_back(make_check(o.map == "psi" ? "psi is a morphism" : "broken map is rejected", o.map == "psi", ok));
  } else if (o.map == "cabling") {
    const auto kind = parse_algebra_kind(o.algebra);
    r.parameters["m"] = o.m;
    r.parameters["algebra"] = o.algebra;
    const auto src = make_presentation(kind, o.m, {o.inject_fault});
    const auto dst = make_presentation(kind, o.n, {o.inject_fault});
    std::size_t total = 0;
    Json failures = Json::array();
    for (const auto& f : all_partial_functions(o.n, o.m)) {
      ++total;
      if (!check_morphism(src, dst, cabling_map(f, kind))) failures.push_back(f.image);
    }
    r.results = {{"maps", std::to_string(total)}, {"failures", failures}};
    r.checks.push_back(make_check("every cabling map is a morphism", "0", std::to_string(failures.size())));
  } else {
    throw InvalidArgument("unknown --map '" + o.map + "' (psi, broken, cabling)");
  }
  return r;
}

Report verify_cmd(const Options& o) {
  VerifyOptions v;
  v.n_max = o.n;
  v.caps = o.caps();
  v.jobs = o.jobs;
  v.inject_fault = o.inject_fault;
  return verify_suite(v);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Yang-Baxter Lie algebras: dimensions, bases, duals, complexes and checks", "ybalg"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--max-cells", o.max_cells, "cap on complex cells");
  app.add_option("--max-columns", o.max_columns, "cap on tensor slice columns");
  app.add_option("--max-words", o.max_words, "cap on enumerated words");
  app.add_option("--jobs", o.jobs, "worker threads for verify")->check(CLI::PositiveNumber);
  app.add_flag("--timing", o.timing, "report wall time outside the results");
  app.add_flag("--inject-fault", o.inject_fault)->group("");
  app.fallthrough();

  auto add_n = [&](CLI::App* sub) { sub->add_option("--n", o.n, "number of sites"); };
  auto add_degree = [&](CLI::App* sub) { sub->add_option("--degree", o.degree, "degree or truncation order"); };
  auto add_algebra = [&](CLI::App* sub) { sub->add_option("--algebra", o.algebra, "tr, qtr, qtr0 or pb"); };
  auto add_convention = [&](CLI::App* sub) { sub->add_option("--convention", o.convention, "pro1 or sec6"); };

  std::map<std::string, std::function<Report(const Options&)>> handlers;
  auto sub = [&](const std::string& name, const std::string& help, std::function<Report(const Options&)> fn) {
    handlers[name] = std::move(fn);
    return app.add_subcommand(name, help);
  };

  auto* h = sub("hilbert", "Hilbert polynomial and series of U(tr_n) or U(qtr_n)", hilbert);
  add_n(h), add_degree(h), add_algebra(h);
  auto* d = sub("dims", "graded dimensions by relation-span rank", dims);
  add_n(d), add_degree(d), add_algebra(d);
  d->add_flag("--lie", o.lie, "also compute Lie algebra dimensions");
  auto* nf = sub("normal-form", "rewrite an element of U(tr_n) to legal words", normal_form_cmd);
  add_n(nf), add_convention(nf);
  nf->add_option("element", o.input, "element, e.g. \"r(2,3)*r(1,2)\"")->required();
  nf->add_option("--strategy", o.strategy, "leftmost, rightmost or random");
  nf->add_option("--seed", o.seed, "seed for the random strategy");
  auto* cl = sub("count-legal", "count legal words by degree", count_legal_cmd);
  add_n(cl), add_degree(cl), add_convention(cl);
  auto* el = sub("enumerate-legal", "list legal words of one degree", enumerate_legal_cmd);
  add_n(el), add_degree(el), add_convention(el);
  auto* du = sub("dual", "quadratic dual algebras", dual_cmd);
  add_n(du), add_degree(du);
  du->add_option("--what", o.what, "a-basis, qa0, nbc, orthogonality or dims");
  du->add_option("--kind", o.kind, "A, QA0 or QA");
  du->add_option("--sites", o.sites, "comma-separated site set for nbc");
  auto* cx = sub("complex", "cellular chain complex and homology", complex_cmd);
  add_n(cx);
  cx->add_option("--space", o.space, "P, C or QC");
  auto* un = sub("univ", "basis labels of words and injectivity checks", univ_cmd);
  add_n(un), add_degree(un);
  un->add_option("word", o.input, "word to label, e.g. \"r(1,3)*r(1,2)\"");
  un->add_flag("--total", o.total, "label without the legality and a/b checks");
  auto* mo = sub("morphism", "check that a generator map respects the relations", morphism_cmd);
  add_n(mo), add_algebra(mo);
  mo->add_option("--map", o.map, "psi, broken or cabling");
  mo->add_option("--m", o.m, "target size of the partial function for cabling");
  auto* ve = sub("verify", "run the cross-module verification suite", verify_cmd);
  add_n(ve);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  const auto start = std::chrono::steady_clock::now();
  Report report;
  try {
    const auto& name = app.get_subcommands().front()->get_name();
    report = handlers.at(name)(o);
    report.command = name;
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << '\n';
    return 2;
  } catch (const std::logic_error& e) {
    err << "internal check failed: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (o.format == "json") {
    Json j = report.to_json();
    if (o.timing) j["timing"] = {{"seconds", seconds}};
    out << j.dump(2) << '\n';
  } else {
    out << render_text(report);
    if (o.timing) out << "time: " << seconds << " s\n";
  }
  return report.ok() ? 0 : 1;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace ybalg::cli
