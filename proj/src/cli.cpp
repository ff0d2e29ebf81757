#include "toricjl/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "toricjl/aomoto.hpp"
#include "toricjl/errors.hpp"
#include "toricjl/io.hpp"
#include "toricjl/jump_loci.hpp"
#include "toricjl/kernel_tests.hpp"
#include "toricjl/lie_ranks.hpp"
#include "toricjl/zcover.hpp"

namespace toricjl::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string file;
  std::string chi = "diag";
  std::string field = "q0";
  std::string w;
  std::string query = "fg";
  std::string out_dir;
  std::vector<std::string> names;
  std::size_t r = 1;
  std::size_t imax = 2;
  std::size_t i = 1;
  std::size_t d = 1;
  std::size_t cap = kDefaultStrataCap;
  std::size_t K = 8;
  std::size_t budget = kDefaultTietzeBudget;
  bool json = false;
  bool oracle = false;
};

struct Report {
  int code = kExitYes;
  Json doc;
  std::string text;
};

struct Setting {
  SimplicialComplex l;
  FieldSpec k;
  Character chi;
};

Json labels_of(const SimplicialComplex& l, VertexSet w) {
  Json a = Json::array();
  for (std::size_t v : face_vertices(w)) a.push_back(l.labels()[v]);
  return a;
}

Json counts(const std::vector<std::size_t>& v) {
  Json a = Json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

Json integers(const std::vector<Integer>& v) {
  Json a = Json::array();
  for (const auto& x : v) {
    if (x.fits_slong_p()) a.push_back(x.get_si());
    else a.push_back(x.get_str());
  }
  return a;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t j = 0; j < parts.size(); ++j) s += (j ? sep : "") + parts[j];
  return s;
}

template <class T>
std::string join_numbers(const std::vector<T>& v) {
  std::vector<std::string> parts;
  for (const auto& x : v) {
    std::ostringstream os;
    os << x;
    parts.push_back(os.str());
  }
  return join(parts, " ");
}

std::string integer_poly(const std::vector<Integer>& c) {
  std::vector<Rational> q;
  for (const auto& x : c) q.emplace_back(x);
  return Poly<Rational>(q, FieldSpec::rationals()).to_string();
}

Setting load(const Options& o, std::ostream& err, bool with_character = true) {
  Setting s{read_complex_file(o.file), FieldSpec::parse(o.field), {}};
  if (with_character) {
    std::vector<std::string> warnings;
    Character raw = parse_character(o.chi, s.l, warnings);
    std::int64_t g = 1;
    s.chi = normalize_character(raw, &g);
    if (g != 1) warnings.push_back("character divided by the gcd " + std::to_string(g) + " of its weights");
    for (const auto& w : warnings) err << "warning: " << w << "\n";
  }
  return s;
}

Json character_json(const Setting& s) {
  Json c = Json::object();
  for (std::size_t v : face_vertices(s.l.vertices())) c[s.l.labels()[v]] = s.chi.m[v];
  return c;
}

Report cmd_betti(const Options& o, std::ostream& err) {
  const Setting s = load(o, err, false);
  Report rep;
  const auto d = toric_betti(s.l);
  const auto defect = flagification_defect(s.l);
  const auto h = reduced_homology(s.l, s.k);
  rep.doc = {{"command", "betti"}, {"field", s.k.name()}, {"toric_betti", counts(d)}, {"flag", !defect.p.has_value()}};
  rep.doc["p"] = defect.p ? Json(*defect.p) : Json("inf");
  rep.doc["coinvariant_rank"] = defect.coinvariant_rank ? Json(*defect.coinvariant_rank) : Json(nullptr);
  rep.doc["reduced_homology"] = counts(h.dims);
  std::ostringstream t;
  t << "d = " << join_numbers(d) << "\n";
  t << "flag: " << (defect.p ? "no" : "yes") << "\n";
  t << "p = " << (defect.p ? std::to_string(*defect.p) : "inf") << "\n";
  if (defect.coinvariant_rank) t << "coinvariant rank = " << *defect.coinvariant_rank << "\n";
  t << "reduced homology (degrees -1..) = " << join_numbers(h.dims) << "\n";
  rep.text = t.str();
  return rep;
}

Report cmd_aomoto(const Options& o, std::ostream& err) {
  const bool by_w = !o.w.empty();
  const Setting s = load(o, err, !by_w);
  const VertexSet w = by_w ? parse_vertex_set(o.w == "-" ? "" : o.w, s.l) : support(s.chi, 0);
  const DegreeOneClass z = by_w ? indicator_class(w, s.l.ambient_size()) : character_class(s.chi);
  const auto direct = aomoto_betti_direct(s.l, z, s.k, o.imax);
  const auto aah = aomoto_betti_aah(s.l, class_support(z, s.k), s.k, o.imax);
  if (direct != aah)
    throw std::logic_error("Aomoto-Betti numbers disagree: direct (" + join_numbers(direct) + ") vs link formula (" +
                           join_numbers(aah) + ")");
  Report rep;
  rep.doc = {{"command", "aomoto"}, {"field", s.k.name()}, {"support", labels_of(s.l, class_support(z, s.k))},
             {"beta", counts(direct)}};
  std::ostringstream t;
  t << "support = " << s.l.face_label(class_support(z, s.k)) << "\n";
  for (std::size_t i = 0; i < direct.size(); ++i) t << "beta_" << i << " = " << direct[i] << "\n";
  if (o.imax >= 1) {
    const std::size_t closed = beta1_closed_form(s.l, class_support(z, s.k));
    if (closed != direct[1]) throw std::logic_error("beta_1 closed form disagrees with the Aomoto complex");
  }
  rep.text = t.str();
  return rep;
}

Report cmd_strata(const Options& o, std::ostream& err, const std::string& variety) {
  const Setting s = load(o, err, false);
  const SubspaceFamily fam = strata(s.l, s.k, o.i, o.d, o.cap);
  Report rep;
  Json members = Json::array();
  std::ostringstream t;
  for (VertexSet w : fam.members) {
    members.push_back(labels_of(s.l, w));
    t << s.l.face_label(w) << "\n";
  }
  rep.doc = {{"command", variety}, {"field", s.k.name()}, {"i", o.i}, {"d", o.d}, {"members", members}};
  rep.text = t.str();
  return rep;
}

std::string format_degree(std::size_t i, const DegreeDecomposition& deg) {
  std::vector<std::string> parts;
  if (deg.free_rank > 0) parts.push_back("L^" + std::to_string(deg.free_rank));
  for (const auto& tc : deg.torsion) {
    std::vector<std::string> es;
    for (std::size_t j = 0; j < tc.multiplicities.size(); ++j)
      if (tc.multiplicities[j] != 0) es.push_back("e" + std::to_string(j + 1) + "=" + std::to_string(tc.multiplicities[j]));
    parts.push_back("[d=" + std::to_string(tc.cls.d) + ": " + join(es, ",") + "]");
  }
  return "H_" + std::to_string(i) + " = " + (parts.empty() ? "0" : join(parts, " (+) "));
}

Json decomposition_json(const ZModuleDecomposition& z) {
  Json degrees = Json::array();
  for (std::size_t i = 0; i < z.degrees.size(); ++i) {
    Json tors = Json::array();
    for (const auto& tc : z.degrees[i].torsion)
      tors.push_back({{"d", tc.cls.d}, {"degree", tc.cls.degree}, {"count", tc.cls.count},
                      {"multiplicities", counts(tc.multiplicities)}});
    degrees.push_back({{"i", i}, {"free_rank", z.degrees[i].free_rank}, {"torsion", tors}});
  }
  return degrees;
}

Report cmd_zcover(const Options& o, std::ostream& err) {
  const Setting s = load(o, err);
  const auto z = full_decomposition(s.l, s.chi, s.k, o.imax);
  Report rep;
  rep.doc = {{"command", "zcover"}, {"field", s.k.name()}, {"characteristic", s.k.characteristic()},
             {"character", character_json(s)}, {"degrees", decomposition_json(z)}};
  std::ostringstream t;
  for (std::size_t i = 0; i < z.degrees.size(); ++i) t << format_degree(i, z.degrees[i]) << "\n";
  if (o.oracle) {
    const auto direct = direct_oracle(s.l, s.chi, s.k, o.imax);
    const bool agree = direct == z;
    rep.doc["oracle"] = {{"agree", agree}, {"degrees", decomposition_json(direct)}};
    if (!agree) {
      err << "oracle mismatch:\n";
      for (std::size_t i = 0; i < direct.degrees.size(); ++i)
        if (!(direct.degrees[i] == z.degrees[i]))
          err << "  two-step: " << format_degree(i, z.degrees[i]) << "\n  oracle:   " << format_degree(i, direct.degrees[i])
              << "\n";
      rep.code = kExitInternal;
    }
    t << "oracle: " << (agree ? "agree" : "MISMATCH") << "\n";
  }
  rep.text = t.str();
  return rep;
}

Report cmd_monodromy(const Options& o, std::ostream& err) {
  const Setting s = load(o, err);
  const auto m = monodromy_trivial(s.l, s.chi, s.k, o.r);
  Report rep;
  rep.code = m.trivial ? kExitYes : kExitNo;
  rep.doc = {{"command", "monodromy"}, {"field", s.k.name()}, {"r", o.r}, {"trivial", m.trivial}};
  if (m.witness)
    rep.doc["witness"] = {{"i", m.witness->i}, {"modulus", m.witness->modulus}, {"W", labels_of(s.l, m.witness->w)},
                          {"beta", m.witness->beta}};
  else
    rep.doc["witness"] = nullptr;
  rep.text = m.trivial ? "trivial\n" : "nontrivial: " + format_witness(*m.witness, s.l) + "\n";
  return rep;
}

Report cmd_finitedim(const Options& o, std::ostream& err) {
  const Setting s = load(o, err);
  const auto f = finite_dim_test(s.l, s.chi, s.k, o.r);
  Report rep;
  rep.code = f.finite ? kExitYes : kExitNo;
  rep.doc = {{"command", "finitedim"}, {"field", s.k.name()}, {"r", o.r}, {"finite", f.finite},
             {"links_acyclic", f.links_acyclic}};
  rep.doc["outside_resonance"] = f.outside_resonance ? Json(*f.outside_resonance) : Json(nullptr);
  rep.doc["failing_degree"] = f.failing_degree ? Json(*f.failing_degree) : Json(nullptr);
  std::ostringstream t;
  if (f.finite) t << "finite\n";
  else t << "infinite: beta_" << *f.failing_degree << "(k<L>, V_0) > 0\n";
  t << "links acyclic: " << (f.links_acyclic ? "yes" : "no") << "\n";
  if (f.outside_resonance) t << "outside resonance: " << (*f.outside_resonance ? "yes" : "no") << "\n";
  rep.text = t.str();
  return rep;
}

Report cmd_kernel(const Options& o, std::ostream& err) {
  const Setting s = load(o, err);
  if (!s.l.is_flag()) err << "warning: complex is not flag; kernel tests use the flag complex of its 1-skeleton\n";
  const Graph g = s.l.one_skeleton();
  FinitenessReport f;
  if (o.query == "fg") f = finitely_generated(g, s.chi);
  else if (o.query == "fp") f = finitely_presented(g, s.chi, o.budget);
  else if (o.query == "fpr") f = fp_r(g, s.chi, o.r);
  else throw ParseError("--query must be fg, fp or fpr");
  Report rep;
  rep.code = f.verdict == Verdict::Yes ? kExitYes : f.verdict == Verdict::No ? kExitNo : kExitRefused;
  const std::string prop = f.property == Finiteness::FPr ? "FP_" + std::to_string(f.r) : to_string(f.property);
  rep.doc = {{"command", "kernel"}, {"property", prop}, {"verdict", to_string(f.verdict)}, {"witness", f.witness}};
  rep.text = prop + ": " + to_string(f.verdict) + "\n" + (f.witness.empty() ? "" : "witness: " + f.witness + "\n");
  return rep;
}

Report cmd_coverring(const Options& o, std::ostream& err) {
  const Setting s = load(o, err);
  const QuotientRing q = cover_cohomology_ring(s.l, s.chi, s.k, o.r);
  Report rep;
  Json basis = Json::array();
  std::ostringstream t;
  t << "dims = " << join_numbers(q.dims()) << "\n";
  for (std::size_t i = 0; i < q.basis.size(); ++i) {
    Json b = Json::array();
    std::vector<std::string> names;
    for (Face f : q.basis[i]) {
      b.push_back(labels_of(s.l, f));
      names.push_back(s.l.face_label(f));
    }
    basis.push_back(b);
    t << "basis_" << i << " = " << join(names, " ") << "\n";
  }
  Json products = Json::array();
  for (const auto& p : q.products) {
    Json coords = Json::array();
    std::vector<std::string> terms;
    for (std::size_t c = 0; c < p.coords.size(); ++c) {
      coords.push_back(p.coords[c].get_str());
      if (sgn(p.coords[c]) != 0) terms.push_back(p.coords[c].get_str() + "*" + s.l.face_label(q.basis[p.i + p.j][c]));
    }
    products.push_back({{"left", {p.i, p.a}}, {"right", {p.j, p.b}}, {"coords", coords}});
    t << s.l.face_label(q.basis[p.i][p.a]) << " . " << s.l.face_label(q.basis[p.j][p.b]) << " = "
      << (terms.empty() ? "0" : join(terms, " + ")) << "\n";
  }
  rep.doc = {{"command", "coverring"}, {"field", s.k.name()}, {"r", o.r}, {"dims", counts(q.dims())},
             {"basis", basis}, {"products", products}};
  rep.text = t.str();
  return rep;
}

Report cmd_lie(const Options& o, std::ostream& err) {
  const Setting s = load(o, err, false);
  const Graph g = s.l.one_skeleton();
  const auto p = clique_polynomial(g);
  const auto q = cut_polynomial(g);
  const auto h = holonomy_dims(raag_holonomy(g), 3);
  Report rep;
  rep.doc = {{"command", "lie"}, {"K", o.K}, {"clique_polynomial", integers(p)}, {"cut_polynomial", integers(q)},
             {"holonomy", integers(h.ranks)}};
  std::ostringstream t;
  t << "P(t) = " << integer_poly(p) << "\n";
  t << "Q(t) = " << integer_poly(q) << "\n";
  t << "h = " << join_numbers(h.ranks) << "\n";
  const auto phi = lcs_ranks(g, o.K);
  const auto theta = chen_ranks(g, o.K);
  rep.doc["phi"] = integers(phi.ranks);
  rep.doc["theta"] = integers(theta.ranks);
  t << "phi = " << join_numbers(phi.ranks) << "\n";
  t << "theta = " << join_numbers(theta.ranks) << "\n";
  rep.text = t.str();
  return rep;
}

Report cmd_fixtures(const Options& o) {
  Report rep;
  const auto names = o.names.empty() ? fixture_names() : o.names;
  std::ostringstream t;
  Json written = Json::array();
  if (!o.out_dir.empty()) {
    std::filesystem::create_directories(o.out_dir);
    for (const auto& name : names) {
      const auto path = std::filesystem::path(o.out_dir) / (name + ".cplx");
      std::ofstream f(path);
      if (!f) throw std::runtime_error("cannot write " + path.string());
      f << format_complex(fixture(name), name);
      written.push_back(path.string());
      t << path.string() << "\n";
    }
  } else if (o.names.empty()) {
    for (const auto& name : names) {
      written.push_back(name);
      t << name << "\n";
    }
  } else {
    for (const auto& name : names) {
      t << format_complex(fixture(name), name);
      written.push_back(name);
    }
  }
  rep.doc = {{"command", "fixtures"}, {"fixtures", written}};
  rep.text = t.str();
  return rep;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of toric complexes and their infinite cyclic covers", "toricjl"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool character, bool field) {
    sub->add_option("complex", o.file, "complex file")->required();
    if (character) sub->add_option("--chi", o.chi, "label=int[,label=int...] or diag");
    if (field) sub->add_option("--field", o.field, "q0 or p<prime>");
    sub->add_flag("--json", o.json, "emit a single JSON document");
  };

  auto* betti = app.add_subcommand("betti", "toric Betti numbers and flagification defect");
  add_common(betti, false, true);
  auto* aomoto = app.add_subcommand("aomoto", "Aomoto-Betti numbers of the exterior face ring");
  add_common(aomoto, true, true);
  aomoto->add_option("--w", o.w, "vertex subset W (comma-separated; '-' for the empty set)");
  aomoto->add_option("--imax", o.imax, "top degree");
  auto* resonance = app.add_subcommand("resonance", "maximal W of the resonance variety R^i_d");
  auto* charvar = app.add_subcommand("charvar", "maximal W of the characteristic variety V^i_d");
  for (auto* sub : {resonance, charvar}) {
    add_common(sub, false, true);
    sub->add_option("-i", o.i, "cohomological degree");
    sub->add_option("-d", o.d, "depth");
    sub->add_option("--cap", o.cap, "vertex enumeration cap");
  }
  auto* zcover = app.add_subcommand("zcover", "Λ-module decomposition of the cover's homology");
  add_common(zcover, true, true);
  zcover->add_option("--imax", o.imax, "top degree");
  zcover->add_flag("--oracle", o.oracle, "cross-check against the direct Smith form computation");
  auto* monodromy = app.add_subcommand("monodromy", "is the Z-action on H_{<=r} of the cover trivial");
  auto* finitedim = app.add_subcommand("finitedim", "is H_{<=r} of the cover finite-dimensional");
  auto* coverring = app.add_subcommand("coverring", "truncated cohomology ring of the cover");
  for (auto* sub : {monodromy, finitedim, coverring}) {
    add_common(sub, true, true);
    sub->add_option("-r", o.r, "degree bound");
  }
  auto* kernel = app.add_subcommand("kernel", "finiteness properties of the Artin kernel");
  add_common(kernel, true, false);
  kernel->add_option("--query", o.query, "fg, fp or fpr");
  kernel->add_option("-r", o.r, "r for the FP_r query");
  kernel->add_option("--budget", o.budget, "Tietze move budget");
  auto* lie = app.add_subcommand("lie", "clique/cut polynomials, LCS, Chen and holonomy ranks");
  add_common(lie, false, false);
  lie->add_option("-K", o.K, "truncation degree");
  auto* fixtures = app.add_subcommand("fixtures", "list, print or write the bundled complexes");
  fixtures->add_option("names", o.names, "fixture names");
  fixtures->add_option("--out", o.out_dir, "directory to write NAME.cplx files into");
  fixtures->add_flag("--json", o.json, "emit a single JSON document");

  std::vector<std::string> argv_store{"toricjl"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    Report rep;
    if (*betti) rep = cmd_betti(o, err);
    else if (*aomoto) rep = cmd_aomoto(o, err);
    else if (*resonance) rep = cmd_strata(o, err, "resonance");
    else if (*charvar) rep = cmd_strata(o, err, "charvar");
    else if (*zcover) rep = cmd_zcover(o, err);
    else if (*monodromy) rep = cmd_monodromy(o, err);
    else if (*finitedim) rep = cmd_finitedim(o, err);
    else if (*kernel) rep = cmd_kernel(o, err);
    else if (*coverring) rep = cmd_coverring(o, err);
    else if (*lie) rep = cmd_lie(o, err);
    else rep = cmd_fixtures(o);
    rep.doc["exit_code"] = rep.code;
    if (o.json) out << rep.doc.dump(2) << "\n";
    else out << rep.text;
    return rep.code;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Refusal& e) {
    if (o.json) out << Json{{"refused", e.what()}, {"witness", e.witness()}, {"exit_code", kExitRefused}}.dump(2) << "\n";
    err << "refused: " << e.what() << "\nwitness: " << e.witness() << "\n";
    return kExitRefused;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace toricjl::cli
