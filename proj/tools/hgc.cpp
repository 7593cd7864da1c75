// hgc: cohomology-ring invariants of closed oriented 3-manifolds from
// Heegaard diagrams (and word models). Structured results go to stdout as
// JSON with stable key order; human-readable summaries go to stderr.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "hgc/verify.hpp"

using json = nlohmann::ordered_json;
using namespace hgc;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitContract = 4;
constexpr int kExitVerify = 5;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

json header(const std::string& kind) {
  json h;
  h["format"] = std::string(kDiagramMagic).substr(0, 3) + "-output";
  h["version"] = kFormatVersion;
  h["orientation"] = kOrientationTag;
  h["kind"] = kind;
  return h;
}

json group_json(const AbelianGroupPresentation& p) {
  json g;
  g["free_rank"] = p.free_rank();
  json tors = json::array();
  for (const Int& t : p.torsion()) tors.push_back(t.str());
  g["torsion"] = tors;
  return g;
}

std::string group_str(const AbelianGroupPresentation& p) {
  std::ostringstream out;
  bool first = true;
  if (p.free_rank() > 0) {
    out << "Z";
    if (p.free_rank() > 1) out << "^" << p.free_rank();
    first = false;
  }
  for (const Int& t : p.torsion()) {
    if (!first) out << " + ";
    out << "Z/" << t;
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

json tensor_json(const CupTensor& t) {
  json out;
  out["rank"] = t.rank();
  json basis = json::array();
  for (int i = 0; i < t.basis_lambda.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < t.basis_lambda.cols(); ++j) row.push_back(t.basis_lambda.at(i, j).str());
    basis.push_back(row);
  }
  out["basis_lambda"] = basis;
  json entries = json::array();
  for (const auto& [key, v] : t.entries) {
    json e;
    e["i"] = std::get<0>(key) + 1;
    e["j"] = std::get<1>(key) + 1;
    e["k"] = std::get<2>(key) + 1;
    e["value"] = v.str();
    entries.push_back(e);
  }
  out["entries"] = entries;
  return out;
}

IntVec parse_coords(const std::string& text) {
  IntVec out;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ','))
    try {
      out.emplace_back(tok);
    } catch (...) {
      throw parse_error("bad coordinate '" + tok + "'");
    }
  return out;
}

int cmd_homology(const std::string& path) {
  std::string text = slurp(path);
  json out = header("homology");
  if (looks_like_word_file(text)) {
    WordSpec ws = parse_word_file(text);
    WordModelManifold m(ws.genus, ws.beta_words);
    out["model"] = "words";
    out["genus"] = ws.genus;
    out["h1"] = group_json(m.h1());
    out["h2_rank"] = m.h2().rank();
    std::cerr << "word model, genus " << ws.genus << ": H1 = " << group_str(m.h1())
              << ", H2 rank " << m.h2().rank() << "\n";
  } else {
    HeegaardDiagram d = build_diagram(parse_diagram_file(text));
    ManifoldHomology mh = manifold_homology(d);
    out["model"] = "diagram";
    out["genus"] = d.genus();
    out["h1"] = group_json(mh.h1);
    out["h2_rank"] = mh.h2.rank();
    std::cerr << "diagram, genus " << d.genus() << ": H1 = " << group_str(mh.h1)
              << ", H2 rank " << mh.h2.rank() << "\n";
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_mu(const std::string& path) {
  HeegaardDiagram d = build_diagram(parse_diagram_file(slurp(path)));
  CupTensor t = mu_tensor(d);
  json out = header("mu");
  out["genus"] = d.genus();
  out["tensor"] = tensor_json(t);
  std::cout << out.dump(2) << "\n";
  std::cerr << "triple-cup tensor on a rank-" << t.rank() << " basis; "
            << t.entries.size() << " independent entries\n";
  return 0;
}

int cmd_mu_words(const std::string& path) {
  WordSpec ws = parse_word_file(slurp(path));
  WordModelManifold m(ws.genus, ws.beta_words);
  CupTensor t = mu_words(m);
  json out = header("mu-words");
  out["genus"] = ws.genus;
  out["tensor"] = tensor_json(t);
  std::cout << out.dump(2) << "\n";
  std::cerr << "triple-cup tensor (word model) on a rank-" << t.rank() << " basis\n";
  return 0;
}

int cmd_phi(const std::string& path, const std::string& xs, const std::string& xps) {
  HeegaardDiagram d = build_diagram(parse_diagram_file(slurp(path)));
  CupTensor t = mu_tensor(d);
  IntVec cx = parse_coords(xs), cxp = parse_coords(xps);
  if (int(cx.size()) != t.rank() || int(cxp.size()) != t.rank())
    throw contract_error("coordinate vectors must have length " + std::to_string(t.rank()));
  auto lift = [&](const IntVec& c) {
    IntVec h(2 * d.genus());
    for (int i = 0; i < t.rank(); ++i)
      for (int j = 0; j < 2 * d.genus(); ++j) h[j] += c[i] * t.basis.at(i, j);
    return h;
  };
  ClassPair x = pair_representatives(d, lift(cx));
  ClassPair xp = pair_representatives(d, lift(cxp));
  PhiResult phi = phi_cycle(d, x, xp);

  json out = header("phi");
  out["genus"] = d.genus();
  json cls;
  json freev = json::array();
  for (const Int& v : phi.class_in_m.free) freev.push_back(v.str());
  json torsv = json::array();
  for (const Int& v : phi.class_in_m.torsion) torsv.push_back(v.str());
  cls["free"] = freev;
  cls["torsion"] = torsv;
  out["class_in_m"] = cls;
  json comps = json::array();
  for (const auto& c : phi.components) {
    json jc;
    jc["family"] = c.family == Family::alpha ? "alpha" : "beta";
    jc["curve"] = c.curve;
    json ids = json::array(), signs = json::array(), values = json::array();
    for (int id : c.cut_ids) ids.push_back(id);
    for (int s : c.signs) signs.push_back(s);
    for (const Int& v : c.values) values.push_back(v.str());
    jc["cut_ids"] = ids;
    jc["signs"] = signs;
    jc["coefficients"] = values;
    comps.push_back(jc);
  }
  out["components"] = comps;
  // pairings against the basis classes: the triple-cup values mu(x, xp, basis_k)
  json pair = json::array();
  for (int k = 0; k < t.rank(); ++k) {
    ClassPair xpp = pair_representatives(d, t.basis.row(k));
    pair.push_back(triple_cup(d, x, xp, xpp).str());
  }
  out["pairings_with_basis"] = pair;
  std::cout << out.dump(2) << "\n";
  std::cerr << "cup 1-cycle computed on the cabled diagram ("
            << phi.cabled.diagram.crossing_count() << " crossings)\n";
  return 0;
}

int cmd_example(const std::string& name, bool words) {
  if (words)
    std::cout << render_word_file(example_words(name));
  else
    std::cout << render_diagram_file(example_diagram(name));
  return 0;
}

int report_and_exit(const VerifyReport& report) {
  int failed = 0;
  for (const CheckResult& c : report.checks) {
    if (c.ok) {
      std::cerr << "[ok]   " << c.name << "\n";
    } else {
      ++failed;
      std::cerr << "[FAIL] " << c.name << ": " << c.detail << "\n";
    }
  }
  json out = header("verify");
  out["checks"] = report.checks.size();
  out["failed"] = failed;
  std::cout << out.dump(2) << "\n";
  if (failed) {
    std::cerr << failed << " identity check(s) failed\n";
    return kExitVerify;
  }
  std::cerr << "all " << report.checks.size() << " identity checks passed\n";
  return 0;
}

int cmd_verify(const std::string& path, bool all_fixtures, int trials) {
  if (all_fixtures) return report_and_exit(verify_all_fixtures(trials));
  std::string text = slurp(path);
  if (looks_like_word_file(text)) return report_and_exit(verify_words(parse_word_file(text), trials));
  return report_and_exit(verify_diagram(parse_diagram_file(text), trials));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cohomology-ring invariants of 3-manifolds from Heegaard diagrams"};
  app.require_subcommand(1);

  std::string path, xcoords, xpcoords, name;
  bool words = false, all_fixtures = false;
  int trials = 20;

  auto* homology = app.add_subcommand("homology", "homology groups of the glued manifold");
  homology->add_option("file", path)->required();

  auto* mu = app.add_subcommand("mu", "triple-cup tensor from a diagram file");
  mu->add_option("file", path)->required();

  auto* muw = app.add_subcommand("mu-words", "triple-cup tensor from a word file");
  muw->add_option("file", path)->required();

  auto* phi = app.add_subcommand("phi", "cup-product 1-cycle for two classes");
  phi->add_option("file", path)->required();
  phi->add_option("--x", xcoords, "first class, coordinates in the canonical basis")->required();
  phi->add_option("--xp", xpcoords, "second class")->required();

  auto* ex = app.add_subcommand("example", "print a built-in example file");
  ex->add_option("name", name, "s3:g | s1s2 | t3 | sgxs1:g | lens:p:q")->required();
  ex->add_flag("--words", words, "print the word file instead of the diagram file");

  auto* verify = app.add_subcommand("verify", "run the identity batteries");
  verify->add_option("file", path);
  verify->add_flag("--all-fixtures", all_fixtures, "verify every built-in example");
  verify->add_option("--trials", trials, "randomized trials per check");

  try {
    app.parse(argc, argv);
    if (homology->parsed()) return cmd_homology(path);
    if (mu->parsed()) return cmd_mu(path);
    if (muw->parsed()) return cmd_mu_words(path);
    if (phi->parsed()) return cmd_phi(path, xcoords, xpcoords);
    if (ex->parsed()) return cmd_example(name, words);
    if (verify->parsed()) {
      if (!all_fixtures && path.empty()) {
        std::cerr << "verify needs a file or --all-fixtures\n";
        return kExitContract;
      }
      return cmd_verify(path, all_fixtures, trials);
    }
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const validation_error& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const verify_error& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return kExitVerify;
  } catch (const contract_error& e) {
    std::cerr << "contract error: " << e.what() << "\n";
    return kExitContract;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitContract;
  }
  return 0;
}
