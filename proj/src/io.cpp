#include "hgc/io.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hgc {

namespace {

// ---- built-in examples ----------------------------------------------------

// Genus-g diagram of the 3-sphere: one positive crossing per handle, handles
// chained by a finger of beta_i across alpha_{i+1} so the union stays
// connected.
DiagramSpec make_s3(int g) {
  if (g < 1) throw validation_error("s3 wants genus >= 1");
  DiagramSpec s;
  s.genus = g;
  s.alpha_curves = s.beta_curves = g;
  for (int i = 0; i < g; ++i) s.crossings.push_back(Crossing{i, i, 0, i, 0, 1});
  for (int i = 0; i + 1 < g; ++i) {
    int idF = g + 2 * i, idG = g + 2 * i + 1;
    // beta_i passes X then Y; alpha_{i+1} meets them as Y then X
    s.crossings.push_back(Crossing{idF, i + 1, 2, i, 1, -1});
    s.crossings.push_back(Crossing{idG, i + 1, 1, i, 2, 1});
  }
  return s;
}

// Genus-1 diagram of S^1 x S^2: beta is parallel to alpha in homology and
// meets it in two cancelling pairs, arranged so the union graph still fills
// the torus.
DiagramSpec make_s1s2() {
  DiagramSpec s;
  s.genus = 1;
  s.alpha_curves = s.beta_curves = 1;
  for (int k = 0; k < 4; ++k) s.crossings.push_back(Crossing{k, 0, k, 0, k, k < 2 ? 1 : -1});
  return s;
}

// Genus-1 diagram with p same-sign crossings and twist q.
DiagramSpec make_lens(int p, int q) {
  if (p < 1) throw validation_error("lens wants p >= 1");
  if (p == 1) q = 0;
  else if (q < 1 || q >= p || std::gcd(p, q) != 1)
    throw validation_error("lens wants 0 < q < p with gcd(p, q) = 1");
  DiagramSpec s;
  s.genus = 1;
  s.alpha_curves = s.beta_curves = 1;
  for (int k = 0; k < p; ++k) s.crossings.push_back(Crossing{k, 0, (k * q) % p, 0, k, 1});
  return s;
}

// Genus-3 diagram of the 3-torus from the cube splitting: one handle per
// axis; each beta curve runs through two of the three handle pairs.
DiagramSpec make_t3() {
  DiagramSpec s;
  s.genus = 3;
  s.alpha_curves = s.beta_curves = 3;
  // id, alpha, apos, beta, bpos, sign; beta curves oriented so that each
  // [beta_i] equals [alpha_i] on the nose
  s.crossings = {
      {0, 1, 2, 0, 3, -1}, {1, 2, 3, 0, 2, -1}, {2, 1, 0, 0, 1, 1},  {3, 2, 1, 0, 0, 1},
      {4, 0, 2, 1, 0, 1},  {5, 2, 2, 1, 1, 1},  {6, 0, 0, 1, 2, -1}, {7, 2, 0, 1, 3, -1},
      {8, 0, 1, 2, 3, -1}, {9, 1, 1, 2, 2, -1}, {10, 0, 3, 2, 1, 1}, {11, 1, 3, 2, 0, 1},
  };
  return s;
}

// Genus 2g+1 diagram of (genus-g surface) x S^1: thickened 4g-gon with one
// vertical handle. One radial curve per horizontal handle plus the polygon
// curve; angles are measured in polygon sectors (a quarter turn is g).
DiagramSpec make_sgxs1(int g) {
  if (g < 1) throw validation_error("sgxs1 wants g >= 1");
  int sides = 4 * g;
  auto norm = [&](int a) { return ((a % sides) + sides) % sides; };

  // Layout of the handle feet around the polygon, chosen so consecutive
  // passes of the polygon curve sit in adjacent sectors. Within each block
  // the odd handle leads, which fixes the sign of the symplectic pattern.
  std::vector<int> pos_plus(2 * g), pos_minus(2 * g);
  for (int b = 0; b < g; ++b) {
    pos_plus[2 * b + 1] = 4 * b;
    pos_minus[2 * b] = 4 * b + 1;
    pos_minus[2 * b + 1] = 4 * b + 2;
    pos_plus[2 * b] = 4 * b + 3;
  }

  struct Rec {
    int id, alpha, beta, bpos, sign, angle;
  };
  std::vector<Rec> recs;
  int t_curve = 2 * g;
  int id = 0;
  for (int c = 0; c < 2 * g; ++c) {
    int tp = pos_plus[c], tq = pos_minus[c];
    // Radial curve through handle c: in at the plus foot, down to the
    // vertical handle, back around the outside, and home. Its class is the
    // class of the partner handle's meridian, so it carries that beta label,
    // with the orientation chosen to make the classes equal on the nose.
    int label = c % 2 == 0 ? c + 1 : c - 1;
    bool flip = pos_plus[c] % 4 == 0;
    auto bp = [&](int k) { return flip ? 3 - k : k; };
    int sg = flip ? -1 : 1;
    recs.push_back(Rec{id + 0, c, label, bp(0), sg, norm(tp + 2 * g)});
    recs.push_back(Rec{id + 1, t_curve, label, bp(1), sg, tq});
    recs.push_back(Rec{id + 2, c, label, bp(2), -sg, tp});
    recs.push_back(Rec{id + 3, t_curve, label, bp(3), -sg, tp});
    id += 4;
  }
  int poly = 2 * g;
  for (int st = 0; st < sides; ++st) {
    int b = st / 4, r = st % 4;
    int c = r % 2 == 0 ? 2 * b + 1 : 2 * b;
    bool positive = r < 2;
    int tp = pos_plus[c];
    recs.push_back(
        Rec{id++, c, poly, st, positive ? 1 : -1, norm(positive ? tp - g : tp + g)});
  }

  DiagramSpec s;
  s.genus = 2 * g + 1;
  s.alpha_curves = s.beta_curves = 2 * g + 1;
  for (int c = 0; c <= 2 * g; ++c) {
    std::vector<std::pair<int, int>> at;  // (angle, rec index)
    for (int i = 0; i < int(recs.size()); ++i)
      if (recs[i].alpha == c) at.emplace_back(recs[i].angle, i);
    std::sort(at.begin(), at.end());
    for (int k = 0; k < int(at.size()); ++k) {
      const Rec& r = recs[at[k].second];
      s.crossings.push_back(Crossing{r.id, c, k, r.beta, r.bpos, r.sign});
    }
  }
  return s;
}

struct ParsedName {
  std::string base;
  std::vector<int> args;
};

ParsedName split_name(const std::string& name) {
  ParsedName p;
  std::stringstream in(name);
  std::getline(in, p.base, ':');
  std::string tok;
  while (std::getline(in, tok, ':')) {
    try {
      p.args.push_back(std::stoi(tok));
    } catch (...) {
      throw validation_error("bad example parameter '" + tok + "'");
    }
  }
  return p;
}

}  // namespace

std::vector<std::string> example_names() {
  return {"s3:g", "s1s2", "t3", "sgxs1:g", "lens:p:q"};
}

DiagramSpec example_diagram(const std::string& name) {
  ParsedName p = split_name(name);
  if (p.base == "s3" && p.args.size() == 1) return make_s3(p.args[0]);
  if (p.base == "s1s2" && p.args.empty()) return make_s1s2();
  if (p.base == "t3" && p.args.empty()) return make_t3();
  if (p.base == "sgxs1" && p.args.size() == 1) return make_sgxs1(p.args[0]);
  if (p.base == "lens" && p.args.size() == 2) return make_lens(p.args[0], p.args[1]);
  throw validation_error("unknown example '" + name +
                         "' (try s3:g, s1s2, t3, sgxs1:g, lens:p:q)");
}

WordSpec example_words(const std::string& name) {
  ParsedName p = split_name(name);
  WordSpec w;
  if (p.base == "s3" && p.args.size() == 1) {
    w.genus = p.args[0];
    for (int i = 0; i < w.genus; ++i) w.beta_words.push_back(FreeWord::y(i));
    return w;
  }
  if (p.base == "s1s2" && p.args.empty()) {
    w.genus = 1;
    w.beta_words.push_back(FreeWord{});
    return w;
  }
  if (p.base == "t3" && p.args.empty()) {
    w.genus = 3;
    for (int j = 0; j < 3; ++j) {
      int k = (j + 1) % 3, l = (j + 2) % 3;
      w.beta_words.push_back(FreeWord::x(j) * commutator(FreeWord::y(k), FreeWord::y(l)));
    }
    return w;
  }
  if (p.base == "sgxs1" && p.args.size() == 1) {
    int g = p.args[0];
    w.genus = 2 * g + 1;
    for (int i = 0; i < 2 * g; ++i) {
      int partner = i % 2 == 0 ? i + 1 : i - 1;
      FreeWord c = commutator(FreeWord::y(partner), FreeWord::y(2 * g));
      if (i % 2 == 1) c = c.inverse();
      w.beta_words.push_back(FreeWord::x(i) * c);
    }
    FreeWord relator;
    for (int b = 0; b < g; ++b)
      relator = relator * commutator(FreeWord::y(2 * b), FreeWord::y(2 * b + 1));
    w.beta_words.push_back(FreeWord::x(2 * g) * relator);
    return w;
  }
  if (p.base == "lens" && p.args.size() == 2) {
    make_lens(p.args[0], p.args[1]);  // parameter validation
    w.genus = 1;
    w.beta_words.push_back(FreeWord::x(0).pow(p.args[1] == 0 ? 1 : p.args[1]) *
                           FreeWord::y(0).pow(p.args[0]));
    return w;
  }
  throw validation_error("no word model defined for example '" + name + "'");
}

// ---- file formats ----------------------------------------------------------

std::string render_diagram_file(const DiagramSpec& spec) {
  std::ostringstream out;
  out << kDiagramMagic << ' ' << kFormatVersion << '\n';
  out << "orientation " << kOrientationTag << '\n';
  out << "genus " << spec.genus << '\n';
  std::vector<int> ac(spec.alpha_curves, 0), bc(spec.beta_curves, 0);
  for (const Crossing& c : spec.crossings) {
    if (c.alpha >= 0 && c.alpha < spec.alpha_curves) ++ac[c.alpha];
    if (c.beta >= 0 && c.beta < spec.beta_curves) ++bc[c.beta];
  }
  for (int i = 0; i < spec.alpha_curves; ++i) out << "alpha " << i << ' ' << ac[i] << '\n';
  for (int i = 0; i < spec.beta_curves; ++i) out << "beta " << i << ' ' << bc[i] << '\n';
  for (const Crossing& c : spec.crossings)
    out << "crossing " << c.id << ' ' << c.alpha << ' ' << c.apos << ' ' << c.beta << ' '
        << c.bpos << ' ' << (c.sign > 0 ? "+1" : "-1") << '\n';
  return out.str();
}

std::string render_word_file(const WordSpec& spec) {
  std::ostringstream out;
  out << kWordMagic << ' ' << kFormatVersion << '\n';
  out << "genus " << spec.genus << '\n';
  for (const FreeWord& w : spec.beta_words) out << (w.is_identity() ? "" : w.str()) << '\n';
  return out.str();
}

namespace {

struct LineReader {
  std::istringstream in;
  int line_no = 0;
  explicit LineReader(const std::string& text) : in(text) {}
  bool next(std::string& line) {
    if (!std::getline(in, line)) return false;
    ++line_no;
    return true;
  }
};

[[noreturn]] void fail(const LineReader& r, const std::string& msg, int col = 1) {
  throw parse_error(msg, r.line_no, col);
}

}  // namespace

DiagramSpec parse_diagram_file(const std::string& text) {
  LineReader r(text);
  std::string line;
  if (!r.next(line)) throw parse_error("empty file", 1, 1);
  {
    std::istringstream h(line);
    std::string magic, version;
    h >> magic >> version;
    if (magic != kDiagramMagic) fail(r, "not a diagram file (bad magic)");
    if (version != kFormatVersion) fail(r, "unsupported format version '" + version + "'");
  }
  if (!r.next(line)) throw parse_error("missing orientation line", r.line_no + 1, 1);
  {
    std::istringstream h(line);
    std::string key, tag;
    h >> key >> tag;
    if (key != "orientation") fail(r, "expected orientation line");
    if (tag != kOrientationTag)
      fail(r, "orientation convention '" + tag + "' is not the built-in '" +
                  std::string(kOrientationTag) + "'");
  }
  DiagramSpec spec;
  if (!r.next(line)) throw parse_error("missing genus line", r.line_no + 1, 1);
  {
    std::istringstream h(line);
    std::string key;
    h >> key >> spec.genus;
    if (key != "genus" || h.fail()) fail(r, "expected 'genus <n>'");
  }
  std::vector<int> adecl, bdecl;
  bool saw_crossing = false;
  while (r.next(line)) {
    if (line.empty()) continue;
    std::istringstream h(line);
    std::string key;
    h >> key;
    if (key == "alpha" || key == "beta") {
      if (saw_crossing) fail(r, "curve declarations must precede crossings");
      int idx = -1, cnt = -1;
      h >> idx >> cnt;
      if (h.fail() || idx < 0 || cnt < 0) fail(r, "expected '" + key + " <index> <count>'");
      auto& decl = key == "alpha" ? adecl : bdecl;
      if (idx != int(decl.size())) fail(r, key + " curves must be declared in order");
      decl.push_back(cnt);
    } else if (key == "crossing") {
      saw_crossing = true;
      Crossing c;
      std::string sign;
      h >> c.id >> c.alpha >> c.apos >> c.beta >> c.bpos >> sign;
      if (h.fail()) fail(r, "expected 'crossing <id> <alpha> <apos> <beta> <bpos> <sign>'");
      if (sign == "+1" || sign == "1")
        c.sign = 1;
      else if (sign == "-1")
        c.sign = -1;
      else
        fail(r, "bad crossing sign '" + sign + "'");
      spec.crossings.push_back(c);
    } else {
      fail(r, "unknown directive '" + key + "'");
    }
  }
  spec.alpha_curves = int(adecl.size());
  spec.beta_curves = int(bdecl.size());
  if (spec.alpha_curves == 0 || spec.beta_curves == 0)
    throw parse_error("no curves declared", r.line_no, 1);
  std::vector<int> ac(spec.alpha_curves, 0), bc(spec.beta_curves, 0);
  for (const Crossing& c : spec.crossings) {
    if (c.alpha < 0 || c.alpha >= spec.alpha_curves)
      throw validation_error("crossing " + std::to_string(c.id) +
                             " references undeclared alpha curve " + std::to_string(c.alpha));
    if (c.beta < 0 || c.beta >= spec.beta_curves)
      throw validation_error("crossing " + std::to_string(c.id) +
                             " references undeclared beta curve " + std::to_string(c.beta));
    ++ac[c.alpha];
    ++bc[c.beta];
  }
  for (int i = 0; i < spec.alpha_curves; ++i)
    if (ac[i] != adecl[i])
      throw validation_error("alpha curve " + std::to_string(i) + " declares " +
                             std::to_string(adecl[i]) + " crossings but has " +
                             std::to_string(ac[i]));
  for (int i = 0; i < spec.beta_curves; ++i)
    if (bc[i] != bdecl[i])
      throw validation_error("beta curve " + std::to_string(i) + " declares " +
                             std::to_string(bdecl[i]) + " crossings but has " +
                             std::to_string(bc[i]));
  return spec;
}

WordSpec parse_word_file(const std::string& text) {
  LineReader r(text);
  std::string line;
  if (!r.next(line)) throw parse_error("empty file", 1, 1);
  {
    std::istringstream h(line);
    std::string magic, version;
    h >> magic >> version;
    if (magic != kWordMagic) fail(r, "not a word file (bad magic)");
    if (version != kFormatVersion) fail(r, "unsupported format version '" + version + "'");
  }
  WordSpec spec;
  if (!r.next(line)) throw parse_error("missing genus line", r.line_no + 1, 1);
  {
    std::istringstream h(line);
    std::string key;
    h >> key >> spec.genus;
    if (key != "genus" || h.fail() || spec.genus < 1) fail(r, "expected 'genus <n>'");
  }
  for (int j = 0; j < spec.genus; ++j) {
    if (!r.next(line))
      throw parse_error("expected " + std::to_string(spec.genus) + " word lines",
                        r.line_no + 1, 1);
    try {
      spec.beta_words.push_back(FreeWord::parse(line, spec.genus));
    } catch (const parse_error& e) {
      throw parse_error(std::string(e.what()), r.line_no, 1);
    }
  }
  return spec;
}

bool looks_like_word_file(const std::string& text) {
  return text.rfind(kWordMagic, 0) == 0;
}

HeegaardDiagram build_diagram(const DiagramSpec& spec) {
  return HeegaardDiagram::build(spec.crossings, spec.genus, spec.alpha_curves,
                                spec.beta_curves);
}

}  // namespace hgc
