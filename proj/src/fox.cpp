#include "hgc/fox.hpp"

#include <algorithm>
#include <sstream>

namespace hgc {

namespace {

// Word-model orientation constant, fixed so that the two pipelines agree on
// the 3-torus fixture.
constexpr int kWordSign = 1;

// FNV-1a, used as the integrity hash of the table asset.
std::string fnv1a(const std::string& data) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex << h;
  return out.str();
}

}  // namespace

FoxTable FoxTable::standard(int genus) {
  if (genus < 1) throw contract_error("fox table wants genus >= 1");
  FoxTable t;
  t.g_ = genus;
  t.t_.resize(size_t(2 * genus) * 2 * genus);
  // Attachment points along the boundary, in counterclockwise order from the
  // base point: x_i enters at 4i+1 and returns at 4i+3, y_i at 4i+2 / 4i+4.
  auto points = [](int m) {
    int i = m / 2;
    return m % 2 == 0 ? std::pair<int, int>{4 * i + 1, 4 * i + 3}
                      : std::pair<int, int>{4 * i + 2, 4 * i + 4};
  };
  for (int u = 0; u < 2 * genus; ++u)
    for (int v = 0; v < 2 * genus; ++v) {
      GroupRingElement e;
      FreeWord wu = FreeWord::generator(u), wv = FreeWord::generator(v);
      if (u == v) {
        e.add_term(wu, 1);
        e.add_term(FreeWord{}, -1);
      } else {
        auto [p1, p2] = points(u);
        auto [q1, q2] = points(v);
        if (p1 < q1) e.add_term(wv, 1);
        if (p1 < q2) e.add_term(FreeWord{}, -1);
        if (p2 < q1) e.add_term(wu * wv, -1);
        if (p2 < q2) e.add_term(wu, 1);
      }
      t.t_[size_t(u) * 2 * genus + v] = std::move(e);
    }
  return t;
}

std::string FoxTable::serialize() const {
  std::ostringstream body;
  body << "genus " << g_ << '\n';
  for (int u = 0; u < 2 * g_; ++u)
    for (int v = 0; v < 2 * g_; ++v) {
      body << "pair " << u << ' ' << v;
      for (const auto& [w, c] : pair(u, v).terms())
        body << " ; " << c << " " << (w.is_identity() ? "1" : w.str());
      body << '\n';
    }
  return "hgc-fox-table v1\nhash " + fnv1a(body.str()) + "\n" + body.str();
}

FoxTable FoxTable::deserialize(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "hgc-fox-table v1")
    throw parse_error("not a fox table asset");
  if (!std::getline(in, line) || line.rfind("hash ", 0) != 0)
    throw parse_error("fox table asset is missing its hash");
  std::string stated = line.substr(5);
  std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (fnv1a(body) != stated) throw validation_error("fox table asset failed its integrity hash");

  std::istringstream rest(body);
  if (!std::getline(rest, line) || line.rfind("genus ", 0) != 0)
    throw parse_error("fox table asset missing genus");
  int g = std::stoi(line.substr(6));
  FoxTable t;
  t.g_ = g;
  t.t_.resize(size_t(2 * g) * 2 * g);
  while (std::getline(rest, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string key;
    int u, v;
    ls >> key >> u >> v;
    if (key != "pair" || ls.fail()) throw parse_error("bad fox table line: " + line);
    GroupRingElement e;
    std::string rest_of_line;
    std::getline(ls, rest_of_line);
    std::istringstream terms(rest_of_line);
    std::string term;
    while (std::getline(terms, term, ';')) {
      std::istringstream ts(term);
      std::string coeff_str;
      if (!(ts >> coeff_str)) continue;
      Int coeff(coeff_str);
      std::string word_part, tok;
      while (ts >> tok) word_part += tok + " ";
      FreeWord w = word_part == "1 " ? FreeWord{} : FreeWord::parse(word_part, g);
      e.add_term(w, coeff);
    }
    t.t_[size_t(u) * 2 * g + v] = std::move(e);
  }
  return t;
}

namespace {

GroupRingElement eta_letters(int16_t z, int16_t s, const FoxTable& t) {
  if (z > 0 && s > 0) return t.pair(z - 1, s - 1);
  if (z < 0) {
    // eta(u^-1, .) = -u^-1 eta(u, .)
    GroupRingElement inv(FreeWord::generator(-z - 1, -1));
    return -(inv * eta_letters(int16_t(-z), s, t));
  }
  // eta(., u^-1) = -eta(., u) u^-1
  GroupRingElement inv(FreeWord::generator(-s - 1, -1));
  return -(eta_letters(z, int16_t(-s), t) * inv);
}

GroupRingElement eta_words(const FreeWord& a, const FreeWord& b, const FoxTable& t) {
  if (a.is_identity() || b.is_identity()) return {};
  if (a.length() > 1) {
    int16_t z = a.letters()[0];
    FreeWord rest(std::vector<int16_t>(a.letters().begin() + 1, a.letters().end()));
    return GroupRingElement(FreeWord::generator(std::abs(z) - 1, z > 0 ? 1 : -1)) *
               eta_words(rest, b, t) +
           eta_words(FreeWord::generator(std::abs(z) - 1, z > 0 ? 1 : -1), b, t);
  }
  if (b.length() > 1) {
    int16_t z = b.letters()[0];
    FreeWord rest(std::vector<int16_t>(b.letters().begin() + 1, b.letters().end()));
    return eta_words(a, FreeWord::generator(std::abs(z) - 1, z > 0 ? 1 : -1), t) *
               GroupRingElement(rest) +
           eta_words(a, rest, t);
  }
  return eta_letters(a.letters()[0], b.letters()[0], t);
}

}  // namespace

GroupRingElement eta(const GroupRingElement& a, const GroupRingElement& b, const FoxTable& t) {
  GroupRingElement out;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) {
      GroupRingElement e = eta_words(wa, wb, t);
      e *= ca * cb;
      out += e;
    }
  return out;
}

Int omega0(const IntVec& u, const IntVec& v) {
  if (u.size() != v.size() || u.size() % 2 != 0) throw contract_error("omega0 dimension mismatch");
  Int s = 0;
  for (size_t i = 0; i + 1 < u.size(); i += 2) s += u[i] * v[i + 1] - u[i + 1] * v[i];
  return s;
}

GroupRingElement kappa_alpha(const GroupRingElement& a) {
  GroupRingElement out;
  for (const auto& [w, c] : a.terms()) {
    std::vector<int16_t> kept;
    for (int16_t x : w.letters())
      if ((std::abs(x) - 1) % 2 == 1) kept.push_back(x);
    out.add_term(FreeWord(std::move(kept)), c);
  }
  return out;
}

WordModelManifold::WordModelManifold(int genus, std::vector<FreeWord> beta_words)
    : g_(genus), w_(std::move(beta_words)), table_(FoxTable::standard(genus)) {
  if (int(w_.size()) != genus)
    throw validation_error("word model wants one beta word per handle");
  IntegerMatrix a(genus, 2 * genus), b(genus, 2 * genus);
  for (int i = 0; i < genus; ++i) {
    a.at(i, 2 * i) = 1;  // class of x_i
    IntVec ab = w_[i].abelianization(genus);
    for (int j = 0; j < 2 * genus; ++j) b.at(i, j) = ab[j];
  }
  la_ = IntegerLattice(2 * genus, a);
  lb_ = IntegerLattice(2 * genus, b);
  h1_ = quotient_presentation(2 * genus, lattice_sum(la_, lb_));
  h2_ = lattice_intersection(la_, lb_);

  // solved form for kappa_beta: exactly one positive x letter per word
  kb_supported_ = true;
  kb_images_.assign(2 * genus, FreeWord{});
  std::vector<bool> solved(genus, false);
  for (int i = 0; i < genus && kb_supported_; ++i) kb_images_[2 * i + 1] = FreeWord::y(i);
  for (int j = 0; j < genus && kb_supported_; ++j) {
    const auto& letters = w_[j].letters();
    int xa = -1, pos = -1;
    bool ok = true;
    for (int k = 0; k < int(letters.size()); ++k) {
      int m = std::abs(letters[k]) - 1;
      if (m % 2 == 0) {
        if (xa >= 0 || letters[k] < 0) ok = false;
        xa = m / 2;
        pos = k;
      }
    }
    if (!ok || xa < 0 || solved[xa]) {
      kb_supported_ = false;
      break;
    }
    solved[xa] = true;
    // w = u x v = 1 in the quotient, so x maps to u^-1 v^-1
    FreeWord u(std::vector<int16_t>(letters.begin(), letters.begin() + pos));
    FreeWord v(std::vector<int16_t>(letters.begin() + pos + 1, letters.end()));
    kb_images_[2 * xa] = u.inverse() * v.inverse();
  }
}

GroupRingElement WordModelManifold::kappa_beta(const GroupRingElement& a) const {
  if (!kb_supported_)
    throw contract_error(
        "kappa on the beta side needs beta words in solved form (one positive x "
        "letter each)");
  GroupRingElement out;
  for (const auto& [w, c] : a.terms()) out.add_term(w.substituted(kb_images_), c);
  return out;
}

WordModelManifold::Rep WordModelManifold::representatives(const IntVec& h) const {
  if (int(h.size()) != 2 * g_) throw contract_error("class vector has the wrong dimension");
  if (!h2_.contains(h)) throw contract_error("class not in L_alpha ∩ L_beta");
  Rep r;
  r.lambda.resize(g_);
  for (int i = 0; i < g_; ++i) {
    r.lambda[i] = h[2 * i];
    if (h[2 * i + 1] != 0) throw contract_error("class escapes the alpha span");
  }
  IntegerMatrix b(g_, 2 * g_);
  for (int i = 0; i < g_; ++i) {
    IntVec ab = w_[i].abelianization(g_);
    for (int j = 0; j < 2 * g_; ++j) b.at(i, j) = ab[j];
  }
  auto mu = solve_integer(b.transposed(), h);
  if (!mu) throw contract_error("class has no beta-side representative");
  r.mu = *mu;
  for (int i = 0; i < g_; ++i) {
    if (r.lambda[i] != 0) r.a.add_term(FreeWord::x(i), r.lambda[i]);
    if (r.mu[i] != 0) r.b.add_term(w_[i], r.mu[i]);
  }
  return r;
}

EtaBarClass eta_bar(const GroupRingElement& a, const GroupRingElement& b,
                    const WordModelManifold& m) {
  int g = m.genus();
  if (!m.h2().contains(a.degree_one(g)) || !m.h2().contains(b.degree_one(g)))
    throw contract_error("class not in L_alpha ∩ L_beta");
  GroupRingElement e = eta(a, b, m.table());
  if (e.augmentation() != 0)
    throw contract_error("eta of intersection classes must have zero augmentation");
  EtaBarClass out;
  out.lift = e.degree_one(g);
  out.reduced = m.h1().project(out.lift);
  return out;
}

CupTensor mu_words(const WordModelManifold& m) {
  int g = m.genus();
  int r = m.h2().rank();
  // lambda coordinates: the x parts of the intersection lattice
  IntegerMatrix lam(r, g);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < g; ++j) lam.at(i, j) = m.h2().basis().at(i, 2 * j);
  CupTensor t;
  t.basis_lambda = hermite_normal_form(lam);
  t.basis = IntegerMatrix(t.basis_lambda.rows(), 2 * g);
  for (int i = 0; i < t.basis_lambda.rows(); ++i)
    for (int j = 0; j < g; ++j) t.basis.at(i, 2 * j) = t.basis_lambda.at(i, j);
  std::vector<WordModelManifold::Rep> reps;
  for (int i = 0; i < t.basis.rows(); ++i) reps.push_back(m.representatives(t.basis.row(i)));
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      EtaBarClass cls = eta_bar(reps[i].a, reps[j].b, m);
      for (int k = j + 1; k < r; ++k)
        t.entries[{i, j, k}] = kWordSign * omega0(cls.lift, t.basis.row(k));
    }
  return t;
}

Lambda3 Lambda3::operator+(const Lambda3& o) const {
  Lambda3 r = *this;
  for (const auto& [k, v] : o.entries) {
    r.entries[k] += v;
    if (r.entries[k] == 0) r.entries.erase(k);
  }
  return r;
}

Lambda3 Lambda3::operator-(const Lambda3& o) const {
  Lambda3 r = *this;
  for (const auto& [k, v] : o.entries) {
    r.entries[k] -= v;
    if (r.entries[k] == 0) r.entries.erase(k);
  }
  return r;
}

namespace {

int wedge_count(int n) { return n * (n - 1) / 2; }

int wedge_index(int n, int p, int q) {
  // index of e_p ^ e_q, p < q, in lexicographic order
  return p * n - p * (p + 1) / 2 + (q - p - 1);
}

}  // namespace

Lambda3 tau1(const std::vector<FreeWord>& images, int genus, int magnus_depth) {
  int n = 2 * genus;
  if (int(images.size()) != n) throw contract_error("tau1 wants one image per generator");
  if (magnus_depth < 2) throw contract_error("tau1 needs Magnus depth at least 2");

  // trivial action on homology
  for (int m = 0; m < n; ++m) {
    IntVec ab = images[m].abelianization(genus);
    for (int j = 0; j < n; ++j)
      if (ab[j] != (j == m ? 1 : 0))
        throw contract_error("tau1 input does not act trivially on homology");
  }
  // boundary word preserved up to conjugacy
  FreeWord boundary;
  for (int i = 0; i < genus; ++i)
    boundary = boundary * commutator(FreeWord::x(i), FreeWord::y(i));
  if (!conjugate_in_free_group(boundary.substituted(images), boundary))
    throw contract_error("tau1 input does not fix the boundary word up to conjugacy");

  // degree-two defects, as wedges
  std::vector<IntVec> wedges(n, IntVec(wedge_count(n)));
  for (int m = 0; m < n; ++m) {
    FreeWord d = images[m] * FreeWord::generator(m, -1);
    GroupRingElement e(d);
    e -= GroupRingElement::unit();
    MagnusSeries s = magnus_expand(e, 2);
    if (s.valuation() < 2) throw contract_error("tau1 defect is not a commutator");
    for (const auto& [mono, c] : s.coefficients()) {
      if (mono.size() != 2) continue;
      int p = mono[0], q = mono[1];
      // the degree-two part of a commutator defect is antisymmetric
      if (p >= q) {
        if (p == q && c != 0)
          throw contract_error("tau1 defect has a non-alternating square term");
        continue;
      }
      if (c + s.coefficient({uint8_t(q), uint8_t(p)}) != 0)
        throw contract_error("tau1 defect has a symmetric degree-two part");
      wedges[m][wedge_index(n, p, q)] = c;
    }
  }

  // assemble in H (x) Lambda^2 H through the duality z -> omega(., z):
  // the functional dual to x_i is y_i, the one dual to y_i is -x_i
  int wc = wedge_count(n);
  IntVec tvec(size_t(n) * wc);
  for (int i = 0; i < genus; ++i) {
    for (int t = 0; t < wc; ++t) {
      tvec[size_t(2 * i + 1) * wc + t] += wedges[2 * i][t];
      tvec[size_t(2 * i) * wc + t] -= wedges[2 * i + 1][t];
    }
  }

  // solve against the inclusion of Lambda^3
  int l3 = n * (n - 1) * (n - 2) / 6;
  IntegerMatrix inc(n * wc, l3);
  int col = 0;
  std::vector<std::array<int, 3>> triples;
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q)
      for (int s = q + 1; s < n; ++s) {
        inc.at(p * wc + wedge_index(n, q, s), col) += 1;
        inc.at(q * wc + wedge_index(n, p, s), col) -= 1;  // e_s ^ e_p = -(e_p ^ e_s)
        inc.at(s * wc + wedge_index(n, p, q), col) += 1;
        triples.push_back({p, q, s});
        ++col;
      }
  auto sol = solve_integer(inc, tvec);
  if (!sol)
    throw contract_error("tau1 value lies outside Lambda^3; bad input map or table");
  Lambda3 out;
  out.n = n;
  for (int c = 0; c < l3; ++c)
    if ((*sol)[c] != 0) out.entries[triples[c]] = (*sol)[c];
  return out;
}

TwistComparison mu_twist_delta(const WordModelManifold& m, const std::vector<FreeWord>& images) {
  int g = m.genus();
  Lambda3 w = tau1(images, g);

  std::vector<FreeWord> twisted;
  for (const FreeWord& word : m.beta_words()) twisted.push_back(word.substituted(images));
  WordModelManifold m2(g, std::move(twisted));

  TwistComparison cmp;
  cmp.mu_base = mu_words(m);
  cmp.mu_twisted = mu_words(m2);
  if (!(cmp.mu_base.basis_lambda == cmp.mu_twisted.basis_lambda))
    throw contract_error("twisting changed the intersection lattice");

  for (const auto& [key, v] : cmp.mu_base.entries)
    cmp.difference[key] = cmp.mu_twisted.entries.at(key) - v;

  // predicted difference: for each Lambda^3 term u^v^w, the change of the
  // reduced pairing is omega(h_j, u)(omega(h_i, v) w - omega(h_i, w) v)
  // summed cyclically, then paired with h_k
  int r = cmp.mu_base.rank();
  auto basis_row = [&](int i) { return cmp.mu_base.basis.row(i); };
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      for (int k = j + 1; k < r; ++k) {
        Int total = 0;
        for (const auto& [tri, coeff] : w.entries) {
          IntVec e[3];
          for (int t = 0; t < 3; ++t) {
            e[t] = IntVec(2 * g);
            e[t][tri[t]] = 1;
          }
          IntVec hi = basis_row(i), hj = basis_row(j), hk = basis_row(k);
          for (int t = 0; t < 3; ++t) {
            const IntVec &u = e[t], &v = e[(t + 1) % 3], &ww = e[(t + 2) % 3];
            // omega(h_j, u) (omega(h_i, v) w - omega(h_i, w) v) paired with h_k
            total += coeff * omega0(hj, u) *
                     (omega0(hi, v) * omega0(ww, hk) - omega0(hi, ww) * omega0(v, hk));
          }
        }
        cmp.predicted[{i, j, k}] = kWordSign * total;
      }
  cmp.agree = cmp.difference == cmp.predicted;
  return cmp;
}

}  // namespace hgc
