#include "hgc/words.hpp"

#include <algorithm>
#include <sstream>

namespace hgc {

namespace {

void push_reduced(std::vector<int16_t>& out, int16_t letter) {
  if (!out.empty() && out.back() == -letter)
    out.pop_back();
  else
    out.push_back(letter);
}

}  // namespace

FreeWord::FreeWord(std::vector<int16_t> letters) {
  for (int16_t x : letters) {
    if (x == 0) throw contract_error("zero letter");
    push_reduced(l_, x);
  }
}

FreeWord FreeWord::generator(int m, int exponent) {
  if (m < 0) throw contract_error("negative generator index");
  std::vector<int16_t> l;
  int16_t letter = int16_t(exponent >= 0 ? m + 1 : -(m + 1));
  for (int i = 0; i < std::abs(exponent); ++i) l.push_back(letter);
  return FreeWord(std::move(l));
}

FreeWord FreeWord::parse(const std::string& text, int genus) {
  std::istringstream in(text);
  std::string tok;
  std::vector<int16_t> l;
  while (in >> tok) {
    char c = tok[0];
    bool inv = c >= 'A' && c <= 'Z';
    char base = inv ? char(c - 'A' + 'a') : c;
    if (base != 'x' && base != 'y') throw parse_error("unknown generator symbol '" + tok + "'");
    int idx = 0;
    try {
      idx = std::stoi(tok.substr(1));
    } catch (...) {
      throw parse_error("bad generator index in '" + tok + "'");
    }
    if (idx < 1 || idx > genus) throw parse_error("generator index out of range in '" + tok + "'");
    int m = 2 * (idx - 1) + (base == 'y' ? 1 : 0);
    l.push_back(int16_t(inv ? -(m + 1) : m + 1));
  }
  return FreeWord(std::move(l));
}

FreeWord FreeWord::inverse() const {
  std::vector<int16_t> l(l_.rbegin(), l_.rend());
  for (int16_t& x : l) x = int16_t(-x);
  FreeWord w;
  w.l_ = std::move(l);  // already reduced
  return w;
}

FreeWord FreeWord::operator*(const FreeWord& o) const {
  std::vector<int16_t> l = l_;
  for (int16_t x : o.l_) push_reduced(l, x);
  FreeWord w;
  w.l_ = std::move(l);
  return w;
}

FreeWord FreeWord::pow(int e) const {
  FreeWord acc;
  FreeWord base = e >= 0 ? *this : inverse();
  for (int i = 0; i < std::abs(e); ++i) acc = acc * base;
  return acc;
}

FreeWord FreeWord::conjugated_by(const FreeWord& c) const { return c * *this * c.inverse(); }

FreeWord FreeWord::substituted(const std::vector<FreeWord>& images) const {
  FreeWord out;
  for (int16_t x : l_) {
    int m = std::abs(x) - 1;
    if (m >= int(images.size())) throw contract_error("substitution image missing");
    out = out * (x > 0 ? images[m] : images[m].inverse());
  }
  return out;
}

IntVec FreeWord::abelianization(int genus) const {
  IntVec v(2 * genus);
  for (int16_t x : l_) {
    int m = std::abs(x) - 1;
    if (m >= 2 * genus) throw contract_error("letter outside the surface alphabet");
    v[m] += x > 0 ? 1 : -1;
  }
  return v;
}

std::string FreeWord::str() const {
  if (l_.empty()) return "1";
  std::string out;
  for (size_t i = 0; i < l_.size(); ++i) {
    if (i) out += ' ';
    int m = std::abs(l_[i]) - 1;
    char base = m % 2 == 0 ? 'x' : 'y';
    if (l_[i] < 0) base = char(base - 'a' + 'A');
    out += base;
    out += std::to_string(m / 2 + 1);
  }
  return out;
}

FreeWord commutator(const FreeWord& a, const FreeWord& b) {
  return a * b * a.inverse() * b.inverse();
}

bool conjugate_in_free_group(const FreeWord& a, const FreeWord& b) {
  auto cyclic_reduce = [](FreeWord w) {
    std::vector<int16_t> l = w.letters();
    while (l.size() >= 2 && l.front() == -l.back()) {
      l.erase(l.begin());
      l.pop_back();
    }
    return l;
  };
  std::vector<int16_t> u = cyclic_reduce(a), v = cyclic_reduce(b);
  if (u.size() != v.size()) return false;
  if (u.empty()) return true;
  for (size_t r = 0; r < u.size(); ++r) {
    bool same = true;
    for (size_t i = 0; i < u.size() && same; ++i)
      if (u[(i + r) % u.size()] != v[i]) same = false;
    if (same) return true;
  }
  return false;
}

GroupRingElement::GroupRingElement(const FreeWord& w, Int coeff) {
  if (coeff != 0) t_[w] = std::move(coeff);
}

Int GroupRingElement::augmentation() const {
  Int s = 0;
  for (const auto& [w, c] : t_) s += c;
  return s;
}

IntVec GroupRingElement::degree_one(int genus) const {
  IntVec v(2 * genus);
  for (const auto& [w, c] : t_) {
    IntVec a = w.abelianization(genus);
    for (int i = 0; i < 2 * genus; ++i) v[i] += c * a[i];
  }
  return v;
}

void GroupRingElement::add_term(const FreeWord& w, const Int& c) {
  if (c == 0) return;
  auto it = t_.find(w);
  if (it == t_.end()) {
    t_[w] = c;
  } else {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
  for (const auto& [w, c] : o.t_) add_term(w, c);
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& o) {
  for (const auto& [w, c] : o.t_) add_term(w, -c);
  return *this;
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& o) const {
  GroupRingElement r = *this;
  r += o;
  return r;
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& o) const {
  GroupRingElement r = *this;
  r -= o;
  return r;
}

GroupRingElement GroupRingElement::operator-() const {
  GroupRingElement r;
  for (const auto& [w, c] : t_) r.t_[w] = -c;
  return r;
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& o) const {
  GroupRingElement r;
  for (const auto& [w1, c1] : t_)
    for (const auto& [w2, c2] : o.t_) r.add_term(w1 * w2, c1 * c2);
  return r;
}

GroupRingElement& GroupRingElement::operator*=(const Int& k) {
  if (k == 0) {
    t_.clear();
    return *this;
  }
  for (auto& [w, c] : t_) c *= k;
  return *this;
}

std::string GroupRingElement::str() const {
  if (t_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : t_) {
    if (!first) out += " + ";
    first = false;
    out += c.str() + "*(" + w.str() + ")";
  }
  return out;
}

GroupRingElement ring_multiply(const GroupRingElement& a, const GroupRingElement& b) {
  return a * b;
}

GroupRingElement antipode(const GroupRingElement& a) {
  GroupRingElement r;
  for (const auto& [w, c] : a.terms()) r.add_term(w.inverse(), c);
  return r;
}

Int MagnusSeries::coefficient(const std::vector<uint8_t>& mono) const {
  auto it = c_.find(mono);
  return it == c_.end() ? Int(0) : it->second;
}

int MagnusSeries::valuation() const {
  int best = n_ + 1;
  for (const auto& [m, c] : c_)
    if (c != 0) best = std::min(best, int(m.size()));
  return best;
}

MagnusSeries& MagnusSeries::operator+=(const MagnusSeries& o) {
  for (const auto& [m, c] : o.c_) add(m, c);
  return *this;
}

MagnusSeries MagnusSeries::operator*(const MagnusSeries& o) const {
  MagnusSeries r(n_);
  for (const auto& [m1, c1] : c_)
    for (const auto& [m2, c2] : o.c_) {
      if (int(m1.size() + m2.size()) > n_) continue;
      std::vector<uint8_t> m = m1;
      m.insert(m.end(), m2.begin(), m2.end());
      r.add(m, c1 * c2);
    }
  return r;
}

void MagnusSeries::add(const std::vector<uint8_t>& mono, const Int& coeff) {
  if (coeff == 0 || int(mono.size()) > n_) return;
  auto it = c_.find(mono);
  if (it == c_.end()) {
    c_[mono] = coeff;
  } else {
    it->second += coeff;
    if (it->second == 0) c_.erase(it);
  }
}

MagnusSeries magnus_expand(const GroupRingElement& a, int degree) {
  if (degree < 1) throw contract_error("magnus degree must be at least 1");
  MagnusSeries out(degree);
  for (const auto& [w, coeff] : a.terms()) {
    MagnusSeries acc(degree);
    acc.add({}, 1);
    for (int16_t x : w.letters()) {
      uint8_t m = uint8_t(std::abs(x) - 1);
      MagnusSeries f(degree);
      f.add({}, 1);
      if (x > 0) {
        f.add({m}, 1);
      } else {
        std::vector<uint8_t> mono;
        Int s = -1;
        for (int k = 1; k <= degree; ++k) {
          mono.push_back(m);
          f.add(mono, s);
          s = -s;
        }
      }
      acc = acc * f;
    }
    for (const auto& [mono, c] : acc.coefficients()) out.add(mono, coeff * c);
  }
  return out;
}

bool gamma_member(const FreeWord& w, int k, int depth) {
  if (k < 1) throw contract_error("gamma_member wants k >= 1");
  if (k > depth) throw contract_error("gamma membership beyond the configured Magnus depth");
  if (k == 1) return true;
  GroupRingElement e(w);
  e -= GroupRingElement::unit();
  return magnus_expand(e, depth).valuation() >= k;
}

}  // namespace hgc
