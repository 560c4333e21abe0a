#include "pesym/expr.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace pesym {

bool mono_less(const Mono& a, const Mono& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].atom != b[i].atom) return a[i].atom < b[i].atom;
    if (a[i].pow != b[i].pow) return a[i].pow < b[i].pow;
  }
  if (a.size() != b.size()) return a.size() < b.size();
  return mono_total_degree(a) < mono_total_degree(b);  // unreachable tie-break, kept for clarity
}

int mono_total_degree(const Mono& m) {
  int d = 0;
  for (const auto& f : m) d += f.pow;
  return d;
}

std::size_t mono_hash(const Mono& m) {
  std::size_t h = 14695981039346656037ull;
  for (const auto& f : m) {
    h ^= f.atom.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(f.pow));
    h *= 1099511628211ull;
  }
  return h;
}

static void normalize_mono(Mono& m) {
  std::sort(m.begin(), m.end(), [](const Factor& x, const Factor& y) { return x.atom < y.atom; });
  std::size_t w = 0;
  for (std::size_t i = 0; i < m.size();) {
    std::size_t j = i;
    std::int64_t p = 0;
    while (j < m.size() && m[j].atom == m[i].atom) p += m[j++].pow;
    if (p != 0) m[w++] = Factor{m[i].atom, static_cast<std::int32_t>(p)};
    i = j;
  }
  m.resize(w);
}

void Expr::normalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return mono_less(a.mono, b.mono); });
  std::size_t w = 0;
  for (std::size_t i = 0; i < terms_.size();) {
    std::size_t j = i;
    Rational c(0);
    while (j < terms_.size() && terms_[j].mono == terms_[i].mono) c += terms_[j++].coef;
    if (c != 0) {
      if (w != i) terms_[w].mono = std::move(terms_[i].mono);
      terms_[w].coef = std::move(c);
      ++w;
    }
    i = j;
  }
  terms_.resize(w);
}

Expr Expr::constant(const Rational& c) {
  Expr e;
  if (c != 0) e.terms_.push_back(Term{c, {}});
  return e;
}

Expr Expr::from_atom(const Atom& a, std::int32_t pow) {
  Expr e;
  if (pow != 0) e.terms_.push_back(Term{Rational(1), Mono{Factor{a, pow}}});
  else e.terms_.push_back(Term{Rational(1), {}});
  return e;
}

Expr Expr::from_terms(std::vector<Term> terms) {
  Expr e;
  for (auto& t : terms) normalize_mono(t.mono);
  e.terms_ = std::move(terms);
  e.normalize();
  return e;
}

Rational Expr::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_[0].mono.empty()) return terms_[0].coef;
  throw std::logic_error("Expr::constant_value: not a constant");
}

bool Expr::operator==(const Expr& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].coef != o.terms_[i].coef || terms_[i].mono != o.terms_[i].mono) return false;
  return true;
}

Expr Expr::operator-() const {
  Expr e = *this;
  for (auto& t : e.terms_) t.coef = -t.coef;
  return e;
}

Expr& Expr::operator+=(const Expr& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o, *this;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    if (terms_[i].mono == o.terms_[j].mono) {
      Rational c = terms_[i].coef + o.terms_[j].coef;
      if (c != 0) out.push_back(Term{std::move(c), std::move(terms_[i].mono)});
      ++i, ++j;
    } else if (mono_less(terms_[i].mono, o.terms_[j].mono)) {
      out.push_back(std::move(terms_[i++]));
    } else {
      out.push_back(o.terms_[j++]);
    }
  }
  while (i < terms_.size()) out.push_back(std::move(terms_[i++]));
  while (j < o.terms_.size()) out.push_back(o.terms_[j++]);
  terms_ = std::move(out);
  return *this;
}

Expr& Expr::operator-=(const Expr& o) { return *this += -o; }

Mono mono_mul(const Mono& a, const Mono& b) {
  Mono out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].atom == b[j].atom) {
      std::int64_t p = static_cast<std::int64_t>(a[i].pow) + b[j].pow;
      if (p != 0) out.push_back(Factor{a[i].atom, static_cast<std::int32_t>(p)});
      ++i, ++j;
    } else if (a[i].atom < b[j].atom) {
      out.push_back(a[i++]);
    } else {
      out.push_back(b[j++]);
    }
  }
  while (i < a.size()) out.push_back(a[i++]);
  while (j < b.size()) out.push_back(b[j++]);
  return out;
}

Expr mono_to_expr(const Mono& m, const Rational& coef) {
  if (coef == 0) return Expr::zero();
  return Expr::from_terms({Term{coef, m}});
}

Expr operator*(const Expr& a, const Expr& b) {
  if (a.is_zero() || b.is_zero()) return Expr::zero();
  std::vector<Term> out;
  out.reserve(a.terms().size() * b.terms().size());
  for (const auto& ta : a.terms())
    for (const auto& tb : b.terms()) out.push_back(Term{ta.coef * tb.coef, mono_mul(ta.mono, tb.mono)});
  Expr e;
  e = Expr::from_terms(std::move(out));
  return e;
}

Expr& Expr::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coef *= c;
  return *this;
}

Expr Expr::pow(int n) const {
  if (n < 0) throw std::invalid_argument("Expr::pow: negative exponent");
  Expr r = Expr::constant(Rational(1));
  Expr base = *this;
  while (n > 0) {
    if (n & 1) r = r * base;
    base = (n >>= 1) ? base * base : base;
  }
  return r;
}

int Expr::max_jet_order() const {
  int m = -1;
  for (const auto& t : terms_)
    for (const auto& f : t.mono)
      if (f.atom.kind == AtomKind::jet) m = std::max(m, f.atom.mi.total());
  return m;
}

bool Expr::contains(const Atom& a) const {
  for (const auto& t : terms_)
    for (const auto& f : t.mono)
      if (f.atom == a) return true;
  return false;
}

bool Expr::contains_kind(AtomKind k) const {
  for (const auto& t : terms_)
    for (const auto& f : t.mono)
      if (f.atom.kind == k) return true;
  return false;
}

std::vector<Atom> Expr::atoms() const {
  std::set<Atom> s;
  for (const auto& t : terms_)
    for (const auto& f : t.mono) s.insert(f.atom);
  return {s.begin(), s.end()};
}

std::vector<Atom> Expr::atoms_of_kind(AtomKind k) const {
  std::set<Atom> s;
  for (const auto& t : terms_)
    for (const auto& f : t.mono)
      if (f.atom.kind == k) s.insert(f.atom);
  return {s.begin(), s.end()};
}

int Expr::degree_in(const Atom& a) const {
  int d = 0;
  for (const auto& t : terms_)
    for (const auto& f : t.mono)
      if (f.atom == a) d = std::max(d, static_cast<int>(f.pow));
  return d;
}

bool Expr::has_negative_power() const {
  for (const auto& t : terms_)
    for (const auto& f : t.mono)
      if (f.pow < 0) return true;
  return false;
}

std::map<Mono, Expr, MonoLess> Expr::collect(const std::function<bool(const Atom&)>& pick) const {
  std::map<Mono, std::vector<Term>, MonoLess> buckets;
  for (const auto& t : terms_) {
    Mono key, rest;
    for (const auto& f : t.mono) (pick(f.atom) ? key : rest).push_back(f);
    buckets[std::move(key)].push_back(Term{t.coef, std::move(rest)});
  }
  std::map<Mono, Expr, MonoLess> out;
  for (auto& [k, v] : buckets) {
    Expr e = Expr::from_terms(std::move(v));
    if (!e.is_zero()) out.emplace(k, std::move(e));
  }
  return out;
}

std::map<Mono, Expr, MonoLess> collect_jet(const Expr& e, const std::vector<Atom>& jets) {
  std::set<Atom> pick(jets.begin(), jets.end());
  return e.collect([&pick](const Atom& a) { return pick.count(a) != 0; });
}

double Expr::evaluate(const std::unordered_map<Atom, double>& vals) const {
  double sum = 0.0;
  for (const auto& t : terms_) {
    double v = t.coef.get_d();
    for (const auto& f : t.mono) {
      auto it = vals.find(f.atom);
      if (it == vals.end()) throw std::invalid_argument("Expr::evaluate: unbound atom");
      double base = it->second;
      int p = f.pow;
      if (p < 0) {
        base = 1.0 / base;
        p = -p;
      }
      for (int k = 0; k < p; ++k) v *= base;
    }
    sum += v;
  }
  return sum;
}

Rational Expr::evaluate_rational(const std::unordered_map<Atom, Rational>& vals) const {
  Rational sum(0);
  for (const auto& t : terms_) {
    Rational v = t.coef;
    for (const auto& f : t.mono) {
      auto it = vals.find(f.atom);
      if (it == vals.end()) throw std::invalid_argument("Expr::evaluate_rational: unbound atom");
      Rational base = it->second;
      int p = f.pow;
      if (p < 0) {
        if (base == 0) throw std::domain_error("Expr::evaluate_rational: division by zero");
        base = 1 / base;
        p = -p;
      }
      for (int k = 0; k < p; ++k) v *= base;
    }
    sum += v;
  }
  return sum;
}

Expr substitute(const Expr& e, const std::map<Atom, Expr>& map) {
  if (map.empty()) return e;
  for (const auto& [key, val] : map) {
    (void)key;
    for (const auto& [key2, val2] : map) {
      (void)val2;
      if (val.contains(key2))
        throw std::invalid_argument("substitute: map key occurs in a mapped value (cyclic map)");
    }
  }
  std::vector<Term> out;
  out.reserve(e.terms().size());
  for (const auto& t : e.terms()) {
    Mono kept;
    Expr prod = Expr::constant(t.coef);
    bool dead = false;
    for (const auto& f : t.mono) {
      auto it = map.find(f.atom);
      if (it == map.end()) {
        kept.push_back(f);
        continue;
      }
      const Expr& val = it->second;
      if (f.pow > 0) {
        if (val.is_zero()) {
          dead = true;
          break;
        }
        prod = prod * val.pow(f.pow);
      } else {
        // Inversion only defined for single-monomial values.
        if (val.terms().size() != 1)
          throw std::invalid_argument("substitute: negative power of a key mapped to a non-monomial");
        const Term& vt = val.terms()[0];
        Mono inv;
        for (const auto& vf : vt.mono) inv.push_back(Factor{vf.atom, -vf.pow});
        Rational c = 1 / vt.coef;
        Expr unit = mono_to_expr(inv, c).pow(-f.pow);
        prod = prod * unit;
      }
    }
    if (dead || prod.is_zero()) continue;
    Expr base = mono_to_expr(kept);
    Expr piece = base * prod;
    for (const auto& pt : piece.terms()) out.push_back(pt);
  }
  return Expr::from_terms(std::move(out));
}

}  // namespace pesym
