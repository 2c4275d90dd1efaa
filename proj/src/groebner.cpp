#include "golodlab/groebner.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "golodlab/linalg.hpp"

namespace golod {
namespace {

// Polynomial as terms sorted by descending order; the working form of the
// division algorithm.
using Sorted = std::vector<Term>;

Sorted toSorted(const Polynomial& f, const TermOrder& order) { return f.sortedTerms(order); }

Polynomial fromSorted(const RingPtr& ring, const Sorted& s) {
  Polynomial p(ring);
  for (const auto& t : s) p.addTerm(t.mono, t.coeff);
  return p;
}

// f[from..] - c * m * g, merged in order.
Sorted subtractMultiple(const Field& field, const TermOrder& order, const Sorted& f,
                        std::size_t from, const Scalar& c, const Monomial& m, const Sorted& g) {
  Sorted out;
  out.reserve(f.size() - from + g.size());
  std::size_t i = from, j = 0;
  Scalar minus = field.neg(c);
  while (i < f.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(f[i++]);
      continue;
    }
    Monomial gm = g[j].mono * m;
    if (i == f.size()) {
      out.push_back({std::move(gm), field.mul(minus, g[j].coeff)});
      ++j;
      continue;
    }
    int cmp = order.compare(f[i].mono, gm);
    if (cmp > 0) {
      out.push_back(f[i++]);
    } else if (cmp < 0) {
      out.push_back({std::move(gm), field.mul(minus, g[j].coeff)});
      ++j;
    } else {
      Scalar v = field.add(f[i].coeff, field.mul(minus, g[j].coeff));
      if (v != 0) out.push_back({f[i].mono, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

// Full reduction of f by divisors (each with a known leading term at index 0).
Sorted reduceFully(const Field& field, const TermOrder& order, Sorted f,
                   const std::vector<const Sorted*>& divisors) {
  Sorted result;
  std::size_t head = 0;
  while (head < f.size()) {
    const Term& lt = f[head];
    const Sorted* hit = nullptr;
    for (const Sorted* d : divisors) {
      if ((*d)[0].mono.divides(lt.mono)) {
        hit = d;
        break;
      }
    }
    if (!hit) {
      result.push_back(lt);
      ++head;
      continue;
    }
    Scalar c = field.div(lt.coeff, (*hit)[0].coeff);
    Monomial q = lt.mono / (*hit)[0].mono;
    f = subtractMultiple(field, order, f, head, c, q, *hit);
    head = 0;
  }
  return result;
}

Sorted makeMonic(const Field& field, Sorted f) {
  if (f.empty()) return f;
  Scalar inv = field.inv(f[0].coeff);
  for (auto& t : f) t.coeff = field.mul(t.coeff, inv);
  return f;
}

Sorted sPolynomial(const Field& field, const TermOrder& order, const Sorted& f, const Sorted& g) {
  Monomial l = f[0].mono.lcm(g[0].mono);
  // (l/lt f) f / lc f - (l/lt g) g / lc g
  Sorted a;
  Scalar cf = field.inv(f[0].coeff);
  Monomial qf = l / f[0].mono;
  a.reserve(f.size());
  for (std::size_t k = 1; k < f.size(); ++k) a.push_back({f[k].mono * qf, field.mul(f[k].coeff, cf)});
  Sorted gt(g.begin() + 1, g.end());
  return subtractMultiple(field, order, a, 0, field.inv(g[0].coeff), l / g[0].mono, gt);
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > 0 && b[k] > 0) return false;
  return true;
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

std::vector<Polynomial> interreduce(const RingPtr& ring, const TermOrder& order,
                                    std::vector<Sorted> basis) {
  const Field& field = ring->field();
  // Drop elements whose leading term is divisible by another's.
  std::sort(basis.begin(), basis.end(),
            [&](const Sorted& a, const Sorted& b) { return order.compare(a[0].mono, b[0].mono) < 0; });
  std::vector<Sorted> minimal;
  for (auto& f : basis) {
    bool redundant = false;
    for (const auto& g : minimal)
      if (g[0].mono.divides(f[0].mono)) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(std::move(f));
  }
  std::vector<Polynomial> out;
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<const Sorted*> others;
    for (std::size_t l = 0; l < minimal.size(); ++l)
      if (l != k) others.push_back(&minimal[l]);
    Sorted tail(minimal[k].begin() + 1, minimal[k].end());
    Sorted reducedTail = reduceFully(field, order, std::move(tail), others);
    Sorted full;
    full.push_back(minimal[k][0]);
    full.insert(full.end(), reducedTail.begin(), reducedTail.end());
    out.push_back(fromSorted(ring, makeMonic(field, std::move(full))));
  }
  std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.compare(a.leadingTerm(order).mono, b.leadingTerm(order).mono) > 0;
  });
  return out;
}

void checkSameRing(const std::vector<Polynomial>& gens, const RingPtr& ring) {
  for (const auto& g : gens)
    if (!g.ring()->sameAs(*ring)) throw inputError("generators live in different rings");
}

}  // namespace

// ---------------------------------------------------------------- GroebnerBasis

GroebnerBasis::GroebnerBasis(RingPtr ring, TermOrder order, std::vector<Polynomial> reduced,
                             std::vector<Polynomial> source)
    : ring_(std::move(ring)), order_(std::move(order)), gens_(std::move(reduced)),
      source_(std::move(source)) {
  for (const auto& g : gens_) leads_.push_back(g.leadingTerm(order_).mono);
}

MonomialIdeal GroebnerBasis::leadingIdeal() const { return MonomialIdeal(ring_, leads_); }

int GroebnerBasis::maxDegree() const {
  int d = 0;
  for (const auto& g : gens_) d = std::max(d, g.maxDegree());
  return d;
}

Polynomial GroebnerBasis::normalForm(const Polynomial& f) const {
  return golod::normalForm(f, gens_, order_);
}

Polynomial normalForm(const Polynomial& f, const std::vector<Polynomial>& divisors,
                      const TermOrder& order) {
  if (f.isZero()) return f;
  std::vector<Sorted> ds;
  ds.reserve(divisors.size());
  for (const auto& d : divisors)
    if (!d.isZero()) ds.push_back(toSorted(d, order));
  std::vector<const Sorted*> ptrs;
  for (const auto& d : ds) ptrs.push_back(&d);
  return fromSorted(f.ring(), reduceFully(f.ring()->field(), order, toSorted(f, order), ptrs));
}

Polynomial normalForm(const Polynomial& f, const GroebnerBasis& gb) { return gb.normalForm(f); }

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const TermOrder& order) {
  if (gens.empty()) throw inputError("empty generator list");
  RingPtr ring = gens.front().ring();
  checkSameRing(gens, ring);
  if (order.nvars() != ring->nvars()) throw inputError("order belongs to a different ring");
  const Field& field = ring->field();

  std::vector<Sorted> polys;   // every element ever added
  std::vector<bool> active;    // still in G after Gebauer-Moeller deletion
  std::vector<Pair> pairs;

  auto lm = [&](std::size_t k) -> const Monomial& { return polys[k][0].mono; };

  auto update = [&](std::size_t h) {
    // Gebauer-Moeller UPDATE (Becker-Weispfenning).
    std::vector<std::size_t> c;
    for (std::size_t g = 0; g < h; ++g)
      if (active[g]) c.push_back(g);
    std::vector<std::size_t> d;
    for (std::size_t idx = 0; idx < c.size(); ++idx) {
      std::size_t g1 = c[idx];
      Monomial l1 = lm(h).lcm(lm(g1));
      bool keep = coprime(lm(h), lm(g1));
      if (!keep) {
        keep = true;
        auto dominated = [&](std::size_t g2) { return lm(h).lcm(lm(g2)).divides(l1); };
        for (std::size_t k = idx + 1; k < c.size() && keep; ++k)
          if (dominated(c[k])) keep = false;
        for (std::size_t g2 : d)
          if (keep && dominated(g2)) keep = false;
      }
      if (keep) d.push_back(g1);
    }
    std::vector<Pair> kept;
    for (auto& p : pairs) {
      Monomial lh1 = lm(p.i).lcm(lm(h));
      Monomial lh2 = lm(p.j).lcm(lm(h));
      bool drop = lm(h).divides(p.lcm) && lh1 != p.lcm && lh2 != p.lcm;
      if (!drop) kept.push_back(std::move(p));
    }
    for (std::size_t g : d)
      if (!coprime(lm(h), lm(g))) kept.push_back({g, h, lm(h).lcm(lm(g))});
    pairs = std::move(kept);
    for (std::size_t g = 0; g < h; ++g)
      if (active[g] && lm(h).divides(lm(g))) active[g] = false;
    active[h] = true;
  };

  auto addPoly = [&](Sorted f) {
    f = makeMonic(field, std::move(f));
    polys.push_back(std::move(f));
    active.push_back(false);
    update(polys.size() - 1);
  };

  // Seed with the inputs, each reduced by what is already there.
  for (const auto& g : gens) {
    if (g.isZero()) continue;
    std::vector<const Sorted*> current;
    for (std::size_t k = 0; k < polys.size(); ++k)
      if (active[k]) current.push_back(&polys[k]);
    Sorted r = reduceFully(field, order, toSorted(g, order), current);
    if (!r.empty()) addPoly(std::move(r));
  }

  while (!pairs.empty()) {
    // Normal strategy, degree first.
    auto best = pairs.begin();
    for (auto it = std::next(best); it != pairs.end(); ++it) {
      int da = it->lcm.degree(), db = best->lcm.degree();
      if (da < db || (da == db && order.compare(it->lcm, best->lcm) < 0)) best = it;
    }
    Pair p = *best;
    pairs.erase(best);
    Sorted s = sPolynomial(field, order, polys[p.i], polys[p.j]);
    std::vector<const Sorted*> current;
    for (std::size_t k = 0; k < polys.size(); ++k)
      if (active[k]) current.push_back(&polys[k]);
    Sorted r = reduceFully(field, order, std::move(s), current);
    if (!r.empty()) addPoly(std::move(r));
  }

  std::vector<Sorted> basis;
  for (std::size_t k = 0; k < polys.size(); ++k)
    if (active[k]) basis.push_back(polys[k]);
  if (basis.empty()) return GroebnerBasis(ring, order, {}, gens);
  return GroebnerBasis(ring, order, interreduce(ring, order, std::move(basis)), gens);
}

bool isGroebnerBasis(const std::vector<Polynomial>& gens, const TermOrder& order) {
  std::vector<Sorted> fs;
  for (const auto& g : gens)
    if (!g.isZero()) fs.push_back(toSorted(g, order));
  if (fs.empty()) return true;
  const Field& field = gens.front().ring()->field();
  std::vector<const Sorted*> ptrs;
  for (const auto& f : fs) ptrs.push_back(&f);
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = i + 1; j < fs.size(); ++j) {
      if (coprime(fs[i][0].mono, fs[j][0].mono)) continue;
      Sorted s = sPolynomial(field, order, fs[i], fs[j]);
      if (!reduceFully(field, order, std::move(s), ptrs).empty()) return false;
    }
  return true;
}

MonomialIdeal initialIdeal(const std::vector<Polynomial>& gens, const TermOrder& order) {
  if (gens.empty()) throw inputError("empty generator list");
  RingPtr ring = gens.front().ring();
  bool allZero = std::all_of(gens.begin(), gens.end(), [](const Polynomial& g) { return g.isZero(); });
  if (allZero) return MonomialIdeal(ring, {});
  return buchberger(gens, order).leadingIdeal();
}

bool sameIdeal(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
               const TermOrder& order) {
  auto nonzero = [](const std::vector<Polynomial>& v) {
    return std::any_of(v.begin(), v.end(), [](const Polynomial& p) { return !p.isZero(); });
  };
  if (!nonzero(a) || !nonzero(b)) return nonzero(a) == nonzero(b);
  GroebnerBasis ga = buchberger(a, order);
  GroebnerBasis gb = buchberger(b, order);
  for (const auto& f : b)
    if (!ga.contains(f)) return false;
  for (const auto& f : a)
    if (!gb.contains(f)) return false;
  return true;
}

std::vector<Monomial> monomialsOfDegree(std::size_t n, int d) {
  std::vector<Monomial> out;
  Monomial m(n);
  std::function<void(std::size_t, int)> rec = [&](std::size_t k, int left) {
    if (k + 1 == n) {
      m[k] = left;
      out.push_back(m);
      return;
    }
    for (int e = left; e >= 0; --e) {
      m[k] = e;
      rec(k + 1, left - e);
    }
  };
  if (d < 0) return out;
  rec(0, d);
  return out;
}

std::vector<Monomial> standardMonomials(const GroebnerBasis& gb, int d) {
  std::vector<Monomial> out;
  for (auto& m : monomialsOfDegree(gb.ring()->nvars(), d)) {
    bool standard = true;
    for (const auto& l : gb.leadingMonomials())
      if (l.divides(m)) {
        standard = false;
        break;
      }
    if (standard) out.push_back(std::move(m));
  }
  return out;
}

std::vector<Monomial> standardMonomials(const GroebnerBasis& gb, int d, const std::vector<int>& w) {
  const std::size_t n = gb.ring()->nvars();
  if (w.size() != n) throw inputError("weight vector length does not match ring");
  for (int v : w)
    if (v <= 0) throw inputError("weights must be positive");
  std::vector<Monomial> out;
  Monomial m(n);
  std::function<void(std::size_t, int)> rec = [&](std::size_t k, int left) {
    if (k == n) {
      if (left != 0) return;
      for (const auto& l : gb.leadingMonomials())
        if (l.divides(m)) return;
      out.push_back(m);
      return;
    }
    for (int e = left / w[k]; e >= 0; --e) {
      m[k] = e;
      rec(k + 1, left - e * w[k]);
    }
    m[k] = 0;
  };
  if (d >= 0) rec(0, d);
  return out;
}

std::vector<long> hilbertFunctionByRank(const std::vector<Polynomial>& gens, int maxDegree) {
  if (gens.empty()) throw inputError("empty generator list");
  RingPtr ring = gens.front().ring();
  const std::size_t n = ring->nvars();
  std::vector<long> out;
  for (int d = 0; d <= maxDegree; ++d) {
    auto basis = monomialsOfDegree(n, d);
    std::map<Monomial, int> index;
    for (std::size_t k = 0; k < basis.size(); ++k) index.emplace(basis[k], static_cast<int>(k));
    std::vector<SparseVec> rows;
    for (const auto& g : gens) {
      auto gd = g.homogeneousDegree();
      if (!gd) throw inputError("Hilbert function by rank needs homogeneous generators");
      if (*gd > d) continue;
      for (const auto& m : monomialsOfDegree(n, d - *gd)) {
        std::map<int, Scalar> row;
        for (const auto& [t, c] : g.terms()) row[index.at(t * m)] = c;
        SparseVec v(row.begin(), row.end());
        rows.push_back(std::move(v));
      }
    }
    out.push_back(static_cast<long>(basis.size() - rankOf(ring->field(), rows)));
  }
  return out;
}

// ---------------------------------------------------------------- flat family

RingPtr homogenizationRing(const RingPtr& base) {
  std::vector<std::string> names = base->names();
  std::string t = "t";
  while (base->indexOf(t)) t += "_h";
  names.push_back(t);
  return makeRing(std::move(names), base->field());
}

Polynomial homogenize(const Polynomial& f, const std::vector<int>& w, const RingPtr& extended) {
  if (f.isZero()) throw inputError("cannot homogenize the zero polynomial");
  const std::size_t n = f.ring()->nvars();
  if (w.size() != n) throw inputError("weight vector length does not match ring");
  for (int v : w)
    if (v <= 0) throw inputError("homogenization weights must be positive");
  long top = 0;
  for (const auto& [m, c] : f.terms()) top = std::max(top, m.weightedDegree(w));
  Polynomial out(extended);
  for (const auto& [m, c] : f.terms()) {
    std::vector<int> e = m.exponents();
    e.push_back(static_cast<int>(top - m.weightedDegree(w)));
    out.addTerm(Monomial(std::move(e)), c);
  }
  return out;
}

Polynomial homogenize(const Polynomial& f, const std::vector<int>& w) {
  return homogenize(f, w, homogenizationRing(f.ring()));
}

Polynomial weightInitialForm(const Polynomial& f, const std::vector<int>& w) {
  long top = 0;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    long v = m.weightedDegree(w);
    if (first || v > top) top = v;
    first = false;
  }
  Polynomial out(f.ring());
  for (const auto& [m, c] : f.terms())
    if (m.weightedDegree(w) == top) out.addTerm(m, c);
  return out;
}

std::vector<Polynomial> specializeT(const HomogenizedIdeal& ih, const Scalar& a) {
  const Field& field = ih.base->field();
  const std::size_t n = ih.base->nvars();
  Scalar av = field.normalize(a);
  std::vector<Polynomial> out;
  for (const auto& g : ih.generators) {
    Polynomial p(ih.base);
    for (const auto& [m, c] : g.terms()) {
      int te = m[n];
      Scalar factor = 1;
      for (int k = 0; k < te; ++k) factor = field.mul(factor, av);
      if (te > 0 && av == 0) continue;
      std::vector<int> e(m.exponents().begin(), m.exponents().begin() + static_cast<long>(n));
      p.addTerm(Monomial(std::move(e)), field.mul(c, factor));
    }
    out.push_back(std::move(p));
  }
  return out;
}

HomogenizedIdeal homogenizeIdeal(const GroebnerBasis& gb, const std::vector<int>& w, bool recompute) {
  TermOrder worder = TermOrder::weight(w);
  std::vector<Polynomial> basis = gb.generators();
  if (!isGroebnerBasis(basis, worder)) {
    if (!recompute)
      throw inputError("generators are not a Groebner basis for the weight order; pass recompute");
    basis = buchberger(gb.sourceIdeal(), worder).generators();
  }
  HomogenizedIdeal ih{gb.ring(), homogenizationRing(gb.ring()), w, {}, worder};
  for (const auto& g : basis) ih.generators.push_back(homogenize(g, w, ih.extended));

  // Fiber self-checks: t=1 recovers I, t=0 generates in_w(I).
  auto one = specializeT(ih, 1);
  if (!sameIdeal(one, gb.sourceIdeal(), worder))
    throw internalError("homogenized family: fiber over t=1 differs from I");
  auto zero = specializeT(ih, 0);
  std::vector<Polynomial> forms;
  for (const auto& g : basis) forms.push_back(weightInitialForm(g, w));
  if (!sameIdeal(zero, forms, worder))
    throw internalError("homogenized family: fiber over t=0 differs from in_w(I)");
  MonomialIdeal a = initialIdeal(zero, worder);
  MonomialIdeal b = initialIdeal(basis, worder);
  if (!(a == b)) throw internalError("homogenized family: special fiber has the wrong initial ideal");
  return ih;
}

}  // namespace golod
