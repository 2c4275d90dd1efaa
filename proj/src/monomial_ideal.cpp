#include "golodlab/monomial_ideal.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "golodlab/groebner.hpp"
#include "golodlab/linalg.hpp"

namespace golod {

// ---------------------------------------------------------------- MonomialIdeal

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a > b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out)
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(std::move(g));
  }
  return out;
}

MonomialIdeal::MonomialIdeal(RingPtr ring, std::vector<Monomial> gens) : ring_(std::move(ring)) {
  for (const auto& g : gens)
    if (g.size() != ring_->nvars()) throw inputError("monomial does not match the ring");
  gens_ = minimalize(std::move(gens));
}

MonomialIdeal MonomialIdeal::fromPolynomials(RingPtr ring, const std::vector<Polynomial>& gens) {
  std::vector<Monomial> ms;
  for (const auto& g : gens) {
    if (g.isZero()) continue;
    if (!g.isMonomial()) throw inputError("not a monomial ideal: " + g.toString());
    ms.push_back(g.terms().begin()->first);
  }
  return MonomialIdeal(std::move(ring), std::move(ms));
}

bool MonomialIdeal::isUnit() const {
  return std::any_of(gens_.begin(), gens_.end(), [](const Monomial& m) { return m.isOne(); });
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::isSquarefree() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& m) { return m.isSquarefree(); });
}

std::optional<int> MonomialIdeal::generatorDegree() const {
  if (gens_.empty()) return std::nullopt;
  int d = gens_.front().degree();
  for (const auto& g : gens_)
    if (g.degree() != d) return std::nullopt;
  return d;
}

int MonomialIdeal::maxDegree() const {
  int d = 0;
  for (const auto& g : gens_) d = std::max(d, g.degree());
  return d;
}

Monomial MonomialIdeal::lcmOfGenerators() const {
  Monomial l(ring_->nvars());
  for (const auto& g : gens_) l = l.lcm(g);
  return l;
}

MonomialIdeal MonomialIdeal::operator*(const MonomialIdeal& o) const {
  if (!ring_->sameAs(*o.ring_)) throw inputError("ideals live in different rings");
  std::vector<Monomial> out;
  for (const auto& a : gens_)
    for (const auto& b : o.gens_) out.push_back(a * b);
  return MonomialIdeal(ring_, std::move(out));
}

MonomialIdeal MonomialIdeal::operator+(const MonomialIdeal& o) const {
  if (!ring_->sameAs(*o.ring_)) throw inputError("ideals live in different rings");
  std::vector<Monomial> out = gens_;
  out.insert(out.end(), o.gens_.begin(), o.gens_.end());
  return MonomialIdeal(ring_, std::move(out));
}

MonomialIdeal MonomialIdeal::power(int t) const {
  if (t < 0) throw inputError("negative ideal power");
  MonomialIdeal out(ring_, {Monomial(ring_->nvars())});
  for (int k = 0; k < t; ++k) out = out * *this;
  return out;
}

std::vector<Polynomial> MonomialIdeal::toPolynomials() const {
  std::vector<Polynomial> out;
  for (const auto& g : gens_) out.push_back(Polynomial::monomial(ring_, g));
  return out;
}

std::string MonomialIdeal::toString() const {
  std::string s = "(";
  for (std::size_t k = 0; k < gens_.size(); ++k) {
    if (k) s += ", ";
    s += formatMonomial(*ring_, gens_[k]);
  }
  return s + ")";
}

// ---------------------------------------------------------------- Hilbert series

namespace {

using Series = std::vector<long>;

Series seriesAdd(Series a, const Series& b, long sign = 1) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t k = 0; k < b.size(); ++k) a[k] += sign * b[k];
  while (a.size() > 1 && a.back() == 0) a.pop_back();
  return a;
}

Series seriesShift(const Series& a, int by) {
  Series out(static_cast<std::size_t>(by), 0);
  out.insert(out.end(), a.begin(), a.end());
  return out;
}

Series seriesMul(const Series& a, const Series& b) {
  Series out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// Bigatti-style pivot recursion on a variable pivot.
Series numerator(std::vector<Monomial> gens) {
  if (gens.empty()) return {1};
  std::size_t n = gens.front().size();
  bool coprime = true;
  std::vector<int> count(n, 0);
  for (const auto& g : gens)
    for (std::size_t k = 0; k < n; ++k)
      if (g[k] > 0) ++count[k];
  for (int c : count)
    if (c > 1) coprime = false;
  if (coprime) {
    Series out{1};
    for (const auto& g : gens) {
      Series f(static_cast<std::size_t>(g.degree()) + 1, 0);
      f[0] = 1;
      f.back() -= 1;
      out = seriesMul(out, f);
    }
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return out;
  }
  std::size_t x = static_cast<std::size_t>(std::max_element(count.begin(), count.end()) - count.begin());
  // K(I) = K(I + (x)) + t K(I : x)
  std::vector<Monomial> plus{Monomial::variable(n, x)};
  std::vector<Monomial> colon;
  for (const auto& g : gens) {
    if (g[x] == 0) plus.push_back(g);
    Monomial h = g;
    if (h[x] > 0) h[x] -= 1;
    colon.push_back(std::move(h));
  }
  return seriesAdd(numerator(minimalize(std::move(plus))),
                   seriesShift(numerator(minimalize(std::move(colon))), 1));
}

long binomial(long n, long k) {
  if (k < 0 || n < k) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Series numeratorOf(const std::vector<Polynomial>& gens, const RingPtr& ring) {
  bool allMonomial = true, allZero = true;
  for (const auto& g : gens) {
    if (!g.isZero()) allZero = false;
    if (!g.isZero() && !g.isMonomial()) allMonomial = false;
  }
  if (allZero) return {1};
  if (allMonomial) return hilbertNumerator(MonomialIdeal::fromPolynomials(ring, gens));
  return hilbertNumerator(initialIdeal(gens, TermOrder::grevlex(ring->nvars())));
}

}  // namespace

std::vector<long> hilbertNumerator(const MonomialIdeal& ideal) { return numerator(ideal.generators()); }

std::vector<long> hilbertFunction(const MonomialIdeal& ideal, int maxDegree) {
  Series k = hilbertNumerator(ideal);
  long n = static_cast<long>(ideal.ring()->nvars());
  std::vector<long> out;
  for (long d = 0; d <= maxDegree; ++d) {
    long h = 0;
    for (long i = 0; i < static_cast<long>(k.size()) && i <= d; ++i)
      h += k[static_cast<std::size_t>(i)] * (n == 0 ? (d == i ? 1 : 0) : binomial(d - i + n - 1, n - 1));
    out.push_back(h);
  }
  return out;
}

// ---------------------------------------------------------------- polarization

Monomial VariableIdentification::apply(const Monomial& m) const {
  Monomial out(target->nvars());
  for (std::size_t k = 0; k < m.size(); ++k) out[targetOf[k]] += m[k];
  return out;
}

Polynomial VariableIdentification::apply(const Polynomial& f) const {
  Polynomial out(target);
  for (const auto& [m, c] : f.terms()) out.addTerm(apply(m), c);
  return out;
}

Polarization polarize(const MonomialIdeal& ideal) {
  if (ideal.isZero() || ideal.isUnit()) throw inputError("polarization needs a proper nonzero ideal");
  const RingPtr& ring = ideal.ring();
  const std::size_t n = ring->nvars();
  std::vector<int> top(n, 1);
  for (const auto& g : ideal.generators())
    for (std::size_t k = 0; k < n; ++k) top[k] = std::max(top[k], g[k]);

  std::set<std::string> taken(ring->names().begin(), ring->names().end());
  std::vector<std::string> names;
  std::vector<std::size_t> first(n), targetOf;
  for (std::size_t k = 0; k < n; ++k) {
    first[k] = names.size();
    if (top[k] == 1) {
      names.push_back(ring->name(k));
      targetOf.push_back(k);
      continue;
    }
    for (int j = 1; j <= top[k]; ++j) {
      std::string name = ring->name(k) + "_" + std::to_string(j);
      while (taken.count(name)) name += "p";
      taken.insert(name);
      names.push_back(name);
      targetOf.push_back(k);
    }
  }
  RingPtr polarRing = makeRing(names, ring->field());
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) {
    Monomial m(names.size());
    for (std::size_t k = 0; k < n; ++k)
      for (int j = 0; j < g[k]; ++j) m[first[k] + static_cast<std::size_t>(j)] = 1;
    gens.push_back(std::move(m));
  }
  Polarization p{ideal, MonomialIdeal(polarRing, gens), {polarRing, ring, targetOf}, {}};
  for (std::size_t k = 0; k < n; ++k)
    for (int j = 1; j < top[k]; ++j) p.regularSequence.emplace_back(first[k], first[k] + static_cast<std::size_t>(j));
  return p;
}

Specialization specializeVariableDifferences(
    const std::vector<Polynomial>& ideal, const std::vector<std::pair<std::size_t, std::size_t>>& sigma) {
  if (ideal.empty()) throw inputError("empty generator list");
  RingPtr ring = ideal.front().ring();
  const std::size_t n = ring->nvars();
  for (const auto& g : ideal)
    if (!g.isZero() && !g.isHomogeneous()) throw inputError("specialization check needs a homogeneous ideal");
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t v) {
    return parent[v] == v ? v : parent[v] = find(parent[v]);
  };
  bool independent = true;
  for (auto [a, b] : sigma) {
    if (a >= n || b >= n || a == b) throw inputError("sigma must consist of differences of distinct variables");
    std::size_t ra = find(a), rb = find(b);
    if (ra == rb) {
      independent = false;  // a dependent linear form is a zero divisor modulo the earlier ones
      continue;
    }
    if (rb < ra) std::swap(ra, rb);
    parent[rb] = ra;
  }
  std::vector<std::string> names;
  std::map<std::size_t, std::size_t> slot;
  for (std::size_t v = 0; v < n; ++v)
    if (find(v) == v) {
      slot[v] = names.size();
      names.push_back(ring->name(v));
    }
  std::vector<std::size_t> targetOf(n);
  for (std::size_t v = 0; v < n; ++v) targetOf[v] = slot.at(find(v));
  Specialization s;
  s.map = {ring, makeRing(names, ring->field()), targetOf};
  for (const auto& g : ideal) s.image.push_back(s.map.apply(g));

  Series before = numeratorOf(ideal, ring);
  Series after = numeratorOf(s.image, s.map.target);
  s.checkedDegree = static_cast<int>(std::max(before.size(), after.size())) - 1;
  s.regular = independent && before == after;
  return s;
}

// ---------------------------------------------------------------- Betti oracle

namespace {

// Betti numbers from chain complexes C_i (i = 0..top) given boundary matrices.
std::vector<long> homologyDims(const Field& field, const std::vector<std::size_t>& dims,
                               const std::vector<std::vector<SparseVec>>& boundary) {
  // boundary[i] : C_i -> C_{i-1} as columns; boundary[0] empty.
  std::vector<long> rank(dims.size() + 1, 0);
  for (std::size_t i = 1; i < dims.size(); ++i) rank[i] = static_cast<long>(rankOf(field, boundary[i]));
  std::vector<long> out;
  for (std::size_t i = 0; i < dims.size(); ++i)
    out.push_back(static_cast<long>(dims[i]) - rank[i] - rank[i + 1]);
  return out;
}

}  // namespace

BettiTable bettiOracleTaylor(const MonomialIdeal& ideal) {
  BettiTable table;
  table.set(0, 0, 1);
  const auto& gens = ideal.generators();
  const std::size_t r = gens.size();
  if (r == 0) return table;
  if (r > 24) throw capError("Taylor complex on more than 24 generators");
  const Field& field = ideal.ring()->field();
  const std::uint32_t total = 1u << r;
  std::vector<Monomial> lcm(total);
  lcm[0] = Monomial(ideal.ring()->nvars());
  std::map<Monomial, std::vector<std::uint32_t>> strands;
  for (std::uint32_t s = 1; s < total; ++s) {
    std::uint32_t low = s & (~s + 1);
    int bit = __builtin_ctz(low);
    lcm[s] = lcm[s ^ low].lcm(gens[static_cast<std::size_t>(bit)]);
    strands[lcm[s]].push_back(s);
  }
  for (const auto& [alpha, subsets] : strands) {
    // Homology of the subsets with lcm exactly alpha; faces dropping a vertex
    // stay in the strand only when their lcm is unchanged.
    int top = 0;
    for (auto s : subsets) top = std::max(top, __builtin_popcount(s));
    std::vector<std::vector<std::uint32_t>> bySize(static_cast<std::size_t>(top) + 1);
    std::map<std::uint32_t, int> index;
    for (auto s : subsets) {
      auto& v = bySize[static_cast<std::size_t>(__builtin_popcount(s))];
      index[s] = static_cast<int>(v.size());
      v.push_back(s);
    }
    std::vector<std::size_t> dims;
    std::vector<std::vector<SparseVec>> boundary(bySize.size());
    for (std::size_t i = 0; i < bySize.size(); ++i) dims.push_back(bySize[i].size());
    for (std::size_t i = 2; i < bySize.size(); ++i) {
      for (auto s : bySize[i]) {
        std::map<int, Scalar> col;
        int pos = 0;
        for (int b = 0; b < static_cast<int>(r); ++b) {
          if (!(s >> b & 1u)) continue;
          std::uint32_t face = s & ~(1u << b);
          if (lcm[face] == alpha) col[index.at(face)] = field.fromInt(pos % 2 == 0 ? 1 : -1);
          ++pos;
        }
        SparseVec v;
        for (auto& [k, c] : col)
          if (c != 0) v.emplace_back(k, c);
        boundary[i].push_back(std::move(v));
      }
    }
    auto h = homologyDims(field, dims, boundary);
    for (std::size_t i = 1; i < h.size(); ++i)
      if (h[i] != 0) table.add(static_cast<int>(i), alpha.degree(), h[i]);
  }
  return table;
}

BettiTable bettiOracleSimplicial(const MonomialIdeal& ideal) {
  BettiTable table;
  table.set(0, 0, 1);
  const auto& gens = ideal.generators();
  if (gens.empty()) return table;
  const Field& field = ideal.ring()->field();
  const std::size_t n = ideal.ring()->nvars();

  // lcm lattice (without the bottom element)
  std::set<Monomial> lattice(gens.begin(), gens.end());
  std::vector<Monomial> frontier(gens.begin(), gens.end());
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const auto& a : frontier)
      for (const auto& g : gens) {
        Monomial l = a.lcm(g);
        if (lattice.insert(l).second) next.push_back(l);
      }
    frontier = std::move(next);
  }

  for (const auto& alpha : lattice) {
    // Upper Koszul simplicial complex: squarefree F <= alpha with x^(alpha - F) in I.
    std::vector<std::size_t> support;
    for (std::size_t k = 0; k < n; ++k)
      if (alpha[k] > 0) support.push_back(k);
    const std::size_t s = support.size();
    if (s > 24) throw capError("lcm-lattice element with support above 24 variables");
    std::vector<std::vector<std::uint32_t>> faces(s + 2);  // faces[k+1] has dimension k
    std::map<std::uint32_t, int> index;
    for (std::uint32_t f = 0; f < (1u << s); ++f) {
      Monomial m = alpha;
      for (std::size_t b = 0; b < s; ++b)
        if (f >> b & 1u) m[support[b]] -= 1;
      if (!ideal.contains(m)) continue;
      auto& v = faces[static_cast<std::size_t>(__builtin_popcount(f))];
      index[f] = static_cast<int>(v.size());
      v.push_back(f);
    }
    // Reduced chain complex: C_{-1} = empty face at slot 0.
    std::vector<std::size_t> dims;
    std::vector<std::vector<SparseVec>> boundary(faces.size());
    for (std::size_t k = 0; k < faces.size(); ++k) dims.push_back(faces[k].size());
    for (std::size_t k = 1; k < faces.size(); ++k) {
      for (auto f : faces[k]) {
        SparseVec v;
        std::map<int, Scalar> col;
        int pos = 0;
        for (std::size_t b = 0; b < s; ++b) {
          if (!(f >> b & 1u)) continue;
          col[index.at(f & ~(1u << b))] = field.fromInt(pos % 2 == 0 ? 1 : -1);
          ++pos;
        }
        for (auto& [i, c] : col) v.emplace_back(i, c);
        boundary[k].push_back(std::move(v));
      }
    }
    auto h = homologyDims(field, dims, boundary);
    // h[k] = reduced H_{k-1}; beta_{i,alpha}(R/I) = H~_{i-2}(K^alpha).
    for (std::size_t k = 0; k < h.size(); ++k)
      if (h[k] != 0) table.add(static_cast<int>(k) + 1, alpha.degree(), h[k]);
  }
  return table;
}

BettiTable bettiOracle(const MonomialIdeal& ideal, std::size_t taylorGeneratorLimit) {
  if (ideal.isUnit()) return BettiTable();
  if (ideal.size() <= taylorGeneratorLimit) return bettiOracleTaylor(ideal);
  return bettiOracleSimplicial(ideal);
}

bool hasLinearResolution(const BettiTable& table, int generatorDegree) {
  for (const auto& [k, v] : table.entries()) {
    if (k.first == 0 || v == 0) continue;
    if (k.second != k.first + generatorDegree - 1) return false;
  }
  return true;
}

bool hasLinearResolution(const MonomialIdeal& ideal) {
  auto d = ideal.generatorDegree();
  if (!d) throw inputError("linear resolution is undefined for mixed generator degrees");
  return hasLinearResolution(bettiOracle(ideal), *d);
}

// ---------------------------------------------------------------- rainbow ideals

std::optional<RainbowStructure> rainbowFromColoring(const MonomialIdeal& ideal,
                                                    const std::vector<int>& colorOfVariable) {
  const std::size_t n = ideal.ring()->nvars();
  if (colorOfVariable.size() != n) throw inputError("coloring length does not match the ring");
  if (ideal.isZero() || ideal.isUnit()) return std::nullopt;
  std::vector<bool> used(n, false);
  for (const auto& g : ideal.generators())
    for (std::size_t k = 0; k < n; ++k)
      if (g[k] > 0) used[k] = true;
  std::set<int> ids;
  for (std::size_t k = 0; k < n; ++k)
    if (used[k]) ids.insert(colorOfVariable[k]);
  std::map<int, int> compact;
  for (int id : ids) compact.emplace(id, static_cast<int>(compact.size()));

  RainbowStructure rs;
  rs.colorCount = static_cast<int>(ids.size());
  rs.classSizes.assign(ids.size(), 0);
  rs.variableOf.assign(ids.size(), {});
  rs.label.assign(n, {-1, -1});
  for (std::size_t k = 0; k < n; ++k) {
    if (!used[k]) continue;
    int c = compact.at(colorOfVariable[k]);
    rs.label[k] = {c, rs.classSizes[static_cast<std::size_t>(c)]++};
    rs.variableOf[static_cast<std::size_t>(c)].push_back(k);
  }
  for (const auto& g : ideal.generators()) {
    if (!g.isSquarefree() || g.degree() != rs.colorCount) return std::nullopt;
    std::vector<bool> seen(ids.size(), false);
    for (std::size_t k = 0; k < n; ++k) {
      if (g[k] == 0) continue;
      auto c = static_cast<std::size_t>(rs.label[k].first);
      if (seen[c]) return std::nullopt;
      seen[c] = true;
    }
  }
  return rs;
}

RainbowSearch rainbowDetect(const MonomialIdeal& ideal, const std::optional<std::vector<int>>& coloring,
                            int maxColors, int maxVariables) {
  RainbowSearch out;
  out.maxColors = maxColors;
  out.maxVariables = maxVariables;
  if (coloring) {
    out.structure = rainbowFromColoring(ideal, *coloring);
    out.outcome = out.structure ? RainbowSearch::Outcome::Found : RainbowSearch::Outcome::NotFound;
    out.detail = out.structure ? "given coloring is rainbow" : "given coloring is not rainbow";
    return out;
  }
  if (ideal.isZero() || ideal.isUnit()) {
    out.detail = "zero or unit ideal";
    return out;
  }
  if (!ideal.isSquarefree()) {
    out.detail = "a generator is not squarefree, so no coloring exists";
    return out;
  }
  auto d = ideal.generatorDegree();
  if (!d) {
    out.detail = "generators of different degrees, so no coloring exists";
    return out;
  }
  const std::size_t n = ideal.ring()->nvars();
  std::vector<std::size_t> vars;
  for (std::size_t k = 0; k < n; ++k)
    for (const auto& g : ideal.generators())
      if (g[k] > 0) {
        vars.push_back(k);
        break;
      }
  if (*d > maxColors || static_cast<int>(vars.size()) > maxVariables) {
    out.outcome = RainbowSearch::Outcome::BoundExceeded;
    out.detail = "search bound exceeded: " + std::to_string(*d) + " colors, " + std::to_string(vars.size()) +
                 " variables (bound " + std::to_string(maxColors) + " colors, " +
                 std::to_string(maxVariables) + " variables)";
    return out;
  }
  // A rainbow coloring with d colors is exactly a proper d-coloring of the
  // graph joining variables that share a generator.
  const std::size_t v = vars.size();
  std::vector<std::vector<bool>> adj(v, std::vector<bool>(v, false));
  for (const auto& g : ideal.generators())
    for (std::size_t a = 0; a < v; ++a)
      for (std::size_t b = a + 1; b < v; ++b)
        if (g[vars[a]] > 0 && g[vars[b]] > 0) adj[a][b] = adj[b][a] = true;
  std::vector<int> color(v, -1);
  // order by degree, highest first
  std::vector<std::size_t> order(v);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::count(adj[a].begin(), adj[a].end(), true) > std::count(adj[b].begin(), adj[b].end(), true);
  });
  std::function<bool(std::size_t, int)> place = [&](std::size_t pos, int used) {
    if (pos == v) return true;
    std::size_t a = order[pos];
    for (int c = 0; c < std::min(used + 1, *d); ++c) {
      bool ok = true;
      for (std::size_t b = 0; b < v && ok; ++b)
        if (adj[a][b] && color[b] == c) ok = false;
      if (!ok) continue;
      color[a] = c;
      if (place(pos + 1, std::max(used, c + 1))) return true;
      color[a] = -1;
    }
    return false;
  };
  if (!place(0, 0)) {
    out.detail = "no rainbow coloring with " + std::to_string(*d) + " colors on " + std::to_string(v) +
                 " variables (exhaustive within bound " + std::to_string(maxColors) + " colors, " +
                 std::to_string(maxVariables) + " variables)";
    return out;
  }
  std::vector<int> full(n, -1);
  for (std::size_t a = 0; a < v; ++a) full[vars[a]] = color[a];
  out.structure = rainbowFromColoring(ideal, full);
  if (!out.structure) throw internalError("rainbow search produced an invalid coloring");
  out.outcome = RainbowSearch::Outcome::Found;
  out.detail = "found a coloring with " + std::to_string(*d) + " colors";
  return out;
}

MonomialIdeal rankedProjection(const MonomialIdeal& ideal, const RainbowStructure& rainbow,
                               const std::vector<int>& keep) {
  if (keep.empty()) throw inputError("ranked projection onto no colors gives the unit ideal");
  for (int c : keep)
    if (c < 0 || c >= rainbow.colorCount) throw inputError("color out of range");
  std::vector<bool> kept(static_cast<std::size_t>(rainbow.colorCount), false);
  for (int c : keep) kept[static_cast<std::size_t>(c)] = true;
  std::vector<Monomial> out;
  for (const auto& g : ideal.generators()) {
    Monomial m = g;
    for (std::size_t k = 0; k < m.size(); ++k)
      if (rainbow.label[k].first >= 0 && !kept[static_cast<std::size_t>(rainbow.label[k].first)]) m[k] = 0;
    out.push_back(std::move(m));
  }
  return MonomialIdeal(ideal.ring(), std::move(out));
}

MonomialIdeal complementaryIdeal(const MonomialIdeal& ideal, const RainbowStructure& rainbow) {
  const std::size_t n = ideal.ring()->nvars();
  std::set<Monomial> present(ideal.generators().begin(), ideal.generators().end());
  std::vector<Monomial> out;
  Monomial m(n);
  std::function<void(int)> rec = [&](int c) {
    if (c == rainbow.colorCount) {
      if (!present.count(m)) out.push_back(m);
      return;
    }
    for (std::size_t v : rainbow.variableOf[static_cast<std::size_t>(c)]) {
      m[v] = 1;
      rec(c + 1);
      m[v] = 0;
    }
  };
  rec(0);
  return MonomialIdeal(ideal.ring(), std::move(out));
}

std::optional<std::pair<MonomialIdeal, int>> recognizePower(const MonomialIdeal& ideal) {
  if (ideal.isZero() || ideal.isUnit()) return std::nullopt;
  int top = 0;
  for (const auto& g : ideal.generators()) {
    int e = 0;
    for (std::size_t k = 0; k < g.size(); ++k) e = std::gcd(e, g[k]);
    top = std::max(top, e);
  }
  for (int t = 2; t <= top; ++t) {
    std::vector<Monomial> roots;
    for (const auto& g : ideal.generators()) {
      bool divisible = true;
      Monomial r(g.size());
      for (std::size_t k = 0; k < g.size() && divisible; ++k) {
        if (g[k] % t != 0) divisible = false;
        r[k] = g[k] / t;
      }
      if (divisible) roots.push_back(std::move(r));
    }
    if (roots.empty()) continue;
    MonomialIdeal j(ideal.ring(), std::move(roots));
    if (j.isUnit()) continue;
    if (j.power(t) == ideal) return std::make_pair(j, t);
  }
  return std::nullopt;
}

}  // namespace golod
