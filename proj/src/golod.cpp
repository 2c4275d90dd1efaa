#include "golodlab/golod.hpp"

#include <algorithm>
#include <unordered_map>

#include "golodlab/massey_io.hpp"
#include "golodlab/text_format.hpp"

namespace golod {

using nlohmann::json;

namespace {

bool allMonomial(const GroebnerBasis& gb) {
  return std::all_of(gb.generators().begin(), gb.generators().end(),
                     [](const Polynomial& p) { return p.isMonomial(); });
}

long binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

}  // namespace

// ---------------------------------------------------------------- fiber invariance

FiberInvariance fiberInvariant(const GroebnerBasis& gb) {
  FiberInvariance out;
  for (const auto& g : gb.generators())
    if (!g.isHomogeneous()) throw inputError("fiber invariance needs a homogeneous ideal");
  if (allMonomial(gb)) {
    out.invariant = true;
    out.reason = "monomial";
    return out;
  }
  MonomialIdeal lead = gb.leadingIdeal();
  out.initial = bettiOracle(lead);
  auto d = lead.generatorDegree();
  // in(I) linear forces I linear too (beta(I) <= beta(in I) and both share a
  // Hilbert function), so nothing can cancel.
  if (d && hasLinearResolution(*out.initial, *d)) {
    out.invariant = true;
    out.reason = lead.isSquarefree() ? "linear squarefree initial ideal" : "linear initial ideal";
    return out;
  }
  KoszulHomology h(QuotientAlgebra::create(gb));
  out.ideal = bettiViaKoszul(h);
  out.invariant = *out.ideal == *out.initial;
  out.reason = "compared";
  return out;
}

FiberInvariance fiberInvariant(const std::vector<Polynomial>& ideal, const TermOrder& order) {
  return fiberInvariant(buchberger(ideal, order));
}

// ---------------------------------------------------------------- series

std::vector<mpz_class> serreBound(const std::vector<long>& homologyTotals, std::size_t nvars, int N) {
  if (N < 0) throw inputError("N must be non-negative");
  std::vector<mpz_class> inv(static_cast<std::size_t>(N) + 1, 0);
  inv[0] = 1;
  for (int k = 1; k <= N; ++k)
    for (std::size_t i = 1; i < homologyTotals.size(); ++i) {
      int shift = static_cast<int>(i) + 1;
      if (shift <= k) inv[static_cast<std::size_t>(k)] += homologyTotals[i] * inv[static_cast<std::size_t>(k - shift)];
    }
  std::vector<mpz_class> out(static_cast<std::size_t>(N) + 1, 0);
  for (int k = 0; k <= N; ++k)
    for (int a = 0; a <= k; ++a)
      out[static_cast<std::size_t>(k)] += binomial(static_cast<long>(nvars), a) * inv[static_cast<std::size_t>(k - a)];
  return out;
}

std::vector<mpz_class> serreBound(const BettiTable& betti, std::size_t nvars, int N) {
  return serreBound(betti.totals(), nvars, N);
}

namespace {

// Free module over A with homogeneous generators, for the resolution of k.
struct FreeModule {
  std::vector<int> degree;
  std::vector<SparseVec> image;  // image of each generator in the previous module
};

class GradedBasis {
 public:
  GradedBasis(const QuotientAlgebra& a, const FreeModule& m) : a_(a), m_(m) {}

  struct Piece {
    std::vector<std::pair<std::size_t, const Monomial*>> cells;
    std::map<std::pair<std::size_t, Monomial>, int> index;
  };

  const Piece& at(int d) {
    auto it = pieces_.find(d);
    if (it != pieces_.end()) return it->second;
    Piece p;
    for (std::size_t g = 0; g < m_.degree.size(); ++g) {
      int e = d - m_.degree[g];
      if (e < 0) continue;
      for (const auto& mono : a_.standardOfDegree(e)) {
        p.index.emplace(std::make_pair(g, mono), static_cast<int>(p.cells.size()));
        p.cells.emplace_back(g, &mono);
      }
    }
    return pieces_.emplace(d, std::move(p)).first->second;
  }

  // u * v for v of degree d, a monomial u of degree k.
  SparseVec multiply(const SparseVec& v, int d, const Monomial& u, int k) {
    const Field& f = a_.field();
    const Piece& src = at(d);
    const Piece& dst = at(d + k);
    std::map<int, Scalar> acc;
    for (const auto& [idx, c] : v) {
      const auto& [g, mono] = src.cells[static_cast<std::size_t>(idx)];
      for (const auto& t : a_.reduce(*mono * u)) {
        int j = dst.index.at({g, t.mono});
        auto& slot = acc[j];
        slot = f.add(slot, f.mul(c, t.coeff));
      }
    }
    SparseVec out;
    for (auto& [j, c] : acc)
      if (c != 0) out.emplace_back(j, c);
    return out;
  }

 private:
  const QuotientAlgebra& a_;
  const FreeModule& m_;
  std::map<int, Piece> pieces_;
};

}  // namespace

PoincareData poincareCoeffs(const AlgebraPtr& algebra, int N, int D, std::size_t workCap, bool partial) {
  if (N < 0) throw inputError("N must be non-negative");
  const auto& gb = algebra->groebnerBasis();
  int m = 2;
  for (const auto& g : gb.generators()) {
    if (g.maxDegree() < 2) throw inputError("ideal contains a linear form; the resolution of k needs I inside m^2");
    m = std::max(m, g.maxDegree());
  }
  PoincareData out;
  out.N = N;
  out.D = D;
  out.degreeNeeded = N >= 1 ? 1 + (N - 1) * (m - 1) : 0;
  if (out.degreeNeeded > D)
    throw capError("internal degree cap D=" + std::to_string(D) + " is below the bound " +
                   std::to_string(out.degreeNeeded) + " needed for homological degree " + std::to_string(N));
  const std::size_t n = algebra->nvars();
  const Field& field = algebra->field();
  out.coefficients.push_back(1);
  if (N == 0) return out;
  out.coefficients.push_back(static_cast<long>(n));

  std::vector<FreeModule> F(2);
  F[0].degree = {0};
  {
    GradedBasis b0(*algebra, F[0]);
    const auto& p1 = b0.at(1);
    for (std::size_t v = 0; v < n; ++v) {
      F[1].degree.push_back(1);
      F[1].image.push_back({{p1.index.at({0, Monomial::variable(n, v)}), Scalar(1)}});
    }
  }
  std::vector<Monomial> vars;
  for (std::size_t v = 0; v < n; ++v) vars.push_back(Monomial::variable(n, v));

  for (int i = 1; i < N; ++i) {
    FreeModule next;
    GradedBasis here(*algebra, F[static_cast<std::size_t>(i)]);
    GradedBasis below(*algebra, F[static_cast<std::size_t>(i - 1)]);
    const FreeModule& Fi = F[static_cast<std::size_t>(i)];
    int bound = 1 + i * (m - 1);
    std::vector<SparseVec> previousKernel;
    if (!Fi.degree.empty()) {
      int start = *std::min_element(Fi.degree.begin(), Fi.degree.end()) + 1;
      for (int d = start; d <= bound; ++d) {
        const auto& piece = here.at(d);
        out.work = std::max(out.work, piece.cells.size());
        if (piece.cells.size() > workCap) {
          std::string why = "resolution of k: graded piece of size " + std::to_string(piece.cells.size()) +
                         " at homological degree " + std::to_string(i) + ", internal degree " + std::to_string(d) +
                         " exceeds the work cap " + std::to_string(workCap);
          if (!partial) throw capError(why);
          out.complete = false;
          out.detail = why;
          return out;
        }
        std::vector<SparseVec> columns;
        columns.reserve(piece.cells.size());
        for (const auto& [g, mono] : piece.cells)
          columns.push_back(below.multiply(Fi.image[g], Fi.degree[g], *mono, d - Fi.degree[g]));
        auto kernel = kernelOf(field, columns);
        Echelon decomposable(field);
        for (const auto& z : previousKernel)
          for (const auto& x : vars) decomposable.insert(here.multiply(z, d - 1, x, 1));
        for (const auto& z : kernel)
          if (decomposable.insert(z)) {
            next.degree.push_back(d);
            next.image.push_back(z);
          }
        previousKernel = std::move(kernel);
      }
    }
    out.coefficients.push_back(static_cast<long>(next.degree.size()));
    F.push_back(std::move(next));
    // only the last two modules are needed
    if (F.size() > 3) F[F.size() - 4] = FreeModule{};
  }
  return out;
}

// ---------------------------------------------------------------- certificate

std::string verdictName(GolodCertificate::Verdict v) {
  switch (v) {
    case GolodCertificate::Verdict::NotGolod:
      return "NotGolod";
    case GolodCertificate::Verdict::GolodProven:
      return "GolodProven";
    case GolodCertificate::Verdict::GolodUpTo:
      return "GolodUpTo";
  }
  return "";
}

namespace {

std::string idealText(const GroebnerBasis& gb) {
  std::string s = "(";
  for (std::size_t k = 0; k < gb.generators().size(); ++k) s += (k ? ", " : "") + gb.generators()[k].toString();
  return s + ")";
}

// Rough size of the product/Massey scan.
double scanCost(const KoszulHomology& h) {
  const auto& a = h.algebra();
  if (a->groebnerBasis().generators().empty()) return 0;
  const double n = static_cast<double>(h.nvars());
  if (h.grading().isExponent()) {
    Monomial l = a->leadingIdeal().lcmOfGenerators();
    double keys = 1;
    for (std::size_t v = 0; v < l.size(); ++v) keys *= l[v] + 1;
    return keys * n;
  }
  double cost = 0;
  BettiTable lead = bettiOracle(a->leadingIdeal());
  for (const auto& [ij, v] : lead.entries()) {
    if (ij.first < 1) continue;
    cost += static_cast<double>(a->standardOfDegree(ij.second - ij.first).size()) *
            static_cast<double>(binomial(static_cast<long>(n), ij.first));
  }
  return cost;
}

std::string classText(const HomologyClass& c) {
  return "H_" + std::to_string(c.degree) + " class " + c.rep.toString();
}

struct Context {
  GolodConfig config;
  int depth = 0;
};

void fillSerre(GolodCertificate& cert, const AlgebraPtr& alg, const BettiTable& betti) {
  const auto& cfg = cert.config;
  cert.serre.bound = serreBound(betti, alg->nvars(), cfg.N);
  try {
    PoincareData pd = poincareCoeffs(alg, cfg.N, cfg.D, cfg.poincareWorkCap, true);
    cert.serre.poincare = pd.coefficients;
    cert.serre.N = static_cast<int>(pd.coefficients.size()) - 1;
    cert.serre.complete = pd.complete;
    cert.serre.detail = pd.complete ? "resolution of k to internal degree " + std::to_string(pd.degreeNeeded)
                                    : "stopped after t^" + std::to_string(cert.serre.N) + ": " + pd.detail;
  } catch (const Error& e) {
    if (e.kind() != Error::Kind::CapExceeded) throw;
    cert.serre.complete = false;
    cert.serre.detail = e.what();
    cert.serre.N = -1;
  }
  for (std::size_t k = 0; k < cert.serre.poincare.size(); ++k)
    if (cert.serre.poincare[k] > cert.serre.bound[k])
      throw internalError("Serre inequality violated at t^" + std::to_string(k));
}

int firstDeficit(const SerreData& s) {
  for (std::size_t k = 0; k < s.poincare.size(); ++k)
    if (s.poincare[k] < s.bound[k]) return static_cast<int>(k);
  return -1;
}

GolodCertificate certify(const GroebnerBasis& gb, Context ctx, bool withSerre);

GolodCertificate certifyPolynomials(const std::vector<Polynomial>& gens, const TermOrder& order, Context ctx,
                                    bool withSerre) {
  return certify(buchberger(gens, order), ctx, withSerre);
}

void finish(GolodCertificate& cert, const AlgebraPtr& alg, const std::optional<BettiTable>& betti, bool withSerre) {
  if (!withSerre) return;
  if (!betti) {
    cert.serre.detail = "Koszul homology too large for the Serre comparison";
    cert.serre.N = -1;
    return;
  }
  fillSerre(cert, alg, *betti);
  int deficit = firstDeficit(cert.serre);
  if (cert.verdict == GolodCertificate::Verdict::GolodProven && deficit >= 0)
    throw internalError("Serre deficit at t^" + std::to_string(deficit) + " contradicts rule " + cert.rule);
  if (cert.verdict == GolodCertificate::Verdict::NotGolod && cert.serre.complete && deficit < 0)
    cert.evidence.push_back("inconsistency: NotGolod witness but Serre equality holds up to t^" +
                            std::to_string(cert.config.N));
}

GolodCertificate certify(const GroebnerBasis& gb, Context ctx, bool withSerre) {
  GolodCertificate cert;
  cert.config = ctx.config;
  const RingPtr& ring = gb.ring();
  cert.ideal = idealText(gb);
  cert.order = gb.order().describe(*ring);
  for (const auto& g : gb.generators()) {
    if (!g.isHomogeneous()) throw inputError("ideal is not homogeneous");
    if (g.maxDegree() == 0) throw inputError("ideal is the unit ideal");
    if (g.maxDegree() == 1) throw inputError("ideal contains a linear form; eliminate that variable first");
  }
  AlgebraPtr alg = QuotientAlgebra::create(gb);
  KoszulHomology h(alg);
  const bool monomial = allMonomial(gb);
  const std::size_t n = ring->nvars();
  std::optional<MonomialIdeal> mi;
  if (monomial) mi = alg->leadingIdeal();

  std::optional<BettiTable> betti;
  if (monomial) betti = bettiOracle(*mi);

  // (1) products and Massey products
  double cost = scanCost(h);
  if (cost <= static_cast<double>(ctx.config.scanCap)) {
    auto basis = homologyBasisAll(h);
    if (!betti) betti = bettiViaKoszul(h);
    MasseyBuild build = buildTrivialMassey(h, basis, ctx.config.pMax, ctx.config.tupleCap);
    if (build.status == MasseyBuild::Status::Obstructed) {
      GolodWitness w;
      w.ideal = cert.ideal;
      for (int k : build.obstruction) w.classes.push_back(build.table.basis[static_cast<std::size_t>(k)]);
      w.value = build.obstructionValue;
      w.coordinates = h.classCoordinates(build.obstructionValue);
      if (w.classes.size() == 2) {
        w.kind = "product";
        w.detail = classText(w.classes[0]) + " times " + classText(w.classes[1]) + " is not a boundary";
      } else {
        w.kind = "massey";
        w.detail = "Massey product of length " + std::to_string(w.classes.size()) +
                   " is defined (shorter ones vanish) and nonzero";
      }
      w.reverified = reverifyWitness(w);
      if (!w.reverified) throw internalError("NotGolod witness failed re-verification");
      cert.verdict = GolodCertificate::Verdict::NotGolod;
      cert.rule = w.kind == "product" ? "HomologyProduct" : "MasseyProduct";
      cert.chain = {cert.rule};
      cert.evidence.push_back("scan: " + std::to_string(basis.size()) + " homology classes, obstruction after " +
                              std::to_string(build.tuplesTried) + " tuples");
      cert.witness = std::move(w);
      finish(cert, alg, betti, withSerre);
      return cert;
    }
    if (build.status == MasseyBuild::Status::Complete) {
      std::string s = "scan: " + std::to_string(basis.size()) + " homology classes; all products zero; trivial Massey operation on " +
                      std::to_string(build.table.values.size()) + " tuples up to length " + std::to_string(ctx.config.pMax);
      if (static_cast<int>(n) <= 2 * (ctx.config.pMax - 1)) s += " (longer tuples vanish for degree reasons)";
      cert.evidence.push_back(s);
    } else {
      cert.evidence.push_back("scan truncated: " + build.detail);
    }
  } else {
    cert.evidence.push_back("scan skipped: estimated work " + std::to_string(static_cast<long long>(cost)) +
                            " exceeds cap " + std::to_string(ctx.config.scanCap));
  }

  if (monomial) {
    // (2) rainbow with linear resolution
    RainbowSearch rs = rainbowDetect(*mi, ring->colors());
    if (rs.outcome == RainbowSearch::Outcome::Found) {
      bool linear = hasLinearResolution(*betti, *mi->generatorDegree());
      if (linear && rs.structure->colorCount >= 2) {
        RainbowMassey rm = rainbowMasseyTable(h, *mi, *rs.structure, ctx.config.pMax);
        if (rm.table.verified) {
          cert.verdict = GolodCertificate::Verdict::GolodProven;
          cert.rule = "RainbowLinear";
          cert.chain = {cert.rule};
          cert.evidence.push_back("rainbowDetect: " + std::to_string(rs.structure->colorCount) + " colors");
          cert.evidence.push_back("hasLinearResolution (Betti oracle): true");
          cert.evidence.push_back("rainbow Massey table: " + std::to_string(rm.table.values.size()) +
                                  " tuples verified, construction " + rm.construction);
          for (const auto& f : rm.findings) cert.evidence.push_back("finding: " + f);
          cert.table = std::move(rm.table);
          finish(cert, alg, betti, withSerre);
          return cert;
        }
      } else {
        cert.evidence.push_back(linear ? "rainbow with one color" : "rainbow but not linear");
      }
    } else if (rs.outcome == RainbowSearch::Outcome::BoundExceeded) {
      cert.evidence.push_back("rainbowDetect: " + rs.detail);
    }

    // (3) power of a monomial ideal
    if (auto pw = recognizePower(*mi)) {
      cert.verdict = GolodCertificate::Verdict::GolodProven;
      cert.rule = "MonomialPower";
      cert.chain = {cert.rule};
      cert.evidence.push_back("I = J^" + std::to_string(pw->second) + " with J = " + pw->first.toString());
      finish(cert, alg, betti, withSerre);
      return cert;
    }
  } else {
    // (4) fiber invariance, then in(I)
    FiberInvariance fib = fiberInvariant(gb);
    if (fib.ideal) betti = fib.ideal;
    if (fib.invariant && fib.reason != "compared") betti = fib.initial;
    if (fib.invariant) {
      Context inner = ctx;
      ++inner.depth;
      GolodCertificate c = certifyPolynomials(gb.leadingIdeal().toPolynomials(), gb.order(), inner, false);
      cert.evidence.push_back("fiber invariance: " + fib.reason);
      if (c.verdict != GolodCertificate::Verdict::GolodUpTo) {
        cert.verdict = c.verdict;
        cert.rule = "FiberInvariantTransfer";
        cert.chain = {cert.rule};
        cert.chain.insert(cert.chain.end(), c.chain.begin(), c.chain.end());
        for (const auto& e : c.evidence) cert.evidence.push_back("in(I): " + e);
        cert.witness = c.witness;
        cert.table = c.table;
        finish(cert, alg, betti, withSerre);
        return cert;
      }
      cert.evidence.push_back("in(I) only has truncated evidence");
    } else {
      cert.evidence.push_back("fiber invariance fails: Betti tables of I and in(I) differ");
    }
  }

  // (5) polarization
  if (monomial && !mi->isSquarefree()) {
    Polarization pol = polarize(*mi);
    Specialization spec = specializeVariableDifferences(pol.polarized.toPolynomials(), pol.regularSequence);
    if (spec.regular) {
      Context inner = ctx;
      ++inner.depth;
      RingPtr pring = pol.polarized.ring();
      GolodCertificate c =
          certifyPolynomials(pol.polarized.toPolynomials(), TermOrder::grevlex(pring->nvars()), inner, false);
      cert.evidence.push_back("polarization " + pol.polarized.toString() + ": variable differences regular");
      if (c.verdict != GolodCertificate::Verdict::GolodUpTo) {
        cert.verdict = c.verdict;
        cert.rule = "PolarizationTransfer";
        cert.chain = {cert.rule};
        cert.chain.insert(cert.chain.end(), c.chain.begin(), c.chain.end());
        for (const auto& e : c.evidence) cert.evidence.push_back("polarized: " + e);
        cert.witness = c.witness;
        if (c.table) {
          AlgebraPtr palg = QuotientAlgebra::create(pol.polarized);
          KoszulHomology ph(palg);
          KoszulMap map{palg, alg, pol.depolarize};
          TransferResult tr = pushforwardMassey(map, *c.table, ph, h);
          if (tr.ok) {
            cert.evidence.push_back("pushed-forward Massey table verified on " + std::to_string(tr.table.values.size()) +
                                    " tuples");
            cert.table = std::move(tr.table);
          } else {
            cert.evidence.push_back("pushforward of the Massey table failed: " + tr.detail);
          }
        }
        finish(cert, alg, betti, withSerre);
        return cert;
      }
    } else {
      cert.evidence.push_back("polarization: variable differences not regular");
    }
  }

  // (6) truncated evidence
  cert.verdict = GolodCertificate::Verdict::GolodUpTo;
  cert.rule.clear();
  cert.chain.clear();
  if (!withSerre) return cert;
  finish(cert, alg, betti, true);
  int deficit = firstDeficit(cert.serre);
  if (deficit >= 0) {
    cert.verdict = GolodCertificate::Verdict::NotGolod;
    cert.rule = "SerreDeficit";
    cert.chain = {cert.rule};
    GolodWitness w;
    w.kind = "serre";
    w.ideal = cert.ideal;
    w.serreIndex = deficit;
    w.reverified = true;
    w.detail = "Poincare coefficient at t^" + std::to_string(deficit) + " is below the Serre bound";
    cert.witness = std::move(w);
    return cert;
  }
  cert.upTo = std::max(cert.serre.N, 0);
  if (!cert.serre.complete) cert.evidence.push_back("Serre comparison truncated: " + cert.serre.detail);
  return cert;
}

json mpzList(const std::vector<mpz_class>& v) {
  json out = json::array();
  for (const auto& x : v) {
    if (x.fits_slong_p())
      out.push_back(x.get_si());
    else
      out.push_back(x.get_str());
  }
  return out;
}

json classJson(const HomologyClass& c) {
  json j = {{"degree", c.degree}, {"key", c.key}, {"rep", koszulElementJson(c.rep)}};
  if (c.label) j["label"] = *c.label;
  return j;
}

}  // namespace

GolodCertificate golodCertificate(const std::vector<Polynomial>& ideal, const TermOrder& order,
                                  const GolodConfig& config) {
  if (ideal.empty()) throw inputError("empty generator list");
  Context ctx;
  ctx.config = config;
  if (ctx.config.N < 1) throw inputError("N must be at least 1");
  if (ctx.config.pMax < 2 || ctx.config.pMax > 6) throw inputError("pMax must lie in 2..6");
  if (ctx.config.D == 0) {
    int maxDeg = 1;
    for (const auto& g : ideal) maxDeg = std::max(maxDeg, g.maxDegree());
    ctx.config.D = 3 * maxDeg * ctx.config.N;
  }
  std::vector<Polynomial> gens;
  for (const auto& g : ideal)
    if (!g.isZero()) gens.push_back(g);
  if (gens.empty()) {
    // R itself: no Koszul homology above degree 0
    GolodCertificate cert;
    cert.config = ctx.config;
    cert.ideal = "(0)";
    cert.order = order.describe(*ideal.front().ring());
    cert.verdict = GolodCertificate::Verdict::GolodUpTo;
    cert.evidence.push_back("zero ideal: H_i = 0 for i >= 1");
    AlgebraPtr alg = QuotientAlgebra::polynomialRing(ideal.front().ring());
    BettiTable b;
    b.set(0, 0, 1);
    fillSerre(cert, alg, b);
    cert.upTo = std::max(cert.serre.N, 0);
    return cert;
  }
  return certifyPolynomials(gens, order, ctx, true);
}

bool reverifyWitness(const GolodWitness& w) {
  if (w.kind == "serre") return w.serreIndex >= 0;
  if (w.classes.empty()) return false;
  KoszulHomology fresh(w.classes.front().rep.algebra());
  for (const auto& c : w.classes)
    if (!fresh.isCycle(c.rep) || fresh.isBoundary(c.rep)) return false;
  if (w.kind == "product") {
    if (w.classes.size() != 2) return false;
    return !homologyProduct(fresh, w.classes[0], w.classes[1]).empty();
  }
  if (w.kind == "massey") return masseyProduct(fresh, w.classes).kind == MasseyProductResult::Kind::UniqueNonzero;
  return false;
}

std::string certificateJson(const GolodCertificate& cert) {
  json j;
  j["verdict"] = verdictName(cert.verdict);
  j["rule"] = cert.rule.empty() ? json(nullptr) : json(cert.rule);
  j["chain"] = cert.chain;
  if (cert.verdict == GolodCertificate::Verdict::GolodUpTo) j["upTo"] = cert.upTo;
  j["ideal"] = cert.ideal;
  j["order"] = cert.order;
  if (cert.witness) {
    const auto& w = *cert.witness;
    json wj = {{"kind", w.kind}, {"ideal", w.ideal}, {"reverified", w.reverified}, {"detail", w.detail}};
    json classes = json::array();
    for (const auto& c : w.classes) classes.push_back(classJson(c));
    wj["classes"] = classes;
    if (!w.value.isZero()) wj["value"] = koszulElementJson(w.value);
    if (w.serreIndex >= 0) wj["serreIndex"] = w.serreIndex;
    j["witness"] = wj;
  }
  j["serre"] = {{"poincare", mpzList(cert.serre.poincare)},
                {"bound", mpzList(cert.serre.bound)},
                {"N", cert.serre.N},
                {"complete", cert.serre.complete},
                {"detail", cert.serre.detail}};
  j["config"] = {{"N", cert.config.N},
                 {"pMax", cert.config.pMax},
                 {"D", cert.config.D},
                 {"tupleCap", cert.config.tupleCap},
                 {"scanCap", cert.config.scanCap},
                 {"poincareWorkCap", cert.config.poincareWorkCap}};
  j["evidence"] = cert.evidence;
  if (cert.table) j["masseyTuples"] = cert.table->values.size();
  return j.dump(2);
}

}  // namespace golod
