#include "golodlab/golodlab.h"

#include <algorithm>
#include <cstring>
#include <functional>
#include <sstream>

#include "golodlab/determinantal.hpp"
#include "golodlab/golod.hpp"
#include "golodlab/groebner.hpp"
#include "golodlab/koszul.hpp"
#include "golodlab/massey_io.hpp"
#include "golodlab/monomial_ideal.hpp"
#include "golodlab/text_format.hpp"
#include "json.hpp"

using namespace golod;
using nlohmann::json;

struct gl_ideal {
  IdealText text;
};

struct gl_report {
  std::string text;
  std::string json;
  int status = GL_OK;
};

namespace {

thread_local std::string lastError;
thread_local int lastLine = 0;
thread_local int lastColumn = 0;

int fail(int code, const std::string& msg, int line = 0, int column = 0) {
  lastError = msg;
  lastLine = line;
  lastColumn = column;
  return code;
}

int guarded(const std::function<void()>& body) {
  lastError.clear();
  lastLine = lastColumn = 0;
  try {
    body();
    return GL_OK;
  } catch (const ParseError& e) {
    return fail(GL_INPUT_ERROR, e.what(), e.line(), e.column());
  } catch (const Error& e) {
    return fail(static_cast<int>(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(GL_CAP_EXCEEDED, "out of memory");
  } catch (const std::exception& e) {
    return fail(GL_INTERNAL_ERROR, std::string("internal: ") + e.what());
  }
}

GolodConfig golodConfig(const gl_config* cfg) {
  GolodConfig g;
  if (!cfg) return g;
  if (cfg->N < 1 || cfg->N > 16) throw inputError("N must lie in 1..16");
  if (cfg->pmax < 2 || cfg->pmax > 6) throw inputError("pmax must lie in 2..6");
  if (cfg->D < 0 || cfg->D > 200) throw inputError("D must lie in 0..200");
  g.N = cfg->N;
  g.pMax = cfg->pmax;
  g.D = cfg->D;
  return g;
}

TermOrder orderOf(const gl_ideal* ideal) {
  const auto& t = ideal->text;
  if (t.order) return TermOrder::parse(*t.order, *t.ring);
  return TermOrder::grevlex(t.ring->nvars());
}

std::vector<int> parseIntList(const std::string& s, const char* what) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
               item.end());
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw inputError(std::string("bad integer '") + item + "' in " + what);
    }
  }
  return out;
}

std::vector<std::string> polyTexts(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.toString());
  return out;
}

std::string joinParen(const std::vector<std::string>& items) {
  std::string s = "(";
  for (std::size_t k = 0; k < items.size(); ++k) s += (k ? ", " : "") + items[k];
  return s + ")";
}

/// Monomial generators by degree, then grevlex descending on the declared order.
std::vector<std::string> sortedMonomials(const MonomialIdeal& mi) {
  auto gens = mi.generators();
  TermOrder grev = TermOrder::grevlex(mi.ring()->nvars());
  std::sort(gens.begin(), gens.end(), [&](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return grev.greater(a, b);
  });
  std::vector<std::string> out;
  for (const auto& m : gens) out.push_back(formatMonomial(*mi.ring(), m));
  return out;
}

json bettiJson(const BettiTable& b) {
  json entries = json::array();
  for (const auto& [ij, v] : b.entries()) entries.push_back({{"i", ij.first}, {"j", ij.second}, {"value", v}});
  return {{"entries", entries}, {"totals", b.totals()}, {"grid", b.toGrid()}};
}

bool isMonomialIdeal(const std::vector<Polynomial>& gens) {
  return std::all_of(gens.begin(), gens.end(), [](const Polynomial& p) { return p.isZero() || p.isMonomial(); });
}

std::vector<Polynomial> nonzero(const std::vector<Polynomial>& gens) {
  std::vector<Polynomial> out;
  for (const auto& g : gens)
    if (!g.isZero()) out.push_back(g);
  return out;
}

int emit(gl_report** out, std::string text, json j, int status = GL_OK) {
  auto* r = new gl_report;
  r->text = std::move(text);
  r->json = j.dump(2) + "\n";
  r->status = status;
  *out = r;
  return status;
}

bool checkArgs(const void* a, gl_report** out) {
  if (out) *out = nullptr;
  return a && out;
}

// ---------------------------------------------------------------- commands

void runGroebner(const gl_ideal* ideal, gl_report** out) {
  TermOrder order = orderOf(ideal);
  const auto& ring = ideal->text.ring;
  GroebnerBasis gb = buchberger(nonzero(ideal->text.generators), order);
  std::string od = order.describe(*ring);
  std::string text = formatIdeal(ring, gb.generators(), od);
  emit(out, text,
       {{"command", "gb"}, {"ring", ring->describe()}, {"order", od}, {"generators", polyTexts(gb.generators())},
        {"text", text}});
}

void runInitial(const gl_ideal* ideal, gl_report** out) {
  TermOrder order = orderOf(ideal);
  const auto& ring = ideal->text.ring;
  MonomialIdeal in = initialIdeal(nonzero(ideal->text.generators), order);
  auto gens = sortedMonomials(in);
  std::string od = order.describe(*ring);
  emit(out, joinParen(gens) + "\n",
       {{"command", "initial"}, {"ring", ring->describe()}, {"order", od}, {"generators", gens}});
}

void runHomogenize(const gl_ideal* ideal, const gl_config* cfg, gl_report** out) {
  const auto& ring = ideal->text.ring;
  if (!cfg || !cfg->weights || !*cfg->weights) throw inputError("homogenize needs a weight vector (--weights)");
  std::vector<int> w = parseIntList(cfg->weights, "weights");
  if (w.size() != ring->nvars()) throw inputError("weights need one entry per variable");
  for (int v : w)
    if (v <= 0) throw inputError("weights must be positive");
  auto gens = nonzero(ideal->text.generators);
  GroebnerBasis gb = buchberger(gens, TermOrder::weight(w));
  HomogenizedIdeal ih = homogenizeIdeal(gb, w);
  auto f0 = specializeT(ih, 0);
  auto f1 = specializeT(ih, 1);
  std::vector<Polynomial> inw;
  for (const auto& g : gb.generators()) inw.push_back(weightInitialForm(g, w));
  bool zeroOk = sameIdeal(nonzero(f0), inw, gb.order());
  bool oneOk = sameIdeal(nonzero(f1), gens, gb.order());
  if (!zeroOk || !oneOk) throw internalError("flat family fibers do not match in_w(I) and I");
  std::string od = gb.order().describe(*ring);
  std::string text = formatIdeal(ih.extended, ih.generators);
  text += "# t = 0: " + joinParen(polyTexts(nonzero(f0))) + "\n";
  text += "# t = 1: " + joinParen(polyTexts(nonzero(f1))) + "\n";
  emit(out, text,
       {{"command", "homogenize"},
        {"ring", ih.extended->describe()},
        {"weights", w},
        {"order", od},
        {"generators", polyTexts(ih.generators)},
        {"fiberZero", polyTexts(nonzero(f0))},
        {"fiberOne", polyTexts(nonzero(f1))},
        {"fiberZeroIsInitial", zeroOk},
        {"fiberOneIsIdeal", oneOk}});
}

void runBetti(const gl_ideal* ideal, gl_report** out) {
  auto gens = nonzero(ideal->text.generators);
  const auto& ring = ideal->text.ring;
  BettiTable table;
  std::string method;
  if (isMonomialIdeal(gens)) {
    MonomialIdeal mi = MonomialIdeal::fromPolynomials(ring, gens);
    table = bettiOracle(mi);
    KoszulHomology h(QuotientAlgebra::create(mi));
    BettiTable viaKoszul = bettiViaKoszul(h);
    if (!(viaKoszul == table)) throw internalError("Koszul homology and Betti oracle disagree");
    method = "oracle, cross-checked with Koszul homology";
  } else {
    GroebnerBasis gb = buchberger(gens, orderOf(ideal));
    KoszulHomology h(QuotientAlgebra::create(gb));
    table = bettiViaKoszul(h);
    method = "Koszul homology";
  }
  json j = bettiJson(table);
  j["command"] = "betti";
  j["ring"] = ring->describe();
  j["method"] = method;
  emit(out, table.toGrid(), j);
}

void runFiber(const gl_ideal* ideal, gl_report** out) {
  TermOrder order = orderOf(ideal);
  const auto& ring = ideal->text.ring;
  GroebnerBasis gb = buchberger(nonzero(ideal->text.generators), order);
  FiberInvariance f = fiberInvariant(gb);
  std::string text = std::string("fiber invariant: ") + (f.invariant ? "yes" : "no") + " (" + f.reason + ")\n";
  json j = {{"command", "fiber-inv"},
            {"ring", ring->describe()},
            {"order", order.describe(*ring)},
            {"invariant", f.invariant},
            {"reason", f.reason},
            {"initialIdeal", sortedMonomials(gb.leadingIdeal())}};
  if (f.ideal) {
    text += "R/I:\n" + f.ideal->toGrid();
    j["ideal"] = bettiJson(*f.ideal);
  }
  if (f.initial) {
    text += "R/in(I):\n" + f.initial->toGrid();
    j["initial"] = bettiJson(*f.initial);
  }
  emit(out, text, j);
}

std::optional<std::vector<int>> coloringOf(const gl_ideal* ideal, const gl_config* cfg) {
  const auto& ring = ideal->text.ring;
  if (cfg && cfg->coloring && *cfg->coloring) {
    std::vector<int> colors(ring->nvars(), -1);
    std::stringstream cs(cfg->coloring);
    std::string block;
    int id = 0;
    while (std::getline(cs, block, '|')) {
      std::stringstream bs(block);
      std::string v;
      while (std::getline(bs, v, ',')) {
        v.erase(std::remove_if(v.begin(), v.end(), [](unsigned char c) { return std::isspace(c); }), v.end());
        auto idx = ring->indexOf(v);
        if (!idx || colors[*idx] != -1) throw inputError("bad or repeated variable '" + v + "' in coloring");
        colors[*idx] = id;
      }
      ++id;
    }
    if (std::find(colors.begin(), colors.end(), -1) != colors.end())
      throw inputError("coloring must cover every variable");
    return colors;
  }
  return ring->colors();
}

/// Monomial input as is; otherwise the initial ideal under the chosen order.
MonomialIdeal monomialInput(const gl_ideal* ideal, std::string& note) {
  auto gens = nonzero(ideal->text.generators);
  if (isMonomialIdeal(gens)) return MonomialIdeal::fromPolynomials(ideal->text.ring, gens);
  TermOrder order = orderOf(ideal);
  note = "input is not monomial; using its initial ideal under " + order.describe(*ideal->text.ring);
  return initialIdeal(gens, order);
}

void runRainbow(const gl_ideal* ideal, const gl_config* cfg, gl_report** out) {
  std::string note;
  MonomialIdeal mi = monomialInput(ideal, note);
  RainbowSearch rs = rainbowDetect(mi, coloringOf(ideal, cfg));
  const auto& ring = mi.ring();
  const char* outcome = rs.outcome == RainbowSearch::Outcome::Found      ? "found"
                        : rs.outcome == RainbowSearch::Outcome::NotFound ? "not-found"
                                                                         : "bound-exceeded";
  json j = {{"command", "rainbow"},
            {"ring", ring->describe()},
            {"ideal", sortedMonomials(mi)},
            {"outcome", outcome},
            {"detail", rs.detail},
            {"bound", {{"maxColors", rs.maxColors}, {"maxVariables", rs.maxVariables}}}};
  if (!note.empty()) j["note"] = note;
  std::string text;
  if (!note.empty()) text += note + "\n";
  text += std::string("rainbow: ") + outcome + "\n";
  text += "search bound: " + std::to_string(rs.maxColors) + " colors, " + std::to_string(rs.maxVariables) +
          " variables\n";
  if (!rs.detail.empty()) text += rs.detail + "\n";
  if (rs.structure) {
    json classes = json::array();
    for (const auto& cls : rs.structure->variableOf) {
      std::vector<std::string> names;
      for (auto v : cls) names.push_back(ring->name(v));
      classes.push_back(names);
      std::string line;
      for (const auto& nm : names) line += (line.empty() ? "" : ",") + nm;
      text += "  color " + std::to_string(classes.size()) + ": " + line + "\n";
    }
    j["colors"] = classes;
    auto labels = validLabels(mi, *rs.structure);
    j["validMultidegrees"] = labels.size();
    text += "valid multidegrees: " + std::to_string(labels.size()) + "\n";
    if (auto d = mi.generatorDegree()) {
      bool linear = hasLinearResolution(bettiOracle(mi), *d);
      j["linearResolution"] = linear;
      text += std::string("linear resolution: ") + (linear ? "yes" : "no") + "\n";
    }
  }
  emit(out, text, j);
}

void runMassey(const gl_ideal* ideal, const gl_config* cfg, gl_report** out) {
  GolodConfig gc = golodConfig(cfg);
  auto gens = nonzero(ideal->text.generators);
  TermOrder order = orderOf(ideal);
  GroebnerBasis gb = buchberger(gens, order);
  AlgebraPtr alg = QuotientAlgebra::create(gb);
  KoszulHomology h(alg);
  std::string method;
  MasseyTable table;
  std::vector<std::string> notes;
  if (alg->isMonomial()) {
    MonomialIdeal mi = alg->leadingIdeal();
    RainbowSearch rs = rainbowDetect(mi, coloringOf(ideal, cfg));
    if (rs.outcome == RainbowSearch::Outcome::Found && rs.structure->colorCount >= 2 && mi.generatorDegree() &&
        hasLinearResolution(bettiOracle(mi), *mi.generatorDegree())) {
      RainbowMassey rm = rainbowMasseyTable(h, mi, *rs.structure, gc.pMax);
      if (!rm.table.verified) throw internalError("rainbow Massey table failed verification");
      table = std::move(rm.table);
      method = "rainbow (" + rm.construction + ")";
      notes = rm.findings;
    }
  }
  int status = GL_OK;
  std::string text;
  if (method.empty()) {
    MasseyBuild build = buildTrivialMassey(h, homologyBasisAll(h), gc.pMax, gc.tupleCap);
    if (build.status == MasseyBuild::Status::CapExceeded) throw capError(build.detail);
    table = std::move(build.table);
    method = "solved";
    if (build.status == MasseyBuild::Status::Obstructed) {
      std::string t;
      for (int k : build.obstruction) t += (t.empty() ? "" : ",") + std::to_string(k);
      text = "no trivial Massey operation: tuple (" + t + ") is obstructed\n";
      notes.push_back("obstructed at tuple (" + t + ")");
      table.verified = false;
    }
  }
  json j = json::parse(masseyTableToJson(table, h));
  j["command"] = "massey";
  j["method"] = method;
  for (const auto& n : notes) j["notes"].push_back(n);
  text += "Massey table (" + method + "): " + std::to_string(table.basis.size()) + " classes, " +
          std::to_string(table.values.size()) + " tuples up to length " + std::to_string(table.pMax) +
          ", domain " + table.domain + ", verified " + (table.verified ? "yes" : "no") + "\n";
  for (const auto& n : notes) text += "  " + n + "\n";
  emit(out, text, j, status);
}

std::string certificateText(const GolodCertificate& c) {
  std::string s = verdictName(c.verdict);
  if (c.verdict == GolodCertificate::Verdict::GolodUpTo) s += "(" + std::to_string(c.upTo) + ")";
  if (!c.rule.empty()) s += " [" + c.rule + "]";
  s += "\n";
  if (c.chain.size() > 1) {
    std::string ch;
    for (const auto& r : c.chain) ch += (ch.empty() ? "" : " -> ") + r;
    s += "chain: " + ch + "\n";
  }
  s += "ideal: " + c.ideal + "\norder: " + c.order + "\n";
  if (c.witness) {
    s += "witness (" + c.witness->kind + ", re-verified " + (c.witness->reverified ? "yes" : "no") + "): " +
         c.witness->detail + "\n";
    for (const auto& cl : c.witness->classes) s += "  class: " + cl.rep.toString() + "\n";
    if (c.witness->kind != "serre") s += "  value: " + c.witness->value.toString() + "\n";
  }
  auto series = [](const std::vector<mpz_class>& v) {
    std::string t;
    for (const auto& x : v) t += (t.empty() ? "" : " ") + x.get_str();
    return t.empty() ? std::string("(none)") : t;
  };
  s += "poincare: " + series(c.serre.poincare) + "\n";
  s += "serre:    " + series(c.serre.bound) + "\n";
  if (!c.serre.complete) s += "serre comparison partial: " + c.serre.detail + "\n";
  for (const auto& e : c.evidence) s += "- " + e + "\n";
  return s;
}

void runGolod(const gl_ideal* ideal, const gl_config* cfg, gl_report** out) {
  GolodConfig gc = golodConfig(cfg);
  GolodCertificate cert = golodCertificate(nonzero(ideal->text.generators), orderOf(ideal), gc);
  json j = json::parse(certificateJson(cert));
  j["command"] = "golod";
  // A truncated verdict that a cap stopped short is reported with the cap status.
  bool truncated = cert.verdict == GolodCertificate::Verdict::GolodUpTo && !cert.serre.complete;
  emit(out, certificateText(cert), j, truncated ? GL_CAP_EXCEEDED : GL_OK);
}

std::string sparseText(const SparseReport& r) {
  std::ostringstream os;
  os << "matrix " << r.rows << "x" << r.cols << " mask " << r.mask << ", " << r.minorCount << " minors, tMax "
     << r.tMax << "\n";
  for (const auto& o : r.orders)
    os << "  order " << o.order << ": GB " << (o.groebner ? "yes" : "no") << ", diagonal leads "
       << (o.transversalLeads ? "yes" : "no") << ", fiber invariant " << (o.fiberInvariant ? "yes" : "no") << "\n";
  os << "rainbow by rows: " << (r.rainbowRows ? "yes" : "no") << "\n";
  for (const auto& p : r.powers) {
    const auto& c = p.certificate;
    os << "  t=" << p.t << ": in(I^t)=in(I)^t " << (p.initialIsPower ? "yes" : "no") << ", linear "
       << (p.linear ? "yes" : "no") << ", fiber invariant " << (p.fiberInvariant ? "yes" : "no") << ", "
       << verdictName(c.verdict);
    if (!c.rule.empty()) os << " [" << c.rule << "]";
    os << "\n";
  }
  for (const auto& f : r.findings) os << "- " << f << "\n";
  os << "all-pass: " << (r.allPass ? "yes" : "no") << "\n";
  return os.str();
}

void runMinors(const char* shape, const char* mask, const gl_config* cfg, gl_report** out) {
  GolodConfig gc = golodConfig(cfg);
  int tmax = cfg ? cfg->tmax : 2;
  int nOrders = cfg ? cfg->orders : 8;
  unsigned seed = cfg ? cfg->seed : 1u;
  if (nOrders < 0 || nOrders > 64) throw inputError("orders must lie in 0..64");
  std::optional<LadderMatrix> x;
  if (mask && *mask) {
    x = LadderMatrix::fromMask(mask);
  } else if (shape && *shape) {
    std::string s = shape;
    auto p = s.find('x');
    if (p == std::string::npos) throw inputError("shape must read RxC, e.g. 2x3");
    auto ints = parseIntList(s.substr(0, p) + "," + s.substr(p + 1), "shape");
    if (ints.size() != 2) throw inputError("shape must read RxC, e.g. 2x3");
    x = LadderMatrix::generic(ints[0], ints[1]);
  } else {
    throw inputError("minors needs --shape or --mask");
  }
  auto orders = sampleOrders(*x, nOrders, seed);
  SparseReport r = verifySparseTheorems(*x, tmax, orders, gc);
  json j = json::parse(sparseReportJson(r));
  j["command"] = "minors";
  emit(out, sparseText(r), j);
}

void runMasseyVerify(const char* text, gl_report** out) {
  LoadedMassey lm = masseyTableFromJson(text);
  json j = {{"command", "massey-verify"},
            {"verified", lm.check.ok},
            {"checked", lm.check.checked},
            {"tuples", lm.table.values.size()},
            {"detail", lm.check.detail}};
  std::string s = std::string("verified: ") + (lm.check.ok ? "yes" : "no") + " (" +
                  std::to_string(lm.check.checked) + " tuples checked)\n";
  if (!lm.check.ok) {
    j["failing"] = lm.check.failing;
    s += lm.check.detail + "\n";
  }
  emit(out, s, j, lm.check.ok ? GL_OK : GL_INPUT_ERROR);
}

// A report that ends with a nonzero status is still handed out.
int withReport(int rc, gl_report** out) {
  if (rc == GL_OK && *out && (*out)->status != GL_OK)
    return fail((*out)->status, (*out)->status == GL_CAP_EXCEEDED ? "result truncated, see the report"
                                                                  : "result failed verification");
  return rc;
}

}  // namespace

extern "C" {

GL_API void gl_config_default(gl_config* cfg) {
  if (!cfg) return;
  cfg->N = 8;
  cfg->pmax = 4;
  cfg->D = 0;
  cfg->tmax = 2;
  cfg->orders = 8;
  cfg->seed = 1;
  cfg->weights = nullptr;
  cfg->coloring = nullptr;
}

GL_API const char* gl_last_error(void) { return lastError.c_str(); }
GL_API int gl_last_error_line(void) { return lastLine; }
GL_API int gl_last_error_column(void) { return lastColumn; }

GL_API int gl_ideal_parse(const char* text, gl_ideal** out) {
  if (!text || !out) return fail(GL_INPUT_ERROR, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto* h = new gl_ideal{parseIdeal(text)};
    if (h->text.order) {
      try {
        TermOrder::parse(*h->text.order, *h->text.ring);
      } catch (...) {
        delete h;
        throw;
      }
    }
    *out = h;
  });
}

GL_API int gl_ideal_set_order(gl_ideal* ideal, const char* order) {
  if (!ideal || !order) return fail(GL_INPUT_ERROR, "null argument");
  return guarded([&] {
    TermOrder o = TermOrder::parse(order, *ideal->text.ring);
    ideal->text.order = o.describe(*ideal->text.ring);
  });
}

GL_API int gl_ideal_text(const gl_ideal* ideal, char** out) {
  if (!ideal || !out) return fail(GL_INPUT_ERROR, "null argument");
  *out = nullptr;
  return guarded([&] {
    std::string s = formatIdeal(ideal->text.ring, ideal->text.generators, ideal->text.order);
    char* buf = static_cast<char*>(std::malloc(s.size() + 1));
    if (!buf) throw std::bad_alloc();
    std::memcpy(buf, s.c_str(), s.size() + 1);
    *out = buf;
  });
}

GL_API void gl_ideal_free(gl_ideal* ideal) { delete ideal; }
GL_API void gl_string_free(char* s) { std::free(s); }

#define GL_IDEAL_COMMAND(body)                                              \
  if (!checkArgs(ideal, out)) return fail(GL_INPUT_ERROR, "null argument"); \
  return withReport(guarded([&] { body; }), out);

GL_API int gl_groebner(const gl_ideal* ideal, gl_report** out) { GL_IDEAL_COMMAND(runGroebner(ideal, out)) }
GL_API int gl_initial(const gl_ideal* ideal, gl_report** out) { GL_IDEAL_COMMAND(runInitial(ideal, out)) }
GL_API int gl_homogenize(const gl_ideal* ideal, const gl_config* cfg, gl_report** out) {
  GL_IDEAL_COMMAND(runHomogenize(ideal, cfg, out))
}
GL_API int gl_betti(const gl_ideal* ideal, gl_report** out) { GL_IDEAL_COMMAND(runBetti(ideal, out)) }
GL_API int gl_fiber_invariant(const gl_ideal* ideal, gl_report** out) { GL_IDEAL_COMMAND(runFiber(ideal, out)) }
GL_API int gl_rainbow(const gl_ideal* ideal, const gl_config* cfg, gl_report** out) {
  GL_IDEAL_COMMAND(runRainbow(ideal, cfg, out))
}
GL_API int gl_massey(const gl_ideal* ideal, const gl_config* cfg, gl_report** out) {
  GL_IDEAL_COMMAND(runMassey(ideal, cfg, out))
}
GL_API int gl_golod(const gl_ideal* ideal, const gl_config* cfg, gl_report** out) {
  GL_IDEAL_COMMAND(runGolod(ideal, cfg, out))
}

#undef GL_IDEAL_COMMAND

GL_API int gl_minors(const char* shape, const char* mask, const gl_config* cfg, gl_report** out) {
  if (!out) return fail(GL_INPUT_ERROR, "null argument");
  *out = nullptr;
  return withReport(guarded([&] { runMinors(shape, mask, cfg, out); }), out);
}

GL_API int gl_massey_verify(const char* text, gl_report** out) {
  if (!checkArgs(text, out)) return fail(GL_INPUT_ERROR, "null argument");
  return withReport(guarded([&] { runMasseyVerify(text, out); }), out);
}

GL_API int gl_run(const char* command, const gl_ideal* ideal, const gl_config* cfg, gl_report** out) {
  if (!command) return fail(GL_INPUT_ERROR, "null argument");
  std::string c = command;
  if (c == "gb") return gl_groebner(ideal, out);
  if (c == "initial") return gl_initial(ideal, out);
  if (c == "homogenize") return gl_homogenize(ideal, cfg, out);
  if (c == "betti") return gl_betti(ideal, out);
  if (c == "fiber-inv") return gl_fiber_invariant(ideal, out);
  if (c == "rainbow") return gl_rainbow(ideal, cfg, out);
  if (c == "massey") return gl_massey(ideal, cfg, out);
  if (c == "golod") return gl_golod(ideal, cfg, out);
  return fail(GL_INPUT_ERROR, "unknown command '" + c + "'");
}

GL_API const char* gl_report_text(const gl_report* r) { return r ? r->text.c_str() : ""; }
GL_API const char* gl_report_json(const gl_report* r) { return r ? r->json.c_str() : ""; }
GL_API int gl_report_status(const gl_report* r) { return r ? r->status : GL_INTERNAL_ERROR; }
GL_API void gl_report_free(gl_report* r) { delete r; }

}  // extern "C"
