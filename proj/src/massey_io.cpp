#include "golodlab/massey_io.hpp"

#include "golodlab/text_format.hpp"

namespace golod {

using nlohmann::json;

json koszulElementJson(const KoszulElement& e) {
  json out = json::array();
  if (e.isZero()) return out;
  const RingPtr& ring = e.algebra()->ring();
  std::map<std::uint64_t, Polynomial> byMask;
  for (const auto& [cell, c] : e.terms()) byMask.try_emplace(cell.mask, Polynomial(ring)).first->second.addTerm(cell.mono, c);
  for (const auto& [mask, poly] : byMask) {
    json names = json::array();
    for (std::size_t v = 0; v < ring->nvars(); ++v)
      if (mask >> v & 1u) names.push_back(ring->name(v));
    out.push_back({{"wedge", names}, {"poly", poly.toString()}});
  }
  return out;
}

KoszulElement koszulElementFromJson(const json& j, const AlgebraPtr& algebra) {
  KoszulElement e(algebra);
  const RingPtr& ring = algebra->ring();
  for (const auto& term : j) {
    std::uint64_t mask = 0;
    for (const auto& name : term.at("wedge")) {
      auto v = ring->indexOf(name.get<std::string>());
      if (!v) throw inputError("unknown wedge variable " + name.get<std::string>());
      if (mask >> *v & 1u) throw inputError("repeated wedge variable " + name.get<std::string>());
      mask |= std::uint64_t{1} << *v;
    }
    // wedge lists are written ascending; any other order carries a sign
    std::vector<std::size_t> listed;
    for (const auto& name : term.at("wedge")) listed.push_back(*ring->indexOf(name.get<std::string>()));
    int inversions = 0;
    for (std::size_t a = 0; a < listed.size(); ++a)
      for (std::size_t b = a + 1; b < listed.size(); ++b)
        if (listed[a] > listed[b]) ++inversions;
    Polynomial p = parsePolynomial(term.at("poly").get<std::string>(), ring);
    for (const auto& [m, c] : p.terms()) e.add(mask, m, inversions % 2 ? -c : c);
  }
  return e;
}

std::string masseyTableToJson(const MasseyTable& table, const KoszulHomology& h) {
  const auto& gb = h.algebra()->groebnerBasis();
  const RingPtr& ring = gb.ring();
  json j;
  j["ring"] = ring->describe();
  j["order"] = gb.order().describe(*ring);
  json gens = json::array();
  for (const auto& g : gb.generators()) gens.push_back(g.toString());
  j["groebnerBasis"] = gens;
  j["grading"] = {{"exponent", h.grading().isExponent()}, {"rows", h.grading().rows()}};
  j["domain"] = table.domain;
  j["pMax"] = table.pMax;
  json basis = json::array();
  for (const auto& c : table.basis) {
    json b = {{"degree", c.degree}, {"key", c.key}, {"rep", koszulElementJson(c.rep)}};
    if (c.label) b["label"] = *c.label;
    basis.push_back(b);
  }
  j["basis"] = basis;
  json values = json::array();
  for (const auto& [t, v] : table.values) {
    json entry = {{"tuple", t}, {"value", koszulElementJson(v)}};
    auto m = table.method.find(t);
    if (m != table.method.end()) entry["method"] = m->second;
    values.push_back(entry);
  }
  j["values"] = values;
  j["notes"] = table.notes;
  j["verified"] = table.verified;
  return j.dump(2);
}

LoadedMassey masseyTableFromJson(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw inputError(std::string("Massey table JSON: ") + e.what());
  }
  LoadedMassey out;
  try {
    std::string fixture = j.at("ring").get<std::string>() + "\n";
    std::string sep;
    for (const auto& g : j.at("groebnerBasis")) {
      fixture += sep + g.get<std::string>();
      sep = ", ";
    }
    IdealText it = parseIdeal(fixture);
    TermOrder order = TermOrder::parse(j.at("order").get<std::string>(), *it.ring);
    out.algebra = it.generators.empty() ? QuotientAlgebra::polynomialRing(it.ring)
                                        : QuotientAlgebra::create(buchberger(it.generators, order));
    const auto& g = j.at("grading");
    Grading grading = g.at("exponent").get<bool>() ? Grading::exponents(it.ring->nvars())
                                                   : Grading::fromRows(g.at("rows").get<std::vector<std::vector<long>>>());
    out.homology = std::make_shared<KoszulHomology>(out.algebra, grading);
    MasseyTable& t = out.table;
    t.domain = j.at("domain").get<std::string>();
    t.pMax = j.at("pMax").get<int>();
    for (const auto& b : j.at("basis")) {
      HomologyClass c;
      c.degree = b.at("degree").get<int>();
      c.key = b.at("key").get<Key>();
      c.index = static_cast<int>(t.basis.size());
      c.rep = koszulElementFromJson(b.at("rep"), out.algebra);
      if (b.contains("label")) c.label = b.at("label").get<std::vector<std::vector<int>>>();
      t.basis.push_back(std::move(c));
    }
    for (const auto& v : j.at("values")) {
      Tuple tuple = v.at("tuple").get<Tuple>();
      t.values[tuple] = koszulElementFromJson(v.at("value"), out.algebra);
      if (v.contains("method")) t.method[tuple] = v.at("method").get<std::string>();
    }
    if (j.contains("notes")) t.notes = j.at("notes").get<std::vector<std::string>>();
  } catch (const json::exception& e) {
    throw inputError(std::string("Massey table JSON: ") + e.what());
  }
  out.check = verifyMasseyTable(out.table, *out.homology);
  out.table.verified = out.check.ok;
  return out;
}

}  // namespace golod
