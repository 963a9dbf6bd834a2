#include "sojourn/golden.hpp"

#include <fstream>

namespace sojourn {

namespace {

Json golden(const std::string& name, Json rows) {
  return make_document("golden", {{"name", name}}, std::move(rows));
}

Json psi0_4() {
  SojournTable table = SojournTable::evolve(0, 4);
  Json rows = Json::array();
  for (int k = 0; k <= 4; k += 2) {
    Json row = to_json(pqrs_decompose(table.psi(4, k)));
    row["n"] = 4;
    row["k"] = k;
    rows.push_back(std::move(row));
  }
  return golden("psi0_4", rows);
}

Json gamma_2_4() {
  SojournTable table = SojournTable::evolve(0, 4);
  Json rows = Json::array();
  for (int n : {2, 4}) {
    for (int k = 0; k <= n; ++k) rows.push_back({{"n", n}, {"y", 0}, {"k", k}, {"matrix", to_json(table.gamma(n, k))}});
  }
  return golden("gamma_2_4", rows);
}

Json pqrs_table() {
  const PqrsBasis& b = hadamard_basis();
  const std::pair<const char*, const Mat2*> basis[] = {{"P", &b.p}, {"Q", &b.q}, {"R", &b.r}, {"S", &b.s}};
  Json rows = Json::array();
  for (const auto& [ln, lm] : basis) {
    for (const auto& [rn, rm] : basis) {
      rows.push_back({{"left", ln}, {"right", rn}, {"product", to_json(pqrs_decompose(*lm * *rm))}});
    }
  }
  return golden("pqrs_table", rows);
}

Json probabilities(const std::string& name, const std::vector<SojournMeasure>& measures) {
  Json rows = Json::array();
  for (const auto& m : measures) {
    for (const auto& [k, p] : m.normalized.value()) rows.push_back({{"n", m.n}, {"k", k}, {"probability", p.to_string()}});
  }
  return golden(name, rows);
}

Json measure_a() {
  std::vector<SojournMeasure> ms;
  SojournTable table = SojournTable::evolve(0, 8);
  for (int n = 2; n <= 8; n += 2) ms.push_back(sojourn_measure_a(table, n, QubitState::phi_star()));
  return probabilities("measure_a", ms);
}

Json measure_b() {
  std::vector<SojournMeasure> ms;
  SojournTable table = SojournTable::evolve(0, 14);
  for (int n = 2; n <= 14; n += 2) ms.push_back(sojourn_measure_b(table, n, QubitState::phi_star()));
  return probabilities("measure_b", ms);
}

Json measure_b_weights() {
  SojournTable table = SojournTable::evolve(0, 6);
  Json rows = Json::array();
  for (int n = 2; n <= 6; n += 2) {
    for (const auto& [k, w] : sojourn_measure_b(table, n, QubitState::phi_star()).weights) {
      rows.push_back({{"n", n}, {"k", k}, {"weight", w.to_string()}});
    }
  }
  return golden("measure_b_weights", rows);
}

Json arcsine() {
  std::vector<SojournMeasure> ms;
  for (int n = 2; n <= 8; n += 2) ms.push_back(classical_arcsine(n));
  return probabilities("arcsine", ms);
}

Json sqrt_binomial() {
  BiSeries root = series_sqrt(BiSeries::constant(1, 2, 0) + BiSeries::monomial(1, 0, 1, 2, 0));
  Json rows = Json::array();
  for (int n = 0; n <= 2; ++n) rows.push_back({{"n", n}, {"b", root.coeff(n, 0).to_string()}});
  return golden("sqrt_binomial", rows);
}

}  // namespace

std::vector<GoldenDocument> golden_documents() {
  return {
      {"psi0_4.json", psi0_4()},
      {"gamma_2_4.json", gamma_2_4()},
      {"pqrs_table.json", pqrs_table()},
      {"theorem1_z8.json", expand_document(1, 8)},
      {"theorem2_z10.json", expand_document(2, 10)},
      {"measure_a.json", measure_a()},
      {"measure_a_n4.json", measure_document(MeasureKind::a, 4, QubitState::phi_star())},
      {"measure_b.json", measure_b()},
      {"measure_b_weights.json", measure_b_weights()},
      {"arcsine.json", arcsine()},
      {"sqrt_binomial.json", sqrt_binomial()},
  };
}

std::filesystem::path default_golden_dir() {
#ifdef SOJOURN_GOLDEN_DIR
  return SOJOURN_GOLDEN_DIR;
#else
  return "golden";
#endif
}

CheckReport compare_goldens(const std::filesystem::path& dir) {
  CheckReport report{"golden files", 0, {}};
  for (const auto& doc : golden_documents()) {
    ++report.checked;
    std::ifstream in(dir / doc.file);
    if (!in) {
      report.mismatches.push_back({0, 0, doc.file, "readable golden file", "missing"});
      continue;
    }
    Json expected;
    try {
      expected = Json::parse(in);
    } catch (const Json::parse_error& e) {
      report.mismatches.push_back({0, 0, doc.file, "valid JSON", e.what()});
      continue;
    }
    if (expected.dump() == doc.computed.dump()) continue;
    if (expected["meta"] != doc.computed["meta"]) {
      report.mismatches.push_back({0, 0, doc.file + " meta", expected["meta"].dump(), doc.computed["meta"].dump()});
      continue;
    }
    const Json& er = expected["rows"];
    const Json& cr = doc.computed["rows"];
    std::size_t count = std::max(er.size(), cr.size());
    for (std::size_t i = 0; i < count; ++i) {
      Json e = i < er.size() ? er[i] : Json(nullptr);
      Json c = i < cr.size() ? cr[i] : Json(nullptr);
      if (e == c) continue;
      const Json& key = e.is_object() ? e : c;
      int n = key.contains("n") ? key["n"].get<int>() : (key.contains("z") ? key["z"].get<int>() : 0);
      int k = key.contains("k") ? key["k"].get<int>() : (key.contains("t") ? key["t"].get<int>() : 0);
      report.mismatches.push_back({n, k, doc.file + " row " + std::to_string(i) + ": golden vs computed", e.dump(), c.dump()});
      break;
    }
  }
  return report;
}

}  // namespace sojourn
