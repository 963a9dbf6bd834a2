#include "sojourn/serialize.hpp"

#include <sstream>

namespace sojourn {

Json make_document(const std::string& subcommand, Json params, Json rows) {
  Json doc;
  doc["meta"] = {{"subcommand", subcommand}, {"params", std::move(params)}};
  doc["rows"] = std::move(rows);
  return doc;
}

Json to_json(const Qr2& x) { return x.to_string(); }

Json to_json(const Mat2& m) {
  return Json::array({Json::array({m(0, 0).to_string(), m(0, 1).to_string()}),
                      Json::array({m(1, 0).to_string(), m(1, 1).to_string()})});
}

Json to_json(const PqrsCoeffs& c) {
  return {{"p", c.p.to_string()}, {"q", c.q.to_string()}, {"r", c.r.to_string()}, {"s", c.s.to_string()}};
}

Json theorem1_rows(const Theorem1Series& series, int order) {
  Json rows = Json::array();
  for (int z = 0; z <= order; ++z) {
    for (int t = 0; t <= order; ++t) {
      PqrsCoeffs c{series.p_bar.coeff(z, t), series.q_bar.coeff(z, t), series.r_bar.coeff(z, t),
                   series.s_bar.coeff(z, t)};
      if (c.p.is_zero() && c.q.is_zero() && c.r.is_zero() && c.s.is_zero()) continue;
      Json row = to_json(c);
      row["z"] = z;
      row["t"] = t;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

Json theorem2_rows(const Theorem2Series& series, int order) {
  Json rows = Json::array();
  for (int z = 0; z <= order; ++z) {
    for (int t = 0; t <= order; ++t) {
      Mat2 m = series.gamma_bar.coefficient(z, t);
      if (m.is_zero()) continue;
      rows.push_back({{"z", z}, {"t", t}, {"matrix", to_json(m)}});
    }
  }
  return rows;
}

Json dp_rows(const SojournTable& table) {
  Json rows = Json::array();
  int x = table.start();
  for (int n = 1; n <= table.n_max(); ++n) {
    for (int y = x - n; y <= x + n; y += 2) {
      for (int k = 0; k <= n; ++k) {
        rows.push_back({{"n", n}, {"y", y}, {"k", k}, {"matrix", to_json(table.at(n, y, k))}});
      }
    }
  }
  return rows;
}

Json measure_rows(const SojournMeasure& m) {
  Json rows = Json::array();
  for (const auto& [k, w] : m.weights) {
    Json row{{"k", k}, {"weight", w.to_string()}};
    row["probability"] = m.normalized ? Json(m.normalized->at(k).to_string()) : Json(nullptr);
    rows.push_back(std::move(row));
  }
  return rows;
}

Json first_return_rows(const FirstReturnAmplitudes& amps) {
  Json rows = Json::array();
  for (int n = 1; n <= amps.n_max(); ++n) rows.push_back({{"n", n}, {"a", amps.at(n).get_str()}});
  return rows;
}

namespace {

std::string cell(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace

std::string rows_to_csv(const Json& rows, const std::vector<std::string>& columns) {
  std::ostringstream out;
  std::vector<std::string> header;
  for (const auto& col : columns) {
    bool is_matrix = !rows.empty() && rows.front().contains(col) && rows.front()[col].is_array();
    if (is_matrix) {
      for (const char* suffix : {"11", "12", "21", "22"}) header.push_back(col + suffix);
    } else {
      header.push_back(col);
    }
  }
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
  out << '\n';
  for (const auto& row : rows) {
    bool first = true;
    for (const auto& col : columns) {
      const Json& v = row.at(col);
      if (v.is_array()) {
        for (const auto& r : v) {
          for (const auto& e : r) {
            out << (first ? "" : ",") << cell(e);
            first = false;
          }
        }
      } else {
        out << (first ? "" : ",") << cell(v);
        first = false;
      }
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace sojourn

namespace sojourn {

MeasureKind parse_measure_kind(const std::string& text) {
  if (text == "A") return MeasureKind::a;
  if (text == "B") return MeasureKind::b;
  if (text == "classical-arcsine") return MeasureKind::classical_arcsine;
  if (text == "classical-uniform") return MeasureKind::classical_uniform;
  throw std::invalid_argument("unknown measure kind: " + text);
}

std::string to_string(MeasureKind kind) {
  switch (kind) {
    case MeasureKind::a: return "A";
    case MeasureKind::b: return "B";
    case MeasureKind::classical_arcsine: return "classical-arcsine";
    case MeasureKind::classical_uniform: return "classical-uniform";
  }
  return "?";
}

QubitState parse_state(const std::string& text) {
  std::vector<Qr2> parts;
  std::size_t begin = 0;
  while (true) {
    std::size_t comma = text.find(',', begin);
    parts.push_back(Qr2::parse(std::string_view(text).substr(begin, comma - begin)));
    if (comma == std::string::npos) break;
    begin = comma + 1;
  }
  if (parts.size() != 4) throw std::invalid_argument("state needs four components a_re,a_im,b_re,b_im");
  return QubitState({parts[0], parts[1]}, {parts[2], parts[3]});
}

Json state_params(const QubitState& phi) {
  return Json::array({phi.alpha().re.to_string(), phi.alpha().im.to_string(), phi.beta().re.to_string(),
                      phi.beta().im.to_string()});
}

Json expand_document(int theorem, int order) {
  Json params{{"theorem", theorem}, {"order", order}};
  if (theorem == 1) return make_document("expand", params, theorem1_rows(theorem1_series(order), order));
  if (theorem == 2) return make_document("expand", params, theorem2_rows(theorem2_series(order), order));
  throw std::invalid_argument("theorem must be 1 or 2");
}

Json dp_document(int start, int n_max) {
  return make_document("dp", {{"start", start}, {"n_max", n_max}}, dp_rows(SojournTable::evolve(start, n_max)));
}

Json measure_document(MeasureKind kind, int n, const QubitState& phi) {
  Json params{{"kind", to_string(kind)}, {"n", n}};
  SojournMeasure m;
  switch (kind) {
    case MeasureKind::a:
      m = sojourn_measure_a(n, phi);
      params["state"] = state_params(phi);
      break;
    case MeasureKind::b:
      m = sojourn_measure_b(n, phi);
      params["state"] = state_params(phi);
      break;
    case MeasureKind::classical_arcsine: m = classical_arcsine(n); break;
    case MeasureKind::classical_uniform: m = classical_equidistribution(n); break;
  }
  return make_document("measure", params, measure_rows(m));
}

Json first_return_document(int n_max) {
  return make_document("first-return", {{"n_max", n_max}}, first_return_rows(first_return_amplitudes(n_max)));
}

}  // namespace sojourn
