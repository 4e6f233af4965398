#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hypereig/alpha_normal.hpp"
#include "hypereig/bounds.hpp"
#include "hypereig/gap.hpp"
#include "hypereig/hypergraph.hpp"
#include "hypereig/spectral.hpp"

namespace hypereig {

using Json = nlohmann::ordered_json;

inline constexpr const char* report_schema = "hypereig.report/v1";

/// %.17g, so every double survives a text round trip. Non-finite values have
/// no JSON spelling and are written as null by write_json.
inline std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace detail {

inline void write_json_value(std::ostream& out, const Json& j, int indent, int depth) {
  const auto pad = [&](int d) { out << '\n' << std::string(static_cast<std::size_t>(indent * d), ' '); };
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out << "{}";
        return;
      }
      out << '{';
      bool first = true;
      for (const auto& [key, val] : j.items()) {
        if (!first) out << ',';
        first = false;
        pad(depth + 1);
        out << Json(key).dump() << ": ";
        write_json_value(out, val, indent, depth + 1);
      }
      pad(depth);
      out << '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out << "[]";
        return;
      }
      // Arrays of scalars stay on one line.
      const bool flat = std::none_of(j.begin(), j.end(), [](const Json& v) { return v.is_structured(); });
      out << '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out << (flat ? ", " : ",");
        if (!flat) pad(depth + 1);
        write_json_value(out, j[i], indent, depth + 1);
      }
      if (!flat) pad(depth);
      out << ']';
      return;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      out << (std::isfinite(v) ? format_double(v) : "null");
      return;
    }
    default:
      out << j.dump();
  }
}

}  // namespace detail

/// Pretty-printed JSON with every floating-point number at 17 significant
/// digits. Key order is insertion order, so output is byte-stable.
inline void write_json(std::ostream& out, const Json& j, int indent = 2) {
  detail::write_json_value(out, j, indent, 0);
  out << '\n';
}

inline std::string to_json_string(const Json& j) {
  std::ostringstream out;
  write_json(out, j);
  return out.str();
}

inline Json edge_json(const Edge& e) {
  Json a = Json::array();
  for (Vertex v : e) a.push_back(v);
  return a;
}

inline Json input_json(const Hypergraph& h) {
  Json j;
  j["n"] = h.num_vertices();
  j["r"] = h.rank();
  j["m"] = h.num_edges();
  j["linear"] = is_linear(h);
  const bool connected = is_connected(h);
  j["connected"] = connected;
  j["diameter"] = connected ? Json(diameter(h)) : Json(nullptr);
  j["degrees"] = degrees(h);
  j["max_degree"] = max_degree(h);
  j["min_degree"] = min_degree(h);
  Json edges = Json::array();
  for (const Edge& e : h.edges()) edges.push_back(edge_json(e));
  j["edges"] = std::move(edges);
  return j;
}

inline Json spectral_json(const SpectralResult& s) {
  Json j;
  j["rho"] = s.rho;
  j["x"] = s.x;
  j["x_max"] = s.x_max();
  j["argmax"] = s.argmax();
  j["x_min"] = s.x_min();
  j["argmin"] = s.argmin();
  j["principal_ratio"] = s.x_max() / s.x_min();
  j["residual_inf"] = s.residual_inf;
  j["iterations"] = s.iterations;
  j["bracket"] = {s.lambda_lo, s.lambda_hi};
  return j;
}

inline Json incidence_json(const Hypergraph& h, const WeightedIncidence& b, const AlphaNormalReport& an,
                           const ConsistencyReport& cons) {
  Json j;
  j["alpha"] = b.alpha;
  Json entries = Json::array();
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    for (std::size_t k = 0; k < h.edge(e).size(); ++k) {
      entries.push_back({{"vertex", h.edge(e)[k]}, {"edge", e}, {"weight", b.weights[e][k]}});
    }
  }
  j["entries"] = std::move(entries);

  Json id;
  id["tolerance"] = an.tolerance;
  id["row_sum_deviation"] = an.row_sum_deviation;
  id["row_sum_vertex"] = an.row_sum_vertex;
  id["edge_product_deviation"] = an.edge_product_deviation;
  id["edge_product_edge"] = an.edge_product_edge;
  id["within_edge_spread"] = an.spread_deviation;
  id["within_edge_spread_edge"] = an.spread_edge;
  id["alpha_deviation"] = an.alpha_deviation;
  Json viol = Json::array();
  for (const auto& v : an.violations) {
    viol.push_back({{"kind", to_string(v.kind)}, {"index", v.index}, {"deviation", v.deviation}});
  }
  id["violations"] = std::move(viol);
  id["pass"] = an.pass;
  j["identities"] = std::move(id);

  Json cy;
  cy["tolerance"] = cons.tolerance;
  cy["cycles_total"] = cons.cycles_total;
  cy["cycles_checked"] = cons.cycles_checked;
  cy["max_deviation"] = cons.max_deviation;
  cy["failures"] = cons.failures;
  cy["pass"] = cons.pass;
  j["cycles"] = std::move(cy);
  return j;
}

inline Json certificate_json(const BoundCertificate& c) {
  Json j;
  j["bound"] = to_string(c.id);
  j["direction"] = c.direction == Direction::Upper ? "upper" : "lower";
  j["u"] = c.subject.u ? Json(*c.subject.u) : Json(nullptr);
  j["v"] = c.subject.v ? Json(*c.subject.v) : Json(nullptr);
  j["distance"] = c.distance ? Json(*c.distance) : Json(nullptr);
  j["bound_value"] = c.bound_value;
  j["actual_value"] = c.actual_value;
  j["slack"] = c.slack;
  j["applicable"] = c.applicable;
  j["reason"] = c.reason;
  j["pass"] = c.pass;
  return j;
}

inline Json bounds_json(const std::vector<BoundCertificate>& certs) {
  const auto sum = summarize(certs);
  Json j;
  j["tolerance"] = certificate_tolerance;
  j["total"] = sum.total;
  j["applicable"] = sum.applicable;
  j["passed"] = sum.passed;
  j["failed"] = sum.failed;
  Json arr = Json::array();
  for (const auto& c : certs) arr.push_back(certificate_json(c));
  j["certificates"] = std::move(arr);
  return j;
}

inline Json gap_json(const GapReport& g) {
  Json j;
  j["diameter"] = g.diameter;
  j["rho"] = g.rho;
  j["tolerance"] = gap_tolerance;
  j["connected_deletions"] = g.connected_deletions;
  j["disconnected_deletions"] = g.disconnected_deletions;
  Json recs = Json::array();
  for (const auto& r : g.records) {
    Json rj;
    rj["edge_index"] = r.edge_index;
    rj["edge"] = edge_json(r.edge);
    rj["rho_sub"] = r.rho_sub;
    rj["connected_after"] = r.connected_after;
    rj["components"] = r.component_count;
    rj["gap"] = r.gap;
    rj["bound"] = r.bound.bound;
    rj["term_connected"] = r.bound.term_connected;
    rj["term_disconnected"] = r.bound.term_disconnected;
    rj["slack"] = r.slack;
    rj["pass"] = r.pass;
    if (r.lemmas) {
      const auto& l = *r.lemmas;
      rj["diameter_check"] = {{"diameter_after", l.diameter_after},
                              {"limit", l.diameter_limit},
                              {"pass", l.diameter_ok}};
      rj["distance_sum_check"] = {{"max_sum", l.distance_sum},
                                  {"vertex", l.distance_sum_vertex},
                                  {"limit", l.distance_sum_limit},
                                  {"pass", l.distance_sum_ok}};
    } else {
      rj["diameter_check"] = nullptr;
      rj["distance_sum_check"] = nullptr;
    }
    recs.push_back(std::move(rj));
  }
  j["records"] = std::move(recs);
  j["pass"] = g.pass;
  return j;
}

// CSV emitters. Numbers use the same 17-digit format as the JSON report.

inline void write_spectral_csv(std::ostream& out, const SpectralResult& s) {
  out << "vertex,x\n";
  for (std::size_t v = 0; v < s.x.size(); ++v) out << v << ',' << format_double(s.x[v]) << '\n';
}

inline void write_incidence_csv(std::ostream& out, const Hypergraph& h, const WeightedIncidence& b) {
  out << "vertex,edge,weight\n";
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    for (std::size_t k = 0; k < h.edge(e).size(); ++k) {
      out << h.edge(e)[k] << ',' << e << ',' << format_double(b.weights[e][k]) << '\n';
    }
  }
}

inline void write_bounds_csv(std::ostream& out, const std::vector<BoundCertificate>& certs) {
  out << "bound,direction,u,v,distance,actual,bound_value,slack,applicable,pass\n";
  const auto opt = [](const auto& o) { return o ? std::to_string(*o) : std::string(); };
  for (const auto& c : certs) {
    out << to_string(c.id) << ',' << (c.direction == Direction::Upper ? "upper" : "lower") << ','
        << opt(c.subject.u) << ',' << opt(c.subject.v) << ',' << opt(c.distance) << ','
        << format_double(c.actual_value) << ',' << format_double(c.bound_value) << ','
        << format_double(c.slack) << ',' << c.applicable << ',' << c.pass << '\n';
  }
}

inline void write_gap_csv(std::ostream& out, const GapReport& g) {
  out << "edge,gap,bound,slack,connected_after\n";
  for (const auto& r : g.records) {
    out << r.edge_index << ',' << format_double(r.gap) << ',' << format_double(r.bound.bound) << ','
        << format_double(r.slack) << ',' << r.connected_after << '\n';
  }
}

}  // namespace hypereig
