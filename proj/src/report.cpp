#include "specbound/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace specbound {

double round15(double x) {
  if (!std::isfinite(x)) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return std::strtod(buf, nullptr);
}

std::string format15(double x) {
  if (!std::isfinite(x)) return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

namespace {

nlohmann::json optional_number(const std::optional<double>& v) {
  return v ? nlohmann::json(round15(*v)) : nlohmann::json(nullptr);
}

}  // namespace

nlohmann::json to_json(const CheckOutcome& o) {
  nlohmann::json j{{"predicate", o.predicate_id},
                   {"verdict", std::string(to_string(o.verdict))},
                   {"slack", optional_number(o.slack)},
                   {"lhs", optional_number(o.lhs)},
                   {"rhs", optional_number(o.rhs)},
                   {"tolerance", round15(o.tolerance_used)}};
  if (o.verdict == Verdict::Vacuous) j["premise_failed"] = o.premise_failed;
  if (o.witness) {
    j["witness"] = {{"kind", o.witness->kind},
                    {"vertices", o.witness->vertices},
                    {"detail", o.witness->detail}};
  }
  return j;
}

nlohmann::json to_json(const InvariantProfile& p) {
  nlohmann::json book{{"bk", p.book.bk}};
  book["witness_edge"] = p.book.witness
                             ? nlohmann::json{p.book.witness->first, p.book.witness->second}
                             : nlohmann::json(nullptr);
  return {{"n", p.n},
          {"m", p.m},
          {"t", p.triangles.t},
          {"t_per_vertex", p.triangles.per_vertex},
          {"bk", p.book.bk},
          {"booksize", std::move(book)},
          {"tpp", p.tpp.tpp},
          {"tpp_per_vertex", p.tpp.per_vertex},
          {"k4_profile",
           {{"k4_0", p.k4.k4_0}, {"k4_1", p.k4.k4_1}, {"k4_2", p.k4.k4_2}, {"k4", p.k4.k4}}},
          {"degrees", p.degrees}};
}

nlohmann::json to_json(const Spectrum<double>& s) {
  nlohmann::json values = nlohmann::json::array();
  for (Eigen::Index i = 0; i < s.eigenvalues.size(); ++i) values.push_back(round15(s.eigenvalues(i)));
  return {{"eigenvalues", std::move(values)},
          {"residual", round15(s.residual)},
          {"iterations", s.iterations}};
}

nlohmann::json to_json(const PerronData<double>& p) {
  nlohmann::json x = nlohmann::json::array();
  for (Eigen::Index i = 0; i < p.vector.size(); ++i) x.push_back(round15(p.vector(i)));
  return {{"rho", round15(p.rho)},
          {"vector", std::move(x)},
          {"support", p.support},
          {"c", p.c ? nlohmann::json(round15(*p.c)) : nlohmann::json(nullptr)},
          {"degenerate", p.degenerate},
          {"component_root", p.component_root},
          {"iterations", p.iterations},
          {"residual", round15(p.residual)}};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace specbound
