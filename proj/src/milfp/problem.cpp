#include "ptaplan/milfp/problem.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ptaplan::milfp {

void MilfpProblem::validate() const {
  const std::size_t nx = x_lo.size();
  const std::size_t ny = y_lo.size();
  if (x_hi.size() != nx || numerator.x_coeffs.size() != nx || denominator.x_coeffs.size() != nx)
    throw ConfigError("MilfpProblem: continuous-side dimensions disagree");
  if (y_hi.size() != ny || numerator.y_coeffs.size() != ny || denominator.y_coeffs.size() != ny)
    throw ConfigError("MilfpProblem: integer-side dimensions disagree");
  if (!var_names.empty() && var_names.size() != nx + ny)
    throw ConfigError("MilfpProblem: var_names size mismatch");

  auto check_finite = [](double v, const char* what) {
    if (std::isnan(v) || std::isinf(v)) throw ConfigError(std::string("MilfpProblem: non-finite ") + what);
  };
  check_finite(numerator.constant, "numerator constant");
  check_finite(denominator.constant, "denominator constant");
  for (double v : numerator.x_coeffs) check_finite(v, "numerator coefficient");
  for (double v : numerator.y_coeffs) check_finite(v, "numerator coefficient");
  for (double v : denominator.x_coeffs) check_finite(v, "denominator coefficient");
  for (double v : denominator.y_coeffs) check_finite(v, "denominator coefficient");

  // B&B needs bounded integer domains; the C&C transform homogenizes every
  // bound, so both sides must be finite.
  for (std::size_t i = 0; i < nx; ++i) {
    check_finite(x_lo[i], "x bound");
    check_finite(x_hi[i], "x bound");
    if (x_lo[i] > x_hi[i]) throw ConfigError("MilfpProblem: crossed x bounds");
  }
  for (std::size_t j = 0; j < ny; ++j) {
    check_finite(y_lo[j], "y bound");
    check_finite(y_hi[j], "y bound");
    if (y_lo[j] > y_hi[j]) throw ConfigError("MilfpProblem: crossed y bounds");
    if (!nearly_integral(y_lo[j], 1e-9) || !nearly_integral(y_hi[j], 1e-9))
      throw ConfigError("MilfpProblem: integer variable bounds must be integral");
  }

  for (const MilfpRow& r : rows) {
    check_finite(r.rhs, "row rhs");
    for (const auto& [i, v] : r.x_coeffs) {
      if (i < 0 || i >= static_cast<int>(nx)) throw ConfigError("MilfpProblem: x index out of range");
      check_finite(v, "row coefficient");
    }
    for (const auto& [j, v] : r.y_coeffs) {
      if (j < 0 || j >= static_cast<int>(ny)) throw ConfigError("MilfpProblem: y index out of range");
      check_finite(v, "row coefficient");
    }
  }
}

MilfpProblem MilfpProblem::to_inequality_form() const {
  MilfpProblem out = *this;
  out.rows.clear();
  auto negated = [](const MilfpRow& r) {
    MilfpRow n = r;
    for (auto& [i, v] : n.x_coeffs) v = -v;
    for (auto& [j, v] : n.y_coeffs) v = -v;
    n.rhs = -r.rhs;
    n.sense = Sense::Le;
    return n;
  };
  for (const MilfpRow& r : rows) {
    switch (r.sense) {
      case Sense::Le:
        out.rows.push_back(r);
        break;
      case Sense::Ge:
        out.rows.push_back(negated(r));
        break;
      case Sense::Eq: {
        MilfpRow le = r;
        le.sense = Sense::Le;
        out.rows.push_back(le);
        out.rows.push_back(negated(r));
        break;
      }
    }
  }
  return out;
}

namespace {

using nlohmann::json;

const char* sense_str(Sense s) {
  switch (s) {
    case Sense::Le: return "<=";
    case Sense::Ge: return ">=";
    case Sense::Eq: return "=";
  }
  return "?";
}

Sense sense_from(const std::string& s) {
  if (s == "<=") return Sense::Le;
  if (s == ">=") return Sense::Ge;
  if (s == "=" || s == "==") return Sense::Eq;
  throw DataError("milfp json: unknown sense '" + s + "'");
}

json coeff_list(const std::vector<std::pair<int, double>>& x_part,
                const std::vector<std::pair<int, double>>& y_part, int nx) {
  json out = json::array();
  for (const auto& [i, v] : x_part) out.push_back({i, v});
  for (const auto& [j, v] : y_part) out.push_back({nx + j, v});
  return out;
}

}  // namespace

std::string to_json(const MilfpProblem& prob) {
  prob.validate();
  const int nx = prob.num_x();
  json j;
  auto affine = [&](const Affine& a) {
    std::vector<double> coeffs = a.x_coeffs;
    coeffs.insert(coeffs.end(), a.y_coeffs.begin(), a.y_coeffs.end());
    return json{{"constant", a.constant}, {"coeffs", coeffs}};
  };
  j["numerator"] = affine(prob.numerator);
  j["denominator"] = affine(prob.denominator);
  j["rows"] = json::array();
  for (const MilfpRow& r : prob.rows)
    j["rows"].push_back({{"coeffs", coeff_list(r.x_coeffs, r.y_coeffs, nx)},
                         {"sense", sense_str(r.sense)},
                         {"rhs", r.rhs}});
  std::vector<double> lo = prob.x_lo, hi = prob.x_hi;
  lo.insert(lo.end(), prob.y_lo.begin(), prob.y_lo.end());
  hi.insert(hi.end(), prob.y_hi.begin(), prob.y_hi.end());
  j["bounds"] = {{"lo", lo}, {"hi", hi}};
  json ints = json::array();
  for (int k = 0; k < prob.num_y(); ++k) ints.push_back(nx + k);
  j["integers"] = ints;
  if (!prob.var_names.empty()) j["names"] = prob.var_names;
  return j.dump(2);
}

MilfpProblem milfp_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw DataError(std::string("milfp json: parse error: ") + e.what());
  }
  try {
    const auto lo = j.at("bounds").at("lo").get<std::vector<double>>();
    const auto hi = j.at("bounds").at("hi").get<std::vector<double>>();
    if (lo.size() != hi.size()) throw DataError("milfp json: bound lengths differ");
    const int n = static_cast<int>(lo.size());
    std::vector<char> is_int(static_cast<std::size_t>(n), 0);
    for (int v : j.at("integers").get<std::vector<int>>()) {
      if (v < 0 || v >= n) throw DataError("milfp json: integer index out of range");
      is_int[static_cast<std::size_t>(v)] = 1;
    }
    // unified index -> (x or y, local index)
    MilfpProblem p;
    std::vector<int> local(static_cast<std::size_t>(n));
    std::vector<std::string> names(static_cast<std::size_t>(n));
    if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
    for (int v = 0; v < n; ++v) {
      const auto u = static_cast<std::size_t>(v);
      local[u] = is_int[u] ? p.add_y(lo[u], hi[u]) : p.add_x(lo[u], hi[u]);
    }
    if (j.contains("names")) {
      p.var_names.assign(static_cast<std::size_t>(n), "");
      for (int v = 0; v < n; ++v) {
        const auto u = static_cast<std::size_t>(v);
        const std::size_t slot = is_int[u]
                                     ? static_cast<std::size_t>(p.num_x() + local[u])
                                     : static_cast<std::size_t>(local[u]);
        p.var_names[slot] = names[u];
      }
    }
    auto read_affine = [&](const json& a, Affine& out) {
      out.constant = a.at("constant").get<double>();
      const auto coeffs = a.at("coeffs").get<std::vector<double>>();
      if (coeffs.size() != static_cast<std::size_t>(n))
        throw DataError("milfp json: affine coefficient length mismatch");
      for (int v = 0; v < n; ++v) {
        const auto u = static_cast<std::size_t>(v);
        if (is_int[u]) out.y_coeffs[static_cast<std::size_t>(local[u])] = coeffs[u];
        else out.x_coeffs[static_cast<std::size_t>(local[u])] = coeffs[u];
      }
    };
    read_affine(j.at("numerator"), p.numerator);
    read_affine(j.at("denominator"), p.denominator);
    for (const auto& rj : j.at("rows")) {
      MilfpRow r;
      r.sense = sense_from(rj.at("sense").get<std::string>());
      r.rhs = rj.at("rhs").get<double>();
      for (const auto& cv : rj.at("coeffs")) {
        const int v = cv.at(0).get<int>();
        const double a = cv.at(1).get<double>();
        if (v < 0 || v >= n) throw DataError("milfp json: row index out of range");
        const auto u = static_cast<std::size_t>(v);
        if (is_int[u]) r.y_coeffs.emplace_back(local[u], a);
        else r.x_coeffs.emplace_back(local[u], a);
      }
      p.add_row(std::move(r));
    }
    p.validate();
    return p;
  } catch (const json::exception& e) {
    throw DataError(std::string("milfp json: ") + e.what());
  }
}

MilfpProblem read_milfp_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw DataError("cannot open MILFP file: " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return milfp_from_json(buf.str());
}

void write_milfp_file(const MilfpProblem& prob, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw DataError("cannot write MILFP file: " + path);
  f << to_json(prob) << "\n";
}

}  // namespace ptaplan::milfp
