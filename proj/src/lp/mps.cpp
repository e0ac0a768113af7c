#include "ptaplan/lp/mps.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "ptaplan/common/errors.hpp"

namespace ptaplan::lp {
namespace {

std::string fmt_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string col_name(int j) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "X%07d", j);
  return buf;
}

std::string row_name(int i) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "R%07d", i);
  return buf;
}

void field(std::string& line, std::size_t start, const std::string& s) {
  if (line.size() < start) line.resize(start, ' ');
  if (!line.empty() && line.size() > start && line.back() != ' ') line += ' ';
  line += s;
}

std::vector<std::string> tokens(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

double parse_num(const std::string& s) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0') throw DataError("MPS: bad numeric field '" + s + "'");
  return v;
}

}  // namespace

std::string export_mps(const LpProblem& p, const std::string& name) {
  p.validate();
  std::ostringstream os;
  os << "NAME          " << name << "\n";
  os << "ROWS\n";
  os << " N  OBJ\n";
  for (int i = 0; i < p.num_rows(); ++i) {
    const char s = static_cast<char>(p.rows[static_cast<std::size_t>(i)].sense);
    os << " " << s << "  " << row_name(i) << "\n";
  }

  // Row entries grouped per column. Every column gets an OBJ entry so the
  // import sees the full variable set even for columns absent from all rows.
  std::vector<std::vector<std::pair<int, double>>> by_col(static_cast<std::size_t>(p.num_vars()));
  for (int i = 0; i < p.num_rows(); ++i)
    for (const auto& [j, v] : p.rows[static_cast<std::size_t>(i)].coeffs)
      by_col[static_cast<std::size_t>(j)].emplace_back(i, v);

  os << "COLUMNS\n";
  for (int j = 0; j < p.num_vars(); ++j) {
    std::string line(4, ' ');
    field(line, 4, col_name(j));
    field(line, 14, "OBJ");
    field(line, 24, fmt_value(p.c[static_cast<std::size_t>(j)]));
    os << line << "\n";
    for (const auto& [i, v] : by_col[static_cast<std::size_t>(j)]) {
      line.assign(4, ' ');
      field(line, 4, col_name(j));
      field(line, 14, row_name(i));
      field(line, 24, fmt_value(v));
      os << line << "\n";
    }
  }

  os << "RHS\n";
  for (int i = 0; i < p.num_rows(); ++i) {
    const double b = p.rows[static_cast<std::size_t>(i)].rhs;
    if (b == 0.0) continue;
    std::string line(4, ' ');
    field(line, 4, "RHS");
    field(line, 14, row_name(i));
    field(line, 24, fmt_value(b));
    os << line << "\n";
  }

  os << "BOUNDS\n";
  for (int j = 0; j < p.num_vars(); ++j) {
    const double lo = p.var_lo[static_cast<std::size_t>(j)];
    const double hi = p.var_hi[static_cast<std::size_t>(j)];
    auto bound = [&](const char* type, bool with_value, double v) {
      std::string line(1, ' ');
      field(line, 1, type);
      field(line, 4, "BND");
      field(line, 14, col_name(j));
      if (with_value) field(line, 24, fmt_value(v));
      os << line << "\n";
    };
    if (lo == 0.0 && hi == kInf) continue;  // MPS default
    if (lo == hi) {
      bound("FX", true, lo);
      continue;
    }
    if (lo == -kInf && hi == kInf) {
      bound("FR", false, 0.0);
      continue;
    }
    if (lo == -kInf) bound("MI", false, 0.0);
    else if (lo != 0.0) bound("LO", true, lo);
    if (hi != kInf) bound("UP", true, hi);
  }
  os << "ENDATA\n";
  return os.str();
}

LpProblem import_mps(const std::string& text) {
  LpProblem p;
  std::map<std::string, int> row_ids;   // constraint rows only
  std::map<std::string, int> col_ids;
  std::string obj_row;

  auto get_col = [&](const std::string& name) {
    auto it = col_ids.find(name);
    if (it != col_ids.end()) return it->second;
    const int j = p.add_var(0.0, kInf, 0.0, name);
    col_ids.emplace(name, j);
    return j;
  };

  enum class Section { None, Rows, Columns, Rhs, Bounds, Done };
  Section sec = Section::None;

  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '*') continue;
    if (!std::isspace(static_cast<unsigned char>(line[0]))) {
      const auto tok = tokens(line);
      const std::string& kw = tok[0];
      if (kw == "NAME") continue;
      if (kw == "ROWS") { sec = Section::Rows; continue; }
      if (kw == "COLUMNS") { sec = Section::Columns; continue; }
      if (kw == "RHS") { sec = Section::Rhs; continue; }
      if (kw == "BOUNDS") { sec = Section::Bounds; continue; }
      if (kw == "ENDATA") { sec = Section::Done; break; }
      if (kw == "RANGES") throw DataError("MPS: RANGES section not supported");
      throw DataError("MPS: unknown section '" + kw + "'");
    }
    const auto tok = tokens(line);
    if (tok.empty()) continue;
    switch (sec) {
      case Section::Rows: {
        if (tok.size() != 2) throw DataError("MPS: malformed ROWS line");
        const std::string& type = tok[0];
        if (type == "N") {
          if (!obj_row.empty()) throw DataError("MPS: multiple objective rows");
          obj_row = tok[1];
        } else {
          Sense s;
          if (type == "L") s = Sense::Le;
          else if (type == "G") s = Sense::Ge;
          else if (type == "E") s = Sense::Eq;
          else throw DataError("MPS: unknown row type '" + type + "'");
          row_ids.emplace(tok[1], p.num_rows());
          p.rows.push_back(Row{{}, s, 0.0});
        }
        break;
      }
      case Section::Columns: {
        if (tok.size() != 3 && tok.size() != 5) throw DataError("MPS: malformed COLUMNS line");
        const int j = get_col(tok[0]);
        for (std::size_t k = 1; k + 1 < tok.size(); k += 2) {
          const double v = parse_num(tok[k + 1]);
          if (tok[k] == obj_row) {
            p.c[static_cast<std::size_t>(j)] = v;
          } else {
            auto it = row_ids.find(tok[k]);
            if (it == row_ids.end()) throw DataError("MPS: unknown row '" + tok[k] + "'");
            p.rows[static_cast<std::size_t>(it->second)].coeffs.emplace_back(j, v);
          }
        }
        break;
      }
      case Section::Rhs: {
        if (tok.size() != 3 && tok.size() != 5) throw DataError("MPS: malformed RHS line");
        for (std::size_t k = 1; k + 1 < tok.size(); k += 2) {
          auto it = row_ids.find(tok[k]);
          if (it == row_ids.end()) {
            if (tok[k] == obj_row) continue;  // objective constant: ignored
            throw DataError("MPS: unknown RHS row '" + tok[k] + "'");
          }
          p.rows[static_cast<std::size_t>(it->second)].rhs = parse_num(tok[k + 1]);
        }
        break;
      }
      case Section::Bounds: {
        if (tok.size() < 3) throw DataError("MPS: malformed BOUNDS line");
        const std::string& type = tok[0];
        const int j = get_col(tok[2]);
        const auto ju = static_cast<std::size_t>(j);
        double v = 0.0;
        if (tok.size() >= 4) v = parse_num(tok[3]);
        if (type == "UP" || type == "UI") p.var_hi[ju] = v;
        else if (type == "LO" || type == "LI") p.var_lo[ju] = v;
        else if (type == "FX") { p.var_lo[ju] = v; p.var_hi[ju] = v; }
        else if (type == "FR") { p.var_lo[ju] = -kInf; p.var_hi[ju] = kInf; }
        else if (type == "MI") p.var_lo[ju] = -kInf;
        else if (type == "PL") p.var_hi[ju] = kInf;
        else if (type == "BV") { p.var_lo[ju] = 0.0; p.var_hi[ju] = 1.0; }
        else throw DataError("MPS: unknown bound type '" + type + "'");
        break;
      }
      default:
        throw DataError("MPS: data line outside any section");
    }
  }
  if (obj_row.empty()) throw DataError("MPS: no objective row");
  p.validate();
  return p;
}

LpProblem read_mps_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw DataError("cannot open MPS file: " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return import_mps(buf.str());
}

void write_mps_file(const LpProblem& p, const std::string& path, const std::string& name) {
  std::ofstream f(path);
  if (!f) throw DataError("cannot write MPS file: " + path);
  f << export_mps(p, name);
}

}  // namespace ptaplan::lp
