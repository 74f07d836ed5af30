#include "maglap/report.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace maglap {

namespace {

std::string number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// JSON has no NaN/inf literals; anything non-finite becomes null.
std::string json_number(double x) {
  return std::isfinite(x) ? number(x) : "null";
}

std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
  return out;
}

std::string row_json(const ConvergenceRow& r) {
  std::string out = "{";
  out += "\"N\": " + std::to_string(r.N);
  out += ", \"M\": " + std::to_string(r.M);
  out += ", \"h\": " + json_number(r.h);
  out += ", \"l2_error\": " + json_number(r.l2_error);
  out += ", \"order\": " + json_number(r.order);
  out += ", \"w_norm\": " + json_number(r.w_norm);
  out += ", \"ratio_bound\": " + json_number(r.ratio_bound);
  out += ", \"iterations\": " + std::to_string(r.iterations);
  out += ", \"residual\": " + json_number(r.residual);
  out += "}";
  return out;
}

}  // namespace

std::string format_double(double x) {
  return std::isnan(x) ? std::string{} : number(x);
}

std::string emit_study_csv(const std::vector<ConvergenceRow>& rows) {
  if (rows.empty()) throw std::invalid_argument("study has no rows to emit");
  std::string out =
      "N,h,l2_error,order,w_norm,ratio_bound,iterations,residual\n";
  for (const ConvergenceRow& r : rows) {
    out += std::to_string(r.N);
    out += ',';
    out += format_double(r.h);
    out += ',';
    out += format_double(r.l2_error);
    out += ',';
    out += format_double(r.order);
    out += ',';
    out += format_double(r.w_norm);
    out += ',';
    out += format_double(r.ratio_bound);
    out += ',';
    out += std::to_string(r.iterations);
    out += ',';
    out += format_double(r.residual);
    out += '\n';
  }
  return out;
}

std::string emit_study_json(const std::vector<ConvergenceRow>& rows,
                            const std::string& problem,
                            const std::string& method) {
  if (rows.empty()) throw std::invalid_argument("study has no rows to emit");
  std::string out = "{\n";
  out += "  \"problem\": " + json_string(problem) + ",\n";
  out += "  \"method\": " + json_string(method) + ",\n";
  out += "  \"rows\": [\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out += "    " + row_json(rows[i]);
    out += i + 1 < rows.size() ? ",\n" : "\n";
  }
  out += "  ]\n}\n";
  return out;
}

std::string emit_identities_csv(const std::vector<IdentityResult>& results) {
  if (results.empty())
    throw std::invalid_argument("identity suite has no results to emit");
  std::string out = "identity,max_residual,tolerance,pass\n";
  for (const IdentityResult& r : results) {
    out += r.name;
    out += ',';
    out += format_double(r.max_residual);
    out += ',';
    out += format_double(r.tolerance);
    out += ',';
    out += r.pass() ? "true" : "false";
    out += '\n';
  }
  return out;
}

std::string emit_solve_json(const SolveSummary& s) {
  const Rect box = s.grid.box();
  std::string out = "{\n";
  out += "  \"problem\": " + json_string(s.problem) + ",\n";
  out += "  \"N\": " + std::to_string(s.grid.N()) + ",\n";
  out += "  \"M\": " + std::to_string(s.grid.M()) + ",\n";
  out += "  \"h\": " + json_number(s.grid.h()) + ",\n";
  out += "  \"domain\": [" + json_number(box.a1) + ", " + json_number(box.b1) +
         ", " + json_number(box.a2) + ", " + json_number(box.b2) + "],\n";
  out += "  \"method\": " + json_string(s.method) + ",\n";
  out += "  \"tol\": " + json_number(s.tol) + ",\n";
  out += "  \"iterations\": " + std::to_string(s.iterations) + ",\n";
  out += "  \"relative_residual\": " + json_number(s.relative_residual) + ",\n";
  out += "  \"energy\": " + json_number(s.energy) + ",\n";
  out += "  \"l2_error\": " + json_number(s.l2_error) + ",\n";
  out += "  \"w_norm\": " + json_number(s.w_norm) + ",\n";
  out += "  \"ratio_bound\": " + json_number(s.ratio_bound) + ",\n";
  out += "  \"solution\": [\n";
  for (std::size_t i = 0; i < s.solution.size(); ++i) {
    out += "    [" + json_number(s.solution[i].real()) + ", " +
           json_number(s.solution[i].imag()) + "]";
    out += i + 1 < s.solution.size() ? ",\n" : "\n";
  }
  out += "  ]\n}\n";
  return out;
}

std::string emit_spectrum_csv(const std::vector<double>& eigenvalues) {
  if (eigenvalues.empty())
    throw std::invalid_argument("spectrum has no eigenvalues to emit");
  std::string out = "index,eigenvalue\n";
  for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
    out += std::to_string(i + 1);
    out += ',';
    out += format_double(eigenvalues[i]);
    out += '\n';
  }
  return out;
}

std::string emit_spectrum_json(int n, int m, double ax, double ay,
                               const std::vector<double>& eigenvalues) {
  std::string out = "{\n";
  out += "  \"N\": " + std::to_string(n) + ",\n";
  out += "  \"M\": " + std::to_string(m) + ",\n";
  out += "  \"ax\": " + json_number(ax) + ",\n";
  out += "  \"ay\": " + json_number(ay) + ",\n";
  out += "  \"eigenvalues\": [";
  for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
    if (i) out += ", ";
    out += json_number(eigenvalues[i]);
  }
  out += "]\n}\n";
  return out;
}

}  // namespace maglap
