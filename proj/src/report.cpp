#include "glasser/report.hpp"

#include <charconv>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace glasser {
namespace {

nlohmann::json complex_json(Complex z) {
  return nlohmann::json{{"re", z.real()}, {"im", z.imag()}};
}

double parse_real(std::string_view text, std::string_view whole) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() ||
      !std::isfinite(v)) {
    throw InputError("malformed complex literal '" + std::string(whole) + "'");
  }
  return v;
}

std::string sci(double v, int digits) {
  std::ostringstream os;
  os << std::setprecision(digits) << v;
  return os.str();
}

}  // namespace

nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [name, value] : report.params) {
    params[name] = complex_json(value);
  }
  return nlohmann::json{
      {"case", report.case_name},
      {"params", params},
      {"lhs", complex_json(report.lhs)},
      {"rhs", complex_json(report.rhs)},
      {"abs_diff", report.abs_diff},
      {"rel_diff", report.rel_diff},
      {"pass", report.pass},
      {"evaluations", report.diagnostics.evaluations},
      {"truncation", report.diagnostics.truncation_used},
      {"experimental", report.experimental},
  };
}

nlohmann::json to_json(const std::vector<VerificationReport>& reports) {
  nlohmann::json out = nlohmann::json::array();
  for (const VerificationReport& r : reports) out.push_back(to_json(r));
  return out;
}

std::string format_complex(Complex z, int digits) {
  std::string s = sci(z.real(), digits);
  if (z.imag() != 0.0) {
    s += z.imag() < 0.0 ? " - " : " + ";
    s += sci(std::abs(z.imag()), digits) + "i";
  }
  return s;
}

void write_table(std::ostream& out, const std::vector<VerificationReport>& reports) {
  if (reports.empty()) return;
  out << std::left << std::setw(10) << "case" << std::setw(28) << "params"
      << std::setw(34) << "lhs" << std::setw(34) << "rhs" << std::setw(12)
      << "rel_diff" << "result\n";
  for (const VerificationReport& r : reports) {
    std::string params;
    for (const auto& [name, value] : r.params) {
      if (!params.empty()) params += " ";
      params += name + "=" + format_complex(value, 6);
    }
    out << std::left << std::setw(10) << r.case_name << std::setw(28) << params
        << std::setw(34) << format_complex(r.lhs) << std::setw(34)
        << format_complex(r.rhs) << std::setw(12) << sci(r.rel_diff, 3)
        << (r.pass ? "PASS" : "FAIL") << (r.experimental ? " (experimental)" : "")
        << "\n";
    for (const std::string& note : r.notes) out << "    note: " << note << "\n";
  }
}

Complex parse_complex_literal(std::string_view text) {
  const std::string_view whole = text;
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) throw InputError("empty complex literal");
  if (text.back() != 'i') return {parse_real(text, whole), 0.0};

  text.remove_suffix(1);
  // Split at the last sign that does not belong to an exponent.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = text.size(); k-- > 1;) {
    if ((text[k] == '+' || text[k] == '-') && text[k - 1] != 'e' &&
        text[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const std::string_view re_text =
      split == std::string_view::npos ? std::string_view{} : text.substr(0, split);
  std::string_view im_text =
      split == std::string_view::npos ? text : text.substr(split);
  double im;
  if (im_text.empty() || im_text == "+") {
    im = 1.0;
  } else if (im_text == "-") {
    im = -1.0;
  } else {
    im = parse_real(im_text, whole);
  }
  const double re = re_text.empty() ? 0.0 : parse_real(re_text, whole);
  return {re, im};
}

}  // namespace glasser
