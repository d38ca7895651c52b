#include <cmath>

#include "mflab/cli.hpp"
#include "mflab/error.hpp"

namespace mflab::cli {

Json to_json(const Rational& r) { return mflab::to_string(r); }

Json to_json(const MultiPoly& p) { return p.to_string(); }

Json to_json(const std::complex<double>& z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const PolyMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const VectorField& v) {
  Json out = Json::object();
  for (std::size_t i = 0; i < v.dimension(); ++i) out[(*v.ring())[i].name] = to_json(v[i]);
  return out;
}

Rational parse_exact(const std::string& text) {
  std::size_t dot = text.find('.');
  if (dot == std::string::npos) return parse_rational(text);
  // Decimal literal: the exact value of the written digits.
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  std::size_t first = !digits.empty() && digits[0] == '-' ? 1 : 0;
  if (digits.size() == first || digits.find_first_not_of("0123456789", first) != std::string::npos) {
    throw Error(ErrorCode::kParse, "cannot read '" + text + "' as an exact number");
  }
  Integer den = 1;
  for (std::size_t k = dot + 1; k < text.size(); ++k) den *= 10;
  return make_rational(Integer(digits), den);
}

std::complex<double> parse_complex(const std::string& text) {
  auto real = [](const std::string& s) -> double {
    if (s.find('/') != std::string::npos) return parse_rational(s).get_d();
    std::size_t used = 0;
    double x = 0;
    try {
      x = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || s.empty()) throw Error(ErrorCode::kParse, "cannot read '" + s + "' as a number");
    return x;
  };
  std::size_t colon = text.find(':');
  if (colon == std::string::npos) return {real(text), 0};
  return {real(text.substr(0, colon)), real(text.substr(colon + 1))};
}

}  // namespace mflab::cli
