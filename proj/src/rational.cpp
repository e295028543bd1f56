#include "endindex/rational.hpp"

#include <cctype>

#include "endindex/errors.hpp"

namespace endindex {

NotFinite::NotFinite(std::vector<std::size_t> degrees)
    : Error([&] {
        std::string msg = "homology has free part in degrees {";
        for (std::size_t i = 0; i < degrees.size(); ++i) {
          if (i) msg += ", ";
          msg += std::to_string(degrees[i]);
        }
        return msg + "}";
      }()),
      degrees_(std::move(degrees)) {}

OnWall::OnWall(double delta, double wall)
    : Error("weight " + std::to_string(delta) + " lies on the exceptional wall " +
            std::to_string(wall)),
      delta_(delta),
      wall_(wall) {}

InsufficientWindow::InsufficientWindow(std::size_t given, std::size_t required)
    : Error("truncation half-width " + std::to_string(given) + " too small; need N >= " +
            std::to_string(required)),
      required_(required) {}

std::string to_string(const Rational& r) { return r.get_str(); }

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  std::string_view num = trim(s.substr(0, slash));
  std::string_view den = slash == std::string_view::npos ? "1" : trim(s.substr(slash + 1));
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' ||
      den.front() == '+')
    throw ParseError("malformed rational '" + std::string(text) + "'");
  std::string n(num.front() == '+' ? num.substr(1) : num);
  Integer d{std::string(den)};
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational r(Integer(n), d);
  r.canonicalize();
  return r;
}

Integer height(const Rational& r) {
  Integer n = abs(r.get_num());
  return n > r.get_den() ? n : r.get_den();
}

double to_double(const Rational& r) { return r.get_d(); }

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero in Q(i)");
  Rational n = norm();
  return {Rational(re / n), Rational(-im / n)};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  return *this *= o.inverse();
}

std::string to_string(const GaussianRational& z) {
  if (sgn(z.im) == 0) return to_string(z.re);
  return to_string(z.re) + "," + to_string(z.im);
}

GaussianRational parse_gaussian(std::string_view text) {
  auto comma = text.find(',');
  if (comma == std::string_view::npos) return {parse_rational(text), Rational(0)};
  return {parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1))};
}

}  // namespace endindex
