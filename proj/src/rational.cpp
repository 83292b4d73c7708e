#include "dpcyl/rational.hpp"

#include <cctype>

#include "dpcyl/error.hpp"

namespace dpcyl {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::InvalidReference: return "invalid-reference";
    case ErrorKind::InconsistentConfiguration: return "inconsistent-configuration";
    case ErrorKind::NotContractible: return "not-contractible";
    case ErrorKind::InvalidConfiguration: return "invalid-configuration";
    case ErrorKind::InvalidState: return "invalid-state";
    case ErrorKind::NotDuVal: return "not-du-val";
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::Contradiction: return "contradiction";
  }
  return "unknown";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den))) {
    throw Error(ErrorKind::InvalidInput, "not a rational literal of the form p/q: '" + std::string(text) + "'");
  }
  Integer p(std::string(num), 10);
  Integer q = slash == std::string_view::npos ? Integer(1) : Integer(std::string(den), 10);
  if (q == 0) throw Error(ErrorKind::InvalidInput, "zero denominator in '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

}  // namespace dpcyl
