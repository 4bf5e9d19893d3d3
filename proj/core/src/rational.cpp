#include "mrsk/rational.hpp"

#include <algorithm>
#include <cctype>

namespace mrsk {

namespace {

bool valid_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational rat_parse(const std::string& text) {
  std::string num = text;
  std::string den = "1";
  if (auto pos = text.find('/'); pos != std::string::npos) {
    num = text.substr(0, pos);
    den = text.substr(pos + 1);
  }
  if (!valid_integer_token(num) || !valid_integer_token(den)) {
    fail(errkind::ParseError, "not a rational: '" + text + "'");
  }
  Rational r;
  if (r.set_str(num + "/" + den, 10) != 0) {
    fail(errkind::ParseError, "not a rational: '" + text + "'");
  }
  if (r.get_den() == 0) {
    fail(errkind::ParseError, "zero denominator: '" + text + "'");
  }
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Integer rat_floor(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

Integer rat_ceil(const Rational& r) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

std::string ext_to_string(const ExtValue& v) {
  if (!v) return "-inf";
  return rat_to_string(*v);
}

std::vector<Rational> merge_sorted_times(const std::vector<Rational>& a,
                                         const std::vector<Rational>& b) {
  std::vector<Rational> out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace mrsk
