#include "polyfan/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace polyfan {

std::string rational_to_string(const Rat& r) {
  std::string s = r.str();
  if (s.find('/') == std::string::npos) s += "/1";
  return s;
}

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rat parse_rational(const std::string& text) {
  const auto bad = [&] {
    return std::invalid_argument("malformed rational: '" + text + "'");
  };
  std::string s = text;
  // strip surrounding whitespace
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  if (s.empty()) throw bad();

  const std::size_t slash = s.find('/');
  if (slash != std::string::npos) {
    const std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den)) throw bad();
    boost::multiprecision::mpz_int p(num), q(den);
    if (q == 0) throw std::invalid_argument("zero denominator in rational: '" + text + "'");
    return Rat(p) / Rat(q);
  }

  const std::size_t dot = s.find('.');
  if (dot != std::string::npos) {
    std::string ip = s.substr(0, dot);
    const std::string fp = s.substr(dot + 1);
    bool neg = false;
    if (!ip.empty() && (ip[0] == '+' || ip[0] == '-')) {
      neg = (ip[0] == '-');
      ip.erase(ip.begin());
    }
    if (ip.empty() && fp.empty()) throw bad();
    for (char c : ip + fp)
      if (!std::isdigit(static_cast<unsigned char>(c))) throw bad();
    boost::multiprecision::mpz_int scale = 1;
    for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
    boost::multiprecision::mpz_int whole = ip.empty() ? 0 : boost::multiprecision::mpz_int(ip);
    boost::multiprecision::mpz_int frac = fp.empty() ? 0 : boost::multiprecision::mpz_int(fp);
    Rat value = Rat(whole * scale + frac) / Rat(scale);
    return neg ? Rat(-value) : value;
  }

  if (!is_integer_token(s)) throw bad();
  return Rat(boost::multiprecision::mpz_int(s));
}

double rational_to_double(const Rat& r) { return r.convert_to<double>(); }

RatVector rational_vector(std::initializer_list<Rat> entries) {
  RatVector v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (const Rat& e : entries) v[i++] = e;
  return v;
}

Eigen::VectorXd to_double_vector(const RatVector& v) {
  Eigen::VectorXd out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = rational_to_double(v[i]);
  return out;
}

}  // namespace polyfan
