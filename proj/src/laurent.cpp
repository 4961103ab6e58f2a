#include "polebracket/laurent.hpp"

#include <stdexcept>

#include <json.hpp>

namespace polebracket {

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r{a + o.a, m + o.m, {}};
  std::size_t i = 0, j = 0;
  while (i < d.size() || j < o.d.size()) {
    if (j == o.d.size() || (i < d.size() && d[i].first < o.d[j].first)) {
      r.d.push_back(d[i++]);
    } else if (i == d.size() || o.d[j].first < d[i].first) {
      r.d.push_back(o.d[j++]);
    } else {
      r.d.emplace_back(d[i].first, d[i].second + o.d[j].second);
      ++i;
      ++j;
    }
  }
  return r;
}

MultiLaurent::MultiLaurent(long long constant) {
  if (constant != 0) terms_.emplace(Monomial{}, Integer(constant));
}

MultiLaurent MultiLaurent::monomial(const Monomial& mono, Integer coeff) {
  MultiLaurent p;
  p.add_term(mono, coeff);
  return p;
}

MultiLaurent MultiLaurent::d_var(int i) {
  if (i < 0) throw std::invalid_argument("d_var: negative index");
  if (i == 0) return MultiLaurent(1);
  return monomial(Monomial{0, 0, {{i, 1}}});
}

Integer MultiLaurent::coefficient(const Monomial& mono) const {
  const auto it = terms_.find(mono);
  return it == terms_.end() ? Integer(0) : it->second;
}

bool MultiLaurent::has_m() const {
  for (const auto& [mono, c] : terms_)
    if (mono.m) return true;
  return false;
}

bool MultiLaurent::has_d() const {
  for (const auto& [mono, c] : terms_)
    if (mono.has_d()) return true;
  return false;
}

bool MultiLaurent::mentions_d(int i) const {
  for (const auto& [mono, c] : terms_)
    for (const auto& [idx, e] : mono.d)
      if (idx == i) return true;
  return false;
}

void MultiLaurent::add_term(const Monomial& mono, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(mono, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiLaurent& MultiLaurent::operator+=(const MultiLaurent& o) {
  for (const auto& [mono, c] : o.terms_) add_term(mono, c);
  return *this;
}

MultiLaurent& MultiLaurent::operator-=(const MultiLaurent& o) {
  for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
  return *this;
}

MultiLaurent operator*(const MultiLaurent& a, const MultiLaurent& b) {
  MultiLaurent r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

MultiLaurent& MultiLaurent::operator*=(const MultiLaurent& o) { return *this = *this * o; }

MultiLaurent operator-(MultiLaurent a) {
  for (auto& [mono, c] : a.terms_) c = -c;
  return a;
}

MultiLaurent MultiLaurent::pow(int n) const {
  if (n < 0) throw std::invalid_argument("MultiLaurent::pow: negative exponent");
  MultiLaurent result(1), base = *this;
  while (n) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return result;
}

MultiLaurent MultiLaurent::shift_a(int k) const {
  MultiLaurent r;
  for (const auto& [mono, c] : terms_) {
    Monomial m2 = mono;
    m2.a += k;
    r.terms_.emplace(std::move(m2), c);
  }
  return r;
}

Integer MultiLaurent::evaluate(long long a, long long m, const std::vector<long long>& d) const {
  Integer total = 0;
  for (const auto& [mono, c] : terms_) {
    if (mono.a < 0 && a != 1 && a != -1) throw std::domain_error("evaluate: negative A power at |A| != 1");
    Integer v = c;
    const int ae = mono.a < 0 ? -mono.a : mono.a;
    for (int i = 0; i < ae; ++i) v *= a;
    for (int i = 0; i < mono.m; ++i) v *= m;
    for (const auto& [idx, e] : mono.d) {
      if (idx > static_cast<int>(d.size())) throw std::out_of_range("evaluate: missing value for d_" + std::to_string(idx));
      for (int i = 0; i < e; ++i) v *= d[static_cast<std::size_t>(idx - 1)];
    }
    total += v;
  }
  return total;
}

namespace {

std::string a_term(const Integer& c, int k, bool leading) {
  std::string s;
  const bool neg = c < 0;
  const Integer mag = neg ? Integer(-c) : c;
  if (leading)
    s += neg ? "-" : "";
  else
    s += neg ? " - " : " + ";
  if (k == 0) return s + mag.str();
  if (mag != 1) s += mag.str() + "*";
  s += "A";
  if (k != 1) s += "^" + std::to_string(k);
  return s;
}

std::string var_prefix(const Monomial& key) {
  std::string s;
  auto join = [&s](const std::string& x) {
    if (!s.empty()) s += "*";
    s += x;
  };
  if (key.m == 1) join("M");
  if (key.m > 1) join("M^" + std::to_string(key.m));
  for (const auto& [i, e] : key.d) join("d_" + std::to_string(i) + (e > 1 ? "^" + std::to_string(e) : ""));
  return s;
}

}  // namespace

std::string MultiLaurent::to_string() const {
  if (terms_.empty()) return "0";
  // Group by the non-A part, A powers descending within each group.
  std::map<Monomial, std::map<int, Integer, std::greater<>>> groups;
  for (const auto& [mono, c] : terms_) {
    Monomial key = mono;
    key.a = 0;
    groups[key][mono.a] = c;
  }
  std::string out;
  for (const auto& [key, poly] : groups) {
    const std::string prefix = var_prefix(key);
    std::string g;
    if (prefix.empty() || poly.size() > 1) {
      bool first = true;
      for (const auto& [k, c] : poly) {
        g += a_term(c, k, first);
        first = false;
      }
      if (!prefix.empty()) g = prefix + "*(" + g + ")";
    } else {
      const auto& [k, c] = *poly.begin();
      if (k == 0 && (c == 1 || c == -1))
        g = (c < 0 ? "-" : "") + prefix;
      else
        g = a_term(c, k, true) + "*" + prefix;
    }
    if (out.empty())
      out = g;
    else if (g.front() == '-')
      out += " - " + g.substr(1);
    else
      out += " + " + g;
  }
  return out;
}

std::string MultiLaurent::to_json() const {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& [mono, c] : terms_) {
    nlohmann::ordered_json t;
    t["a"] = mono.a;
    t["m"] = mono.m;
    nlohmann::ordered_json d = nlohmann::ordered_json::object();
    for (const auto& [i, e] : mono.d) d[std::to_string(i)] = e;
    t["d"] = d;
    if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
      t["coeff"] = static_cast<long long>(c);
    else
      t["coeff"] = c.str();
    arr.push_back(t);
  }
  return arr.dump();
}

MultiLaurent delta() { return -(MultiLaurent::a_power(2) + MultiLaurent::a_power(-2)); }

}  // namespace polebracket
