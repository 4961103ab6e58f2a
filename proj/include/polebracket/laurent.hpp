#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace polebracket {

using Integer = boost::multiprecision::cpp_int;

/// A^a M^m d_1^{e_1} d_2^{e_2} ...; `d` holds (i, e_i) pairs with i >= 1,
/// e_i > 0, sorted by i.
struct Monomial {
  int a = 0;
  int m = 0;
  std::vector<std::pair<int, int>> d;

  auto operator<=>(const Monomial&) const = default;

  Monomial operator*(const Monomial& o) const;
  bool has_d() const { return !d.empty(); }
};

/// Exact element of Z[A, A^-1, M, d_1, d_2, ...].
class MultiLaurent {
 public:
  MultiLaurent() = default;
  MultiLaurent(long long constant);  // NOLINT: integers promote naturally

  static MultiLaurent monomial(const Monomial& mono, Integer coeff = 1);
  static MultiLaurent a_power(int k) { return monomial(Monomial{k, 0, {}}); }
  static MultiLaurent m_var() { return monomial(Monomial{0, 1, {}}); }
  /// d_i, with d_0 = 1.
  static MultiLaurent d_var(int i);

  const std::map<Monomial, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }
  Integer coefficient(const Monomial& mono) const;

  bool has_m() const;
  bool has_d() const;
  /// True if some monomial contains d_i.
  bool mentions_d(int i) const;
  /// Only A powers appear.
  bool a_only() const { return !has_m() && !has_d(); }

  MultiLaurent& operator+=(const MultiLaurent& o);
  MultiLaurent& operator-=(const MultiLaurent& o);
  MultiLaurent& operator*=(const MultiLaurent& o);
  void add_term(const Monomial& mono, const Integer& coeff);

  friend MultiLaurent operator+(MultiLaurent a, const MultiLaurent& b) { return a += b; }
  friend MultiLaurent operator-(MultiLaurent a, const MultiLaurent& b) { return a -= b; }
  friend MultiLaurent operator*(const MultiLaurent& a, const MultiLaurent& b);
  friend MultiLaurent operator-(MultiLaurent a);
  friend bool operator==(const MultiLaurent&, const MultiLaurent&) = default;

  MultiLaurent pow(int n) const;
  /// Multiplies every monomial by A^k.
  MultiLaurent shift_a(int k) const;

  /// Integer value at A = a (a must be +-1 if negative powers occur),
  /// M = m and d_i = d[i-1].
  Integer evaluate(long long a, long long m, const std::vector<long long>& d = {}) const;

  /// Deterministic text form, e.g. "-A^3*d_1 + M*(-A^2 - A^-2)".
  std::string to_string() const;
  /// Sorted term list [{"a":..,"m":..,"d":{"1":..},"coeff":..}].
  std::string to_json() const;

 private:
  std::map<Monomial, Integer> terms_;
};

/// The loop value -A^2 - A^-2.
MultiLaurent delta();

}  // namespace polebracket
