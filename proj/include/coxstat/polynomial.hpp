#pragma once

// Sparse exact polynomials with signed exponents, and exact rationals.
//
// JSON forms:
//   univariate  {"var":"q","terms":{"<exp>":"<coeff>"}}
//   bivariate   {"vars":["q","t"],"terms":{"<e_q>,<e_t>":"<coeff>"}}
//   rational    "p/q"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "coxstat/error.hpp"
#include "coxstat/signed_permutation.hpp"

namespace coxstat {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& v) { return v.str(); }

/// Always "p/q", with q = 1 for integers.
inline std::string to_string(const BigRational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

inline BigRational parse_rational(std::string_view text) {
  text = detail::trim(text);
  auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) return BigRational(BigInt(std::string(text)));
    BigInt p(std::string(detail::trim(text.substr(0, slash))));
    BigInt q(std::string(detail::trim(text.substr(slash + 1))));
    if (q == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
    return BigRational(p) / BigRational(q);
  } catch (const std::runtime_error&) {
    throw InvalidArgument("not a rational: '" + std::string(text) + "'");
  }
}

/// Sum of c_e q^e over integer exponents e; zero coefficients are never stored.
class LaurentPoly {
 public:
  using Terms = std::map<std::int64_t, BigInt>;

  LaurentPoly() = default;

  void add_term(std::int64_t exponent, const BigInt& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  BigInt coefficient(std::int64_t exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
  std::int64_t max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

  /// Value at q = 1, i.e. the size of the universe for a distribution.
  BigInt total_mass() const {
    BigInt s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
  }

  LaurentPoly& operator+=(const LaurentPoly& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
  }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// "1+2q+2q^2+q^3", increasing exponents.
  std::string to_string(const std::string& var = "q") const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      BigInt mag = c < 0 ? BigInt(-c) : c;
      if (c < 0) s += "-";
      else if (!first) s += "+";
      first = false;
      if (e == 0) {
        s += mag.str();
        continue;
      }
      if (mag != 1) s += mag.str();
      s += var;
      if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
  }

  nlohmann::json to_json(const std::string& var = "q") const {
    nlohmann::json terms = nlohmann::json::object();
    for (const auto& [e, c] : terms_) terms[std::to_string(e)] = c.str();
    return {{"var", var}, {"terms", terms}};
  }

  static LaurentPoly from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_object())
      throw InvalidArgument("polynomial JSON needs a \"terms\" object");
    LaurentPoly p;
    for (const auto& [key, value] : j["terms"].items()) {
      std::string coeff = value.is_string() ? value.get<std::string>() : value.dump();
      p.add_term(detail::parse_integer(key), BigInt(coeff));
    }
    return p;
  }

 private:
  Terms terms_;
};

/// Sum of c q^a t^b over integer exponent pairs.
class BivariatePoly {
 public:
  using Exponents = std::pair<std::int64_t, std::int64_t>;
  using Terms = std::map<Exponents, BigInt>;

  void add_term(std::int64_t eq, std::int64_t et, const BigInt& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(Exponents{eq, et}, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  BigInt coefficient(std::int64_t eq, std::int64_t et) const {
    auto it = terms_.find({eq, et});
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  const Terms& terms() const { return terms_; }

  BivariatePoly& operator+=(const BivariatePoly& other) {
    for (const auto& [e, c] : other.terms_) add_term(e.first, e.second, c);
    return *this;
  }

  /// q <-> t.
  BivariatePoly transposed() const {
    BivariatePoly out;
    for (const auto& [e, c] : terms_) out.add_term(e.second, e.first, c);
    return out;
  }

  /// Marginal in the first variable.
  LaurentPoly marginal_q() const {
    LaurentPoly p;
    for (const auto& [e, c] : terms_) p.add_term(e.first, c);
    return p;
  }

  friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;

  std::string to_string(const std::string& q = "q", const std::string& t = "t") const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      BigInt mag = c < 0 ? BigInt(-c) : c;
      if (c < 0) s += "-";
      else if (!first) s += "+";
      first = false;
      std::string mono;
      if (e.first != 0) mono += q + (e.first != 1 ? "^" + std::to_string(e.first) : "");
      if (e.second != 0) mono += t + (e.second != 1 ? "^" + std::to_string(e.second) : "");
      if (mono.empty()) s += mag.str();
      else s += (mag != 1 ? mag.str() : "") + mono;
    }
    return s;
  }

  nlohmann::json to_json(const std::string& q = "q", const std::string& t = "t") const {
    nlohmann::json terms = nlohmann::json::object();
    for (const auto& [e, c] : terms_) terms[std::to_string(e.first) + "," + std::to_string(e.second)] = c.str();
    return {{"vars", {q, t}}, {"terms", terms}};
  }

  static BivariatePoly from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_object())
      throw InvalidArgument("polynomial JSON needs a \"terms\" object");
    BivariatePoly p;
    for (const auto& [key, value] : j["terms"].items()) {
      auto parts = detail::split(key, ',');
      if (parts.size() != 2) throw InvalidArgument("bivariate exponent key must be \"a,b\": " + key);
      std::string coeff = value.is_string() ? value.get<std::string>() : value.dump();
      p.add_term(detail::parse_integer(parts[0]), detail::parse_integer(parts[1]), BigInt(coeff));
    }
    return p;
  }

 private:
  Terms terms_;
};

}  // namespace coxstat
