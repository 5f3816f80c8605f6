// JSON wire formats: arrays with their ring descriptor, cyclotomic
// elements, torus points, kernel reports.
#pragma once

#include <string>

#include <json.hpp>

#include "tomofix/arrays.hpp"
#include "tomofix/modp.hpp"
#include "tomofix/zero_locus.hpp"

namespace tomofix {

using nlohmann::json;

namespace ser_detail {

inline json integer_to_json(const mpz_class& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

inline mpz_class integer_from_json(const json& j) {
  if (j.is_string()) return mpz_class(j.get<std::string>());
  return mpz_class(j.get<long>());
}

}  // namespace ser_detail

// {"dims":[n1,n2],"ring":{...},"values":[[row-major]]}, one inner list per
// row j, columns i ascending.
inline json to_json(const TorusArray<mpz_class>& a) {
  json rows = json::array();
  for (long long j = 0; j < a.n2(); ++j) {
    json row = json::array();
    for (long long i = 0; i < a.n1(); ++i) row.push_back(ser_detail::integer_to_json(a.at(i, j)));
    rows.push_back(std::move(row));
  }
  return json{{"dims", {a.n1(), a.n2()}}, {"ring", {{"kind", "Z"}}}, {"values", std::move(rows)}};
}

inline json to_json(const TorusArray<mpq_class>& a) {
  json rows = json::array();
  for (long long j = 0; j < a.n2(); ++j) {
    json row = json::array();
    for (long long i = 0; i < a.n1(); ++i) row.push_back(a.at(i, j).get_str());
    rows.push_back(std::move(row));
  }
  return json{{"dims", {a.n1(), a.n2()}}, {"ring", {{"kind", "Q"}}}, {"values", std::move(rows)}};
}

inline json to_json(const TorusArray<Mod>& a) {
  json rows = json::array();
  for (long long j = 0; j < a.n2(); ++j) {
    json row = json::array();
    for (long long i = 0; i < a.n1(); ++i) row.push_back(a.at(i, j).value());
    rows.push_back(std::move(row));
  }
  return json{{"dims", {a.n1(), a.n2()}},
              {"ring", {{"kind", "Zmod"}, {"modulus", a.values().front().modulus()}}},
              {"values", std::move(rows)}};
}

inline TorusArray<mpz_class> torus_z_from_json(const json& j) {
  if (j.at("ring").at("kind").get<std::string>() != "Z")
    throw std::invalid_argument("torus_z_from_json: ring kind is not Z");
  long long n1 = j.at("dims").at(0).get<long long>(), n2 = j.at("dims").at(1).get<long long>();
  std::vector<mpz_class> vals;
  for (const json& row : j.at("values"))
    for (const json& v : row) vals.push_back(ser_detail::integer_from_json(v));
  return TorusArray<mpz_class>::from_values(n1, n2, std::move(vals));
}

inline TorusArray<mpq_class> torus_q_from_json(const json& j) {
  if (j.at("ring").at("kind").get<std::string>() != "Q")
    throw std::invalid_argument("torus_q_from_json: ring kind is not Q");
  long long n1 = j.at("dims").at(0).get<long long>(), n2 = j.at("dims").at(1).get<long long>();
  std::vector<mpq_class> vals;
  for (const json& row : j.at("values"))
    for (const json& v : row) {
      mpq_class q(v.is_string() ? mpq_class(v.get<std::string>()) : mpq_class(v.get<long>()));
      q.canonicalize();
      vals.push_back(std::move(q));
    }
  return TorusArray<mpq_class>::from_values(n1, n2, std::move(vals));
}

inline TorusArray<Mod> torus_mod_from_json(const json& j) {
  if (j.at("ring").at("kind").get<std::string>() != "Zmod")
    throw std::invalid_argument("torus_mod_from_json: ring kind is not Zmod");
  long long n1 = j.at("dims").at(0).get<long long>(), n2 = j.at("dims").at(1).get<long long>();
  std::uint64_t m = j.at("ring").at("modulus").get<std::uint64_t>();
  std::vector<Mod> vals;
  for (const json& row : j.at("values"))
    for (const json& v : row) vals.push_back(Mod(v.get<long long>(), m));
  return TorusArray<Mod>::from_values(n1, n2, std::move(vals));
}

// {"conductor":N,"coeffs":["p/q",...]} in the power basis.
inline json to_json(const CycElem& x) {
  json coeffs = json::array();
  for (const mpq_class& c : x.coeffs()) coeffs.push_back(c.get_str());
  return json{{"conductor", x.conductor()}, {"coeffs", std::move(coeffs)}};
}

// Pure roots of unity: {"N": order, "k": exponent}.
inline json to_json(const RootOfUnity& u) { return json{{"N", u.order}, {"k", u.exp}}; }

inline json to_json(const TorusPoint& p) {
  return json{{"x", to_json(p.x)}, {"y", to_json(p.y)}};
}

inline RootOfUnity root_from_json(const json& j) {
  return RootOfUnity::from_power(j.at("N").get<unsigned long>(), j.at("k").get<long long>());
}

inline TorusPoint point_from_json(const json& j) {
  return TorusPoint{root_from_json(j.at("x")), root_from_json(j.at("y"))};
}

inline json to_json(const FpMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.size(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.size(); ++c) row.push_back(m.at(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline json to_json(const KernelReport& k) {
  json basis = json::array();
  for (const auto& b : k.basis) basis.push_back(to_json(b));
  return json{{"p", k.p},
              {"n", k.n},
              {"dimension", k.dimension},
              {"basis", std::move(basis)},
              {"rref", to_json(k.rref)}};
}

}  // namespace tomofix
