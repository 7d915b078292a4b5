#include "cp2harm/io.hpp"

#include <fstream>
#include <sstream>

namespace cp2harm {

namespace {

json mpz_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return json(z.get_si());
  return json(z.get_str());
}

mpz_class mpz_from_json(const json& j, const char* what) {
  if (j.is_number_integer()) return mpz_class(j.get<long long>());
  if (j.is_string()) {
    try {
      return mpz_class(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw ParseError(std::string("invalid integer string for ") + what);
    }
  }
  throw ParseError(std::string("expected an integer (or decimal string) for ") + what);
}

}  // namespace

json coeff_to_json(const GaussianRational& q) {
  return json::array({mpz_to_json(q.re().get_num()), mpz_to_json(q.re().get_den()),
                      mpz_to_json(q.im().get_num()), mpz_to_json(q.im().get_den())});
}

GaussianRational coeff_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4)
    throw ParseError("coefficient must be [re_num, re_den, im_num, im_den]");
  mpz_class re_n = mpz_from_json(j[0], "re_num");
  mpz_class re_d = mpz_from_json(j[1], "re_den");
  mpz_class im_n = mpz_from_json(j[2], "im_num");
  mpz_class im_d = mpz_from_json(j[3], "im_den");
  if (re_d == 0 || im_d == 0) throw ParseError("coefficient has a zero denominator");
  mpq_class re(re_n, re_d), im(im_n, im_d);
  re.canonicalize();
  im.canonicalize();
  return {re, im};
}

json poly_to_json(const UniPoly& p) {
  json a = json::array();
  for (int n = 0; n <= p.degree(); ++n) a.push_back(coeff_to_json(p.coeff(n)));
  return a;
}

UniPoly poly_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be an array of coefficients");
  std::vector<GaussianRational> c;
  c.reserve(j.size());
  for (const auto& e : j) c.push_back(coeff_from_json(e));
  return UniPoly(std::move(c));
}

json curve_to_json(const UniVec3& f) {
  return json::array({poly_to_json(f[0]), poly_to_json(f[1]), poly_to_json(f[2])});
}

UniVec3 curve_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3)
    throw ParseError("curve must be an array of three polynomials");
  return {poly_from_json(j[0]), poly_from_json(j[1]), poly_from_json(j[2])};
}

json rational_field_to_json(const RationalField& v) {
  return json::array({poly_to_json(v.numerator[0]), poly_to_json(v.numerator[1])});
}

RationalField rational_field_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2)
    throw ParseError("field must be an array of two numerator polynomials");
  return {{poly_from_json(j[0]), poly_from_json(j[1])}};
}

json family_to_json(const DeformationFamily& f) {
  json components = json::array();
  for (int j = 0; j < 2; ++j) {
    components.push_back({{"P", poly_to_json(f.p[j])},
                          {"A", poly_to_json(f.a[j])},
                          {"Q", poly_to_json(f.q[j])},
                          {"B", poly_to_json(f.b[j])}});
  }
  return json{{"components", components}};
}

json bipoly_to_json(const BiPoly& p) {
  json terms = json::array();
  for (const auto& [k, v] : p.terms())
    terms.push_back(json::array({k.first, k.second, coeff_to_json(v)}));
  return json{{"terms", terms}};
}

json bivec_to_json(const BiVec3& v) {
  return json::array({bipoly_to_json(v[0]), bipoly_to_json(v[1]), bipoly_to_json(v[2])});
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ParseError("JSON parse error in " + path + ": " + e.what());
  }
  return j;
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return fnv1a_hex(ss.str());
}

}  // namespace cp2harm
