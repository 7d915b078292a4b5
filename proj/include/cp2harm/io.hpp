#ifndef CP2HARM_IO_HPP
#define CP2HARM_IO_HPP

#include <string>

#include <json.hpp>

#include "cp2harm/family.hpp"
#include "cp2harm/gauss.hpp"

namespace cp2harm {

using json = nlohmann::json;

/// Malformed input (distinct from precondition violations: exit code 2).
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Coefficients are 4-tuples [re_num, re_den, im_num, im_den]. Entries are
/// JSON integers; values outside the 64-bit range are written (and
/// accepted) as decimal strings.
json coeff_to_json(const GaussianRational& q);
GaussianRational coeff_from_json(const json& j);

/// A polynomial is an array of coefficients, ascending in degree.
json poly_to_json(const UniPoly& p);
UniPoly poly_from_json(const json& j);

/// A curve is an array of three polynomials.
json curve_to_json(const UniVec3& f);
UniVec3 curve_from_json(const json& j);

/// A field file is an array of two polynomials: the numerators R^1, R^2
/// over the squared denominators of the curve's affine form.
json rational_field_to_json(const RationalField& v);
RationalField rational_field_from_json(const json& j);

json family_to_json(const DeformationFamily& f);

/// Bidegree table: {"terms": [[deg_z, deg_zbar, coeff], ...]}, sorted.
json bipoly_to_json(const BiPoly& p);
json bivec_to_json(const BiVec3& v);

json load_json_file(const std::string& path);

/// FNV-1a 64-bit digest of a byte string, as fixed-width hex.
std::string fnv1a_hex(const std::string& bytes);
std::string file_digest(const std::string& path);

}  // namespace cp2harm

#endif
