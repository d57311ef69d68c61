#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "curvemul/errors.hpp"
#include "curvemul/tools.hpp"

namespace curvemul {

namespace {

using nlohmann::json;

const json& need(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(where + ": missing key '" + key + "'");
  return j.at(key);
}

std::uint64_t need_uint(const json& j, const char* key, const std::string& where) {
  const json& v = need(j, key, where);
  if (!v.is_number_unsigned()) throw ParseError(where + "." + key + ": expected a non-negative integer");
  return v.get<std::uint64_t>();
}

std::vector<Bits> coeff_list(const json& v, const FieldSpec& f, const std::string& where) {
  if (!v.is_array()) throw ParseError(where + ": expected an array of coefficients");
  std::vector<Bits> out;
  for (const auto& c : v) {
    if (!c.is_number_unsigned() || c.get<std::uint64_t>() >= f.order())
      throw ParseError(where + ": coefficient outside the field");
    out.push_back(static_cast<Bits>(c.get<std::uint64_t>()));
  }
  return out;
}

Poly poly_at(const json& j, const char* key, const FieldSpec& f, const std::string& where) {
  return Poly(f, coeff_list(need(j, key, where), f, where + "." + key));
}

// Residue-field element given by its coefficient list in t, padded to the extension degree.
ExtElement ext_at(const json& j, const char* key, const ExtSpecPtr& spec, const std::string& where) {
  std::vector<Bits> c = coeff_list(need(j, key, where), spec->base(), where + "." + key);
  if (c.size() > spec->degree()) return ExtElement::from_poly(spec, Poly(spec->base(), c));
  c.resize(spec->degree(), 0);
  return ExtElement(spec, std::move(c));
}

Place parse_place(const json& p, const FieldSpec& f, std::size_t idx) {
  const std::string where = "places[" + std::to_string(idx) + "]";
  const json& kind = need(p, "kind", where);
  const std::string label = p.contains("label") && p["label"].is_string() ? p["label"].get<std::string>() : where;
  if (kind == "infinite") {
    if (p.contains("degree") && need_uint(p, "degree", where) != 1) throw ParseError(where + ": infinite places have degree 1");
    InfinitePlace inf;
    const std::uint64_t y0 = need_uint(p, "branch_y0", where);
    if (y0 >= f.order()) throw ParseError(where + ".branch_y0: outside the field");
    inf.branch_y0 = static_cast<Bits>(y0);
    if (p.contains("precision_hint")) inf.precision_hint = static_cast<int>(need_uint(p, "precision_hint", where));
    inf.label = label;
    return inf;
  }
  if (kind != "affine") throw ParseError(where + ".kind: expected \"affine\" or \"infinite\"");
  const Poly m = poly_at(p, "residue_modulus", f, where);
  if (!m.is_monic() || m.degree().value_or(0) == 0) throw InstanceError(where + ": residue modulus must be monic of positive degree");
  if (p.contains("degree") && need_uint(p, "degree", where) != *m.degree())
    throw ParseError(where + ": degree differs from the residue modulus degree");
  if (!is_irreducible(m)) throw InstanceError(where + ": residue modulus is not irreducible");
  const ExtSpecPtr spec = make_ext(m);
  return AffinePlace(ext_at(p, "x_img", spec, where), ext_at(p, "y_img", spec, where), label);
}

}  // namespace

InstanceSpec parse_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("instance file is not valid JSON: ") + e.what());
  }
  const json& fj = need(doc, "field", "instance");
  const auto k = need_uint(fj, "k", "field");
  const auto mod = need_uint(fj, "modulus_bits", "field");
  if (k < 1 || k > 8) throw ParseError("field.k: supported range is 1..8");
  FieldSpec f(static_cast<unsigned>(k), static_cast<std::uint32_t>(mod));

  const json& cj = need(doc, "curve", "instance");
  CurveModel curve(poly_at(cj, "rhs_num", f, "curve"), poly_at(cj, "rhs_den", f, "curve"),
                   static_cast<unsigned>(need_uint(cj, "genus", "curve")));

  const std::size_t n = need_uint(doc, "n", "instance");
  if (n < 2) throw ParseError("n: must be at least 2");

  const json& qj = need(doc, "Q", "instance");
  const Poly qmod = poly_at(qj, "modulus", f, "Q");
  if (!qmod.is_monic() || qmod.degree().value_or(0) == 0) throw InstanceError("Q.modulus: must be monic of positive degree");
  if (!is_irreducible(qmod)) throw InstanceError("Q.modulus: not irreducible");
  AffinePlace Q = beta_from_ideal(curve, qmod, poly_at(qj, "y_num", f, "Q"), poly_at(qj, "y_den", f, "Q"), "Q");

  const json& bj = need(doc, "basis", "instance");
  if (!bj.is_array()) throw ParseError("basis: expected an array");
  std::vector<FunctionRep> basis;
  for (std::size_t i = 0; i < bj.size(); ++i) {
    const std::string where = "basis[" + std::to_string(i) + "]";
    basis.emplace_back(poly_at(bj[i], "ay", f, where), poly_at(bj[i], "b", f, where), poly_at(bj[i], "den", f, where));
  }

  const json& pj = need(doc, "places", "instance");
  if (!pj.is_array()) throw ParseError("places: expected an array");
  std::vector<Place> places;
  for (std::size_t i = 0; i < pj.size(); ++i) places.push_back(parse_place(pj[i], f, i));

  std::string name = doc.contains("name") && doc["name"].is_string() ? doc["name"].get<std::string>() : "";
  return InstanceSpec{std::move(name),
                      f,
                      n,
                      std::move(curve),
                      std::move(Q),
                      poly_at(doc, "d1_modulus", f, "instance"),
                      poly_at(doc, "d2_modulus", f, "instance"),
                      std::move(basis),
                      std::move(places)};
}

InstanceSpec read_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str());
}

InstanceSpec load_instance(const std::filesystem::path& path) {
  InstanceSpec s = read_instance(path);
  validate(s);
  return s;
}

std::vector<Bits> parse_element(std::string_view text, const FieldSpec& f, std::size_t n) {
  std::vector<Bits> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    unsigned v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw ParseError("element: '" + std::string(tok) + "' is not a decimal integer");
    if (v >= f.order()) throw ParseError("element: value " + std::to_string(v) + " outside the base field");
    out.push_back(static_cast<Bits>(v));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (out.size() != n)
    throw ParseError("element: expected " + std::to_string(n) + " coordinates, got " + std::to_string(out.size()));
  return out;
}

std::string format_element(std::span<const Bits> coords) {
  std::string out;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(coords[i]);
  }
  return out;
}

std::string format_poly(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto c = p.coeffs();
  for (std::size_t j = c.size(); j-- > 0;) {
    if (c[j] == 0) continue;
    if (!out.empty()) out += " + ";
    const std::string coef = std::to_string(c[j]);
    if (j == 0)
      out += coef;
    else {
      if (c[j] != 1) out += coef + "*";
      out += j == 1 ? "x" : "x^" + std::to_string(j);
    }
  }
  return out;
}

}  // namespace curvemul
