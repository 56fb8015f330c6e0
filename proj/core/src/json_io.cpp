#include "rackbi/json_io.hpp"

#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include <json.hpp>

#include "rackbi/error.hpp"

namespace rackbi {

namespace {

using nlohmann::ordered_json;

[[noreturn]] void parse_fail(const std::string& pointer,
                             const std::string& what) {
  throw Error(Error::Code::ParseError, "at '" + pointer + "': " + what);
}

long long require_int(const ordered_json& j, const std::string& pointer) {
  if (!j.is_number_integer()) parse_fail(pointer, "expected an integer");
  return j.get<long long>();
}

/// Exact rational from a "p/q" (or "p") string or an integer; floats are
/// rejected to keep the arithmetic exact.
Rational require_rational(const ordered_json& j, const std::string& pointer) {
  if (j.is_number_integer()) {
    return Rational(mpz_class(std::to_string(j.get<long long>())));
  }
  if (j.is_number_float()) {
    parse_fail(pointer, "floating-point numbers are not accepted; "
                        "write rationals as \"p/q\" strings");
  }
  if (!j.is_string()) parse_fail(pointer, "expected a \"p/q\" string");
  try {
    return rat_parse(j.get<std::string>());
  } catch (const Error& e) {
    parse_fail(pointer, e.what());
  }
}

LeibnizAlgebra parse_leibniz(const ordered_json& j,
                             const std::string& pointer) {
  const long long dim = require_int(j.at("dim"), pointer + "/dim");
  if (dim < 1 || dim > 64) {
    parse_fail(pointer + "/dim", "dimension must be in [1, 64]");
  }
  const int n = static_cast<int>(dim);

  std::vector<std::string> names;
  if (j.contains("names")) {
    const ordered_json& jn = j.at("names");
    if (!jn.is_array() || static_cast<int>(jn.size()) != n) {
      parse_fail(pointer + "/names", "expected an array of dim strings");
    }
    for (std::size_t i = 0; i < jn.size(); ++i) {
      if (!jn[i].is_string()) {
        parse_fail(pointer + "/names/" + std::to_string(i),
                   "expected a string");
      }
      names.push_back(jn[i].get<std::string>());
    }
  }

  std::vector<Rational> c(static_cast<std::size_t>(n) * n * n, Rational(0));
  const ordered_json& jc = j.at("c");
  if (!jc.is_array()) parse_fail(pointer + "/c", "expected an array");
  for (std::size_t t = 0; t < jc.size(); ++t) {
    const std::string tp = pointer + "/c/" + std::to_string(t);
    const ordered_json& entry = jc[t];
    if (!entry.is_array() || entry.size() != 4) {
      parse_fail(tp, "expected [i, j, k, \"p/q\"]");
    }
    int idx[3];
    for (int s = 0; s < 3; ++s) {
      const long long v = require_int(entry[static_cast<std::size_t>(s)],
                                      tp + "/" + std::to_string(s));
      if (v < 1 || v > n) {
        parse_fail(tp + "/" + std::to_string(s),
                   "index must be in [1, " + std::to_string(n) + "]");
      }
      idx[s] = static_cast<int>(v) - 1;
    }
    const Rational coeff = require_rational(entry[3], tp + "/3");
    c[static_cast<std::size_t>((idx[0] * n + idx[1]) * n + idx[2])] += coeff;
  }

  // Deliberately unchecked: `validate` reports identity violations itself.
  LeibnizAlgebra h;
  h.dim = n;
  if (names.empty()) {
    for (int i = 1; i <= n; ++i) names.push_back("e" + std::to_string(i));
  }
  h.names = std::move(names);
  h.c = std::move(c);
  return h;
}

FiniteRack parse_rack(const ordered_json& j, const std::string& pointer) {
  const long long size = require_int(j.at("size"), pointer + "/size");
  if (size < 1 || size > 4096) {
    parse_fail(pointer + "/size", "size must be in [1, 4096]");
  }
  const int m = static_cast<int>(size);
  const long long unit = require_int(j.at("unit"), pointer + "/unit");
  if (unit < 1 || unit > m) {
    parse_fail(pointer + "/unit",
               "unit must be in [1, " + std::to_string(m) + "]");
  }

  const ordered_json& jop = j.at("op");
  if (!jop.is_array() || static_cast<int>(jop.size()) != m) {
    parse_fail(pointer + "/op", "expected size rows");
  }
  FiniteRack x;
  x.size = m;
  x.unit = static_cast<int>(unit) - 1;
  for (std::size_t r = 0; r < jop.size(); ++r) {
    const std::string rp = pointer + "/op/" + std::to_string(r);
    const ordered_json& row = jop[r];
    if (!row.is_array() || static_cast<int>(row.size()) != m) {
      parse_fail(rp, "expected size entries");
    }
    std::vector<int> out;
    for (std::size_t s = 0; s < row.size(); ++s) {
      const long long v =
          require_int(row[s], rp + "/" + std::to_string(s));
      if (v < 1 || v > m) {
        parse_fail(rp + "/" + std::to_string(s),
                   "entry must be in [1, " + std::to_string(m) + "]");
      }
      out.push_back(static_cast<int>(v) - 1);
    }
    x.op.push_back(std::move(out));
  }
  validate_rack(x);
  return x;
}

PolyFun<Rational> parse_poly(const ordered_json& j, int nvars,
                             const std::string& pointer) {
  if (!j.is_array()) {
    parse_fail(pointer, "expected [[\"p/q\", [exponents]], ...]");
  }
  PolyFun<Rational> f = pf_zero<Rational>(nvars);
  for (std::size_t t = 0; t < j.size(); ++t) {
    const std::string tp = pointer + "/" + std::to_string(t);
    const ordered_json& term = j[t];
    if (!term.is_array() || term.size() != 2) {
      parse_fail(tp, "expected [\"p/q\", [exponents]]");
    }
    const Rational coeff = require_rational(term[0], tp + "/0");
    const ordered_json& je = term[1];
    if (!je.is_array() || static_cast<int>(je.size()) != nvars) {
      parse_fail(tp + "/1", "expected " + std::to_string(nvars) +
                                " exponents");
    }
    std::vector<int> e;
    for (std::size_t s = 0; s < je.size(); ++s) {
      const long long v = require_int(je[s], tp + "/1/" + std::to_string(s));
      if (v < 0 || v > 64) {
        parse_fail(tp + "/1/" + std::to_string(s),
                   "exponent must be in [0, 64]");
      }
      e.push_back(static_cast<int>(v));
    }
    detail::pf_acc(f, e, coeff);
  }
  return f;
}

LeibnizAlgebra resolve_algebra(const ordered_json& j,
                               const std::string& pointer) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const std::string prefix = "catalog:";
    if (s.rfind(prefix, 0) != 0) {
      parse_fail(pointer, "expected \"catalog:NAME\" or an algebra object");
    }
    return catalog(s.substr(prefix.size()));
  }
  if (!j.is_object()) {
    parse_fail(pointer, "expected \"catalog:NAME\" or an algebra object");
  }
  return parse_leibniz(j, pointer);
}

ParsedInput parse_document(const ordered_json& j) {
  if (!j.is_object()) parse_fail("", "expected a JSON object");
  if (j.contains("algebra") && j.contains("f") && j.contains("g")) {
    StarInput in;
    in.h = resolve_algebra(j.at("algebra"), "/algebra");
    in.f = parse_poly(j.at("f"), in.h.dim, "/f");
    in.g = parse_poly(j.at("g"), in.h.dim, "/g");
    return in;
  }
  if (j.contains("dim") && j.contains("c")) return parse_leibniz(j, "");
  if (j.contains("size") && j.contains("op") && j.contains("unit")) {
    return parse_rack(j, "");
  }
  parse_fail("", "unrecognized schema: expected keys {dim, c}, "
                 "{size, unit, op}, or {algebra, f, g}");
}

}  // namespace

ParsedInput parse_input_text(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Error::Code::ParseError, e.what());
  }
  return parse_document(j);
}

ParsedInput ingest(const std::string& input) {
  const std::string catalog_prefix = "catalog:";
  if (input.rfind(catalog_prefix, 0) == 0) {
    return catalog(input.substr(catalog_prefix.size()));
  }
  const std::string dihedral_prefix = "dihedral:";
  if (input.rfind(dihedral_prefix, 0) == 0) {
    const std::string arg = input.substr(dihedral_prefix.size());
    int m = 0;
    try {
      m = std::stoi(arg);
    } catch (const std::exception&) {
      throw Error(Error::Code::ParseError,
                  "expected dihedral:m with integer m, got '" + arg + "'");
    }
    return dihedral_rack(m);
  }
  std::ifstream file(input, std::ios::binary);
  if (!file) {
    throw Error(Error::Code::ParseError,
                "cannot open input file '" + input + "'");
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return parse_input_text(buffer.str());
}

std::string leibniz_json(const LeibnizAlgebra& h) {
  ordered_json j;
  j["dim"] = h.dim;
  j["names"] = h.names;
  ordered_json entries = ordered_json::array();
  for (int i = 0; i < h.dim; ++i) {
    for (int jj = 0; jj < h.dim; ++jj) {
      for (int k = 0; k < h.dim; ++k) {
        const Rational& v = h.structure(i, jj, k);
        if (is_zero(v)) continue;
        entries.push_back(
            ordered_json::array({i + 1, jj + 1, k + 1, rat_str(v)}));
      }
    }
  }
  j["c"] = std::move(entries);
  return j.dump(2) + "\n";
}

std::string rack_json(const FiniteRack& x) {
  ordered_json j;
  j["size"] = x.size;
  j["unit"] = x.unit + 1;
  ordered_json rows = ordered_json::array();
  for (const std::vector<int>& row : x.op) {
    ordered_json r = ordered_json::array();
    for (const int v : row) r.push_back(v + 1);
    rows.push_back(std::move(r));
  }
  j["op"] = std::move(rows);
  return j.dump(2) + "\n";
}

}  // namespace rackbi
