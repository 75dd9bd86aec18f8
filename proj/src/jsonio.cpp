#include "affpav/jsonio.hpp"

#include <sstream>

#include "affpav/errors.hpp"

namespace affpav::jsonio {

namespace {

std::vector<long long> parse_int_list(const std::string& s) {
  std::vector<long long> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(std::stoll(cur));
      cur.clear();
    } else if (!isspace(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(std::stoll(cur));
  return out;
}

// finite-part word of an element: peel right descents among finite generators
std::vector<int> finite_word(const WeylElement& x) {
  WeylElement cur = x;
  cur.lambda.assign(x.rd->rank(), 0);
  cur.rd = x.rd;
  std::vector<int> rev;
  for (;;) {
    int d = -1;
    for (int i = 1; i <= x.rd->rank(); ++i)
      if (weyl::is_right_descent(cur, i)) {
        d = i;
        break;
      }
    if (d < 0) break;
    rev.push_back(d);
    cur = weyl::multiply(cur, weyl::simple_affine(*x.rd, d));
  }
  if (!cur.is_identity())
    throw InternalCheckError("finite part did not reduce to the identity");
  return std::vector<int>(rev.rbegin(), rev.rend());
}

std::string word_to_string(const std::vector<int>& word) {
  std::string s;
  for (size_t i = 0; i < word.size(); ++i) {
    if (i) s.push_back(',');
    s += std::to_string(word[i]);
  }
  return s;
}

}  // namespace

std::string element_to_string(const WeylElement& x) {
  bool has_lambda = false;
  for (long long v : x.lambda) has_lambda |= v != 0;
  std::vector<int> fw = finite_word(x);
  if (!has_lambda && fw.empty()) return "e";
  std::string out;
  if (has_lambda) {
    out = "c[";
    for (int j = 0; j < x.rd->rank(); ++j) {
      if (j) out.push_back(',');
      out += std::to_string(x.lambda[j]);
    }
    out += "]";
  }
  if (!fw.empty()) {
    if (has_lambda) out.push_back('*');
    out += word_to_string(fw);
  }
  return out;
}

std::vector<int> parse_word(const std::string& text) {
  std::vector<int> out;
  for (long long v : parse_int_list(text)) out.push_back(static_cast<int>(v));
  return out;
}

WeylElement parse_element(const RootDatum& rd, const std::string& text) {
  std::string s = text;
  if (s.empty() || s == "e") return WeylElement::identity(rd);
  WeylElement acc = WeylElement::identity(rd);
  size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] == '*') {
      ++pos;
      continue;
    }
    if (s[pos] == 't' || s[pos] == 'c') {
      char kind = s[pos];
      if (pos + 1 >= s.size() || s[pos + 1] != '[')
        throw UserError("element: expected '[' after '" + std::string(1, kind) + "'");
      size_t close = s.find(']', pos);
      if (close == std::string::npos) throw UserError("element: missing ']'");
      std::vector<long long> coords = parse_int_list(s.substr(pos + 2, close - pos - 2));
      if (static_cast<int>(coords.size()) != rd.rank())
        throw UserError("element: translation needs one coordinate per simple root");
      Vec lambda(rd.rank(), 0);
      if (kind == 'c') {
        lambda.assign(coords.begin(), coords.end());
      } else {
        for (int i = 0; i < rd.rank(); ++i)
          for (int j = 0; j < rd.rank(); ++j)
            lambda[j] += coords[i] * rd.simple_root(i + 1).cov[j];
      }
      acc = weyl::multiply(acc, weyl::translation(rd, lambda));
      pos = close + 1;
    } else {
      std::vector<int> word = parse_word(s.substr(pos));
      for (int i : word) {
        if (i < 0 || i > rd.rank()) throw UserError("element: word index out of range");
        acc = weyl::multiply(acc, weyl::simple_affine(rd, i));
      }
      pos = s.size();
    }
  }
  return acc;
}

std::vector<int> parse_subset(const RootDatum& rd, const std::string& text) {
  if (text.empty()) return {};
  if (text == "spherical") {
    std::vector<int> all;
    for (int i = 1; i <= rd.rank(); ++i) all.push_back(i);
    return all;
  }
  std::vector<int> out = parse_word(text);
  for (int i : out)
    if (i < 0 || i > rd.rank()) throw UserError("subset index out of range");
  return out;
}

json element_to_json(const WeylElement& x) {
  json j;
  j["lambda"] = x.lambda;
  j["w"] = word_to_string(finite_word(x));
  return j;
}

WeylElement element_from_json(const RootDatum& rd, const json& j) {
  Vec lambda = j.at("lambda").get<std::vector<long long>>();
  if (static_cast<int>(lambda.size()) != rd.rank())
    throw UserError("element json: lambda has the wrong length");
  WeylElement x = weyl::translation(rd, lambda);
  for (int i : parse_word(j.at("w").get<std::string>())) {
    if (i < 1 || i > rd.rank())
      throw UserError("element json: finite word index out of range");
    x = weyl::multiply(x, weyl::simple_affine(rd, i));
  }
  return x;
}

json bigint_to_json(const BigInt& v) {
  if (v.fits_int64()) return v.to_int64();
  return v.to_string();
}

json polyq_to_json(const PolyQ& p) {
  json arr = json::array();
  for (const BigInt& c : p.coeffs()) arr.push_back(bigint_to_json(c));
  json j;
  j["coeffs"] = arr;
  return j;
}

PolyQ polyq_from_json(const json& j) {
  std::vector<BigInt> coeffs;
  for (const auto& c : j.at("coeffs")) {
    if (c.is_string())
      coeffs.push_back(BigInt::from_string(c.get<std::string>()));
    else
      coeffs.push_back(BigInt(c.get<long long>()));
  }
  return PolyQ(std::move(coeffs));
}

json hecke_to_json(const hecke::HeckeElement& h) {
  json arr = json::array();
  for (const WeylElement& w : h.sorted_support()) {
    json entry;
    entry["element"] = element_to_json(w);
    entry["coeffs"] = polyq_to_json(h.coefficient(w))["coeffs"];
    arr.push_back(entry);
  }
  return arr;
}

json table_to_json(const hecke::StructureConstantTable& t) {
  json j = json::object();
  for (const auto& [w, c] : t.constants) j[element_to_string(w)] = polyq_to_json(c);
  return j;
}

json paving_to_json(const paving::PavingPolynomial& p) {
  json mono = json::array();
  for (const auto& [ab, mult] : p.mab()) {
    json m = json::array();
    m.push_back(ab.first);
    m.push_back(ab.second);
    m.push_back(bigint_to_json(mult));
    mono.push_back(m);
  }
  json j;
  j["monomials"] = mono;
  j["value"] = polyq_to_json(p.value());
  return j;
}

json cells_to_json(const std::vector<paving::PavingCell>& cells) {
  json arr = json::array();
  for (const paving::PavingCell& c : cells) {
    json jc;
    jc["a"] = c.a();
    jc["b"] = c.b();
    json fs = json::array();
    for (paving::CellFactor f : c.factors)
      fs.push_back(f == paving::CellFactor::A1   ? "A1"
                   : f == paving::CellFactor::Gm ? "Gm"
                                                 : "A0");
    jc["factors"] = fs;
    json tr = json::array();
    for (const WeylElement& v : c.trace) tr.push_back(element_to_json(v));
    jc["trace"] = tr;
    arr.push_back(jc);
  }
  return arr;
}

}  // namespace affpav::jsonio
