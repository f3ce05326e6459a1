#include "symf/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "symf/gallery.hpp"

namespace symf {

namespace {

using NamedMono = std::vector<std::pair<std::string, std::uint32_t>>;

NamedMono named(const Monomial& m) {
  NamedMono out;
  for (const auto& [id, e] : m.factors()) out.emplace_back(param_name(id), e);
  std::sort(out.begin(), out.end());
  return out;
}

[[noreturn]] void fail(const std::string& what) { throw ParseError(what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) fail(std::string(what) + " must be an integer");
  return j.get<int>();
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

Partition pmono_from_json(const Json& j) {
  if (!j.is_array()) fail("pmono must be an array");
  std::vector<int> parts;
  for (const auto& x : j) {
    int v = as_int(x, "pmono entry");
    if (v <= 0) fail("pmono entries must be positive");
    parts.push_back(v);
  }
  std::sort(parts.rbegin(), parts.rend());
  return Partition::unchecked(std::move(parts));
}

std::map<int, std::map<int, CoefPoly>> rows_from_json(const Json& j) {
  std::map<int, std::map<int, CoefPoly>> rows;
  if (!j.is_array()) fail("rows must be an array");
  for (const auto& row : j) {
    int i = as_int(field(row, "i"), "row index");
    if (rows.count(i)) fail("row " + std::to_string(i) + " listed twice");
    auto& entries = rows[i];
    const Json& es = field(row, "entries");
    if (!es.is_array()) fail("entries must be an array");
    for (const auto& e : es) {
      int col = as_int(field(e, "j"), "column index");
      entries[col] += coef_from_json(field(e, "coef"));
    }
    for (auto it = entries.begin(); it != entries.end();)
      it = it->second.is_zero() ? entries.erase(it) : std::next(it);
  }
  return rows;
}

std::map<int, CoefPoly> sequence_from_json(const Json& j) {
  std::map<int, CoefPoly> out;
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      int k;
      try {
        std::size_t used = 0;
        k = std::stoi(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        fail("toeplitz index '" + key + "' is not an integer");
      }
      out[k] += coef_from_json(value);
    }
  } else if (j.is_array()) {
    for (const auto& e : j) out[as_int(field(e, "k"), "toeplitz index")] += coef_from_json(field(e, "coef"));
  } else {
    fail("toeplitz params.a must be an object or array");
  }
  return out;
}

}  // namespace

Json coef_to_json(const CoefPoly& c) {
  std::vector<std::pair<NamedMono, const Rat*>> terms;
  for (const auto& term : c.terms()) terms.emplace_back(named(term.mono), &term.coef);
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  Json out = Json::array();
  for (const auto& [mono, coef] : terms) {
    Json params = Json::object();
    for (const auto& [name, e] : mono) params[name] = e;
    out.push_back({{"params", params}, {"value", rat_to_string(*coef)}});
  }
  return out;
}

CoefPoly coef_from_json(const Json& j) {
  if (j.is_number_integer()) return CoefPoly(Rat(j.get<long>()));
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (is_identifier(s)) return CoefPoly::param(s);
    return CoefPoly(parse_rat(s));
  }
  if (!j.is_array()) fail("coefficient must be an array of terms, a rational string or an integer");
  CoefPoly out;
  for (const auto& term : j) {
    const Json& value = field(term, "value");
    if (!value.is_string()) fail("coefficient value must be a string");
    CoefPoly piece(parse_rat(value.get<std::string>()));
    if (term.contains("params")) {
      const Json& params = term.at("params");
      if (!params.is_object()) fail("params must be an object");
      for (const auto& [name, e] : params.items()) {
        if (!is_identifier(name)) fail("bad parameter name '" + name + "'");
        if (!e.is_number_unsigned() && !(e.is_number_integer() && e.get<long>() >= 0))
          fail("parameter exponents must be non-negative integers");
        piece *= CoefPoly::param(name, e.get<std::uint32_t>());
      }
    }
    out += piece;
  }
  return out;
}

Json symfun_to_json(const SymFun& f) {
  Json terms = Json::array();
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it)
    terms.push_back({{"pmono", it->first.parts()}, {"coef", coef_to_json(it->second)}});
  return {{"terms", terms}};
}

SymFun symfun_from_json(const Json& j) {
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) fail("terms must be an array");
  SymFun out;
  for (const auto& term : terms) out.add_term(pmono_from_json(field(term, "pmono")), coef_from_json(field(term, "coef")));
  return out;
}

Json state_to_json(const ChargedState& s) { return {{"charge", s.charge}, {"body", symfun_to_json(s.body)}}; }

ChargedState state_from_json(const Json& j) {
  ChargedState s;
  if (j.is_object() && j.contains("charge")) s.charge = as_int(j.at("charge"), "charge");
  s.body = symfun_from_json(j.is_object() && j.contains("body") ? j.at("body") : j);
  return s;
}

Json tensor_to_json(const TensorElt& t) {
  auto key = [](const TensorElt::Key& k) { return Json{{"charge", k.charge}, {"pmono", k.mu.parts()}}; };
  Json terms = Json::array();
  for (const auto& [pair, c] : t.terms())
    terms.push_back({{"left", key(pair.first)}, {"right", key(pair.second)}, {"coef", coef_to_json(c)}});
  return {{"terms", terms}};
}

RowFiniteMatrix matrix_from_json(const Json& j) {
  if (!j.is_object()) fail("matrix spec must be an object");
  const std::string kind = j.value("kind", std::string("explicit"));
  const Json params = j.value("params", Json::object());
  if (!params.is_object()) fail("params must be an object");
  if (kind == "explicit") {
    std::string dflt = j.value("default", std::string("identity"));
    MatrixDefault background;
    if (dflt == "identity")
      background = MatrixDefault::Identity;
    else if (dflt == "zero")
      background = MatrixDefault::Zero;
    else
      fail("default must be 'identity' or 'zero'");
    return explicit_matrix(rows_from_json(j.value("rows", Json::array())), background);
  }
  if (j.contains("rows")) fail("rows are only allowed for explicit matrices");
  if (kind == "toeplitz") {
    auto a = sequence_from_json(field(params, "a"));
    if (a.empty()) fail("toeplitz sequence is empty");
    return toeplitz_matrix(a);
  }
  if (kind == "cumulative") return cumulative_matrix();
  if (kind == "pascal") return pascal_matrix();
  if (kind == "multiparameter") {
    const Json& a = field(params, "a");
    if (!a.is_array()) fail("multiparameter params.a must be an array");
    std::vector<CoefPoly> as;
    for (const auto& x : a) as.push_back(coef_from_json(x));
    return multiparameter_matrix(as);
  }
  if (kind == "grothendieck-dual") {
    const Json& lam = field(params, "lambda");
    if (!lam.is_array()) fail("params.lambda must be an array");
    IntVec v;
    for (const auto& x : lam) v.push_back(as_int(x, "lambda entry"));
    return grothendieck_dual_matrix(v);
  }
  fail("unknown matrix kind '" + kind + "'");
}

Json matrix_window_to_json(const RowFiniteMatrix& a, int lo, int hi, int jmax) {
  Json rows = Json::array();
  for (int i = lo; i <= hi; ++i) {
    Json entries = Json::array();
    for (const auto& e : a.row(i, jmax)) entries.push_back({{"j", e.j}, {"coef", coef_to_json(e.value)}});
    rows.push_back({{"i", i}, {"entries", entries}});
  }
  return {{"name", a.name()}, {"rows", rows}};
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str());
}

IntVec parse_intvec(const std::string& text) {
  IntVec out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      fail("'" + item + "' is not an integer");
    }
  }
  if (!text.empty() && text.back() == ',') fail("trailing comma in '" + text + "'");
  return out;
}

std::vector<Rat> parse_rat_list(const std::string& text) {
  std::vector<Rat> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rat(item));
  if (text.back() == ',') fail("trailing comma in '" + text + "'");
  return out;
}

std::pair<int, int> parse_range(const std::string& text) {
  if (text.empty()) fail("empty range");
  auto colon = text.find(':', text[0] == '-' ? 1 : 0);
  if (colon == std::string::npos) fail("range must look like lo:hi");
  IntVec lo = parse_intvec(text.substr(0, colon)), hi = parse_intvec(text.substr(colon + 1));
  if (lo.size() != 1 || hi.size() != 1 || lo[0] > hi[0]) fail("bad range '" + text + "'");
  return {lo[0], hi[0]};
}

std::pair<std::string, Rat> parse_assignment(const std::string& text) {
  auto eq = text.find('=');
  if (eq == std::string::npos) fail("assignment must look like name=value");
  std::string name = text.substr(0, eq);
  if (!is_identifier(name)) fail("bad parameter name '" + name + "'");
  return {name, parse_rat(text.substr(eq + 1))};
}

}  // namespace symf
