#include "core/serialize.hpp"

#include <sstream>

#include "core/errors.hpp"

namespace hilbworst {

namespace {

Json header(const char* kind) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = kind;
  return j;
}

std::string pair_text(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

Json polys(const std::vector<Poly>& ps, TextFormat fmt) {
  Json arr = Json::array();
  for (const auto& p : ps) arr.push_back(p.to_string(fmt == TextFormat::Cas));
  return arr;
}

Json int_list(const std::vector<int>& v) {
  Json arr = Json::array();
  for (int x : v) arr.push_back(x);
  return arr;
}

}  // namespace

Json to_json(const IdealPresentation& p, TextFormat fmt) {
  Json j = header("ideal");
  j["n"] = p.n;
  j["flavor"] = to_string(p.flavor);
  j["presentation"] = p.presentation;
  j["generators"] = polys(p.generators, fmt);
  j["labels"] = p.labels;
  j["counts"] = {{"raw", p.raw_count}, {"zero_dropped", p.zero_dropped}, {"duplicates_dropped", p.duplicates_dropped},
                 {"kept", p.generators.size()}};
  return j;
}

Json to_json(const Family& f, TextFormat fmt) {
  Json j = header("family");
  j["n"] = f.n;
  j["flavor"] = to_string(f.flavor);
  j["generators"] = polys(f.generators, fmt);
  Json pairs = Json::array();
  for (const auto& [a, b] : f.pairs) pairs.push_back({a, b});
  j["pairs"] = pairs;
  return j;
}

Json to_json(const VerifyReport& r) {
  Json j = header("verify");
  j["n"] = r.options.n;
  j["flavor"] = to_string(r.options.flavor);
  j["routes"] = r.options.routes;
  j["seed"] = r.options.seed;
  j["samples"] = r.options.samples;
  j["passed"] = r.ok();
  Json recs = Json::array();
  for (const auto& c : r.records)
    recs.push_back({{"route", c.route},
                    {"check", c.check},
                    {"generator", c.generator},
                    {"residual", c.residual},
                    {"checked", c.checked},
                    {"status", c.pass ? "pass" : "fail"}});
  j["records"] = recs;
  if (const auto* f = r.first_failure()) j["first_failure"] = f->route + "/" + f->check + ": " + f->generator;
  return j;
}

Json tvals_json(const Assignment& tvals) {
  Json arr = Json::array();
  for (const auto& [v, val] : tvals)
    if (val != 0) arr.push_back({v.i, v.j, v.k, to_string(val)});
  return arr;
}

Json to_json(const OracleSample& s, int n) {
  Json j = header("oracle_sample");
  j["n"] = n;
  j["index"] = s.index;
  j["sample_kind"] = to_string(s.kind);
  j["t"] = tvals_json(s.tvals);
  j["in_variety"] = s.in_variety;
  j["associative"] = s.associative;
  j["fiber_dimension"] = s.fiber.dimension;
  j["basis_ok"] = s.fiber.basis_ok;
  j["agree"] = s.agree();
  return j;
}

Json to_json(const SubspaceSummary& s, const std::vector<LinearSubspaceSpec>& optimal) {
  const auto& m = s.maximum;
  Json j = header("subspaces");
  j["n"] = m.n;
  j["max_dim"] = m.dim.get_str();
  j["maximizers"] = int_list(m.maximizers);
  j["a_floor"] = m.a_floor;
  j["a_ceil"] = m.a_ceil;
  j["case_formula"] = to_string(m.case_formula);
  j["formula_matches"] = m.formula_matches;
  j["m"] = m.m;
  j["count_lower_bound"] = m.count_lower_bound.get_str();
  j["smoothing_dim"] = s.smoothing;
  j["reducible"] = s.reducible;
  j["discrepancies"] = m.discrepancies;
  Json list = Json::array();
  for (const auto& spec : optimal)
    list.push_back({{"A", int_list(spec.A)}, {"B", int_list(spec.B)}, {"dim", subspace_dim(spec)}});
  j["optimal"] = list;
  return j;
}

Json table_json(const MulTable& T, const std::map<Triple, std::vector<Rational>>& residuals) {
  Json j = header("table");
  j["n"] = T.n;
  Json s = Json::array();
  for (int i = 0; i <= T.n; ++i) {
    Json row = Json::array();
    for (int k = 0; k <= T.n; ++k) {
      Json col = Json::array();
      for (int l = 0; l <= T.n; ++l) col.push_back(to_string(T.at(i, k, l)));
      row.push_back(col);
    }
    s.push_back(row);
  }
  j["s"] = s;
  bool assoc = true;
  Json res = Json::array();
  for (const auto& [key, vec] : residuals) {
    bool zero = true;
    for (const auto& c : vec) zero = zero && c == 0;
    if (zero) continue;
    assoc = false;
    Json v = Json::array();
    for (const auto& c : vec) v.push_back(to_string(c));
    res.push_back({{"triple", {key[0], key[1], key[2]}}, {"residual", v}});
  }
  j["associative"] = assoc;
  j["residuals"] = res;
  return j;
}

std::pair<int, Assignment> parse_tvals(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::Parse, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
    fail(ErrorCode::Parse, "expected an object with an integer field \"n\"");
  const int n = j["n"].get<int>();
  if (n < 1 || n > 40) fail(ErrorCode::IndexOutOfRange, "n must lie in 1..40");
  Assignment out;
  if (!j.contains("t")) return {n, out};
  if (!j["t"].is_array()) fail(ErrorCode::Parse, "\"t\" must be an array of [i,j,k,value]");
  for (const auto& e : j["t"]) {
    if (!e.is_array() || e.size() != 4 || !e[0].is_number_integer() || !e[1].is_number_integer() ||
        !e[2].is_number_integer())
      fail(ErrorCode::Parse, "each entry of \"t\" must be [i,j,k,value]");
    int i = e[0].get<int>(), jj = e[1].get<int>(), k = e[2].get<int>();
    if (i < 1 || jj < 1 || k < 1 || i > n || jj > n || k > n)
      fail(ErrorCode::IndexOutOfRange, "t index out of range: [" + std::to_string(i) + "," + std::to_string(jj) + "," +
                                           std::to_string(k) + "]");
    Rational v;
    if (e[3].is_string())
      v = parse_rational(e[3].get<std::string>());
    else if (e[3].is_number_integer())
      v = Rational(e[3].get<long>());
    else
      fail(ErrorCode::Parse, "t values must be \"p/q\" strings or integers");
    if (v != 0) out[VarId::t(i, jj, k)] = v;
  }
  return {n, out};
}

std::string to_text(const IdealPresentation& p, TextFormat fmt) {
  std::ostringstream os;
  for (std::size_t g = 0; g < p.generators.size(); ++g)
    os << p.labels[g] << ": " << p.generators[g].to_string(fmt == TextFormat::Cas) << "\n";
  return os.str();
}

std::string to_text(const Family& f, TextFormat fmt) {
  std::ostringstream os;
  for (std::size_t g = 0; g < f.generators.size(); ++g)
    os << (fmt == TextFormat::Cas ? "f_" + std::to_string(f.pairs[g].first) + "_" + std::to_string(f.pairs[g].second)
                                  : "f" + pair_text(f.pairs[g].first, f.pairs[g].second))
       << " = " << f.generators[g].to_string(fmt == TextFormat::Cas) << "\n";
  return os.str();
}

std::string to_text(const VerifyReport& r) {
  std::ostringstream os;
  for (const auto& c : r.records)
    os << (c.pass ? "pass " : "FAIL ") << c.route << "/" << c.check << " checked=" << c.checked << " generator=" << c.generator
       << " residual=" << c.residual << "\n";
  os << (r.ok() ? "all checks passed" : "verification failed") << " (n=" << r.options.n << ")\n";
  return os.str();
}

std::string to_text(const SubspaceSummary& s, const std::vector<LinearSubspaceSpec>& optimal) {
  const auto& m = s.maximum;
  std::ostringstream os;
  os << "n=" << m.n << " max linear dim " << m.dim.get_str() << " (a in {";
  for (std::size_t i = 0; i < m.maximizers.size(); ++i) os << (i ? "," : "") << m.maximizers[i];
  os << "}, floor/ceil of a_max " << m.a_floor << "/" << m.a_ceil << ")\n";
  os << "case formula " << to_string(m.case_formula) << (m.formula_matches ? " matches" : " DIFFERS") << "\n";
  os << "m=" << m.m << " count >= " << m.count_lower_bound.get_str() << "\n";
  os << "smoothing component dim " << s.smoothing << (s.reducible ? ": linear subspace is larger, reducible\n" : "\n");
  for (const auto& d : m.discrepancies) os << "discrepancy: " << d << "\n";
  for (const auto& spec : optimal) {
    os << "A={";
    for (std::size_t i = 0; i < spec.A.size(); ++i) os << (i ? "," : "") << spec.A[i];
    os << "} B={";
    for (std::size_t i = 0; i < spec.B.size(); ++i) os << (i ? "," : "") << spec.B[i];
    os << "} dim " << subspace_dim(spec) << "\n";
  }
  return os.str();
}

}  // namespace hilbworst
