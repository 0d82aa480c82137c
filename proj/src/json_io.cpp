#include "afschur/json_io.hpp"

namespace afschur {

using nlohmann::json;

namespace {

long long to_ll(const Int& v, const char* what) {
  if (!v.fits_slong_p())
    throw std::overflow_error(std::string(what) + " does not fit a JSON integer");
  return v.get_si();
}

long long require_int(const json& j, const char* what) {
  if (!j.is_number_integer())
    throw ParseError(std::string(what) + " must be an integer");
  return j.get<long long>();
}

}  // namespace

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& err) {
    throw ParseError(err.what());
  }
}

json matrix_to_json(const AffineMatrix& A) {
  json entries = json::array();
  for (const auto& [pos, value] : A.entries())
    entries.push_back({pos.first, pos.second, to_ll(value, "matrix entry")});
  return json{{"n", A.period()}, {"entries", std::move(entries)}};
}

AffineMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
    throw ParseError("matrix needs fields \"n\" and \"entries\"");
  const long long n = require_int(j.at("n"), "matrix field \"n\"");
  if (n < 2) throw ParseError("matrix period must be at least 2");
  if (!j.at("entries").is_array())
    throw ParseError("matrix field \"entries\" must be an array");
  std::vector<std::tuple<long long, long long, Int>> triples;
  for (const json& e : j.at("entries")) {
    if (!e.is_array() || e.size() != 3)
      throw ParseError("matrix entry must be a triple [i, j, a]");
    const long long i = require_int(e.at(0), "entry row");
    const long long col = require_int(e.at(1), "entry column");
    const long long a = require_int(e.at(2), "entry value");
    if (a <= 0) throw ParseError("entry values must be positive");
    triples.emplace_back(i, col, make_int(a));
  }
  try {
    return AffineMatrix::from_entries(static_cast<int>(n), triples);
  } catch (const std::invalid_argument& err) {
    throw ParseError(err.what());
  }
}

json composition_to_json(const Composition& lam) {
  json out = json::array();
  for (int i = 1; i <= lam.size(); ++i)
    out.push_back(to_ll(lam.part(i), "composition part"));
  return out;
}

Composition composition_from_json(const json& j, int n) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw ParseError("composition must be an array of n parts");
  std::vector<Int> parts;
  parts.reserve(j.size());
  for (const json& p : j) {
    const long long v = require_int(p, "composition part");
    if (v < 0) throw ParseError("composition parts must be nonnegative");
    parts.push_back(make_int(v));
  }
  return Composition(std::move(parts));
}

json element_to_json(const AlgebraElement& x) {
  json terms = json::array();
  for (const auto& [A, c] : x.terms())
    terms.push_back({{"coeff", c.str()}, {"matrix", matrix_to_json(A)}});
  return json{{"n", x.period()},
              {"r", to_ll(x.degree(), "degree")},
              {"terms", std::move(terms)}};
}

AlgebraElement element_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("r") || !j.contains("terms"))
    throw ParseError("element needs fields \"n\", \"r\" and \"terms\"");
  const long long n = require_int(j.at("n"), "element field \"n\"");
  const long long r = require_int(j.at("r"), "element field \"r\"");
  if (n < 2 || r < 0) throw ParseError("element needs n >= 2 and r >= 0");
  AlgebraElement out(static_cast<int>(n), make_int(r));
  if (!j.at("terms").is_array())
    throw ParseError("element field \"terms\" must be an array");
  for (const json& t : j.at("terms")) {
    if (!t.is_object() || !t.contains("coeff") || !t.contains("matrix"))
      throw ParseError("element term needs \"coeff\" and \"matrix\"");
    if (!t.at("coeff").is_string())
      throw ParseError("term coefficient must be a string \"p/q\"");
    const Rational c = Rational::parse(t.at("coeff").get<std::string>());
    if (c.is_zero()) throw ParseError("zero coefficients are never stored");
    const AffineMatrix A = matrix_from_json(t.at("matrix"));
    if (A.period() != out.period())
      throw ParseError("term matrix period differs from element period");
    if (A.sigma() != out.degree())
      throw ParseError("term matrix weight differs from element degree");
    if (!out.coeff(A).is_zero()) throw ParseError("duplicate term matrix");
    out.add_term(A, c);
  }
  return out;
}

json coordinates_to_json(const PBWCoordinates& coords, int n, const Int& r) {
  json list = json::array();
  for (const auto& [M, c] : coords) {
    const auto split = M.off_diag.split_pm();
    list.push_back({{"Aplus", matrix_to_json(split.plus)},
                    {"lambda", composition_to_json(M.lambda)},
                    {"Aminus", matrix_to_json(split.minus)},
                    {"coeff", c.str()}});
  }
  return json{{"n", n}, {"r", to_ll(r, "degree")}, {"coordinates", std::move(list)}};
}

namespace {

long long parse_ll(const std::string& text) {
  try {
    size_t used = 0;
    const long long v = std::stoll(text, &used);
    if (used != text.size()) throw ParseError("trailing characters in '" + text + "'");
    return v;
  } catch (const std::invalid_argument&) {
    throw ParseError("malformed integer '" + text + "'");
  } catch (const std::out_of_range&) {
    throw ParseError("integer out of range '" + text + "'");
  }
}

}  // namespace

GeneratorSymbol parse_generator_token(const std::string& token, int n) {
  if (token.empty()) throw ParseError("empty generator token");
  const char head = token[0];
  const std::string body = token.substr(1);
  switch (head) {
    case 'e':
    case 'f':
    case 'h': {
      const long long i = parse_ll(body);
      if (i < 1 || i > n)
        throw ParseError("generator index out of range in '" + token + "'");
      if (head == 'e') return GeneratorSymbol::e(static_cast<int>(i), n);
      if (head == 'f') return GeneratorSymbol::f(static_cast<int>(i), n);
      return GeneratorSymbol::h(i, n);
    }
    case 'k': {
      std::vector<Int> parts;
      size_t start = 0;
      while (start <= body.size()) {
        const size_t comma = body.find(',', start);
        const std::string piece =
            body.substr(start, comma == std::string::npos ? std::string::npos
                                                          : comma - start);
        const long long v = parse_ll(piece);
        if (v < 0) throw ParseError("negative part in '" + token + "'");
        parts.push_back(make_int(v));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
      if (static_cast<int>(parts.size()) != n)
        throw ParseError("'" + token + "' needs exactly n parts");
      return GeneratorSymbol::k(Composition(std::move(parts)));
    }
    case 'E': {
      const size_t comma = body.find(',');
      if (comma == std::string::npos)
        throw ParseError("'" + token + "' needs the form E<i>,<j>");
      const long long i = parse_ll(body.substr(0, comma));
      const long long j = parse_ll(body.substr(comma + 1));
      const GeneratorSymbol g = GeneratorSymbol::unit(i, j, n);
      if (g.kind != GeneratorSymbol::Kind::Unit)
        throw ParseError("'" + token + "' is diagonal; use h<i> instead");
      return g;
    }
    default:
      throw ParseError("unknown generator token '" + token + "'");
  }
}

GeneratorWord parse_word(const json& tokens, int n) {
  if (!tokens.is_array()) throw ParseError("generator word must be an array");
  GeneratorWord word;
  word.reserve(tokens.size());
  for (const json& t : tokens) {
    if (!t.is_string()) throw ParseError("generator tokens must be strings");
    word.push_back(parse_generator_token(t.get<std::string>(), n));
  }
  return word;
}

json verify_report_to_json(const VerifyReport& report) {
  json relations = json::array();
  for (const auto& rel : report.relations) {
    json failures = json::array();
    for (const auto& f : rel.failures)
      failures.push_back({{"instance", f.label}, {"residual", f.residual}});
    json flagged = json::array();
    for (const auto& f : rel.flagged) flagged.push_back(f);
    relations.push_back({{"id", rel.id},
                         {"instances", rel.instances},
                         {"failures", std::move(failures)},
                         {"flagged", std::move(flagged)}});
  }
  return json{{"n", report.config.n},
              {"r", to_ll(report.config.r, "degree")},
              {"bounds",
               {{"mmax", report.config.m_max},
                {"tmax", report.config.t_max},
                {"band", report.config.band}}},
              {"relations", std::move(relations)},
              {"all_passed", report.all_passed()}};
}

json closed_form_report_to_json(const ClosedFormReport& report) {
  json failures = json::array();
  for (const auto& f : report.failures)
    failures.push_back({{"instance", f.label}, {"lhs", f.lhs}, {"rhs", f.rhs}});
  return json{{"n", report.n},
              {"r", to_ll(report.r, "degree")},
              {"bounds", {{"mmax", report.m_max}, {"tmax", report.t_max}}},
              {"instances", report.instances},
              {"failures", std::move(failures)},
              {"all_equal", report.all_equal()}};
}

}  // namespace afschur
