#include "afschur.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "afschur/json_io.hpp"
#include "afschur/pbw.hpp"
#include "afschur/verifier.hpp"

struct afs_engine {
  int n;
  afschur::Int r;
  afschur::NormalForm normal_form;
  std::string last_error;

  afs_engine(int n_, long long r_)
      : n(n_), r(afschur::make_int(r_)), normal_form(n_, afschur::make_int(r_)) {}
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
afs_status guarded(afs_engine* engine, Fn&& fn) {
  engine->last_error.clear();
  try {
    return fn();
  } catch (const afschur::ParseError& err) {
    engine->last_error = err.what();
    return AFS_ERR_PARSE;
  } catch (const afschur::MismatchError& err) {
    engine->last_error = err.what();
    return AFS_ERR_MISMATCH;
  } catch (const std::invalid_argument& err) {
    engine->last_error = err.what();
    return AFS_ERR_BAD_ARGUMENT;
  } catch (const std::exception& err) {
    engine->last_error = err.what();
    return AFS_ERR_INTERNAL;
  }
}

afschur::AlgebraElement parse_engine_element(const afs_engine& engine,
                                             const char* text) {
  const afschur::AlgebraElement x =
      afschur::element_from_json(afschur::parse_json_text(text));
  if (x.period() != engine.n || x.degree() != engine.r)
    throw afschur::MismatchError("element (n, r) differs from the engine's");
  return x;
}

}  // namespace

afs_status afs_engine_create(int n, long long r, afs_engine** out_engine) {
  if (out_engine == nullptr) return AFS_ERR_BAD_ARGUMENT;
  *out_engine = nullptr;
  if (n < 2 || r < 0) return AFS_ERR_BAD_ARGUMENT;
  try {
    *out_engine = new afs_engine(n, r);
    return AFS_OK;
  } catch (const std::exception&) {
    return AFS_ERR_INTERNAL;
  }
}

void afs_engine_destroy(afs_engine* engine) { delete engine; }

const char* afs_engine_last_error(const afs_engine* engine) {
  return engine == nullptr ? "" : engine->last_error.c_str();
}

void afs_string_free(char* str) { std::free(str); }

afs_status afs_multiply_word(afs_engine* engine, const char* word_json,
                             char** out_element_json) {
  if (engine == nullptr || word_json == nullptr || out_element_json == nullptr)
    return AFS_ERR_BAD_ARGUMENT;
  return guarded(engine, [&] {
    nlohmann::json payload = afschur::parse_json_text(word_json);
    if (payload.is_object() && payload.contains("word"))
      payload = payload.at("word");
    const afschur::GeneratorWord word = afschur::parse_word(payload, engine->n);
    const afschur::AlgebraElement value = afschur::word_product(
        word, afschur::identity_element(engine->n, engine->r));
    *out_element_json = dup_string(afschur::element_to_json(value).dump());
    return AFS_OK;
  });
}

afs_status afs_multiply_elements(afs_engine* engine, const char* x_json,
                                 const char* y_json, char** out_element_json) {
  if (engine == nullptr || x_json == nullptr || y_json == nullptr ||
      out_element_json == nullptr)
    return AFS_ERR_BAD_ARGUMENT;
  return guarded(engine, [&] {
    const afschur::AlgebraElement x = parse_engine_element(*engine, x_json);
    const afschur::AlgebraElement y = parse_engine_element(*engine, y_json);
    const afschur::AlgebraElement value = engine->normal_form.product(x, y);
    *out_element_json = dup_string(afschur::element_to_json(value).dump());
    return AFS_OK;
  });
}

afs_status afs_normal_form(afs_engine* engine, const char* element_json,
                           char** out_coordinates_json, int* out_round_trip_ok) {
  if (engine == nullptr || element_json == nullptr ||
      out_coordinates_json == nullptr || out_round_trip_ok == nullptr)
    return AFS_ERR_BAD_ARGUMENT;
  return guarded(engine, [&] {
    const afschur::AlgebraElement x = parse_engine_element(*engine, element_json);
    const afschur::PBWCoordinates coords = engine->normal_form.coordinates(x);
    *out_round_trip_ok = engine->normal_form.expand(coords) == x ? 1 : 0;
    *out_coordinates_json = dup_string(
        afschur::coordinates_to_json(coords, engine->n, engine->r).dump());
    return AFS_OK;
  });
}

afs_status afs_verify_presentation(afs_engine* engine, int m_max, int t_max,
                                   long long band, int inject_fault,
                                   char** out_report_json, int* out_all_passed) {
  if (engine == nullptr || out_report_json == nullptr || out_all_passed == nullptr)
    return AFS_ERR_BAD_ARGUMENT;
  return guarded(engine, [&] {
    afschur::VerifierConfig cfg;
    cfg.n = engine->n;
    cfg.r = engine->r;
    cfg.m_max = m_max;
    cfg.t_max = t_max;
    cfg.band = band;
    cfg.inject_fault = inject_fault != 0;
    const afschur::VerifyReport report = afschur::verify_presentation(cfg);
    *out_all_passed = report.all_passed() ? 1 : 0;
    *out_report_json = dup_string(afschur::verify_report_to_json(report).dump());
    return AFS_OK;
  });
}

afs_status afs_closed_form_check(afs_engine* engine, int m_max, int t_max,
                                 char** out_report_json, int* out_all_equal) {
  if (engine == nullptr || out_report_json == nullptr || out_all_equal == nullptr)
    return AFS_ERR_BAD_ARGUMENT;
  return guarded(engine, [&] {
    const afschur::ClosedFormReport report =
        afschur::closed_form_check(engine->n, engine->r, m_max, t_max);
    *out_all_equal = report.all_equal() ? 1 : 0;
    *out_report_json =
        dup_string(afschur::closed_form_report_to_json(report).dump());
    return AFS_OK;
  });
}

afs_status afs_element_to_text(afs_engine* engine, const char* element_json,
                               char** out_text) {
  if (engine == nullptr || element_json == nullptr || out_text == nullptr)
    return AFS_ERR_BAD_ARGUMENT;
  return guarded(engine, [&] {
    const afschur::AlgebraElement x = parse_engine_element(*engine, element_json);
    *out_text = dup_string(afschur::serialize(x));
    return AFS_OK;
  });
}
