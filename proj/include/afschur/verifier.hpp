#pragma once

#include <string>
#include <utility>
#include <vector>

#include "afschur/engine.hpp"

namespace afschur {

// Cartan matrix of affine type A_{n-1} on I = Z/nZ; for n = 2 the two
// off-diagonal entries are -2.
Int cartan_entry(int i, int j, int n);

// f_i(m_1, ..., m_t): f_i(m) is the loop generator e_{i,i+mn} (the weight
// element for m = 0) and longer lists follow the commutator recursion
//   f_i(m_1..m_t) = f_i(m_1..m_{t-1}) f_i(m_t)
//                   - sum_j f_i(m_1..^m_j..m_{t-1}, m_j + m_t).
// The leading product is evaluated as f_i(m_t) * f_i(m_1..m_{t-1}), which
// keeps the left factor generator-type; the f_i(m) images commute.
class FiFamily {
 public:
  FiFamily(int n, Int r);

  const AlgebraElement& fi(int i, const std::vector<long long>& ms);

  // Closed form a_{m_1..m_t} (sum_j E_{i,i+m_j n})[0, r]; entries must be
  // nonzero.  Independent of the recursion above.
  AlgebraElement closed_form(int i, const std::vector<long long>& ms) const;

 private:
  int n_;
  Int r_;
  std::map<std::pair<int, std::vector<long long>>, AlgebraElement> memo_;
};

// Formal rational combination of the elements e-hat_{i,j} (a diagonal
// position meaning the weight element h_i).  Used to route nested
// commutators; every step is validated against the engine, never assumed.
using EHatCombo = std::map<Pos, Rational>;

EHatCombo ehat_single(long long i, long long j, int n);
// Bracket prediction [a, b] from the commutator identity on unit symbols.
EHatCombo ehat_bracket(const EHatCombo& a, const EHatCombo& b, int n);
GeneratorSymbol ehat_symbol(const Pos& p, int n);
AlgebraElement ehat_element(const EHatCombo& combo, int n, const Int& r);
// (sum of combo) * y through generator-type left factors.
AlgebraElement apply_combo(const EHatCombo& combo, const AlgebraElement& y);

// Nested commutator value together with its symbolic route.  closure_ok
// records that the element agreed with the symbolic form at every step.
struct TrackedElement {
  EHatCombo combo;
  AlgebraElement value;
  bool closure_ok = true;
};

TrackedElement tracked_single(long long i, long long j, int n, const Int& r);
TrackedElement tracked_bracket(const TrackedElement& a, const TrackedElement& b,
                               int n, const Int& r);

// X_{i,m} = [[...[[e_1, e-hat_{2,2+(m-1)n}], e_2], ...], e_{i-1}] and the
// mirrored Y_{i,m}; for m = 1 the inner symbol degenerates to the weight
// element h_2 (such instances are flagged in reports).
TrackedElement bracket_word_X(int i, int m, int n, const Int& r);
TrackedElement bracket_word_Y(int i, int m, int n, const Int& r);

// One concrete relation instance: both sides evaluated in S(n, r).
struct RelationInstance {
  std::string relation;
  std::string label;
  AlgebraElement lhs;
  AlgebraElement rhs;
  bool flagged = false;
};

struct RelationCheck {
  bool pass;
  AlgebraElement residual;
};
RelationCheck check_relation(const RelationInstance& instance);

struct RelationFailure {
  std::string label;
  std::string residual;
};

struct RelationReport {
  std::string id;
  long long instances = 0;
  std::vector<RelationFailure> failures;
  std::vector<std::string> flagged;
};

struct VerifierConfig {
  int n = 2;
  Int r = 1;
  int m_max = 2;
  int t_max = 3;
  long long band = -1;  // < 0: defaults to 2n
  bool inject_fault = false;  // testing hook: corrupts one product
};

struct VerifyReport {
  VerifierConfig config;
  std::vector<RelationReport> relations;

  bool all_passed() const;
  long long total_instances() const;
};

// Sweeps every relation schema R1-R10 and (UR1)-(UR6), (UR6)'-(UR9)'
// over all indices with |m| <= m_max, t <= t_max, all i, j in I and all
// lambda, mu in Lambda(n, r).
VerifyReport verify_presentation(const VerifierConfig& config);

struct ClosedFormFailure {
  std::string label;
  std::string lhs;
  std::string rhs;
};

struct ClosedFormReport {
  int n;
  Int r;
  int m_max;
  int t_max;
  long long instances = 0;
  std::vector<ClosedFormFailure> failures;

  bool all_equal() const { return failures.empty(); }
};

// fi == closed_form for every i and every list with t <= t_max and
// nonzero entries |m| <= m_max.
ClosedFormReport closed_form_check(int n, const Int& r, int m_max, int t_max);

}  // namespace afschur
