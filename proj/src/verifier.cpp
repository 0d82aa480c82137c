#include "afschur/verifier.hpp"

#include <algorithm>
#include <sstream>

#include "afschur/pbw.hpp"

namespace afschur {

Int cartan_entry(int i, int j, int n) {
  if (column_class(i, n) == column_class(j, n)) return 2;
  Int c = 0;
  if (column_class(j, n) == column_class(i + 1, n)) c -= 1;
  if (column_class(j, n) == column_class(i - 1, n)) c -= 1;
  return c;
}

namespace {

GeneratorSymbol fi_symbol(int i, long long m, int n) {
  return m == 0 ? GeneratorSymbol::h(i, n)
                : GeneratorSymbol::unit(i, i + m * static_cast<long long>(n), n);
}

std::string list_str(const std::vector<long long>& ms) {
  std::ostringstream os;
  os << "(";
  for (size_t s = 0; s < ms.size(); ++s) os << (s ? "," : "") << ms[s];
  os << ")";
  return os.str();
}

std::string comp_str(const Composition& lam) {
  std::ostringstream os;
  os << "(";
  for (int i = 1; i <= lam.size(); ++i)
    os << (i > 1 ? "," : "") << lam.part(i).get_str();
  os << ")";
  return os.str();
}

}  // namespace

FiFamily::FiFamily(int n, Int r) : n_(n), r_(std::move(r)) {}

const AlgebraElement& FiFamily::fi(int i, const std::vector<long long>& ms) {
  if (ms.empty()) throw std::invalid_argument("fi needs at least one index");
  const auto key = std::make_pair(i, ms);
  if (const auto it = memo_.find(key); it != memo_.end()) return it->second;

  AlgebraElement value(n_, r_);
  if (ms.size() == 1) {
    value = generator_element(fi_symbol(i, ms[0], n_), n_, r_);
  } else {
    const std::vector<long long> head(ms.begin(), ms.end() - 1);
    const long long tail = ms.back();
    value = mult_generator(fi_symbol(i, tail, n_), fi(i, head));
    for (size_t j = 0; j + 1 < ms.size(); ++j) {
      std::vector<long long> merged;
      merged.reserve(ms.size() - 1);
      for (size_t s = 0; s + 1 < ms.size(); ++s)
        if (s != j) merged.push_back(ms[s]);
      merged.push_back(ms[j] + tail);
      value -= fi(i, merged);
    }
  }
  return memo_.emplace(key, std::move(value)).first->second;
}

AlgebraElement FiFamily::closed_form(int i, const std::vector<long long>& ms) const {
  if (ms.empty()) throw std::invalid_argument("closed form needs at least one index");
  Int a = 1;
  for (size_t k = 1; k < ms.size(); ++k) {
    Int repeats = 0;
    for (size_t s = 0; s <= k; ++s)
      if (ms[s] == ms[k]) ++repeats;
    a *= repeats;
  }
  AffineMatrix stacked(n_);
  for (const long long m : ms) {
    if (m == 0)
      throw std::invalid_argument("closed form needs nonzero loop indices");
    stacked = stacked.add_unit(i, i + m * static_cast<long long>(n_));
  }
  return Rational(a) * bracket_element(stacked, ExponentVector::zero(n_), r_);
}

EHatCombo ehat_single(long long i, long long j, int n) {
  return {{canonicalize(i, j, n), Rational(1)}};
}

EHatCombo ehat_bracket(const EHatCombo& a, const EHatCombo& b, int n) {
  EHatCombo out;
  const auto add = [&out](const Pos& p, const Rational& c) {
    const auto [it, inserted] = out.emplace(p, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) out.erase(it);
    }
  };
  for (const auto& [pa, ca] : a)
    for (const auto& [pb, cb] : b) {
      const auto [i, j] = pa;
      const auto [k, l] = pb;
      const Rational c = ca * cb;
      if (((j - k) % n + n) % n == 0) add(canonicalize(i, l + j - k, n), c);
      if (((l - i) % n + n) % n == 0) add(canonicalize(k, j + l - i, n), -c);
    }
  return out;
}

GeneratorSymbol ehat_symbol(const Pos& p, int n) {
  return GeneratorSymbol::unit(p.first, p.second, n);
}

AlgebraElement ehat_element(const EHatCombo& combo, int n, const Int& r) {
  AlgebraElement out(n, r);
  for (const auto& [p, c] : combo)
    out += c * generator_element(ehat_symbol(p, n), n, r);
  return out;
}

AlgebraElement apply_combo(const EHatCombo& combo, const AlgebraElement& y) {
  AlgebraElement out(y.period(), y.degree());
  for (const auto& [p, c] : combo)
    out += c * mult_generator(ehat_symbol(p, y.period()), y);
  return out;
}

TrackedElement tracked_single(long long i, long long j, int n, const Int& r) {
  EHatCombo combo = ehat_single(i, j, n);
  AlgebraElement value = ehat_element(combo, n, r);
  return {std::move(combo), std::move(value), true};
}

TrackedElement tracked_bracket(const TrackedElement& a, const TrackedElement& b,
                               int n, const Int& r) {
  AlgebraElement value = apply_combo(a.combo, b.value) - apply_combo(b.combo, a.value);
  EHatCombo combo = ehat_bracket(a.combo, b.combo, n);
  const bool ok =
      a.closure_ok && b.closure_ok && value == ehat_element(combo, n, r);
  return {std::move(combo), std::move(value), ok};
}

TrackedElement bracket_word_X(int i, int m, int n, const Int& r) {
  if (i < 2 || i > n || m <= 0)
    throw std::invalid_argument("bracket_word_X needs 2 <= i <= n and m > 0");
  TrackedElement cur = tracked_bracket(
      tracked_single(1, 2, n, r),
      tracked_single(2, 2 + static_cast<long long>(m - 1) * n, n, r), n, r);
  for (int s = 2; s <= i - 1; ++s)
    cur = tracked_bracket(cur, tracked_single(s, s + 1, n, r), n, r);
  return cur;
}

TrackedElement bracket_word_Y(int i, int m, int n, const Int& r) {
  if (i < 2 || i > n || m <= 0)
    throw std::invalid_argument("bracket_word_Y needs 2 <= i <= n and m > 0");
  TrackedElement cur = tracked_bracket(
      tracked_single(2, 2 - static_cast<long long>(m - 1) * n, n, r),
      tracked_single(2, 1, n, r), n, r);
  for (int s = 2; s <= i - 1; ++s)
    cur = tracked_bracket(tracked_single(s + 1, s, n, r), cur, n, r);
  return cur;
}

RelationCheck check_relation(const RelationInstance& instance) {
  AlgebraElement residual = instance.lhs - instance.rhs;
  const bool pass = residual.is_zero();
  return {pass, std::move(residual)};
}

bool VerifyReport::all_passed() const {
  for (const auto& rep : relations)
    if (!rep.failures.empty()) return false;
  return true;
}

long long VerifyReport::total_instances() const {
  long long total = 0;
  for (const auto& rep : relations) total += rep.instances;
  return total;
}

namespace {

// One full sweep over the relation schemas at fixed (n, r).
class Sweep {
 public:
  explicit Sweep(const VerifierConfig& cfg)
      : cfg_(cfg),
        n_(cfg.n),
        r_(cfg.r),
        lambdas_(enumerate_compositions(cfg.n, cfg.r)),
        one_(identity_element(cfg.n, cfg.r)),
        fi_family_(cfg.n, cfg.r),
        fault_pending_(cfg.inject_fault) {}

  VerifyReport run() {
    r1();
    r2();
    r3();
    serre("R4", true);
    serre("R5", false);
    r6("R6");
    r7("R7");
    r8();
    r9("R9");
    r10();
    ur1();
    ur2();
    ur3();
    serre("UR4", true);
    serre("UR5", false);
    ur6();
    ur6_prime();
    r9("UR7'");
    r6("UR8'");
    r7("UR9'");

    VerifyReport report;
    report.config = cfg_;
    static const char* kOrder[] = {"R1",  "R2",  "R3",  "R4",   "R5",
                                   "R6",  "R7",  "R8",  "R9",   "R10",
                                   "UR1", "UR2", "UR3", "UR4",  "UR5",
                                   "UR6", "UR6'", "UR7'", "UR8'", "UR9'"};
    for (const char* id : kOrder)
      if (const auto it = reports_.find(id); it != reports_.end())
        report.relations.push_back(it->second);
    return report;
  }

 private:
  AlgebraElement zero() const { return AlgebraElement(n_, r_); }
  AlgebraElement elem(const GeneratorSymbol& g) const {
    return generator_element(g, n_, r_);
  }
  GeneratorSymbol loop(int i, long long m) const {
    return GeneratorSymbol::unit(i, i + m * static_cast<long long>(n_), n_);
  }

  RelationReport& rep(const std::string& id) {
    RelationReport& r = reports_[id];
    r.id = id;
    return r;
  }

  void record(const std::string& id, const std::string& label,
              const AlgebraElement& lhs, const AlgebraElement& rhs,
              bool flagged = false) {
    RelationReport& r = rep(id);
    ++r.instances;
    if (flagged) r.flagged.push_back(label);
    const RelationCheck chk = check_relation({id, label, lhs, rhs, flagged});
    if (!chk.pass) r.failures.push_back({label, serialize(chk.residual)});
  }

  void record_closure(const std::string& id, const std::string& label,
                      const TrackedElement& t) {
    RelationReport& r = rep(id);
    ++r.instances;
    if (!t.closure_ok)
      r.failures.push_back({label + " closure", "symbolic route mismatch"});
  }

  std::vector<long long> loop_values() const {
    std::vector<long long> out;
    for (long long m = -cfg_.m_max; m <= cfg_.m_max; ++m)
      if (m != 0) out.push_back(m);
    return out;
  }

  std::optional<Composition> shift_alpha(const Composition& lam, int i,
                                         int sign) const {
    const auto first = lam.bumped(i, sign);
    if (!first) return std::nullopt;
    return first->bumped(i + 1, -sign);
  }

  void r1() {
    for (const Composition& lam : lambdas_)
      for (const Composition& mu : lambdas_)
        record("R1", "k" + comp_str(lam) + ".k" + comp_str(mu),
               mult_diag(lam, idempotent(mu, r_)),
               lam == mu ? idempotent(lam, r_) : zero());
    // sum of k_lambda acts as the identity on a banded basis sweep
    const long long band = std::min<long long>(cfg_.band, 2);
    for (const AffineMatrix& A : enumerate_theta(n_, r_, band)) {
      const AlgebraElement base = AlgebraElement::basis(A);
      AlgebraElement left = zero();
      AlgebraElement right = zero();
      for (const Composition& lam : lambdas_) {
        left += mult_diag(lam, base);
        right += mult_by_diag(base, lam);
      }
      record("R1", "1.[" + matrix_str(A) + "]", left, base);
      record("R1", "[" + matrix_str(A) + "].1", right, base);
    }
  }

  void r2() {
    for (int i = 1; i <= n_; ++i) {
      const GeneratorSymbol ei = GeneratorSymbol::e(i, n_);
      const GeneratorSymbol fi = GeneratorSymbol::f(i, n_);
      for (const Composition& lam : lambdas_) {
        const auto up = shift_alpha(lam, i, 1);
        record("R2", "e,i=" + std::to_string(i) + ",lam=" + comp_str(lam),
               mult_generator(ei, idempotent(lam, r_)),
               up ? mult_diag(*up, elem(ei)) : zero());
        const auto down = shift_alpha(lam, i, -1);
        record("R2", "f,i=" + std::to_string(i) + ",lam=" + comp_str(lam),
               mult_generator(fi, idempotent(lam, r_)),
               down ? mult_diag(*down, elem(fi)) : zero());
      }
    }
  }

  void r3() {
    for (int i = 1; i <= n_; ++i)
      for (int j = 1; j <= n_; ++j) {
        AlgebraElement lhs =
            mult_generator(GeneratorSymbol::e(i, n_), elem(GeneratorSymbol::f(j, n_))) -
            mult_generator(GeneratorSymbol::f(j, n_), elem(GeneratorSymbol::e(i, n_)));
        AlgebraElement rhs = zero();
        if (i == j)
          for (const Composition& lam : lambdas_) {
            const Int w = lam.part(i) - lam.at_mod(i + 1);
            if (sgn(w) != 0)
              rhs.add_term(AffineMatrix::diagonal(lam), Rational(w));
          }
        std::string label = "i=" + std::to_string(i) + ",j=" + std::to_string(j);
        if (fault_pending_) {
          lhs += one_;
          fault_pending_ = false;
          label += " [fault injected]";
        }
        record("R3", label, lhs, rhs);
      }
  }

  void serre(const std::string& id, bool raising) {
    for (int i = 1; i <= n_; ++i)
      for (int j = 1; j <= n_; ++j) {
        if (i == j) continue;
        const Int bound = 1 - cartan_entry(i, j, n_);
        AlgebraElement lhs = zero();
        const GeneratorSymbol gi = raising ? GeneratorSymbol::e(i, n_)
                                           : GeneratorSymbol::f(i, n_);
        const GeneratorSymbol gj = raising ? GeneratorSymbol::e(j, n_)
                                           : GeneratorSymbol::f(j, n_);
        for (Int a = 0; a <= bound; ++a) {
          GeneratorWord word;
          for (Int s = 0; s < a; ++s) word.push_back(gi);
          word.push_back(gj);
          for (Int s = 0; s < bound - a; ++s) word.push_back(gi);
          Rational c(binomial(bound, a));
          if (mpz_odd_p(a.get_mpz_t())) c = -c;
          lhs += c * word_product(word, one_);
        }
        record(id, "i=" + std::to_string(i) + ",j=" + std::to_string(j), lhs,
               zero());
      }
  }

  void r6(const std::string& id) {
    for (int i = 2; i <= n_; ++i)
      for (int m = 1; m <= cfg_.m_max; ++m) {
        const std::string label = "i=" + std::to_string(i) + ",m=" + std::to_string(m);
        const TrackedElement x = bracket_word_X(i, m, n_, r_);
        TrackedElement chain = tracked_single(i, i + 1, n_, r_);
        for (int s = i + 1; s <= n_; ++s)
          chain = tracked_bracket(chain, tracked_single(s, s + 1, n_, r_), n_, r_);
        const TrackedElement lhs = tracked_bracket(x, chain, n_, r_);
        const AlgebraElement rhs = elem(loop(1, m)) - elem(loop(i, m));
        record_closure(id, label, lhs);
        record(id, label, lhs.value, rhs, m == 1);
      }
  }

  void r7(const std::string& id) {
    for (int i = 2; i <= n_; ++i)
      for (int m = 1; m <= cfg_.m_max; ++m) {
        const std::string label = "i=" + std::to_string(i) + ",m=" + std::to_string(m);
        TrackedElement chain = tracked_single(i + 1, i, n_, r_);
        for (int s = i + 1; s <= n_; ++s)
          chain = tracked_bracket(tracked_single(s + 1, s, n_, r_), chain, n_, r_);
        const TrackedElement y = bracket_word_Y(i, m, n_, r_);
        const TrackedElement lhs = tracked_bracket(chain, y, n_, r_);
        const AlgebraElement rhs = elem(loop(1, -m)) - elem(loop(i, -m));
        record_closure(id, label, lhs);
        record(id, label, lhs.value, rhs, m == 1);
      }
  }

  void r8() {
    const auto values = loop_values();
    for (int i = 1; i <= n_; ++i)
      for (const long long m : values)
        for (const Composition& lam : lambdas_)
          record("R8",
                 "i=" + std::to_string(i) + ",m=" + std::to_string(m) +
                     ",lam=" + comp_str(lam),
                 mult_generator(loop(i, m), idempotent(lam, r_)),
                 mult_diag(lam, elem(loop(i, m))));
    for (int i = 1; i <= n_; ++i)
      for (const long long m : values)
        for (int j = 1; j <= n_; ++j)
          for (const long long l : values) {
            if (std::make_pair(i, m) >= std::make_pair(j, l)) continue;
            record("R8",
                   "[" + loop(i, m).str() + "," + loop(j, l).str() + "]",
                   mult_generator(loop(i, m), elem(loop(j, l))),
                   mult_generator(loop(j, l), elem(loop(i, m))));
          }
  }

  void r9(const std::string& id) {
    for (const long long m : loop_values()) {
      AlgebraElement z = zero();
      for (int i = 1; i <= n_; ++i) z += elem(loop(i, m));
      const auto z_times = [&](const AlgebraElement& y) {
        AlgebraElement out = zero();
        for (int i = 1; i <= n_; ++i) out += mult_generator(loop(i, m), y);
        return out;
      };
      for (int j = 1; j <= n_; ++j) {
        const GeneratorSymbol ej = GeneratorSymbol::e(j, n_);
        const GeneratorSymbol fj = GeneratorSymbol::f(j, n_);
        record(id, "e,m=" + std::to_string(m) + ",j=" + std::to_string(j),
               z_times(elem(ej)), mult_generator(ej, z));
        record(id, "f,m=" + std::to_string(m) + ",j=" + std::to_string(j),
               z_times(elem(fj)), mult_generator(fj, z));
      }
    }
  }

  void r10() {
    const auto values = loop_values();
    for (int i = 1; i <= n_; ++i)
      for (int t = 1; t <= cfg_.t_max; ++t) {
        std::vector<size_t> odo(static_cast<size_t>(t), 0);
        while (true) {
          std::vector<long long> ms(static_cast<size_t>(t));
          for (int s = 0; s < t; ++s) ms[static_cast<size_t>(s)] = values[odo[static_cast<size_t>(s)]];
          const AlgebraElement& value = fi_family_.fi(i, ms);
          for (const Composition& lam : lambdas_) {
            if (!(lam.part(i) < Int(t))) continue;
            record("R10",
                   "i=" + std::to_string(i) + ",m=" + list_str(ms) +
                       ",lam=" + comp_str(lam),
                   mult_by_diag(value, lam), zero());
          }
          int pos = t - 1;
          while (pos >= 0 && ++odo[static_cast<size_t>(pos)] == values.size()) {
            odo[static_cast<size_t>(pos)] = 0;
            --pos;
          }
          if (pos < 0) break;
        }
      }
  }

  void ur1() {
    for (int i = 1; i <= n_; ++i)
      for (int j = i + 1; j <= n_; ++j)
        record("UR1", "i=" + std::to_string(i) + ",j=" + std::to_string(j),
               mult_generator(GeneratorSymbol::h(i, n_), elem(GeneratorSymbol::h(j, n_))),
               mult_generator(GeneratorSymbol::h(j, n_), elem(GeneratorSymbol::h(i, n_))));
  }

  void ur2() {
    for (int i = 1; i <= n_; ++i)
      for (int j = 1; j <= n_; ++j) {
        const GeneratorSymbol hi = GeneratorSymbol::h(i, n_);
        const GeneratorSymbol ej = GeneratorSymbol::e(j, n_);
        const GeneratorSymbol fj = GeneratorSymbol::f(j, n_);
        const Int ce = Int(i == j ? 1 : 0) - Int(i == column_class(j + 1, n_) ? 1 : 0);
        AlgebraElement rhs_e = zero();
        if (sgn(ce) != 0) rhs_e = Rational(ce) * elem(ej);
        record("UR2", "e,i=" + std::to_string(i) + ",j=" + std::to_string(j),
               mult_generator(hi, elem(ej)) - mult_generator(ej, elem(hi)),
               rhs_e);
        AlgebraElement rhs_f = zero();
        if (sgn(ce) != 0) rhs_f = Rational(-ce) * elem(fj);
        record("UR2", "f,i=" + std::to_string(i) + ",j=" + std::to_string(j),
               mult_generator(hi, elem(fj)) - mult_generator(fj, elem(hi)),
               rhs_f);
      }
  }

  void ur3() {
    for (int i = 1; i <= n_; ++i)
      for (int j = 1; j <= n_; ++j) {
        AlgebraElement rhs = zero();
        if (i == j)
          rhs = elem(GeneratorSymbol::h(j, n_)) - elem(GeneratorSymbol::h(j + 1, n_));
        record("UR3", "i=" + std::to_string(i) + ",j=" + std::to_string(j),
               mult_generator(GeneratorSymbol::e(i, n_), elem(GeneratorSymbol::f(j, n_))) -
                   mult_generator(GeneratorSymbol::f(j, n_), elem(GeneratorSymbol::e(i, n_))),
               rhs);
      }
  }

  void ur6() {
    const auto values = loop_values();
    const auto z_elem = [&](long long s) {
      AlgebraElement out = zero();
      for (int h = 1; h <= n_; ++h) out += elem(loop(h, s));
      return out;
    };
    const auto z_times = [&](long long s, const AlgebraElement& y) {
      AlgebraElement out = zero();
      for (int h = 1; h <= n_; ++h) out += mult_generator(loop(h, s), y);
      return out;
    };
    for (const long long s : values) {
      const AlgebraElement zs = z_elem(s);
      for (int i = 1; i <= n_; ++i) {
        const GeneratorSymbol syms[] = {GeneratorSymbol::e(i, n_),
                                        GeneratorSymbol::f(i, n_),
                                        GeneratorSymbol::h(i, n_)};
        const char* names[] = {"e", "f", "h"};
        for (int v = 0; v < 3; ++v)
          record("UR6",
                 std::string(names[v]) + std::to_string(i) + ",s=" + std::to_string(s),
                 mult_generator(syms[v], zs), z_times(s, elem(syms[v])));
      }
      for (const long long t : values) {
        if (t <= s) continue;
        record("UR6", "Z" + std::to_string(s) + ",Z" + std::to_string(t),
               z_times(s, z_elem(t)), z_times(t, zs));
      }
    }
  }

  void ur6_prime() {
    const auto values = loop_values();
    for (int i = 1; i <= n_; ++i)
      for (const long long m : values) {
        for (int j = 1; j <= n_; ++j)
          record("UR6'",
                 loop(i, m).str() + ",h" + std::to_string(j),
                 mult_generator(loop(i, m), elem(GeneratorSymbol::h(j, n_))),
                 mult_generator(GeneratorSymbol::h(j, n_), elem(loop(i, m))));
        for (int j = 1; j <= n_; ++j)
          for (const long long l : values) {
            if (std::make_pair(i, m) >= std::make_pair(j, l)) continue;
            record("UR6'",
                   "[" + loop(i, m).str() + "," + loop(j, l).str() + "]",
                   mult_generator(loop(i, m), elem(loop(j, l))),
                   mult_generator(loop(j, l), elem(loop(i, m))));
          }
      }
  }

  const VerifierConfig& cfg_;
  int n_;
  Int r_;
  std::vector<Composition> lambdas_;
  AlgebraElement one_;
  FiFamily fi_family_;
  bool fault_pending_;
  std::map<std::string, RelationReport> reports_;
};

}  // namespace

VerifyReport verify_presentation(const VerifierConfig& config) {
  VerifierConfig cfg = config;
  if (cfg.n < 2) throw std::invalid_argument("period must be at least 2");
  if (sgn(cfg.r) < 0) throw std::invalid_argument("degree must be nonnegative");
  if (cfg.m_max < 1 || cfg.t_max < 1)
    throw std::invalid_argument("sweep bounds must be positive");
  if (cfg.band < 0) cfg.band = 2LL * cfg.n;
  return Sweep(cfg).run();
}

ClosedFormReport closed_form_check(int n, const Int& r, int m_max, int t_max) {
  if (n < 2) throw std::invalid_argument("period must be at least 2");
  if (m_max < 1 || t_max < 1)
    throw std::invalid_argument("sweep bounds must be positive");
  ClosedFormReport report{n, r, m_max, t_max, 0, {}};
  FiFamily family(n, r);
  std::vector<long long> values;
  for (long long m = -m_max; m <= m_max; ++m)
    if (m != 0) values.push_back(m);
  for (int i = 1; i <= n; ++i)
    for (int t = 1; t <= t_max; ++t) {
      std::vector<size_t> odo(static_cast<size_t>(t), 0);
      while (true) {
        std::vector<long long> ms(static_cast<size_t>(t));
        for (int s = 0; s < t; ++s)
          ms[static_cast<size_t>(s)] = values[odo[static_cast<size_t>(s)]];
        ++report.instances;
        const AlgebraElement& lhs = family.fi(i, ms);
        const AlgebraElement rhs = family.closed_form(i, ms);
        if (!(lhs == rhs))
          report.failures.push_back({"i=" + std::to_string(i) + ",m=" + list_str(ms),
                                     serialize(lhs), serialize(rhs)});
        int pos = t - 1;
        while (pos >= 0 && ++odo[static_cast<size_t>(pos)] == values.size()) {
          odo[static_cast<size_t>(pos)] = 0;
          --pos;
        }
        if (pos < 0) break;
      }
    }
  return report;
}

}  // namespace afschur
