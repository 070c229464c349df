#include "hecke/acceptance.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "hecke/errors.hpp"
#include "hecke/oracle.hpp"
#include "hecke/psmod.hpp"
#include "hecke/weights.hpp"
#include "hecke/wtype.hpp"

namespace hecke {

namespace {

struct Tally {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string first;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (ok) return;
    if (failed == 0) first = what;
    ++failed;
  }
  bool ok() const { return failed == 0; }
  std::string summary(const std::string& unit) const {
    std::ostringstream out;
    out << checked << " " << unit << ", " << failed << " failed";
    if (failed) out << "; first: " << first;
    return out.str();
  }
};

std::string show(std::span<const std::int64_t> v) {
  std::ostringstream out;
  out << "(";
  for (std::size_t k = 0; k < v.size(); ++k) out << (k ? "," : "") << v[k];
  out << ")";
  return out.str();
}

struct Grid {
  int d;
  int r;
};

const std::vector<Grid>& weight_grid() {
  static const std::vector<Grid> grid{{1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 1}, {3, 2}};
  return grid;
}

std::vector<std::int64_t> iota_exp(int d, std::int64_t scale) {
  std::vector<std::int64_t> out(static_cast<std::size_t>(d) + 1);
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = scale * static_cast<std::int64_t>(j);
  return out;
}

/// Pipeline characters for a balanced weight: unramified, with theta and unit twists.
std::vector<CharacterData> pipeline_characters(std::span<const std::int64_t> n, int q, int r) {
  const int d = static_cast<int>(n.size()) - 1;
  std::vector<CharacterData> out;
  out.push_back(character_from_weight(n, q, r));
  auto twisted = character_from_weight(n, q, r, iota_exp(d, 1));
  twisted.unit_exp = iota_exp(d, 2);
  out.push_back(make_character(twisted.theta_exp, twisted.pi_ord, twisted.unit_exp, q, r));
  return out;
}

/// The simple-step inequality nabla(w) - r <= nabla(ws) <= nabla(w) at every ascent.
bool simple_steps_hold(const NablaFunction& nabla, int r) {
  const auto& group = WeylGroup::get(nabla.d);
  for (std::size_t idx = 0; idx < group.size(); ++idx)
    for (int i = 1; i <= nabla.d; ++i) {
      if (!ascends(group[idx], i)) continue;
      const auto here = nabla.at(idx);
      const auto there = nabla.at(group.times_s(idx, i));
      if (there > here || there < here - r) return false;
    }
  return true;
}

bool ubar_steps_hold(const NablaFunction& nabla, const CharacterData& c) {
  const auto& group = WeylGroup::get(nabla.d);
  for (std::size_t idx = 0; idx < group.size(); ++idx) {
    const std::size_t next = group.times_ubar(idx, 1);
    if (nabla.at(idx) - nabla.at(next) != c.pi_ord[static_cast<std::size_t>(t_index(group[next]))]) return false;
  }
  return true;
}

struct LatticePair {
  CharacterData c;
  NablaFunction nabla;
};

/// Pipeline pairs at d <= 2 and their perturbations: shifts constant along
/// a ubar-orbit (keeping the ubar-steps) and single-point shifts.
std::vector<LatticePair> perturbed_grid() {
  std::vector<LatticePair> out;
  std::mt19937_64 rng(404);
  for (int q : {2, 3}) {
    for (const auto& [d, r] : weight_grid()) {
      if (d > 2) continue;
      const auto& group = WeylGroup::get(d);
      std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
      std::uniform_int_distribution<int> shift(-2, 2);
      for (const auto& n : enumerate_balanced(d, r)) {
        const auto nabla = build_nabla(n, r);
        for (const auto& c : pipeline_characters(n, q, r)) {
          out.push_back({c, nabla});
          for (int k = 0; k < 3; ++k) {
            auto pert = nabla;
            const std::size_t start = pick(rng);
            int delta = shift(rng);
            if (delta == 0) delta = 1;
            for (int j = 0; j <= d; ++j) pert.values[group.times_ubar(start, j)] += delta;
            out.push_back({c, pert});
          }
          auto point = nabla;
          point.values[pick(rng)] += 1;
          out.push_back({c, point});
        }
      }
    }
  }
  return out;
}

CriterionResult timed(int id, std::string name, double limit, const std::function<Tally()>& body,
                      const std::string& unit) {
  CriterionResult res;
  res.id = id;
  res.name = std::move(name);
  res.limit_seconds = limit;
  const auto start = std::chrono::steady_clock::now();
  try {
    const Tally t = body();
    res.holds = t.ok();
    res.detail = t.summary(unit);
  } catch (const std::exception& e) {
    res.holds = false;
    res.detail = std::string("exception: ") + e.what();
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

Tally criterion_reduction() {
  Tally t;
  for (const auto& [d, r] : weight_grid())
    for (const auto& n : enumerate_balanced(d, r)) {
      const auto m = reduce_weight(n, r);
      // a single entry is balanced exactly when it vanishes
      bool ok = m.size() == static_cast<std::size_t>(d) && (m.size() == 1 ? m[0] == 0 : is_balanced(m, r).balanced);
      for (std::size_t i = 1; ok && i < n.size(); ++i) ok = n[i] - m[i - 1] >= 0 && n[i] - m[i - 1] <= r;
      t.expect(ok, "n=" + show(n) + " r=" + std::to_string(r) + " -> " + show(m));
    }
  return t;
}

Tally criterion_reversal() {
  Tally t;
  for (const auto& [d, r] : weight_grid())
    for (const auto& n : enumerate_balanced(d, r))
      t.expect(is_balanced(reverse_weight(n), r).balanced, "reverse of " + show(n));
  std::mt19937_64 rng(2024);
  std::size_t probes = 0;
  while (probes < 1000) {
    const int d = std::uniform_int_distribution<int>(1, 3)(rng);
    const int r = std::uniform_int_distribution<int>(1, 2)(rng);
    Weight n(static_cast<std::size_t>(d) + 1);
    std::int64_t sum = 0;
    for (std::size_t k = 0; k + 1 < n.size(); ++k) sum += n[k] = std::uniform_int_distribution<std::int64_t>(-5, 5)(rng);
    n.back() = -sum + (probes % 4 == 0 ? 1 : 0);
    if (is_balanced(n, r).balanced) continue;
    ++probes;
    t.expect(!is_balanced(reverse_weight(n), r).balanced, "non-balanced probe " + show(n));
  }
  return t;
}

Tally criterion_nabla() {
  Tally t;
  for (const auto& [d, r] : weight_grid())
    for (const auto& n : enumerate_balanced(d, r)) {
      const auto check = check_integration(build_nabla(n, r), n, r);
      t.expect(check.ok, "n=" + show(n) + ": " + (check.witness ? check.witness->describe() : ""));
    }
  return t;
}

Tally criterion_stability() {
  Tally t;
  std::size_t violating = 0;
  const auto grid = perturbed_grid();
  t.expect(grid.size() >= 200, "grid has only " + std::to_string(grid.size()) + " pairs");
  for (const auto& [c, nabla] : grid) {
    const bool stable = is_lattice_stable(c, nabla).stable;
    const bool full = check_equinab(nabla, c, EquinabMode::Full).ok;
    const bool sd = check_equinab(nabla, c, EquinabMode::SdOnly).ok;
    const std::string where = "pi_ord=" + show(c.pi_ord) + " nabla=" + show(nabla.values);
    t.expect(stable == full && full == sd, "disagreement at " + where);
    if (!simple_steps_hold(nabla, c.r)) {
      ++violating;
      t.expect(!stable && !full && !sd, "simple-step violation accepted at " + where);
    }
    t.expect(full == (ubar_steps_hold(nabla, c) && simple_steps_hold(nabla, c.r)), "direct conditions at " + where);
  }
  t.expect(violating > 0, "no simple-step violations in the grid");
  return t;
}

std::vector<CharacterData> oracle_characters(int d, int q) {
  const auto len = static_cast<std::size_t>(d) + 1;
  const std::vector<std::int64_t> zeros(len, 0);
  std::vector<std::int64_t> ords(len, 0);
  ords[0] = 1;
  ords[len - 1] = -1;
  std::vector<std::int64_t> big = ords;
  big[0] = 3;
  big[len - 1] = -3;
  std::vector<CharacterData> out;
  out.push_back(trivial_character(d, q, 1));
  out.push_back(make_character(iota_exp(d, 1), zeros, zeros, q, 1));
  out.push_back(make_character(zeros, ords, zeros, q, 2));
  out.push_back(make_character(iota_exp(d, 1), big, iota_exp(d, 1), q, 2));
  out.push_back(make_character(zeros, big, zeros, q, 1));
  return out;
}

Tally criterion_oracle() {
  Tally t;
  for (int d : {1, 2})
    for (int q : {2, 3})
      for (const auto& c : oracle_characters(d, q)) {
        const std::string where = "d=" + std::to_string(d) + " q=" + std::to_string(q) + " theta=" + show(c.theta_exp) +
                                  " pi_ord=" + show(c.pi_ord);
        const auto r8 = compare_closed_form(c, 8);
        const auto r16 = compare_closed_form(c, 16);
        t.expect(r8.mismatches.empty() && r16.mismatches.empty(),
                 where + (r8.mismatches.empty() ? "" : " " + r8.mismatches.front().generator + " at w=" + r8.mismatches.front().w));
        t.expect(r8.precision_stable && r16.precision_stable, "precision dependence at " + where);
        bool same = true;
        for (const auto& g : oracle_generators(d, q))
          same = same && hecke_bruteforce_matrix(c, g, 8) == hecke_bruteforce_matrix(c, g, 16);
        t.expect(same, "N=8 and N=16 differ at " + where);
      }
  return t;
}

Tally criterion_relations() {
  Tally t;
  for (int q : {2, 3})
    for (int d = 1; d <= 3; ++d)
      for (const auto& c : oracle_characters(d, q)) {
        const auto report = check_relations(HeckeModule(c));
        std::string failed;
        for (const auto& r : report.results)
          if (!r.passed()) failed += r.relation + " ";
        t.expect(report.all_passed(), "scalar relations " + failed + "at d=" + std::to_string(d) + " q=" +
                                          std::to_string(q) + " pi_ord=" + show(c.pi_ord));
      }
  for (int q : {2, 3})
    for (const auto& [d, r] : weight_grid())
      for (const auto& n : enumerate_balanced(d, r)) {
        const auto nabla = build_nabla(n, r);
        for (const auto& c : pipeline_characters(n, q, r))
          t.expect(validate_action(reduce_lattice(c, nabla)).all_passed(), "validate_action at n=" + show(n));
      }
  return t;
}

template <class F>
void for_each_pi_ord(int d, F&& f) {
  const auto len = static_cast<std::size_t>(d) + 1;
  std::vector<std::int64_t> m(len, -2);
  while (true) {
    std::int64_t sum = 0;
    for (auto x : m) sum += x;
    if (sum == 0) f(m);
    std::size_t k = 0;
    while (k < len && m[k] == 2) m[k++] = -2;
    if (k == len) return;
    ++m[k];
  }
}

Tally criterion_criterion() {
  Tally t;
  for (int d = 1; d <= 2; ++d)
    for (int r = 1; r <= 2; ++r)
      for_each_pi_ord(d, [&](const std::vector<std::int64_t>& m) {
        const auto c = make_character(iota_exp(d, 1), m, iota_exp(d, 1), 5, r);
        t.expect(unitarity_criterion(c).balanced == is_balanced(weight_of_character(c), r).balanced,
                 "pi_ord=" + show(m) + " r=" + std::to_string(r));
      });
  return t;
}

Tally criterion_duality() {
  Tally t;
  for (int d = 1; d <= 2; ++d)
    for (int r = 1; r <= 2; ++r)
      for_each_pi_ord(d, [&](const std::vector<std::int64_t>& m) {
        const auto c = make_character(iota_exp(d, 1), m, iota_exp(d, 1), 5, r);
        const auto dual = dual_character(c);
        t.expect(unitarity_criterion(c).balanced == unitarity_criterion(dual).balanced, "criterion at pi_ord=" + show(m));
        t.expect(dual_character(dual) == c, "involution at pi_ord=" + show(m));
      });
  return t;
}

Tally criterion_reduction_coincidence() {
  Tally t;
  for (int q : {2, 3})
    for (const auto& [d, r] : weight_grid())
      for (const auto& n : enumerate_balanced(d, r)) {
        const auto nabla = build_nabla(n, r);
        for (const auto& c : pipeline_characters(n, q, r)) {
          const auto cmp = compare_reduction(c, nabla);
          t.expect(cmp.agree, "n=" + show(n) + ": " + cmp.first_mismatch);
        }
      }
  for (const auto& [c, nabla] : perturbed_grid()) {
    if (!is_lattice_stable(c, nabla).stable) continue;
    const auto cmp = compare_reduction(c, nabla);
    t.expect(cmp.agree, "perturbed nabla=" + show(nabla.values) + ": " + cmp.first_mismatch);
  }
  return t;
}

Tally criterion_realization() {
  Tally t;
  const int d = 2;
  const int r = 2;
  const auto& group = WeylGroup::get(d);
  const std::vector<std::pair<int, std::vector<std::int64_t>>> thetas{{3, {0, 0, 0}}, {5, {0, 1, 2}}};
  for (const auto& [q, theta] : thetas) {
    const auto field = FqField::get(q);
    const std::vector<FqElement> eps(group.size(), FqElement::one(field));
    for (const auto& sigma : enumerate_sigma(d)) {
      const auto partial = search_partial(sigma, r);
      t.expect(partial.has_value(), "no partial function found");
      if (!partial) continue;
      t.expect(check_partial(*partial, sigma).ok, "search_partial returned an invalid function");
      for (const auto& w : group.elements())
        for (const auto& v : group.elements()) {
          const auto words = all_reduced_words(v);
          if (words.size() < 2) continue;
          const auto ref = partial_word_sum(*partial, w, words.front());
          for (const auto& word : words) t.expect(partial_word_sum(*partial, w, word) == ref, "word dependence");
        }
      const auto real = silvester_realize(theta, sigma, eps, *partial, q);
      t.expect(real.round_trip, "round trip flag");
      t.expect(reduce_lattice(real.character, real.nabla) == make_wtype_module(theta, sigma, eps, q),
               "reduction differs from M(theta, sigma, eps)");
    }
  }
  return t;
}

}  // namespace

CriterionResult run_criterion(int id) {
  switch (id) {
    case 1:
      return timed(1, "balanced-weight reduction", 10, criterion_reduction, "weights");
    case 2:
      return timed(2, "reversal", 5, criterion_reversal, "checks");
    case 3:
      return timed(3, "nabla construction", 30, criterion_nabla, "weights");
    case 4:
      return timed(4, "stability equivalence", 60, criterion_stability, "checks");
    case 5:
      return timed(5, "oracle equality", 300, criterion_oracle, "checks");
    case 6:
      return timed(6, "relation suite", 120, criterion_relations, "modules");
    case 7:
      return timed(7, "criterion equivalence", 60, criterion_criterion, "characters");
    case 8:
      return timed(8, "duality", 30, criterion_duality, "checks");
    case 9:
      return timed(9, "reduction coincidence", 60, criterion_reduction_coincidence, "pairs");
    case 10:
      return timed(10, "realization", 120, criterion_realization, "checks");
    default:
      throw DomainError("acceptance criterion id must be in [1, 10]");
  }
}

std::vector<CriterionResult> run_acceptance() {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id));
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(2);
  out << (r.passed() ? "[PASS] " : "[FAIL] ") << "C" << r.id << " " << r.name << ": " << r.detail << " (" << r.seconds
      << "s, limit " << r.limit_seconds << "s)";
  return out.str();
}

}  // namespace hecke
