#include "bigrade/checks.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "bigrade/box.hpp"
#include "bigrade/error.hpp"
#include "bigrade/filtration.hpp"
#include "bigrade/hypersurface.hpp"
#include "bigrade/local_cohomology.hpp"
#include "bigrade/parallel.hpp"
#include "bigrade/text_format.hpp"

namespace bigrade {

namespace {

constexpr std::size_t kMaxExamples = 5;

/// Per-instance outcome: for each property, whether it applied and whether
/// it failed.
class Ledger {
public:
  explicit Ledger(const std::vector<std::string>& names) : checked_(names.size(), 0), failed_(names.size(), 0) {
    for (std::size_t i = 0; i < names.size(); ++i) index_[names[i]] = i;
  }

  void check(const std::string& name, bool ok) {
    const std::size_t i = index_.at(name);
    ++checked_[i];
    if (!ok) ++failed_[i];
  }

  /// Runs `body`; an exception counts as a violation of `name`.
  void guarded(const std::string& name, const std::function<bool()>& body) {
    bool ok = false;
    try {
      ok = body();
    } catch (const Error&) {
      ok = false;
    }
    check(name, ok);
  }

  std::vector<int> checked_;
  std::vector<int> failed_;
  std::vector<std::string> notes;

private:
  std::map<std::string, std::size_t> index_;
};

SuiteReport merge(std::string suite, std::uint64_t seed, const std::vector<std::string>& names,
                  const std::vector<Ledger>& ledgers, const std::vector<std::string>& labels) {
  SuiteReport report;
  report.suite = std::move(suite);
  report.seed = seed;
  report.instances = static_cast<int>(ledgers.size());
  for (const auto& name : names) report.properties.push_back({name, 0, 0, {}});
  for (std::size_t k = 0; k < ledgers.size(); ++k) {
    for (std::size_t i = 0; i < names.size(); ++i) {
      auto& p = report.properties[i];
      p.checked += ledgers[k].checked_[i];
      p.violations += ledgers[k].failed_[i];
      if (ledgers[k].failed_[i] > 0 && p.examples.size() < kMaxExamples) p.examples.push_back(labels[k]);
    }
    for (const auto& note : ledgers[k].notes) report.notes.push_back(labels[k] + ": " + note);
  }
  return report;
}

std::string label_of(const MonomialIdeal& ideal) {
  return "ring " + std::to_string(ideal.ring().m) + " " + std::to_string(ideal.ring().n) + " " +
         render_generators(ideal);
}

bool strictly_increasing_tail(const std::vector<std::int64_t>& values) {
  return values.size() >= 2 && values[values.size() - 1] > values[values.size() - 2];
}

const std::vector<std::string>& property_names() {
  static const std::vector<std::string> names = {
      "chain grade<=mgrade<=cd<=dim",
      "cd(Q)=dim S/(P+I) and cd(P)=dim S/(Q+I)",
      "grade(Q)<=dim-cd(P), equality when CM",
      "grade(Q)=0 iff Q inside an associated prime",
      "mgrade(Q)=n-max y-height",
      "mgrade(Q)=1 implies grade(Q)=1",
      "Ass(D_i)={p: cd(p)<=cd(D_i)}",
      "Ass(M/D_i)=Ass(M)-Ass(D_i)",
      "Ass(D_i/D_i-1)={p: cd(p)=cd(D_i)} and union is Ass(M)",
      "mgrade(Q,D_i)=cd(Q,D_1)",
      "seq-CM implies maximal depth",
      "seq-CM implies grade(Q,D_i)=grade(Q,M)",
      "CM implies maximal depth w.r.t. P and Q",
      "maximal depth and grade>0 implies H^grade not f.g.",
      "top cohomology H^cd with cd>0 not f.g.",
      "gen-CM with grade>0: max depth = seq-CM = CM",
      "grade/cd = first/last nonvanishing H^i",
      "f.g. criterion agrees with growth scan",
  };
  return names;
}

void check_instance(const MonomialIdeal& ideal, Ledger& ledger) {
  const RingSpec& ring = ideal.ring();
  const AxisIdeal q = AxisIdeal::y_block(ring);
  const AxisIdeal p = AxisIdeal::x_block(ring);
  const Subquotient module = Subquotient::cyclic(ideal);
  const auto ass = associated_primes(ideal);
  const auto& names = property_names();

  InvariantReport rq, rp;
  try {
    rq = analyze(ideal, q);
    rp = analyze(ideal, p);
  } catch (const Error&) {
    for (const auto& name : names) ledger.check(name, false);
    return;
  }

  ledger.check(names[0], rq.grade <= rq.mgrade && rq.mgrade <= rq.cd && rq.cd <= rq.dim && rp.grade <= rp.mgrade &&
                             rp.mgrade <= rp.cd && rp.cd <= rp.dim);

  const int dim_p = dim_quotient(sum(ideal, MonomialIdeal::from_vars(ring, p.vars())));
  const int dim_q = dim_quotient(sum(ideal, MonomialIdeal::from_vars(ring, q.vars())));
  ledger.check(names[1], rq.cd == dim_p && rp.cd == dim_q);

  ledger.check(names[2], rq.grade <= rq.dim - rp.cd && (!rq.cm_ordinary || rq.grade == rq.dim - rp.cd));

  const bool q_inside = std::any_of(ass.begin(), ass.end(), [&](const PrimeSupport& pr) {
    return q.vars().is_subset_of(pr.vars);
  });
  ledger.check(names[3], (rq.grade == 0) == q_inside);

  int max_y_height = 0;
  for (const auto& pr : ass) max_y_height = std::max(max_y_height, (pr.vars & q.vars()).size());
  ledger.check(names[4], rq.mgrade == ring.n - max_y_height);

  if (rq.mgrade == 1) ledger.check(names[5], rq.grade == 1);

  // Dimension filtration identities, recomputed here from the ladder.
  std::optional<FiltrationLadder> ladder;
  try {
    ladder = dimension_filtration(ideal, q);
  } catch (const Error&) {
  }
  if (!ladder) {
    for (int k = 6; k <= 11; ++k) ledger.check(names[k], false);
  } else {
    bool fact_a = true, fact_b = true;
    for (std::size_t i = 1; i <= ladder->steps.size(); ++i) {
      const int gamma = ladder->steps[i - 1].cd;
      std::vector<PrimeSupport> low, high;
      for (const auto& pr : ass) (cd_prime(pr, q) <= gamma ? low : high).push_back(pr);
      fact_a = fact_a && associated_primes(Subquotient(ladder->ideal_at(i), ideal)) == low;
      const auto& ji = ladder->ideal_at(i);
      const auto rest = ji.is_unit() ? std::vector<PrimeSupport>{} : associated_primes(Subquotient::cyclic(ji));
      fact_b = fact_b && rest == high;
    }
    ledger.check(names[6], fact_a);
    ledger.check(names[7], fact_b);
    ledger.guarded(names[8], [&] { return !ass_quotients(*ladder).empty(); });
    ledger.guarded(names[9], [&] { return mgrade_constancy(ideal, q).holds; });

    const SeqCmVerdict seq = sequentially_cm(ideal, q);
    if (seq.verdict) {
      ledger.check(names[10], rq.maximal_depth);
      bool same = true;
      for (std::size_t i = 1; i <= ladder->steps.size(); ++i)
        same = same && grade(Subquotient(ladder->ideal_at(i), ideal), q) == rq.grade;
      ledger.check(names[11], same);
    }
  }

  if (rq.cm_ordinary) ledger.check(names[12], rq.maximal_depth && rp.maximal_depth);

  std::vector<LCReport> lc;
  for (int i = 0; i <= q.size(); ++i) lc.push_back(lc_report(ideal, q, i));

  if (rq.maximal_depth && rq.grade > 0) ledger.check(names[13], !lc[rq.grade].finitely_generated);
  if (rq.cd > 0) ledger.check(names[14], !lc[rq.cd].finitely_generated);

  bool gen_cm = true;
  for (int i = 0; i < rq.cd; ++i) gen_cm = gen_cm && lc[i].finitely_generated;
  if (gen_cm && rq.grade > 0) {
    ledger.guarded(names[15], [&] {
      const auto t = corollary_check(ideal, q);
      return t.max_depth == t.seq_cm && t.seq_cm == t.cm_wrt_axis;
    });
  }

  int first = -1, last = -1;
  for (int i = 0; i <= q.size(); ++i) {
    if (lc[i].is_zero) continue;
    if (first < 0) first = i;
    last = i;
  }
  ledger.check(names[16], first == rq.grade && last == rq.cd);

  // A nonzero module of finite total dimension stops growing once the
  // radius passes every cap; non-finitely-generated cohomology keeps
  // growing in negative axis degrees.
  const auto box = module.lcm_box();
  const int r0 = *std::max_element(box.begin(), box.end()) + 1;
  bool growth_ok = true;
  for (int i = 0; i <= q.size(); ++i) {
    const auto g = growth_scan(ideal, q, i, {r0, r0 + 1, r0 + 2});
    if (!lc[i].finitely_generated) growth_ok = growth_ok && strictly_increasing_tail(g);
    if (lc[i].total_dim) growth_ok = growth_ok && g[1] == g[2] && g[2] == *lc[i].total_dim;
    if (!lc[i].total_dim) growth_ok = growth_ok && strictly_increasing_tail(g);
  }
  ledger.check(names[17], growth_ok);

  for (int j : finitely_generated_prime_levels(ideal, q))
    ledger.notes.push_back("H^" + std::to_string(j) + " finitely generated although an associated prime has cd " +
                           std::to_string(j));
}

}  // namespace

MonomialIdeal random_ideal(std::mt19937_64& rng, const RandomIdealOptions& options) {
  auto pick = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
  const int m = pick(1, options.max_block_size);
  const int n = pick(1, options.max_block_size);
  const RingSpec ring = RingSpec::make(m, n);
  const int count = pick(1, options.max_gens);
  std::vector<Monomial> gens;
  while (static_cast<int>(gens.size()) < count) {
    std::vector<int> e(ring.num_vars());
    for (int& v : e) v = pick(0, options.max_exponent);
    Monomial u(std::move(e));
    if (!u.is_one()) gens.push_back(std::move(u));
  }
  return MonomialIdeal(ring, gens);
}

bool SuiteReport::passed() const { return violations() == 0; }

int SuiteReport::violations() const {
  int total = 0;
  for (const auto& p : properties) total += p.violations;
  return total;
}

SuiteReport property_suite(std::uint64_t seed, int count, const RandomIdealOptions& options) {
  std::mt19937_64 rng(seed);
  std::vector<MonomialIdeal> ideals;
  for (int k = 0; k < count; ++k) ideals.push_back(random_ideal(rng, options));

  const auto& names = property_names();
  std::vector<Ledger> ledgers(ideals.size(), Ledger(names));
  parallel_for(ideals.size(), [&](std::size_t k) { check_instance(ideals[k], ledgers[k]); });

  std::vector<std::string> labels;
  for (const auto& ideal : ideals) labels.push_back(label_of(ideal));
  return merge("properties", seed, names, ledgers, labels);
}

SuiteReport oracle_suite(std::uint64_t seed, int count, const RandomIdealOptions& options) {
  std::mt19937_64 rng(seed);
  std::vector<MonomialIdeal> ideals;
  for (int k = 0; k < count; ++k) ideals.push_back(random_ideal(rng, options));

  const std::vector<std::string> names = {"piece dimensions: fibers = direct Cech", "grade: fibers = direct Cech",
                                          "cd: fibers = direct Cech"};
  std::vector<Ledger> ledgers(ideals.size(), Ledger(names));
  parallel_for(ideals.size(), [&](std::size_t k) {
    const MonomialIdeal& ideal = ideals[k];
    Ledger& ledger = ledgers[k];
    const AxisIdeal q = AxisIdeal::y_block(ideal.ring());
    const Subquotient module = Subquotient::cyclic(ideal);
    const auto decomposition = fibers(module, q);
    const AxisIdeal fiber_axis = decomposition.fiber_axis();

    int first = -1, last = -1;
    bool pieces_ok = true;
    for (const auto& c : cech_representatives(module, q)) {
      const auto direct = cech_cohomology(module, q, c);
      const auto& cls = decomposition.classes.at(static_cast<std::size_t>(class_of(decomposition, q, c)));
      const auto via_fiber = cech_cohomology(cls.fiber, fiber_axis, axis_part(decomposition, c));
      pieces_ok = pieces_ok && direct == via_fiber;
      for (int i = 0; i < static_cast<int>(direct.size()); ++i) {
        if (direct[i] == 0) continue;
        if (first < 0 || i < first) first = i;
        last = std::max(last, i);
      }
    }
    ledger.check(names[0], pieces_ok);
    ledger.check(names[1], first == grade(module, q));
    ledger.check(names[2], last == cd(module, q));
  });

  std::vector<std::string> labels;
  for (const auto& ideal : ideals) labels.push_back(label_of(ideal));
  return merge("oracle", seed, names, ledgers, labels);
}

SuiteReport hypersurface_suite(int max_factors, int max_degree, int max_block) {
  const std::vector<std::string> names = {"label != none iff b=0 or beta2>0", "cases 4/5 give grade n-1, mgrade n",
                                          "monomial cross-check"};
  std::vector<Bidegree> degrees;
  for (int a = 0; a <= max_degree; ++a)
    for (int b = 0; b <= max_degree; ++b)
      if (a + b > 0) degrees.push_back({a, b});

  // Multisets of 1..max_factors bidegrees, as nondecreasing index lists.
  std::vector<std::vector<Bidegree>> profiles;
  std::vector<std::size_t> idx;
  std::function<void(std::size_t)> extend = [&](std::size_t from) {
    if (!idx.empty()) {
      std::vector<Bidegree> f;
      for (auto i : idx) f.push_back(degrees[i]);
      profiles.push_back(std::move(f));
    }
    if (static_cast<int>(idx.size()) == max_factors) return;
    for (std::size_t i = from; i < degrees.size(); ++i) {
      idx.push_back(i);
      extend(i);
      idx.pop_back();
    }
  };
  extend(0);

  std::vector<RingSpec> rings;
  for (int m = 1; m <= max_block; ++m)
    for (int n = 1; n <= max_block; ++n) rings.push_back(RingSpec::make(m, n));

  std::vector<Ledger> ledgers(rings.size(), Ledger(names));
  std::vector<std::string> labels;
  for (const auto& ring : rings) labels.push_back("ring " + std::to_string(ring.m) + " " + std::to_string(ring.n));

  parallel_for(rings.size(), [&](std::size_t k) {
    const RingSpec& ring = rings[k];
    Ledger& ledger = ledgers[k];
    for (const auto& factors : profiles) {
      const FactorProfile profile(factors);
      const HypersurfaceVerdict v = classify(profile, ring);
      ledger.check(names[0], (v.case_label != CaseLabel::None) == (profile.b() == 0 || profile.beta2() > 0));
      if (v.case_trace == CaseTrace::Case4 || v.case_trace == CaseTrace::Case5)
        ledger.check(names[1], v.grade_q == ring.n - 1 && v.mgrade_q == ring.n && !v.maximal_depth);
    }
    for (BoxWalk w(std::vector<int>(ring.num_vars(), 0), std::vector<int>(ring.num_vars(), max_degree)); !w.done();
         w.next()) {
      const Monomial f(w.point());
      if (f.is_one()) continue;
      ledger.guarded(names[2], [&] { return monomial_crosscheck(f, ring); });
    }
  });
  return merge("hypersurface", 0, names, ledgers, labels);
}

}  // namespace bigrade
