#include "cli.hpp"

#include <json.hpp>

#include "bigrade/checks.hpp"
#include "bigrade/error.hpp"
#include "bigrade/filtration.hpp"
#include "bigrade/hypersurface.hpp"
#include "bigrade/local_cohomology.hpp"
#include "bigrade/text_format.hpp"

namespace bigrade::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kSchema = 1;

Json header(const std::string& command) {
  Json j;
  j["schema"] = kSchema;
  j["command"] = command;
  return j;
}

Json ring_json(const RingSpec& ring) { return Json{{"m", ring.m}, {"n", ring.n}, {"char", ring.characteristic}}; }

Json ideal_json(const MonomialIdeal& ideal) {
  Json gens = Json::array();
  for (const auto& g : ideal.gens()) gens.push_back(render_monomial(ideal.ring(), g));
  return gens;
}

Json primes_json(const std::vector<PrimeSupport>& primes, const RingSpec& ring) {
  Json out = Json::array();
  for (const auto& p : primes) out.push_back(p.to_string(ring));
  return out;
}

Json dim_json(const std::optional<std::int64_t>& value) {
  return value ? Json(*value) : Json("infinite");
}

AxisIdeal parse_axis(const std::string& name, const RingSpec& ring) {
  if (name == "Q") return AxisIdeal::y_block(ring);
  if (name == "P") return AxisIdeal::x_block(ring);
  if (name == "all") return AxisIdeal::all(ring);
  throw ParseError(0, 0, "axis must be P, Q or all");
}

MonomialIdeal load_ideal(const JobSpec& job) {
  if (job.input.empty()) throw ParseError(0, 0, "an ideal file is required");
  return read_ideal_file(job.input, job.characteristic);
}

Json ideal_header(const std::string& command, const MonomialIdeal& ideal, const AxisIdeal* axis) {
  Json j = header(command);
  j["ring"] = ring_json(ideal.ring());
  if (axis != nullptr) j["axis"] = axis->label(ideal.ring());
  j["ideal"] = ideal_json(ideal);
  return j;
}

Json run_analyze(const JobSpec& job) {
  const MonomialIdeal ideal = load_ideal(job);
  const AxisIdeal axis = parse_axis(job.axis, ideal.ring());
  const InvariantReport r = analyze(ideal, axis);
  Json j = ideal_header("analyze", ideal, &axis);
  j["grade"] = r.grade;
  j["mgrade"] = r.mgrade;
  j["cd"] = r.cd;
  j["dim"] = r.dim;
  j["depth"] = r.depth;
  j["maximal_depth"] = r.maximal_depth;
  j["witness_prime"] = r.witness_prime ? Json(r.witness_prime->to_string(ideal.ring())) : Json(nullptr);
  j["cm_wrt_axis"] = r.cm_wrt_axis;
  j["cm_ordinary"] = r.cm_ordinary;
  j["associated_primes"] = primes_json(r.associated_primes, ideal.ring());
  return j;
}

Json components_json(const std::vector<PrimaryComponent>& components, const RingSpec& ring) {
  Json out = Json::array();
  for (const auto& c : components)
    out.push_back(Json{{"component", ideal_json(c.component)}, {"radical", c.radical.to_string(ring)}});
  return out;
}

Json run_decompose(const JobSpec& job) {
  const MonomialIdeal ideal = load_ideal(job);
  Json j = ideal_header("decompose", ideal, nullptr);
  j["irreducible_components"] =
      ideal.is_zero() ? Json::array() : components_json(irreducible_decomposition(ideal), ideal.ring());
  j["primary_components"] = components_json(primary_decomposition(ideal), ideal.ring());
  j["associated_primes"] = primes_json(associated_primes(ideal), ideal.ring());
  j["minimal_primes"] = primes_json(minimal_primes(ideal), ideal.ring());
  j["radical"] = ideal_json(radical(ideal));
  j["dim"] = dim_quotient(ideal);
  return j;
}

Json run_filtration(const JobSpec& job) {
  const MonomialIdeal ideal = load_ideal(job);
  const AxisIdeal axis = parse_axis(job.axis, ideal.ring());
  const FiltrationLadder ladder = dimension_filtration(ideal, axis);
  const auto blocks = ass_quotients(ladder);
  const MgradeConstancy constancy = mgrade_constancy(ideal, axis);
  Json j = ideal_header("filtration", ideal, &axis);
  Json steps = Json::array();
  for (std::size_t i = 0; i < ladder.steps.size(); ++i) {
    steps.push_back(Json{{"ideal", ideal_json(ladder.steps[i].ideal)},
                         {"cd", ladder.steps[i].cd},
                         {"ass_quotient", primes_json(blocks[i], ideal.ring())}});
  }
  j["steps"] = steps;
  j["mgrade_constancy"] = Json{{"holds", constancy.holds}, {"value", constancy.value}, {"per_step", constancy.per_step}};
  return j;
}

Json run_seqcm(const JobSpec& job) {
  const MonomialIdeal ideal = load_ideal(job);
  const AxisIdeal axis = parse_axis(job.axis, ideal.ring());
  const SeqCmVerdict v = sequentially_cm(ideal, axis);
  Json j = ideal_header("seqcm", ideal, &axis);
  j["sequentially_cm"] = v.verdict;
  Json steps = Json::array();
  for (const auto& s : v.per_step) steps.push_back(Json{{"grade", s.grade}, {"cd", s.cd}, {"is_cm", s.is_cm}});
  j["per_step"] = steps;
  return j;
}

Json run_lc(const JobSpec& job) {
  const MonomialIdeal ideal = load_ideal(job);
  const AxisIdeal axis = parse_axis(job.axis, ideal.ring());
  const LCReport r = lc_report(ideal, axis, job.index);
  Json j = ideal_header("lc", ideal, &axis);
  j["index"] = r.index;
  j["finitely_generated"] = r.finitely_generated;
  j["is_zero"] = r.is_zero;
  j["total_dim"] = dim_json(r.total_dim);
  Json fibers = Json::array();
  for (const auto& f : r.per_fiber) {
    Json fj{{"pattern", f.pattern},
            {"members", f.member_count},
            {"infinite_family", f.infinite_family},
            {"finite_length", f.finite_length},
            {"total_dim", dim_json(f.total_dim)}};
    fj["witness_degree"] = f.witness_degree ? Json(*f.witness_degree) : Json(nullptr);
    fibers.push_back(std::move(fj));
  }
  j["per_fiber"] = fibers;
  return j;
}

Json run_gencm(const JobSpec& job) {
  const MonomialIdeal ideal = load_ideal(job);
  const AxisIdeal axis = parse_axis(job.axis, ideal.ring());
  const GeneralizedCm g = generalized_cm(ideal, axis);
  Json j = ideal_header("gencm", ideal, &axis);
  j["generalized_cm"] = g.verdict;
  j["cd"] = g.cd;
  j["finitely_generated"] = g.finitely_generated;
  return j;
}

Json run_growth(const JobSpec& job) {
  const MonomialIdeal ideal = load_ideal(job);
  const AxisIdeal axis = parse_axis(job.axis, ideal.ring());
  Json j = ideal_header("growth", ideal, &axis);
  j["index"] = job.index;
  j["radii"] = job.radii;
  j["dims"] = growth_scan(ideal, axis, job.index, job.radii);
  return j;
}

RingSpec ring_option(const JobSpec& job) {
  if (job.ring.size() != 2) throw ParseError(0, 0, "--ring expects two integers m n");
  try {
    return RingSpec::make(job.ring[0], job.ring[1], job.characteristic);
  } catch (const Error& e) {
    throw ParseError(0, 0, e.what());
  }
}

Json run_hypersurface(const JobSpec& job) {
  const ProfileSpec given = !job.factors.empty() ? parse_profile_text(job.factors)
                           : !job.input.empty() ? read_profile_file(job.input)
                                                : throw ParseError(0, 0, "give --factors or a profile file");
  RingSpec ring;
  if (!job.ring.empty())
    ring = ring_option(job);
  else if (given.ring)
    ring = RingSpec::make(given.ring->m, given.ring->n, job.characteristic);
  else
    throw ParseError(0, 0, "no ring given (use --ring m n or a ring line)");

  const HypersurfaceVerdict v = classify(given.profile, ring);
  Json j = header("hypersurface");
  j["ring"] = ring_json(ring);
  Json factors = Json::array();
  for (const auto& f : given.profile.factors()) factors.push_back(Json::array({f.x, f.y}));
  j["factors"] = factors;
  j["alpha1"] = given.profile.alpha1();
  j["alpha2"] = given.profile.alpha2();
  j["beta1"] = given.profile.beta1();
  j["beta2"] = given.profile.beta2();
  j["maximal_depth"] = v.maximal_depth;
  j["grade"] = v.grade_q;
  j["mgrade"] = v.mgrade_q;
  j["case_label"] = to_string(v.case_label);
  j["case_trace"] = to_string(v.case_trace);
  return j;
}

Json run_crosscheck(const JobSpec& job) {
  Monomial f;
  RingSpec ring;
  if (!job.monomial.empty()) {
    ring = ring_option(job);
    f = parse_monomial(job.monomial, ring);
  } else {
    const MonomialIdeal ideal = load_ideal(job);
    if (ideal.gens().size() != 1) throw Error(ErrorKind::PreconditionFailed, "crosscheck needs a principal ideal");
    ring = ideal.ring();
    f = ideal.gens().front();
  }
  if (f.is_one()) throw Error(ErrorKind::BadProfile, "f must not be a unit");
  const HypersurfaceVerdict v = classify(monomial_profile(f, ring), ring);
  Json j = header("crosscheck");
  j["ring"] = ring_json(ring);
  j["monomial"] = render_monomial(ring, f);
  j["case_label"] = to_string(v.case_label);
  j["grade"] = v.grade_q;
  j["mgrade"] = v.mgrade_q;
  j["maximal_depth"] = v.maximal_depth;
  j["agrees"] = monomial_crosscheck(f, ring);
  return j;
}

Json suite_json(const SuiteReport& r) {
  Json props = Json::array();
  for (const auto& p : r.properties)
    props.push_back(Json{{"name", p.name}, {"checked", p.checked}, {"violations", p.violations}, {"examples", p.examples}});
  return Json{{"suite", r.suite},   {"seed", r.seed},   {"instances", r.instances}, {"violations", r.violations()},
              {"properties", props}, {"notes", r.notes}};
}

Json run_suite(const JobSpec& job, bool& passed) {
  if (job.count < 0) throw ParseError(0, 0, "--count must be nonnegative");
  std::vector<SuiteReport> reports;
  const bool all = job.suite == "all";
  if (all || job.suite == "properties") reports.push_back(property_suite(job.seed, job.count));
  if (all || job.suite == "oracle") reports.push_back(oracle_suite(job.seed, job.count));
  if (all || job.suite == "hypersurface") reports.push_back(hypersurface_suite());
  if (reports.empty()) throw ParseError(0, 0, "--suite must be properties, oracle, hypersurface or all");
  Json j = header("suite");
  Json list = Json::array();
  passed = true;
  for (const auto& r : reports) {
    passed = passed && r.passed();
    list.push_back(suite_json(r));
  }
  j["passed"] = passed;
  j["reports"] = list;
  return j;
}

Json error_json(const std::string& command, const Error& e) {
  Json j = header(command);
  Json err{{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
  if (const auto* pe = dynamic_cast<const ParseError*>(&e)) {
    err["line"] = pe->line();
    err["column"] = pe->column();
  }
  j["error"] = err;
  return j;
}

}  // namespace

RunResult run(const JobSpec& job) {
  RunResult result;
  Json out;
  try {
    bool passed = true;
    if (job.command == "analyze")
      out = run_analyze(job);
    else if (job.command == "decompose")
      out = run_decompose(job);
    else if (job.command == "filtration")
      out = run_filtration(job);
    else if (job.command == "seqcm")
      out = run_seqcm(job);
    else if (job.command == "lc")
      out = run_lc(job);
    else if (job.command == "gencm")
      out = run_gencm(job);
    else if (job.command == "growth")
      out = run_growth(job);
    else if (job.command == "hypersurface")
      out = run_hypersurface(job);
    else if (job.command == "crosscheck")
      out = run_crosscheck(job);
    else if (job.command == "suite")
      out = run_suite(job, passed);
    else
      throw ParseError(0, 0, "unknown command '" + job.command + "'");
    result.exit_code = passed ? kExitOk : kExitViolations;
  } catch (const Error& e) {
    out = error_json(job.command, e);
    result.exit_code = e.kind() == ErrorKind::ParseError ? kExitParse : kExitPrecondition;
  }
  result.output = out.dump(2) + "\n";
  return result;
}

}  // namespace bigrade::cli
