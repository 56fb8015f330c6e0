#include "rackbi/runner.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <random>
#include <set>
#include <sstream>
#include <utility>
#include <variant>

#include <json.hpp>

#include "rackbi/defcohom.hpp"
#include "rackbi/error.hpp"
#include "rackbi/json_io.hpp"
#include "rackbi/lodpir.hpp"
#include "rackbi/uar.hpp"

namespace rackbi {

namespace {

using nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

struct TaskResult {
  std::vector<CheckEntry> entries;
  ordered_json data;  // null when the task produces no extra data
};

struct Task {
  std::string key;
  std::function<TaskResult()> fn;
};

CheckEntry to_entry(const CheckReport& rep, double ms) {
  CheckEntry e;
  e.name = rep.name;
  e.pass = rep.pass;
  e.instances = rep.instances;
  e.counterexample = rep.counterexample;
  e.wall_ms = ms;
  return e;
}

double ms_since(const Clock::time_point& t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void add(TaskResult& tr, const std::function<CheckReport()>& fn) {
  const auto t0 = Clock::now();
  const CheckReport rep = fn();
  tr.entries.push_back(to_entry(rep, ms_since(t0)));
}

void add_all(TaskResult& tr,
             const std::function<std::vector<CheckReport>()>& fn) {
  const auto t0 = Clock::now();
  const std::vector<CheckReport> reps = fn();
  const double ms = ms_since(t0) / std::max<std::size_t>(reps.size(), 1);
  for (const CheckReport& rep : reps) tr.entries.push_back(to_entry(rep, ms));
}

ordered_json poly_json(const PolyFun<HPoly>& f) {
  ordered_json out = ordered_json::array();
  for (const auto& [e, v] : f.terms) {
    out.push_back(ordered_json::array({v.str(), e}));
  }
  return out;
}

ordered_json poly_json(const PolyFun<Rational>& f) {
  ordered_json out = ordered_json::array();
  for (const auto& [e, v] : f.terms) {
    out.push_back(ordered_json::array({rat_str(v), e}));
  }
  return out;
}

ordered_json basis_json(const std::vector<QVec>& basis) {
  ordered_json out = ordered_json::array();
  for (const QVec& v : basis) {
    ordered_json row = ordered_json::array();
    for (const Rational& c : v) row.push_back(rat_str(c));
    out.push_back(std::move(row));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Command sections. Each returns the checks it ran plus optional data; any
// Error thrown while constructing objects becomes a single failing entry so
// that the report is still written and the exit code is nonzero.

TaskResult validate_task(const LeibnizAlgebra& h) {
  TaskResult tr;
  const auto t0 = Clock::now();
  CheckReport rep("leibniz-identity");
  const std::vector<LeibnizViolation> bad = leibniz_violations(h.dim, h.c);
  rep.instances =
      static_cast<long long>(h.dim) * h.dim * h.dim;
  for (const LeibnizViolation& v : bad) {
    rep.fail("triple (" + std::to_string(v.i + 1) + "," +
             std::to_string(v.j + 1) + "," + std::to_string(v.k + 1) +
             "): left " + qvec_str(v.lhs) + ", right " + qvec_str(v.rhs));
  }
  tr.entries.push_back(to_entry(rep, ms_since(t0)));
  return tr;
}

TaskResult validate_rack_task(const FiniteRack& x) {
  TaskResult tr;
  const auto t0 = Clock::now();
  CheckReport rep("rack-table-valid");
  rep.instances = static_cast<long long>(x.size) * x.size;
  validate_rack(x);  // already held at ingest; counted here for the report
  tr.entries.push_back(to_entry(rep, ms_since(t0)));
  return tr;
}

TaskResult ideals_task(const LeibnizAlgebra& h) {
  TaskResult tr;
  const Subspace squares = squares_ideal(h);
  const Subspace center = left_center(h);

  const auto t0 = Clock::now();
  CheckReport inside("squares-ideal-inside-left-center");
  inside.instances = squares.dim();
  std::vector<QVec> joint = center.basis;
  joint.insert(joint.end(), squares.basis.begin(), squares.basis.end());
  if (span(h.dim, joint).dim() != center.dim()) {
    inside.fail("the squares ideal is not contained in the left center");
  }
  tr.entries.push_back(to_entry(inside, ms_since(t0)));

  add(tr, [&h]() {
    CheckReport rep("canonical-quotient-is-lie");
    const Quotient q = canonical_quotient(h);  // validated on construction
    rep.instances = q.g.dim;
    return rep;
  });

  const Quotient q = canonical_quotient(h);
  tr.data = ordered_json::object();
  tr.data["squares_dim"] = squares.dim();
  tr.data["left_center_dim"] = center.dim();
  tr.data["quotient_dim"] = q.g.dim;
  tr.data["squares_basis"] = basis_json(squares.basis);
  tr.data["left_center_basis"] = basis_json(center.basis);
  return tr;
}

TaskResult rack_check_algebra_task(const LeibnizAlgebra& h, int k) {
  TaskResult tr;
  const Uar a = uar_canonical(h, k);
  add_all(tr, [&a]() { return verify_rack_axioms(a.b); });
  add_all(tr, [&a]() { return verify_augmented(a); });
  add(tr, [&a]() { return yang_baxter_check(a.b); });
  add(tr, [&a]() { return yd_check(a); });
  tr.data = ordered_json::object();
  tr.data["coalgebra_dim"] = a.b.dim;
  tr.data["degree_cap"] = k;
  return tr;
}

TaskResult rack_check_rack_task(const FiniteRack& x) {
  TaskResult tr;
  const Bialg<Rational> b = rack_algebra(x);
  add_all(tr, [&b]() { return verify_rack_axioms(b); });
  add(tr, [&b]() { return yang_baxter_check(b); });
  tr.data = ordered_json::object();
  tr.data["coalgebra_dim"] = b.dim;
  return tr;
}

PolyFun<Rational> random_poly(const LeibnizAlgebra& h, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> vars(0, h.dim - 1);
  std::uniform_int_distribution<int> degree(0, 2);
  std::uniform_int_distribution<int> coeff(-3, 3);
  PolyFun<Rational> f = pf_zero<Rational>(h.dim);
  for (int t = 0; t < 3; ++t) {
    std::vector<int> e(static_cast<std::size_t>(h.dim), 0);
    const int d = degree(rng);
    for (int r = 0; r < d; ++r) e[static_cast<std::size_t>(vars(rng))] += 1;
    detail::pf_acc(f, e, Rational(coeff(rng)));
  }
  return f;
}

TaskResult star_task(const LeibnizAlgebra& h, const PolyFun<Rational>& f,
                     const PolyFun<Rational>& g, const RunConfig& cfg) {
  TaskResult tr;
  const PolyFun<HPoly> result = star(h, f, g, cfg.hbar_order);

  const auto t0 = Clock::now();
  CheckReport first_order("first-order-term-matches-poisson");
  const auto check_pair = [&](const PolyFun<Rational>& a,
                              const PolyFun<Rational>& b) {
    const PolyFun<HPoly> s = star(h, a, b, cfg.hbar_order);
    PolyFun<Rational> slice = pf_zero<Rational>(h.dim);
    for (const auto& [e, v] : s.terms) {
      const Rational c1 = v.coeff(1);
      detail::pf_acc(slice, e, c1);
    }
    PolyFun<Rational> bracket = poisson(h, a, b);
    pf_scale(bracket, Rational(-1));
    ++first_order.instances;
    if (!(slice == bracket)) {
      first_order.fail("h-linear slice " + pf_str(slice) +
                       " differs from minus the bracket " + pf_str(bracket));
    }
  };
  check_pair(f, g);
  std::mt19937_64 rng(cfg.seed);
  for (int rep = 0; rep < 5; ++rep) {
    check_pair(random_poly(h, rng), random_poly(h, rng));
  }
  tr.entries.push_back(to_entry(first_order, ms_since(t0)));

  const auto t1 = Clock::now();
  CheckReport expc("exponential-compatibility");
  for (int i = 0; i < h.dim && expc.pass; ++i) {
    for (int j = 0; j < h.dim; ++j) {
      const CheckReport one = exp_compat_check(h, qvec_unit(h.dim, i),
                                               qvec_unit(h.dim, j),
                                               cfg.hbar_order, cfg.hbar_order);
      expc.instances += one.instances;
      if (!one.pass) {
        expc.fail("basis pair (" + std::to_string(i + 1) + "," +
                  std::to_string(j + 1) + "): " + one.counterexample);
        break;
      }
    }
  }
  tr.entries.push_back(to_entry(expc, ms_since(t1)));

  tr.data = ordered_json::object();
  tr.data["result"] = poly_json(result);
  tr.data["poisson"] = poly_json(poisson(h, f, g));
  return tr;
}

TaskResult cohomology_task(const Bialg<Rational>& r) {
  TaskResult tr;
  tr.data = ordered_json::object();
  for (int n = 1; n <= 2; ++n) {
    add_all(tr, [&r, n]() { return verify_relations(r, n); });
    const CohomologyDims dims = cohomology(r, n);
    ordered_json d = ordered_json::object();
    d["cochains"] = dims.cochains;
    d["cocycles"] = dims.cocycles;
    d["coboundaries"] = dims.coboundaries;
    d["cohomology"] = dims.cohomology;
    tr.data["degree_" + std::to_string(n)] = std::move(d);
  }
  return tr;
}

TaskResult lp_check_task(const LeibnizAlgebra& h, const RunConfig& cfg) {
  TaskResult tr;
  const Uar a = uar_canonical(h, cfg.degree_cap);
  const int cap = std::max(cfg.filtration_cap, cfg.degree_cap);
  add(tr, [&]() { return euler_series_identity(a.q.g, cfg.filtration_cap); });
  add(tr, [&]() { return gamma_augmentation(a); });
  add(tr, [&]() { return gamma_module_map(a, cfg.filtration_cap); });
  add(tr, [&]() { return gamma_rack_morphism(a, cap); });
  add(tr, [&]() { return psi_rack_morphism(a, cap); });
  add(tr, [&]() { return primitive_bracket_check(a); });
  add(tr, [&]() {
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<int> bdist(
        0, static_cast<int>(a.basis.monomials.size()) - 1);
    const std::vector<PBWMonomial> words = pbw_words(a.q.g.dim, 1);
    std::uniform_int_distribution<std::size_t> wdist(0, words.size() - 1);
    std::uniform_int_distribution<int> cdist(-2, 2);
    std::vector<TensorRackElt> sample;
    for (int s = 0; s < 4; ++s) {
      TensorRackElt elt;
      for (int t = 0; t < 2; ++t) {
        tr_add(elt, tr_term(bdist(rng), words[wdist(rng)],
                            Rational(cdist(rng))));
      }
      sample.push_back(elt);
    }
    return tensor_self_distributivity(a, cap, sample);
  });
  return tr;
}

// ---------------------------------------------------------------------------

const LeibnizAlgebra* algebra_of(const ParsedInput& in) {
  if (const auto* h = std::get_if<LeibnizAlgebra>(&in)) return h;
  if (const auto* s = std::get_if<StarInput>(&in)) return &s->h;
  return nullptr;
}

Task guarded(std::string key, std::function<TaskResult()> fn) {
  Task t;
  t.key = key;
  t.fn = [key, fn = std::move(fn)]() -> TaskResult {
    try {
      return fn();
    } catch (const Error& e) {
      TaskResult tr;
      CheckEntry entry;
      entry.name = key + "-completes";
      entry.pass = false;
      entry.counterexample = e.what();
      tr.entries.push_back(std::move(entry));
      return tr;
    }
  };
  return t;
}

std::vector<Task> battery(const RunConfig& cfg, const ParsedInput& in) {
  const LeibnizAlgebra* h = algebra_of(in);
  const FiniteRack* rack = std::get_if<FiniteRack>(&in);
  const StarInput* st = std::get_if<StarInput>(&in);

  const auto need_algebra = [&]() -> const LeibnizAlgebra* {
    if (h == nullptr) {
      throw Error(Error::Code::ParseError,
                  "command '" + cfg.command + "' needs an algebra input");
    }
    return h;
  };

  const auto validate_t = [&]() {
    return h != nullptr ? guarded("validate", [h]() { return validate_task(*h); })
                        : guarded("validate", [rack]() {
                            return validate_rack_task(*rack);
                          });
  };
  const auto ideals_t = [&]() {
    const LeibnizAlgebra* alg = need_algebra();
    return guarded("ideals", [alg]() { return ideals_task(*alg); });
  };
  const auto rack_check_t = [&]() {
    if (h != nullptr) {
      const int k = cfg.degree_cap;
      return guarded("rack-check",
                     [h, k]() { return rack_check_algebra_task(*h, k); });
    }
    return guarded("rack-check",
                   [rack]() { return rack_check_rack_task(*rack); });
  };
  const auto star_t = [&]() {
    const LeibnizAlgebra* alg = need_algebra();
    PolyFun<Rational> f;
    PolyFun<Rational> g;
    if (st != nullptr) {
      f = st->f;
      g = st->g;
    } else {
      f = pf_coord<Rational>(alg->dim, 0);
      g = f;
    }
    return guarded("star", [alg, f, g, cfg]() {
      return star_task(*alg, f, g, cfg);
    });
  };
  const auto cohomology_t = [&]() {
    if (h != nullptr) {
      return guarded("cohomology", [h]() {
        return cohomology_task(uar_canonical(*h, 1).b);
      });
    }
    return guarded("cohomology", [rack]() {
      return cohomology_task(rack_algebra(*rack));
    });
  };
  const auto lp_check_t = [&]() {
    const LeibnizAlgebra* alg = need_algebra();
    return guarded("lp-check",
                   [alg, cfg]() { return lp_check_task(*alg, cfg); });
  };

  std::vector<Task> tasks;
  if (cfg.command == "validate") {
    tasks.push_back(validate_t());
  } else if (cfg.command == "ideals") {
    tasks.push_back(ideals_t());
  } else if (cfg.command == "rack-check") {
    tasks.push_back(rack_check_t());
  } else if (cfg.command == "star") {
    tasks.push_back(star_t());
  } else if (cfg.command == "cohomology") {
    tasks.push_back(cohomology_t());
  } else if (cfg.command == "lp-check") {
    tasks.push_back(lp_check_t());
  } else if (cfg.command == "report") {
    tasks.push_back(validate_t());
    if (h != nullptr) {
      tasks.push_back(ideals_t());
      tasks.push_back(rack_check_t());
      tasks.push_back(star_t());
      tasks.push_back(cohomology_t());
      tasks.push_back(lp_check_t());
    } else {
      tasks.push_back(rack_check_t());
      tasks.push_back(cohomology_t());
    }
  }
  return tasks;
}

std::string render(const RunConfig& cfg, const std::vector<CheckEntry>& checks,
                   const ordered_json& data) {
  ordered_json j;
  j["command"] = cfg.command;
  j["input"] = cfg.input;
  ordered_json conf;
  conf["degree_cap"] = cfg.degree_cap;
  conf["hbar_order"] = cfg.hbar_order;
  conf["filtration_cap"] = cfg.filtration_cap;
  conf["seed"] = cfg.seed;
  conf["parallel"] = cfg.parallel;
  j["config"] = std::move(conf);
  const bool all = std::all_of(checks.begin(), checks.end(),
                               [](const CheckEntry& e) { return e.pass; });
  j["status"] = all ? "pass" : "fail";
  if (checks.empty()) j["warning"] = "empty battery";
  ordered_json rows = ordered_json::array();
  for (const CheckEntry& e : checks) {
    ordered_json row;
    row["name"] = e.name;
    row["status"] = e.pass ? "pass" : "fail";
    row["instances"] = e.instances;
    if (e.counterexample.empty()) {
      row["counterexample"] = nullptr;
    } else {
      row["counterexample"] = e.counterexample;
    }
    // Null by design: a timed value would break byte-level determinism of
    // the report. The measured times travel on the timing channel.
    row["wall_time_ms"] = nullptr;
    rows.push_back(std::move(row));
  }
  j["checks"] = std::move(rows);
  if (!data.empty()) j["data"] = data;
  return j.dump(2) + "\n";
}

void validate_config(const RunConfig& cfg) {
  static const std::set<std::string> commands = {
      "validate", "ideals", "rack-check", "star",
      "cohomology", "lp-check", "report"};
  if (commands.find(cfg.command) == commands.end()) {
    throw Error(Error::Code::ParseError,
                "unknown command '" + cfg.command + "'");
  }
  if (cfg.degree_cap < 1 || cfg.hbar_order < 1 || cfg.filtration_cap < 1) {
    throw Error(Error::Code::ParseError, "caps must be >= 1");
  }
  if (cfg.input.empty()) {
    throw Error(Error::Code::ParseError, "missing input");
  }
}

}  // namespace

RunResult run(const RunConfig& config) {
  validate_config(config);
  const ParsedInput in = ingest(config.input);
  const std::vector<Task> tasks = battery(config, in);

  std::vector<TaskResult> results(tasks.size());
  if (config.parallel) {
    std::vector<std::future<TaskResult>> futures;
    futures.reserve(tasks.size());
    for (const Task& t : tasks) {
      futures.push_back(std::async(std::launch::async, t.fn));
    }
    for (std::size_t i = 0; i < futures.size(); ++i) {
      results[i] = futures[i].get();
    }
  } else {
    for (std::size_t i = 0; i < tasks.size(); ++i) results[i] = tasks[i].fn();
  }

  std::vector<CheckEntry> checks;
  ordered_json data = ordered_json::object();
  std::ostringstream timing;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    for (const CheckEntry& e : results[i].entries) {
      timing << e.name << ": " << e.wall_ms << " ms\n";
      checks.push_back(e);
    }
    if (!results[i].data.is_null()) data[tasks[i].key] = results[i].data;
  }

  RunResult out;
  out.exit_code = std::all_of(checks.begin(), checks.end(),
                              [](const CheckEntry& e) { return e.pass; })
                      ? 0
                      : 1;
  out.report = render(config, checks, data);
  out.timing = timing.str();
  return out;
}

std::string emit_report(const RunConfig& config,
                        const std::vector<CheckEntry>& checks) {
  return render(config, checks, ordered_json::object());
}

}  // namespace rackbi
