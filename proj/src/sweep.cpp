#include "arcfan/sweep.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

#include "arcfan/intfactor.hpp"
#include "arcfan/ioutil.hpp"

namespace arcfan {

std::vector<QuadExt> enumerate_A(int k, int m, bool dedupe) {
  if (m != 1 && m != 2) throw std::invalid_argument("unsupported exponent m");
  if (k < 1) throw std::invalid_argument("bound k must be >= 1");
  std::vector<QuadExt> out;
  for (long j = 1; j <= k; ++j) {
    long top = m == 1 ? j : j * j;
    for (long i = 1; i < top; ++i) out.push_back(rationalize_radicand(i, j, m));
  }
  if (dedupe) {
    auto less = [](const QuadExt& a, const QuadExt& b) { return QuadExt::key_less(a, b); };
    std::set<QuadExt, decltype(less)> seen(less);
    std::vector<QuadExt> unique;
    unique.reserve(out.size());
    for (auto& v : out)
      if (seen.insert(v).second) unique.push_back(std::move(v));
    out = std::move(unique);
  }
  return out;
}

namespace {

struct Outcome {
  bool irreducible = false;
  std::string pipeline;
  std::string method;
  std::string failure_reason;
  nlohmann::ordered_json failure_evidence;
};

struct ValueResult {
  Outcome plus, minus;
};

Outcome test_instance(const MultiPoly& h, const QuadExt& w0) {
  Outcome o;
  o.pipeline = w0.is_rational() ? "rational_substitution" : "quadext_substitution";
  MultiPoly specialized = h.substitute({{'w', w0}});
  bool rational = true;
  for (const auto& [m, c] : specialized.terms()) rational &= c.is_rational();
  if (!rational) {
    // h is even in w, so this branch indicates a real anomaly; surface it.
    o.pipeline = "quadext_escalation";
    o.failure_reason = "irrational coefficients survive the substitution";
    o.failure_evidence = {{"note", "multivariate irreducibility over Q(sqrt d) is not covered"}};
    return o;
  }
  if (specialized.degree_in('x') != 6) {
    o.failure_reason = "degree in x dropped below 6";
    o.failure_evidence = {{"degree", specialized.degree_in('x')}};
    return o;
  }
  IrreducibilityEvidence ev = specialize_with_fallback(specialized, 'x');
  if (ev.verdict == Verdict::irreducible) {
    o.irreducible = true;
    o.method = ev.sub ? to_string(ev.sub->method) : to_string(ev.method);
  } else {
    o.failure_reason = "irreducibility inconclusive at every fallback point";
    o.failure_evidence = ev.to_json();
  }
  return o;
}

nlohmann::ordered_json outcome_to_json(const Outcome& o) {
  nlohmann::ordered_json j;
  j["ok"] = o.irreducible;
  j["pipeline"] = o.pipeline;
  if (!o.method.empty()) j["method"] = o.method;
  if (!o.failure_reason.empty()) {
    j["reason"] = o.failure_reason;
    j["evidence"] = o.failure_evidence;
  }
  return j;
}

Outcome outcome_from_json(const nlohmann::json& j) {
  Outcome o;
  o.irreducible = j.at("ok").get<bool>();
  o.pipeline = j.at("pipeline").get<std::string>();
  if (j.contains("method")) o.method = j.at("method").get<std::string>();
  if (j.contains("reason")) {
    o.failure_reason = j.at("reason").get<std::string>();
    o.failure_evidence = j.at("evidence");
  }
  return o;
}

std::string config_fingerprint(const SweepConfig& c) {
  return "k1=" + std::to_string(c.k1) + ";k2=" + std::to_string(c.k2) +
         ";dedupe=" + (c.dedupe ? "1" : "0");
}

}  // namespace

nlohmann::ordered_json SweepReport::to_json() const {
  nlohmann::ordered_json j;
  j["total_enumerated_with_multiplicity"] = total_enumerated_with_multiplicity;
  j["distinct_values"] = distinct_values;
  j["polynomials_tested"] = polynomials_tested;
  j["irreducible_count"] = irreducible_count;
  j["h_even_in_w"] = h_even_in_w;
  j["partial"] = partial;
  j["resumed_values"] = resumed_values;
  nlohmann::ordered_json pc;
  for (const auto& [k, v] : pipeline_counts) pc[k] = v;
  j["pipeline_counts"] = pc;
  nlohmann::ordered_json fs = nlohmann::ordered_json::array();
  for (const auto& f : failures)
    fs.push_back({{"index", f.index},
                  {"w0", f.w0},
                  {"sign", f.sign},
                  {"reason", f.reason},
                  {"evidence", f.evidence}});
  j["failures"] = fs;
  j["wall_time_seconds"] = wall_time_seconds;
  return j;
}

std::string SweepReport::table() const {
  std::string t;
  t += "sweep summary\n";
  t += "  enumerated (+- with multiplicity): " + std::to_string(total_enumerated_with_multiplicity) + "\n";
  t += "  distinct values:                   " + std::to_string(distinct_values) + "\n";
  t += "  polynomials tested:                " + std::to_string(polynomials_tested) + "\n";
  t += "  certified irreducible:             " + std::to_string(irreducible_count) + "\n";
  t += "  failures:                          " + std::to_string(failures.size()) + "\n";
  t += std::string("  h even in w:                       ") + (h_even_in_w ? "yes" : "no") + "\n";
  for (const auto& [k, v] : pipeline_counts)
    t += "    " + k + ": " + std::to_string(v) + "\n";
  if (partial) t += "  note: partial run (instance cap reached)\n";
  t += "  wall time: " + std::to_string(wall_time_seconds) + " s\n";
  return t;
}

SweepReport run_sweep(const SweepConfig& config) {
  auto t0 = std::chrono::steady_clock::now();
  if (config.worker_count < 1) throw std::invalid_argument("worker_count must be >= 1");

  std::vector<QuadExt> raw = enumerate_A(config.k1, 1, false);
  {
    std::vector<QuadExt> quad = enumerate_A(config.k2, 2, false);
    raw.insert(raw.end(), quad.begin(), quad.end());
  }
  long raw_count = static_cast<long>(raw.size());

  std::vector<QuadExt> values;
  if (config.dedupe) {
    auto less = [](const QuadExt& a, const QuadExt& b) { return QuadExt::key_less(a, b); };
    std::set<QuadExt, decltype(less)> seen(less);
    for (auto& v : raw)
      if (seen.insert(v).second) values.push_back(std::move(v));
  } else {
    values = std::move(raw);
  }

  const MultiPoly& h = eliminate_three_fan();
  const bool h_even = poly_even_in(h, 'w');

  size_t value_limit = values.size();
  if (config.max_instances > 0)
    value_limit = std::min<size_t>(value_limit,
                                   static_cast<size_t>((config.max_instances + 1) / 2));

  std::vector<ValueResult> results(values.size());
  std::vector<char> done(values.size(), 0);

  // Resume from a matching checkpoint.
  long resumed = 0;
  if (!config.checkpoint_path.empty()) {
    std::ifstream in(config.checkpoint_path);
    if (in) {
      nlohmann::json ck = nlohmann::json::parse(in, nullptr, false);
      if (!ck.is_discarded() && ck.value("fingerprint", "") == config_fingerprint(config)) {
        for (const auto& entry : ck.at("done")) {
          size_t idx = entry.at("i").get<size_t>();
          if (idx >= values.size()) continue;
          results[idx].plus = outcome_from_json(entry.at("plus"));
          results[idx].minus = outcome_from_json(entry.at("minus"));
          done[idx] = 1;
          ++resumed;
        }
      }
    }
  }

  std::mutex progress_mutex;
  long completed_since_checkpoint = 0;
  auto write_checkpoint = [&]() {
    nlohmann::ordered_json ck;
    ck["fingerprint"] = config_fingerprint(config);
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (size_t i = 0; i < values.size(); ++i) {
      if (!done[i]) continue;
      entries.push_back({{"i", i},
                         {"plus", outcome_to_json(results[i].plus)},
                         {"minus", outcome_to_json(results[i].minus)}});
    }
    ck["done"] = entries;
    write_file_atomic(config.checkpoint_path, ck.dump());
  };

  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      size_t idx = next.fetch_add(1);
      if (idx >= value_limit) return;
      if (done[idx]) continue;
      ValueResult r;
      r.plus = test_instance(h, values[idx]);
      r.minus = h_even ? r.plus : test_instance(h, -values[idx]);
      {
        std::lock_guard<std::mutex> lock(progress_mutex);
        results[idx] = std::move(r);
        done[idx] = 1;
        if (!config.checkpoint_path.empty() &&
            ++completed_since_checkpoint >= config.checkpoint_every) {
          completed_since_checkpoint = 0;
          write_checkpoint();
        }
      }
    }
  };

  if (config.worker_count == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < config.worker_count; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (!config.checkpoint_path.empty()) write_checkpoint();

  // Deterministic aggregation in value order.
  SweepReport report;
  report.total_enumerated_with_multiplicity = 2 * raw_count;
  report.distinct_values = static_cast<long>(values.size());
  report.h_even_in_w = h_even;
  report.partial = value_limit < values.size();
  report.resumed_values = resumed;
  for (size_t i = 0; i < value_limit; ++i) {
    if (!done[i]) continue;
    for (int sign : {1, -1}) {
      const Outcome& o = sign > 0 ? results[i].plus : results[i].minus;
      ++report.polynomials_tested;
      ++report.pipeline_counts[o.pipeline];
      if (o.irreducible) {
        ++report.irreducible_count;
        ++report.pipeline_counts["decided_by_" + o.method];
      } else {
        report.failures.push_back({static_cast<long>(i), values[i].str(), sign,
                                   o.failure_reason, o.failure_evidence});
      }
    }
  }

  report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!config.output_path.empty())
    write_file_atomic(config.output_path, report.to_json().dump(2) + "\n");
  return report;
}

Certificate verify_nonagon_corollary() {
  ExactFan fan;
  fan.n = 3;
  fan.p = QuadExt(Rational(1, 2));
  fan.kind = DataKind::central_distances;
  fan.values = {QuadExt(1), QuadExt(1), QuadExt(1)};
  Certificate cert = certify_nonconstructible(fan);

  // Re-validate the certificate from scratch.
  if (cert.verdict != CertVerdict::nonconstructible)
    throw std::logic_error("nonagon certificate is not nonconstructible");
  if (cert.witness_poly != "8*x^3 - 6*x - 1")
    throw std::logic_error("unexpected nonagon witness: " + cert.witness_poly);
  UniPoly witness = MultiPoly::parse(cert.witness_poly).to_unipoly('x');
  if (witness.degree() != 3 || cert.degree != 3)
    throw std::logic_error("unexpected nonagon witness degree");
  IrreducibilityEvidence recheck = univariate_irreducible_over_Q(witness);
  if (recheck.verdict != Verdict::irreducible)
    throw std::logic_error("nonagon witness fails independent irreducibility recheck");
  // cos(pi/9) is the fan quantity; it must be a root of the witness.
  double root = std::cos(3.141592653589793238462643 / 9.0);
  if (std::abs(witness.eval_double(root)) > 1e-12)
    throw std::logic_error("cos(pi/9) is not a root of the nonagon witness");
  return cert;
}

}  // namespace arcfan
