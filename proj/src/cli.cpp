#include "arcfan/cli.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include <CLI11.hpp>

#include "arcfan/fangeom.hpp"
#include "arcfan/ioutil.hpp"
#include "arcfan/sweep.hpp"

namespace arcfan::cli {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Exact cos(t*pi) for the small denominators where the value is rational or
// quadratic; anything else is handled numerically by the caller.
std::optional<QuadExt> exact_cos_pi_times(Rational t) {
  // cos has period 2 in t and cos((2-t)pi) = cos(t*pi).
  BigInt whole = t.num() / t.den();
  t -= Rational(whole - whole % 2);
  if (t.sign() < 0) t += Rational(2);
  if (t > Rational(1)) t = Rational(2) - t;

  const BigInt& num = t.num();
  const BigInt& den = t.den();
  auto rat = [](long long n, long long d) { return QuadExt(Rational(n, d)); };
  auto quad = [](long long a, long long b, long long d, long long div) {
    return QuadExt(Rational(a, div), Rational(b, div), d);
  };
  if (den == 1) return num == 0 ? rat(1, 1) : rat(-1, 1);
  if (den == 2) return rat(0, 1);
  if (den == 3) return num == 1 ? rat(1, 2) : rat(-1, 2);
  if (den == 4) return num == 1 ? quad(0, 1, 2, 2) : quad(0, -1, 2, 2);
  if (den == 5) {
    if (num == 1) return quad(1, 1, 5, 4);
    if (num == 2) return quad(-1, 1, 5, 4);
    if (num == 3) return quad(1, -1, 5, 4);
    return quad(-1, -1, 5, 4);
  }
  if (den == 6) return num == 1 ? quad(0, 1, 3, 2) : quad(0, -1, 3, 2);
  return std::nullopt;
}

struct AngleInput {
  double delta = 0;
  std::optional<QuadExt> exact_p;
};

// Accepts "q*pi" (rational q), "pi", or a plain radian value.
AngleInput parse_delta(const std::string& text, std::ostream& err) {
  AngleInput a;
  auto pos = text.find("pi");
  if (pos == std::string::npos) {
    size_t used = 0;
    a.delta = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument("bad angle literal: " + text);
    return a;
  }
  if (text.substr(pos) != "pi") throw std::invalid_argument("bad angle literal: " + text);
  std::string head = text.substr(0, pos);
  while (!head.empty() && head.back() == ' ') head.pop_back();
  Rational q(1);
  if (!head.empty()) {
    if (head.back() != '*') throw std::invalid_argument("expected q*pi: " + text);
    q = Rational::parse(head.substr(0, head.size() - 1));
  }
  a.delta = q.to_double() * kPi;
  a.exact_p = exact_cos_pi_times(q / Rational(2));
  if (!a.exact_p)
    err << "warning: cos(" << q.str() << "*pi/2) has no rational or quadratic form; "
        << "the angle is handled numerically\n";
  return a;
}

std::vector<std::optional<QuadExt>> parse_exact_values(const std::vector<std::string>& texts) {
  std::vector<std::optional<QuadExt>> out;
  out.reserve(texts.size());
  for (const auto& t : texts) {
    if (t == "general" || t == "_")
      out.push_back(std::nullopt);
    else
      out.push_back(QuadExt::parse(t));
  }
  return out;
}

std::vector<double> parse_double_values(const std::vector<std::string>& texts) {
  std::vector<double> out;
  out.reserve(texts.size());
  for (const auto& t : texts) {
    size_t used = 0;
    double v = std::stod(t, &used);
    if (used != t.size()) {
      // exact scalar forms are welcome here too
      v = QuadExt::parse(t).to_double();
    }
    out.push_back(v);
  }
  return out;
}

void emit(const std::string& content, const std::string& out_path, std::ostream& out) {
  if (out_path.empty())
    out << content;
  else
    write_file_atomic(out_path, content);
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact polynomial certificates and numeric solving for polygons on a circular arc"};
  app.name("arcfan");
  app.require_subcommand(1);

  // poly
  auto* poly = app.add_subcommand("poly", "build and print the polynomial families");
  poly->require_subcommand(1);
  int gk_k = 0;
  auto* poly_gk = poly->add_subcommand("gk", "multiple-angle polynomial G_k(u)");
  poly_gk->add_option("k", gk_k, "number of equal sides")->required();
  int fam_k = 0;
  std::string fam_p;
  bool fam_json = false;
  auto* poly_even = poly->add_subcommand("even", "quadratic-in-y family for (1,...,1,c)");
  poly_even->add_option("k", fam_k, "odd k >= 3")->required();
  poly_even->add_option("p", fam_p, "exact cos(delta/2), e.g. 1/2 or 1/2*sqrt(2)")->required();
  poly_even->add_flag("--json", fam_json, "print the JSON term list");
  auto* poly_odd = poly->add_subcommand("odd", "quadratic-in-y family for (1,...,1,c,c)");
  poly_odd->add_option("k", fam_k, "odd k >= 3")->required();
  poly_odd->add_option("p", fam_p, "exact cos(delta/2)")->required();
  poly_odd->add_flag("--json", fam_json, "print the JSON term list");
  std::vector<std::string> h_at;
  bool h_json = false;
  auto* poly_h = poly->add_subcommand("h", "3-fan elimination polynomial h(y,z,w,x)");
  poly_h->add_option("--at", h_at, "evaluate at exact scalars y z w")->expected(3);
  poly_h->add_flag("--json", h_json, "print the JSON term list");
  poly_gk->add_flag("--json", fam_json, "print the JSON term list");

  // certify
  auto* certify = app.add_subcommand("certify", "constructibility certificate for a fan");
  int cert_n = 0;
  std::string cert_p, cert_delta, cert_out;
  std::vector<std::string> cert_dist, cert_sides;
  certify->add_option("--n", cert_n, "number of sides")->required();
  auto* cert_p_opt = certify->add_option("--p", cert_p, "exact cos(delta/2)");
  auto* cert_delta_opt =
      certify->add_option("--delta", cert_delta, "angle as q*pi with rational q");
  cert_p_opt->excludes(cert_delta_opt);
  auto* cert_d_opt = certify->add_option("--distances", cert_dist,
                                         "exact central distances ('general' for symbolic)");
  auto* cert_s_opt = certify->add_option("--side-lengths", cert_sides,
                                         "exact side lengths ('general' for symbolic)");
  cert_d_opt->excludes(cert_s_opt);
  certify->add_option("--out", cert_out, "write the certificate JSON to a file");

  // solve
  auto* solve = app.add_subcommand("solve", "solve a fan numerically and render it");
  int solve_n = 0;
  std::string solve_p, solve_delta, solve_out, solve_format = "svg";
  double solve_tol = 1e-12;
  std::vector<std::string> solve_dist, solve_sides;
  solve->add_option("--n", solve_n, "number of sides")->required();
  auto* solve_p_opt = solve->add_option("--p", solve_p, "exact cos(delta/2)");
  auto* solve_delta_opt =
      solve->add_option("--delta", solve_delta, "angle as q*pi or a radian value");
  solve_p_opt->excludes(solve_delta_opt);
  auto* solve_d_opt = solve->add_option("--distances", solve_dist, "central distances");
  auto* solve_s_opt = solve->add_option("--side-lengths", solve_sides, "side lengths");
  solve_d_opt->excludes(solve_s_opt);
  solve->add_option("--tol", solve_tol, "bisection tolerance");
  solve->add_option("--out", solve_out, "output file (default: stdout)");
  solve->add_option("--format", solve_format, "svg or csv")
      ->check(CLI::IsMember({"svg", "csv"}));

  // sweep
  auto* sweep = app.add_subcommand("sweep", "irreducibility sweep over the angle sets");
  SweepConfig cfg;
  bool no_dedupe = false, enumerate_only = false;
  sweep->add_option("--k1", cfg.k1, "bound for the rational set");
  sweep->add_option("--k2", cfg.k2, "bound for the square-root set");
  sweep->add_flag("--no-dedupe", no_dedupe, "keep duplicate values");
  sweep->add_option("--workers", cfg.worker_count, "worker thread count");
  sweep->add_option("--out", cfg.output_path, "report JSON path");
  sweep->add_option("--checkpoint", cfg.checkpoint_path, "resumable progress file");
  sweep->add_option("--checkpoint-every", cfg.checkpoint_every, "values per checkpoint");
  sweep->add_option("--max-instances", cfg.max_instances, "stop after this many instances");
  sweep->add_flag("--enumerate-only", enumerate_only, "count the enumeration and exit");

  // nonagon
  auto* nonagon = app.add_subcommand("nonagon", "certificate for the regular-nonagon fan");
  std::string nonagon_out;
  nonagon->add_option("--out", nonagon_out, "write the certificate JSON to a file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (poly->parsed()) {
      if (poly_gk->parsed()) {
        UniPoly g = cos_multiple_angle(gk_k);
        out << (fam_json ? MultiPoly::from_unipoly(g).to_json().dump() : g.str()) << "\n";
      } else if (poly_even->parsed() || poly_odd->parsed()) {
        QuadExt p = QuadExt::parse(fam_p);
        FanAnglePoly fam =
            poly_even->parsed() ? build_even_poly(fam_k, p) : build_odd_poly(fam_k, p);
        out << (fam_json ? fam.poly.to_json().dump() : fam.poly.str()) << "\n";
      } else if (poly_h->parsed()) {
        MultiPoly h = eliminate_three_fan();
        if (!h_at.empty()) {
          h = h.substitute({{'y', QuadExt::parse(h_at[0])},
                            {'z', QuadExt::parse(h_at[1])},
                            {'w', QuadExt::parse(h_at[2])}});
        }
        out << (h_json ? h.to_json().dump() : h.str()) << "\n";
      }
      return 0;
    }

    if (certify->parsed()) {
      ExactFan fan;
      fan.n = cert_n;
      if (!cert_p.empty()) {
        fan.p = QuadExt::parse(cert_p);
      } else if (!cert_delta.empty()) {
        AngleInput a = parse_delta(cert_delta, err);
        if (!a.exact_p)
          throw std::invalid_argument("certify needs an exact angle (rational or quadratic p)");
        fan.p = *a.exact_p;
      } else {
        throw std::invalid_argument("certify needs --p or --delta");
      }
      if (!cert_dist.empty()) {
        fan.kind = DataKind::central_distances;
        fan.values = parse_exact_values(cert_dist);
      } else if (!cert_sides.empty()) {
        fan.kind = DataKind::side_lengths;
        fan.values = parse_exact_values(cert_sides);
      } else {
        throw std::invalid_argument("certify needs --distances or --side-lengths");
      }
      Certificate cert = certify_nonconstructible(fan);
      emit(cert.to_json().dump(2) + "\n", cert_out, out);
      return 0;
    }

    if (solve->parsed()) {
      DataKind kind =
          !solve_sides.empty() ? DataKind::side_lengths : DataKind::central_distances;
      std::vector<double> values =
          parse_double_values(kind == DataKind::side_lengths ? solve_sides : solve_dist);
      if (values.empty()) throw std::invalid_argument("solve needs --distances or --side-lengths");
      FanSpec spec;
      if (!solve_p.empty()) {
        spec = FanSpec::from_exact_angle(solve_n, kind, QuadExt::parse(solve_p), values);
      } else if (!solve_delta.empty()) {
        AngleInput a = parse_delta(solve_delta, err);
        spec = a.exact_p ? FanSpec::from_exact_angle(solve_n, kind, *a.exact_p, values)
                         : FanSpec::from_delta(solve_n, kind, a.delta, values);
      } else {
        throw std::invalid_argument("solve needs --p or --delta");
      }
      FanSolution sol = solve_radius(spec, solve_tol);
      out << "radius: " << sol.radius << "\n";
      out << "half_angles:";
      for (double a : sol.half_angles) out << " " << a;
      out << "\n";
      std::string rendered =
          render(sol, spec, solve_format == "svg" ? RenderFormat::svg : RenderFormat::csv);
      if (solve_out.empty())
        out << rendered;
      else
        write_file_atomic(solve_out, rendered);
      return 0;
    }

    if (sweep->parsed()) {
      cfg.dedupe = !no_dedupe;
      if (enumerate_only) {
        std::vector<QuadExt> all = enumerate_A(cfg.k1, 1, false);
        long n1 = static_cast<long>(all.size());
        {
          std::vector<QuadExt> quad = enumerate_A(cfg.k2, 2, false);
          all.insert(all.end(), quad.begin(), quad.end());
        }
        long n2 = static_cast<long>(all.size()) - n1;
        long distinct = n1 + n2;
        if (cfg.dedupe) {
          std::sort(all.begin(), all.end(), QuadExt::key_less);
          distinct = static_cast<long>(std::unique(all.begin(), all.end()) - all.begin());
        }
        out << "rational values (with multiplicity): " << n1 << "\n";
        out << "square-root values (with multiplicity): " << n2 << "\n";
        out << "distinct values: " << distinct << "\n";
        out << "total +- instances: " << 2 * (n1 + n2) << "\n";
        return 0;
      }
      SweepReport report = run_sweep(cfg);
      out << report.table();
      return report.failures.empty() ? 0 : 1;
    }

    if (nonagon->parsed()) {
      Certificate cert = verify_nonagon_corollary();
      emit(cert.to_json().dump(2) + "\n", nonagon_out, out);
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace arcfan::cli
