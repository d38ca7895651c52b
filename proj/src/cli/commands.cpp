#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>

#include "CLI11.hpp"
#include "mflab/arith.hpp"
#include "mflab/bmatrix.hpp"
#include "mflab/builtin_fields.hpp"
#include "mflab/cli.hpp"
#include "mflab/cusp.hpp"
#include "mflab/eisenstein.hpp"
#include "mflab/error.hpp"
#include "mflab/isogeny.hpp"
#include "mflab/leafnum.hpp"
#include "mflab/modeq.hpp"
#include "mflab/self_join.hpp"

namespace mflab::cli {

namespace {

struct Options {
  std::string out_path;
  int terms = 0;  // 0: per-command default
  bool no_cache = false;
  std::string cache_dir;
  double tol = 1e-9;
  double step = 1e-3;
  double time = 1.0;
};

struct Outcome {
  Json result;
  int code = 0;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

template <std::size_t N>
std::array<Complex, N> complex_list(const std::string& text, const std::string& what) {
  auto parts = split(text, ',');
  if (parts.size() != N) {
    throw Error(ErrorCode::kInvalidArgument, what + " needs " + std::to_string(N) + " comma-separated values");
  }
  std::array<Complex, N> out{};
  for (std::size_t k = 0; k < N; ++k) out[k] = parse_complex(parts[k]);
  return out;
}

template <class C>
Json complex_json(const C& values) {
  Json out = Json::array();
  for (const auto& z : values) out.push_back(to_json(z));
  return out;
}

Json cmatrix_json(const CMatrix2& m) {
  return Json::array({complex_json(m[0]), complex_json(m[1])});
}

MultiPoly modeq_monomial(int i, const std::array<int, 3>& e) {
  auto ring = modeq_ring(i);
  Monomial m;
  for (std::size_t k = 0; k < 3; ++k) m.set(k, static_cast<unsigned>(e[k]));
  return MultiPoly(ring, {{m, Rational(1)}});
}

Json modeq_json(const ModularEquation& q) {
  Json coeffs = Json::array();
  for (std::size_t k = 0; k < q.exponents.size(); ++k) {
    coeffs.push_back({{"monomial", to_json(modeq_monomial(q.i, q.exponents[k]))},
                      {"solver", to_json(q.solver_coefficients[k])},
                      {"chart", to_json(q.chart_coefficients[k])}});
  }
  return {{"d", q.d},
          {"i", q.i},
          {"psi", q.psi},
          {"order", q.order},
          {"verified_order", q.verified_order},
          {"convention", modeq_convention(q.i)},
          {"solver", to_json(q.solver)},
          {"chart", to_json(q.chart)},
          {"coefficients", coeffs}};
}

std::string variant_name(CuspPoint p, FourthPartial f) { return to_string(p) + "/" + to_string(f); }

Json cusp_ranks(long d, int i, long a, long b) {
  Json ranks = Json::object();
  for (auto p : {CuspPoint::kLeaf, CuspPoint::kLiteral}) {
    for (auto f : {FourthPartial::kY3, FourthPartial::kX3}) {
      ranks[variant_name(p, f)] = rank_rational(cusp_matrix(d, i, a, b, p, f));
    }
  }
  return ranks;
}

std::vector<std::pair<long, long>> divisor_pairs(long d) {
  std::vector<std::pair<long, long>> out;
  for (long b = 1; b * b < d; ++b) {
    if (d % b == 0) out.emplace_back(d / b, b);
  }
  return out;
}

class Cli {
 public:
  Cli(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(const std::vector<std::string>& args);

 private:
  int resolved_terms(int fallback) const {
    if (opts_.terms > 0) return opts_.terms;
    if (const char* env = std::getenv("MFLAB_TERMS"); env && *env) {
      char* end = nullptr;
      long n = std::strtol(env, &end, 10);
      if (*end != '\0' || n <= 0) throw Error(ErrorCode::kInvalidArgument, "MFLAB_TERMS must be a positive integer");
      return static_cast<int>(n);
    }
    return fallback;
  }

  // Looks the result up in the cache, computing and storing it on a miss.
  Json cached(const std::string& command, const Json& params, const std::function<Json()>& compute) {
    Cache cache(opts_.cache_dir.empty() ? default_cache_dir() : std::filesystem::path(opts_.cache_dir),
                !opts_.no_cache, err_);
    std::optional<Json> hit = cache.get(command, params);
    Cache::Status status = cache.last_status();
    Json value = hit ? *hit : compute();
    if (!hit) cache.put(command, params, value);
    if (status != Cache::Status::kDisabled) {
      err_ << Json{{"cache", to_string(status)}, {"command", command}, {"key", cache.last_key()}}.dump() << "\n";
    }
    return value;
  }

  void emit(const Json& result) {
    std::string text = result.dump() + "\n";
    if (opts_.out_path.empty()) {
      out_ << text;
      return;
    }
    std::ofstream file(opts_.out_path);
    file << text;
    if (!file) throw Error(ErrorCode::kIo, "cannot write " + opts_.out_path);
  }

  void add_commands(CLI::App& app);

  std::ostream& out_;
  std::ostream& err_;
  Options opts_;
  std::function<Outcome()> action_;

  // positional and per-command values
  long d_ = 0;
  int i_ = 0;
  long a_ = 0, b_ = 0;
  bool all_ = false;
  std::size_t cap_ = 8;
  std::string poly_;
  std::string chart_ = "ramanujan", alpha_, sign_, reading_ = "s3-s1";
  std::string point_ = "leaf", partial_ = "y3";
  bool report_ = false, annihilate_ = false;
  std::string t2_, t3_, s2_, s3_, k_ = "1", kp_;
  std::string formula_ = "derived";
  bool numeric_ = false;
  long degree_ = 0;
  std::string t_, s_, start_;
  double q_ = 0;
  int sample_ = 100;
  std::string suite_;
};

void Cli::add_commands(CLI::App& app) {
  auto level = [&](CLI::App* sub, bool with_i) {
    sub->add_option("d", d_, "level d >= 1")->required()->check(CLI::PositiveNumber);
    if (with_i) sub->add_option("i", i_, "variable index 1, 2 or 3")->required()->check(CLI::Range(1, 3));
  };

  auto* psi = app.add_subcommand("psi", "Dedekind psi(d)");
  level(psi, false);
  psi->callback([&] {
    action_ = [&] { return Outcome{{{"d", d_}, {"psi", dedekind_psi(d_)}}}; };
  });

  auto* cusps = app.add_subcommand("cusps", "number of cusps of X0(d)");
  level(cusps, false);
  cusps->callback([&] {
    action_ = [&] { return Outcome{{{"d", d_}, {"cusps", cusp_count(d_)}}}; };
  });

  auto* cosets = app.add_subcommand("cosets", "coset representatives [[a, e], [0, b]] with ab = d");
  level(cosets, false);
  cosets->add_flag("--all", all_, "include non-primitive representatives");
  cosets->callback([&] {
    action_ = [&] {
      Json reps = Json::array();
      auto list = coset_reps(d_, !all_);
      for (const auto& r : list) reps.push_back({{"a", r.a}, {"b", r.b}, {"e", r.e}});
      return Outcome{{{"d", d_}, {"primitive", !all_}, {"count", list.size()}, {"reps", reps}}};
    };
  });

  auto* monos = app.add_subcommand("monomials", "monomials of weighted degree i*psi(d) in (y_i, x2, x3)");
  level(monos, true);
  monos->callback([&] {
    action_ = [&] {
      auto ex = monomial_exponents(d_, i_);
      Json list = Json::array();
      for (const auto& e : ex) list.push_back(to_json(modeq_monomial(i_, e)));
      return Outcome{{{"d", d_}, {"i", i_}, {"count", ex.size()}, {"exponents", ex}, {"monomials", list}}};
    };
  });

  auto* bmat = app.add_subcommand("bmatrix", "symbolic B matrix of iterated v-derivatives");
  level(bmat, true);
  bmat->callback([&] {
    action_ = [&] {
      Json params{{"d", d_}, {"i", i_}};
      return Outcome{cached("bmatrix", params, [&] {
        auto m = bmatrix(d_, i_);
        return Json{{"d", d_}, {"i", i_}, {"size", m.rows()}, {"matrix", to_json(m)}};
      })};
    };
  });

  auto* jd = app.add_subcommand("jdet", "determinant J of the B matrix");
  level(jd, true);
  jd->add_option("--cap", cap_, "largest matrix size attempted")->capture_default_str();
  jd->callback([&] {
    action_ = [&] {
      Json params{{"d", d_}, {"i", i_}, {"cap", cap_}};
      return Outcome{cached("jdet", params, [&] {
        auto j = jdet(d_, i_, cap_);
        return Json{{"d", d_}, {"i", i_}, {"size", monomials(d_, i_).size()}, {"terms", j.terms().size()},
                    {"jdet", to_json(j)}};
      })};
    };
  });

  auto* mq = app.add_subcommand("modeq", "modular equation Q_{d,i} from q-expansions");
  level(mq, true);
  mq->callback([&] {
    action_ = [&] {
      int n = resolved_terms(default_modeq_order(static_cast<int>(d_), i_));
      Json params{{"d", d_}, {"i", i_}, {"terms", n}};
      return Outcome{cached("modeq", params, [&] { return modeq_json(modeq_solve(static_cast<int>(d_), i_, n)); })};
    };
  });

  auto* res = app.add_subcommand("residual", "a polynomial in (y_i, x2, x3) evaluated along the leaf");
  level(res, true);
  res->add_option("--poly", poly_, "polynomial; defaults to the solved Q_{d,i}");
  res->callback([&] {
    action_ = [&] {
      int n = resolved_terms(default_modeq_order(static_cast<int>(d_), i_));
      MultiPoly q = poly_.empty() ? modeq_solve(static_cast<int>(d_), i_).solver : parse_poly(poly_, modeq_ring(i_));
      QSeries r = modeq_residual(q, static_cast<int>(d_), n);
      Json out{{"d", d_}, {"i", i_}, {"order", n}, {"poly", to_json(q)}, {"zero", r.is_zero()},
               {"residual", r.to_string()}};
      out["valuation"] = r.is_zero() ? Json(nullptr) : Json(*r.valuation());
      return Outcome{out};
    };
  });

  auto* sj = app.add_subcommand("selfjoin", "self-join of a field in a chart");
  sj->add_option("chart", chart_, "ramanujan or halphen")
      ->check(CLI::IsMember({"ramanujan", "halphen"}))
      ->capture_default_str();
  sj->add_option("--alpha", alpha_, "a1,a2,a3 for a numeric Halphen field; symbolic if omitted");
  sj->add_option("--sign", sign_, "divisor sign")->check(CLI::IsMember({"t-s", "s-t"}));
  sj->add_option("--reading", reading_, "Halphen y2 reading")
      ->check(CLI::IsMember({"s3-s1", "s3-s2"}))
      ->capture_default_str();
  sj->callback([&] {
    action_ = [&] {
      SelfJoinResult r;
      bool ramanujan = chart_ == "ramanujan";
      DivisorSign sign = sign_.empty() ? (ramanujan ? DivisorSign::kTMinusS : DivisorSign::kSMinusT)
                                       : (sign_ == "t-s" ? DivisorSign::kTMinusS : DivisorSign::kSMinusT);
      if (ramanujan) {
        r = self_join(field_ramanujan(), ramanujan_chart(sign));
      } else {
        std::optional<std::array<Rational, 3>> alpha;
        if (!alpha_.empty()) {
          auto parts = split(alpha_, ',');
          if (parts.size() != 3) throw Error(ErrorCode::kInvalidArgument, "--alpha needs three values");
          alpha = std::array<Rational, 3>{parse_exact(parts[0]), parse_exact(parts[1]), parse_exact(parts[2])};
        }
        HalphenY2 reading = reading_ == "s3-s1" ? HalphenY2::kS3MinusS1 : HalphenY2::kS3MinusS2;
        r = self_join(field_halphen(alpha), halphen_chart(!alpha.has_value(), reading, sign));
      }
      Json slice = Json::object();
      for (const auto& [name, value] : r.slice) slice[name] = to_json(value);
      return Outcome{{{"chart", chart_},
                      {"divisor", r.divisor},
                      {"slice", slice},
                      {"verified", r.verified},
                      {"field", to_json(r.field)}}};
    };
  });

  auto* cm = app.add_subcommand("cusp-matrix", "derivative of B along the singular curve at a cusp");
  cm->add_option("d", d_, "level")->check(CLI::PositiveNumber);
  cm->add_option("i", i_, "variable index")->check(CLI::Range(1, 3));
  cm->add_option("a", a_, "cusp a/b with ab = d, b < a")->check(CLI::PositiveNumber);
  cm->add_option("b", b_, "")->check(CLI::PositiveNumber);
  cm->add_option("--point", point_, "leaf or literal")->check(CLI::IsMember({"leaf", "literal"}))->capture_default_str();
  cm->add_option("--partial", partial_, "y3 or x3")->check(CLI::IsMember({"y3", "x3"}))->capture_default_str();
  cm->add_flag("--annihilate", annihilate_, "also apply the chart coefficients of Q_{d,i}");
  cm->add_flag("--report", report_, "rank report for d = 2..5, i = 2, every variant");
  cm->callback([&] {
    action_ = [&]() -> Outcome {
      if (report_) {
        // The literal point with the y3 partial is the documented reading.
        const std::vector<std::size_t> expected{1, 3, 3, 3};
        Json rows = Json::array();
        bool match = true;
        for (long d = 2; d <= 5; ++d) {
          Json ranks = cusp_ranks(d, 2, d, 1);
          match = match && ranks["literal/y3"].get<std::size_t>() == expected[static_cast<std::size_t>(d - 2)];
          rows.push_back({{"d", d}, {"a", d}, {"b", 1}, {"ranks", ranks}});
        }
        return Outcome{{{"i", 2}, {"expected", expected}, {"interpretation", "literal/y3"}, {"matches", match},
                        {"rows", rows}},
                       match ? 0 : 1};
      }
      if (d_ == 0 || i_ == 0) throw Error(ErrorCode::kInvalidArgument, "cusp-matrix needs d and i, or --report");
      if (a_ == 0) {
        Json pairs = Json::array();
        for (auto [a, b] : divisor_pairs(d_)) pairs.push_back({{"a", a}, {"b", b}, {"ranks", cusp_ranks(d_, i_, a, b)}});
        return Outcome{{{"d", d_}, {"i", i_}, {"pairs", pairs}}};
      }
      CuspPoint p = point_ == "leaf" ? CuspPoint::kLeaf : CuspPoint::kLiteral;
      FourthPartial f = partial_ == "y3" ? FourthPartial::kY3 : FourthPartial::kX3;
      RationalMatrix m = cusp_matrix(d_, i_, a_, b_, p, f);
      Json out{{"d", d_}, {"i", i_}, {"a", a_}, {"b", b_}, {"point", point_}, {"partial", partial_},
               {"matrix", to_json(m)}, {"rank", rank_rational(m)}};
      int code = 0;
      if (annihilate_) {
        auto q = modeq_solve(static_cast<int>(d_), i_);
        Json image = Json::array();
        bool zero = true;
        for (const auto& x : multiply(m, q.chart_coefficients)) {
          image.push_back(to_json(x));
          zero = zero && x == 0;
        }
        out["image"] = image;
        out["annihilated"] = zero;
        code = zero ? 0 : 1;
      }
      return Outcome{out, code};
    };
  });

  auto* iso = app.add_subcommand("isogeny-point", "chart point of an isogeny (t, s, k, k')");
  for (auto [name, target] : std::vector<std::pair<const char*, std::string*>>{
           {"--t2", &t2_}, {"--t3", &t3_}, {"--s2", &s2_}, {"--s3", &s3_}, {"--kp", &kp_}}) {
    iso->add_option(name, *target)->required();
  }
  iso->add_option("--k", k_, "scaling k")->capture_default_str();
  iso->add_option("--formula", formula_, "derived or printed")
      ->check(CLI::IsMember({"derived", "printed"}))
      ->capture_default_str();
  iso->add_flag("--numeric", numeric_, "complex floating point; values as re or re:im");
  iso->add_option("--degree", degree_, "evaluate the chart Q_{d,1..3} at the point")->check(CLI::PositiveNumber);
  iso->callback([&] {
    action_ = [&]() -> Outcome {
      IsogenyFormula formula = formula_ == "derived" ? IsogenyFormula::kDerived : IsogenyFormula::kPrinted;
      Json out{{"formula", to_string(formula)}};
      int code = 0;
      if (numeric_) {
        IsogenyInput<Complex> in{parse_complex(t2_), parse_complex(t3_), parse_complex(s2_),
                                 parse_complex(s3_), parse_complex(k_),  parse_complex(kp_)};
        auto p = isogeny_point(in, formula);
        out["point"] = complex_json(p);
        if (degree_ > 0) {
          std::function<Complex(const Rational&)> lift = [](const Rational& c) { return Complex(c.get_d()); };
          Json values = Json::object();
          for (int i : {1, 2, 3}) {
            auto q = modeq_solve(static_cast<int>(degree_), i);
            Complex y = i == 1 ? Complex(1) : p[i == 2 ? 2 : 3];
            std::vector<Complex> at{y, p[0], p[1]};
            Complex val = evaluate<Complex>(q.chart, std::span<const Complex>(at), lift);
            values["Q_{" + std::to_string(degree_) + "," + std::to_string(i) + "}"] = to_json(val);
            double scale = 1;
            for (const auto& z : p) scale = std::max(scale, std::abs(z));
            if (std::abs(val) > opts_.tol * 1e1 * std::pow(scale, q.psi * i)) code = 1;
          }
          out["modeq"] = values;
        }
      } else {
        IsogenyInput<Rational> in{parse_exact(t2_), parse_exact(t3_), parse_exact(s2_),
                                  parse_exact(s3_), parse_exact(k_),  parse_exact(kp_)};
        auto p = isogeny_point(in, formula);
        Json pt = Json::array();
        for (const auto& x : p) pt.push_back(to_json(x));
        out["point"] = pt;
        if (degree_ > 0) {
          std::function<Rational(const Rational&)> lift = [](const Rational& c) { return c; };
          Json values = Json::object();
          for (int i : {1, 2, 3}) {
            auto q = modeq_solve(static_cast<int>(degree_), i);
            Rational y = i == 1 ? Rational(1) : p[i == 2 ? 2 : 3];
            std::vector<Rational> at{y, p[0], p[1]};
            Rational val = evaluate(q.chart, at);
            bool coeff_zero = true;
            for (const auto& x : coefficient_check(degree_, i, p, q.chart_coefficients, lift)) {
              coeff_zero = coeff_zero && x == 0;
            }
            std::string key = "Q_{" + std::to_string(degree_) + "," + std::to_string(i) + "}";
            values[key] = {{"value", to_json(val)}, {"coefficient_check_zero", coeff_zero}};
            if (val != 0 || !coeff_zero) code = 1;
          }
          out["modeq"] = values;
        }
      }
      return Outcome{out, code};
    };
  });

  auto* per = app.add_subcommand("periods", "period matrix of y^2 = 4(x-t1)^3 - t2(x-t1) - t3");
  per->add_option("--t", t_, "t1,t2,t3 (each re or re:im)")->required();
  per->callback([&] {
    action_ = [&] {
      NumericTolerances tol;
      tol.legendre = opts_.tol;
      auto p = periods(complex_list<3>(t_, "--t"), tol);
      bool ok = p.legendre_residual <= tol.legendre;
      return Outcome{{{"entries", cmatrix_json(p.entries)},
                      {"legendre_residual", p.legendre_residual},
                      {"legendre_ok", ok},
                      {"tau", to_json(p.entries[0][0] / p.entries[1][0])}},
                     ok ? 0 : 1};
    };
  });

  auto* fi = app.add_subcommand("first-integral", "B = (1/2) Tr(F conj(F)^{-1}) at a pair (t, s)");
  fi->add_option("--t", t_, "t1,t2,t3");
  fi->add_option("--s", s_, "s1,s2,s3");
  fi->add_option("--q", q_, "take (t, s) on V_d from q-expansions at q");
  fi->add_option("--degree", degree_, "d for --q")->check(CLI::PositiveNumber);
  fi->callback([&] {
    action_ = [&]() -> Outcome {
      std::array<Complex, 3> t{}, s{};
      if (q_ != 0) {
        if (degree_ == 0) throw Error(ErrorCode::kInvalidArgument, "--q needs --degree");
        std::tie(t, s) = point_from_q(q_, static_cast<int>(degree_));
      } else {
        if (t_.empty() || s_.empty()) throw Error(ErrorCode::kInvalidArgument, "give --t and --s, or --q and --degree");
        t = complex_list<3>(t_, "--t");
        s = complex_list<3>(s_, "--s");
      }
      auto f = transcendental_F(t, s);
      auto b = first_integral_B(f);
      bool real = std::abs(b.imaginary) <= opts_.tol;
      return Outcome{{{"t", complex_json(t)},
                      {"s", complex_json(s)},
                      {"F", cmatrix_json(f)},
                      {"B", b.value},
                      {"imaginary", b.imaginary},
                      {"real", real}},
                     real ? 0 : 1};
    };
  });

  auto* integ = app.add_subcommand("integrate", "RK4 trajectory of v in the chart (x2, x3, y2, y3)");
  integ->add_option("--start", start_, "x2,x3,y2,y3");
  integ->add_option("--q", q_, "start on the leaf of level --degree at q");
  integ->add_option("--degree", degree_, "leaf level for --q")->check(CLI::PositiveNumber);
  integ->add_option("--sample", sample_, "record every n-th step")->check(CLI::PositiveNumber)->capture_default_str();
  integ->callback([&] {
    action_ = [&]() -> Outcome {
      std::vector<Complex> start;
      if (q_ != 0) {
        if (degree_ < 2) throw Error(ErrorCode::kInvalidArgument, "--q needs --degree >= 2");
        for (const auto& s : leaf_param(static_cast<int>(degree_), 80).point()) start.emplace_back(s.evaluate(q_));
      } else {
        if (start_.empty()) throw Error(ErrorCode::kInvalidArgument, "give --start, or --q and --degree");
        auto p = complex_list<4>(start_, "--start");
        start.assign(p.begin(), p.end());
      }
      auto traj = rk4_integrate(field_v(), start, opts_.time, opts_.step, sample_);
      Json points = Json::array(), bvalues = Json::array();
      for (const auto& x : traj.points) {
        points.push_back(complex_json(x));
        try {
          auto [t, s] = slice_lift({x[0], x[1], x[2], x[3]});
          bvalues.push_back(first_integral_B(t, s).value);
        } catch (const Error&) {
          bvalues.push_back(nullptr);
        }
      }
      return Outcome{{{"step", opts_.step},
                      {"time", opts_.time},
                      {"times", traj.times},
                      {"points", points},
                      {"B", bvalues},
                      {"blew_up", traj.blew_up}}};
    };
  });

  auto* ver = app.add_subcommand("verify", "invariant suites; exit 1 on any failure");
  ver->add_option("suite", suite_, "tangency, delta, sl2, linearpart, picard or all")
      ->required()
      ->check(CLI::IsMember(verify_suite_names()));
  ver->callback([&] {
    action_ = [&] {
      auto report = verify_suite(suite_, resolved_terms(40));
      return Outcome{report.to_json(), report.passed() ? 0 : 1};
    };
  });
}

int Cli::run(const std::vector<std::string>& args) {
  CLI::App app{"mflab: modular foliation laboratory"};
  app.name("mflab");
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--out", opts_.out_path, "write the JSON result to this file");
  app.add_option("--terms", opts_.terms, "q-series order (overrides MFLAB_TERMS)")->check(CLI::PositiveNumber);
  app.add_flag("--no-cache", opts_.no_cache, "bypass the result cache");
  app.add_option("--cache-dir", opts_.cache_dir, "cache directory (default $MFLAB_CACHE_DIR or ~/.cache/mflab)");
  app.add_option("--tol", opts_.tol, "numeric tolerance")->capture_default_str();
  app.add_option("--step", opts_.step, "RK4 step")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--time", opts_.time, "RK4 integration time")->check(CLI::NonNegativeNumber)->capture_default_str();
  add_commands(app);

  std::vector<const char*> argv{"mflab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out_ << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out_ << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err_ << "mflab: " << e.what() << "\n\n" << app.help();
    return 2;
  }
  if (!action_) {
    err_ << app.help();
    return 2;
  }
  try {
    Outcome o = action_();
    emit(o.result);
    return o.code;
  } catch (const Error& e) {
    err_ << "mflab: error: " << e.what() << "\n";
    return e.code() == ErrorCode::kInvalidArgument || e.code() == ErrorCode::kParse ? 2 : 1;
  } catch (const std::exception& e) {
    err_ << "mflab: error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return Cli(out, err).run(args);
}

}  // namespace mflab::cli
