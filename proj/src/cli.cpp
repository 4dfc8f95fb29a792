#include "ctreals/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <sstream>

#include "ctreals/approx_lemma.hpp"
#include "ctreals/convert.hpp"
#include "ctreals/digits.hpp"
#include "ctreals/embed.hpp"
#include "ctreals/fnexpr.hpp"
#include "ctreals/interval_stream.hpp"
#include "ctreals/kk.hpp"
#include "ctreals/normalize.hpp"

namespace ctreals::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational parse_rational_arg(const std::string& text, const std::string& flag) {
  auto r = rat_from_string(text);
  if (!r) throw UsageError("flag " + flag + ": malformed rational '" + text + "'");
  return *r;
}

DigitStream parse_stream_arg(const std::string& text, const std::string& pad) {
  auto seq = digit_seq_from_string(text);
  if (!seq || seq->is_empty())
    throw UsageError("malformed stream '" + text + "' (want \"a:d1 d2 ...\" with digits + 0 -)");
  if (pad == "zero") return extend_total(*seq);
  if (pad == "repeat") {
    if (seq->digits.empty())
      throw UsageError("--pad repeat needs at least one digit to repeat");
    auto digits = std::make_shared<std::vector<Digit>>(seq->digits);
    auto pos = std::make_shared<std::size_t>(0);
    return DigitStream::make(*seq->head, [digits, pos]() {
      if (*pos < digits->size()) return (*digits)[(*pos)++];
      return digits->back();
    });
  }
  throw UsageError("--pad must be zero or repeat");
}

// "interp:<level-1 expr>" (the interpolation of the expression) or
// "affine:<a>:<b>" (x -> a*x + b).
RealFn1 parse_g_spec(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw UsageError("--g wants interp:<expr> or affine:<a>:<b>");
  std::string kind = spec.substr(0, colon);
  std::string rest = spec.substr(colon + 1);
  if (kind == "interp") return pi1(fn1_from_expr(rest));
  if (kind == "affine") {
    auto second = rest.find(':');
    if (second == std::string::npos) throw UsageError("--g affine wants affine:<a>:<b>");
    Rational a = parse_rational_arg(rest.substr(0, second), "--g");
    Rational b = parse_rational_arg(rest.substr(second + 1), "--g");
    return RealFn1::affine_map(a, b);
  }
  throw UsageError("--g kind must be interp or affine");
}

class VectorSink {
 public:
  explicit VectorSink(const std::string& path) {
    if (path.empty()) return;
    file_.open(path);
    if (!file_) throw UsageError("--emit-vectors: cannot open " + path);
  }
  void emit(const std::string& input, const std::string& expected, const std::string& tag) {
    if (file_.is_open()) file_ << input << "\t" << expected << "\t" << tag << "\n";
  }

 private:
  std::ofstream file_;
};

int dispatch(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"effective constructions over interval and signed-digit reals"};
  app.require_subcommand(1);
  std::string vectors_path;
  app.add_option("--emit-vectors", vectors_path, "write test vectors (input TAB expected TAB tag)");

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a functional expression");
  int eval_type = 1;
  std::string eval_fn, eval_arg_fn;
  nat eval_at = 0;
  eval_cmd->add_option("--type", eval_type, "1 or 2")->check(CLI::Range(1, 2));
  eval_cmd->add_option("--fn", eval_fn, "expression")->required();
  eval_cmd->add_option("--at", eval_at, "natural argument (type 1)");
  eval_cmd->add_option("--arg-fn", eval_arg_fn, "level-1 expression argument (type 2)");

  // convert
  auto* convert_cmd = app.add_subcommand("convert", "move between representations");
  std::string convert_value, convert_stream, convert_pad = "zero";
  int convert_precision = 10;
  std::size_t convert_digits = 12;
  bool convert_roundtrip = false;
  convert_cmd->add_option("--value", convert_value, "exact rational to encode as digits");
  convert_cmd->add_option("--stream", convert_stream, "digit stream \"a:+ 0 -\" to decode");
  convert_cmd->add_option("--pad", convert_pad, "zero|repeat tail policy for --stream");
  convert_cmd->add_option("--precision", convert_precision, "interval precision");
  convert_cmd->add_option("--digits", convert_digits, "output digit count");
  convert_cmd->add_flag("--roundtrip", convert_roundtrip, "digit -> interval -> digit");

  // normalize
  auto* normalize_cmd = app.add_subcommand("normalize", "canonicalize integer-valued streams");
  std::string normalize_stream, normalize_pad = "zero";
  std::size_t normalize_digits = 16;
  normalize_cmd->add_option("stream", normalize_stream, "digit stream \"a:d1 d2 ...\"")->required();
  normalize_cmd->add_option("--pad", normalize_pad, "zero|repeat tail policy");
  normalize_cmd->add_option("--digits", normalize_digits, "output digit count");

  // embed
  auto* embed_cmd = app.add_subcommand("embed", "evaluate the hierarchy embeddings");
  int embed_type = 1;
  int embed_precision = 20;
  std::string embed_fn, embed_g, embed_at, embed_mode = "partition";
  embed_cmd->add_option("--type", embed_type, "1 or 2")->check(CLI::Range(1, 2));
  embed_cmd->add_option("--precision", embed_precision, "output precision")->check(CLI::NonNegativeNumber);
  embed_cmd->add_option("--fn", embed_fn, "functional expression")->required();
  embed_cmd->add_option("--at", embed_at, "rational point (type 1)");
  embed_cmd->add_option("--g", embed_g, "interp:<expr> or affine:<a>:<b> (type 2)");
  embed_cmd->add_option("--mode", embed_mode, "partition|literal weight mode");

  // enum
  auto* enum_cmd = app.add_subcommand("enum", "dump the finite approximation sets");
  int enum_k = 1;
  nat enum_n = 0, enum_cap = kDefaultEnumCap;
  enum_cmd->add_option("--k", enum_k, "type level")->check(CLI::Range(0, 2));
  enum_cmd->add_option("--n", enum_n, "approximation bound")->required();
  enum_cmd->add_option("--cap", enum_cap, "enumeration cap");

  // modulus
  auto* modulus_cmd = app.add_subcommand("modulus", "convergence modulus of the approximations");
  int modulus_level = 1;
  std::string modulus_fn, modulus_at;
  modulus_cmd->add_option("--level", modulus_level, "1 or 2")->check(CLI::Range(1, 2));
  modulus_cmd->add_option("--fn", modulus_fn, "expression")->required();
  modulus_cmd->add_option("--at", modulus_at, "point: natural (level 1) or level-1 expression")->required();

  // lemma-demo
  auto* lemma_cmd = app.add_subcommand("lemma-demo", "stage approximants along a Grilliot sequence");
  std::string lemma_fn, lemma_probe;
  nat lemma_stages = 60;
  lemma_cmd->add_option("--functional", lemma_fn, "level-2 expression")->required();
  lemma_cmd->add_option("--stages", lemma_stages, "last stage index");
  lemma_cmd->add_option("--probe", lemma_probe, "level-1 expression to follow")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  }
  VectorSink vectors(vectors_path);

  if (*eval_cmd) {
    if (eval_type == 1) {
      nat v = fn1_from_expr(eval_fn)(eval_at);
      out << v << "\n";
      vectors.emit(eval_fn + " @ " + std::to_string(eval_at), std::to_string(v), "eval1");
    } else {
      if (eval_arg_fn.empty()) throw UsageError("eval --type 2 needs --arg-fn");
      nat v = fn2_from_expr(eval_fn)(fn1_from_expr(eval_arg_fn));
      out << v << "\n";
      vectors.emit(eval_fn + " @ " + eval_arg_fn, std::to_string(v), "eval2");
    }
    return 0;
  }

  if (*convert_cmd) {
    if (!convert_value.empty()) {
      Rational r = parse_rational_arg(convert_value, "--value");
      DigitStream d = from_intervals(IntervalStream::of_rational(r));
      std::string text = stream_prefix_string(d, convert_digits);
      out << text << "\n";
      vectors.emit(convert_value, text, "rational-to-digits");
      return 0;
    }
    if (convert_stream.empty()) throw UsageError("convert needs --value or --stream");
    DigitStream d = parse_stream_arg(convert_stream, convert_pad);
    RatInterval iv = stream_query(to_intervals(d), convert_precision);
    out << to_string(iv) << "\n";
    vectors.emit(convert_stream, to_string(iv), "digits-to-interval");
    if (convert_roundtrip) {
      DigitStream back = from_intervals(to_intervals(d));
      std::string text = stream_prefix_string(back, convert_digits);
      out << text << "\n";
      vectors.emit(convert_stream, text, "digits-roundtrip");
    }
    return 0;
  }

  if (*normalize_cmd) {
    DigitStream x = parse_stream_arg(normalize_stream, normalize_pad);
    DigitStream y = normalize(x);
    std::string text = stream_prefix_string(y, normalize_digits);
    out << text << "\n";
    vectors.emit(normalize_stream, text, "normalize");
    return 0;
  }

  if (*embed_cmd) {
    if (embed_type == 1) {
      if (embed_at.empty()) throw UsageError("embed --type 1 needs --at");
      TotalFn1 f = fn1_from_expr(embed_fn);
      Rational x = parse_rational_arg(embed_at, "--at");
      RatInterval e = eval_at_point(pi1(f), x, embed_precision);
      Rational exact = pi1_exact(f, x);
      out << to_string(e) << "\n";
      out << "exact " << rat_to_string(exact) << "\n";
      vectors.emit(embed_fn + " @ " + embed_at, rat_to_string(exact), "pi1");
    } else {
      if (embed_g.empty()) throw UsageError("embed --type 2 needs --g");
      Pi2Options opts;
      if (embed_mode == "literal") {
        opts.mode = WeightMode::literal;
      } else if (embed_mode != "partition") {
        throw UsageError("--mode must be partition or literal");
      }
      TotalFn2 F = fn2_from_expr(embed_fn);
      RealFn1 g = parse_g_spec(embed_g);
      Pi2Outcome o = pi2_outcome(F, g, embed_precision, opts);
      out << to_string(o.enclosure) << "\n";
      out << (o.route == Pi2Route::case1 ? "route near-integer" : "route series") << "\n";
      vectors.emit(embed_fn + " | " + embed_g, to_string(o.enclosure), "pi2");
    }
    return 0;
  }

  if (*enum_cmd) {
    for (const ApproxElem& a : enum_X(enum_k, enum_n, enum_cap)) {
      std::string text = to_string(a);
      out << text << "\n";
      vectors.emit("X^" + std::to_string(enum_k) + "_" + std::to_string(enum_n), text, "enum");
    }
    return 0;
  }

  if (*modulus_cmd) {
    if (modulus_level == 1) {
      nat i = 0;
      try {
        i = std::stoull(modulus_at);
      } catch (const std::exception&) {
        throw UsageError("modulus --level 1 wants a natural --at");
      }
      nat m = modulus1(i, fn1_from_expr(modulus_fn));
      out << m << "\n";
      vectors.emit(modulus_fn + " @ " + modulus_at, std::to_string(m), "modulus1");
    } else {
      nat m = modulus2(fn1_from_expr(modulus_at), fn2_from_expr(modulus_fn));
      out << m << "\n";
      vectors.emit(modulus_fn + " @ " + modulus_at, std::to_string(m), "modulus2");
    }
    return 0;
  }

  if (*lemma_cmd) {
    Oracle1 f = [F = fn2_from_expr(lemma_fn)](const TotalFn1& x) { return F(x); };
    TotalFn1 probe = fn1_from_expr(lemma_probe);
    auto observations = enumerate_observations(lemma_stages + 1);
    ApproxScheme scheme = approximants(f, observations, lemma_stages);
    for (const Stage& stage : scheme.stages) {
      nat v = realize_stage(stage, scheme.observations)(grilliot_seq(probe, stage.n));
      out << stage.n << " " << v << "\n";
      vectors.emit(lemma_fn + " n=" + std::to_string(stage.n), std::to_string(v), "lemma");
    }
    ConvergenceReport report = follow_point(scheme, f, probe);
    if (report.stabilized) {
      out << "stabilized at " << report.stage << " value " << report.value << "\n";
    } else {
      out << "not stabilized within " << lemma_stages << " stages\n";
      return 1;
    }
    return 0;
  }

  throw UsageError("no subcommand selected");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(args, out);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const FnExprError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExhausted& e) {
    err << "budget exhausted: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace ctreals::cli
