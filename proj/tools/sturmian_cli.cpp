// sturmian: generate words, analyze them, run the bounded extremal checks and
// the mod-one experiments.

#include <sturmian/sturmian.hpp>

#include "CLI11.hpp"

#include <cstdlib>
#include <iostream>
#include <random>
#include <string>

namespace {

using namespace sturmian;
using io::Json;

enum class Format { Text, Json, Csv };

struct Common {
  std::string format = "text";
  Format fmt() const {
    if (format == "json") return Format::Json;
    if (format == "csv") return Format::Csv;
    return Format::Text;
  }
};

constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

int verdict_exit(const BoundedVerdict& v) { return v.holds() ? 0 : 1; }

void print_verdict(const BoundedVerdict& v, Format fmt) {
  if (fmt == Format::Json) {
    print_json(io::to_json(v));
    return;
  }
  std::cout << v.check << ": " << to_string(v.status) << " (K=" << v.K << ", L=" << v.L;
  if (v.P) std::cout << ", P=" << *v.P;
  std::cout << ")\n";
  std::cout << "  undecided comparisons: " << v.undecided << (v.all_decided_strict ? ", all decided strictly" : "")
            << '\n';
  if (v.witness) {
    std::cout << "  witness: shift " << v.witness->shift << ", depth " << v.witness->depth << '\n';
    std::cout << "  expected: " << v.witness->expected << '\n';
    std::cout << "  found:    " << v.witness->found << '\n';
    if (!v.witness->note.empty()) std::cout << "  note: " << v.witness->note << '\n';
  }
  if (!v.detail.empty()) std::cout << "  " << v.detail << '\n';
}

void print_word(const FiniteWord& w, const InfiniteWord* source, Format fmt) {
  if (fmt == Format::Json) {
    Json j{{"word", w.str()}, {"length", w.size()}};
    if (source) {
      j["recipe"] = std::string(to_string(source->recipe().kind));
      j["description"] = source->recipe().description;
      j["periodic"] = source->periodic_form() ? Json(source->periodic_form()->str()) : Json(nullptr);
    }
    print_json(j);
    return;
  }
  std::cout << w.str() << '\n';
}

DigitExpansion digits_from_options(const std::string& xi, const std::string& digit_file, const std::string& word,
                                   unsigned base) {
  int given = !xi.empty() + !digit_file.empty() + !word.empty();
  if (given != 1) throw UsageError("give exactly one of --xi, --xi-digits, --word");
  if (!xi.empty()) return digits_from_rational(parse_rational(xi), base);
  if (!word.empty()) return from_word(parse::word_source(word), base);
  auto file = io::read_digit_file(io::read_file(digit_file));
  if (file.base != base) throw UsageError("digit file base " + std::to_string(file.base) + " differs from --base");
  if (auto* p = std::get_if<UltimatelyPeriodicWord>(&file.digits)) {
    return from_word(InfiniteWord::from_periodic(*p), base);
  }
  const auto& finite = std::get<FiniteWord>(file.digits);
  Recipe recipe;
  recipe.kind = RecipeKind::Custom;
  recipe.description = "digits from " + digit_file;
  InfiniteWord w(finite.alphabet(), std::move(recipe), [finite, digit_file](std::size_t n) {
    if (n > finite.size()) {
      throw UsageError("digit file " + digit_file + " holds " + std::to_string(finite.size()) + " digits, " +
                       std::to_string(n) + " needed");
    }
    return finite.prefix(n).vector();
  });
  return {base, std::move(w), DigitProvenance::FromWord, std::nullopt};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sturmian and episturmian words: generation, analysis, extremal checks, mod-one experiments"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();

  int exit_code = 0;

  // generate
  auto* gen = app.add_subcommand("generate", "Generate a word prefix")->require_subcommand(1);
  std::size_t len = 32;

  std::string alpha, rho = "same";
  bool upper = false;
  auto* g_mech = gen->add_subcommand("mechanical", "Mechanical word s_{alpha,rho}");
  g_mech->add_option("--alpha", alpha, "Slope: p/q or (p+q*sqrt(d))/r")->required();
  g_mech->add_option("--rho", rho, "Intercept, or 'same'")->capture_default_str();
  g_mech->add_flag("--upper", upper, "Ceiling variant");
  g_mech->add_option("--len", len)->capture_default_str();
  g_mech->callback([&] {
    QuadraticSurd a = parse::surd(alpha);
    QuadraticSurd r = rho == "same" ? a : parse::surd(rho);
    auto w = upper ? mechanical_upper(a, r) : mechanical_lower(a, r);
    print_word(w.prefix(len), &w, common.fmt());
  });

  std::string directive;
  auto* g_epi = gen->add_subcommand("epistandard", "Epistandard word of a directive: abc* or ab|cd");
  g_epi->add_option("--directive", directive)->required();
  g_epi->add_option("--len", len)->capture_default_str();
  g_epi->callback([&] {
    auto w = epistandard(DirectiveWord::parse(directive));
    print_word(w.prefix(len), &w, common.fmt());
  });

  std::string morphism_text, source;
  auto* g_morph = gen->add_subcommand("morphic", "Image of a word source under a morphism a>ab,b>a");
  g_morph->add_option("--morphism", morphism_text)->required();
  g_morph->add_option("--word", source, "Word source")->required();
  g_morph->add_option("--len", len)->capture_default_str();
  g_morph->callback([&] {
    auto w = parse::word_source("morph:" + morphism_text + ":" + source);
    print_word(w.prefix(len), &w, common.fmt());
  });

  auto* g_tm = gen->add_subcommand("thue-morse", "Thue-Morse word");
  g_tm->add_option("--len", len)->capture_default_str();
  g_tm->callback([&] {
    auto w = thue_morse();
    print_word(w.prefix(len), &w, common.fmt());
  });

  std::string x_name = "a", y_name = "b";
  std::size_t ell = 1;
  auto* g_skew = gen->add_subcommand("skew", "Skew word mu(x^l y x^omega)");
  g_skew->add_option("--morphism", morphism_text, "Defaults to the identity on {a,b}");
  g_skew->add_option("--x", x_name)->capture_default_str();
  g_skew->add_option("--y", y_name)->capture_default_str();
  g_skew->add_option("--l", ell)->capture_default_str();
  g_skew->add_option("--len", len)->capture_default_str();
  g_skew->callback([&] {
    Alphabet ab = Alphabet::latin(2);
    Morphism mu = morphism_text.empty() ? Morphism::identity(ab) : parse::morphism(ab, morphism_text);
    auto u = skew_word(mu, ab.letter(x_name), ab.letter(y_name), ell);
    auto w = InfiniteWord::from_periodic(u);
    print_word(w.prefix(len), &w, common.fmt());
  });

  std::string v_text;
  auto* g_pb = gen->add_subcommand("periodic-balanced", "(Pal(v) x y)^omega");
  g_pb->add_option("--v", v_text, "Word v over {a,b}");
  g_pb->add_option("--x", x_name)->capture_default_str();
  g_pb->add_option("--y", y_name)->capture_default_str();
  g_pb->add_option("--len", len)->capture_default_str();
  g_pb->callback([&] {
    Alphabet ab = Alphabet::latin(2);
    auto u = periodic_balanced(FiniteWord::parse(ab, v_text), ab.letter(x_name), ab.letter(y_name));
    auto w = InfiniteWord::from_periodic(u);
    print_word(w.prefix(len), &w, common.fmt());
  });

  std::size_t k_bonacci = 3;
  auto* g_kb = gen->add_subcommand("kbonacci", "k-bonacci word");
  g_kb->add_option("--k", k_bonacci)->capture_default_str();
  g_kb->add_option("--len", len)->capture_default_str();
  g_kb->callback([&] {
    auto w = kbonacci(k_bonacci);
    print_word(w.prefix(len), &w, common.fmt());
  });

  auto* g_src = gen->add_subcommand("source", "Any word source (fib, trib, mech:..., epi:..., cons:..., ...)");
  g_src->add_option("--word", source)->required();
  g_src->add_option("--len", len)->capture_default_str();
  g_src->callback([&] {
    auto w = parse::word_source(source);
    print_word(w.prefix(len), &w, common.fmt());
  });

  // analyze
  auto* an = app.add_subcommand("analyze", "Factor analysis")->require_subcommand(1);
  std::string finite_text;
  std::size_t k_max = 10, L = 1000, n = 1, n_max = 6;

  auto* a_cx = an->add_subcommand("complexity", "Factor complexity p(1..kmax)");
  auto* a_cx_word = a_cx->add_option("--word", source, "Word source");
  a_cx->add_option("--finite", finite_text, "Finite word")->excludes(a_cx_word);
  a_cx->add_option("--kmax", k_max)->capture_default_str();
  a_cx->add_option("--L", L, "Prefix length")->capture_default_str();
  a_cx->callback([&] {
    ComplexityTable t;
    if (!finite_text.empty()) {
      t = complexity(parse::finite_word(finite_text), k_max);
    } else if (!source.empty()) {
      t = complexity(parse::word_source(source), k_max, L);
    } else {
      throw UsageError("give --word or --finite");
    }
    if (common.fmt() == Format::Json) {
      print_json(Json{{"L", t.L}, {"complexity", io::to_json(t)}});
    } else if (common.fmt() == Format::Csv) {
      std::cout << "k,p,exact\n";
      for (const auto& e : t.entries) std::cout << e.k << ',' << e.p << ',' << (e.exact ? 1 : 0) << '\n';
    } else {
      for (const auto& e : t.entries) {
        std::cout << "p(" << e.k << ") = " << e.p << (e.exact ? "" : "  (lower bound)") << '\n';
      }
    }
  });

  auto* a_bal = an->add_subcommand("balance", "Balance and block condition of a binary word");
  auto* a_bal_word = a_bal->add_option("--word", source, "Word source");
  a_bal->add_option("--finite", finite_text, "Finite word")->excludes(a_bal_word);
  a_bal->add_option("--L", L, "Prefix length")->capture_default_str();
  a_bal->callback([&] {
    FiniteWord w = !finite_text.empty() ? parse::finite_word(finite_text) : parse::word_source(source).prefix(L);
    auto violation = balance_violation(w);
    auto block = block_condition_violation(w);
    if (common.fmt() == Format::Json) {
      Json j{{"length", w.size()}, {"balanced", !violation.has_value()}};
      j["violation"] = violation ? Json::array({violation->first.str(), violation->second.str()}) : Json(nullptr);
      j["block_condition"] = !block.has_value();
      j["block_witness"] = block ? Json(block->str()) : Json(nullptr);
      print_json(j);
    } else {
      std::cout << (violation ? "not balanced" : "balanced") << " (length " << w.size() << ")\n";
      if (violation) std::cout << "  factors " << violation->first.str() << " and " << violation->second.str() << '\n';
      if (block) std::cout << "  block condition fails at u = '" << block->str() << "'\n";
    }
    exit_code = violation ? 1 : 0;
  });

  std::string side = "left";
  auto* a_sp = an->add_subcommand("special", "Left or right special factors of length n");
  auto* a_sp_word = a_sp->add_option("--word", source, "Word source");
  a_sp->add_option("--finite", finite_text, "Finite word")->excludes(a_sp_word);
  a_sp->add_option("--n", n)->capture_default_str();
  a_sp->add_option("--side", side)->check(CLI::IsMember({"left", "right"}))->capture_default_str();
  a_sp->add_option("--L", L, "Prefix length")->capture_default_str();
  a_sp->callback([&] {
    FiniteWord w = !finite_text.empty() ? parse::finite_word(finite_text) : parse::word_source(source).prefix(L);
    auto sp = special_factors(w, n, side == "left" ? Side::Left : Side::Right);
    if (common.fmt() == Format::Json) {
      print_json(Json{{"n", n}, {"side", side}, {"L", w.size()}, {"factors", io::to_json(sp)}});
    } else {
      for (const auto& f : sp) std::cout << f.str() << '\n';
    }
  });

  bool palindromic = false;
  auto* a_lb = an->add_subcommand("local-balance", "Local balance: AuA within auA or Aua");
  a_lb->add_option("--word", source, "Word source")->required();
  a_lb->add_option("--nmax", n_max)->capture_default_str();
  a_lb->add_option("--L", L, "Prefix length")->capture_default_str();
  a_lb->add_flag("--palindromic", palindromic, "Only palindromic u");
  a_lb->callback([&] {
    auto v = local_balance_check(parse::word_source(source), n_max, L, palindromic);
    print_verdict(v, common.fmt());
    exit_code = verdict_exit(v);
  });

  auto* a_per = an->add_subcommand("period", "Smallest period and an eventually periodic form, if any");
  a_per->add_option("--finite", finite_text, "Finite word")->required();
  a_per->callback([&] {
    FiniteWord w = parse::finite_word(finite_text);
    auto form = classify_eventually_periodic(w);
    if (common.fmt() == Format::Json) {
      print_json(Json{{"period", detect_period(w)}, {"eventually_periodic", form ? Json(form->str()) : Json(nullptr)}});
    } else {
      std::cout << "period " << detect_period(w) << '\n';
      std::cout << "eventually periodic form: " << (form ? form->str() : std::string("none")) << '\n';
    }
  });

  // extremal
  auto* ex = app.add_subcommand("extremal", "Lexicographic extremal checks")->require_subcommand(1);
  std::size_t K = 200, depth = 400, P = 4, k = 8;
  std::string order_text, u_source, r_source, s_source, x_source, y_source;

  auto* e_mm = ex->add_subcommand("min-max", "Extremal factors of length k");
  auto* e_mm_word = e_mm->add_option("--word", source, "Word source");
  e_mm->add_option("--finite", finite_text, "Finite word")->excludes(e_mm_word);
  e_mm->add_option("--k", k)->capture_default_str();
  e_mm->add_option("--order", order_text, "Order such as b<a<c; natural by default");
  std::size_t material = 0;
  e_mm->add_option("--material", material, "Prefix length to scan; chosen automatically when 0");
  e_mm->callback([&] {
    FiniteWord w;
    bool exact = true;
    if (!finite_text.empty()) {
      w = parse::finite_word(finite_text);
    } else if (!source.empty()) {
      auto iw = parse::word_source(source);
      Material m = material ? Material{material, false} : material_for(iw, k);
      exact = m.exact;
      w = iw.prefix(m.length);
    } else {
      throw UsageError("give --word or --finite");
    }
    LexOrder order = order_text.empty() ? LexOrder::natural(w.alphabet().size()) : LexOrder::parse(w.alphabet(), order_text);
    auto lo = min_factor(w, k, order);
    auto hi = max_factor(w, k, order);
    if (common.fmt() == Format::Json) {
      print_json(Json{{"k", k}, {"order", order.str(w.alphabet())}, {"material", w.size()}, {"material_complete", exact},
                      {"min", lo.str()}, {"max", hi.str()}});
    } else {
      std::cout << "min " << lo.str() << "\nmax " << hi.str() << '\n';
    }
  });

  auto* e_ch = ex->add_subcommand("characteristic", "0u <= T^k(s) <= 1u; u defaults to s");
  e_ch->add_option("--word", source, "Word source s")->required();
  e_ch->add_option("--u", u_source, "Word source u");
  e_ch->add_option("--K", K)->capture_default_str();
  e_ch->add_option("--L", depth)->capture_default_str();
  e_ch->callback([&] {
    auto s = parse::word_source(source);
    auto u = u_source.empty() ? s : parse::word_source(u_source);
    auto v = check_sturmian_extremal(s, u, K, depth);
    print_verdict(v, common.fmt());
    exit_code = verdict_exit(v);
  });

  std::size_t attain = 0;
  auto* e_ei = ex->add_subcommand("epistandard-ineq", "a s <= min(s) for every acceptable pair");
  e_ei->add_option("--word", source, "Word source")->required();
  e_ei->add_option("--K", K)->capture_default_str();
  e_ei->add_option("--L", depth)->capture_default_str();
  e_ei->add_option("--attain", attain, "Also search this many shifts for a s|L (min attained)");
  e_ei->callback([&] {
    auto s = parse::word_source(source);
    auto report = check_epistandard_ineq(s, K, depth);
    const Alphabet& alph = s.alphabet();
    std::map<std::uint8_t, Attainment> attained;
    if (attain) {
      for (const auto& pv : report.pairs) {
        if (!attained.count(pv.pair.letter.index)) {
          attained.emplace(pv.pair.letter.index, min_attainment(s, pv.pair.letter, depth, attain));
        }
      }
    }
    if (common.fmt() == Format::Json) {
      Json pairs = Json::array();
      for (const auto& pv : report.pairs) {
        Json j{{"letter", alph.name(pv.pair.letter)}, {"order", pv.pair.order.str(alph)}, {"verdict", io::to_json(pv.verdict)}};
        if (attain) {
          const auto& at = attained.at(pv.pair.letter.index);
          j["min_attained"] = at.shift ? Json(*at.shift) : Json(nullptr);
        }
        pairs.push_back(j);
      }
      print_json(Json{{"K", K}, {"L", depth}, {"status", report.holds() ? "holds" : "fails"},
                      {"decided_strict", report.decided_strict()}, {"attain_search", attain}, {"pairs", pairs}});
    } else {
      std::cout << "epistandard inequality: " << (report.holds() ? "holds" : "fails") << " (K=" << K << ", L=" << depth
                << ")" << (report.decided_strict() ? ", all comparisons decided strictly" : "") << '\n';
      for (const auto& pv : report.pairs) {
        std::cout << "  (" << alph.name(pv.pair.letter) << ", " << pv.pair.order.str(alph)
                  << "): " << to_string(pv.verdict.status) << ", undecided " << pv.verdict.undecided;
        if (attain) {
          const auto& at = attained.at(pv.pair.letter.index);
          std::cout << ", " << alph.name(pv.pair.letter) << "s|" << depth
                    << (at.shift ? " occurs at " + std::to_string(*at.shift) : " not found in " + std::to_string(attain) + " shifts");
        }
        std::cout << '\n';
        if (pv.verdict.witness) std::cout << "    " << pv.verdict.witness->found << '\n';
      }
    }
    exit_code = report.holds() ? 0 : 1;
  });

  auto* e_fine = ex->add_subcommand("fine", "Fine word test at depth K");
  e_fine->add_option("--word", source, "Word source")->required();
  e_fine->add_option("--K", K)->capture_default_str();
  e_fine->callback([&] {
    auto v = fine_test(parse::word_source(source), K);
    print_verdict(v, common.fmt());
    exit_code = verdict_exit(v);
  });

  auto* e_fe = ex->add_subcommand("finite-epi", "Finite episturmian test with certificate");
  e_fe->add_option("--finite", finite_text, "Finite word")->required();
  e_fe->callback([&] {
    auto w = parse::finite_word(finite_text);
    auto r = finite_episturmian_test(w);
    if (common.fmt() == Format::Json) {
      print_json(Json{{"word", w.str()}, {"episturmian", r.episturmian},
                      {"certificate", r.certificate ? Json(r.certificate->str()) : Json(nullptr)}});
    } else {
      std::cout << (r.episturmian ? "episturmian" : "not episturmian");
      if (r.certificate) std::cout << ", certificate u = '" << r.certificate->str() << "'";
      std::cout << '\n';
    }
    exit_code = r.episturmian ? 0 : 1;
  });

  auto* e_g = ex->add_subcommand("gamma", "complement(u) <= T^k(u) <= u");
  e_g->add_option("--word", source, "Word source")->required();
  e_g->add_option("--K", K)->capture_default_str();
  e_g->add_option("--L", depth)->capture_default_str();
  e_g->callback([&] {
    auto v = gamma_membership(parse::word_source(source), K, depth);
    print_verdict(v, common.fmt());
    exit_code = verdict_exit(v);
  });

  auto* e_ap = ex->add_subcommand("allowed-pair", "r <= T^i(r) < s and r < T^i(s) <= s");
  e_ap->add_option("--r", r_source)->required();
  e_ap->add_option("--s", s_source)->required();
  e_ap->add_option("--K", K)->capture_default_str();
  e_ap->add_option("--L", depth)->capture_default_str();
  e_ap->callback([&] {
    auto v = allowed_pair_check(parse::word_source(r_source), parse::word_source(s_source), K, depth);
    print_verdict(v, common.fmt());
    exit_code = verdict_exit(v);
  });

  auto* e_sg = ex->add_subcommand("sigma", "x <= T^i(s) <= y");
  e_sg->add_option("--word", source, "Word source s")->required();
  e_sg->add_option("--x", x_source)->required();
  e_sg->add_option("--y", y_source)->required();
  e_sg->add_option("--K", K)->capture_default_str();
  e_sg->add_option("--L", depth)->capture_default_str();
  e_sg->callback([&] {
    auto v = sigma_xy_member(parse::word_source(source), parse::word_source(x_source), parse::word_source(y_source), K,
                             depth);
    print_verdict(v, common.fmt());
    exit_code = verdict_exit(v);
  });

  std::size_t show = 40;
  auto* e_phi = ex->add_subcommand("phi-approx", "Bounded search for the least s with x <= T^i(s) <= s");
  e_phi->add_option("--x", x_source)->required();
  e_phi->add_option("--P", P)->capture_default_str();
  e_phi->add_option("--K", K)->capture_default_str();
  e_phi->add_option("--L", depth)->capture_default_str();
  e_phi->add_option("--len", show, "Letters of the candidate to print")->capture_default_str();
  e_phi->callback([&] {
    auto c = gan_phi_approx(parse::word_source(x_source), P, K, depth);
    if (common.fmt() == Format::Json) {
      print_json(Json{{"candidate", c.word.prefix(show).str()}, {"family", c.family}, {"P", c.P}, {"K", c.K}, {"L", c.L},
                      {"label", c.label()}});
    } else {
      std::cout << c.word.prefix(show).str() << "...\n  " << c.family << ", " << c.label() << '\n';
    }
  });

  // modone
  auto* mo = app.add_subcommand("modone", "Fractional parts modulo one")->require_subcommand(1);
  std::string xi, xi_digits;
  unsigned base = 2;
  std::size_t N = 16;

  auto* m_dig = mo->add_subcommand("digits", "Base-b digits of a rational and their enclosure");
  m_dig->add_option("--xi", xi, "Rational p/q in (0,1)")->required();
  m_dig->add_option("--base", base)->capture_default_str();
  m_dig->add_option("--N", N)->capture_default_str();
  m_dig->callback([&] {
    auto d = digits_from_rational(parse_rational(xi), base);
    auto w = d.digits.prefix(N);
    auto iv = real_bounds_from_digits(w, base);
    if (common.fmt() == Format::Json) {
      print_json(Json{{"xi", xi}, {"base", base}, {"digits", w.str()},
                      {"periodic", d.digits.periodic_form() ? Json(d.digits.periodic_form()->str()) : Json(nullptr)},
                      {"bounds", io::to_json(iv)}});
    } else {
      std::cout << w.str() << "\n[" << to_string(iv.lo()) << ", " << to_string(iv.hi()) << "]\n";
    }
  });

  std::string digit_word;
  auto* m_fp = mo->add_subcommand("frac-parts", "Enclosures of {xi b^n}, n < N, at precision L");
  m_fp->add_option("--xi", xi, "Rational p/q");
  m_fp->add_option("--xi-digits", xi_digits, "Digit file: base line, digits line");
  m_fp->add_option("--word", digit_word, "Word source read as digits");
  m_fp->add_option("--base", base)->capture_default_str();
  m_fp->add_option("--N", N)->capture_default_str();
  m_fp->add_option("--L", L)->capture_default_str();
  m_fp->callback([&] {
    auto parts = fractional_parts(digits_from_options(xi, xi_digits, digit_word, base), N, L);
    if (common.fmt() == Format::Json) {
      Json arr = Json::array();
      for (std::size_t i = 0; i < parts.size(); ++i) arr.push_back(Json{{"n", i}, {"lo", to_string(parts[i].lo())}, {"hi", to_string(parts[i].hi())}});
      print_json(Json{{"base", base}, {"N", N}, {"L", L}, {"parts", arr}});
    } else {
      std::cout << io::to_csv(parts);
    }
  });

  bool linear = false;
  auto* m_cov = mo->add_subcommand("cover", "Shortest arc covering {xi b^n}, n < N");
  m_cov->add_option("--xi", xi, "Rational p/q");
  m_cov->add_option("--xi-digits", xi_digits, "Digit file: base line, digits line");
  m_cov->add_option("--word", digit_word, "Word source read as digits");
  m_cov->add_option("--base", base)->capture_default_str();
  m_cov->add_option("--N", N)->capture_default_str();
  m_cov->add_option("--L", L)->capture_default_str();
  m_cov->add_flag("--linear", linear, "Interval in [0,1) instead of an arc");
  m_cov->callback([&] {
    auto parts = fractional_parts(digits_from_options(xi, xi_digits, digit_word, base), N, L);
    auto c = min_covering_interval(parts, !linear);
    Json j = io::to_json(c);
    j["base"] = base;
    j["N"] = N;
    j["L"] = L;
    j["reciprocal_base"] = to_string(Rational(1, base));
    if (common.fmt() == Format::Json) {
      print_json(j);
    } else {
      std::cout << "covering length in [" << to_string(c.lo) << ", " << to_string(c.hi) << "]\n";
      std::cout << "  ~ " << static_cast<double>(c.nominal.length) << " (1/b = " << 1.0 / base << ")\n";
    }
  });

  auto* m_cls = mo->add_subcommand("classify", "Sturmian-on-{k,k+1} classification of a digit prefix");
  m_cls->add_option("--xi", xi, "Rational p/q");
  m_cls->add_option("--xi-digits", xi_digits, "Digit file: base line, digits line");
  m_cls->add_option("--word", digit_word, "Word source read as digits");
  m_cls->add_option("--base", base)->capture_default_str();
  m_cls->add_option("--N", N, "Digits to inspect")->capture_default_str();
  m_cls->callback([&] {
    auto d = digits_from_options(xi, xi_digits, digit_word, base);
    auto r = bugeaud_dubickas_classify(d.digits.prefix(N), base);
    if (common.fmt() == Format::Json) {
      print_json(io::to_json(r));
    } else {
      std::cout << r.verdict << " (prefix " << r.length << ")\n  interval: " << r.interval_kind << '\n';
    }
    exit_code = r.verdict == "excluded" ? 1 : 0;
  });

  auto* m_ss = mo->add_subcommand("self-sturmian", "s = 1u with u characteristic Sturmian, at bounds");
  m_ss->add_option("--word", source, "Word source")->required();
  m_ss->add_option("--K", K)->capture_default_str();
  m_ss->add_option("--L", depth)->capture_default_str();
  m_ss->callback([&] {
    auto v = self_sturmian_test(parse::word_source(source), K, depth);
    print_verdict(v, common.fmt());
    exit_code = verdict_exit(v);
  });

  std::string x_rational;
  auto* m_gt = mo->add_subcommand("gamma-tilde", "1 - x <= {2^k x} <= x, exact for rationals");
  m_gt->add_option("--x", x_rational, "Rational in [0,1]")->required();
  m_gt->add_option("--K", K)->capture_default_str();
  m_gt->callback([&] {
    auto r = gamma_tilde_member(parse_rational(x_rational), K);
    if (common.fmt() == Format::Json) {
      print_json(Json{{"x", x_rational}, {"K", K}, {"member", r.member}, {"exact", r.exact},
                      {"violating_k", r.violating_k ? Json(*r.violating_k) : Json(nullptr)}, {"checked", r.checked}});
    } else {
      std::cout << (r.member ? "member" : "not a member") << (r.exact ? " (exact)" : " (through K)") << '\n';
      if (r.violating_k) std::cout << "  fails at k = " << *r.violating_k << '\n';
    }
    exit_code = r.member ? 0 : 1;
  });

  auto* m_tm = mo->add_subcommand("tm-constant", "Enclosure of sum t_n 2^-n from N terms");
  m_tm->add_option("--N", N)->capture_default_str();
  m_tm->callback([&] {
    auto iv = thue_morse_constant(N);
    if (common.fmt() == Format::Json) {
      print_json(Json{{"N", N}, {"bounds", io::to_json(iv)}});
    } else {
      std::cout << "[" << to_string(iv.lo()) << ", " << to_string(iv.hi()) << "] ~ " << static_cast<double>(iv.lo()) << '\n';
    }
  });

  auto* m_vm = mo->add_subcommand("veerman", "r(0 c_alpha) and r(1 c_alpha) from L binary digits");
  m_vm->add_option("--alpha", alpha)->required();
  m_vm->add_option("--L", L)->capture_default_str();
  m_vm->callback([&] {
    auto r = veerman_interval(parse::surd(alpha), L);
    if (common.fmt() == Format::Json) {
      print_json(Json{{"alpha", alpha}, {"L", L}, {"r0", io::to_json(r.r0)}, {"r1", io::to_json(r.r1)},
                      {"difference", io::to_json(r.difference)}, {"midpoint_difference", to_string(r.midpoint_difference)}});
    } else {
      std::cout << "r0 ~ " << static_cast<double>(r.r0.lo()) << ", r1 ~ " << static_cast<double>(r.r1.lo()) << '\n';
      std::cout << "r1 - r0 in [" << to_string(r.difference.lo()) << ", " << to_string(r.difference.hi()) << "]\n";
    }
  });

  // oracle
  auto* orc = app.add_subcommand("oracle", "Brute-force ground truth")->require_subcommand(1);
  auto* o_en = orc->add_subcommand("enumerate", "All balanced binary words of length n");
  o_en->add_option("--n", n)->capture_default_str();
  o_en->callback([&] {
    auto words = oracle::enumerate_balanced(n);
    if (common.fmt() == Format::Json) {
      print_json(Json{{"n", n}, {"count", words.size()}, {"words", io::to_json(words)}});
    } else {
      std::cout << "# balanced binary words of length " << n << ": " << words.size() << '\n';
      for (const auto& w : words) std::cout << w.str() << '\n';
    }
  });

  std::size_t prefix = 4096;
  auto* o_co = orc->add_subcommand("corpus", "Factors of generated episturmian words");
  o_co->add_option("--nmax", n_max)->capture_default_str();
  o_co->add_option("--prefix", prefix)->capture_default_str();
  o_co->callback([&] {
    auto c = oracle::episturmian_factor_corpus(oracle::default_roster(), n_max, prefix);
    if (common.fmt() == Format::Json) {
      Json words = Json::array();
      for (const auto& [key, w] : c.words) words.push_back(key);
      print_json(Json{{"label", "subset of finite episturmian words"}, {"roster", c.roster}, {"n_max", c.n_max},
                      {"prefix", c.prefix_length}, {"count", c.size()}, {"words", words}});
    } else {
      std::cout << c.dump();
    }
  });

  std::size_t cases = 500;
  unsigned seed = 1;
  auto* o_diff = orc->add_subcommand("diff", "Naive sorting versus the extremal module on random cases");
  o_diff->add_option("--cases", cases)->capture_default_str();
  o_diff->add_option("--seed", seed)->capture_default_str();
  o_diff->callback([&] {
    std::mt19937 rng(seed);
    std::size_t mismatches = 0;
    for (std::size_t c = 0; c < cases; ++c) {
      std::size_t size = 2 + rng() % 3;
      std::size_t length = 5 + rng() % 60;
      std::vector<Letter> letters;
      for (std::size_t i = 0; i < length; ++i) letters.emplace_back(rng() % size);
      FiniteWord w(Alphabet::latin(size), letters);
      std::size_t kk = 1 + rng() % length;
      std::vector<Letter> seq;
      for (std::size_t i = 0; i < size; ++i) seq.emplace_back(i);
      std::shuffle(seq.begin(), seq.end(), rng);
      LexOrder order = LexOrder::from_sequence(seq);
      auto [lo, hi] = oracle::naive_min_max(w, kk, order);
      if (!(lo == min_factor(w, kk, order)) || !(hi == max_factor(w, kk, order))) ++mismatches;
    }
    if (common.fmt() == Format::Json) {
      print_json(Json{{"cases", cases}, {"seed", seed}, {"mismatches", mismatches}});
    } else {
      std::cout << cases << " cases, " << mismatches << " mismatches\n";
    }
    exit_code = mismatches == 0 ? 0 : 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return exit_code;
}
