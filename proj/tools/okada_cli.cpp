#include "okada/algebra.hpp"
#include "okada/arc_diagram.hpp"
#include "okada/cellular.hpp"
#include "okada/errors.hpp"
#include "okada/io.hpp"
#include "okada/monoid.hpp"
#include "okada/render.hpp"
#include "okada/rewrite.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace okada;
using io::Json;

namespace {

enum Exit { ok = 0, usage = 2, validation = 3, internal = 4 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require_range(const std::string& what, int n, int lo, int hi) {
  if (n < lo || n > hi)
    throw UsageError(what + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "], got " +
                     std::to_string(n));
}

std::string slurp(std::istream& in) {
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

/// "@path" reads a file, "-" reads stdin, anything else is taken literally.
std::string read_argument(const std::string& arg) {
  if (arg == "-") return slurp(std::cin);
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw UsageError("cannot open " + arg.substr(1));
    return slurp(in);
  }
  return arg;
}

std::vector<int> parse_integers(const std::string& text) {
  std::string cleaned = text;
  for (char& c : cleaned)
    if (c == ',' || c == '[' || c == ']') c = ' ';
  std::istringstream in(cleaned);
  std::vector<int> out;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) throw io::SchemaError("not an integer: \"" + token + "\"");
    out.push_back(value);
  }
  return out;
}

Word checked(Word w, int rank) {
  for (int letter : w)
    if (letter < 1 || letter >= rank)
      throw io::SchemaError("letter " + std::to_string(letter) + " outside [1, " + std::to_string(rank - 1) + "]");
  return w;
}

Word parse_word(const std::string& text, int rank) { return checked(parse_integers(text), rank); }

bool looks_like_json_object(const std::string& text) {
  const auto p = text.find_first_not_of(" \t\r\n");
  return p != std::string::npos && text[p] == '{';
}

void emit(const Json& doc) { std::cout << doc.dump(2) << '\n'; }

FibonacciSet parse_set(const std::string& text, int rank) {
  if (looks_like_json_object(text)) return io::fibonacci_set_from_json(io::parse(text));
  try {
    return FibonacciSet(rank, parse_integers(text));
  } catch (const std::invalid_argument& e) {
    throw io::SchemaError(e.what());
  }
}

// A multiplication operand: a generator word (with --n) or a JSON document.
struct Operand {
  std::optional<Word> word;
  Json doc;
};

Operand parse_operand(const std::string& arg) {
  const std::string text = read_argument(arg);
  if (looks_like_json_object(text)) return {std::nullopt, io::parse(text)};
  return {parse_integers(text), {}};
}

AlgebraElement as_element(const Operand& op, int rank) {
  if (op.word) {
    const auto r = normalize(checked(*op.word, rank), rank);
    return AlgebraElement::basis(r.permutation, Polynomial(r.coefficient));
  }
  const std::string kind = op.doc.value("kind", "");
  if (kind == "diagram") return AlgebraElement::basis(diagram_to_perm(io::diagram_from_json(io::payload(op.doc, kind))));
  return io::algebra_element_from_json(io::payload(op.doc, "algebra-element"), rank);
}

DiagramProduct as_diagram(const Operand& op, int rank) {
  if (op.word) return evaluate_word(checked(*op.word, rank), rank);
  return {Monomial(), io::diagram_from_json(io::payload(op.doc, "diagram"))};
}

int operand_rank(const Operand& op, int fallback) {
  if (op.word) return fallback;
  const Json& v = op.doc.contains("value") ? op.doc["value"] : op.doc;
  if (v.is_object() && v.contains("rank")) return v["rank"].get<int>();
  if (v.is_array() && !v.empty() && v[0].contains("perm")) return static_cast<int>(v[0]["perm"].size());
  return fallback;
}

struct Options {
  int n = 4;
  int n_max = 8;
  unsigned threads = 0;
  std::uint64_t seed = 1;
  std::string kind, mode = "generic", format = "svg", word, perm, set, input, left, right, at;
  int index = 1;
  bool count_only = false, random = false, symbolic = false, csv = false;
};

ParameterValues<mpq_class> parse_assignment(const std::string& text) {
  ParameterValues<mpq_class> v;
  std::string cleaned = text;
  for (char& c : cleaned)
    if (c == ',') c = ' ';
  std::istringstream in(cleaned);
  std::string item;
  while (in >> item) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq < 2 || (item[0] != 'x' && item[0] != 'y'))
      throw io::SchemaError("expected assignments like x1=2,y1=1/3, got \"" + item + "\"");
    const int k = std::stoi(item.substr(1, eq - 1));
    mpq_class value;
    if (value.set_str(item.substr(eq + 1), 10) != 0) throw io::SchemaError("not a rational: " + item.substr(eq + 1));
    value.canonicalize();
    (item[0] == 'x' ? v.x : v.y)[k] = value;
  }
  return v;
}

int cmd_enumerate(const Options& o) {
  std::uint64_t count = 0;
  auto out = [&](const Json& j) {
    ++count;
    if (!o.count_only) std::cout << j.dump() << '\n';
  };
  if (o.kind == "yfs") {
    require_range("--n", o.n, 0, 30);
    for (const auto& s : enumerate_yfs(o.n)) out(io::to_json(s));
  } else if (o.kind == "diagrams") {
    require_range("--n", o.n, 0, 10);
    for_each_diagram(o.n, [&](const ArcDiagram& d) { out(io::to_json(d)); });
  } else if (o.kind == "half") {
    require_range("--n", o.n, 0, 14);
    std::optional<FibonacciSet> label;
    if (!o.set.empty()) label = parse_set(o.set, o.n);
    for (const auto& h : enumerate_half(o.n, label)) out(io::to_json(h));
  } else if (o.kind == "chains") {
    require_range("--n", o.n, 0, 14);
    for (const auto& s : enumerate_yfs(o.n))
      if (o.set.empty() || s == parse_set(o.set, o.n))
        for (const auto& c : saturated_chains(s)) out(io::to_json(c));
  } else if (o.kind == "idempotents") {
    require_range("--n", o.n, 0, 10);
    if (o.count_only) {
      count = idempotent_count(o.n, o.threads);
    } else {
      for_each_diagram(o.n, [&](const ArcDiagram& d) {
        if (is_idempotent(d)) out(io::to_json(d));
      });
    }
  } else {
    throw UsageError("unknown kind \"" + o.kind + "\" (yfs, diagrams, half, chains, idempotents)");
  }
  if (o.count_only) std::cout << count << '\n';
  std::cerr << "count: " << count << '\n';
  return ok;
}

int cmd_multiply(const Options& o) {
  const Operand a = parse_operand(o.left), b = parse_operand(o.right);
  const int ra = operand_rank(a, o.n), rb = operand_rank(b, o.n);
  if (ra != rb) throw io::SchemaError("rank mismatch: " + std::to_string(ra) + " and " + std::to_string(rb));
  require_range("rank", ra, 1, 64);
  if (o.mode == "generic") {
    if (a.word && b.word) {
      Word w = *a.word;
      w.insert(w.end(), b.word->begin(), b.word->end());
      emit(io::document("normalization", io::to_json(normalize(checked(w, ra), ra))));
    } else {
      emit(io::document("algebra-element", io::to_json(as_element(a, ra) * as_element(b, ra))));
    }
  } else if (o.mode == "y1" || o.mode == "monoid") {
    const DiagramProduct x = as_diagram(a, ra), y = as_diagram(b, ra);
    if (o.mode == "monoid") {
      emit(io::document("diagram", io::to_json(mproduct(x.diagram, y.diagram))));
    } else {
      const DiagramProduct p = product_y1(x.diagram, y.diagram);
      emit(io::document("product", {{"coeff", io::to_json(x.coefficient * y.coefficient * p.coefficient)},
                                    {"diagram", io::to_json(p.diagram)}}));
    }
  } else {
    throw UsageError("unknown mode \"" + o.mode + "\" (generic, y1, monoid)");
  }
  return ok;
}

int cmd_normalize(const Options& o) {
  require_range("--n", o.n, 1, 64);
  const Word w = parse_word(read_argument(o.word), o.n);
  NormalizationResult r;
  if (o.random) {
    std::mt19937_64 rng(o.seed);
    r = normalize_random(w, o.n, rng);
  } else {
    r = normalize(w, o.n);
  }
  Json doc = io::to_json(r);
  doc["heap"] = io::to_json(heap_from_word(w, o.n));
  emit(io::document("normalization", doc));
  return ok;
}

Permutation parse_permutation(const std::string& text) {
  try {
    return Permutation(parse_integers(text));
  } catch (const std::invalid_argument& e) {
    throw io::SchemaError(e.what());
  }
}

int cmd_rs(const Options& o) {
  const Permutation p = parse_permutation(read_argument(o.perm));
  const auto [left, right] = rs(p);
  emit(io::document("rs", {{"perm", io::to_json(p)}, {"left", io::to_json(left)}, {"right", io::to_json(right)}}));
  return ok;
}

int cmd_rs_inverse(const Options& o) {
  const Json doc = io::parse(read_argument(o.input));
  const Json body = io::payload(doc, "rs");
  Permutation p;
  try {
    p = rs_inverse(io::chain_from_json(body.at("left")), io::chain_from_json(body.at("right")));
  } catch (const Json::exception& e) {
    throw io::SchemaError(e.what());
  } catch (const std::invalid_argument& e) {
    throw io::SchemaError(e.what());
  }
  emit(io::document("permutation", io::to_json(p)));
  return ok;
}

int cmd_green(const Options& o) {
  require_range("--n", o.n, 1, 7);
  const GreenClasses classes(o.n);
  int worst = 0;
  std::map<std::size_t, std::size_t> r_reps;
  for (std::size_t i = 0; i < classes.elements().size(); ++i) {
    worst = std::max(worst, aperiodicity_index(classes.elements()[i]));
    r_reps.emplace(classes.r_class(i), i);
  }
  if (o.csv) {
    std::cout << "r_class,size,involutive_representative,j_representative\n";
    for (const auto& [cls, i] : r_reps) {
      const ArcDiagram& e = classes.elements()[i];
      std::cout << cls << ',' << classes.r_class_members(i).size() << ",\"" << r_class_rep(classes, e).to_string()
                << "\",\"" << j_class_rep(e).to_string() << "\"\n";
    }
    return ok;
  }
  Json r_table = Json::array(), j_table = Json::array();
  for (const auto& [cls, i] : r_reps) {
    const ArcDiagram& e = classes.elements()[i];
    r_table.push_back({{"size", classes.r_class_members(i).size()},
                       {"representative", io::to_json(r_class_rep(classes, e))}});
  }
  for (const FibonacciSet& s : enumerate_yfs(o.n)) {
    const ArcDiagram f = perm_to_diagram(free_involution(s));
    j_table.push_back({{"label", io::to_json(s)},
                       {"size", classes.j_class_members(classes.index_of(f)).size()},
                       {"representative", io::to_json(f)}});
  }
  emit(io::document("green", {{"rank", o.n},
                              {"r_classes", classes.r_class_count()},
                              {"l_classes", classes.l_class_count()},
                              {"j_classes", classes.j_class_count()},
                              {"max_aperiodicity_index", worst},
                              {"r_representatives", r_table},
                              {"j_representatives", j_table}}));
  return ok;
}

int cmd_census(const Options& o) {
  require_range("--n-max", o.n_max, 0, 10);
  if (o.csv) std::cout << "rank,elements,idempotents\n";
  std::uint64_t factorial = 1;
  for (int n = 0; n <= o.n_max; ++n) {
    if (n > 0) factorial *= static_cast<std::uint64_t>(n);
    const std::uint64_t count = idempotent_count(n, o.threads);
    if (o.csv)
      std::cout << n << ',' << factorial << ',' << count << '\n';
    else
      std::cout << Json{{"rank", n}, {"elements", factorial}, {"idempotents", count}}.dump() << '\n';
  }
  return ok;
}

int cmd_gram(const Options& o) {
  require_range("--n", o.n, 1, 8);
  const FibonacciSet s = parse_set(o.set.empty() ? "" : read_argument(o.set), o.n);
  const PolynomialMatrix g = gram_matrix(s);
  Json doc{{"label", io::to_json(s)}, {"matrix", io::to_json(g)}};
  if (o.symbolic) {
    if (g.size() > 12) throw UsageError("symbolic determinants are limited to 12x12 matrices");
    doc["determinant"] = io::to_json(determinant(g));
  }
  if (!o.at.empty()) doc["specialized_determinant"] = determinant(evaluate(g, parse_assignment(o.at))).get_str();
  emit(io::document("gram", doc));
  return ok;
}

int cmd_factorize(const Options& o) {
  const Permutation p = parse_permutation(read_argument(o.perm));
  require_range("permutation size", p.size(), 1, 7);
  const auto f = triangular_factorization(p);
  emit(io::document("factorization", {{"perm", io::to_json(p)},
                                      {"left", io::to_json(f.left)},
                                      {"label", io::to_json(f.label)},
                                      {"right", io::to_json(f.right)},
                                      {"free_involution", io::to_json(free_involution(f.label))}}));
  return ok;
}

int cmd_render(const Options& o) {
  const Format f = parse_format(o.format);
  std::string out;
  if (o.kind == "identity") {
    require_range("--n", o.n, 0, 64);
    out = render(identity(o.n), f);
  } else if (o.kind == "generator") {
    require_range("--n", o.n, 2, 64);
    out = render(generator(o.index, o.n), f);
  } else if (o.kind == "word") {
    require_range("--n", o.n, 1, 64);
    out = render(evaluate_word(parse_word(read_argument(o.word), o.n), o.n).diagram, f);
  } else if (o.kind == "heap") {
    require_range("--n", o.n, 1, 64);
    out = render(heap_from_word(parse_word(read_argument(o.word), o.n), o.n), f);
  } else if (o.kind == "dominance") {
    require_range("--n", o.n, 0, 12);
    out = render_dominance_hasse(o.n, f);
  } else if (o.kind == "yf") {
    require_range("--n", o.n, 0, 8);
    out = render_yf_hasse(o.n, f);
  } else if (o.kind == "diagram" || o.kind == "half") {
    const Json doc = io::parse(read_argument(o.input));
    if (o.kind == "diagram")
      out = render(io::diagram_from_json(io::payload(doc, "diagram")), f);
    else
      out = render(io::half_from_json(io::payload(doc, "half-diagram")), f);
  } else {
    throw UsageError("unknown object \"" + o.kind + "\" (identity, generator, word, heap, diagram, half, dominance, yf)");
  }
  std::cout << out;
  return ok;
}

int cmd_selftest(const Options& o) {
  int failures = 0;
  auto report = [&](const std::string& name, bool pass) {
    std::cout << (pass ? "PASS " : "FAIL ") << name << '\n';
    failures += !pass;
  };
  std::uint64_t factorial = 1;
  bool dims = true;
  for (int n = 1; n <= 6; ++n) {
    factorial *= static_cast<std::uint64_t>(n);
    std::uint64_t seen = 0;
    for_each_diagram(n, [&](const ArcDiagram&) { ++seen; });
    dims = dims && seen == factorial;
  }
  report("diagram count equals N! for N <= 6", dims);
  const std::vector<std::uint64_t> census{1, 1, 2, 6, 22, 108, 594, 4116};
  bool census_ok = true;
  for (int n = 0; n <= 7; ++n) census_ok = census_ok && idempotent_count(n, o.threads) == census[n];
  report("idempotent census for N <= 7", census_ok);
  bool relations = true;
  for (int n = 3; n <= 6; ++n)
    for (int i = 1; i + 1 < n; ++i) {
      const auto e = AlgebraElement::generator(i, n), f = AlgebraElement::generator(i + 1, n);
      AlgebraElement xe = e, yf = f;
      xe *= Polynomial::x(i);
      yf *= Polynomial::y(i);
      relations = relations && e * e == xe && f * e * f == yf;
    }
  report("quadratic and braid relations for N <= 6", relations);
  bool cross = true;
  for (const Permutation& s : all_permutations(4))
    for (const Permutation& t : all_permutations(4)) {
      const auto r = multiply_permutations(s, t);
      const auto p = product_y1(perm_to_diagram(s), perm_to_diagram(t));
      cross = cross && perm_to_diagram(r.permutation) == p.diagram &&
              Polynomial(r.coefficient).at_y_one() == Polynomial(p.coefficient);
    }
  report("rewriting agrees with arc composition at y = 1 for N = 4", cross);
  std::mt19937_64 rng(o.seed);
  bool confluent = true;
  std::uniform_int_distribution<int> letter(1, 5);
  for (int k = 0; k < 100; ++k) {
    Word w(12);
    for (int& l : w) l = letter(rng);
    const auto a = normalize(w, 6), b = normalize_random(w, 6, rng);
    confluent = confluent && a.permutation == b.permutation && a.coefficient == b.coefficient;
  }
  report("random normalization orders agree (100 words, N = 6)", confluent);
  return failures ? internal : ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Okada algebra and monoid toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--threads", o.threads, "worker threads (default: OKADA_THREADS or hardware concurrency)");
  app.add_option("--seed", o.seed, "seed for randomized runs");

  auto* enumerate = app.add_subcommand("enumerate", "stream objects as JSON lines");
  enumerate->add_option("kind", o.kind, "yfs, diagrams, half, chains or idempotents")->required();
  enumerate->add_option("--n", o.n, "rank")->required();
  enumerate->add_option("--label", o.set, "restrict half diagrams or chains to a Fibonacci set, e.g. \"1,2\"");
  enumerate->add_flag("--count-only", o.count_only, "print only the count");

  auto* multiply = app.add_subcommand("multiply", "multiply two elements");
  multiply->add_option("left", o.left, "generator word like \"1 2 1\", or a JSON document (@file, - for stdin)")
      ->required();
  multiply->add_option("right", o.right, "second operand")->required();
  multiply->add_option("--n", o.n, "rank for word operands");
  multiply->add_option("--mode", o.mode, "generic, y1 or monoid");

  auto* normalize_cmd = app.add_subcommand("normalize", "normal form of a generator word");
  normalize_cmd->add_option("word", o.word, "generator word")->required();
  normalize_cmd->add_option("--n", o.n, "rank")->required();
  normalize_cmd->add_flag("--random", o.random, "apply moves in a random order (see --seed)");

  auto* rs_cmd = app.add_subcommand("rs", "pair of chains of a permutation");
  rs_cmd->add_option("perm", o.perm, "one-line notation, e.g. \"3 1 2\"")->required();

  auto* rs_inv = app.add_subcommand("rs-inverse", "permutation of a pair of chains");
  rs_inv->add_option("input", o.input, "rs document (@file, - for stdin)")->required();

  auto* green = app.add_subcommand("green", "Green's classes and representatives");
  green->add_option("--n", o.n, "rank")->required();
  green->add_flag("--csv", o.csv, "R-class table as CSV");

  auto* census = app.add_subcommand("census", "idempotent counts for every rank up to --n-max");
  census->add_option("--n-max", o.n_max, "largest rank");
  census->add_flag("--csv", o.csv, "CSV instead of JSON lines");

  auto* gram = app.add_subcommand("gram", "Gram matrix of a cell module");
  gram->add_option("--n", o.n, "rank")->required();
  gram->add_option("--label", o.set, "Fibonacci set, e.g. \"1,2\" or a JSON set")->required();
  gram->add_flag("--det", o.symbolic, "symbolic determinant");
  gram->add_option("--at", o.at, "determinant at a specialization, e.g. \"x1=2,x2=1/3,y1=5\"");

  auto* factorize = app.add_subcommand("factorize", "triangular factorization of a permutation");
  factorize->add_option("perm", o.perm, "one-line notation")->required();

  auto* render_cmd = app.add_subcommand("render", "SVG or TikZ drawing");
  render_cmd->add_option("object", o.kind, "identity, generator, word, heap, diagram, half, dominance or yf")
      ->required();
  render_cmd->add_option("input", o.input, "document for diagram and half (@file, - for stdin)");
  render_cmd->add_option("--n", o.n, "rank");
  render_cmd->add_option("--i", o.index, "generator index");
  render_cmd->add_option("--word", o.word, "generator word for word and heap");
  render_cmd->add_option("--format", o.format, "svg or tikz");

  auto* selftest = app.add_subcommand("selftest", "quick internal consistency checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  try {
    if (o.threads == 0) o.threads = default_threads();
    if (enumerate->parsed()) return cmd_enumerate(o);
    if (multiply->parsed()) return cmd_multiply(o);
    if (normalize_cmd->parsed()) return cmd_normalize(o);
    if (rs_cmd->parsed()) return cmd_rs(o);
    if (rs_inv->parsed()) return cmd_rs_inverse(o);
    if (green->parsed()) return cmd_green(o);
    if (census->parsed()) return cmd_census(o);
    if (gram->parsed()) return cmd_gram(o);
    if (factorize->parsed()) return cmd_factorize(o);
    if (render_cmd->parsed()) return cmd_render(o);
    if (selftest->parsed()) return cmd_selftest(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return usage;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return internal;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return validation;
  } catch (const std::out_of_range& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return validation;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return internal;
  }
  return usage;
}
