#include "steenrod/builders.hpp"
#include "steenrod/errors.hpp"
#include "steenrod/serialization.hpp"
#include "steenrod/steenrod.hpp"
#include "steenrod/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace steenrod;

namespace {

enum Exit { kPass = 0, kAssertion = 1, kInput = 2, kInternal = 3 };

struct Args {
  std::string variety;
  long p = 2;
  std::string klass = "{}";
  std::string convention = "coh";
  std::string suite;
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string out;
  std::optional<int> n;
  std::optional<int> k;
  int trials = 100;
  bool p_given = false;
};

int max_dim() {
  if (const char* env = std::getenv("STEENROD_MAX_DIM")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      fail(ErrorKind::InvalidInput, std::string("STEENROD_MAX_DIM is not an integer: ") + env);
    }
  }
  return 8;
}

VarietyHandle load_variety(const std::string& text) {
  if (text.empty()) fail(ErrorKind::InvalidInput, "no variety given");
  auto x = parse_variety(text);
  if (x->dim() > max_dim())
    fail(ErrorKind::InvalidInput, x->name() + " exceeds STEENROD_MAX_DIM=" + std::to_string(max_dim()));
  return x;
}

Convention parse_convention(const std::string& c) {
  if (c == "coh" || c == "cohomological") return Convention::Cohomological;
  if (c == "hom" || c == "homological") return Convention::Homological;
  fail(ErrorKind::InvalidInput, "convention must be coh or hom, got \"" + c + "\"");
}

std::vector<ModPClass> operations(const ModPClass& x, Convention c) {
  return c == Convention::Cohomological ? steenrod_cohomological(x) : steenrod_homological(x);
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    const bool quote = fields[i].find_first_of(",\"") != std::string::npos;
    if (!quote) {
      out += fields[i];
      continue;
    }
    out += '"';
    for (char ch : fields[i]) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    out += '"';
  }
  return out + "\n";
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string cmd_describe(const Args& a) {
  const auto x = load_variety(a.variety);
  if (a.format == "csv") {
    std::string out = csv_row({"label", "dim", "degree"});
    for (int i = 0; i < x->size(); ++i)
      out += csv_row({x->cell(i).label, std::to_string(x->cell_dim(i)), to_string(x->degree_vector()[i])});
    return out;
  }
  json cells = json::array();
  json products = json::object();
  json tau = json::object();
  for (int i = 0; i < x->size(); ++i) {
    cells.push_back({{"label", x->cell(i).label}, {"dim", std::to_string(x->cell_dim(i))}});
    tau[x->cell(i).label] = to_json(RationalClass(x, x->tau_matrix().col(i)));
    for (int j = i; j < x->size(); ++j) {
      const auto ab = mul(IntegralClass::basis(x, i), IntegralClass::basis(x, j));
      if (!ab.is_zero()) products[x->cell(i).label + "*" + x->cell(j).label] = to_json(ab);
    }
  }
  json degrees = json::object();
  for (int i : x->cells_of_dim(0)) degrees[x->cell(i).label] = to_string(x->degree_vector()[i]);
  return dump({{"name", x->name()},
               {"spec", variety_spec(*x)},
               {"dim", std::to_string(x->dim())},
               {"cells", cells},
               {"multiplication", products},
               {"degree", degrees},
               {"tangent_ch", to_json(RationalClass(x, x->tangent_ch()))},
               {"tau_matrix", tau}});
}

std::string cmd_operate(const Args& a) {
  const auto x = load_variety(a.variety);
  require_prime(a.p);
  const Convention c = parse_convention(a.convention);
  const IntegralClass input = integral_class_from_json(x, parse_json(a.klass));
  const auto ops = operations(ModPClass::reduce(input, a.p), c);
  if (a.format == "csv") {
    std::string out = csv_row({"k", "label", "coefficient"});
    for (std::size_t k = 0; k < ops.size(); ++k)
      for (int i = 0; i < x->size(); ++i)
        if (ops[k][i] != 0) out += csv_row({std::to_string(k), x->cell(i).label, std::to_string(ops[k][i])});
    return out;
  }
  return dump(operation_result(x, a.p, input, ops, c));
}

std::string cmd_table(const Args& a) {
  const auto x = load_variety(a.variety);
  require_prime(a.p);
  const Convention c = parse_convention(a.convention);
  std::vector<std::string> header{"input", "k"};
  for (const auto& cell : x->cells()) header.push_back(cell.label);
  std::string csv = csv_row(header);
  json rows = json::array();
  for (int i = 0; i < x->size(); ++i) {
    const auto ops = operations(ModPClass::reduce(IntegralClass::basis(x, i), a.p), c);
    for (std::size_t k = 0; k < ops.size(); ++k) {
      std::vector<std::string> row{x->cell(i).label, std::to_string(k)};
      for (int j = 0; j < x->size(); ++j) row.push_back(std::to_string(ops[k][j]));
      csv += csv_row(row);
      rows.push_back({{"input", x->cell(i).label}, {"k", std::to_string(k)}, {"output", to_json(ops[k])}});
    }
  }
  if (a.format == "csv") return csv;
  return dump({{"variety", variety_spec(*x)}, {"p", a.p}, {"convention", to_string(c)}, {"rows", rows}});
}

std::string cmd_verify(const Args& a, int& code) {
  SuiteOptions o;
  o.seed = a.seed;
  if (a.p_given) o.primes = {a.p};
  o.n = a.n;
  o.k = a.k;
  o.trials = a.trials;
  if (!a.variety.empty()) o.variety = load_variety(a.variety);
  if (o.n && *o.n > max_dim())
    fail(ErrorKind::InvalidInput, "--n exceeds STEENROD_MAX_DIM=" + std::to_string(max_dim()));
  if (a.suite.empty()) fail(ErrorKind::InvalidInput, "no suite given");
  const SuiteReport report = run_suite(a.suite, o);
  code = report.passed ? kPass : kAssertion;
  if (a.format == "csv") {
    std::string out = csv_row({"suite", "passed", "checks"});
    out += csv_row({report.suite, report.passed ? "true" : "false", std::to_string(report.checks)});
    for (const auto& [key, value] : report.values.items()) out += csv_row({key, value.get<std::string>(), ""});
    return out;
  }
  return dump(report.to_json());
}

void emit(const Args& a, const std::string& text) {
  if (a.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(a.out);
  if (!file) fail(ErrorKind::InvalidInput, "cannot write " + a.out);
  file << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reduced Steenrod operations on Chow groups of split cellular varieties"};
  app.require_subcommand(1);
  Args a;
  std::string positional;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", a.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", a.out, "Write output to this file");
  };
  auto variety_opts = [&](CLI::App* sub) {
    sub->add_option("spec", positional, "Variety spec: JSON, file, or shorthand like P^3, Q_5, P^1xP^2");
    sub->add_option("--variety", a.variety, "Variety spec: JSON, file, or shorthand");
  };

  auto* describe = app.add_subcommand("describe", "Print basis, multiplication, tangent_ch and tau matrix");
  variety_opts(describe);
  common(describe);

  auto* operate = app.add_subcommand("operate", "Apply all reduced Steenrod operations to a class");
  variety_opts(operate);
  operate->add_option("--p", a.p, "Prime");
  operate->add_option("--class", a.klass, "Class as JSON {label: coefficient}");
  operate->add_option("--convention", a.convention, "coh or hom");
  common(operate);

  auto* table = app.add_subcommand("table", "Operation table over the basis");
  variety_opts(table);
  table->add_option("--p", a.p, "Prime");
  table->add_option("--convention", a.convention, "coh or hom");
  common(table);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("name", positional, "Suite name");
  verify->add_option("--suite", a.suite, "Suite name");
  verify->add_option("--variety", a.variety, "Restrict to one variety");
  auto* p_opt = verify->add_option("--p", a.p, "Restrict to one prime");
  verify->add_option("--seed", a.seed, "Seed for randomized suites");
  verify->add_option("--n", a.n, "Largest n for projective-space suites");
  verify->add_option("--k", a.k, "Index k for characteristic numbers");
  verify->add_option("--trials", a.trials, "Trials per case for randomized suites");
  common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInput;
  }

  try {
    int code = kPass;
    std::string text;
    if (*describe || *operate || *table) {
      if (a.variety.empty()) a.variety = positional;
      else if (!positional.empty()) fail(ErrorKind::InvalidInput, "variety given twice");
    }
    if (*describe) text = cmd_describe(a);
    else if (*operate) text = cmd_operate(a);
    else if (*table) text = cmd_table(a);
    else {
      if (a.suite.empty()) a.suite = positional;
      a.p_given = p_opt->count() > 0;
      text = cmd_verify(a, code);
    }
    emit(a, text);
    return code;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.is_internal() ? kInternal : kInput;
  } catch (const json::exception& e) {
    std::cerr << "error: InvalidInput: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
}
