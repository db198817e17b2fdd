#include "cli.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "insets/chebyshev.hpp"
#include "insets/evaluator.hpp"
#include "insets/identities.hpp"
#include "insets/oracle.hpp"
#include "insets/specializations.hpp"

namespace insets::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::int64_t kOracleLimit = 20;
constexpr std::int64_t kSequenceLimit = 64;
constexpr std::int64_t kChebyshevDegreeLimit = 32;

enum class Format { plain, json, csv };

const std::map<std::string, Format> kFormats{{"plain", Format::plain}, {"json", Format::json}, {"csv", Format::csv}};

std::string joinSizes(const std::vector<std::int64_t>& sizes, char sep) {
  std::string out;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(sizes[i]);
  }
  return out;
}

std::string csvQuote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

// ---------------------------------------------------------------------------
// Report rendering

ordered_json parametersJson(const std::vector<Parameter>& params) {
  ordered_json obj = ordered_json::object();
  for (const auto& p : params) {
    std::visit([&](const auto& v) { obj[p.name] = v; }, p.value);
  }
  return obj;
}

std::string parametersText(const std::vector<Parameter>& params) {
  std::string out;
  for (const auto& p : params) {
    if (!out.empty()) out += ' ';
    out += p.name + '=';
    std::visit(
        [&](const auto& v) {
          if constexpr (std::is_same_v<std::decay_t<decltype(v)>, std::int64_t>) {
            out += std::to_string(v);
          } else {
            out += joinSizes(v, ',');
          }
        },
        p.value);
  }
  return out;
}

struct SuiteResult {
  std::string suite;
  std::string variant;  // block-decrement suite only
  bool gating = true;
  std::vector<IdentityReport> reports;
};

void writeReport(std::ostream& os, Format format, const SuiteResult& suite, const IdentityReport& r) {
  switch (format) {
    case Format::json: {
      ordered_json line;
      line["suite"] = suite.suite;
      line["identityId"] = std::string(toString(r.id));
      if (!suite.variant.empty()) line["variant"] = suite.variant;
      line["parameters"] = parametersJson(r.parameters);
      line["lhs"] = toString(r.lhs);
      line["rhs"] = toString(r.rhs);
      line["pass"] = r.pass;
      os << line.dump() << '\n';
      break;
    }
    case Format::csv:
      os << suite.suite << ',' << toString(r.id) << ',' << csvQuote(parametersText(r.parameters)) << ','
         << toString(r.lhs) << ',' << toString(r.rhs) << ',' << (r.pass ? "true" : "false") << '\n';
      break;
    case Format::plain:
      os << (r.pass ? "PASS " : "FAIL ") << toString(r.id) << ' ' << parametersText(r.parameters)
         << " lhs=" << toString(r.lhs) << " rhs=" << toString(r.rhs) << '\n';
      break;
  }
}

// ---------------------------------------------------------------------------
// Grids

// Nondecreasing size tuples of length n with entries in [1, pMax].
void forEachSortedTuple(std::int64_t n, std::int64_t pMax,
                        const std::function<void(const std::vector<std::int64_t>&)>& visit) {
  std::vector<std::int64_t> sizes;
  std::function<void(std::int64_t)> rec = [&](std::int64_t lo) {
    if (static_cast<std::int64_t>(sizes.size()) == n) {
      visit(sizes);
      return;
    }
    for (std::int64_t p = lo; p <= pMax; ++p) {
      sizes.push_back(p);
      rec(p);
      sizes.pop_back();
    }
  };
  rec(1);
}

void forEachProfile(std::int64_t nMin, std::int64_t nMax, std::int64_t pMax, std::int64_t mMax,
                    const std::function<void(const BlockProfile&)>& visit) {
  for (std::int64_t n = nMin; n <= nMax; ++n) {
    forEachSortedTuple(n, pMax, [&](const std::vector<std::int64_t>& sizes) {
      for (std::int64_t m = 0; m <= mMax; ++m) visit(BlockProfile(sizes, m));
    });
  }
}

struct Bounds {
  std::optional<std::int64_t> nMax, pMax, mMax, kMax, sMax, rMax, degreeMax;
  std::vector<std::int64_t> primes{2, 3, 5, 7, 11, 13};
  std::string variant = "as-printed";
};

std::int64_t pick(const std::optional<std::int64_t>& given, std::int64_t fallback) { return given.value_or(fallback); }

identities::BlockDecrementVariant parseVariant(const std::string& name) {
  using V = identities::BlockDecrementVariant;
  for (V v : {V::asPrinted, V::subsetCount, V::subsetSum}) {
    if (identities::toString(v) == name) return v;
  }
  throw ValidationError("variant", "unknown variant '" + name + "' (expected as-printed, subset-count or subset-sum)");
}

void checkBound(std::int64_t value, std::int64_t limit, const char* field) {
  if (value < 0 || value > limit) {
    throw ValidationError(field, std::to_string(value) + " outside the supported range [0, " +
                                     std::to_string(limit) + "]");
  }
}

SuiteResult runSuite(const std::string& suite, const Bounds& b) {
  SuiteResult result{suite, "", true, {}};
  auto& out = result.reports;
  const InsetEvaluator& eval = defaultEvaluator();

  if (suite == "theorem2") {
    const auto kMax = pick(b.kMax, 6);
    checkBound(pick(b.nMax, 3), 8, "n-max");
    forEachProfile(0, pick(b.nMax, 3), pick(b.pMax, 4), pick(b.mMax, 3), [&](const BlockProfile& p) {
      for (std::int64_t k = 0; k <= kMax; ++k) out.push_back(identities::verifyMReduction(p, k, eval));
    });
  } else if (suite == "theorem3") {
    const auto kMax = pick(b.kMax, 6);
    const auto sMax = pick(b.sMax, 3);
    checkBound(pick(b.nMax, 3), 8, "n-max");
    forEachProfile(0, pick(b.nMax, 3), pick(b.pMax, 4), pick(b.mMax, 3), [&](const BlockProfile& p) {
      for (std::int64_t k = 0; k <= kMax; ++k) {
        for (std::int64_t s = 1; s <= sMax; ++s) out.push_back(identities::verifyKRecurrence(p, k, s, eval));
      }
    });
    for (std::int64_t p = 1; p <= pick(b.pMax, 4); ++p) {
      for (std::int64_t k = 0; k <= kMax; ++k) {
        for (std::int64_t s = 0; s <= sMax; ++s) out.push_back(identities::verifyBinomialFromK(p, k, s));
      }
    }
  } else if (suite == "theorem4") {
    const auto kMax = pick(b.kMax, 6);
    checkBound(pick(b.nMax, 4), 8, "n-max");
    forEachProfile(1, pick(b.nMax, 4), pick(b.pMax, 4), pick(b.mMax, 3), [&](const BlockProfile& p) {
      for (std::int64_t k = 0; k <= kMax; ++k) {
        for (std::int64_t j = 1; j <= p.blockCount(); ++j) out.push_back(identities::verifyBlockRemoval(p, k, j, eval));
      }
    });
  } else if (suite == "theorem7") {
    result.gating = false;
    result.variant = b.variant;
    const auto variant = parseVariant(b.variant);
    const auto kMax = pick(b.kMax, 4);
    checkBound(pick(b.nMax, 3), 6, "n-max");
    forEachProfile(1, pick(b.nMax, 3), pick(b.pMax, 3), pick(b.mMax, 2), [&](const BlockProfile& p) {
      const auto n = p.blockCount();
      for (std::int64_t k = 0; k <= kMax; ++k) {
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
          std::vector<std::int64_t> subset;
          for (std::int64_t i = 0; i < n; ++i) {
            if (mask >> i & 1) subset.push_back(i + 1);
          }
          out.push_back(identities::verifyBlockDecrement(p, k, subset, variant, eval));
        }
      }
    });
  } else if (suite == "vandermonde") {
    for (std::int64_t p = 1; p <= pick(b.pMax, 8); ++p) {
      for (std::int64_t m = 0; m <= pick(b.mMax, 8); ++m) {
        for (std::int64_t k = 0; k <= pick(b.kMax, 8); ++k) out.push_back(identities::verifyVandermonde(p, m, k));
      }
    }
  } else if (suite == "corollary1") {
    for (std::int64_t q : b.primes) {
      for (std::int64_t r = 2; r <= pick(b.rMax, 6); ++r) {
        for (std::int64_t m = 0; m <= pick(b.mMax, 6); ++m) out.push_back(identities::verifyPrimeDivisibility(q, r, m));
      }
    }
  } else if (suite == "power") {
    for (std::int64_t n = 1; n <= pick(b.nMax, 6); ++n) {
      for (std::int64_t p = 1; p <= pick(b.pMax, 5); ++p) {
        for (std::int64_t m = 0; m <= pick(b.mMax, 5); ++m) out.push_back(identities::verifyPowerExpansion(n, p, m));
      }
    }
  } else if (suite == "chebyshev") {
    const auto degreeMax = pick(b.degreeMax, 12);
    checkBound(degreeMax, kChebyshevDegreeLimit, "degree-max");
    for (auto kind : {chebyshev::Kind::second, chebyshev::Kind::first}) {
      for (auto* batch : {&chebyshev::verifyTable, &chebyshev::verifyExplicit, &chebyshev::verifyCoefficientRecurrence}) {
        auto reports = batch(degreeMax, kind);
        out.insert(out.end(), reports.begin(), reports.end());
      }
      auto reports = chebyshev::verifyCRecurrence(degreeMax, degreeMax, chebyshev::extraFor(kind));
      out.insert(out.end(), reports.begin(), reports.end());
    }
  } else {
    throw ValidationError("suite", "unknown suite '" + suite + "'");
  }
  return result;
}

const std::vector<std::string> kSuites{"theorem2", "theorem3", "theorem4",   "theorem7",
                                       "vandermonde", "corollary1", "power", "chebyshev"};

// ---------------------------------------------------------------------------
// Commands

struct Common {
  std::string format = "plain";
  std::string output;
};

void addCommon(CLI::App* cmd, Common& common) {
  cmd->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"plain", "json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--output", common.output, "Write results to this file instead of standard output");
}

struct ProfileArgs {
  std::string blocks;
  std::int64_t extra = 0;
  std::int64_t k = 0;

  BlockProfile profile() const { return BlockProfile(parseBlocks(blocks), extra); }
};

void addProfileArgs(CLI::App* cmd, ProfileArgs& args) {
  cmd->add_option("--blocks", args.blocks, "Main block sizes, e.g. 2,3,2 or 2x5");
  cmd->add_option("--extra", args.extra, "Size of the extra (unconstrained) block")->capture_default_str();
  cmd->add_option("--k", args.k, "Inset size offset; subsets have n+k elements")->required();
}

ordered_json profileJson(const BlockProfile& profile, std::int64_t k) {
  ordered_json obj;
  obj["n"] = profile.blockCount();
  obj["blocks"] = profile.mainSizes();
  obj["extra"] = profile.extraSize();
  obj["k"] = k;
  return obj;
}

int cmdEval(const ProfileArgs& args, Format format, std::ostream& out) {
  const BlockProfile profile = args.profile();
  const BigInt value = defaultEvaluator().evaluate(profile, args.k);
  switch (format) {
    case Format::plain: out << toString(value) << '\n'; break;
    case Format::json: {
      auto obj = profileJson(profile, args.k);
      obj["value"] = toString(value);
      out << obj.dump() << '\n';
      break;
    }
    case Format::csv:
      out << "n,k,extra,blocks,value\n"
          << profile.blockCount() << ',' << args.k << ',' << profile.extraSize() << ','
          << csvQuote(joinSizes(profile.mainSizes(), ',')) << ',' << toString(value) << '\n';
      break;
  }
  return kSuccess;
}

int cmdOracle(const ProfileArgs& args, Format format, std::ostream& out, std::ostream& err) {
  const BlockProfile profile = args.profile();
  if (profile.total() > kOracleLimit) {
    err << "error: universe has N=" << profile.total() << " elements; brute force is limited to N <= "
        << kOracleLimit << ". Use `eval` for larger profiles.\n";
    return kInvalidInput;
  }
  const BigInt count = oracle::bruteForce(profile, args.k);
  const BigInt evaluated = defaultEvaluator().evaluate(profile, args.k);
  const bool match = count == evaluated;
  switch (format) {
    case Format::plain: out << toString(count) << " match=" << (match ? "true" : "false") << '\n'; break;
    case Format::json: {
      auto obj = profileJson(profile, args.k);
      obj["count"] = toString(count);
      obj["evaluated"] = toString(evaluated);
      obj["match"] = match;
      out << obj.dump() << '\n';
      break;
    }
    case Format::csv:
      out << "n,k,extra,blocks,count,evaluated,match\n"
          << profile.blockCount() << ',' << args.k << ',' << profile.extraSize() << ','
          << csvQuote(joinSizes(profile.mainSizes(), ',')) << ',' << toString(count) << ',' << toString(evaluated)
          << ',' << (match ? "true" : "false") << '\n';
      break;
  }
  return match ? kSuccess : kVerificationFailure;
}

int cmdVerify(const std::string& suite, const Bounds& bounds, Format format, std::ostream& out) {
  std::vector<SuiteResult> results;
  if (suite == "all") {
    for (const auto& name : kSuites) results.push_back(runSuite(name, bounds));
  } else {
    results.push_back(runSuite(suite, bounds));
  }

  std::size_t total = 0, passed = 0, gatingFailures = 0;
  if (format == Format::csv) out << "suite,identity,parameters,lhs,rhs,pass\n";
  for (const auto& r : results) {
    for (const auto& report : r.reports) {
      writeReport(out, format, r, report);
      ++total;
      if (report.pass) {
        ++passed;
      } else if (r.gating) {
        ++gatingFailures;
      }
    }
  }
  const std::size_t failed = total - passed;
  switch (format) {
    case Format::json: {
      ordered_json summary;
      summary["suite"] = suite;
      summary["total"] = total;
      summary["passed"] = passed;
      summary["failed"] = failed;
      summary["gatingFailures"] = gatingFailures;
      out << ordered_json{{"summary", summary}}.dump() << '\n';
      break;
    }
    case Format::csv:
    case Format::plain:
      out << (format == Format::csv ? "# " : "") << "summary suite=" << suite << " total=" << total
          << " passed=" << passed << " failed=" << failed << " gating_failures=" << gatingFailures << '\n';
      break;
  }
  return gatingFailures == 0 ? kSuccess : kVerificationFailure;
}

struct SequenceArgs {
  std::string kind;
  std::int64_t count = 10;
  std::optional<std::int64_t> first;
  CatalogParams params{2, 1, 0, 0, 0};
};

int cmdSequence(const SequenceArgs& args, Format format, std::ostream& out) {
  const auto kind = parseSpecializationKind(args.kind);
  checkBound(args.count, kSequenceLimit, "count");
  CatalogParams params = args.params;
  params.count = args.count;
  params.first = args.first.value_or(defaultFirstIndex(kind));
  const auto terms = specializationCatalog(kind, params);

  switch (format) {
    case Format::plain:
      for (std::size_t i = 0; i < terms.size(); ++i) out << (i ? " " : "") << toString(terms[i]);
      out << '\n';
      break;
    case Format::json:
      for (std::size_t i = 0; i < terms.size(); ++i) {
        ordered_json line;
        line["kind"] = std::string(toString(kind));
        line["index"] = params.first + static_cast<std::int64_t>(i);
        line["value"] = toString(terms[i]);
        out << line.dump() << '\n';
      }
      break;
    case Format::csv:
      out << "index,value\n";
      for (std::size_t i = 0; i < terms.size(); ++i) {
        out << params.first + static_cast<std::int64_t>(i) << ',' << toString(terms[i]) << '\n';
      }
      break;
  }
  return kSuccess;
}

int cmdChebyshev(const std::string& kindName, std::int64_t maxDegree, Format format, std::ostream& out) {
  const auto kind = chebyshev::parseKind(kindName);
  checkBound(maxDegree, kChebyshevDegreeLimit, "max-degree");

  struct Row {
    std::int64_t degree, power;
    BigInt value;
    const char* route;
    const char* agreement;
  };
  std::vector<Row> rows;
  bool allAgree = true;
  for (std::int64_t degree = 0; degree <= maxDegree; ++degree) {
    const auto classical = chebyshev::classicalOracle(degree, kind);
    const bool constructible = chebyshev::isConstructible(degree, kind);
    for (const auto& [power, value] : classical) {
      const char* agreement = "na";
      if (constructible) {
        const BigInt combinatorial = chebyshev::coefficient(degree, power, kind);
        const bool agree = combinatorial == value;
        allAgree = allAgree && agree;
        agreement = agree ? "true" : "false";
        rows.push_back({degree, power, combinatorial, "combinatorial", agreement});
      }
      rows.push_back({degree, power, value, "classical", agreement});
    }
    if (constructible) {
      // Anything the construction yields that the recurrence does not.
      for (const auto& c : chebyshev::polynomialCoefficients(degree, kind)) {
        bool known = false;
        for (const auto& entry : classical) known = known || entry.first == c.index.power;
        if (!known) {
          allAgree = false;
          rows.push_back({degree, c.index.power, c.value, "combinatorial", "false"});
        }
      }
    }
  }

  switch (format) {
    case Format::csv:
    case Format::plain: {
      const char sep = format == Format::csv ? ',' : ' ';
      out << "degree" << sep << "power" << sep << "value" << sep << "route" << sep << "agreement\n";
      for (const auto& r : rows) {
        out << r.degree << sep << r.power << sep << toString(r.value) << sep << r.route << sep << r.agreement << '\n';
      }
      break;
    }
    case Format::json:
      for (const auto& r : rows) {
        ordered_json line;
        line["kind"] = std::string(chebyshev::toString(kind));
        line["degree"] = r.degree;
        line["power"] = r.power;
        line["value"] = toString(r.value);
        line["route"] = r.route;
        line["agreement"] = r.agreement;
        out << line.dump() << '\n';
      }
      break;
  }
  return allAgree ? kSuccess : kVerificationFailure;
}

}  // namespace

std::vector<std::int64_t> parseBlocks(const std::string& text) {
  std::vector<std::int64_t> sizes;
  if (text.empty()) return sizes;
  std::stringstream ss(text);
  std::string item;
  auto toInt = [&](const std::string& s) -> std::int64_t {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (s.empty() || used != s.size()) throw ValidationError("blocks", "cannot parse '" + s + "' in '" + text + "'");
    return v;
  };
  while (std::getline(ss, item, ',')) {
    if (auto x = item.find('x'); x != std::string::npos) {
      const std::int64_t size = toInt(item.substr(0, x));
      const std::int64_t repeat = toInt(item.substr(x + 1));
      if (repeat < 0) throw ValidationError("blocks", "negative repeat count in '" + item + "'");
      sizes.insert(sizes.end(), static_cast<std::size_t>(repeat), size);
    } else {
      sizes.push_back(toInt(item));
    }
  }
  if (!text.empty() && text.back() == ',') throw ValidationError("blocks", "trailing comma in '" + text + "'");
  return sizes;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counts of subsets meeting every block of a partitioned set"};
  app.name(args.empty() ? "insets-cli" : args.front());
  app.require_subcommand(1);

  Common common;
  ProfileArgs evalArgs, oracleArgs;
  auto* evalCmd = app.add_subcommand("eval", "Evaluate F(n,k,P,m) exactly");
  addProfileArgs(evalCmd, evalArgs);
  addCommon(evalCmd, common);

  auto* oracleCmd = app.add_subcommand("oracle", "Count insets by brute-force enumeration (N <= 20)");
  addProfileArgs(oracleCmd, oracleArgs);
  addCommon(oracleCmd, common);

  std::string suite = "all";
  Bounds bounds;
  auto* verifyCmd = app.add_subcommand("verify", "Check identities over a parameter grid; JSON lines with --format json");
  std::vector<std::string> suiteNames = kSuites;
  suiteNames.push_back("all");
  verifyCmd->add_option("--suite", suite, "Identity suite")->check(CLI::IsMember(suiteNames))->capture_default_str();
  verifyCmd->add_option("--n-max", bounds.nMax, "Largest number of main blocks");
  verifyCmd->add_option("--p-max", bounds.pMax, "Largest block size");
  verifyCmd->add_option("--m-max", bounds.mMax, "Largest extra block size");
  verifyCmd->add_option("--k-max", bounds.kMax, "Largest k");
  verifyCmd->add_option("--s-max", bounds.sMax, "Largest step of the k-recurrence");
  verifyCmd->add_option("--r-max", bounds.rMax, "Largest base r for the prime divisibility check");
  verifyCmd->add_option("--degree-max", bounds.degreeMax, "Largest Chebyshev degree");
  verifyCmd->add_option("--primes", bounds.primes, "Primes for the divisibility check")->delimiter(',');
  verifyCmd->add_option("--variant", bounds.variant, "Block-decrement right-hand side: as-printed, subset-count, subset-sum")
      ->capture_default_str();
  addCommon(verifyCmd, common);

  SequenceArgs seqArgs;
  auto* seqCmd = app.add_subcommand("sequence", "Emit a classical sequence computed through F");
  seqCmd->add_option("--kind", seqArgs.kind, "power, factorial, rising, falling or binomial")->required();
  seqCmd->add_option("--count", seqArgs.count, "Number of terms (<= 64)")->capture_default_str();
  seqCmd->add_option("--first", seqArgs.first, "Index of the first term");
  seqCmd->add_option("--p", seqArgs.params.p, "Block size for powers")->capture_default_str();
  seqCmd->add_option("--s", seqArgs.params.s, "Shift for rising/falling factorials")->capture_default_str();
  seqCmd->add_option("--m", seqArgs.params.m, "Upper index for binomial rows")->capture_default_str();
  addCommon(seqCmd, common);

  std::string chebKind = "second";
  std::int64_t maxDegree = 12;
  auto* chebCmd = app.add_subcommand("chebyshev", "Chebyshev coefficient table, combinatorial vs classical");
  chebCmd->add_option("--kind", chebKind, "first or second")->capture_default_str();
  chebCmd->add_option("--max-degree", maxDegree, "Largest degree (<= 32)")->capture_default_str();
  addCommon(chebCmd, common);

  std::vector<std::string> argv(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(argv.begin(), argv.end());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help, diag;
    const int code = app.exit(e, help, diag);
    out << help.str();
    err << diag.str();
    return code == 0 ? kSuccess : kInvalidInput;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!common.output.empty()) {
    file.open(common.output);
    if (!file) {
      err << "error: cannot open " << common.output << " for writing\n";
      return kInvalidInput;
    }
    sink = &file;
  }
  const Format format = kFormats.at(common.format);

  try {
    if (evalCmd->parsed()) return cmdEval(evalArgs, format, *sink);
    if (oracleCmd->parsed()) return cmdOracle(oracleArgs, format, *sink, err);
    if (verifyCmd->parsed()) return cmdVerify(suite, bounds, format, *sink);
    if (seqCmd->parsed()) return cmdSequence(seqArgs, format, *sink);
    if (chebCmd->parsed()) return cmdChebyshev(chebKind, maxDegree, format, *sink);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
  return kInvalidInput;
}

}  // namespace insets::cli
