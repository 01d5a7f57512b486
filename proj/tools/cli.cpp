#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif
#include <nlohmann/json.hpp>

#include "skeinlab/colored_states.hpp"
#include "skeinlab/errors.hpp"
#include "skeinlab/fixtures.hpp"
#include "skeinlab/parallel.hpp"
#include "skeinlab/tails.hpp"

namespace skeinlab::cli {

using nlohmann::json;

void RunConfig::validate() const {
  if (pd && !files.empty()) throw InputError("--pd and --file are mutually exclusive");
  if (n < 0) throw InputError("-n must be non-negative");
  if (n_max < 1) throw InputError("--nmax must be positive");
  if (max_width < 0) throw InputError("--max-width must be positive");
  if (max_states == 0) throw InputError("--max-states must be positive");
  if (jobs < 0) throw InputError("--jobs must be positive");
}

EvalOptions RunConfig::eval_options() const {
  EvalOptions o;
  if (max_width > 0) o.max_width = max_width;
  o.max_states = max_states;
  return o;
}

std::vector<LinkDiagram> read_input_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  std::vector<LinkDiagram> out;
  if (const auto first = text.find_first_not_of(" \t\r\n"); first != std::string::npos && text[first] == '{') {
    FixtureSet set = load_fixtures(path);
    for (auto& f : set.fixtures) out.push_back(std::move(f.diagram));
    return out;
  }
  std::istringstream lines(text);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    ++count;
    std::string name = path + ":" + std::to_string(count);
    if (auto colon = line.find(':'); colon != std::string::npos) {
      name = line.substr(0, colon);
      name.erase(0, name.find_first_not_of(" \t"));
      name.erase(name.find_last_not_of(" \t") + 1);
      line.erase(0, colon + 1);
    }
    LinkDiagram d = parse_pd(line);
    d.set_name(name);
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<LinkDiagram> resolve_inputs(const RunConfig& config) {
  config.validate();
  std::vector<LinkDiagram> out;
  if (config.pd) {
    LinkDiagram d = parse_pd(*config.pd);
    d.set_name("input");
    out.push_back(std::move(d));
  } else if (!config.files.empty()) {
    for (const auto& f : config.files)
      for (auto& d : read_input_file(f)) out.push_back(std::move(d));
  } else {
    for (auto& f : load_default_fixtures().fixtures) out.push_back(std::move(f.diagram));
  }
  return out;
}

namespace {

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

void emit_json(std::ostream& out, const std::vector<json>& items) {
  if (items.size() == 1)
    out << items.front().dump(2) << "\n";
  else
    out << json(items).dump(2) << "\n";
}

int polynomial_command(const RunConfig& config, std::ostream& out, bool jones) {
  const auto inputs = resolve_inputs(config);
  const EvalOptions opts = config.eval_options();
  std::vector<LaurentPolynomial> values(inputs.size());
  parallel_for(static_cast<int>(inputs.size()), config.jobs, [&](int i) {
    values[i] = jones ? colored_jones(inputs[i], config.n, opts) : bracket(inputs[i], opts);
  });
  const char* key = jones ? "jones" : "bracket";
  switch (config.format) {
    case Format::Human:
      for (std::size_t i = 0; i < inputs.size(); ++i) {
        if (inputs.size() > 1) out << inputs[i].name() << ": ";
        out << values[i].to_string() << "\n";
      }
      break;
    case Format::Json: {
      std::vector<json> items;
      for (std::size_t i = 0; i < inputs.size(); ++i) {
        json j{{"link", inputs[i].name()}, {key, to_json(values[i])}, {"text", values[i].to_string()}};
        if (jones) j["n"] = config.n;
        items.push_back(std::move(j));
      }
      emit_json(out, items);
      break;
    }
    case Format::Csv:
      out << (jones ? "link,n,jones\n" : "link,bracket\n");
      for (std::size_t i = 0; i < inputs.size(); ++i) {
        out << csv_quote(inputs[i].name()) << ",";
        if (jones) out << config.n << ",";
        out << csv_quote(values[i].to_string()) << "\n";
      }
      break;
  }
  return kOk;
}

std::string join(const std::vector<Integer>& v, std::size_t count) {
  std::string s;
  for (std::size_t i = 0; i < std::min(count, v.size()); ++i) {
    if (i) s += ' ';
    s += v[i].get_str();
  }
  return s;
}

}  // namespace

int cmd_bracket(const RunConfig& config, std::ostream& out, std::ostream&) { return polynomial_command(config, out, false); }

int cmd_cjones(const RunConfig& config, std::ostream& out, std::ostream&) { return polynomial_command(config, out, true); }

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::vector<LinkDiagram> inputs;
  std::vector<std::string> skipped;
  for (auto& d : resolve_inputs(config)) {
    if (is_alternating(d)) {
      inputs.push_back(std::move(d));
    } else {
      err << "warning: skipping " << d.name() << ": not alternating\n";
      skipped.push_back(d.name());
    }
  }
  InvariantCache cache(config.eval_options());
  std::vector<StabilityReport> reports(inputs.size());
  parallel_for(static_cast<int>(inputs.size()), config.jobs,
               [&](int i) { reports[i] = stability_report(inputs[i], config.n_max, cache); });

  bool pass = true;
  for (const auto& r : reports)
    if (!r.pass()) {
      pass = false;
      err << "verification failed: " << r.first_failure() << "\n";
    }

  switch (config.format) {
    case Format::Human: {
      auto mark = [](bool b) { return b ? "ok" : "FAIL"; };
      out << "link n span jones_vs_b_state next_b_state_vs_jones next_jones_vs_jones\n";
      for (const auto& r : reports) {
        for (const auto& e : r.entries) {
          out << r.link << " " << e.n << " " << 4 * e.n << " " << mark(e.jones_vs_b_state) << " "
              << mark(e.next_b_state_vs_jones) << " " << mark(e.next_jones_vs_jones);
          if (config.timings) out << " " << e.seconds_jones << "s " << e.seconds_b_state << "s";
          out << "\n";
        }
        if (r.tail)
          out << r.link << " tail[" << r.tail->certified_length << "]: " << join(r.tail->coefficients, r.tail->certified_length)
              << "\n";
      }
      out << (pass ? "all checks passed" : "some checks FAILED") << "\n";
      break;
    }
    case Format::Json: {
      json rs = json::array();
      for (const auto& r : reports) rs.push_back(r.to_json(config.timings));
      out << json{{"n_max", config.n_max}, {"pass", pass}, {"reports", rs}, {"skipped", skipped}}.dump(2) << "\n";
      break;
    }
    case Format::Csv:
      out << StabilityReport::csv_header(config.timings) << "\n";
      for (const auto& r : reports) out << r.to_csv_rows(config.timings);
      break;
  }
  return pass ? kOk : kVerificationFailure;
}

int cmd_tail(const RunConfig& config, std::ostream& out, std::ostream&) {
  const auto inputs = resolve_inputs(config);
  InvariantCache cache(config.eval_options());
  std::vector<std::pair<CoefficientPrefix, CoefficientPrefix>> results(inputs.size());
  parallel_for(static_cast<int>(inputs.size()), config.jobs, [&](int i) {
    results[i] = {tail_prefix(inputs[i], config.n_max, cache), head_prefix(inputs[i], config.n_max, cache)};
  });
  switch (config.format) {
    case Format::Human:
      for (std::size_t i = 0; i < inputs.size(); ++i)
        for (const auto* p : {&results[i].first, &results[i].second})
          out << inputs[i].name() << " " << (p->end == End::Lowest ? "tail" : "head") << "[" << p->certified_length
              << "]: " << join(p->coefficients, p->certified_length) << "\n";
      break;
    case Format::Json: {
      std::vector<json> items;
      for (std::size_t i = 0; i < inputs.size(); ++i)
        items.push_back({{"link", inputs[i].name()},
                         {"n_max", config.n_max},
                         {"tail", results[i].first.to_json()},
                         {"head", results[i].second.to_json()}});
      emit_json(out, items);
      break;
    }
    case Format::Csv:
      out << "link,end,n_max,certified_length,certified,coefficients\n";
      for (std::size_t i = 0; i < inputs.size(); ++i)
        for (const auto* p : {&results[i].first, &results[i].second})
          out << csv_quote(inputs[i].name()) << "," << to_string(p->end) << "," << config.n_max << "," << p->certified_length
              << "," << join(p->coefficients, p->certified_length) << "," << join(p->coefficients, p->coefficients.size())
              << "\n";
      break;
  }
  return kOk;
}

int cmd_adequacy(const RunConfig& config, std::ostream& out, std::ostream&) {
  const auto inputs = resolve_inputs(config);
  struct Row {
    std::string link;
    bool a, b, alternating;
    int sa, sb;
  };
  std::vector<Row> rows;
  for (const auto& d : inputs)
    rows.push_back({d.name(), is_A_adequate(d), is_B_adequate(d), is_alternating(d), apply_state(d, all_A_state(d)).circles,
                    apply_state(d, all_B_state(d)).circles});
  auto yn = [](bool v) { return v ? "true" : "false"; };
  switch (config.format) {
    case Format::Human:
      out << "link A_adequate B_adequate adequate alternating |s_A| |s_B|\n";
      for (const auto& r : rows)
        out << r.link << " " << yn(r.a) << " " << yn(r.b) << " " << yn(r.a && r.b) << " " << yn(r.alternating) << " " << r.sa
            << " " << r.sb << "\n";
      break;
    case Format::Json: {
      std::vector<json> items;
      for (const auto& r : rows)
        items.push_back({{"link", r.link},
                         {"A_adequate", r.a},
                         {"B_adequate", r.b},
                         {"adequate", r.a && r.b},
                         {"alternating", r.alternating},
                         {"s_A", r.sa},
                         {"s_B", r.sb}});
      emit_json(out, items);
      break;
    }
    case Format::Csv:
      out << "link,A_adequate,B_adequate,adequate,alternating,s_A,s_B\n";
      for (const auto& r : rows)
        out << csv_quote(r.link) << "," << yn(r.a) << "," << yn(r.b) << "," << yn(r.a && r.b) << "," << yn(r.alternating)
            << "," << r.sa << "," << r.sb << "\n";
      break;
  }
  return kOk;
}

int cmd_states(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.n < 1) throw InputError("states needs -n >= 1");
  const auto inputs = resolve_inputs(config);
  const EvalOptions opts = config.eval_options();
  bool all_ok = true;
  std::vector<json> items;
  for (const auto& d : inputs) {
    const int k = d.crossing_count();
    if (k >= 63 || (std::size_t{1} << k) > opts.max_states)
      throw ResourceLimitError("colored state count 2^" + std::to_string(k) + " exceeds the state cap");
    const int count = 1 << k;
    std::vector<RationalFunction> values(count);
    parallel_for(count, config.jobs, [&](int mask) {
      values[mask] = evaluate_rational(build_upsilon(d, config.n, ColoredState::from_mask(k, config.n, mask)), opts);
    });
    RationalFunction sum;
    json states = json::array();
    for (int mask = 0; mask < count; ++mask) {
      const ColoredState s = ColoredState::from_mask(k, config.n, mask);
      const LaurentPolynomial a = alpha(d, config.n, s);
      sum += RationalFunction(a) * values[mask];
      std::string signs;
      for (int v : s.signs) signs += v > 0 ? '+' : '-';
      json e{{"signs", signs}, {"alpha_degree", a.min_degree()}};
      e["upsilon_lowest_degree"] = values[mask].is_zero() ? json(nullptr) : json(min_degree(values[mask]));
      e["upsilon_is_laurent"] = values[mask].is_laurent();
      states.push_back(std::move(e));
    }
    const LaurentPolynomial j = colored_jones(d, config.n, opts);
    const bool ok = sum == RationalFunction(j);
    if (!ok) err << "state sum differs from the colored Jones polynomial for " << d.name() << "\n";
    all_ok = all_ok && ok;
    items.push_back({{"link", d.name()}, {"n", config.n}, {"states", states}, {"sum_equals_jones", ok}});
  }
  switch (config.format) {
    case Format::Human:
      for (const auto& it : items) {
        out << it["link"].get<std::string>() << " n=" << config.n << "\n";
        out << "signs alpha_degree upsilon_lowest_degree\n";
        for (const auto& s : it["states"])
          out << s["signs"].get<std::string>() << " " << s["alpha_degree"] << " " << s["upsilon_lowest_degree"] << "\n";
        out << "sum equals J~_n: " << (it["sum_equals_jones"].get<bool>() ? "yes" : "NO") << "\n";
      }
      break;
    case Format::Json:
      emit_json(out, items);
      break;
    case Format::Csv:
      out << "link,n,signs,alpha_degree,upsilon_lowest_degree,upsilon_is_laurent\n";
      for (const auto& it : items)
        for (const auto& s : it["states"])
          out << csv_quote(it["link"].get<std::string>()) << "," << config.n << "," << s["signs"].get<std::string>() << ","
              << s["alpha_degree"] << "," << (s["upsilon_lowest_degree"].is_null() ? std::string() : s["upsilon_lowest_degree"].dump())
              << "," << (s["upsilon_is_laurent"].get<bool>() ? "true" : "false") << "\n";
      break;
  }
  return all_ok ? kOk : kVerificationFailure;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    config.validate();
    if (config.subcommand == "bracket") return cmd_bracket(config, out, err);
    if (config.subcommand == "cjones") return cmd_cjones(config, out, err);
    if (config.subcommand == "verify") return cmd_verify(config, out, err);
    if (config.subcommand == "tail") return cmd_tail(config, out, err);
    if (config.subcommand == "adequacy") return cmd_adequacy(config, out, err);
    if (config.subcommand == "states") return cmd_states(config, out, err);
    err << "unknown subcommand: " << config.subcommand << "\n";
    return kInputError;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const DomainError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const ResourceLimitError& e) {
    err << "resource cap: " << e.what() << "\n";
    return kResourceCap;
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << "\n";
    return kVerificationFailure;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kVerificationFailure;
  }
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Kauffman bracket and colored Jones computations"};
  app.require_subcommand(1);
  RunConfig config;
  std::string pd;
  std::string format = "human";

  const std::map<std::string, std::string> descriptions{
      {"bracket", "Kauffman bracket of each input"},
      {"cjones", "unreduced colored Jones polynomial of color n"},
      {"tail", "certified tail and head coefficient prefixes"},
      {"verify", "stability checks for n = 1..nmax"},
      {"adequacy", "adequacy, alternation and all-A/all-B circle counts"},
      {"states", "colored state decomposition of the color-n polynomial"},
  };
  for (const auto& [name, what] : descriptions) {
    CLI::App* sub = app.add_subcommand(name, what);
    auto* pd_opt = sub->add_option("--pd", pd, "inline PD code");
    sub->add_option("--file", config.files, "PD text file or fixture JSON")->excludes(pd_opt);
    sub->add_option("-n", config.n, "color");
    sub->add_option("--nmax", config.n_max, "largest color");
    sub->add_option("--format", format, "human | json | csv")->check(CLI::IsMember({"human", "json", "csv"}));
    sub->add_option("--max-width", config.max_width, "peak sweep width cap (default $SKEINLAB_MAX_WIDTH or 24)");
    sub->add_option("--max-states", config.max_states, "cap on enumerated states");
    sub->add_option("--jobs", config.jobs, "worker threads (default all cores)");
    sub->add_flag("--timings", config.timings, "include wall-clock seconds in reports");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }
  for (const auto* sub : app.get_subcommands()) {
    config.subcommand = sub->get_name();
    if (sub->count("--pd") > 0) config.pd = pd;
  }
  config.format = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Human;
  if (config.max_width == 0 && app.get_subcommands().front()->count("--max-width") > 0) {
    err << "input error: --max-width must be positive\n";
    return kInputError;
  }
  return run(config, out, err);
}

}  // namespace skeinlab::cli
