#include "multikostka/cli.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "multikostka/counting.hpp"
#include "multikostka/error.hpp"
#include "multikostka/ggg.hpp"
#include "multikostka/json_io.hpp"
#include "multikostka/tableau.hpp"
#include "multikostka/wreath.hpp"

namespace multikostka::cli {

namespace {

// "@path" reads the argument from a file.
std::string expand(const std::string& arg) {
  if (arg.empty() || arg.front() != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw Error(ErrorKind::ParseError, "cannot read " + arg.substr(1));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool looks_like_json(const std::string& text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && (text[pos] == '[' || text[pos] == '{');
}

std::vector<int> comma_list(const std::string& text) {
  std::vector<int> out;
  if (text.find_first_not_of(" \t") == std::string::npos) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw Error(ErrorKind::ParseError, "empty entry in list \"" + text + "\"");
    const std::string token = item.substr(b, e - b + 1);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw Error(ErrorKind::ParseError, "not an integer: \"" + token + "\"");
    }
    out.push_back(value);
  }
  return out;
}

Partition partition_arg(const std::string& raw) {
  const std::string text = expand(raw);
  if (looks_like_json(text)) return parse_json_as<Partition>(text);
  return Partition::normalize(comma_list(text));
}

Composition composition_arg(const std::string& raw) {
  const std::string text = expand(raw);
  if (looks_like_json(text)) return parse_json_as<Composition>(text);
  return Composition(comma_list(text));
}

// Nested JSON is a multipartition; a flat list is read as one component.
Multipartition multipartition_arg(const std::string& raw) {
  const std::string text = expand(raw);
  if (looks_like_json(text)) {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw Error(ErrorKind::ParseError, std::string("invalid JSON: ") + e.what());
    }
    if (j.is_array() && std::all_of(j.begin(), j.end(), [](const json& x) { return x.is_array(); }) && !j.empty()) {
      return parse_json_as<Multipartition>(text);
    }
    return Multipartition{parse_json_as<Partition>(text)};
  }
  return Multipartition{Partition::normalize(comma_list(text))};
}

bool is_nested(const std::string& raw) {
  const std::string text = expand(raw);
  if (!looks_like_json(text)) return false;
  const auto first = text.find('[');
  const auto second = text.find_first_not_of(" \t\r\n", first + 1);
  return second != std::string::npos && text[second] == '[';
}

struct Options {
  std::string shape;
  std::string weight;
  std::string input;
  std::string mu;
  int r = 1;
  int d = 1;
  std::optional<int> n;
  bool exit_code = false;
  bool oracle = false;
  bool count_only = false;
  bool pretty = false;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kostka numbers for partitions, multipartitions and Theta-multipartitions", "kostka"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--pretty", opt.pretty, "Indent the JSON output");

  json result;
  int status = Ok;
  std::function<void()> action;

  auto with_shape = [&](CLI::App* sub) { sub->add_option("--shape", opt.shape, "Partition or multipartition")->required(); };
  auto with_weight = [&](CLI::App* sub) { sub->add_option("--weight", opt.weight, "Weight (comma list or JSON)")->required(); };
  auto with_exit = [&](CLI::App* sub) { sub->add_flag("--exit-code", opt.exit_code, "Exit 1 when the predicate is false"); };
  auto predicate = [&](const char* key, bool value) {
    result = json{{key, value}};
    if (opt.exit_code && !value) status = PredicateFalse;
  };

  auto* count = app.add_subcommand("count", "Kostka number K(shape, weight)");
  with_shape(count);
  with_weight(count);
  count->add_flag("--oracle", opt.oracle, "Count by exhaustive enumeration");
  count->callback([&] {
    action = [&] {
      const auto shape = partition_arg(opt.shape);
      const auto w = composition_arg(opt.weight);
      const BigCount k = opt.oracle ? BigCount(count_tableaux(shape, w)) : kostka(shape, w);
      result = json{{"kostka", count_to_json(k)}};
    };
  });

  auto* count_multi = app.add_subcommand("count-multi", "Multipartition Kostka number");
  with_shape(count_multi);
  with_weight(count_multi);
  count_multi->add_flag("--oracle", opt.oracle, "Count by exhaustive enumeration");
  count_multi->callback([&] {
    action = [&] {
      const auto shape = multipartition_arg(opt.shape);
      const auto w = composition_arg(opt.weight);
      const BigCount k = opt.oracle ? BigCount(count_multitableaux(shape, w)) : kostka_multi(shape, w);
      result = json{{"kostka", count_to_json(k)}};
    };
  });

  auto* positive = app.add_subcommand("positive", "Is the (multi)partition Kostka number positive?");
  with_shape(positive);
  with_weight(positive);
  with_exit(positive);
  positive->callback([&] {
    action = [&] { predicate("positive", is_positive(multipartition_arg(opt.shape), composition_arg(opt.weight))); };
  });

  auto certificate_result = [&](const std::optional<IndexCertificate>& cert) {
    predicate("multiplicity_one", cert.has_value());
    if (cert) result["certificate"] = *cert;
  };

  auto* mult_one = app.add_subcommand("mult-one", "Is K(shape, weight) = 1? Prints the index certificate");
  with_shape(mult_one);
  with_weight(mult_one);
  with_exit(mult_one);
  mult_one->callback([&] {
    action = [&] { certificate_result(is_multiplicity_one(partition_arg(opt.shape), composition_arg(opt.weight))); };
  });

  auto* mult_one_multi = app.add_subcommand("mult-one-multi", "Multipartition multiplicity-one test");
  with_shape(mult_one_multi);
  with_weight(mult_one_multi);
  with_exit(mult_one_multi);
  mult_one_multi->callback([&] {
    action = [&] {
      certificate_result(is_multiplicity_one_multi(multipartition_arg(opt.shape), composition_arg(opt.weight)));
    };
  });

  auto* unique = app.add_subcommand("unique", "Is the shape itself the only weight with K = 1?");
  with_shape(unique);
  with_exit(unique);
  unique->callback([&] { action = [&] { predicate("unique_weight", unique_weight(partition_arg(opt.shape))); }; });

  auto* unique_multi = app.add_subcommand("unique-multi", "Is tilde the only weight with K = 1?");
  with_shape(unique_multi);
  with_exit(unique_multi);
  unique_multi->callback([&] {
    action = [&] { predicate("unique_weight", unique_weight_multi(multipartition_arg(opt.shape))); };
  });

  auto* enumerate = app.add_subcommand("enumerate", "List every (multi)tableau of the shape and weight");
  with_shape(enumerate);
  with_weight(enumerate);
  enumerate->add_flag("--count-only", opt.count_only, "Only report the number found");
  enumerate->callback([&] {
    action = [&] {
      const auto w = composition_arg(opt.weight);
      if (is_nested(opt.shape)) {
        const auto shape = multipartition_arg(opt.shape);
        if (opt.count_only) {
          const auto n = count_multitableaux(shape, w);
          result = json{{"count", count_to_json(n)}};
        } else {
          const auto all = enumerate_multitableaux(shape, w);
          result = json{{"count", count_to_json(all.size())}, {"multitableaux", all}};
        }
      } else {
        const auto shape = partition_arg(opt.shape);
        if (opt.count_only) {
          const auto n = count_tableaux(shape, w);
          result = json{{"count", count_to_json(n)}};
        } else {
          const auto all = enumerate_tableaux(shape, w);
          result = json{{"count", count_to_json(all.size())}, {"tableaux", all}};
        }
      }
    };
  });

  auto* greedy = app.add_subcommand("greedy", "Greedy tableau of the shape and partition weight");
  with_shape(greedy);
  with_weight(greedy);
  greedy->callback([&] {
    action = [&] {
      // Computed before the brace list: an exception thrown mid-list leaks with GCC 11.
      const auto t = greedy_tableau(partition_arg(opt.shape), partition_arg(opt.weight));
      result = json{{"tableau", t}};
    };
  });

  auto* wreath = app.add_subcommand("wreath-decompose", "Decompose Ind from C_d wr S_mu to C_r wr S_n");
  wreath->add_option("--r", opt.r, "Order of the cyclic group")->required();
  wreath->add_option("--d", opt.d, "Order of the subgroup (divides r)")->required();
  wreath->add_option("--mu", opt.mu, "Young subgroup partition")->required();
  wreath->add_option("--n", opt.n, "Degree; defaults to |mu|");
  wreath->callback([&] {
    action = [&] {
      WreathParams p;
      p.r = opt.r;
      p.d = opt.d;
      p.mu = partition_arg(opt.mu);
      p.n = opt.n.value_or(p.mu.size());
      const auto constituents = decompose_permutation_character(p);
      result = json{{"params", p}, {"constituents", constituents}};
    };
  });

  auto with_input = [&](CLI::App* sub) {
    sub->add_option("--input", opt.input, "Theta data as JSON or @file")->required();
  };
  auto theta_input = [&] { return parse_json_as<ThetaRequest>(expand(opt.input)); };

  auto* ggg_count = app.add_subcommand("ggg-count", "Theta-multipartition Kostka number");
  with_input(ggg_count);
  ggg_count->callback([&] {
    action = [&] {
      const auto req = theta_input();
      const auto k = theta_kostka(req.lambda, req.mu);
      result = json{{"kostka", count_to_json(k)}};
    };
  });

  auto* ggg_positive = app.add_subcommand("ggg-positive", "Is the Theta Kostka number positive?");
  with_input(ggg_positive);
  with_exit(ggg_positive);
  ggg_positive->callback([&] {
    action = [&] {
      const auto req = theta_input();
      predicate("positive", theta_positive(req.lambda, req.mu));
    };
  });

  auto* ggg_mult_one = app.add_subcommand("ggg-mult-one", "Multiplicity-one test for equal orbit sizes");
  with_input(ggg_mult_one);
  with_exit(ggg_mult_one);
  ggg_mult_one->callback([&] {
    action = [&] {
      const auto req = theta_input();
      predicate("multiplicity_one", zelcor_multiplicity_one(req.lambda, req.mu));
    };
  });

  auto fail = [&](std::string_view kind, const std::string& message) {
    err << json{{"error", kind}, {"message", message}}.dump() << '\n';
    return static_cast<int>(Failure);
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    return fail(to_string(ErrorKind::ParseError), e.what());
  }

  try {
    action();
  } catch (const Error& e) {
    return fail(to_string(e.kind()), e.what());
  } catch (const json::exception& e) {
    return fail(to_string(ErrorKind::ParseError), e.what());
  }

  out << (opt.pretty ? result.dump(2) : result.dump()) << '\n';
  return status;
}

}  // namespace multikostka::cli
