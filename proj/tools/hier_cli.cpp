// Command-line front end.  Exit status: 0 on success, 1 when an input
// violates a precondition, 2 on malformed input or usage.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hier/acceptance.hpp"
#include "hier/canonical.hpp"
#include "hier/family.hpp"
#include "hier/json_io.hpp"
#include "hier/nested.hpp"
#include "hier/report.hpp"
#include "hier/term.hpp"
#include "hier/wadge.hpp"

using namespace hier;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

char first_byte(const std::string& s) {
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) return c;
  return '\0';
}

// A file path if one exists, otherwise the text itself.
std::string resolve(const std::string& arg) {
  std::error_code ec;
  if (!arg.empty() && std::filesystem::is_regular_file(arg, ec)) return read_file(arg);
  return arg;
}

Forest load_forest(const std::string& arg, int k) {
  std::string text = resolve(arg);
  char c = first_byte(text);
  Forest f = (c == '[' || c == '{') ? forest_from_json(Json::parse(text)) : parse_term(text, k);
  if (k > 0) check_colors(f, k);
  return f;
}

FiniteSpace load_space(const std::string& arg) {
  for (const char* kind : {"chain:", "antichain:"})
    if (arg.rfind(kind, 0) == 0) {
      std::size_t n = std::stoul(arg.substr(std::string(kind).size()));
      check_size(n, 2, true);
      return std::string(kind) == "chain:" ? chain_space(n) : antichain_space(n);
    }
  return space_from_json(Json::parse(resolve(arg)));
}

Base load_base(const std::string& arg, const FiniteSpace& x) {
  if (arg == "upsets") return up_sets(x);
  if (arg == "powerset") return powerset(x.n);
  return base_from_json(Json::parse(resolve(arg)), x.n);
}

KPartition load_partition(const std::string& arg, const FiniteSpace& x, int k) {
  std::string text = resolve(arg);
  KPartition a;
  if (first_byte(text) == '{' || first_byte(text) == '[') {
    a = partition_from_json(Json::parse(text));
  } else {
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      if (!std::isdigit(static_cast<unsigned char>(c))) throw JsonFormatError("partition must be JSON or a digit string");
      a.labels.push_back(c - '0');
    }
  }
  check_partition(a, x.n, k);
  return a;
}

int infer_k(int k, const KPartition* a, const std::vector<Forest>& forests) {
  if (k > 0) return k;
  int top = 1;
  if (a)
    for (int c : a->labels) top = std::max(top, c);
  for (const auto& f : forests)
    if (!f.empty()) top = std::max(top, max_color(f));
  return top + 1;
}

FamilyKind parse_kind(const std::string& s) {
  if (s == "any") return FamilyKind::any;
  if (s == "reduced") return FamilyKind::reduced;
  return FamilyKind::monotone;
}

void emit(const Json& j) { std::cout << to_line(j) << "\n"; }

Json name_to_json(const CanonicalName& n) {
  return Json{{"name", to_string(n)}, {"kind", kind_name(n.kind)}, {"index", to_string(n.index)}};
}

Json layers_to_json(const LabeledNPreorder& x) {
  Json layers = Json::array();
  for (std::size_t j = 0; j < x.depth(); ++j) {
    Json pairs = Json::array();
    for (std::size_t a = 0; a < x.size(); ++a)
      for (std::size_t b = 0; b < x.size(); ++b)
        if (a != b && x.leq(j, a, b)) pairs.push_back({a, b});
    layers.push_back(pairs);
  }
  return Json{{"elements", x.size()}, {"labels", x.labels}, {"tuples", x.tuples}, {"layers", layers}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Forests, canonical trees and hierarchies of k-partitions over finite spaces"};
  app.require_subcommand(1);

  std::string lhs, rhs, forest_arg, alpha, emit_as, space_arg, base_arg = "upsets", omega_arg, partition_arg,
      kind_arg = "monotone", scope = "fast", inject;
  std::vector<std::string> forest_args;
  int k = 0;
  std::size_t bound = 16, layers = 0;
  bool dual = false, override_guard = false;

  auto forest_opt = [&](CLI::App* c) { c->add_option("--forest", forest_arg, "term, JSON, or file")->required(); };
  auto pair_opts = [&](CLI::App* c) {
    c->add_option("--lhs", lhs, "term, JSON, or file")->required();
    c->add_option("--rhs", rhs, "term, JSON, or file")->required();
  };
  // the first choice is the default
  auto emit_opt = [&](CLI::App* c, std::vector<std::string> choices) {
    c->add_option("--emit", emit_as, "output format, default " + choices[0])->check(CLI::IsMember(choices));
  };
  auto k_opt = [&](CLI::App* c) { c->add_option("--k", k, "number of colors"); };
  auto space_opts = [&](CLI::App* c, bool omega) {
    c->add_option("--space", space_arg, "space JSON file, or chain:N / antichain:N")->required();
    c->add_option("--base", base_arg, "base JSON file, upsets or powerset");
    if (omega) c->add_option("--omega-base", omega_arg, "omega-base JSON file");
    c->add_flag("--override-size-guard", override_guard);
  };

  auto* compare = app.add_subcommand("compare", "h-order between two forests");
  pair_opts(compare);
  auto* meet_cmd = app.add_subcommand("meet", "greatest lower bound");
  pair_opts(meet_cmd);
  emit_opt(meet_cmd, {"term", "json"});
  auto* join_cmd = app.add_subcommand("join", "disjoint union");
  pair_opts(join_cmd);
  emit_opt(join_cmd, {"term", "json"});
  auto* norm = app.add_subcommand("normalize", "normal form");
  forest_opt(norm);
  emit_opt(norm, {"term", "json"});
  auto* classify = app.add_subcommand("classify", "name a 2-forest or nested 2-tree by a canonical tree");
  forest_opt(classify);
  classify->add_option("--bound", bound, "size bound for nested trees");
  emit_opt(classify, {"json", "term"});
  auto* canon = app.add_subcommand("canonical", "canonical tree of an ordinal");
  canon->add_option("--alpha", alpha, "ordinal, e.g. w^2*3+w+1")->required();
  canon->add_flag("--dual", dual, "swap colors 0 and 1");
  emit_opt(canon, {"term", "json"});
  auto* flat = app.add_subcommand("flatten", "labeled n-preorder of a forest");
  forest_opt(flat);
  flat->add_option("--layers", layers, "number of layers (default: nesting level)");
  auto* parse = app.add_subcommand("parse", "parse a term");
  forest_opt(parse);
  k_opt(parse);
  emit_opt(parse, {"json", "term"});
  auto* dh = app.add_subcommand("dh-check", "difference hierarchy membership");
  space_opts(dh, false);
  forest_opt(dh);
  dh->add_option("--partition", partition_arg, "partition JSON, file, or digits")->required();
  dh->add_option("--kind", kind_arg)->check(CLI::IsMember({"any", "monotone", "reduced"}));
  k_opt(dh);
  auto* fh = app.add_subcommand("fh-check", "fine hierarchy membership");
  space_opts(fh, true);
  forest_opt(fh);
  fh->add_option("--partition", partition_arg, "partition JSON, file, or digits")->required();
  fh->add_option("--kind", kind_arg)->check(CLI::IsMember({"any", "monotone", "reduced"}));
  k_opt(fh);
  auto* red = app.add_subcommand("reduce-check", "reduction property of a base; reduced vs unrestricted membership");
  space_opts(red, false);
  red->add_option("--forest", forest_arg, "optional forest for a membership comparison");
  red->add_option("--partition", partition_arg, "partition for the comparison");
  k_opt(red);
  auto* deg = app.add_subcommand("degrees", "reducibility degrees of k-partitions");
  deg->add_option("--space", space_arg, "space JSON file, or chain:N / antichain:N")->required();
  deg->add_flag("--override-size-guard", override_guard);
  k_opt(deg);
  emit_opt(deg, {"json", "dot"});
  auto* rep = app.add_subcommand("report", "levels, inclusions and constituents");
  space_opts(rep, true);
  rep->add_option("--forest", forest_args, "forest (repeatable)")->required();
  rep->add_option("--kind", kind_arg)->check(CLI::IsMember({"any", "monotone", "reduced"}));
  k_opt(rep);
  emit_opt(rep, {"json", "dot"});
  auto* self = app.add_subcommand("selftest", "run the acceptance suites");
  self->add_option("--scope", scope)->check(CLI::IsMember({"fast", "full"}));
  self->add_option("--inject", inject, "testing aid: broken-meet")->check(CLI::IsMember({"broken-meet"}));
  emit_opt(self, {"text", "json"});

  if (argc > 1 && argv[1][0] != '-') {
    auto subs = app.get_subcommands([](CLI::App*) { return true; });
    bool known = std::any_of(subs.begin(), subs.end(), [&](CLI::App* c) { return c->get_name() == argv[1]; });
    if (!known) {
      std::cerr << "error: unknown verb '" << argv[1] << "'\n";
      return 2;
    }
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (compare->parsed()) {
      Forest f = load_forest(lhs, 0), g = load_forest(rhs, 0);
      emit(Json{{"h_leq", h_leq(f, g)}, {"h_geq", h_leq(g, f)}});
    } else if (meet_cmd->parsed() || join_cmd->parsed()) {
      Forest f = load_forest(lhs, 0), g = load_forest(rhs, 0);
      Forest r = meet_cmd->parsed() ? meet(f, g) : join(f, g);
      if (emit_as == "json")
        emit(forest_to_json(normalize(r)));
      else
        std::cout << print_term(r) << "\n";
    } else if (norm->parsed()) {
      Forest f = normalize(load_forest(forest_arg, 0));
      if (emit_as == "json")
        emit(forest_to_json(f));
      else
        std::cout << print_term(f) << "\n";
    } else if (classify->parsed()) {
      Forest f = load_forest(forest_arg, 2);
      std::optional<CanonicalName> name;
      if (total_size(f) == node_count(f)) {
        name = classify_2forest(f);
      } else {
        Forest n = normalize(f);
        if (n.trees.size() != 1) throw std::domain_error("nested classification needs a forest equivalent to a tree");
        name = classify_2tree_nested(n, bound);
        if (!name)
          throw std::domain_error("no canonical tree of size at most " + std::to_string(bound) +
                                  " is equivalent (raise --bound, or the tree lies outside the canonical family)");
      }
      if (emit_as == "term")
        std::cout << print_term(representative(*name)) << "\n";
      else
        emit(name_to_json(*name));
    } else if (canon->parsed()) {
      Forest t = t_nested(parse_ordinal(alpha), dual ? Polarity::bar : Polarity::plain);
      if (emit_as == "json")
        emit(forest_to_json(t));
      else
        std::cout << print_term(t) << "\n";
    } else if (flat->parsed()) {
      Forest f = load_forest(forest_arg, 0);
      emit(layers_to_json(flatten(f, layers ? layers : std::max<std::size_t>(1, nesting_level(f)))));
    } else if (parse->parsed()) {
      Forest f = parse_term(resolve(forest_arg), k);
      if (emit_as == "term")
        std::cout << print_term_raw(f) << "\n";
      else
        emit(forest_to_json(f));
    } else if (dh->parsed() || fh->parsed()) {
      FiniteSpace x = load_space(space_arg);
      Forest p = load_forest(forest_arg, 0);
      KPartition probe = load_partition(partition_arg, x, 1000);
      int kk = infer_k(k, &probe, {p});
      check_size(x.n, kk, override_guard);
      KPartition a = load_partition(partition_arg, x, kk);
      check_colors(p, kk);
      Base l = load_base(base_arg, x);
      OmegaBase ob = fh->parsed() && !omega_arg.empty()
                         ? omega_base_from_json(Json::parse(resolve(omega_arg)), x.n)
                         : omega_base_over(l, std::max<std::size_t>(1, nesting_level(p)));
      if (dh->parsed() && nesting_level(p) > 1) throw std::domain_error("dh-check needs a flat forest");
      auto fam = find_family(a, p, ob, parse_kind(kind_arg));
      Json out{{"member", fam.has_value()}};
      if (fam) out["family"] = family_to_json(*fam);
      emit(out);
    } else if (red->parsed()) {
      FiniteSpace x = load_space(space_arg);
      Base l = load_base(base_arg, x);
      Json out{{"sets", l.sets.size()}, {"reduction_property", true}};
      for (PointSet a : l.sets) {
        for (PointSet b : l.sets)
          if (!reduce_pair(l, a, b)) {
            out["reduction_property"] = false;
            out["witness"] = {set_to_json(a), set_to_json(b)};
            break;
          }
        if (out.contains("witness")) break;
      }
      if (!forest_arg.empty()) {
        if (partition_arg.empty()) throw UsageError("--forest needs --partition");
        Forest p = load_forest(forest_arg, 0);
        KPartition probe = load_partition(partition_arg, x, 1000);
        int kk = infer_k(k, &probe, {p});
        check_size(x.n, kk, override_guard);
        KPartition a = load_partition(partition_arg, x, kk);
        OmegaBase ob = omega_base_over(l, std::max<std::size_t>(1, nesting_level(p)));
        out["member"] = fh_membership(a, p, ob, FamilyKind::any);
        out["reduced_member"] = fh_membership(a, p, ob, FamilyKind::reduced);
      }
      emit(out);
    } else if (deg->parsed()) {
      FiniteSpace x = load_space(space_arg);
      auto dp = degree_poset(x, k > 0 ? k : 2, override_guard);
      if (emit_as == "dot")
        std::cout << degrees_to_dot(dp);
      else
        emit(degrees_to_json(dp));
    } else if (rep->parsed()) {
      FiniteSpace x = load_space(space_arg);
      std::vector<Forest> forests;
      for (const auto& a : forest_args) forests.push_back(load_forest(a, 0));
      int kk = infer_k(k, nullptr, forests);
      std::size_t level = 1;
      for (const auto& f : forests) level = std::max(level, nesting_level(f));
      Base l = load_base(base_arg, x);
      OmegaBase ob =
          !omega_arg.empty() ? omega_base_from_json(Json::parse(resolve(omega_arg)), x.n) : omega_base_over(l, level);
      auto r = hierarchy_report(ob, forests, kk, parse_kind(kind_arg), override_guard);
      if (emit_as == "dot")
        std::cout << report_to_dot(r);
      else
        emit(report_to_json(r));
    } else if (self->parsed()) {
      acceptance::Ops ops;
      if (inject == "broken-meet")
        ops.meet = [](const Forest& f, const Forest& g) {
          Forest m = meet(f, g);
          if (m.trees.size() > 1) m.trees.resize(1);
          return m;
        };
      auto ids = scope == "fast" ? acceptance::fast_ids() : std::vector<std::string>{};
      bool ok = true;
      Json suites = Json::array();
      acceptance::run(ids, ops, [&](const acceptance::SuiteResult& r) {
        ok = ok && r.passed;
        if (emit_as != "json")
          std::cout << acceptance::format(r) << std::endl;
        else
          suites.push_back(Json{{"id", r.id}, {"passed", r.passed}, {"checks", r.checks}, {"detail", r.detail}});
      });
      if (emit_as == "json") emit(Json{{"passed", ok}, {"suites", suites}});
      return ok ? 0 : 1;
    }
  } catch (const TermSyntaxError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const OrdinalSyntaxError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const JsonFormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    // domain_error, invalid_argument, LayerError, SizeGuardError
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
