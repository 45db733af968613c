#include "mpa/cli.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "CLI11.hpp"

#include "mpa/axioms.hpp"
#include "mpa/equivalence.hpp"
#include "mpa/error.hpp"
#include "mpa/lts.hpp"
#include "mpa/process.hpp"
#include "mpa/regions.hpp"
#include "mpa/reo.hpp"
#include "mpa/semantics.hpp"
#include "mpa/splitting.hpp"
#include "mpa/text.hpp"

namespace mpa {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error(errc::io_error, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw error(errc::io_error, "cannot write '" + path + "'");
  out << content;
}

specification load_spec(const std::string& path) {
  specification spec = parse_specification(read_file(path));
  validate(spec);
  return spec;
}

// Reorder so that `name` becomes the root definition.
specification reroot(const specification& spec, const std::string& name) {
  if (name.empty() || spec.root() == name) return spec;
  const definition* chosen = spec.find(name);
  if (!chosen) {
    throw error(errc::unknown_reference, "no definition named '" + name + "'");
  }
  specification out;
  out.add(*chosen);
  for (const definition& def : spec.definitions()) {
    if (def.name != name) out.add(def);
  }
  return out;
}

action_set parse_action_list(const std::string& csv) {
  action_set out;
  std::string name;
  std::istringstream in(csv);
  while (std::getline(in, name, ',')) {
    auto b = name.find_first_not_of(" \t");
    auto e = name.find_last_not_of(" \t");
    if (b == std::string::npos) {
      throw error(errc::usage_error, "empty action name in list '" + csv + "'");
    }
    out.insert(action(name.substr(b, e - b + 1)));
  }
  if (out.empty()) {
    throw error(errc::usage_error, "no actions given");
  }
  return out;
}

std::string render_trace(const std::vector<multi_action>& labels) {
  std::string out;
  for (const multi_action& m : labels) {
    if (!out.empty()) out += ", ";
    out += to_string(m);
  }
  return out;
}

std::string aut_text(const lts& l) {
  std::ostringstream buf;
  write_aut(buf, l);
  return buf.str();
}

std::string render_region(const action_set& region) {
  std::string out;
  for (const action& a : region) {
    if (!out.empty()) out += ", ";
    out += a.name();
  }
  return out;
}

}  // namespace

command_outcome run_cli(const std::vector<std::string>& args) {
  command_outcome out;

  CLI::App app{"multi-action process algebra: exploration, bisimulation, "
               "splitting, regions, connector composition"};
  app.name("mpa");
  app.require_subcommand(1);

  // check
  std::string check_file;
  CLI::App* check = app.add_subcommand("check", "parse and validate a specification");
  check->add_option("file", check_file, "specification file")->required();
  check->callback([&] {
    specification spec = load_spec(check_file);
    out.output = "ok: " + std::to_string(spec.definitions().size()) +
                 " definition(s), root " + spec.root() + "\n";
  });

  // lts
  std::string lts_file, lts_proc, lts_aut;
  std::size_t lts_max = default_max_states;
  CLI::App* lts_cmd = app.add_subcommand("lts", "explore the state space of a process");
  lts_cmd->add_option("file", lts_file, "specification file")->required();
  lts_cmd->add_option("--proc", lts_proc, "definition to explore")->required();
  lts_cmd->add_option("--max-states", lts_max, "exploration bound");
  lts_cmd->add_option("--aut", lts_aut, "write the LTS in .aut form to this file");
  lts_cmd->callback([&] {
    specification spec = load_spec(lts_file);
    lts l = explore(spec, lts_proc, lts_max);
    if (lts_aut.empty()) {
      out.output = aut_text(l);
    } else {
      write_file(lts_aut, aut_text(l));
      out.output = "states " + std::to_string(l.num_states) + ", transitions " +
                   std::to_string(l.transitions.size()) + "\n";
    }
  });

  // bisim
  std::string bi_a, bi_b, bi_proc_a, bi_proc_b;
  CLI::App* bisim = app.add_subcommand("bisim", "strong bisimilarity of two processes");
  bisim->add_option("file_a", bi_a, "first specification")->required();
  bisim->add_option("file_b", bi_b, "second specification")->required();
  bisim->add_option("--proc-a", bi_proc_a, "definition in the first file (default root)");
  bisim->add_option("--proc-b", bi_proc_b, "definition in the second file (default root)");
  bisim->callback([&] {
    specification sa = load_spec(bi_a);
    specification sb = load_spec(bi_b);
    lts la = bi_proc_a.empty() ? explore(sa) : explore(sa, bi_proc_a);
    lts lb = bi_proc_b.empty() ? explore(sb) : explore(sb, bi_proc_b);
    bisim_result r = bisimilar(la, lb);
    if (r.equivalent) {
      out.output = "bisimilar\n";
    } else {
      out.output = "not bisimilar\n";
      if (!r.witness.empty()) {
        out.output += "witness: " + render_trace(r.witness) + "\n";
      }
      if (!r.note.empty()) out.output += r.note + "\n";
      out.exit_code = 1;
    }
  });

  // split
  std::string sp_file, sp_proc, sp_actions, sp_word, sp_out;
  bool sp_verify = false;
  bool sp_frozen = false;
  CLI::App* split_cmd = app.add_subcommand("split", "split a process along an action set");
  split_cmd->add_option("file", sp_file, "specification file")->required();
  split_cmd->add_option("--proc", sp_proc, "definition to split")->required();
  split_cmd->add_option("--actions", sp_actions, "comma-separated action set A")->required();
  split_cmd->add_option("--word", sp_word, "starting branch word over {1,2}");
  split_cmd->add_flag("--verify", sp_verify,
                      "check the split against the original by bisimulation");
  split_cmd->add_flag("--frozen-words", sp_frozen,
                      "do not advance branch words at choices (unsound variant)");
  split_cmd->add_option("-o,--output", sp_out, "output file for the split specification");
  split_cmd->callback([&] {
    specification spec = reroot(load_spec(sp_file), sp_proc);
    action_set a = parse_action_list(sp_actions);
    branch_word w(sp_word);
    split_options opts;
    opts.advance_branch_words = !sp_frozen;
    std::vector<std::string> warnings;
    specification result = split_specification(spec, a, w, opts, &warnings);
    for (const std::string& warning : warnings) {
      out.diagnostics += "warning: " + warning + "\n";
    }
    std::string text = format(result);
    if (sp_out.empty()) {
      out.output = text;
    } else {
      write_file(sp_out, text);
    }
    if (sp_verify) {
      bisim_result r = bisimilar(explore(spec), explore(result));
      if (r.equivalent) {
        out.output += "split bisimilar to original\n";
      } else {
        out.output += "split NOT bisimilar to original\n";
        if (!r.witness.empty()) {
          out.output += "witness: " + render_trace(r.witness) + "\n";
        }
        if (!r.note.empty()) out.output += r.note + "\n";
        out.exit_code = 1;
      }
    }
  });

  // regions
  std::string rg_file, rg_proc, rg_topo;
  CLI::App* regions_cmd =
      app.add_subcommand("regions", "synchronous regions of a process");
  regions_cmd->add_option("file", rg_file, "specification file")->required();
  regions_cmd->add_option("--proc", rg_proc, "definition to analyze")->required();
  regions_cmd->add_option("--topo", rg_topo,
                          "connector topology file; adds asynchronous pairs");
  regions_cmd->callback([&] {
    specification spec = load_spec(rg_file);
    const definition* def = spec.find(rg_proc);
    if (!def) {
      throw error(errc::unknown_reference, "no definition named '" + rg_proc + "'");
    }
    lts l = explore(spec, rg_proc);
    region_set x = sync_regions(l);
    // actions of the process that label no reachable transition are their
    // own singleton regions
    action_set labeled;
    for (const transition& t : l.transitions) {
      for (const action& act : t.label.actions()) labeled.insert(act);
    }
    std::vector<action_set> all = x.regions;
    for (const action& act : acts(def->body, spec)) {
      if (labeled.count(act) == 0) all.push_back({act});
    }
    std::sort(all.begin(), all.end());
    for (const action_set& region : all) {
      out.output += render_region(region) + "\n";
    }
    if (!rg_topo.empty()) {
      connector_topology topo = connector_topology::parse(read_file(rg_topo));
      std::vector<std::string> warnings;
      region_set padded;
      padded.regions = all;
      for (const auto& [p, q] : async_regions(padded, topo, &warnings)) {
        out.output += p.name() + " -- " + q.name() + "\n";
      }
      for (const std::string& warning : warnings) {
        out.diagnostics += "warning: " + warning + "\n";
      }
    }
  });

  // reo
  std::string reo_file, reo_out;
  CLI::App* reo_cmd =
      app.add_subcommand("reo", "compose a connector topology into a specification");
  reo_cmd->add_option("topology", reo_file, "topology file")->required();
  reo_cmd->add_option("-o,--output", reo_out, "output file for the specification");
  reo_cmd->callback([&] {
    connector_topology topo = connector_topology::parse(read_file(reo_file));
    std::string text = format(compose(topo));
    if (reo_out.empty()) {
      out.output = text;
    } else {
      write_file(reo_out, text);
      out.output = "wrote " + reo_out + "\n";
    }
  });

  // axioms
  std::uint64_t ax_seed = 0;
  int ax_per = 50;
  CLI::App* axioms_cmd =
      app.add_subcommand("axioms", "validate the equational theory on random instances");
  axioms_cmd->add_option("--seed", ax_seed, "random seed");
  axioms_cmd->add_option("--per-axiom", ax_per, "instances per axiom")
      ->check(CLI::PositiveNumber);
  axioms_cmd->callback([&] {
    int failures = 0;
    for (const axiom_check& c : run_axiom_suite(ax_seed, ax_per)) {
      if (c.failed == 0) {
        out.output += "pass " + c.name + " (" + std::to_string(c.passed) + "/" +
                      std::to_string(c.passed) + ")\n";
      } else {
        ++failures;
        out.output += "FAIL " + c.name + " (" + std::to_string(c.failed) +
                      " of " + std::to_string(c.passed + c.failed) +
                      " instances): " + c.first_failure + "\n";
      }
    }
    if (failures > 0) {
      out.output += std::to_string(failures) + " axiom(s) failed\n";
      out.exit_code = 1;
    } else {
      out.output += "all axioms hold\n";
    }
  });

  try {
    std::vector<std::string> full;
    full.reserve(args.size() + 1);
    full.push_back("mpa");
    full.insert(full.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(full.size());
    for (const std::string& s : full) argv.push_back(s.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out.output = app.help();
    out.exit_code = 0;
  } catch (const CLI::ParseError& e) {
    out.diagnostics = std::string(e.what()) + "\n";
    out.exit_code = 2;
  } catch (const error& e) {
    out.diagnostics = std::string(e.what()) + "\n";
    out.exit_code = 2;
  } catch (const std::exception& e) {
    out.diagnostics = std::string("error: ") + e.what() + "\n";
    out.exit_code = 2;
  }
  return out;
}

}  // namespace mpa
