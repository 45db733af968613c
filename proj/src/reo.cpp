#include "mpa/reo.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "mpa/error.hpp"

namespace mpa {

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
}

const char* kind_name(channel_kind k) {
  switch (k) {
    case channel_kind::sync: return "Sync";
    case channel_kind::lossy_sync: return "LossySync";
    case channel_kind::sync_drain: return "SyncDrain";
    case channel_kind::fifo: return "Fifo";
  }
  return "Channel";
}

}  // namespace

connector_topology::connector_topology(std::vector<channel_decl> channels,
                                       std::set<std::string> boundary)
    : channels_(std::move(channels)), boundary_(std::move(boundary)) {
  std::set<channel_decl> seen;
  auto note_node = [&](const std::string& n) {
    if (!is_identifier(n)) {
      throw error(errc::topology_error, "node name '" + n + "' is not an identifier");
    }
    if (ends_.count(n) == 0) {
      ends_.emplace(n, std::vector<end>());
      nodes_.push_back(n);
      end_to_node_.emplace(action(n), n);
    }
  };
  for (std::size_t i = 0; i < channels_.size(); ++i) {
    const channel_decl& c = channels_[i];
    if (!seen.insert(c).second) {
      throw error(errc::duplicate_channel,
                  std::string(kind_name(c.kind)) + " between '" + c.first +
                      "' and '" + c.second + "' declared twice");
    }
    note_node(c.first);
    note_node(c.second);
    // For sync/lossy_sync/fifo the first end accepts data from its node and
    // the second dispenses into its node; a sync_drain accepts on both.
    auto place = [&](const std::string& node, bool into_node) {
      std::vector<end>& at = ends_[node];
      std::size_t slot = at.size() + 1;
      std::string base = node + "_" + std::to_string(slot);
      end e{i, node, slot, into_node, action(base), action(base + "'")};
      end_to_node_.emplace(e.name, node);
      end_to_node_.emplace(e.bar, node);
      at.push_back(std::move(e));
    };
    place(c.first, false);
    place(c.second, c.kind != channel_kind::sync_drain);
  }
  for (const std::string& b : boundary_) note_node(b);
  for (const std::string& n : nodes_) {
    const std::vector<end>& at = ends_.at(n);
    bool has_in = std::any_of(at.begin(), at.end(), [](const end& e) { return e.into_node; });
    bool has_out = std::any_of(at.begin(), at.end(), [](const end& e) { return !e.into_node; });
    bool bnd = boundary_.count(n) > 0;
    if (at.empty()) continue;  // isolated boundary node, contributes nothing
    if (!bnd && (!has_in || !has_out)) {
      throw error(errc::dangling_node,
                  "node '" + n + "' is one-sided but not declared boundary");
    }
    if (bnd && has_in && has_out) {
      throw error(errc::topology_error,
                  "node '" + n + "' is mixed (both directions) and cannot be boundary");
    }
  }
}

const std::vector<connector_topology::end>& connector_topology::ends_at(
    const std::string& node) const {
  auto it = ends_.find(node);
  if (it == ends_.end()) {
    throw error(errc::unknown_end, "unknown node '" + node + "'");
  }
  return it->second;
}

const std::string& connector_topology::node_of(const action& a) const {
  auto it = end_to_node_.find(a);
  if (it == end_to_node_.end()) {
    throw error(errc::unknown_end,
                "'" + a.name() + "' names neither a node nor a channel end");
  }
  return it->second;
}

bool connector_topology::connected(const action& a, const action& b) const {
  const std::string& na = node_of(a);
  const std::string& nb = node_of(b);
  for (const channel_decl& c : channels_) {
    if ((c.first == na && c.second == nb) || (c.first == nb && c.second == na)) {
      if (na != nb || c.first == c.second) return true;
    }
  }
  return false;
}

connector_topology connector_topology::parse(const std::string& text) {
  std::vector<channel_decl> channels;
  std::set<std::string> boundary;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto pos = line.find('%'); pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    auto fail = [&](const std::string& msg) -> void {
      throw error(errc::syntax_error, msg, lineno, 1);
    };
    if (head == "boundary") {
      std::string rest;
      std::getline(ls, rest);
      std::string name;
      for (std::size_t i = 0; i <= rest.size(); ++i) {
        if (i == rest.size() || rest[i] == ',') {
          // trim
          auto b = name.find_first_not_of(" \t");
          auto e = name.find_last_not_of(" \t");
          if (b == std::string::npos) {
            if (!name.empty() || i != rest.size()) fail("empty boundary node name");
          } else {
            std::string n = name.substr(b, e - b + 1);
            if (!is_identifier(n)) fail("node name '" + n + "' is not an identifier");
            boundary.insert(n);
          }
          name.clear();
        } else {
          name += rest[i];
        }
      }
      continue;
    }
    channel_kind kind;
    if (head == "sync") kind = channel_kind::sync;
    else if (head == "lossysync") kind = channel_kind::lossy_sync;
    else if (head == "syncdrain") kind = channel_kind::sync_drain;
    else if (head == "fifo") kind = channel_kind::fifo;
    else {
      fail("expected sync, lossysync, syncdrain, fifo or boundary, got '" + head + "'");
      continue;
    }
    std::string first, arrow, second, extra;
    if (!(ls >> first >> arrow >> second)) {
      fail("expected '" + head + " NODE " +
           (kind == channel_kind::sync_drain ? "--" : "->") + " NODE'");
    }
    if (ls >> extra) fail("unexpected trailing '" + extra + "'");
    const char* want = kind == channel_kind::sync_drain ? "--" : "->";
    if (arrow != want) fail("expected '" + std::string(want) + "' after '" + first + "'");
    if (!is_identifier(first)) fail("node name '" + first + "' is not an identifier");
    if (!is_identifier(second)) fail("node name '" + second + "' is not an identifier");
    channels.push_back({kind, first, second});
  }
  return connector_topology(std::move(channels), std::move(boundary));
}

definition primitive(primitive_kind kind, const std::vector<action>& ends,
                     std::string name) {
  auto want = [&](std::size_t n, const char* def_name) {
    if (ends.size() != n) {
      throw error(errc::arity_mismatch,
                  std::string(def_name) + " takes " + std::to_string(n) +
                      " ends, got " + std::to_string(ends.size()));
    }
    if (name.empty()) name = def_name;
  };
  term_ptr body;
  switch (kind) {
    case primitive_kind::sync:
      want(2, "Sync");
      body = make_multi_action({ends[0], ends[1]});
      break;
    case primitive_kind::lossy_sync:
      want(2, "LossySync");
      body = make_alt(make_multi_action({ends[0], ends[1]}),
                      make_multi_action({ends[0]}));
      break;
    case primitive_kind::sync_drain:
      want(2, "SyncDrain");
      body = make_multi_action({ends[0], ends[1]});
      break;
    case primitive_kind::fifo:
      want(2, "Fifo");
      body = make_multi_action({ends[0]});
      break;
    case primitive_kind::replicator:
      want(3, "Replicator");
      body = make_multi_action({ends[0], ends[1], ends[2]});
      break;
    case primitive_kind::merger:
      want(3, "Merger");
      body = make_alt(make_multi_action({ends[0], ends[2]}),
                      make_multi_action({ends[1], ends[2]}));
      break;
    case primitive_kind::pumping_station:
      want(2, "PumpingStation");
      body = make_multi_action({ends[0], ends[1]});
      break;
    case primitive_kind::boundary:
      want(1, "Boundary");
      body = make_multi_action({ends[0]});
      break;
  }
  if (kind == primitive_kind::fifo) {
    body = make_seq(body, make_seq(make_multi_action({ends[1]}),
                                   make_reference(name)));
  } else {
    body = make_seq(body, make_reference(name));
  }
  return {name, body};
}

namespace {

struct composer {
  const connector_topology& topo;
  std::vector<definition> defs;
  std::vector<term_ptr> refs;
  std::vector<comm_rule> rules;
  action_set blocked;
  std::set<std::string> used_actions;

  action mint(const std::string& name) {
    if (!used_actions.insert(name).second) {
      throw error(errc::topology_error,
                  "generated action '" + name + "' collides; rename the nodes");
    }
    action a(name);
    blocked.insert(a);
    return a;
  }

  void pair_rule(const action& x, const action& x_bar, const std::string& node) {
    rules.push_back({multi_action{x, x_bar}, action(node)});
  }

  void add(definition def) {
    refs.push_back(make_reference(def.name));
    defs.push_back(std::move(def));
  }

  // Left-leaning chain of Merger processes draining `ins` into `out_bar`.
  void merger_tree(const std::string& node, std::vector<action> ins,
                   const action& out_bar, int& piece) {
    while (ins.size() > 2) {
      action hub = mint(node + "_h" + std::to_string(piece));
      action hub_bar = mint(hub.name() + "'");
      pair_rule(hub, hub_bar, node);
      add(primitive(primitive_kind::merger, {ins[0], ins[1], hub},
                    node_def_name(node, piece)));
      ++piece;
      ins.erase(ins.begin(), ins.begin() + 2);
      ins.insert(ins.begin(), hub_bar);
    }
    add(primitive(primitive_kind::merger, {ins[0], ins[1], out_bar},
                  node_def_name(node, piece)));
    ++piece;
  }

  void replicator_tree(const std::string& node, const action& in_bar,
                       std::vector<action> outs, int& piece) {
    action cur = in_bar;
    while (outs.size() > 2) {
      action hub = mint(node + "_h" + std::to_string(piece));
      action hub_bar = mint(hub.name() + "'");
      pair_rule(hub, hub_bar, node);
      add(primitive(primitive_kind::replicator, {cur, outs[0], hub},
                    node_def_name(node, piece)));
      ++piece;
      outs.erase(outs.begin());
      cur = hub_bar;
    }
    add(primitive(primitive_kind::replicator, {cur, outs[0], outs[1]},
                  node_def_name(node, piece)));
    ++piece;
  }

  static std::string node_def_name(const std::string& node, int piece) {
    return piece == 1 ? "Node_" + node : "Node_" + node + "_" + std::to_string(piece);
  }
};

}  // namespace

specification compose(const connector_topology& topo) {
  composer cx{topo, {}, {}, {}, {}, {}};

  // node names are the fusion results; no generated end may shadow one
  for (const std::string& n : topo.nodes()) cx.used_actions.insert(n);

  // channel processes, ends named after their nodes
  for (std::size_t i = 0; i < topo.channels().size(); ++i) {
    const channel_decl& c = topo.channels()[i];
    std::vector<action> channel_ends;
    std::vector<std::string> visit{c.first};
    if (c.second != c.first) visit.push_back(c.second);
    for (const std::string& n : visit) {
      for (const connector_topology::end& e : topo.ends_at(n)) {
        if (e.channel != i) continue;
        cx.mint(e.name.name());
        cx.mint(e.bar.name());
        cx.pair_rule(e.name, e.bar, e.node);
        channel_ends.push_back(e.name);
      }
    }
    primitive_kind pk;
    switch (c.kind) {
      case channel_kind::sync: pk = primitive_kind::sync; break;
      case channel_kind::lossy_sync: pk = primitive_kind::lossy_sync; break;
      case channel_kind::sync_drain: pk = primitive_kind::sync_drain; break;
      case channel_kind::fifo: pk = primitive_kind::fifo; break;
    }
    cx.add(primitive(pk, channel_ends,
                     std::string(kind_name(c.kind)) + std::to_string(i + 1)));
  }

  // node and boundary processes
  std::vector<definition> boundary_defs;
  for (const std::string& n : topo.nodes()) {
    const auto& at = topo.ends_at(n);
    if (at.empty()) continue;
    std::vector<action> in_bars, out_bars;
    for (const connector_topology::end& e : at) {
      (e.into_node ? in_bars : out_bars).push_back(e.bar);
    }
    bool bnd = topo.boundary().count(n) > 0;
    int piece = 1;
    if (in_bars.empty()) {
      // source node: the environment writes
      if (out_bars.size() == 1) {
        cx.add(primitive(primitive_kind::boundary, {out_bars[0]}, "Bnd_" + n));
      } else {
        action b = cx.mint(n + "_bnd");
        action b_bar = cx.mint(n + "_bnd'");
        cx.pair_rule(b, b_bar, n);
        cx.replicator_tree(n, b_bar, out_bars, piece);
        cx.add(primitive(primitive_kind::boundary, {b}, "Bnd_" + n));
      }
    } else if (out_bars.empty()) {
      // sink node: the environment takes
      if (in_bars.size() == 1) {
        cx.add(primitive(primitive_kind::boundary, {in_bars[0]}, "Bnd_" + n));
      } else {
        action b = cx.mint(n + "_bnd");
        action b_bar = cx.mint(n + "_bnd'");
        cx.pair_rule(b, b_bar, n);
        cx.merger_tree(n, in_bars, b_bar, piece);
        cx.add(primitive(primitive_kind::boundary, {b}, "Bnd_" + n));
      }
    } else if (in_bars.size() == 1 && out_bars.size() == 1) {
      cx.add(primitive(primitive_kind::pumping_station, {in_bars[0], out_bars[0]},
                       "Node_" + n));
      ++piece;
    } else if (in_bars.size() == 1) {
      cx.replicator_tree(n, in_bars[0], out_bars, piece);
    } else if (out_bars.size() == 1) {
      cx.merger_tree(n, in_bars, out_bars[0], piece);
    } else {
      action hub = cx.mint(n + "_h0");
      action hub_bar = cx.mint(n + "_h0'");
      cx.pair_rule(hub, hub_bar, n);
      cx.merger_tree(n, in_bars, hub, piece);
      cx.replicator_tree(n, hub_bar, out_bars, piece);
    }
  }

  term_ptr body = cx.refs.back();
  for (std::size_t i = cx.refs.size() - 1; i-- > 0;) {
    body = make_par(cx.refs[i], body);
  }
  body = make_block(cx.blocked, make_comm(cx.rules, body));

  try {
    specification out;
    out.add({"Main", body});
    for (definition& d : cx.defs) out.add(std::move(d));
    return out;
  } catch (const error& e) {
    throw error(errc::topology_error,
                std::string("generated definitions collide: ") + e.what());
  }
}

}  // namespace mpa
