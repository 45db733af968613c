#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "mpa/process.hpp"

namespace mpa {

enum class channel_kind { sync, lossy_sync, sync_drain, fifo };

/// Channel and node process shapes of the connector calculus.
enum class primitive_kind {
  sync,             // src;snk   a|b . X
  lossy_sync,       // src;snk   (a|b + a) . X
  sync_drain,       // src,src   a|b . X
  fifo,             // src;snk   a . b . X
  replicator,       // in;out,out
  merger,           // in,in;out
  pumping_station,  // in;out
  boundary,         // one end
};

/// A channel between two named nodes. For sync/lossy_sync/fifo data flows
/// first -> second (source end at first, sink end at second); a sync_drain
/// has two source ends.
struct channel_decl {
  channel_kind kind;
  std::string first;
  std::string second;

  auto operator<=>(const channel_decl&) const = default;
};

/// A connector graph: channels plus the set of boundary nodes. Knows, per
/// node, which channel ends coincide there and the generated end action
/// names used by compose().
class connector_topology {
 public:
  connector_topology(std::vector<channel_decl> channels,
                     std::set<std::string> boundary);

  /// Text format, one declaration per line:
  ///   sync a -> b | lossysync a -> b | fifo a -> b | syncdrain a -- b
  ///   boundary a, b
  /// '%' starts a comment.
  static connector_topology parse(const std::string& text);

  const std::vector<channel_decl>& channels() const noexcept { return channels_; }
  const std::set<std::string>& boundary() const noexcept { return boundary_; }
  /// Node names in order of first appearance.
  const std::vector<std::string>& nodes() const noexcept { return nodes_; }

  /// One channel end as placed at a node.
  struct end {
    std::size_t channel;   // index into channels()
    std::string node;
    std::size_t node_slot; // 1-based, per node, in declaration order
    bool into_node;        // true: channel sink end (dispenses into node)
    action name;           // generated channel-side action, "node_slot"
    action bar;            // node-side counterpart, "node_slot'"
  };

  const std::vector<end>& ends_at(const std::string& node) const;

  /// True iff one channel links the nodes of a and b. Arguments may be node
  /// names or generated end actions; anything else raises unknown_end.
  bool connected(const action& a, const action& b) const;

  /// Node an analysis action belongs to; throws unknown_end.
  const std::string& node_of(const action& a) const;

 private:
  std::vector<channel_decl> channels_;
  std::set<std::string> boundary_;
  std::vector<std::string> nodes_;
  std::map<std::string, std::vector<end>> ends_;
  std::map<action, std::string> end_to_node_;
};

/// The defining process of one primitive over the given end actions, e.g.
/// primitive(fifo, {a, b}) = Fifo = a . b . Fifo. The default name is the
/// capitalized kind name.
definition primitive(primitive_kind kind, const std::vector<action>& ends,
                     std::string name = "");

/// Build the closed connector process: one definition per channel, merger /
/// pumping-station / replicator trees per mixed node, boundary processes at
/// the edge, and a Main definition blocking all end actions after fusing
/// each coincident end with its node-side counterpart into the node action.
specification compose(const connector_topology& topo);

}  // namespace mpa
