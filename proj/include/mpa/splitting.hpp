#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mpa/process.hpp"

namespace mpa {

/// Position word over {1,2} tracking choice branches; empty = epsilon.
class branch_word {
 public:
  branch_word() = default;
  explicit branch_word(std::string digits);  // validates charset

  branch_word child(int i) const;  // append 1 or 2
  const std::string& digits() const noexcept { return digits_; }
  bool empty() const noexcept { return digits_.empty(); }

  auto operator<=>(const branch_word&) const = default;

 private:
  std::string digits_;
};

/// The two tag families of the splitting construction: `disseminate` marks
/// an action the isolated half performs itself (the f family), `discover`
/// marks one it observes from the other half (the g family).
enum class tag { disseminate, discover };

/// Reserved separator of generated names; never valid in user input.
inline constexpr char name_separator = '#';

/// Generated tag action: "a#f#w" / "a#g#w". Rejects base names that already
/// contain the separator (splitting a split result is not supported).
action fresh(tag t, const action& base, const branch_word& w);

/// Name of the split image of a definition: "Name#split#A#w" with A as a
/// sorted comma-joined action list.
std::string split_reference_name(const std::string& def_name,
                                 const action_set& a, const branch_word& w);

/// Everything the splitting construction needs to know about its subject:
/// the definition being split, the ambient alphabet, and the placeholder
/// action that fused tag pairs communicate to (hidden by the wrapper).
class substitution_environment {
 public:
  substitution_environment(definition main, action_set alphabet,
                           action tau_action = action("tau#"));

  const definition& main() const noexcept { return main_; }
  const action_set& alphabet() const noexcept { return alphabet_; }
  const action& tau_action() const noexcept { return tau_; }

  /// f_w(a) / g_w(a); the base action must belong to the alphabet.
  action disseminate(const action& a, const branch_word& w) const;
  action discover(const action& a, const branch_word& w) const;

 private:
  definition main_;
  action_set alphabet_;
  action tau_;
};

using tag_pair = std::pair<action, branch_word>;
using tag_pair_set = std::set<tag_pair>;

/// alphabet x words, the used domain for a given word set.
tag_pair_set env_dom(const substitution_environment& env,
                     const std::set<branch_word>& words);

/// One rule f_w(a)|g_w(a) -> tau_action per used pair.
std::vector<comm_rule> env_comm(const substitution_environment& env,
                                const tag_pair_set& used);

/// All tag actions of the used pairs (the image to block).
action_set env_img(const substitution_environment& env,
                   const tag_pair_set& used);

/// Isolation of a sequential term to the A side: actions in A stay and get
/// an f tag joined on; others become bare g tags; tau and deadlock pass
/// through. Choice descends with w1 / w2 so the two halves of a split can
/// only re-synchronize within the same branch. Emitted (action, word) pairs
/// are added to *used when given.
term_ptr isolate(const term_ptr& t, const action_set& a, const branch_word& w,
                 const substitution_environment& env,
                 tag_pair_set* used = nullptr);

/// The complementary half: actions in A become bare g tags, the rest stay
/// with an f tag joined on.
term_ptr coisolate(const term_ptr& t, const action_set& a,
                   const branch_word& w, const substitution_environment& env,
                   tag_pair_set* used = nullptr);

/// The synchronization wrapper: block the tag image, hide the placeholder,
/// fuse matching tag pairs. enclose(p) = block(img, hide({tau#}, comm(C, p))).
term_ptr enclose(const term_ptr& t, const substitution_environment& env,
                 const tag_pair_set& used);

struct split_options {
  /// When false, choice keeps the parent word (the known-unsound variant
  /// kept as a negative control).
  bool advance_branch_words = true;
};

struct split_result {
  term_ptr term;
  std::vector<definition> new_definitions;  // in creation order
  std::vector<std::string> warnings;
};

/// Structural split of t along A at word w: maximal sequential chunks become
/// enclose(isolate || coisolate), other operators distribute, references map
/// to memoized split definitions. Requires a tau-free subject with
/// acts(t) + A inside env.alphabet.
split_result split(const term_ptr& t, const action_set& a,
                   const branch_word& w, const substitution_environment& env,
                   const specification& spec, const split_options& opts = {});

/// Split the root definition of spec; the result's root is the split image
/// and its definitions are exactly the generated ones.
specification split_specification(const specification& spec,
                                  const action_set& a, const branch_word& w,
                                  const split_options& opts = {},
                                  std::vector<std::string>* warnings = nullptr);

}  // namespace mpa
