#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ngsplit/graph.hpp"

namespace ngsplit {

/// Byte string identifying an isomorphism class (of a graph, or of a
/// vertex-coloured graph when colours were supplied).
class CanonicalCode {
 public:
  CanonicalCode() = default;
  explicit CanonicalCode(std::string bytes) : bytes_(std::move(bytes)) {}
  const std::string& bytes() const { return bytes_; }
  auto operator<=>(const CanonicalCode&) const = default;

 private:
  std::string bytes_;
};

struct CanonicalForm {
  CanonicalCode code;
  /// labeling[v] is the canonical position of vertex v.
  std::vector<Vertex> labeling;
};

/// Canonical labeling by individualization/refinement: the minimum
/// relabeled adjacency over all leaves of the refinement tree, with
/// branches pruned by the automorphisms discovered along the way.
/// `colors` (optional, one per vertex) restricts to colour-preserving
/// relabelings and is folded into the code.
CanonicalForm canonical_form(const Graph& g, std::span<const int> colors = {});

CanonicalCode canonical(const Graph& g);
CanonicalCode canonical(const Graph& g, std::span<const int> colors);

bool isomorphic(const Graph& g, const Graph& h);

}  // namespace ngsplit

template <>
struct std::hash<ngsplit::CanonicalCode> {
  std::size_t operator()(const ngsplit::CanonicalCode& c) const noexcept {
    return std::hash<std::string>{}(c.bytes());
  }
};
