#pragma once

#include <string>
#include <vector>

#include "ngsplit/census.hpp"
#include "ngsplit/graph.hpp"

// Exhaustive bijectivity checks of the class maps over enumerated
// isomorphism classes.
namespace ngsplit::sweep {

using census::Count;

struct SweepResult {
  std::string map;
  int n = 0;
  Count domain = 0;
  Count codomain = 0;
  Count distinct_images = 0;
  Count misclassified = 0;  // forward or inverse image outside its class, or a throw
  Count round_trip_failures = 0;

  bool ok() const {
    return domain == codomain && distinct_images == domain && misclassified == 0 && round_trip_failures == 0;
  }
};

/// All sweeps whose domain lives on n vertices. catalog[k] must hold every
/// class on k vertices for k = 0..n.
std::vector<SweepResult> run_all(const std::vector<std::vector<Graph>>& catalog, int n);

/// run_all for every n in 1..catalog.size()-1.
std::vector<SweepResult> run_range(const std::vector<std::vector<Graph>>& catalog);

std::string format(const SweepResult& r);

}  // namespace ngsplit::sweep
