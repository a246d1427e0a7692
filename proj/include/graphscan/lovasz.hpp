#pragma once

#include <functional>
#include <vector>

#include "graphscan/graph.hpp"

namespace graphscan {

/// Per-arc values z_e = W_e (x_tail - x_head) for a vertex vector x.
std::vector<double> signed_incidence_image(const DirectedGraph& g,
                                           const std::vector<double>& x);

/// Lovasz extension of out: sum_e W_e (x_tail - x_head)_+.
/// Equals out_weight(g, C) at x = 1_C and is positively homogeneous, so
/// values outside [0,1] are permitted.
double lovasz_out(const DirectedGraph& g, const std::vector<double>& x);

/// Generic sorted-prefix Lovasz extension of an arbitrary set function,
/// given as an oracle over membership masks. Intended for small p.
/// Ties among equal coordinates are broken by stable index order.
double lovasz_extension_generic(
    const std::function<double(const std::vector<char>&)>& set_fn,
    const std::vector<double>& x);

}  // namespace graphscan
