//! Published 3-decimal values for the worked line example:
//! focus (0, 0), segment (-3, 0) -> (0, 1.5), f(l) = l + sin(l), m = 18.

// Rows are verbatim; some rounded cells happen to approximate pi.
#![allow(clippy::approx_constant)]

/// Columns: k, p.x, p.y, l_vec.x, l_vec.y, l, d.
pub const BASE_TABLE: [[f64; 7]; 18] = [
    [0.000, -3.000, 0.000, 0.000, 0.000, 0.000, 0.000],
    [0.059, -2.824, 0.088, 0.176, 0.088, 0.197, 0.393],
    [0.118, -2.647, 0.176, 0.353, 0.176, 0.395, 0.779],
    [0.176, -2.471, 0.265, 0.529, 0.265, 0.592, 1.150],
    [0.235, -2.294, 0.353, 0.706, 0.353, 0.789, 1.499],
    [0.294, -2.118, 0.441, 0.882, 0.441, 0.987, 1.821],
    [0.353, -1.941, 0.529, 1.059, 0.529, 1.184, 2.110],
    [0.412, -1.765, 0.618, 1.235, 0.618, 1.381, 2.363],
    [0.471, -1.588, 0.706, 1.412, 0.706, 1.578, 2.578],
    [0.529, -1.412, 0.794, 1.588, 0.794, 1.776, 2.755],
    [0.588, -1.235, 0.882, 1.765, 0.882, 1.973, 2.893],
    [0.647, -1.059, 0.971, 1.941, 0.971, 2.170, 2.996],
    [0.706, -0.882, 1.059, 2.118, 1.059, 2.368, 3.067],
    [0.765, -0.706, 1.147, 2.294, 1.147, 2.565, 3.110],
    [0.824, -0.529, 1.235, 2.471, 1.235, 2.762, 3.133],
    [0.882, -0.353, 1.324, 2.647, 1.324, 2.960, 3.141],
    [0.941, -0.176, 1.412, 2.824, 1.412, 3.157, 3.142],
    [1.000, 0.000, 1.500, 3.000, 1.500, 3.354, 3.143],
];

/// Columns: k, (p-o).x, (p-o).y, |p-o|, u.x, u.y.
pub const RAY_TABLE: [[f64; 6]; 18] = [
    [0.000, -3.000, 0.000, 3.000, -1.000, 0.000],
    [0.059, -2.824, 0.088, 2.825, -1.000, 0.031],
    [0.118, -2.647, 0.176, 2.653, -0.998, 0.067],
    [0.176, -2.471, 0.265, 2.485, -0.994, 0.107],
    [0.235, -2.294, 0.353, 2.321, -0.988, 0.152],
    [0.294, -2.118, 0.441, 2.163, -0.979, 0.204],
    [0.353, -1.941, 0.529, 2.012, -0.965, 0.263],
    [0.412, -1.765, 0.618, 1.870, -0.944, 0.330],
    [0.471, -1.588, 0.706, 1.738, -0.914, 0.406],
    [0.529, -1.412, 0.794, 1.620, -0.872, 0.490],
    [0.588, -1.235, 0.882, 1.518, -0.814, 0.581],
    [0.647, -1.059, 0.971, 1.436, -0.737, 0.676],
    [0.706, -0.882, 1.059, 1.378, -0.640, 0.768],
    [0.765, -0.706, 1.147, 1.347, -0.524, 0.852],
    [0.824, -0.529, 1.235, 1.344, -0.394, 0.919],
    [0.882, -0.353, 1.324, 1.370, -0.258, 0.966],
    [0.941, -0.176, 1.412, 1.423, -0.124, 0.992],
    [1.000, 0.000, 1.500, 1.500, 0.000, 1.000],
];

/// Columns: k, q_inner.x, q_inner.y, q_outer.x, q_outer.y.
pub const BRANCH_TABLE: [[f64; 5]; 18] = [
    [0.000, -3.000, 0.000, -3.000, 0.000],
    [0.059, -2.430, 0.076, -3.217, 0.101],
    [0.118, -1.870, 0.125, -3.424, 0.228],
    [0.176, -1.327, 0.142, -3.614, 0.387],
    [0.235, -0.813, 0.125, -3.776, 0.581],
    [0.294, -0.335, 0.070, -3.900, 0.812],
    [0.353, 0.094, -0.026, -3.977, 1.085],
    [0.412, 0.466, -0.163, -3.995, 1.398],
    [0.471, 0.768, -0.341, -3.944, 1.753],
    [0.529, 0.989, -0.556, -3.813, 2.145],
    [0.588, 1.119, -0.799, -3.590, 2.564],
    [0.647, 1.150, -1.054, -3.267, 2.995],
    [0.706, 1.081, -1.297, -2.846, 3.415],
    [0.765, 0.924, -1.502, -2.336, 3.796],
    [0.824, 0.705, -1.644, -1.763, 4.115],
    [0.882, 0.456, -1.711, -1.162, 4.358],
    [0.941, 0.213, -1.706, -0.566, 4.529],
    [1.000, 0.000, -1.643, 0.000, 4.643],
];
