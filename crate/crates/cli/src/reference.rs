//! Published reference values the `verify` command checks against.

/// Number of chemical graphs `(n, m, count)`, connected or not.
pub const CHEMICAL_GRAPH_COUNTS: [(usize, usize, usize); 22] = [
    (1, 0, 1),
    (2, 1, 1),
    (3, 2, 1),
    (3, 3, 1),
    (4, 3, 3),
    (4, 4, 2),
    (4, 5, 1),
    (4, 6, 1),
    (5, 5, 6),
    (5, 6, 6),
    (5, 7, 4),
    (5, 8, 2),
    (5, 9, 1),
    (6, 5, 14),
    (6, 6, 20),
    (6, 7, 22),
    (6, 8, 20),
    (6, 9, 15),
    (7, 6, 38),
    (7, 8, 82),
    (8, 8, 188),
    (10, 9, 883),
];

/// `UB(n,m) − max AG` at the exceptional pairs, to 4 decimals.
pub const EXCEPTIONAL_GAPS: [(usize, usize, f64); 22] = [
    (1, 0, 0.2811),
    (2, 1, 0.5000),
    (3, 2, 0.5000),
    (3, 3, 0.5000),
    (4, 3, 0.3170),
    (4, 4, 0.4254),
    (4, 5, 0.4175),
    (4, 6, 0.2811),
    (5, 5, 0.1598),
    (5, 6, 0.1984),
    (5, 7, 0.1360),
    (5, 8, 0.1183),
    (5, 9, 0.0591),
    (6, 5, 0.2500),
    (6, 6, 0.2537),
    (6, 7, 0.0384),
    (6, 8, 0.0799),
    (6, 9, 0.0976),
    (7, 6, 0.2113),
    (7, 8, 0.1360),
    (8, 8, 0.0384),
    (10, 9, 0.1057),
];

/// Gain constants as printed: cut to 4 decimals, not rounded.
pub const GAIN_CONSTANTS: [(&str, f64); 10] = [
    ("RotationA", 0.1479),
    ("RotationB", 0.0128),
    ("ChainSwap", 0.0207),
    ("QuadSwapT2", 0.0384),
    ("QuadSwapT3", 0.0591),
    ("QuadSwapMixed", 0.0975),
    ("ComponentEdgeSwap", 0.0193),
    ("AdjacentTwos", 0.0541),
    ("AdjacentThreesShared", 0.0593),
    ("AdjacentThreesApart", 0.0089),
];

/// Extremal graph counts `(n, m, connected, non-connected)` for
/// `n ≤ 14` and `n − 1 ≤ m ≤ min(2n, n(n−1)/2)`.
pub const EXTREMAL_COUNTS: [(usize, usize, usize, usize); 123] = [
    (1, 0, 1, 0),
    (2, 1, 1, 0),
    (3, 2, 1, 0),
    (3, 3, 1, 0),
    (4, 3, 1, 0),
    (4, 4, 1, 0),
    (4, 5, 1, 0),
    (4, 6, 1, 0),
    (5, 4, 1, 0),
    (5, 5, 1, 0),
    (5, 6, 1, 0),
    (5, 7, 1, 0),
    (5, 8, 1, 0),
    (5, 9, 1, 0),
    (5, 10, 1, 0),
    (6, 5, 1, 0),
    (6, 6, 1, 0),
    (6, 7, 1, 0),
    (6, 8, 1, 0),
    (6, 9, 1, 0),
    (6, 10, 1, 0),
    (6, 11, 1, 0),
    (6, 12, 1, 0),
    (7, 6, 1, 0),
    (7, 7, 1, 0),
    (7, 8, 1, 0),
    (7, 9, 1, 0),
    (7, 10, 1, 0),
    (7, 11, 1, 0),
    (7, 12, 2, 0),
    (7, 13, 2, 0),
    (7, 14, 2, 0),
    (8, 7, 1, 0),
    (8, 8, 1, 0),
    (8, 9, 1, 0),
    (8, 10, 1, 0),
    (8, 11, 2, 0),
    (8, 12, 4, 0),
    (8, 13, 3, 0),
    (8, 14, 8, 0),
    (8, 15, 7, 0),
    (8, 16, 6, 0),
    (9, 8, 1, 0),
    (9, 9, 1, 0),
    (9, 10, 1, 0),
    (9, 11, 3, 0),
    (9, 12, 2, 0),
    (9, 13, 10, 0),
    (9, 14, 17, 0),
    (9, 15, 9, 0),
    (9, 16, 37, 0),
    (9, 17, 28, 0),
    (9, 18, 16, 0),
    (10, 9, 1, 0),
    (10, 10, 2, 0),
    (10, 11, 1, 0),
    (10, 12, 4, 0),
    (10, 13, 12, 0),
    (10, 14, 8, 1),
    (10, 15, 47, 0),
    (10, 16, 77, 0),
    (10, 17, 35, 0),
    (10, 18, 198, 0),
    (10, 19, 126, 0),
    (10, 20, 59, 1),
    (11, 10, 1, 0),
    (11, 11, 1, 0),
    (11, 12, 6, 0),
    (11, 13, 4, 0),
    (11, 14, 21, 1),
    (11, 15, 58, 1),
    (11, 16, 31, 1),
    (11, 17, 249, 0),
    (11, 18, 399, 0),
    (11, 19, 154, 0),
    (11, 20, 1246, 1),
    (11, 21, 719, 1),
    (11, 22, 265, 1),
    (12, 11, 1, 1),
    (12, 12, 2, 0),
    (12, 13, 5, 1),
    (12, 14, 23, 1),
    (12, 15, 14, 1),
    (12, 16, 113, 2),
    (12, 17, 303, 3),
    (12, 18, 134, 2),
    (12, 19, 1550, 1),
    (12, 20, 2395, 1),
    (12, 21, 845, 1),
    (12, 22, 8789, 3),
    (12, 23, 4721, 3),
    (12, 24, 1544, 3),
    (13, 12, 1, 0),
    (13, 13, 7, 1),
    (13, 14, 5, 1),
    (13, 15, 27, 2),
    (13, 16, 111, 4),
    (13, 17, 59, 4),
    (13, 18, 684, 8),
    (13, 19, 1786, 9),
    (13, 20, 707, 7),
    (13, 21, 10801, 4),
    (13, 22, 16433, 6),
    (13, 23, 5440, 4),
    (13, 24, 68804, 12),
    (13, 25, 35678, 11),
    (13, 26, 10778, 8),
    (14, 13, 2, 1),
    (14, 14, 3, 1),
    (14, 15, 27, 3),
    (14, 16, 18, 2),
    (14, 17, 159, 11),
    (14, 18, 625, 20),
    (14, 19, 298, 11),
    (14, 20, 4620, 40),
    (14, 21, 11855, 36),
    (14, 22, 4399, 20),
    (14, 23, 83399, 19),
    (14, 24, 125829, 28),
    (14, 25, 40399, 14),
    (14, 26, 590342, 55),
    (14, 27, 300361, 45),
    (14, 28, 88168, 25),
];
