//! Reference values the `--diff` mode of `table` compares against.

/// μ, |Γ_μ|, subgroups, conjugacy classes, classes realized by prime links
/// with at most 8 crossings.
pub const GROUPS: [(usize, usize, usize, usize, usize); 5] = [
    (1, 4, 5, 5, 3),
    (2, 16, 35, 27, 5),
    (3, 96, 420, 131, 7),
    (4, 768, 9417, 994, 3),
    (5, 7680, 270131, 6382, 0),
];

/// Crossings, then (unoriented, oriented-labeled) counts for μ = 2, 3, 4.
pub type CountRow = (usize, [Option<(usize, usize)>; 3]);

pub const LINK_TYPES: [CountRow; 7] = [
    (0, [Some((1, 1)), None, None]),
    (2, [Some((1, 2)), None, None]),
    (4, [Some((1, 4)), None, None]),
    (5, [Some((1, 2)), None, None]),
    (6, [Some((3, 10)), Some((3, 18)), None]),
    (7, [Some((8, 38)), Some((1, 8)), None]),
    (8, [Some((16, 78)), Some((10, 200)), Some((3, 120))]),
];

/// Named groups of two-component links and their isomorphism types.
pub const NAMED: [(&str, usize, &str); 9] = [
    ("trivial", 1, "trivial"),
    ("Sigma2,1", 2, "Z2"),
    ("Sigma4,1", 4, "D2"),
    ("Sigma4,2", 4, "D2"),
    ("Sigma4,3", 4, "D2"),
    ("Sigma8,1", 8, "D4"),
    ("Sigma8,2", 8, "D4"),
    ("Sigma8,3", 8, "Z2xZ2xZ2"),
    ("Gamma2", 16, "Z2xD4"),
];

/// Rolfsen, Thistlethwaite, group name.
pub const TWO_COMPONENT: [(&str, &str, &str); 30] = [
    ("2^2_1", "2a1", "Sigma8,2"),
    ("4^2_1", "4a1", "Sigma4,1"),
    ("5^2_1", "5a1", "Sigma8,1"),
    ("6^2_1", "6a3", "Sigma4,1"),
    ("6^2_2", "6a2", "Sigma8,2"),
    ("6^2_3", "6a1", "Sigma4,1"),
    ("7^2_1", "7a6", "Sigma4,1"),
    ("7^2_2", "7a5", "Sigma4,1"),
    ("7^2_3", "7a4", "Sigma8,1"),
    ("7^2_4", "7a3", "Sigma4,2"),
    ("7^2_5", "7a2", "Sigma2,1"),
    ("7^2_6", "7a1", "Sigma4,2"),
    ("7^2_7", "7n1", "Sigma2,1"),
    ("7^2_8", "7n2", "Sigma4,2"),
    ("8^2_1", "8a14", "Sigma4,1"),
    ("8^2_2", "8a12", "Sigma4,1"),
    ("8^2_3", "8a11", "Sigma4,1"),
    ("8^2_4", "8a13", "Sigma4,1"),
    ("8^2_5", "8a10", "Sigma4,1"),
    ("8^2_6", "8a6", "Sigma4,1"),
    ("8^2_7", "8a8", "Sigma4,1"),
    ("8^2_8", "8a9", "Sigma8,2"),
    ("8^2_9", "8a3", "Sigma2,1"),
    ("8^2_10", "8a2", "Sigma4,2"),
    ("8^2_11", "8a5", "Sigma2,1"),
    ("8^2_12", "8a4", "Sigma4,2"),
    ("8^2_13", "8a1", "Sigma4,2"),
    ("8^2_14", "8a7", "Sigma2,1"),
    ("8^2_15", "8n2", "Sigma4,2"),
    ("8^2_16", "8n1", "Sigma2,1"),
];

/// Rolfsen, Thistlethwaite, order, isomorphism type.
pub const THREE_COMPONENT: [(&str, &str, usize, &str); 14] = [
    ("6^3_1", "6a5", 12, "D6"),
    ("6^3_2", "6a4", 48, "Z2xS3wr"),
    ("6^3_3", "6n1", 12, "D6"),
    ("7^3_1", "7a7", 12, "D6"),
    ("8^3_1", "8a18", 4, "D2"),
    ("8^3_2", "8a17", 4, "D2"),
    ("8^3_3", "8a15", 12, "D6"),
    ("8^3_4", "8a20", 4, "D2"),
    ("8^3_5", "8a16", 4, "D2"),
    ("8^3_6", "8a19", 8, "Z2xZ2xZ2"),
    ("8^3_7", "8n3", 4, "D2"),
    ("8^3_8", "8n4", 4, "D2"),
    ("8^3_9", "8n5", 8, "Z2xZ2xZ2"),
    ("8^3_10", "8n6", 4, "D2"),
];

pub const FOUR_COMPONENT: [(&str, &str, usize, &str); 3] = [
    ("8^4_1", "8a21", 16, "Z2xD4"),
    ("8^4_2", "8n7", 16, "D8"),
    ("8^4_3", "8n8", 32, "Z2xZ2xD4"),
];
