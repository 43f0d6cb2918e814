//! Fixtures shared by the integration tests.
#![allow(dead_code)]

/// `G(C)` for the 14 admissible height-2 columns, as `(reading, [(reading, coefficient)])`.
/// The row `3 3̄` reads `q³ v_{2 2̄}` (weight zero, like `3 3̄`).
pub const G_TABLE: [(&str, &[(&str, &str)]); 14] = [
    ("1 2", &[]),
    ("1 3", &[]),
    ("2 3", &[("1 0", "q")]),
    ("2 -3", &[]),
    ("2 0", &[("1 -3", "q^2")]),
    ("3 0", &[("1 -2", "q^2")]),
    ("3 -3", &[("2 -2", "q^3")]),
    ("-2 -1", &[]),
    ("-3 -1", &[]),
    ("-3 -2", &[("0 -1", "q")]),
    ("3 -2", &[]),
    ("0 -2", &[("3 -1", "q^2")]),
    ("0 -3", &[("2 -1", "q^2")]),
    (
        "0 0",
        &[("3 -3", "q + q^3"), ("2 -2", "q^2"), ("1 -1", "q^3")],
    ),
];

/// Arrows read off the picture of `B(Λ1)⊗B(Λ1)`.
pub const FIGURE_ARROWS: [(&str, u8, &str); 30] = [
    ("1 1", 1, "2 1"),
    ("2 1", 2, "3 1"),
    ("3 1", 1, "0 1"),
    ("0 1", 1, "-3 1"),
    ("-3 1", 2, "-2 1"),
    ("-2 1", 1, "-1 1"),
    ("2 1", 1, "2 2"),
    ("-3 1", 1, "-3 2"),
    ("-1 1", 1, "-1 2"),
    ("2 2", 2, "3 2"),
    ("3 2", 1, "0 2"),
    ("-3 2", 2, "-2 2"),
    ("1 2", 2, "1 3"),
    ("3 2", 2, "3 3"),
    ("0 2", 2, "0 3"),
    ("-2 2", 2, "-2 3"),
    ("-1 2", 2, "-1 3"),
    ("1 3", 1, "2 3"),
    ("3 3", 1, "0 3"),
    ("0 3", 1, "-3 3"),
    ("-2 3", 1, "-1 3"),
    ("2 0", 2, "3 0"),
    ("3 0", 1, "0 0"),
    ("2 -3", 2, "3 -3"),
    ("-3 -3", 2, "-2 -3"),
    ("1 -2", 1, "2 -2"),
    ("3 -2", 1, "0 -2"),
    ("0 -2", 1, "-3 -2"),
    ("2 -1", 2, "3 -1"),
    ("3 -1", 1, "0 -1"),
];
