//! Tabulated R_b values on the even and odd components for b in {0, 1, 4, 5}.
//!
//! Each entry is `(b, even_component, index, quasi_length, value)`. The grids
//! cover indices -5..=7 and quasi-lengths 1..=6; a cell belongs to the even
//! component when `index + quasi_length - 1` is even.

pub const RB_GRIDS: &[(u64, bool, i64, u64, u64)] = &[
    (0, true, -4, 1, 5),
    (0, true, -2, 1, 3),
    (0, true, 0, 1, 1),
    (0, true, 2, 1, 2),
    (0, true, 4, 1, 4),
    (0, true, 6, 1, 6),
    (0, true, -5, 2, 7),
    (0, true, -3, 2, 5),
    (0, true, -1, 2, 3),
    (0, true, 1, 2, 2),
    (0, true, 3, 2, 4),
    (0, true, 5, 2, 6),
    (0, true, 7, 2, 8),
    (0, true, -4, 3, 7),
    (0, true, -2, 3, 5),
    (0, true, 0, 3, 3),
    (0, true, 2, 3, 4),
    (0, true, 4, 3, 6),
    (0, true, 6, 3, 8),
    (0, true, -5, 4, 9),
    (0, true, -3, 4, 7),
    (0, true, -1, 4, 5),
    (0, true, 1, 4, 4),
    (0, true, 3, 4, 6),
    (0, true, 5, 4, 8),
    (0, true, 7, 4, 10),
    (0, true, -4, 5, 9),
    (0, true, -2, 5, 7),
    (0, true, 0, 5, 5),
    (0, true, 2, 5, 6),
    (0, true, 4, 5, 8),
    (0, true, 6, 5, 10),
    (0, true, -5, 6, 11),
    (0, true, -3, 6, 9),
    (0, true, -1, 6, 7),
    (0, true, 1, 6, 6),
    (0, true, 3, 6, 8),
    (0, true, 5, 6, 10),
    (0, true, 7, 6, 12),
    (0, false, -5, 1, 6),
    (0, false, -3, 1, 4),
    (0, false, -1, 1, 2),
    (0, false, 1, 1, 1),
    (0, false, 3, 1, 3),
    (0, false, 5, 1, 5),
    (0, false, 7, 1, 7),
    (0, false, -4, 2, 6),
    (0, false, -2, 2, 4),
    (0, false, 0, 2, 2),
    (0, false, 2, 2, 3),
    (0, false, 4, 2, 5),
    (0, false, 6, 2, 7),
    (0, false, -5, 3, 8),
    (0, false, -3, 3, 6),
    (0, false, -1, 3, 4),
    (0, false, 1, 3, 3),
    (0, false, 3, 3, 5),
    (0, false, 5, 3, 7),
    (0, false, 7, 3, 9),
    (0, false, -4, 4, 8),
    (0, false, -2, 4, 6),
    (0, false, 0, 4, 4),
    (0, false, 2, 4, 5),
    (0, false, 4, 4, 7),
    (0, false, 6, 4, 9),
    (0, false, -5, 5, 10),
    (0, false, -3, 5, 8),
    (0, false, -1, 5, 6),
    (0, false, 1, 5, 5),
    (0, false, 3, 5, 7),
    (0, false, 5, 5, 9),
    (0, false, 7, 5, 11),
    (0, false, -4, 6, 10),
    (0, false, -2, 6, 8),
    (0, false, 0, 6, 6),
    (0, false, 2, 6, 7),
    (0, false, 4, 6, 9),
    (0, false, 6, 6, 11),
    (1, true, -4, 1, 5),
    (1, true, -2, 1, 3),
    (1, true, 0, 1, 1),
    (1, true, 2, 1, 1),
    (1, true, 4, 1, 3),
    (1, true, 6, 1, 5),
    (1, true, -5, 2, 7),
    (1, true, -3, 2, 5),
    (1, true, -1, 2, 3),
    (1, true, 1, 2, 1),
    (1, true, 3, 2, 3),
    (1, true, 5, 2, 5),
    (1, true, 7, 2, 7),
    (1, true, -4, 3, 7),
    (1, true, -2, 3, 5),
    (1, true, 0, 3, 3),
    (1, true, 2, 3, 3),
    (1, true, 4, 3, 5),
    (1, true, 6, 3, 7),
    (1, true, -5, 4, 9),
    (1, true, -3, 4, 7),
    (1, true, -1, 4, 5),
    (1, true, 1, 4, 3),
    (1, true, 3, 4, 5),
    (1, true, 5, 4, 7),
    (1, true, 7, 4, 9),
    (1, true, -4, 5, 9),
    (1, true, -2, 5, 7),
    (1, true, 0, 5, 5),
    (1, true, 2, 5, 5),
    (1, true, 4, 5, 7),
    (1, true, 6, 5, 9),
    (1, true, -5, 6, 11),
    (1, true, -3, 6, 9),
    (1, true, -1, 6, 7),
    (1, true, 1, 6, 5),
    (1, true, 3, 6, 7),
    (1, true, 5, 6, 9),
    (1, true, 7, 6, 11),
    (1, false, -5, 1, 6),
    (1, false, -3, 1, 4),
    (1, false, -1, 1, 2),
    (1, false, 1, 1, 0),
    (1, false, 3, 1, 2),
    (1, false, 5, 1, 4),
    (1, false, 7, 1, 6),
    (1, false, -4, 2, 6),
    (1, false, -2, 2, 4),
    (1, false, 0, 2, 2),
    (1, false, 2, 2, 2),
    (1, false, 4, 2, 4),
    (1, false, 6, 2, 6),
    (1, false, -5, 3, 8),
    (1, false, -3, 3, 6),
    (1, false, -1, 3, 4),
    (1, false, 1, 3, 2),
    (1, false, 3, 3, 4),
    (1, false, 5, 3, 6),
    (1, false, 7, 3, 8),
    (1, false, -4, 4, 8),
    (1, false, -2, 4, 6),
    (1, false, 0, 4, 4),
    (1, false, 2, 4, 4),
    (1, false, 4, 4, 6),
    (1, false, 6, 4, 8),
    (1, false, -5, 5, 10),
    (1, false, -3, 5, 8),
    (1, false, -1, 5, 6),
    (1, false, 1, 5, 4),
    (1, false, 3, 5, 6),
    (1, false, 5, 5, 8),
    (1, false, 7, 5, 10),
    (1, false, -4, 6, 10),
    (1, false, -2, 6, 8),
    (1, false, 0, 6, 6),
    (1, false, 2, 6, 6),
    (1, false, 4, 6, 8),
    (1, false, 6, 6, 10),
    (4, true, -4, 1, 5),
    (4, true, -2, 1, 3),
    (4, true, 0, 1, 1),
    (4, true, 2, 1, 0),
    (4, true, 4, 1, 0),
    (4, true, 6, 1, 2),
    (4, true, -5, 2, 7),
    (4, true, -3, 2, 5),
    (4, true, -1, 2, 3),
    (4, true, 1, 2, 1),
    (4, true, 3, 2, 1),
    (4, true, 5, 2, 2),
    (4, true, 7, 2, 4),
    (4, true, -4, 3, 7),
    (4, true, -2, 3, 5),
    (4, true, 0, 3, 3),
    (4, true, 2, 3, 2),
    (4, true, 4, 3, 2),
    (4, true, 6, 3, 4),
    (4, true, -5, 4, 9),
    (4, true, -3, 4, 7),
    (4, true, -1, 4, 5),
    (4, true, 1, 4, 3),
    (4, true, 3, 4, 3),
    (4, true, 5, 4, 4),
    (4, true, 7, 4, 6),
    (4, true, -4, 5, 9),
    (4, true, -2, 5, 7),
    (4, true, 0, 5, 5),
    (4, true, 2, 5, 4),
    (4, true, 4, 5, 4),
    (4, true, 6, 5, 6),
    (4, true, -5, 6, 11),
    (4, true, -3, 6, 9),
    (4, true, -1, 6, 7),
    (4, true, 1, 6, 5),
    (4, true, 3, 6, 5),
    (4, true, 5, 6, 6),
    (4, true, 7, 6, 8),
    (4, false, -5, 1, 6),
    (4, false, -3, 1, 4),
    (4, false, -1, 1, 2),
    (4, false, 1, 1, 0),
    (4, false, 3, 1, 0),
    (4, false, 5, 1, 1),
    (4, false, 7, 1, 3),
    (4, false, -4, 2, 6),
    (4, false, -2, 2, 4),
    (4, false, 0, 2, 2),
    (4, false, 2, 2, 1),
    (4, false, 4, 2, 1),
    (4, false, 6, 2, 3),
    (4, false, -5, 3, 8),
    (4, false, -3, 3, 6),
    (4, false, -1, 3, 4),
    (4, false, 1, 3, 2),
    (4, false, 3, 3, 2),
    (4, false, 5, 3, 3),
    (4, false, 7, 3, 5),
    (4, false, -4, 4, 8),
    (4, false, -2, 4, 6),
    (4, false, 0, 4, 4),
    (4, false, 2, 4, 3),
    (4, false, 4, 4, 3),
    (4, false, 6, 4, 5),
    (4, false, -5, 5, 10),
    (4, false, -3, 5, 8),
    (4, false, -1, 5, 6),
    (4, false, 1, 5, 4),
    (4, false, 3, 5, 4),
    (4, false, 5, 5, 5),
    (4, false, 7, 5, 7),
    (4, false, -4, 6, 10),
    (4, false, -2, 6, 8),
    (4, false, 0, 6, 6),
    (4, false, 2, 6, 5),
    (4, false, 4, 6, 5),
    (4, false, 6, 6, 7),
    (5, true, -4, 1, 5),
    (5, true, -2, 1, 3),
    (5, true, 0, 1, 1),
    (5, true, 2, 1, 0),
    (5, true, 4, 1, 0),
    (5, true, 6, 1, 1),
    (5, true, -5, 2, 7),
    (5, true, -3, 2, 5),
    (5, true, -1, 2, 3),
    (5, true, 1, 2, 1),
    (5, true, 3, 2, 1),
    (5, true, 5, 2, 1),
    (5, true, 7, 2, 3),
    (5, true, -4, 3, 7),
    (5, true, -2, 3, 5),
    (5, true, 0, 3, 3),
    (5, true, 2, 3, 2),
    (5, true, 4, 3, 2),
    (5, true, 6, 3, 3),
    (5, true, -5, 4, 9),
    (5, true, -3, 4, 7),
    (5, true, -1, 4, 5),
    (5, true, 1, 4, 3),
    (5, true, 3, 4, 3),
    (5, true, 5, 4, 3),
    (5, true, 7, 4, 5),
    (5, true, -4, 5, 9),
    (5, true, -2, 5, 7),
    (5, true, 0, 5, 5),
    (5, true, 2, 5, 4),
    (5, true, 4, 5, 4),
    (5, true, 6, 5, 5),
    (5, true, -5, 6, 11),
    (5, true, -3, 6, 9),
    (5, true, -1, 6, 7),
    (5, true, 1, 6, 5),
    (5, true, 3, 6, 5),
    (5, true, 5, 6, 5),
    (5, true, 7, 6, 7),
    (5, false, -5, 1, 6),
    (5, false, -3, 1, 4),
    (5, false, -1, 1, 2),
    (5, false, 1, 1, 0),
    (5, false, 3, 1, 0),
    (5, false, 5, 1, 0),
    (5, false, 7, 1, 2),
    (5, false, -4, 2, 6),
    (5, false, -2, 2, 4),
    (5, false, 0, 2, 2),
    (5, false, 2, 2, 1),
    (5, false, 4, 2, 1),
    (5, false, 6, 2, 2),
    (5, false, -5, 3, 8),
    (5, false, -3, 3, 6),
    (5, false, -1, 3, 4),
    (5, false, 1, 3, 2),
    (5, false, 3, 3, 2),
    (5, false, 5, 3, 2),
    (5, false, 7, 3, 4),
    (5, false, -4, 4, 8),
    (5, false, -2, 4, 6),
    (5, false, 0, 4, 4),
    (5, false, 2, 4, 3),
    (5, false, 4, 4, 3),
    (5, false, 6, 4, 4),
    (5, false, -5, 5, 10),
    (5, false, -3, 5, 8),
    (5, false, -1, 5, 6),
    (5, false, 1, 5, 4),
    (5, false, 3, 5, 4),
    (5, false, 5, 5, 4),
    (5, false, 7, 5, 8),
    (5, false, -4, 6, 10),
    (5, false, -2, 6, 8),
    (5, false, 0, 6, 6),
    (5, false, 2, 6, 5),
    (5, false, 4, 6, 5),
    (5, false, 6, 6, 8),
];
