// Expected results for the plane line-arrangement sweep, tabulated
// independently of the enumerator. Each entry is (minimal complement index,
// sorted multiplicity tuple).

#[allow(dead_code)]
pub const EXCEPTIONAL_AMPLE: &[(u64, &[u64])] = &[
    (4, &[3, 3, 4, 4]),
    (4, &[3, 4, 4, 4]),
    (4, &[2, 2, 2, 3, 3]),
    (4, &[2, 2, 2, 3, 4]),
    (5, &[2, 4, 5, 5]),
    (5, &[2, 5, 5, 5]),
    (6, &[2, 4, 5, 6]),
    (6, &[2, 4, 6, 6]),
    (6, &[2, 5, 5, 6]),
    (6, &[2, 5, 6, 6]),
    (6, &[3, 3, 4, 5]),
    (6, &[3, 3, 5, 5]),
    (6, &[3, 3, 5, 6]),
    (6, &[3, 3, 4, 6]),
    (6, &[2, 2, 2, 3, 5]),
    (7, &[2, 3, 7, 7]),
    (8, &[2, 3, 7, 8]),
    (8, &[2, 3, 8, 8]),
    (8, &[2, 4, 5, 7]),
    (8, &[2, 4, 5, 8]),
    (8, &[2, 4, 6, 7]),
    (8, &[2, 4, 6, 8]),
    (8, &[2, 4, 7, 7]),
    (8, &[2, 4, 7, 8]),
    (9, &[2, 3, 7, 9]),
    (9, &[2, 3, 8, 9]),
    (9, &[2, 3, 9, 9]),
    (9, &[3, 3, 4, 7]),
    (9, &[3, 3, 4, 8]),
    (9, &[3, 3, 4, 9]),
    (10, &[2, 3, 7, 10]),
    (10, &[2, 3, 8, 10]),
    (10, &[2, 3, 9, 10]),
    (10, &[2, 3, 10, 10]),
    (10, &[2, 4, 5, 9]),
    (10, &[2, 4, 5, 10]),
    (10, &[2, 5, 5, 7]),
    (10, &[2, 5, 5, 8]),
    (10, &[2, 5, 5, 9]),
    (12, &[2, 3, 7, 11]),
    (12, &[2, 3, 7, 12]),
    (12, &[2, 3, 8, 11]),
    (12, &[2, 3, 8, 12]),
    (12, &[2, 3, 9, 11]),
    (12, &[2, 3, 9, 12]),
    (12, &[2, 3, 10, 11]),
    (12, &[2, 3, 10, 12]),
    (12, &[2, 3, 11, 11]),
    (12, &[2, 3, 11, 12]),
    (12, &[2, 4, 5, 11]),
    (12, &[2, 4, 5, 12]),
    (12, &[2, 4, 6, 9]),
    (12, &[2, 4, 6, 10]),
    (12, &[2, 4, 6, 11]),
    (12, &[3, 3, 4, 10]),
    (12, &[3, 3, 4, 11]),
    (12, &[3, 4, 4, 5]),
    (14, &[2, 3, 7, 13]),
    (14, &[2, 3, 7, 14]),
    (15, &[3, 3, 5, 7]),
    (15, &[2, 3, 7, 15]),
    (16, &[2, 3, 7, 16]),
    (16, &[2, 3, 8, 13]),
    (16, &[2, 3, 8, 14]),
    (16, &[2, 3, 8, 15]),
    (16, &[2, 3, 8, 16]),
    (16, &[2, 4, 5, 13]),
    (16, &[2, 4, 5, 14]),
    (16, &[2, 4, 5, 15]),
    (16, &[2, 4, 5, 16]),
    (18, &[2, 3, 7, 17]),
    (18, &[2, 3, 7, 18]),
    (18, &[2, 3, 8, 17]),
    (18, &[2, 3, 8, 18]),
    (18, &[2, 3, 9, 13]),
    (18, &[2, 3, 9, 14]),
    (18, &[2, 3, 9, 15]),
    (18, &[2, 3, 9, 16]),
    (18, &[2, 3, 9, 17]),
    (20, &[2, 4, 5, 17]),
    (20, &[2, 4, 5, 18]),
    (20, &[2, 4, 5, 19]),
    (21, &[2, 3, 7, 19]),
    (21, &[2, 3, 7, 20]),
    (21, &[2, 3, 7, 21]),
    (22, &[2, 3, 7, 22]),
    (24, &[2, 3, 7, 23]),
    (24, &[2, 3, 7, 24]),
    (24, &[2, 3, 8, 19]),
    (24, &[2, 3, 8, 20]),
    (24, &[2, 3, 8, 21]),
    (24, &[2, 3, 8, 22]),
    (24, &[2, 3, 8, 23]),
    (28, &[2, 3, 7, 25]),
    (28, &[2, 3, 7, 26]),
    (28, &[2, 3, 7, 27]),
    (28, &[2, 3, 7, 28]),
    (28, &[2, 4, 7, 9]),
    (30, &[2, 3, 7, 29]),
    (30, &[2, 3, 7, 30]),
    (30, &[2, 3, 10, 13]),
    (30, &[2, 3, 10, 14]),
    (30, &[2, 5, 6, 7]),
    (36, &[2, 3, 7, 31]),
    (36, &[2, 3, 7, 32]),
    (36, &[2, 3, 7, 33]),
    (36, &[2, 3, 7, 34]),
    (36, &[2, 3, 7, 35]),
    (36, &[2, 3, 7, 36]),
    (42, &[2, 3, 7, 37]),
    (42, &[2, 3, 7, 38]),
    (42, &[2, 3, 7, 39]),
    (42, &[2, 3, 7, 40]),
    (42, &[2, 3, 7, 41]),
    (66, &[2, 3, 11, 13]),
];

#[allow(dead_code)]
pub const TRIVIAL_TUPLES: &[(u64, &[u64])] = &[
    (2, &[2, 2, 2, 2, 2, 2]),
    (4, &[4, 4, 4, 4]),
    (4, &[2, 2, 2, 4, 4]),
    (6, &[2, 6, 6, 6]),
    (6, &[3, 3, 6, 6]),
    (6, &[2, 2, 2, 3, 6]),
    (6, &[2, 2, 3, 3, 3]),
    (8, &[2, 4, 8, 8]),
    (10, &[2, 5, 5, 10]),
    (12, &[2, 3, 12, 12]),
    (12, &[2, 4, 6, 12]),
    (12, &[3, 3, 4, 12]),
    (12, &[3, 4, 4, 6]),
    (18, &[2, 3, 9, 18]),
    (20, &[2, 4, 5, 20]),
    (24, &[2, 3, 8, 24]),
    (30, &[2, 3, 10, 15]),
    (42, &[2, 3, 7, 42]),
];

// The nonexceptional ample tuples fall into closed families; this gives the
// expected minimal complement index when the sorted tuple matches one.
#[allow(dead_code)]
pub fn nonexceptional_family_n(t: &[u64]) -> Option<u64> {
    match t {
        [] | [_] | [_, _] | [_, _, _] => Some(1),
        [2, 2, _, _] => Some(2),
        [2, 3, 3, m] if *m >= 3 => Some(3),
        [3, 3, 3, m] if *m >= 3 => Some(3),
        [2, 3, 4, m] if *m >= 4 => Some(4),
        [2, 4, 4, m] if *m >= 4 => Some(4),
        [2, 3, 5, 5] => Some(5),
        [2, 3, 5, m] if *m >= 6 => Some(6),
        [2, 3, 6, m] if *m >= 6 => Some(6),
        [2, 2, 2, 2, _] => Some(2),
        _ => None,
    }
}

#[allow(dead_code)]
pub const COMPL_VALUE_SET: &[u64] = &[
    1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 14, 15, 16, 18, 20, 21, 22, 24, 28, 30, 36, 42, 66,
];
