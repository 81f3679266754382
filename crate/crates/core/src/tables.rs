//! Published reference values for the census and Fricke sweeps.

/// Rows `(l, N, h(−5l))` of the published tables, grouped by `l mod 12`.
pub const CENSUS_ROWS: [(u64, u64, u64); 50] = [
    (13, 2, 8), (37, 4, 16), (61, 8, 16), (73, 5, 20), (97, 5, 20), (109, 16, 32), (157, 4, 16),
    (181, 12, 24), (229, 12, 24), (241, 20, 40), (277, 12, 48), (313, 7, 28), (349, 20, 40), (373, 12, 48),
    (17, 1, 4), (29, 4, 8), (41, 4, 8), (53, 2, 8), (89, 4, 8), (113, 3, 12), (137, 3, 12),
    (149, 8, 16), (197, 6, 24), (233, 5, 20), (257, 3, 12), (281, 12, 24), (317, 6, 24), (353, 5, 20),
    (7, 1, 2), (19, 5, 8), (31, 7, 4), (43, 6, 14), (67, 8, 18), (79, 13, 8), (127, 9, 10),
    (139, 21, 24), (151, 23, 12), (163, 14, 30), (211, 35, 36), (283, 16, 34), (307, 18, 38), (331, 43, 44),
    (379, 45, 48),
    (11, 3, 4), (23, 1, 2), (47, 1, 2), (59, 5, 8), (71, 7, 4), (83, 4, 10), (131, 11, 12),
];

/// The census table holding `l`: 6, 7, 8, 9 for `l ≡ 1, 5, 7, 11 mod 12`.
pub fn census_table_of(l: u64) -> u32 {
    match l % 12 {
        1 => 6,
        5 => 7,
        7 => 8,
        _ => 9,
    }
}

pub fn census_rows(table: u32) -> Vec<(u64, u64, u64)> {
    CENSUS_ROWS.iter().copied().filter(|r| census_table_of(r.0) == table).collect()
}

/// Degree and number of linear factors for 7 ≤ p ≤ 97.
pub const FRICKE_ROWS: [(u64, u64, u64); 22] = [
    (7, 2, 2),
    (11, 4, 4),
    (13, 4, 2),
    (17, 5, 1),
    (19, 6, 6),
    (23, 6, 2),
    (29, 7, 5),
    (31, 9, 7),
    (37, 10, 4),
    (41, 10, 6),
    (43, 11, 7),
    (47, 12, 2),
    (53, 14, 2),
    (59, 16, 10),
    (61, 15, 7),
    (67, 17, 9),
    (71, 19, 11),
    (73, 19, 5),
    (79, 21, 13),
    (83, 21, 5),
    (89, 22, 8),
    (97, 25, 5),
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn row_counts() {
        let counts: Vec<usize> = (6..=9).map(|t| census_rows(t).len()).collect();
        assert_eq!(counts, vec![14, 14, 15, 7]);
        assert_eq!(FRICKE_ROWS.len(), 22);
    }
}
