//! Card-dealing arrangements on an `m × n` grid and the permutations between
//! them.
//!
//! A full deck of `m·n` cards labeled `0..m·n` can be dealt by rows, by
//! columns, or along the wrapping down-right diagonal (the latter needs
//! `gcd(m, n) = 1`). A deck of `n−1` cards labeled `1..n` (odd `n ≥ 3`) can
//! additionally be dealt into a `2 × (n−1)/2` grid by the zigzag and modified
//! zigzag patterns. Matching two deals position by position yields a
//! [`Permutation`] of the deck, and the signs of those permutations encode
//! quadratic-residue information; the closed forms live here as
//! [`gamma_sign_formula`], [`gamma_sign_odd_formula`] and
//! [`gamma_inversion_pairs`].

use thiserror::Error;

use crate::perm::{Permutation, Sign};

/// Upper bound on dense grid storage, in cells.
pub const MAX_CELLS: usize = 10_000_000;

/// Errors from deal construction and matching.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DealError {
    #[error("grid dimensions must be positive, got {m}x{n}")]
    ZeroDimension { m: usize, n: usize },
    #[error("grid of {cells} cells exceeds the dense-storage capacity of {max}")]
    CapacityExceeded { cells: u128, max: usize },
    #[error("diagonal deal needs coprime dimensions: gcd({m}, {n}) = {gcd}")]
    NonCoprimeDimensions { m: usize, n: usize, gcd: usize },
    #[error("two-row deals need an odd modulus >= 3, got {n}")]
    EvenOrSmallModulus { n: usize },
    #[error("formula needs odd dimensions, got {m}x{n}")]
    EvenDimension { m: usize, n: usize },
    #[error("deal shapes differ: {from_m}x{from_n} vs {to_m}x{to_n}")]
    ShapeMismatch {
        from_m: usize,
        from_n: usize,
        to_m: usize,
        to_n: usize,
    },
    #[error("deal label bases differ: {from} vs {to}")]
    LabelBaseMismatch { from: usize, to: usize },
    #[error("cells are not a permutation of the label range starting at {label_base}")]
    InvalidCells { label_base: usize },
    #[error("deal kind {kind} is not defined for the {family} family")]
    UnsupportedKind {
        kind: &'static str,
        family: &'static str,
    },
}

/// Grid dimensions: `m` rows by `n` columns, both positive, at most
/// [`MAX_CELLS`] cells in total.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GridSpec {
    m: usize,
    n: usize,
}

impl GridSpec {
    pub fn new(m: usize, n: usize) -> Result<GridSpec, DealError> {
        if m == 0 || n == 0 {
            return Err(DealError::ZeroDimension { m, n });
        }
        let cells = m as u128 * n as u128;
        if cells > MAX_CELLS as u128 {
            return Err(DealError::CapacityExceeded {
                cells,
                max: MAX_CELLS,
            });
        }
        Ok(GridSpec { m, n })
    }

    /// Row count.
    pub fn rows(&self) -> usize {
        self.m
    }

    /// Column count.
    pub fn cols(&self) -> usize {
        self.n
    }

    /// Total cell count `m·n`.
    pub fn cells(&self) -> usize {
        self.m * self.n
    }
}

/// The five dealing patterns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DealKind {
    Row,
    Column,
    Diagonal,
    Zigzag,
    ModifiedZigzag,
}

impl DealKind {
    pub fn name(&self) -> &'static str {
        match self {
            DealKind::Row => "row",
            DealKind::Column => "column",
            DealKind::Diagonal => "diagonal",
            DealKind::Zigzag => "zigzag",
            DealKind::ModifiedZigzag => "modified-zigzag",
        }
    }

    /// Builds a full-deck deal (labels `0..m·n`) of this kind. The zigzag
    /// kinds live in the two-row family and are rejected here.
    pub fn full_deck(self, spec: GridSpec) -> Result<Deal, DealError> {
        match self {
            DealKind::Row => Ok(row_deal(spec)),
            DealKind::Column => Ok(column_deal(spec)),
            DealKind::Diagonal => diagonal_deal(spec),
            DealKind::Zigzag | DealKind::ModifiedZigzag => Err(DealError::UnsupportedKind {
                kind: self.name(),
                family: "full-deck",
            }),
        }
    }

    /// Builds a two-row deal over the deck `1..n` for odd `n ≥ 3`. The
    /// diagonal pattern has no two-row counterpart and is rejected.
    pub fn two_row(self, modulus: usize) -> Result<Deal, DealError> {
        match self {
            DealKind::Row => two_row_row_deal(modulus),
            DealKind::Column => two_row_column_deal(modulus),
            DealKind::Zigzag => zigzag_deal(modulus),
            DealKind::ModifiedZigzag => modified_zigzag_deal(modulus),
            DealKind::Diagonal => Err(DealError::UnsupportedKind {
                kind: self.name(),
                family: "two-row",
            }),
        }
    }
}

/// An `m × n` grid holding each label in
/// `{label_base, …, label_base + m·n − 1}` exactly once.
///
/// `label_base` is 0 for full-deck deals and 1 for the two-row deals over
/// `{1, …, n−1}`, so rendered grids match the conventional pictures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Deal {
    spec: GridSpec,
    label_base: usize,
    cells: Vec<usize>, // row-major
}

impl Deal {
    /// Validates that `cells` holds each label in the range exactly once.
    pub fn from_cells(
        spec: GridSpec,
        label_base: usize,
        cells: Vec<usize>,
    ) -> Result<Deal, DealError> {
        let count = spec.cells();
        if cells.len() != count {
            return Err(DealError::InvalidCells { label_base });
        }
        let mut seen = vec![false; count];
        for &label in &cells {
            let offset = label.wrapping_sub(label_base);
            if label < label_base || offset >= count || seen[offset] {
                return Err(DealError::InvalidCells { label_base });
            }
            seen[offset] = true;
        }
        Ok(Deal {
            spec,
            label_base,
            cells,
        })
    }

    pub fn spec(&self) -> GridSpec {
        self.spec
    }

    pub fn label_base(&self) -> usize {
        self.label_base
    }

    /// Label at row `i`, column `j`. Panics out of range.
    pub fn cell(&self, i: usize, j: usize) -> usize {
        self.cells[i * self.spec.n + j]
    }

    /// Row `i` as a slice.
    pub fn row(&self, i: usize) -> &[usize] {
        &self.cells[i * self.spec.n..(i + 1) * self.spec.n]
    }

    /// Rows, top to bottom.
    pub fn rows(&self) -> impl Iterator<Item = &[usize]> {
        self.cells.chunks(self.spec.n)
    }
}

/// Row deal: rows top to bottom, cards left to right, so cell `(i, j)`
/// holds card `n·i + j`.
pub fn row_deal(spec: GridSpec) -> Deal {
    Deal {
        spec,
        label_base: 0,
        cells: (0..spec.cells()).collect(),
    }
}

/// Column deal: columns left to right, cards top to bottom, so cell `(i, j)`
/// holds card `i + m·j`.
pub fn column_deal(spec: GridSpec) -> Deal {
    let (m, n) = (spec.m, spec.n);
    let mut cells = vec![0usize; spec.cells()];
    let mut card = 0;
    for j in 0..n {
        for i in 0..m {
            cells[i * n + j] = card;
            card += 1;
        }
    }
    Deal {
        spec,
        label_base: 0,
        cells,
    }
}

/// Diagonal deal: starting at the top-left corner, walk down and to the
/// right, wrapping on both axes, dealing one card per step. Requires
/// `gcd(m, n) = 1`, otherwise the walk revisits cells. Cell `(i, j)` ends up
/// holding the unique card `t` with `t ≡ i (mod m)` and `t ≡ j (mod n)`.
pub fn diagonal_deal(spec: GridSpec) -> Result<Deal, DealError> {
    let (m, n) = (spec.m, spec.n);
    let g = gcd_usize(m, n);
    if g != 1 {
        return Err(DealError::NonCoprimeDimensions { m, n, gcd: g });
    }
    let mut cells = vec![0usize; spec.cells()];
    let (mut i, mut j) = (0usize, 0usize);
    for card in 0..spec.cells() {
        cells[i * n + j] = card;
        i = if i + 1 == m { 0 } else { i + 1 };
        j = if j + 1 == n { 0 } else { j + 1 };
    }
    Ok(Deal {
        spec,
        label_base: 0,
        cells,
    })
}

fn two_row_spec(modulus: usize) -> Result<GridSpec, DealError> {
    if modulus < 3 || modulus % 2 == 0 {
        return Err(DealError::EvenOrSmallModulus { n: modulus });
    }
    GridSpec::new(2, (modulus - 1) / 2)
}

/// Row deal over the two-row deck `{1, …, n−1}` for odd `n ≥ 3`.
pub fn two_row_row_deal(modulus: usize) -> Result<Deal, DealError> {
    let spec = two_row_spec(modulus)?;
    Ok(Deal {
        spec,
        label_base: 1,
        cells: (1..modulus).collect(),
    })
}

/// Column deal over the two-row deck `{1, …, n−1}` for odd `n ≥ 3`.
pub fn two_row_column_deal(modulus: usize) -> Result<Deal, DealError> {
    let spec = two_row_spec(modulus)?;
    let m = spec.cols();
    let mut cells = vec![0usize; spec.cells()];
    let mut card = 1;
    for j in 0..m {
        for i in 0..2 {
            cells[i * m + j] = card;
            card += 1;
        }
    }
    Ok(Deal {
        spec,
        label_base: 1,
        cells,
    })
}

/// Zigzag deal: card 1 into the lower-left corner, then alternate between
/// moving up and moving down-right, so card `2k+1` lands at `(1, k)` and
/// card `2k+2` at `(0, k)`. Equivalently: the two-row column deal with the
/// two entries of every column swapped.
pub fn zigzag_deal(modulus: usize) -> Result<Deal, DealError> {
    let spec = two_row_spec(modulus)?;
    let m = spec.cols();
    let mut cells = vec![0usize; spec.cells()];
    let (mut i, mut j) = (1usize, 0usize);
    for card in 1..modulus {
        cells[i * m + j] = card;
        if i == 1 {
            i = 0; // up
        } else {
            i = 1; // down and to the right
            j += 1;
        }
    }
    Ok(Deal {
        spec,
        label_base: 1,
        cells,
    })
}

/// Modified zigzag deal: the two-row row deal with column order reversed and
/// the two entries of every column swapped, so cell `(i, j)` holds
/// `n − (row deal cell (i, j))`, i.e. row 0 is `2m−j` and row 1 is `m−j`.
pub fn modified_zigzag_deal(modulus: usize) -> Result<Deal, DealError> {
    let spec = two_row_spec(modulus)?;
    let m = spec.cols();
    let mut cells = vec![0usize; spec.cells()];
    for j in 0..m {
        cells[j] = 2 * m - j;
        cells[m + j] = m - j;
    }
    Ok(Deal {
        spec,
        label_base: 1,
        cells,
    })
}

/// The permutation sending the card at each position of `from` to the card
/// at the same position of `to`. Both deals must share dimensions and label
/// base; labels are shifted by the base so the permutation acts on
/// `{0, …, N−1}`.
pub fn deal_permutation(from: &Deal, to: &Deal) -> Result<Permutation, DealError> {
    if from.spec != to.spec {
        return Err(DealError::ShapeMismatch {
            from_m: from.spec.m,
            from_n: from.spec.n,
            to_m: to.spec.m,
            to_n: to.spec.n,
        });
    }
    if from.label_base != to.label_base {
        return Err(DealError::LabelBaseMismatch {
            from: from.label_base,
            to: to.label_base,
        });
    }
    let base = from.label_base;
    let mut image = vec![0usize; from.spec.cells()];
    for (source, target) in from.cells.iter().zip(&to.cells) {
        image[source - base] = target - base;
    }
    Permutation::from_image(image).map_err(|_| DealError::InvalidCells { label_base: base })
}

/// Sign of the row-to-column permutation: `(−1)^{C(m,2)·C(n,2)}`, evaluated
/// on binomial parities.
pub fn gamma_sign_formula(spec: GridSpec) -> Sign {
    Sign::of_parity(choose2_parity(spec.m) * choose2_parity(spec.n))
}

/// For odd `m` and `n`, the equivalent closed form `(−1)^{(m−1)(n−1)/4}`.
pub fn gamma_sign_odd_formula(spec: GridSpec) -> Result<Sign, DealError> {
    if spec.m % 2 == 0 || spec.n % 2 == 0 {
        return Err(DealError::EvenDimension {
            m: spec.m,
            n: spec.n,
        });
    }
    let half_m = ((spec.m - 1) / 2) as u64;
    let half_n = ((spec.n - 1) / 2) as u64;
    Ok(Sign::of_parity(half_m * half_n))
}

/// Number of position pairs of the row deal where the second card lies
/// below and to the left of the first: `C(m,2)·C(n,2)`. Equals the inversion
/// count of the row-to-column permutation.
pub fn gamma_inversion_pairs(spec: GridSpec) -> u64 {
    choose2(spec.m) * choose2(spec.n)
}

fn choose2(k: usize) -> u64 {
    let k = k as u64;
    if k < 2 {
        0
    } else {
        k * (k - 1) / 2
    }
}

fn choose2_parity(k: usize) -> u64 {
    choose2(k) % 2
}

pub(crate) fn gcd_usize(a: usize, b: usize) -> usize {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(m: usize, n: usize) -> GridSpec {
        GridSpec::new(m, n).unwrap()
    }

    fn grid(deal: &Deal) -> Vec<Vec<usize>> {
        deal.rows().map(|r| r.to_vec()).collect()
    }

    #[test]
    fn spec_validation() {
        assert_eq!(
            GridSpec::new(0, 4),
            Err(DealError::ZeroDimension { m: 0, n: 4 })
        );
        assert_eq!(
            GridSpec::new(10_000, 10_001),
            Err(DealError::CapacityExceeded {
                cells: 100_010_000,
                max: MAX_CELLS
            })
        );
        assert!(GridSpec::new(10_000, 1_000).is_ok());
    }

    #[test]
    fn row_deal_grids() {
        assert_eq!(
            grid(&row_deal(spec(3, 5))),
            vec![
                vec![0, 1, 2, 3, 4],
                vec![5, 6, 7, 8, 9],
                vec![10, 11, 12, 13, 14],
            ]
        );
        assert_eq!(grid(&row_deal(spec(1, 4))), vec![vec![0, 1, 2, 3]]);
        assert_eq!(grid(&row_deal(spec(2, 2))), vec![vec![0, 1], vec![2, 3]]);
    }

    #[test]
    fn column_deal_grids() {
        assert_eq!(
            grid(&column_deal(spec(3, 5))),
            vec![
                vec![0, 3, 6, 9, 12],
                vec![1, 4, 7, 10, 13],
                vec![2, 5, 8, 11, 14],
            ]
        );
        assert_eq!(
            grid(&column_deal(spec(3, 1))),
            vec![vec![0], vec![1], vec![2]]
        );
        assert_eq!(grid(&column_deal(spec(2, 2))), vec![vec![0, 2], vec![1, 3]]);
    }

    #[test]
    fn diagonal_deal_grid_and_errors() {
        assert_eq!(
            grid(&diagonal_deal(spec(3, 5)).unwrap()),
            vec![
                vec![0, 6, 12, 3, 9],
                vec![10, 1, 7, 13, 4],
                vec![5, 11, 2, 8, 14],
            ]
        );
        assert_eq!(diagonal_deal(spec(1, 4)).unwrap(), row_deal(spec(1, 4)));
        assert_eq!(
            diagonal_deal(spec(3, 6)),
            Err(DealError::NonCoprimeDimensions { m: 3, n: 6, gcd: 3 })
        );
    }

    #[test]
    fn diagonal_deal_satisfies_residue_characterization() {
        for (m, n) in [(3, 5), (5, 3), (4, 9), (7, 8), (1, 6), (9, 1), (15, 16)] {
            let deal = diagonal_deal(spec(m, n)).unwrap();
            for i in 0..m {
                for j in 0..n {
                    let card = deal.cell(i, j);
                    assert_eq!(card % m, i, "row residue at ({i},{j}) of {m}x{n}");
                    assert_eq!(card % n, j, "column residue at ({i},{j}) of {m}x{n}");
                }
            }
        }
    }

    #[test]
    fn zigzag_deal_grids() {
        assert_eq!(grid(&zigzag_deal(5).unwrap()), vec![vec![2, 4], vec![1, 3]]);
        assert_eq!(grid(&zigzag_deal(3).unwrap()), vec![vec![2], vec![1]]);
        assert_eq!(
            grid(&zigzag_deal(7).unwrap()),
            vec![vec![2, 4, 6], vec![1, 3, 5]]
        );
        assert_eq!(zigzag_deal(4), Err(DealError::EvenOrSmallModulus { n: 4 }));
        assert_eq!(zigzag_deal(1), Err(DealError::EvenOrSmallModulus { n: 1 }));
    }

    #[test]
    fn zigzag_equals_column_swapped_column_deal() {
        for n in (3..=99usize).step_by(2) {
            let zigzag = zigzag_deal(n).unwrap();
            let columns = two_row_column_deal(n).unwrap();
            let m = zigzag.spec().cols();
            for j in 0..m {
                assert_eq!(zigzag.cell(0, j), columns.cell(1, j));
                assert_eq!(zigzag.cell(1, j), columns.cell(0, j));
            }
        }
    }

    #[test]
    fn modified_zigzag_grids() {
        assert_eq!(
            grid(&modified_zigzag_deal(5).unwrap()),
            vec![vec![4, 3], vec![2, 1]]
        );
        assert_eq!(
            grid(&modified_zigzag_deal(3).unwrap()),
            vec![vec![2], vec![1]]
        );
        assert_eq!(
            grid(&modified_zigzag_deal(7).unwrap()),
            vec![vec![6, 5, 4], vec![3, 2, 1]]
        );
    }

    #[test]
    fn modified_zigzag_matches_reverse_then_swap_construction() {
        for n in (3..=99usize).step_by(2) {
            let modified = modified_zigzag_deal(n).unwrap();
            let rows = two_row_row_deal(n).unwrap();
            let m = rows.spec().cols();
            for j in 0..m {
                // reverse the column order of the row deal, then swap within
                // each column
                assert_eq!(modified.cell(0, j), rows.cell(1, m - 1 - j));
                assert_eq!(modified.cell(1, j), rows.cell(0, m - 1 - j));
                // and the complement form
                assert_eq!(modified.cell(0, j), n - rows.cell(0, j));
                assert_eq!(modified.cell(1, j), n - rows.cell(1, j));
            }
        }
    }

    #[test]
    fn two_row_basics() {
        assert_eq!(
            grid(&two_row_row_deal(5).unwrap()),
            vec![vec![1, 2], vec![3, 4]]
        );
        assert_eq!(
            grid(&two_row_column_deal(5).unwrap()),
            vec![vec![1, 3], vec![2, 4]]
        );
    }

    #[test]
    fn deal_permutation_row_to_column() {
        let gamma = deal_permutation(&row_deal(spec(3, 5)), &column_deal(spec(3, 5))).unwrap();
        assert_eq!(gamma.apply(0), 0);
        assert_eq!(gamma.apply(1), 3);
        assert_eq!(gamma.apply(2), 6);
        assert_eq!(gamma.apply(5), 1);
        assert_eq!(gamma.apply(7), 7);
        assert_eq!(gamma.apply(14), 14);
    }

    #[test]
    fn deal_permutation_identity_and_errors() {
        let d = diagonal_deal(spec(3, 5)).unwrap();
        assert_eq!(
            deal_permutation(&d, &d).unwrap(),
            Permutation::identity(15)
        );
        let other = row_deal(spec(5, 3));
        assert_eq!(
            deal_permutation(&d, &other),
            Err(DealError::ShapeMismatch {
                from_m: 3,
                from_n: 5,
                to_m: 5,
                to_n: 3
            })
        );
        let zigzag = zigzag_deal(5).unwrap();
        let full = row_deal(spec(2, 2));
        assert_eq!(
            deal_permutation(&full, &zigzag),
            Err(DealError::LabelBaseMismatch { from: 0, to: 1 })
        );
    }

    #[test]
    fn deal_permutation_row_to_diagonal() {
        let alpha = deal_permutation(&row_deal(spec(3, 5)), &diagonal_deal(spec(3, 5)).unwrap())
            .unwrap();
        assert_eq!(alpha.apply(1), 6);
        assert_eq!(alpha.apply(2), 12);
        assert_eq!(alpha.apply(6), 1);
        assert_eq!(alpha.apply(7), 7);
    }

    #[test]
    fn gamma_formula_against_brute_force() {
        for m in 1..=8 {
            for n in 1..=8 {
                let s = spec(m, n);
                let gamma = deal_permutation(&row_deal(s), &column_deal(s)).unwrap();
                let inversions = gamma.count_inversions_naive();
                assert_eq!(
                    gamma_sign_formula(s),
                    Sign::of_parity(inversions),
                    "sign mismatch at {m}x{n}"
                );
                assert_eq!(
                    gamma_inversion_pairs(s),
                    inversions,
                    "pair count mismatch at {m}x{n}"
                );
            }
        }
    }

    #[test]
    fn gamma_formula_examples() {
        assert_eq!(gamma_sign_formula(spec(3, 5)), Sign::Plus);
        assert_eq!(gamma_sign_formula(spec(3, 3)), Sign::Minus);
        assert_eq!(gamma_sign_formula(spec(2, 2)), Sign::Minus);
    }

    #[test]
    fn gamma_odd_formula_examples() {
        assert_eq!(gamma_sign_odd_formula(spec(5, 7)).unwrap(), Sign::Plus);
        assert_eq!(gamma_sign_odd_formula(spec(3, 3)).unwrap(), Sign::Minus);
        assert_eq!(gamma_sign_odd_formula(spec(1, 9)).unwrap(), Sign::Plus);
        assert_eq!(
            gamma_sign_odd_formula(spec(2, 3)),
            Err(DealError::EvenDimension { m: 2, n: 3 })
        );
    }

    #[test]
    fn gamma_inversion_pair_examples() {
        assert_eq!(gamma_inversion_pairs(spec(3, 5)), 30);
        assert_eq!(gamma_inversion_pairs(spec(1, 9)), 0);
        assert_eq!(gamma_inversion_pairs(spec(2, 2)), 1);
    }

    #[test]
    fn kind_builders() {
        assert_eq!(
            DealKind::Row.full_deck(spec(3, 5)).unwrap(),
            row_deal(spec(3, 5))
        );
        assert_eq!(
            DealKind::Zigzag.two_row(7).unwrap(),
            zigzag_deal(7).unwrap()
        );
        assert!(matches!(
            DealKind::Zigzag.full_deck(spec(2, 2)),
            Err(DealError::UnsupportedKind { .. })
        ));
        assert!(matches!(
            DealKind::Diagonal.two_row(7),
            Err(DealError::UnsupportedKind { .. })
        ));
    }

    #[test]
    fn from_cells_validation() {
        let s = spec(2, 2);
        assert!(Deal::from_cells(s, 0, vec![3, 1, 0, 2]).is_ok());
        assert_eq!(
            Deal::from_cells(s, 0, vec![0, 1, 2, 2]),
            Err(DealError::InvalidCells { label_base: 0 })
        );
        assert_eq!(
            Deal::from_cells(s, 1, vec![0, 1, 2, 3]),
            Err(DealError::InvalidCells { label_base: 1 })
        );
        assert!(Deal::from_cells(s, 1, vec![4, 2, 3, 1]).is_ok());
    }
}
