//! Exact permutation arithmetic on the points `0..n`.
//!
//! A [`Permutation`] is a bijection of `{0, …, N−1}` stored as its image
//! sequence: entry `x` is the image of `x`. Parity is available through two
//! independent routes — inversion counting (naive quadratic scan and a
//! merge-based `O(N log N)` pass) and cycle structure — which must agree on
//! every input.

use std::fmt;
use std::ops::{Mul, Neg};

use thiserror::Error;

/// Errors from permutation construction and composition.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    /// The image sequence does not describe a bijection of `0..len`.
    #[error("image sequence of length {len} is not a bijection of 0..{len}")]
    NotABijection { len: usize },
    /// Two permutations of different degrees were combined.
    #[error("permutation degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
}

/// The sign (signature) of a permutation: `+1` or `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `Plus` for even `k`, `Minus` for odd `k`.
    pub fn of_parity(k: u64) -> Sign {
        if k % 2 == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    /// `+1` or `-1`.
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

/// A permutation of `{0, …, N−1}` stored as an image sequence.
///
/// Degree 0 (the empty permutation) and degree 1 are legal; both have sign
/// `+1` by the empty-product convention. Values are immutable after
/// construction and safe to share across threads.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    /// The identity permutation on `n` points.
    pub fn identity(n: usize) -> Permutation {
        Permutation {
            image: (0..n).collect(),
        }
    }

    /// Builds a permutation from its image sequence, validating that every
    /// value in `0..len` appears exactly once.
    pub fn from_image(image: Vec<usize>) -> Result<Permutation, PermError> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &y in &image {
            if y >= n || seen[y] {
                return Err(PermError::NotABijection { len: n });
            }
            seen[y] = true;
        }
        Ok(Permutation { image })
    }

    /// Number of points the permutation acts on.
    pub fn degree(&self) -> usize {
        self.image.len()
    }

    /// The image sequence.
    pub fn image(&self) -> &[usize] {
        &self.image
    }

    /// Image of a single point. Panics if `x >= degree`.
    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    /// Composition `self ∘ other`: `other` acts first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        let image = other.image.iter().map(|&y| self.image[y]).collect();
        Ok(Permutation { image })
    }

    /// The inverse permutation.
    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (x, &y) in self.image.iter().enumerate() {
            inv[y] = x;
        }
        Permutation { image: inv }
    }

    /// Counts inversions — pairs `x < y` with `image[x] > image[y]` — by
    /// scanning every ordered pair. Quadratic; serves as the oracle for
    /// [`Self::count_inversions`].
    pub fn count_inversions_naive(&self) -> u64 {
        let mut count = 0u64;
        for x in 0..self.degree() {
            let ix = self.image[x];
            for y in x + 1..self.degree() {
                if ix > self.image[y] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Counts inversions with a merge-based divide-and-conquer pass in
    /// `O(N log N)`. Agrees with [`Self::count_inversions_naive`] on every
    /// input.
    pub fn count_inversions(&self) -> u64 {
        let mut work = self.image.clone();
        let mut scratch = vec![0usize; work.len()];
        count_merge(&mut work, &mut scratch)
    }

    /// `(−1)^{inversions}`, computed on the merge-counting path.
    pub fn sign_via_inversions(&self) -> Sign {
        Sign::of_parity(self.count_inversions())
    }

    /// Parity from cycle structure: `(−1)^{N − #cycles}`. Linear time and
    /// allocation-light; agrees with [`Self::sign_via_inversions`].
    pub fn sign_via_cycles(&self) -> Sign {
        let n = self.degree();
        let mut visited = vec![false; n];
        let mut cycles = 0u64;
        for start in 0..n {
            if visited[start] {
                continue;
            }
            cycles += 1;
            let mut x = start;
            while !visited[x] {
                visited[x] = true;
                x = self.image[x];
            }
        }
        Sign::of_parity(n as u64 - cycles)
    }

    /// Default sign route (cycle parity).
    pub fn sign(&self) -> Sign {
        self.sign_via_cycles()
    }

    /// Splits the permutation into disjoint cycles covering every point,
    /// fixed points included as 1-cycles.
    pub fn cycle_decomposition(&self) -> CycleDecomposition {
        let n = self.degree();
        let mut visited = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if visited[start] {
                continue;
            }
            let mut cycle = vec![start];
            visited[start] = true;
            let mut x = self.image[start];
            while x != start {
                visited[x] = true;
                cycle.push(x);
                x = self.image[x];
            }
            cycles.push(cycle);
        }
        CycleDecomposition { degree: n, cycles }
    }
}

/// Uniform random permutation of the given degree (Fisher–Yates shuffle).
pub fn random_permutation<R: rand::Rng + ?Sized>(degree: usize, rng: &mut R) -> Permutation {
    use rand::seq::SliceRandom;
    let mut image: Vec<usize> = (0..degree).collect();
    image.shuffle(rng);
    Permutation { image }
}

/// Merge sort over `a`, returning the number of inversions removed.
fn count_merge(a: &mut [usize], scratch: &mut [usize]) -> u64 {
    let n = a.len();
    if n < 2 {
        return 0;
    }
    let mid = n / 2;
    let mut inversions;
    {
        let (left, right) = a.split_at_mut(mid);
        let (scratch_left, scratch_right) = scratch.split_at_mut(mid);
        inversions = count_merge(left, scratch_left) + count_merge(right, scratch_right);
        let (mut i, mut j, mut k) = (0, 0, 0);
        while i < left.len() && j < right.len() {
            if left[i] <= right[j] {
                scratch[k] = left[i];
                i += 1;
            } else {
                scratch[k] = right[j];
                j += 1;
                inversions += (left.len() - i) as u64;
            }
            k += 1;
        }
        while i < left.len() {
            scratch[k] = left[i];
            i += 1;
            k += 1;
        }
        while j < right.len() {
            scratch[k] = right[j];
            j += 1;
            k += 1;
        }
    }
    a.copy_from_slice(&scratch[..n]);
    inversions
}

/// Disjoint-cycle form of a permutation.
///
/// Cycles partition `{0, …, N−1}`; each cycle starts at its minimum element
/// and lists points in traversal order, and cycles are ordered by minimum
/// element. Fixed points appear as 1-cycles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleDecomposition {
    degree: usize,
    cycles: Vec<Vec<usize>>,
}

impl CycleDecomposition {
    /// Number of points covered.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// The cycles, including 1-cycles.
    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    /// Number of cycles (fixed points count).
    pub fn cycle_count(&self) -> usize {
        self.cycles.len()
    }

    /// `(−1)^{degree − #cycles}`.
    pub fn sign(&self) -> Sign {
        Sign::of_parity(self.degree as u64 - self.cycles.len() as u64)
    }

    /// Rebuilds the permutation described by the cycles.
    pub fn to_permutation(&self) -> Permutation {
        let mut image: Vec<usize> = (0..self.degree).collect();
        for cycle in &self.cycles {
            for pair in cycle.windows(2) {
                image[pair[0]] = pair[1];
            }
            if cycle.len() > 1 {
                image[*cycle.last().expect("nonempty cycle")] = cycle[0];
            }
        }
        Permutation { image }
    }
}

impl fmt::Display for CycleDecomposition {
    /// Renders as `(0)(1 2 4 3)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cycle in &self.cycles {
            write!(f, "(")?;
            for (idx, point) in cycle.iter().enumerate() {
                if idx > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{point}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn reversal(n: usize) -> Permutation {
        Permutation::from_image((0..n).rev().collect()).unwrap()
    }

    #[test]
    fn identity_images() {
        assert_eq!(Permutation::identity(0).image(), &[] as &[usize]);
        assert_eq!(Permutation::identity(3).image(), &[0, 1, 2]);
        assert_eq!(
            Permutation::identity(15).image(),
            (0..15).collect::<Vec<_>>().as_slice()
        );
    }

    #[test]
    fn from_image_rejects_non_bijections() {
        assert_eq!(
            Permutation::from_image(vec![0, 0, 1]),
            Err(PermError::NotABijection { len: 3 })
        );
        assert_eq!(
            Permutation::from_image(vec![1, 2, 3]),
            Err(PermError::NotABijection { len: 3 })
        );
    }

    #[test]
    fn compose_identity_and_inverse_laws() {
        let q = Permutation::from_image(vec![3, 0, 4, 1, 2]).unwrap();
        assert_eq!(Permutation::identity(5).compose(&q).unwrap(), q);
        assert_eq!(q.compose(&Permutation::identity(5)).unwrap(), q);
        assert_eq!(q.compose(&q.inverse()).unwrap(), Permutation::identity(5));
        assert_eq!(q.inverse().compose(&q).unwrap(), Permutation::identity(5));
    }

    #[test]
    fn compose_degree_mismatch() {
        let p = Permutation::identity(3);
        let q = Permutation::identity(4);
        assert_eq!(
            p.compose(&q),
            Err(PermError::DegreeMismatch { left: 3, right: 4 })
        );
    }

    #[test]
    fn inverse_of_three_cycle() {
        let p = Permutation::from_image(vec![1, 2, 0]).unwrap();
        assert_eq!(p.inverse().image(), &[2, 0, 1]);
        assert_eq!(Permutation::identity(7).inverse(), Permutation::identity(7));
    }

    #[test]
    fn naive_inversion_counts() {
        assert_eq!(Permutation::identity(10).count_inversions_naive(), 0);
        assert_eq!(reversal(5).count_inversions_naive(), 10);
    }

    #[test]
    fn merge_count_matches_reversal_closed_form() {
        for n in 0..64usize {
            let expected = (n as u64) * (n.saturating_sub(1) as u64) / 2;
            let r = reversal(n);
            assert_eq!(r.count_inversions(), r.count_inversions_naive());
            assert_eq!(r.count_inversions(), expected);
        }
        assert_eq!(reversal(1000).count_inversions(), 1000 * 999 / 2);
    }

    #[test]
    fn merge_count_matches_naive_on_random_input() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        for degree in [1usize, 2, 3, 10, 100, 500] {
            for _ in 0..20 {
                let p = random_permutation(degree, &mut rng);
                assert_eq!(p.count_inversions(), p.count_inversions_naive());
            }
        }
    }

    #[test]
    fn sign_via_inversions_basics() {
        assert_eq!(Permutation::identity(9).sign_via_inversions(), Sign::Plus);
        let swap = Permutation::from_image(vec![0, 2, 1, 3]).unwrap();
        assert_eq!(swap.sign_via_inversions(), Sign::Minus);
    }

    #[test]
    fn cycle_decomposition_shapes() {
        let id3 = Permutation::identity(3).cycle_decomposition();
        assert_eq!(id3.cycles(), &[vec![0], vec![1], vec![2]]);

        // x ↦ 2x mod 5
        let doubling = Permutation::from_image(vec![0, 2, 4, 1, 3]).unwrap();
        let decomposition = doubling.cycle_decomposition();
        assert_eq!(decomposition.cycles(), &[vec![0], vec![1, 2, 4, 3]]);
        assert_eq!(decomposition.to_permutation(), doubling);
        assert_eq!(decomposition.sign(), Sign::Minus);
        assert_eq!(decomposition.to_string(), "(0)(1 2 4 3)");

        // x ↦ x+1 mod 5
        let translation = Permutation::from_image(vec![1, 2, 3, 4, 0]).unwrap();
        let decomposition = translation.cycle_decomposition();
        assert_eq!(decomposition.cycle_count(), 1);
        assert_eq!(decomposition.cycles()[0], vec![0, 1, 2, 3, 4]);
        assert_eq!(decomposition.sign(), Sign::Plus);
    }

    #[test]
    fn sign_via_cycles_basics() {
        let five_cycle = Permutation::from_image(vec![1, 2, 3, 4, 0]).unwrap();
        assert_eq!(five_cycle.sign_via_cycles(), Sign::Plus);
        let doubling = Permutation::from_image(vec![0, 2, 4, 1, 3]).unwrap();
        assert_eq!(doubling.sign_via_cycles(), Sign::Minus);
        assert_eq!(Permutation::identity(6).sign_via_cycles(), Sign::Plus);
        assert_eq!(Permutation::identity(0).sign_via_cycles(), Sign::Plus);
        assert_eq!(Permutation::identity(1).sign_via_cycles(), Sign::Plus);
    }

    #[test]
    fn sign_arithmetic() {
        assert_eq!(Sign::Plus * Sign::Minus, Sign::Minus);
        assert_eq!(Sign::Minus * Sign::Minus, Sign::Plus);
        assert_eq!(-Sign::Plus, Sign::Minus);
        assert_eq!(Sign::of_parity(0), Sign::Plus);
        assert_eq!(Sign::of_parity(7), Sign::Minus);
        assert_eq!(Sign::Plus.to_string(), "+1");
        assert_eq!(Sign::Minus.to_string(), "-1");
        assert_eq!(Sign::Minus.value(), -1);
    }
}
