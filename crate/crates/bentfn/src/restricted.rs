//! The even/odd Hamming-weight partition of `F_2^n`, restricted
//! balancedness, the restricted Walsh transform over affine subspaces, and
//! verification of the parity-balance and spectral-sign results.

use crate::construct;
use crate::error::{Error, Result};
use crate::function::{check_var_count, parity, BooleanFunction};
use crate::walsh::WalshSpectrum;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// One of the two Hamming-weight parity classes of the domain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ParityClass {
    Even,
    Odd,
}

impl std::fmt::Display for ParityClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ParityClass::Even => write!(f, "even"),
            ParityClass::Odd => write!(f, "odd"),
        }
    }
}

/// Bit `i` set iff the 6-bit index `i` has odd Hamming weight. The parity of
/// a full table index `64w + i` is `parity(w) ^ parity(i)`, which selects
/// either this mask or its complement per word.
const ODD_PARITY_BITS: u64 = {
    let mut mask = 0u64;
    let mut i = 0u32;
    while i < 64 {
        if i.count_ones() % 2 == 1 {
            mask |= 1 << i;
        }
        i += 1;
    }
    mask
};

/// The even-weight set (a linear `[n, n-1, 2]` MDS code) and odd-weight set
/// (its coset) of `F_2^n`, materialized as sorted point lists.
#[derive(Clone, Debug)]
pub struct WeightParityPartition {
    n: usize,
    even_set: Vec<u32>,
    odd_set: Vec<u32>,
}

/// Splits `F_2^n` by Hamming-weight parity; each class has `2^(n-1)` points.
pub fn partition(n: usize) -> Result<WeightParityPartition> {
    check_var_count(n)?;
    let half = 1usize << (n - 1);
    let mut even_set = Vec::with_capacity(half);
    let mut odd_set = Vec::with_capacity(half);
    for x in 0..(1u32 << n) {
        if parity(x) {
            odd_set.push(x);
        } else {
            even_set.push(x);
        }
    }
    Ok(WeightParityPartition { n, even_set, odd_set })
}

impl WeightParityPartition {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn even_set(&self) -> &[u32] {
        &self.even_set
    }

    pub fn odd_set(&self) -> &[u32] {
        &self.odd_set
    }

    /// XOR-closure of the even class (with 0 as the identity): the class is
    /// a linear code of dimension `n - 1`.
    pub fn even_set_is_linear(&self) -> bool {
        let mut member = vec![false; 1 << self.n];
        for &x in &self.even_set {
            member[x as usize] = true;
        }
        member[0]
            && self
                .even_set
                .iter()
                .all(|&a| self.even_set.iter().all(|&b| member[(a ^ b) as usize]))
    }

    /// `b ^ even_set == odd_set` for the given odd-weight `b`.
    pub fn coset_relation_holds(&self, b: u32) -> bool {
        if !parity(b) {
            return false;
        }
        let mut shifted: Vec<u32> = self.even_set.iter().map(|&x| x ^ b).collect();
        shifted.sort_unstable();
        shifted == self.odd_set
    }

    /// Minimum Hamming weight among nonzero even-class members; `None` when
    /// the class is `{0}` (n = 1).
    pub fn min_nonzero_even_weight(&self) -> Option<u32> {
        self.even_set
            .iter()
            .filter(|&&x| x != 0)
            .map(|x| x.count_ones())
            .min()
    }
}

/// An affine subspace of `F_2^n`: either one of the weight-parity classes,
/// or the span of an independent basis shifted by a coset offset.
#[derive(Clone, Debug)]
pub struct AffineSubspace {
    ambient: usize,
    repr: Repr,
}

#[derive(Clone, Debug)]
enum Repr {
    Parity(ParityClass),
    Span {
        basis: Vec<u32>,
        echelon: Vec<u32>,
        offset: u32,
    },
}

fn echelon_reduce(echelon: &[u32], mut v: u32) -> u32 {
    for &e in echelon {
        let lead = 31 - e.leading_zeros();
        if v >> lead & 1 == 1 {
            v ^= e;
        }
    }
    v
}

impl AffineSubspace {
    /// The even-weight class `C_0` as a dimension `n-1` subspace.
    pub fn even_weight(n: usize) -> Result<Self> {
        check_var_count(n)?;
        Ok(Self {
            ambient: n,
            repr: Repr::Parity(ParityClass::Even),
        })
    }

    /// The odd-weight coset `C_1`.
    pub fn odd_weight(n: usize) -> Result<Self> {
        check_var_count(n)?;
        Ok(Self {
            ambient: n,
            repr: Repr::Parity(ParityClass::Odd),
        })
    }

    pub fn parity_class(n: usize, class: ParityClass) -> Result<Self> {
        match class {
            ParityClass::Even => Self::even_weight(n),
            ParityClass::Odd => Self::odd_weight(n),
        }
    }

    /// All of `F_2^n` as a degenerate restriction.
    pub fn full(n: usize) -> Result<Self> {
        let basis = (0..n as u32).map(|j| 1u32 << j).collect();
        Self::from_basis(n, basis, 0)
    }

    /// Coset `offset + span(basis)`; the basis must be independent.
    pub fn from_basis(n: usize, basis: Vec<u32>, offset: u32) -> Result<Self> {
        check_var_count(n)?;
        for &v in basis.iter().chain(std::iter::once(&offset)) {
            if (v as u64) >= 1u64 << n {
                return Err(Error::PointOutOfRange { index: v, n });
            }
        }
        let mut echelon: Vec<u32> = Vec::with_capacity(basis.len());
        for &v in &basis {
            let reduced = echelon_reduce(&echelon, v);
            if reduced == 0 {
                return Err(Error::DependentBasis);
            }
            echelon.push(reduced);
        }
        Ok(Self {
            ambient: n,
            repr: Repr::Span {
                basis,
                echelon,
                offset,
            },
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    /// Subspace dimension `m`.
    pub fn dim(&self) -> usize {
        match &self.repr {
            Repr::Parity(_) => self.ambient - 1,
            Repr::Span { basis, .. } => basis.len(),
        }
    }

    /// Number of points, `2^m`.
    pub fn size(&self) -> u64 {
        1u64 << self.dim()
    }

    pub fn contains(&self, x: u32) -> bool {
        if (x as u64) >= 1u64 << self.ambient {
            return false;
        }
        match &self.repr {
            Repr::Parity(class) => parity(x) == (*class == ParityClass::Odd),
            Repr::Span {
                echelon, offset, ..
            } => echelon_reduce(echelon, x ^ offset) == 0,
        }
    }

    /// Deterministic point enumeration: a popcount filter for the parity
    /// classes, Gray-code order over basis combinations otherwise.
    pub fn points(&self) -> SubspacePoints<'_> {
        let inner = match &self.repr {
            Repr::Parity(class) => PointsInner::Filter {
                limit: 1u64 << self.ambient,
                next: 0,
                want_odd: *class == ParityClass::Odd,
            },
            Repr::Span { basis, offset, .. } => PointsInner::Gray {
                basis,
                current: *offset,
                index: 0,
                size: 1u64 << basis.len(),
            },
        };
        SubspacePoints { inner }
    }
}

pub struct SubspacePoints<'a> {
    inner: PointsInner<'a>,
}

enum PointsInner<'a> {
    Filter {
        limit: u64,
        next: u64,
        want_odd: bool,
    },
    Gray {
        basis: &'a [u32],
        current: u32,
        index: u64,
        size: u64,
    },
}

impl Iterator for SubspacePoints<'_> {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        match &mut self.inner {
            PointsInner::Filter {
                limit,
                next,
                want_odd,
            } => {
                while *next < *limit {
                    let x = *next as u32;
                    *next += 1;
                    if parity(x) == *want_odd {
                        return Some(x);
                    }
                }
                None
            }
            PointsInner::Gray {
                basis,
                current,
                index,
                size,
            } => {
                if *index >= *size {
                    return None;
                }
                if *index > 0 {
                    *current ^= basis[index.trailing_zeros() as usize];
                }
                *index += 1;
                Some(*current)
            }
        }
    }
}

/// Exact preimage counts of `f` on the two weight-parity classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RestrictedBalanceReport {
    pub zeros_even: u64,
    pub ones_even: u64,
    pub zeros_odd: u64,
    pub ones_odd: u64,
    pub balanced_even: bool,
    pub balanced_odd: bool,
}

impl RestrictedBalanceReport {
    /// The unique balanced class, when exactly one class is balanced (always
    /// the case for bent functions).
    pub fn balanced_class(&self) -> Option<ParityClass> {
        match (self.balanced_even, self.balanced_odd) {
            (true, false) => Some(ParityClass::Even),
            (false, true) => Some(ParityClass::Odd),
            _ => None,
        }
    }
}

/// Counts `f`'s 0/1 preimages on the even- and odd-weight classes, one
/// masked popcount per table word.
pub fn restricted_balance(f: &BooleanFunction) -> RestrictedBalanceReport {
    let n = f.n();
    let size = 1u64 << n;
    let mut ones_even = 0u64;
    let mut ones_odd = 0u64;
    let mut even_positions = 0u64;
    for (w, &word) in f.as_words().iter().enumerate() {
        let odd_mask = if parity(w as u32) {
            !ODD_PARITY_BITS
        } else {
            ODD_PARITY_BITS
        };
        let tail = if n >= 6 { !0u64 } else { (1u64 << size) - 1 };
        ones_odd += u64::from((word & odd_mask & tail).count_ones());
        ones_even += u64::from((word & !odd_mask & tail).count_ones());
        even_positions += u64::from((!odd_mask & tail).count_ones());
    }
    let odd_positions = size - even_positions;
    let zeros_even = even_positions - ones_even;
    let zeros_odd = odd_positions - ones_odd;
    RestrictedBalanceReport {
        zeros_even,
        ones_even,
        zeros_odd,
        ones_odd,
        balanced_even: zeros_even == ones_even,
        balanced_odd: zeros_odd == ones_odd,
    }
}

/// Restricted Walsh transform: the signed sum of `(-1)^(f(x) ^ a.x)` over
/// exactly the points of `c`. The argument `a` ranges over the full ambient
/// space `F_2^n`.
pub fn restricted_walsh(f: &BooleanFunction, c: &AffineSubspace, a: u32) -> Result<i32> {
    if c.ambient_dim() != f.n() {
        return Err(Error::DimensionMismatch {
            expected: f.n(),
            actual: c.ambient_dim(),
        });
    }
    let words = f.as_words();
    let mut acc = 0i32;
    for x in c.points() {
        let bit = (words[(x >> 6) as usize] >> (x & 63)) & 1 == 1;
        acc += if bit ^ parity(a & x) { -1 } else { 1 };
    }
    Ok(acc)
}

/// `Nl(f|c) = 2^(m-1) - max over all ambient a of |W_f(a)| / 2`. Distinct
/// `a` may coincide on `c`; all `2^n` are still scanned, costing at most a
/// factor `2^(n-m)`.
pub fn restricted_nonlinearity(f: &BooleanFunction, c: &AffineSubspace) -> Result<u64> {
    let mut max_abs = 0i32;
    for a in 0..(1u64 << f.n()) as u32 {
        max_abs = max_abs.max(restricted_walsh(f, c, a)?.abs());
    }
    Ok((c.size() - max_abs as u64) / 2)
}

/// True iff `f` restricted to `c` attains the bent bound
/// `2^(m-1) - 2^(m/2-1)`; requires even subspace dimension.
pub fn is_restricted_bent(f: &BooleanFunction, c: &AffineSubspace) -> Result<bool> {
    let m = c.dim();
    if m % 2 != 0 {
        return Err(Error::OddSubspaceDimension { m });
    }
    Ok(restricted_nonlinearity(f, c)? == (1u64 << (m - 1)) - (1u64 << (m / 2 - 1)))
}

/// How a verification sweep selects its function population.
#[derive(Clone, Copy, Debug)]
pub enum VerifyMode {
    /// Scan every truth table; only feasible for n in {2, 4}.
    Exhaustive,
    /// Constructed bent samples (seeded Maiorana-McFarland plus random
    /// affine offsets).
    Sampled { count: u64, rng_seed: u64 },
}

/// Outcome of a parity-balance sweep: every bent function must be balanced
/// on the even-weight class or on the odd-weight class.
#[derive(Clone, Debug)]
pub struct ParityBalanceReport {
    pub n: usize,
    pub scanned: u64,
    pub bent_count: u64,
    pub even_balanced: u64,
    pub odd_balanced: u64,
    pub both_balanced: u64,
    pub counterexamples: Vec<BooleanFunction>,
}

impl ParityBalanceReport {
    pub fn holds(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Checks, over every bent function (exhaustive) or a constructed sample,
/// that the even- or odd-weight restriction is balanced. Reports the
/// population breakdown and any counterexamples (expected: none).
pub fn verify_parity_balance_theorem(n: usize, mode: VerifyMode) -> Result<ParityBalanceReport> {
    if n % 2 != 0 {
        return Err(Error::EvenDimensionRequired { n });
    }
    let mut report = ParityBalanceReport {
        n,
        scanned: 0,
        bent_count: 0,
        even_balanced: 0,
        odd_balanced: 0,
        both_balanced: 0,
        counterexamples: Vec::new(),
    };
    let record = |f: &BooleanFunction, report: &mut ParityBalanceReport| {
        report.bent_count += 1;
        let balance = restricted_balance(f);
        if balance.balanced_even {
            report.even_balanced += 1;
        }
        if balance.balanced_odd {
            report.odd_balanced += 1;
        }
        if balance.balanced_even && balance.balanced_odd {
            report.both_balanced += 1;
        }
        if !balance.balanced_even && !balance.balanced_odd {
            report.counterexamples.push(f.clone());
        }
    };
    match mode {
        VerifyMode::Exhaustive => {
            if n != 2 && n != 4 {
                return Err(Error::UnsupportedEnumeration { n });
            }
            let tables = 1u64 << (1 << n);
            for t in 0..tables {
                let f = BooleanFunction::from_u64_table(n, t)?;
                report.scanned += 1;
                if WalshSpectrum::compute(&f).is_bent() {
                    record(&f, &mut report);
                }
            }
        }
        VerifyMode::Sampled { count, rng_seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
            for _ in 0..count {
                let f = construct::random_bent(n, &mut rng)?;
                report.scanned += 1;
                if !WalshSpectrum::compute(&f).is_bent() {
                    return Err(Error::Internal(format!(
                        "sampled function is not bent: {f:?}"
                    )));
                }
                record(&f, &mut report);
            }
        }
    }
    Ok(report)
}

/// Outcome of checking the spectral relations between a bent `g` and its
/// lifts `g_e0`, `g_e1` onto the parity classes of `F_2^(s)`.
///
/// At every position `a` the lifts agree with `W_g(a)` at argument `(a, 0)`,
/// and at `(a, 1)` they take opposite values of magnitude `2^((s-1)/2)`:
/// `W_ge0(a,1) = W_g(a ^ 1...1) = -W_ge1(a,1)`. Which signed pattern occurs
/// at each position is tallied in the two pattern counters.
#[derive(Clone, Debug)]
pub struct SpectralSignReport {
    /// Variable count of `g`.
    pub n: usize,
    /// The parity class on which `g` itself is balanced.
    pub balanced_class: ParityClass,
    pub positions: u64,
    /// Positions failing the three-way equality at `(a, 0)`.
    pub item1_violations: Vec<u32>,
    /// Positions failing the opposite-sign relation at `(a, 1)`.
    pub sign_violations: Vec<u32>,
    /// Positions with `W_ge0(a,1) = -2^((s-1)/2)` (and `W_ge1(a,1)` positive).
    pub lift_negative_positions: u64,
    /// Positions with `W_ge0(a,1) = +2^((s-1)/2)` (and `W_ge1(a,1)` negative).
    pub lift_positive_positions: u64,
}

impl SpectralSignReport {
    pub fn all_hold(&self) -> bool {
        self.item1_violations.is_empty() && self.sign_violations.is_empty()
    }
}

/// Verifies the spectral identities relating `g` to its parity-class lifts:
/// the `(a, 0)` equalities and the `(a, 1)` sign relations, for all
/// `a` in `F_2^(s-1)`.
pub fn verify_spectral_sign_corollary(g: &BooleanFunction) -> Result<SpectralSignReport> {
    let spectrum = WalshSpectrum::compute(g);
    if g.n() % 2 != 0 {
        return Err(Error::EvenDimensionRequired { n: g.n() });
    }
    if let Some((position, value)) = spectrum.flatness_violation() {
        return Err(Error::NotBent {
            n: g.n(),
            position,
            value,
            expected: 1 << (g.n() / 2),
        });
    }
    let balanced_class = restricted_balance(g).balanced_class().ok_or_else(|| {
        Error::Internal("bent function with no unique balanced parity class".into())
    })?;

    let s_minus_1 = g.n();
    let lift0 = construct::lift_even(g)?;
    let lift1 = construct::lift_odd(g)?;
    let target = 1i32 << (s_minus_1 / 2);
    let all_ones = (1u32 << s_minus_1) - 1;
    let high_bit = 1u32 << s_minus_1;

    let mut report = SpectralSignReport {
        n: s_minus_1,
        balanced_class,
        positions: 1u64 << s_minus_1,
        item1_violations: Vec::new(),
        sign_violations: Vec::new(),
        lift_negative_positions: 0,
        lift_positive_positions: 0,
    };
    for a in 0..(1u32 << s_minus_1) {
        let wg = spectrum.value(a);
        let e0_low = lift0.restricted_walsh(a)?;
        let e1_low = lift1.restricted_walsh(a)?;
        if e0_low != wg || e1_low != wg {
            report.item1_violations.push(a);
        }
        let e0_high = lift0.restricted_walsh(a | high_bit)?;
        let e1_high = lift1.restricted_walsh(a | high_bit)?;
        let expected = spectrum.value(a ^ all_ones);
        if e0_high != expected || e1_high != -expected || e0_high.abs() != target {
            report.sign_violations.push(a);
        } else if e0_high == -target {
            report.lift_negative_positions += 1;
        } else {
            report.lift_positive_positions += 1;
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::walsh;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn x1x2() -> BooleanFunction {
        BooleanFunction::from_u64_table(2, 0b1000).unwrap()
    }

    fn x1x2_x3x4() -> BooleanFunction {
        BooleanFunction::from_fn(4, |x| {
            (x & 1 == 1 && x & 2 == 2) ^ (x & 4 == 4 && x & 8 == 8)
        })
        .unwrap()
    }

    #[test]
    fn partition_examples() {
        let p = partition(2).unwrap();
        assert_eq!(p.even_set(), &[0b00, 0b11]);
        assert_eq!(p.odd_set(), &[0b01, 0b10]);
        let p = partition(3).unwrap();
        assert_eq!(p.even_set(), &[0b000, 0b011, 0b101, 0b110]);
        assert_eq!(partition(4).unwrap().even_set().len(), 8);
        assert!(partition(0).is_err());
        assert!(partition(31).is_err());
    }

    #[test]
    fn partition_structure_small() {
        for n in 1..=8 {
            let p = partition(n).unwrap();
            assert!(p.even_set_is_linear());
            if n >= 2 {
                assert_eq!(p.min_nonzero_even_weight(), Some(2));
            } else {
                assert_eq!(p.min_nonzero_even_weight(), None);
            }
            for &b in p.odd_set() {
                assert!(p.coset_relation_holds(b));
            }
            assert!(!p.coset_relation_holds(0));
        }
    }

    #[test]
    fn balance_of_product_function() {
        let r = restricted_balance(&x1x2());
        assert_eq!(
            r,
            RestrictedBalanceReport {
                zeros_even: 1,
                ones_even: 1,
                zeros_odd: 2,
                ones_odd: 0,
                balanced_even: true,
                balanced_odd: false,
            }
        );
        assert_eq!(r.balanced_class(), Some(ParityClass::Even));
    }

    #[test]
    fn balance_of_zero_function() {
        let r = restricted_balance(&BooleanFunction::zero(5).unwrap());
        assert_eq!(r.zeros_even, 16);
        assert_eq!(r.zeros_odd, 16);
        assert!(!r.balanced_even && !r.balanced_odd);
        assert_eq!(r.balanced_class(), None);
    }

    #[test]
    fn balance_of_quadratic_bent_function() {
        // One class balanced; the other splits 2^(n-2) +- 2^((n-2)/2) = 4 +- 2.
        let r = restricted_balance(&x1x2_x3x4());
        assert!(r.balanced_odd && !r.balanced_even);
        assert_eq!(r.zeros_odd, 4);
        assert_eq!(r.ones_odd, 4);
        let mut split = [r.zeros_even, r.ones_even];
        split.sort();
        assert_eq!(split, [2, 6]);
    }

    #[test]
    fn balance_counts_sum_to_domain_size() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 1..=9 {
            let f = BooleanFunction::from_fn(n, |_| rng.random()).unwrap();
            let r = restricted_balance(&f);
            assert_eq!(
                r.zeros_even + r.ones_even + r.zeros_odd + r.ones_odd,
                1u64 << n
            );
            assert_eq!(r.zeros_even + r.ones_even, 1u64 << (n - 1));
        }
    }

    #[test]
    fn subspace_basis_validation() {
        assert!(matches!(
            AffineSubspace::from_basis(3, vec![0b011, 0b101, 0b110], 0),
            Err(Error::DependentBasis)
        ));
        assert!(AffineSubspace::from_basis(3, vec![0b011, 0b101], 0).is_ok());
        assert!(AffineSubspace::from_basis(2, vec![0b100], 0).is_err());
    }

    #[test]
    fn subspace_enumeration_and_membership() {
        let c = AffineSubspace::from_basis(4, vec![0b0011, 0b0101], 0b1000).unwrap();
        let points: Vec<u32> = c.points().collect();
        assert_eq!(points.len(), 4);
        let mut sorted = points.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), 4);
        for &x in &points {
            assert!(c.contains(x));
        }
        assert_eq!(points[0], 0b1000); // offset comes first
        for x in 0..16u32 {
            assert_eq!(c.contains(x), points.contains(&x));
        }
    }

    #[test]
    fn parity_subspaces_match_partition() {
        for n in 1..=6 {
            let p = partition(n).unwrap();
            let c0 = AffineSubspace::even_weight(n).unwrap();
            let c1 = AffineSubspace::odd_weight(n).unwrap();
            assert_eq!(c0.dim(), n - 1);
            assert_eq!(c0.points().collect::<Vec<_>>(), p.even_set());
            assert_eq!(c1.points().collect::<Vec<_>>(), p.odd_set());
        }
    }

    /// Naive summation oracle over an explicit point filter.
    fn naive_restricted_walsh(f: &BooleanFunction, points: &[u32], a: u32) -> i32 {
        points
            .iter()
            .map(|&x| if f.bit(x) ^ parity(a & x) { -1 } else { 1 })
            .sum()
    }

    #[test]
    fn restricted_walsh_on_full_space_matches_spectrum() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for n in 1..=6 {
            let f = BooleanFunction::from_fn(n, |_| rng.random()).unwrap();
            let c = AffineSubspace::full(n).unwrap();
            let s = WalshSpectrum::compute(&f);
            for a in 0..(1u32 << n) {
                assert_eq!(restricted_walsh(&f, &c, a).unwrap(), s.value(a));
            }
        }
    }

    #[test]
    fn restricted_walsh_of_zero_function() {
        let f = BooleanFunction::zero(4).unwrap();
        let c = AffineSubspace::even_weight(4).unwrap();
        assert_eq!(restricted_walsh(&f, &c, 0).unwrap(), 8);
    }

    #[test]
    fn restricted_walsh_of_bent_function_on_even_class() {
        let f = x1x2_x3x4();
        let c = AffineSubspace::even_weight(4).unwrap();
        let points: Vec<u32> = c.points().collect();
        for a in 0..16u32 {
            let value = restricted_walsh(&f, &c, a).unwrap();
            assert_eq!(value, naive_restricted_walsh(&f, &points, a));
            assert!(value.abs() <= 8);
            assert!(
                [0, 4, 8].contains(&value.abs()),
                "unexpected value {value} at a={a}"
            );
        }
    }

    #[test]
    fn restricted_walsh_dimension_mismatch() {
        let c = AffineSubspace::even_weight(3).unwrap();
        assert!(matches!(
            restricted_walsh(&x1x2(), &c, 0),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn restricted_nonlinearity_of_affine_is_zero() {
        let l = crate::function::AffineFunctionSpec::new(4, 0b0110, true)
            .unwrap()
            .truth_table();
        let c = AffineSubspace::even_weight(4).unwrap();
        assert_eq!(restricted_nonlinearity(&l, &c).unwrap(), 0);
    }

    #[test]
    fn restricted_nonlinearity_on_full_space_matches_unrestricted() {
        let f = x1x2_x3x4();
        let c = AffineSubspace::full(4).unwrap();
        assert_eq!(
            restricted_nonlinearity(&f, &c).unwrap(),
            walsh::nonlinearity(&f)
        );
    }

    #[test]
    fn lifted_bent_seeds_are_restricted_bent() {
        // Every bent g in B_2, lifted to C_0 of F_2^3 by ignoring the
        // appended coordinate, attains Nl = 2^(m-1) - 2^(m/2-1) = 1.
        let c0 = AffineSubspace::even_weight(3).unwrap();
        let mut bent_seen = 0;
        for t in 0..16u64 {
            let g = BooleanFunction::from_u64_table(2, t).unwrap();
            if !walsh::is_bent(&g) {
                continue;
            }
            bent_seen += 1;
            let lifted = BooleanFunction::from_fn(3, |x| g.bit(x & 0b11)).unwrap();
            assert_eq!(restricted_nonlinearity(&lifted, &c0).unwrap(), 1);
            assert!(is_restricted_bent(&lifted, &c0).unwrap());
        }
        assert_eq!(bent_seen, 8);
    }

    #[test]
    fn zero_function_is_not_restricted_bent() {
        let c0 = AffineSubspace::even_weight(3).unwrap();
        let f = BooleanFunction::zero(3).unwrap();
        assert!(!is_restricted_bent(&f, &c0).unwrap());
    }

    #[test]
    fn restricted_bent_requires_even_dimension() {
        let c0 = AffineSubspace::even_weight(4).unwrap(); // m = 3
        assert!(matches!(
            is_restricted_bent(&x1x2_x3x4(), &c0),
            Err(Error::OddSubspaceDimension { m: 3 })
        ));
    }

    #[test]
    fn parity_balance_theorem_exhaustive_b2() {
        let report = verify_parity_balance_theorem(2, VerifyMode::Exhaustive).unwrap();
        assert_eq!(report.scanned, 16);
        assert_eq!(report.bent_count, 8);
        assert!(report.holds());
        assert_eq!(report.both_balanced, 0);
        assert_eq!(report.even_balanced + report.odd_balanced, 8);
    }

    #[test]
    fn parity_balance_theorem_exhaustive_b4() {
        let report = verify_parity_balance_theorem(4, VerifyMode::Exhaustive).unwrap();
        assert_eq!(report.scanned, 65536);
        assert_eq!(report.bent_count, 896);
        assert!(report.holds());
        assert_eq!(report.both_balanced, 0);
        assert_eq!(report.even_balanced + report.odd_balanced, 896);
    }

    #[test]
    fn parity_balance_theorem_rejects_odd_n() {
        assert!(matches!(
            verify_parity_balance_theorem(3, VerifyMode::Exhaustive),
            Err(Error::EvenDimensionRequired { n: 3 })
        ));
        assert!(matches!(
            verify_parity_balance_theorem(6, VerifyMode::Exhaustive),
            Err(Error::UnsupportedEnumeration { n: 6 })
        ));
    }

    #[test]
    fn parity_balance_theorem_sampled_b6() {
        let report = verify_parity_balance_theorem(
            6,
            VerifyMode::Sampled {
                count: 200,
                rng_seed: 0xB5EED,
            },
        )
        .unwrap();
        assert_eq!(report.scanned, 200);
        assert_eq!(report.bent_count, 200);
        assert!(report.holds());
    }

    #[test]
    fn spectral_corollary_on_product_function() {
        let report = verify_spectral_sign_corollary(&x1x2()).unwrap();
        assert_eq!(report.positions, 4);
        assert!(report.item1_violations.is_empty());
        assert!(report.all_hold());
        assert_eq!(report.balanced_class, ParityClass::Even);
        assert_eq!(
            report.lift_negative_positions + report.lift_positive_positions,
            4
        );
    }

    #[test]
    fn spectral_corollary_on_quadratic_bent() {
        let report = verify_spectral_sign_corollary(&x1x2_x3x4()).unwrap();
        assert_eq!(report.positions, 16);
        assert!(report.all_hold());
        assert_eq!(report.balanced_class, ParityClass::Odd);
    }

    #[test]
    fn spectral_corollary_rejects_non_bent() {
        assert!(matches!(
            verify_spectral_sign_corollary(&BooleanFunction::zero(2).unwrap()),
            Err(Error::NotBent { .. })
        ));
        assert!(matches!(
            verify_spectral_sign_corollary(&BooleanFunction::zero(3).unwrap()),
            Err(Error::EvenDimensionRequired { .. })
        ));
    }
}
