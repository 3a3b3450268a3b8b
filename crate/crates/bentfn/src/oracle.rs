//! Brute-force reference implementations and exhaustive enumerators.
//!
//! Everything here is written against the definitional formulas with its own
//! evaluation and bit twiddling, sharing no code path with the fast modules
//! it validates.

use crate::anf::AnfPolynomial;
use crate::construct::{self, LinearOffset};
use crate::error::{Error, Result};
use crate::function::BooleanFunction;
use crate::walsh::WalshSpectrum;
use rayon::prelude::*;

/// Raw table read, local to the oracle.
#[inline]
fn table_bit(f: &BooleanFunction, x: u32) -> bool {
    f.as_words()[(x >> 6) as usize] >> (x & 63) & 1 == 1
}

/// Dot product over F_2, local to the oracle.
#[inline]
fn dot(a: u32, x: u32) -> bool {
    (a & x).count_ones() % 2 == 1
}

/// Definitional Walsh coefficient: the sum of `(-1)^(f(x) ^ a.x)` point by
/// point, no butterfly.
pub fn naive_walsh(f: &BooleanFunction, a: u32) -> Result<i32> {
    if f.n() > 16 {
        return Err(Error::TooLarge {
            what: "naive Walsh transform",
            n: f.n(),
            max: 16,
        });
    }
    let mut sum = 0i32;
    for x in 0..(1u32 << f.n()) {
        sum += if table_bit(f, x) ^ dot(a, x) { -1 } else { 1 };
    }
    Ok(sum)
}

/// All `2^n` definitional Walsh coefficients.
pub fn naive_walsh_spectrum(f: &BooleanFunction) -> Result<Vec<i32>> {
    (0..(1u32 << f.n())).map(|a| naive_walsh(f, a)).collect()
}

/// Definitional ANF coefficients `a_u = XOR over x <= u of f(x)`, the
/// quadratic-time reference for the fast Moebius transform.
pub fn naive_anf(f: &BooleanFunction) -> Result<AnfPolynomial> {
    if f.n() > 12 {
        return Err(Error::TooLarge {
            what: "definitional ANF",
            n: f.n(),
            max: 12,
        });
    }
    let coefficients = BooleanFunction::from_fn(f.n(), |u| {
        let mut acc = false;
        for x in 0..=u {
            if x & u == x && table_bit(f, x) {
                acc = !acc;
            }
        }
        acc
    })?;
    Ok(AnfPolynomial::from_words(
        f.n(),
        coefficients.as_words().to_vec(),
    ))
}

/// Minimum Hamming distance from `f` to all `2^(n+1)` affine functions by
/// direct distance computation.
pub fn naive_nonlinearity(f: &BooleanFunction) -> Result<u64> {
    let n = f.n();
    if n > 12 {
        return Err(Error::TooLarge {
            what: "brute-force nonlinearity",
            n,
            max: 12,
        });
    }
    let size = 1u32 << n;
    let mut best = u64::MAX;
    for a in 0..size {
        for a0 in [false, true] {
            let mut distance = 0u64;
            for x in 0..size {
                if table_bit(f, x) != (dot(a, x) ^ a0) {
                    distance += 1;
                }
            }
            best = best.min(distance);
        }
    }
    Ok(best)
}

/// A function that violated one of the claims checked by an enumeration or
/// sweep, with the claim named.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub function: BooleanFunction,
    pub reason: String,
}

/// Tally of an exhaustive truth-table scan. The balance counts are taken
/// over the bent functions only, so inclusion-exclusion gives
/// `bent_count = even_balanced + odd_balanced - both_balanced` whenever the
/// scan found no counterexample.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationSummary {
    pub n: usize,
    pub total_functions: u64,
    pub bent_count: u64,
    pub even_balanced_count: u64,
    pub odd_balanced_count: u64,
    pub both_balanced_count: u64,
    pub counterexamples: Vec<Counterexample>,
}

impl EnumerationSummary {
    pub fn holds(&self) -> bool {
        self.counterexamples.is_empty()
    }

    fn empty(n: usize) -> Self {
        Self {
            n,
            total_functions: 0,
            bent_count: 0,
            even_balanced_count: 0,
            odd_balanced_count: 0,
            both_balanced_count: 0,
            counterexamples: Vec::new(),
        }
    }

    fn merge(mut self, other: Self) -> Self {
        self.total_functions += other.total_functions;
        self.bent_count += other.bent_count;
        self.even_balanced_count += other.even_balanced_count;
        self.odd_balanced_count += other.odd_balanced_count;
        self.both_balanced_count += other.both_balanced_count;
        self.counterexamples.extend(other.counterexamples);
        self
    }
}

fn check_enumeration_n(n: usize) -> Result<()> {
    if n == 2 || n == 4 {
        Ok(())
    } else {
        Err(Error::UnsupportedEnumeration { n })
    }
}

/// Classifies one truth table by brute force and folds it into `summary`.
fn scan_table(n: usize, t: u64, summary: &mut EnumerationSummary) {
    let f = BooleanFunction::from_u64_table(n, t).expect("n is 2 or 4");
    summary.total_functions += 1;

    let bent_nl = (1u64 << (n - 1)) - (1u64 << (n / 2 - 1));
    let nl = naive_nonlinearity(&f).expect("n <= 12");
    let spectral_nl = WalshSpectrum::compute(&f).nonlinearity();
    if nl != spectral_nl {
        summary.counterexamples.push(Counterexample {
            function: f,
            reason: format!("brute-force Nl {nl} != spectral Nl {spectral_nl}"),
        });
        return;
    }
    if nl != bent_nl {
        return;
    }
    summary.bent_count += 1;

    let weight = t.count_ones() as u64;
    let low = (1u64 << (n - 1)) - (1u64 << (n / 2 - 1));
    let high = (1u64 << (n - 1)) + (1u64 << (n / 2 - 1));
    if weight != low && weight != high {
        summary.counterexamples.push(Counterexample {
            function: f,
            reason: format!("bent weight {weight} outside {{{low}, {high}}}"),
        });
        return;
    }

    let mut ones_even = 0u64;
    let mut ones_odd = 0u64;
    for x in 0..(1u32 << n) {
        if t >> x & 1 == 1 {
            if x.count_ones() % 2 == 0 {
                ones_even += 1;
            } else {
                ones_odd += 1;
            }
        }
    }
    let half = 1u64 << (n - 2);
    let balanced_even = ones_even == half;
    let balanced_odd = ones_odd == half;
    if balanced_even {
        summary.even_balanced_count += 1;
    }
    if balanced_odd {
        summary.odd_balanced_count += 1;
    }
    if balanced_even && balanced_odd {
        summary.both_balanced_count += 1;
    }
    if !balanced_even && !balanced_odd {
        summary.counterexamples.push(Counterexample {
            function: f,
            reason: "bent function balanced on neither parity class".into(),
        });
    }
}

/// Scans every truth table of `n` in {2, 4}, classifying bentness by
/// brute-force nonlinearity (cross-checked against the spectral path) and
/// restricted balance by direct counting.
pub fn enumerate_bent(n: usize) -> Result<EnumerationSummary> {
    check_enumeration_n(n)?;
    let tables = 1u64 << (1 << n);
    let mut summary = EnumerationSummary::empty(n);
    for t in 0..tables {
        scan_table(n, t, &mut summary);
    }
    Ok(summary)
}

/// [`enumerate_bent`] with the table space partitioned into disjoint ranges
/// scanned in parallel; per-range summaries merge associatively.
pub fn par_enumerate_bent(n: usize) -> Result<EnumerationSummary> {
    check_enumeration_n(n)?;
    let tables = 1u64 << (1 << n);
    let mut summary = (0..tables)
        .into_par_iter()
        .fold(
            || EnumerationSummary::empty(n),
            |mut acc, t| {
                scan_table(n, t, &mut acc);
                acc
            },
        )
        .reduce(|| EnumerationSummary::empty(n), EnumerationSummary::merge);
    summary
        .counterexamples
        .sort_by_key(|c| c.function.as_words().to_vec());
    Ok(summary)
}

/// All bent functions on `n` in {2, 4} variables, by spectral scan.
pub fn bent_functions(n: usize) -> Result<Vec<BooleanFunction>> {
    check_enumeration_n(n)?;
    let tables = 1u64 << (1 << n);
    Ok((0..tables)
        .filter_map(|t| {
            let f = BooleanFunction::from_u64_table(n, t).expect("n is 2 or 4");
            WalshSpectrum::compute(&f).is_bent().then_some(f)
        })
        .collect())
}

fn ensure_bent_guard(g: &BooleanFunction) -> Result<()> {
    if g.n() % 2 != 0 {
        return Err(Error::EvenDimensionRequired { n: g.n() });
    }
    if let Some((position, value)) = WalshSpectrum::compute(g).flatness_violation() {
        return Err(Error::NotBent {
            n: g.n(),
            position,
            value,
            expected: 1 << (g.n() / 2),
        });
    }
    Ok(())
}

/// Extension built by transcribing the flip conditions of the published
/// procedure verbatim: complement `g(y_bar)` exactly when
/// `y_bar even, x=1, y=1` or `y_bar odd, x=1, y=0`. Exists solely to
/// cross-validate [`construct::extend`].
pub fn literal_algorithm1(g: &BooleanFunction) -> Result<BooleanFunction> {
    ensure_bent_guard(g)?;
    let out_n = g.n() + 2;
    let mask = (1u32 << g.n()) - 1;
    BooleanFunction::from_fn(out_n, |i| {
        let x = i & 1 == 1;
        let y_bar = (i >> 1) & mask;
        let y = i >> (out_n - 1) & 1 == 1;
        let y_bar_even = y_bar.count_ones() % 2 == 0;
        let flip = (y_bar_even && x && y) || (!y_bar_even && x && !y);
        table_bit(g, y_bar) ^ flip
    })
}

/// Offset extension built by transcribing the four branch blocks keyed on
/// `(a_0, a)` verbatim, each applied to `(g ^ l_a_bar)(y_bar)`.
/// Cross-validates [`construct::extend_with_offset`].
pub fn literal_algorithm2(g: &BooleanFunction, offset: &LinearOffset) -> Result<BooleanFunction> {
    if offset.width() != g.n() + 2 {
        return Err(Error::DimensionMismatch {
            expected: g.n(),
            actual: offset.width() - 2,
        });
    }
    ensure_bent_guard(g)?;
    let out_n = g.n() + 2;
    let mask = (1u32 << g.n()) - 1;
    let a0 = offset.a0();
    let a = offset.a_s();
    let a_bar = offset.a_bar();
    BooleanFunction::from_fn(out_n, |i| {
        let x = i & 1 == 1;
        let y_bar = (i >> 1) & mask;
        let y = i >> (out_n - 1) & 1 == 1;
        let even = y_bar.count_ones() % 2 == 0;
        let base = table_bit(g, y_bar) ^ dot(a_bar, y_bar);
        let flip = match (a0, a) {
            (false, false) => (even && x && y) || (!even && x && !y),
            (false, true) => {
                (even && !x && y) || (!even && ((!x && y) || (x && !y) || (x && y)))
            }
            (true, false) => (even && x && !y) || (!even && x && y),
            (true, true) => {
                (even && ((!x && y) || (x && !y) || (x && y))) || (!even && !x && y)
            }
        };
        base ^ flip
    })
}

/// A disagreement between a literal transcription and the closed-form
/// construction, located by branch block and point index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgorithmMismatch {
    pub branch: String,
    pub point: u32,
}

fn first_difference(lhs: &BooleanFunction, rhs: &BooleanFunction) -> Option<u32> {
    debug_assert_eq!(lhs.n(), rhs.n());
    for (w, (a, b)) in lhs.as_words().iter().zip(rhs.as_words()).enumerate() {
        let diff = a ^ b;
        if diff != 0 {
            return Some((w as u32) * 64 + diff.trailing_zeros());
        }
    }
    None
}

/// Compares the literal transcription against [`construct::extend`];
/// `None` means bitwise identical tables.
pub fn check_algorithm1(g: &BooleanFunction) -> Result<Option<AlgorithmMismatch>> {
    let literal = literal_algorithm1(g)?;
    let closed_form = construct::extend(g)?;
    Ok(first_difference(&literal, &closed_form).map(|point| AlgorithmMismatch {
        branch: "r=1".into(),
        point,
    }))
}

/// Compares the literal offset transcription against
/// [`construct::extend_with_offset`].
pub fn check_algorithm2(
    g: &BooleanFunction,
    offset: &LinearOffset,
) -> Result<Option<AlgorithmMismatch>> {
    let literal = literal_algorithm2(g, offset)?;
    let closed_form = construct::extend_with_offset(g, offset)?;
    Ok(first_difference(&literal, &closed_form).map(|point| AlgorithmMismatch {
        branch: format!("a0={}, a={}", offset.a0() as u8, offset.a_s() as u8),
        point,
    }))
}
