//! Packed truth-table representation of Boolean functions on `F_2^n` and
//! affine functions `l(x) = a.x ^ a_0`.
//!
//! A point `x = (x_1, ..., x_n)` maps to the table index `sum x_j * 2^(j-1)`,
//! i.e. `x_1` is the least significant bit of the index. This makes the
//! transform butterflies and the coordinate-append operations used by the
//! extension construction contiguous-stride bit operations.

use crate::error::{Error, Result};

/// Smallest supported variable count.
pub const MIN_VARS: usize = 1;
/// Largest supported variable count; a 2^30-bit table is 128 MiB.
pub const MAX_VARS: usize = 30;

pub(crate) fn check_var_count(n: usize) -> Result<()> {
    if !(MIN_VARS..=MAX_VARS).contains(&n) {
        return Err(Error::VariableCount {
            n,
            min: MIN_VARS,
            max: MAX_VARS,
        });
    }
    Ok(())
}

/// Parity of a 32-bit vector, i.e. the dot product `v . v` over F_2 folded
/// down to one bit.
#[inline]
pub(crate) fn parity(v: u32) -> bool {
    v.count_ones() & 1 == 1
}

fn word_count(n: usize) -> usize {
    if n >= 6 {
        1 << (n - 6)
    } else {
        1
    }
}

/// Mask selecting the table bits of the (single) word when `2^n < 64`.
fn tail_mask(n: usize) -> u64 {
    if n >= 6 {
        !0
    } else {
        (1u64 << (1usize << n)) - 1
    }
}

/// A Boolean function `f: F_2^n -> F_2` stored as a packed truth table.
///
/// Bit `i` of the table is `f(x)` for the point with index `i`. Values are
/// immutable after construction; every operation is a pure function.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BooleanFunction {
    n: usize,
    words: Vec<u64>,
}

impl BooleanFunction {
    /// The constant-0 function on `n` variables.
    pub fn zero(n: usize) -> Result<Self> {
        check_var_count(n)?;
        Ok(Self {
            n,
            words: vec![0; word_count(n)],
        })
    }

    /// Builds a function by evaluating `f` at every point index.
    pub fn from_fn<F: FnMut(u32) -> bool>(n: usize, mut f: F) -> Result<Self> {
        check_var_count(n)?;
        let mut words = vec![0u64; word_count(n)];
        for x in 0..(1u32 << n) {
            if f(x) {
                words[(x >> 6) as usize] |= 1 << (x & 63);
            }
        }
        Ok(Self { n, words })
    }

    /// Builds a function with `n <= 6` from the low `2^n` bits of `table`.
    pub fn from_u64_table(n: usize, table: u64) -> Result<Self> {
        check_var_count(n)?;
        if n > 6 {
            return Err(Error::VariableCount { n, min: 1, max: 6 });
        }
        Ok(Self {
            n,
            words: vec![table & tail_mask(n)],
        })
    }

    pub(crate) fn from_words(n: usize, words: Vec<u64>) -> Self {
        debug_assert_eq!(words.len(), word_count(n));
        debug_assert!(n >= 6 || words[0] & !tail_mask(n) == 0);
        Self { n, words }
    }

    /// Number of variables.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Domain size `2^n`.
    pub fn domain_size(&self) -> u64 {
        1u64 << self.n
    }

    /// Raw table words, least significant bit first. Bits at positions
    /// `>= 2^n` are zero.
    pub fn as_words(&self) -> &[u64] {
        &self.words
    }

    /// Table lookup. Panics if `x >= 2^n`; use [`evaluate`](Self::evaluate)
    /// for a checked variant.
    #[inline]
    pub fn bit(&self, x: u32) -> bool {
        assert!((x as u64) < self.domain_size(), "point {x} out of range");
        (self.words[(x >> 6) as usize] >> (x & 63)) & 1 == 1
    }

    /// Checked table lookup.
    pub fn evaluate(&self, x: u32) -> Result<bool> {
        if (x as u64) >= self.domain_size() {
            return Err(Error::PointOutOfRange { index: x, n: self.n });
        }
        Ok((self.words[(x >> 6) as usize] >> (x & 63)) & 1 == 1)
    }

    /// Hamming weight of the truth table.
    pub fn weight(&self) -> u64 {
        self.words.iter().map(|w| u64::from(w.count_ones())).sum()
    }

    /// Pointwise XOR with the affine function described by `spec`.
    pub fn add_affine(&self, spec: &AffineFunctionSpec) -> Result<Self> {
        if spec.n() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                actual: spec.n(),
            });
        }
        let affine = spec.truth_table();
        let words = self
            .words
            .iter()
            .zip(affine.words.iter())
            .map(|(a, b)| a ^ b)
            .collect();
        Ok(Self { n: self.n, words })
    }

    /// Truth table as hex digits, most significant digit first. Bit index 0
    /// is the least significant bit of the last digit; `ceil(2^n / 4)`
    /// digits total.
    pub fn to_hex(&self) -> String {
        let digits = hex_digits(self.n);
        let mut out = String::with_capacity(digits);
        for k in (0..digits).rev() {
            let nibble = (self.words[k / 16] >> ((k % 16) * 4)) & 0xF;
            out.push(char::from_digit(nibble as u32, 16).unwrap());
        }
        out
    }

    /// Parses the hex digit encoding produced by [`to_hex`](Self::to_hex).
    pub fn from_hex(n: usize, hex: &str) -> Result<Self> {
        check_var_count(n)?;
        parse_hex_digits(n, hex, 1)
    }

    /// Serializes to the truth-table text format: a `n=<int>` header line
    /// followed by the hex digit line.
    pub fn to_text(&self) -> String {
        format!("n={}\n{}\n", self.n, self.to_hex())
    }

    /// Parses the truth-table text format.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let header = lines.next().unwrap_or("").trim();
        let n = parse_header(header)?;
        check_var_count(n)?;
        let hex = lines.next().unwrap_or("").trim();
        let f = parse_hex_digits(n, hex, 2)?;
        for (extra, line_no) in lines.zip(3usize..) {
            if !extra.trim().is_empty() {
                return Err(Error::Parse {
                    line: line_no,
                    column: 1,
                    message: "unexpected trailing content".into(),
                });
            }
        }
        Ok(f)
    }
}

impl std::fmt::Debug for BooleanFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "BooleanFunction(n={}, hex={})", self.n, self.to_hex())
    }
}

/// Number of hex digits in the table encoding for `n` variables.
pub fn hex_digits(n: usize) -> usize {
    ((1usize << n) + 3) / 4
}

fn parse_header(header: &str) -> Result<usize> {
    let rest = header.strip_prefix("n=").ok_or_else(|| Error::Parse {
        line: 1,
        column: 1,
        message: "expected header of the form n=<int>".into(),
    })?;
    rest.parse::<usize>().map_err(|_| Error::Parse {
        line: 1,
        column: 3,
        message: format!("invalid variable count {rest:?}"),
    })
}

fn parse_hex_digits(n: usize, hex: &str, line: usize) -> Result<BooleanFunction> {
    let expected = hex_digits(n);
    if hex.len() != expected {
        return Err(Error::HexLength {
            n,
            expected,
            actual: hex.len(),
        });
    }
    let mut words = vec![0u64; word_count(n)];
    for (pos, c) in hex.chars().enumerate() {
        let nibble = c.to_digit(16).ok_or_else(|| Error::Parse {
            line,
            column: pos + 1,
            message: format!("invalid hex digit {c:?}"),
        })? as u64;
        let k = expected - 1 - pos;
        words[k / 16] |= nibble << ((k % 16) * 4);
    }
    if n < 6 && words[0] & !tail_mask(n) != 0 {
        return Err(Error::Parse {
            line,
            column: 1,
            message: format!("table bits beyond 2^{n} must be zero"),
        });
    }
    Ok(BooleanFunction::from_words(n, words))
}

/// An affine function `l(x) = a.x ^ a_0` on `F_2^n`.
///
/// There are exactly `2^(n+1)` distinct specs for fixed `n`; the `2^n` with
/// `a_0 = 0` are the linear functions.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct AffineFunctionSpec {
    n: usize,
    a: u32,
    a0: bool,
}

impl AffineFunctionSpec {
    pub fn new(n: usize, a: u32, a0: bool) -> Result<Self> {
        check_var_count(n)?;
        if (a as u64) >= (1u64 << n) {
            return Err(Error::PointOutOfRange { index: a, n });
        }
        Ok(Self { n, a, a0 })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coefficients(&self) -> u32 {
        self.a
    }

    pub fn constant(&self) -> bool {
        self.a0
    }

    /// Evaluates `l(x)`: the parity of `a AND x`, XOR `a_0`.
    #[inline]
    pub fn eval(&self, x: u32) -> bool {
        parity(self.a & x) ^ self.a0
    }

    /// Materializes the truth table by doubling: appending variable `j`
    /// copies the table built so far and XORs the copy with `a_j`.
    pub fn truth_table(&self) -> BooleanFunction {
        let mut words = vec![0u64; word_count(self.n)];
        words[0] = self.a0 as u64;
        let mut size = 1usize; // table bits built so far
        for j in 0..self.n {
            let coeff = (self.a >> j) & 1 == 1;
            if size < 64 {
                let half = words[0] & ((1u64 << size) - 1);
                let copy = if coeff { !half & ((1u64 << size) - 1) } else { half };
                words[0] = half | (copy << size);
            } else {
                let half_words = size / 64;
                let flip = if coeff { !0u64 } else { 0 };
                for i in 0..half_words {
                    words[half_words + i] = words[i] ^ flip;
                }
            }
            size *= 2;
        }
        BooleanFunction::from_words(self.n, words)
    }
}

impl std::fmt::Debug for AffineFunctionSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "AffineFunctionSpec(n={}, a={:#b}, a0={})", self.n, self.a, self.a0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    pub(crate) fn x1x2() -> BooleanFunction {
        BooleanFunction::from_u64_table(2, 0b1000).unwrap()
    }

    #[test]
    fn evaluate_product_function() {
        let f = x1x2();
        assert!(f.bit(3));
        assert!(!f.bit(0));
        assert!(!f.bit(1));
        assert!(!f.bit(2));
    }

    #[test]
    fn evaluate_zero_function() {
        let f = BooleanFunction::zero(3).unwrap();
        for x in 0..8 {
            assert!(!f.evaluate(x).unwrap());
        }
    }

    #[test]
    fn evaluate_out_of_range() {
        let f = x1x2();
        assert_eq!(
            f.evaluate(4),
            Err(Error::PointOutOfRange { index: 4, n: 2 })
        );
    }

    #[test]
    fn weight_examples() {
        assert_eq!(x1x2().weight(), 1);
        let ones = BooleanFunction::from_fn(4, |_| true).unwrap();
        assert_eq!(ones.weight(), 16);
        // x1x2 ^ x3x4 evaluated at all 16 points
        let f = BooleanFunction::from_fn(4, |x| {
            (x & 1 == 1 && x & 2 == 2) ^ (x & 4 == 4 && x & 8 == 8)
        })
        .unwrap();
        assert_eq!(f.weight(), 6);
    }

    #[test]
    fn affine_eval_examples() {
        let all_ones = AffineFunctionSpec::new(4, 0b1111, false).unwrap();
        assert!(all_ones.eval(0b0111));
        let constant = AffineFunctionSpec::new(4, 0, true).unwrap();
        for x in 0..16 {
            assert!(constant.eval(x));
        }
        // a = (1,0,1,0), a_0 = 1, x = 0b0101: 1 ^ (1^1) = 1
        let spec = AffineFunctionSpec::new(4, 0b0101, true).unwrap();
        assert!(spec.eval(0b0101));
    }

    #[test]
    fn affine_truth_table_matches_pointwise_eval() {
        for n in 1..=7 {
            for a in 0..(1u32 << n) {
                for a0 in [false, true] {
                    let spec = AffineFunctionSpec::new(n, a, a0).unwrap();
                    let table = spec.truth_table();
                    for x in 0..(1u32 << n) {
                        assert_eq!(table.bit(x), spec.eval(x), "n={n} a={a:#b} a0={a0} x={x}");
                    }
                }
            }
        }
    }

    #[test]
    fn affine_family_size() {
        // 2^(n+1) distinct affine functions, 2^n of them linear.
        let n = 3;
        let mut tables = HashSet::new();
        let mut linear = HashSet::new();
        for a in 0..(1u32 << n) {
            for a0 in [false, true] {
                let t = AffineFunctionSpec::new(n, a, a0).unwrap().truth_table();
                if !a0 {
                    linear.insert(t.clone());
                }
                tables.insert(t);
            }
        }
        assert_eq!(tables.len(), 1 << (n + 1));
        assert_eq!(linear.len(), 1 << n);
    }

    #[test]
    fn add_affine_zero_offset_is_identity() {
        let f = x1x2();
        let zero = AffineFunctionSpec::new(2, 0, false).unwrap();
        assert_eq!(f.add_affine(&zero).unwrap(), f);
    }

    #[test]
    fn add_affine_is_an_involution() {
        let f = x1x2();
        let spec = AffineFunctionSpec::new(2, 0b11, true).unwrap();
        let g = f.add_affine(&spec).unwrap();
        assert_ne!(g, f);
        assert_eq!(g.add_affine(&spec).unwrap(), f);
        assert_eq!(g.n(), f.n());
    }

    #[test]
    fn add_affine_pointwise() {
        // x1x2 ^ x1 ^ x2 at the 4 points: [0, 1, 1, 1]
        let f = x1x2();
        let spec = AffineFunctionSpec::new(2, 0b11, false).unwrap();
        let g = f.add_affine(&spec).unwrap();
        assert_eq!(g.as_words()[0], 0b1110);
    }

    #[test]
    fn add_affine_dimension_mismatch() {
        let f = x1x2();
        let spec = AffineFunctionSpec::new(3, 0, false).unwrap();
        assert_eq!(
            f.add_affine(&spec),
            Err(Error::DimensionMismatch {
                expected: 2,
                actual: 3
            })
        );
    }

    #[test]
    fn hex_format_examples() {
        assert_eq!(x1x2().to_hex(), "8");
        assert_eq!(x1x2().to_text(), "n=2\n8\n");
        let f = BooleanFunction::from_text("n=2\n8\n").unwrap();
        assert_eq!(f, x1x2());
    }

    #[test]
    fn hex_round_trip_larger_n() {
        let f = BooleanFunction::from_fn(8, |x| x.wrapping_mul(0x9E37_79B9) & 0x8000_0000 != 0)
            .unwrap();
        assert_eq!(f.to_hex().len(), 64);
        assert_eq!(BooleanFunction::from_hex(8, &f.to_hex()).unwrap(), f);
    }

    #[test]
    fn hex_length_error_names_expected_digits() {
        let err = BooleanFunction::from_hex(4, "ab").unwrap_err();
        assert_eq!(
            err,
            Error::HexLength {
                n: 4,
                expected: 4,
                actual: 2
            }
        );
    }

    #[test]
    fn text_parse_errors_carry_position() {
        match BooleanFunction::from_text("m=2\n8\n") {
            Err(Error::Parse { line: 1, .. }) => {}
            other => panic!("expected header parse error, got {other:?}"),
        }
        match BooleanFunction::from_text("n=2\nz\n") {
            Err(Error::Parse {
                line: 2, column: 1, ..
            }) => {}
            other => panic!("expected hex parse error, got {other:?}"),
        }
        match BooleanFunction::from_text("n=2\n8\nextra\n") {
            Err(Error::Parse { line: 3, .. }) => {}
            other => panic!("expected trailing content error, got {other:?}"),
        }
    }

    #[test]
    fn small_n_rejects_stray_high_bits() {
        // n=1 uses only bits 0..1 of the single digit.
        assert!(BooleanFunction::from_hex(1, "3").is_ok());
        assert!(matches!(
            BooleanFunction::from_hex(1, "4"),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn var_count_limits() {
        assert!(BooleanFunction::zero(0).is_err());
        assert!(BooleanFunction::zero(31).is_err());
    }
}
