//! Algebraic normal form: coefficient tables, the fast Moebius transform,
//! and the ASCII polynomial format (`x1*x2 + x3 + 1`).

use crate::error::{Error, Result};
use crate::function::BooleanFunction;

/// Coefficient table of the algebraic normal form of a Boolean function.
///
/// Bit `u` of the table is the coefficient `a_u` of the monomial
/// `x^u = x_1^{u_1} ... x_n^{u_n}`, with the same index convention as
/// [`BooleanFunction`]. The truth-table/ANF conversion is a bijection; the
/// Moebius transform is an involution over F_2.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AnfPolynomial {
    n: usize,
    words: Vec<u64>,
}

/// In-place Moebius transform: `n * 2^(n-1)` XOR operations, word-parallel.
///
/// Strides below the word size are shift-and-mask passes inside each word;
/// larger strides XOR whole words. Applying it to a truth table yields the
/// ANF coefficients `a_u = XOR over x <= u of f(x)` (bitwise dominance
/// order), and applying it again restores the table.
pub(crate) fn moebius_in_place(n: usize, words: &mut [u64]) {
    const MASKS: [u64; 6] = [
        0xAAAA_AAAA_AAAA_AAAA,
        0xCCCC_CCCC_CCCC_CCCC,
        0xF0F0_F0F0_F0F0_F0F0,
        0xFF00_FF00_FF00_FF00,
        0xFFFF_0000_FFFF_0000,
        0xFFFF_FFFF_0000_0000,
    ];
    for (j, mask) in MASKS.iter().enumerate().take(n) {
        let shift = 1usize << j;
        for w in words.iter_mut() {
            *w ^= (*w << shift) & mask;
        }
    }
    for j in 6..n {
        let stride = 1usize << (j - 6);
        let mut base = 0;
        while base < words.len() {
            for i in base..base + stride {
                words[i + stride] ^= words[i];
            }
            base += stride * 2;
        }
    }
}

impl BooleanFunction {
    /// Algebraic normal form of this function.
    pub fn anf(&self) -> AnfPolynomial {
        let mut words = self.as_words().to_vec();
        moebius_in_place(self.n(), &mut words);
        AnfPolynomial {
            n: self.n(),
            words,
        }
    }
}

impl AnfPolynomial {
    /// The zero polynomial on `n` variables.
    pub fn zero(n: usize) -> Result<Self> {
        Ok(BooleanFunction::zero(n)?.anf())
    }

    /// Wraps an already-computed coefficient table.
    pub(crate) fn from_words(n: usize, words: Vec<u64>) -> Self {
        Self { n, words }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Coefficient of the monomial `x^u`. Panics if `u >= 2^n`.
    pub fn coeff(&self, u: u32) -> bool {
        assert!((u as u64) < (1u64 << self.n), "monomial {u} out of range");
        (self.words[(u >> 6) as usize] >> (u & 63)) & 1 == 1
    }

    /// Indices `u` of the monomials with coefficient 1, ascending.
    pub fn monomials(&self) -> Vec<u32> {
        (0..(1u64 << self.n) as u32).filter(|&u| self.coeff(u)).collect()
    }

    /// Algebraic degree: the largest Hamming weight among monomials with a
    /// nonzero coefficient; 0 for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.monomials()
            .iter()
            .map(|u| u.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    /// Inverse of [`BooleanFunction::anf`].
    pub fn truth_table(&self) -> BooleanFunction {
        let mut words = self.words.clone();
        moebius_in_place(self.n, &mut words);
        BooleanFunction::from_words(self.n, words)
    }

    /// Parses the ASCII polynomial format: terms joined by `+`, monomials
    /// written `x1*x2*...`, the constant term `1`, the zero polynomial `0`.
    /// Repeated terms cancel (coefficients live in F_2).
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let mut poly = Self::zero(n)?;
        if text.trim().is_empty() {
            return Err(Error::Parse {
                line: 1,
                column: 1,
                message: "empty polynomial; write 0 for the zero polynomial".into(),
            });
        }
        for (offset, term) in split_with_offsets(text, '+') {
            if let Some(u) = parse_term(term, offset, n)? {
                poly.toggle(u);
            }
        }
        Ok(poly)
    }

    fn toggle(&mut self, u: u32) {
        self.words[(u >> 6) as usize] ^= 1 << (u & 63);
    }
}

fn split_with_offsets(text: &str, sep: char) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = 0;
    for (idx, _) in text.match_indices(sep) {
        out.push((start, &text[start..idx]));
        start = idx + sep.len_utf8();
    }
    out.push((start, &text[start..]));
    out
}

/// Parses one `+`-separated term; returns the monomial index, or `None` for
/// a literal `0` term.
fn parse_term(term: &str, offset: usize, n: usize) -> Result<Option<u32>> {
    let trimmed = term.trim();
    let column = offset + (term.len() - term.trim_start().len()) + 1;
    if trimmed.is_empty() {
        return Err(Error::Parse {
            line: 1,
            column,
            message: "empty term".into(),
        });
    }
    if trimmed == "1" {
        return Ok(Some(0));
    }
    if trimmed == "0" {
        return Ok(None);
    }
    let mut u = 0u32;
    for (factor_offset, factor) in split_with_offsets(trimmed, '*') {
        let fcol = column + factor_offset + (factor.len() - factor.trim_start().len());
        let factor = factor.trim();
        let index = factor
            .strip_prefix('x')
            .and_then(|d| d.parse::<usize>().ok())
            .ok_or_else(|| Error::Parse {
                line: 1,
                column: fcol,
                message: format!("expected a variable like x1..x{n}, got {factor:?}"),
            })?;
        if index == 0 || index > n {
            return Err(Error::Parse {
                line: 1,
                column: fcol,
                message: format!("variable x{index} out of range for n={n}"),
            });
        }
        u |= 1 << (index - 1);
    }
    Ok(Some(u))
}

impl std::fmt::Display for AnfPolynomial {
    /// Monomials in descending degree, ties broken by ascending index; the
    /// constant term prints last, the zero polynomial prints as `0`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut monomials = self.monomials();
        if monomials.is_empty() {
            return write!(f, "0");
        }
        monomials.sort_by_key(|u| (std::cmp::Reverse(u.count_ones()), *u));
        let terms: Vec<String> = monomials
            .iter()
            .map(|&u| {
                if u == 0 {
                    "1".to_string()
                } else {
                    (0..32)
                        .filter(|j| u >> j & 1 == 1)
                        .map(|j| format!("x{}", j + 1))
                        .collect::<Vec<_>>()
                        .join("*")
                }
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl std::fmt::Debug for AnfPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "AnfPolynomial(n={}, {})", self.n, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Direct monomial evaluation: XOR of x^u over every monomial present.
    fn eval_monomials(monomials: &[u32], x: u32) -> bool {
        monomials.iter().filter(|&&u| x & u == u).count() % 2 == 1
    }

    /// Definitional coefficient formula a_u = XOR over x <= u of f(x).
    fn definitional_anf_coeff(f: &BooleanFunction, u: u32) -> bool {
        (0..=u).filter(|&x| x & u == x).filter(|&x| f.bit(x)).count() % 2 == 1
    }

    #[test]
    fn anf_of_textbook_function() {
        // 1 ^ x1x2 ^ x1x2x3; its truth table by direct monomial evaluation
        // is [1,1,1,0,1,1,1,1].
        let monomials = [0b000u32, 0b011, 0b111];
        let f = BooleanFunction::from_fn(3, |x| eval_monomials(&monomials, x)).unwrap();
        assert_eq!(f.as_words()[0], 0b1111_0111);
        let anf = f.anf();
        assert_eq!(anf.monomials(), vec![0b000, 0b011, 0b111]);
        assert_eq!(anf.to_string(), "x1*x2*x3 + x1*x2 + 1");
        assert_eq!(anf.degree(), 3);
    }

    #[test]
    fn anf_of_zero_function() {
        let anf = BooleanFunction::zero(4).unwrap().anf();
        assert!(anf.monomials().is_empty());
        assert_eq!(anf.to_string(), "0");
        assert_eq!(anf.degree(), 0);
        assert_eq!(anf.truth_table(), BooleanFunction::zero(4).unwrap());
    }

    #[test]
    fn product_anf_to_truth_table() {
        let anf = AnfPolynomial::parse("x1*x2", 2).unwrap();
        assert_eq!(anf.truth_table().as_words()[0], 0b1000);
    }

    #[test]
    fn fast_moebius_matches_definitional_formula_exhaustively() {
        for n in 1..=4usize {
            let tables = 1u64 << (1 << n);
            for t in 0..tables {
                let f = BooleanFunction::from_u64_table(n, t).unwrap();
                let anf = f.anf();
                for u in 0..(1u32 << n) {
                    assert_eq!(
                        anf.coeff(u),
                        definitional_anf_coeff(&f, u),
                        "n={n} table={t:#x} u={u}"
                    );
                }
            }
        }
    }

    #[test]
    fn parse_round_trips_display() {
        let anf = AnfPolynomial::parse("x1*x2 + x3 + 1", 3).unwrap();
        assert_eq!(anf.to_string(), "x1*x2 + x3 + 1");
        assert_eq!(anf.monomials(), vec![0b000, 0b011, 0b100]);
        assert_eq!(anf.degree(), 2);
    }

    #[test]
    fn parse_accepts_whitespace_and_cancellation() {
        let anf = AnfPolynomial::parse("  x2 + x1 + x2 ", 2).unwrap();
        assert_eq!(anf.to_string(), "x1");
        assert_eq!(AnfPolynomial::parse("0", 5).unwrap().to_string(), "0");
    }

    #[test]
    fn parse_errors_carry_column() {
        match AnfPolynomial::parse("x1 + y2", 2) {
            Err(Error::Parse { column: 6, .. }) => {}
            other => panic!("expected parse error at column 6, got {other:?}"),
        }
        match AnfPolynomial::parse("x3", 2) {
            Err(Error::Parse { column: 1, .. }) => {}
            other => panic!("expected out-of-range variable error, got {other:?}"),
        }
        assert!(AnfPolynomial::parse("", 2).is_err());
        assert!(AnfPolynomial::parse("x1 + + x2", 2).is_err());
    }

    proptest! {
        #[test]
        fn truth_table_anf_round_trip(words in proptest::collection::vec(any::<u64>(), 4)) {
            let f = BooleanFunction::from_words(8, words);
            prop_assert_eq!(f.anf().truth_table(), f);
        }
    }
}
