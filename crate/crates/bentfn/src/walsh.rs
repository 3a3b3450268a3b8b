//! Walsh-Hadamard spectrum, nonlinearity, and bentness on the full domain.

use crate::function::BooleanFunction;

/// The integer vector `W_f(a) = sum over x of (-1)^(f(x) ^ a.x)` for all
/// `a` in `F_2^n`. Entries lie in `[-2^n, 2^n]` and always satisfy the
/// Parseval identity `sum of W_f(a)^2 = 2^(2n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalshSpectrum {
    n: usize,
    values: Vec<i32>,
}

impl WalshSpectrum {
    /// Fast Walsh-Hadamard transform: `n * 2^n` integer additions on the
    /// signed table `(-1)^f(x)`, materialized once to keep the butterfly
    /// branch-free.
    pub fn compute(f: &BooleanFunction) -> Self {
        let n = f.n();
        let size = 1usize << n;
        let words = f.as_words();
        let mut values = vec![0i32; size];
        for (i, v) in values.iter_mut().enumerate() {
            let bit = (words[i >> 6] >> (i & 63)) & 1;
            *v = 1 - 2 * bit as i32;
        }
        let mut half = 1usize;
        while half < size {
            let mut base = 0;
            while base < size {
                for i in base..base + half {
                    let a = values[i];
                    let b = values[i + half];
                    values[i] = a + b;
                    values[i + half] = a - b;
                }
                base += half * 2;
            }
            half *= 2;
        }
        Self { n, values }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[i32] {
        &self.values
    }

    /// Spectrum entry at position `a`.
    pub fn value(&self, a: u32) -> i32 {
        self.values[a as usize]
    }

    pub fn max_abs(&self) -> i32 {
        self.values.iter().map(|v| v.abs()).max().unwrap_or(0)
    }

    /// `sum of W_f(a)^2 == 2^(2n)`.
    pub fn parseval_holds(&self) -> bool {
        let sum: u64 = self
            .values
            .iter()
            .map(|&v| (i64::from(v) * i64::from(v)) as u64)
            .sum();
        sum == 1u64 << (2 * self.n)
    }

    /// `Nl(f) = 2^(n-1) - max |W_f(a)| / 2`, the distance to the nearest
    /// affine function.
    pub fn nonlinearity(&self) -> u64 {
        ((1u64 << self.n) - self.max_abs() as u64) / 2
    }

    /// True iff `n` is even and the spectrum is flat: `|W_f(a)| = 2^(n/2)`
    /// at every position.
    pub fn is_bent(&self) -> bool {
        self.n % 2 == 0 && self.flatness_violation().is_none()
    }

    /// First position where the spectrum deviates from `+-2^(n/2)`, with the
    /// offending value. Only meaningful for even `n`.
    pub fn flatness_violation(&self) -> Option<(u32, i32)> {
        let target = 1i32 << (self.n / 2);
        self.values
            .iter()
            .enumerate()
            .find(|(_, v)| v.abs() != target)
            .map(|(a, &v)| (a as u32, v))
    }
}

/// Walsh-Hadamard spectrum of `f`.
pub fn walsh_spectrum(f: &BooleanFunction) -> WalshSpectrum {
    WalshSpectrum::compute(f)
}

/// Nonlinearity of `f`.
pub fn nonlinearity(f: &BooleanFunction) -> u64 {
    WalshSpectrum::compute(f).nonlinearity()
}

/// Bentness of `f`. Always false for odd `n`; the notion is only defined
/// for even dimensions, and a total predicate keeps enumeration sweeps
/// simple.
pub fn is_bent(f: &BooleanFunction) -> bool {
    f.n() % 2 == 0 && WalshSpectrum::compute(f).is_bent()
}
