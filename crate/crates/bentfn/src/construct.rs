//! The parity-based r=1 extended Maiorana-McFarland machinery: lifting a
//! bent function onto the parity classes one dimension up, the two-variable
//! bent extension, its linear-offset variant, extension chains, and bent
//! seed generation.

use crate::error::{Error, Result};
use crate::function::{check_var_count, parity, AffineFunctionSpec, BooleanFunction};
use crate::restricted::{restricted_balance, AffineSubspace, ParityClass};
use crate::walsh::WalshSpectrum;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// The vector `b = (a_0, a_bar, a_s)` defining the linear function
/// `l_b(x, y_1..y_{s-1}, y_s) = a_0 x ^ a_bar . y_bar ^ a_s y_s` added to an
/// extension. `a_0` rides on the new first variable, `a_s` on the new last
/// one; the packed form places `a_0` at bit 0 and `a_s` at the top bit.
#[derive(Clone, Copy, PartialEq, Eq)]
pub struct LinearOffset {
    a0: bool,
    a_bar: u32,
    a_bar_len: usize,
    a_s: bool,
}

impl LinearOffset {
    pub fn new(a0: bool, a_bar: u32, a_bar_len: usize, a_s: bool) -> Result<Self> {
        check_var_count(a_bar_len + 2)?;
        if a_bar_len < 32 && a_bar >= 1u32 << a_bar_len {
            return Err(Error::PointOutOfRange {
                index: a_bar,
                n: a_bar_len,
            });
        }
        Ok(Self {
            a0,
            a_bar,
            a_bar_len,
            a_s,
        })
    }

    pub fn zero(a_bar_len: usize) -> Result<Self> {
        Self::new(false, 0, a_bar_len, false)
    }

    /// Unpacks `b` from its `width = s + 1` bit form.
    pub fn from_packed(bits: u32, width: usize) -> Result<Self> {
        check_var_count(width)?;
        if width < 2 {
            return Err(Error::VariableCount {
                n: width,
                min: 2,
                max: crate::function::MAX_VARS,
            });
        }
        if (bits as u64) >= 1u64 << width {
            return Err(Error::PointOutOfRange {
                index: bits,
                n: width,
            });
        }
        let len = width - 2;
        Self::new(
            bits & 1 == 1,
            (bits >> 1) & ((1u32 << len) - 1),
            len,
            bits >> (width - 1) & 1 == 1,
        )
    }

    /// Packs back to `b` in `(a_0, a_bar, a_s)` variable order.
    pub fn packed(&self) -> u32 {
        (self.a0 as u32) | (self.a_bar << 1) | ((self.a_s as u32) << (self.a_bar_len + 1))
    }

    pub fn a0(&self) -> bool {
        self.a0
    }

    pub fn a_bar(&self) -> u32 {
        self.a_bar
    }

    pub fn a_s(&self) -> bool {
        self.a_s
    }

    /// Width of the packed vector, `s + 1 = a_bar_len + 2`.
    pub fn width(&self) -> usize {
        self.a_bar_len + 2
    }

    /// The offset as an affine function on `s + 1` variables (constant 0).
    pub fn to_affine_spec(&self) -> AffineFunctionSpec {
        AffineFunctionSpec::new(self.width(), self.packed(), false)
            .expect("packed offset is within range by construction")
    }
}

impl std::fmt::Debug for LinearOffset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "LinearOffset(a0={}, a_bar={:0width$b}, a_s={})",
            self.a0 as u8,
            self.a_bar,
            self.a_s as u8,
            width = self.a_bar_len
        )
    }
}

/// A function defined on an affine subspace: a full truth table paired with
/// the domain on which its values are meaningful.
#[derive(Clone, Debug)]
pub struct SubspaceFunction {
    values: BooleanFunction,
    domain: AffineSubspace,
}

impl SubspaceFunction {
    pub fn values(&self) -> &BooleanFunction {
        &self.values
    }

    pub fn domain(&self) -> &AffineSubspace {
        &self.domain
    }

    pub fn restricted_walsh(&self, a: u32) -> Result<i32> {
        crate::restricted::restricted_walsh(&self.values, &self.domain, a)
    }

    pub fn nonlinearity(&self) -> Result<u64> {
        crate::restricted::restricted_nonlinearity(&self.values, &self.domain)
    }

    pub fn is_bent(&self) -> Result<bool> {
        crate::restricted::is_restricted_bent(&self.values, &self.domain)
    }
}

fn lift(g: &BooleanFunction, class: ParityClass) -> Result<SubspaceFunction> {
    let s = g.n() + 1;
    check_var_count(s)?;
    let mask = (1u32 << g.n()) - 1;
    // The lifted value depends only on the first s-1 coordinates; on the
    // parity class the appended coordinate is forced to the matching
    // completion, so restricting this table to the class is exactly g_e.
    let values = BooleanFunction::from_fn(s, |x| g.bit(x & mask))?;
    Ok(SubspaceFunction {
        values,
        domain: AffineSubspace::parity_class(s, class)?,
    })
}

/// Lifts `g` on `F_2^(s-1)` to `g_e0` on the even-weight class of `F_2^s`:
/// `g_e0(x | x_s) = g(x)`, with `x_s` the parity completion of `x`.
pub fn lift_even(g: &BooleanFunction) -> Result<SubspaceFunction> {
    lift(g, ParityClass::Even)
}

/// Lifts `g` to `g_e1` on the odd-weight coset, `x_s` being the
/// complementary parity bit.
pub fn lift_odd(g: &BooleanFunction) -> Result<SubspaceFunction> {
    lift(g, ParityClass::Odd)
}

fn ensure_bent(g: &BooleanFunction) -> Result<()> {
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

/// Extends a bent `g` on `s - 1` variables to the bent function
///
/// `f(x, y_1, ..., y_{s-1}, y_s) = x (y_1 ^ ... ^ y_{s-1} ^ y_s) ^ g(y_1, ..., y_{s-1})`
///
/// on `s + 1` variables. The new variable `x` takes index position 0 and
/// `y_s` the new top position; old variables shift up by one. The output is
/// balanced on the even-weight class. Bentness of `g` is validated here
/// rather than trusted, at the cost of one transform.
pub fn extend(g: &BooleanFunction) -> Result<BooleanFunction> {
    ensure_bent(g)?;
    let out_n = g.n() + 2;
    check_var_count(out_n)?;
    let mask = (1u32 << g.n()) - 1;
    let top = out_n - 1;
    BooleanFunction::from_fn(out_n, |i| {
        let x = i & 1 == 1;
        let y_bar = (i >> 1) & mask;
        let y_s = i >> top & 1 == 1;
        (x & (parity(y_bar) ^ y_s)) ^ g.bit(y_bar)
    })
}

/// Extension followed by the linear offset: `extend(g) ^ l_b`. The result is
/// always bent, and its balanced parity class is selected by the two
/// coefficients on the fresh variables: even-weight when `a_0 = a_s`,
/// odd-weight when `a_0 != a_s`.
///
/// On the even-weight class the top coordinate is forced to
/// `y_s = x ^ parity(y_bar)`, so the restriction collapses to
/// `(1 ^ a_0 ^ a_s) x ^ (g ^ affine)(y_bar)`: a free `x` makes it balanced,
/// and with the `x` term cancelled it is a bent function of `y_bar`, which is
/// never balanced.
pub fn extend_with_offset(g: &BooleanFunction, offset: &LinearOffset) -> Result<BooleanFunction> {
    if offset.a_bar_len != g.n() {
        return Err(Error::DimensionMismatch {
            expected: g.n(),
            actual: offset.a_bar_len,
        });
    }
    extend(g)?.add_affine(&offset.to_affine_spec())
}

/// One extension step in a chain.
#[derive(Clone, Debug)]
pub struct ChainStep {
    pub offset: Option<LinearOffset>,
    pub n: usize,
    pub bent: bool,
    pub balanced: ParityClass,
}

/// Record of a chain of extensions from a seed up to a target dimension.
#[derive(Clone, Debug)]
pub struct ConstructionTrace {
    pub seed: BooleanFunction,
    pub steps: Vec<ChainStep>,
    pub final_function: BooleanFunction,
}

/// Repeatedly extends `seed` until `target_n` variables, applying one
/// offset per step when `offsets` is given. Every intermediate is verified
/// bent; a failure there signals an implementation bug, not a user error.
pub fn build_chain(
    seed: &BooleanFunction,
    target_n: usize,
    offsets: Option<&[LinearOffset]>,
) -> Result<ConstructionTrace> {
    ensure_bent(seed)?;
    if target_n % 2 != 0 || target_n <= seed.n() || target_n > crate::function::MAX_VARS {
        return Err(Error::ChainTarget {
            target: target_n,
            seed: seed.n(),
            max: crate::function::MAX_VARS,
        });
    }
    let step_count = (target_n - seed.n()) / 2;
    if let Some(list) = offsets {
        if list.len() != step_count {
            return Err(Error::OffsetCount {
                expected: step_count,
                actual: list.len(),
            });
        }
    }
    let mut current = seed.clone();
    let mut steps = Vec::with_capacity(step_count);
    for k in 0..step_count {
        let offset = offsets.map(|list| list[k]);
        let next = match &offset {
            Some(o) => extend_with_offset(&current, o)?,
            None => extend(&current)?,
        };
        let bent = WalshSpectrum::compute(&next).is_bent();
        if !bent {
            return Err(Error::Internal(format!(
                "extension step {k} produced a non-bent intermediate on {} variables",
                next.n()
            )));
        }
        let balanced = restricted_balance(&next).balanced_class().ok_or_else(|| {
            Error::Internal(format!(
                "extension step {k} has no unique balanced parity class"
            ))
        })?;
        steps.push(ChainStep {
            offset,
            n: next.n(),
            bent,
            balanced,
        });
        current = next;
    }
    Ok(ConstructionTrace {
        seed: seed.clone(),
        steps,
        final_function: current,
    })
}

/// The product-form Maiorana-McFarland function `f(x, y) = x . pi(y) ^ h(y)`
/// over the split `x, y in F_2^(n/2)`, always bent. `pi` must be a
/// permutation of `0..2^(n/2)` and `h` a function on `n/2` variables.
pub fn maiorana_mcfarland(pi: &[u32], h: &BooleanFunction) -> Result<BooleanFunction> {
    let half = h.n();
    check_var_count(2 * half)?;
    let m = 1usize << half;
    let mut seen = vec![false; m];
    if pi.len() != m {
        return Err(Error::InvalidPermutation { half });
    }
    for &v in pi {
        if v as usize >= m || seen[v as usize] {
            return Err(Error::InvalidPermutation { half });
        }
        seen[v as usize] = true;
    }
    let mask = (1u32 << half) - 1;
    BooleanFunction::from_fn(2 * half, |i| {
        let x = i & mask;
        let y = (i >> half) as usize;
        parity(x & pi[y]) ^ h.bit(y as u32)
    })
}

/// A random bent function on `n` variables (even, at most 16): a
/// Maiorana-McFarland instance with a random permutation and random `h`.
/// The output is verified bent before returning.
pub fn seed_bent(n: usize, rng_seed: u64) -> Result<BooleanFunction> {
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let f = random_maiorana_mcfarland(n, &mut rng)?;
    assert!(
        WalshSpectrum::compute(&f).is_bent(),
        "Maiorana-McFarland construction must be bent"
    );
    Ok(f)
}

fn random_maiorana_mcfarland<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<BooleanFunction> {
    if n % 2 != 0 {
        return Err(Error::EvenDimensionRequired { n });
    }
    if !(2..=16).contains(&n) {
        return Err(Error::VariableCount { n, min: 2, max: 16 });
    }
    let half = n / 2;
    let mut pi: Vec<u32> = (0..1u32 << half).collect();
    pi.shuffle(rng);
    let h = BooleanFunction::from_fn(half, |_| rng.random())?;
    maiorana_mcfarland(&pi, &h)
}

/// A random bent function diversified by a random affine offset, which
/// preserves bentness. Used by the sampled verification sweeps.
pub fn random_bent<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<BooleanFunction> {
    let f = random_maiorana_mcfarland(n, rng)?;
    let spec = AffineFunctionSpec::new(n, rng.random_range(0..1u32 << n), rng.random())?;
    f.add_affine(&spec)
}
