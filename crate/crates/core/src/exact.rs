//! Exact arithmetic helpers: reduced big rationals, binomials and multinomials,
//! and a denominator-bucketed accumulator for sums of pair dependencies.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision fraction, always kept in lowest terms with a positive
/// denominator (zero is `0/1`).
pub type ExactRational = BigRational;

pub fn rational(num: impl Into<BigInt>, den: impl Into<BigInt>) -> ExactRational {
    BigRational::new(num.into(), den.into())
}

pub fn integer(value: impl Into<BigInt>) -> ExactRational {
    BigRational::from_integer(value.into())
}

pub(crate) fn ratio_of(num: BigUint, den: BigUint) -> ExactRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    // each partial product is itself a binomial coefficient, so the division is exact
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `(Σ parts)! / Π parts_i!`, evaluated as a chain of binomials.
pub fn multinomial(parts: &[u64]) -> BigUint {
    let mut total = 0u64;
    let mut acc = BigUint::one();
    for &p in parts {
        total += p;
        acc *= binomial(total, p);
    }
    acc
}

/// Pascal triangle up to a fixed row, for hot loops that need many small binomials.
#[derive(Debug, Clone)]
pub struct BinomialTable {
    rows: Vec<Vec<BigUint>>,
}

impl BinomialTable {
    pub fn new(max_n: usize) -> Self {
        let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(max_n + 1);
        for n in 0..=max_n {
            let mut row = Vec::with_capacity(n + 1);
            for k in 0..=n {
                if k == 0 || k == n {
                    row.push(BigUint::one());
                } else {
                    let prev = &rows[n - 1];
                    row.push(&prev[k - 1] + &prev[k]);
                }
            }
            rows.push(row);
        }
        BinomialTable { rows }
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    /// `C(n, k)`; panics if `n` exceeds the table.
    pub fn get(&self, n: usize, k: usize) -> &BigUint {
        &self.rows[n][k]
    }
}

/// Exact sum of non-negative fractions `num / den`.
///
/// Numerators sharing a denominator are added as integers; the rational sum
/// over distinct denominators is formed once at the end. Geodesic counts take
/// few distinct values, so this avoids a gcd per term.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DependencySum {
    buckets: BTreeMap<BigUint, BigUint>,
}

impl DependencySum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, num: BigUint, den: BigUint) {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return;
        }
        *self.buckets.entry(den).or_default() += num;
    }

    pub fn add_ref(&mut self, num: BigUint, den: &BigUint) {
        if num.is_zero() {
            return;
        }
        match self.buckets.get_mut(den) {
            Some(acc) => *acc += num,
            None => {
                self.buckets.insert(den.clone(), num);
            }
        }
    }

    pub fn merge(mut self, other: DependencySum) -> DependencySum {
        if self.buckets.len() < other.buckets.len() {
            return other.merge(self);
        }
        for (den, num) in other.buckets {
            self.add(num, den);
        }
        self
    }

    pub fn to_rational(&self) -> ExactRational {
        // combine over the lcm of all denominators to keep a single final reduction
        let lcm = self.buckets.keys().fold(BigUint::one(), |acc, den| acc.lcm(den));
        let num = self
            .buckets
            .iter()
            .fold(BigUint::zero(), |acc, (den, num)| acc + num * (&lcm / den));
        ratio_of(num, lcm)
    }
}

/// Render `value` with `digits` significant digits, rounding half away from zero.
///
/// Display only; never parse this back.
pub fn to_decimal_string(value: &ExactRational, digits: usize) -> String {
    assert!(digits >= 1);
    if value.is_zero() {
        return "0".to_string();
    }
    let sign = if value.is_negative() { "-" } else { "" };
    let p = value.numer().abs().to_biguint().expect("non-negative");
    let q = value.denom().to_biguint().expect("positive");
    let ten = BigUint::from(10u32);
    let digits_i = digits as i64;

    // estimate of floor(log10(p/q)); off by at most one, corrected below
    let mut exp10 = p.to_string().len() as i64 - q.to_string().len() as i64;
    let lower = ten.pow(digits as u32 - 1);
    let upper = ten.pow(digits as u32);
    let (mut mantissa, mut shift) = loop {
        let shift = digits_i - 1 - exp10;
        let (scaled_num, scaled_den) = if shift >= 0 {
            (&p * ten.pow(shift as u32), q.clone())
        } else {
            (p.clone(), &q * ten.pow((-shift) as u32))
        };
        let (quot, rem) = scaled_num.div_rem(&scaled_den);
        if quot < lower {
            exp10 -= 1;
        } else if quot >= upper {
            exp10 += 1;
        } else {
            let round_up = rem * 2u32 >= scaled_den;
            break (if round_up { quot + 1u32 } else { quot }, shift);
        }
    };
    if mantissa == upper {
        // rounding carried into a new digit
        mantissa = lower.clone();
        shift -= 1;
    }
    let body = mantissa.to_string();
    if shift <= 0 {
        format!("{sign}{body}{}", "0".repeat((-shift) as usize))
    } else {
        let shift = shift as usize;
        if shift >= body.len() {
            format!("{sign}0.{}{body}", "0".repeat(shift - body.len()))
        } else {
            let (int_part, frac_part) = body.split_at(body.len() - shift);
            format!("{sign}{int_part}.{frac_part}")
        }
    }
}
